"""Critical points of the degree-2n L-function of GL_1 x SO(n,n), the
Rankin-Selberg range for a pair of modular forms, and related bookkeeping.

A twist ``chi = |.|^{-d} (x) chi0`` is handled as the argument shift
``L(s, chi x sigma) = L(s - d, chi0 x sigma)``.  The finite-order character
``chi0`` never enters the arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .rootdata import Weight, build_root_system, is_dominant_by_chain
from .parabolic import build_parabolic

__all__ = [
    "SOWeightData", "TwistData", "WeightsOutOfOrder",
    "critical_set_so", "critical_set_rankin_selberg", "is_critical_twisted",
    "ratio_argument_map", "successive_pairs", "cohomological_degree",
    "symmetric_space_dimension",
]

DOMINANCE_CHAIN = "mu_1 >= mu_2 >= ... >= mu_{n-1} >= |mu_n|"


class WeightsOutOfOrder(ValueError):
    code = "weights-out-of-order"


@dataclass(frozen=True)
class SOWeightData:
    """A dominant integral weight for SO(n,n) with n even.

    ``allow_odd`` admits odd n for exploratory runs only.
    """

    n: int
    mu: Weight
    allow_odd: bool = field(default=False, compare=False)

    def __post_init__(self):
        mu = Weight.of(self.mu)
        object.__setattr__(self, "mu", mu)
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.n % 2 and not self.allow_odd:
            raise ValueError(f"n must be even, got {self.n}")
        if len(mu) != self.n:
            raise ValueError(f"mu has {len(mu)} entries, expected n = {self.n}")
        if not is_dominant_by_chain(mu):
            raise ValueError(f"mu = {list(mu)} is not dominant: need {DOMINANCE_CHAIN}")

    @property
    def abs_last(self) -> int:
        return abs(self.mu[-1])


@dataclass(frozen=True)
class TwistData:
    d: int
    label: str = "chi0"


def _as_twist(t: TwistData | int) -> TwistData:
    return t if isinstance(t, TwistData) else TwistData(int(t))


def critical_set_so(w: SOWeightData) -> tuple[int, ...]:
    """``{1 - |mu_n|, ..., |mu_n|}``; empty when ``mu_n = 0``."""
    m = w.abs_last
    return tuple(range(1 - m, m + 1))


def critical_set_rankin_selberg(k: int, l: int) -> tuple[int, ...]:
    """Critical integers ``l <= m < k`` for weights ``k >= l``."""
    if k < l:
        raise WeightsOutOfOrder(f"weights-out-of-order: need k >= l, got k={k}, l={l}")
    return tuple(range(l, k))


def is_critical_twisted(s: int, t: TwistData | int, w: SOWeightData) -> bool:
    m = w.abs_last
    return 1 - m <= s - _as_twist(t).d <= m


def ratio_argument_map(t: TwistData | int, w: SOWeightData) -> Optional[tuple[int, int]]:
    """Untwisted arguments ``(-n-d, 1-n-d)`` of the ratio L(-n)/L(1-n), or
    None outside the window ``1 - |mu_n| <= n + d <= |mu_n| - 1``."""
    d, n, m = _as_twist(t).d, w.n, w.abs_last
    if not (1 - m <= n + d <= m - 1):
        return None
    return (-n - d, 1 - n - d)


def successive_pairs(w: SOWeightData) -> tuple[tuple[int, int], ...]:
    s = critical_set_so(w)
    return tuple(zip(s, s[1:]))


def symmetric_space_dimension(n: int) -> int:
    """dim SO(n,n)(R) - dim S(O(n) x O(n)), from the D_n root count."""
    rs = build_root_system(n)
    dim_group = len(rs.roots) + rs.rank
    dim_compact = n * (n - 1)
    return dim_group - dim_compact


def cohomological_degree(n: int) -> int:
    """Half the symmetric-space dimension of SO(n,n) plus dim(N_P)/2.

    The GL_1 split direction is left out of the symmetric space, so the
    result is n^2/2 + n.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    dim_nil = len(build_parabolic(n + 1, {1}).nilradical_roots)
    return symmetric_space_dimension(n) // 2 + dim_nil // 2
