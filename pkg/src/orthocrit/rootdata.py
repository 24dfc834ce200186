"""Type-D root data in the standard coordinates e_1, ..., e_r.

Roots are integer tuples.  The Borel is the upper-triangular one, so a root
``e_i +- e_j`` with ``i < j`` is positive, and the simple roots are
``e_1 - e_2, ..., e_{r-1} - e_r, e_{r-1} + e_r``.

>>> rs = build_root_system(3)
>>> len(rs.roots), rs.rho
(12, Weight(coords=(2, 1, 0)))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .weyl import WeylElement

__all__ = [
    "Root", "Weight", "RootSystem", "RankTooSmall",
    "build_root_system", "pairing", "is_positive_vector",
    "simple_root_coefficients", "is_dominant", "is_dominant_by_chain",
    "dot_action",
]

Root = tuple[int, ...]


class RankTooSmall(ValueError):
    """Raised for rank < 2; D_1 has no roots."""

    code = "rank-too-small"


@dataclass(frozen=True)
class Weight:
    """An integral weight, i.e. an integer vector on the diagonal torus."""

    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        for c in coords:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"weight entries must be integers, got {c!r}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, value: Weight | Iterable[int]) -> Weight:
        return value if isinstance(value, Weight) else cls(tuple(value))

    @classmethod
    def parse(cls, text: str) -> Weight:
        """Parse a comma-separated integer list such as ``"3,2,-2"``."""
        parts = [p.strip() for p in text.split(",")]
        if not text.strip() or any(not p for p in parts):
            raise ValueError(f"malformed weight {text!r}")
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"malformed weight {text!r}") from None

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other: Weight | Sequence[int]) -> Weight:
        other = tuple(other)
        _check_dims(self.coords, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other)))

    def __sub__(self, other: Weight | Sequence[int]) -> Weight:
        other = tuple(other)
        _check_dims(self.coords, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other)))

    def to_json(self) -> list[int]:
        return list(self.coords)


def _check_dims(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} != {len(b)}")


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """Standard inner product; all type-D roots have norm 2, so it is also
    the pairing with the coroot."""
    _check_dims(x, y)
    return sum(a * b for a, b in zip(x, y))


def is_positive_vector(v: Sequence[int]) -> bool:
    """True iff the first nonzero entry is positive.

    On roots this is exactly membership in the positive system.
    """
    for c in v:
        if c:
            return c > 0
    return False


@dataclass(frozen=True)
class RootSystem:
    rank: int
    roots: frozenset[Root]
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    rho: Weight

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.roots

    def is_positive_root(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        return v in self.roots and is_positive_vector(v)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "type": f"D{self.rank}",
            "num_roots": len(self.roots),
            "num_positive_roots": len(self.positive_roots),
            "simple_roots": [list(a) for a in self.simple_roots],
            "positive_roots": [list(a) for a in self.positive_roots],
            "rho": self.rho.to_json(),
        }


def _unit(r: int, i: int, sign: int = 1) -> list[int]:
    v = [0] * r
    v[i] = sign
    return v


@lru_cache(maxsize=None)
def build_root_system(rank: int) -> RootSystem:
    """Build the D_rank root system.

    Positive roots are listed as ``e_i - e_j`` then ``e_i + e_j`` for each
    pair ``i < j`` in lexicographic order.  D_2 is allowed (it is A_1 x A_1).
    """
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise TypeError(f"rank must be an integer, got {rank!r}")
    if rank < 2:
        raise RankTooSmall(f"rank-too-small: type D needs rank >= 2, got {rank}")
    positive: list[Root] = []
    for i in range(rank):
        for j in range(i + 1, rank):
            for sj in (-1, 1):
                v = _unit(rank, i)
                v[j] = sj
                positive.append(tuple(v))
    roots = frozenset(positive) | frozenset(tuple(-c for c in a) for a in positive)
    simple = [_unit(rank, i) for i in range(rank - 1)]
    for i, v in enumerate(simple):
        v[i + 1] = -1
    last = _unit(rank, rank - 2)
    last[rank - 1] = 1
    simple.append(last)
    # half the sum of positive roots; each pair contributes 2 e_i, so no halves
    total = [0] * rank
    for a in positive:
        for k, c in enumerate(a):
            total[k] += c
    rho = Weight(tuple(c // 2 for c in total))
    return RootSystem(
        rank=rank,
        roots=roots,
        simple_roots=tuple(tuple(v) for v in simple),
        positive_roots=tuple(positive),
        rho=rho,
    )


def simple_root_coefficients(v: Sequence[int], rank: int) -> tuple[int, ...]:
    """Coordinates of ``v`` in the basis of simple roots.

    Uses the fundamental coweights: c_i = v_1 + ... + v_i for i <= r-2,
    c_{r-1} = (S_{r-1} - v_r)/2 and c_r = (S_{r-1} + v_r)/2.  Raises
    ``ValueError`` if ``v`` is outside the root lattice.
    """
    v = tuple(v)
    if len(v) != rank:
        raise ValueError(f"dimension mismatch: {len(v)} != {rank}")
    coeffs = []
    prefix = 0
    for i in range(rank - 2):
        prefix += v[i]
        coeffs.append(prefix)
    head = prefix + v[rank - 2]
    minus, plus = head - v[rank - 1], head + v[rank - 1]
    if minus % 2:
        raise ValueError(f"{v} is not in the root lattice of D{rank}")
    coeffs.extend((minus // 2, plus // 2))
    return tuple(coeffs)


def _check_rank(lam: Sequence[int], rs: RootSystem) -> None:
    if len(lam) != rs.rank:
        raise ValueError(f"dimension mismatch: weight of length {len(lam)} "
                         f"for root system of rank {rs.rank}")


def is_dominant(lam: Weight | Sequence[int], rs: RootSystem) -> bool:
    """<lam, alpha> >= 0 for every simple root alpha."""
    _check_rank(lam, rs)
    lam = tuple(lam)
    return all(pairing(lam, a) >= 0 for a in rs.simple_roots)


def is_dominant_by_chain(lam: Weight | Sequence[int]) -> bool:
    """The type-D chain lam_1 >= ... >= lam_{r-1} >= |lam_r|."""
    lam = tuple(lam)
    if len(lam) < 2:
        raise ValueError("type-D dominance needs at least two coordinates")
    chain = lam[:-1] + (abs(lam[-1]),)
    return all(a >= b for a, b in zip(chain, chain[1:]))


def dot_action(w: WeylElement, lam: Weight | Sequence[int], rs: RootSystem) -> Weight:
    """The rho-shifted action ``w(lam + rho) - rho``."""
    _check_rank(lam, rs)
    if w.rank != rs.rank:
        raise ValueError(f"dimension mismatch: element of rank {w.rank} "
                         f"for root system of rank {rs.rank}")
    shifted = Weight.of(lam) + rs.rho
    return Weight(w.act(shifted.coords)) - rs.rho
