"""Exhaustive check of the equivalence between

(1) ``-n`` and ``1-n`` being critical for ``L(s, chi x sigma)``,
(2) ``1 - |mu_n| <= n + d <= |mu_n| - 1``,
(3) a unique ``w`` in ``W^P`` of length ``n`` with ``w^{-1}.(d, mu)`` dominant
    for D_{n+1}, P the first-node parabolic.

Conditions (1)/(2) go through :mod:`critical` only; condition (3) goes
through the Weyl/parabolic machinery only.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator, Optional, Sequence, Union

from .critical import SOWeightData, TwistData, is_critical_twisted, ratio_argument_map, successive_pairs
from .parabolic import build_parabolic, reps_of_length
from .rootdata import Weight, build_root_system, dot_action, is_dominant, is_dominant_by_chain
from .weyl import DEFAULT_ENUMERATION_CEILING, WeylElement, inverse

__all__ = [
    "LemmaInstance", "LemmaReport", "SweepSpec", "SweepReport", "SweepBudgetExceeded",
    "check_condition_1", "check_condition_2", "check_condition_3", "check_instance",
    "auto_d_window", "dominant_weights", "verify_equivalence", "DEFAULT_MAX_INSTANCES",
]

log = logging.getLogger(__name__)

DEFAULT_MAX_INSTANCES = 2_000_000
AUTO_MARGIN = 3


@dataclass(frozen=True)
class LemmaInstance:
    n: int
    mu: Weight
    d: int
    allow_odd: bool = field(default=False, compare=False)

    def __post_init__(self):
        mu = Weight.of(self.mu)
        object.__setattr__(self, "mu", mu)
        if self.n < 2 or (self.n % 2 and not self.allow_odd):
            raise ValueError(f"n must be even and >= 2, got {self.n}")
        if len(mu) != self.n:
            raise ValueError(f"mu has {len(mu)} entries, expected n = {self.n}")
        if not is_dominant_by_chain(mu):
            raise ValueError(f"mu = {list(mu)} is not dominant: need "
                             "mu_1 >= ... >= mu_{n-1} >= |mu_n|")

    def to_json(self) -> dict:
        return {"n": self.n, "mu": self.mu.to_json(), "d": self.d}


@dataclass(frozen=True)
class LemmaReport:
    instance: LemmaInstance
    cond1: bool
    cond2: bool
    cond3: bool
    witnesses: tuple[WeylElement, ...]
    ratio_arguments: Optional[tuple[int, int]] = None

    @property
    def equivalent(self) -> bool:
        return self.cond1 == self.cond2 == self.cond3

    @property
    def uniqueness_violated(self) -> bool:
        return len(self.witnesses) >= 2

    def to_json(self) -> dict:
        return {
            **self.instance.to_json(),
            "cond1": self.cond1,
            "cond2": self.cond2,
            "cond3": self.cond3,
            "witnesses": [w.to_json() for w in self.witnesses],
            "equivalent": self.equivalent,
            "uniqueness_violated": self.uniqueness_violated,
            "ratio_arguments": list(self.ratio_arguments) if self.ratio_arguments else None,
        }


def _so_data(inst: LemmaInstance) -> SOWeightData:
    return SOWeightData(inst.n, inst.mu, allow_odd=inst.allow_odd)


def check_condition_1(inst: LemmaInstance) -> bool:
    so, t = _so_data(inst), TwistData(inst.d)
    return is_critical_twisted(-inst.n, t, so) and is_critical_twisted(1 - inst.n, t, so)


def check_condition_2(inst: LemmaInstance) -> bool:
    m = abs(inst.mu[-1])
    return 1 - m <= inst.n + inst.d <= m - 1


@lru_cache(maxsize=None)
def _middle_reps(n: int, method: str) -> tuple[tuple[WeylElement, WeylElement], ...]:
    """Pairs (w, w^{-1}) for the length-n Kostant representatives in D_{n+1}."""
    p = build_parabolic(n + 1, {1})
    half = len(p.nilradical_roots) // 2
    return tuple((w, inverse(w)) for w in reps_of_length(p, half, method))


def check_condition_3(inst: LemmaInstance, method: str = "direct") -> tuple[bool, tuple[WeylElement, ...]]:
    """Return (exactly one witness, all witnesses)."""
    rs = build_root_system(inst.n + 1)
    lam = Weight((inst.d,) + inst.mu.coords)
    witnesses = tuple(w for w, w_inv in _middle_reps(inst.n, method)
                      if is_dominant(dot_action(w_inv, lam, rs), rs))
    return len(witnesses) == 1, witnesses


def check_instance(inst: LemmaInstance, method: str = "direct") -> LemmaReport:
    cond3, witnesses = check_condition_3(inst, method)
    return LemmaReport(
        instance=inst,
        cond1=check_condition_1(inst),
        cond2=check_condition_2(inst),
        cond3=cond3,
        witnesses=witnesses,
        ratio_arguments=ratio_argument_map(TwistData(inst.d), _so_data(inst)),
    )


def auto_d_window(n: int, mu: Sequence[int]) -> tuple[int, int]:
    """The condition-(2) interval for d, widened by 3 on each side."""
    m = abs(mu[-1])
    return -n - m - AUTO_MARGIN, -n + m + AUTO_MARGIN


def dominant_weights(n: int, mu_max: int) -> Iterator[Weight]:
    """All dominant integral weights of D_n with mu_1 <= mu_max, in
    lexicographic order."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    for head in combinations_with_replacement(range(mu_max + 1), n - 1):
        head = head[::-1]  # non-increasing
        for last in range(-head[-1], head[-1] + 1):
            yield Weight(head + (last,))


DWindow = Union[str, tuple[int, int]]


@dataclass(frozen=True)
class SweepSpec:
    ns: tuple[int, ...]
    mu_max: int
    d_window: DWindow = "auto"
    allow_odd: bool = False
    method: str = "direct"

    def __post_init__(self):
        object.__setattr__(self, "ns", tuple(self.ns))
        if not self.ns:
            raise ValueError("no values of n given")
        for n in self.ns:
            if n < 2:
                raise ValueError(f"n must be >= 2, got {n}")
            if n % 2 and not self.allow_odd:
                raise ValueError(f"n = {n} is odd; pass allow_odd to explore odd n")
        if self.mu_max < 0:
            raise ValueError(f"mu_max must be >= 0, got {self.mu_max}")
        if self.d_window != "auto":
            lo, hi = self.d_window
            object.__setattr__(self, "d_window", (int(lo), int(hi)))

    def groups(self) -> Iterator[tuple[int, Weight, tuple[int, int]]]:
        """(n, mu, d-range) per weight, checking explicit windows cover both
        sides of the condition-(2) interval."""
        for n in self.ns:
            for mu in dominant_weights(n, self.mu_max):
                if self.d_window == "auto":
                    window = auto_d_window(n, mu)
                else:
                    window = self.d_window
                    m = abs(mu[-1])
                    if not (window[0] <= -n - m and window[1] >= -n + m):
                        raise ValueError(
                            f"d window {list(window)} does not contain "
                            f"[{-n - m}, {-n + m}] for n={n}, mu={list(mu)}")
                yield n, mu, window


@dataclass
class _Tally:
    instances: int = 0
    agreements: int = 0
    counterexamples: list = field(default_factory=list)
    ratio_coverage_ok: bool = True
    uniqueness_ok: bool = True
    coverage_failures: list = field(default_factory=list)

    def merge(self, other: _Tally) -> None:
        self.instances += other.instances
        self.agreements += other.agreements
        self.counterexamples.extend(other.counterexamples)
        self.ratio_coverage_ok &= other.ratio_coverage_ok
        self.uniqueness_ok &= other.uniqueness_ok
        self.coverage_failures.extend(other.coverage_failures)

    def to_json(self) -> dict:
        return {
            "instances": self.instances,
            "agreements": self.agreements,
            "counterexamples": [r.to_json() for r in self.counterexamples],
            "ratio_coverage_ok": self.ratio_coverage_ok,
            "uniqueness_ok": self.uniqueness_ok,
        }


def _run_group(args: tuple[int, Weight, tuple[int, int], bool, str]) -> _Tally:
    n, mu, (lo, hi), allow_odd, method = args
    tally = _Tally()
    pairs = []
    for d in range(lo, hi + 1):
        report = check_instance(LemmaInstance(n, mu, d, allow_odd), method)
        tally.instances += 1
        if report.equivalent and not report.uniqueness_violated:
            tally.agreements += 1
        else:
            tally.counterexamples.append(report)
        if report.uniqueness_violated:
            tally.uniqueness_ok = False
        if report.cond2:
            pairs.append(report.ratio_arguments)
    expected = list(successive_pairs(SOWeightData(n, mu, allow_odd=allow_odd)))
    hit = [p for p in pairs if p is not None]
    if len(hit) != len(pairs) or sorted(hit) != expected or len(set(hit)) != len(hit):
        tally.ratio_coverage_ok = False
        tally.coverage_failures.append({"n": n, "mu": mu.to_json(),
                                        "pairs": [list(p) if p else None for p in pairs]})
    return tally


@dataclass
class SweepReport:
    instances: int
    agreements: int
    counterexamples: list[LemmaReport]
    ratio_coverage_ok: bool
    uniqueness_ok: bool
    runtime_ms: Optional[int] = None
    complete: bool = True
    exploratory: Optional[dict] = None
    coverage_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (not self.counterexamples and self.ratio_coverage_ok
                and self.uniqueness_ok and self.agreements == self.instances)

    def to_json(self) -> dict:
        out = {
            "instances": self.instances,
            "agreements": self.agreements,
            "counterexamples": [r.to_json() for r in self.counterexamples],
            "ratio_coverage_ok": self.ratio_coverage_ok,
            "uniqueness_ok": self.uniqueness_ok,
            "runtime_ms": self.runtime_ms,
        }
        if not self.complete:
            out["complete"] = False
        if self.exploratory is not None:
            out["exploratory"] = self.exploratory
        return out


class SweepBudgetExceeded(RuntimeError):
    """The sweep exceeds ``max_instances``; ``partial`` holds the results for
    the groups that fit."""

    def __init__(self, message: str, partial: SweepReport):
        super().__init__(message)
        self.partial = partial


def verify_equivalence(spec: SweepSpec, max_instances: int = DEFAULT_MAX_INSTANCES,
                       jobs: int = 1) -> SweepReport:
    """Run conditions (1), (2), (3) on every instance of the sweep.

    Odd n (only with ``allow_odd``) is tallied under ``exploratory`` and never
    counts against the asserted result.  Groups are merged in sweep order, so
    the report does not depend on ``jobs``.
    """
    start = time.perf_counter()
    tasks, planned, over = [], 0, False
    for n, mu, (lo, hi) in spec.groups():
        size = max(0, hi - lo + 1)
        if planned + size > max_instances:
            over = True
            break
        planned += size
        tasks.append((n, mu, (lo, hi), spec.allow_odd, spec.method))

    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_group, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_run_group(t) for t in tasks]

    even, odd = _Tally(), _Tally()
    for task, tally in zip(tasks, results):
        (odd if task[0] % 2 else even).merge(tally)

    report = SweepReport(
        instances=even.instances,
        agreements=even.agreements,
        counterexamples=even.counterexamples,
        ratio_coverage_ok=even.ratio_coverage_ok,
        uniqueness_ok=even.uniqueness_ok,
        runtime_ms=round((time.perf_counter() - start) * 1000),
        complete=not over,
        exploratory=odd.to_json() if any(n % 2 for n in spec.ns) else None,
        coverage_failures=even.coverage_failures,
    )
    log.info("swept %d instances, %d counterexamples", report.instances, len(report.counterexamples))
    if over:
        raise SweepBudgetExceeded(
            f"sweep exceeds budget of {max_instances} instances; "
            f"stopped after {planned}", report)
    return report
