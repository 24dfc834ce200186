"""Parabolics of D_r given by deleting simple roots, and Kostant representatives.

Convention: ``W = W_M W^P``, so ``W^P`` holds the minimal-length elements of
the right cosets ``W_M w``.  These are exactly the ``w`` with
``w^{-1}(alpha) > 0`` for every positive root ``alpha`` of the Levi.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .rootdata import RootSystem, build_root_system, is_positive_vector, simple_root_coefficients
from .weyl import (
    DEFAULT_ENUMERATION_CEILING,
    WeylElement,
    compose,
    enumerate_group,
    group_order,
    identity,
    inverse,
    length,
    simple_reflections,
)

__all__ = [
    "Parabolic", "KostantRepSet", "build_parabolic", "is_kostant_rep",
    "kostant_reps", "reps_of_length", "levi_weyl_order", "nilradical_is_abelian",
    "kostant_reps_brute_force", "kostant_reps_direct", "expected_rep_count",
]


@dataclass(frozen=True)
class Parabolic:
    ambient: RootSystem
    deleted: frozenset[int]  # 1-based simple-root indices
    levi_positive_roots: tuple[tuple[int, ...], ...]
    nilradical_roots: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.ambient.rank

    @property
    def retained_simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(a for i, a in enumerate(self.ambient.simple_roots, 1)
                     if i not in self.deleted)

    @property
    def is_first_node(self) -> bool:
        """The parabolic with Levi GL_1 x SO(n,n) inside SO(n+1,n+1)."""
        return self.deleted == frozenset({1}) and self.rank >= 3


@lru_cache(maxsize=None)
def _build(rank: int, deleted: frozenset[int]) -> Parabolic:
    rs = build_root_system(rank)
    levi, nil = [], []
    for a in rs.positive_roots:
        coeffs = simple_root_coefficients(a, rank)
        if any(coeffs[i - 1] for i in deleted):
            nil.append(a)
        else:
            levi.append(a)
    return Parabolic(rs, deleted, tuple(levi), tuple(nil))


def build_parabolic(ambient_rank: int, deleted: Iterable[int]) -> Parabolic:
    deleted = frozenset(deleted)
    if ambient_rank < 2:
        raise ValueError(f"rank-too-small: {ambient_rank}")
    bad = sorted(i for i in deleted if not (isinstance(i, int) and 1 <= i <= ambient_rank))
    if bad:
        raise ValueError(f"simple-root indices {bad} out of range 1..{ambient_rank}")
    return _build(ambient_rank, deleted)


def is_kostant_rep(w: WeylElement, p: Parabolic) -> bool:
    if w.rank != p.rank:
        raise ValueError(f"rank mismatch: {w.rank} != {p.rank}")
    w_inv = inverse(w)
    # positivity on retained simple roots implies it on all Levi-positive roots
    return all(is_positive_vector(w_inv.act(a)) for a in p.retained_simple_roots)


def levi_weyl_order(p: Parabolic) -> int:
    """Order of the Levi Weyl group, |W_M| = |{Levi roots}| generated group.

    Computed by closing the retained simple reflections under composition,
    so it does not rely on knowing the Levi's Cartan type.
    """
    gens = [g for g, i in zip(simple_reflections(p.ambient), range(1, p.rank + 1))
            if i not in p.deleted]
    seen = {identity(p.rank)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = compose(u, g)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return len(seen)


def nilradical_is_abelian(p: Parabolic) -> bool:
    """True iff no sum of two nilradical roots is a root."""
    nil = p.nilradical_roots
    roots = p.ambient.roots
    for i, a in enumerate(nil):
        for b in nil[i:]:
            if tuple(x + y for x, y in zip(a, b)) in roots:
                return False
    return True


@dataclass(frozen=True)
class KostantRepSet:
    parabolic: Parabolic
    reps: tuple[WeylElement, ...]
    lengths: tuple[int, ...]
    method: str

    def __len__(self) -> int:
        return len(self.reps)

    def to_json(self) -> dict:
        return {
            "ambient_rank": self.parabolic.rank,
            "deleted": sorted(self.parabolic.deleted),
            "count": len(self.reps),
            "method": self.method,
            "reps": [dict(w.to_json(), length=l) for w, l in zip(self.reps, self.lengths)],
        }


def _sorted_set(p: Parabolic, reps: Iterable[WeylElement], method: str) -> KostantRepSet:
    keyed = sorted(((length(w, p.ambient), w.sort_key(), w) for w in reps),
                   key=lambda t: t[:2])
    return KostantRepSet(p, tuple(t[2] for t in keyed), tuple(t[0] for t in keyed), method)


def kostant_reps_brute_force(p: Parabolic, ceiling: int = DEFAULT_ENUMERATION_CEILING) -> KostantRepSet:
    return _sorted_set(p, (w for w in enumerate_group(p.rank, ceiling) if is_kostant_rep(w, p)),
                       "brute-force")


def _signed_insertions(rank: int) -> list[WeylElement]:
    """Candidates u = w^{-1} with u(e_1) = +-e_j and e_2..e_r kept in order.

    When e_1 goes to -e_j, the coordinate landing in the last free slot is
    negated as well, keeping the sign count even.
    """
    out = []
    for j in range(rank):
        rest = [k for k in range(rank) if k != j]
        for s in (1, -1):
            perm = [j] + rest
            signs = [s] + [1] * (rank - 1)
            if s < 0:
                signs[-1] = -1
            out.append(inverse(WeylElement(tuple(perm), tuple(signs))))
    return out


def _walk(p: Parabolic) -> list[WeylElement]:
    """Grow W^P from the identity by left multiplication on w^{-1}.

    Minimal left coset representatives u (u = w^{-1}) are closed under
    stripping a left descent, so every one is reached by a chain of
    length-increasing steps that stay minimal.
    """
    gens = simple_reflections(p.ambient)
    start = identity(p.rank)
    seen = {start}
    frontier = [start]
    ell = 0
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = compose(g, u)
                if v in seen or length(v, p.ambient) != ell + 1:
                    continue
                w = inverse(v)
                if is_kostant_rep(w, p):
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
        ell += 1
    return [inverse(u) for u in seen]


def kostant_reps_direct(p: Parabolic) -> KostantRepSet:
    """Construct W^P without enumerating W.

    For the first-node parabolic the 2r signed insertions are used; every
    candidate is checked with ``is_kostant_rep``.  Other parabolics fall back
    to a descent walk of size |W^P|.
    """
    if p.is_first_node:
        if not nilradical_is_abelian(p):
            raise AssertionError("first-node nilradical should be abelian")
        candidates = _signed_insertions(p.rank)
        rejected = [w for w in candidates if not is_kostant_rep(w, p)]
        if rejected:
            raise AssertionError(f"signed insertions not in W^P: {rejected}")
        if len(set(candidates)) != 2 * p.rank:
            raise AssertionError("signed insertions are not distinct")
        return _sorted_set(p, candidates, "direct")
    return _sorted_set(p, _walk(p), "direct")


def kostant_reps(p: Parabolic, method: str = "auto",
                 ceiling: int = DEFAULT_ENUMERATION_CEILING) -> KostantRepSet:
    """All Kostant representatives, sorted by (length, enumeration order).

    ``method`` is ``"brute-force"``, ``"direct"`` or ``"auto"``; auto uses the
    brute-force filter up to the enumeration ceiling and the direct
    construction above it.
    """
    if method == "auto":
        method = "brute-force" if p.rank <= ceiling else "direct"
    if method == "brute-force":
        return kostant_reps_brute_force(p, ceiling)
    if method == "direct":
        return kostant_reps_direct(p)
    raise ValueError(f"unknown method {method!r}")


def reps_of_length(p: Parabolic, ell: int, method: str = "auto",
                   ceiling: int = DEFAULT_ENUMERATION_CEILING) -> list[WeylElement]:
    ks = kostant_reps(p, method, ceiling)
    return [w for w, l in zip(ks.reps, ks.lengths) if l == ell]


def expected_rep_count(p: Parabolic) -> int:
    """|W| / |W_M|."""
    return group_order(p.rank) // levi_weyl_order(p)
