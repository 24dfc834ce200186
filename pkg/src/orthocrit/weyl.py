"""W(D_r) as signed permutations with an even number of sign changes.

An element is stored in one-line form, 0-based: coordinate ``i`` of a vector
is sent to position ``perm[i]`` and multiplied by ``signs[i]``.  The JSON form
is 1-based, ``{"perm": [2, 1, 3], "signs": [1, -1, -1]}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence

from .rootdata import RootSystem, build_root_system, is_positive_vector, pairing

__all__ = [
    "WeylElement", "EnumerationTooLarge", "DEFAULT_ENUMERATION_CEILING",
    "identity", "act", "compose", "inverse", "length", "reflection",
    "simple_reflections", "longest_element", "group_order", "enumerate_group",
]

#: W(D_8) has 5,160,960 elements; larger ranks go through the direct
#: Kostant construction instead.
DEFAULT_ENUMERATION_CEILING = 8


class EnumerationTooLarge(ValueError):
    code = "enumeration-too-large"


@dataclass(frozen=True, order=False)
class WeylElement:
    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        perm, signs = tuple(self.perm), tuple(self.signs)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"perm {perm} is not a permutation of 0..{len(perm) - 1}")
        if len(signs) != len(perm):
            raise ValueError("perm and signs differ in length")
        if any(s not in (1, -1) for s in signs):
            raise ValueError(f"signs must be +1/-1, got {signs}")
        if signs.count(-1) % 2:
            raise ValueError(f"odd number of sign changes {signs}: not in type D")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "signs", signs)

    @property
    def rank(self) -> int:
        return len(self.perm)

    def act(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != len(self.perm):
            raise ValueError(f"dimension mismatch: {len(v)} != {len(self.perm)}")
        out = [0] * len(v)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * v[i]
        return tuple(out)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return compose(self, other)

    def inverse(self) -> WeylElement:
        return inverse(self)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.rank)) and all(s == 1 for s in self.signs)

    def sort_key(self) -> tuple:
        """Lexicographic on (perm, signs) with + before -."""
        return self.perm, tuple(s < 0 for s in self.signs)

    def to_json(self) -> dict:
        return {"perm": [p + 1 for p in self.perm], "signs": list(self.signs)}

    @classmethod
    def from_json(cls, data: dict) -> WeylElement:
        return cls(tuple(p - 1 for p in data["perm"]), tuple(data["signs"]))

    def __repr__(self) -> str:
        cells = ", ".join(("-" if s < 0 else "") + str(p + 1)
                          for p, s in zip(self.perm, self.signs))
        return f"WeylElement[{cells}]"


def identity(rank: int) -> WeylElement:
    if rank < 2:
        raise ValueError(f"rank-too-small: {rank}")
    return WeylElement(tuple(range(rank)), (1,) * rank)


def act(w: WeylElement, v: Sequence[int]) -> tuple[int, ...]:
    return w.act(v)


def compose(w1: WeylElement, w2: WeylElement) -> WeylElement:
    """The element acting as ``w1`` after ``w2``."""
    if w1.rank != w2.rank:
        raise ValueError(f"rank mismatch: {w1.rank} != {w2.rank}")
    p1, s1 = w1.perm, w1.signs
    return WeylElement(
        tuple(p1[p] for p in w2.perm),
        tuple(s1[p] * s for p, s in zip(w2.perm, w2.signs)),
    )


def inverse(w: WeylElement) -> WeylElement:
    perm = [0] * w.rank
    signs = [1] * w.rank
    for i, (p, s) in enumerate(zip(w.perm, w.signs)):
        perm[p] = i
        signs[p] = s
    return WeylElement(tuple(perm), tuple(signs))


def length(w: WeylElement, rs: RootSystem | None = None) -> int:
    """Number of positive roots sent to negative roots."""
    if rs is None:
        rs = build_root_system(w.rank)
    elif rs.rank != w.rank:
        raise ValueError(f"rank mismatch: {w.rank} != {rs.rank}")
    return sum(1 for a in rs.positive_roots if not is_positive_vector(w.act(a)))


def reflection(root: Sequence[int]) -> WeylElement:
    """The reflection v -> v - <v, root> root for a root of norm 2."""
    root = tuple(root)
    if pairing(root, root) != 2:
        raise ValueError(f"{root} is not a type-D root")
    images = []
    for i in range(len(root)):
        e = [0] * len(root)
        e[i] = 1
        c = pairing(e, root)
        images.append(tuple(a - c * b for a, b in zip(e, root)))
    perm, signs = [], []
    for img in images:
        (j,) = [k for k, c in enumerate(img) if c]
        perm.append(j)
        signs.append(img[j])
    return WeylElement(tuple(perm), tuple(signs))


def simple_reflections(rs: RootSystem) -> tuple[WeylElement, ...]:
    return tuple(reflection(a) for a in rs.simple_roots)


def longest_element(rank: int) -> WeylElement:
    """-1 for even rank; for odd rank the last sign stays + to keep parity."""
    signs = [-1] * rank
    if rank % 2:
        signs[-1] = 1
    return WeylElement(tuple(range(rank)), tuple(signs))


def group_order(rank: int) -> int:
    return 2 ** (rank - 1) * factorial(rank)


@lru_cache(maxsize=None)
def _even_sign_patterns(rank: int) -> tuple[tuple[int, ...], ...]:
    return tuple(s for s in product((1, -1), repeat=rank) if s.count(-1) % 2 == 0)


def enumerate_group(rank: int, ceiling: int = DEFAULT_ENUMERATION_CEILING) -> Iterator[WeylElement]:
    """Yield every element of W(D_rank) once, ordered by ``sort_key``.

    Practical ceiling is rank 8 (about 5.2M elements); pass ``ceiling`` to
    override.
    """
    if rank < 2:
        raise ValueError(f"rank-too-small: {rank}")
    if rank > ceiling:
        raise EnumerationTooLarge(
            f"enumeration-too-large: W(D{rank}) has {group_order(rank)} elements, "
            f"ceiling is rank {ceiling}")
    signs = _even_sign_patterns(rank)
    # skip validation in the hot loop; these are valid by construction
    new = object.__new__
    for perm in permutations(range(rank)):
        for s in signs:
            w = new(WeylElement)
            object.__setattr__(w, "perm", perm)
            object.__setattr__(w, "signs", s)
            yield w
