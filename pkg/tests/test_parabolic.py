from collections import Counter
from itertools import chain, combinations

import pytest

from orthocrit.parabolic import (
    build_parabolic, expected_rep_count, is_kostant_rep, kostant_reps,
    kostant_reps_brute_force, kostant_reps_direct, levi_weyl_order,
    nilradical_is_abelian, reps_of_length,
)
from orthocrit.rootdata import build_root_system
from orthocrit.weyl import (
    WeylElement, compose, enumerate_group, group_order, identity, inverse, length,
    simple_reflections,
)

from oracles import closure


def test_nilradical_d3():
    p = build_parabolic(3, {1})
    assert set(p.nilradical_roots) == {(1, -1, 0), (1, 1, 0), (1, 0, -1), (1, 0, 1)}
    assert set(p.levi_positive_roots) == {(0, 1, -1), (0, 1, 1)}


@pytest.mark.parametrize("n", range(2, 21))
def test_first_node_nilradical_is_e1_plus_minus_ej(n):
    p = build_parabolic(n + 1, {1})
    expected = set()
    for j in range(1, n + 1):
        for s in (1, -1):
            v = [0] * (n + 1)
            v[0], v[j] = 1, s
            expected.add(tuple(v))
    assert set(p.nilradical_roots) == expected
    assert len(p.nilradical_roots) == 2 * n
    assert nilradical_is_abelian(p)


@pytest.mark.parametrize("rank", [3, 4, 5])
def test_partition_of_positive_roots(rank):
    subsets = chain.from_iterable(combinations(range(1, rank + 1), k) for k in range(rank + 1))
    for deleted in subsets:
        p = build_parabolic(rank, deleted)
        assert not set(p.levi_positive_roots) & set(p.nilradical_roots)
        assert set(p.levi_positive_roots) | set(p.nilradical_roots) == set(p.ambient.positive_roots)


def test_borel_and_trivial_deletion():
    p = build_parabolic(4, {1, 2, 3, 4})
    assert p.levi_positive_roots == ()
    assert len(p.nilradical_roots) == 12
    assert kostant_reps(build_parabolic(4, set())).reps == (identity(4),)


@pytest.mark.parametrize("deleted", [{0}, {5}, {1, 9}])
def test_invalid_index(deleted):
    with pytest.raises(ValueError):
        build_parabolic(4, deleted)


def test_nonabelian_nilradical_detected():
    assert not nilradical_is_abelian(build_parabolic(4, {2}))


def test_is_kostant_rep_examples():
    p = build_parabolic(3, {1})
    assert is_kostant_rep(identity(3), p)
    # longest element of the Levi W(D2) on coordinates 2, 3
    w0_levi = WeylElement((0, 1, 2), (1, -1, -1))
    assert not is_kostant_rep(w0_levi, p)
    assert sum(is_kostant_rep(w, p) for w in enumerate_group(3)) == 6


def test_kostant_reps_d3_lengths():
    ks = kostant_reps(build_parabolic(3, {1}))
    assert len(ks) == 6
    assert ks.lengths == (0, 1, 2, 2, 3, 4)
    assert ks.method == "brute-force"


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_first_node_length_profile(n):
    # frozen from the brute-force filter: lengths 0..2n, with n occurring twice
    ks = kostant_reps_brute_force(build_parabolic(n + 1, {1}))
    counts = Counter(ks.lengths)
    assert len(ks) == 2 * (n + 1)
    assert sorted(counts) == list(range(2 * n + 1))
    assert counts[n] == 2 and all(c == 1 for l, c in counts.items() if l != n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reps_of_length(n):
    p = build_parabolic(n + 1, {1})
    assert reps_of_length(p, 0) == [identity(n + 1)]
    assert len(reps_of_length(p, len(p.nilradical_roots))) == 1
    assert len(reps_of_length(p, n)) == 2


@pytest.mark.parametrize("rank, deleted", [
    (3, {1}), (4, {1}), (5, {1}), (6, {1}), (4, {2}), (4, {3}), (5, {5}),
    (4, {1, 3}), (4, {1, 2, 3, 4}), (5, {2, 4}),
])
def test_direct_equals_brute_force(rank, deleted):
    p = build_parabolic(rank, deleted)
    brute = kostant_reps_brute_force(p)
    direct = kostant_reps_direct(p)
    assert brute.reps == direct.reps and brute.lengths == direct.lengths
    assert len(brute) * levi_weyl_order(p) == group_order(rank)
    assert len(brute) == expected_rep_count(p)


def test_auto_switches_to_direct_above_ceiling():
    ks = kostant_reps(build_parabolic(12, {1}))
    assert ks.method == "direct" and len(ks) == 24
    assert max(ks.lengths) == 22


def test_levi_order_matches_closure_oracle():
    rs = build_root_system(4)
    gens = [g for i, g in enumerate(simple_reflections(rs), 1) if i != 1]
    assert len(closure(gens, identity(4), compose)) == levi_weyl_order(build_parabolic(4, {1})) == 24


@pytest.mark.parametrize("rank", [3, 4])
def test_unique_minimal_rep_per_right_coset(rank):
    rs = build_root_system(rank)
    group = list(enumerate_group(rank))
    subsets = chain.from_iterable(combinations(range(1, rank + 1), k) for k in range(rank + 1))
    for deleted in subsets:
        p = build_parabolic(rank, deleted)
        gens = [g for i, g in enumerate(simple_reflections(rs), 1) if i not in deleted]
        levi = closure(gens, identity(rank), compose)
        cosets = {frozenset(compose(m, w) for m in levi) for w in group}
        assert len(cosets) * len(levi) == len(group)
        reps = set(kostant_reps(p).reps)
        for coset in cosets:
            lengths = {u: length(u, rs) for u in coset}
            least = min(lengths.values())
            minimal = [u for u, l in lengths.items() if l == least]
            assert len(minimal) == 1
            assert reps & coset == set(minimal)
            assert all(lengths[u] > least for u in coset if u not in minimal)


def test_json_report():
    data = kostant_reps(build_parabolic(3, {1})).to_json()
    assert data["ambient_rank"] == 3 and data["deleted"] == [1] and data["count"] == 6
    assert [r["length"] for r in data["reps"]] == [0, 1, 2, 2, 3, 4]
    assert data["reps"][0] == {"perm": [1, 2, 3], "signs": [1, 1, 1], "length": 0}
