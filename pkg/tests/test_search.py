"""Enumeration and counterexample search, checked against brute force."""

import itertools

import pytest

from almg import (
    AlgebraError,
    FiniteAlgebra,
    SearchSpec,
    canonical_form,
    check_lattice,
    classify,
    enumerate_al_monoids,
    enumerate_lattice_orders,
    make_boolean,
    make_chain,
    run_theorem_suite,
    search_counterexample,
)
from almg.core import STRUCTURAL_CHECKS
from almg.search import serialize


def test_lattice_counts_dedup():
    assert len(enumerate_lattice_orders(1)) == 1
    assert len(enumerate_lattice_orders(2)) == 1
    assert len(enumerate_lattice_orders(3)) == 1
    assert len(enumerate_lattice_orders(4)) == 2
    assert len(enumerate_lattice_orders(5)) == 5


def test_lattice_counts_labeled():
    assert len(enumerate_lattice_orders(2, dedup=False)) == 2
    # 24 labeled 4-chains plus 12 labeled diamonds
    assert len(enumerate_lattice_orders(4, dedup=False)) == 36


def test_lattice_outputs_pass_lattice_check():
    for n in (1, 2, 3, 4):
        for join, meet in enumerate_lattice_orders(n, dedup=False):
            alg = FiniteAlgebra(n, 0, join, join, meet, meet)
            assert check_lattice(alg).passed


def test_lattice_order_is_deterministic():
    assert enumerate_lattice_orders(4) == enumerate_lattice_orders(4)
    with pytest.raises(AlgebraError):
        enumerate_lattice_orders(6)


def _swap_elements(alg, i, j):
    perm = list(range(alg.size))
    perm[i], perm[j] = j, i
    n = alg.size

    def remap(table):
        out = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                out[perm[a]][perm[b]] = perm[table[a][b]]
        return out

    return FiniteAlgebra(n, perm[alg.zero], remap(alg.add), remap(alg.join),
                         remap(alg.meet), remap(alg.star))


def test_canonical_form_invariant_under_relabeling(b2):
    assert canonical_form(b2) == canonical_form(_swap_elements(b2, 1, 2))
    c3 = make_chain(3, "max")
    assert canonical_form(c3) == canonical_form(_swap_elements(c3, 0, 2))


def test_canonical_form_separates_sizes():
    assert canonical_form(make_chain(3)) != canonical_form(make_boolean(2))
    assert canonical_form(make_chain(2)) != canonical_form(make_chain(3))


def test_canonical_form_equality_iff_isomorphic():
    # distinct structures on the same carrier
    assert canonical_form(make_chain(3, "max")) != canonical_form(make_chain(3, "truncated"))
    # brute-force cross-check: equal canonical form means some zero-fixing
    # permutation carries one onto the other
    a = make_chain(3, "truncated")
    b = _swap_elements(a, 1, 2)
    assert canonical_form(a) == canonical_form(b)
    found = False
    for perm in itertools.permutations(range(3)):
        if perm[a.zero] != b.zero:
            continue
        ok = all(
            perm[a.table(op)[x][y]] == b.table(op)[perm[x]][perm[y]]
            for op in ("add", "join", "meet", "star")
            for x in range(3) for y in range(3)
        )
        found = found or ok
    assert found


def test_enumerate_n1_trivial():
    res = enumerate_al_monoids(1)
    assert res.found == 1
    assert len(res.algebras) == 1
    assert res.exhausted
    alg = res.algebras[0]
    assert alg.size == 1 and classify(alg).al_monoid


def test_enumerate_n2_contains_boolean_chain(brute2):
    res = enumerate_al_monoids(2)
    assert canonical_form(make_boolean(1)) in set(res.forms)
    assert {canonical_form(a) for a in brute2} == set(res.forms)


def test_enumerate_n2_labeled_matches_brute_force_exactly(brute2):
    res = enumerate_al_monoids(2, dedup=False)
    assert {serialize(a) for a in brute2} == {serialize(a) for a in res.algebras}
    assert res.found == len(brute2)


def test_enumerate_n3_matches_brute_force(brute3):
    res = enumerate_al_monoids(3)
    assert {canonical_form(a) for a in brute3} == set(res.forms)
    assert len(res.algebras) == 2
    assert canonical_form(make_chain(3, "truncated")) in set(res.forms)
    assert canonical_form(make_chain(3, "max")) in set(res.forms)


def test_enumerate_emitted_algebras_reverify():
    res = enumerate_al_monoids(3, dedup=False)
    for alg in res.algebras:
        assert classify(alg).al_monoid


def test_enumeration_deterministic_and_thread_invariant():
    base = enumerate_al_monoids(3)
    again = enumerate_al_monoids(3)
    threaded = enumerate_al_monoids(3, threads=4)
    assert base.forms == again.forms == threaded.forms
    assert base.nodes_expanded == again.nodes_expanded == threaded.nodes_expanded
    assert base.pruned == threaded.pruned
    assert [serialize(a) for a in base.algebras] == [serialize(a) for a in threaded.algebras]


def test_result_sorted_by_canonical_form():
    res = enumerate_al_monoids(4)
    assert res.forms == sorted(res.forms)


@pytest.mark.parametrize("family", ["monoid", "metric", "axiom2", "axiom4", "contractions"])
def test_disabling_one_pruning_rule_keeps_emitted_set(family):
    base = enumerate_al_monoids(3)
    relaxed = enumerate_al_monoids(3, disable={family})
    assert base.forms == relaxed.forms
    assert relaxed.nodes_expanded >= base.nodes_expanded


def test_budget_exhaustion_reports_partial():
    res = enumerate_al_monoids(3, budget=40)
    assert not res.exhausted
    full = enumerate_al_monoids(3)
    assert full.exhausted
    assert set(res.forms) <= set(full.forms)
    for alg in res.algebras:
        assert classify(alg).al_monoid


def test_search_spec_validation():
    with pytest.raises(AlgebraError):
        SearchSpec(size=3, require={"axiom2"}, violate={"axiom2"})
    with pytest.raises(AlgebraError):
        SearchSpec(size=3, require={"axiomX"})
    with pytest.raises(AlgebraError):
        SearchSpec(size=1)
    with pytest.raises(AlgebraError):
        SearchSpec(size=3, budget=0)


def _assert_result_contract(spec, res):
    for alg in res.algebras:
        for name in spec.require:
            assert STRUCTURAL_CHECKS[name](alg).passed
        for name in spec.violate:
            assert not STRUCTURAL_CHECKS[name](alg).passed
    if not res.algebras:
        assert res.exhausted, "no witness demands an exhausted space"


def test_search_axiom4_without_axiom2():
    spec = SearchSpec(size=2, require={"axiom4"}, violate={"axiom2"})
    res = search_counterexample(spec)
    assert res.found >= 1
    _assert_result_contract(spec, res)


def test_search_full_require_minus_axiom4():
    spec = SearchSpec(
        size=3,
        require={"lattice", "monoid", "metric", "contractions", "axiom2"},
        violate={"axiom4"},
    )
    res = search_counterexample(spec, first_only=False)
    _assert_result_contract(spec, res)


def test_search_reverse_independence_direction():
    spec = SearchSpec(
        size=3,
        require={"lattice", "monoid", "metric", "contractions", "axiom4"},
        violate={"axiom2"},
    )
    res = search_counterexample(spec, first_only=False)
    _assert_result_contract(spec, res)


def test_search_lattice_cannot_be_violated():
    spec = SearchSpec(size=2, violate={"lattice"})
    res = search_counterexample(spec)
    assert res.found == 0
    assert res.exhausted


def test_search_first_only_thread_invariant():
    spec = SearchSpec(size=2, require={"axiom4"}, violate={"axiom2"})
    serial = search_counterexample(spec, threads=1)
    threaded = search_counterexample(spec, threads=4)
    assert serial.forms == threaded.forms
    assert serial.nodes_expanded == threaded.nodes_expanded
    assert not serial.exhausted  # stopped at the first hit


def test_search_all_collects_more_than_first():
    spec = SearchSpec(size=2, require={"axiom4"}, violate={"axiom2"}, dedup=False)
    first = search_counterexample(spec, first_only=True)
    everything = search_counterexample(spec, first_only=False)
    assert len(first.algebras) == 1
    assert len(everything.algebras) >= len(first.algebras)
    assert everything.exhausted


def test_enumerated_n4_pass_theorem_suite():
    res = enumerate_al_monoids(4)
    assert res.exhausted
    assert len(res.algebras) == 5
    for alg in res.algebras:
        suite = run_theorem_suite(alg)
        assert suite.theorems_passed is True
