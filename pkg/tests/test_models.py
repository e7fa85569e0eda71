"""Model constructors: classification, window semantics, products."""

import pytest

from almg import (
    AlgebraError,
    ModelSpec,
    check_axiom2,
    check_axiom4,
    check_contractions,
    check_lattice,
    check_metric,
    check_monoid,
    classify,
    drl_difference,
    is_chain,
    is_drl_compatible,
    leq,
    make_boolean,
    make_chain,
    make_product,
    make_z_window_u,
    make_z_window_uv,
)
from almg.geometry import find_fixty_triangles


@pytest.mark.parametrize("k", [0, 1, 2])
def test_boolean_is_al_monoid(k):
    alg = make_boolean(k)
    assert alg.size == 1 << k
    assert classify(alg).al_monoid


def test_boolean_one_is_chain():
    assert is_chain(make_boolean(1)) is True
    assert is_chain(make_boolean(2)) is False


def test_boolean_bounds():
    with pytest.raises(AlgebraError):
        make_boolean(5)
    with pytest.raises(AlgebraError):
        make_boolean(-1)


@pytest.mark.parametrize("mode", ["truncated", "max"])
@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_chain_is_al_monoid(n, mode):
    alg = make_chain(n, mode)
    assert classify(alg).al_monoid
    assert is_chain(alg) is True


def test_chain_max_star_is_least_difference():
    alg = make_chain(3, "max")
    assert alg.star[2][1] == 2
    assert drl_difference(alg, 2, 1) == 2
    assert is_drl_compatible(alg).passed


def test_chain_bounds_and_mode():
    with pytest.raises(AlgebraError):
        make_chain(0)
    with pytest.raises(AlgebraError):
        make_chain(65)
    with pytest.raises(AlgebraError):
        make_chain(3, "bogus")


def test_z_window_u_checks_pass_on_defined():
    alg = make_z_window_u(8)
    assert alg.is_partial
    cls = classify(alg)
    assert cls.al_monoid
    assert all(r.skipped_count > 0 for name, r in cls.reports.items()
               if name in ("monoid", "metric", "contractions"))


def test_z_window_u_values():
    alg = make_z_window_u(8)
    idx = lambda v: v + 8
    assert alg.op("star", idx(3), idx(5)) == idx(2)
    assert alg.op("add", idx(3), idx(5)) == idx(8)
    assert alg.op("add", idx(5), idx(5)) is None  # leaves the window
    u = alg.size - 1
    assert alg.op("add", idx(3), u) == u
    assert alg.op("star", idx(3), u) == u
    assert alg.op("star", u, u) == alg.zero
    assert alg.leq(idx(3), u) is None  # order with u undefined by default


def test_z_window_u_drl_difference_absent_for_u():
    alg = make_z_window_u(8)
    u = alg.size - 1
    for a in range(alg.size - 1):
        assert drl_difference(alg, a, u) is None
    assert not is_drl_compatible(alg).passed


def test_z_window_u_bottom_flag_orders_u():
    alg = make_z_window_u(4, u_bottom=True)
    u = alg.size - 1
    assert alg.leq(u, alg.zero) is True
    # with u below the integers the second law collapses at (a, u)
    assert not check_axiom2(alg).passed


def test_z_window_monotone_refinement():
    small = make_z_window_u(4)
    large = make_z_window_u(6)

    def mapped(i, small_r=4, large_r=6):
        # integer indices shift by the radius difference; u is last in both
        if i == small.size - 1:
            return large.size - 1
        return i + (large_r - small_r)

    for op in ("add", "join", "meet", "star"):
        for a in range(small.size):
            for b in range(small.size):
                v = small.op(op, a, b)
                if v is not None:
                    assert large.op(op, mapped(a), mapped(b)) == mapped(v)


def test_z_window_uv_reproduces_axiom2_failure():
    alg = make_z_window_uv(8)
    u, v = alg.size - 2, alg.size - 1
    rep = check_axiom2(alg, witness_cap=64)
    assert not rep.passed
    assert (v, u) in rep.witnesses
    # v * (v ^ u) + (v ^ u) evaluates to u, not v
    assert alg.op("meet", v, u) == u
    assert alg.op("star", v, u) == v
    assert alg.op("add", v, u) == u


def test_z_window_uv_other_axioms_pass():
    alg = make_z_window_uv(8)
    assert check_lattice(alg).passed
    assert check_monoid(alg).passed
    assert check_metric(alg).passed
    assert check_contractions(alg).passed
    assert check_axiom4(alg).passed
    assert not classify(alg).al_monoid


def test_z_window_uv_order():
    alg = make_z_window_uv(8)
    u, v = alg.size - 2, alg.size - 1
    assert leq(alg, u, alg.zero) is True
    assert leq(alg, alg.zero, v) is True
    for a in range(alg.size - 2):
        assert leq(alg, u, a) is True
        assert leq(alg, a, v) is True


def test_z_window_uv_monotone_refinement():
    small = make_z_window_uv(3)
    large = make_z_window_uv(5)

    def mapped(i):
        if i >= small.size - 2:
            return i + (large.size - small.size)
        return i + 2

    for op in ("add", "join", "meet", "star"):
        for a in range(small.size):
            for b in range(small.size):
                v = small.op(op, a, b)
                if v is not None:
                    assert large.op(op, mapped(a), mapped(b)) == mapped(v)


def test_window_bounds():
    with pytest.raises(AlgebraError):
        make_z_window_u(0)
    with pytest.raises(AlgebraError):
        make_z_window_u(33)
    with pytest.raises(AlgebraError):
        make_z_window_uv(40)


def test_product_b2_chain2():
    p = make_product([make_boolean(2), make_chain(2, "truncated")])
    assert p.size == 8
    assert classify(p).al_monoid


def test_product_with_trivial_factor_preserves_checks():
    x = make_chain(3, "max")
    p = make_product([make_boolean(0), x])
    assert p.size == x.size
    assert classify(p).flags() == classify(x).flags()


def test_product_of_chains_has_fixty():
    p = make_product([make_chain(3, "truncated"), make_chain(3, "truncated")])
    assert classify(p).al_monoid
    assert is_chain(p) is False
    _, total = find_fixty_triangles(p)
    assert total > 0


def test_product_rejects_partial_and_bounds():
    with pytest.raises(AlgebraError):
        make_product([make_z_window_u(2)])
    with pytest.raises(AlgebraError):
        make_product([])
    with pytest.raises(AlgebraError):
        make_product([make_boolean(1)] * 4)  # too many factors
    with pytest.raises(AlgebraError):
        # 64 * 64 * 2 = 8192 exceeds the size bound (rejected before tabulation)
        make_product([make_chain(64), make_chain(64), make_chain(2)])


def test_model_spec_parse_and_build():
    assert ModelSpec.parse("boolean:2").build() == make_boolean(2)
    assert ModelSpec.parse("chain:4:max").build() == make_chain(4, "max")
    assert ModelSpec.parse("z-u:3").build().size == make_z_window_u(3).size
    with pytest.raises(AlgebraError):
        ModelSpec.parse("nope:1")
    with pytest.raises(AlgebraError):
        ModelSpec.parse("chain:x")
    with pytest.raises(AlgebraError):
        ModelSpec("weird").build()


def test_names_on_windows():
    alg = make_z_window_uv(2)
    assert alg.element_name(alg.size - 1) == "v"
    assert alg.element_name(alg.size - 2) == "u"
    assert alg.element_name(alg.zero) == "0"
