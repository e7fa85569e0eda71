"""Exact interval-set model: normalization, operations, demos, grid oracle."""

import random
from fractions import Fraction

import pytest

from almg.intervals import (
    IntervalSet,
    demo_axiom4_failure,
    demo_fixty_nonzero_meet,
    iv_add,
    iv_check_axiom2_sample,
    iv_intersect,
    iv_star,
    iv_union,
)

P = IntervalSet.parse


def test_touching_intervals_merge():
    assert iv_union(P("[0,2]"), P("[2,3]")) == P("[0,3]")


def test_normalization_is_idempotent():
    raw = [(3, 4), (Fraction(1, 2), 2), (2, 3), (5, 5)]
    once = IntervalSet.from_pairs(raw)
    again = IntervalSet.from_pairs(once.pairs)
    assert once == again
    assert once == P("[1/2,4]+[5,5]")


def test_negative_length_rejected():
    with pytest.raises(ValueError):
        IntervalSet.from_pairs([(2, 1)])


def test_intersect_examples():
    assert iv_intersect(P("[0,2]"), P("[1,3]")) == P("[1,2]")
    assert iv_intersect(P("[0,1]+[2,3]"), P("[1,3]")) == P("[1,1]+[2,3]")


def test_star_reproduces_singleton_witness():
    x, y = P("[0,2]"), P("[2,3]")
    j = iv_union(x, y)
    assert iv_star(x, j) == P("[2,3]")
    assert iv_star(y, j) == P("[0,2]")
    assert iv_intersect(iv_star(x, j), iv_star(y, j)) == P("[2,2]")


def test_star_identities():
    a = P("[0,1]+[2,3]")
    assert iv_star(a, a).is_empty
    assert iv_star(a, IntervalSet.empty()) == a
    b = P("[1/2,5/2]")
    assert iv_star(a, b) == iv_star(b, a)


def test_star_of_overlapping_intervals():
    assert iv_star(P("[0,2]"), P("[1,3]")) == P("[0,1]+[2,3]")


def test_star_with_point_removed_closes_up():
    # [0,2] minus the single point {1} is dense in [0,2]
    assert iv_star(P("[0,2]"), P("[1,1]")) == P("[0,2]")


def test_demo_axiom4_failure():
    rep = demo_axiom4_failure()
    assert rep.passed
    assert rep.extra["witness"] == "[2,2]"
    assert rep.extra["x_star_join"] == "[2,3]"
    assert rep.extra["y_star_join"] == "[0,2]"


def test_demo_fixty_nonzero_meet():
    rep = demo_fixty_nonzero_meet()
    assert rep.passed
    assert rep.extra["A_star_B"] == "[0,1]+[2,3]"
    assert rep.extra["B_star_C"] == "[0,2]"
    assert rep.extra["C_star_A"] == "[1,3]"
    assert rep.extra["meet"] == "[1,1]+[2,2]"


def test_axiom2_samples():
    pairs = [
        (P("[0,2]"), P("[2,3]")),
        (P("[0,1]+[2,3]"), P("[0,1]+[2,3]")),
        (P("[0,1]+[2,3]"), P("[1,2]")),
    ]
    rep = iv_check_axiom2_sample(pairs)
    assert rep.passed
    assert rep.checked_count == 3


def test_add_is_union():
    a, b = P("[0,1]"), P("[3,4]")
    assert iv_add(a, b) == iv_union(a, b) == P("[0,1]+[3,4]")


def test_parse_rationals_and_str_round_trip():
    a = P("[-1/2,3/4]+[2,2]")
    assert str(a) == "[-1/2,3/4]+[2,2]"
    assert IntervalSet.parse(str(a)) == a
    assert str(IntervalSet.empty()) == "empty"
    assert IntervalSet.parse("empty").is_empty


def test_parse_errors():
    for bad in ("[1,2", "(1,2)", "[a,b]", "[1;2]", ""):
        with pytest.raises(ValueError):
            IntervalSet.parse(bad)


def _random_grid_set(rng, step=Fraction(1, 64), lo=-10, hi=10, max_parts=4):
    cells = []
    for _ in range(rng.randint(0, max_parts)):
        a = rng.randint(lo * 64, hi * 64)
        b = a + rng.randint(0, 96)
        cells.append((a * step, min(b * step, Fraction(hi))))
    return IntervalSet.from_pairs(cells)


def test_star_agrees_with_grid_sampling_oracle():
    # Sample the symmetric difference at half-grid resolution: a grid point
    # lies in the closure exactly when the symmetric difference meets one of
    # {p - h, p, p + h} with h half the endpoint grid step.
    rng = random.Random(20240817)
    step = Fraction(1, 64)
    h = step / 2
    for _ in range(25):
        a = _random_grid_set(rng)
        b = _random_grid_set(rng)
        exact = iv_star(a, b)

        def in_symdiff(q):
            return a.contains(q) != b.contains(q)

        for k in range(-10 * 64, 10 * 64 + 1):
            p = k * step
            oracle = in_symdiff(p - h) or in_symdiff(p) or in_symdiff(p + h)
            assert exact.contains(p) == oracle, (str(a), str(b), p)


def test_union_intersect_against_membership_oracle():
    rng = random.Random(97)
    step = Fraction(1, 64)
    for _ in range(10):
        a = _random_grid_set(rng)
        b = _random_grid_set(rng)
        u = iv_union(a, b)
        i = iv_intersect(a, b)
        for k in range(-10 * 64, 10 * 64 + 1, 7):
            p = k * step
            assert u.contains(p) == (a.contains(p) or b.contains(p))
            assert i.contains(p) == (a.contains(p) and b.contains(p))
