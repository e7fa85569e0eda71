"""Finite unions of closed rational intervals.

This realizes the lattice of closed subsets of the line at desk scale:
join is set union, meet is set intersection, add is union again, and the
distance of two sets is the topological closure of their symmetric
difference.  All endpoint arithmetic is exact (fractions.Fraction);
endpoint equality is load-bearing, so no floating point appears anywhere.

Normal form: intervals sorted by left endpoint, pairwise disjoint, with a
strictly positive gap between consecutive intervals (touching closed
intervals merge).  Degenerate intervals [p,p] are first-class points.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from almg.core import CheckReport

Pair = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class IntervalSet:
    pairs: Tuple[Pair, ...]

    @classmethod
    def from_pairs(cls, raw: Iterable[Sequence]) -> "IntervalSet":
        """Normalize arbitrary closed intervals into the canonical form."""
        items = []
        for lo, hi in raw:
            lo = Fraction(lo)
            hi = Fraction(hi)
            if lo > hi:
                raise ValueError(f"interval [{lo},{hi}] has negative length")
            items.append((lo, hi))
        items.sort()
        merged: list = []
        for lo, hi in items:
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        return cls(tuple(merged))

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @classmethod
    def parse(cls, text: str) -> "IntervalSet":
        """Literal syntax: [0,2]+[5/2,3] with rational or integer endpoints;
        the empty set is written 'empty'."""
        text = text.strip()
        if text == "empty":
            return cls.empty()
        pairs = []
        for part in text.split("+"):
            part = part.strip()
            m = re.fullmatch(
                r"\[\s*(-?\d+(?:/\d+)?)\s*,\s*(-?\d+(?:/\d+)?)\s*\]", part)
            if not m:
                raise ValueError(f"bad interval literal {part!r}")
            pairs.append((Fraction(m.group(1)), Fraction(m.group(2))))
        return cls.from_pairs(pairs)

    @property
    def is_empty(self) -> bool:
        return not self.pairs

    def contains(self, q) -> bool:
        q = Fraction(q)
        return any(lo <= q <= hi for lo, hi in self.pairs)

    def endpoints(self):
        out = []
        for lo, hi in self.pairs:
            out.append(lo)
            out.append(hi)
        return out

    def __str__(self):
        if not self.pairs:
            return "empty"

        def fmt(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        return "+".join(f"[{fmt(lo)},{fmt(hi)}]" for lo, hi in self.pairs)


def iv_union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return IntervalSet.from_pairs(list(a.pairs) + list(b.pairs))


def iv_intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    out = []
    for lo1, hi1 in a.pairs:
        for lo2, hi2 in b.pairs:
            lo = max(lo1, lo2)
            hi = min(hi1, hi2)
            if lo <= hi:
                out.append((lo, hi))
    return IntervalSet.from_pairs(out)


def iv_star(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """Closure of the symmetric difference.

    Membership of both sets is constant on the open gaps between
    consecutive endpoint values, so the symmetric difference decomposes
    exactly into endpoint singletons and open gap intervals; taking the
    closure turns each present open gap into its closed hull.
    """
    points = sorted({*a.endpoints(), *b.endpoints()})
    if not points:
        return IntervalSet.empty()
    pieces = []
    for p in points:
        if a.contains(p) != b.contains(p):
            pieces.append((p, p))
    for p, q in zip(points, points[1:]):
        mid = (p + q) / 2
        if a.contains(mid) != b.contains(mid):
            pieces.append((p, q))
    return IntervalSet.from_pairs(pieces)


def iv_add(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """The monoid operation of the closed-sets model is union."""
    return iv_union(a, b)


def demo_axiom4_failure() -> CheckReport:
    """Recompute meet(star(x, x v y), star(y, x v y)) for x = [0,2] and
    y = [2,3]; the fourth defining law demands zero, the model yields the
    singleton {2}."""
    x = IntervalSet.parse("[0,2]")
    y = IntervalSet.parse("[2,3]")
    j = iv_union(x, y)
    w = iv_intersect(iv_star(x, j), iv_star(y, j))
    expected = IntervalSet.parse("[2,2]")
    passed = w == expected and not w.is_empty
    return CheckReport(
        name="intervals_axiom4_failure",
        passed=passed,
        witnesses=[] if passed else [("unexpected_witness", str(w))],
        checked_count=1,
        witness_total=0 if passed else 1,
        extra={
            "x": str(x),
            "y": str(y),
            "x_star_join": str(iv_star(x, j)),
            "y_star_join": str(iv_star(y, j)),
            "witness": str(w),
        },
    )


def demo_fixty_nonzero_meet() -> CheckReport:
    """The triangle A = [0,2], B = [1,3], C = [0,1]+[2,3] has fixty while
    the triple intersection is {1} + {2}, not empty."""
    a = IntervalSet.parse("[0,2]")
    b = IntervalSet.parse("[1,3]")
    c = IntervalSet.parse("[0,1]+[2,3]")
    ab = iv_star(a, b)
    bc = iv_star(b, c)
    ca = iv_star(c, a)
    meet = iv_intersect(iv_intersect(a, b), c)
    expected_meet = IntervalSet.parse("[1,1]+[2,2]")
    fixty = ab == c and bc == a and ca == b
    passed = fixty and meet == expected_meet and not meet.is_empty
    witnesses = []
    if not fixty:
        witnesses.append(("fixty_broken", str(ab), str(bc), str(ca)))
    if meet != expected_meet or meet.is_empty:
        witnesses.append(("unexpected_meet", str(meet)))
    return CheckReport(
        name="intervals_fixty_nonzero_meet",
        passed=passed,
        witnesses=witnesses,
        checked_count=1,
        witness_total=len(witnesses),
        extra={
            "A": str(a),
            "B": str(b),
            "C": str(c),
            "A_star_B": str(ab),
            "B_star_C": str(bc),
            "C_star_A": str(ca),
            "meet": str(meet),
        },
    )


def iv_check_axiom2_sample(pairs: Sequence[Tuple[IntervalSet, IntervalSet]]) -> CheckReport:
    """Check star(a, meet(a,b)) + meet(a,b) == a on the supplied pairs."""
    witnesses = []
    checked = 0
    for a, b in pairs:
        checked += 1
        m = iv_intersect(a, b)
        lhs = iv_union(iv_star(a, m), m)
        if lhs != a:
            witnesses.append((str(a), str(b), str(lhs)))
    return CheckReport(
        name="intervals_axiom2_sample",
        passed=not witnesses,
        witnesses=witnesses,
        checked_count=checked,
        witness_total=len(witnesses),
    )
