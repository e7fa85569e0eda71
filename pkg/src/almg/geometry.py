"""Betweenness relations, triangles, linearity, and the theorem suite.

Predicates are evaluated on any algebra; the theorem suite additionally
asserts, on algebras that classify as AL-monoids, every statement that is
supposed to hold there (no equilateral triangles, transitivity t2, the
quadrilateral identity, lattice betweenness implying metric betweenness,
the ptolemaic inequalities, the fixty characterization, the chain
criteria, and B-linearity implying D-linearity).  On windowed algebras
every quantified statement is restricted to defined instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from almg import kernels
from almg.core import (
    DEFAULT_WITNESS_CAP,
    Algebra,
    AlgebraError,
    CheckReport,
    Classification,
    check_star_monotone,
    classify,
)


@dataclass(frozen=True)
class Triangle:
    """Three pairwise-distinct vertices."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if len({self.a, self.b, self.c}) != 3:
            raise AlgebraError(f"triangle vertices must be distinct: {(self.a, self.b, self.c)}")

    @property
    def vertices(self):
        return (self.a, self.b, self.c)


def metric_between(alg: Algebra, a: int, x: int, b: int) -> Optional[bool]:
    """x lies metrically between a and b: star(a,x) + star(x,b) == star(a,b)."""
    sax = alg.op("star", a, x)
    sxb = alg.op("star", x, b)
    sab = alg.op("star", a, b)
    if sax is None or sxb is None or sab is None:
        return None
    t = alg.op("add", sax, sxb)
    return None if t is None else t == sab


def lattice_between(alg: Algebra, a: int, b: int, c: int) -> Optional[bool]:
    """b lies lattice-between a and c: meet(a,c) <= b <= join(a,c)."""
    m = alg.op("meet", a, c)
    j = alg.op("join", a, c)
    if m is None or j is None:
        return None
    lo = alg.leq(m, b)
    hi = alg.leq(b, j)
    if lo is None or hi is None:
        return None
    return lo and hi


def has_fixty(alg: Algebra, t: Triangle) -> Optional[bool]:
    """Each side of the triangle equals the opposite vertex."""
    sab = alg.op("star", t.a, t.b)
    sbc = alg.op("star", t.b, t.c)
    sca = alg.op("star", t.c, t.a)
    if sab is None or sbc is None or sca is None:
        return None
    return sab == t.c and sbc == t.a and sca == t.b


def is_subgeometry(alg: Algebra, elems: Iterable[int]) -> Optional[bool]:
    """True when the element set is closed under star."""
    s = sorted(set(elems))
    for a in s:
        alg._check_index(a)
    undecided = False
    for a in s:
        for b in s:
            v = alg.op("star", a, b)
            if v is None:
                undecided = True
            elif v not in s:
                return False
    return None if undecided else True


def is_chain(alg: Algebra) -> Optional[bool]:
    """All pairs comparable in the derived order."""
    undecided = False
    for a in range(alg.size):
        for b in range(a + 1, alg.size):
            m = alg.op("meet", a, b)
            if m is None:
                undecided = True
            elif m != a and m != b:
                return False
    return None if undecided else True


def _incomparable_pair(alg: Algebra):
    for a in range(alg.size):
        for b in range(a + 1, alg.size):
            m = alg.op("meet", a, b)
            if m is not None and m != a and m != b:
                return (a, b)
    return None


def find_fixty_triangles(alg: Algebra, cap: int = DEFAULT_WITNESS_CAP):
    wit, total, _, _ = kernels.scan_fixty(alg.size, alg.flat("star"), max(1, cap))
    return [Triangle(*w) for w in wit], total


def find_equilateral(alg: Algebra) -> Optional[Triangle]:
    """First triangle with three equal sides, or None."""
    wit, total, _, _ = kernels.scan_equilateral(alg.size, alg.flat("star"), 1)
    return Triangle(*wit[0]) if wit else None


def find_isosceles(alg: Algebra, cap: int = 0):
    """All triangles with at least two equal sides (cap=0 means unlimited)."""
    limit = cap if cap else alg.size ** 3
    wit, total, _, _ = kernels.scan_isosceles(alg.size, alg.flat("star"), max(1, limit))
    return [Triangle(*w) for w in wit]


def check_no_equilateral(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    wit, total, checked, skipped = kernels.scan_equilateral(
        alg.size, alg.flat("star"), max(1, witness_cap))
    return CheckReport("no_equilateral", total == 0, list(wit), checked, skipped, total)


def check_t1(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    wit, total, checked, skipped = kernels.scan_t1(
        alg.size, alg.flat("add"), alg.flat("star"), max(1, witness_cap))
    return CheckReport("t1", total == 0, list(wit), checked, skipped, total)


def check_t2(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    wit, total, checked, skipped = kernels.scan_t2(
        alg.size, alg.flat("add"), alg.flat("star"), max(1, witness_cap))
    return CheckReport("t2", total == 0, list(wit), checked, skipped, total)


def check_beta(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Special inner property: M(a,b,c) and M(a,c,b) force b == c."""
    wit, total, checked, skipped = kernels.scan_beta(
        alg.size, alg.flat("add"), alg.flat("star"), max(1, witness_cap))
    return CheckReport("beta", total == 0, list(wit), checked, skipped, total)


def check_L_implies_M(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    wit, total, checked, skipped = kernels.scan_lattice_implies_metric(
        alg.size, alg.flat("add"), alg.flat("join"), alg.flat("meet"),
        alg.flat("star"), max(1, witness_cap))
    return CheckReport("lattice_implies_metric", total == 0, list(wit), checked, skipped, total)


def check_quadrilateral_lemma(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Three statements over all triples: the quadrilateral identity
    star(a,b)+star(b,c) == star(a^c,b)+star(b,avc), the betweenness
    transfer M(a,b,c) iff M(a^c,b,avc), and a<=b<=c implying M(a,b,c)."""
    n = alg.size
    cap = max(1, witness_cap)
    ad, jo, me, st = (alg.flat(op) for op in ("add", "join", "meet", "star"))
    parts = [
        ("quad_identity", kernels.scan_quad_identity(n, ad, jo, me, st, cap)),
        ("between_meetjoin", kernels.scan_between_meetjoin(n, ad, jo, me, st, cap)),
        ("monotone_between", kernels.scan_monotone_between(n, ad, me, st, cap)),
    ]
    witnesses = []
    total = checked = skipped = 0
    for law, (wit, t, c, s) in parts:
        total += t
        checked += c
        skipped += s
        for w in wit:
            if len(witnesses) < cap:
                witnesses.append((law, *w))
    return CheckReport("quadrilateral", total == 0, witnesses, checked, skipped, total)


def check_ptolemaic(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """For every quadruple, each pairing's meet of opposite distances is
    bounded by the sum of the other two pairings' meets."""
    wit, total, checked, skipped = kernels.scan_ptolemaic(
        alg.size, alg.flat("add"), alg.flat("meet"), alg.flat("star"), max(1, witness_cap))
    witnesses = [(f"ineq{k + 1}", a, b, c, d) for k, a, b, c, d in wit]
    return CheckReport("ptolemaic", total == 0, witnesses, checked, skipped, total)


def fixty_equivalence_check(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Fixty holds for a triangle exactly when its three joins agree and the
    triple meet is zero; a fixty triangle moreover has a fixty derived
    triangle of sides and spans a subgeometry together with zero."""
    n = alg.size
    cap = max(1, witness_cap)
    witnesses = []
    total = checked = skipped = 0

    def emit(law, tri):
        nonlocal total
        total += 1
        if len(witnesses) < cap:
            witnesses.append((law, *tri))

    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                tri = Triangle(a, b, c)
                fx = has_fixty(alg, tri)
                ja = alg.op("join", a, b)
                jb = alg.op("join", b, c)
                jc = alg.op("join", c, a)
                mab = alg.op("meet", a, b)
                mabc = None if mab is None else alg.op("meet", mab, c)
                if fx is None or ja is None or jb is None or jc is None or mabc is None:
                    skipped += 1
                    continue
                eq = ja == jb == jc and mabc == alg.zero
                checked += 1
                if fx:
                    if not eq:
                        emit("fixty_without_joins_meet", (a, b, c))
                    sab = alg.op("star", a, b)
                    sbc = alg.op("star", b, c)
                    sca = alg.op("star", c, a)
                    derived = has_fixty(alg, Triangle(sab, sbc, sca))
                    if derived is not True:
                        emit("fixty_without_derived_fixty", (a, b, c))
                    sub = is_subgeometry(alg, (alg.zero, a, b, c))
                    if sub is not True:
                        emit("fixty_without_subgeometry", (a, b, c))
                elif eq:
                    emit("joins_meet_without_fixty", (a, b, c))
    return CheckReport("fixty_equivalence", total == 0, witnesses, checked, skipped, total)


def check_chain_theorems(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """A chain carries no fixty triangle; a non-chain carries one; and an
    algebra whose triangles are all isosceles is a chain."""
    cap = max(1, witness_cap)
    chain = is_chain(alg)
    fwit, ftotal, fchecked, fskipped = kernels.scan_fixty(alg.size, alg.flat("star"), cap)
    iwit, itotal, ichecked, iskipped = kernels.scan_isosceles(alg.size, alg.flat("star"), 1)
    witnesses = []
    total = 0
    skipped = fskipped
    if chain is None:
        skipped += 1
    elif chain and ftotal > 0:
        total += ftotal
        for w in fwit:
            if len(witnesses) < cap:
                witnesses.append(("chain_with_fixty", *w))
    elif not chain and ftotal == 0:
        if fskipped > 0:
            skipped += 1
        else:
            total += 1
            pair = _incomparable_pair(alg)
            witnesses.append(("nonchain_without_fixty", *pair))
    all_isosceles = ichecked > 0 and itotal == ichecked and iskipped == 0
    if all_isosceles and chain is False:
        total += 1
        pair = _incomparable_pair(alg)
        if len(witnesses) < cap:
            witnesses.append(("all_isosceles_nonchain", *pair))
    extra = {
        "is_chain": chain,
        "fixty_count": ftotal,
        "triangle_count": fchecked,
        "isosceles_count": itotal,
    }
    return CheckReport("chain_theorems", total == 0, witnesses, fchecked, skipped, total, extra)


def check_four_way_equivalence(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Four conditions evaluated independently, asserted to agree:

    1. lattice betweenness coincides with metric betweenness,
    2. metric betweenness has transitivity t1,
    3. a relative to join(b,c) with star(a,b) >= star(a,c) forces b <= c,
       evaluated under both the ``a <= join(b,c)`` and the ``a >= join(b,c)``
       hypothesis (the two are reported separately, either may match),
    4. the special inner property (beta).
    """
    n = alg.size
    c1 = True
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lb = lattice_between(alg, a, b, c)
                mb = metric_between(alg, a, b, c)
                if lb is None or mb is None:
                    continue
                if lb != mb:
                    c1 = False
    c2 = check_t1(alg, 1).passed
    c4 = check_beta(alg, 1).passed

    def cancel(upper: bool) -> bool:
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    j = alg.op("join", b, c)
                    if j is None:
                        continue
                    hyp = alg.leq(a, j) if upper else alg.leq(j, a)
                    sab = alg.op("star", a, b)
                    sac = alg.op("star", a, c)
                    if hyp is None or sab is None or sac is None:
                        continue
                    ge = alg.leq(sac, sab)
                    con = alg.leq(b, c)
                    if ge is None or con is None:
                        continue
                    if hyp and ge and not con:
                        return False
        return True

    c3_printed = cancel(upper=True)
    c3_proof = cancel(upper=False)
    flags = {
        "lattice_iff_metric": c1,
        "t1": c2,
        "cancellation_printed": c3_printed,
        "cancellation_proof": c3_proof,
        "beta": c4,
    }
    passed = (c1 == c2 == c4) and (c3_printed == c1 or c3_proof == c1)
    witnesses = [] if passed else [("conditions_disagree",)]
    return CheckReport("four_way_equivalence", passed, witnesses,
                       checked_count=4, skipped_count=0,
                       witness_total=0 if passed else 1, extra=flags)


def _validate_tuple(alg: Algebra, elems: Sequence[int]):
    elems = tuple(elems)
    if len(elems) < 3:
        raise AlgebraError(f"linearity needs at least 3 elements, got {len(elems)}")
    if len(elems) > 6:
        raise AlgebraError(f"labeling search is capped at 6 elements, got {len(elems)}")
    if len(set(elems)) != len(elems):
        raise AlgebraError(f"elements must be pairwise distinct: {elems}")
    for e in elems:
        alg._check_index(e)
    return elems


def is_B_linear(alg: Algebra, elems: Sequence[int], relation: str = "metric"):
    """First labeling with betweenness for every index triple, or None.

    relation selects metric (default) or lattice betweenness.
    """
    elems = _validate_tuple(alg, elems)
    if relation not in ("metric", "lattice"):
        raise AlgebraError(f"relation must be 'metric' or 'lattice', got {relation!r}")
    between = metric_between if relation == "metric" else lattice_between
    k = len(elems)
    for perm in itertools.permutations(elems):
        if all(
            between(alg, perm[i], perm[j], perm[l]) is True
            for i in range(k)
            for j in range(i + 1, k)
            for l in range(j + 1, k)
        ):
            return perm
    return None


def is_D_linear(alg: Algebra, elems: Sequence[int]):
    """First labeling whose end-to-end distance is the sum of consecutive
    distances, or None."""
    elems = _validate_tuple(alg, elems)
    k = len(elems)
    for perm in itertools.permutations(elems):
        total = alg.op("star", perm[0], perm[1])
        ok = total is not None
        for i in range(1, k - 1):
            if not ok:
                break
            step = alg.op("star", perm[i], perm[i + 1])
            if step is None:
                ok = False
                break
            total = alg.op("add", total, step)
            if total is None:
                ok = False
        if ok and total == alg.op("star", perm[0], perm[k - 1]):
            return perm
    return None


def check_b_implies_d(alg: Algebra, sizes=(3, 4),
                      witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """B-linearity implies D-linearity over all element subsets of the
    given sizes."""
    cap = max(1, witness_cap)
    witnesses = []
    total = checked = 0
    for k in sizes:
        for sub in itertools.combinations(range(alg.size), k):
            checked += 1
            if is_B_linear(alg, sub) is not None and is_D_linear(alg, sub) is None:
                total += 1
                if len(witnesses) < cap:
                    witnesses.append(sub)
    return CheckReport("b_implies_d", total == 0, witnesses, checked, 0, total)


def is_metrically_convex(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Every pair a != b admits a third point metrically between them."""
    wit, total, checked, skipped = kernels.scan_convexity(
        alg.size, alg.flat("add"), alg.flat("star"), max(1, witness_cap))
    return CheckReport("metrically_convex", total == 0, list(wit), checked, skipped, total)


def atoms(alg: Algebra):
    """Elements strictly above zero with nothing strictly between."""
    out = []
    for c in range(alg.size):
        if c == alg.zero or alg.leq(alg.zero, c) is not True:
            continue
        isolated = True
        for x in range(alg.size):
            if x == alg.zero or x == c:
                continue
            if alg.leq(alg.zero, x) is True and alg.leq(x, c) is True:
                isolated = False
                break
        if isolated:
            out.append(c)
    return tuple(out)


EVALUATION_CHECKS = ("t1", "t2", "beta", "ptolemaic", "metrically_convex", "no_equilateral")
ASSERTION_CHECKS = (
    "no_equilateral",
    "t2",
    "ptolemaic",
    "fixty_equivalence",
    "chain_theorems",
    "lattice_implies_metric",
    "quadrilateral",
    "four_way_equivalence",
    "b_implies_d",
)


@dataclass
class TheoremSuiteReport:
    classification: Classification
    reports: dict
    findings: dict
    is_chain: Optional[bool]
    has_t1: bool
    has_t2: bool
    is_ptolemaic: bool
    is_metrically_convex: bool
    atoms: tuple
    fixty_triangles: list
    fixty_total: int
    equilateral: Optional[Triangle]
    theorem_names: tuple

    @property
    def theorems_passed(self) -> Optional[bool]:
        if not self.theorem_names:
            return None
        return all(self.reports[name].passed for name in self.theorem_names)


def run_theorem_suite(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP,
                      tuple_scan_limit: int = 8) -> TheoremSuiteReport:
    """Classify the algebra, evaluate every geometric predicate, and, when
    it is an AL-monoid, assert the full theorem set.

    Algebras that do not classify as AL-monoids get the predicate
    evaluations only.  The B/D-linearity subset scan is factorial and runs
    only for carriers up to tuple_scan_limit.
    """
    cls = classify(alg, witness_cap)
    reports = {}
    reports["t1"] = check_t1(alg, witness_cap)
    reports["t2"] = check_t2(alg, witness_cap)
    reports["beta"] = check_beta(alg, witness_cap)
    reports["ptolemaic"] = check_ptolemaic(alg, witness_cap)
    reports["metrically_convex"] = is_metrically_convex(alg, witness_cap)
    reports["no_equilateral"] = check_no_equilateral(alg, witness_cap)
    theorem_names = ()
    if cls.al_monoid:
        reports["fixty_equivalence"] = fixty_equivalence_check(alg, witness_cap)
        reports["chain_theorems"] = check_chain_theorems(alg, witness_cap)
        reports["lattice_implies_metric"] = check_L_implies_M(alg, witness_cap)
        reports["quadrilateral"] = check_quadrilateral_lemma(alg, witness_cap)
        reports["four_way_equivalence"] = check_four_way_equivalence(alg, witness_cap)
        names = list(ASSERTION_CHECKS)
        if alg.size <= tuple_scan_limit:
            reports["b_implies_d"] = check_b_implies_d(alg, witness_cap=witness_cap)
        else:
            names.remove("b_implies_d")
        theorem_names = tuple(names)
    findings = {"star_monotone": check_star_monotone(alg, witness_cap)}
    fixty_list, fixty_total = find_fixty_triangles(alg, witness_cap)
    return TheoremSuiteReport(
        classification=cls,
        reports=reports,
        findings=findings,
        is_chain=is_chain(alg),
        has_t1=reports["t1"].passed,
        has_t2=reports["t2"].passed,
        is_ptolemaic=reports["ptolemaic"].passed,
        is_metrically_convex=reports["metrically_convex"].passed,
        atoms=atoms(alg),
        fixty_triangles=fixty_list,
        fixty_total=fixty_total,
        equilateral=find_equilateral(alg),
        theorem_names=theorem_names,
    )
