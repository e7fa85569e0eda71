"""Enumeration of small algebras and counterexample search.

The engine walks lattice substrates (all labeled lattices on n elements,
or one representative per isomorphism class), every choice of the zero
element, and backtracks over symmetric add and star tables with
constraint propagation on the required axioms.  Commutativity of add and
symmetry of star are structural in the generated space; everything else
is a pluggable constraint family.  Every emitted algebra is re-verified
against the independent table checkers, so no propagation shortcut can
leak an invalid model.

Results are deterministic: tasks get statically partitioned budgets and
the output is sorted by canonical form, so thread count never changes a
report.
"""

from __future__ import annotations

import itertools
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Optional, Sequence

from almg import kernels
from almg.core import (
    STRUCTURAL_CHECKS,
    AlgebraError,
    FiniteAlgebra,
)

DEFAULT_BUDGET = 10 ** 8
MAX_SIZE = 5

AXIOM_BITS = {
    "lattice": 0,
    "monoid": kernels.F_MONOID,
    "metric": kernels.F_METRIC,
    "axiom2": kernels.F_AXIOM2,
    "axiom4": kernels.F_AXIOM4,
    "contractions": kernels.F_CONTRACTIONS,
    "semiregular": kernels.F_SEMIREGULAR,
}

AL_MONOID_AXIOMS = frozenset(
    {"lattice", "monoid", "metric", "contractions", "axiom2", "axiom4"})


def _mask(names: Iterable[str]) -> int:
    m = 0
    for name in names:
        m |= AXIOM_BITS[name]
    return m


def _pack(values) -> bytes:
    return struct.pack(f"<{len(values)}H", *values)


def serialize(alg: FiniteAlgebra) -> bytes:
    """Raw structural serialization: size, zero, then the four tables."""
    out = [struct.pack("<HH", alg.size, alg.zero)]
    for op in ("add", "join", "meet", "star"):
        out.append(_pack(alg.flat(op)))
    return b"".join(out)


def canonical_form(alg: FiniteAlgebra) -> bytes:
    """Least serialization over all relabelings that send zero to 0.

    Two total algebras have equal canonical forms exactly when some
    relabeling matching their zeros carries one onto the other.
    """
    if alg.is_partial:
        raise AlgebraError("canonical forms are defined for total algebras only")
    n = alg.size
    if n > 8:
        raise AlgebraError("canonical form is limited to carriers of size <= 8")
    flats = [alg.flat(op) for op in ("add", "join", "meet", "star")]
    others = [e for e in range(n) if e != alg.zero]
    best = None
    perm = [0] * n
    for targets in itertools.permutations(range(1, n)):
        perm[alg.zero] = 0
        for src, dst in zip(others, targets):
            perm[src] = dst
        buf = []
        for f in flats:
            t = [0] * (n * n)
            for a in range(n):
                pa = perm[a] * n
                for b in range(n):
                    t[pa + perm[b]] = perm[f[a * n + b]]
            buf.append(_pack(t))
        cand = struct.pack("<H", n) + b"".join(buf)
        if best is None or cand < best:
            best = cand
    return best


def _lattice_canonical(n: int, join_flat, meet_flat) -> bytes:
    best = None
    for perm in itertools.permutations(range(n)):
        buf = []
        for f in (join_flat, meet_flat):
            t = [0] * (n * n)
            for a in range(n):
                pa = perm[a] * n
                for b in range(n):
                    t[pa + perm[b]] = perm[f[a * n + b]]
            buf.append(_pack(t))
        cand = b"".join(buf)
        if best is None or cand < best:
            best = cand
    return best


def enumerate_lattice_orders(n: int, dedup: bool = True):
    """All lattices on n labeled elements as (join, meet) table pairs.

    Partial orders are generated by orienting each unordered pair as <, >,
    or incomparable and keeping the transitive, lattice-complete ones.
    With dedup (the default) one representative per isomorphism class
    remains.  Output order is deterministic.
    """
    if not 1 <= n <= MAX_SIZE:
        raise AlgebraError(f"lattice enumeration supports sizes 1..{MAX_SIZE}, got {n}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    found = []
    for assignment in itertools.product((0, 1, 2), repeat=len(pairs)):
        le = [[a == b for b in range(n)] for a in range(n)]
        for (i, j), v in zip(pairs, assignment):
            if v == 0:
                le[i][j] = True
            elif v == 1:
                le[j][i] = True
        if any(le[a][b] and le[b][c] and not le[a][c]
               for a in range(n) for b in range(n) for c in range(n)):
            continue
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        ok = True
        for a in range(n):
            for b in range(n):
                ub = [k for k in range(n) if le[a][k] and le[b][k]]
                lub = next((k for k in ub if all(le[k][m] for m in ub)), None)
                lb = [k for k in range(n) if le[k][a] and le[k][b]]
                glb = next((k for k in lb if all(le[m][k] for m in lb)), None)
                if lub is None or glb is None:
                    ok = False
                    break
                join[a][b] = lub
                meet[a][b] = glb
            if not ok:
                break
        if ok:
            found.append((tuple(map(tuple, join)), tuple(map(tuple, meet))))

    def flat(rows):
        return [v for row in rows for v in row]

    keyed = [
        (_lattice_canonical(n, flat(j), flat(m)), _pack(flat(j)) + _pack(flat(m)), (j, m))
        for j, m in found
    ]
    keyed.sort(key=lambda item: (item[0], item[1]))
    if not dedup:
        return [jm for _, _, jm in keyed]
    out = []
    seen = set()
    for canon, _, jm in keyed:
        if canon not in seen:
            seen.add(canon)
            out.append(jm)
    return out


@dataclass
class SearchSpec:
    """What the engine must find: carrier size, axioms that must hold,
    axioms that must fail, a node-expansion budget, and whether to collapse
    isomorphic results."""

    size: int
    require: FrozenSet[str] = frozenset()
    violate: FrozenSet[str] = frozenset()
    budget: int = DEFAULT_BUDGET
    dedup: bool = True

    def __post_init__(self):
        self.require = frozenset(self.require)
        self.violate = frozenset(self.violate)
        if not 2 <= self.size <= MAX_SIZE:
            raise AlgebraError(f"search size must be in [2, {MAX_SIZE}], got {self.size}")
        unknown = (self.require | self.violate) - set(AXIOM_BITS)
        if unknown:
            raise AlgebraError(f"unknown axiom names: {sorted(unknown)}")
        if self.require & self.violate:
            raise AlgebraError(
                f"require and violate overlap: {sorted(self.require & self.violate)}")
        if self.budget < 1:
            raise AlgebraError("budget must be positive")


@dataclass
class EnumerationResult:
    """Algebras found plus the work accounting.

    ``exhausted`` records whether the search space was fully covered;
    a budget cut or a first-hit stop reports False.
    """

    size: int
    algebras: list
    forms: list
    found: int
    nodes_expanded: int
    pruned: int
    dedup_collapsed: int
    exhausted: bool


def _run_completion_search(size, require, violate, budget, dedup, threads,
                           first_only=False, disable=frozenset()):
    lattices = enumerate_lattice_orders(size, dedup=dedup)
    if "lattice" in violate:
        # every generated substrate is a lattice, so nothing can qualify
        return EnumerationResult(size, [], [], 0, 0, 0, 0, True)
    require_mask = _mask(require)
    violate_mask = _mask(violate)
    disable_mask = _mask(disable)
    tasks = [(li, zero) for li in range(len(lattices)) for zero in range(size)]
    flats = []
    for join_rows, meet_rows in lattices:
        jf = [v for row in join_rows for v in row]
        mf = [v for row in meet_rows for v in row]
        flats.append((jf, mf))
    q, r = divmod(budget, len(tasks))
    budgets = [q + (1 if i < r else 0) for i in range(len(tasks))]
    limit = 1 if first_only else 0

    def run_task(idx):
        li, zero = tasks[idx]
        jf, mf = flats[li]
        return kernels.complete_tables(
            size, zero, jf, mf, require_mask, violate_mask,
            budgets[idx], limit, disable_mask)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            outcomes = list(ex.map(run_task, range(len(tasks))))
    else:
        outcomes = [run_task(i) for i in range(len(tasks))]

    # with first_only, discard everything after the first producing task so
    # the report does not depend on how many tasks actually ran
    cut = len(tasks)
    if first_only:
        for i, (completions, _, _, _) in enumerate(outcomes):
            if completions:
                cut = i + 1
                break

    algebras = []
    nodes = pruned = 0
    exhausted = True
    for i in range(cut):
        completions, tnodes, tpruned, texh = outcomes[i]
        nodes += tnodes
        pruned += tpruned
        exhausted = exhausted and texh
        li, zero = tasks[i]
        jf, mf = flats[li]
        for add_t, star_t in completions:
            alg = FiniteAlgebra._from_flat(size, zero, add_t, jf, mf, star_t)
            for name in sorted(require):
                if not STRUCTURAL_CHECKS[name](alg, 1).passed:
                    raise RuntimeError(
                        f"search soundness violation: emitted algebra fails required {name}")
            for name in sorted(violate):
                if STRUCTURAL_CHECKS[name](alg, 1).passed:
                    raise RuntimeError(
                        f"search soundness violation: emitted algebra passes violated {name}")
            algebras.append(alg)
    if first_only and algebras:
        algebras = algebras[:1]
        exhausted = False

    found = len(algebras)
    keyed = sorted(
        ((canonical_form(a), serialize(a), a) for a in algebras),
        key=lambda item: (item[0], item[1]),
    )
    collapsed = 0
    out_algs = []
    out_forms = []
    seen = set()
    for canon, _, alg in keyed:
        if dedup:
            if canon in seen:
                collapsed += 1
                continue
            seen.add(canon)
        out_algs.append(alg)
        out_forms.append(canon)
    return EnumerationResult(
        size=size,
        algebras=out_algs,
        forms=out_forms,
        found=found,
        nodes_expanded=nodes,
        pruned=pruned,
        dedup_collapsed=collapsed,
        exhausted=exhausted,
    )


def enumerate_al_monoids(n: int, budget: int = DEFAULT_BUDGET, dedup: bool = True,
                         threads: int = 1, disable=frozenset()) -> EnumerationResult:
    """All AL-monoids on a carrier of size n (up to isomorphism by default).

    ``disable`` names axiom families whose constraint propagation is turned
    off; they are still enforced on every leaf, so the emitted set never
    changes, only the node counts (a diagnostic knob).
    """
    if not 1 <= n <= MAX_SIZE:
        raise AlgebraError(f"enumeration supports sizes 1..{MAX_SIZE}, got {n}")
    require = AL_MONOID_AXIOMS
    return _run_completion_search(n, require, frozenset(), budget, dedup, threads,
                                  first_only=False, disable=frozenset(disable))


def search_counterexample(spec: SearchSpec, threads: int = 1,
                          first_only: bool = True) -> EnumerationResult:
    """Algebras satisfying every required axiom and failing every violated
    one; by default stops at the first hit.  An exhausted result with
    found == 0 certifies that no example exists in the searched space."""
    return _run_completion_search(
        spec.size, spec.require, spec.violate, spec.budget, spec.dedup,
        threads, first_only=first_only)
