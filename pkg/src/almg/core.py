"""Finite algebras as operation tables, and the structural axiom checks.

An algebra is a carrier {0, ..., n-1} with four total (or windowed) binary
operations given by n x n tables: add, join, meet, star.  The order is never
stored; ``a <= b`` is derived as ``meet(a,b) == a`` and its agreement with
join is itself one of the checked laws.  All checks are pure functions of
the tables and report failures as explicit witness tuples in ascending scan
order, so identical inputs always produce identical reports.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from almg import kernels
from almg.kernels import UNDEF

OPS = ("add", "join", "meet", "star")

DEFAULT_WITNESS_CAP = 16


class AlgebraError(ValueError):
    """Structurally invalid table data or out-of-range element index."""


def _normalize_table(size: int, rows, op: str, allow_undef: bool) -> array:
    flat = array("H", [0]) * 0
    if len(rows) != size:
        raise AlgebraError(f"{op}: expected {size} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != size:
            raise AlgebraError(f"{op} row {i}: expected {size} entries, got {len(row)}")
        for j, v in enumerate(row):
            if v is None:
                if not allow_undef:
                    raise AlgebraError(f"{op}[{i}][{j}]: undefined entry in a total algebra")
                flat.append(UNDEF)
            elif isinstance(v, int) and 0 <= v < size:
                flat.append(v)
            else:
                raise AlgebraError(f"{op}[{i}][{j}]: entry {v!r} not in [0, {size})")
    return flat


class _TableAlgebra:
    """Shared table machinery for total and windowed algebras."""

    _allow_undef = False

    def __init__(self, size, zero, add, join, meet, star, names=None):
        if not isinstance(size, int) or size < 1:
            raise AlgebraError(f"size must be a positive integer, got {size!r}")
        if size > 4096:
            raise AlgebraError(f"size {size} exceeds the supported bound 4096")
        if not isinstance(zero, int) or not 0 <= zero < size:
            raise AlgebraError(f"zero {zero!r} is not an element index of [0, {size})")
        self.size = size
        self.zero = zero
        self._flat = {
            op: _normalize_table(size, rows, op, self._allow_undef)
            for op, rows in zip(OPS, (add, join, meet, star))
        }
        if names is not None:
            names = tuple(names)
            if len(names) != size:
                raise AlgebraError(f"names: expected {size} entries, got {len(names)}")
        self.names = names
        self._rows: dict = {}

    @classmethod
    def _from_flat(cls, size, zero, add, join, meet, star, names=None):
        alg = cls.__new__(cls)
        alg.size = size
        alg.zero = zero
        alg._flat = {
            "add": array("H", add),
            "join": array("H", join),
            "meet": array("H", meet),
            "star": array("H", star),
        }
        alg.names = names
        alg._rows = {}
        return alg

    def flat(self, op: str) -> array:
        return self._flat[op]

    def table(self, op: str):
        """Nested tuple view of one operation table (None = undefined)."""
        if op not in self._rows:
            n = self.size
            f = self._flat[op]
            self._rows[op] = tuple(
                tuple(None if f[i * n + j] == UNDEF else f[i * n + j] for j in range(n))
                for i in range(n)
            )
        return self._rows[op]

    @property
    def add(self):
        return self.table("add")

    @property
    def join(self):
        return self.table("join")

    @property
    def meet(self):
        return self.table("meet")

    @property
    def star(self):
        return self.table("star")

    def op(self, name: str, a: int, b: int) -> Optional[int]:
        self._check_index(a)
        self._check_index(b)
        v = self._flat[name][a * self.size + b]
        return None if v == UNDEF else v

    def leq(self, a: int, b: int) -> Optional[bool]:
        """Derived order: meet(a,b) == a.  None when the cell is undefined."""
        m = self.op("meet", a, b)
        return None if m is None else m == a

    def element_name(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def with_entry(self, op: str, i: int, j: int, value: Optional[int]):
        """Copy with one table cell replaced (symmetry is not restored)."""
        if op not in OPS:
            raise AlgebraError(f"unknown operation {op!r}")
        self._check_index(i)
        self._check_index(j)
        if value is not None and not 0 <= value < self.size:
            raise AlgebraError(f"entry {value!r} not in [0, {self.size})")
        if value is None and not self._allow_undef:
            raise AlgebraError("cannot place an undefined entry in a total algebra")
        flats = {name: array("H", f) for name, f in self._flat.items()}
        flats[op][i * self.size + j] = UNDEF if value is None else value
        return type(self)._from_flat(
            self.size, self.zero,
            flats["add"], flats["join"], flats["meet"], flats["star"],
            names=self.names,
        )

    def _check_index(self, a: int) -> None:
        if not isinstance(a, int) or not 0 <= a < self.size:
            raise AlgebraError(f"element index {a!r} not in [0, {self.size})")

    @property
    def is_partial(self) -> bool:
        return any(UNDEF in f for f in self._flat.values())

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.size == other.size
            and self.zero == other.zero
            and all(self._flat[op] == other._flat[op] for op in OPS)
        )

    def __hash__(self):
        return hash((type(self).__name__, self.size, self.zero)
                    + tuple(f.tobytes() for f in self._flat.values()))

    def __repr__(self):
        kind = type(self).__name__
        return f"{kind}(size={self.size}, zero={self.zero})"


class FiniteAlgebra(_TableAlgebra):
    """Total algebra: every table cell holds a valid element index."""

    _allow_undef = False


class PartialAlgebra(_TableAlgebra):
    """Windowed algebra: table cells may be undefined (None).

    Quantified checks skip any instance whose evaluation touches an
    undefined cell and report the skipped count next to the checked count.
    """

    _allow_undef = True


Algebra = Union[FiniteAlgebra, PartialAlgebra]


@dataclass
class CheckReport:
    """Outcome of one axiom or theorem check.

    ``witnesses`` lists offending tuples (possibly truncated at the witness
    cap); ``witness_total`` is always the exact number of failures, so
    ``passed`` holds exactly when ``witness_total == 0``, equivalently when
    ``witnesses`` is empty.  Multi-law checks prefix each witness with the
    name of the violated law.
    """

    name: str
    passed: bool
    witnesses: list
    checked_count: int
    skipped_count: int = 0
    witness_total: int = 0
    extra: dict = field(default_factory=dict)

    def __str__(self):
        state = "pass" if self.passed else f"FAIL ({self.witness_total} witnesses)"
        skip = f", skipped {self.skipped_count}" if self.skipped_count else ""
        return f"{self.name}: {state} [checked {self.checked_count}{skip}]"


def _report(name: str, parts, cap: int, extra=None) -> CheckReport:
    """Merge (law, scan_result) pairs into one report.

    With a single unlabeled part the witnesses stay plain index tuples.
    """
    witnesses = []
    total = checked = skipped = 0
    for law, (wit, t, c, s) in parts:
        total += t
        checked += c
        skipped += s
        for w in wit:
            if len(witnesses) < cap:
                witnesses.append((law, *w) if law else w)
    return CheckReport(
        name=name,
        passed=total == 0,
        witnesses=witnesses,
        checked_count=checked,
        skipped_count=skipped,
        witness_total=total,
        extra=extra or {},
    )


def leq(alg: Algebra, a: int, b: int) -> Optional[bool]:
    """Derived order relation of the algebra; None if undefined."""
    return alg.leq(a, b)


def check_lattice(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Join/meet laws: commutativity, associativity, idempotence, both
    absorption identities, and agreement of the two derived orders."""
    n = alg.size
    j, m = alg.flat("join"), alg.flat("meet")
    cap = max(1, witness_cap)
    parts = [
        ("join_commutative", kernels.scan_commutative(n, j, cap)),
        ("meet_commutative", kernels.scan_commutative(n, m, cap)),
        ("join_associative", kernels.scan_associative(n, j, cap)),
        ("meet_associative", kernels.scan_associative(n, m, cap)),
        ("join_idempotent", kernels.scan_idempotent(n, j, cap)),
        ("meet_idempotent", kernels.scan_idempotent(n, m, cap)),
        ("absorption_join_meet", kernels.scan_absorption(n, j, m, cap)),
        ("absorption_meet_join", kernels.scan_absorption(n, m, j, cap)),
        ("order_consistency", kernels.scan_order_consistency(n, j, m, cap)),
    ]
    return _report("lattice", parts, cap)


def check_monoid(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """add is commutative, associative, has the zero element as identity,
    and is isotone in each argument."""
    n = alg.size
    a, m = alg.flat("add"), alg.flat("meet")
    cap = max(1, witness_cap)
    parts = [
        ("add_commutative", kernels.scan_commutative(n, a, cap)),
        ("add_associative", kernels.scan_associative(n, a, cap)),
        ("add_identity", kernels.scan_identity(n, a, alg.zero, cap)),
        ("add_isotone", kernels.scan_isotone(n, a, m, cap)),
    ]
    return _report("monoid", parts, cap)


def check_metric(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """star is a metric for the derived order: positive off the diagonal
    and zero on it, symmetric, and satisfying the triangle inequality."""
    n = alg.size
    cap = max(1, witness_cap)
    st, ad, me = alg.flat("star"), alg.flat("add"), alg.flat("meet")
    parts = [
        ("m1_positivity", kernels.scan_m1(n, st, me, alg.zero, cap)),
        ("m2_symmetry", kernels.scan_commutative(n, st, cap)),
        ("m3_triangle", kernels.scan_m3(n, st, ad, me, cap)),
    ]
    return _report("metric", parts, cap)


def check_contractions(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Every translation x -> a th x of every operation is a contraction:
    (a th x) * (a th y) <= x * y.  Witnesses are (op, a, x, y)."""
    n = alg.size
    cap = max(1, witness_cap)
    wit, total, checked, skipped = kernels.scan_contractions(
        n, alg.flat("add"), alg.flat("join"), alg.flat("meet"), alg.flat("star"), cap
    )
    witnesses = [(OPS[th], a, x, y) for th, a, x, y in wit]
    return CheckReport("contractions", total == 0, witnesses, checked, skipped, total)


def check_axiom2(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Second defining law: star(a, meet(a,b)) + b == join(a,b)."""
    n = alg.size
    cap = max(1, witness_cap)
    res = kernels.scan_axiom2(
        n, alg.flat("add"), alg.flat("join"), alg.flat("meet"), alg.flat("star"), cap
    )
    return _report("axiom2", [(None, res)], cap)


def check_axiom4(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Fourth defining law: meet(star(a, a v b), star(b, a v b)) == zero."""
    n = alg.size
    cap = max(1, witness_cap)
    res = kernels.scan_axiom4(
        n, alg.flat("join"), alg.flat("meet"), alg.flat("star"), alg.zero, cap
    )
    return _report("axiom4", [(None, res)], cap)


def check_semiregular(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """a >= zero implies star(a, zero) == a."""
    n = alg.size
    cap = max(1, witness_cap)
    res = kernels.scan_semiregular(n, alg.flat("star"), alg.flat("meet"), alg.zero, cap)
    return _report("semiregular", [(None, res)], cap)


def check_star_monotone(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """a <= b implies star(a,c) <= star(b,c).

    Not guaranteed by the defining laws; violations are findings, not
    structural failures.
    """
    n = alg.size
    cap = max(1, witness_cap)
    res = kernels.scan_monotone_star(n, alg.flat("star"), alg.flat("meet"), cap)
    return _report("star_monotone", [(None, res)], cap)


def check_add_distributive(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Optional: add distributes over join and meet.  Only isotonicity is
    part of the monoid check; distributivity is reported separately."""
    n = alg.size
    cap = max(1, witness_cap)
    ad = alg.flat("add")
    parts = [
        ("add_over_join", kernels.scan_add_distributive(n, ad, alg.flat("join"), cap)),
        ("add_over_meet", kernels.scan_add_distributive(n, ad, alg.flat("meet"), cap)),
    ]
    return _report("add_distributive", parts, cap)


STRUCTURAL_CHECKS = {
    "lattice": check_lattice,
    "monoid": check_monoid,
    "metric": check_metric,
    "contractions": check_contractions,
    "axiom2": check_axiom2,
    "axiom4": check_axiom4,
    "semiregular": check_semiregular,
}


@dataclass
class Classification:
    """Which classes of the hierarchy the algebra lands in."""

    reports: dict
    autometrized: bool
    lattice_ordered_autometrized: bool
    semiregular: bool
    representable: bool
    al_monoid: bool

    def flags(self) -> dict:
        return {
            "autometrized": self.autometrized,
            "lattice_ordered_autometrized": self.lattice_ordered_autometrized,
            "semiregular": self.semiregular,
            "representable": self.representable,
            "al_monoid": self.al_monoid,
        }


def classify(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> Classification:
    """Run every structural check and aggregate the class memberships.

    AL-monoid = lattice & monoid & metric & axiom2 & contractions & axiom4.
    On a windowed algebra the verdicts cover the defined instances only.
    """
    reports = {name: fn(alg, witness_cap) for name, fn in STRUCTURAL_CHECKS.items()}
    ok = {name: r.passed for name, r in reports.items()}
    add_comm_ok = kernels.scan_commutative(alg.size, alg.flat("add"), 1)[1] == 0
    lattice_ordered = ok["lattice"] and ok["monoid"] and ok["metric"]
    semi = lattice_ordered and ok["semiregular"]
    return Classification(
        reports=reports,
        autometrized=add_comm_ok and ok["metric"],
        lattice_ordered_autometrized=lattice_ordered,
        semiregular=semi,
        representable=semi and ok["contractions"],
        al_monoid=(lattice_ordered and ok["axiom2"]
                   and ok["contractions"] and ok["axiom4"]),
    )


def drl_difference(alg: Algebra, a: int, b: int) -> Optional[int]:
    """Least x with b + x >= a, or None when no least such x exists.

    On windowed algebras only elements whose sum and comparison are defined
    can enter the candidate set, so absence is a window-faithful verdict.
    """
    alg._check_index(a)
    alg._check_index(b)
    n = alg.size
    candidates = []
    for x in range(n):
        s = alg.op("add", b, x)
        if s is None:
            continue
        if alg.leq(a, s) is True:
            candidates.append(x)
    for x0 in candidates:
        if all(alg.leq(x0, x) is True for x in candidates):
            return x0
    return None


def is_drl_compatible(alg: Algebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """star agrees with the least-difference construction:
    star(a,b) == join(a - b, b - a) with both differences defined."""
    n = alg.size
    cap = max(1, witness_cap)
    witnesses = []
    total = checked = skipped = 0
    diffs = [[drl_difference(alg, a, b) for b in range(n)] for a in range(n)]
    for a in range(n):
        for b in range(n):
            d1 = diffs[a][b]
            d2 = diffs[b][a]
            if d1 is None or d2 is None:
                checked += 1
                total += 1
                if len(witnesses) < cap:
                    witnesses.append((a, b))
                continue
            j = alg.op("join", d1, d2)
            s = alg.op("star", a, b)
            if j is None or s is None:
                skipped += 1
                continue
            checked += 1
            if j != s:
                total += 1
                if len(witnesses) < cap:
                    witnesses.append((a, b))
    return CheckReport("drl_compatible", total == 0, witnesses, checked, skipped, total)
