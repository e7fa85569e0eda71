"""Constructors for the standard model families.

* boolean k      -- subsets of a k-set as bitmasks; add = join = OR,
                    meet = AND, star = symmetric difference.
* chain n        -- total order 0 < ... < n-1 with star = |a-b|; the add is
                    either the truncated sum min(a+b, n-1) or the join, and
                    in the join mode star is the least-difference metric
                    (max(a,b) off the diagonal).
* z window u     -- integers -N..N plus an absorbing extra point u whose
                    order relative to the integers is left undefined by
                    default (opt-in flag places u at the bottom); integer
                    cells whose result leaves the window are undefined.
* z window uv    -- integers -N..N plus a bottom u and a top v with
                    u + v = u; the second defining law fails at (v, u).
* product        -- componentwise product of total algebras.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from almg.core import AlgebraError, FiniteAlgebra, PartialAlgebra

MAX_BOOLEAN_K = 4
MAX_CHAIN_N = 64
MAX_WINDOW_RADIUS = 32
MAX_PRODUCT_FACTORS = 3
MAX_PRODUCT_SIZE = 4096

CHAIN_MODES = ("truncated", "max")


def make_boolean(k: int) -> FiniteAlgebra:
    """Boolean algebra on bitmasks of width k."""
    if not 0 <= k <= MAX_BOOLEAN_K:
        raise AlgebraError(f"boolean k must be in [0, {MAX_BOOLEAN_K}], got {k}")
    n = 1 << k
    rng = range(n)
    add = [[a | b for b in rng] for a in rng]
    meet = [[a & b for b in rng] for a in rng]
    star = [[a ^ b for b in rng] for a in rng]
    return FiniteAlgebra(n, 0, add, add, meet, star)


def make_chain(n: int, mode: str = "truncated") -> FiniteAlgebra:
    """Chain 0 < 1 < ... < n-1 with the distance |a-b|."""
    if not 1 <= n <= MAX_CHAIN_N:
        raise AlgebraError(f"chain n must be in [1, {MAX_CHAIN_N}], got {n}")
    if mode not in CHAIN_MODES:
        raise AlgebraError(f"chain mode must be one of {CHAIN_MODES}, got {mode!r}")
    rng = range(n)
    join = [[max(a, b) for b in rng] for a in rng]
    meet = [[min(a, b) for b in rng] for a in rng]
    if mode == "truncated":
        add = [[min(a + b, n - 1) for b in rng] for a in rng]
        star = [[abs(a - b) for b in rng] for a in rng]
    else:
        add = join
        star = [[0 if a == b else max(a, b) for b in rng] for a in rng]
    return FiniteAlgebra(n, 0, add, join, meet, star)


def make_z_window_u(radius: int = 8, u_bottom: bool = False) -> PartialAlgebra:
    """Window of the integers with one absorbing extra point u.

    u + x = u and star(a, u) = u for every a; the order between u and the
    integers is not specified, so the join/meet cells touching u stay
    undefined unless u_bottom places u below everything.
    """
    if not 1 <= radius <= MAX_WINDOW_RADIUS:
        raise AlgebraError(f"window radius must be in [1, {MAX_WINDOW_RADIUS}], got {radius}")
    m = 2 * radius + 1
    n = m + 1
    u = m

    def idx(v):
        return v + radius

    def clip(v):
        return idx(v) if -radius <= v <= radius else None

    add = [[None] * n for _ in range(n)]
    join = [[None] * n for _ in range(n)]
    meet = [[None] * n for _ in range(n)]
    star = [[None] * n for _ in range(n)]
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            add[idx(a)][idx(b)] = clip(a + b)
            join[idx(a)][idx(b)] = idx(max(a, b))
            meet[idx(a)][idx(b)] = idx(min(a, b))
            star[idx(a)][idx(b)] = clip(abs(a - b))
        add[idx(a)][u] = add[u][idx(a)] = u
        star[idx(a)][u] = star[u][idx(a)] = u
        if u_bottom:
            meet[idx(a)][u] = meet[u][idx(a)] = u
            join[idx(a)][u] = join[u][idx(a)] = idx(a)
    add[u][u] = u
    star[u][u] = idx(0)
    join[u][u] = u
    meet[u][u] = u
    names = tuple(str(v) for v in range(-radius, radius + 1)) + ("u",)
    return PartialAlgebra(n, idx(0), add, join, meet, star, names=names)


def make_z_window_uv(radius: int = 8) -> PartialAlgebra:
    """Window of the integers extended by a bottom u and a top v.

    add absorbs into u and v with u + v = u; star sends any pair involving
    u or v to v, except the diagonal.  The stated reading of the extra
    star cells is star(a, u) = star(a, v) = star(u, v) = v for integer a
    and star(u, u) = star(v, v) = 0.
    """
    if not 1 <= radius <= MAX_WINDOW_RADIUS:
        raise AlgebraError(f"window radius must be in [1, {MAX_WINDOW_RADIUS}], got {radius}")
    m = 2 * radius + 1
    n = m + 2
    u = m
    v = m + 1

    def idx(x):
        return x + radius

    def clip(x):
        return idx(x) if -radius <= x <= radius else None

    add = [[None] * n for _ in range(n)]
    join = [[None] * n for _ in range(n)]
    meet = [[None] * n for _ in range(n)]
    star = [[None] * n for _ in range(n)]
    for a in range(-radius, radius + 1):
        ia = idx(a)
        for b in range(-radius, radius + 1):
            add[ia][idx(b)] = clip(a + b)
            join[ia][idx(b)] = idx(max(a, b))
            meet[ia][idx(b)] = idx(min(a, b))
            star[ia][idx(b)] = clip(abs(a - b))
        add[ia][u] = add[u][ia] = u
        add[ia][v] = add[v][ia] = v
        join[ia][u] = join[u][ia] = ia
        meet[ia][u] = meet[u][ia] = u
        join[ia][v] = join[v][ia] = v
        meet[ia][v] = meet[v][ia] = ia
        star[ia][u] = star[u][ia] = v
        star[ia][v] = star[v][ia] = v
    add[u][u] = u
    add[v][v] = v
    add[u][v] = add[v][u] = u
    join[u][u] = meet[u][u] = u
    join[v][v] = meet[v][v] = v
    join[u][v] = join[v][u] = v
    meet[u][v] = meet[v][u] = u
    star[u][u] = star[v][v] = idx(0)
    star[u][v] = star[v][u] = v
    names = tuple(str(x) for x in range(-radius, radius + 1)) + ("u", "v")
    return PartialAlgebra(n, idx(0), add, join, meet, star, names=names)


def make_product(factors: Sequence[FiniteAlgebra]) -> FiniteAlgebra:
    """Componentwise product of total algebras."""
    factors = list(factors)
    if not 1 <= len(factors) <= MAX_PRODUCT_FACTORS:
        raise AlgebraError(f"product takes 1..{MAX_PRODUCT_FACTORS} factors, got {len(factors)}")
    for f in factors:
        if f.is_partial:
            raise AlgebraError("product factors must be total algebras")
    size = 1
    for f in factors:
        size *= f.size
    if size > MAX_PRODUCT_SIZE:
        raise AlgebraError(f"product size {size} exceeds {MAX_PRODUCT_SIZE}")

    def split(i):
        comps = []
        for f in reversed(factors):
            comps.append(i % f.size)
            i //= f.size
        return tuple(reversed(comps))

    def fuse(comps):
        i = 0
        for f, c in zip(factors, comps):
            i = i * f.size + c
        return i

    rng = range(size)
    split_cache = [split(i) for i in rng]
    tables = {}
    for op in ("add", "join", "meet", "star"):
        flats = [f.flat(op) for f in factors]
        t = []
        for i in rng:
            ci = split_cache[i]
            row = []
            for j in rng:
                cj = split_cache[j]
                row.append(fuse([fl[a * f.size + b]
                                 for f, fl, a, b in zip(factors, flats, ci, cj)]))
            t.append(row)
        tables[op] = t
    zero = fuse([f.zero for f in factors])
    names = tuple(
        "(" + ",".join(f.element_name(c) for f, c in zip(factors, split_cache[i])) + ")"
        for i in rng
    )
    return FiniteAlgebra(size, zero, tables["add"], tables["join"],
                         tables["meet"], tables["star"], names=names)


@dataclass
class ModelSpec:
    """Parsed description of one model family instance."""

    family: str
    k: Optional[int] = None
    n: Optional[int] = None
    mode: str = "truncated"
    radius: int = 8
    u_bottom: bool = False
    factors: tuple = ()

    @classmethod
    def parse(cls, text: str) -> "ModelSpec":
        """Parse compact factor syntax: boolean:2, chain:5:max, z-u:4, z-uv:4."""
        parts = text.split(":")
        fam = parts[0]
        try:
            if fam == "boolean" and len(parts) == 2:
                return cls("boolean", k=int(parts[1]))
            if fam == "chain" and len(parts) in (2, 3):
                mode = parts[2] if len(parts) == 3 else "truncated"
                return cls("chain", n=int(parts[1]), mode=mode)
            if fam == "z-u" and len(parts) <= 2:
                return cls("z-u", radius=int(parts[1]) if len(parts) == 2 else 8)
            if fam == "z-uv" and len(parts) <= 2:
                return cls("z-uv", radius=int(parts[1]) if len(parts) == 2 else 8)
        except ValueError:
            raise AlgebraError(f"bad model spec {text!r}") from None
        raise AlgebraError(f"bad model spec {text!r}")

    def build(self):
        if self.family == "boolean":
            return make_boolean(self.k)
        if self.family == "chain":
            return make_chain(self.n, self.mode)
        if self.family == "z-u":
            return make_z_window_u(self.radius, self.u_bottom)
        if self.family == "z-uv":
            return make_z_window_uv(self.radius)
        if self.family == "product":
            return make_product([f.build() if isinstance(f, ModelSpec) else f
                                 for f in self.factors])
        raise AlgebraError(f"unknown model family {self.family!r}")
