"""Shared fixtures and the independent brute-force enumeration oracle."""

import itertools

import pytest

from almg import FiniteAlgebra, make_boolean, make_chain


@pytest.fixture
def b2():
    return make_boolean(2)


@pytest.fixture
def chain3():
    return make_chain(3, "truncated")


@pytest.fixture
def chain3_max():
    return make_chain(3, "max")


def brute_force_al_monoids(n):
    """Every labeled AL-monoid on [0, n) by direct full-table loops.

    Deliberately naive and independent of the search engine: each law is a
    spelled-out quantifier loop over raw tuples, with no constraint
    propagation and no shared kernel code.  Feasible for n <= 3.
    """
    rng = range(n)
    out = []
    for join_cells in itertools.product(rng, repeat=n * n):
        join = [list(join_cells[i * n:(i + 1) * n]) for i in rng]
        if any(join[a][a] != a for a in rng):
            continue
        if any(join[a][b] != join[b][a] for a in rng for b in rng):
            continue
        if any(join[join[a][b]][c] != join[a][join[b][c]]
               for a in rng for b in rng for c in rng):
            continue
        le = [[join[a][b] == b for b in rng] for a in rng]
        meet = [[None] * n for _ in rng]
        lattice_ok = True
        for a in rng:
            for b in rng:
                lbs = [k for k in rng if le[k][a] and le[k][b]]
                glbs = [k for k in lbs if all(le[m][k] for m in lbs)]
                if len(glbs) != 1:
                    lattice_ok = False
                    break
                meet[a][b] = glbs[0]
            if not lattice_ok:
                break
        if not lattice_ok:
            continue
        for zero in rng:
            for add_cells in itertools.product(rng, repeat=n * n):
                add = [list(add_cells[i * n:(i + 1) * n]) for i in rng]
                if any(add[zero][a] != a or add[a][zero] != a for a in rng):
                    continue
                if any(add[a][b] != add[b][a] for a in rng for b in rng):
                    continue
                if any(add[add[a][b]][c] != add[a][add[b][c]]
                       for a in rng for b in rng for c in rng):
                    continue
                if any(le[a][b] and not le[add[a][c]][add[b][c]]
                       for a in rng for b in rng for c in rng):
                    continue
                for star_cells in itertools.product(rng, repeat=n * n):
                    star = [list(star_cells[i * n:(i + 1) * n]) for i in rng]
                    if any((star[a][b] == zero) != (a == b) for a in rng for b in rng):
                        continue
                    if any(not le[zero][star[a][b]] for a in rng for b in rng):
                        continue
                    if any(star[a][b] != star[b][a] for a in rng for b in rng):
                        continue
                    if any(not le[star[a][b]][add[star[a][c]][star[c][b]]]
                           for a in rng for b in rng for c in rng):
                        continue
                    if any(add[star[a][meet[a][b]]][b] != join[a][b]
                           for a in rng for b in rng):
                        continue
                    if any(meet[star[a][join[a][b]]][star[b][join[a][b]]] != zero
                           for a in rng for b in rng):
                        continue
                    contraction_ok = True
                    for table in (add, join, meet, star):
                        if any(not le[star[table[a][x]][table[a][y]]][star[x][y]]
                               for a in rng for x in rng for y in rng):
                            contraction_ok = False
                            break
                    if not contraction_ok:
                        continue
                    out.append(FiniteAlgebra(n, zero, add, join, meet, star))
    return out


@pytest.fixture(scope="session")
def brute2():
    return brute_force_al_monoids(2)


@pytest.fixture(scope="session")
def brute3():
    return brute_force_al_monoids(3)
