# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled scan and search kernels.

Line-parallel twin of almg._kernels_py: same functions, same arguments,
same return values, same counts.  tests/test_kernel_parity.py holds the
two implementations to identical outputs; consult the pure module for the
semantics.
"""

from cpython cimport array
import array

UNDEF = 0xFFFF
cdef unsigned short UND = 0xFFFF

F_MONOID = 1
F_METRIC = 2
F_AXIOM2 = 4
F_AXIOM4 = 8
F_CONTRACTIONS = 16
F_SEMIREGULAR = 32

ALL_FAMILIES = (F_MONOID, F_METRIC, F_AXIOM2, F_AXIOM4, F_CONTRACTIONS, F_SEMIREGULAR)

cdef int C_MONOID = 1
cdef int C_METRIC = 2
cdef int C_AXIOM2 = 4
cdef int C_AXIOM4 = 8
cdef int C_CONTRACTIONS = 16
cdef int C_SEMIREGULAR = 32


def scan_commutative(int n, const unsigned short[:] t, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b
    cdef unsigned short x, y
    for a in range(n):
        for b in range(a + 1, n):
            x = t[a * n + b]
            y = t[b * n + a]
            if x == UND or y == UND:
                skipped += 1
                continue
            checked += 1
            if x != y:
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_associative(int n, const unsigned short[:] t, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c
    cdef unsigned short ab, abc, bc, a_bc
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            for c in range(n):
                if ab == UND:
                    skipped += 1
                    continue
                abc = t[ab * n + c]
                bc = t[b * n + c]
                if abc == UND or bc == UND:
                    skipped += 1
                    continue
                a_bc = t[a * n + bc]
                if a_bc == UND:
                    skipped += 1
                    continue
                checked += 1
                if abc != a_bc:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_idempotent(int n, const unsigned short[:] t, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a
    cdef unsigned short x
    for a in range(n):
        x = t[a * n + a]
        if x == UND:
            skipped += 1
            continue
        checked += 1
        if x != a:
            total += 1
            if len(wit) < cap:
                wit.append((a,))
    return wit, total, checked, skipped


def scan_absorption(int n, const unsigned short[:] outer, const unsigned short[:] inner, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b
    cdef unsigned short v, w
    for a in range(n):
        for b in range(n):
            v = inner[a * n + b]
            if v == UND:
                skipped += 1
                continue
            w = outer[a * n + v]
            if w == UND:
                skipped += 1
                continue
            checked += 1
            if w != a:
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_order_consistency(int n, const unsigned short[:] join, const unsigned short[:] meet, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b
    cdef unsigned short m, j
    for a in range(n):
        for b in range(n):
            m = meet[a * n + b]
            j = join[a * n + b]
            if m == UND or j == UND:
                skipped += 1
                continue
            checked += 1
            if (m == a) != (j == b):
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_identity(int n, const unsigned short[:] t, int zero, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a
    cdef unsigned short x, y
    for a in range(n):
        x = t[zero * n + a]
        y = t[a * n + zero]
        if x == UND or y == UND:
            skipped += 1
            continue
        checked += 1
        if x != a or y != a:
            total += 1
            if len(wit) < cap:
                wit.append((a,))
    return wit, total, checked, skipped


def scan_isotone(int n, const unsigned short[:] add, const unsigned short[:] meet, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c
    cdef unsigned short m, u, v, w
    for a in range(n):
        for b in range(n):
            m = meet[a * n + b]
            for c in range(n):
                if m == UND:
                    skipped += 1
                    continue
                if m != a:
                    checked += 1
                    continue
                u = add[a * n + c]
                v = add[b * n + c]
                if u == UND or v == UND:
                    skipped += 1
                    continue
                w = meet[u * n + v]
                if w == UND:
                    skipped += 1
                    continue
                checked += 1
                if w != u:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_add_distributive(int n, const unsigned short[:] add, const unsigned short[:] lat, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c
    cdef unsigned short ab, bc, ac, lhs, rhs
    for a in range(n):
        for b in range(n):
            ab = add[a * n + b]
            for c in range(n):
                bc = lat[b * n + c]
                ac = add[a * n + c]
                if ab == UND or bc == UND or ac == UND:
                    skipped += 1
                    continue
                lhs = add[a * n + bc]
                rhs = lat[ab * n + ac]
                if lhs == UND or rhs == UND:
                    skipped += 1
                    continue
                checked += 1
                if lhs != rhs:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_m1(int n, const unsigned short[:] star, const unsigned short[:] meet, int zero, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b
    cdef unsigned short s, p
    for a in range(n):
        for b in range(n):
            s = star[a * n + b]
            if s == UND:
                skipped += 1
                continue
            p = meet[zero * n + s]
            if p == UND:
                skipped += 1
                continue
            checked += 1
            if p != zero or (s == zero) != (a == b):
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_m3(int n, const unsigned short[:] star, const unsigned short[:] add,
            const unsigned short[:] meet, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c
    cdef unsigned short sab, sac, scb, rhs, m
    for a in range(n):
        for b in range(n):
            sab = star[a * n + b]
            for c in range(n):
                if sab == UND:
                    skipped += 1
                    continue
                sac = star[a * n + c]
                scb = star[c * n + b]
                if sac == UND or scb == UND:
                    skipped += 1
                    continue
                rhs = add[sac * n + scb]
                if rhs == UND:
                    skipped += 1
                    continue
                m = meet[sab * n + rhs]
                if m == UND:
                    skipped += 1
                    continue
                checked += 1
                if m != sab:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_axiom2(int n, const unsigned short[:] add, const unsigned short[:] join,
                const unsigned short[:] meet, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b
    cdef unsigned short m, s, t, j
    for a in range(n):
        for b in range(n):
            m = meet[a * n + b]
            if m == UND:
                skipped += 1
                continue
            s = star[a * n + m]
            if s == UND:
                skipped += 1
                continue
            t = add[s * n + b]
            j = join[a * n + b]
            if t == UND or j == UND:
                skipped += 1
                continue
            checked += 1
            if t != j:
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_axiom4(int n, const unsigned short[:] join, const unsigned short[:] meet,
                const unsigned short[:] star, int zero, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b
    cdef unsigned short j, s1, s2, m
    for a in range(n):
        for b in range(a, n):
            j = join[a * n + b]
            if j == UND:
                skipped += 1
                continue
            s1 = star[a * n + j]
            s2 = star[b * n + j]
            if s1 == UND or s2 == UND:
                skipped += 1
                continue
            m = meet[s1 * n + s2]
            if m == UND:
                skipped += 1
                continue
            checked += 1
            if m != zero:
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_contractions(int n, const unsigned short[:] add, const unsigned short[:] join,
                      const unsigned short[:] meet, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int th, a, x, y
    cdef unsigned short ax, ay, s1, s2, m
    cdef const unsigned short[:] t
    for th in range(4):
        if th == 0:
            t = add
        elif th == 1:
            t = join
        elif th == 2:
            t = meet
        else:
            t = star
        for a in range(n):
            for x in range(n):
                ax = t[a * n + x]
                for y in range(n):
                    if ax == UND:
                        skipped += 1
                        continue
                    ay = t[a * n + y]
                    if ay == UND:
                        skipped += 1
                        continue
                    s1 = star[ax * n + ay]
                    s2 = star[x * n + y]
                    if s1 == UND or s2 == UND:
                        skipped += 1
                        continue
                    m = meet[s1 * n + s2]
                    if m == UND:
                        skipped += 1
                        continue
                    checked += 1
                    if m != s1:
                        total += 1
                        if len(wit) < cap:
                            wit.append((th, a, x, y))
    return wit, total, checked, skipped


def scan_semiregular(int n, const unsigned short[:] star, const unsigned short[:] meet,
                     int zero, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a
    cdef unsigned short m, s
    for a in range(n):
        m = meet[zero * n + a]
        if m == UND:
            skipped += 1
            continue
        if m != zero:
            checked += 1
            continue
        s = star[a * n + zero]
        if s == UND:
            skipped += 1
            continue
        checked += 1
        if s != a:
            total += 1
            if len(wit) < cap:
                wit.append((a,))
    return wit, total, checked, skipped


def scan_monotone_star(int n, const unsigned short[:] star, const unsigned short[:] meet, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c
    cdef unsigned short m, s1, s2, w
    for a in range(n):
        for b in range(n):
            m = meet[a * n + b]
            for c in range(n):
                if m == UND:
                    skipped += 1
                    continue
                if m != a:
                    checked += 1
                    continue
                s1 = star[a * n + c]
                s2 = star[b * n + c]
                if s1 == UND or s2 == UND:
                    skipped += 1
                    continue
                w = meet[s1 * n + s2]
                if w == UND:
                    skipped += 1
                    continue
                checked += 1
                if w != s1:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


cdef inline int _between(int n, const unsigned short[:] add, const unsigned short[:] star,
                         int a, int x, int b):
    cdef unsigned short sax = star[a * n + x]
    cdef unsigned short sxb = star[x * n + b]
    cdef unsigned short sab = star[a * n + b]
    cdef unsigned short t
    if sax == UND or sxb == UND or sab == UND:
        return 2
    t = add[sax * n + sxb]
    if t == UND:
        return 2
    return 1 if t == sab else 0


def scan_t1(int n, const unsigned short[:] add, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c, d, h1, h2, cc
    for a in range(n):
        for b in range(n):
            for c in range(n):
                h1 = _between(n, add, star, a, b, c)
                for d in range(n):
                    if h1 == 0:
                        checked += 1
                        continue
                    h2 = _between(n, add, star, a, d, b)
                    if h2 == 0:
                        checked += 1
                        continue
                    if h1 == 2 or h2 == 2:
                        skipped += 1
                        continue
                    cc = _between(n, add, star, d, b, c)
                    if cc == 2:
                        skipped += 1
                        continue
                    checked += 1
                    if cc == 0:
                        total += 1
                        if len(wit) < cap:
                            wit.append((a, b, c, d))
    return wit, total, checked, skipped


def scan_t2(int n, const unsigned short[:] add, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c, d, h1, h2, cc
    for a in range(n):
        for b in range(n):
            for c in range(n):
                h1 = _between(n, add, star, a, b, c)
                for d in range(n):
                    if h1 == 0:
                        checked += 1
                        continue
                    h2 = _between(n, add, star, a, d, b)
                    if h2 == 0:
                        checked += 1
                        continue
                    if h1 == 2 or h2 == 2:
                        skipped += 1
                        continue
                    cc = _between(n, add, star, a, d, c)
                    if cc == 2:
                        skipped += 1
                        continue
                    checked += 1
                    if cc == 0:
                        total += 1
                        if len(wit) < cap:
                            wit.append((a, b, c, d))
    return wit, total, checked, skipped


def scan_beta(int n, const unsigned short[:] add, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c, h1, h2
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if b == c:
                    checked += 1
                    continue
                h1 = _between(n, add, star, a, b, c)
                if h1 == 0:
                    checked += 1
                    continue
                h2 = _between(n, add, star, a, c, b)
                if h2 == 0:
                    checked += 1
                    continue
                if h1 == 2 or h2 == 2:
                    skipped += 1
                    continue
                checked += 1
                total += 1
                if len(wit) < cap:
                    wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_lattice_implies_metric(int n, const unsigned short[:] add, const unsigned short[:] join,
                                const unsigned short[:] meet, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c, cc
    cdef unsigned short mac, jac, lo, hi
    for a in range(n):
        for b in range(n):
            for c in range(n):
                mac = meet[a * n + c]
                jac = join[a * n + c]
                if mac == UND or jac == UND:
                    skipped += 1
                    continue
                lo = meet[mac * n + b]
                hi = meet[b * n + jac]
                if lo == UND or hi == UND:
                    skipped += 1
                    continue
                if lo != mac or hi != b:
                    checked += 1
                    continue
                cc = _between(n, add, star, a, b, c)
                if cc == 2:
                    skipped += 1
                    continue
                checked += 1
                if cc == 0:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_quad_identity(int n, const unsigned short[:] add, const unsigned short[:] join,
                       const unsigned short[:] meet, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c
    cdef unsigned short sab, sbc, mac, jac, lhs, s1, s2, rhs
    for a in range(n):
        for b in range(n):
            for c in range(n):
                sab = star[a * n + b]
                sbc = star[b * n + c]
                mac = meet[a * n + c]
                jac = join[a * n + c]
                if sab == UND or sbc == UND or mac == UND or jac == UND:
                    skipped += 1
                    continue
                lhs = add[sab * n + sbc]
                s1 = star[mac * n + b]
                s2 = star[b * n + jac]
                if lhs == UND or s1 == UND or s2 == UND:
                    skipped += 1
                    continue
                rhs = add[s1 * n + s2]
                if rhs == UND:
                    skipped += 1
                    continue
                checked += 1
                if lhs != rhs:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_between_meetjoin(int n, const unsigned short[:] add, const unsigned short[:] join,
                          const unsigned short[:] meet, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c, lhs, rhs
    cdef unsigned short mac, jac
    for a in range(n):
        for b in range(n):
            for c in range(n):
                mac = meet[a * n + c]
                jac = join[a * n + c]
                if mac == UND or jac == UND:
                    skipped += 1
                    continue
                lhs = _between(n, add, star, a, b, c)
                rhs = _between(n, add, star, mac, b, jac)
                if lhs == 2 or rhs == 2:
                    skipped += 1
                    continue
                checked += 1
                if lhs != rhs:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_monotone_between(int n, const unsigned short[:] add, const unsigned short[:] meet,
                          const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c, cc
    cdef unsigned short mab, mbc
    for a in range(n):
        for b in range(n):
            mab = meet[a * n + b]
            for c in range(n):
                if mab == UND:
                    skipped += 1
                    continue
                if mab != a:
                    checked += 1
                    continue
                mbc = meet[b * n + c]
                if mbc == UND:
                    skipped += 1
                    continue
                if mbc != b:
                    checked += 1
                    continue
                cc = _between(n, add, star, a, b, c)
                if cc == 2:
                    skipped += 1
                    continue
                checked += 1
                if cc == 0:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_ptolemaic(int n, const unsigned short[:] add, const unsigned short[:] meet,
                   const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c, d
    cdef unsigned short sab, sac, sbc, sad, sbd, scd
    cdef unsigned short p1, p2, p3, r1, r2, r3, q1, q2, q3
    for a in range(n):
        for b in range(n):
            sab = star[a * n + b]
            for c in range(n):
                sac = star[a * n + c]
                sbc = star[b * n + c]
                for d in range(n):
                    sad = star[a * n + d]
                    sbd = star[b * n + d]
                    scd = star[c * n + d]
                    if (sab == UND or sac == UND or sbc == UND
                            or sad == UND or sbd == UND or scd == UND):
                        skipped += 1
                        continue
                    p1 = meet[sab * n + scd]
                    p2 = meet[sac * n + sbd]
                    p3 = meet[sad * n + sbc]
                    if p1 == UND or p2 == UND or p3 == UND:
                        skipped += 1
                        continue
                    r1 = add[p2 * n + p3]
                    r2 = add[p1 * n + p3]
                    r3 = add[p1 * n + p2]
                    if r1 == UND or r2 == UND or r3 == UND:
                        skipped += 1
                        continue
                    q1 = meet[p1 * n + r1]
                    q2 = meet[p2 * n + r2]
                    q3 = meet[p3 * n + r3]
                    if q1 == UND or q2 == UND or q3 == UND:
                        skipped += 1
                        continue
                    checked += 1
                    if q1 != p1:
                        total += 1
                        if len(wit) < cap:
                            wit.append((0, a, b, c, d))
                    elif q2 != p2:
                        total += 1
                        if len(wit) < cap:
                            wit.append((1, a, b, c, d))
                    elif q3 != p3:
                        total += 1
                        if len(wit) < cap:
                            wit.append((2, a, b, c, d))
    return wit, total, checked, skipped


def scan_fixty(int n, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c
    cdef unsigned short sab, sbc, sca
    for a in range(n):
        for b in range(a + 1, n):
            sab = star[a * n + b]
            for c in range(b + 1, n):
                sbc = star[b * n + c]
                sca = star[c * n + a]
                if sab == UND or sbc == UND or sca == UND:
                    skipped += 1
                    continue
                checked += 1
                if sab == c and sbc == a and sca == b:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_equilateral(int n, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c
    cdef unsigned short sab, sbc, sca
    for a in range(n):
        for b in range(a + 1, n):
            sab = star[a * n + b]
            for c in range(b + 1, n):
                sbc = star[b * n + c]
                sca = star[c * n + a]
                if sab == UND or sbc == UND or sca == UND:
                    skipped += 1
                    continue
                checked += 1
                if sab == sbc and sbc == sca:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_isosceles(int n, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, c
    cdef unsigned short sab, sbc, sca
    for a in range(n):
        for b in range(a + 1, n):
            sab = star[a * n + b]
            for c in range(b + 1, n):
                sbc = star[b * n + c]
                sca = star[c * n + a]
                if sab == UND or sbc == UND or sca == UND:
                    skipped += 1
                    continue
                checked += 1
                if sab == sbc or sbc == sca or sab == sca:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_convexity(int n, const unsigned short[:] add, const unsigned short[:] star, int cap):
    cdef list wit = []
    cdef long total = 0, checked = 0, skipped = 0
    cdef int a, b, x, st
    cdef bint ok, undecided
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            ok = False
            undecided = False
            for x in range(n):
                if x == a or x == b:
                    continue
                st = _between(n, add, star, a, x, b)
                if st == 1:
                    ok = True
                    break
                if st == 2:
                    undecided = True
            if ok:
                checked += 1
            elif undecided:
                skipped += 1
            else:
                checked += 1
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


cdef class _Completer:
    cdef int n, zero, limit
    cdef int prune_mask, deferred, violate_mask
    cdef long long budget, nodes, pruned
    cdef bint truncated, stop
    cdef const unsigned short[:] join, meet
    cdef unsigned short[:] addw, starw
    cdef int[:] cell_i, cell_j, cell_star
    cdef int ncells
    cdef list completions

    cdef bint family_ok(self, int fam):
        cdef int n = self.n
        cdef int zero = self.zero
        cdef const unsigned short[:] join = self.join
        cdef const unsigned short[:] meet = self.meet
        cdef unsigned short[:] addw = self.addw
        cdef unsigned short[:] starw = self.starw
        cdef int a, b, c, th, x, y
        cdef unsigned short v, ab, abc, bc, a_bc, u, w, s, t
        cdef unsigned short sab, sac, scb, rhs, j, s1, s2, ax, ay
        cdef unsigned short[:] tb
        if fam == C_MONOID:
            for a in range(n):
                v = addw[zero * n + a]
                if v != UND and v != a:
                    return False
            for a in range(n):
                for b in range(n):
                    ab = addw[a * n + b]
                    if ab == UND:
                        continue
                    for c in range(n):
                        abc = addw[ab * n + c]
                        bc = addw[b * n + c]
                        if abc == UND or bc == UND:
                            continue
                        a_bc = addw[a * n + bc]
                        if a_bc != UND and abc != a_bc:
                            return False
            for a in range(n):
                for b in range(n):
                    if meet[a * n + b] != a:
                        continue
                    for c in range(n):
                        u = addw[a * n + c]
                        v = addw[b * n + c]
                        if u == UND or v == UND:
                            continue
                        if meet[u * n + v] != u:
                            return False
            return True
        if fam == C_METRIC:
            for a in range(n):
                for b in range(n):
                    s = starw[a * n + b]
                    if s == UND:
                        continue
                    if meet[zero * n + s] != zero:
                        return False
                    if (s == zero) != (a == b):
                        return False
            for a in range(n):
                for b in range(n):
                    sab = starw[a * n + b]
                    if sab == UND:
                        continue
                    for c in range(n):
                        sac = starw[a * n + c]
                        scb = starw[c * n + b]
                        if sac == UND or scb == UND:
                            continue
                        rhs = addw[sac * n + scb]
                        if rhs == UND:
                            continue
                        if meet[sab * n + rhs] != sab:
                            return False
            return True
        if fam == C_AXIOM2:
            for a in range(n):
                for b in range(n):
                    s = starw[a * n + meet[a * n + b]]
                    if s == UND:
                        continue
                    t = addw[s * n + b]
                    if t == UND:
                        continue
                    if t != join[a * n + b]:
                        return False
            return True
        if fam == C_AXIOM4:
            for a in range(n):
                for b in range(a, n):
                    j = join[a * n + b]
                    s1 = starw[a * n + j]
                    if s1 == UND:
                        continue
                    s2 = starw[b * n + j]
                    if s2 == UND:
                        continue
                    if meet[s1 * n + s2] != zero:
                        return False
            return True
        if fam == C_CONTRACTIONS:
            for th in range(4):
                if th == 0:
                    tb = addw
                elif th == 3:
                    tb = starw
                for a in range(n):
                    for x in range(n):
                        if th == 1:
                            ax = join[a * n + x]
                        elif th == 2:
                            ax = meet[a * n + x]
                        else:
                            ax = tb[a * n + x]
                        if ax == UND:
                            continue
                        for y in range(n):
                            if th == 1:
                                ay = join[a * n + y]
                            elif th == 2:
                                ay = meet[a * n + y]
                            else:
                                ay = tb[a * n + y]
                            if ay == UND:
                                continue
                            s1 = starw[ax * n + ay]
                            s2 = starw[x * n + y]
                            if s1 == UND or s2 == UND:
                                continue
                            if meet[s1 * n + s2] != s1:
                                return False
            return True
        if fam == C_SEMIREGULAR:
            for a in range(n):
                if meet[zero * n + a] != zero:
                    continue
                s = starw[a * n + zero]
                if s != UND and s != a:
                    return False
            return True
        return True

    cdef void rec(self, int ci):
        cdef int n = self.n
        cdef int i, j, is_star, v, fam, k
        cdef unsigned short[:] w
        cdef bint ok
        if ci == self.ncells:
            for k in range(6):
                fam = 1 << k
                if self.deferred & fam and not self.family_ok(fam):
                    self.pruned += 1
                    return
            for k in range(6):
                fam = 1 << k
                if self.violate_mask & fam and self.family_ok(fam):
                    return
            self.completions.append((
                tuple([self.addw[k] for k in range(n * n)]),
                tuple([self.starw[k] for k in range(n * n)]),
            ))
            if self.limit and len(self.completions) >= self.limit:
                self.stop = True
            return
        i = self.cell_i[ci]
        j = self.cell_j[ci]
        is_star = self.cell_star[ci]
        w = self.starw if is_star else self.addw
        for v in range(n):
            if self.stop:
                return
            if self.nodes >= self.budget:
                self.truncated = True
                self.stop = True
                return
            self.nodes += 1
            w[i * n + j] = v
            w[j * n + i] = v
            ok = True
            for k in range(6):
                fam = 1 << k
                if self.prune_mask & fam and not self.family_ok(fam):
                    ok = False
                    break
            if ok:
                self.rec(ci + 1)
            else:
                self.pruned += 1
        w[i * n + j] = UND
        w[j * n + i] = UND


def complete_tables(int n, int zero, join_buf, meet_buf, int require_mask,
                    int violate_mask, long long budget, int limit, int disable_mask):
    cdef _Completer st = _Completer()
    cdef array.array join_arr = array.array('H', join_buf)
    cdef array.array meet_arr = array.array('H', meet_buf)
    cdef array.array addw_arr = array.array('H', [UNDEF]) * (n * n)
    cdef array.array starw_arr = array.array('H', [UNDEF]) * (n * n)
    st.n = n
    st.zero = zero
    st.join = join_arr
    st.meet = meet_arr
    st.addw = addw_arr
    st.starw = starw_arr
    st.prune_mask = require_mask & ~disable_mask
    st.deferred = require_mask & disable_mask
    st.violate_mask = violate_mask
    st.budget = budget
    st.limit = limit
    st.nodes = 0
    st.pruned = 0
    st.truncated = False
    st.stop = False
    st.completions = []

    cells = []
    for a in range(n):
        i, j = (zero, a) if zero <= a else (a, zero)
        cells.append((i, j, 0))
    for i in range(n):
        for j in range(i, n):
            if i != zero and j != zero:
                cells.append((i, j, 0))
    for i in range(n):
        cells.append((i, i, 1))
    comparable = []
    incomparable = []
    for i in range(n):
        for j in range(i + 1, n):
            m = meet_buf[i * n + j]
            if m == i or m == j:
                comparable.append((i, j, 1))
            else:
                incomparable.append((i, j, 1))
    cells.extend(comparable)
    cells.extend(incomparable)

    cdef array.array ci_arr = array.array('i', [c[0] for c in cells])
    cdef array.array cj_arr = array.array('i', [c[1] for c in cells])
    cdef array.array cs_arr = array.array('i', [c[2] for c in cells])
    st.cell_i = ci_arr
    st.cell_j = cj_arr
    st.cell_star = cs_arr
    st.ncells = len(cells)

    st.rec(0)
    return st.completions, st.nodes, st.pruned, not st.truncated
