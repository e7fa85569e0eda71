"""Pure-Python scan and search kernels.

Operation tables arrive as flat row-major ``array('H')`` buffers of length
n*n; the sentinel UNDEF marks an undefined cell (windowed models).  Every
scan returns ``(witnesses, total, checked, skipped)``:

* witnesses  -- offending tuples in ascending scan order, truncated at cap
* total      -- exact number of offending tuples (cap ignored)
* checked    -- instances fully evaluated
* skipped    -- instances whose evaluation hit an undefined cell

Universally quantified implications are vacuous (checked, passing) when the
hypothesis is decidably false; they are skipped only when a needed cell is
undefined.  almg._kernels_cy mirrors this module line for line; the parity
test suite holds both to identical outputs, including counts.
"""

UNDEF = 0xFFFF

# family bits for complete_tables
F_MONOID = 1
F_METRIC = 2
F_AXIOM2 = 4
F_AXIOM4 = 8
F_CONTRACTIONS = 16
F_SEMIREGULAR = 32


def scan_commutative(n, t, cap):
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(a + 1, n):
            x = t[a * n + b]
            y = t[b * n + a]
            if x == UNDEF or y == UNDEF:
                skipped += 1
                continue
            checked += 1
            if x != y:
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_associative(n, t, cap):
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            for c in range(n):
                if ab == UNDEF:
                    skipped += 1
                    continue
                abc = t[ab * n + c]
                bc = t[b * n + c]
                if abc == UNDEF or bc == UNDEF:
                    skipped += 1
                    continue
                a_bc = t[a * n + bc]
                if a_bc == UNDEF:
                    skipped += 1
                    continue
                checked += 1
                if abc != a_bc:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_idempotent(n, t, cap):
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        x = t[a * n + a]
        if x == UNDEF:
            skipped += 1
            continue
        checked += 1
        if x != a:
            total += 1
            if len(wit) < cap:
                wit.append((a,))
    return wit, total, checked, skipped


def scan_absorption(n, outer, inner, cap):
    # outer(a, inner(a, b)) == a
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            v = inner[a * n + b]
            if v == UNDEF:
                skipped += 1
                continue
            w = outer[a * n + v]
            if w == UNDEF:
                skipped += 1
                continue
            checked += 1
            if w != a:
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_order_consistency(n, join, meet, cap):
    # meet(a,b)=a  <=>  join(a,b)=b
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            m = meet[a * n + b]
            j = join[a * n + b]
            if m == UNDEF or j == UNDEF:
                skipped += 1
                continue
            checked += 1
            if (m == a) != (j == b):
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_identity(n, t, zero, cap):
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        x = t[zero * n + a]
        y = t[a * n + zero]
        if x == UNDEF or y == UNDEF:
            skipped += 1
            continue
        checked += 1
        if x != a or y != a:
            total += 1
            if len(wit) < cap:
                wit.append((a,))
    return wit, total, checked, skipped


def scan_isotone(n, add, meet, cap):
    # a <= b  implies  a+c <= b+c
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            m = meet[a * n + b]
            for c in range(n):
                if m == UNDEF:
                    skipped += 1
                    continue
                if m != a:
                    checked += 1
                    continue
                u = add[a * n + c]
                v = add[b * n + c]
                if u == UNDEF or v == UNDEF:
                    skipped += 1
                    continue
                w = meet[u * n + v]
                if w == UNDEF:
                    skipped += 1
                    continue
                checked += 1
                if w != u:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_add_distributive(n, add, lat, cap):
    # a + lat(b,c) == lat(a+b, a+c)
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            ab = add[a * n + b]
            for c in range(n):
                bc = lat[b * n + c]
                ac = add[a * n + c]
                if ab == UNDEF or bc == UNDEF or ac == UNDEF:
                    skipped += 1
                    continue
                lhs = add[a * n + bc]
                rhs = lat[ab * n + ac]
                if lhs == UNDEF or rhs == UNDEF:
                    skipped += 1
                    continue
                checked += 1
                if lhs != rhs:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_m1(n, star, meet, zero, cap):
    # star(a,b) >= zero, with equality exactly on the diagonal
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            s = star[a * n + b]
            if s == UNDEF:
                skipped += 1
                continue
            p = meet[zero * n + s]
            if p == UNDEF:
                skipped += 1
                continue
            checked += 1
            if p != zero or (s == zero) != (a == b):
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_m3(n, star, add, meet, cap):
    # star(a,b) <= star(a,c) + star(c,b)
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            sab = star[a * n + b]
            for c in range(n):
                if sab == UNDEF:
                    skipped += 1
                    continue
                sac = star[a * n + c]
                scb = star[c * n + b]
                if sac == UNDEF or scb == UNDEF:
                    skipped += 1
                    continue
                rhs = add[sac * n + scb]
                if rhs == UNDEF:
                    skipped += 1
                    continue
                m = meet[sab * n + rhs]
                if m == UNDEF:
                    skipped += 1
                    continue
                checked += 1
                if m != sab:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_axiom2(n, add, join, meet, star, cap):
    # star(a, meet(a,b)) + b == join(a,b)
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            m = meet[a * n + b]
            if m == UNDEF:
                skipped += 1
                continue
            s = star[a * n + m]
            if s == UNDEF:
                skipped += 1
                continue
            t = add[s * n + b]
            j = join[a * n + b]
            if t == UNDEF or j == UNDEF:
                skipped += 1
                continue
            checked += 1
            if t != j:
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_axiom4(n, join, meet, star, zero, cap):
    # meet(star(a, j), star(b, j)) == zero  with j = join(a,b)
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(a, n):
            j = join[a * n + b]
            if j == UNDEF:
                skipped += 1
                continue
            s1 = star[a * n + j]
            s2 = star[b * n + j]
            if s1 == UNDEF or s2 == UNDEF:
                skipped += 1
                continue
            m = meet[s1 * n + s2]
            if m == UNDEF:
                skipped += 1
                continue
            checked += 1
            if m != zero:
                total += 1
                if len(wit) < cap:
                    wit.append((a, b))
    return wit, total, checked, skipped


def scan_contractions(n, add, join, meet, star, cap):
    # (a th x) * (a th y) <= x * y for th in (+, v, ^, *)
    wit = []
    total = checked = skipped = 0
    tables = (add, join, meet, star)
    for th in range(4):
        t = tables[th]
        for a in range(n):
            for x in range(n):
                ax = t[a * n + x]
                for y in range(n):
                    if ax == UNDEF:
                        skipped += 1
                        continue
                    ay = t[a * n + y]
                    if ay == UNDEF:
                        skipped += 1
                        continue
                    s1 = star[ax * n + ay]
                    s2 = star[x * n + y]
                    if s1 == UNDEF or s2 == UNDEF:
                        skipped += 1
                        continue
                    m = meet[s1 * n + s2]
                    if m == UNDEF:
                        skipped += 1
                        continue
                    checked += 1
                    if m != s1:
                        total += 1
                        if len(wit) < cap:
                            wit.append((th, a, x, y))
    return wit, total, checked, skipped


def scan_semiregular(n, star, meet, zero, cap):
    # a >= zero  implies  star(a, zero) == a
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        m = meet[zero * n + a]
        if m == UNDEF:
            skipped += 1
            continue
        if m != zero:
            checked += 1
            continue
        s = star[a * n + zero]
        if s == UNDEF:
            skipped += 1
            continue
        checked += 1
        if s != a:
            total += 1
            if len(wit) < cap:
                wit.append((a,))
    return wit, total, checked, skipped


def scan_monotone_star(n, star, meet, cap):
    # a <= b  implies  star(a,c) <= star(b,c)
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            m = meet[a * n + b]
            for c in range(n):
                if m == UNDEF:
                    skipped += 1
                    continue
                if m != a:
                    checked += 1
                    continue
                s1 = star[a * n + c]
                s2 = star[b * n + c]
                if s1 == UNDEF or s2 == UNDEF:
                    skipped += 1
                    continue
                w = meet[s1 * n + s2]
                if w == UNDEF:
                    skipped += 1
                    continue
                checked += 1
                if w != s1:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def _between(n, add, star, a, x, b):
    """Tri-state metric betweenness: 1 true, 0 false, 2 undefined."""
    sax = star[a * n + x]
    sxb = star[x * n + b]
    sab = star[a * n + b]
    if sax == UNDEF or sxb == UNDEF or sab == UNDEF:
        return 2
    t = add[sax * n + sxb]
    if t == UNDEF:
        return 2
    return 1 if t == sab else 0


def scan_t1(n, add, star, cap):
    # M(a,b,c) and M(a,d,b)  imply  M(d,b,c)
    wit = []
    total = checked = skipped = 0
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


def scan_t2(n, add, star, cap):
    # M(a,b,c) and M(a,d,b)  imply  M(a,d,c)
    wit = []
    total = checked = skipped = 0
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


def scan_beta(n, add, star, cap):
    # M(a,b,c) and M(a,c,b)  imply  b == c
    wit = []
    total = checked = skipped = 0
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


def scan_lattice_implies_metric(n, add, join, meet, star, cap):
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                mac = meet[a * n + c]
                jac = join[a * n + c]
                if mac == UNDEF or jac == UNDEF:
                    skipped += 1
                    continue
                lo = meet[mac * n + b]
                hi = meet[b * n + jac]
                if lo == UNDEF or hi == UNDEF:
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


def scan_quad_identity(n, add, join, meet, star, cap):
    # star(a,b) + star(b,c) == star(meet(a,c), b) + star(b, join(a,c))
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                sab = star[a * n + b]
                sbc = star[b * n + c]
                mac = meet[a * n + c]
                jac = join[a * n + c]
                if sab == UNDEF or sbc == UNDEF or mac == UNDEF or jac == UNDEF:
                    skipped += 1
                    continue
                lhs = add[sab * n + sbc]
                s1 = star[mac * n + b]
                s2 = star[b * n + jac]
                if lhs == UNDEF or s1 == UNDEF or s2 == UNDEF:
                    skipped += 1
                    continue
                rhs = add[s1 * n + s2]
                if rhs == UNDEF:
                    skipped += 1
                    continue
                checked += 1
                if lhs != rhs:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_between_meetjoin(n, add, join, meet, star, cap):
    # M(a,b,c)  iff  M(meet(a,c), b, join(a,c))
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                mac = meet[a * n + c]
                jac = join[a * n + c]
                if mac == UNDEF or jac == UNDEF:
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


def scan_monotone_between(n, add, meet, star, cap):
    # a <= b <= c  implies  M(a,b,c)
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(n):
            mab = meet[a * n + b]
            for c in range(n):
                if mab == UNDEF:
                    skipped += 1
                    continue
                if mab != a:
                    checked += 1
                    continue
                mbc = meet[b * n + c]
                if mbc == UNDEF:
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


def scan_ptolemaic(n, add, meet, star, cap):
    """Three cyclic inequalities per quadruple; witness carries the index
    of the first failing inequality."""
    wit = []
    total = checked = skipped = 0
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
                    if (sab == UNDEF or sac == UNDEF or sbc == UNDEF
                            or sad == UNDEF or sbd == UNDEF or scd == UNDEF):
                        skipped += 1
                        continue
                    p1 = meet[sab * n + scd]
                    p2 = meet[sac * n + sbd]
                    p3 = meet[sad * n + sbc]
                    if p1 == UNDEF or p2 == UNDEF or p3 == UNDEF:
                        skipped += 1
                        continue
                    r1 = add[p2 * n + p3]
                    r2 = add[p1 * n + p3]
                    r3 = add[p1 * n + p2]
                    if r1 == UNDEF or r2 == UNDEF or r3 == UNDEF:
                        skipped += 1
                        continue
                    q1 = meet[p1 * n + r1]
                    q2 = meet[p2 * n + r2]
                    q3 = meet[p3 * n + r3]
                    if q1 == UNDEF or q2 == UNDEF or q3 == UNDEF:
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


def scan_fixty(n, star, cap):
    """Collect triangles a<b<c whose pairwise distances hit the third vertex."""
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(a + 1, n):
            sab = star[a * n + b]
            for c in range(b + 1, n):
                sbc = star[b * n + c]
                sca = star[c * n + a]
                if sab == UNDEF or sbc == UNDEF or sca == UNDEF:
                    skipped += 1
                    continue
                checked += 1
                if sab == c and sbc == a and sca == b:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_equilateral(n, star, cap):
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(a + 1, n):
            sab = star[a * n + b]
            for c in range(b + 1, n):
                sbc = star[b * n + c]
                sca = star[c * n + a]
                if sab == UNDEF or sbc == UNDEF or sca == UNDEF:
                    skipped += 1
                    continue
                checked += 1
                if sab == sbc and sbc == sca:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_isosceles(n, star, cap):
    wit = []
    total = checked = skipped = 0
    for a in range(n):
        for b in range(a + 1, n):
            sab = star[a * n + b]
            for c in range(b + 1, n):
                sbc = star[b * n + c]
                sca = star[c * n + a]
                if sab == UNDEF or sbc == UNDEF or sca == UNDEF:
                    skipped += 1
                    continue
                checked += 1
                if sab == sbc or sbc == sca or sab == sca:
                    total += 1
                    if len(wit) < cap:
                        wit.append((a, b, c))
    return wit, total, checked, skipped


def scan_convexity(n, add, star, cap):
    # every pair a != b admits some x outside {a,b} with M(a,x,b)
    wit = []
    total = checked = skipped = 0
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


def _family_ok(fam, n, zero, join, meet, addw, starw):
    """True unless some fully-determined instance of the family fails."""
    if fam == F_MONOID:
        for a in range(n):
            v = addw[zero * n + a]
            if v != UNDEF and v != a:
                return False
        for a in range(n):
            for b in range(n):
                ab = addw[a * n + b]
                if ab == UNDEF:
                    continue
                for c in range(n):
                    abc = addw[ab * n + c]
                    bc = addw[b * n + c]
                    if abc == UNDEF or bc == UNDEF:
                        continue
                    a_bc = addw[a * n + bc]
                    if a_bc != UNDEF and abc != a_bc:
                        return False
        for a in range(n):
            for b in range(n):
                if meet[a * n + b] != a:
                    continue
                for c in range(n):
                    u = addw[a * n + c]
                    v = addw[b * n + c]
                    if u == UNDEF or v == UNDEF:
                        continue
                    if meet[u * n + v] != u:
                        return False
        return True
    if fam == F_METRIC:
        for a in range(n):
            for b in range(n):
                s = starw[a * n + b]
                if s == UNDEF:
                    continue
                if meet[zero * n + s] != zero:
                    return False
                if (s == zero) != (a == b):
                    return False
        for a in range(n):
            for b in range(n):
                sab = starw[a * n + b]
                if sab == UNDEF:
                    continue
                for c in range(n):
                    sac = starw[a * n + c]
                    scb = starw[c * n + b]
                    if sac == UNDEF or scb == UNDEF:
                        continue
                    rhs = addw[sac * n + scb]
                    if rhs == UNDEF:
                        continue
                    if meet[sab * n + rhs] != sab:
                        return False
        return True
    if fam == F_AXIOM2:
        for a in range(n):
            for b in range(n):
                m = meet[a * n + b]
                s = starw[a * n + m]
                if s == UNDEF:
                    continue
                t = addw[s * n + b]
                if t == UNDEF:
                    continue
                if t != join[a * n + b]:
                    return False
        return True
    if fam == F_AXIOM4:
        for a in range(n):
            for b in range(a, n):
                j = join[a * n + b]
                s1 = starw[a * n + j]
                if s1 == UNDEF:
                    continue
                s2 = starw[b * n + j]
                if s2 == UNDEF:
                    continue
                if meet[s1 * n + s2] != zero:
                    return False
        return True
    if fam == F_CONTRACTIONS:
        tables = (addw, join, meet, starw)
        for th in range(4):
            t = tables[th]
            for a in range(n):
                for x in range(n):
                    ax = t[a * n + x]
                    if ax == UNDEF:
                        continue
                    for y in range(n):
                        ay = t[a * n + y]
                        if ay == UNDEF:
                            continue
                        s1 = starw[ax * n + ay]
                        s2 = starw[x * n + y]
                        if s1 == UNDEF or s2 == UNDEF:
                            continue
                        if meet[s1 * n + s2] != s1:
                            return False
        return True
    if fam == F_SEMIREGULAR:
        for a in range(n):
            if meet[zero * n + a] != zero:
                continue
            s = starw[a * n + zero]
            if s != UNDEF and s != a:
                return False
        return True
    return True


ALL_FAMILIES = (F_MONOID, F_METRIC, F_AXIOM2, F_AXIOM4, F_CONTRACTIONS, F_SEMIREGULAR)


def complete_tables(n, zero, join, meet, require_mask, violate_mask,
                    budget, limit, disable_mask):
    """Backtracking completion of symmetric add/star tables over a lattice.

    Commutativity of add and symmetry of star are structural (each cell
    assignment writes both mirror entries).  Families in require_mask prune
    the tree as soon as one of their instances is fully determined; families
    in (require_mask & disable_mask) are deferred to a leaf check instead,
    which never changes the emitted set.  Leaves that satisfy any family in
    violate_mask are discarded.

    Returns (completions, nodes, pruned, exhausted) where completions is a
    list of (add_tuple, star_tuple) in depth-first order.
    """
    nn = n * n
    addw = [UNDEF] * nn
    starw = [UNDEF] * nn

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
            m = meet[i * n + j]
            if m == i or m == j:
                comparable.append((i, j, 1))
            else:
                incomparable.append((i, j, 1))
    cells.extend(comparable)
    cells.extend(incomparable)

    prune_mask = require_mask & ~disable_mask
    deferred = require_mask & disable_mask

    completions = []
    nodes = 0
    pruned = 0
    truncated = False
    stop = False

    def rec(ci):
        nonlocal nodes, pruned, truncated, stop
        if ci == len(cells):
            for fam in ALL_FAMILIES:
                if deferred & fam and not _family_ok(fam, n, zero, join, meet, addw, starw):
                    pruned += 1
                    return
            for fam in ALL_FAMILIES:
                if violate_mask & fam and _family_ok(fam, n, zero, join, meet, addw, starw):
                    return
            completions.append((tuple(addw), tuple(starw)))
            if limit and len(completions) >= limit:
                stop = True
            return
        i, j, is_star = cells[ci]
        w = starw if is_star else addw
        for v in range(n):
            if stop:
                return
            if nodes >= budget:
                truncated = True
                stop = True
                return
            nodes += 1
            w[i * n + j] = v
            w[j * n + i] = v
            ok = True
            for fam in ALL_FAMILIES:
                if prune_mask & fam and not _family_ok(fam, n, zero, join, meet, addw, starw):
                    ok = False
                    break
            if ok:
                rec(ci + 1)
            else:
                pruned += 1
        w[i * n + j] = UNDEF
        w[j * n + i] = UNDEF

    rec(0)
    return completions, nodes, pruned, not truncated
