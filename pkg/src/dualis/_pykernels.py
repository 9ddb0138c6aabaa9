"""Reduction kernels, pure Python.

A polynomial here is a pair of parallel lists ``(mons, coefs)``: packed
monomials (see :mod:`dualis.orders`) sorted strictly decreasing, and
nonzero ``int`` coefficients.  ``_ckernels.pyx`` implements the same
functions; :mod:`dualis.kernels` picks one at import.
"""

from math import gcd

BACKEND = "python"


def find_divisor(mon, lms, guard):
    hg = mon | guard
    for i, m in enumerate(lms):
        if (hg - m) & guard == guard:
            return i
    return -1


def sub_mul(am, ac, i, a, bm, bc, j, shift, b):
    """``a*A[i:] - b*(shift*B[j:])`` merged in decreasing order."""
    om = []
    oc = []
    la = len(am)
    lb = len(bm)
    if i < la and j < lb:
        x = am[i]
        y = bm[j] + shift
        while True:
            if x > y:
                om.append(x)
                oc.append(a * ac[i])
                i += 1
                if i == la:
                    break
                x = am[i]
            elif x < y:
                om.append(y)
                oc.append(-b * bc[j])
                j += 1
                if j == lb:
                    break
                y = bm[j] + shift
            else:
                v = a * ac[i] - b * bc[j]
                if v:
                    om.append(x)
                    oc.append(v)
                i += 1
                j += 1
                if i == la or j == lb:
                    break
                x = am[i]
                y = bm[j] + shift
    while i < la:
        om.append(am[i])
        oc.append(a * ac[i])
        i += 1
    while j < lb:
        om.append(bm[j] + shift)
        oc.append(-b * bc[j])
        j += 1
    return om, oc


def content(coefs):
    g = 0
    for c in coefs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def spoly(fm, fc, gm, gc, lcm_mon):
    """S-polynomial with the cancelled leading terms already dropped."""
    a = gc[0]
    b = fc[0]
    g = gcd(a, b)
    a //= g
    b //= g
    if a < 0:
        a, b = -a, -b
    # a*(lcm/lm f)*f - b*(lcm/lm g)*g, both scaled by the shift
    sf = lcm_mon - fm[0]
    sg = lcm_mon - gm[0]
    m1 = [x + sf for x in fm]
    return sub_mul(m1, fc, 1, a, gm, gc, 1, sg, b)


def reduce_poly(mons, coefs, lms, polys, guard, full=True):
    """Reduce ``(mons, coefs)`` modulo the polynomials ``polys``.

    ``lms[i]`` must be the leading monomial of ``polys[i]``.  With ``full``
    every term is reduced, otherwise only the head.  Returns
    ``(mons, coefs, num, den)`` where ``den * remainder == num * input``
    modulo the ideal of ``polys``; the remainder is content-free.
    """
    rm = []
    rc = []
    num = 1
    den = 1
    cm = mons
    cc = coefs
    s = 0
    start_bits = max((abs(c).bit_length() for c in coefs), default=0)
    limit = 2 * start_bits + 64
    nl = len(lms)
    while s < len(cm):
        h = cm[s]
        hg = h | guard
        j = -1
        for i in range(nl):
            if (hg - lms[i]) & guard == guard:
                j = i
                break
        if j < 0:
            if not full:
                break
            rm.append(h)
            rc.append(cc[s])
            s += 1
            continue
        gm, gc = polys[j]
        c = cc[s]
        l = gc[0]
        f = gcd(c, l)
        a = l // f
        b = c // f
        if a < 0:
            a = -a
            b = -b
        cm, cc = sub_mul(cm, cc, s + 1, a, gm, gc, 1, h - gm[0], b)
        s = 0
        if a != 1:
            num *= a
            if rc:
                rc = [a * x for x in rc]
        if cc and abs(cc[0]).bit_length() > limit:
            g = gcd(content(cc), content(rc)) if rc else content(cc)
            if g > 1:
                cc = [x // g for x in cc]
                rc = [x // g for x in rc]
                den *= g
            limit = 2 * max(abs(cc[0]).bit_length(), 32) + 64
    if s:
        cm = cm[s:]
        cc = cc[s:]
    if rm:
        rm.extend(cm)
        rc.extend(cc)
    else:
        rm = cm
        rc = cc
    if rc:
        g = content(rc)
        if rc[0] < 0:
            g = -g
        if g != 1:
            rc = [x // g for x in rc]
            den *= g
    return rm, rc, num, den
