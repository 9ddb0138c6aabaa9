# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Reduction kernels, compiled.

Same interface and results as :mod:`dualis._pykernels`; monomials and
coefficients stay Python ints (arbitrary precision), the gain comes from
typed loop indices and direct list access.
"""

from math import gcd

BACKEND = "cython"


def find_divisor(object mon, list lms, object guard):
    cdef Py_ssize_t i, n = len(lms)
    cdef object hg = mon | guard
    for i in range(n):
        if (hg - <object>lms[i]) & guard == guard:
            return i
    return -1


cpdef tuple sub_mul(list am, list ac, Py_ssize_t i, object a,
                    list bm, list bc, Py_ssize_t j, object shift, object b):
    cdef list om = []
    cdef list oc = []
    cdef Py_ssize_t la = len(am), lb = len(bm)
    cdef object x, y, v
    cdef bint a_one = a == 1
    cdef object nb = -b
    if i < la and j < lb:
        x = am[i]
        y = bm[j] + shift
        while True:
            if x > y:
                om.append(x)
                oc.append(ac[i] if a_one else a * ac[i])
                i += 1
                if i == la:
                    break
                x = am[i]
            elif x < y:
                om.append(y)
                oc.append(nb * bc[j])
                j += 1
                if j == lb:
                    break
                y = bm[j] + shift
            else:
                v = (ac[i] if a_one else a * ac[i]) - b * bc[j]
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
        oc.append(ac[i] if a_one else a * ac[i])
        i += 1
    while j < lb:
        om.append(bm[j] + shift)
        oc.append(nb * bc[j])
        j += 1
    return om, oc


cpdef object content(list coefs):
    cdef object g = 0
    for c in coefs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def spoly(list fm, list fc, list gm, list gc, object lcm_mon):
    cdef object a = gc[0], b = fc[0], g
    g = gcd(a, b)
    a = a // g
    b = b // g
    if a < 0:
        a = -a
        b = -b
    cdef object sf = lcm_mon - fm[0]
    cdef object sg = lcm_mon - gm[0]
    cdef list m1 = [x + sf for x in fm]
    return sub_mul(m1, fc, 1, a, gm, gc, 1, sg, b)


def reduce_poly(list mons, list coefs, list lms, list polys, object guard, bint full=True):
    cdef list rm = [], rc = []
    cdef list cm = mons, cc = coefs
    cdef object num = 1, den = 1
    cdef Py_ssize_t s = 0, i, j, nl = len(lms)
    cdef object h, hg, c, l, f, a, b, g
    cdef list gm, gc
    cdef Py_ssize_t start_bits = 0, limit, bl
    for c in coefs:
        bl = abs(c).bit_length()
        if bl > start_bits:
            start_bits = bl
    limit = 2 * start_bits + 64
    while s < len(cm):
        h = cm[s]
        hg = h | guard
        j = -1
        for i in range(nl):
            if (hg - <object>lms[i]) & guard == guard:
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
            num = num * a
            if rc:
                rc = [a * x for x in rc]
        if cc and abs(cc[0]).bit_length() > limit:
            g = gcd(content(cc), content(rc)) if rc else content(cc)
            if g > 1:
                cc = [x // g for x in cc]
                rc = [x // g for x in rc]
                den = den * g
            bl = abs(cc[0]).bit_length()
            limit = 2 * (bl if bl > 32 else 32) + 64
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
            den = den * g
    return rm, rc, num, den
