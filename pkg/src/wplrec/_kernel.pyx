# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled row-reduction kernels.

GF(p) elimination runs on C int64 (requires p < 2**31 so products fit);
rational elimination keeps arbitrary-precision Python ints as normalized
numerator/denominator pairs but does the bookkeeping in C loops. Contracts
match wplrec._pykernel.
"""

from cpython cimport array
import array

from math import gcd


cdef long long _inv_mod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_mod(data, Py_ssize_t rows, Py_ssize_t cols, long long p):
    cdef array.array buf = array.array('q', [x % p for x in data])
    cdef long long[::1] m = buf
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef long long inv, f, v, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if m[i * cols + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                tmp = m[r * cols + j]
                m[r * cols + j] = m[pr * cols + j]
                m[pr * cols + j] = tmp
        inv = _inv_mod(m[r * cols + c], p)
        if inv != 1:
            for j in range(c, cols):
                m[r * cols + j] = m[r * cols + j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = m[i * cols + c]
            if f != 0:
                for j in range(c, cols):
                    v = (m[i * cols + j] - f * m[r * cols + j]) % p
                    if v < 0:
                        v += p
                    m[i * cols + j] = v
        pivots.append(c)
        r += 1
    return list(buf), pivots


cdef inline tuple _q_mul(object an, object ad, object bn, object bd):
    # cross-reduce before multiplying to keep intermediates small; zeros
    # normalize to 0/1 so both kernels return identical raw tuples
    cdef object g1, g2
    if an == 0 or bn == 0:
        return (0, 1)
    g1 = gcd(an, bd)
    g2 = gcd(bn, ad)
    return ((an // g1) * (bn // g2), (ad // g2) * (bd // g1))


cdef inline tuple _q_sub(object an, object ad, object bn, object bd):
    cdef object n = an * bd - bn * ad, d = ad * bd, g
    if n == 0:
        return (0, 1)
    g = gcd(n, d)
    return (n // g, d // g)


def rref_frac(num, den, Py_ssize_t rows, Py_ssize_t cols):
    cdef list nm = list(num)
    cdef list dn = list(den)
    cdef Py_ssize_t r = 0, c, i, j, pr, k
    cdef object fn, fd, pn, pd, tn, td
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if nm[i * cols + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                nm[r * cols + j], nm[pr * cols + j] = nm[pr * cols + j], nm[r * cols + j]
                dn[r * cols + j], dn[pr * cols + j] = dn[pr * cols + j], dn[r * cols + j]
        pn = nm[r * cols + c]
        pd = dn[r * cols + c]
        if pn != pd:
            if pn < 0:
                pn, pd = -pn, -pd
            for j in range(c, cols):
                tn, td = _q_mul(nm[r * cols + j], dn[r * cols + j], pd, pn)
                nm[r * cols + j] = tn
                dn[r * cols + j] = td
        else:
            nm[r * cols + c] = 1
            dn[r * cols + c] = 1
        for i in range(rows):
            if i == r:
                continue
            fn = nm[i * cols + c]
            if fn != 0:
                fd = dn[i * cols + c]
                for j in range(c, cols):
                    tn, td = _q_mul(fn, fd, nm[r * cols + j], dn[r * cols + j])
                    tn, td = _q_sub(nm[i * cols + j], dn[i * cols + j], tn, td)
                    nm[i * cols + j] = tn
                    dn[i * cols + j] = td
        pivots.append(c)
        r += 1
    return nm, dn, pivots
