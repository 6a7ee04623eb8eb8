"""Pure-Python row-reduction kernels.

Fallback used when the compiled extension is unavailable or when
WPLREC_PURE_KERNEL=1 is set. Same contracts as wplrec._kernel: matrices are
flat row-major lists, rationals travel as parallel numerator/denominator
integer lists, and the result is the reduced row echelon form together with
the pivot column indices.
"""

from fractions import Fraction


def rref_mod(data, rows, cols, p):
    m = [x % p for x in data]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if m[i * cols + c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                m[r * cols + j], m[pr * cols + j] = m[pr * cols + j], m[r * cols + j]
        inv = pow(m[r * cols + c], -1, p)
        if inv != 1:
            for j in range(c, cols):
                m[r * cols + j] = m[r * cols + j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = m[i * cols + c]
            if f:
                for j in range(c, cols):
                    m[i * cols + j] = (m[i * cols + j] - f * m[r * cols + j]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rref_frac(num, den, rows, cols):
    m = [Fraction(num[k], den[k]) for k in range(rows * cols)]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if m[i * cols + c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                m[r * cols + j], m[pr * cols + j] = m[pr * cols + j], m[r * cols + j]
        piv = m[r * cols + c]
        if piv != 1:
            for j in range(c, cols):
                m[r * cols + j] /= piv
        for i in range(rows):
            if i == r:
                continue
            f = m[i * cols + c]
            if f:
                for j in range(c, cols):
                    m[i * cols + j] -= f * m[r * cols + j]
        pivots.append(c)
        r += 1
    return [x.numerator for x in m], [x.denominator for x in m], pivots
