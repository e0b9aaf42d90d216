# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled hot loops for truncated series arithmetic.

Mirrors qsigns._kernels_py exactly.  Coefficients stay Python ints
(arbitrary precision), so the speedup comes from loop and list-indexing
overhead, not from the integer arithmetic itself.
"""


def mul_dense(list xs, list ys, Py_ssize_t n):
    cdef Py_ssize_t i, j, hi
    cdef Py_ssize_t lx = len(xs)
    cdef Py_ssize_t ly = len(ys)
    cdef list out = [0] * n
    cdef object xi, yj
    if lx > n:
        lx = n
    for i in range(lx):
        xi = xs[i]
        if xi:
            hi = ly
            if hi > n - i:
                hi = n - i
            for j in range(hi):
                yj = ys[j]
                if yj:
                    out[i + j] = out[i + j] + xi * yj
    return out


def invert_dense(list xs, Py_ssize_t n):
    cdef Py_ssize_t k, j, jmax
    cdef Py_ssize_t m = len(xs)
    cdef list out = [0] * n
    cdef object x0 = xs[0]
    cdef object acc, xj
    cdef bint pos = x0 == 1
    out[0] = x0
    for k in range(1, n):
        acc = 0
        jmax = k if k < m - 1 else m - 1
        for j in range(1, jmax + 1):
            xj = xs[j]
            if xj:
                acc = acc + xj * out[k - j]
        out[k] = -acc if pos else acc
    return out


def mul_sparse(list xs, list exps, list cofs, Py_ssize_t n):
    cdef Py_ssize_t t, i, e, hi
    cdef Py_ssize_t lx = len(xs)
    cdef Py_ssize_t nt = len(exps)
    cdef list out = [0] * n
    cdef object c
    for t in range(nt):
        e = exps[t]
        if e >= n:
            continue
        c = cofs[t]
        hi = lx
        if hi > n - e:
            hi = n - e
        if c == 1:
            for i in range(hi):
                out[e + i] = out[e + i] + xs[i]
        elif c == -1:
            for i in range(hi):
                out[e + i] = out[e + i] - xs[i]
        else:
            for i in range(hi):
                out[e + i] = out[e + i] + c * xs[i]
    return out


def div_sparse(list xs, list exps, list cofs, Py_ssize_t n):
    cdef Py_ssize_t k, t, e
    cdef Py_ssize_t lx = len(xs)
    cdef Py_ssize_t nt = len(exps)
    cdef list out = [0] * n
    cdef object c0 = cofs[0]
    cdef object acc, ye, c
    cdef bint pos = c0 == 1
    for k in range(n):
        acc = xs[k] if k < lx else 0
        for t in range(1, nt):
            e = exps[t]
            if e > k:
                break
            ye = out[k - e]
            if ye:
                c = cofs[t]
                if c == 1:
                    acc = acc - ye
                elif c == -1:
                    acc = acc + ye
                else:
                    acc = acc - c * ye
        out[k] = acc if pos else -acc
    return out
