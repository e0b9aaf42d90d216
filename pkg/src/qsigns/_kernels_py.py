"""Pure-Python hot loops for truncated series arithmetic.

All kernels take plain lists of Python ints and an output length ``n``
(the truncation order plus one) and return a fresh list of length ``n``.
Coefficients are arbitrary-precision integers throughout; nothing here
may introduce floats or rounding.

`qsigns._kernels_cy` provides the same four functions compiled with
Cython; `qsigns._backend` picks whichever is available at import time.
"""

from __future__ import annotations


def mul_dense(xs: list, ys: list, n: int) -> list:
    """Cauchy product of two dense coefficient lists, truncated to n terms."""
    out = [0] * n
    lx = min(len(xs), n)
    ly = len(ys)
    for i in range(lx):
        xi = xs[i]
        if xi:
            hi = min(ly, n - i)
            for j in range(hi):
                yj = ys[j]
                if yj:
                    out[i + j] += xi * yj
    return out


def invert_dense(xs: list, n: int) -> list:
    """Multiplicative inverse of xs, truncated to n terms.

    Requires xs[0] in (1, -1); the recurrence then stays in the integers.
    """
    x0 = xs[0]
    out = [0] * n
    out[0] = x0
    m = len(xs)
    pos = x0 == 1
    for k in range(1, n):
        acc = 0
        jmax = min(k, m - 1)
        for j in range(1, jmax + 1):
            xj = xs[j]
            if xj:
                acc += xj * out[k - j]
        out[k] = -acc if pos else acc
    return out


def mul_sparse(xs: list, exps: list, cofs: list, n: int) -> list:
    """Multiply dense xs by the sparse polynomial sum(c*q^e), truncated."""
    out = [0] * n
    lx = len(xs)
    for t in range(len(exps)):
        e = exps[t]
        if e >= n:
            continue
        c = cofs[t]
        hi = min(lx, n - e)
        if c == 1:
            for i in range(hi):
                out[e + i] += xs[i]
        elif c == -1:
            for i in range(hi):
                out[e + i] -= xs[i]
        else:
            for i in range(hi):
                out[e + i] += c * xs[i]
    return out


def div_sparse(xs: list, exps: list, cofs: list, n: int) -> list:
    """Divide dense xs by a sparse polynomial, truncated to n terms.

    The divisor terms must be sorted by exponent with exps[0] == 0 and
    cofs[0] in (1, -1), so the quotient recurrence stays integral.
    """
    c0 = cofs[0]
    out = [0] * n
    lx = len(xs)
    nt = len(exps)
    pos = c0 == 1
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
                    acc -= ye
                elif c == -1:
                    acc += ye
                else:
                    acc -= c * ye
        out[k] = acc if pos else -acc
    return out
