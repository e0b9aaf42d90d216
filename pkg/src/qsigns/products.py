"""Constructors for infinite products and theta series.

Everything here returns an exact truncated :class:`~qsigns.series.Series`.
Products of the form (q^a;q^a) go through the sparse pentagonal-number
expansion, so a factor costs O(T*sqrt(T/a)) instead of O(T^2/a); that is
what makes the 50,000-term sign census cheap.  General (q^a;q^b) factors
with a != b are multiplied or divided one binomial 1-q^{a+kb} at a time.

Spec grammar for quotients of such products (also used by the CLI):
whitespace-separated tokens ``a.b^d`` meaning (q^a;q^b)^d and the
shorthand ``j^d`` meaning (q^j;q^j)^d; ``^d`` defaults to 1.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from ._backend import div_sparse, mul_sparse
from .series import InvalidParameter, Series

__all__ = [
    "PochhammerFactor",
    "EtaQuotientSpec",
    "pochhammer",
    "eta_quotient",
    "quintuple_product",
    "theta_alt_squares",
    "theta_triangular",
    "theta_squares",
    "theta_weighted",
    "borwein_a",
    "borwein_b",
    "borwein_c3",
    "lambert_cubic",
    "theta_threevar",
]


# ----------------------------------------------------------------------
# Factor specifications
# ----------------------------------------------------------------------

_TOKEN_RE = re.compile(r"^(\d+)(?:\.(\d+))?(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class PochhammerFactor:
    """One factor (q^a; q^b)^delta of a product."""

    a: int
    b: int
    delta: int = 1

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise InvalidParameter(f"factor offsets must be >= 1, got ({self.a}, {self.b})")

    def __str__(self) -> str:
        base = str(self.a) if self.a == self.b else f"{self.a}.{self.b}"
        return f"{base}^{self.delta}"


@dataclass(frozen=True)
class EtaQuotientSpec:
    """A finite product of Pochhammer factors, prod (q^a;q^b)^delta."""

    factors: tuple[PochhammerFactor, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise InvalidParameter("product spec needs at least one factor")

    @classmethod
    def parse(cls, text: str) -> "EtaQuotientSpec":
        """Parse the ``a.b^d`` / ``j^d`` token grammar."""
        factors = []
        for token in text.split():
            m = _TOKEN_RE.match(token)
            if m is None:
                raise InvalidParameter(f"bad factor token {token!r}")
            a = int(m.group(1))
            b = int(m.group(2)) if m.group(2) else a
            d = int(m.group(3)) if m.group(3) else 1
            factors.append(PochhammerFactor(a, b, d))
        return cls(tuple(factors))

    def __str__(self) -> str:
        return " ".join(str(f) for f in self.factors)


def _as_spec(spec: "EtaQuotientSpec | str") -> EtaQuotientSpec:
    return EtaQuotientSpec.parse(spec) if isinstance(spec, str) else spec


# ----------------------------------------------------------------------
# Product expansion
# ----------------------------------------------------------------------

def _check_precision(precision: int) -> None:
    if precision < 0:
        raise InvalidParameter(f"precision must be nonnegative, got {precision}")


def pentagonal_terms(step: int, limit: int) -> tuple[list[int], list[int]]:
    """Sparse expansion of (q^step; q^step): exponents step*k(3k+-1)/2, signs (-1)^k."""
    terms = [(0, 1)]
    k = 1
    while True:
        lo = step * (k * (3 * k - 1) // 2)
        hi = step * (k * (3 * k + 1) // 2)
        s = -1 if k % 2 else 1
        if lo > limit:
            break
        terms.append((lo, s))
        if hi <= limit:
            terms.append((hi, s))
        k += 1
    terms.sort()
    return [e for e, _ in terms], [c for _, c in terms]


def _apply_factor(cur: list, a: int, b: int, delta: int, n: int) -> list:
    """Multiply cur by (q^a;q^b)^delta, truncated to n coefficients."""
    if delta == 0:
        return cur
    reps, divide = abs(delta), delta < 0
    if a == b:
        exps, cofs = pentagonal_terms(b, n - 1)
        for _ in range(reps):
            cur = div_sparse(cur, exps, cofs, n) if divide else mul_sparse(cur, exps, cofs, n)
    else:
        for _ in range(reps):
            for e in range(a, n, b):
                if divide:
                    cur = div_sparse(cur, [0, e], [1, -1], n)
                else:
                    cur = mul_sparse(cur, [0, e], [1, -1], n)
    return cur


def eta_quotient(spec: "EtaQuotientSpec | str", precision: int) -> Series:
    """Exact truncated expansion of a product of (q^a;q^b)^delta factors."""
    _check_precision(precision)
    spec = _as_spec(spec)
    n = precision + 1
    cur = [0] * n
    cur[0] = 1
    for f in spec.factors:
        cur = _apply_factor(cur, f.a, f.b, f.delta, n)
    return Series(cur)


def pochhammer(a: int, b: int, precision: int) -> Series:
    """(q^a; q^b) = prod_{k>=0} (1 - q^{a+kb}), truncated."""
    if a < 1 or b < 1:
        raise InvalidParameter(f"pochhammer needs a >= 1 and b >= 1, got ({a}, {b})")
    return eta_quotient(EtaQuotientSpec((PochhammerFactor(a, b, 1),)), precision)


def quintuple_product(M: int, j: int, precision: int) -> Series:
    """(q^j, q^{M-j}, q^M; q^M) (q^{M-2j}, q^{M+2j}; q^{2M}), truncated."""
    if M < 3:
        raise InvalidParameter(f"need M >= 3, got {M}")
    if not 1 <= j or not 2 * j < M:
        raise InvalidParameter(f"need 1 <= j < M/2, got j={j}, M={M}")
    spec = EtaQuotientSpec(
        (
            PochhammerFactor(j, M),
            PochhammerFactor(M - j, M),
            PochhammerFactor(M, M),
            PochhammerFactor(M - 2 * j, 2 * M),
            PochhammerFactor(M + 2 * j, 2 * M),
        )
    )
    return eta_quotient(spec, precision)


# ----------------------------------------------------------------------
# Theta series
# ----------------------------------------------------------------------

def theta_alt_squares(precision: int) -> Series:
    """sum_{n in Z} (-1)^n q^{n^2} = 1 + 2 sum_{n>=1} (-1)^n q^{n^2}."""
    terms = [(0, 1)]
    n = 1
    while n * n <= precision:
        terms.append((n * n, -2 if n % 2 else 2))
        n += 1
    return Series.from_terms(terms, precision)


def theta_triangular(precision: int) -> Series:
    """sum_{n>=0} q^{n(n+1)/2}, the triangular-number indicator."""
    terms = []
    n = 0
    while n * (n + 1) // 2 <= precision:
        terms.append((n * (n + 1) // 2, 1))
        n += 1
    return Series.from_terms(terms, precision)


def theta_squares(precision: int) -> Series:
    """sum_{n in Z} q^{n^2} = 1 + 2 sum_{n>=1} q^{n^2}."""
    terms = [(0, 1)]
    n = 1
    while n * n <= precision:
        terms.append((n * n, 2))
        n += 1
    return Series.from_terms(terms, precision)


_WEIGHT_MOD_6 = {1: 1, 3: -2, 5: 1}


def theta_weighted(precision: int) -> Series:
    """sum over odd n >= 1 of w(n) q^{(n^2-1)/8} with w = 1, -2, 1 for n = 1, 3, 5 mod 6.

    Folding +-n (equal weights) absorbs the 1/2 in the two-sided form.
    """
    terms = []
    n = 1
    while (n * n - 1) // 8 <= precision:
        terms.append(((n * n - 1) // 8, _WEIGHT_MOD_6[n % 6]))
        n += 2
    return Series.from_terms(terms, precision)


def borwein_a(precision: int) -> Series:
    """Lattice sum over m^2 + mn + n^2 <= T, counting representations."""
    _check_precision(precision)
    T = precision
    out = [0] * (T + 1)
    # m^2+mn+n^2 >= (3/4) max(|m|,|n|)^2, so this box is exhaustive; the
    # assert is the "+1 ring adds nothing" guarantee in integer form.
    B = math.isqrt((4 * T) // 3) + 1
    assert 3 * (B + 1) * (B + 1) > 4 * T
    for m in range(-B, B + 1):
        mm = m * m
        for n in range(-B, B + 1):
            e = mm + m * n + n * n
            if e <= T:
                out[e] += 1
    return Series(out)


def borwein_b(precision: int) -> Series:
    """(q;q)^3 / (q^3;q^3)."""
    return eta_quotient("1^3 3^-1", precision)


def borwein_c3(precision: int) -> Series:
    """The third cubic theta function with q -> q^3 applied: 3q (q^9;q^9)^3 / (q^3;q^3).

    Only this substituted form exists here; the unsubstituted function has
    exponents in 1/3 + Z, which this integral-exponent carrier cannot hold.
    """
    _check_precision(precision)
    if precision == 0:
        return Series.zero(0)
    f = eta_quotient("9^3 3^-1", precision - 1)
    return Series([0] + [3 * c for c in f.coefficients])


def lambert_cubic(precision: int) -> Series:
    """1 + 6 sum_{n>=1} q^{3n} (1-q^{3n}) / (1-q^{9n}), each term expanded exactly."""
    _check_precision(precision)
    T = precision
    out = [0] * (T + 1)
    out[0] = 1
    n = 1
    while 3 * n <= T:
        e = 3 * n
        while e <= T:
            out[e] += 6
            if e + 3 * n <= T:
                out[e + 3 * n] -= 6
            e += 9 * n
        n += 1
    return Series(out)


def theta_threevar(precision: int) -> Series:
    """Zero-sum three-variable theta: exponents 3(m1^2+m1*m2+m2^2) - 2*m1 - m2.

    This is the m1+m2+m3 = 0 sublattice sum with m3 eliminated; the
    exponent is a nonnegative integer on all of it.
    """
    _check_precision(precision)
    T = precision
    out = [0] * (T + 1)
    B = math.isqrt((4 * T) // 3) + 2
    # exponent >= (9/4)x^2 - 3x at x = max(|m1|,|m2|); outside the box it exceeds T
    assert 9 * (B + 1) * (B + 1) - 12 * (B + 1) > 4 * T
    for m1 in range(-B, B + 1):
        for m2 in range(-B, B + 1):
            e = 3 * (m1 * m1 + m1 * m2 + m2 * m2) - 2 * m1 - m2
            if 0 <= e <= T:
                out[e] += 1
            else:
                assert e > T, f"negative exponent at ({m1}, {m2})"
    return Series(out)
