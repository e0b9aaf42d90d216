"""m-dissections of quintuple products, of (q;q) and of (q;q)^3.

The general m-dissection writes the five-factor quintuple product as a
signed sum of m narrower quintuple products, one per residue class: the
component for residue r is

    (-1)^{s(r)} q^{L(r)} (q^{t1}, q^{P1-t1}, q^{P1}; q^{P1}) (q^{t2}, q^{P2-t2}; q^{P2})

with periods P1 = m^2*M and P2 = 2*m^2*M.  The t parameters are only
determined up to a +- choice tied to m mod 3; `quintuple_components`
resolves it by probing both candidates against a direct expansion at a
small precision and keeping the one that reassembles exactly.  For the
(q;q) case (M=4, j=1), `qq_components` evaluates the explicit closed
forms instead, which double as a regression oracle for the general
routine.

All threshold comparisons and offset evaluations are exact rational
arithmetic; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .products import (
    EtaQuotientSpec,
    PochhammerFactor,
    eta_quotient,
    lambert_cubic,
    pochhammer,
    quintuple_product,
)
from .series import InvalidParameter, QSignsError, Series

__all__ = [
    "DissectionComponent",
    "DissectionExpression",
    "qq_offset",
    "qq_sign_exp",
    "quintuple_components",
    "qq_components",
    "component_series",
    "assemble",
    "three_dissection_qq",
    "three_dissection_qq3",
    "ramanujan5",
]

# probe precision for resolving the +- choice; the swept parameter ranges
# all disambiguate (or coincide) well below this order
_PROBE_PRECISION = 60


@dataclass(frozen=True)
class DissectionComponent:
    """One residue-class term of an m-dissection."""

    r: int
    sign_exp: int
    offset: int
    t1: int
    t2: int
    period1: int
    period2: int

    def __post_init__(self) -> None:
        if self.sign_exp not in (0, 1, 2):
            raise InvalidParameter(f"sign exponent must be 0, 1 or 2, got {self.sign_exp}")
        if self.offset < 0:
            raise InvalidParameter(f"offset must be nonnegative, got {self.offset}")
        # reduction never lands on the boundary for valid parameters; a zero
        # t would degenerate a factor to (1;.) = 0
        if not 0 < self.t1 < self.period1:
            raise InvalidParameter(f"t1={self.t1} outside (0, {self.period1})")
        if not 0 < self.t2 < self.period2:
            raise InvalidParameter(f"t2={self.t2} outside (0, {self.period2})")

    @property
    def sign(self) -> int:
        return -1 if self.sign_exp % 2 else 1


@dataclass(frozen=True)
class DissectionExpression:
    """A full m-dissection: one component per residue class of the target."""

    target: tuple
    components: tuple[DissectionComponent, ...]

    @property
    def modulus(self) -> int:
        return len(self.components)


# ----------------------------------------------------------------------
# Closed forms for the (q;q) dissection (M=4, j=1)
# ----------------------------------------------------------------------

def _check_modulus(m: int) -> None:
    if m < 2:
        raise InvalidParameter(f"need m >= 2, got {m}")
    if m % 3 == 0:
        raise InvalidParameter(f"modulus must not be divisible by 3, got {m}")


def qq_offset(m: int, r: int) -> int:
    """Prefactor exponent of residue r in the m-dissection of (q;q)."""
    _check_modulus(m)
    if not 0 <= r < m:
        raise InvalidParameter(f"residue {r} not in [0, {m})")
    base = 6 * r * r + r
    if m % 3 == 1:
        if 12 * r <= 4 * m - 1:
            return base
        if 12 * r <= 10 * m - 1:
            return base - 8 * m * r + (8 * m * m - 2 * m) // 3
        return base - 12 * m * r + 6 * m * m - m
    if 12 * r <= 2 * m - 1:
        return base
    if 12 * r <= 8 * m - 1:
        return base - 4 * m * r + (2 * m * m - m) // 3
    return base - 12 * m * r + 6 * m * m - m


def qq_sign_exp(m: int, r: int) -> int:
    """Sign exponent of residue r in the m-dissection of (q;q)."""
    _check_modulus(m)
    if not 0 <= r < m:
        raise InvalidParameter(f"residue {r} not in [0, {m})")
    if m % 3 == 1:
        lo, hi = 4 * m - 1, 10 * m - 1
    else:
        lo, hi = 2 * m - 1, 8 * m - 1
    if 12 * r <= lo:
        return 0
    return 1 if 12 * r <= hi else 2


def _qq_t1(m: int, r: int) -> int:
    if m % 3 == 1:
        if 12 * r < 10 * m - 1:
            return (2 * m * m + m) // 3 + 4 * m * r
        return (-10 * m * m + m) // 3 + 4 * m * r
    if 12 * r < 2 * m - 1:
        return (2 * m * m - m) // 3 - 4 * m * r
    return (14 * m * m - m) // 3 - 4 * m * r


def _qq_t2(m: int, r: int) -> int:
    if m % 3 == 1:
        if 12 * r < 4 * m - 1:
            return (16 * m * m + 2 * m) // 3 + 8 * m * r
        return (-8 * m * m + 2 * m) // 3 + 8 * m * r
    if 12 * r < 8 * m - 1:
        return (8 * m * m + 2 * m) // 3 + 8 * m * r
    return (-16 * m * m + 2 * m) // 3 + 8 * m * r


def qq_components(m: int) -> DissectionExpression:
    """The m-dissection of (q;q) via the explicit closed forms."""
    _check_modulus(m)
    comps = []
    for r in range(m):
        comps.append(
            DissectionComponent(
                r=r,
                sign_exp=qq_sign_exp(m, r),
                offset=qq_offset(m, r),
                t1=_qq_t1(m, r),
                t2=_qq_t2(m, r),
                period1=4 * m * m,
                period2=8 * m * m,
            )
        )
    return DissectionExpression(target=("quintuple", 4, 1, m), components=tuple(comps))


# ----------------------------------------------------------------------
# General quintuple dissection
# ----------------------------------------------------------------------

def _candidate(M: int, j: int, m: int, eps: int) -> list[DissectionComponent] | None:
    """Components for one aligned +- choice, or None when a t is non-integral."""
    P1 = m * m * M
    P2 = 2 * m * m * M
    ref = (
        Fraction(7 * M, 24)
        + Fraction(j, 2) * (Fraction(j, M) - 1)
        + Fraction(M - 2 * j, 2) * (Fraction(M - 2 * j, 2 * M) - 1)
    )
    if m % 3 == 1:
        s_lo = Fraction((2 * m + 1) * M - 6 * j, 6 * M)
        s_hi = Fraction((5 * m + 1) * M - 6 * j, 6 * M)
    else:
        s_lo = Fraction((m + 1) * M - 6 * j, 6 * M)
        s_hi = Fraction((4 * m + 1) * M - 6 * j, 6 * M)
    comps = []
    for r in range(m):
        t1_raw = Fraction(m * M * (m + eps * (6 * r - 1)), 6) + eps * j * m
        t2_raw = m * m * M + 2 * j * m + eps * Fraction(M * (m + eps * (6 * r - 1)) * m, 3)
        if t1_raw.denominator != 1 or t2_raw.denominator != 1:
            return None
        t1 = int(t1_raw) % P1
        t2 = int(t2_raw) % P2
        if t1 == 0 or t2 == 0:
            return None
        offset = (
            Fraction(7 * P1, 24)
            + Fraction(t1, 2) * (Fraction(t1, P1) - 1)
            + Fraction(t2, 2) * (Fraction(t2, P2) - 1)
            - ref
        )
        if offset.denominator != 1 or offset < 0:
            return None
        s = 0 if r <= s_lo else (1 if r <= s_hi else 2)
        comps.append(
            DissectionComponent(
                r=r, sign_exp=s, offset=int(offset), t1=t1, t2=t2, period1=P1, period2=P2
            )
        )
    return comps


def quintuple_components(M: int, j: int, m: int) -> DissectionExpression:
    """The m-dissection of the (M, j) quintuple product.

    Requires M >= 3, 1 <= j < M/2, and m >= 2 not divisible by 3.
    """
    if M < 3:
        raise InvalidParameter(f"need M >= 3, got {M}")
    if not 1 <= j or not 2 * j < M:
        raise InvalidParameter(f"need 1 <= j < M/2, got j={j}, M={M}")
    _check_modulus(m)
    target = quintuple_product(M, j, _PROBE_PRECISION)
    # +1 pairs with m = 1 mod 3, -1 with m = -1 mod 3; probe both anyway
    # and keep whichever reassembles (they can coincide as products)
    preferred = 1 if m % 3 == 1 else -1
    for eps in (preferred, -preferred):
        comps = _candidate(M, j, m, eps)
        if comps is None:
            continue
        expr = DissectionExpression(target=("quintuple", M, j, m), components=tuple(comps))
        if assemble(expr, _PROBE_PRECISION) == target:
            return expr
    raise QSignsError(f"no sign choice reassembles for (M={M}, j={j}, m={m})")


def component_series(comp: DissectionComponent, precision: int) -> Series:
    """Expand one dissection component to the given precision."""
    spec = EtaQuotientSpec(
        (
            PochhammerFactor(comp.t1, comp.period1),
            PochhammerFactor(comp.period1 - comp.t1, comp.period1),
            PochhammerFactor(comp.period1, comp.period1),
            PochhammerFactor(comp.t2, comp.period2),
            PochhammerFactor(comp.period2 - comp.t2, comp.period2),
        )
    )
    prod = eta_quotient(spec, precision)
    out = [0] * (precision + 1)
    sign = comp.sign
    cs = prod.coefficients
    for i in range(precision + 1 - comp.offset):
        if cs[i]:
            out[i + comp.offset] = sign * cs[i]
    return Series(out)


def assemble(expr: DissectionExpression, precision: int) -> Series:
    """Sum all components; equals the target product when the dissection is exact."""
    total = Series.zero(precision)
    for comp in expr.components:
        total = total + component_series(comp, precision)
    return total


# ----------------------------------------------------------------------
# 3-dissections and the classical 5-dissection
# ----------------------------------------------------------------------

def three_dissection_qq(precision: int) -> tuple[Series, Series, Series]:
    """The three signed summands of the 3-dissection of (q;q).

    Summand k is supported on exponents = k (mod 3) and the plain sum of
    the three equals (q;q).  Each summand is a single triple product:
    (q^12,q^15,q^27;q^27), -q (q^6,q^21,q^27;q^27), -q^2 (q^3,q^24,q^27;q^27).
    """
    s0 = eta_quotient("12.27 15.27 27", precision)
    s1 = -eta_quotient("6.27 21.27 27", precision).shift(1)
    s2 = -eta_quotient("3.27 24.27 27", precision).shift(2)
    return s0, s1, s2


def three_dissection_qq3(precision: int) -> tuple[Series, Series]:
    """The two signed summands of the 3-dissection of (q;q)^3.

    (q^3;q^3) times the cubic Lambert series, and -3q (q^9;q^9)^3; their
    sum equals (q;q)^3.
    """
    s0 = pochhammer(3, 3, precision) * lambert_cubic(precision)
    cube = eta_quotient("9^3", precision)
    out = [0] * (precision + 1)
    for i in range(precision):
        out[i + 1] = -3 * cube.coefficient(i)
    return s0, Series(out)


def ramanujan5(precision: int) -> tuple[Series, Series, Series]:
    """The three signed summands of Ramanujan's 5-dissection of (q;q).

    Summand k is supported on exponents = k (mod 5); the sum equals (q;q).
    """
    s0 = eta_quotient("25 10.25 15.25 5.25^-1 20.25^-1", precision)
    s1 = -pochhammer(25, 25, precision).shift(1)
    s2 = -eta_quotient("25 5.25 20.25 10.25^-1 15.25^-1", precision).shift(2)
    return s0, s1, s2
