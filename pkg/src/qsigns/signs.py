"""Sign-pattern prediction, detection, verification and census.

The central object is a :class:`SignPattern`: a modulus, one sign class
per residue, and an onset N meaning the pattern is asserted for all
n > N (N = -1 covers every n >= 0).  Patterns come from three places:

* `predict_quotient_pattern(p, i)` derives the pattern of
  (q^i;q^i)/(q^p;q^p) for prime p > 3 from the dissection offsets,
  together with the sharp onset bound;
* `pattern_catalog()` lists fixed quotients whose patterns follow from
  theta-series dissections;
* `detect_pattern` scans an expansion empirically.

`verify_pattern` checks any pattern against an exact expansion and
reports every violation, and `sign_census` tabulates coefficient signs
per residue class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .dissect import qq_offset, qq_sign_exp
from .products import EtaQuotientSpec
from .series import BeyondPrecision, InvalidParameter, QSignsError, Series

__all__ = [
    "SignClass",
    "SignPattern",
    "PatternReport",
    "SignCertificate",
    "CatalogCase",
    "CorpusEntry",
    "predict_quotient_pattern",
    "verify_pattern",
    "detect_pattern",
    "sign_census",
    "pattern_catalog",
    "corpus",
    "vanishing_predicate",
]


class SignClass(enum.Enum):
    """Predicted behaviour of coefficients in one residue class."""

    POS = "+"
    NEG = "-"
    ZERO = "0"
    MIXED = "?"

    @classmethod
    def from_symbol(cls, symbol: str) -> "SignClass":
        for member in cls:
            if member.value == symbol:
                return member
        raise InvalidParameter(f"unknown sign class symbol {symbol!r}")

    def matches(self, sign: int) -> bool:
        if self is SignClass.POS:
            return sign > 0
        if self is SignClass.NEG:
            return sign < 0
        if self is SignClass.ZERO:
            return sign == 0
        return True


@dataclass(frozen=True)
class SignPattern:
    """Per-residue sign classes mod ``modulus``, asserted for all n > onset."""

    modulus: int
    classes: tuple[SignClass, ...]
    onset: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise InvalidParameter(f"modulus must be positive, got {self.modulus}")
        if len(self.classes) != self.modulus:
            raise InvalidParameter(
                f"need {self.modulus} classes, got {len(self.classes)}"
            )
        if self.onset < -1:
            raise InvalidParameter(f"onset must be >= -1, got {self.onset}")

    @classmethod
    def from_string(cls, classes: str, onset: int = -1) -> "SignPattern":
        return cls(len(classes), tuple(SignClass.from_symbol(c) for c in classes), onset)

    @property
    def class_string(self) -> str:
        return "".join(c.value for c in self.classes)


@dataclass(frozen=True)
class PatternReport:
    """Outcome of checking a pattern against an exact expansion."""

    pattern: SignPattern
    horizon: int
    violations: tuple[tuple[int, SignClass, int], ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def first_violation(self) -> tuple[int, SignClass, int] | None:
        return self.violations[0] if self.violations else None


@dataclass(frozen=True)
class SignCertificate:
    """Everything behind a predicted quotient pattern for (q^i;q^i)/(q^p;q^p).

    ``offsets`` and ``sign_exponents`` are the dissection data per
    0 <= r < p, ``residue_map`` sends r to i(6r^2+r) mod p, and ``onset``
    is the raw bound (it may go below -1; the attached pattern clamps it).
    """

    p: int
    i: int
    offsets: tuple[int, ...]
    sign_exponents: tuple[int, ...]
    residue_map: tuple[int, ...]
    onset: int
    pattern: SignPattern


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def predict_quotient_pattern(p: int, i: int) -> SignCertificate:
    """Predict the sign pattern of (q^i;q^i)/(q^p;q^p) mod p with its onset.

    Residue i(6r^2+r) mod p is positive or negative according to the sign
    exponent of r in the p-dissection of (q;q); residues hit by no r are
    exactly zero.  The onset is max over attained residues of the least
    i*offset(r) landing there, minus p.
    """
    if p <= 3 or not _is_prime(p):
        raise InvalidParameter(f"p must be a prime > 3, got {p}")
    if i <= 1:
        raise InvalidParameter(f"i must be an integer > 1, got {i}")
    if i % p == 0:
        raise InvalidParameter(f"i must not be divisible by p, got i={i}, p={p}")

    offsets = tuple(qq_offset(p, r) for r in range(p))
    sign_exponents = tuple(qq_sign_exp(p, r) for r in range(p))
    residue_map = tuple((i * (6 * r * r + r)) % p for r in range(p))

    classes: list[SignClass] = [SignClass.ZERO] * p
    least: dict[int, int] = {}
    for r in range(p):
        # the offset realizes the residue: i*L(r) = i(6r^2+r) (mod p)
        if (i * offsets[r]) % p != residue_map[r]:
            raise QSignsError(f"offset congruence broken at r={r} for (p={p}, i={i})")
        cls = SignClass.POS if sign_exponents[r] % 2 == 0 else SignClass.NEG
        rho = residue_map[r]
        if classes[rho] is not SignClass.ZERO and classes[rho] is not cls:
            raise QSignsError(f"sign parity clash on residue {rho} for (p={p}, i={i})")
        classes[rho] = cls
        v = i * offsets[r]
        if rho not in least or v < least[rho]:
            least[rho] = v
    onset = max(least.values()) - p
    pattern = SignPattern(p, tuple(classes), max(onset, -1))
    return SignCertificate(
        p=p,
        i=i,
        offsets=offsets,
        sign_exponents=sign_exponents,
        residue_map=residue_map,
        onset=onset,
        pattern=pattern,
    )


def verify_pattern(series: Series, pattern: SignPattern, horizon: int) -> PatternReport:
    """Check every coefficient sign in (onset, horizon] against the pattern."""
    if horizon > series.precision:
        raise BeyondPrecision(
            f"horizon {horizon} beyond series precision {series.precision}"
        )
    cs = series.coefficients
    classes = pattern.classes
    m = pattern.modulus
    violations = []
    for n in range(max(0, pattern.onset + 1), horizon + 1):
        cls = classes[n % m]
        if cls is SignClass.MIXED:
            continue
        c = cs[n]
        sign = (c > 0) - (c < 0)
        if not cls.matches(sign):
            violations.append((n, cls, sign))
    return PatternReport(pattern=pattern, horizon=horizon, violations=tuple(violations))


def detect_pattern(series: Series, modulus: int, horizon: int) -> SignPattern:
    """Empirically classify each residue class up to the horizon.

    A residue is MIXED when both strict signs occur in the tail window
    (exponents above horizon/2); otherwise it gets the nonzero sign seen
    there (ZERO when the window is all zeros).  The onset is one past the
    largest exponent violating its class, so the estimate always verifies
    against the same expansion.  It remains an estimate: nothing beyond
    the horizon is claimed.
    """
    if horizon > series.precision:
        raise BeyondPrecision(
            f"horizon {horizon} beyond series precision {series.precision}"
        )
    if modulus < 1:
        raise InvalidParameter(f"modulus must be positive, got {modulus}")
    if horizon + 1 < modulus:
        raise InvalidParameter(
            f"horizon {horizon} leaves residue classes of modulus {modulus} empty"
        )
    cs = series.coefficients
    classes: list[SignClass] = []
    onset = 0
    for r in range(modulus):
        exps = range(r, horizon + 1, modulus)
        signs = [(cs[n] > 0) - (cs[n] < 0) for n in exps]
        window = [s for n, s in zip(exps, signs) if 2 * n > horizon] or signs[-1:]
        has_pos = any(s > 0 for s in window)
        has_neg = any(s < 0 for s in window)
        if has_pos and has_neg:
            classes.append(SignClass.MIXED)
            continue
        cls = SignClass.POS if has_pos else SignClass.NEG if has_neg else SignClass.ZERO
        classes.append(cls)
        for n, s in zip(exps, signs):
            if not cls.matches(s) and n + 1 > onset:
                onset = n + 1
    return SignPattern(modulus, tuple(classes), onset)


def sign_census(
    series: Series, modulus: int, terms_per_class: int
) -> list[tuple[int, int, int]]:
    """Count (negative, zero, positive) coefficients per residue class.

    Residue r scans the ``terms_per_class`` exponents r, r+m, ...,
    r+(K-1)m, so the series must reach m*K - 1.
    """
    if modulus < 1 or terms_per_class < 1:
        raise InvalidParameter("modulus and terms_per_class must be positive")
    need = modulus * terms_per_class - 1
    if series.precision < need:
        raise BeyondPrecision(
            f"census needs precision {need}, series has {series.precision}"
        )
    cs = series.coefficients
    rows = []
    for r in range(modulus):
        neg = zero = pos = 0
        for k in range(terms_per_class):
            c = cs[r + k * modulus]
            if c < 0:
                neg += 1
            elif c == 0:
                zero += 1
            else:
                pos += 1
        rows.append((neg, zero, pos))
    return rows


# ----------------------------------------------------------------------
# Catalog of fixed quotients with proven patterns
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogCase:
    """A quotient with a known pattern: spec, pattern, and raw parameters."""

    case_id: str
    spec: EtaQuotientSpec
    pattern: SignPattern
    params: dict = field(default_factory=dict)


def _triangular_case(p: int) -> CatalogCase:
    # positive exactly on residues of r(r+1)/2; onset from the least
    # triangular number landing in each attained residue class
    least: dict[int, int] = {}
    for r in range(p):
        t = r * (r + 1) // 2
        s = t % p
        if s not in least or t < least[s]:
            least[s] = t
    raw = max(least.values()) - p
    classes = tuple(
        SignClass.POS if s in least else SignClass.ZERO for s in range(p)
    )
    return CatalogCase(
        case_id=f"2^2 1^-1 {p}^-1",
        spec=EtaQuotientSpec.parse(f"2^2 1^-1 {p}^-1"),
        pattern=SignPattern(p, classes, max(raw, -1)),
        params={"family": "triangular", "p": p, "raw_onset": raw},
    )


def _alt_squares_case(p: int) -> CatalogCase:
    # mod 4p: positive on even squares, negative on odd squares, zero off
    # the squares; onset from least squares per attained residue mod 4p
    mod = 4 * p
    pos = {(4 * t * t) % mod for t in range(p)}
    neg = {(4 * t * t + 4 * t + 1) % mod for t in range(p)}
    least: dict[int, int] = {}
    for r in range(mod):
        s = (r * r) % mod
        if s not in least or r * r < least[s]:
            least[s] = r * r
    raw = max(least.values()) - mod
    classes = tuple(
        SignClass.POS if s in pos else SignClass.NEG if s in neg else SignClass.ZERO
        for s in range(mod)
    )
    return CatalogCase(
        case_id=f"1^2 2^-1 {mod}^-1",
        spec=EtaQuotientSpec.parse(f"1^2 2^-1 {mod}^-1"),
        pattern=SignPattern(mod, classes, max(raw, -1)),
        params={"family": "alt-squares", "p": p, "raw_onset": raw},
    )


def _fixed_case(spec: str, classes: str) -> CatalogCase:
    return CatalogCase(
        case_id=spec,
        spec=EtaQuotientSpec.parse(spec),
        pattern=SignPattern.from_string(classes, onset=0),
        params={"family": "fixed"},
    )


def pattern_catalog() -> list[CatalogCase]:
    """All catalogued quotients with their proven patterns and onsets."""
    cases = [_triangular_case(p) for p in (3, 5, 7)]
    cases += [_alt_squares_case(p) for p in (1, 3, 5, 7)]
    cases += [
        _fixed_case("1^3 3^-2", "+-0"),
        _fixed_case("1^2 2^-1 3^-2", "+-0"),
        _fixed_case("1^4 2^-2 4^-1", "+-+0"),
        _fixed_case("2^10 1^-4 4^-5", "+++0"),
        _fixed_case("1^2 5^-3", "+--++"),
        _fixed_case("1^9 3^-9", "+-+--+0-+"),
        _fixed_case("1^9 3^-11", "+-+--+--+"),
        _fixed_case("1^9 3^-12", "+-+0-+0-+"),
        _fixed_case("1^9 3^-13", "+-+"),
    ]
    return cases


# ----------------------------------------------------------------------
# Empirical corpus
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    """A named product with an empirically verified pattern and horizon."""

    name: str
    spec: EtaQuotientSpec
    pattern: SignPattern
    horizon: int

    def to_record(self) -> str:
        p = self.pattern
        return "|".join(
            (self.name, str(self.spec), str(p.modulus), p.class_string,
             str(p.onset), str(self.horizon))
        )

    @classmethod
    def from_record(cls, record: str) -> "CorpusEntry":
        parts = record.strip().split("|")
        if len(parts) != 6:
            raise InvalidParameter(f"corpus record needs 6 fields, got {len(parts)}")
        name, spec, modulus, classes, onset, horizon = parts
        if len(classes) != int(modulus):
            raise InvalidParameter(
                f"class string {classes!r} does not match modulus {modulus}"
            )
        return cls(
            name=name,
            spec=EtaQuotientSpec.parse(spec),
            pattern=SignPattern.from_string(classes, onset=int(onset)),
            horizon=int(horizon),
        )


# Onsets below were read off the exact expansions once and frozen; the
# test suite re-derives them.  Products with negated arguments use
# (-x; q) = (x^2; q^2)/(x; q) to stay inside the (a, b, delta) grammar.
_CORPUS_RECORDS = (
    "period8-quartic|1^4 2^2 4^-2|8|+-0+--0+|0|5000",
    "period9-ninth|1^9 3^-5|9|+-+--++-+|-1|5000",
    "rr-quotient|2.5^1 3.5^1 1.5^-1 4.5^-1|5|++---|9|5000",
    "octic-quotient|3.8^1 5.8^1 1.8^-1 7.8^-1|4|???0|-1|5000",
    "hirschhorn-a|2.10^1 8.10^1 1.5^-1 4.5^-1 1.10^3 9.10^3|5|??0?0|-1|5000",
    "hirschhorn-b|4.10^1 6.10^1 2.5^-1 3.5^-1 3.10^3 7.10^3|5|?0??0|-1|5000",
)


def corpus() -> list[CorpusEntry]:
    """The regression corpus of quoted sign-pattern and vanishing results."""
    return [CorpusEntry.from_record(r) for r in _CORPUS_RECORDS]


def vanishing_predicate(n: int) -> bool:
    """Arithmetic test for forced zero coefficients of a catalogued family.

    True iff n = 2 (mod 3) and some prime p = 3 (mod 4) divides n to an
    odd power (trial division; inputs are desk-scale).
    """
    if n < 1:
        raise InvalidParameter(f"need n >= 1, got {n}")
    if n % 3 != 2:
        return False
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            if d % 4 == 3 and e % 2 == 1:
                return True
        d += 1
    return m > 1 and m % 4 == 3
