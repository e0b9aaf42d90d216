"""Exact arithmetic on truncated integer power series in q.

A :class:`Series` stores the coefficients of q^0 .. q^T exactly, as
arbitrary-precision Python ints; T is the inclusive truncation order.
Binary operations truncate to the shorter operand and never extend
precision.  Instances are immutable and safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from ._backend import invert_dense, mul_dense


class QSignsError(Exception):
    """Base class for errors raised by this package."""


class NonUnitConstantTerm(QSignsError):
    """Inversion requires constant term +1 or -1."""


class BeyondPrecision(QSignsError):
    """Requested data lies above the truncation order."""


class InvalidParameter(QSignsError):
    """Parameter outside its documented range."""


class Series:
    """A truncated power series sum_{n=0}^{T} c_n q^n with exact integer c_n."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(coeffs)
        if not cs:
            raise InvalidParameter("a series needs at least its constant term")
        self._coeffs = cs

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, precision: int) -> "Series":
        return cls([0] * (precision + 1))

    @classmethod
    def one(cls, precision: int) -> "Series":
        return cls([1] + [0] * precision)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]], precision: int) -> "Series":
        """Build a series from (exponent, coefficient) pairs; others are zero."""
        out = [0] * (precision + 1)
        for e, c in terms:
            if e < 0:
                raise InvalidParameter(f"negative exponent {e} is not representable")
            if e <= precision:
                out[e] += c
        return cls(out)

    # -- basic accessors ----------------------------------------------

    @property
    def precision(self) -> int:
        """Inclusive truncation order T."""
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> int:
        if n < 0:
            raise InvalidParameter(f"exponent must be nonnegative, got {n}")
        if n >= len(self._coeffs):
            raise BeyondPrecision(f"coefficient {n} beyond precision {self.precision}")
        return self._coeffs[n]

    def sign_of(self, n: int) -> int:
        c = self.coefficient(n)
        return (c > 0) - (c < 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if len(self._coeffs) > 8 else ""
        return f"Series([{head}{tail}], precision={self.precision})"

    def matches(self, other: "Series") -> bool:
        """Coefficientwise equality up to the smaller precision."""
        n = min(len(self._coeffs), len(other._coeffs))
        return self._coeffs[:n] == other._coeffs[:n]

    def truncate(self, precision: int) -> "Series":
        """Drop coefficients above ``precision`` (which must not exceed T)."""
        if precision > self.precision:
            raise BeyondPrecision(
                f"cannot extend precision {self.precision} to {precision}"
            )
        return Series(self._coeffs[: precision + 1])

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        n = min(len(self._coeffs), len(other._coeffs))
        a, b = self._coeffs, other._coeffs
        return Series([a[i] + b[i] for i in range(n)])

    def __sub__(self, other: "Series") -> "Series":
        n = min(len(self._coeffs), len(other._coeffs))
        a, b = self._coeffs, other._coeffs
        return Series([a[i] - b[i] for i in range(n)])

    def __neg__(self) -> "Series":
        return Series([-c for c in self._coeffs])

    def __mul__(self, other: "Series") -> "Series":
        n = min(len(self._coeffs), len(other._coeffs))
        return Series(mul_dense(list(self._coeffs), list(other._coeffs), n))

    def invert(self) -> "Series":
        """Series y with self * y = 1 + O(q^{T+1}); constant term must be +-1."""
        if self._coeffs[0] not in (1, -1):
            raise NonUnitConstantTerm(
                f"cannot invert series with constant term {self._coeffs[0]}"
            )
        return Series(invert_dense(list(self._coeffs), len(self._coeffs)))

    def power(self, e: int) -> "Series":
        """Integer power by repeated squaring; negative e inverts first."""
        if e == 0:
            return Series.one(self.precision)
        base = self.invert() if e < 0 else self
        k = abs(e)
        acc = None
        sq = base
        while k:
            if k & 1:
                acc = sq if acc is None else acc * sq
            k >>= 1
            if k:
                sq = sq * sq
        return acc

    def __pow__(self, e: int) -> "Series":
        return self.power(e)

    # -- exponent reindexing -------------------------------------------

    def shift(self, k: int) -> "Series":
        """Multiply by q^k; precision stays T (top k coefficients drop off)."""
        if k < 0:
            raise InvalidParameter(f"shift must be nonnegative, got {k}")
        n = len(self._coeffs)
        out = [0] * n
        for i in range(n - k):
            out[i + k] = self._coeffs[i]
        return Series(out)

    def dilate(self, m: int, cap: int | None = None) -> "Series":
        """Substitute q -> q^m; precision grows to m*T (or ``cap`` if smaller)."""
        if m < 1:
            raise InvalidParameter(f"dilation step must be positive, got {m}")
        prec = self.precision * m
        if cap is not None:
            prec = min(prec, cap)
        out = [0] * (prec + 1)
        for i, c in enumerate(self._coeffs):
            if i * m > prec:
                break
            out[i * m] = c
        return Series(out)

    def slice(self, r: int, m: int) -> "Series":
        """Extract sum_n c_{mn+r} q^n; precision becomes floor((T-r)/m)."""
        if m < 1:
            raise InvalidParameter(f"modulus must be positive, got {m}")
        if not 0 <= r < m:
            raise InvalidParameter(f"residue {r} not in [0, {m})")
        if r > self.precision:
            raise BeyondPrecision(f"residue {r} beyond precision {self.precision}")
        return Series(self._coeffs[r:: m])
