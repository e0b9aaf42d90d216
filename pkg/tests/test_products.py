"""Product and theta-series constructors against their independent oracles."""

import pytest

from qsigns import (
    EtaQuotientSpec,
    InvalidParameter,
    PochhammerFactor,
    Series,
    borwein_a,
    borwein_b,
    borwein_c3,
    eta_quotient,
    lambert_cubic,
    pochhammer,
    quintuple_product,
    theta_alt_squares,
    theta_squares,
    theta_threevar,
    theta_triangular,
    theta_weighted,
)


def brute_pochhammer(a, b, T):
    """Multiply out (1 - q^{a+kb}) factors naively: the oracle."""
    out = [1] + [0] * T
    for e in range(a, T + 1, b):
        nxt = out[:]
        for i in range(T + 1 - e):
            nxt[i + e] -= out[i]
        out = nxt
    return Series(out)


# -- pochhammer -----------------------------------------------------------

def test_pochhammer_pentagonal_head():
    assert pochhammer(1, 1, 12) == Series([1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1])


def test_pochhammer_dilated():
    assert pochhammer(2, 2, 6) == Series([1, 0, -1, 0, -1, 0, 0])


def test_pochhammer_trivial_below_offset():
    assert pochhammer(5, 5, 4) == Series.one(4)


def test_pochhammer_matches_brute_force():
    for a, b in ((1, 1), (2, 5), (3, 3), (1, 4)):
        assert pochhammer(a, b, 80) == brute_pochhammer(a, b, 80)


def test_pochhammer_rejects_bad_offsets():
    with pytest.raises(InvalidParameter):
        pochhammer(0, 1, 5)
    with pytest.raises(InvalidParameter):
        pochhammer(1, 0, 5)


def test_constructors_reject_negative_precision():
    for build in (
        lambda: eta_quotient("1^1", -1),
        lambda: borwein_a(-2),
        lambda: lambert_cubic(-1),
        lambda: theta_threevar(-3),
        lambda: borwein_c3(-1),
        lambda: theta_alt_squares(-1),
    ):
        with pytest.raises(InvalidParameter):
            build()


# -- eta quotients and the spec grammar ------------------------------------

def test_eta_quotient_head():
    assert eta_quotient("2^1 5^-1", 9) == Series([1, 0, -1, 0, -1, 1, 0, -1, 0, -1])


def test_eta_quotient_cancellation():
    assert eta_quotient("1^1 1^-1", 5) == Series.one(5)


def test_eta_quotient_partitions():
    assert eta_quotient("1^-1", 5) == Series([1, 1, 2, 3, 5, 7])


def test_eta_quotient_mixed_bases_match_brute_force():
    spec = "2.5^1 3.5^1 1.5^-1 4.5^-1"
    expected = (
        brute_pochhammer(2, 5, 60)
        * brute_pochhammer(3, 5, 60)
        * brute_pochhammer(1, 5, 60).invert()
        * brute_pochhammer(4, 5, 60).invert()
    )
    assert eta_quotient(spec, 60) == expected


def test_spec_parse_shorthand_and_pairs():
    spec = EtaQuotientSpec.parse("2^5 7^-1 3.10^2 4.9")
    assert spec.factors == (
        PochhammerFactor(2, 2, 5),
        PochhammerFactor(7, 7, -1),
        PochhammerFactor(3, 10, 2),
        PochhammerFactor(4, 9, 1),
    )


def test_spec_roundtrips_through_str():
    spec = EtaQuotientSpec.parse("1^4 2^2 4^-2")
    assert EtaQuotientSpec.parse(str(spec)) == spec


@pytest.mark.parametrize("token", ["q", "1.2.3", "^3", "2^", "2^-", "0^1", "1.0^2", "-1"])
def test_spec_rejects_bad_tokens(token):
    with pytest.raises(InvalidParameter):
        EtaQuotientSpec.parse(token)


def test_spec_rejects_empty():
    with pytest.raises(InvalidParameter):
        EtaQuotientSpec.parse("   ")


# -- quintuple product ------------------------------------------------------

def test_quintuple_4_1_is_euler_product():
    assert quintuple_product(4, 1, 12) == pochhammer(1, 1, 12)


def test_quintuple_3_1_head():
    # direct factor multiplication: (1-q)(1-q^2)(1-q)... = 1 - 2q + 0q^2 + ...
    assert quintuple_product(3, 1, 2) == Series([1, -2, 0])


def test_quintuple_constant_term():
    assert quintuple_product(5, 2, 0) == Series.one(0)


@pytest.mark.parametrize("M,j", [(2, 1), (4, 2), (5, 0), (3, 2)])
def test_quintuple_rejects_bad_parameters(M, j):
    with pytest.raises(InvalidParameter):
        quintuple_product(M, j, 10)


# -- theta series ------------------------------------------------------------

def test_alternating_squares_head():
    assert theta_alt_squares(9) == Series([1, -2, 0, 0, 2, 0, 0, 0, 0, -2])
    assert theta_alt_squares(0) == Series.one(0)


def test_triangular_head():
    assert theta_triangular(10) == Series([1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1])
    assert theta_triangular(0) == Series.one(0)


def test_squares_head():
    assert theta_squares(9) == Series([1, 2, 0, 0, 2, 0, 0, 0, 0, 2])
    assert theta_squares(0) == Series.one(0)


def test_weighted_theta_head():
    expected = Series.from_terms([(0, 1), (1, -2), (3, 1), (6, 1), (10, -2), (15, 1)], 15)
    assert theta_weighted(15) == expected
    assert theta_weighted(0) == Series.one(0)


@pytest.mark.parametrize(
    "theta,spec",
    [
        (theta_alt_squares, "1^2 2^-1"),
        (theta_triangular, "2^2 1^-1"),
        (theta_squares, "2^5 1^-2 4^-2"),
        (theta_weighted, "1^2 6^1 2^-1 3^-1"),
    ],
)
def test_theta_equals_eta_quotient(theta, spec):
    assert theta(200) == eta_quotient(spec, 200)


# -- cubic theta functions -----------------------------------------------------

def test_borwein_a_head():
    assert borwein_a(7) == Series([1, 6, 0, 6, 6, 0, 0, 12])


def test_borwein_b_is_cubic_difference():
    T = 200
    a3 = borwein_a((T + 2) // 3).dilate(3, cap=T)
    assert borwein_b(T) == a3 - borwein_c3(T)


def test_borwein_cubes_identity():
    T = 150
    a3 = borwein_a(T // 3).dilate(3, cap=T)
    b3 = borwein_b(T // 3).dilate(3, cap=T)
    c3 = borwein_c3(T)
    assert a3.power(3) == b3.power(3) + c3.power(3)


def test_lambert_cubic_head():
    assert lambert_cubic(12) == Series.from_terms([(0, 1), (3, 6), (9, 6), (12, 6)], 12)
    assert lambert_cubic(2) == Series.one(2)


def test_lambert_cubic_equals_dilated_lattice_sum():
    assert lambert_cubic(300) == borwein_a(100).dilate(3, cap=300)


def test_threevar_constant_term():
    assert theta_threevar(0) == Series.one(0)


def test_threevar_nonnegative_and_matches_quotient():
    t = theta_threevar(200)
    assert all(c >= 0 for c in t.coefficients)
    assert t == eta_quotient("3^3 1^-1", 200)
