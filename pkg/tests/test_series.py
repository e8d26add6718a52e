import pytest

from weylgrowth.cartan import CartanMatrix, builtin_finite
from weylgrowth.errors import ParseError, UnsupportedTypeError
from weylgrowth.series import (
    FactoredPolynomial,
    Polynomial,
    expand_factors,
    format_polynomial,
    parse_polynomial,
    poincare_finite,
    poly_divexact,
    series_div,
)
from weylgrowth.weyl import enumerate_levels


def conv(a, b):
    """Independent convolution oracle for polynomial products."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        for j, bv in enumerate(b):
            out[i + j] += av * bv
    while out and out[-1] == 0:
        out.pop()
    return out


def P(*coeffs):
    return Polynomial(coeffs)


def test_mul_cyclotomic_identity():
    assert P(1, 1) * P(1, -1, 1) == P(1, 0, 0, 1)


def test_add_zero_is_identity():
    p = P(3, 0, -2, 7)
    assert p + Polynomial() == p


def test_mul_hand_expansion():
    assert P(1, 1) * P(1, 1, 1, 1) == P(1, 2, 2, 2, 1)


def test_mul_matches_convolution_oracle():
    samples = [P(), P(1), P(0, 1), P(1, -2, 0, 3), P(-1, 1, 1), P(2, 0, 0, -5, 1)]
    for a in samples:
        for b in samples:
            assert (a * b).coeffs == tuple(conv(list(a.coeffs), list(b.coeffs)))


def test_canonical_form_trims_trailing_zeros():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).coeffs == ()
    assert Polynomial().degree == -1


def test_divexact():
    assert poly_divexact(P(1, 0, 0, 1), P(1, 1)) == P(1, -1, 1)
    assert poly_divexact(P(1, 0, 0, 1), P(1, 0, 1)) is None
    with pytest.raises(ZeroDivisionError):
        poly_divexact(P(1), Polynomial())


def test_divexact_inverts_mul():
    a = P(1, -2, 3)
    b = P(2, 0, -1, 1)
    assert poly_divexact(a * b, b) == a
    assert poly_divexact(a * b, a) == b


def test_series_div_geometric():
    assert series_div(P(1), P(1, -1), 4) == [1, 1, 1, 1, 1]


def test_series_div_of_polynomial_by_one():
    num = P(1, 0, -2, 5)
    assert series_div(num, P(1), num.degree) == list(num.coeffs)


def test_series_div_times_denominator_recovers_numerator():
    num = P(1, 3, 5, 7, 8, 8, 7, 5, 3, 1)
    den = P(1, 0, 0, -1, -1, 2)
    n = 25
    c = series_div(num, den, n)
    # convolve back and compare through degree n
    back = [
        sum(den.coefficient(j) * c[k - j] for j in range(0, k + 1))
        for k in range(n + 1)
    ]
    assert back == [num.coefficient(k) for k in range(n + 1)]


def test_series_div_requires_unit_constant_term():
    with pytest.raises(ZeroDivisionError):
        series_div(P(1), P(0, 1), 3)


def test_expand_factors_empty_product_is_one():
    assert expand_factors(FactoredPolynomial(factors=())) == P(1)


def test_expand_factors_q1_pattern():
    f = FactoredPolynomial.from_strings("1+t", "1+t^2", "1-t+t^2", "1-t^2-t^3")
    expected = [1, 0, 0, 0, -1, -1, -1, -1, -1]
    assert expand_factors(f) == Polynomial(expected)
    # re-verify by brute-force convolution of the factor coefficient lists
    acc = [1]
    for coeffs in ([1, 1], [1, 0, 1], [1, -1, 1], [1, 0, -1, -1]):
        acc = conv(acc, coeffs)
    assert acc == expected


def test_expand_factors_multiplicity():
    f = FactoredPolynomial.from_strings(("1+t", 2), "1-2t", "1+t^2", "1-t+t^2", "1+t+t^2")
    p = expand_factors(f)
    assert p.coefficient(0) == 1
    assert p.degree == 9
    oracle = conv(conv(conv([1, 1], [1, 1]), [1, -2]), [1, 0, 1])
    oracle = conv(conv(oracle, [1, -1, 1]), [1, 1, 1])
    assert list(p.coeffs) == oracle


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("1 - t^2 - t^3", (1, 0, -1, -1)),
        ("t + 1 + t", (1, 2)),
        ("1-2t", (1, -2)),
        ("  -1 + t ", (-1, 1)),
        ("0", ()),
        ("3t^2", (0, 0, 3)),
        ("t^0", (1,)),
        ("2 t", (0, 2)),
    ],
)
def test_parse_polynomial(text, coeffs):
    assert parse_polynomial(text) == Polynomial(coeffs)


@pytest.mark.parametrize("bad", ["", "t +", "^2", "1 * t", "t^-1", "+ + 1", "x"])
def test_parse_polynomial_rejects(bad):
    with pytest.raises(ParseError):
        parse_polynomial(bad)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse_polynomial("1 + t^x")
    assert err.value.position == 6


def test_format_polynomial():
    assert format_polynomial(P(1, 0, -1, -1)) == "1 - t^2 - t^3"
    assert format_polynomial(P(1, -2)) == "1 - 2t"
    assert format_polynomial(Polynomial()) == "0"
    assert format_polynomial(P(0, 0, 0, 0, 0, -1)) == "-t^5"
    # last factor of the ninth catalog entry
    assert (
        format_polynomial(P(1, -1, -1, -1, -1, -1))
        == "1 - t - t^2 - t^3 - t^4 - t^5"
    )


def test_parse_format_round_trip():
    samples = [P(1, 1), P(1, 0, -1, -1), P(-3, 0, 2), Polynomial(), P(0, 1), P(7)]
    for p in samples:
        assert parse_polynomial(format_polynomial(p)) == p


def test_poincare_a1():
    assert poincare_finite(builtin_finite("A", 1)) == P(1, 1)


def test_poincare_a3_value_at_one():
    p = poincare_finite(builtin_finite("A", 3))
    assert p == P(1, 1) * P(1, 1, 1) * P(1, 1, 1, 1)
    assert p(1) == 24


def test_poincare_b3():
    p = poincare_finite(builtin_finite("B", 3))
    assert p == P(1, 3, 5, 7, 8, 8, 7, 5, 3, 1)
    assert p(1) == 48


@pytest.mark.parametrize(
    "family, rank",
    [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4)],
)
def test_poincare_matches_enumeration(family, rank):
    m = builtin_finite(family, rank)
    p = poincare_finite(m)
    series = enumerate_levels(m, p.degree + 1)
    assert series.q[: p.degree + 1] == p.coeffs
    assert series.q[p.degree + 1] == 0


def test_poincare_g2():
    g2 = CartanMatrix.from_rows([[2, -1], [-3, 2]], name="G2")
    p = poincare_finite(g2)
    assert p == P(1, 1) * P(1, 1, 1, 1, 1, 1)
    assert p.coeffs == enumerate_levels(g2, p.degree).q


def test_poincare_palindromic():
    for family, rank in [("A", 3), ("B", 3), ("D", 4)]:
        c = poincare_finite(builtin_finite(family, rank)).coeffs
        assert c == c[::-1]


def test_poincare_invariant_under_relabeling():
    # same diagram, nodes listed in a different order
    scrambled = CartanMatrix.from_rows(
        [[2, -2, -1], [-1, 2, 0], [-1, 0, 2]], name="B3-relabeled"
    )
    assert poincare_finite(scrambled) == poincare_finite(builtin_finite("B", 3))


def test_poincare_rejects_unsupported():
    with pytest.raises(UnsupportedTypeError):
        poincare_finite(CartanMatrix.from_rows([[2, -2], [-2, 2]]))  # affine
    # F4: finite but not in the supported families
    f4 = CartanMatrix.from_rows(
        [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]], name="F4"
    )
    with pytest.raises(UnsupportedTypeError):
        poincare_finite(f4)
    # disconnected
    with pytest.raises(UnsupportedTypeError):
        poincare_finite(CartanMatrix.from_rows([[2, 0], [0, 2]]))
