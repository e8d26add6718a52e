import pytest

from weylgrowth.cartan import CartanMatrix, builtin_finite
from weylgrowth.catalog import q_polynomial, starter_fixtures
from weylgrowth.errors import ValidationError
from weylgrowth.series import Polynomial, parse_polynomial, poly_divexact
from weylgrowth.verify import (
    a3_existence_pattern,
    a3_reduction,
    discover,
    fit_denominator,
    match_catalog,
    poincare_a3,
    poincare_b3,
    verify_identity,
)

# the over-extended affine A1 path diagram; discovery (exercised below)
# resolves it to the duplicate class {1, 10}
HYP = CartanMatrix.from_rows([[2, -1, 0], [-1, 2, -2], [0, -2, 2]], name="hyp")


def test_numerators():
    assert poincare_b3() == Polynomial([1, 3, 5, 7, 8, 8, 7, 5, 3, 1])
    assert poincare_a3() == Polynomial([1, 3, 5, 6, 5, 3, 1])


def test_verify_identity_passes_for_matching_class():
    report = verify_identity(HYP, 1, 14)
    assert report.outcome == "pass"
    assert report.first_mismatch is None
    assert len(report.table) == 15
    assert report.table[0] == (0, 1, 1)
    assert report.table[1] == (1, 3, 3)
    # other members of the same duplicate class also pass
    assert verify_identity(HYP, 10, 14).passed


def test_verify_identity_fails_for_wrong_s():
    report = verify_identity(HYP, 5, 14)
    assert report.outcome == "fail"
    degree, expected, actual = report.first_mismatch
    assert degree <= 9
    assert expected != actual
    assert report.table[-1] == report.first_mismatch
    # degrees 0 and 1 agree for any s: both sides give 1 and 3
    assert report.table[0] == (0, 1, 1)
    assert report.table[1] == (1, 3, 3)


def test_verify_identity_prefix_property():
    full = verify_identity(HYP, 1, 16)
    assert full.passed
    for n in (2, 5, 10, 12):
        assert verify_identity(HYP, 1, n).passed


def test_verify_identity_rejects_non_hyperbolic():
    with pytest.raises(ValidationError):
        verify_identity(builtin_finite("B", 3), 1, 12)
    with pytest.raises(ValidationError):
        verify_identity(builtin_finite("A", 3), 1, 12)


def test_verify_identity_rejects_small_max_len():
    with pytest.raises(ValueError):
        verify_identity(HYP, 1, 1)


def test_fit_denominator_recovers_catalog_entry():
    fitted = fit_denominator(HYP, 14)
    assert fitted == parse_polynomial("1 - t^4 - t^5 - t^6 - t^7 - t^8")
    assert fitted == q_polynomial(1).q_expanded
    assert fitted.coefficient(0) == 1


def test_fit_denominator_rejects_finite_input():
    with pytest.raises(ValidationError):
        fit_denominator(builtin_finite("B", 3), 14)


def test_fit_denominator_requires_window():
    with pytest.raises(ValueError):
        fit_denominator(HYP, 9)


def test_match_catalog_returns_whole_class():
    assert match_catalog(HYP, 14) == (1, 10)


def test_match_catalog_unlisted_matrix_is_empty():
    # an indefinite-with-G2-edge diagram outside the bundled set: the fit
    # either fails to stabilize or lands outside the catalog
    rogue = CartanMatrix.from_rows(
        [[2, -1, -1], [-3, 2, -1], [-1, -1, 2]], name="rogue"
    )
    from weylgrowth.cartan import classify

    assert classify(rogue).hyperbolic
    assert match_catalog(rogue, 16) == ()


def test_discover_report():
    report = discover(HYP, 14)
    assert report.outcome == "pass"
    assert report.classes == (1, 10)
    assert report.polynomial == q_polynomial(1).q_expanded
    doc = report.to_json()
    assert '"outcome": "pass"' in doc


def test_a3_reduction_exceptional_set():
    assert a3_existence_pattern() == tuple(
        s for s in range(1, 20) if s not in (8, 9, 13, 14)
    )
    for s in (8, 9, 13, 14):
        assert a3_reduction(s) is None


def test_a3_reduction_r1():
    r1 = a3_reduction(1)
    assert r1 == parse_polynomial("1+t^2") * parse_polynomial("1-t^2-t^3")


def test_a3_reduction_identity_holds_exactly():
    for s in range(1, 20):
        r = a3_reduction(s)
        if r is not None:
            assert poincare_b3() * r == poincare_a3() * q_polynomial(s).q_expanded


def test_a3_reduction_equivalent_divisibility_criterion():
    # P_A3/P_B3 = 1/(1+t^3), so a solution exists iff (1+t^3) divides Q_s;
    # checked independently of the quotient computation in a3_reduction
    assert poincare_a3() * parse_polynomial("1+t^3") == poincare_b3()
    one_t3 = parse_polynomial("1+t^3")
    for s in range(1, 20):
        divisible = poly_divexact(q_polynomial(s).q_expanded, one_t3) is not None
        assert divisible == (a3_reduction(s) is not None)


def test_bundled_fixture_discovery_is_self_consistent():
    # every starter fixture that stabilizes to a catalog polynomial must
    # then pass verify_identity against each member of the matched class
    fs = starter_fixtures()
    fx = fs.entries[0]
    classes = match_catalog(fx.matrix, 12)
    assert classes
    for s in classes:
        assert verify_identity(fx.matrix, s, 12).passed
