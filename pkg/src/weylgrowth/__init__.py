"""Growth series of Kac-Moody Weyl groups, with the embedded catalog of
rational-identity denominators for the rank-3 hyperbolic types."""

from .cartan import (
    AlgebraClass,
    AlgebraKind,
    CartanMatrix,
    builtin_finite,
    classify,
    format_cartan,
    parse_cartan,
)
from .catalog import (
    CatalogEntry,
    Fixture,
    FixtureSet,
    duplicate_classes,
    load_fixtures,
    q_polynomial,
    starter_fixtures,
)
from .errors import (
    BudgetExceededError,
    ConsistencyError,
    ParseError,
    UnsupportedTypeError,
    ValidationError,
    WeylGrowthError,
)
from .series import (
    FactoredPolynomial,
    Polynomial,
    expand_factors,
    format_polynomial,
    parse_polynomial,
    poincare_finite,
    poly_add,
    poly_divexact,
    poly_mul,
    series_div,
)
from .verify import (
    VerificationReport,
    a3_reduction,
    discover,
    fit_denominator,
    match_catalog,
    verify_identity,
)
from .weyl import (
    GrowthSeries,
    enumerate_levels,
    enumerate_matrix_oracle,
    reflect,
    rho,
    root_coordinates,
)

__version__ = "0.1.0"
