"""Identity checks between orbit enumeration and the embedded catalog.

Three questions are answered here, all by exact integer comparison (no
tolerances anywhere):

* does the growth series of a given rank-3 hyperbolic matrix match the
  series expansion of P_B3 / Q_s for a given s (``verify_identity``);
* reading the ratio backwards, does the growth series *determine* a
  finite-degree denominator, and which one (``fit_denominator`` and
  ``match_catalog``);
* for which s does the same ratio work with the A_3 numerator instead of
  the B_3 one (``a3_reduction``).

The numerator polynomials come from the degrees-product route
(``series.poincare_finite``), which the test suite independently checks
against orbit enumeration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanMatrix, builtin_finite, classify
from .catalog import NUM_ENTRIES, q_polynomial
from .errors import ValidationError
from .series import Polynomial, format_polynomial, poincare_finite, poly_divexact, series_div
from .weyl import enumerate_levels

__all__ = [
    "VerificationReport",
    "a3_reduction",
    "fit_denominator",
    "match_catalog",
    "poincare_b3",
    "poincare_a3",
    "verify_identity",
]

# degree of P_B3; every catalog denominator also has degree <= this, which
# bounds any true finite-degree denominator and fixes the stabilization
# window used by fit_denominator
DENOMINATOR_DEGREE_BOUND = 9


@lru_cache(maxsize=1)
def poincare_b3() -> Polynomial:
    return poincare_finite(builtin_finite("B", 3))


@lru_cache(maxsize=1)
def poincare_a3() -> Polynomial:
    return poincare_finite(builtin_finite("A", 3))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check.

    outcome is one of "pass", "fail", "no_match".  On "fail",
    first_mismatch holds (degree, expected, actual) for the smallest
    mismatching degree and the table stops there; otherwise the table
    covers every checked degree.
    """

    subject: str
    max_length: int
    outcome: str
    first_mismatch: tuple[int, int, int] | None = None
    table: tuple[tuple[int, int, int], ...] = ()
    polynomial: Polynomial | None = None
    classes: tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json(self) -> str:
        doc = {
            "subject": self.subject,
            "max_length": self.max_length,
            "outcome": self.outcome,
            "first_mismatch": list(self.first_mismatch)
            if self.first_mismatch
            else None,
            "table": [list(row) for row in self.table],
        }
        if self.polynomial is not None or self.outcome == "no_match":
            doc["polynomial"] = (
                format_polynomial(self.polynomial)
                if self.polynomial is not None
                else None
            )
            doc["classes"] = list(self.classes)
        return json.dumps(doc)


def _require_rank3_hyperbolic(m: CartanMatrix) -> None:
    cls = classify(m)
    if m.rank != 3 or not cls.hyperbolic:
        raise ValidationError(
            f"matrix {m.name!r} is rank {m.rank}, classified {cls}; "
            "expected a rank-3 hyperbolic matrix"
        )


def verify_identity(
    m: CartanMatrix, s: int, max_len: int, *, threads: int = 1
) -> VerificationReport:
    """Compare the enumerated growth series of m against P_B3/Q_s, degree
    by degree up to max_len."""
    _require_rank3_hyperbolic(m)
    if max_len < 2:
        raise ValueError(f"max_len must be >= 2, got {max_len}")
    entry = q_polynomial(s)
    expected = series_div(poincare_b3(), entry.q_expanded, max_len)
    actual = enumerate_levels(m, max_len, threads=threads).q
    subject = f"{m.name} vs s={s}"
    table = []
    for n in range(max_len + 1):
        table.append((n, expected[n], actual[n]))
        if expected[n] != actual[n]:
            return VerificationReport(
                subject=subject,
                max_length=max_len,
                outcome="fail",
                first_mismatch=(n, expected[n], actual[n]),
                table=tuple(table),
            )
    return VerificationReport(
        subject=subject, max_length=max_len, outcome="pass", table=tuple(table)
    )


def fit_denominator(
    m: CartanMatrix, max_len: int, *, threads: int = 1
) -> Polynomial | None:
    """Solve P_B3 / P(t) = Q(t) for a finite-degree Q from enumerated data.

    Enumerates q(0..max_len), divides P_B3 by the truncated series, and
    accepts the result only when every coefficient above degree 9 vanishes
    up to max_len; returns the surviving low-degree polynomial, else None.
    """
    _require_rank3_hyperbolic(m)
    if max_len <= DENOMINATOR_DEGREE_BOUND:
        raise ValueError(
            f"max_len must exceed {DENOMINATOR_DEGREE_BOUND} to give the fit a "
            f"nonempty stabilization window, got {max_len}"
        )
    series = enumerate_levels(m, max_len, threads=threads)
    growth = Polynomial(series.q)
    coeffs = series_div(poincare_b3(), growth, max_len)
    if any(coeffs[DENOMINATOR_DEGREE_BOUND + 1 :]):
        return None
    return Polynomial(coeffs[: DENOMINATOR_DEGREE_BOUND + 1])


def match_catalog(
    m: CartanMatrix, max_len: int, *, threads: int = 1
) -> tuple[int, ...]:
    """All catalog indices whose expansion equals the fitted denominator of
    m; a whole duplicate class, or empty when nothing fits."""
    fitted = fit_denominator(m, max_len, threads=threads)
    if fitted is None:
        return ()
    return tuple(
        s
        for s in range(1, NUM_ENTRIES + 1)
        if q_polynomial(s).q_expanded == fitted
    )


def discover(
    m: CartanMatrix, max_len: int, *, threads: int = 1
) -> VerificationReport:
    """fit_denominator + match_catalog wrapped in a report."""
    fitted = fit_denominator(m, max_len, threads=threads)
    classes = ()
    if fitted is not None:
        classes = tuple(
            s
            for s in range(1, NUM_ENTRIES + 1)
            if q_polynomial(s).q_expanded == fitted
        )
    outcome = "pass" if classes else "no_match"
    return VerificationReport(
        subject=f"{m.name} discovery",
        max_length=max_len,
        outcome=outcome,
        polynomial=fitted,
        classes=classes,
    )


def a3_reduction(s: int) -> Polynomial | None:
    """The exact quotient R_s = P_A3 * Q_s / P_B3, or None when no
    polynomial solution exists."""
    entry = q_polynomial(s)
    return poly_divexact(poincare_a3() * entry.q_expanded, poincare_b3())


def a3_existence_pattern() -> tuple[int, ...]:
    """Indices s for which the A_3 reduction has a polynomial solution."""
    return tuple(
        s for s in range(1, NUM_ENTRIES + 1) if a3_reduction(s) is not None
    )
