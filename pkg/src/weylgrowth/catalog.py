"""The 19 embedded denominator polynomials and candidate-matrix fixtures.

The factored forms are compiled into the package as data; their expansions
and the grouping into duplicate classes (indices sharing an identical
expanded polynomial) are computed once at import time.  Class ids are
1-based and ordered by smallest member index.

Candidate rank-3 hyperbolic Cartan matrices are *not* embedded: they are
user-supplied fixture files (a JSON array of Cartan objects with optional
"claimed_s" and "source" fields).  The package ships a starter file of
known rank-3 hyperbolic matrices; which catalog entry each one realizes is
left to discovery (see ``verify.match_catalog``), never asserted as data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .cartan import CartanMatrix, cartan_from_object, classify
from .errors import ParseError, ValidationError
from .series import FactoredPolynomial, Polynomial, expand_factors

__all__ = [
    "CatalogEntry",
    "Fixture",
    "FixtureSet",
    "NUM_ENTRIES",
    "duplicate_classes",
    "load_fixtures",
    "q_polynomial",
    "starter_fixtures",
]

NUM_ENTRIES = 19

_FACTORED_FORMS = {
    1: ("1+t", "1+t^2", "1-t+t^2", "1-t^2-t^3"),
    2: ("1+t", "1-t+t^2", "1+t+t^2", "1-t-t^3"),
    3: ("1+t", "1+t^2", "1-t+t^2", "1-t-t^2", "1+t+t^2"),
    4: (("1+t", 2), "1+t^2", "1-t+t^2", "1-t-t^2-t^3"),
    5: (("1+t", 2), "1+t^2", "1-t+t^2", "1-t-t^2"),
    6: ("1+t", "1-t+t^2", "1+t+t^2", "1-t-t^2-t^3"),
    7: (("1+t", 2), "1-2t", "1+t^2", "1-t+t^2", "1+t+t^2"),
    8: ("1+t", "1+t^2", "1-t-t^3-t^5"),
    9: ("1+t", "1+t^2", "1-t-t^2-t^3-t^4-t^5"),
    10: ("1+t", "1+t^2", "1-t+t^2", "1-t^2-t^3"),
    11: ("1+t", "1-t+t^2", "1+t+t^2", "1-t-t^3"),
    12: ("1+t", "1-t+t^2", "1+t+t^2", "1-t-t^3"),
    13: ("1+t", "1+t^2", "1-t-t^3-t^5"),
    14: ("1+t", "1+t^2", "1-t-t^3-t^5"),
    15: ("1+t", "1+t^2", "1-t+t^2", "1-t-t^2", "1+t+t^2"),
    16: (("1+t", 2), "1+t^2", "1-t+t^2", "1-t-t^2-t^3"),
    17: ("1+t", "1-t+t^2", "1+t+t^2", "1-t-t^2-t^3"),
    18: ("1+t", "1+t^2", "1-t+t^2", "1-t-t^2", "1+t+t^2"),
    19: (("1+t", 2), "1-2t", "1+t^2", "1-t+t^2", "1+t+t^2"),
}


@dataclass(frozen=True)
class CatalogEntry:
    s: int
    q_factored: FactoredPolynomial
    q_expanded: Polynomial
    class_id: int


def _build_catalog() -> dict[int, CatalogEntry]:
    factored = {
        s: FactoredPolynomial.from_strings(*specs)
        for s, specs in _FACTORED_FORMS.items()
    }
    expanded = {s: expand_factors(f) for s, f in factored.items()}
    class_of: dict[Polynomial, int] = {}
    next_id = 1
    entries = {}
    for s in range(1, NUM_ENTRIES + 1):
        poly = expanded[s]
        if poly.coefficient(0) != 1:
            raise AssertionError(f"catalog entry {s} has constant term != 1")
        if poly not in class_of:
            class_of[poly] = next_id
            next_id += 1
        entries[s] = CatalogEntry(
            s=s,
            q_factored=factored[s],
            q_expanded=poly,
            class_id=class_of[poly],
        )
    return entries


_CATALOG = _build_catalog()


def q_polynomial(s: int) -> CatalogEntry:
    """The catalog entry for index s in 1..19."""
    if not 1 <= s <= NUM_ENTRIES:
        raise ValueError(f"catalog index must be in 1..{NUM_ENTRIES}, got {s}")
    return _CATALOG[s]


def duplicate_classes() -> tuple[tuple[int, ...], ...]:
    """Partition of {1..19} into groups with identical expanded polynomials,
    ordered by smallest member."""
    by_id: dict[int, list[int]] = {}
    for s in range(1, NUM_ENTRIES + 1):
        by_id.setdefault(_CATALOG[s].class_id, []).append(s)
    return tuple(
        tuple(sorted(by_id[cid])) for cid in sorted(by_id)
    )


@dataclass(frozen=True)
class Fixture:
    matrix: CartanMatrix
    claimed_s: int | None = None
    source: str = ""


@dataclass(frozen=True)
class FixtureSet:
    """Accepted rank-3 hyperbolic candidates plus the rejection report."""

    entries: tuple[Fixture, ...]
    rejected: tuple[tuple[str, str], ...] = ()  # (matrix name, reason)


def fixtures_from_object(doc: object) -> FixtureSet:
    if not isinstance(doc, list):
        raise ParseError("fixtures document must be a JSON array")
    entries = []
    rejected = []
    for pos, item in enumerate(doc):
        if not isinstance(item, dict):
            raise ParseError(f"fixture #{pos + 1} must be a JSON object")
        claimed = item.get("claimed_s")
        if claimed is not None and (
            not isinstance(claimed, int)
            or isinstance(claimed, bool)
            or not 1 <= claimed <= NUM_ENTRIES
        ):
            raise ParseError(
                f"fixture #{pos + 1}: 'claimed_s' must be an integer in "
                f"1..{NUM_ENTRIES}"
            )
        source = item.get("source", "")
        if not isinstance(source, str):
            raise ParseError(f"fixture #{pos + 1}: 'source' must be a string")
        cartan_doc = {k: v for k, v in item.items() if k not in ("claimed_s", "source")}
        matrix = cartan_from_object(cartan_doc)
        cls = classify(matrix)
        if matrix.rank != 3 or not cls.hyperbolic:
            rejected.append(
                (matrix.name, f"rank {matrix.rank}, classified {cls}; "
                 "fixtures must be rank-3 hyperbolic")
            )
            continue
        entries.append(Fixture(matrix=matrix, claimed_s=claimed, source=source))
    return FixtureSet(entries=tuple(entries), rejected=tuple(rejected))


def load_fixtures(path) -> FixtureSet:
    """Load a fixtures file; invalid GCMs raise, non-hyperbolic matrices are
    rejected into the report."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", position=exc.pos) from exc
    return fixtures_from_object(doc)


def starter_fixtures() -> FixtureSet:
    """The fixture set bundled with the package."""
    text = (
        resources.files("weylgrowth").joinpath("data/starter_fixtures.json")
        .read_text(encoding="utf-8")
    )
    fs = fixtures_from_object(json.loads(text))
    if fs.rejected:
        raise ValidationError(
            f"bundled fixture file contains rejected entries: {fs.rejected}"
        )
    return fs
