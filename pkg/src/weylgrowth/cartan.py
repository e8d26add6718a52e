"""Generalized Cartan matrices: ingestion, validation, classification.

Convention used throughout the package: ``a[i][j]`` is the pairing of the
j-th simple root against the i-th simple coroot, so *column* j of the
matrix holds the fundamental-weight coordinates of the simple root
``alpha_j``.  A reflection is then a pure column operation (see
``weyl.reflect``).  Node indices in public APIs are 1-based, matching the
usual labeling of Dynkin diagram nodes.

File format: a UTF-8 JSON document
``{"name": <str, optional>, "rank": <int>, "matrix": [[int, ...], ...]}``
with a rank x rank integer matrix.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ParseError, UnsupportedTypeError, ValidationError

__all__ = [
    "AlgebraClass",
    "AlgebraKind",
    "CartanMatrix",
    "builtin_finite",
    "classify",
    "format_cartan",
    "parse_cartan",
]


@dataclass(frozen=True)
class CartanMatrix:
    """A validated generalized Cartan matrix (GCM).

    Immutable; safe to share across threads and usable as a dict key.
    """

    name: str
    rank: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ValidationError(f"rank must be positive, got {self.rank}")
        if len(self.entries) != self.rank or any(
            len(row) != self.rank for row in self.entries
        ):
            raise ValidationError(
                f"matrix must be {self.rank}x{self.rank}, got "
                f"{len(self.entries)} rows of lengths "
                f"{[len(row) for row in self.entries]}"
            )
        a = self.entries
        for i in range(self.rank):
            for j in range(self.rank):
                v = a[i][j]
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ValidationError(
                        f"entry ({i + 1},{j + 1}) is not an integer: {v!r}"
                    )
                if i == j and v != 2:
                    raise ValidationError(
                        f"diagonal entry ({i + 1},{i + 1}) must be 2, got {v}"
                    )
                if i != j and v > 0:
                    raise ValidationError(
                        f"off-diagonal entry ({i + 1},{j + 1}) must be <= 0, got {v}"
                    )
                if i != j and (v == 0) != (a[j][i] == 0):
                    raise ValidationError(
                        f"zero/nonzero asymmetry at ({i + 1},{j + 1})/({j + 1},{i + 1}): "
                        f"{v} vs {a[j][i]}"
                    )

    @classmethod
    def from_rows(
        cls, rows: Iterable[Iterable[int]], name: str = "unnamed"
    ) -> "CartanMatrix":
        entries = tuple(tuple(row) for row in rows)
        return cls(name=name, rank=len(entries), entries=entries)

    def column(self, j: int) -> tuple[int, ...]:
        """Column j (0-based): weight coordinates of the simple root alpha_{j+1}."""
        return tuple(self.entries[k][j] for k in range(self.rank))

    def submatrix(self, nodes: Sequence[int]) -> "CartanMatrix":
        """Principal submatrix induced by the given 0-based node indices."""
        idx = tuple(nodes)
        rows = tuple(
            tuple(self.entries[i][j] for j in idx) for i in idx
        )
        label = ",".join(str(i + 1) for i in idx)
        return CartanMatrix(name=f"{self.name}[{label}]", rank=len(idx), entries=rows)

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


class AlgebraKind(enum.Enum):
    FINITE = "Finite"
    AFFINE = "Affine"
    INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class AlgebraClass:
    kind: AlgebraKind
    hyperbolic: bool = False

    def __post_init__(self):
        if self.hyperbolic and self.kind is not AlgebraKind.INDEFINITE:
            raise ValueError("only Indefinite matrices can be hyperbolic")

    def __str__(self):
        if self.kind is AlgebraKind.INDEFINITE:
            tag = "hyperbolic" if self.hyperbolic else "non-hyperbolic"
            return f"Indefinite ({tag})"
        return self.kind.value


def parse_cartan(text: str) -> CartanMatrix:
    """Parse the JSON Cartan file format into a validated CartanMatrix."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", position=exc.pos) from exc
    return cartan_from_object(doc)


def cartan_from_object(doc: object) -> CartanMatrix:
    """Build a CartanMatrix from an already-decoded JSON object."""
    if not isinstance(doc, dict):
        raise ParseError("Cartan document must be a JSON object")
    unknown = set(doc) - {"name", "rank", "matrix"}
    if unknown:
        raise ParseError(f"unknown keys in Cartan document: {sorted(unknown)}")
    name = doc.get("name", "unnamed")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    if "rank" not in doc or "matrix" not in doc:
        raise ParseError("Cartan document requires 'rank' and 'matrix'")
    rank = doc["rank"]
    matrix = doc["matrix"]
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise ParseError("'rank' must be an integer")
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise ParseError("'matrix' must be a list of lists")
    if len(matrix) != rank or any(len(r) != rank for r in matrix):
        raise ValidationError(
            f"matrix must be rank x rank = {rank}x{rank}, got rows "
            f"{[len(r) for r in matrix]}"
        )
    return CartanMatrix.from_rows(matrix, name=name)


def load_cartan(path) -> CartanMatrix:
    """Read and parse a Cartan file from disk."""
    with open(path, encoding="utf-8") as fh:
        return parse_cartan(fh.read())


def format_cartan(m: CartanMatrix) -> str:
    """Serialize to the Cartan file format; parse(format(m)) == m."""
    doc = {"name": m.name, "rank": m.rank, "matrix": m.rows()}
    return json.dumps(doc)


def _det(entries: tuple[tuple[int, ...], ...]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(entries)
    if n == 0:
        return 1
    a = [list(row) for row in entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _connected_components(
    entries: tuple[tuple[int, ...], ...], nodes: tuple[int, ...]
) -> list[tuple[int, ...]]:
    remaining = set(nodes)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in nodes:
                if j not in comp and entries[i][j] != 0:
                    comp.add(j)
                    frontier.append(j)
        comps.append(tuple(sorted(comp)))
        remaining -= comp
    return comps


@lru_cache(maxsize=None)
def _is_finite(entries: tuple[tuple[int, ...], ...], nodes: tuple[int, ...]) -> bool:
    # finite type <=> det > 0 and every proper principal submatrix is finite;
    # recursing on the (n-1)-subsets covers all smaller ones
    if not nodes:
        return True
    sub = tuple(tuple(entries[i][j] for j in nodes) for i in nodes)
    if _det(sub) <= 0:
        return False
    return all(
        _is_finite(entries, nodes[:k] + nodes[k + 1 :]) for k in range(len(nodes))
    )


@lru_cache(maxsize=None)
def _kind_of(entries: tuple[tuple[int, ...], ...], nodes: tuple[int, ...]) -> AlgebraKind:
    if _is_finite(entries, nodes):
        return AlgebraKind.FINITE
    sub = tuple(tuple(entries[i][j] for j in nodes) for i in nodes)
    if _det(sub) == 0 and all(
        _kind_of(entries, comp) is AlgebraKind.FINITE
        for comp in _proper_connected_subsets(entries, nodes)
    ):
        return AlgebraKind.AFFINE
    return AlgebraKind.INDEFINITE


def _proper_connected_subsets(
    entries: tuple[tuple[int, ...], ...], nodes: tuple[int, ...]
) -> list[tuple[int, ...]]:
    """All proper nonempty node subsets inducing a connected subdiagram."""
    out = []
    n = len(nodes)
    for mask in range(1, (1 << n) - 1):
        subset = tuple(nodes[k] for k in range(n) if mask >> k & 1)
        if len(_connected_components(entries, subset)) == 1:
            out.append(subset)
    return out


def classify(m: CartanMatrix) -> AlgebraClass:
    """Classify a GCM as Finite, Affine, or Indefinite (with hyperbolic flag).

    Finite: det > 0 and all proper principal submatrices finite (recursive,
    exact integer arithmetic).  Affine: det = 0 and all proper connected
    principal submatrices finite.  Indefinite otherwise; flagged hyperbolic
    when every proper connected node-induced subdiagram is Finite or Affine.
    """
    nodes = tuple(range(m.rank))
    kind = _kind_of(m.entries, nodes)
    if kind is not AlgebraKind.INDEFINITE:
        return AlgebraClass(kind=kind)
    hyperbolic = all(
        _kind_of(m.entries, subset) is not AlgebraKind.INDEFINITE
        for subset in _proper_connected_subsets(m.entries, nodes)
    )
    return AlgebraClass(kind=AlgebraKind.INDEFINITE, hyperbolic=hyperbolic)


def builtin_finite(family: str, rank: int) -> CartanMatrix:
    """Standard Cartan matrix of a classical family.

    Supported: A (rank >= 1), B and C (rank >= 2), D (rank >= 4).  B_r puts
    the asymmetric edge pair (-2 above the diagonal, -1 below) on the last
    edge of the path; C_r is its transpose.
    """
    fam = family.upper()
    if fam == "A":
        if rank < 1:
            raise UnsupportedTypeError(f"A requires rank >= 1, got {rank}")
        rows = _path_rows(rank)
    elif fam in ("B", "C"):
        if rank < 2:
            raise UnsupportedTypeError(f"{fam} requires rank >= 2, got {rank}")
        rows = _path_rows(rank)
        if fam == "B":
            rows[rank - 2][rank - 1] = -2
        else:
            rows[rank - 1][rank - 2] = -2
    elif fam == "D":
        if rank < 4:
            raise UnsupportedTypeError(f"D requires rank >= 4, got {rank}")
        rows = _path_rows(rank)
        # detach the last node from the path and hang it off node rank-2
        rows[rank - 2][rank - 1] = rows[rank - 1][rank - 2] = 0
        rows[rank - 3][rank - 1] = rows[rank - 1][rank - 3] = -1
    else:
        raise UnsupportedTypeError(f"unsupported family {family!r}")
    return CartanMatrix.from_rows(rows, name=f"{fam}{rank}")


def _path_rows(rank: int) -> list[list[int]]:
    rows = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        rows[i][i + 1] = rows[i + 1][i] = -1
    return rows
