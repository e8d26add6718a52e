"""Exact integer polynomials in t and truncated power-series division.

A polynomial is a tuple of integer coefficients indexed by degree, with
trailing zeros trimmed; the zero polynomial stores an empty tuple.  All
arithmetic is exact (Python integers); there is no floating point in this
module.

Text grammar (ASCII, whitespace-insensitive)::

    poly := ['+'|'-'] term (('+'|'-') term)*
    term := int | int? 't' ('^' uint)?

Canonical output is ascending powers with explicit signs, e.g.
``1 - t^2 - t^3``.  The parser additionally accepts terms in any order and
repeated powers (which are summed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cartan import AlgebraKind, CartanMatrix, classify
from .errors import ParseError, UnsupportedTypeError

__all__ = [
    "FactoredPolynomial",
    "Polynomial",
    "expand_factors",
    "format_polynomial",
    "parse_polynomial",
    "poincare_finite",
    "poly_add",
    "poly_divexact",
    "poly_mul",
    "series_div",
]


class Polynomial:
    """Immutable integer-coefficient polynomial in one indeterminate t."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-v for v in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, av in enumerate(a):
            if av:
                for j, bv in enumerate(b):
                    out[i + j] += av * bv
        return Polynomial(out)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


ZERO = Polynomial()
ONE = Polynomial([1])


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_divexact(num: Polynomial, den: Polynomial) -> Polynomial | None:
    """Exact quotient num/den over the integers, or None when not divisible.

    Division by the zero polynomial raises ZeroDivisionError.
    """
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return ZERO
    rem = list(num.coeffs)
    d = den.coeffs
    dd = len(d) - 1
    lead = d[-1]
    if len(rem) - 1 < dd:
        return None
    q = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        if rem[k] == 0:
            continue
        c, r = divmod(rem[k], lead)
        if r:
            return None
        q[k - dd] = c
        for j in range(dd + 1):
            rem[k - dd + j] -= c * d[j]
    if any(rem):
        return None
    return Polynomial(q)


def series_div(num: Polynomial, den: Polynomial, order: int) -> list[int]:
    """Coefficients c(0..order) of the formal power series num/den.

    Requires den to have a nonzero constant term.  Raises ArithmeticError
    if a coefficient fails to be an exact integer (cannot happen when the
    constant term is +-1).
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    d0 = den.coefficient(0)
    if d0 == 0:
        raise ZeroDivisionError("series division requires a nonzero constant term")
    out = []
    for k in range(order + 1):
        acc = num.coefficient(k)
        for j in range(1, min(k, den.degree) + 1):
            acc -= den.coefficient(j) * out[k - j]
        c, r = divmod(acc, d0)
        if r:
            raise ArithmeticError(
                f"series coefficient at degree {k} is not an integer"
            )
        out.append(c)
    return out


@dataclass(frozen=True)
class FactoredPolynomial:
    """A product of polynomial factors with positive integer multiplicities."""

    factors: tuple[tuple[Polynomial, int], ...]

    def __post_init__(self):
        for _, mult in self.factors:
            if mult < 1:
                raise ValueError(f"factor multiplicity must be >= 1, got {mult}")

    @classmethod
    def from_strings(cls, *specs: str | tuple[str, int]) -> "FactoredPolynomial":
        factors = []
        for spec in specs:
            text, mult = spec if isinstance(spec, tuple) else (spec, 1)
            factors.append((parse_polynomial(text), mult))
        return cls(factors=tuple(factors))

    def expand(self) -> Polynomial:
        return expand_factors(self)

    def __str__(self):
        # compact: no spaces inside factors, e.g. (1+t)^2(1-2t)
        parts = []
        for poly, mult in self.factors:
            part = f"({format_polynomial(poly).replace(' ', '')})"
            if mult > 1:
                part += f"^{mult}"
            parts.append(part)
        return "".join(parts) if parts else "1"


def expand_factors(f: FactoredPolynomial) -> Polynomial:
    """Exact product of all factors with multiplicities; empty product is 1."""
    out = ONE
    for poly, mult in f.factors:
        out = out * poly**mult
    return out


# degrees d_i of the fundamental invariants; the growth polynomial of the
# corresponding Weyl group is prod_i (1 + t + ... + t^(d_i - 1))
def _degrees_for(m: CartanMatrix) -> list[int]:
    r = m.rank
    a = m.entries
    if r == 1:
        return [2]
    edges = []
    for i in range(r):
        for j in range(i + 1, r):
            if a[i][j] != 0:
                edges.append((i, j, a[i][j] * a[j][i]))
    if len(edges) != r - 1:
        raise UnsupportedTypeError(
            "only connected tree diagrams of families A, B/C, D, G2 are supported"
        )
    deg = [0] * r
    for i, j, _ in edges:
        deg[i] += 1
        deg[j] += 1
    if 0 in deg and r > 1:
        raise UnsupportedTypeError("diagram is disconnected")
    if r == 2:
        strength = edges[0][2]
        if strength == 1:
            return [2, 3]
        if strength == 2:
            return [2, 4]
        if strength == 3:
            return [2, 6]
        raise UnsupportedTypeError(f"unsupported rank-2 edge strength {strength}")
    multiple = [e for e in edges if e[2] != 1]
    if any(e[2] not in (1, 2) for e in edges):
        raise UnsupportedTypeError("edge strength > 2 unsupported above rank 2")
    if not multiple:
        if max(deg) <= 2:
            return list(range(2, r + 2))  # A_r
        forks = [v for v in range(r) if deg[v] == 3]
        if max(deg) == 3 and len(forks) == 1:
            fork = forks[0]
            leaf_arms = sum(
                1 for i, j, _ in edges if fork in (i, j) and 1 in (deg[i], deg[j])
            )
            if leaf_arms >= 2:
                return list(range(2, 2 * r - 1, 2)) + [r]  # D_r
        raise UnsupportedTypeError("tree shape is not A_r or D_r")
    if len(multiple) == 1 and max(deg) <= 2:
        i, j, _ = multiple[0]
        if deg[i] == 1 or deg[j] == 1:
            return list(range(2, 2 * r + 1, 2))  # B_r / C_r
    raise UnsupportedTypeError("double-edge placement is not B_r/C_r")


def poincare_finite(m: CartanMatrix) -> Polynomial:
    """Growth polynomial of a finite-type Weyl group via the degrees product.

    Supported diagram families: A, B/C, D, and G2.  The result equals the
    polynomial whose coefficients come out of the orbit enumeration in
    ``weyl.enumerate_levels``; tests cross-check the two routes.
    """
    if classify(m).kind is not AlgebraKind.FINITE:
        raise UnsupportedTypeError(f"matrix {m.name!r} is not of finite type")
    result = ONE
    for d in _degrees_for(m):
        result = result * Polynomial([1] * d)
    return result


def parse_polynomial(text: str) -> Polynomial:
    """Parse the polynomial grammar; raises ParseError with a position."""
    coeffs: dict[int, int] = {}
    i = 0
    n = len(text)

    def skip_ws(k: int) -> int:
        while k < n and text[k].isspace():
            k += 1
        return k

    def read_uint(k: int) -> tuple[int, int]:
        start = k
        while k < n and text[k].isdigit():
            k += 1
        if k == start:
            raise ParseError("expected an integer", position=start)
        return int(text[start:k]), k

    i = skip_ws(i)
    if i == n:
        raise ParseError("empty polynomial", position=0)
    first = True
    while True:
        i = skip_ws(i)
        sign = 1
        if i < n and text[i] in "+-":
            if text[i] == "-":
                sign = -1
            i = skip_ws(i + 1)
        elif not first:
            raise ParseError(f"expected '+' or '-', got {text[i]!r}", position=i)
        first = False
        # term: int | int? 't' ('^' uint)?
        mag = None
        if i < n and text[i].isdigit():
            mag, i = read_uint(i)
            i = skip_ws(i)
        if i < n and text[i] == "t":
            i = skip_ws(i + 1)
            power = 1
            if i < n and text[i] == "^":
                i = skip_ws(i + 1)
                power, i = read_uint(i)
            coeff = 1 if mag is None else mag
        elif mag is not None:
            power = 0
            coeff = mag
        else:
            where = text[i] if i < n else "end of input"
            raise ParseError(f"expected a term, got {where!r}", position=i)
        coeffs[power] = coeffs.get(power, 0) + sign * coeff
        i = skip_ws(i)
        if i == n:
            break
    top = max(coeffs)
    return Polynomial(coeffs.get(k, 0) for k in range(top + 1))


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: ascending powers, explicit signs; zero prints as '0'."""
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = "t" if mag == 1 else f"{mag}t"
        else:
            body = f"t^{k}" if mag == 1 else f"{mag}t^{k}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
