"""Level-by-level Weyl group enumeration via the orbit of the Weyl vector.

The Weyl vector rho is fixed as the all-ones vector in fundamental-weight
coordinates; its orbit points mu identify group elements uniquely, and the
difference rho - mu lies in the positive root lattice.  A point mu in
level n is expanded by the reflection s_i exactly when its i-th coordinate
is positive, which forces the word length to grow by one, so levels are
graded by length and deduplication inside the new level suffices.

Weights and roots are plain integer tuples (coordinates in the
fundamental-weight basis and the simple-root basis respectively).  All
arithmetic uses exact Python integers, so coordinates and counts cannot
overflow; runaway enumerations are guarded by an optional state budget.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import CartanMatrix
from .errors import BudgetExceededError, ConsistencyError

__all__ = [
    "GrowthSeries",
    "WeightVector",
    "RootVector",
    "enumerate_levels",
    "enumerate_matrix_oracle",
    "reflect",
    "root_coordinates",
    "rho",
]

WeightVector = tuple  # coordinates in the fundamental-weight basis
RootVector = tuple  # coordinates in the simple-root basis


@dataclass(frozen=True)
class GrowthSeries:
    """Counts q(0), ..., q(N) of Weyl elements by word length."""

    q: tuple[int, ...]

    @property
    def max_length(self) -> int:
        return len(self.q) - 1

    def total(self) -> int:
        return sum(self.q)

    def __getitem__(self, n: int) -> int:
        return self.q[n]

    def __len__(self):
        return len(self.q)


def rho(m: CartanMatrix) -> WeightVector:
    """The Weyl vector: all fundamental-weight coordinates equal to 1."""
    return (1,) * m.rank


def reflect(mu: WeightVector, i: int, m: CartanMatrix) -> WeightVector:
    """Apply the simple reflection s_i (node index i is 1-based).

    s_i(mu) = mu - mu_i * alpha_i, with alpha_i read off column i of the
    Cartan matrix (fundamental-weight coordinates).
    """
    if not 1 <= i <= m.rank:
        raise ValueError(f"node index must be in 1..{m.rank}, got {i}")
    c = mu[i - 1]
    col = m.column(i - 1)
    return tuple(mu[k] - c * col[k] for k in range(m.rank))


@lru_cache(maxsize=None)
def _inverse_cartan(m: CartanMatrix) -> tuple[tuple[Fraction, ...], ...]:
    n = m.rank
    a = [[Fraction(m.entries[i][j]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ConsistencyError(
                f"Cartan matrix {m.name!r} is singular; root coordinates "
                "are not unique"
            )
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        inv[col] = [v / p for v in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                inv[r] = [v - f * w for v, w in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


def root_coordinates(mu: WeightVector, m: CartanMatrix) -> RootVector:
    """Express gamma = rho - mu in simple-root coordinates.

    For an orbit point mu of rho the result is a vector of nonnegative
    integers; anything else raises ConsistencyError, which signals a bug
    or a mu that is not actually an orbit point.
    """
    if len(mu) != m.rank:
        raise ValueError(f"weight has length {len(mu)}, expected {m.rank}")
    gamma_w = [1 - v for v in mu]
    inv = _inverse_cartan(m)
    coords = []
    for row in inv:
        v = sum(f * g for f, g in zip(row, gamma_w))
        if v.denominator != 1:
            raise ConsistencyError(
                f"gamma is not in the root lattice for mu={mu!r} (got {v})"
            )
        if v < 0:
            raise ConsistencyError(
                f"negative root coordinate {v} for mu={mu!r}; "
                "mu is not an orbit point of rho"
            )
        coords.append(int(v))
    return tuple(coords)


def _expand_frontier(level, cols, rank):
    nxt = set()
    add = nxt.add
    rng = range(rank)
    for mu in level:
        for i in rng:
            c = mu[i]
            if c > 0:
                col = cols[i]
                add(tuple(mu[k] - c * col[k] for k in rng))
    return nxt


def enumerate_levels(
    m: CartanMatrix,
    max_len: int,
    *,
    threads: int = 1,
    max_states: int | None = None,
    keep_levels: bool = False,
):
    """Count Weyl group elements of each length 0..max_len.

    Breadth-first frontier expansion on orbit points of rho: level 0 is
    {rho}, and level n+1 collects s_i(mu) over all mu in level n with
    mu_i > 0, deduplicated within the new level.  Returns a GrowthSeries,
    or (GrowthSeries, levels) when keep_levels is set.

    threads > 1 partitions each frontier and merges the candidate sets;
    the merged set, and therefore the result, is identical for any thread
    count.  max_states caps the total number of orbit points generated and
    raises BudgetExceededError when exceeded.
    """
    if max_len < 0:
        raise ValueError(f"max_len must be >= 0, got {max_len}")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    rank = m.rank
    cols = tuple(m.column(i) for i in range(rank))
    level = {rho(m)}
    q = [1]
    levels = [frozenset(level)] if keep_levels else None
    seen_total = 1
    for _ in range(max_len):
        if len(level) > 1 and threads > 1:
            frontier = list(level)
            chunk = (len(frontier) + threads - 1) // threads
            parts = [
                frontier[k : k + chunk] for k in range(0, len(frontier), chunk)
            ]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = pool.map(
                    lambda part: _expand_frontier(part, cols, rank), parts
                )
                nxt = set().union(*results)
        else:
            nxt = _expand_frontier(level, cols, rank)
        seen_total += len(nxt)
        if max_states is not None and seen_total > max_states:
            raise BudgetExceededError(
                f"enumeration of {m.name!r} exceeded the budget of "
                f"{max_states} states at length {len(q)}"
            )
        q.append(len(nxt))
        if levels is not None:
            levels.append(frozenset(nxt))
        level = nxt
    series = GrowthSeries(q=tuple(q))
    return (series, levels) if keep_levels else series


def _reflection_matrix(m: CartanMatrix, i: int) -> tuple[tuple[int, ...], ...]:
    # matrix of s_i acting on weight coordinates: identity except column i,
    # which becomes e_i - alpha_i
    n = m.rank
    col = m.column(i)
    return tuple(
        tuple((1 if k == j else 0) - (col[k] if j == i else 0) for j in range(n))
        for k in range(n)
    )


def enumerate_matrix_oracle(m: CartanMatrix, max_len: int) -> GrowthSeries:
    """Independent oracle: breadth-first search over full Weyl matrices.

    The state is the r x r integer matrix of the group element acting on
    weight coordinates; deduplication is by matrix equality against every
    element seen so far, so no length-grading argument is involved.  The
    level sizes are distances in the Cayley graph, i.e. word lengths.
    Intended for small max_len (memory holds the whole ball).
    """
    if max_len < 0:
        raise ValueError(f"max_len must be >= 0, got {max_len}")
    n = m.rank
    gens = [_reflection_matrix(m, i) for i in range(n)]
    identity = tuple(tuple(int(k == j) for j in range(n)) for k in range(n))
    seen = {identity}
    level = [identity]
    q = [1]
    for _ in range(max_len):
        nxt = set()
        for w in level:
            for s in gens:
                # w . s differs from w only in the columns where s is not e_j
                prod = tuple(
                    tuple(
                        sum(w[k][x] * s[x][j] for x in range(n)) for j in range(n)
                    )
                    for k in range(n)
                )
                if prod not in seen:
                    nxt.add(prod)
        seen.update(nxt)
        q.append(len(nxt))
        level = list(nxt)
    return GrowthSeries(q=tuple(q))
