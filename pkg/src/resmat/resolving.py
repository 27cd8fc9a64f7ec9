"""Metric codes, resolving-set checks, and metric dimension.

Two independent routes to the dimension are kept on purpose: the exhaustive
enumeration of minimal resolving sets, and an increasing-cardinality search
that stops at the first witness. Closed forms for the standard families live
here as well so brute force and formula can cross-check each other.
"""

from itertools import combinations

from .errors import DisconnectedGraphError, LimitExceededError
from .graph import Graph, DistanceMatrix, distance_matrix
from .setfamily import SetFamily, indices_of

DEFAULT_ENUM_LIMIT = 20


def metric_code(dm: DistanceMatrix, v: int, landmarks) -> tuple:
    """Distances from v to the landmarks, in landmark order."""
    return tuple(dm.rows[v][h] for h in landmarks)


def _codes(dm, landmarks):
    rows = dm.rows
    return [tuple(rows[v][h] for h in landmarks) for v in range(dm.n)]


def is_resolving(dm: DistanceMatrix, mask: int) -> bool:
    """True iff all n metric codes w.r.t. the set are pairwise distinct."""
    if not dm.connected:
        raise DisconnectedGraphError("metric codes are undefined on disconnected graphs")
    landmarks = indices_of(mask)
    codes = _codes(dm, landmarks)
    return len(set(codes)) == dm.n


def _check_limit(g, max_n, what):
    if g.n > max_n:
        raise LimitExceededError(what, g.n, max_n)


def minimal_resolving_sets(g: Graph, max_n: int = DEFAULT_ENUM_LIMIT) -> SetFamily:
    """Exhaustive scan for resolving sets none of whose one-deletions resolve.

    Resolving is superset-monotone, so one-deletion minimality implies full
    subset minimality.
    """
    _check_limit(g, max_n, "minimal resolving set enumeration")
    dm = distance_matrix(g)
    if not dm.connected:
        raise DisconnectedGraphError("graph must be connected")
    n = g.n
    rows = dm.rows
    resolving = [False] * (1 << n)
    for mask in range(1 << n):
        landmarks = indices_of(mask)
        codes = {tuple(rows[v][h] for h in landmarks) for v in range(n)}
        resolving[mask] = len(codes) == n
    minimal = []
    for mask in range(1 << n):
        if not resolving[mask]:
            continue
        if all(not resolving[mask & ~(1 << i)] for i in indices_of(mask)):
            minimal.append(mask)
    return SetFamily(minimal, g.labels)


def metric_dimension(g: Graph, max_n: int = DEFAULT_ENUM_LIMIT) -> int:
    """Smallest resolving-set size, by increasing-cardinality search."""
    _check_limit(g, max_n, "metric dimension search")
    dm = distance_matrix(g)
    if not dm.connected:
        raise DisconnectedGraphError("graph must be connected")
    n = g.n
    rows = dm.rows
    for k in range(n + 1):
        for landmarks in combinations(range(n), k):
            codes = {tuple(rows[v][h] for h in landmarks) for v in range(n)}
            if len(codes) == n:
                return k
    raise AssertionError("unreachable: the full vertex set always resolves")


def metric_basis(g: Graph, max_n: int = DEFAULT_ENUM_LIMIT) -> int:
    """One minimum-cardinality resolving set (lexicographically first)."""
    _check_limit(g, max_n, "metric basis search")
    dm = distance_matrix(g)
    if not dm.connected:
        raise DisconnectedGraphError("graph must be connected")
    n = g.n
    rows = dm.rows
    for k in range(n + 1):
        for landmarks in combinations(range(n), k):
            codes = {tuple(rows[v][h] for h in landmarks) for v in range(n)}
            if len(codes) == n:
                return sum(1 << i for i in landmarks)
    raise AssertionError("unreachable")


def closed_form_dimension(kind: str, *params: int) -> int:
    """Known dimension formulas for the generated families."""
    if kind == "path":
        (n,) = params
        if n < 1:
            raise ValueError("path needs n >= 1")
        return 0 if n == 1 else 1
    if kind == "cycle":
        (n,) = params
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return 2
    if kind == "complete":
        (n,) = params
        if n < 1:
            raise ValueError("complete needs n >= 1")
        return max(n - 1, 0) if n > 1 else 0
    if kind == "wheel":
        (n,) = params
        if n < 3:
            raise ValueError("wheel needs n >= 3")
        small = {3: 3, 4: 2, 5: 2, 6: 3}
        return small[n] if n in small else (2 * n + 2) // 5
    if kind == "complete_bipartite":
        m, n = params
        if m < 1 or n < 1:
            raise ValueError("complete_bipartite needs m, n >= 1")
        if m == n == 1:
            # K_{1,1} is a single edge; one endpoint resolves it.
            return 1
        return m + n - 2
    raise ValueError(f"no closed form for kind {kind!r}")
