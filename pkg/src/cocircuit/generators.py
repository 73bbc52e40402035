"""Realizable uniform oriented matroids and degree-preserving graph perturbations."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .graphs import Graph, is_connected
from .om import OrientedMatroid
from .signs import SignVector

DEFAULT_COORD_BOUND = 99
RETRY_BUDGET = 1000


class DegenerateConfiguration(ValueError):
    """Some ``r`` of the vectors are linearly dependent."""


def det_sign(rows: Sequence[Sequence[int]]) -> int:
    """Sign of an integer determinant, by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in rows]
    size = len(a)
    if any(len(row) != size for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    last = a[size - 1][size - 1]
    return sign * ((last > 0) - (last < 0))


def _check_general_position(vectors: Sequence[Sequence[int]], r: int) -> None:
    for subset in combinations(range(len(vectors)), r):
        if det_sign([vectors[i] for i in subset]) == 0:
            raise DegenerateConfiguration(f"vectors {subset} are linearly dependent")


def from_vectors(vectors: Sequence[Sequence[int]]) -> OrientedMatroid:
    """Oriented matroid of an integer vector configuration in general position.

    For each ``(r-1)``-subset ``Z`` the cocircuit has ``X_e = sign det(v_Z, v_e)``
    off ``Z`` and zeros on ``Z``; its negative is added as well.
    """
    vectors = [tuple(int(c) for c in v) for v in vectors]
    n = len(vectors)
    if n == 0:
        raise ValueError("empty configuration")
    r = len(vectors[0])
    if any(len(v) != r for v in vectors):
        raise ValueError("vectors must share one dimension")
    if r < 1 or n < r:
        raise ValueError(f"need n >= r >= 1, got n={n}, r={r}")
    _check_general_position(vectors, r)
    cocircuits = set()
    for zeros in combinations(range(n), r - 1):
        base = [vectors[z] for z in zeros]
        signs = [0] * n
        for e in range(n):
            if e not in zeros:
                signs[e] = det_sign(base + [vectors[e]])
        x = SignVector(signs)
        cocircuits.add(x)
        cocircuits.add(-x)
    return OrientedMatroid(n, r, frozenset(cocircuits))


def moment_curve(n: int, r: int) -> list[tuple[int, ...]]:
    return [tuple(t ** k for k in range(r)) for t in range(1, n + 1)]


def cyclic(n: int, r: int) -> OrientedMatroid:
    """Alternating matroid realized by points ``(1, t, ..., t^(r-1))``, ``t = 1..n``."""
    if not n >= r >= 2:
        raise ValueError(f"need n >= r >= 2, got n={n}, r={r}")
    return from_vectors(moment_curve(n, r))


def random_configuration(n: int, r: int, seed: int,
                         coord_bound: int = DEFAULT_COORD_BOUND) -> list[tuple[int, ...]]:
    """Integer vectors in general position, drawn point by point.

    A drawn point that is dependent with ``r - 1`` earlier points is redrawn;
    more than ``RETRY_BUDGET`` redraws in total raise ``DegenerateConfiguration``.
    """
    if not n >= r >= 2:
        raise ValueError(f"need n >= r >= 2, got n={n}, r={r}")
    if coord_bound < 8:
        raise ValueError("coordinate bound must be at least 8")
    rng = random.Random(seed)
    vectors: list[tuple[int, ...]] = []
    rejected = 0
    while len(vectors) < n:
        v = tuple(rng.randint(-coord_bound, coord_bound) for _ in range(r))
        ok = all(det_sign([vectors[i] for i in subset] + [v]) != 0
                 for subset in combinations(range(len(vectors)), r - 1))
        if ok and len(vectors) < r - 1:
            # the first r-1 points must already be independent among themselves
            ok = _prefix_independent(vectors + [v], r)
        if ok:
            vectors.append(v)
            continue
        rejected += 1
        if rejected > RETRY_BUDGET:
            raise DegenerateConfiguration(
                f"no general-position configuration after {RETRY_BUDGET} redraws "
                f"(n={n}, r={r}, bound={coord_bound})")
    return vectors


def _prefix_independent(vectors: list[tuple[int, ...]], r: int) -> bool:
    # rank of a short prefix, via a Gram determinant of the stacked rows
    k = len(vectors)
    gram = [[sum(a * b for a, b in zip(vectors[i], vectors[j])) for j in range(k)]
            for i in range(k)]
    return det_sign(gram) != 0


def random_realizable(n: int, r: int, seed: int,
                      coord_bound: int = DEFAULT_COORD_BOUND) -> OrientedMatroid:
    return from_vectors(random_configuration(n, r, seed, coord_bound))


def perturb_graph(g: Graph, swaps: int, seed: int) -> Graph:
    """Apply ``swaps`` random degree-preserving 2-edge swaps.

    A swap replaces edges ``{a,b}, {c,d}`` by ``{a,c}, {b,d}`` (or ``{a,d}, {b,c}``).
    Swaps that would create a loop, a multi-edge or a disconnected graph are
    skipped; at most ``100 * swaps`` candidates are tried.
    """
    rng = random.Random(seed)
    edges = sorted(g.edges())
    edge_set = set(edges)
    done = 0
    attempts = 0
    while done < swaps and attempts < 100 * max(swaps, 1) and len(edges) >= 2:
        attempts += 1
        i, j = rng.sample(range(len(edges)), 2)
        a, b = edges[i]
        c, d = edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        new1 = (min(a, c), max(a, c))
        new2 = (min(b, d), max(b, d))
        if a == c or b == d or new1 in edge_set or new2 in edge_set or new1 == new2:
            continue
        trial = edge_set - {edges[i], edges[j]} | {new1, new2}
        candidate = Graph.from_edges(g.vertex_count, trial)
        if not is_connected(candidate):
            continue
        edge_set = trial
        edges = sorted(edge_set)
        done += 1
    return Graph.from_edges(g.vertex_count, edge_set)
