"""Decide whether a graph is the cocircuit graph of a uniform oriented matroid.

Pipeline: regularity and vertex count fix ``(r, n)``; for a fixed vertex ``v``
every vertex ``w`` at distance ``n - r + 2`` is tried as the antipode of ``v``.
Each candidate goes through antipodal-map propagation, neighbor pairing,
coline tracing, labeling reconstruction and the final crabbed-path check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

import numpy as np

from .graphs import Graph, apsp, check_regular, is_connected
from .labeling import ComparisonCounter, SignLabeling, is_sign_labeling, verify_om_labeling
from .om import OrientedMatroid
from .signs import SignVector

ACCEPT = "ACCEPT"
REJECT = "REJECT"

# ordered from shallowest to deepest
STAGES = (
    "input",
    "connectivity",
    "regularity",
    "vertex-count",
    "antipodal-candidates",
    "antipodal-map",
    "pairing",
    "colines",
    "labeling",
    "sign-labeling",
    "om-labeling",
    "accepted",
)


def stage_depth(stage: str) -> int:
    return STAGES.index(stage)


class RecognitionFailure(Exception):
    """A pipeline stage failed; ``witness`` names the offending vertex, edge or element."""

    def __init__(self, stage: str, message: str, witness=None):
        super().__init__(f"{stage}: {message}")
        self.stage = stage
        self.witness = witness


@dataclass(frozen=True)
class Parameters:
    r: int
    n: int

    @property
    def m(self) -> int:
        """Half-length of a coline cycle, also the antipodal distance."""
        return self.n - self.r + 2

    @property
    def degree(self) -> int:
        return 2 * (self.r - 1)

    @property
    def vertex_count(self) -> int:
        return 2 * comb(self.n, self.r - 1)


def infer_parameters(g: Graph) -> Parameters:
    degree = check_regular(g)
    if degree is None:
        raise RecognitionFailure("regularity", "graph is not regular")
    if degree < 2 or degree % 2:
        raise RecognitionFailure("regularity", f"degree {degree} is not a positive even number")
    r = degree // 2 + 1
    if g.vertex_count % 2:
        raise RecognitionFailure("vertex-count", f"odd vertex count {g.vertex_count}")
    half = g.vertex_count // 2
    n = r - 1
    while comb(n, r - 1) < half:
        n += 1
    if comb(n, r - 1) != half:
        raise RecognitionFailure("vertex-count", f"{half} is not a binomial C(n, {r - 1})")
    if n < r:
        raise RecognitionFailure("vertex-count", f"n={n} is smaller than r={r}")
    return Parameters(r, n)


def antipodal_candidates(g: Graph, v: int, dist: np.ndarray, params: Parameters) -> list[int]:
    return [int(w) for w in np.nonzero(dist[v] == params.m)[0]]


class LookupCounter:
    def __init__(self):
        self.count = 0


def build_antipodal_map(g: Graph, v: int, w: int, dist: np.ndarray, params: Parameters,
                        counter: Optional[LookupCounter] = None) -> tuple[int, ...]:
    """Propagate ``A(v) = w`` along a BFS tree rooted at ``v``.

    ``A(u)`` is the unique neighbor of ``A(parent(u))`` at distance ``m`` from ``u``.
    The result must be a fixed-point-free involutive automorphism.
    """
    m = params.m
    if dist[v, w] != m:
        raise RecognitionFailure("antipodal-map", f"d({v},{w}) != {m}", witness=w)
    size = g.vertex_count
    a = [-1] * size
    a[v] = w
    seen = [False] * size
    seen[v] = True
    queue = deque([v])
    lookups = 0
    while queue:
        p = queue.popleft()
        for u in g.adj[p]:
            if seen[u]:
                continue
            seen[u] = True
            found = []
            for cand in g.adj[a[p]]:
                lookups += 1
                if dist[u, cand] == m:
                    found.append(cand)
            if len(found) != 1:
                if counter is not None:
                    counter.count += lookups
                raise RecognitionFailure(
                    "antipodal-map", f"{len(found)} antipode candidates for vertex {u}", witness=u)
            a[u] = found[0]
            queue.append(u)
    if counter is not None:
        counter.count += lookups
    for u in range(size):
        if a[u] < 0:
            raise RecognitionFailure("antipodal-map", f"vertex {u} unreached", witness=u)
        if a[u] == u or a[a[u]] != u:
            raise RecognitionFailure("antipodal-map", f"map is not a fixed-point-free involution at {u}",
                                     witness=u)
    for x, y in g.edges():
        if not g.has_edge(a[x], a[y]):
            raise RecognitionFailure("antipodal-map", f"edge {x}-{y} not preserved", witness=(x, y))
    return tuple(a)


def partner_pairing(g: Graph, antipode: tuple[int, ...], dist: np.ndarray, x: int,
                    params: Parameters) -> list[tuple[int, int]]:
    """Pair neighbors ``u, w`` of ``x`` with ``d(w, A(u)) = n - r``.

    Partners are the two neighbors of ``x`` on a common coline cycle, where
    ``w`` sits two steps from ``u`` and so ``m - 2`` steps from ``A(u)``.
    Returns the pairs sorted by their smaller vertex.
    """
    target = params.n - params.r
    nbrs = g.adj[x]
    partner: dict[int, int] = {}
    for u in nbrs:
        matches = [w for w in nbrs if w != u and dist[w, antipode[u]] == target]
        if len(matches) != 1:
            raise RecognitionFailure("pairing", f"neighbor {u} of {x} has {len(matches)} partners",
                                     witness=(x, u))
        partner[u] = matches[0]
    pairs = set()
    for u, w in partner.items():
        if partner[w] != u:
            raise RecognitionFailure("pairing", f"partner relation at {x} is not symmetric",
                                     witness=(x, u))
        pairs.add((min(u, w), max(u, w)))
    if len(pairs) != params.r - 1:
        raise RecognitionFailure("pairing", f"{len(pairs)} pairs at {x}", witness=x)
    return sorted(pairs)


@dataclass
class ColineAtlas:
    """Neighbor pairings per vertex and the edge partition into coline cycles.

    ``cycles_at[x][k]`` is the cycle through the ``k``-th pair of ``pairings[x]``.
    """

    pairings: list[list[tuple[int, int]]]
    cycles: list[tuple[int, ...]]
    cycles_at: list[list[int]]
    edge_cycle: dict[tuple[int, int], int] = field(repr=False)


def trace_colines(g: Graph, pairings: list[list[tuple[int, int]]], antipode: tuple[int, ...],
                  params: Parameters) -> ColineAtlas:
    m = params.m
    partner: list[dict[int, int]] = []
    for pairs in pairings:
        table = {}
        for u, w in pairs:
            table[u] = w
            table[w] = u
        partner.append(table)

    edge_cycle: dict[tuple[int, int], int] = {}
    cycles: list[tuple[int, ...]] = []
    for a, b in g.edges():
        if (a, b) in edge_cycle:
            continue
        seq = [a]
        prev, cur = a, b
        while cur != a:
            if len(seq) >= 2 * m:
                raise RecognitionFailure("colines", f"cycle through edge {a}-{b} longer than {2 * m}",
                                         witness=(a, b))
            seq.append(cur)
            prev, cur = cur, partner[cur][prev]
        if partner[a][prev] != b:
            raise RecognitionFailure("colines", f"walk through {a}-{b} does not close up",
                                     witness=(a, b))
        if len(seq) != 2 * m or len(set(seq)) != len(seq):
            raise RecognitionFailure("colines", f"cycle through edge {a}-{b} has length {len(seq)}",
                                     witness=(a, b))
        cid = len(cycles)
        for i in range(2 * m):
            key = tuple(sorted((seq[i], seq[(i + 1) % (2 * m)])))
            if key in edge_cycle:
                raise RecognitionFailure("colines", f"edge {key} lies on two cycles", witness=key)
            edge_cycle[key] = cid
        for i in range(2 * m):
            if antipode[seq[i]] != seq[(i + m) % (2 * m)]:
                raise RecognitionFailure("colines", f"antipode of {seq[i]} is not opposite on its cycle",
                                         witness=seq[i])
        cycles.append(tuple(seq))

    expected = (params.r - 1) * g.vertex_count // (2 * m)
    if len(cycles) != expected or (params.r - 1) * g.vertex_count % (2 * m):
        raise RecognitionFailure("colines", f"{len(cycles)} cycles, expected {expected}")
    cycles_at = [[edge_cycle[(min(x, u), max(x, u))] for u, _ in pairings[x]]
                 for x in range(g.vertex_count)]
    for x in range(g.vertex_count):
        for (u, w), c in zip(pairings[x], cycles_at[x]):
            if edge_cycle[(min(x, w), max(x, w))] != c:
                raise RecognitionFailure("colines", f"partners {u},{w} of {x} on different cycles",
                                         witness=x)
    return ColineAtlas(pairings, cycles, cycles_at, edge_cycle)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class SlotAssignment:
    """Ground-set element of every (vertex, cycle) slot and the contraction set of every cycle."""

    slot_elements: list[list[int]]
    contraction_sets: list[frozenset[int]]

    def zero_set(self, x: int) -> frozenset[int]:
        return frozenset(self.slot_elements[x])


def assign_slots(g: Graph, antipode: tuple[int, ...], atlas: ColineAtlas,
                 params: Parameters) -> SlotAssignment:
    """Identify ground-set elements as classes of (vertex, cycle) slots.

    The slot of ``x`` on cycle ``C`` holds the zero of ``x`` that is nonzero
    elsewhere on ``C``.  Two rules merge slots:

    * ``x`` and ``A(x)`` hold the same element on each of their common cycles;
    * across an edge ``x - y`` of cycle ``C``, the slot of ``x`` on another
      cycle ``E`` equals the slot of ``y`` on the unique cycle ``F != C`` at
      ``y`` that meets ``E`` (``E`` and ``F`` span a rank-3 minor with ``C``).
    """
    r1 = params.r - 1
    size = g.vertex_count
    uf = _UnionFind(size * r1)
    slot_index = [{c: k for k, c in enumerate(atlas.cycles_at[x])} for x in range(size)]
    meets = set()
    for x in range(size):
        for c1, c2 in combinations(atlas.cycles_at[x], 2):
            meets.add((c1, c2))
            meets.add((c2, c1))

    for x in range(size):
        ax = antipode[x]
        for k, c in enumerate(atlas.cycles_at[x]):
            if c not in slot_index[ax]:
                raise RecognitionFailure("labeling", f"cycle {c} misses antipode of {x}", witness=x)
            uf.union(x * r1 + k, ax * r1 + slot_index[ax][c])

    for (x, y), c in atlas.edge_cycle.items():
        for a, b in ((x, y), (y, x)):
            for k, e in enumerate(atlas.cycles_at[a]):
                if e == c:
                    continue
                found = [f for f in atlas.cycles_at[b] if f != c and (e, f) in meets]
                if len(found) != 1:
                    raise RecognitionFailure(
                        "labeling", f"slot on cycle {e} at {a} has {len(found)} images at {b}",
                        witness=(a, b))
                uf.union(a * r1 + k, b * r1 + slot_index[b][found[0]])

    element_of_root: dict[int, int] = {}
    slot_elements: list[list[int]] = []
    for x in range(size):
        row = []
        for k in range(r1):
            root = uf.find(x * r1 + k)
            if root not in element_of_root:
                element_of_root[root] = len(element_of_root)
            row.append(element_of_root[root])
        slot_elements.append(row)
    if len(element_of_root) != params.n:
        raise RecognitionFailure("labeling", f"{len(element_of_root)} elements, expected {params.n}")
    for x, row in enumerate(slot_elements):
        if len(set(row)) != r1:
            raise RecognitionFailure("labeling", f"repeated element among slots of {x}", witness=x)

    contraction_sets = []
    for cid, seq in enumerate(atlas.cycles):
        sets = {frozenset(slot_elements[z]) - {slot_elements[z][slot_index[z][cid]]} for z in seq}
        if len(sets) != 1:
            raise RecognitionFailure("labeling", f"cycle {cid} has no common contraction set",
                                     witness=cid)
        contraction_sets.append(sets.pop())
    return SlotAssignment(slot_elements, contraction_sets)


def _components(g: Graph, removed: set[int]) -> list[set[int]]:
    comps = []
    seen = set(removed)
    for s in range(g.vertex_count):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def reconstruct_labeling(g: Graph, antipode: tuple[int, ...], atlas: ColineAtlas,
                         params: Parameters) -> SignLabeling:
    """Zero-supports from the slot classes, signs from the two sides of each element.

    Vertex 0 gets zeros ``0 .. r-2`` (in the order of its pairs) and ``+`` on its
    support; for ``e`` in its zero-support the smaller vertex of its ``e``-pair
    gets ``+``.
    """
    slots = assign_slots(g, antipode, atlas, params)
    n, size = params.n, g.vertex_count
    zero_sets = [slots.zero_set(x) for x in range(size)]
    if len(set(zero_sets)) != size // 2:
        raise RecognitionFailure("labeling", "zero-supports are not shared by exactly two vertices")
    for x in range(size):
        if zero_sets[antipode[x]] != zero_sets[x]:
            raise RecognitionFailure("labeling", f"{x} and its antipode have different zeros", witness=x)

    signs = [[0] * n for _ in range(size)]
    v0 = 0
    for e in range(n):
        hyperplane = {x for x in range(size) if e in zero_sets[x]}
        comps = _components(g, hyperplane)
        if len(comps) != 2:
            raise RecognitionFailure("labeling", f"element {e} splits the graph into {len(comps)} parts",
                                     witness=e)
        first, second = comps
        if {antipode[x] for x in first} != second:
            raise RecognitionFailure("labeling", f"antipode does not swap the sides of element {e}",
                                     witness=e)
        if e in zero_sets[v0]:
            k = slots.slot_elements[v0].index(e)
            anchor = atlas.pairings[v0][k][0]
        else:
            anchor = v0
        positive = first if anchor in first else second
        for x in first | second:
            signs[x][e] = 1 if x in positive else -1
    labels = tuple(SignVector(s) for s in signs)
    return SignLabeling(n, params.r, labels)


@dataclass
class CandidateOutcome:
    candidate: int
    stage: str
    accepted: bool
    message: str = ""
    witness: object = None
    distance_lookups: int = 0
    sign_comparisons: int = 0
    labeling: Optional[SignLabeling] = field(default=None, repr=False)


@dataclass
class RecognitionResult:
    verdict: str
    stage: str
    message: str = ""
    witness: object = None
    params: Optional[Parameters] = None
    labeling: Optional[SignLabeling] = field(default=None, repr=False)
    antipode: Optional[int] = None
    candidates: list[CandidateOutcome] = field(default_factory=list)
    base_vertex: int = 0

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPT

    @property
    def om(self) -> Optional[OrientedMatroid]:
        return None if self.labeling is None else self.labeling.to_om()

    @property
    def successes(self) -> list[CandidateOutcome]:
        return [c for c in self.candidates if c.accepted]

    def survivors(self, stage: str) -> int:
        """Candidates that got past ``stage``."""
        depth = stage_depth(stage)
        return sum(1 for c in self.candidates if stage_depth(c.stage) > depth)


def _try_candidate(g: Graph, v: int, w: int, dist: np.ndarray, params: Parameters) -> CandidateOutcome:
    lookups = LookupCounter()
    comparisons = ComparisonCounter()
    try:
        antipode = build_antipodal_map(g, v, w, dist, params, lookups)
        pairings = [partner_pairing(g, antipode, dist, x, params) for x in range(g.vertex_count)]
        atlas = trace_colines(g, pairings, antipode, params)
        lab = reconstruct_labeling(g, antipode, atlas, params)
        if not is_sign_labeling(g, lab):
            raise RecognitionFailure("sign-labeling", "reconstructed labels do not match the edges")
        if not verify_om_labeling(g, lab, comparisons):
            raise RecognitionFailure("om-labeling", "some pair has no crabbed path")
    except RecognitionFailure as fail:
        return CandidateOutcome(w, fail.stage, False, str(fail), fail.witness,
                                lookups.count, comparisons.count)
    return CandidateOutcome(w, "accepted", True, "", None, lookups.count, comparisons.count, lab)


def recognize(g: Graph, all_candidates: bool = False) -> RecognitionResult:
    """Run the full pipeline; ACCEPT carries the reconstructed labeling.

    Candidates are tried in ascending order and the first success is returned.
    With ``all_candidates`` every candidate is evaluated and recorded.
    """
    if g.vertex_count == 0:
        return RecognitionResult(REJECT, "input", "empty graph")
    if not is_connected(g):
        return RecognitionResult(REJECT, "connectivity", "graph is disconnected")
    try:
        params = infer_parameters(g)
    except RecognitionFailure as fail:
        return RecognitionResult(REJECT, fail.stage, str(fail), fail.witness)
    dist = apsp(g)
    v = 0
    candidates = antipodal_candidates(g, v, dist, params)
    if not candidates:
        return RecognitionResult(REJECT, "antipodal-candidates",
                                 f"no vertex at distance {params.m} from {v}", v, params)
    outcomes = []
    for w in candidates:
        outcome = _try_candidate(g, v, w, dist, params)
        outcomes.append(outcome)
        if outcome.accepted and not all_candidates:
            break
    wins = [o for o in outcomes if o.accepted]
    if wins:
        best = wins[0]
        return RecognitionResult(ACCEPT, "accepted", "", None, params, best.labeling,
                                 best.candidate, outcomes, v)
    deepest = max(outcomes, key=lambda o: stage_depth(o.stage))
    return RecognitionResult(REJECT, deepest.stage, deepest.message, deepest.witness, params,
                             None, None, outcomes, v)
