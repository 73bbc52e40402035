"""Cocircuit graphs, sign labelings, antipodal maps and crabbed paths."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .graphs import DirectedGraph, Graph, backward_reachable, vertex_disjoint_path_count
from .om import FormatError, OrientedMatroid
from .signs import SignVector, is_crabbed_member, separator


@dataclass(frozen=True)
class SignLabeling:
    """Vertex ``v`` carries ``labels[v]``; ``n`` and ``r`` are the ambient parameters."""

    n: int
    r: int
    labels: tuple[SignVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> SignVector:
        return self.labels[v]

    def zero_set(self, v: int) -> frozenset[int]:
        return self.labels[v].zero_support

    def cocircuits(self) -> frozenset[SignVector]:
        return frozenset(self.labels)

    def to_om(self) -> OrientedMatroid:
        return OrientedMatroid(self.n, self.r, self.cocircuits())

    def vertex_of(self) -> dict[SignVector, int]:
        return {x: v for v, x in enumerate(self.labels)}

    def to_text(self) -> str:
        lines = ["labeling v1", f"{self.n} {self.r}"]
        lines.extend(f"{v} {x}" for v, x in enumerate(self.labels))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SignLabeling":
        lines = text.splitlines()
        if not lines or lines[0] != "labeling v1":
            raise FormatError("expected header 'labeling v1'")
        if len(lines) < 2:
            raise FormatError("file truncated")
        parts = lines[1].split(" ")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"malformed parameter line {lines[1]!r}")
        n, r = int(parts[0]), int(parts[1])
        labels = []
        for i, line in enumerate(l for l in lines[2:] if l):
            parts = line.split(" ")
            if len(parts) != 2 or not parts[0].isdigit() or int(parts[0]) != i:
                raise FormatError(f"expected label line for vertex {i}, got {line!r}")
            if len(parts[1]) != n:
                raise FormatError(f"label {parts[1]!r} does not have length {n}")
            try:
                labels.append(SignVector.parse(parts[1]))
            except ValueError as exc:
                raise FormatError(str(exc)) from None
        return cls(n, r, tuple(labels))


def adjacent_labels(x: SignVector, y: SignVector) -> bool:
    """Zero-supports differ in exactly two elements and the separator is empty."""
    return len(x.zero_support ^ y.zero_support) == 2 and not separator(x, y)


def build_cocircuit_graph(m: OrientedMatroid) -> tuple[Graph, SignLabeling]:
    """Cocircuit graph with vertices numbered in sorted sign-string order."""
    labels = m.sorted_cocircuits()
    edges = [(i, j) for i, j in combinations(range(len(labels)), 2)
             if adjacent_labels(labels[i], labels[j])]
    return Graph.from_edges(len(labels), edges), SignLabeling(m.n, m.r, tuple(labels))


def satisfies_c1_c2(labels: Sequence[SignVector], n: int, r: int) -> bool:
    k = n - r + 1
    if any(len(x) != n or len(x.support) != k for x in labels):
        return False
    if len(set(labels)) != len(labels) or len(labels) != 2 * comb(n, k):
        return False
    by_support: dict[frozenset[int], list[SignVector]] = {}
    for x in labels:
        by_support.setdefault(x.support, []).append(x)
    return all(len(pair) == 2 and pair[0] == -pair[1] for pair in by_support.values())


def is_sign_labeling(g: Graph, lab: SignLabeling) -> bool:
    """C1 and C2 over the labels, and edges exactly where labels are adjacent."""
    if len(lab) != g.vertex_count:
        return False
    if not satisfies_c1_c2(lab.labels, lab.n, lab.r):
        return False
    for u, v in combinations(range(g.vertex_count), 2):
        if g.has_edge(u, v) != adjacent_labels(lab[u], lab[v]):
            return False
    return True


def antipodal_from_labeling(lab: SignLabeling) -> tuple[int, ...]:
    """``A(v)`` is the vertex labeled ``-L(v)``."""
    index = lab.vertex_of()
    try:
        return tuple(index[-x] for x in lab.labels)
    except KeyError as exc:
        raise ValueError(f"label {exc.args[0]} has no negative among the labels") from None


class ComparisonCounter:
    """Tally of sign comparisons made during crabbed-arc construction."""

    def __init__(self):
        self.count = 0


def _member(w: SignVector, x: SignVector, y: SignVector,
            counter: Optional[ComparisonCounter]) -> bool:
    # walk the support of w only
    ws, xs, ys = w.signs, x.signs, y.signs
    checked = 0
    ok = True
    for e, a in enumerate(ws):
        if a:
            checked += 1
            if a != xs[e] and a != ys[e]:
                ok = False
                break
    if counter is not None:
        counter.count += checked
    return ok


def crabbed_arcs(g: Graph, lab: SignLabeling, target: int,
                 counter: Optional[ComparisonCounter] = None) -> DirectedGraph:
    """Arc ``v -> w`` for each edge whose endpoint ``w`` lies in the ``(L(v), L(target))`` crab."""
    y = lab[target]
    d = DirectedGraph(g.vertex_count)
    for v, w in g.edges():
        if _member(lab[w], lab[v], y, counter):
            d.add_arc(v, w)
        if _member(lab[v], lab[w], y, counter):
            d.add_arc(w, v)
    return d


def verify_om_labeling(g: Graph, lab: SignLabeling,
                       counter: Optional[ComparisonCounter] = None) -> bool:
    """Every vertex not sharing the target's zero-support reaches the target by a crabbed walk.

    By the concatenation property of crabbed paths, reachability to ``u`` along
    ``(L(v), L(u))``-crabbed arcs yields a crabbed path from every such ``v``.
    """
    zero_sets = [lab.zero_set(v) for v in range(g.vertex_count)]
    for u in range(g.vertex_count):
        reached = backward_reachable(crabbed_arcs(g, lab, u, counter), u)
        if len(reached) == g.vertex_count:
            continue
        for v in range(g.vertex_count):
            if v not in reached and zero_sets[v] != zero_sets[u]:
                return False
    return True


def crabbed_vertices(lab: SignLabeling, v: int, w: int) -> list[int]:
    x, y = lab[v], lab[w]
    return [z for z in range(len(lab)) if is_crabbed_member(lab[z], x, y)]


def count_disjoint_crabbed_paths(g: Graph, lab: SignLabeling, v: int, w: int) -> int:
    """Vertex-disjoint ``v``-``w`` paths inside the ``(L(v), L(w))`` crab."""
    return vertex_disjoint_path_count(g, v, w, allowed=crabbed_vertices(lab, v, w))


def expected_crabbed_paths(lab: SignLabeling, v: int, w: int) -> int:
    return len(lab.zero_set(v) - lab.zero_set(w))


def ground_truth_pairing(g: Graph, lab: SignLabeling, x: int) -> set[frozenset[int]]:
    """Neighbors of ``x`` grouped by their unique support element inside ``L0(x)``."""
    zx = lab.zero_set(x)
    groups: dict[int, list[int]] = {}
    for u in g.adj[x]:
        common = lab[u].support & zx
        if len(common) != 1:
            raise ValueError(f"neighbor {u} of {x} has {len(common)} support elements in L0({x})")
        groups.setdefault(next(iter(common)), []).append(u)
    return {frozenset(us) for us in groups.values()}


def two_neighbors_per_element(g: Graph, lab: SignLabeling) -> bool:
    """Each ``f`` in ``L0(v)`` is nonzero at exactly two neighbors, once with each sign."""
    for v in range(g.vertex_count):
        for f in lab.zero_set(v):
            signs = Counter(lab[u][f] for u in g.adj[v] if lab[u][f] != 0)
            if signs != Counter({1: 1, -1: 1}):
                return False
    return True
