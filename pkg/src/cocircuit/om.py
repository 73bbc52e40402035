"""Uniform oriented matroids given by their cocircuits.

``validate_axioms`` is a deliberately naive checker of the cocircuit axioms
and serves as the reference oracle for everything else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .signs import SignVector, restrict


class FormatError(ValueError):
    """Raised when a text file does not follow its declared format."""


@dataclass(frozen=True)
class OrientedMatroid:
    n: int
    r: int
    cocircuits: frozenset[SignVector]

    def __post_init__(self):
        object.__setattr__(self, "cocircuits", frozenset(self.cocircuits))
        for x in self.cocircuits:
            if len(x) != self.n:
                raise ValueError(f"cocircuit {x} has length {len(x)}, expected {self.n}")

    def sorted_cocircuits(self) -> list[SignVector]:
        return sorted(self.cocircuits, key=str)

    def __len__(self) -> int:
        return len(self.cocircuits)

    def to_text(self) -> str:
        lines = ["om v1", f"{self.n} {self.r}"]
        lines.extend(str(x) for x in self.sorted_cocircuits())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "OrientedMatroid":
        lines = text.splitlines()
        if not lines or lines[0] != "om v1":
            raise FormatError("expected header 'om v1'")
        n, r = _parse_int_pair(lines, 1)
        vectors = []
        for line in lines[2:]:
            if not line:
                continue
            if len(line) != n:
                raise FormatError(f"sign vector {line!r} does not have length {n}")
            try:
                vectors.append(SignVector.parse(line))
            except ValueError as exc:
                raise FormatError(str(exc)) from None
        if not 1 <= r <= n:
            raise FormatError(f"invalid rank {r} for n={n}")
        return cls(n, r, frozenset(vectors))


def _parse_int_pair(lines: list[str], index: int) -> tuple[int, int]:
    if len(lines) <= index:
        raise FormatError("file truncated")
    parts = lines[index].split(" ")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"expected two integers on line {index + 1}, got {lines[index]!r}")
    return int(parts[0]), int(parts[1])


@dataclass
class AxiomReport:
    c1_ok: bool
    c2_ok: bool
    c3_ok: bool
    witnesses: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.c1_ok and self.c2_ok and self.c3_ok

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        parts = [f"C1={'ok' if self.c1_ok else 'FAIL'}",
                 f"C2={'ok' if self.c2_ok else 'FAIL'}",
                 f"C3={'ok' if self.c3_ok else 'FAIL'}"]
        return " ".join(parts)


def validate_axioms(cocircuits: Iterable[SignVector], n: int, r: int) -> AxiomReport:
    """Brute-force check of the uniform cocircuit axioms.

    C1: every support has size ``n - r + 1``.
    C2: each ``(n - r + 1)``-subset is the support of exactly two members,
    which are negatives of each other.
    C3: for ``X != -Y`` and ``e`` in their separator some ``Z`` has
    ``Z_e = 0`` and ``Z_f`` in ``{X_f, Y_f, 0}`` for every other ``f``.
    Every ``Z`` in the set is scanned for every pair.
    """
    vectors = sorted(set(cocircuits), key=str)
    witnesses: list[tuple] = []
    for x in vectors:
        if len(x) != n:
            raise ValueError(f"cocircuit {x} has length {len(x)}, expected {n}")
    k = n - r + 1

    c1_ok = True
    for x in vectors:
        if len(x.support) != k:
            c1_ok = False
            witnesses.append(("C1", str(x)))

    c2_ok = True
    by_support: dict[frozenset[int], list[SignVector]] = {}
    for x in vectors:
        by_support.setdefault(x.support, []).append(x)
    for subset in combinations(range(n), k):
        members = by_support.get(frozenset(subset), [])
        if len(members) != 2 or members[0] != -members[1]:
            c2_ok = False
            witnesses.append(("C2", subset, tuple(str(x) for x in members)))

    c3_ok = True
    if vectors:
        mat = np.array([x.signs for x in vectors], dtype=np.int8)
        zero = mat == 0
        zero_cols = zero.astype(np.int32)
        for i, x in enumerate(vectors):
            xs = mat[i]
            # compat[y, z]: every f has z_f in {0, x_f, y_f}
            compat = (zero[None, :, :] | (mat[None, :, :] == xs[None, None, :])
                      | (mat[None, :, :] == mat[:, None, :])).all(axis=2)
            hit = (compat.astype(np.int32) @ zero_cols) > 0
            sep = (mat * xs[None, :]) < 0
            antipode = (mat == -xs[None, :]).all(axis=1)
            bad = sep & ~hit & ~antipode[:, None]
            for j, e in zip(*np.nonzero(bad)):
                c3_ok = False
                witnesses.append(("C3", str(x), str(vectors[j]), int(e)))
    return AxiomReport(c1_ok, c2_ok, c3_ok, witnesses)


def contraction(m: OrientedMatroid, elements: Iterable[int]) -> OrientedMatroid:
    """Contraction minor ``m / elements`` on the remaining elements, renumbered in order."""
    e1 = frozenset(elements)
    if len(e1) >= m.r:
        raise ValueError(f"cannot contract {len(e1)} elements from a rank-{m.r} matroid")
    if any(not 0 <= e < m.n for e in e1):
        raise ValueError("element out of range")
    keep = [e for e in range(m.n) if e not in e1]
    cocircuits = frozenset(restrict(x, keep) for x in m.cocircuits
                           if all(x[e] == 0 for e in e1))
    return OrientedMatroid(m.n - len(e1), m.r - len(e1), cocircuits)


def deletion(m: OrientedMatroid, e: int) -> OrientedMatroid:
    """Deletion minor ``m \\ e``: restrictions of the cocircuits with ``X_e != 0``."""
    if m.n - 1 < m.r:
        raise ValueError(f"cannot delete from n={m.n}, r={m.r}")
    if not 0 <= e < m.n:
        raise ValueError("element out of range")
    keep = [f for f in range(m.n) if f != e]
    cocircuits = frozenset(restrict(x, keep) for x in m.cocircuits if x[e] != 0)
    return OrientedMatroid(m.n - 1, m.r, cocircuits)


def colines(m: OrientedMatroid) -> list[tuple[frozenset[int], OrientedMatroid]]:
    """All rank-2 contraction minors, one per ``(r - 2)``-subset."""
    if m.r < 2:
        raise ValueError("colines need rank at least 2")
    return [(frozenset(t), contraction(m, t)) for t in combinations(range(m.n), m.r - 2)]


def expected_cocircuit_count(n: int, r: int) -> int:
    return 2 * comb(n, r - 1)
