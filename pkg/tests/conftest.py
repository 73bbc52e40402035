import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cocircuit import build_cocircuit_graph, cyclic, random_realizable  # noqa: E402

CORPUS_PAIRS = [(r, n) for r in (2, 3, 4) for n in range(r, 9)] + [(5, 6), (5, 7)]
RANDOM_SEEDS = range(5)


@functools.lru_cache(maxsize=None)
def instance(n, r, seed=None):
    """``cyclic(n, r)`` for ``seed=None``, otherwise a seeded random realizable OM, with its graph."""
    m = cyclic(n, r) if seed is None else random_realizable(n, r, seed)
    g, lab = build_cocircuit_graph(m)
    return m, g, lab


def corpus_keys():
    keys = []
    for r, n in CORPUS_PAIRS:
        keys.append((n, r, None))
        keys.extend((n, r, s) for s in RANDOM_SEEDS)
    return keys


@pytest.fixture(scope="session")
def corpus():
    return [(key, *instance(*key)) for key in corpus_keys()]


def key_id(key):
    n, r, seed = key
    return f"n{n}r{r}-{'cyclic' if seed is None else f's{seed}'}"


ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    def record(criterion, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
