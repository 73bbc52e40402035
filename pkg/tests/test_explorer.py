import csv
import io
import logging

import pytest

from cocircuit.explorer import (CSV_COLUMNS, antipodality_scan, census_csv, coline_distance_check,
                                coline_distance_check_labeled, dv_census, scan_labeled)
from cocircuit.generators import cyclic, random_realizable
from cocircuit.graphs import Graph
from cocircuit.labeling import SignLabeling, build_cocircuit_graph


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_rank2_scan(n):
    census = antipodality_scan(random_realizable(n, 2, n))
    assert census.diameter == n
    assert census.critical_pairs == n
    assert census.noncritical_antipodal == 0
    assert census.max_Dv == 1


@pytest.mark.parametrize("n", [3, 4, 6, 7])
def test_rank3_scan(n):
    census = antipodality_scan(random_realizable(n, 3, 1))
    assert census.diameter == n - 1
    assert census.noncritical_antipodal == 0


def test_scan_invariants():
    for m in (cyclic(7, 4), random_realizable(6, 4, 3)):
        c = antipodality_scan(m)
        assert c.noncritical_antipodal <= c.critical_pairs
        assert c.diameter >= c.n - c.r + 2


def test_scan_warns_on_non_antipodal_critical_pair(caplog):
    # a fake labeling of the 6-cycle whose antipodes are adjacent pairs
    g = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    _, true = build_cocircuit_graph(cyclic(3, 2))
    labels = [true.labels[v] for v in (4, 2, 3, 0, 1, 5)]
    with caplog.at_level(logging.WARNING):
        census = scan_labeled(g, SignLabeling(3, 2, tuple(labels)))
    assert census.noncritical_antipodal > 0
    assert "WARNING" in caplog.text


@pytest.mark.parametrize("n, r, seed", [(5, 2, None), (5, 3, 0), (6, 4, 1), (6, 5, 2), (5, 5, None)])
def test_coline_distance_check_holds(n, r, seed):
    m = cyclic(n, r) if seed is None else random_realizable(n, r, seed)
    assert coline_distance_check(m)


def test_coline_distance_check_rejects_corrupted_labeling():
    g, lab = build_cocircuit_graph(cyclic(5, 3))
    labels = list(lab.labels)
    labels[0], labels[1] = labels[1], labels[0]
    assert not coline_distance_check_labeled(g, SignLabeling(5, 3, tuple(labels)))


def test_dv_census_rows():
    corpus = [cyclic(4, 2), random_realizable(5, 3, 0), cyclic(6, 4)]
    rows = dv_census(corpus)
    for row in rows:
        assert row.verified_labelings >= 1
        assert row.stageA_survivors >= row.stageB_survivors >= row.verified_labelings
        assert row.Dv >= row.stageA_survivors
    assert [row.Dv for row in rows[:2]] == [1, 1]


def test_census_csv_format():
    text = census_csv(dv_census([cyclic(4, 3), cyclic(5, 3)]))
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[0] == ("n,r,V,diameter,critical_pairs,noncritical_antipodal,max_Dv,"
                        "stageA_survivors,stageB_survivors,verified_labelings")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0]["V"] == "12" and rows[1]["V"] == "20"
    assert census_csv(dv_census([cyclic(4, 3), cyclic(5, 3)])) == text
