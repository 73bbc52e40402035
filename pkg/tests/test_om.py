from itertools import combinations
from math import comb

import pytest

from cocircuit.generators import cyclic, from_vectors, random_realizable
from cocircuit.labeling import build_cocircuit_graph
from cocircuit.graphs import check_regular, is_connected
from cocircuit.om import (FormatError, OrientedMatroid, colines, contraction, deletion,
                          validate_axioms)
from cocircuit.signs import SignVector

PLANAR = [(1, 0), (1, 1), (-1, 1)]


def planar_om():
    return from_vectors(PLANAR)


def test_planar_cocircuits_pass():
    m = planar_om()
    assert len(m) == 6
    assert validate_axioms(m.cocircuits, 3, 2).ok


def test_missing_negative_breaks_c2():
    m = planar_om()
    dropped = set(m.cocircuits) - {SignVector.parse("0++")}
    report = validate_axioms(dropped, 3, 2)
    assert report.c1_ok and not report.c2_ok and not report.ok


def test_flipped_sign_breaks_c2_or_c3():
    m = planar_om()
    vectors = set(m.cocircuits) - {SignVector.parse("0++")} | {SignVector.parse("0+-")}
    report = validate_axioms(vectors, 3, 2)
    assert not (report.c2_ok and report.c3_ok)
    assert report.witnesses


def test_wrong_support_size_breaks_c1():
    vectors = set(planar_om().cocircuits) | {SignVector.parse("+++")}
    assert not validate_axioms(vectors, 3, 2).c1_ok


def test_c3_violation_detected():
    # two rank-2 orientations glued: supports fine, but elimination fails
    vectors = {SignVector.parse(s) for s in ("0++", "0--", "+0+", "-0-", "++0", "--0")}
    report = validate_axioms(vectors, 3, 2)
    assert report.c1_ok and report.c2_ok and not report.c3_ok


def test_contraction_identity_and_counts():
    m = cyclic(5, 3)
    assert contraction(m, ()) == m
    minor = contraction(m, {2})
    assert (minor.n, minor.r) == (4, 2)
    assert len(minor) == 2 * comb(4, 1)
    assert validate_axioms(minor.cocircuits, minor.n, minor.r).ok


@pytest.mark.parametrize("n, r", [(5, 3), (6, 4), (6, 5)])
def test_coline_graph_is_cycle(n, r):
    m = random_realizable(n, r, 7)
    for contracted, minor in colines(m):
        assert len(contracted) == r - 2
        g, _ = build_cocircuit_graph(minor)
        assert g.vertex_count == 2 * (n - r + 2)
        assert check_regular(g) == 2 and is_connected(g)


def test_contraction_too_large():
    with pytest.raises(ValueError):
        contraction(cyclic(4, 3), {0, 1, 2})


def test_contraction_composes():
    m = cyclic(7, 4)
    a = {1}
    b = {4, 6}
    # b renumbered inside m / a
    keep = [e for e in range(m.n) if e not in a]
    b_local = {keep.index(e) for e in b}
    assert contraction(contraction(m, a), b_local) == contraction(m, a | b)


def test_deletion():
    m = cyclic(4, 2)
    minor = deletion(m, 1)
    assert (minor.n, minor.r, len(minor)) == (3, 2, 6)
    for e in range(6):
        big = random_realizable(6, 3, 1)
        assert validate_axioms(deletion(big, e).cocircuits, 5, 3).ok
    with pytest.raises(ValueError):
        deletion(cyclic(3, 3), 0)


@pytest.mark.parametrize("n, r, expected", [(4, 2, 1), (4, 3, 4), (6, 4, 15)])
def test_coline_counts(n, r, expected):
    result = colines(cyclic(n, r))
    assert len(result) == expected
    if r == 2:
        assert result[0] == (frozenset(), cyclic(n, r))


def test_cocircuit_count_formula():
    for n, r in [(3, 2), (5, 3), (6, 4), (7, 5)]:
        assert len(cyclic(n, r)) == 2 * comb(n, r - 1)


def test_om_text_round_trip():
    m = cyclic(4, 3)
    text = m.to_text()
    lines = text.splitlines()
    assert lines[:2] == ["om v1", "4 3"]
    assert lines[2:] == sorted(lines[2:])
    assert len(lines) == 2 + 12
    assert OrientedMatroid.from_text(text) == m


@pytest.mark.parametrize("text", [
    "",
    "om v2\n3 2\n",
    "om v1\n3\n",
    "om v1\n3 2\n++\n",
    "om v1\n3 2\n+x0\n",
    "om v1\n3  2\n",
])
def test_om_text_errors(text):
    with pytest.raises(FormatError):
        OrientedMatroid.from_text(text)


def test_all_subsets_enumerated_by_c2():
    m = cyclic(5, 3)
    supports = {x.support for x in m.cocircuits}
    assert supports == {frozenset(s) for s in combinations(range(5), 3)}
