import pytest
from hypothesis import given
from hypothesis import strategies as st

from cocircuit.signs import (SignVector, is_crabbed_member, negate, restrict, separator,
                             support)

sv = SignVector.parse


def vectors(n):
    return st.lists(st.sampled_from((-1, 0, 1)), min_size=n, max_size=n).map(SignVector)


same_length_pair = st.integers(0, 7).flatmap(lambda n: st.tuples(vectors(n), vectors(n)))
same_length_triple = st.integers(0, 7).flatmap(lambda n: st.tuples(vectors(n), vectors(n), vectors(n)))


@pytest.mark.parametrize("text, expected", [
    ("0++", {1, 2}),
    ("000", set()),
    ("--0", {0, 1}),
])
def test_support(text, expected):
    assert support(sv(text)) == expected


def test_separator_examples():
    assert separator(sv("+-0"), sv("--+")) == {0}
    x = sv("+-0+")
    assert separator(x, x) == frozenset()
    assert separator(x, negate(x)) == support(x)


def test_separator_length_mismatch():
    with pytest.raises(ValueError):
        separator(sv("+-"), sv("+-0"))


def test_negate_examples():
    assert negate(sv("0++")) == sv("0--")
    assert negate(sv("000")) == sv("000")
    assert -sv("+0-") == sv("-0+")


def test_restrict_examples():
    assert restrict(sv("+-0"), {0, 2}) == sv("+0")
    assert restrict(sv("+-0"), range(3)) == sv("+-0")
    assert restrict(sv("0++-"), {1, 3}) == sv("+-")


def test_crabbed_member_examples():
    x, y = sv("0++"), sv("--0")
    assert is_crabbed_member(x, x, y)
    assert is_crabbed_member(sv("-0+"), x, y)
    assert not is_crabbed_member(sv("+00"), sv("-00"), sv("0+0"))


def test_text_round_trip_and_errors():
    assert str(sv("+-0")) == "+-0"
    with pytest.raises(ValueError):
        sv("+x0")
    with pytest.raises(ValueError):
        SignVector([2, 0])


def test_immutable_and_hashable():
    x = sv("+0-")
    with pytest.raises(AttributeError):
        x.foo = 1
    assert {x, sv("+0-")} == {x}
    assert x.plus == {0} and x.minus == {2} and x.zero_support == {1}


@given(same_length_pair)
def test_separator_symmetric(pair):
    x, y = pair
    assert separator(x, y) == separator(y, x)


@given(st.integers(0, 7).flatmap(vectors))
def test_negation_laws(x):
    assert negate(negate(x)) == x
    assert support(negate(x)) == support(x)
    assert separator(x, negate(x)) == support(x)
    assert x.plus | x.minus == x.support
    assert not (x.support & x.zero_support)
    assert x.support | x.zero_support == set(range(len(x)))


@given(same_length_triple)
def test_crabbed_member_symmetric_in_endpoints(triple):
    w, x, y = triple
    assert is_crabbed_member(w, x, y) == is_crabbed_member(w, y, x)
    expected = w.plus <= (x.plus | y.plus) and w.minus <= (x.minus | y.minus)
    assert is_crabbed_member(w, x, y) == expected


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(vectors(n), st.sets(st.integers(0, n - 1)))))
def test_restrict_commutes_with_negate(case):
    x, keep = case
    assert restrict(negate(x), keep) == negate(restrict(x, keep))
