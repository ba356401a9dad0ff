"""Shared poset builders for the test suite."""

import pytest

from incalg.posets import Poset


def chain(n, labels=None):
    labels = labels or [chr(ord("a") + i) for i in range(n)]
    return Poset.from_covers(labels, list(zip(labels, labels[1:])))


@pytest.fixture
def chain2():
    return chain(2)


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def diamond():
    return Poset.from_covers(["0", "a", "b", "1"],
                             [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


@pytest.fixture
def vee():
    # one minimum below two maxima
    return Poset.from_covers(["a", "b", "c"], [("a", "b"), ("a", "c")])


@pytest.fixture
def wedge():
    # two minima below one maximum
    return Poset.from_covers(["a", "b", "c"], [("a", "c"), ("b", "c")])


@pytest.fixture
def fence():
    # a < c > b < d: no element comparable with everything
    return Poset.from_covers(["a", "b", "c", "d"],
                             [("a", "c"), ("b", "c"), ("b", "d")])


@pytest.fixture
def crown():
    # a, b both below c, d
    return Poset.from_covers(["a", "b", "c", "d"],
                             [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])


@pytest.fixture
def two_chains():
    return Poset.from_covers(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])


@pytest.fixture
def wide_diamond():
    # three incomparable middles between bottom and top
    return Poset.from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])
