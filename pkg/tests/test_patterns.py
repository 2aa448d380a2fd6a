import pytest

import oracles
from canonvdw.patterns import (
    PatternFamily,
    PatternInstance,
    XDomain,
    count_instances,
    enumerate_instances,
    y_bound,
)
from canonvdw.polynomial import IntPolynomial

FAMILIES = {
    "y;2*y": [[0, 1], [0, 2]],
    "y;2*y;3*y": [[0, 1], [0, 2], [0, 3]],
    "y;2*y;y^2": [[0, 1], [0, 2], [0, 0, 1]],
    "y;y^2": [[0, 1], [0, 0, 1]],
    "-y;y^2": [[0, -1], [0, 0, 1]],
    "y^2;y^2+y": [[0, 0, 1], [0, 1, 1]],
    "y": [[0, 1]],
    "y^2": [[0, 0, 1]],
    "-y": [[0, -1]],
}
DOMAINS = ["any", "nonneg", "pos"]


def fam(text):
    return PatternFamily.parse(text)


def test_family_validation():
    with pytest.raises(ValueError):
        PatternFamily([IntPolynomial([1, 1])])  # p(0) != 0
    with pytest.raises(ValueError):
        fam("y; y")
    with pytest.raises(ValueError):
        PatternFamily([])
    assert fam("y;2*y;y^2").D == 2
    assert fam("y").D is None


def test_y_bound_examples():
    # x in Z: instances of {y, 2y} are all pairs a < b, so y = b - a reaches N - 1
    assert y_bound(fam("y;2*y"), 4, XDomain.ANY) == 3
    assert y_bound(fam("y;2*y"), 1, XDomain.ANY) == 0
    assert y_bound(fam("y^2"), 100, XDomain.POS) == 9


def test_enumerate_examples():
    got = list(enumerate_instances(fam("y;2*y"), 4, XDomain.POS))
    assert got == [PatternInstance(1, 1, (2, 3)), PatternInstance(2, 1, (3, 4))]
    got = list(enumerate_instances(fam("y;2*y"), 4, XDomain.ANY))
    assert sorted(i.values for i in got) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert PatternInstance(0, 1, (1, 2)) in got


def test_degenerate_flag_at_coincidence():
    at_one = [i for i in enumerate_instances(fam("y;y^2"), 10) if i.y == 1]
    assert at_one and all(i.degenerate and i.values[0] == i.values[1] for i in at_one)
    assert not any(i.degenerate for i in enumerate_instances(fam("y;y^2"), 10) if i.y > 1)


def test_count_examples():
    assert count_instances(fam("y;2*y"), 4, XDomain.ANY) == 6
    assert count_instances(fam("y;2*y"), 1, XDomain.ANY) == 0
    assert count_instances(fam("y"), 10, XDomain.ANY) == 45


@pytest.mark.parametrize("name", FAMILIES)
@pytest.mark.parametrize("dom", DOMAINS)
def test_enumeration_matches_oracle(name, dom):
    f = fam(name)
    for N in list(range(1, 31)) + [57]:
        got = [(i.x, i.y, i.values) for i in enumerate_instances(f, N, XDomain.parse(dom))]
        expect = oracles.instances(FAMILIES[name], N, dom, ymax=N + 5)
        assert got == expect, (name, dom, N)
        assert count_instances(f, N, XDomain.parse(dom)) == len(expect)


@pytest.mark.parametrize("name", FAMILIES)
def test_count_equals_enumeration_up_to_200(name):
    f = fam(name)
    for N in (100, 150, 200):
        items = list(enumerate_instances(f, N))
        assert count_instances(f, N) == len(items)
        n = y_bound(f, N)
        assert all(1 <= v <= N for i in items for v in i.values)
        assert all(1 <= i.y <= n for i in items)
        assert not items or max(i.y for i in items) == n


@pytest.mark.parametrize("name", FAMILIES)
@pytest.mark.parametrize("dom", DOMAINS)
def test_count_monotone_in_N(name, dom):
    counts = [count_instances(fam(name), N, XDomain.parse(dom)) for N in range(1, 120)]
    assert all(a <= b for a, b in zip(counts, counts[1:]))


@pytest.mark.parametrize("name", ["y;2*y", "y;2*y;3*y", "y;2*y;y^2", "y;y^2"])
def test_count_is_order_N_times_n(name):
    # band pinned from runs at N = 50 .. 3200: {y,2y}-type give 0.5, degree-2 give ~0.66-0.68
    f = fam(name)
    for N in (50, 100, 200, 400, 800, 1600, 3200):
        ratio = count_instances(f, N) / (N * y_bound(f, N))
        assert 0.45 <= ratio <= 0.70, (name, N, ratio)
