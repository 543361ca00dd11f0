import pytest
from hypothesis import given, settings, strategies as st

from ncmotzkin import partitions as sp

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_class_counts():
    for n in range(1, 8):
        assert len(sp.noncrossing_partitions(n)) == CATALAN[n]
        assert len(sp.interval_partitions(n)) == 2 ** (n - 1)
        assert len(sp.irreducible_partitions(n)) == CATALAN[n - 1]


def test_normalize_validates():
    assert sp.normalize([(3, 1), (2,)]) == ((1, 3), (2,))
    with pytest.raises(ValueError):
        sp.normalize([(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        sp.normalize([(1,), (3,)])


def test_is_noncrossing():
    assert sp.is_noncrossing(((1, 3), (2,)))
    assert not sp.is_noncrossing(((1, 3), (2, 4)))


def test_interval_and_irreducible_predicates():
    assert sp.is_interval(((1, 2), (3,)))
    assert not sp.is_interval(((1, 3), (2,)))
    assert sp.is_irreducible(((1, 4), (2, 3)))
    assert not sp.is_irreducible(((1,), (2, 3, 4)))


def test_nesting_depths():
    nest = sp.nesting(((1, 4), (2, 3)))
    assert nest[(1, 4)] == (None, 1)
    assert nest[(2, 3)] == ((1, 4), 2)


def test_refines():
    fine = ((1,), (2,), (3,))
    assert sp.refines(fine, ((1, 2, 3),))
    assert not sp.refines(((1, 2), (3,)), ((1, 3), (2,)))


nc_pairs = st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.sampled_from(sp.noncrossing_partitions(n)),
                        st.sampled_from(sp.noncrossing_partitions(n))))


@settings(max_examples=200)
@given(nc_pairs)
def test_join_is_least_upper_bound(pair):
    pi, rho = pair
    n = sp.ground_size(pi)
    j = sp.join_nc(pi, rho)
    assert sp.refines(pi, j) and sp.refines(rho, j)
    for v in sp.noncrossing_partitions(n):
        if sp.refines(pi, v) and sp.refines(rho, v):
            assert sp.refines(j, v)


@given(nc_pairs)
def test_join_is_commutative(pair):
    pi, rho = pair
    assert sp.join_nc(pi, rho) == sp.join_nc(rho, pi)


def test_format_partition():
    assert sp.format_partition(((1, 3), (2,))) == '{{1,3},{2}}'
