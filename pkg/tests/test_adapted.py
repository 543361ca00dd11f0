import pytest
from hypothesis import given, settings, strategies as st

from ncmotzkin import adapted as ad
from ncmotzkin import partitions as sp
from ncmotzkin import words as wd
from ncmotzkin.acceptance import (FIG1_WORD, FIG1_VERTICES, FIG1_EDGES,
                                  FIG3_COUNTS, FIG3_12221, EX34_MONOTONE)


def test_five_letter_lattice_vertices():
    assert sorted(ad.enumerate_adapted(FIG1_WORD, 'all')) == \
        sorted(FIG1_VERTICES)


def test_five_letter_lattice_covers():
    assert sorted(ad.hasse_adapted(FIG1_WORD)) == sorted(FIG1_EDGES)


def test_five_letter_lattice_split():
    verts = ad.enumerate_adapted(FIG1_WORD, 'all')
    irr = [v for v in verts if sp.is_irreducible(v)]
    assert len(irr) == 5 and len(verts) == 10
    assert all((1,) in v for v in verts if not sp.is_irreducible(v))


def test_irreducible_counts_table():
    for w, count in FIG3_COUNTS.items():
        assert len(ad.enumerate_adapted(w, 'irr')) == count


def test_irreducible_family_of_12221():
    assert ad.enumerate_adapted((1, 2, 2, 2, 1), 'irr') == FIG3_12221


def test_monotone_family_of_12221():
    assert ad.enumerate_adapted((1, 2, 2, 2, 1), 'monotone_irr') == \
        EX34_MONOTONE


def test_zero_hat_examples():
    assert ad.zero_hat((1, 1, 2, 2, 1)) == \
        ((1,), (2, 5), (3,), (4,))
    assert ad.zero_hat((1, 2, 2, 2, 1)) == \
        ((1, 5), (2,), (3,), (4,))
    assert ad.zero_hat((1, 1, 1)) == ((1,), (2,), (3,))


def test_zero_hat_is_least():
    for n in range(1, 6):
        for w in wd.enumerate_words(n):
            verts = ad.enumerate_adapted(w, 'all')
            bot = ad.zero_hat(w)
            assert bot in verts
            assert all(sp.refines(bot, v) for v in verts)


def test_closure_equals_filter():
    for n in range(1, 7):
        for w in wd.enumerate_words(n):
            assert ad.coarsening_closure(w) == ad.enumerate_adapted(w, 'all')


words_upto = st.integers(1, 5).flatmap(
    lambda n: st.sampled_from(wd.enumerate_words(n)))


@settings(max_examples=60, deadline=None)
@given(words_upto)
def test_join_is_least_upper_bound(w):
    verts = ad.enumerate_adapted(w, 'all')
    for a in verts:
        for b in verts:
            j = ad.join_adapted(a, w, b, w)
            uppers = [v for v in verts
                      if sp.refines(a, v) and sp.refines(b, v)]
            assert j in uppers
            assert all(sp.refines(j, v) for v in uppers)


def test_join_requires_common_word():
    with pytest.raises(ValueError):
        ad.join_adapted(((1,),), (1,), ((1,),), (2,))


def test_interval_splits():
    assert ad.interval_splits((1, 2, 2, 1)) == [((1, 2, 3, 4),)]
    assert ad.interval_splits((1, 2, 1, 1)) == \
        [((1, 2, 3), (4,)), ((1, 2, 3, 4),)]


def test_eta_bijection():
    for n in range(1, 7):
        seen = set()
        for pi0 in sp.irreducible_partitions(n):
            w, pi = ad.eta(pi0)
            assert wd.is_reduced(w)
            assert ad.is_monotone(pi, w) and sp.is_irreducible(pi)
            seen.add((w, pi))
        total = sum(len(ad.enumerate_adapted(w, 'monotone_irr'))
                    for w in wd.enumerate_words(n))
        assert len(seen) == total == len(sp.irreducible_partitions(n))


def test_labeled_classes():
    out = ad.labeled_classes((1, 2, 2, 2, 1), (1, 2, 1, 2, 1))
    assert all(ad.block_labels_constant(p, (1, 2, 1, 2, 1))
               for p in out['nc'])
    # the monotone class with alternating labels over 12221 is empty
    assert out['monotone_irr'] == []


def test_labelings_of():
    out = ad.labelings_of(((1, 4), (2, 3)))
    assert len(out['L']) == 4
    assert out['L0'] == [(1, 2, 2, 1), (2, 1, 1, 2)]


def test_poset_vertices():
    verts = ad.poset_ncn(3)
    assert len(verts) == sum(
        len(ad.enumerate_adapted(w, 'all')) for w in wd.enumerate_words(3))
    assert ad.poset_leq(verts[0], verts[0])
