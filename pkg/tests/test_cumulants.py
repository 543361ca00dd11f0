import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from ncmotzkin import cumulants as cm
from ncmotzkin import words as wd
from ncmotzkin.cumulants import Poly, ZERO, ONE, beta_sym, m_sym, UNIT
from ncmotzkin.acceptance import EX102_PIECES, FIG4_PIECES, _beta_pi, _catalan


def test_poly_arithmetic():
    x = Poly.symbol('m', 0, ('x',))
    y = Poly.symbol('m', 0, ('y',))
    assert (x + y) - y == x
    assert x * y == y * x
    assert (x - x).is_zero()
    assert 2 * x == x + x
    assert Poly.const(Fraction(1, 2)) * 2 == ONE


def test_unit_rules():
    assert m_sym(0, (UNIT, UNIT)) == ONE
    assert m_sym(0, ('x', UNIT)) == m_sym(0, ('x',))
    assert beta_sym(0, (UNIT,)) == ONE
    assert beta_sym(0, ('x', UNIT, 'y')) == beta_sym(0, ('x', 'y'))
    assert beta_sym(0, (UNIT, 'x')).is_zero()
    assert beta_sym(0, ('x', UNIT)).is_zero()


def test_order_four_free_cumulant_in_moments():
    m = {k: m_sym(0, ('x',) * k) for k in range(1, 5)}
    expected = (m[4] - 4 * m[3] * m[1] - 2 * m[2] * m[2]
                + 10 * m[2] * m[1] * m[1]
                - 5 * m[1] * m[1] * m[1] * m[1])
    assert cm.transform('m', 'r', 0, ('x',) * 4) == expected


def test_order_four_free_cumulant_in_boolean():
    b = {k: beta_sym(0, ('x',) * k) for k in range(1, 5)}
    expected = b[4] - 2 * b[3] * b[1] - b[2] * b[2] + b[2] * b[1] * b[1]
    assert cm.transform('beta', 'r', 0, ('x',) * 4) == expected


def test_order_four_multivariate_expansion():
    a = ('a1', 'a2', 'a3', 'a4')

    def bb(*idx):
        return beta_sym(0, tuple(f'a{i}' for i in idx))

    expected = (bb(1, 2, 3, 4) - bb(1, 2, 4) * bb(3) - bb(1, 3, 4) * bb(2)
                - bb(1, 4) * bb(2, 3) + bb(1, 4) * bb(2) * bb(3))
    assert cm.transform('beta', 'r', 0, a) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6),
       st.sampled_from([('m', 'r'), ('m', 'beta'), ('r', 'beta'),
                        ('r', 'm'), ('beta', 'm'), ('beta', 'r')]),
       st.booleans())
def test_transform_round_trip(n, pair, multivariate):
    src, dst = pair
    args = tuple(f'a{i}' for i in range(n)) if multivariate else ('x',) * n
    fwd = cm.transform(src, dst, 0, args)
    back = cm.expand_symbols(
        fwd, lambda s: cm.transform(dst, s[0], s[1], s[2]))
    assert back == Poly.symbol(dst, 0, args)


def test_transform_rejects_unknown():
    with pytest.raises(ValueError):
        cm.transform('m', 'm', 0, ('x',))
    with pytest.raises(ValueError):
        cm.transform('m', 'r', 0, ())


def test_word_pieces_order_four():
    for w, pieces in EX102_PIECES.items():
        expected = ZERO
        for sign, pi in pieces:
            expected = expected + Fraction(sign) * _beta_pi(pi, ('x',) * 4)
        assert cm.motzkin_k(w, [('x', 0)] * 4) == expected


def test_word_pieces_order_five():
    for w, pieces in FIG4_PIECES.items():
        expected = ZERO
        for sign, pi in pieces:
            expected = expected + Fraction(sign) * _beta_pi(pi, ('x',) * 5)
        assert cm.motzkin_k(w, [('x', 0)] * 5) == expected


def test_pieces_sum_to_free_cumulant():
    for n in range(1, 7):
        total = ZERO
        for w in wd.enumerate_words(n):
            total = total + cm.motzkin_k(w, [('x', 0)] * n)
        assert total == cm.free_in_boolean(0, ('x',) * n)


def test_piece_term_counts():
    for n in range(1, 8):
        terms = sum(cm.motzkin_k_terms(w) for w in wd.enumerate_words(n))
        assert terms == _catalan(n - 1)


def test_mixed_labels_vanish():
    assert cm.motzkin_k((1, 2, 1), [('x', 1), ('y', 2), ('x', 1)]).is_zero()


def test_unit_argument_sums_vanish():
    for n in range(2, 5):
        for k in range(n):
            args = [('x', 0)] * n
            args[k] = (UNIT, 0)
            total = ZERO
            for w in wd.enumerate_words(n):
                total = total + cm.motzkin_k(w, args)
            assert total.is_zero()


def test_b_inversion_renderings():
    got = sorted((s, t) for _pi, s, t in cm.B_inversion((1, 2, 1, 1)))
    assert got == [(-1, 'E(a1a2a3)E(a4)'), (1, 'E(a1a2a3a4)')]
    got = [(s, t) for _pi, s, t in cm.B_inversion((1, 2, 2, 1))]
    assert got == [(1, 'E(a1a2a3a4)')]


def test_nested_closed_form_renderings():
    got = sorted((s, t) for _pi, s, t in cm.K_closed_form((1, 2, 2, 1)))
    assert got == sorted([
        (1, 'B_1221(a1,a2,a3,a4)'),
        (-1, 'B_121(a1,a2B_2(a3),a4)'),
        (-1, 'B_121(a1B_2(a2),a3,a4)'),
        (1, 'B_11(a1B_2(a2)B_2(a3),a4)'),
        (-1, 'B_11(a1B_22(a2,a3),a4)'),
    ])
    got = sorted((s, t) for _pi, s, t in cm.K_closed_form((1, 2, 1)))
    assert got == sorted([(1, 'B_121(a1,a2,a3)'),
                          (-1, 'B_11(a1B_2(a2),a3)')])


def test_refinement_coefficients():
    assert cm.refinement_coefficient(
        [(1, 2, 4, 5), (3,)], [(1, 5), (2, 4), (3,)],
        (1, 2, 3, 2, 1)) == -1
    assert cm.refinement_coefficient(
        [(1, 2, 5), (3,), (4,)], [(1, 5), (2,), (3,), (4,)],
        (1, 2, 2, 2, 1)) == -1
    # non-refining pairs get coefficient zero
    assert cm.refinement_coefficient(
        [(1, 2, 3)], [(1, 2), (3,)], (1, 1, 1)) == 0


def test_format_poly_deterministic():
    p = beta_sym(0, ('x', 'y')) - 2 * beta_sym(0, ('x',))
    assert cm.format_poly(p) == '-2*beta(x) + beta(x,y)'
