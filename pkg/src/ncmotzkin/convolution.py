"""Truncated distributions and the homogeneous decomposition of the free
additive convolution.

A Distribution is a total moment table on words over a finite alphabet up
to a fixed order. The convolution part boxplus_w of a pair of
distributions is indexed by a reduced Motzkin word w and admits three
equivalent evaluations: the replica-sum definition, the sum over labeled
monotone partitions, and the nested-cumulant sum. Summing over all w of
length n yields the free convolution moment; the constant words alone
yield the Boolean convolution.
"""

from fractions import Fraction
from functools import lru_cache

from .cumulants import (Poly, ZERO, ONE, m_sym, moment_to_free,
                        moment_to_boolean, beta_sym, _restrict, _prod, _sum)
from . import adapted as ad
from . import partitions as sp
from . import replicas as rp
from . import words as wd


class Distribution:
    """Moment table on words over a finite alphabet, truncated at a fixed
    order; the empty word has moment 1."""

    def __init__(self, alphabet, order, moments):
        self.alphabet = tuple(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError('alphabet letters must be distinct')
        if order < 0:
            raise ValueError('order must be >= 0')
        self.order = order
        self.moments = {}
        for word, val in moments.items():
            word = self._word(word)
            self.moments[word] = Fraction(val)
        for n in range(1, order + 1):
            for word in _all_words(self.alphabet, n):
                if word not in self.moments:
                    raise ValueError(f'missing moment for {"".join(word)}')

    def _word(self, word):
        if isinstance(word, str):
            word = tuple(word)
        else:
            word = tuple(word)
        for v in word:
            if v not in self.alphabet:
                raise ValueError(f'unknown variable {v!r}')
        if len(word) > self.order:
            raise ValueError(
                f'word length {len(word)} exceeds order {self.order}')
        return word

    def moment(self, word):
        word = self._word(word)
        if not word:
            return Fraction(1)
        return self.moments[word]

    @classmethod
    def from_json(cls, data):
        return cls(data['alphabet'], data['order'],
                   {tuple(k): Fraction(v)
                    for k, v in data['moments'].items()})

    def to_json(self):
        return {
            'alphabet': list(self.alphabet),
            'order': self.order,
            'moments': {''.join(k): str(v)
                        for k, v in sorted(self.moments.items())},
        }


def _all_words(alphabet, n):
    if n == 0:
        return [()]
    return [w + (a,) for w in _all_words(alphabet, n - 1) for a in alphabet]


def univariate_distribution(moment_seq, var='x'):
    """Distribution of a single variable given its moment sequence
    (m_1, m_2, ...)."""
    order = len(moment_seq)
    return Distribution(
        (var,), order,
        {(var,) * (i + 1): m for i, m in enumerate(moment_seq)})


def evaluate(poly, mu1, mu2):
    """Substitute the moments of mu1 and mu2 for the label-1 and label-2
    moment symbols of a polynomial."""
    mus = {1: mu1, 2: mu2}
    total = Fraction(0)
    for mono, coeff in poly.terms.items():
        val = Fraction(coeff)
        for kind, label, args in mono:
            if kind != 'm':
                raise ValueError(f'cannot evaluate symbol kind {kind!r}')
            val *= mus[label].moment(args)
        total += val
    return total


def _check_pair(mu1, mu2, word):
    if mu1.alphabet != mu2.alphabet:
        raise ValueError('distributions must share an alphabet')
    n = len(word)
    if n > mu1.order or n > mu2.order:
        raise ValueError(f'word length {n} exceeds distribution order')


@lru_cache(maxsize=None)
def _free_cumulant_label(label, args):
    return moment_to_free(label, args)


def free_product_sym(labeled_word):
    """Free product moment as a polynomial in the marginal moment symbols:
    sum over noncrossing partitions with label-constant blocks of products
    of marginal free cumulants."""
    word = [(str(v), l) for v, l in labeled_word]
    n = len(word)
    if n == 0:
        return ONE
    names = tuple(v for v, _l in word)
    labels = tuple(l for _v, l in word)
    out = ZERO
    for pi in sp.noncrossing_partitions(n):
        if not all(len({labels[p - 1] for p in b}) == 1 for b in pi):
            continue
        out = out + _prod(
            _free_cumulant_label(labels[b[0] - 1], _restrict(names, b))
            for b in pi)
    return out


def boolean_product_sym(labeled_word):
    """Boolean product moment: sum over interval partitions with
    label-constant blocks of products of marginal Boolean cumulants."""
    word = [(str(v), l) for v, l in labeled_word]
    n = len(word)
    if n == 0:
        return ONE
    names = tuple(v for v, _l in word)
    labels = tuple(l for _v, l in word)
    out = ZERO
    for pi in sp.interval_partitions(n):
        if not all(len({labels[p - 1] for p in b}) == 1 for b in pi):
            continue
        out = out + _prod(
            moment_to_boolean(labels[b[0] - 1], _restrict(names, b))
            for b in pi)
    return out


def free_product_moment(mu1, mu2, labeled_word):
    """Moment of the free product functional on a word of labeled
    variables (label 1 from mu1, label 2 from mu2)."""
    _check_pair(mu1, mu2, labeled_word)
    return evaluate(free_product_sym(labeled_word), mu1, mu2)


def boolean_product_moment(mu1, mu2, labeled_word):
    _check_pair(mu1, mu2, labeled_word)
    return evaluate(boolean_product_sym(labeled_word), mu1, mu2)


def _labelings(n):
    out = []
    for mask in range(1 << n):
        out.append(tuple(2 if mask >> i & 1 else 1 for i in range(n)))
    return out


def boxplus_w_sym(w, variables, route='replica'):
    """Homogeneous convolution part indexed by w, as a polynomial in the
    marginal moment symbols. Routes: 'replica' sums zeta(E(.)) of replica
    words over all labelings; 'monotone' sums partitioned Boolean
    cumulants over labeled monotone partitions; 'nested' sums
    zeta(K_pi[...]) over adapted partitions and block-constant
    labelings."""
    w = tuple(w)
    variables = tuple(str(v) for v in variables)
    n = len(w)
    if len(variables) != n:
        raise ValueError('word/monomial length mismatch')
    if n == 0:
        return ONE
    if route == 'replica':
        out = ZERO
        for ell in _labelings(n):
            x = rp.replica_word(variables, ell, w)
            out = out + rp.zeta_E(x)
        return out
    if route == 'monotone':
        out = ZERO
        for pi in ad.enumerate_adapted(w, 'monotone'):
            for ell in ad.labelings_of(pi)['L0']:
                out = out + rp.beta_hat_pi(pi, ell, variables)
        return out
    if route == 'nested':
        out = ZERO
        for pi in ad.enumerate_adapted(w, 'all'):
            for ell in ad.labelings_of(pi)['L']:
                args = [rp.replica(v, l, j)
                        for v, l, j in zip(variables, ell, w)]
                out = out + rp.K_pi_rep(w, pi, args).zeta()
        return out
    raise ValueError(f'unknown route {route!r}')


def boxplus_w_beta_terms(w, variables):
    """The monotone-partition formula for boxplus_w kept in Boolean
    cumulant symbols: list of (partition, labeling, product) terms."""
    w = tuple(w)
    variables = tuple(str(v) for v in variables)
    out = []
    for pi in ad.enumerate_adapted(w, 'monotone'):
        for ell in ad.labelings_of(pi)['L0']:
            val = _prod(beta_sym(ell[b[0] - 1], _restrict(variables, b))
                        for b in pi)
            out.append((pi, ell, val))
    return out


def boxplus_w(mu1, mu2, monomial, w, route='monotone'):
    """Value of the w-indexed convolution part on a monomial (a word over
    the common alphabet)."""
    _check_pair(mu1, mu2, monomial)
    w = tuple(w)
    monomial = tuple(monomial)
    if len(monomial) != len(w):
        raise ValueError('word/monomial length mismatch')
    if not wd.is_reduced(w) and w:
        raise ValueError(f'{w} is not a reduced Motzkin word')
    return evaluate(boxplus_w_sym(w, monomial, route), mu1, mu2)


def boxplus_total_sym(variables, route='monotone'):
    variables = tuple(variables)
    n = len(variables)
    if n == 0:
        return ONE
    return _sum(boxplus_w_sym(w, variables, route)
                for w in wd.enumerate_words(n))


def boxplus_total(mu1, mu2, monomial, route='monotone'):
    """Free convolution moment: the sum of boxplus_w over all reduced
    words of the monomial's length."""
    _check_pair(mu1, mu2, monomial)
    return evaluate(boxplus_total_sym(tuple(monomial), route), mu1, mu2)


def uplus_total(mu1, mu2, monomial):
    """Boolean convolution moment: the boxplus_w parts of constant
    words."""
    _check_pair(mu1, mu2, monomial)
    monomial = tuple(monomial)
    if not monomial:
        return Fraction(1)
    return evaluate(boxplus_w_sym((1,) * len(monomial), monomial), mu1, mu2)


def delta_sym(variables):
    """Difference between the free and Boolean convolution moments: the
    boxplus_w parts of non-constant words."""
    variables = tuple(variables)
    n = len(variables)
    if n == 0:
        return ZERO
    return _sum(boxplus_w_sym(w, variables, 'monotone')
                for w in wd.enumerate_words(n) if w != (1,) * n)


def delta(mu1, mu2, monomial):
    _check_pair(mu1, mu2, monomial)
    return evaluate(delta_sym(tuple(monomial)), mu1, mu2)


def decompose(mu1, mu2, monomial, route='monotone'):
    """Map w -> boxplus_w value over all reduced words of the monomial's
    length."""
    _check_pair(mu1, mu2, monomial)
    monomial = tuple(monomial)
    return {w: boxplus_w(mu1, mu2, monomial, w, route)
            for w in wd.enumerate_words(len(monomial))}
