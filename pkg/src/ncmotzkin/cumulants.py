"""Exact symbolic cumulant calculus.

Polynomials are linear combinations of monomials in formal symbols with
Fraction coefficients. A symbol is a tuple (kind, label, args) with kind
in {'m', 'beta', 'r'}, an integer label (0 = unlabeled) and a tuple of
variable-id strings. The distinguished variable '1' is the algebra unit.
"""

from fractions import Fraction
from functools import lru_cache

from . import partitions as sp
from . import adapted as ad
from . import words as wd

UNIT = '1'


class Poly:
    """Multivariate polynomial in commuting formal symbols."""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    mono = tuple(sorted(mono))
                    self.terms[mono] = self.terms.get(mono, 0) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def const(cls, c):
        return cls({(): Fraction(c)})

    @classmethod
    def symbol(cls, kind, label, args):
        return cls({((kind, label, tuple(args)),): Fraction(1)})

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return Poly(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return Poly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return 'Poly(' + format_poly(self) + ')'


ZERO = Poly()
ONE = Poly.const(1)


def format_symbol(sym):
    kind, label, args = sym
    tag = f'_{label}' if label else ''
    return f'{kind}{tag}({",".join(args)})'


def format_poly(p):
    if p.is_zero():
        return '0'
    parts = []
    for mono in sorted(p.terms):
        c = p.terms[mono]
        body = '*'.join(format_symbol(s) for s in mono) or '1'
        coeff = '' if (c == 1 and mono) else f'{c}*' if mono else str(c)
        parts.append(f'{coeff}{body}')
    return ' + '.join(parts).replace('+ -', '- ')


def m_sym(label, args):
    """Moment symbol; unit letters are absorbed (m of all units is 1)."""
    args = tuple(a for a in args if a != UNIT)
    if not args:
        return ONE
    return Poly.symbol('m', label, args)


def beta_sym(label, args):
    """Boolean cumulant symbol with the unit rule: interior units are
    deleted, a boundary unit of a cumulant of arity >= 2 kills it, and
    the first-order cumulant of the unit is 1."""
    args = tuple(args)
    inner = tuple(a for a in args[1:-1] if a != UNIT)
    args = args[:1] + inner + args[-1:] if len(args) > 1 else args
    if len(args) == 1:
        return ONE if args[0] == UNIT else Poly.symbol('beta', label, args)
    if UNIT in (args[0], args[-1]):
        return ZERO
    return Poly.symbol('beta', label, args)


def r_sym(label, args):
    args = tuple(args)
    if len(args) == 1 and args[0] == UNIT:
        return ONE
    return Poly.symbol('r', label, args)


def _restrict(args, block):
    return tuple(args[p - 1] for p in block)


def _prod(polys):
    out = ONE
    for p in polys:
        out = out * p
    return out


@lru_cache(maxsize=None)
def moment_to_free(label, args):
    """Free cumulant r(args) expanded in moment symbols."""
    n = len(args)
    out = m_sym(label, args)
    for pi in sp.noncrossing_partitions(n):
        if len(pi) == 1:
            continue
        out = out - _prod(moment_to_free(label, _restrict(args, b))
                          for b in pi)
    return out


@lru_cache(maxsize=None)
def moment_to_boolean(label, args):
    """Boolean cumulant beta(args) expanded in moment symbols."""
    n = len(args)
    out = m_sym(label, args)
    for pi in sp.interval_partitions(n):
        if len(pi) == 1:
            continue
        out = out - _prod(moment_to_boolean(label, _restrict(args, b))
                          for b in pi)
    return out


def free_to_moment(label, args):
    """Moment m(args) as a polynomial in free cumulant symbols."""
    return _sum(_prod(r_sym(label, _restrict(args, b)) for b in pi)
                for pi in sp.noncrossing_partitions(len(args)))


def boolean_to_moment(label, args):
    """Moment m(args) as a polynomial in Boolean cumulant symbols."""
    return _sum(_prod(beta_sym(label, _restrict(args, b)) for b in pi)
                for pi in sp.interval_partitions(len(args)))


def free_in_boolean(label, args):
    """r(args) as a signed sum of beta products over irreducible
    noncrossing partitions."""
    return _sum(Fraction((-1) ** (len(pi) - 1))
                * _prod(beta_sym(label, _restrict(args, b)) for b in pi)
                for pi in sp.irreducible_partitions(len(args)))


def boolean_in_free(label, args):
    """beta(args) as a sum of r products over irreducible noncrossing
    partitions."""
    return _sum(_prod(r_sym(label, _restrict(args, b)) for b in pi)
                for pi in sp.irreducible_partitions(len(args)))


def _sum(polys):
    out = ZERO
    for p in polys:
        out = out + p
    return out


def expand_symbols(poly, rule):
    """Replace every symbol by rule(symbol) -> Poly and re-expand."""
    out = ZERO
    for mono, c in poly.terms.items():
        out = out + Fraction(c) * _prod(rule(s) for s in mono)
    return out


def transform(src, dst, label, args):
    """Order-n transform between moment ('m'), free ('r') and Boolean
    ('beta') coordinates, as a symbolic polynomial."""
    table = {
        ('m', 'r'): moment_to_free,
        ('m', 'beta'): moment_to_boolean,
        ('r', 'm'): free_to_moment,
        ('beta', 'm'): boolean_to_moment,
        ('beta', 'r'): free_in_boolean,
        ('r', 'beta'): boolean_in_free,
    }
    if (src, dst) not in table:
        raise ValueError(f'no transform {src} -> {dst}')
    if not args:
        raise ValueError('empty argument list')
    return table[(src, dst)](label, tuple(args))


def univariate(n, var='x'):
    return (var,) * n


def motzkin_k(w, args):
    """Scalar Motzkin cumulant k_w. The arguments are (variable, label)
    pairs; the variable '1' is the unit. Vanishes unless all labels
    coincide; otherwise it is the signed sum of Boolean cumulant products
    over the monotone irreducible partitions of w."""
    w = tuple(w)
    args = [(str(v), l) for v, l in args]
    if len(args) != len(w):
        raise ValueError('argument/word length mismatch')
    labels = {l for _v, l in args}
    if len(labels) != 1:
        return ZERO
    label = labels.pop()
    names = tuple(v for v, _l in args)
    out = ZERO
    for pi in ad.enumerate_adapted(w, 'monotone_irr'):
        sign = Fraction((-1) ** (len(pi) - 1))
        out = out + sign * _prod(beta_sym(label, _restrict(names, b))
                                 for b in pi)
    return out


def motzkin_k_terms(w):
    """Number of monotone irreducible partitions of w (the number of
    beta_pi terms of k_w before cancellation)."""
    return len(ad.enumerate_adapted(tuple(w), 'monotone_irr'))


def free_decomposition(n, args=None):
    """Map w -> k_w over all reduced words of length n; the values sum to
    the free cumulant r_n expanded in Boolean cumulants."""
    if args is None:
        args = [('x', 0)] * n
    return {w: motzkin_k(w, args) for w in wd.enumerate_words(n)}


def K_closed_form(w):
    """Signed expansion of the Motzkin cumulant K_w over the irreducible
    adapted partitions of w: list of (partition, sign, rendering)."""
    w = tuple(w)
    out = []
    for pi in ad.enumerate_adapted(w, 'irr'):
        sign = (-1) ** (len(pi) - 1)
        out.append((pi, sign, render_nested(pi, w)))
    return out


def render_nested(pi, w, head='B'):
    """Render the nested cumulant of a partition: each inner block's
    cumulant value attaches to the right of the parent argument
    immediately preceding the block."""
    pi = sp.normalize(pi)
    w = tuple(w)
    nest = sp.nesting(pi)
    children = {b: [] for b in pi}
    for v, (outer, _d) in nest.items():
        if outer is not None:
            children[outer].append(v)
    for v in children:
        children[v].sort(key=lambda b: b[0])

    def render_block(b):
        sub = ''.join(str(x) for x in ad.block_subword(w, b))
        parts = []
        for p in b:
            piece = f'a{p}'
            for c in children[b]:
                if max(q for q in b if q < c[0]) == p:
                    piece += render_block(c)
            parts.append(piece)
        return f'{head}_{sub}(' + ','.join(parts) + ')'

    covering = [b for b in pi if nest[b][0] is None]
    return ''.join(render_block(b) for b in covering)


def refinement_coefficient(pi_prime, pi, w):
    """Coefficient of the nested B-term of pi in the B-expansion of the
    nested Motzkin cumulant K of pi_prime (both adapted to w): the
    product over blocks V of pi_prime of (-1)^(k_V - 1) where k_V is the
    number of pi-blocks inside V, provided each restriction of pi is an
    irreducible adapted partition of V's subword; otherwise 0."""
    pi_prime = sp.normalize(pi_prime)
    pi = sp.normalize(pi)
    w = tuple(w)
    if not sp.refines(pi, pi_prime):
        return 0
    coeff = 1
    for v in pi_prime:
        index = {p: i + 1 for i, p in enumerate(v)}
        inner = [tuple(index[p] for p in b) for b in pi if b[0] in index]
        if any(p not in index for b in pi if b[0] in index for p in b):
            return 0
        sub = ad.block_subword(w, v)
        if sp.normalize(inner) not in ad.enumerate_adapted(sub, 'irr'):
            return 0
        coeff *= (-1) ** (len(inner) - 1)
    return coeff


def B_inversion(w):
    """B_w as a signed sum of products of E-moments over the interval
    splits of w: list of (split, sign, rendering)."""
    w = tuple(w)
    out = []
    for pi in ad.interval_splits(w):
        sign = (-1) ** (len(pi) - 1)
        text = ''.join(
            'E(' + ''.join(f'a{p}' for p in b) + ')' for b in pi)
        out.append((pi, sign, text))
    return out
