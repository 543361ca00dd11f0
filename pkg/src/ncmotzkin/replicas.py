"""Symbolic simulator of the orthogonal replica space.

Elements live in the tensor product of two infinite strings of Boolean
extensions, one per label. Each string assigns to every color (site) a
word in algebra letters and the projection letters P (the projection of
that string) and C (its complement 1 - P); sites beyond the explicit
ones are all equal to a tail letter, either 1 or P. The functionals Phi
and Psi_j evaluate to polynomials in formal moment symbols; the
conditional expectation E takes values in the span of 1 and the
orthogonal projections p_1, p_2, ...
"""

from fractions import Fraction
from itertools import product as iproduct

from .cumulants import (Poly, ONE, ZERO, m_sym, moment_to_boolean)
from . import adapted as ad
from . import partitions as sp
from . import words as wd

TAIL_ONE = 0
TAIL_PROJ = 1


def _simp_site(tokens):
    """Normalize projection adjacency; None means the word is zero."""
    out = []
    for t in tokens:
        if out and t in ('P', 'C') and out[-1] in ('P', 'C'):
            if out[-1] == t:
                continue
            return None
        out.append(t)
    return tuple(out)


def _tail_site(tail):
    return () if tail == TAIL_ONE else ('P',)


def _canon_string(sites, tail):
    sites = list(sites)
    while sites and sites[-1] == _tail_site(tail):
        sites.pop()
    return (tuple(sites), tail)


def _site(string, j):
    sites, tail = string
    return sites[j - 1] if j <= len(sites) else _tail_site(tail)


def _mul_string(s, t):
    n = max(len(s[0]), len(t[0]))
    out = []
    for j in range(1, n + 1):
        site = _simp_site(_site(s, j) + _site(t, j))
        if site is None:
            return None
        out.append(site)
    return _canon_string(out, s[1] | t[1])


class Rep:
    """Finite linear combination of two-string tensor monomials with
    polynomial coefficients."""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if isinstance(c, (int, Fraction)):
                    c = Poly.const(c)
                if not c.is_zero():
                    cur = self.terms.get(key)
                    tot = c if cur is None else cur + c
                    if tot.is_zero():
                        self.terms.pop(key, None)
                    else:
                        self.terms[key] = tot

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return Rep(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            if isinstance(other, (int, Fraction)):
                other = Poly.const(other)
            return Rep({k: c * other for k, c in self.terms.items()})
        out = {}
        for (a1, a2), c in self.terms.items():
            for (b1, b2), d in other.terms.items():
                s1 = _mul_string(a1, b1)
                if s1 is None:
                    continue
                s2 = _mul_string(a2, b2)
                if s2 is None:
                    continue
                key = (s1, s2)
                cd = c * d
                out[key] = out[key] + cd if key in out else cd
        return Rep(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        return self.terms == other.terms

    def is_zero(self):
        return not self.terms


REP_ZERO = Rep()
REP_ONE = Rep({(((), TAIL_ONE), ((), TAIL_ONE)): 1})


def _string_of(sites, tail):
    return _canon_string([_simp_site(s) for s in sites], tail)


def replica(var, label, j):
    """Orthogonal replica a(j) of a variable with the given label."""
    if label not in (1, 2) or j < 1:
        raise ValueError('label must be 1 or 2 and color >= 1')
    own = [()] * (j - 1) + [(('v', str(var)),)]
    other = [()] * (j - 2) + [('C',)] if j >= 2 else []
    s_own = _string_of(own, TAIL_ONE)
    s_other = _string_of(other, TAIL_PROJ)
    if label == 1:
        return Rep({(s_own, s_other): 1})
    return Rep({(s_other, s_own): 1})


def e_label(i, n):
    """The projection e_{i,n}: all ones on string i, the tail projection
    from color n on on the other string."""
    if i not in (1, 2) or n < 1:
        raise ValueError('bad label or index')
    trivial = ((), TAIL_ONE)
    proj = _string_of([()] * (n - 1), TAIL_PROJ)
    return Rep({(trivial, proj) if i == 1 else (proj, trivial): 1})


def e_proj(n):
    if n == 0:
        return REP_ZERO
    return e_label(1, n) * e_label(2, n)


def p_proj(n):
    """Orthogonal projection of color n: p_n = e_n - e_{n-1}."""
    return e_proj(n) - e_proj(n - 1)


def unit_rep(j):
    """Replica of the algebra unit at color j."""
    return p_proj(j)


def _site_branches(tokens):
    """Expand every C into 1 (sign +) or P (sign -): list of
    (sign, simplified word); annihilated branches are dropped."""
    spots = [i for i, t in enumerate(tokens) if t == 'C']
    if not spots:
        return [(1, tokens)]
    out = []
    for choice in iproduct((0, 1), repeat=len(spots)):
        sign = 1
        word = list(tokens)
        for i, c in zip(spots, choice):
            if c:
                sign = -sign
                word[i] = 'P'
            else:
                word[i] = None
        site = _simp_site(t for t in word if t is not None)
        if site is not None:
            out.append((sign, site))
    return out


def _runs(tokens):
    """Maximal runs of algebra letters between projection letters."""
    runs = []
    cur = []
    for t in tokens:
        if t == 'P':
            if cur:
                runs.append(tuple(cur))
                cur = []
        else:
            cur.append(t[1])
    if cur:
        runs.append(tuple(cur))
    return runs


def _phi_site(tokens, label):
    out = ZERO
    for sign, word in _site_branches(tokens):
        val = ONE
        for run in _runs(word):
            val = val * m_sym(label, run)
        out = out + Fraction(sign) * val
    return out


def _phi_hat_site(tokens, label):
    # vanishes on words containing the projection; C acts as 1
    if 'P' in tokens:
        return ZERO
    vars_ = tuple(t[1] for t in tokens if t != 'C')
    return m_sym(label, vars_) if vars_ else ONE


def phi(x, cutoff=0):
    """The product functional: moment evaluation site by site. With a
    cutoff j-1 > 0 the first j-1 sites are evaluated by the functional
    vanishing on projections, which yields Psi_j."""
    total = ZERO
    for (s1, s2), coeff in x.terms.items():
        val = coeff
        for label, string in ((1, s1), (2, s2)):
            sites, _tail = string
            for j, tokens in enumerate(sites, start=1):
                f = _phi_hat_site if j <= cutoff else _phi_site
                val = val * f(tokens, label)
                if val.is_zero():
                    break
            if val.is_zero():
                break
        total = total + val
    return total


def psi(j, x):
    """Psi_j; Psi_1 coincides with phi."""
    if j < 1:
        raise ValueError('color must be >= 1')
    return phi(x, cutoff=j - 1)


class BElement:
    """Element of the span of 1 and the projections p_j with polynomial
    coefficients; p_i p_j = delta_ij p_i."""

    __slots__ = ('comp',)

    def __init__(self, comp=None):
        self.comp = {}
        if comp:
            for j, c in comp.items():
                if isinstance(c, (int, Fraction)):
                    c = Poly.const(c)
                if not c.is_zero():
                    cur = self.comp.get(j)
                    tot = c if cur is None else cur + c
                    if tot.is_zero():
                        self.comp.pop(j, None)
                    else:
                        self.comp[j] = tot

    def __add__(self, other):
        out = dict(self.comp)
        for j, c in other.comp.items():
            out[j] = out[j] + c if j in out else c
        return BElement(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            if isinstance(other, (int, Fraction)):
                other = Poly.const(other)
            return BElement({j: c * other for j, c in self.comp.items()})
        c0 = self.comp.get(0, ZERO)
        d0 = other.comp.get(0, ZERO)
        out = {0: c0 * d0}
        for j in set(self.comp) | set(other.comp):
            if j == 0:
                continue
            cj = self.comp.get(j, ZERO)
            dj = other.comp.get(j, ZERO)
            out[j] = c0 * dj + cj * d0 + cj * dj
        return BElement(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        return self.comp == other.comp

    def is_zero(self):
        return not self.comp

    def zeta(self):
        """The functional with zeta(1) = 1, zeta(p_k) = delta_{k,1}."""
        return self.comp.get(0, ZERO) + self.comp.get(1, ZERO)

    def embed(self):
        """The element as a member of the replica algebra."""
        out = REP_ZERO
        for j, c in self.comp.items():
            base = REP_ONE if j == 0 else p_proj(j)
            out = out + base * c
        return out

    def __repr__(self):
        from .cumulants import format_poly
        if not self.comp:
            return 'BElement(0)'
        bits = []
        for j in sorted(self.comp):
            name = '1' if j == 0 else f'p{j}'
            bits.append(f'({format_poly(self.comp[j])})*{name}')
        return ' + '.join(bits)


B_ZERO = BElement()


def _branch_strings(string):
    """All C-expansions of one string: list of (sign, branch string)."""
    sites, tail = string
    per_site = [_site_branches(t) for t in sites]
    out = []
    for combo in iproduct(*per_site):
        sign = 1
        branch = []
        for s, word in combo:
            sign *= s
            branch.append(word)
        out.append((sign, _canon_string(branch, tail)))
    return out


def _strip(string):
    """Split one projection-and-letter string into boundary projection
    flags and the interior core: returns (e colors, f colors, core)."""
    sites, tail = string
    eflags = set()
    fflags = set()
    core = []
    for j, tokens in enumerate(sites, start=1):
        if tokens == ('P',):
            eflags.add(j)
            fflags.add(j)
            core.append(())
            continue
        t = tokens
        if t and t[0] == 'P':
            eflags.add(j)
            t = t[1:]
        if t and t[-1] == 'P':
            fflags.add(j)
            t = t[:-1]
        core.append(t)
    if tail == TAIL_PROJ:
        eflags.add(len(sites) + 1)
        fflags.add(len(sites) + 1)
    return eflags, fflags, _canon_string(core, TAIL_ONE)


def expectation(x):
    """Conditional expectation onto the span of 1 and the p_j: boundary
    projections of each tensor factor determine the output color, the
    interior is evaluated by phi."""
    out = BElement()
    for (s1, s2), coeff in x.terms.items():
        for sign1, b1 in _branch_strings(s1):
            for sign2, b2 in _branch_strings(s2):
                e1, f1, core1 = _strip(b1)
                e2, f2, core2 = _strip(b2)
                val = phi(Rep({(core1, core2): coeff}))
                if val.is_zero():
                    continue
                val = Fraction(sign1 * sign2) * val
                je = min(e1 | e2) if e1 | e2 else None
                jf = min(f1 | f2) if f1 | f2 else None
                ks = [k for k in (je, jf) if k is not None]
                if not ks:
                    out = out + BElement({0: val})
                else:
                    k = min(ks)
                    out = out + BElement({i: val for i in range(1, k + 1)})
    return out


def zeta_E(x):
    return expectation(x).zeta()


def rep_product(args):
    out = REP_ONE
    for a in args:
        out = out * a
    return out


def replica_word(variables, labels, w):
    """The product a_1(j_1) ... a_n(j_n) of replicas."""
    return rep_product([replica(v, l, j)
                        for v, l, j in zip(variables, labels, w)])


def B_w_rep(w, args):
    """w-Boolean cumulant of replica-algebra arguments, by recursion
    over the interval splits of w."""
    w = tuple(w)
    if len(args) != len(w):
        raise ValueError('argument/word length mismatch')
    out = expectation(rep_product(args))
    for split in ad.interval_splits(w):
        if len(split) == 1:
            continue
        prod = BElement({0: 1})
        for block in split:
            prod = prod * B_w_rep(ad.block_subword(w, block),
                                  [args[p - 1] for p in block])
        out = out - prod
    return out


def _nested_rep(w, pi, args, leaf):
    """Evaluate the nested cumulant of a partition adapted to w, with the
    given leaf evaluator on (word, args); inner blocks are eliminated
    deepest first, each value attaching to the preceding argument."""
    w = tuple(w)
    pi = sp.normalize(pi)
    positions = list(range(1, len(w) + 1))
    args = list(args)
    blocks = list(pi)
    while True:
        nest = sp.nesting(tuple(blocks))
        inner = [b for b in blocks if nest[b][0] is not None]
        if not inner:
            break
        v = max(inner, key=lambda b: (nest[b][1], -b[0]))
        val = leaf(ad.block_subword(w, v),
                   [args[positions.index(p)] for p in v])
        left = max(p for p in positions if p < v[0] and p not in v)
        args[positions.index(left)] = args[positions.index(left)] * val.embed()
        keep = [i for i, p in enumerate(positions) if p not in v]
        positions = [positions[i] for i in keep]
        args = [args[i] for i in keep]
        w_map = {p: w[p - 1] for p in positions}
        blocks = [b for b in blocks if b != v]
    out = BElement({0: 1})
    for b in blocks:
        out = out * leaf(tuple(w[p - 1] for p in b),
                         [args[positions.index(p)] for p in b])
    return out


def B_pi_rep(w, pi, args):
    """Nested w-Boolean cumulant B_pi of replica arguments."""
    return _nested_rep(w, pi, args, B_w_rep)


def K_w_rep(w, args):
    """Motzkin cumulant of replica-algebra arguments, by recursion over
    the irreducible adapted partitions of w."""
    w = tuple(w)
    out = B_w_rep(w, args)
    for pi in ad.enumerate_adapted(w, 'irr'):
        if len(pi) == 1:
            continue
        out = out - K_pi_rep(w, pi, args)
    return out


def K_pi_rep(w, pi, args):
    """Nested Motzkin cumulant K_pi of replica arguments."""
    return _nested_rep(w, pi, args, K_w_rep)


def K_closed_rep(w, args):
    """Theorem-level closed form: signed sum of nested B_pi over the
    irreducible adapted partitions of w."""
    w = tuple(w)
    out = B_ZERO
    for pi in ad.enumerate_adapted(w, 'irr'):
        term = B_pi_rep(w, pi, args)
        out = out + Fraction((-1) ** (len(pi) - 1)) * term
    return out


def beta_hat(label, variables):
    """Boolean cumulant of the label's marginal, expanded in moment
    symbols."""
    return moment_to_boolean(label, tuple(str(v) for v in variables))


def beta_hat_pi(pi, labels, variables):
    out = ONE
    for b in pi:
        out = out * beta_hat(labels[b[0] - 1],
                             [variables[p - 1] for p in b])
    return out


def B_closed_form(w, variables, labels):
    """Closed form for B_w on replicas: sum of partitioned Boolean
    cumulants over the labeled monotone irreducible partitions, times
    the projection of the word's height color."""
    w = tuple(w)
    classes = ad.labeled_classes(w, labels)
    val = ZERO
    for pi in classes['monotone_irr']:
        val = val + beta_hat_pi(pi, labels, variables)
    return BElement({wd.height(w): val})


def K_closed_form_rep(w, variables, labels):
    """Closed form for K_w on replicas: zero for mixed labels, otherwise
    the signed sum over monotone irreducible partitions."""
    w = tuple(w)
    if len(set(labels)) != 1:
        return B_ZERO
    val = ZERO
    for pi in ad.enumerate_adapted(w, 'monotone_irr'):
        val = val + Fraction((-1) ** (len(pi) - 1)) * beta_hat_pi(
            pi, labels, variables)
    return BElement({wd.height(w): val})
