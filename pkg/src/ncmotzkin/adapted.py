"""Noncrossing partitions adapted to a Motzkin word.

The central objects: the lattice NC(w) of partitions adapted to w, its
irreducible part NC_irr(w), the monotone subfamilies M(w) and M_irr(w),
the least element 0_hat, coarsening moves generating the lattice, interval
splits Int(w), labeled variants, the depth-word bijection eta and the
poset over all pairs (partition, word).
"""

from itertools import combinations

from . import partitions as sp
from . import words as wd


def block_subword(w, block):
    return tuple(w[p - 1] for p in block)


def _block_ok(w, block):
    v = block_subword(w, block)
    if v[0] != v[-1] or v[0] != min(v):
        return False
    return all(abs(a - b) <= 1 for a, b in zip(v, v[1:]))


def _bridge(w, block, outer):
    # the two letters of the nearest outer block bracketing the block
    left = max(p for p in outer if p < block[0])
    right = min(p for p in outer if p > block[-1])
    return (w[left - 1], w[right - 1])


def _neighboring_pairs(pi, nest):
    """Pairs of blocks with a common nearest outer (or both covering) that
    are adjacent: no position of a third block with the same outer lies
    strictly between their supports."""
    by_outer = {}
    for v, (o, _d) in nest.items():
        by_outer.setdefault(o, []).append(v)
    pairs = []
    for group in by_outer.values():
        group.sort(key=lambda b: b[0])
        for u, v in zip(group, group[1:]):
            pairs.append((u, v))
    return pairs


def is_adapted(pi, w):
    """Adaptedness of a noncrossing partition to the word w: every block
    subword is a Motzkin word, depths are bounded by subword heights,
    subword heights dominate bridge heights, and neighboring blocks of
    equal depth have equal heights."""
    w = tuple(w)
    pi = tuple(tuple(b) for b in pi)
    if sp.ground_size(pi) != len(w):
        raise ValueError('partition/word length mismatch')
    if not sp.is_noncrossing(pi):
        return False
    if not all(_block_ok(w, b) for b in pi):
        return False
    nest = sp.nesting(pi)
    for v, (outer, depth) in nest.items():
        h = w[v[0] - 1]
        if depth > h:
            return False
        if outer is not None and h < wd.bridge_height(_bridge(w, v, outer)):
            return False
    for u, v in _neighboring_pairs(pi, nest):
        if nest[u][1] == nest[v][1]:
            if w[u[0] - 1] != w[v[0] - 1]:
                return False
    return True


def is_monotone(pi, w):
    """Monotonically adapted: adapted, every block subword constant, and
    each block's depth equals its (constant) letter offset by the height:
    d(V) = h(v) - h(w) + 1."""
    if not is_adapted(pi, w):
        return False
    base = min(w)
    nest = sp.nesting(tuple(tuple(b) for b in pi))
    for v, (_o, depth) in nest.items():
        sub = block_subword(w, v)
        if len(set(sub)) != 1:
            return False
        if depth != sub[0] - base + 1:
            return False
    return True


def enumerate_adapted(w, cls='all'):
    """Adapted partitions of w, as a filter over the noncrossing
    partitions of [n]. Classes: all, irr, monotone, monotone_irr."""
    w = tuple(w)
    n = len(w)
    preds = {
        'all': lambda p: True,
        'irr': sp.is_irreducible,
        'monotone': lambda p: is_monotone(p, w),
        'monotone_irr': lambda p: sp.is_irreducible(p) and is_monotone(p, w),
    }
    if cls not in preds:
        raise ValueError(f'unknown class {cls!r}')
    pred = preds[cls]
    return [p for p in sp.noncrossing_partitions(n)
            if is_adapted(p, w) and pred(p)]


def zero_hat(w):
    """Least element of NC(w): within a run of the base letter, consecutive
    base positions join iff separated by higher letters; higher segments
    are handled recursively."""
    w = tuple(w)
    blocks = []

    def rec(positions):
        base = min(w[p - 1] for p in positions)
        bases = [p for p in positions if w[p - 1] == base]
        cur = [bases[0]]
        for prev, p in zip(bases, bases[1:]):
            gap = [q for q in positions if prev < q < p]
            if gap:
                cur.append(p)
                rec(gap)
            else:
                blocks.append(tuple(cur))
                cur = [p]
        blocks.append(tuple(cur))

    rec(list(range(1, len(w) + 1)))
    return sp.normalize(blocks)


def admissible_coarsenings(pi, w, kind='both'):
    """One-step coarsenings of an adapted partition that stay adapted:
    merging two blocks with a common nearest outer (juxtaposition;
    blocks lying between the pair become nested) or merging a block
    into its nearest outer (insertion)."""
    if kind not in ('juxtaposition', 'insertion', 'both'):
        raise ValueError(f'unknown kind {kind!r}')
    pi = sp.normalize(pi)
    w = tuple(w)
    nest = sp.nesting(pi)
    candidates = []
    if kind in ('juxtaposition', 'both'):
        by_outer = {}
        for v, (o, _d) in nest.items():
            by_outer.setdefault(o, []).append(v)
        for group in by_outer.values():
            group.sort(key=lambda b: b[0])
            for i, u in enumerate(group):
                for v in group[i + 1:]:
                    candidates.append((u, v))
    if kind in ('insertion', 'both'):
        for v, (outer, _d) in nest.items():
            if outer is not None:
                candidates.append((v, outer))
    out = []
    seen = set()
    for u, v in candidates:
        merged = sp.normalize(
            [b for b in pi if b not in (u, v)] + [tuple(sorted(u + v))])
        if merged not in seen and is_adapted(merged, w):
            seen.add(merged)
            out.append(merged)
    return sorted(out)


def coarsening_closure(w):
    """Transitive closure of admissible coarsenings from zero_hat(w)."""
    w = tuple(w)
    start = zero_hat(w)
    seen = {start}
    stack = [start]
    while stack:
        pi = stack.pop()
        for nxt in admissible_coarsenings(pi, w):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return sorted(seen)


def join_adapted(pi, w, rho, w2):
    if tuple(w) != tuple(w2):
        raise ValueError('join requires a common word')
    joined = sp.join_nc(sp.normalize(pi), sp.normalize(rho))
    if not is_adapted(joined, w):
        raise ValueError('join left the adapted family')
    return joined


def interval_splits(w):
    """Interval partitions of [n] whose cuts fall where two consecutive
    letters both equal the height of w; every factor is then a Motzkin
    word of the same height."""
    w = tuple(w)
    n = len(w)
    h = wd.height(w)
    valid = [k for k in range(1, n) if w[k - 1] == h and w[k] == h]
    out = []
    for r in range(len(valid) + 1):
        for cuts in combinations(valid, r):
            blocks = []
            start = 1
            for k in cuts:
                blocks.append(tuple(range(start, k + 1)))
                start = k + 1
            blocks.append(tuple(range(start, n + 1)))
            out.append(tuple(blocks))
    return sorted(out)


def block_labels_constant(pi, labels):
    return all(len({labels[p - 1] for p in b}) == 1 for b in pi)


def chains_alternate(pi, labels):
    """Labels differ between every block and its nearest outer block."""
    nest = sp.nesting(pi)
    for v, (outer, _d) in nest.items():
        if outer is not None and labels[v[0] - 1] == labels[outer[0] - 1]:
            return False
    return True


def labeled_classes(w, labels):
    """NC(w, l): adapted partitions with label-constant blocks.
    M(w, l): additionally monotone with labels alternating along
    saturated nesting chains."""
    w = tuple(w)
    ell = tuple(labels)
    if len(ell) != len(w):
        raise ValueError('labeling length mismatch')
    nc = [p for p in enumerate_adapted(w, 'all')
          if block_labels_constant(p, ell)]
    mono = [p for p in nc if is_monotone(p, w) and chains_alternate(p, ell)]
    mono_irr = [p for p in mono if sp.is_irreducible(p)]
    return {'nc': nc, 'monotone': mono, 'monotone_irr': mono_irr}


def labelings_of(pi):
    """L(pi): the 2^|pi| block-constant labelings; L0(pi): the subset
    alternating along nesting chains."""
    pi = sp.normalize(pi)
    n = sp.ground_size(pi)
    big = []
    small = []
    for mask in range(1 << len(pi)):
        ell = [0] * n
        for i, b in enumerate(pi):
            for p in b:
                ell[p - 1] = 1 if mask >> i & 1 else 2
        ell = tuple(ell)
        big.append(ell)
        if chains_alternate(pi, ell):
            small.append(ell)
    return {'L': sorted(big), 'L0': sorted(small)}


def eta(pi0):
    """Depth-word bijection: an irreducible noncrossing partition of [n]
    maps to (w, pi) where w assigns to each position the depth of its
    block; pi = (pi0, w) is monotonically adapted and irreducible."""
    pi0 = sp.normalize(pi0)
    if not (sp.is_noncrossing(pi0) and sp.is_irreducible(pi0)):
        raise ValueError('eta requires an irreducible noncrossing partition')
    nest = sp.nesting(pi0)
    n = sp.ground_size(pi0)
    w = [0] * n
    for v, (_o, depth) in nest.items():
        for p in v:
            w[p - 1] = depth
    return tuple(w), pi0


def poset_ncn(n, irr=False):
    """Vertices (pi, w) over all reduced words w of length n, ordered by
    the product of reversed refinement on partitions and the letterwise
    order on words."""
    cls = 'irr' if irr else 'all'
    verts = []
    for w in wd.enumerate_words(n):
        for pi in enumerate_adapted(w, cls):
            verts.append((pi, w))
    return verts


def poset_leq(a, b):
    (pi, w), (rho, u) = a, b
    return sp.refines(pi, rho) and all(x <= y for x, y in zip(w, u))


def hasse(vertices, leq):
    """Cover relations of a finite poset given by a comparison predicate."""
    edges = []
    for a in vertices:
        for b in vertices:
            if a == b or not leq(a, b):
                continue
            if any(c not in (a, b) and leq(a, c) and leq(c, b)
                   for c in vertices):
                continue
            edges.append((a, b))
    return edges


def hasse_adapted(w, cls='all'):
    """Cover edges of NC(w) (refinement order at fixed word)."""
    verts = enumerate_adapted(w, cls)
    return hasse(verts, sp.refines)
