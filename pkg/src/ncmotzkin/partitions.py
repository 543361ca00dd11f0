"""Set partitions of [n]: noncrossing, irreducible, interval classes,
nesting structure and the join in the noncrossing lattice.

A partition is stored canonically as a tuple of blocks, each block a
tuple of increasing 1-based elements, blocks ordered by their minima.
"""

from functools import lru_cache


def normalize(blocks):
    bs = tuple(sorted(tuple(sorted(b)) for b in blocks))
    seen = set()
    for b in bs:
        if not b:
            raise ValueError('empty block')
        for x in b:
            if x in seen:
                raise ValueError(f'element {x} appears twice')
            seen.add(x)
    n = max(seen)
    if seen != set(range(1, n + 1)):
        raise ValueError('blocks must cover 1..n')
    return bs


def ground_size(pi):
    return sum(len(b) for b in pi)


def enumerate_all(n):
    """All set partitions of [n] via restricted growth strings."""
    if n < 1:
        raise ValueError('n must be >= 1')
    out = []

    def rec(assign, kmax):
        i = len(assign)
        if i == n:
            blocks = [[] for _ in range(kmax + 1)]
            for pos, c in enumerate(assign, start=1):
                blocks[c].append(pos)
            out.append(tuple(tuple(b) for b in blocks))
            return
        for c in range(kmax + 2):
            rec(assign + [c], max(kmax, c))

    rec([0], 0)
    return out


def is_noncrossing(pi):
    """No a < b < c < d with a, c in one block and b, d in another."""
    for i, u in enumerate(pi):
        for v in pi[i + 1:]:
            # u comes first (smaller min); crossing iff v has elements both
            # inside and outside some gap of u
            inside = outside = False
            for x in v:
                if any(a < x < b for a, b in zip(u, u[1:])):
                    inside = True
                if x < u[0] or x > u[-1]:
                    outside = True
                if inside and outside:
                    return False
            # also u interleaving v
            inside = outside = False
            for x in u:
                if any(a < x < b for a, b in zip(v, v[1:])):
                    inside = True
                if x < v[0] or x > v[-1]:
                    outside = True
                if inside and outside:
                    return False
    return True


def is_irreducible(pi):
    """1 and n lie in the same block (the unique covering block)."""
    n = ground_size(pi)
    for b in pi:
        if 1 in b:
            return n in b
    return False


def is_interval(pi):
    return all(b[-1] - b[0] + 1 == len(b) for b in pi)


def enumerate_partitions(n, cls='all'):
    preds = {
        'all': lambda p: True,
        'nc': is_noncrossing,
        'nc_irr': lambda p: is_noncrossing(p) and is_irreducible(p),
        'interval': is_interval,
    }
    if cls not in preds:
        raise ValueError(f'unknown class {cls!r}')
    return sorted(p for p in enumerate_all(n) if preds[cls](p))


@lru_cache(maxsize=None)
def _nc_cached(n):
    return tuple(enumerate_partitions(n, 'nc'))


def noncrossing_partitions(n):
    return list(_nc_cached(n))


@lru_cache(maxsize=None)
def _nc_irr_cached(n):
    return tuple(p for p in _nc_cached(n) if is_irreducible(p))


def irreducible_partitions(n):
    return list(_nc_irr_cached(n))


@lru_cache(maxsize=None)
def interval_partitions(n):
    out = []
    for mask in range(1 << (n - 1)):
        blocks = []
        cur = [1]
        for k in range(1, n):
            if mask >> (k - 1) & 1:
                blocks.append(tuple(cur))
                cur = []
            cur.append(k + 1)
        blocks.append(tuple(cur))
        out.append(tuple(blocks))
    return sorted(out)


def nesting(pi):
    """Map block -> (nearest outer block or None, depth).

    The nearest outer block of V is the block W with min(W) < min(V) and
    max(W) > max(V) whose span is smallest; covering blocks have depth 1.
    """
    if not is_noncrossing(pi):
        raise ValueError('nesting requires a noncrossing partition')
    outer = {}
    for v in pi:
        best = None
        for u in pi:
            if u is v:
                continue
            if u[0] < v[0] and u[-1] > v[-1]:
                if best is None or u[-1] - u[0] < best[-1] - best[0]:
                    best = u
        outer[v] = best
    depth = {}

    def d(v):
        if v not in depth:
            depth[v] = 1 if outer[v] is None else d(outer[v]) + 1
        return depth[v]

    return {v: (outer[v], d(v)) for v in pi}


def join_nc(pi, rho):
    """Least upper bound of two noncrossing partitions of [n] in NC(n):
    merge to the common coarsening, then merge crossing blocks until
    noncrossing."""
    n = ground_size(pi)
    if ground_size(rho) != n:
        raise ValueError('ground set mismatch')
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for p in (pi, rho):
        for b in p:
            for x in b[1:]:
                union(b[0], x)

    def current():
        groups = {}
        for x in range(1, n + 1):
            groups.setdefault(find(x), []).append(x)
        return normalize(groups.values())

    while True:
        cur = current()
        if is_noncrossing(cur):
            return cur
        merged = False
        for i, u in enumerate(cur):
            for v in cur[i + 1:]:
                if not is_noncrossing((u, v)):
                    union(u[0], v[0])
                    merged = True
                    break
            if merged:
                break


def refines(pi, rho):
    """True iff every block of pi is contained in a block of rho."""
    where = {}
    for i, b in enumerate(rho):
        for x in b:
            where[x] = i
    return all(len({where[x] for x in b}) == 1 for b in pi)


def format_partition(pi):
    return '{' + ','.join('{' + ','.join(map(str, b)) + '}' for b in pi) + '}'
