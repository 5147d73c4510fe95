"""Brute-force reference implementations used only by the tests.

Nothing here imports from forestats except for building inputs; the
forest order is recomputed from the raw parent array by transitive closure
and every statistic is evaluated straight from its definition.
"""

import itertools


def strictly_below(parents):
    """{(x, y)}: v_x <_F v_y, 1-based, by walking parent pointers."""
    rel = set()
    for x in range(1, len(parents) + 1):
        y = parents[x - 1]
        while y != 0:
            rel.add((x, y))
            y = parents[y - 1]
    return rel


def subtree_sizes(parents):
    rel = strictly_below(parents)
    return tuple(1 + sum(1 for (x, y) in rel if y == v) for v in range(1, len(parents) + 1))


def natural_labelings(parents):
    rel = strictly_below(parents)
    n = len(parents)
    return [w for w in itertools.permutations(range(1, n + 1)) if all(w[x - 1] < w[y - 1] for x, y in rel)]


def signed_labelings(n):
    for perm in itertools.permutations(range(1, n + 1)):
        for s in itertools.product((1, -1), repeat=n):
            yield tuple(a * b for a, b in zip(perm, s))


def inv(parents, w):
    return sum(1 for x, y in strictly_below(parents) if w[x - 1] > w[y - 1])


def n_two(parents, w):
    return sum(1 for x, y in strictly_below(parents) if w[x - 1] + w[y - 1] < 0)


def maj(parents, w):
    h = subtree_sizes(parents)
    return sum(h[v - 1] for v in range(1, len(w) + 1) if parents[v - 1] and w[v - 1] > w[parents[v - 1] - 1])


def a_code(parents, w):
    rel = strictly_below(parents)
    out = []
    for i in range(1, len(w) + 1):
        below = [x for x, y in rel if y == i]
        out.append(
            sum(w[u - 1] > w[i - 1] for u in below)
            + sum(w[u - 1] + w[i - 1] < 0 for u in below)
            + (w[i - 1] < 0)
        )
    return tuple(out)


def literal_sort(parents, w):
    """The forest sorting algorithm executed on a dict, straight from the listing.

    Returns (total, bcode, final labeling).
    """
    n = len(w)
    rel = strictly_below(parents)
    lab = {v: w[v - 1] for v in range(1, n + 1)}
    bcode = {}
    total = 0
    for i in range(n, 0, -1):
        v = next(x for x in lab if abs(lab[x]) == i)
        cands = [u for u in lab if (u == v or (v, u) in rel) and abs(lab[u]) <= i]
        u = max(cands)
        sub = sorted([x for x in lab if x == u or (x, u) in rel], key=lambda x: abs(lab[x]))
        rank = {x: k for k, x in enumerate(sub, start=1)}
        wu_v = rank[v] * (1 if lab[v] > 0 else -1)
        wu_u = rank[u] * (1 if lab[u] > 0 else -1)
        c = abs(wu_v) - wu_u if lab[u] > 0 else abs(wu_v) - wu_u - 1
        total += c
        bcode[u] = c
        if lab[v] > 0:
            lab[u], lab[v] = lab[v], lab[u]
        else:
            old_u, old_v = lab[u], lab[v]
            lab[u], lab[v] = -old_v, -old_u
    return total, tuple(bcode[v] for v in range(1, n + 1)), tuple(lab[v] for v in range(1, n + 1))


def signed_cycles(sigma):
    """Orbits of sigma acting on +-[n], as frozensets."""
    n = len(sigma)

    def app(i):
        return sigma[i - 1] if i > 0 else -sigma[-i - 1]

    orbits = set()
    for s in list(range(1, n + 1)) + list(range(-n, 0)):
        orb = {s}
        x = app(s)
        while x != s:
            orb.add(x)
            x = app(x)
        orbits.add(frozenset(orb))
    return orbits


def cyc_b(sigma):
    out = set()
    for orb in signed_cycles(sigma):
        if not any(-x in orb for x in orb):
            out.add(min(abs(x) for x in orb))
    return out


def sorting_index_by_factorization(sigma):
    """Signed sorting index from an explicit transposition search.

    Repeatedly brings the largest misplaced value home with the one
    (signed) transposition that fixes it and records j - i - [i < 0].
    """
    w = list(sigma)
    n = len(w)
    total = 0
    for k in range(n, 0, -1):
        pos = [p for p in range(1, n + 1) if abs(w[p - 1]) == k][0]
        if w[pos - 1] == k and pos == k:
            continue
        if w[pos - 1] == k:
            i = pos
        else:
            i = -pos
        # apply transposition (i k) on the right: swap positions |i| and k, negating when i < 0
        a, b = w[abs(i) - 1], w[k - 1]
        if i > 0:
            w[abs(i) - 1], w[k - 1] = b, a
        else:
            w[abs(i) - 1], w[k - 1] = -b, -a
        total += k - i - (1 if i < 0 else 0)
    assert w == list(range(1, n + 1))
    return total
