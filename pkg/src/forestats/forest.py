"""Plane forests with naturally indexed vertices.

A forest on vertices v_1..v_n is stored as a parent array: ``parents[j-1]`` is
the 1-based index of the parent of v_j, or 0 when v_j is a root.  Natural
indexing (every ancestor has a larger index) is enforced at construction.

Public methods take and return 1-based vertex indices.  The precomputed
tables ``parent0``, ``children``, ``desc``, ``anc`` and ``subtree`` are
0-based and exist for the hot loops of the statistics and code modules.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence


class ForestError(ValueError):
    """Invalid parent array or vertex index."""


@dataclass(frozen=True)
class Forest:
    parents: tuple[int, ...]

    parent0: tuple[int, ...] = field(init=False, repr=False, compare=False)
    children: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    desc: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    anc: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    subtree: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    h: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        parents = tuple(int(p) for p in self.parents)
        n = len(parents)
        if n == 0:
            raise ForestError("a forest needs at least one vertex")
        for j, p in enumerate(parents, start=1):
            if p < 0 or p > n:
                raise ForestError(f"parent of v_{j} is {p}, outside 0..{n}")
            if p != 0 and p <= j:
                raise ForestError(
                    f"parent of v_{j} is v_{p}; natural indexing needs a parent index > {j}"
                )
        par0 = tuple(p - 1 for p in parents)
        kids: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(par0):
            if p >= 0:
                kids[p].append(v)
        # children have smaller indices than parents, so one ascending pass
        # sees every child before its parent
        desc: list[tuple[int, ...]] = []
        for v in range(n):
            below = []
            for c in kids[v]:
                below.append(c)
                below.extend(desc[c])
            desc.append(tuple(sorted(below)))
        anc = []
        for v in range(n):
            chain = [v]
            while par0[chain[-1]] >= 0:
                chain.append(par0[chain[-1]])
            anc.append(tuple(chain))
        object.__setattr__(self, "parents", parents)
        object.__setattr__(self, "parent0", par0)
        object.__setattr__(self, "children", tuple(tuple(k) for k in kids))
        object.__setattr__(self, "desc", tuple(desc))
        object.__setattr__(self, "anc", tuple(anc))
        object.__setattr__(self, "subtree", tuple(tuple(sorted(d + (v,))) for v, d in enumerate(desc)))
        object.__setattr__(self, "h", tuple(len(d) + 1 for d in desc))

    @property
    def n(self) -> int:
        return len(self.parents)

    def __str__(self) -> str:
        return ",".join(map(str, self.parents))

    def _check(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise ForestError(f"vertex index {j} outside 1..{self.n}")
        return j - 1

    def below(self, j: int) -> frozenset[int]:
        """Indices i with v_i strictly below v_j."""
        return frozenset(i + 1 for i in self.desc[self._check(j)])

    def parent(self, j: int) -> int:
        """Parent index of v_j, 0 for a root."""
        return self.parents[self._check(j)]

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(j for j, p in enumerate(self.parents, start=1) if p == 0)

    @property
    def leaves(self) -> tuple[int, ...]:
        return tuple(j + 1 for j, k in enumerate(self.children) if not k)

    def is_path(self) -> bool:
        """True for the linear tree v_1 < v_2 < ... < v_n."""
        return all(p == j + 1 for j, p in enumerate(self.parents[:-1], start=1)) and self.parents[-1] == 0

    def comparable_pairs(self) -> Iterator[tuple[int, int]]:
        """All (x, y) with v_x < v_y, 1-based."""
        for y in range(self.n):
            for x in self.desc[y]:
                yield x + 1, y + 1

    def subforest(self, j: int) -> "Forest":
        """The subtree rooted at v_j, re-indexed 1..h in the original order."""
        verts = self.subtree[self._check(j)]
        pos = {v: k for k, v in enumerate(verts, start=1)}
        return Forest(tuple(0 if v == j - 1 else pos[self.parent0[v]] for v in verts))

    def canonical_form(self) -> tuple:
        """Isomorphism invariant of the underlying unordered forest."""
        def shape(v):
            return tuple(sorted(shape(c) for c in self.children[v]))

        return tuple(sorted(shape(r - 1) for r in self.roots))


def forest_from_parents(parents: Sequence[int]) -> Forest:
    return Forest(tuple(parents))


def parse_forest(text: str) -> Forest:
    """Parse ``"3,3,5,5,0"``; whitespace is ignored."""
    cleaned = "".join(text.split())
    if not cleaned:
        raise ForestError("empty forest specification")
    parents = []
    for pos, tok in enumerate(cleaned.split(","), start=1):
        try:
            parents.append(int(tok))
        except ValueError:
            raise ForestError(f"cannot parse forest {text!r}: entry {pos} is {tok!r}") from None
    return Forest(tuple(parents))


def path_forest(n: int) -> Forest:
    """The linear tree v_1 < v_2 < ... < v_n."""
    if n < 1:
        raise ForestError("path needs n >= 1")
    return Forest(tuple(range(2, n + 1)) + (0,))


def antichain(n: int) -> Forest:
    return Forest((0,) * n)


def subtree_sizes(forest: Forest) -> tuple[int, ...]:
    return forest.h


def below(forest: Forest, j: int) -> frozenset[int]:
    return forest.below(j)


def natural_labeling_count(forest: Forest) -> int:
    """n! / prod h_v, the number of linear extensions."""
    num = math.factorial(forest.n)
    den = math.prod(forest.h)
    q, r = divmod(num, den)
    assert r == 0, "hook-length quotient must be integral"
    return q


def is_natural(forest: Forest, w: Sequence[int]) -> bool:
    """Order preserving and positive."""
    return all(x > 0 for x in w) and all(
        w[forest.parent0[v]] > w[v] for v in range(forest.n) if forest.parent0[v] >= 0
    )


def enumerate_natural_labelings(forest: Forest) -> Iterator[tuple[int, ...]]:
    """All order-preserving positive labelings.

    Labels are handed out from n downwards; label k may go to any unlabeled
    vertex whose parent already carries a label (or which is a root).
    Vertices are tried in increasing index order, so the stream order is fixed.
    """
    n = forest.n
    w = [0] * n
    par = forest.parent0

    def rec(k):
        if k == 0:
            yield tuple(w)
            return
        for v in range(n):
            if w[v] == 0 and (par[v] < 0 or w[par[v]] != 0):
                w[v] = k
                yield from rec(k - 1)
                w[v] = 0

    yield from rec(n)


def enumerate_forests(n: int) -> Iterator[Forest]:
    """Every naturally indexed forest on n vertices up to poset isomorphism.

    Parent arrays are scanned lexicographically with p_j in {0, j+1..n}; the
    first array of each isomorphism class is kept.
    """
    choices = [(0,) + tuple(range(j + 1, n + 1)) for j in range(1, n + 1)]
    seen = set()
    for parents in itertools.product(*choices):
        f = Forest(parents)
        key = f.canonical_form()
        if key not in seen:
            seen.add(key)
            yield f


def enumerate_forests_upto(max_n: int) -> Iterator[Forest]:
    for n in range(1, max_n + 1):
        yield from enumerate_forests(n)
