"""Unsigned, signed and even-signed labelings of a forest.

A labeling is a plain tuple of nonzero ints, ``w[i]`` being the label of
v_{i+1}.  Absolute values form a permutation of 1..n.  Its class is read off
the signs: all positive means unsigned, an even number of negatives means
even-signed (type D).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .forest import Forest

CLASSES = ("unsigned", "signed", "even_signed")


class LabelingError(ValueError):
    pass


class DomainError(ValueError):
    """A statistic was asked for on a labeling outside its domain."""


class ExhaustionBoundError(RuntimeError):
    pass


@dataclass(frozen=True)
class ExhaustionBounds:
    """Largest n that exhaustive enumeration accepts, per labeling class."""

    unsigned: int = 7
    signed: int = 5

    def limit(self, cls: str) -> int:
        return self.unsigned if cls == "unsigned" else self.signed


DEFAULT_BOUNDS = ExhaustionBounds()


def normalize_class(cls: str) -> str:
    c = cls.replace("-", "_")
    if c not in CLASSES:
        raise LabelingError(f"unknown labeling class {cls!r}; expected one of {CLASSES}")
    return c


def validate(forest: Forest, w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if len(w) != forest.n:
        raise LabelingError(f"labeling has {len(w)} entries, forest has {forest.n} vertices")
    if sorted(abs(x) for x in w) != list(range(1, forest.n + 1)):
        raise LabelingError(f"absolute values of {w} are not a permutation of 1..{forest.n}")
    return w


def parse_labeling(text: str) -> tuple[int, ...]:
    """Parse ``"3,-5,1,-4,2"`` (commas and/or spaces)."""
    toks = text.replace(",", " ").split()
    if not toks:
        raise LabelingError("empty labeling")
    out = []
    for pos, tok in enumerate(toks, start=1):
        try:
            out.append(int(tok))
        except ValueError:
            raise LabelingError(f"cannot parse labeling {text!r}: entry {pos} is {tok!r}") from None
    return tuple(out)


def format_labeling(w: Sequence[int]) -> str:
    return ",".join(map(str, w))


def is_unsigned(w: Sequence[int]) -> bool:
    return all(x > 0 for x in w)


def negative_count(w: Sequence[int]) -> int:
    return sum(1 for x in w if x < 0)


def is_even_signed(w: Sequence[int]) -> bool:
    return negative_count(w) % 2 == 0


def labeling_class(w: Sequence[int]) -> str:
    """Narrowest class containing w."""
    if is_unsigned(w):
        return "unsigned"
    return "even_signed" if is_even_signed(w) else "signed"


def class_size(n: int, cls: str) -> int:
    cls = normalize_class(cls)
    base = math.factorial(n)
    if cls == "unsigned":
        return base
    if cls == "signed":
        return base * 2**n
    return base * 2 ** (n - 1)


def enumerate_labelings(
    forest: Forest, cls: str = "unsigned", bounds: ExhaustionBounds | None = DEFAULT_BOUNDS
) -> Iterator[tuple[int, ...]]:
    """Every labeling of the given class.

    Permutations of 1..n run in lexicographic order on the outside; sign
    patterns run innermost, all-positive first.  ``bounds=None`` lifts the
    size guard.
    """
    cls = normalize_class(cls)
    n = forest.n
    if bounds is not None and n > bounds.limit(cls):
        raise ExhaustionBoundError(
            f"n={n} exceeds the {cls} exhaustion bound {bounds.limit(cls)}"
        )
    perms = itertools.permutations(range(1, n + 1))
    if cls == "unsigned":
        yield from perms
        return
    signs = list(itertools.product((1, -1), repeat=n))
    if cls == "even_signed":
        signs = [s for s in signs if s.count(-1) % 2 == 0]
    for perm in perms:
        for s in signs:
            yield tuple(a * b for a, b in zip(perm, s))


def standardize(values: Sequence[int]) -> tuple[int, ...]:
    """Replace absolute values by their ranks 1..k, keeping signs."""
    order = sorted(range(len(values)), key=lambda k: abs(values[k]))
    out = [0] * len(values)
    for rank, k in enumerate(order, start=1):
        out[k] = rank if values[k] > 0 else -rank
    return tuple(out)


def induced_sublabeling(forest: Forest, w: Sequence[int], j: int) -> tuple[int, ...]:
    """Labeling of the subtree rooted at v_j induced by w.

    Entries follow the subtree's vertices in increasing index order, i.e.
    the vertex order of ``forest.subforest(j)``.
    """
    verts = forest.subtree[forest._check(j)]
    return standardize([w[v] for v in verts])
