"""Signed permutations in window notation.

``sigma[i-1]`` is sigma(i); sigma(-i) = -sigma(i) is implicit.  Unsigned
permutations are the all-positive windows, D_n the windows with an even
number of negative entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .forest import Forest, ForestError, path_forest
from .labelings import DomainError, is_even_signed, is_unsigned, negative_count


def parse_window(text: str) -> tuple[int, ...]:
    toks = text.replace(",", " ").split()
    sigma = tuple(int(t) for t in toks)
    check(sigma)
    return sigma


def check(sigma: Sequence[int]) -> None:
    if sorted(abs(x) for x in sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{tuple(sigma)} is not a signed permutation")


def apply(sigma: Sequence[int], i: int) -> int:
    return sigma[i - 1] if i > 0 else -sigma[-i - 1]


def inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        out[abs(s) - 1] = i if s > 0 else -i
    return tuple(out)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """(sigma o tau)(i) = sigma(tau(i))."""
    return tuple(apply(sigma, t) for t in tau)


def enumerate_group(n: int, kind: str = "B") -> Iterator[tuple[int, ...]]:
    """S_n (kind "A"), B_n or D_n; signs vary innermost."""
    signs = list(itertools.product((1, -1), repeat=n))
    if kind == "D":
        signs = [s for s in signs if s.count(-1) % 2 == 0]
    for perm in itertools.permutations(range(1, n + 1)):
        if kind == "A":
            yield perm
        else:
            for s in signs:
                yield tuple(a * b for a, b in zip(perm, s))


@dataclass(frozen=True)
class Cycle:
    """A cycle listed from its element of least absolute value.

    Unbalanced cycles contain both i and -i; only the first half
    (a_1..a_k of a_1..a_k,-a_1..-a_k) is kept in ``elements``.
    """

    elements: tuple[int, ...]
    balanced: bool

    @property
    def minimum(self) -> int:
        return abs(self.elements[0])

    def __str__(self) -> str:
        els = self.elements if self.balanced else self.elements + tuple(-x for x in self.elements)
        return "(" + " ".join(map(str, els)) + ")"


def cycle_decomposition(sigma: Sequence[int]) -> tuple[Cycle, ...]:
    """One Cycle per orbit pair, ordered by minimum absolute value.

    A balanced cycle and its negative are reported once, starting from the
    positive representative of the smallest absolute value.
    """
    n = len(sigma)
    seen: set[int] = set()
    cycles = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        orbit = [start]
        x = apply(sigma, start)
        while x != start:
            orbit.append(x)
            x = apply(sigma, x)
        seen.update(orbit)
        balanced = -start not in orbit
        if balanced:
            seen.update(-x for x in orbit)
            cycles.append(Cycle(tuple(orbit), True))
        else:
            cycles.append(Cycle(tuple(orbit[: len(orbit) // 2]), False))
    return tuple(cycles)


def format_cycles(sigma: Sequence[int]) -> str:
    return "".join(str(c) for c in cycle_decomposition(sigma))


def cyc_min(sigma: Sequence[int], variant: str = "B") -> frozenset[int]:
    """Cycle minima: all cycles (A, unsigned only) or balanced cycles (B)."""
    if variant == "A":
        if not is_unsigned(sigma):
            raise DomainError("Cyc (type A) is defined for unsigned permutations")
        return frozenset(c.minimum for c in cycle_decomposition(sigma))
    if variant != "B":
        raise ValueError(f"unknown Cyc variant {variant!r}")
    return frozenset(c.minimum for c in cycle_decomposition(sigma) if c.balanced)


def rlmin(sigma: Sequence[int], variant: str = "A") -> frozenset[int]:
    """Right-to-left minimum letters.

    A: sigma_i below every later letter.  B: 0 < sigma_i below every later
    absolute value.  D: as B with sigma_i > 1.
    """
    n = len(sigma)
    if variant == "A":
        if not is_unsigned(sigma):
            raise DomainError("Rlmin is defined for unsigned permutations")
        return frozenset(
            sigma[i] for i in range(n) if all(sigma[i] < sigma[j] for j in range(i + 1, n))
        )
    if variant not in ("B", "D"):
        raise ValueError(f"unknown Rlmin variant {variant!r}")
    if variant == "D" and not is_even_signed(sigma):
        raise DomainError("Rlmin_D needs an even number of negative entries")
    low = 1 if variant == "D" else 0
    return frozenset(
        sigma[i]
        for i in range(n)
        if sigma[i] > low and all(sigma[i] < abs(sigma[j]) for j in range(i + 1, n))
    )


def inv(sigma: Sequence[int]) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def n_two(sigma: Sequence[int]) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] + sigma[j] < 0)


def length(sigma: Sequence[int], variant: str = "A") -> int:
    """Coxeter length: inv (A), inv + n1 + n2 (B), inv + n2 (D)."""
    if variant == "A":
        if not is_unsigned(sigma):
            raise DomainError("type A length needs an unsigned permutation")
        return inv(sigma)
    if variant == "B":
        return inv(sigma) + negative_count(sigma) + n_two(sigma)
    if variant == "D":
        if not is_even_signed(sigma):
            raise DomainError("type D length needs an even number of negative entries")
        return inv(sigma) + n_two(sigma)
    raise ValueError(f"unknown length variant {variant!r}")


def selection_sort_steps(sigma: Sequence[int]) -> list[tuple[int, int, int]]:
    """Straight Selection Sort as a list of (i, j, cost) transpositions.

    Value k = n, n-1, ..., 1 is moved to position k.  If it sits at position
    i with a positive sign the step is (i, k) costing k - i; if it sits with
    a negative sign the step is (-i, k) costing k + i - 1.  Steps that do
    nothing are omitted.
    """
    w = list(sigma)
    steps = []
    for k in range(len(w), 0, -1):
        i = next(p for p in range(1, k + 1) if abs(w[p - 1]) == k)
        if w[i - 1] == k:
            if i != k:
                w[i - 1], w[k - 1] = w[k - 1], w[i - 1]
                steps.append((i, k, k - i))
        else:
            w[i - 1], w[k - 1] = -w[k - 1], k
            steps.append((-i, k, k + i - 1))
    return steps


def ssort_sor(sigma: Sequence[int], variant: str = "B") -> int:
    if variant == "A" and not is_unsigned(sigma):
        raise DomainError("type A sorting index needs an unsigned permutation")
    if variant not in ("A", "B"):
        raise ValueError(f"unknown sorting-index variant {variant!r}")
    return sum(cost for _, _, cost in selection_sort_steps(sigma))


def linear_tree_bridge(n: int) -> Forest:
    return path_forest(n)


def read_word(forest: Forest, w: Sequence[int]) -> tuple[int, ...]:
    """Signed permutation read from a linear tree bottom to top."""
    if not forest.is_path():
        raise ForestError("reading a word needs the linear tree v_1 < ... < v_n")
    return tuple(w)
