"""Subexcedent codes of labeled forests and the bijections built on them.

Codes are plain tuples, entry i belonging to v_{i+1}.  Type A codes satisfy
0 <= c_i <= h_i - 1, type B codes 0 <= c_i <= 2 h_i - 1.

* A-code: inversion-type code; ``phi`` pairs it with a natural labeling.
* B-code: contributions of the forest selection sort; ``psi`` likewise.
* M-code: cyclic (major-index) code; ``theta`` likewise on unsigned labelings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import signed_perm
from .forest import Forest, is_natural
from .labelings import DomainError, is_unsigned, standardize
from .statistics import cyclic_count


class CodeError(ValueError):
    pass


def bound(forest: Forest, kind: str) -> tuple[int, ...]:
    """Largest allowed entry per position."""
    if kind == "A":
        return tuple(h - 1 for h in forest.h)
    if kind == "B":
        return tuple(2 * h - 1 for h in forest.h)
    raise ValueError(f"unknown code kind {kind!r}")


def in_code_space(forest: Forest, code: Sequence[int], kind: str) -> bool:
    return len(code) == forest.n and all(0 <= c <= b for c, b in zip(code, bound(forest, kind)))


def code_space(forest: Forest, kind: str) -> Iterator[tuple[int, ...]]:
    """SE_F (kind "A") or SE_F^B (kind "B") in lexicographic order."""
    return itertools.product(*(range(b + 1) for b in bound(forest, kind)))


def _check_inverse_input(forest, w_nat, code, kind):
    if len(w_nat) != forest.n or not is_natural(forest, w_nat):
        raise CodeError(f"{tuple(w_nat)} is not a natural labeling of the forest")
    if not in_code_space(forest, code, kind):
        raise CodeError(f"{tuple(code)} is outside the type {kind} subexcedent bounds")


def _sign(x):
    return 1 if x > 0 else -1


# --- A-code and phi ------------------------------------------------------


def a_code(forest: Forest, w: Sequence[int]) -> tuple[int, ...]:
    out = []
    for i in range(forest.n):
        x = w[i]
        c = 1 if x < 0 else 0
        for u in forest.desc[i]:
            c += (w[u] > x) + (w[u] + x < 0)
        out.append(c)
    return tuple(out)


def _relabel_below(cur, below, new_abs):
    """Give the vertices ``below`` the absolute values ``new_abs`` (ascending).

    Relative order of absolute values and all signs are kept.
    """
    order = sorted(below, key=lambda x: abs(cur[x]))
    for x, a in zip(order, new_abs):
        cur[x] = a if cur[x] > 0 else -a


def phi(forest: Forest, w: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(natural labeling, A-code).

    For i = n..1 the largest absolute value in the subtree of v_i moves to
    v_i (made positive) and the rest of the subtree is re-standardized onto
    the remaining values.
    """
    code = a_code(forest, w)
    cur = list(w)
    for i in range(forest.n - 1, -1, -1):
        below = forest.desc[i]
        vals = sorted(abs(cur[x]) for x in forest.subtree[i])
        top = vals.pop()
        _relabel_below(cur, below, vals)
        cur[i] = top
    return tuple(cur), code


def phi_inv(forest: Forest, w_nat: Sequence[int], code: Sequence[int]) -> tuple[int, ...]:
    _check_inverse_input(forest, w_nat, code, "B")
    cur = list(w_nat)
    for i in range(forest.n):
        h = forest.h[i]
        vals = sorted(abs(cur[x]) for x in forest.subtree[i])
        a = code[i]
        if a < h:
            e = vals[h - 1 - a]
            label = e
        else:
            e = vals[a - h]
            label = -e
        vals.remove(e)
        _relabel_below(cur, forest.desc[i], vals)
        cur[i] = label
    return tuple(cur)


# --- forest selection sort, B-code and psi -------------------------------


@dataclass(frozen=True)
class SortStep:
    i: int
    v: int
    u: int
    contribution: int
    labels_after: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "v": self.v,
            "u": self.u,
            "contribution": self.contribution,
            "labels_after": list(self.labels_after),
        }


@dataclass(frozen=True)
class SortResult:
    sor_b: int
    w_sorted: tuple[int, ...]
    bcode: tuple[int, ...]
    trace: tuple[SortStep, ...]


def sort_forest(forest: Forest, w: Sequence[int], trace: bool = True) -> SortResult:
    """Sort a signed labeling into a natural one, accumulating sor_B.

    Step i (from n down to 1) takes the vertex v holding +-i and the pivot u,
    the highest ancestor-or-self of v whose label has absolute value <= i.
    In the labeling induced on u's subtree the step adds |w_u(v)| - w_u(u),
    minus one more if w(u) < 0.  Then, if w(v) > 0 the labels of u and v are
    swapped; otherwise u receives -w(v) and v receives -w(u), which for
    u == v is a single sign flip.  Afterwards u holds +i.
    """
    n = forest.n
    cur = list(w)
    where = {abs(x): k for k, x in enumerate(cur)}
    bcode = [0] * n
    steps = []
    total = 0
    for i in range(n, 0, -1):
        v = where[i]
        u = next(x for x in reversed(forest.anc[v]) if abs(cur[x]) <= i)
        sub = forest.subtree[u]
        std = dict(zip(sub, standardize([cur[x] for x in sub])))
        c = abs(std[v]) - std[u] - (1 if cur[u] < 0 else 0)
        total += c
        bcode[u] = c
        if cur[v] > 0:
            cur[u], cur[v] = cur[v], cur[u]
        else:
            cur[u], cur[v] = -cur[v], -cur[u]
        where[abs(cur[u])] = u
        where[abs(cur[v])] = v
        if trace:
            steps.append(SortStep(i, v + 1, u + 1, c, tuple(cur)))
    return SortResult(total, tuple(cur), tuple(bcode), tuple(steps))


def b_code(forest: Forest, w: Sequence[int]) -> tuple[int, ...]:
    return sort_forest(forest, w, trace=False).bcode


def sor_b(forest: Forest, w: Sequence[int]) -> int:
    return sort_forest(forest, w, trace=False).sor_b


def sor(forest: Forest, w: Sequence[int]) -> int:
    if not is_unsigned(w):
        raise DomainError("sor is defined for unsigned labelings; use sor_b")
    return sort_forest(forest, w, trace=False).sor_b


def sorting_permutation(forest: Forest, w: Sequence[int], w_sorted: Sequence[int]) -> tuple[int, ...]:
    """Window of w o w'^{-1}: position w'(v) carries w(v)."""
    sigma = [0] * forest.n
    for v, k in enumerate(w_sorted):
        sigma[k - 1] = w[v]
    return tuple(sigma)


def cyc_vertices(forest: Forest, w: Sequence[int], variant: str = "B") -> tuple[int, ...]:
    """Minimal cycle vertices: v with w'(v) a cycle minimum of w o w'^{-1}."""
    if variant == "A" and not is_unsigned(w):
        raise DomainError("Cyc is defined for unsigned labelings; use variant B")
    w_sorted = sort_forest(forest, w, trace=False).w_sorted
    mins = signed_perm.cyc_min(sorting_permutation(forest, w, w_sorted), variant)
    return tuple(v + 1 for v in range(forest.n) if w_sorted[v] in mins)


def psi(forest: Forest, w: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    res = sort_forest(forest, w, trace=False)
    return res.w_sorted, res.bcode


def psi_inv(forest: Forest, w_nat: Sequence[int], code: Sequence[int]) -> tuple[int, ...]:
    """Undo the selection sort, steps i = 1..n.

    The vertex u labeled i was the pivot of step i.  Its code entry b fixes
    the label u held before the step: the (b+1)-st largest absolute value of
    u's subtree, positive, when b < h_u, else the (b-h_u+1)-st smallest,
    negative.  The vertex now holding that absolute value is the old v.
    """
    _check_inverse_input(forest, w_nat, code, "B")
    cur = list(w_nat)
    for i in range(1, forest.n + 1):
        u = cur.index(i)
        h = forest.h[u]
        sub = forest.subtree[u]
        vals = sorted(abs(cur[x]) for x in sub)
        b = code[u]
        if b < h:
            old = vals[h - 1 - b]
        else:
            old = -vals[b - h]
        t = next(x for x in sub if abs(cur[x]) == abs(old))
        if t == u:
            cur[u] = old
        else:
            was_positive = cur[t] == old
            cur[u] = old
            cur[t] = i if was_positive else -i
    return tuple(cur)


# --- M-codes and theta ---------------------------------------------------


def m_code(forest: Forest, w: Sequence[int]) -> tuple[int, ...]:
    if not is_unsigned(w):
        raise DomainError("the M-code is defined for unsigned labelings; use m_code_signed")
    return tuple(cyclic_count(forest, w, v) for v in range(forest.n))


def m_code_signed(forest: Forest, w: Sequence[int]) -> tuple[int, ...]:
    return tuple(2 * cyclic_count(forest, w, v) + (w[v] < 0) for v in range(forest.n))


def _rotate_subtree(forest, cur, i, shift):
    sub = forest.subtree[i]
    labels = sorted(cur[x] for x in sub)
    h = len(labels)
    pos = {lab: k for k, lab in enumerate(labels)}
    for x in sub:
        cur[x] = labels[(pos[cur[x]] + shift) % h]


def theta(forest: Forest, w: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(natural labeling, M-code) of an unsigned labeling.

    For i = n..1 the labels l_1 < ... < l_h of v_i's subtree are rotated,
    l_j -> l_{j + m_i mod h}.
    """
    code = m_code(forest, w)
    cur = list(w)
    for i in range(forest.n - 1, -1, -1):
        if code[i]:
            _rotate_subtree(forest, cur, i, code[i])
    return tuple(cur), code


def theta_inv(forest: Forest, w_nat: Sequence[int], code: Sequence[int]) -> tuple[int, ...]:
    _check_inverse_input(forest, w_nat, code, "A")
    cur = list(w_nat)
    for i in range(forest.n):
        if code[i]:
            _rotate_subtree(forest, cur, i, -code[i])
    return tuple(cur)


def inv_to_maj_map(forest: Forest, w: Sequence[int]) -> tuple[int, ...]:
    """theta^{-1} o phi: carries (inv, Btmax) to (maj, Cbtmax)."""
    if not is_unsigned(w):
        raise DomainError("inv_to_maj_map acts on unsigned labelings")
    return theta_inv(forest, *phi(forest, w))
