"""Pointwise statistics of a (signed) labeled forest.

Set-valued statistics return sorted tuples of 1-based vertex indices.
Comparisons are on signed label values throughout; the order of the signed
alphabet is -n < ... < -1 < 1 < ... < n, which is plain integer order.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .forest import Forest
from .labelings import DomainError, is_even_signed, is_unsigned, negative_count

VARIANTS_BTMAX = ("A", "B", "D")


def _require_unsigned(w, what):
    if not is_unsigned(w):
        raise DomainError(f"{what} is defined for unsigned labelings only")


def _require_even(w, what):
    if not is_even_signed(w):
        raise DomainError(f"{what} needs an even number of negative labels")


def inv(forest: Forest, w: Sequence[int]) -> int:
    return sum(1 for y in range(forest.n) for x in forest.desc[y] if w[x] > w[y])


def n_two(forest: Forest, w: Sequence[int]) -> int:
    return sum(1 for y in range(forest.n) for x in forest.desc[y] if w[x] + w[y] < 0)


def n_one(forest: Forest, w: Sequence[int]) -> int:
    return negative_count(w)


def inv_b(forest: Forest, w: Sequence[int]) -> int:
    return inv(forest, w) + negative_count(w) + n_two(forest, w)


def inv_d(forest: Forest, w: Sequence[int]) -> int:
    _require_even(w, "inv_D")
    return inv(forest, w) + n_two(forest, w)


def descents(forest: Forest, w: Sequence[int]) -> tuple[int, ...]:
    par = forest.parent0
    return tuple(v + 1 for v in range(forest.n) if par[v] >= 0 and w[v] > w[par[v]])


def des_maj(forest: Forest, w: Sequence[int]) -> tuple[tuple[int, ...], int]:
    des = descents(forest, w)
    return des, sum(forest.h[v - 1] for v in des)


def maj(forest: Forest, w: Sequence[int]) -> int:
    return des_maj(forest, w)[1]


def des_b_maj_b(forest: Forest, w: Sequence[int]) -> tuple[tuple[int, ...], int, int]:
    """(Des_B, maj_B, number of positive labels).

    Des_B adds every positively labeled root to the ordinary descent set.
    """
    des = set(descents(forest, w))
    des.update(r for r in forest.roots if w[r - 1] > 0)
    des_b = tuple(sorted(des))
    pos = sum(1 for x in w if x > 0)
    return des_b, sum(forest.h[v - 1] for v in des_b), pos


def maj_b(forest: Forest, w: Sequence[int]) -> int:
    return des_b_maj_b(forest, w)[1]


def fmaj(forest: Forest, w: Sequence[int]) -> int:
    return 2 * maj(forest, w) + negative_count(w)


def rmaj(forest: Forest, w: Sequence[int]) -> int:
    _, mb, pos = des_b_maj_b(forest, w)
    return 2 * mb - pos


def btmax(forest: Forest, w: Sequence[int], variant: str = "A") -> tuple[int, ...]:
    """Bottom-to-top maximum positions.

    A: label beats every label below.  B: label positive and beats every
    absolute value below.  D: as B, restricted to non-leaves.
    """
    desc = forest.desc
    if variant == "A":
        _require_unsigned(w, "Btmax")
        return tuple(v + 1 for v in range(forest.n) if all(w[v] > w[u] for u in desc[v]))
    if variant not in ("B", "D"):
        raise ValueError(f"unknown Btmax variant {variant!r}")
    if variant == "D":
        _require_even(w, "Btmax_D")
    out = []
    for v in range(forest.n):
        if variant == "D" and not desc[v]:
            continue
        if w[v] > 0 and all(w[v] > abs(w[u]) for u in desc[v]):
            out.append(v + 1)
    return tuple(out)


def parent_label(forest: Forest, w: Sequence[int], v: int) -> int:
    """Label of the parent of 0-based vertex v; n+1 at a root."""
    p = forest.parent0[v]
    return w[p] if p >= 0 else forest.n + 1


def cyclic_count(forest: Forest, w: Sequence[int], v: int) -> int:
    """Labels below v that break the cyclic order started at the parent label.

    With a = w(v) and b the parent label: if a < b, count labels in [a, b];
    otherwise count labels outside [b, a].
    """
    a = w[v]
    b = parent_label(forest, w, v)
    if a < b:
        return sum(1 for u in forest.desc[v] if a <= w[u] <= b)
    return sum(1 for u in forest.desc[v] if not b <= w[u] <= a)


def cbtmax(forest: Forest, w: Sequence[int], variant: str = "A") -> tuple[int, ...]:
    """Cyclic bottom-to-top maximum positions (variant B also needs a positive label)."""
    if variant == "A":
        _require_unsigned(w, "Cbtmax")
        return tuple(v + 1 for v in range(forest.n) if cyclic_count(forest, w, v) == 0)
    if variant != "B":
        raise ValueError(f"unknown Cbtmax variant {variant!r}")
    return tuple(
        v + 1 for v in range(forest.n) if w[v] > 0 and cyclic_count(forest, w, v) == 0
    )


@dataclass(frozen=True)
class StatRecord:
    inv: int
    maj: int
    n1: int
    n2: int
    inv_B: int
    inv_D: Optional[int]
    maj_B: int
    fmaj: int
    rmaj: int
    p_pos: int
    Des: tuple[int, ...]
    Des_B: tuple[int, ...]
    Btmax: Optional[tuple[int, ...]]
    Btmax_B: tuple[int, ...]
    Btmax_D: Optional[tuple[int, ...]]
    Cbtmax: Optional[tuple[int, ...]]
    Cbtmax_B: tuple[int, ...]

    def to_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(self).items()}


def stat_record(forest: Forest, w: Sequence[int]) -> StatRecord:
    """Every statistic at once; entries outside their domain are None."""
    unsigned = is_unsigned(w)
    even = is_even_signed(w)
    des, mj = des_maj(forest, w)
    des_b, mb, pos = des_b_maj_b(forest, w)
    i = inv(forest, w)
    n1 = negative_count(w)
    n2 = n_two(forest, w)
    return StatRecord(
        inv=i,
        maj=mj,
        n1=n1,
        n2=n2,
        inv_B=i + n1 + n2,
        inv_D=i + n2 if even else None,
        maj_B=mb,
        fmaj=2 * mj + n1,
        rmaj=2 * mb - pos,
        p_pos=pos,
        Des=des,
        Des_B=des_b,
        Btmax=btmax(forest, w, "A") if unsigned else None,
        Btmax_B=btmax(forest, w, "B"),
        Btmax_D=btmax(forest, w, "D") if even else None,
        Cbtmax=cbtmax(forest, w, "A") if unsigned else None,
        Cbtmax_B=cbtmax(forest, w, "B"),
    )
