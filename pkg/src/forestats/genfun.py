"""Sparse integer polynomials in q, p, t_1..t_n, distributions and closed forms.

Exponent vectors are tuples ``(q, p, t_1, ..., t_nt)``.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Callable, Iterable, Mapping, Optional, Sequence

from . import codes, statistics
from .forest import Forest, natural_labeling_count
from .labelings import (
    DEFAULT_BOUNDS,
    ExhaustionBounds,
    enumerate_labelings,
    negative_count,
    normalize_class,
)


class MultiPoly:
    __slots__ = ("nt", "_terms")

    def __init__(self, terms: Optional[Mapping[tuple, int]] = None, nt: int = 0):
        self.nt = nt
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nt + 2:
                raise ValueError(f"exponent {exp} does not match {nt} t-variables")
            if c:
                clean[exp] = c
        self._terms = clean

    # constructors
    @classmethod
    def const(cls, c: int, nt: int = 0) -> "MultiPoly":
        return cls({(0,) * (nt + 2): c}, nt)

    @classmethod
    def q(cls, nt: int = 0, k: int = 1) -> "MultiPoly":
        return cls({(k,) + (0,) * (nt + 1): 1}, nt)

    @classmethod
    def p(cls, nt: int = 0, k: int = 1) -> "MultiPoly":
        return cls({(0, k) + (0,) * nt: 1}, nt)

    @classmethod
    def t(cls, v: int, nt: int) -> "MultiPoly":
        """t_v, 1-based."""
        exp = [0] * (nt + 2)
        exp[v + 1] = 1
        return cls({tuple(exp): 1}, nt)

    # access
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def items(self):
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nt != self.nt:
                raise ValueError(f"mixing polynomials with {self.nt} and {other.nt} t-variables")
            return other
        if isinstance(other, int):
            return MultiPoly.const(other, self.nt)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = Counter(self._terms)
        for e, c in other._terms.items():
            out[e] += c
        return MultiPoly(out, self.nt)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self._terms.items()}, self.nt)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = Counter()
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MultiPoly(out, self.nt)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(1, self.nt)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.nt)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nt == other.nt and self._terms == other._terms

    def __hash__(self):
        return hash((self.nt, frozenset(self._terms.items())))

    # substitution
    def subs(self, q: Optional[int] = None, p: Optional[int] = None, t: Optional[Mapping[int, int]] = None):
        """Substitute integers for q, p and/or some t_v (1-based keys).

        Substituted variables keep their slot with exponent 0.
        """
        t = t or {}
        out = Counter()
        for e, c in self._terms.items():
            e = list(e)
            if q is not None:
                c *= q ** e[0]
                e[0] = 0
            if p is not None:
                c *= p ** e[1]
                e[1] = 0
            for v, val in t.items():
                c *= val ** e[v + 1]
                e[v + 1] = 0
            out[tuple(e)] += c
        return MultiPoly(out, self.nt)

    def evaluate(self, q: int = 1, p: int = 1, t: int = 1) -> int:
        return sum(c * q ** e[0] * p ** e[1] * t ** sum(e[2:]) for e, c in self._terms.items())

    def collapse_t(self) -> "MultiPoly":
        """Send every t_v to one variable t (the set statistic becomes a count)."""
        out = Counter()
        for e, c in self._terms.items():
            out[(e[0], e[1], sum(e[2:]))] += c
        return MultiPoly(out, 1)

    def p_even_part(self) -> "MultiPoly":
        return MultiPoly({e: c for e, c in self._terms.items() if e[1] % 2 == 0}, self.nt)

    # serialization
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            factors = []
            for name, k in (("q", e[0]), ("p", e[1])):
                if k:
                    factors.append(name if k == 1 else f"{name}^{k}")
            for v, k in enumerate(e[2:], start=1):
                if k:
                    factors.append(f"t{v}" if k == 1 else f"t{v}^{k}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list:
        return [{"coeff": c, "q": e[0], "p": e[1], "t": list(e[2:])} for e, c in self.items()]

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r}, nt={self.nt})"


def q_int(k: int, nt: int = 0) -> MultiPoly:
    """[k] = 1 + q + ... + q^{k-1}."""
    if k < 1:
        raise ValueError("q-integer needs k >= 1")
    return MultiPoly({(j,) + (0,) * (nt + 1): 1 for j in range(k)}, nt)


def poly_equal(a: MultiPoly, b: MultiPoly) -> tuple[bool, Optional[tuple]]:
    """Exact comparison; on mismatch also the smallest differing exponent vector."""
    if a.nt != b.nt:
        return False, None
    diff = (a - b).items()
    if not diff:
        return True, None
    return False, diff[0][0]


# --- distributions ---------------------------------------------------------

SCALAR_STATS: dict[str, Callable] = {
    "inv": statistics.inv,
    "maj": statistics.maj,
    "inv_b": statistics.inv_b,
    "inv_d": statistics.inv_d,
    "maj_b": statistics.maj_b,
    "fmaj": statistics.fmaj,
    "rmaj": statistics.rmaj,
    "sor": codes.sor,
    "sor_b": codes.sor_b,
}

SET_STATS: dict[str, Callable] = {
    "btmax": lambda f, w: statistics.btmax(f, w, "A"),
    "btmax_b": lambda f, w: statistics.btmax(f, w, "B"),
    "btmax_d": lambda f, w: statistics.btmax(f, w, "D"),
    "cbtmax": lambda f, w: statistics.cbtmax(f, w, "A"),
    "cbtmax_b": lambda f, w: statistics.cbtmax(f, w, "B"),
    "cyc": lambda f, w: codes.cyc_vertices(f, w, "A"),
    "cyc_b": lambda f, w: codes.cyc_vertices(f, w, "B"),
}

# name -> (labeling class, scalar stat, set stat, track p^{n1})
PAIRS: dict[str, tuple[str, str, Optional[str], bool]] = {
    "inv_btmax": ("unsigned", "inv", "btmax", False),
    "sor_cyc": ("unsigned", "sor", "cyc", False),
    "maj_cbtmax": ("unsigned", "maj", "cbtmax", False),
    "maj_btmax": ("unsigned", "maj", "btmax", False),
    "invb_btmaxb": ("signed", "inv_b", "btmax_b", False),
    "invb_btmaxb_p": ("signed", "inv_b", "btmax_b", True),
    "sorb_cycb": ("signed", "sor_b", "cyc_b", False),
    "fmaj_cbtmaxb": ("signed", "fmaj", "cbtmax_b", False),
    "invd_btmaxd": ("even_signed", "inv_d", "btmax_d", False),
    "inv": ("unsigned", "inv", None, False),
    "maj": ("unsigned", "maj", None, False),
    "inv_b": ("signed", "inv_b", None, False),
    "inv_b_p": ("signed", "inv_b", None, True),
    "fmaj": ("signed", "fmaj", None, False),
    "rmaj": ("signed", "rmaj", None, False),
}


def term_exponent(forest: Forest, w, stat, set_stat=None, with_p=False, registry=None) -> tuple:
    """Exponent vector contributed by a single labeling."""
    scalars = {**SCALAR_STATS, **(registry or {})}
    sets = {**SET_STATS, **(registry or {})}
    exp = [scalars[stat](forest, w), negative_count(w) if with_p else 0] + [0] * forest.n
    if set_stat is not None:
        for v in sets[set_stat](forest, w):
            exp[v + 1] = 1
    return tuple(exp)


def distribution(
    forest: Forest,
    cls: str,
    stat: str,
    set_stat: Optional[str] = None,
    with_p: bool = False,
    bounds: Optional[ExhaustionBounds] = DEFAULT_BOUNDS,
    registry: Optional[Mapping[str, Callable]] = None,
) -> MultiPoly:
    """Sum over the labeling class of q^stat (p^{n1}) prod_{v in set} t_v.

    ``registry`` overrides entries of the statistic tables by name.
    """
    cls = normalize_class(cls)
    scalars = {**SCALAR_STATS, **(registry or {})}
    sets = {**SET_STATS, **(registry or {})}
    if stat not in scalars:
        raise KeyError(f"unknown statistic {stat!r}")
    if set_stat is not None and set_stat not in sets:
        raise KeyError(f"unknown set statistic {set_stat!r}")
    f_stat = scalars[stat]
    f_set = sets[set_stat] if set_stat else None
    n = forest.n
    acc = Counter()
    for w in enumerate_labelings(forest, cls, bounds):
        exp = [f_stat(forest, w), negative_count(w) if with_p else 0] + [0] * n
        if f_set is not None:
            for v in f_set(forest, w):
                exp[v + 1] = 1
        acc[tuple(exp)] += 1
    return MultiPoly(acc, n)


def pair_distribution(forest: Forest, pair: str, bounds=DEFAULT_BOUNDS, registry=None) -> MultiPoly:
    cls, stat, set_stat, with_p = PAIRS[pair]
    return distribution(forest, cls, stat, set_stat, with_p, bounds, registry)


# --- closed forms ----------------------------------------------------------

FAMILIES = (
    "mahonian",
    "mahonian_signed",
    "mahonian_signed_p",
    "mahonian_even",
    "inv_unsigned",
    "inv_signed",
    "inv_signed_p",
    "inv_even",
)


def _prod(factors: Iterable[MultiPoly], nt: int) -> MultiPoly:
    out = MultiPoly.const(1, nt)
    for f in factors:
        out = out * f
    return out


def _factor(family, h, v, nt):
    one = MultiPoly.const(1, nt)
    q, p = MultiPoly.q, MultiPoly.p
    if family == "mahonian":
        return q_int(h, nt)
    if family == "mahonian_signed":
        return q_int(2 * h, nt)
    if family == "mahonian_signed_p":
        return (one + p(nt) * q(nt, h)) * q_int(h, nt)
    if family == "inv_unsigned":
        return q_int(h, nt) - 1 + MultiPoly.t(v, nt)
    if family == "inv_signed":
        return q_int(2 * h, nt) - 1 + MultiPoly.t(v, nt)
    if family == "inv_signed_p":
        return (one + p(nt) * q(nt, h)) * q_int(h, nt) - 1 + MultiPoly.t(v, nt)
    raise ValueError(f"unknown family {family!r}")


def _even_by_averaging(forest: Forest, with_t: bool) -> MultiPoly:
    """Even-in-p part of D(p,q,t) at p=1.

    D = n!/prod h * prod ((1 + p q^{h-1})[h] - 1 + t_v) with t_v = 1 at
    leaves; the even part equals D(1)/2 because D(-1) = 0.
    """
    nt = forest.n
    one = MultiPoly.const(1, nt)
    d = MultiPoly.const(natural_labeling_count(forest), nt)
    for v, h in enumerate(forest.h, start=1):
        base = (one + MultiPoly.p(nt) * MultiPoly.q(nt, h - 1)) * q_int(h, nt) - 1
        if h == 1:
            base = base + 1
        elif with_t:
            base = base + MultiPoly.t(v, nt)
        else:
            base = base + 1
        d = d * base
    return d.p_even_part().subs(p=1)


def product_formula(forest: Forest, family: str) -> MultiPoly:
    """Closed form prefactor * product over vertices, as an expanded polynomial."""
    nt = forest.n
    if family == "inv_even":
        return _even_by_averaging(forest, with_t=True)
    if family == "mahonian_even":
        return _even_by_averaging(forest, with_t=False)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    pre = MultiPoly.const(natural_labeling_count(forest), nt)
    return pre * _prod((_factor(family, h, v, nt) for v, h in enumerate(forest.h, start=1)), nt)


def inv_even_closed_form(forest: Forest) -> MultiPoly:
    """n! 2^{leaves-1} / prod h * prod over non-leaves ((1+q^{h-1})[h] - 1 + t_v)."""
    nt = forest.n
    num = math.factorial(forest.n) * 2 ** (len(forest.leaves) - 1)
    pre, r = divmod(num, math.prod(forest.h))
    assert r == 0
    out = MultiPoly.const(pre, nt)
    one = MultiPoly.const(1, nt)
    for v, h in enumerate(forest.h, start=1):
        if h > 1:
            out = out * ((one + MultiPoly.q(nt, h - 1)) * q_int(h, nt) - 1 + MultiPoly.t(v, nt))
    return out
