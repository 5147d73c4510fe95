"""Exhaustive verification of the equidistribution identities and searches
for the negative results.

Every identity is a function ``check(forest, ctx) -> witness | None``; a
``None`` result means the identity held on the whole labeling class.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional

from . import codes, genfun, signed_perm
from .forest import (
    Forest,
    enumerate_forests,
    enumerate_forests_upto,
    enumerate_natural_labelings,
    is_natural,
    natural_labeling_count,
    path_forest,
)
from .genfun import MultiPoly, poly_equal
from .labelings import DEFAULT_BOUNDS, ExhaustionBounds, enumerate_labelings, is_unsigned, negative_count

STATUSES = ("verified", "failed", "counterexample_found", "none_found")


@dataclass
class Report:
    identity: str
    forest: str
    status: str
    witness: Optional[dict] = None
    seconds: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        d = {"identity": self.identity, "forest": self.forest, "status": self.status, "witness": self.witness}
        if timing:
            d["seconds"] = round(self.seconds, 6)
        return d


@dataclass
class Context:
    bounds: ExhaustionBounds = DEFAULT_BOUNDS
    registry: Mapping[str, Callable] = field(default_factory=dict)

    def stat(self, name: str) -> Callable:
        if name in self.registry:
            return self.registry[name]
        if name in genfun.SCALAR_STATS:
            return genfun.SCALAR_STATS[name]
        return genfun.SET_STATS[name]


@dataclass(frozen=True)
class Identity:
    name: str
    cls: str
    check: Callable[[Forest, Context], Optional[dict]]
    paths_only: bool = False

    def applies(self, forest: Forest) -> bool:
        return forest.is_path() if self.paths_only else True


# --- distribution identities -------------------------------------------------


def _labeling_for(forest, exponent, pair, ctx):
    cls, stat, set_stat, with_p = genfun.PAIRS[pair]
    for w in enumerate_labelings(forest, cls, ctx.bounds):
        if genfun.term_exponent(forest, w, stat, set_stat, with_p, ctx.registry) == exponent:
            return list(w)
    return None


def _compare(forest, pair, expected: MultiPoly, ctx) -> Optional[dict]:
    got = genfun.pair_distribution(forest, pair, ctx.bounds, ctx.registry)
    ok, exp = poly_equal(got, expected)
    if ok:
        return None
    # report a labeling from an over-represented exponent, which always exists
    # when the totals agree; otherwise fall back to the smallest difference
    excess = [e for e, c in (got - expected).items() if c > 0]
    if excess:
        exp = excess[0]
    return {
        "exponent": list(exp),
        "enumerated": got.coefficient(exp),
        "formula": expected.coefficient(exp),
        "labeling": _labeling_for(forest, exp, pair, ctx),
    }


def _dist_identity(name, pair, family):
    cls = genfun.PAIRS[pair][0]
    return Identity(name, cls, lambda f, ctx: _compare(f, pair, genfun.product_formula(f, family), ctx))


def _check_specialization(forest, ctx):
    full = genfun.product_formula(forest, "inv_signed_p")
    for p, family in ((0, "inv_unsigned"), (1, "inv_signed")):
        ok, exp = poly_equal(full.subs(p=p), genfun.product_formula(forest, family))
        if not ok:
            return {"p": p, "exponent": list(exp)}
    return None


# --- pointwise lemmas -----------------------------------------------------------


def _zeros(code):
    return tuple(i + 1 for i, c in enumerate(code) if c == 0)


def _check_acode(forest, ctx):
    for w in enumerate_labelings(forest, "signed", ctx.bounds):
        a = codes.a_code(forest, w)
        if sum(a) != ctx.stat("inv_b")(forest, w):
            return {"labeling": list(w), "detail": "sum of A-code != inv_B"}
        if _zeros(a) != tuple(ctx.stat("btmax_b")(forest, w)):
            return {"labeling": list(w), "detail": "A-code zeros != Btmax_B"}
        if any((a[i] >= forest.h[i]) != (w[i] < 0) for i in range(forest.n)):
            return {"labeling": list(w), "detail": "a_i >= h_i does not match negative labels"}
    return None


def _check_bcode(forest, ctx):
    for w in enumerate_labelings(forest, "signed", ctx.bounds):
        res = codes.sort_forest(forest, w, trace=False)
        b = res.bcode
        if not codes.in_code_space(forest, b, "B"):
            return {"labeling": list(w), "detail": "B-code outside SE_F^B"}
        if not is_natural(forest, res.w_sorted):
            return {"labeling": list(w), "detail": "sorted labeling is not natural"}
        if sum(b) != ctx.stat("sor_b")(forest, w):
            return {"labeling": list(w), "detail": "sum of B-code != sor_B"}
        if _zeros(b) != tuple(ctx.stat("cyc_b")(forest, w)):
            return {"labeling": list(w), "detail": "B-code zeros != Cyc_B"}
        if codes.in_code_space(forest, b, "A") != is_unsigned(w):
            return {"labeling": list(w), "detail": "b_i < h_i for all i does not match unsignedness"}
    return None


def _check_mcode(forest, ctx):
    for w in enumerate_labelings(forest, "unsigned", ctx.bounds):
        m = codes.m_code(forest, w)
        if not codes.in_code_space(forest, m, "A"):
            return {"labeling": list(w), "detail": "M-code outside SE_F"}
        if sum(m) != ctx.stat("maj")(forest, w):
            return {"labeling": list(w), "detail": "sum of M-code != maj"}
        if _zeros(m) != tuple(ctx.stat("cbtmax")(forest, w)):
            return {"labeling": list(w), "detail": "M-code zeros != Cbtmax"}
    return None


def _check_signed_mcode(forest, ctx):
    for w in enumerate_labelings(forest, "signed", ctx.bounds):
        m = codes.m_code_signed(forest, w)
        if not codes.in_code_space(forest, m, "B"):
            return {"labeling": list(w), "detail": "signed M-code outside SE_F^B"}
        if sum(m) != ctx.stat("fmaj")(forest, w):
            return {"labeling": list(w), "detail": "sum of signed M-code != fmaj"}
        if _zeros(m) != tuple(ctx.stat("cbtmax_b")(forest, w)):
            return {"labeling": list(w), "detail": "signed M-code zeros != Cbtmax_B"}
    return None


# --- bijections -----------------------------------------------------------------


def _check_bijection(forest, ctx, fwd, inv, cls, kind):
    """Round trips both ways plus fiber sizes of the code component."""
    images = set()
    fibers = Counter()
    for w in enumerate_labelings(forest, cls, ctx.bounds):
        w_nat, code = fwd(forest, w)
        if not is_natural(forest, w_nat) or not codes.in_code_space(forest, code, kind):
            return {"labeling": list(w), "detail": "image outside naturals x code space"}
        if cls == "signed" and is_unsigned(w) and not codes.in_code_space(forest, code, "A"):
            return {"labeling": list(w), "detail": "unsigned labeling left SE_F"}
        if inv(forest, w_nat, code) != w:
            return {"labeling": list(w), "detail": "inverse(forward(w)) != w"}
        images.add((w_nat, code))
        fibers[code] += 1
    if len(images) != sum(fibers.values()):
        return {"detail": "forward map is not injective", "image_size": len(images)}
    naturals = list(enumerate_natural_labelings(forest))
    expected = natural_labeling_count(forest)
    for code in codes.code_space(forest, kind):
        if fibers[code] != expected:
            return {"code": list(code), "count": fibers[code], "expected": expected}
        for w_nat in naturals:
            back = inv(forest, w_nat, code)
            if fwd(forest, back) != (w_nat, code):
                return {"natural": list(w_nat), "code": list(code), "detail": "forward(inverse(x)) != x"}
    return None


def _check_phi(forest, ctx):
    return _check_bijection(forest, ctx, codes.phi, codes.phi_inv, "signed", "B")


def _check_psi(forest, ctx):
    return _check_bijection(forest, ctx, codes.psi, codes.psi_inv, "signed", "B")


def _check_theta(forest, ctx):
    return _check_bijection(forest, ctx, codes.theta, codes.theta_inv, "unsigned", "A")


def _check_inv_to_maj(forest, ctx):
    seen = set()
    for w in enumerate_labelings(forest, "unsigned", ctx.bounds):
        r = codes.inv_to_maj_map(forest, w)
        if ctx.stat("maj")(forest, r) != ctx.stat("inv")(forest, w):
            return {"labeling": list(w), "image": list(r), "detail": "maj(image) != inv(w)"}
        if tuple(ctx.stat("cbtmax")(forest, r)) != tuple(ctx.stat("btmax")(forest, w)):
            return {"labeling": list(w), "image": list(r), "detail": "Cbtmax(image) != Btmax(w)"}
        seen.add(r)
    if len(seen) != math.factorial(forest.n):
        return {"detail": "map is not injective", "image_size": len(seen)}
    return None


# --- linear tree and permutation identities ---------------------------------------


def _check_bridge(forest, ctx):
    """Forest statistics on a path versus permutation statistics of sigma^{-1}."""
    for w in enumerate_labelings(forest, "signed", ctx.bounds):
        sigma = signed_perm.read_word(forest, w)
        tau = signed_perm.inverse(sigma)
        checks = [
            ("inv_B", ctx.stat("inv_b")(forest, w), signed_perm.length(sigma, "B")),
            ("sor_B", ctx.stat("sor_b")(forest, w), signed_perm.ssort_sor(tau, "B")),
            ("Btmax_B", set(ctx.stat("btmax_b")(forest, w)), set(signed_perm.rlmin(tau, "B"))),
            ("Cyc_B", set(ctx.stat("cyc_b")(forest, w)), set(signed_perm.cyc_min(tau, "B"))),
            ("Cyc_B inverse", set(signed_perm.cyc_min(sigma, "B")), set(signed_perm.cyc_min(tau, "B"))),
        ]
        if is_unsigned(w):
            checks += [
                ("inv", ctx.stat("inv")(forest, w), signed_perm.length(sigma, "A")),
                ("sor", ctx.stat("sor")(forest, w), signed_perm.ssort_sor(tau, "A")),
                ("Btmax", set(ctx.stat("btmax")(forest, w)), set(signed_perm.rlmin(tau, "A"))),
                ("Cyc", set(ctx.stat("cyc")(forest, w)), set(signed_perm.cyc_min(tau, "A"))),
            ]
        if negative_count(w) % 2 == 0:
            checks += [
                ("inv_D", ctx.stat("inv_d")(forest, w), signed_perm.length(sigma, "D")),
                ("Btmax_D", set(ctx.stat("btmax_d")(forest, w)), set(signed_perm.rlmin(tau, "D"))),
            ]
        for name, left, right in checks:
            if left != right:
                return {"labeling": list(w), "detail": f"{name}: forest {sorted(left) if isinstance(left, set) else left} != permutation {sorted(right) if isinstance(right, set) else right}"}
    return None


def permutation_distribution(n: int, kind: str, stat: Callable, letters: Callable) -> MultiPoly:
    """Sum over S_n / B_n / D_n of q^stat prod_{i in letters} t_i."""
    acc = Counter()
    for sigma in signed_perm.enumerate_group(n, kind):
        exp = [stat(sigma), 0] + [0] * n
        for i in letters(sigma):
            exp[i + 1] = 1
        acc[tuple(exp)] += 1
    return MultiPoly(acc, n)


PERMUTATION_IDENTITIES = {
    "perm_inv_rlmin": ("A", lambda s: signed_perm.length(s, "A"), lambda s: signed_perm.rlmin(s, "A"), "inv_unsigned"),
    "perm_invb_rlminb": ("B", lambda s: signed_perm.length(s, "B"), lambda s: signed_perm.rlmin(s, "B"), "inv_signed"),
    "perm_invd_rlmind": ("D", lambda s: signed_perm.length(s, "D"), lambda s: signed_perm.rlmin(s, "D"), "inv_even"),
    "perm_sor_cyc": ("A", lambda s: signed_perm.ssort_sor(s, "A"), lambda s: signed_perm.cyc_min(s, "A"), "inv_unsigned"),
    "perm_sorb_cycb": ("B", lambda s: signed_perm.ssort_sor(s, "B"), lambda s: signed_perm.cyc_min(s, "B"), "inv_signed"),
}


def _check_perm_formulas(forest, ctx):
    n = forest.n
    for name, (kind, stat, letters, family) in PERMUTATION_IDENTITIES.items():
        cls = "unsigned" if kind == "A" else "signed"
        if n > ctx.bounds.limit(cls):
            continue
        got = permutation_distribution(n, kind, stat, letters)
        ok, exp = poly_equal(got, genfun.product_formula(forest, family))
        if not ok:
            return {"identity": name, "exponent": list(exp)}
    # Stirling: t^{cyc} and t^{rlmin} both give prod (t + k)
    t = MultiPoly({(0, 0, 1): 1}, 1)
    expected = MultiPoly.const(1, 1)
    for k in range(n):
        expected = expected * (t + k)
    for name, letters in (("cyc", lambda s: signed_perm.cyc_min(s, "A")), ("rlmin", lambda s: signed_perm.rlmin(s, "A"))):
        got = permutation_distribution(n, "A", lambda s: 0, letters).collapse_t()
        ok, exp = poly_equal(got, expected)
        if not ok:
            return {"identity": f"stirling_{name}", "exponent": list(exp)}
    return None


IDENTITIES: dict[str, Identity] = {
    i.name: i
    for i in [
        _dist_identity("inv_btmax", "inv_btmax", "inv_unsigned"),
        _dist_identity("sor_cyc", "sor_cyc", "inv_unsigned"),
        _dist_identity("maj_cbtmax", "maj_cbtmax", "inv_unsigned"),
        _dist_identity("invb_btmaxb_p", "invb_btmaxb_p", "inv_signed_p"),
        _dist_identity("invb_btmaxb", "invb_btmaxb", "inv_signed"),
        _dist_identity("sorb_cycb", "sorb_cycb", "inv_signed"),
        _dist_identity("invd_btmaxd", "invd_btmaxd", "inv_even"),
        _dist_identity("mahonian_inv", "inv", "mahonian"),
        _dist_identity("mahonian_maj", "maj", "mahonian"),
        _dist_identity("mahonian_invb_p", "inv_b_p", "mahonian_signed_p"),
        _dist_identity("mahonian_invb", "inv_b", "mahonian_signed"),
        _dist_identity("mahonian_fmaj", "fmaj", "mahonian_signed"),
        _dist_identity("mahonian_rmaj", "rmaj", "mahonian_signed"),
        Identity("specialization", "unsigned", _check_specialization),
        Identity("acode_lemma", "signed", _check_acode),
        Identity("bcode_lemma", "signed", _check_bcode),
        Identity("mcode_theorem", "unsigned", _check_mcode),
        Identity("signed_mcode_theorem", "signed", _check_signed_mcode),
        Identity("phi_bijection", "signed", _check_phi),
        Identity("psi_bijection", "signed", _check_psi),
        Identity("theta_bijection", "unsigned", _check_theta),
        Identity("inv_to_maj", "unsigned", _check_inv_to_maj),
        Identity("linear_tree_bridge", "signed", _check_bridge, paths_only=True),
        Identity("permutation_formulas", "signed", _check_perm_formulas, paths_only=True),
    ]
}


def run_identity(identity: Identity, forest: Forest, ctx: Context) -> Report:
    t0 = time.perf_counter()
    witness = identity.check(forest, ctx)
    status = "verified" if witness is None else "failed"
    return Report(identity.name, str(forest), status, witness, time.perf_counter() - t0)


def verify(
    max_n: int,
    classes: Optional[Iterable[str]] = None,
    identities: Optional[Iterable[str]] = None,
    ctx: Optional[Context] = None,
) -> list[Report]:
    """One report per (forest, applicable identity).

    Forests run up to max_n; identities over signed or even-signed labelings
    skip forests beyond the signed exhaustion bound.
    """
    ctx = ctx or Context()
    names = list(identities) if identities else list(IDENTITIES)
    unknown = [n for n in names if n not in IDENTITIES]
    if unknown:
        raise KeyError(f"unknown identities {unknown}; known: {sorted(IDENTITIES)}")
    selected = [IDENTITIES[n] for n in names]
    if classes:
        wanted = {c.replace("-", "_") for c in classes}
        selected = [i for i in selected if i.cls in wanted]
    reports = []
    for forest in enumerate_forests_upto(max_n):
        for ident in selected:
            if not ident.applies(forest) or forest.n > ctx.bounds.limit(ident.cls):
                continue
            reports.append(run_identity(ident, forest, ctx))
    return reports


# --- negative results --------------------------------------------------------------

TARGETS = ("maj_btmax_vs_inv_btmax", "fmaj_cbtmaxb_vs_invb_btmaxb", "signed_mcode_not_onto")


def _forests(max_n, paths_only):
    for n in range(1, max_n + 1):
        if paths_only:
            yield path_forest(n)
        else:
            yield from enumerate_forests(n)


def _joint_mismatch(forest, left, right, bounds):
    a = genfun.pair_distribution(forest, left, bounds).collapse_t()
    b = genfun.pair_distribution(forest, right, bounds).collapse_t()
    ok, exp = poly_equal(a, b)
    if ok:
        return None
    return {
        "exponent": {"q": exp[0], "t": exp[2]},
        left: a.coefficient(exp),
        right: b.coefficient(exp),
    }


def unattained_signed_mcode(forest: Forest, bounds=DEFAULT_BOUNDS) -> Optional[tuple[int, ...]]:
    """Smallest sequence of SE_F^B that no signed labeling has as signed M-code."""
    image = {codes.m_code_signed(forest, w) for w in enumerate_labelings(forest, "signed", bounds)}
    for code in codes.code_space(forest, "B"):
        if code not in image:
            return code
    return None


def counterexample(
    target: str, max_n: int, paths_only: bool = False, bounds: ExhaustionBounds = DEFAULT_BOUNDS
) -> Report:
    """Smallest forest (in enumeration order) witnessing the target claim."""
    if target not in TARGETS:
        raise KeyError(f"unknown target {target!r}; expected one of {TARGETS}")
    cls = "unsigned" if target == "maj_btmax_vs_inv_btmax" else "signed"
    limit = min(max_n, bounds.limit(cls))
    t0 = time.perf_counter()
    for forest in _forests(limit, paths_only):
        if target == "maj_btmax_vs_inv_btmax":
            witness = _joint_mismatch(forest, "maj_btmax", "inv_btmax", bounds)
        elif target == "fmaj_cbtmaxb_vs_invb_btmaxb":
            witness = _joint_mismatch(forest, "fmaj_cbtmaxb", "invb_btmaxb", bounds)
        else:
            code = unattained_signed_mcode(forest, bounds)
            witness = None if code is None else {"sequence": list(code)}
        if witness is not None:
            return Report(target, str(forest), "counterexample_found", witness, time.perf_counter() - t0)
    return Report(target, "", "none_found", {"searched_up_to": limit, "paths_only": paths_only}, time.perf_counter() - t0)
