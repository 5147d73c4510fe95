"""Tabulate enumerated distributions against the product formulas.

One row per forest: whether each pair matches its closed form, and the
closed form itself.
"""

import argparse
from dataclasses import dataclass, field

from forestats.forest import enumerate_forests_upto
from forestats.genfun import pair_distribution, product_formula
from forestats.labelings import ExhaustionBounds


@dataclass
class TableConfig:
    max_n: int = 4
    family: str = "inv_unsigned"
    pairs: list = field(default_factory=lambda: ["inv_btmax", "sor_cyc", "maj_cbtmax"])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=TableConfig.max_n)
    ap.add_argument("--family", default=TableConfig.family)
    ap.add_argument("--pair", action="append", dest="pairs")
    args = ap.parse_args()
    cfg = TableConfig(args.max_n, args.family, args.pairs or TableConfig().pairs)
    bounds = ExhaustionBounds(unsigned=7, signed=5)

    for f in enumerate_forests_upto(cfg.max_n):
        formula = product_formula(f, cfg.family)
        marks = " ".join(f"{p}={'ok' if pair_distribution(f, p, bounds) == formula else 'DIFF'}" for p in cfg.pairs)
        print(f"{str(f):12s} {marks}  {formula.to_text()}")


if __name__ == "__main__":
    main()
