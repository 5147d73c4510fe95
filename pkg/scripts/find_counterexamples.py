"""Search for the three negative results and print each witness.

For the two joint-distribution targets the script also prints both collapsed
polynomials on the witnessing forest, so the difference can be read off.
"""

import argparse
from dataclasses import dataclass

from forestats import harness
from forestats.forest import parse_forest
from forestats.genfun import pair_distribution
from forestats.labelings import ExhaustionBounds

PAIRS = {
    "maj_btmax_vs_inv_btmax": ("maj_btmax", "inv_btmax"),
    "fmaj_cbtmaxb_vs_invb_btmaxb": ("fmaj_cbtmaxb", "invb_btmaxb"),
}


@dataclass
class SearchConfig:
    max_n: int = 5
    paths_only: bool = False


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=SearchConfig.max_n)
    ap.add_argument("--paths-only", action="store_true")
    args = ap.parse_args()
    cfg = SearchConfig(args.max_n, args.paths_only)
    bounds = ExhaustionBounds(unsigned=max(cfg.max_n, 7), signed=cfg.max_n)

    for target in harness.TARGETS:
        r = harness.counterexample(target, cfg.max_n, cfg.paths_only, bounds)
        print(f"{target}: {r.status} forest={r.forest or '-'} witness={r.witness} ({r.seconds:.2f}s)")
        if r.status == "counterexample_found" and target in PAIRS:
            f = parse_forest(r.forest)
            for pair in PAIRS[target]:
                print(f"    {pair:14s} {pair_distribution(f, pair, bounds).collapse_t().to_text()}")


if __name__ == "__main__":
    main()
