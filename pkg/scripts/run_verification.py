"""Run every identity on all forests up to a size and write a flat JSON report.

    python scripts/run_verification.py --max-n 5 --out reports/verify_n5.json
"""

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path

from forestats import harness
from forestats.labelings import ExhaustionBounds


@dataclass
class VerifyConfig:
    max_n: int = 5
    unsigned_bound: int = 5
    signed_bound: int = 5
    out: str = "reports/verify.json"


def main():
    cfg = VerifyConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(cfg).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(default), default=default)
    cfg = VerifyConfig(**vars(ap.parse_args()))

    ctx = harness.Context(bounds=ExhaustionBounds(cfg.unsigned_bound, cfg.signed_bound))
    t0 = time.perf_counter()
    reports = harness.verify(cfg.max_n, ctx=ctx)
    elapsed = time.perf_counter() - t0

    by_identity = Counter((r.identity, r.status) for r in reports)
    for (name, status), k in sorted(by_identity.items()):
        print(f"{name:22s} {status:9s} {k}")
    failed = [r for r in reports if r.status == "failed"]
    print(f"{len(reports)} reports, {len(failed)} failed, {elapsed:.1f}s")

    out = Path(cfg.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"config": asdict(cfg), "reports": [r.to_dict() for r in reports]}, indent=1, sort_keys=True))
    print(f"wrote {out}")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
