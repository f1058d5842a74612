"""Run every check on seeded instances and write one CSV row per instance.

    python scripts/sweep.py --seeds 20 --out results/sweep.csv
"""

import argparse
import csv
import os
import time
from dataclasses import replace

from bigradedsyz.cli import run_verify
from bigradedsyz.config import SweepConfig
from bigradedsyz.instances import gen_instance


def main():
    cfg = SweepConfig()
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=len(cfg.seeds))
    ap.add_argument("--bound", type=int, default=cfg.bound)
    ap.add_argument("--out", default=cfg.out)
    args = ap.parse_args()
    cfg = replace(cfg, seeds=tuple(range(1, args.seeds + 1)), bound=args.bound, out=args.out)

    os.makedirs(os.path.dirname(cfg.out) or ".", exist_ok=True)
    with open(cfg.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["class", "seed", "computed_class", "resultant", "verdict", "first_failure", "seconds"])
        for cls in cfg.classes:
            for seed in cfg.seeds:
                p = gen_instance(cls, seed, cfg.bound)
                t0 = time.perf_counter()
                rep = run_verify(p, cfg.box, seed)
                dt = time.perf_counter() - t0
                fail = next((c["name"] for c in rep.checks if not c["ok"]), "")
                w.writerow([cls, seed, rep.data["class"], rep.data["resultant"], rep.verdict, fail, f"{dt:.3f}"])
                print(f"{cls:10s} seed {seed:3d}: {rep.verdict} ({dt:.2f}s)")
    print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
