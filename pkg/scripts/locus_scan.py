"""Classify the three-point family over a parameter grid.

Compares the computed class with two candidate loci, A = BC+B+C-1 and
A = BC+C-1, and prints how often each predicts the class correctly.
"""

import argparse
import csv
import os
from dataclasses import replace

from bigradedsyz.classify import classify, three_point_product
from bigradedsyz.config import LocusScanConfig
from bigradedsyz.hilbert import InstanceClass
from bigradedsyz.instances import three_point

CANDIDATES = {
    "A=BC+B+C-1": lambda A, B, C: A == B * C + B + C - 1,
    "A=BC+C-1": lambda A, B, C: A == B * C + C - 1,
}


def main():
    cfg = LocusScanConfig()
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=cfg.out)
    cfg = replace(cfg, out=ap.parse_args().out)

    hits = {k: 0 for k in CANDIDATES}
    total = 0
    os.makedirs(os.path.dirname(cfg.out) or ".", exist_ok=True)
    with open(cfg.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["A", "B", "C", "class"] + list(CANDIDATES))
        for A in range(cfg.a_range[0], cfg.a_range[1] + 1):
            for B in range(cfg.b_range[0], cfg.b_range[1] + 1):
                for C in range(cfg.c_range[0], cfg.c_range[1] + 1):
                    if three_point_product(A, B, C) == 0:
                        continue
                    cls = classify(three_point(A, B, C))
                    ng = cls is InstanceClass.NonGeneric
                    preds = [f(A, B, C) for f in CANDIDATES.values()]
                    for k, pr in zip(CANDIDATES, preds):
                        hits[k] += pr == ng
                    total += 1
                    w.writerow([A, B, C, cls] + [int(p) for p in preds])
    for k, h in hits.items():
        print(f"{k:12s} predicts the class correctly at {h}/{total} admissible points")
    print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
