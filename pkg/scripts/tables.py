"""Write predicted-vs-computed dimension tables and syzygy pictures for the fixtures."""

import os

from bigradedsyz.cli import picture_grid
from bigradedsyz.config import TableConfig
from bigradedsyz.hilbert import CSV_HEADER, dim_table
from bigradedsyz.instances import FIXTURES


def main(cfg: TableConfig = TableConfig()):
    os.makedirs(cfg.outdir, exist_ok=True)
    for name in cfg.fixtures:
        p = FIXTURES[name]()
        t = dim_table(p, cfg.box)
        path = os.path.join(cfg.outdir, f"{name}.csv")
        with open(path, "w") as fh:
            fh.write(CSV_HEADER + "\n")
            for row in t.csv_rows():
                fh.write(",".join(map(str, row)) + "\n")
        print(f"{name}: class {t.cls}, mismatches {len(t.mismatches())} -> {path}")
        print("\n".join(picture_grid(p, cfg.box)))


if __name__ == "__main__":
    main()
