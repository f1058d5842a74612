"""Dataclass configurations shared by the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SweepConfig:
    seeds: tuple = tuple(range(1, 21))
    classes: tuple = ("generic", "nongeneric")
    bound: int = 5
    box: tuple = (9, 6)
    out: str = "results/sweep.csv"


@dataclass(frozen=True)
class LocusScanConfig:
    a_range: tuple = (-6, 6)
    b_range: tuple = (-4, 4)
    c_range: tuple = (-4, 4)
    out: str = "results/locus_scan.csv"


@dataclass(frozen=True)
class TableConfig:
    box: tuple = (9, 6)
    fixtures: tuple = field(default=("monomial_ng", "generic", "three_point_ng"))
    outdir: str = "results/tables"
