"""Command-line interface: ``bigradedsyz <command> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .bipoly import InputTriple
from .classify import classify, resultant_21
from .errors import DegenerateInput, GenerationExhausted, ParseError
from .hilbert import CSV_HEADER, InstanceClass, dim_table, four_term_identity_holds
from .instances import format_instance, gen_instance, read_instance
from .resolution import build_resolution, verify_complex
from .syzygy import (
    b_torsion_check, check_generation, is_syzygy, min_generators, nonkoszul_dim, syz_dim,
    syzygies_33,
)

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_DEGENERATE, EXIT_EXHAUSTED = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    command: str
    verdict: str = "pass"
    data: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)  # (name, ok, where, detail)
    lines: list = field(default_factory=list)

    def check(self, name: str, ok: bool, where=None, detail: str = ""):
        self.checks.append({"name": name, "ok": bool(ok), "where": where, "detail": detail})
        if not ok:
            self.verdict = "fail"

    def to_json(self) -> str:
        out = asdict(self)
        out.pop("lines")
        return json.dumps(out, default=str, indent=2, sort_keys=True)


def parse_box(text: str):
    try:
        m, n = text.lower().split("x")
        m, n = int(m), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"box must look like 9x6, got {text!r}")
    if m < 0 or n < 0:
        raise argparse.ArgumentTypeError("box dimensions must be non-negative")
    return (m, n)


# ---------------------------------------------------------------------------
# commands


def _nondegenerate(p: InputTriple, report: RunReport) -> InstanceClass:
    cls = classify(p)
    report.data["class"] = str(cls)
    if cls is InstanceClass.Degenerate:
        raise DegenerateInput("the forms have a common zero on P1 x P1")
    return cls


def cmd_classify(p: InputTriple, args) -> RunReport:
    r = RunReport("classify")
    cls = classify(p)
    res = resultant_21(p).value
    r.data.update({"class": str(cls), "resultant": str(res)})
    r.lines += [f"class: {cls}", f"resultant: {res}"]
    if cls is InstanceClass.Degenerate:
        r.verdict = "degenerate"
    return r


def cmd_syzygies(p: InputTriple, args) -> RunReport:
    r = RunReport("syzygies")
    _nondegenerate(p, r)
    gens = min_generators(p)
    r.lines.append(f"class: {r.data['class']}")
    r.lines.append("minimal generators:")
    for label, g in zip(gens.labels, gens.gens):
        ok = is_syzygy(p, g)
        r.check(f"is_syzygy {label}", ok, tuple(g.deg))
        r.lines.append(f"  {g.deg} {label}: {g}  [{'ok' if ok else 'NOT A SYZYGY'}]")
    r.data["degrees"] = [str(d) for d in gens.degrees()]
    c1, c2 = syzygies_33(p)
    r.lines.append("(3,3) syzygies from the x,y splitting:")
    r.lines.append(f"  C1: {c1}")
    r.lines.append(f"  C2: {c2}")
    return r


def cmd_hilbert(p: InputTriple, args) -> RunReport:
    r = RunReport("hilbert")
    _nondegenerate(p, r)
    table = dim_table(p, args.box)
    rows = table.csv_rows()
    r.data["rows"] = rows
    if args.csv:
        r.lines.append(CSV_HEADER)
        r.lines += [",".join(str(v) for v in row) for row in rows]
    else:
        r.lines.append(f"class: {table.cls}")
        r.lines.append(f"{'m':>3} {'n':>3} {'syz_pred':>9} {'syz':>5} {'I_pred':>7} {'I':>5} {'e2_pred':>8} {'e2':>4}")
        for row in rows:
            mark = "" if row[2] == row[3] and row[4] == row[5] and row[6] == row[7] else "  <-- mismatch"
            r.lines.append("{:>3} {:>3} {:>9} {:>5} {:>7} {:>5} {:>8} {:>4}".format(*row) + mark)
    bad = table.mismatches()
    r.check("hilbert table", not bad, bad[0][0] if bad else None,
            f"{len(bad)} mismatching entries" if bad else "")
    if bad and not args.csv:
        r.lines.append(f"mismatches: {len(bad)} (first at {bad[0][0]}, column {bad[0][1]})")
    return r


PICTURE_LEGEND = [
    "legend: '.' no syzygies   '*' syzygies, all Koszul   '#' non-Koszul syzygies present",
]


def picture_grid(p: InputTriple, box) -> list[str]:
    M, N = box
    lines = []
    for n in range(N, -1, -1):
        cells = []
        for m in range(M + 1):
            if syz_dim(p, m, n) == 0:
                cells.append(".")
            elif nonkoszul_dim(p, m, n) > 0:
                cells.append("#")
            else:
                cells.append("*")
        lines.append(f"n={n:<2}| " + " ".join(cells))
    lines.append("    +" + "-" * (2 * (M + 1)))
    lines.append("  m = " + " ".join(str(m % 10) for m in range(M + 1)))
    return lines


def cmd_picture(p: InputTriple, args) -> RunReport:
    r = RunReport("picture")
    _nondegenerate(p, r)
    r.lines += picture_grid(p, args.box) + PICTURE_LEGEND
    return r


def cmd_resolution(p: InputTriple, args) -> RunReport:
    r = RunReport("resolution")
    _nondegenerate(p, r)
    cx = build_resolution(p, seed=args.seed or 0)
    r.lines.append(f"class: {r.data['class']}")
    r.lines.append("resolution of I (shift multisets by homological degree):")
    for i, shifts in enumerate(cx.ideal_shifts()):
        r.lines.append(f"  F{i}: " + " ".join(f"({a},{b})" for a, b in shifts))
    r.lines.append("total Betti ranks of R/I: " + " ".join(str(k) for k in cx.ranks()))
    r.data["shifts"] = cx.ideal_shifts()
    r.data["ranks"] = cx.ranks()
    if args.verify:
        rep = verify_complex(cx, p, args.box)
        for c in rep.checks:
            r.check(c.name, c.ok, c.where, c.detail)
        r.lines.append(f"verification over box {args.box[0]}x{args.box[1]}:")
        r.lines += ["  " + line for line in rep.lines()]
    return r


def resultant_scaling_ok(p: InputTriple, rng: random.Random, trials: int = 3):
    base = resultant_21(p).value
    for _ in range(trials):
        lam = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5)) for _ in range(3)]
        q = InputTriple(*(pi.scale(c) for pi, c in zip(p, lam)))
        if resultant_21(q).value != (lam[0] * lam[1] * lam[2]) ** 4 * base:
            return False, [str(c) for c in lam]
    return True, None


def run_verify(p: InputTriple, box, seed: int = 0) -> RunReport:
    r = RunReport("verify")
    ok, where = resultant_scaling_ok(p, random.Random(seed))
    r.check("resultant scaling", ok, where)
    cls = classify(p)
    r.data["class"] = str(cls)
    r.data["resultant"] = str(resultant_21(p).value)
    if cls is InstanceClass.Degenerate:
        r.check("classification", False, None, "degenerate triple")
        r.verdict = "degenerate"
        return r
    r.check("classification", True)
    bad = dim_table(p, box).mismatches()
    r.check("hilbert table", not bad, bad[0][0] if bad else None)
    gens = min_generators(p)
    gen = check_generation(p, gens, box)
    r.check("generation", gen.ok, gen.first_failure, gen.detail)
    r.data["generator degrees"] = [str(d) for d in gens.degrees()]
    cx = build_resolution(p, seed=seed)
    for c in verify_complex(cx, p, box).checks:
        r.check(f"resolution {c.name}", c.ok, c.where, c.detail)
    identity_bad = next(((m, n) for m in range(box[0] + 1) for n in range(box[1] + 1)
                      if not four_term_identity_holds(p, m, n)), None)
    r.check("four-term identity", identity_bad is None, identity_bad)
    bt = b_torsion_check(p, gens)
    r.check("B^3 Koszul", bt.ok, bt.first_failure, bt.detail)
    return r


def cmd_verify(p: InputTriple, args) -> RunReport:
    r = run_verify(p, args.box, args.seed or 0)
    r.lines.append(f"class: {r.data['class']}")
    for c in r.checks:
        line = f"{c['name']}: {'pass' if c['ok'] else 'FAIL'}"
        if not c["ok"]:
            line += f" at {c['where']}" + (f" ({c['detail']})" if c["detail"] else "")
        r.lines.append(line)
    r.lines.append(f"verdict: {r.verdict}")
    return r


COMMANDS = {
    "classify": cmd_classify,
    "syzygies": cmd_syzygies,
    "hilbert": cmd_hilbert,
    "picture": cmd_picture,
    "resolution": cmd_resolution,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bigradedsyz",
        description="Syzygies, Hilbert functions and resolutions of three (2,1) forms on P1 x P1.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, box=True):
        sp.add_argument("file", help="instance file (three rows [a,b,c,d,e,f])")
        if box:
            sp.add_argument("--box", type=parse_box, default=(9, 6), metavar="MxN")
        sp.add_argument("--json", action="store_true", help="print the run report as JSON")

    common(sub.add_parser("classify", help="class and resultant"), box=False)
    common(sub.add_parser("syzygies", help="minimal syzygy generators"), box=False)
    sp = sub.add_parser("hilbert", help="predicted vs computed dimensions")
    common(sp)
    sp.add_argument("--csv", action="store_true")
    common(sub.add_parser("picture", help="ASCII map of syzygy degrees"))
    sp = sub.add_parser("resolution", help="minimal free resolution")
    common(sp)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp = sub.add_parser("verify", help="run every check")
    common(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp = sub.add_parser("gen", help="seeded random instance")
    sp.add_argument("--class", dest="cls", choices=("generic", "nongeneric"), default="generic")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--bound", type=int, default=5)
    sp.add_argument("-o", dest="out", metavar="FILE")
    return ap


def _emit(report: RunReport, args, out):
    if getattr(args, "json", False):
        out.write(report.to_json() + "\n")
    else:
        out.write("\n".join(report.lines) + "\n")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors count as parse errors
        return EXIT_PARSE if exc.code else EXIT_OK

    if args.command == "gen":
        if args.bound < 1:
            sys.stderr.write("error: --bound must be at least 1\n")
            return EXIT_PARSE
        try:
            p = gen_instance(args.cls, args.seed, args.bound)
        except GenerationExhausted as exc:
            sys.stderr.write(f"error: {exc}\n")
            return EXIT_EXHAUSTED
        text = format_instance(p)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            out.write(text)
        return EXIT_OK

    try:
        p = read_instance(args.file)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ValueError as exc:  # malformed but syntactically valid rows
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE

    try:
        report = COMMANDS[args.command](p, args)
    except DegenerateInput as exc:
        report = RunReport(args.command, "degenerate", {"class": "Degenerate"},
                           lines=["class: Degenerate", f"error: {exc}"])
    _emit(report, args, out)
    if report.verdict == "degenerate":
        return EXIT_DEGENERATE
    return EXIT_OK if report.verdict == "pass" else EXIT_MISMATCH


def main_entry():  # console script
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
