"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import interchange
from .catalog import census, describe, lookup
from .congruence import all_congruences, atoms, is_simple
from .core import FiniteLattice
from .doubling import check_boolean_embedding, double_antichain, doubling_law_violations, mu
from .errors import LatticeError
from .glue import (
    check_glue_sd,
    find_isolated_intervals,
    glue,
    leaking_congruences,
    verify_con_isomorphism,
)
from .sd import check_join_sd_filters, check_meet_sd_ideals, check_sd_direct
from .verify import DEFAULT_SEED, SUITES, load_expected, run

OK, PROPERTY_FAILURE, INPUT_ERROR = 0, 1, 2


def _mark(flag: bool) -> str:
    return "✓" if flag else "✗"


class _Output:
    """Collects report lines (text) or objects (machine) and writes them once."""

    def __init__(self, args):
        self.machine = args.format == "machine"
        self.lines: list[str] = []

    def text(self, line: str):
        if not self.machine:
            self.lines.append(line)

    def obj(self, data: dict):
        if self.machine:
            self.lines.append(json.dumps(data, ensure_ascii=False, sort_keys=False))

    def flush(self, stream):
        if self.lines:
            stream.write("\n".join(self.lines) + "\n")


def _emit_lattice(out: _Output, args, L: FiniteLattice, key: str = "lattice"):
    """Write a lattice to ``--out`` if given, otherwise into the report."""
    if args.out:
        interchange.dump(L, args.out)
        out.text(f"wrote {L.name} ({L.n} elements) to {args.out}")
    else:
        out.text(interchange.dumps(L))
    out.obj({key: interchange.to_dict(L)})


def _intervals_text(L) -> str:
    return "[" + ", ".join(f"({iv.a},{iv.b})" for iv in find_isolated_intervals(L)) + "]"


def cmd_check(args, out: _Output) -> int:
    L = interchange.load(args.file)
    sd = check_sd_direct(L)
    ideals, _ = check_meet_sd_ideals(L)
    filters, _ = check_join_sd_filters(L)
    simple = is_simple(L)
    parts = ["lattice ✓"]
    parts.append(f"SD∧ {_mark(sd.meet_sd)}" + ("" if sd.meet_sd else f" witness({','.join(sd.meet_witness)})"))
    parts.append(f"SD∨ {_mark(sd.join_sd)}" + ("" if sd.join_sd else f" witness({','.join(sd.join_witness)})"))
    parts.append(f"simple {_mark(simple)}")
    parts.append(f"isolated intervals: {_intervals_text(L)}")
    out.text(", ".join(parts))
    out.text(f"ideal criterion {_mark(ideals)}, filter criterion {_mark(filters)}")
    out.obj({
        "command": "check",
        "name": L.name,
        "size": L.n,
        "meet_sd": sd.meet_sd,
        "join_sd": sd.join_sd,
        "meet_witness": list(sd.meet_witness) if sd.meet_witness else None,
        "join_witness": list(sd.join_witness) if sd.join_witness else None,
        "ideal_criterion": ideals,
        "filter_criterion": filters,
        "simple": simple,
        "isolated_intervals": [[iv.a, iv.b] for iv in find_isolated_intervals(L)],
    })
    return OK


def cmd_con(args, out: _Output) -> int:
    L = interchange.load(args.file)
    con = all_congruences(L)
    shape = describe(con.carrier)
    out.text(f"{len(con)} congruences, Con ≅ {shape}")
    for theta in con:
        out.text(f"  {theta}")
    if args.out:
        interchange.dump(con.carrier, args.out)
        out.text(f"wrote Con({L.name}) to {args.out}")
    else:
        out.text(interchange.dumps(con.carrier))
    out.obj({
        "command": "con",
        "name": L.name,
        "count": len(con),
        "shape": shape,
        "congruences": [str(t) for t in con],
        "carrier": interchange.to_dict(con.carrier),
    })
    return OK


def cmd_double(args, out: _Output) -> int:
    L = interchange.load(args.file)
    D = double_antichain(L, args.u)
    _emit_lattice(out, args, D.result)
    con = all_congruences(D.result)
    atom_set = set(atoms(con))
    laws = doubling_law_violations(D)
    report = check_boolean_embedding(D, con=con)
    mus = {u: mu(D, u) for u in D.doubled}
    for u, theta in mus.items():
        out.text(f"μ_{u} = {theta}: atom {_mark(theta in atom_set)}")
    out.text(f"Con ≅ {describe(con.carrier)} ({len(con)} congruences)")
    out.text(f"B_{report.size} sublattice {_mark(report.embedding_ok)}, "
             f"Con = image ∪ {{∇}} {_mark(report.image_plus_top)}")
    for v in laws:
        out.text(f"law violated: {v}")
    out.obj({
        "command": "double",
        "doubled": {u: list(p) for u, p in D.doubled.items()},
        "mu": {u: str(t) for u, t in mus.items()},
        "mu_atoms": {u: t in atom_set for u, t in mus.items()},
        "con_size": len(con),
        "con_shape": describe(con.carrier),
        "embedding": report.embedding_ok,
        "image_plus_top": report.image_plus_top,
        "extras": report.extras,
        "law_violations": laws,
    })
    ok = report.embedding_ok and not laws and all(t in atom_set for t in mus.values())
    return OK if ok else PROPERTY_FAILURE


def cmd_glue(args, out: _Output) -> int:
    L = interchange.load(args.file)
    F = interchange.load(getattr(args, "with"))
    try:
        a, b = [s.strip() for s in args.interval.split(",")]
    except ValueError:
        raise LatticeError(f"--interval expects 'a,b', got {args.interval!r}") from None
    ctx = glue(L, (a, b), F)
    _emit_lattice(out, args, ctx.K)
    iso = verify_con_isomorphism(ctx)
    sd = check_glue_sd(ctx)
    con_k = all_congruences(ctx.K)
    leaks = leaking_congruences(L, ctx.interval)
    expected = bool(leaks) and not iso.isomorphism and any(
        r["rule"] == "leaking-interval-class" for r in load_expected().get("glue", []))
    out.text(f"P = {{{','.join(ctx.P)}}}, Q = {{{','.join(ctx.Q)}}}, R = {{{','.join(ctx.R)}}}")
    out.text(f"K semidistributive {_mark(sd.k_semidistributive)} (F semidistributive {_mark(sd.f_semidistributive)})")
    verdict = f"Con isomorphism {_mark(iso.isomorphism)}, Con ≅ {describe(con_k.carrier)}"
    out.text(f"{verdict} (|Con L| = {iso.con_l}, |Con K| = {iso.con_k})")
    if expected:
        out.text("expected divergence [leaking-interval-class]")
    for note in iso.counterexamples:
        out.text(f"  {note}")
    out.obj({"command": "glue", "P": ctx.P, "Q": ctx.Q, "R": ctx.R,
             "K_sd": sd.k_semidistributive, "F_sd": sd.f_semidistributive,
             "con_shape": describe(con_k.carrier), "expected_divergence": expected,
             **iso.as_dict()})
    return OK if iso.isomorphism or expected else PROPERTY_FAILURE


def cmd_catalog(args, out: _Output) -> int:
    try:
        L = lookup(args.name)
    except KeyError as exc:
        raise LatticeError(str(exc)) from None
    _emit_lattice(out, args, L)
    return OK


def cmd_census(args, out: _Output) -> int:
    r = census(args.max_size, args.predicate)
    out.text(f"census up to {r.max_size} elements, predicate {r.predicate}: "
             f"{r.selected} of {r.examined} lattices selected")
    out.text(f"{'Con shape':<30} count")
    for shape, count in sorted(r.con_classes.items(), key=lambda kv: (-kv[1], kv[0])):
        out.text(f"{shape:<30} {count}")
    out.text(f"Con ≅ 3-chain: {len(r.three_chain)}; simple: {', '.join(r.simple) or 'none'}; "
             f"non-distributive Con: {len(r.non_distributive_con)}")
    out.obj({"command": "census", **r.as_dict()})
    return OK if not r.non_distributive_con else PROPERTY_FAILURE


def cmd_verify(args, out: _Output) -> int:
    reports = run(args.suite, args.max_size, args.seed)
    for r in reports:
        out.text(r.to_text(timing=args.timing))
        out.obj(r.as_dict(timing=args.timing))
    return OK if all(r.ok for r in reports) else PROPERTY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = argparse.ArgumentParser(prog="sdlattice", description="Finite lattice congruence toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="validate and classify a lattice")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("con", parents=[common], help="congruence lattice")
    s.add_argument("file")
    s.set_defaults(func=cmd_con)

    s = sub.add_parser("double", parents=[common], help="double an antichain")
    s.add_argument("file")
    s.add_argument("-u", action="append", required=True, metavar="ELEM")
    s.set_defaults(func=cmd_double)

    s = sub.add_parser("glue", parents=[common], help="glue F into an isolated interval")
    s.add_argument("file")
    s.add_argument("--interval", required=True, metavar="A,B")
    s.add_argument("--with", required=True, metavar="F_FILE")
    s.set_defaults(func=cmd_glue)

    s = sub.add_parser("catalog", parents=[common], help="emit a named lattice")
    s.add_argument("name")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("census", parents=[common], help="tabulate congruence lattices")
    s.add_argument("--max-size", type=int, default=7)
    s.add_argument("--predicate", default="sd", choices=("all", "sd", "sd-simple", "distributive"))
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("suite", choices=(*SUITES, "all"))
    s.add_argument("--max-size", type=int, default=6)
    s.add_argument("--timing", action="store_true", help="include runtimes (breaks byte-for-byte reproducibility)")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Output(args)
    try:
        code = args.func(args, out)
    except (LatticeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    if args.out and args.command in ("check", "census", "verify"):
        with Path(args.out).open("w", encoding="utf-8") as fh:
            out.flush(fh)
    else:
        out.flush(sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
