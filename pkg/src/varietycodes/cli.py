"""Command line interface: ``varietycodes {describe,verify,table,search,gv}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import commands
from .catalog import SpecError, catalog, load, lookup
from .distance import DEFAULT_ENUM_CAP

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varietycodes",
        description="Quantum stabilizer codes from subfield-subcodes of affine variety codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "structured"), default="text",
                       help="structured emits a JSON document")

    def source(p: argparse.ArgumentParser) -> None:
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--spec", metavar="FILE", help="spec file (JSON or key = value text)")
        g.add_argument("--label", metavar="NAME", help="built-in catalog entry, e.g. U5")

    def effort(p: argparse.ArgumentParser) -> None:
        p.add_argument("--wmax", type=int, default=None,
                       help="largest weight examined by the column search (0 = no distance work)")
        p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP,
                       help="enumerate codewords when q^k is at most this")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for the column search")

    p = sub.add_parser("describe", help="orbits, dimension, self-orthogonality and k")
    source(p)
    common(p)

    p = sub.add_parser("verify", help="recompute (n, k) and certify the distance claim")
    source(p)
    effort(p)
    p.add_argument("--budget", type=float, default=None, help="soft time budget in seconds")
    common(p)

    p = sub.add_parser("table", help="reproduce the catalog table")
    p.add_argument("--filter", metavar="EXPR", default=None,
                   help="comma-separated terms such as q=4 or flag=GV")
    effort(p)
    p.add_argument("--budget", type=float, default=commands.TABLE_BUDGET,
                   help="soft time budget per row in seconds")
    common(p)

    p = sub.add_parser("search", help="enumerate self-orthogonal orbit unions")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-N", type=_int_list, required=True, help="e.g. '7,3'")
    p.add_argument("--k-min", type=int, default=0)
    p.add_argument("--d-min", type=int, default=0)
    p.add_argument("--wmax", type=int, default=commands.SEARCH_WMAX)
    p.add_argument("--enum-cap", type=int, default=commands.SEARCH_ENUM_CAP)
    p.add_argument("--orbit-cap", type=int, default=commands.SEARCH_ORBIT_CAP)
    common(p)

    p = sub.add_parser("gv", help="evaluate the quantum GV sufficient condition")
    for name in ("n", "k", "d", "q"):
        p.add_argument(name, type=int)
    common(p)
    return parser


def _load_source(args) -> tuple:
    if args.spec:
        try:
            return load(args.spec)
        except OSError as exc:
            raise SpecError(f"cannot read {args.spec}: {exc.strerror}") from None
    try:
        entry = lookup(args.label)
    except KeyError as exc:
        raise SpecError(exc.args[0]) from None
    return entry.spec, entry.expected, entry.flags


# -- text rendering ---------------------------------------------------------------


def _fmt_vec(v: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _render_describe(doc: dict[str, Any]) -> list[str]:
    out = [
        f"code        {doc.get('label') or '(unnamed)'}",
        f"field       p={doc['p']} r={doc['r']} s={doc['s']}  q={doc['q']}",
        f"N           {doc['N']}  n={doc['n']}",
        f"|U|         {doc['U_size']}",
    ]
    if not doc["orbit_closed"]:
        out.append(f"warning     U is not orbit-closed: {_fmt_vec(doc['witness'])} in U "
                   f"but {_fmt_vec(doc['image'])} is not; only whole orbits are used")
    orbits = ", ".join(f"{_fmt_vec(o['representative'])}x{o['size']}" for o in doc["orbits"])
    out.append(f"orbits      {orbits or '(none)'}")
    out.append(f"dim C_U^s   {doc['classical_dimension']}")
    if not doc["self_orthogonal"]:
        w = doc["self_orthogonality_witness"]
        out.append(f"self-orth   NO: orbit of {_fmt_vec(w['orbit']['representative'])} and its "
                   f"complement (orbit of {_fmt_vec(w['complement']['representative'])}) are both in U")
        return out
    out.append("self-orth   yes")
    out.append(f"k           {doc['k']}")
    if "expected" in doc:
        e = doc["expected"]
        mark = "ok" if doc["nk_match"] else "MISMATCH"
        out.append(f"expected    [[{e['n']},{e['k']},{e['d']}]]_{e['q']}  ({mark})")
    if "gv" in doc:
        out.append("GV          " + _gv_line(doc["gv"]))
    return out


def _gv_line(g: dict[str, Any]) -> str:
    if g["verdict"] == "Unsupported":
        return f"Unsupported: {g['reason']}"
    return f"{g['verdict']} (branch {g['branch']}: lhs={g['lhs']:,} rhs={g['rhs']:,})"


def _render_verify(doc: dict[str, Any]) -> list[str]:
    out = _render_describe(doc)
    dist = doc.get("distance")
    if dist is None:
        out.append("distance    not examined")
    else:
        out.append(f"distance    {dist['summary']} via {dist['method']}, work {dist['work']:,}")
        if "witness_support" in dist:
            out.append(f"witness     support {dist['witness_support']}")
    return out


def _render_table(doc: dict[str, Any]) -> list[str]:
    head = f"{'code':<5} {'n':>4} {'k':>4} {'d':>3} {'q':>3}  {'n,k,q':<8} {'GV':<15} {'marks':<6} distance"
    out = [head, "-" * len(head)]
    for row in doc["rows"]:
        e = row["expected"]
        nk = "ok" if row["nkq_match"] else f"k={row['k']}!"
        gv = row["gv"] + ("" if row["gv_match"] else "!")
        dist = row["distance"]["summary"] if row["distance"] else "-"
        if not row["self_orthogonal"]:
            dist = "NOT SELF-ORTHOGONAL"
        out.append(f"{row['label']:<5} {e['n']:>4} {e['k']:>4} {e['d']:>3} {e['q']:>3}  "
                   f"{nk:<8} {gv:<15} {','.join(row['flags']):<6} {dist}")
    bad = [r["label"] for r in doc["rows"] if not r["nkq_match"]]
    out.append(f"{len(doc['rows'])} rows, {len(bad)} (n,k,q) mismatches"
               + (f": {', '.join(bad)}" if bad else "") + f"; {doc['seconds']} s")
    return out


def _render_search(doc: dict[str, Any]) -> list[str]:
    out = [f"p={doc['p']} r={doc['r']} s={doc['s']} N={doc['N']}  n={doc['n']} q={doc['q']}  "
           f"{doc['orbit_pairs']} complementary orbit pairs, {len(doc['candidates'])} candidates"]
    for c in doc["candidates"]:
        d = str(c["d_bound"]) if c["d_exact"] else f">={c['d_bound']}"
        reps = " ".join(_fmt_vec(o) for o in c["orbits"]) or "(empty)"
        out.append(f"[[{doc['n']},{c['k']},{d}]]_{doc['q']}  orbits {reps}")
    return out


def _render_gv(doc: dict[str, Any]) -> list[str]:
    return [f"(n,k,d,q) = ({doc['n']},{doc['k']},{doc['d']},{doc['q']})", _gv_line(doc)]


_RENDER = {
    "describe": _render_describe,
    "verify": _render_verify,
    "table": _render_table,
    "search": _render_search,
    "gv": _render_gv,
}


def run(args) -> commands.Report:
    if args.command == "describe":
        spec, expected, _ = _load_source(args)
        return commands.describe(spec, expected)
    if args.command == "verify":
        spec, expected, _ = _load_source(args)
        return commands.verify(spec, expected, args.wmax, args.enum_cap, args.jobs, args.budget)
    if args.command == "table":
        accept = commands.parse_filter(args.filter)
        entries = [e for e in catalog() if accept(e)]
        return commands.table(entries, args.wmax, args.enum_cap, args.jobs, args.budget)
    if args.command == "search":
        return commands.search(args.p, args.r, args.s, args.N, args.k_min, args.d_min,
                               args.wmax, args.enum_cap, args.orbit_cap)
    return commands.gv(args.n, args.k, args.d, args.q)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report = run(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "structured":
        json.dump(report.doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print("\n".join(_RENDER[args.command](report.doc)))
    return report.status


if __name__ == "__main__":
    sys.exit(main())
