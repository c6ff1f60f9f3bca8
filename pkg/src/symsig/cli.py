"""Command-line interface: reproducible, machine-readable reports.

Four subcommands surface the library — `table` (conjugacy classes and the
character table), `decompose` (multiplicities of Sym^q), `signature`
(partial ratios with certified error bounds), and `elliptic` (the formal
bundle calculus).  Output is deterministic: fixed orderings, fixed
serialization, no timestamps, so identical invocations are byte-identical.

Exact rationals render as "numerator/denominator" with a separate decimal
field (12 significant digits); cyclotomic values render as polynomials in z
where z = zeta_m and m is declared in the report header.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import ConsistencyError, CycloElement
from .klein import (
    BinaryDihedral,
    BinaryIcosahedral,
    BinaryOctahedral,
    BinaryTetrahedral,
    Cyclic,
    GroupKind,
    KleinGroup,
    build_group,
    character_table,
)
from .sympow import multiplicity_series
from .signature import oscillation_gap, signature_partial
from .elliptic import (
    SYZYGY_BUNDLE,
    degree,
    dsigma_partial,
    free_rank,
    rank,
    sigma_upper_bound,
    slope,
    sym_cotangent,
)
from .selfcheck import run_selfcheck


class UsageError(Exception):
    """Bad command-line input (exit status 2)."""


# ---------------------------------------------------------------------------
# report model: every command produces one Report; renderers never reorder


@dataclass
class Section:
    name: str
    columns: list[str]
    rows: list[list[str]] = field(default_factory=list)


@dataclass
class Report:
    title: str
    meta: list[tuple[str, str]] = field(default_factory=list)
    sections: list[Section] = field(default_factory=list)


def _dec(x) -> str:
    return f"{float(x):.12g}"


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _cyclo_dec(x: CycloElement) -> str:
    if x == x.conjugate():
        return _dec(x.embed_complex().real)
    z = x.embed_complex()
    return f"{z.real:.12g}{z.imag:+.12g}i"


# ---------------------------------------------------------------------------
# argument parsing


def parse_group_spec(text: str) -> GroupKind:
    s = text.strip().lower()
    fixed = {"bt": BinaryTetrahedral, "bo": BinaryOctahedral, "bi": BinaryIcosahedral}
    try:
        if s in fixed:
            return fixed[s]
        if s.startswith("bd:"):
            return BinaryDihedral(int(s[3:]))
        if s.startswith("cyclic:"):
            n_str, _, a_str = s[7:].partition(",")
            if not a_str:
                raise ValueError("missing ,a")
            return Cyclic(int(n_str), int(a_str))
    except ValueError as exc:
        raise UsageError(f"bad group spec {text!r}: {exc}") from exc
    raise UsageError(
        f"bad group spec {text!r}; expected cyclic:<n>,<a> | BD:<n> | BT | BO | BI"
    )


def parse_q_range(text: str) -> tuple[int, int]:
    s = text.strip()
    try:
        if ".." in s:
            lo_str, _, hi_str = s.partition("..")
            lo, hi = int(lo_str), int(hi_str)
        else:
            lo = hi = int(s)
    except ValueError as exc:
        raise UsageError(f"bad q range {text!r}; expected Q or LO..HI") from exc
    if lo < 0 or hi < lo:
        raise UsageError(f"bad q range {text!r}; need 0 <= LO <= HI")
    return lo, hi


def _build(spec: str) -> KleinGroup:
    kind = parse_group_spec(spec)
    try:
        return build_group(kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# commands


def cmd_table(args) -> Report:
    G = _build(args.group)
    table = character_table(G)
    rep = Report(title=f"character table of {G.kind}")
    rep.meta = [
        ("group", str(G.kind)),
        ("order", str(G.order)),
        ("conductor", str(G.m)),
        ("classes", str(G.num_classes)),
        ("values", "polynomials in z, z = primitive root of unity of order m"),
    ]
    classes = Section("classes", ["class", "size", "element_order", "trace", "trace_decimal"])
    for c, cls in enumerate(G.classes):
        tr = G.class_trace(c)
        classes.rows.append(
            [f"c{c}", str(cls.size), str(G.class_order(c)), str(tr), _cyclo_dec(tr)]
        )
    rep.sections.append(classes)

    cols = ["character", "degree"]
    for c in range(G.num_classes):
        cols += [f"c{c}", f"c{c}_decimal"]
    chars = Section("characters", cols)
    for i, chi in enumerate(table):
        row = [f"chi{i}", str(chi.degree)]
        for v in chi.values:
            row += [str(v), _cyclo_dec(v)]
        chars.rows.append(row)
    rep.sections.append(chars)
    return rep


def cmd_decompose(args) -> Report:
    G = _build(args.group)
    lo, hi = parse_q_range(args.q)
    table = character_table(G)
    degrees = table.degrees
    rows = multiplicity_series(G, hi)
    rep = Report(title=f"Sym^q multiplicities for {G.kind}")
    rep.meta = [
        ("group", str(G.kind)),
        ("order", str(G.order)),
        ("irreducible_degrees", " ".join(str(d) for d in degrees)),
    ]
    cols = ["q"] + [f"alpha{i}" for i in range(len(table))] + ["dimension"]
    sec = Section("multiplicities", cols)
    for q in range(lo, hi + 1):
        row = rows[q]
        dim = sum(a * d for a, d in zip(row, degrees))
        sec.rows.append([str(q)] + [str(a) for a in row] + [str(dim)])
    rep.sections.append(sec)
    return rep


def cmd_signature(args) -> Report:
    G = _build(args.group)
    N = args.horizon
    if N < 1:
        raise UsageError("--horizon must be at least 1")
    i = args.index
    try:
        series = signature_partial(G, i, N)
        gap = oscillation_gap(G, i, N) if N >= 2 else None
    except IndexError as exc:
        raise UsageError(str(exc)) from exc
    deg = character_table(G).degrees[i]
    rep = Report(title=f"symmetric signature partial sums for {G.kind}")
    rep.meta = [
        ("group", str(G.kind)),
        ("order", str(G.order)),
        ("irreducible", f"chi{i}"),
        ("degree", str(deg)),
        ("horizon", str(N)),
    ]
    if i == 0:
        rep.meta.append(
            ("note", "trivial summand: syzygy and differential signatures coincide")
        )
    sec = Section("signature", ["quantity", "exact", "decimal"])
    a_sum, b_sum = sum(series.a), sum(series.b)
    sec.rows.append(["partial_ratio", f"{a_sum}/{b_sum}", _dec(series.partial_ratio)])
    sec.rows.append(["limit", _frac(series.limit), _dec(series.limit)])
    true_err = abs(series.partial_ratio - series.limit)
    sec.rows.append(["true_error", _frac(true_err), _dec(true_err)])
    sec.rows.append(["error_bound", "-", _dec(series.bound)])
    if gap is not None:
        sec.rows.append(["oscillation_gap", _frac(gap), _dec(gap)])
    rep.sections.append(sec)
    return rep


def _horizon_ladder(N: int, start: int) -> list[int]:
    out = []
    v = start
    while v <= N:
        out.append(v)
        v *= 2
    if not out or out[-1] != N:
        out.append(N)
    return out


def cmd_elliptic(args) -> Report:
    which = args.what
    if which == "sym":
        lo, hi = parse_q_range(args.q) if args.q is not None else (0, 8)
        rep = Report(title="symmetric powers of the restricted cotangent bundle")
        rep.meta = [("curve", "plane cubic"), ("identity", "Sym^q = F_(q+1) (x) O(q)")]
        sec = Section(
            "bundles",
            ["q", "bundle", "rank", "degree", "slope", "slope_decimal", "free_rank", "free_rank_kind"],
        )
        for q in range(lo, hi + 1):
            e = sym_cotangent(q)
            a = e.atoms[0]
            desc = f"O({a.data})" if a.variant == "line" else f"F_{a.rank} (x) O({a.data})"
            fr = free_rank(e)
            sec.rows.append(
                [
                    str(q),
                    desc,
                    str(rank(e)),
                    str(degree(e)),
                    _frac(slope(e)),
                    _dec(slope(e)),
                    str(fr.value),
                    "exact" if fr.exact else "upper_bound",
                ]
            )
        rep.sections.append(sec)
        return rep

    N = args.horizon
    if N < 1:
        raise UsageError("--horizon must be at least 1")
    if which == "dsigma":
        rep = Report(title="differential symmetric signature partial sums (elliptic cone)")
        rep.meta = [("limit", "0"), ("closed_form", "2/((N+1)(N+2))")]
        sec = Section("partial_sums", ["N", "exact", "decimal"])
        for h in _horizon_ladder(N, 1):
            v = dsigma_partial(h)
            sec.rows.append([str(h), _frac(v), _dec(v)])
        rep.sections.append(sec)
        return rep
    if which == "bound":
        rep = Report(title="upper bound for the syzygy symmetric signature (elliptic cone)")
        rep.meta = [
            ("syzygy_bundle_rank", str(rank(SYZYGY_BUNDLE))),
            ("syzygy_bundle_degree", str(degree(SYZYGY_BUNDLE))),
            ("syzygy_bundle_slope", _frac(slope(SYZYGY_BUNDLE))),
            ("limit_superior_bound", "1/2"),
            ("exact_value", "unknown"),
        ]
        sec = Section("bounds", ["N", "exact", "decimal"])
        for h in _horizon_ladder(N, 1):
            v = sigma_upper_bound(h)
            sec.rows.append([str(h), _frac(v), _dec(v)])
        rep.sections.append(sec)
        return rep
    raise UsageError(f"unknown elliptic subcommand {which!r}")


# ---------------------------------------------------------------------------
# renderers


def render_pretty(rep: Report) -> str:
    out = [rep.title]
    for k, v in rep.meta:
        out.append(f"{k}: {v}")
    for sec in rep.sections:
        out.append("")
        out.append(f"[{sec.name}]")
        widths = [len(c) for c in sec.columns]
        for row in sec.rows:
            for j, cell in enumerate(row):
                widths[j] = max(widths[j], len(cell))
        header = " | ".join(c.ljust(w) for c, w in zip(sec.columns, widths))
        out.append(header.rstrip())
        out.append("-+-".join("-" * w for w in widths))
        for row in sec.rows:
            out.append(" | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"


def render_csv(rep: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["title", rep.title])
    for k, v in rep.meta:
        w.writerow(["meta", k, v])
    for sec in rep.sections:
        w.writerow(["section", sec.name])
        w.writerow(sec.columns)
        for row in sec.rows:
            w.writerow(row)
    return buf.getvalue()


def render_json(rep: Report) -> str:
    doc = {
        "title": rep.title,
        "meta": {k: v for k, v in rep.meta},
        "sections": [
            {
                "name": sec.name,
                "columns": sec.columns,
                "rows": [dict(zip(sec.columns, row)) for row in sec.rows],
            }
            for sec in rep.sections
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


RENDERERS = {"pretty": render_pretty, "csv": render_csv, "json": render_json}


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json", "pretty"), default="pretty",
        help="output format (default: pretty)",
    )
    common.add_argument("--output", help="write the report to this file instead of stdout")
    common.add_argument(
        "--selfcheck", action="store_true",
        help="run the cross-oracle suites before the command (reported on stderr)",
    )
    common.add_argument(
        "--horizon", type=int, default=1000, metavar="N",
        help="summation horizon for signature/elliptic commands (default: 1000)",
    )

    p = argparse.ArgumentParser(
        prog="symsig",
        description="Exact symmetric signatures of Kleinian singularities "
        "and the formal elliptic-cone calculus.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pt = sub.add_parser("table", parents=[common], help="conjugacy classes and character table")
    pt.add_argument("group", help="cyclic:<n>,<a> | BD:<n> | BT | BO | BI")
    pt.set_defaults(fn=cmd_table)

    pd = sub.add_parser("decompose", parents=[common], help="multiplicities of Sym^q")
    pd.add_argument("group", help="cyclic:<n>,<a> | BD:<n> | BT | BO | BI")
    pd.add_argument("q", help="exponent q, or a range LO..HI")
    pd.set_defaults(fn=cmd_decompose)

    ps = sub.add_parser("signature", parents=[common], help="signature partial sums and bounds")
    ps.add_argument("group", help="cyclic:<n>,<a> | BD:<n> | BT | BO | BI")
    ps.add_argument("-i", "--index", type=int, default=0, help="irreducible index (default 0)")
    ps.set_defaults(fn=cmd_signature)

    pe = sub.add_parser("elliptic", parents=[common], help="formal elliptic-cone calculus")
    pe.add_argument("what", choices=("dsigma", "bound", "sym"))
    pe.add_argument("q", nargs="?", help="q or LO..HI (sym subcommand only)")
    pe.set_defaults(fn=cmd_elliptic)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.selfcheck:
            for line in run_selfcheck():
                print(line, file=sys.stderr)
        report = args.fn(args)
        text = RENDERERS[args.format](report)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConsistencyError, AssertionError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
