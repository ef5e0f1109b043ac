"""Command-line front end over the library modules.

Deterministic by construction: identical arguments produce byte-identical
standard output.  The version banner and error messages go to standard
error; data never carries timestamps.

Subcommands
    seq         exact sequence values, n = 0..max-n
    gl          subgroup-count table g_ell(n), n = 1..max-n
    constants   L-series data and expansion constants for one family
    compare     exact vs asymptotic ratio table
    logconcave  log-concavity scan
    bo          Bessenrodt-Ono pair scan
    logconvex   log-convexity scan of the factorial-scaled counts
    oracle      independent slow routes (hnf, commuting, direct, pentagonal)
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .arith import (
    PolygonalIndicator,
    Power,
    TableExponent,
    hnf_subgroup_count,
    subgroup_count_table,
)
from .asymptotics import (
    compare_exact_asym,
    dressed_residue,
    expansion_one_pole,
    expansion_three_pole,
    expansion_two_pole,
)
from .inequalities import (
    bessenrodt_ono_scan,
    log_concavity_scan,
    log_convexity_scan,
    report_to_json,
)
from .lfunction import lf_data_ntuple, lf_data_power
from .precision import PrecisionContext
from .saddle import rho_series_three_pole, two_pole_K
from .series import (
    BigIntSeq,
    brute_force_commuting,
    expand_product,
    expand_product_direct,
    factorial_scaled,
    ntuple_exponent,
    ntuple_sequence,
    pentagonal_p,
    seq_to_csv,
    seq_to_json,
)

_FAMILIES = ("ntuple", "power", "polygonal", "table-file")


@dataclass(frozen=True)
class RunConfig:
    """One fully resolved CLI invocation."""

    subcommand: str
    family: str = "ntuple"
    ell: int | None = None
    d: int | None = None
    k: int | None = None
    table: str | None = None
    max_n: int | None = None
    min_n: int = 2
    max_sum: int | None = None
    n: int | None = None
    digits: int = 50
    terms: int | None = None
    points: tuple[int, ...] = (100, 1000, 10000)
    fmt: str | None = None
    out: str | None = None
    jobs: int = 1
    oracle_op: str | None = None


def _parse_points(text: str) -> tuple[int, ...]:
    try:
        pts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"bad --points value {text!r}") from None
    if not pts or any(p < 1 for p in pts):
        raise ValueError("--points needs positive integers")
    return pts


def _read_table(path: str) -> TableExponent:
    """CSV file of rows n,value (header optional); n contiguous from 1."""
    rows = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line == "n,value":
                continue
            n_str, _, v_str = line.partition(",")
            try:
                n, v = int(n_str), int(v_str)
            except ValueError:
                raise ValueError(f"bad table row {line!r}") from None
            if n > 0:
                rows[n] = v
    if not rows:
        raise ValueError(f"no usable rows in {path}")
    top = max(rows)
    if set(rows) != set(range(1, top + 1)):
        raise ValueError("table rows must cover n = 1..N without gaps")
    return TableExponent(tuple(rows[n] for n in range(1, top + 1)))


def _exponent_spec(cfg: RunConfig, n_hint: int):
    if cfg.family == "ntuple":
        if cfg.ell is None:
            raise ValueError("--family ntuple requires --ell")
        return ntuple_exponent(cfg.ell, n_hint)
    if cfg.family == "power":
        if cfg.d is None:
            raise ValueError("--family power requires --d")
        return Power(cfg.d)
    if cfg.family == "polygonal":
        if cfg.k is None:
            raise ValueError("--family polygonal requires --k")
        return PolygonalIndicator(cfg.k)
    if cfg.family == "table-file":
        if cfg.table is None:
            raise ValueError("--family table-file requires --table")
        return _read_table(cfg.table)
    raise ValueError(f"unknown family {cfg.family!r}")


def _family_sequence(cfg: RunConfig, n_max: int) -> BigIntSeq:
    if cfg.family == "ntuple":
        if cfg.ell is None:
            raise ValueError("--family ntuple requires --ell")
        return ntuple_sequence(cfg.ell, n_max)
    return expand_product(_exponent_spec(cfg, n_max), n_max)


def _l_data(cfg: RunConfig, ctx: PrecisionContext):
    if cfg.family == "ntuple":
        if cfg.ell is None:
            raise ValueError("--family ntuple requires --ell")
        return lf_data_ntuple(cfg.ell, ctx)
    if cfg.family == "power":
        if cfg.d is None:
            raise ValueError("--family power requires --d")
        return lf_data_power(cfg.d, ctx)
    raise ValueError(f"no L-series data for family {cfg.family!r}")


def _expansion(cfg: RunConfig, data, ctx: PrecisionContext):
    npoles = len(data.poles)
    if npoles == 1:
        exp = expansion_one_pole(data, ctx)
    elif npoles == 2:
        exp = expansion_two_pole(data, ctx)
    else:
        exp = expansion_three_pole(cfg.ell, data, ctx)
    if cfg.terms is not None:
        if not 1 <= cfg.terms <= len(exp.terms):
            raise ValueError(f"--terms must be in 1..{len(exp.terms)} here")
        exp = type(exp)(exp.family, exp.C, exp.b, exp.terms[: cfg.terms])
    return exp


def _saddle_K(cfg: RunConfig, data, ctx: PrecisionContext):
    npoles = len(data.poles)
    if npoles == 1:
        c1 = dressed_residue(data.poles[0], ctx)
        return [ctx.power_frac(c1, Fraction(1) / (data.alpha + 1))]
    if npoles == 2:
        c1 = dressed_residue(data.poles[0], ctx)
        c2 = dressed_residue(data.poles[1], ctx)
        terms = min(cfg.terms or 3, 5)
        return two_pole_K(data.poles[0][0], data.poles[1][0], c1, c2, terms, ctx)
    terms = cfg.terms or cfg.ell
    return list(rho_series_three_pole(cfg.ell, terms, data, ctx).K)


def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _emit_seq(seq: BigIntSeq, fmt: str) -> str:
    if fmt == "json":
        return seq_to_json(seq)
    if fmt in ("csv", "text"):
        return seq_to_csv(seq)
    raise ValueError(f"unsupported format {fmt!r}")


def _cmd_seq(cfg: RunConfig) -> str:
    if cfg.max_n is None or cfg.max_n < 1:
        raise ValueError("--max-n must be >= 1")
    return _emit_seq(_family_sequence(cfg, cfg.max_n), cfg.fmt or "csv")


def _cmd_gl(cfg: RunConfig) -> str:
    if cfg.max_n is None or cfg.max_n < 1:
        raise ValueError("--max-n must be >= 1")
    if cfg.ell is None or cfg.ell < 1:
        raise ValueError("gl requires --ell >= 1")
    table = subgroup_count_table(cfg.ell, cfg.max_n)
    seq = BigIntSeq(tuple(table[1:]), 1, f"subgroups-rank-{cfg.ell}")
    return _emit_seq(seq, cfg.fmt or "csv")


def _cmd_constants(cfg: RunConfig) -> str:
    ctx = PrecisionContext(cfg.digits)
    data = _l_data(cfg, ctx)
    exp = _expansion(cfg, data, ctx)
    ks = _saddle_K(cfg, data, ctx)
    fmt = cfg.fmt or "text"
    if fmt == "json":
        import json

        obj = {
            "family": data.family,
            "alpha": _fmt_frac(data.alpha),
            "poles": [
                {"location": _fmt_frac(loc), "residue": ctx.to_str(res)}
                for loc, res in data.poles
            ],
            "l_at_zero": _fmt_frac(data.l_at_zero),
            "l_prime_at_zero": ctx.to_str(data.l_prime_at_zero),
            "b": _fmt_frac(exp.b),
            "C": ctx.to_str(exp.C),
            "A": [
                {"k": i + 1, "exponent": _fmt_frac(lam), "value": ctx.to_str(a)}
                for i, (a, lam) in enumerate(exp.terms)
            ],
            "K": [ctx.to_str(k) for k in ks],
        }
        if data.c1 is not None:
            obj["c"] = [ctx.to_str(c) for c in (data.c1, data.c2, data.c3)]
        return json.dumps(obj, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unsupported format {fmt!r}")
    lines = [
        f"family: {data.family}",
        f"alpha: {_fmt_frac(data.alpha)}",
    ]
    for loc, res in data.poles:
        lines.append(f"pole {_fmt_frac(loc)}: residue {ctx.to_str(res)}")
    lines.append(f"L(0): {_fmt_frac(data.l_at_zero)}")
    lines.append(f"L'(0): {ctx.to_str(data.l_prime_at_zero)}")
    if data.c1 is not None:
        for name, val in (("c1", data.c1), ("c2", data.c2), ("c3", data.c3)):
            lines.append(f"{name}: {ctx.to_str(val)}")
    lines.append(f"b: {_fmt_frac(exp.b)}")
    lines.append(f"C: {ctx.to_str(exp.C)}")
    for i, (a, lam) in enumerate(exp.terms):
        lines.append(f"A[{i + 1}] exponent {_fmt_frac(lam)}: {ctx.to_str(a)}")
    for j, k in enumerate(ks):
        lines.append(f"K[{j + 1}]: {ctx.to_str(k)}")
    return "\n".join(lines) + "\n"


def _cmd_compare(cfg: RunConfig) -> str:
    ctx = PrecisionContext(cfg.digits)
    data = _l_data(cfg, ctx)
    exp = _expansion(cfg, data, ctx)
    seq = _family_sequence(cfg, max(cfg.points))
    rows = compare_exact_asym(seq, exp, sorted(cfg.points), ctx)
    fmt = cfg.fmt or "text"
    if fmt == "json":
        import json

        obj = {
            "family": exp.family,
            "rows": [
                {
                    "n": r.n,
                    "ratio": ctx.to_str(r.ratio),
                    "log_error": ctx.to_str(r.log_error),
                }
                for r in rows
            ],
        }
        return json.dumps(obj, indent=2) + "\n"
    if fmt == "csv":
        lines = ["n,ratio,log_error"]
        for r in rows:
            lines.append(f"{r.n},{ctx.to_str(r.ratio)},{ctx.to_str(r.log_error)}")
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unsupported format {fmt!r}")
    mp = ctx.mp
    lines = [f"family: {exp.family}", "n ratio log_error"]
    for r in rows:
        lines.append(f"{r.n} {mp.nstr(r.ratio, 15)} {mp.nstr(r.log_error, 8)}")
    return "\n".join(lines) + "\n"


def _scan_output(report, fmt: str) -> str:
    if fmt == "json":
        return report_to_json(report) + "\n"
    if fmt != "text":
        raise ValueError(f"unsupported format {fmt!r}")
    def show(item):
        return f"({item[0]},{item[1]})" if isinstance(item, tuple) else str(item)

    lines = [
        f"family: {report.family}",
        f"property: {report.property}",
        f"range: [{report.lo}, {report.hi}]",
        f"violations ({len(report.violations)}): "
        + " ".join(show(v) for v in report.violations),
        f"equalities ({len(report.equalities)}): "
        + " ".join(show(e) for e in report.equalities),
        f"minimal_threshold: {report.minimal_threshold}",
    ]
    return "\n".join(lines) + "\n"


def _cmd_logconcave(cfg: RunConfig) -> str:
    if cfg.max_n is None or cfg.max_n < cfg.min_n:
        raise ValueError("--max-n must be >= --min-n")
    seq = _family_sequence(cfg, cfg.max_n + 1)
    report = log_concavity_scan(seq, cfg.min_n, cfg.max_n, jobs=cfg.jobs)
    return _scan_output(report, cfg.fmt or "json")


def _cmd_logconvex(cfg: RunConfig) -> str:
    if cfg.family != "ntuple":
        raise ValueError("logconvex scans the factorial-scaled tuple counts; "
                         "use --family ntuple")
    if cfg.max_n is None or cfg.max_n < cfg.min_n:
        raise ValueError("--max-n must be >= --min-n")
    seq = factorial_scaled(_family_sequence(cfg, cfg.max_n + 1))
    report = log_convexity_scan(seq, max(cfg.min_n, 2), cfg.max_n, jobs=cfg.jobs)
    return _scan_output(report, cfg.fmt or "json")


def _cmd_bo(cfg: RunConfig) -> str:
    if cfg.max_sum is None or cfg.max_sum < 2:
        raise ValueError("--max-sum must be >= 2")
    seq = _family_sequence(cfg, cfg.max_sum)
    report = bessenrodt_ono_scan(seq, cfg.max_sum, jobs=cfg.jobs)
    return _scan_output(report, cfg.fmt or "json")


def _cmd_oracle(cfg: RunConfig) -> str:
    op = cfg.oracle_op
    if op == "hnf":
        if cfg.ell is None or cfg.n is None:
            raise ValueError("oracle hnf requires --ell and --n")
        return f"{hnf_subgroup_count(cfg.ell, cfg.n)}\n"
    if op == "commuting":
        if cfg.ell is None or cfg.n is None:
            raise ValueError("oracle commuting requires --ell and --n")
        return f"{brute_force_commuting(cfg.ell, cfg.n)}\n"
    if op == "direct":
        if cfg.max_n is None:
            raise ValueError("oracle direct requires --max-n")
        seq = expand_product_direct(_exponent_spec(cfg, cfg.max_n), cfg.max_n)
        return _emit_seq(seq, cfg.fmt or "csv")
    if op == "pentagonal":
        if cfg.max_n is None:
            raise ValueError("oracle pentagonal requires --max-n")
        return _emit_seq(pentagonal_p(cfg.max_n), cfg.fmt or "csv")
    raise ValueError(f"unknown oracle op {op!r}")


_DISPATCH = {
    "seq": _cmd_seq,
    "gl": _cmd_gl,
    "constants": _cmd_constants,
    "compare": _cmd_compare,
    "logconcave": _cmd_logconcave,
    "bo": _cmd_bo,
    "logconvex": _cmd_logconvex,
    "oracle": _cmd_oracle,
}


def _build_parser() -> argparse.ArgumentParser:
    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", choices=_FAMILIES, default="ntuple",
                     help="sequence family (default ntuple)")
    fam.add_argument("--ell", type=int, help="tuple length for --family ntuple")
    fam.add_argument("--d", type=int, help="exponent for --family power")
    fam.add_argument("--k", type=int, help="gonality for --family polygonal")
    fam.add_argument("--table", help="CSV weight table for --family table-file")

    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--format", choices=("csv", "json", "text"), dest="fmt",
                    help="output format (per-command default)")
    io.add_argument("--out", help="write output to this file instead of stdout")

    prec = argparse.ArgumentParser(add_help=False)
    prec.add_argument("--digits", type=int, default=50,
                      help="working precision in decimal digits (default 50)")
    prec.add_argument("--terms", type=int,
                      help="number of expansion terms (default: all)")

    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=1,
                      help="parallel scan chunks (results are identical "
                           "for every value; default 1)")

    parser = argparse.ArgumentParser(
        prog="commtuple",
        description="Exact sequences, saddle-point asymptotics, and "
                    "inequality scans for commuting-tuple counting functions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("seq", parents=[fam, io],
                       help="exact sequence values for n = 0..max-n")
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("gl", parents=[io],
                       help="subgroup-count table g_ell(n) for n = 1..max-n")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)

    sub.add_parser("constants", parents=[fam, io, prec],
                   help="L-series data and expansion constants")

    p = sub.add_parser("compare", parents=[fam, io, prec],
                       help="exact vs asymptotic ratio table")
    p.add_argument("--points", default="100,1000,10000",
                   help="comma-separated n values (default 100,1000,10000)")

    p = sub.add_parser("logconcave", parents=[fam, io, jobs],
                       help="log-concavity scan")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=2)

    p = sub.add_parser("bo", parents=[fam, io, jobs],
                       help="Bessenrodt-Ono pair scan")
    p.add_argument("--max-sum", type=int, required=True)

    p = sub.add_parser("logconvex", parents=[fam, io, jobs],
                       help="log-convexity scan of n! N_ell(n)")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=2)

    p = sub.add_parser("oracle", parents=[fam, io],
                       help="independent brute-force routes")
    p.add_argument("oracle_op", choices=("hnf", "commuting", "direct", "pentagonal"))
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int)

    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    fields = {}
    for name in RunConfig.__dataclass_fields__:
        src = "max_n" if name == "max_n" else name
        if hasattr(args, src):
            val = getattr(args, src)
            if val is not None or name in ("fmt", "out"):
                fields[name] = val
    if "points" in fields and isinstance(fields["points"], str):
        fields["points"] = _parse_points(fields["points"])
    return RunConfig(**fields)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    print(f"commtuple {__version__}", file=sys.stderr)
    try:
        cfg = _config_from(args)
        text = _DISPATCH[cfg.subcommand](cfg)
    except (ValueError, ArithmeticError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
