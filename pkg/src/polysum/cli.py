"""Command-line surface.

Every subcommand prints deterministic, self-describing records to stdout
(timings go to stderr) so runs are scriptable and diffable.  Exit status:
0 success, 1 verification mismatch, 2 usage error.  The worker count for
sieve chunking comes from the POLYSUM_WORKERS environment variable (default:
available parallelism); record bodies never depend on it.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from dataclasses import dataclass, field

from . import catalog, descent
from .polycore import SumDomain, parse_sum
from .primepoly import PrimePolyQuery, exception_scan as prime_exception_scan
from .qform import (
    DiagonalTernaryForm,
    canonical_reduction,
    qf_exception_set,
    verify_catalog_form,
    verify_reduction,
)
from .screening import (
    PRESETS,
    compare_with_catalog,
    format_triple,
    screen,
    unique_exception_scan,
)
from .sumset import exceptions, offset_universal_check

_CATALOG_FOR_PRESET = {
    "liouville": "liouville-7",
    "thm-1.1i": "thm-1.1i-20",
    "thm-1.3": "thm-1.3-31",
    "thm-1.4": "thm-1.4-64",
    "mixed-34-list": "mixed-34-25",
    "unique-29": "unique-29",
}


class UsageError(Exception):
    """Bad invocation arguments; exits with status 2."""


@dataclass
class ReportRecord:
    kind: str
    fields: dict = field(default_factory=dict)


def _fmt_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_fmt_value(v) for v in value) + "]"
    return str(value)


def emit_report(records: list[ReportRecord], fmt: str) -> str:
    """Render records: 'lines' = one sorted key=value record per line,
    'csv' = header row plus one row per record."""
    if fmt == "lines":
        out = []
        for rec in records:
            pairs = [f"kind={rec.kind}"]
            pairs += [f"{k}={_fmt_value(v)}" for k, v in sorted(rec.fields.items())]
            out.append(" ".join(pairs))
        return "\n".join(out) + "\n"
    if fmt == "csv":
        keys = sorted({k for rec in records for k in rec.fields})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind"] + keys)
        for rec in records:
            writer.writerow([rec.kind] +
                            [_fmt_value(rec.fields.get(k, "")) for k in keys])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def _print(records: list[ReportRecord], fmt: str) -> None:
    sys.stdout.write(emit_report(records, fmt))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_except(args) -> int:
    sum_ = parse_sum(args.sum, SumDomain.parse(args.domain))
    if args.offsets:
        offsets = [int(v) for v in args.offsets.split(",")]
        report = offset_universal_check(sum_.terms, sum_.domain, offsets,
                                        args.bound)
    else:
        report = exceptions(sum_, args.bound)
    rec = ReportRecord("exceptions", {
        "sum": str(sum_), "domain": sum_.domain.value, "bound": report.bound,
        "offsets": list(report.offsets), "count": len(report.exceptions),
        "result": list(report.exceptions)})
    _print([rec], args.format)
    return 0


def _cmd_screen(args) -> int:
    if args.preset not in PRESETS:
        raise UsageError(f"unknown preset {args.preset!r}; "
                         f"choose from {sorted(PRESETS)}")
    if args.preset == "unique-29":
        found = unique_exception_scan(args.preset, args.bound)
        rec = ReportRecord("screen", {
            "preset": args.preset,
            "bound": args.bound or PRESETS[args.preset].scan_bound,
            "survivors": [f"{format_triple(t)}:{e}" for t, e in found],
            "count": len(found)})
        _print([rec], args.format)
        return 0
    report = screen(args.preset, args.bound, args.search_bound)
    fields = {
        "preset": args.preset, "bound": report.bound,
        "search-bound": report.search_bound,
        "survivors": [format_triple(t) for t in report.survivors],
        "count": len(report.survivors),
        "eliminations": len(report.eliminations)}
    status = 0
    if args.compare:
        cat = catalog.load(_CATALOG_FOR_PRESET[args.preset])
        missing, extra = compare_with_catalog(report, cat.entries)
        fields["missing"] = [format_triple(t) for t in missing]
        fields["extra"] = [format_triple(t) for t in extra]
        if missing or extra:
            status = 1
    _print([ReportRecord("screen", fields)], args.format)
    return status


def _parse_form(text: str) -> DiagonalTernaryForm:
    coeffs = tuple(int(v) for v in text.split(","))
    if len(coeffs) != 3:
        raise UsageError(f"form must be three comma-separated coefficients, "
                         f"got {text!r}")
    return DiagonalTernaryForm(coeffs)


def _cmd_qform_except(args) -> int:
    form = _parse_form(args.form)
    found = qf_exception_set(form, args.bound)
    rec = ReportRecord("qform-except", {
        "form": str(form), "bound": args.bound, "count": len(found),
        "result": found if len(found) <= args.limit else found[: args.limit],
        "truncated": len(found) > args.limit})
    _print([rec], args.format)
    return 0


def _cmd_qform_verify_catalog(args) -> int:
    records = []
    status = 0
    for entry in catalog.regular_form_catalog():
        if args.entry and entry.display != args.entry:
            continue
        ok, sieve_only, family_only = verify_catalog_form(
            entry.form, entry.families, args.bound)
        records.append(ReportRecord("qform-verify", {
            "entry": entry.display, "form": str(entry.form),
            "bound": args.bound, "equal": ok,
            "sieve-only": sieve_only[:10], "family-only": family_only[:10]}))
        if not ok:
            status = 1
    if not records:
        raise UsageError(f"no catalog entry named {args.entry!r}")
    _print(records, args.format)
    return status


def _cmd_reduce(args) -> int:
    sum_ = parse_sum(args.sum, SumDomain.parse(args.domain))
    entry = canonical_reduction(sum_)
    conds = [("-" if c is None else
              f"{c.modulus}:{'|'.join(str(r) for r in c.residues)}")
             for c in entry.form.conditions]
    rec = ReportRecord("reduction", {
        "sum": str(sum_), "domain": sum_.domain.value,
        "multiplier": entry.multiplier, "constant": entry.constant,
        "form": str(entry.form), "conditions": conds})
    _print([rec], args.format)
    return 0


def _cmd_verify_reduction(args) -> int:
    records = []
    status = 0
    if args.display:
        entries = [(d, e) for d, e in catalog.explicit_reductions()
                   if d == args.display]
        if not entries:
            raise UsageError(f"unknown reduction display {args.display!r}; "
                             f"known: {[d for d, _ in catalog.explicit_reductions()]}")
    elif args.sum:
        sum_ = parse_sum(args.sum, SumDomain.parse(args.domain))
        entries = [(str(sum_), canonical_reduction(sum_))]
    else:
        entries = list(catalog.explicit_reductions())
    for display, entry in entries:
        ok, counterexample = verify_reduction(entry, args.bound)
        records.append(ReportRecord("reduction-verify", {
            "display": display, "sum": str(entry.source),
            "multiplier": entry.multiplier, "constant": entry.constant,
            "form": str(entry.form), "bound": args.bound, "holds": ok,
            "counterexample": "" if counterexample is None else counterexample}))
        if not ok:
            status = 1
    _print(records, args.format)
    return status


def _cmd_prime_scan(args) -> int:
    prime_filter = None
    if args.prime_mod:
        prime_filter = (args.prime_mod, args.prime_residue)
    query = PrimePolyQuery(
        coefficient=args.a, shape=args.shape, order=args.order,
        universe=args.universe, prime_filter=prime_filter)
    found = prime_exception_scan(query, args.bound)
    rec = ReportRecord("prime-scan", {
        "a": args.a, "shape": args.shape,
        "order": args.order if args.order else "",
        "universe": args.universe,
        "prime-filter": (f"{prime_filter[0]}:{prime_filter[1]}"
                         if prime_filter else ""),
        "bound": args.bound, "count": len(found),
        "max": found[-1] if found else "",
        "result": found if len(found) <= args.limit else found[: args.limit],
        "truncated": len(found) > args.limit})
    _print([rec], args.format)
    return 0


_DESCENT_OPS = {
    "realis": (3, lambda a: descent.realis_transform(*a)),
    "mod3": (3, lambda a: descent.descent_mod3(*a)),  # args: m, x, y
    "split36": (2, lambda a: descent.split_3_into_6(*a)),
    "mod5": (2, lambda a: descent.descent_mod5(*a)),
    "odd7": (2, lambda a: descent.descent_7_odd(*a)),
    "split2n": (1, lambda a: descent.split_two_n(*a)),
}


def _cmd_descent_check(args) -> int:
    if args.op not in _DESCENT_OPS:
        raise UsageError(f"unknown descent op {args.op!r}; "
                         f"choose from {sorted(_DESCENT_OPS)}")
    arity, fn = _DESCENT_OPS[args.op]
    values = [int(v) for v in args.args.split(",")]
    if len(values) != arity:
        raise UsageError(f"op {args.op} takes {arity} comma-separated arguments")
    try:
        result = fn(values)
    except ValueError as exc:
        _print([ReportRecord("descent-check", {
            "op": args.op, "args": values, "error": str(exc)})], args.format)
        return 2
    _print([ReportRecord("descent-check", {
        "op": args.op, "args": values, "result": list(result)})], args.format)
    return 0


def _conjecture_11(bound: int) -> tuple[list[ReportRecord], int]:
    records, status = [], 0
    for triple in catalog.load("conj-1.1-3").entries:
        sum_ = parse_sum("+".join(f"{a}p{m}" if a > 1 else f"p{m}"
                                  for a, m in triple), SumDomain.NATURALS)
        report = exceptions(sum_, bound)
        ok = not report.exceptions
        records.append(ReportRecord("conjecture", {
            "preset": "1.1", "sum": str(sum_), "bound": bound, "holds": ok,
            "result": list(report.exceptions[:10])}))
        status |= 0 if ok else 1
    return records, status


def _conjecture_12(bound: int) -> tuple[list[ReportRecord], int]:
    records, status = [], 0
    for m in range(3, 11):
        sum_ = parse_sum(f"p{m+1}+p{m+2}+p{m+3}", SumDomain.NATURALS)
        report = offset_universal_check(sum_.terms, sum_.domain,
                                        range(0, m - 2), bound)
        ok = not report.exceptions
        records.append(ReportRecord("conjecture", {
            "preset": "1.2", "m": m, "sum": str(sum_), "bound": bound,
            "offsets": list(range(0, m - 2)), "holds": ok,
            "result": list(report.exceptions[:10])}))
        status |= 0 if ok else 1
    return records, status


def _conjecture_triples(preset: str, list_id: str, bound: int
                        ) -> tuple[list[ReportRecord], int]:
    records, status = [], 0
    for triple in catalog.load(list_id).entries:
        text = format_triple(triple)
        report = exceptions(parse_sum(text, SumDomain.NATURALS), bound)
        ok = not report.exceptions
        records.append(ReportRecord("conjecture", {
            "preset": preset, "sum": text, "bound": bound, "holds": ok,
            "result": list(report.exceptions[:10])}))
        status |= 0 if ok else 1
    return records, status


def _conjecture_17(bound: int) -> tuple[list[ReportRecord], int]:
    checks = [
        ("base", PrimePolyQuery(2, "polygonal", 5, "odd"), [135, 345, 539], None),
        ("p=1(4)", PrimePolyQuery(2, "polygonal", 5, "odd", (4, 1)), None, 16859),
        ("p=3(4)", PrimePolyQuery(2, "polygonal", 5, "odd", (4, 3)), None, 27695),
        ("p=1(6)", PrimePolyQuery(2, "polygonal", 5, "odd", (6, 1)), None, 12845),
        ("p=5(6)", PrimePolyQuery(2, "polygonal", 5, "odd", (6, 5)), None, 15865),
        ("octagonal", PrimePolyQuery(2, "polygonal", 8, "odd"),
         [51, 185, 377, 471, 555, 2865], None),
    ]
    records, status = [], 0
    for label, query, want_list, want_max in checks:
        found = prime_exception_scan(query, bound)
        if want_list is not None:
            ok = found == want_list
        else:
            ok = bool(found) and found[-1] == want_max
        records.append(ReportRecord("conjecture", {
            "preset": "1.7", "check": label, "bound": bound, "holds": ok,
            "count": len(found), "max": found[-1] if found else ""}))
        status |= 0 if ok else 1
    return records, status


def _conjecture_18_spot(bound: int) -> tuple[list[ReportRecord], int]:
    entries = catalog.load("conj-1.8").entries
    sample = entries[::25]  # deterministic spot sample
    records, status = [], 0
    for triple in sample:
        text = format_triple(triple)
        z_exc = exceptions(parse_sum(text, SumDomain.INTEGERS), bound).exceptions
        n_exc = exceptions(parse_sum(text, SumDomain.NATURALS), bound).exceptions
        ok = not z_exc and bool(n_exc)
        records.append(ReportRecord("conjecture", {
            "preset": "1.8-spot", "sum": text, "bound": bound, "holds": ok,
            "z-exceptions": list(z_exc[:5]), "n-first-exception":
                n_exc[0] if n_exc else ""}))
        status |= 0 if ok else 1
    return records, status


_CONJECTURE_DEFAULT_BOUNDS = {
    "1.1": 1_000_000, "1.2": 500_000, "1.3": 10_000, "1.4": 10_000,
    "1.7": 1_000_000, "1.8-spot": 10_000,
}


def _cmd_conjecture(args) -> int:
    preset = args.preset
    if preset not in _CONJECTURE_DEFAULT_BOUNDS:
        raise UsageError(f"unknown conjecture preset {preset!r}; choose from "
                         f"{sorted(_CONJECTURE_DEFAULT_BOUNDS)}")
    bound = args.bound or _CONJECTURE_DEFAULT_BOUNDS[preset]
    if preset == "1.1":
        records, status = _conjecture_11(bound)
    elif preset == "1.2":
        records, status = _conjecture_12(bound)
    elif preset == "1.3":
        records, status = _conjecture_triples("1.3", "thm-1.3-31", bound)
    elif preset == "1.4":
        records, status = _conjecture_triples("1.4", "thm-1.4-64", bound)
    elif preset == "1.7":
        records, status = _conjecture_17(bound)
    else:
        records, status = _conjecture_18_spot(bound)
    _print(records, args.format)
    return status


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polysum",
        description="Sieves, screens and certificates for polygonal sums "
                    "and diagonal ternary forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("lines", "csv"), default="lines")

    p = sub.add_parser("except", help="exception list of a polygonal sum")
    p.add_argument("--sum", required=True, help='e.g. "p4+p5+p8" or "p3+2p4+p9"')
    p.add_argument("--domain", default="N", help="N or Z")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--offsets", default="", help="comma-separated shifts")
    add_format(p)
    p.set_defaults(fn=_cmd_except)

    p = sub.add_parser("screen", help="frontier screen of a candidate space")
    p.add_argument("--preset", required=True,
                   help=f"one of {sorted(PRESETS)}")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--search-bound", type=int, default=2000)
    p.add_argument("--compare", action=argparse.BooleanOptionalAction,
                   default=True, help="diff survivors against the catalog")
    add_format(p)
    p.set_defaults(fn=_cmd_screen)

    p = sub.add_parser("qform-except", help="exception set of a diagonal form")
    p.add_argument("--form", required=True, help='coefficients "a,b,c"')
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--limit", type=int, default=50, help="max listed entries")
    add_format(p)
    p.set_defaults(fn=_cmd_qform_except)

    p = sub.add_parser("qform-verify-catalog",
                       help="check catalog forms against their family sets")
    p.add_argument("--entry", default="", help="single display id, e.g. 4.10")
    p.add_argument("--bound", type=int, default=100_000)
    add_format(p)
    p.set_defaults(fn=_cmd_qform_verify_catalog)

    p = sub.add_parser("reduce", help="canonical form reduction of a sum")
    p.add_argument("--sum", required=True)
    p.add_argument("--domain", default="Z")
    add_format(p)
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("verify-reduction", help="verify reduction equivalences")
    p.add_argument("--display", default="", help="explicit display id")
    p.add_argument("--sum", default="", help="canonical reduction of this sum")
    p.add_argument("--domain", default="Z")
    p.add_argument("--bound", type=int, default=10_000)
    add_format(p)
    p.set_defaults(fn=_cmd_verify_reduction)

    p = sub.add_parser("prime-scan", help="n = p + a*x^2 / p + a*p_m(x) scan")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--shape", choices=("square", "polygonal"), default="square")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--universe", choices=("all", "odd", "coprime"),
                   default="coprime")
    p.add_argument("--prime-mod", type=int, default=0)
    p.add_argument("--prime-residue", type=int, default=0)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--limit", type=int, default=50)
    add_format(p)
    p.set_defaults(fn=_cmd_prime_scan)

    p = sub.add_parser("descent-check", help="run one descent transform")
    p.add_argument("--op", required=True, help=f"one of {sorted(_DESCENT_OPS)}")
    p.add_argument("--args", required=True, help="comma-separated integers")
    add_format(p)
    p.set_defaults(fn=_cmd_descent_check)

    p = sub.add_parser("conjecture", help="bounded conjecture verifications")
    p.add_argument("--preset", required=True,
                   help=f"one of {sorted(_CONJECTURE_DEFAULT_BOUNDS)}")
    p.add_argument("--bound", type=int, default=0)
    add_format(p)
    p.set_defaults(fn=_cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        status = args.fn(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"elapsed: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
