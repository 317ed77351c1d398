"""Command-line front end: ``parinv <command> --blocks n1,n2,...``.

Exit status: 0 when everything passes, 1 on a falsification finding,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import invariants as inv
from . import verify
from .parabolic import BlockComposition, compositions, render_diagram
from .poly import PolySyntaxError, Polynomial, parse_poly

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------
# scan

@dataclass
class ScanRow:
    blocks: tuple[int, ...]
    spec: inv.CombinedMinorSpec
    degree: int
    terms: int
    invariant: bool
    new: bool | None
    note: str

    def to_json(self) -> dict:
        return {
            "blocks": list(self.blocks),
            "spec": self.spec.to_json(),
            "label": self.spec.label(),
            "order": self.spec.order,
            "degree": self.degree,
            "term_count": self.terms,
            "invariant": self.invariant,
            "new_generator": self.new,
            "note": self.note,
        }


def scan(b: BlockComposition, max_k: int = 3, max_order: int | None = None, seed: int = 0) -> list[ScanRow]:
    """Invariance and novelty of every enumerated combined minor.

    A minor is not new when its expression through canonical matrices has no
    denominator (a polynomial in M and L), or when it lies in the span of
    products of M, L and minors already flagged new.
    """
    max_order = b.n if max_order is None else max_order
    accepted = [e.polynomial for e in inv.catalog(b, extras=False)]
    rows = []
    for spec in inv.enumerate_specs(b, max_k, max_order):
        f = inv.combined_minor(b, spec, validate=False)
        res = verify.is_invariant(f, b)
        if not res:
            rows.append(ScanRow(b.sizes, spec, f.degree(), len(f.terms), False, None,
                                f"changes under m={res.m}"))
            continue
        expr = verify.express_in_generators(f, b, check=False)
        if expr.is_polynomial:
            new, note = False, "polynomial in M, L"
        elif verify.in_span_of_products(f, accepted, seed):
            new, note = False, f"in the algebra generated so far; denominator {expr.denominator}"
        else:
            new, note = True, f"new; denominator {expr.denominator}"
            accepted.append(f)
        rows.append(ScanRow(b.sizes, spec, f.degree(), len(f.terms), True, new, note))
    return rows


def _scan_table(rows: list[ScanRow]) -> str:
    header = f"{'blocks':<14} {'spec':<28} {'ord':>3} {'deg':>3} {'inv':>3} {'new':>3}  note"
    out = [header]
    for r in rows:
        new = "-" if r.new is None else ("yes" if r.new else "no")
        out.append(f"{','.join(map(str, r.blocks)):<14} {r.spec.label():<28} {r.spec.order:>3} {r.degree:>3} "
                   f"{'yes' if r.invariant else 'NO':>3} {new:>3}  {r.note}")
    return "\n".join(out)


# ----------------------------------------------------------------------
# helpers

def _blocks(args) -> BlockComposition:
    if not args.blocks:
        raise UsageError("--blocks is required")
    return BlockComposition.parse(args.blocks)


def _read_polys(path: str) -> list[Polynomial]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if not lines:
        raise UsageError(f"{path} contains no polynomial")
    return [parse_poly(ln) for ln in lines]


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _finish_reports(args, reports: list[verify.CheckReport]) -> int:
    if not args.timing:
        for r in reports:
            r.ms = 0
    _emit(args, "\n".join(r.line() for r in reports), [r.to_json() for r in reports])
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FALSIFIED


def _named_polys(args, b: BlockComposition) -> list[tuple[str, Polynomial]]:
    if args.poly:
        polys = _read_polys(args.poly)
        return [(f"poly{i + 1}" if len(polys) > 1 else "poly", p) for i, p in enumerate(polys)]
    return [(e.name, e.polynomial) for e in inv.catalog(b)]


# ----------------------------------------------------------------------
# commands

def cmd_diagram(args) -> int:
    b = _blocks(args)
    print(render_diagram(b, "json" if args.format == "json" else "text", unicode=args.unicode))
    return EXIT_OK


def cmd_generators(args) -> int:
    b = _blocks(args)
    entries = inv.catalog(b)
    text = "\n".join(f"{e.name:<16} deg {e.polynomial.degree():<3} terms {len(e.polynomial.terms):<6} "
                     f"{e.polynomial}" for e in entries)
    _emit(args, text, [e.to_json() for e in entries])
    return EXIT_OK


def cmd_check(args) -> int:
    b = _blocks(args)
    if args.what == "identities":
        return _finish_reports(args, verify.identity_suite(b, timing=args.timing))
    if args.what == "invariance":
        reports = []
        for name, f in _named_polys(args, b):
            def run(f=f):
                res = verify.is_invariant(f, b)
                return ("pass", None) if res else ("fail", f"m={res.m}: {res.witness}")
            reports.append(verify.run_check(f"invariance {name}", b, run, timing=args.timing))
        return _finish_reports(args, reports)
    # independence
    if args.poly:
        named = _named_polys(args, b)
    else:
        named = [(e.name, e.polynomial) for e in inv.catalog(b, extras=False)]
    fs = [f for _, f in named]
    if not fs:
        raise UsageError(f"no polynomials to test for blocks {b}")

    def run():
        res = verify.jacobian_independent(fs, seed=args.seed)
        return res.status, res.witness()

    report = verify.run_check("independence " + ",".join(n for n, _ in named), b, run,
                              seed=args.seed, timing=args.timing)
    return _finish_reports(args, [report])


def cmd_express(args) -> int:
    b = _blocks(args)
    if args.name:
        found = {e.name: e.polynomial for e in inv.catalog(b)}
        if args.name not in found:
            raise UsageError(f"no generator named {args.name!r}; choose from {', '.join(found)}")
        named = [(args.name, found[args.name])]
    elif args.poly:
        named = _named_polys(args, b)
    else:
        raise UsageError("express needs --poly FILE or --name NAME")
    results, lines, status = [], [], EXIT_OK
    for name, f in named:
        try:
            expr = verify.express_in_generators(f, b)
        except verify.NotInvariant as exc:
            status = EXIT_FALSIFIED
            lines.append(f"{name}: not invariant (m={exc.m}, change {exc.witness})")
            results.append({"name": name, "invariant": False, "m": exc.m, "witness": str(exc.witness)})
            continue
        lines.append(f"{name} = {expr}")
        results.append({"name": name, "invariant": True, **expr.to_json()})
    _emit(args, "\n".join(lines), results)
    return status


def cmd_scan(args) -> int:
    if args.blocks:
        targets = [_blocks(args)]
    elif args.max_n:
        targets = [b for n in range(2, args.max_n + 1) for b in compositions(n, min_blocks=2)]
    else:
        raise UsageError("scan needs --blocks or --max-n")
    rows = []
    for b in targets:
        rows.extend(scan(b, args.max_k, args.max_order, seed=args.seed))
    _emit(args, _scan_table(rows), [r.to_json() for r in rows])
    return EXIT_OK if all(r.invariant for r in rows) else EXIT_FALSIFIED


def cmd_relations(args) -> int:
    b = _blocks(args)
    named = verify.catalog_generators(b)
    if args.poly:
        named.update(dict(_named_polys(args, b)))
    degree = args.max_degree or verify.default_relation_degree(b)
    rels = verify.relation_search(named, degree, seed=args.seed)
    text = f"generators: {', '.join(named)}\nrelations up to weighted degree {degree}: {len(rels)}"
    text += "".join(f"\n  [{r.degree}] {r}" for r in rels)
    _emit(args, text, {"generators": list(named), "max_degree": degree,
                       "relations": [{"degree": r.degree, "polynomial": str(r)} for r in rels]})
    return EXIT_OK


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--blocks", help="block sizes, e.g. 2,1,3,2")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--timing", action="store_true", help="record wall time in reports")

    p = argparse.ArgumentParser(prog="parinv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("diagram", parents=[common], help="draw S and Phi")
    d.add_argument("--unicode", action="store_true")
    d.set_defaults(func=cmd_diagram)

    sub.add_parser("generators", parents=[common], help="list the invariant catalog").set_defaults(
        func=cmd_generators)

    c = sub.add_parser("check", parents=[common], help="run checks")
    c.add_argument("what", choices=("invariance", "independence", "identities"))
    c.add_argument("--poly", metavar="FILE", help="one polynomial per line")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("express", parents=[common], help="rewrite an invariant in M and L")
    e.add_argument("--poly", metavar="FILE")
    e.add_argument("--name", help="catalog entry, e.g. D")
    e.set_defaults(func=cmd_express)

    s = sub.add_parser("scan", parents=[common], help="combined minors: invariance and novelty")
    s.add_argument("--max-k", type=int, default=3)
    s.add_argument("--max-order", type=int, default=None, help="default: n")
    s.add_argument("--max-n", type=int, help="scan every composition with at least two blocks up to this n")
    s.set_defaults(func=cmd_scan)

    r = sub.add_parser("relations", parents=[common], help="relations among the generators")
    r.add_argument("--max-degree", type=int, default=None)
    r.add_argument("--poly", metavar="FILE", help="extra generators")
    r.set_defaults(func=cmd_relations)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PolySyntaxError, ValueError, inv.Inapplicable) as exc:
        print(f"parinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
