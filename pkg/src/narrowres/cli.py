"""Command-line entry point: ``narrowres <command> ...``.

Exit status: 0 valid/success, 1 invalid proof or violated bound,
2 usage, I/O or parse error, 3 no refutation within the width budget.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from .checker import check_res, check_tree_dnf
from .expand import eliminate_weakening, expand
from .formats import (
    ParseError, parse_dimacs, parse_dnf_proof, parse_res_proof,
    serialize_dimacs, serialize_dnf_proof, serialize_res_proof, stats,
)
from .gen import NoRefutationWithinWidth, gen_chain, gen_php, gen_randk, prove_bounded
from .narrow import narrow, narrow_bound

OK, INVALID, USAGE, NO_REFUTATION = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise _Usage(f"cannot read {path}: {e.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as e:
        raise _Usage(f"cannot write {path}: {e.strerror}") from None


def _load_proof(path: str, kind: str):
    text = _read(path)
    return parse_res_proof(text) if kind == "res" else parse_dnf_proof(text)


def cmd_check(args) -> int:
    f = parse_dimacs(_read(args.cnf))
    p = _load_proof(args.proof, args.kind)
    if args.kind == "res":
        report = check_res(f, p, args.max_width)
    else:
        report = check_tree_dnf(f, p)
        if args.max_width is not None and report.stats.width > args.max_width:
            print(f"term width {report.stats.width} exceeds --max-width {args.max_width}")
            return INVALID
    print(report.to_json() if args.json else report.render())
    return OK if report.valid else INVALID


def cmd_expand(args) -> int:
    f = parse_dimacs(_read(args.cnf))
    p = parse_res_proof(_read(args.proof))
    report = check_res(f, p)
    if not report.valid:
        print(report.render())
        return INVALID
    if p.has_weakening or any(ln.clause.is_tautology for ln in p.lines):
        p = eliminate_weakening(f, p)
        print(f"note: weakening/tautologies eliminated, {len(p)} lines remain")
    tree = expand(f, p)
    bound = 4 * len(p) + 2 * len(f) + 1
    own = check_tree_dnf(f, tree)
    ok = own.valid and len(tree) <= bound and own.stats.width <= max(p.width, 1)
    _write(args.output, serialize_dnf_proof(tree))
    print(f"term-width={own.stats.width} lines={len(tree)} (bound 4S+2m+1={bound})")
    if not own.valid:
        print(own.render())
    return OK if ok else INVALID


def cmd_narrow(args) -> int:
    f = parse_dimacs(_read(args.cnf))
    p = parse_dnf_proof(_read(args.proof))
    report = check_tree_dnf(f, p)
    if not report.valid:
        print(report.render())
        return INVALID
    q = narrow(f, p)
    bound = narrow_bound(f, p)
    own = check_res(f, q, bound)
    _write(args.output, serialize_res_proof(q))
    print(f"width={q.width} lines={len(q)} (bound l*ceil(log2 L)+max(k,l)={bound})")
    if not own.valid:
        print(own.render())
    return OK if own.valid else INVALID


def cmd_prove(args) -> int:
    f = parse_dimacs(_read(args.cnf))
    try:
        p = prove_bounded(f, args.max_width)
    except NoRefutationWithinWidth as e:
        print(f"no refutation: {e}")
        return NO_REFUTATION
    _write(args.output, serialize_res_proof(p))
    print(f"width={p.width} lines={len(p)}")
    return OK


def cmd_gen(args) -> int:
    if args.family == "php":
        f = gen_php(args.pigeons, args.holes)
    elif args.family == "chain":
        f = gen_chain(args.length)
    else:
        f = gen_randk(args.vars, args.clauses, args.width, args.seed)
    _write(args.output, serialize_dimacs(f))
    return OK


def cmd_stats(args) -> int:
    p = _load_proof(args.proof, args.kind)
    f = parse_dimacs(_read(args.cnf)) if args.cnf else None
    s = stats(p, f)
    print(" ".join(f"{k}={v}" for k, v in s.as_dict().items() if v is not None))
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="narrowres", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify a proof against a CNF")
    c.add_argument("--cnf", required=True)
    c.add_argument("--proof", required=True)
    c.add_argument("--kind", choices=("res", "dnft"), required=True)
    c.add_argument("--max-width", type=int)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    for name, func, hlp in (
        ("expand", cmd_expand, "Resolution refutation -> tree-like Res(w) (DNFT)"),
        ("narrow", cmd_narrow, "tree-like Res(l) refutation -> narrow Resolution (RES)"),
    ):
        c = sub.add_parser(name, help=hlp)
        c.add_argument("--cnf", required=True)
        c.add_argument("--proof", required=True)
        c.add_argument("-o", "--output", required=True)
        c.set_defaults(func=func)

    c = sub.add_parser("prove", help="width-bounded saturation prover")
    c.add_argument("--cnf", required=True)
    c.add_argument("--max-width", type=int, required=True)
    c.add_argument("-o", "--output", required=True)
    c.set_defaults(func=cmd_prove)

    c = sub.add_parser("gen", help="generate a CNF family")
    fam = c.add_subparsers(dest="family", required=True)
    g = fam.add_parser("php")
    g.add_argument("--pigeons", type=int, required=True)
    g.add_argument("--holes", type=int, required=True)
    g = fam.add_parser("chain")
    g.add_argument("--length", type=int, required=True)
    g = fam.add_parser("randk")
    g.add_argument("--vars", type=int, required=True)
    g.add_argument("--clauses", type=int, required=True)
    g.add_argument("--width", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    for g in fam.choices.values():
        g.add_argument("-o", "--output")
    c.set_defaults(func=cmd_gen)

    c = sub.add_parser("stats", help="size measures of a proof")
    c.add_argument("--proof", required=True)
    c.add_argument("--kind", choices=("res", "dnft"), required=True)
    c.add_argument("--cnf")
    c.set_defaults(func=cmd_stats)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args)
    except (_Usage, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
