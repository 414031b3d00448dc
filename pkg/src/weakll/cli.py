"""Command-line entry point.

    weakll check-laws [--dims 1,2] [--degree 3] [--seed 42] [--filter F,...] [--out FILE]
    weakll eval FILE [--bind FILE.json]
    weakll typecheck FILE
    weakll dump EXPR

Exit codes: 0 success, 1 a law failed or a program did not check/evaluate,
2 bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .dsl import DslError, evaluate, parse, parse_space, typecheck
from .dsl.typecheck import Checker, Checked
from .laws import FAMILIES, run_families

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dims(text: str) -> list:
    try:
        dims = [int(x) for x in text.strip().strip("{}[]").split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--dims must be a comma-separated list of integers, got {text!r}") from None
    if not dims or any(d < 1 for d in dims):
        raise UsageError("--dims needs at least one dimension, all >= 1")
    return dims


def _families(text: str | None) -> list:
    if text is None:
        return list(FAMILIES)
    names = [x.strip() for x in text.split(",") if x.strip()]
    unknown = [x for x in names if x not in FAMILIES]
    if unknown or not names:
        raise UsageError(f"unknown law family {', '.join(unknown) or '(none)'}; "
                         f"choose from {', '.join(FAMILIES)}")
    return names


def _emit(payload: dict, out: str | None = None):
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check_laws(args) -> int:
    dims = _dims(args.dims)
    if args.degree < 0:
        raise UsageError("--degree must be >= 0")
    families = _families(args.filter)
    results = run_families(families, dims, args.degree, args.seed)
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "skipped")}
    report = {
        "config": {"dims": dims, "degree": args.degree, "seed": args.seed, "families": families},
        "summary": {"total": len(results), "passed": counts["pass"], "failed": counts["fail"],
                    "skipped": counts["skipped"]},
        "results": [r.to_json() for r in results],
    }
    _emit(report, args.out)
    return EXIT_FAIL if counts["fail"] else EXIT_OK


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _error(message: str, path: str | None = None) -> int:
    prefix = f"{path}:" if path else ""
    sys.stderr.write(f"{prefix}{message}\n")
    return EXIT_FAIL


def _describe(checked: Checked) -> list:
    out = []
    for s in checked.program.statements:
        name = s.name
        if name in checked.spaces:
            sp = checked.spaces[name]
            out.append({"name": name, "kind": "space", "space": str(sp), "dim": sp.dim})
        elif name in checked.formulas:
            _, sp, report = checked.formulas[name]
            out.append({"name": name, "kind": "formula", "space": str(sp), **report.to_json()})
        else:
            kind = "input" if name in checked.inputs else "let"
            out.append({"name": name, "kind": kind, "type": checked.types[name].to_json()})
    return out


def cmd_typecheck(args) -> int:
    source = _read(args.file)
    try:
        checked = typecheck(parse(source))
    except DslError as e:
        return _error(str(e), args.file)
    _emit({"ok": True, "declarations": _describe(checked)})
    return EXIT_OK


def cmd_eval(args) -> int:
    source = _read(args.file)
    bindings = {}
    if args.bind:
        try:
            raw = json.loads(_read(args.bind))
            bindings = {k: serialize.from_json(v) for k, v in raw.items()}
        except (ValueError, KeyError, TypeError) as e:
            return _error(f"bad bindings file: {e}", args.bind)
    try:
        values = evaluate(typecheck(parse(source)), bindings)
    except DslError as e:
        return _error(str(e), args.file)
    _emit({name: serialize.to_json(v) for name, v in values.items()})
    return EXIT_OK


def cmd_dump(args) -> int:
    try:
        checker = Checker()
        checker.out = Checked(None)
        space = checker.space(parse_space(args.expr))
    except DslError as e:
        return _error(str(e))
    _emit({"space": str(space), "dim": space.dim, "json": space.to_json(),
           "labels": space.label_strings()})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weakll", description="Exact finite-dimensional model of "
                                "differential linear logic over weak spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check-laws", help="run the categorical law suites")
    c.add_argument("--dims", default="1,2", help="comma-separated base dimensions (default 1,2)")
    c.add_argument("--degree", type=int, default=3, help="truncation degree D (default 3)")
    c.add_argument("--seed", type=int, default=42, help="random seed (default 42)")
    c.add_argument("--filter", help="comma-separated law families: " + ", ".join(FAMILIES))
    c.add_argument("--out", help="write the JSON report here instead of stdout")
    c.set_defaults(fn=cmd_check_laws)

    e = sub.add_parser("eval", help="evaluate a DSL file")
    e.add_argument("file")
    e.add_argument("--bind", help="JSON file of input values")
    e.set_defaults(fn=cmd_eval)

    t = sub.add_parser("typecheck", help="typecheck a DSL file")
    t.add_argument("file")
    t.set_defaults(fn=cmd_typecheck)

    d = sub.add_parser("dump", help="list the basis of a space expression")
    d.add_argument("expr")
    d.set_defaults(fn=cmd_dump)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        sys.stderr.write(f"weakll: error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
