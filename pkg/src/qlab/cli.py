"""Command-line entry point: ``qlab <command> ...``.

Exit status: 0 success, 1 validation or theorem failure, 2 parse/usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .congruence import generated_congruence, quotient
from .constructions import corpus, endomorphism_quantale, enumerate_quantales
from .errors import ParseError, QlabError, SizeLimitExceeded, StarMissing, ValidationError
from .io import Document, parse, serialize_quantale, structure_hash
from .report import analyze, format_text
from .theorems import run_suite


def _load(path: str) -> Document:
    return parse(Path(path).read_text(encoding="utf-8"))


def _need_quantale(doc: Document, path: str):
    if doc.quantale is None:
        raise ParseError(f"{path} holds a lattice, a quantale is required", 1, 1)
    return doc.quantale


def cmd_validate(args) -> int:
    doc = _load(args.file)
    kind = "quantale" if doc.kind == "module" else doc.kind
    print(f"ok: {kind} {doc.name}, order {doc.lattice.n}")
    if doc.module is not None:
        print(f"ok: {doc.module.side} module {doc.module_name}, order {doc.module.m}")
    return 0


def cmd_analyze(args) -> int:
    doc = _load(args.file)
    Q = _need_quantale(doc, args.file)
    rep = analyze(Q, doc.name)
    print(rep.to_json() if args.json else format_text(rep))
    return 0 if rep.all_passed else 1


def cmd_quotient(args) -> int:
    doc = _load(args.file)
    Q = _need_quantale(doc, args.file)
    try:
        a, b = (int(x) for x in args.collapse.split(","))
    except ValueError:
        print("--collapse expects two element indices, e.g. 1,2", file=sys.stderr)
        return 2
    if not (0 <= a < Q.n and 0 <= b < Q.n):
        print(f"elements must lie in 0..{Q.n - 1}", file=sys.stderr)
        return 2
    C = generated_congruence(Q, [(a, b)], star=args.star)
    K, _ = quotient(Q, C)
    sys.stdout.write(serialize_quantale(K, f"{doc.name}_quotient"))
    return 0


def cmd_endo(args) -> int:
    doc = _load(args.file)
    E = endomorphism_quantale(doc.lattice)
    sys.stdout.write(serialize_quantale(E.quantale, f"endo_{doc.name}"))
    return 0


def cmd_enumerate(args) -> int:
    qs = enumerate_quantales(args.order, with_star=args.star, up_to_iso=args.up_to_iso,
                             allow_order5=args.allow_order5)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for Q in qs:
        h = structure_hash(Q)
        (out / f"{h}.qnt").write_text(serialize_quantale(Q, h), encoding="utf-8")
    print(f"wrote {len(qs)} structures to {out}")
    return 0


def _check_one(Q, label: str) -> bool:
    results = run_suite(Q)
    ok = all(results)
    print(f"{'PASS' if ok else 'FAIL'} {label}")
    for r in results:
        if not r.ok:
            print("  " + r.line())
    return ok


def cmd_check(args) -> int:
    target = Path(args.target)
    files = sorted(target.glob("*.qnt")) if target.is_dir() else [target]
    ok = True
    for f in files:
        doc = parse(f.read_text(encoding="utf-8"))
        Q = _need_quantale(doc, str(f))
        ok &= _check_one(Q, f.name)
        if not target.is_dir():
            rep = analyze(Q, doc.name, run_theorems=False)
            print(f"simple={str(rep.simple).lower()} semisimple={str(rep.semisimple).lower()}")
            for note in rep.notes:
                print(f"note: {note}")
    return 0 if ok else 1


def cmd_selftest(args) -> int:
    ok = True
    total = 0
    for with_star in (False, True):
        for Q in corpus(args.max_order, with_star):
            total += 1
            results = run_suite(Q)
            if not all(results):
                ok = False
                print(f"FAIL {structure_hash(Q)}")
                for r in results:
                    if not r.ok:
                        print("  " + r.line())
    print(f"{'PASS' if ok else 'FAIL'} selftest over {total} structures of order <= {args.max_order}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qlab", description="Finite quantale toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="parse and validate a structure file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="report invariants of a quantale")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("quotient", help="quotient by the congruence generated by a pair")
    s.add_argument("file")
    s.add_argument("--collapse", required=True, metavar="A,B")
    s.add_argument("--star", action="store_true", help="generate a *-congruence")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("endo", help="endomorphism quantale of a lattice")
    s.add_argument("file")
    s.set_defaults(func=cmd_endo)

    s = sub.add_parser("enumerate", help="write all quantales of a given order")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--star", action="store_true")
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--allow-order5", action="store_true")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("check", help="run the theorem suite on a file or directory")
    s.add_argument("target")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("selftest", help="run the theorem suite over the built-in corpus")
    s.add_argument("--max-order", type=int, default=4)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 1
    except (SizeLimitExceeded, StarMissing) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
