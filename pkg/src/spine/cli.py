"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (well-formed input that
violates a mathematical precondition), 2 on a usage or syntax error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algebra import char_eval
from .cyclotomic import Cyclotomic
from .dsl import (
    format_coset,
    parse_coset,
    parse_grade,
    parse_matrix,
    parse_model,
    parse_rational,
    parse_spine,
    parse_vector,
)
from .errors import DomainError, DslSyntaxError
from .homomorphisms import affine_pullback, synthesize_idempotent
from .models import (
    GradeSemilattice,
    ModelSpec,
    SymbolicGrades,
    dual_descriptor,
    enumerate_grades,
    format_grade,
    grade_join,
    grade_meet,
)
from .padic import abs_p, nu_p, q_distinctness_witness
from .semigroup import spine_mul
from .semilattice import (
    covering_pairs,
    enumerate_hereditary_sets,
    is_principal,
    semicharacters,
    verify_axioms,
)
from .serialize import dumps, graded_dumps, graded_from_json

SIG_DIGITS = 12


class UsageError(Exception):
    pass


def format_number(x: float) -> str:
    if abs(x) < 10 ** -(SIG_DIGITS + 1):
        x = 0.0
    return format(x, f".{SIG_DIGITS}g")


def format_value(c: Cyclotomic) -> str:
    z = c.to_complex()
    return f"exact={c} re={format_number(z.real)} im={format_number(z.imag)}"


def _grade_lattice(model: ModelSpec, generators: Sequence[str] | None) -> GradeSemilattice | SymbolicGrades:
    found = enumerate_grades(model)
    if generators:
        gens = [parse_grade(model, g) for g in generators]
        return found.restrict(gens) if isinstance(found, SymbolicGrades) else found
    return found


def _load_json(arg: str):
    if arg.lstrip().startswith("{"):
        text = arg
    elif arg == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {arg if len(arg) < 40 else 'input'}: {exc}") from None


# commands ---------------------------------------------------------------


def cmd_semilattice(args, out) -> None:
    model = parse_model(args.spec)
    lat = _grade_lattice(model, args.generators)
    print(f"model: {model}", file=out)
    if isinstance(lat, SymbolicGrades):
        print("elements: infinite", file=out)
        print(f"description: {lat.description}", file=out)
        return
    s = lat.lattice
    print(f"elements: {len(lat)}", file=out)
    for i, g in enumerate(lat.grades):
        print(f"  {i} {format_grade(g)}", file=out)
    covers = covering_pairs(s)
    if len(covers) == len(s) - 1 and all(covers[k] == (k, k + 1) for k in range(len(covers))):
        print("chain: " + " < ".join(s.label(x) for x in s.elements), file=out)
    for x, y in covers:
        print(f"cover: {s.label(x)} < {s.label(y)}", file=out)
    bad = verify_axioms(s)
    print("axioms: " + ("ok" if not bad else f"{len(bad)} violations"), file=out)
    hs = enumerate_hereditary_sets(s)
    print(f"hereditary sets: {len(hs)}", file=out)
    print(f"semicharacters: {len(semicharacters(s))}", file=out)
    print("all principal: " + ("yes" if all(is_principal(s, h)[0] for h in hs) else "no"), file=out)


def cmd_join(args, out) -> None:
    model = parse_model(args.spec)
    a, b = parse_grade(model, args.g1), parse_grade(model, args.g2)
    op = grade_join if args.command == "join" else grade_meet
    print(format_grade(op(a, b)), file=out)


def cmd_spine_mul(args, out) -> None:
    model = parse_model(args.spec)
    s, t = parse_spine(model, args.s), parse_spine(model, args.t)
    print(str(spine_mul(s, t)), file=out)


def cmd_char_eval(args, out) -> None:
    model = parse_model(args.spec)
    s = parse_spine(model, args.s)
    u = graded_from_json(_load_json(args.u))
    print(format_value(char_eval(s, u)), file=out)


def cmd_idempotent(args, out) -> None:
    model = parse_model(args.spec)
    expr = parse_coset(args.expr)
    q = synthesize_idempotent(expr, model)
    print(graded_dumps(q), file=out)


def cmd_pullback(args, out) -> None:
    matrix = parse_matrix(args.matrix)
    offset = parse_vector(args.offset)
    u = graded_from_json(_load_json(args.u))
    target = parse_model(args.target) if args.target else None
    print(graded_dumps(affine_pullback(matrix, offset, u, target)), file=out)


def cmd_padic(args, out) -> None:
    r = parse_rational(args.r)
    v = nu_p(args.p, r)
    print(f"nu={'inf' if v == float('inf') else v} abs={abs_p(args.p, r)}", file=out)


def cmd_witness(args, out) -> None:
    for n, a, b in q_distinctness_witness(args.p, args.q, args.n):
        print(f"n={n} abs_{args.p}={a} abs_{args.q}={b}", file=out)


def cmd_dual(args, out) -> None:
    model = parse_model(args.spec)
    if not model.is_vector:
        raise DomainError(f"dual descriptors exist for R^n and Z^n only, not {model}")
    d = dual_descriptor(parse_grade(model, args.g))
    print(f"dual open subgroup: {d.subspace}", file=out)


def cmd_export_hasse(args, out) -> None:
    model = parse_model(args.spec)
    lat = _grade_lattice(model, args.generators)
    if isinstance(lat, SymbolicGrades):
        raise DomainError(f"{model} has infinitely many grades; pass --generators")
    s = lat.lattice
    edges = covering_pairs(s)
    if args.format == "json":
        doc = {
            "model": str(model),
            "nodes": [{"id": x, "label": s.label(x)} for x in s.elements],
            "edges": [[x, y] for x, y in edges],
        }
        print(dumps(doc), file=out)
        return
    print("digraph hasse {", file=out)
    print("  rankdir=BT;", file=out)
    for x in s.elements:
        label = s.label(x).replace("\\", "\\\\").replace('"', '\\"')
        print(f'  n{x} [label="{label}"];', file=out)
    for x, y in edges:
        print(f"  n{x} -> n{y};", file=out)
    print("}", file=out)


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spine", description="Exact spine semilattice computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("semilattice", help="list and verify the grade semilattice of a model")
    p.add_argument("spec")
    p.add_argument("--generators", nargs="+", metavar="GRADE")
    p.set_defaults(func=cmd_semilattice)

    for name in ("join", "meet"):
        p = sub.add_parser(name, help=f"{name} of two grades")
        p.add_argument("spec")
        p.add_argument("g1")
        p.add_argument("g2")
        p.set_defaults(func=cmd_join)

    p = sub.add_parser("spine-mul", help="product of two spine points")
    p.add_argument("spec")
    p.add_argument("s")
    p.add_argument("t")
    p.set_defaults(func=cmd_spine_mul)

    p = sub.add_parser("char-eval", help="evaluate the character of a spine point on a graded element")
    p.add_argument("spec")
    p.add_argument("s")
    p.add_argument("u", help="JSON file, '-' for stdin, or inline JSON")
    p.set_defaults(func=cmd_char_eval)

    p = sub.add_parser("idempotent", help="synthesize the idempotent of a coset-ring set")
    p.add_argument("spec")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_idempotent)

    p = sub.add_parser("pullback", help="pull a graded element back along h -> A h + b")
    p.add_argument("--matrix", required=True)
    p.add_argument("--offset", required=True)
    p.add_argument("--target")
    p.add_argument("u")
    p.set_defaults(func=cmd_pullback)

    p = sub.add_parser("padic", help="p-adic valuation and norm of a rational")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", required=True)
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser("witness", help="table separating the p-adic and q-adic norms")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("dual", help="dual descriptor of a vector grade")
    p.add_argument("spec")
    p.add_argument("g")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("export-hasse", help="Hasse diagram as DOT or JSON")
    p.add_argument("spec")
    p.add_argument("--generators", nargs="+", metavar="GRADE")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_export_hasse)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (DslSyntaxError, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
