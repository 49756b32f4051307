"""Command-line interface: ``yrqsym VERB [options]``.

Exit status is 0 on success, 1 when a verification suite finds a
counterexample and 2 for usage errors (bad arguments, indices or files).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .bijections import f_map, h_map, phi, phi_tilde, rho
from .compositions import composition, format_composition, parse, partition
from .insertion_lr import insert
from .qsym import (QSymExpr, coproduct, expand_in_F, product_and_decompose, to_M, to_monomials,
                   transition_matrix_R_to_F)
from .tableaux import Filling, Kind, SkewShape, StructuralError, enumerate_fillings, enumerate_standard
from .verify import SUITES, VerifyConfig, run_suite

EXPAND_BASES = {"R": "R", "RS": "RS", "S": "S", "QS": "QS", "skewR": "SkewR", "schur": "s"}
MAPS = {
    "rho": lambda t, m: rho(t),
    "f": lambda t, m: f_map(t, m if m is not None else max((v for r in t.rows for v in r), default=0)),
    "h": lambda t, m: h_map(t),
    "phi": lambda t, m: phi(t),
    "phitilde": lambda t, m: phi_tilde(t),
}


class UsageError(Exception):
    pass


def _composition_arg(text: str, allow_empty: bool = False):
    try:
        parts = parse(text)
        return parts if (allow_empty and not parts) else composition(parts)
    except ValueError as exc:
        raise UsageError(f"bad composition {text!r}: {exc}") from exc


def _partition_arg(text: str):
    try:
        return partition(parse(text)) if parse(text) else ()
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from exc


def _read_tableaux(path: str) -> list[Filling]:
    try:
        return io.load_tableaux(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except (ValueError, StructuralError) as exc:
        raise UsageError(f"bad tableau file {path}: {exc}") from exc


# ------------------------------------------------------------------ verbs

def cmd_expand(args):
    basis = EXPAND_BASES[args.basis]
    if basis == "SkewR":
        if args.inner is None:
            raise UsageError("--basis skewR needs --inner")
        index = SkewShape(_composition_arg(args.index), parse(args.inner))
    elif basis == "s":
        index = _partition_arg(args.index)
    else:
        index = _composition_arg(args.index)
    expr = QSymExpr.basis_element(basis, index)
    if args.to == "monomials":
        if args.vars is None:
            raise UsageError("--to monomials needs --vars")
        poly = to_monomials(expr, args.vars)
        return io.format_poly(poly), io.poly_to_json(poly)
    out = to_M(expr) if args.to == "M" else expand_in_F(expr)
    return io.format_expr(out), io.expr_to_json(out)


def cmd_multiply(args):
    alpha, lam = _composition_arg(args.r), _partition_arg(args.schur)
    out = product_and_decompose(QSymExpr("R", {alpha: 1}), QSymExpr("s", {lam: 1}))
    return io.format_expr(out), io.expr_to_json(out)


def cmd_coproduct(args):
    out = coproduct(QSymExpr("R", {_composition_arg(args.r): 1}))
    return io.format_tensor(out), io.tensor_to_json(out)


def cmd_enumerate(args):
    kind = Kind(args.kind)
    shape = SkewShape(_composition_arg(args.shape), parse(args.inner) if args.inner else ())
    if args.standard:
        found = enumerate_standard(kind, shape)
    else:
        if args.max is None:
            raise UsageError("enumerate needs --max or --standard")
        found = enumerate_fillings(kind, shape, args.max)
    text = "\n\n".join(t.render() for t in found)
    text = (text + "\n\n" if text else "") + f"{len(found)} tableaux"
    return text, {"count": len(found), "tableaux": [t.to_dict() for t in found]}


def cmd_biject(args):
    outputs = [MAPS[args.map](t, args.m) for t in _read_tableaux(args.input)]
    text = "\n\n".join(t.render() for t in outputs)
    data = [t.to_dict() for t in outputs]
    return text, data[0] if len(data) == 1 else data


def cmd_insert(args):
    tableaux = _read_tableaux(args.tableau)
    if len(tableaux) != 1:
        raise UsageError("--tableau must hold exactly one tableau")
    try:
        values = [int(v) for v in args.values.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --values {args.values!r}") from exc
    t, steps = tableaux[0], []
    for x in values:
        res = insert(t, x)
        steps.append({"value": x, "new_cell": list(res.new_cell),
                      "bump_path": [list(c) for c in res.bump_path]})
        t = res.tableau
    lines = [f"insert {s['value']}: new cell {tuple(s['new_cell'])}, path "
             + " ".join(str(tuple(c)) for c in s["bump_path"]) for s in steps]
    return "\n".join(lines + [t.render()]), {"tableau": t.to_dict(), "steps": steps}


def cmd_matrix(args):
    if args.n < 1:
        raise UsageError("--n must be positive")
    m = transition_matrix_R_to_F(args.n)
    labels = [format_composition(a) for a in m.columns]
    lines = ["R \\ F " + " ".join(labels)]
    for alpha, row in zip(m.rows, m.entries):
        lines.append(f"{format_composition(alpha)}: " + " ".join(str(v) for v in row))
    lines.append(f"upper unitriangular: {m.is_upper_unitriangular()}")
    data = {"rows": [list(a) for a in m.rows], "columns": [list(b) for b in m.columns],
            "entries": [list(r) for r in m.entries],
            "upper_unitriangular": m.is_upper_unitriangular()}
    return "\n".join(lines), data


def cmd_verify(args):
    cfg = VerifyConfig.from_env()
    if args.max_n is not None:
        cfg = cfg.capped(args.max_n)
    names = [args.suite] if args.suite else list(SUITES)
    results = [run_suite(n, cfg) for n in names]
    text = "\n".join(r.line() for r in results)
    data = [{"suite": r.name, "passed": r.passed, "checked": r.checked,
             "seconds": round(r.seconds, 3), "counterexample": r.certificate} for r in results]
    return text, data, 0 if all(r.passed for r in results) else 1


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="yrqsym", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", help="expand a basis element")
    p.add_argument("--basis", choices=tuple(EXPAND_BASES), required=True)
    p.add_argument("--index", required=True, help='composition such as "(2,3)"')
    p.add_argument("--inner", help="inner composition for skewR")
    p.add_argument("--to", choices=("F", "M", "monomials"), default="F")
    p.add_argument("--vars", type=int, help="variable count for --to monomials")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("multiply", help="expand R_alpha * s_lambda in the R basis")
    p.add_argument("--r", required=True)
    p.add_argument("--schur", required=True)
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("coproduct", help="coproduct of R_alpha in F ⊗ F")
    p.add_argument("--r", required=True)
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("enumerate", help="list the fillings of a shape")
    p.add_argument("--kind", choices=[k.value for k in Kind], required=True)
    p.add_argument("--shape", required=True)
    p.add_argument("--inner")
    p.add_argument("--max", type=int)
    p.add_argument("--standard", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("biject", help="apply a bijection to tableaux in a JSON file")
    p.add_argument("--map", choices=tuple(MAPS), required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=int, help="alphabet size for f (default: largest entry)")
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("insert", help="row-insert values into a tableau")
    p.add_argument("--tableau", required=True)
    p.add_argument("--values", required=True, help="comma separated, e.g. 3,1,2")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("matrix", help="R-to-F transition matrix in degree n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=tuple(SUITES))
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except (UsageError, StructuralError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text, data, *rest = result
    if args.format == "json":
        print(json.dumps(data, ensure_ascii=False))
    else:
        print(text)
    return rest[0] if rest else 0


if __name__ == "__main__":
    sys.exit(main())
