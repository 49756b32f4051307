"""Text and JSON forms of compositions, expressions and tableaux."""

from __future__ import annotations

import json

from .compositions import format_composition, parse
from .tableaux import Filling, SkewShape


def _display_key(idx):
    if isinstance(idx, SkewShape):
        return (idx.size, tuple(-p for p in idx.outer), tuple(-p for p in idx.inner))
    return (sum(idx), tuple(-p for p in idx) + (1,))


def _index_text(idx) -> str:
    if isinstance(idx, SkewShape):
        return f"{format_composition(idx.outer)}//{format_composition(idx.inner)}"
    return format_composition(idx)


def display_terms(terms: dict):
    return sorted(terms.items(), key=lambda kv: _display_key(kv[0]))


def _join(chunks: list[tuple[int, str]]) -> str:
    if not chunks:
        return "0"
    out = []
    for t, (c, body) in enumerate(chunks):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        piece = body if mag == 1 and body else f"{mag}{'*' + body if body else ''}"
        if t == 0:
            out.append(("-" if c < 0 else "") + piece)
        else:
            out.append(f" {sign} {piece}")
    return "".join(out)


def format_expr(e) -> str:
    name = "R" if e.basis == "SkewR" else e.basis
    return _join([(c, f"{name}{_index_text(idx)}") for idx, c in display_terms(e.terms)])


def format_tensor(t) -> str:
    def side(comp):
        return f"F{format_composition(comp)}" if comp else "1"
    items = sorted(t.terms.items(), key=lambda kv: (sum(kv[0][0]), _display_key(kv[0][0]), _display_key(kv[0][1])))
    return _join([(c, f"{side(a)}⊗{side(b)}") for (a, b), c in items])


def format_poly(p) -> str:
    def mono(e):
        parts = []
        for i, x in enumerate(e, start=1):
            if x == 1:
                parts.append(f"x{i}")
            elif x:
                parts.append(f"x{i}^{x}")
        return "*".join(parts)
    items = sorted(p.terms.items(), key=lambda kv: tuple(-x for x in kv[0]))
    return _join([(c, mono(e)) for e, c in items])


# -------------------------------------------------------------------- JSON

def expr_to_json(e) -> dict:
    basis = e.basis
    terms = []
    for idx, c in display_terms(e.terms):
        if isinstance(idx, SkewShape):
            index = {"outer": list(idx.outer), "inner": list(idx.inner)}
        else:
            index = list(idx)
        terms.append({"index": index, "coeff": c})
    return {"basis": basis, "terms": terms}


def expr_from_json(data: dict):
    from .qsym import QSymExpr
    terms = {}
    for t in data["terms"]:
        idx = t["index"]
        if isinstance(idx, dict):
            key = SkewShape(tuple(idx["outer"]), tuple(idx["inner"]))
        else:
            key = tuple(idx)
        terms[key] = terms.get(key, 0) + int(t["coeff"])
    return QSymExpr(data["basis"], terms)


def tensor_to_json(t) -> dict:
    items = sorted(t.terms.items(), key=lambda kv: (sum(kv[0][0]), _display_key(kv[0][0]), _display_key(kv[0][1])))
    return {"basis": "F⊗F",
            "terms": [{"left": list(a), "right": list(b), "coeff": c} for (a, b), c in items]}


def tensor_from_json(data: dict):
    from .qsym import TensorExpr
    return TensorExpr({(tuple(t["left"]), tuple(t["right"])): int(t["coeff"]) for t in data["terms"]})


def poly_to_json(p) -> dict:
    items = sorted(p.terms.items(), key=lambda kv: tuple(-x for x in kv[0]))
    return {"vars": p.k, "terms": [{"exponents": list(e), "coeff": c} for e, c in items]}


def poly_from_json(data: dict):
    from .qsym import MonomialPoly
    return MonomialPoly(int(data["vars"]), {tuple(t["exponents"]): int(t["coeff"]) for t in data["terms"]})


def tableau_to_json(f: Filling) -> dict:
    return f.to_dict()


def tableau_from_json(data: dict) -> Filling:
    return Filling.from_dict(data)


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def load_tableaux(text: str) -> list[Filling]:
    """A JSON file holds one tableau object, a list of them, or the
    ``{"tableaux": [...]}`` payload written by ``enumerate --format json``."""
    data = json.loads(text)
    if isinstance(data, dict):
        data = data["tableaux"] if "tableaux" in data else [data]
    return [Filling.from_dict(d) for d in data]


__all__ = ["parse", "format_expr", "format_tensor", "format_poly", "expr_to_json",
           "expr_from_json", "tensor_to_json", "tensor_from_json", "poly_to_json",
           "poly_from_json", "tableau_to_json", "tableau_from_json", "load_tableaux"]
