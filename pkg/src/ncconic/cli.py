"""Batch command-line interface: ``ncconic <verb> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .errors import NcConicError
from .exactfield import get_tower, parse_scalar
from .hesse import curve_report
from .pairs import KINDS, ConicPair, catalog, conic_pipeline, pair_iso
from .quadratic import conic
from .tables import render_text, reproduce_tables


def split_scalars(text: str) -> list[str]:
    """Split on commas outside brackets, so "[1,2]@Qe,3" gives two items."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _scalar(text: str | None, tower) -> Any:
    return None if text is None else parse_scalar(text, tower)


def _coeffs(text: str, tower) -> tuple:
    vals = [parse_scalar(s, tower) for s in split_scalars(text)]
    if len(vals) != 3:
        raise ValueError(f"expected three coefficients a,b,c, got {len(vals)}")
    return tuple(vals)


def _tower(args):
    return get_tower(args.tower) if args.tower else None


def _tensor_list(ts) -> list:
    return [t.to_json() for t in ts]


def cmd_tables(args) -> tuple[dict, str, int]:
    doc = reproduce_tables()
    return doc, render_text(doc), 0 if doc["all_match"] else 1


def cmd_cfa(args) -> tuple[dict, str, int]:
    tower = _tower(args)
    p = ConicPair(args.type, _coeffs(args.f, tower), _scalar(args.xi, tower))
    doc = conic_pipeline(p).to_json()
    text = "\n".join(
        [
            f"pair        {p.label()}",
            f"profile     {tuple(doc['profile'])}",
            f"type        {doc['type']} ({doc['algebra']})",
            f"semisimple  {doc['semisimple']}",
            f"basis       {', '.join(doc['cA']['basis'])}",
        ]
    )
    return doc, text, 0


def cmd_pairiso(args) -> tuple[dict, str, int]:
    if args.g is None:
        raise SystemExit("pairiso needs --g")
    tower = _tower(args)
    xi = _scalar(args.xi, tower)
    xi2 = _scalar(args.xi2, tower) if args.xi2 is not None else xi
    p = ConicPair(args.type, _coeffs(args.f, tower), xi)
    q = ConicPair(args.type, _coeffs(args.g, tower), xi2)
    res = pair_iso(p, q, tower)
    doc = {"first": p.to_json(), "second": q.to_json(), **res.to_json()}
    text = "true" if res.iso else "false"
    if res.witness is not None:
        text += "\nwitness " + json.dumps(doc["witness"])
    return doc, text, 0


def cmd_hesse(args) -> tuple[dict, str, int]:
    if args.lam is None:
        raise SystemExit("hesse needs --lambda")
    tower = get_tower(args.tower or "Qe")
    doc = curve_report(parse_scalar(args.lam, tower), tower)
    text = "\n".join(f"{k:12s} {json.dumps(v)}" for k, v in sorted(doc.items()))
    return doc, text, 0


def cmd_dual(args) -> tuple[dict, str, int]:
    tower = _tower(args)
    xi = _scalar(args.xi, tower)
    S = catalog(args.type, xi)
    A = conic(S, ConicPair(args.type, _coeffs(args.f, tower), xi).f) if args.f else S
    D = A.quadratic_dual()
    doc = {
        "algebra": A.name or args.type,
        "relations": _tensor_list(A.relations),
        "dual_relations": _tensor_list(D.relations),
        "dual_commutative": A.dual_is_commutative(),
    }
    text = "\n".join([f"dual relations  {[repr(r) for r in D.relations]}", f"commutative     {doc['dual_commutative']}"])
    return doc, text, 0


def cmd_center(args) -> tuple[dict, str, int]:
    tower = _tower(args)
    S = catalog(args.type, _scalar(args.xi, tower))
    center = S.center_degree2()
    doc = {
        "type": args.type,
        "hilbert": [S.hilbert_dim(d) for d in range(5)],
        "center_degree2": _tensor_list(center),
        "center_dim": len(center),
    }
    text = "\n".join([f"hilbert         {doc['hilbert']}", f"center (deg 2)  {[repr(t) for t in center]}"])
    return doc, text, 0


COMMANDS = {
    "tables": cmd_tables,
    "cfa": cmd_cfa,
    "pairiso": cmd_pairiso,
    "hesse": cmd_hesse,
    "dual": cmd_dual,
    "center": cmd_center,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncconic", description="Noncommutative conics: C(A), pair isomorphism, Hesse curves.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, needs_type=True):
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--tower", help="built-in tower name (Q, Qe, Qec, Qesq) or a tower JSON file")
        if needs_type:
            p.add_argument("--type", required=True, choices=KINDS)
            p.add_argument("--xi", help="parameter of type EC")

    common(sub.add_parser("tables", help="reproduce both tables; exit 1 on mismatch"), needs_type=False)
    p = sub.add_parser("cfa", help="compute C(A) for a conic")
    common(p)
    p.add_argument("--f", required=True, help='coefficients "a,b,c" of ax^2+by^2+cz^2')
    p = sub.add_parser("pairiso", help="decide isomorphism of two conic pairs")
    common(p)
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--xi2", help="xi for the second pair (type EC)")
    p = sub.add_parser("hesse", help="report on a Hesse cubic")
    common(p, needs_type=False)
    p.add_argument("--lambda", dest="lam", required=True)
    p = sub.add_parser("dual", help="quadratic dual of S or S/(f)")
    common(p)
    p.add_argument("--f")
    p = sub.add_parser("center", help="Hilbert dimensions and degree-2 center")
    common(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, text, status = COMMANDS[args.verb](args)
    except NcConicError as exc:
        print(json.dumps(exc.to_json(), sort_keys=True))
        return 1
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        print(json.dumps({"code": type(exc).__name__, "detail": str(exc)}, sort_keys=True))
        return 1
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
