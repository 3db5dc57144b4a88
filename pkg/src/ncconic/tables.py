"""Reproduce the isomorphism-class list and the C(A) classification table."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as F
from typing import Any, Callable

from .errors import TableMismatch
from .exactfield import QE, scalar_to_json
from .pairs import ConicPair, conic_pipeline, pair_iso
from .quadratic import commutative_presentation, conic

X, Y, Z = 0, 1, 2
EPS = QE.gen("e")
ALPHA, BETA = F(2), F(3)


def _quad(**terms) -> dict:
    """Commutative quadric from keyword monomials, e.g. xx=1, yz=-1."""
    idx = {"x": X, "y": Y, "z": Z}
    return {(idx[k[0]], idx[k[1]]): F(v) if not hasattr(v, "tower") else v for k, v in terms.items()}


@dataclass
class ClassificationRow:
    key: str
    pair: ConicPair
    expected: str
    dual: list[dict]


def classification_rows() -> list[ClassificationRow]:
    rows = [
        ClassificationRow("S: x^2", ConicPair("S", (F(1), F(0), F(0))), "TWOVAR", [_quad(yy=1), _quad(zz=1)]),
        ClassificationRow("S: x^2+y^2", ConicPair("S", (F(1), F(1), F(0))), "DUALxDUAL", [_quad(xx=1, yy=-1), _quad(zz=1)]),
        ClassificationRow("S: x^2+y^2+z^2", ConicPair("S", (F(1), F(1), F(1))), "K4", [_quad(xx=1, yy=-1), _quad(xx=1, zz=-1)]),
        ClassificationRow("S': x^2", ConicPair("Sprime", (F(1), F(0), F(0))), "TWOVAR", [_quad(yy=1), _quad(zz=1)]),
        ClassificationRow("S': y^2", ConicPair("Sprime", (F(0), F(1), F(0))), "JET4", [_quad(xx=1, yz=-1), _quad(zz=1)]),
        ClassificationRow("S': x^2+y^2", ConicPair("Sprime", (F(1), F(1), F(0))), "DUALxDUAL", [_quad(xx=1, yz=-1, yy=-1), _quad(zz=1)]),
    ]
    for a, want in ((F(1), "K2xDUAL"), (F(-1), "K2xDUAL"), (F(2), "K4")):
        rows.append(
            ClassificationRow(
                f"S': ax^2+y^2+z^2, a={a}",
                ConicPair("Sprime", (a, F(1), F(1))),
                want,
                [_quad(yy=1, zz=-1), _quad(xx=1, yz=-1, yy=-a)],
            )
        )
    for a, want in ((F(0), "JET4"), (F(1), "DUALxDUAL")):
        rows.append(
            ClassificationRow(
                f"N: ax^2+y^2, a={a}",
                ConicPair("NC", (a, F(1), F(0))),
                want,
                [_quad(xx=1, yz=-1, yy=-a, xz=a), _quad(zz=1)],
            )
        )
    for a, b, want in ((F(1), F(1), "K4"), (F(3, 4), F(3, 4), "JET3xK"), (F(-1, 4), F(-1, 4), "K2xDUAL")):
        rows.append(
            ClassificationRow(
                f"N: ax^2+by^2+z^2, (a,b)=({a},{b})",
                ConicPair("NC", (a, b, F(1))),
                want,
                [_quad(xx=1, yz=-1, zz=-a), _quad(yy=1, xz=-1, zz=-b)],
            )
        )
    return rows


UNLISTED = [
    ("S': y^2+z^2", ConicPair("Sprime", (F(0), F(1), F(1)))),
    ("N: x^2", ConicPair("NC", (F(1), F(0), F(0)))),
    ("N: z^2", ConicPair("NC", (F(0), F(0), F(1)))),
    ("N: ax^2+z^2, a=2", ConicPair("NC", (ALPHA, F(0), F(1)))),
]


def class_representatives() -> dict[str, list[tuple[str, ConicPair]]]:
    one, zero = F(1), F(0)
    return {
        "S": [
            ("x^2", ConicPair("S", (one, zero, zero))),
            ("x^2+y^2", ConicPair("S", (one, one, zero))),
            ("x^2+y^2+z^2", ConicPair("S", (one, one, one))),
        ],
        "Sprime": [
            ("x^2", ConicPair("Sprime", (one, zero, zero))),
            ("y^2", ConicPair("Sprime", (zero, one, zero))),
            ("x^2+y^2", ConicPair("Sprime", (one, one, zero))),
            ("y^2+z^2", ConicPair("Sprime", (zero, one, one))),
            ("ax^2+y^2+z^2", ConicPair("Sprime", (ALPHA, one, one))),
        ],
        "NC": [
            ("x^2", ConicPair("NC", (one, zero, zero))),
            ("z^2", ConicPair("NC", (zero, zero, one))),
            ("ax^2+y^2", ConicPair("NC", (ALPHA, one, zero))),
            ("ax^2+z^2", ConicPair("NC", (ALPHA, zero, one))),
            ("ax^2+by^2+z^2", ConicPair("NC", (ALPHA, BETA, one))),
        ],
    }


@dataclass
class Condition:
    key: str
    kind: str
    shape: Callable[[tuple], tuple]
    predicate: Callable[[tuple, tuple], bool]
    satisfying: list[tuple[tuple, tuple]]
    violating: list[tuple[tuple, tuple]]


def conditions() -> list[Condition]:
    e, e2 = EPS, EPS * EPS
    return [
        Condition(
            "S': ax^2+y^2+z^2 ~ a'x^2+y^2+z^2 iff a'^2 = a^2",
            "Sprime",
            lambda p: (p[0], F(1), F(1)),
            lambda p, q: q[0] ** 2 == p[0] ** 2,
            [((F(2),), (F(-2),)), ((F(3),), (F(3),)), ((F(1, 2),), (F(-1, 2),)), ((F(-5),), (F(5),))],
            [((F(2),), (F(3),)), ((F(2),), (F(1, 2),)), ((F(3),), (F(1),)), ((F(1),), (F(2),))],
        ),
        Condition(
            "N: ax^2+y^2 ~ a'x^2+y^2 iff a'^3 = a^3 or a^-3",
            "NC",
            lambda p: (p[0], F(1), F(0)),
            lambda p, q: q[0] ** 3 in (p[0] ** 3, p[0] ** -3),
            [((F(2),), (F(1, 2),)), ((F(2),), (2 * e,)), ((F(3),), (e2 / 3,)), ((F(1, 2),), (2 * e,))],
            [((F(2),), (F(3),)), ((F(2),), (F(-2),)), ((F(2),), (F(4),)), ((F(2),), (-2 * e,))],
        ),
        Condition(
            "N: ax^2+z^2 ~ a'x^2+z^2 iff a'^3 = a^3",
            "NC",
            lambda p: (p[0], F(0), F(1)),
            lambda p, q: q[0] ** 3 == p[0] ** 3,
            [((F(2),), (2 * e,)), ((F(2),), (2 * e2,)), ((F(3),), (F(3),)), ((F(-1, 3),), (-e / 3,))],
            [((F(2),), (F(1, 2),)), ((F(2),), (F(-2),)), ((F(2),), (F(5),)), ((F(3),), (3 + e,))],
        ),
        Condition(
            "N: ax^2+by^2+z^2 ~ a'x^2+b'y^2+z^2 iff (a'^3,b'^3,a'b') is (a^3,b^3,ab) or (b^3,a^3,ab)",
            "NC",
            lambda p: (p[0], p[1], F(1)),
            lambda p, q: (q[0] ** 3, q[1] ** 3, q[0] * q[1]) in ((p[0] ** 3, p[1] ** 3, p[0] * p[1]), (p[1] ** 3, p[0] ** 3, p[0] * p[1])),
            [
                ((F(2), F(3)), (2 * e, 3 * e2)),
                ((F(2), F(3)), (F(3), F(2))),
                ((F(2), F(3)), (3 * e2, 2 * e)),
                ((F(1, 2), F(-1)), (-e, e2 / 2)),
            ],
            [
                ((F(2), F(3)), (2 * e, 3 * e)),
                ((F(2), F(3)), (F(2), F(-3))),
                ((F(2), F(3)), (3 * e, 2 * e)),
                ((F(2), F(3)), (F(6), F(1))),
            ],
        ),
    ]


def _tuple_json(t: tuple) -> list:
    return [scalar_to_json(c) for c in t]


def reproduce_iso_classes() -> dict:
    out: dict[str, Any] = {"representatives": {}, "conditions": []}
    for kind, reps in class_representatives().items():
        checks = []
        for (n1, p1), (n2, p2) in itertools.combinations(reps, 2):
            iso = pair_iso(p1, p2).iso
            checks.append({"pair": [n1, n2], "isomorphic": iso, "match": not iso})
        out["representatives"][kind] = {"labels": [n for n, _ in reps], "checks": checks}
    for cond in conditions():
        samples = []
        for expected_flag, group in ((True, cond.satisfying), (False, cond.violating)):
            for p, q in group:
                predicted = bool(cond.predicate(p, q))
                got = pair_iso(ConicPair(cond.kind, cond.shape(p)), ConicPair(cond.kind, cond.shape(q))).iso
                samples.append(
                    {
                        "params": _tuple_json(p),
                        "params2": _tuple_json(q),
                        "condition_holds": predicted,
                        "sample_role": "satisfying" if expected_flag else "violating",
                        "isomorphic": got,
                        "match": got == predicted == expected_flag,
                    }
                )
        out["conditions"].append({"condition": cond.key, "samples": samples})
    return out


def reproduce_classification() -> dict:
    rows = []
    for row in classification_rows():
        res = conic_pipeline(row.pair, expected=row.expected)
        dual = conic(row.pair.algebra, row.pair.f).quadratic_dual()
        dual_ok = dual.same_relations(commutative_presentation(3, row.dual))
        rows.append(
            {
                "row": row.key,
                "type": res.ftype,
                "expected": row.expected,
                "profile": list(res.profile),
                "semisimple": res.semisimple,
                "dual_presentation_ok": dual_ok,
                "match": bool(res.match) and dual_ok,
            }
        )
    unlisted = []
    for key, p in UNLISTED:
        res = conic_pipeline(p)
        unlisted.append({"row": key, "type": res.ftype, "profile": list(res.profile), "expected": None})
    return {"rows": rows, "unlisted": unlisted, "types_seen": sorted({r["type"] for r in rows if r["type"]})}


def mismatches(doc: dict) -> list[str]:
    bad = []
    for kind, rep in doc["iso_classes"]["representatives"].items():
        for c in rep["checks"]:
            if not c["match"]:
                bad.append(f"iso classes {kind}: {c['pair'][0]} vs {c['pair'][1]}")
    for cond in doc["iso_classes"]["conditions"]:
        for s in cond["samples"]:
            if not s["match"]:
                bad.append(f"iso classes {cond['condition']}: {s['params']} vs {s['params2']}")
    for r in doc["classification"]["rows"]:
        if not r["match"]:
            bad.append(f"classification {r['row']}: got {r['type']}, expected {r['expected']}")
    return bad


def reproduce_tables(strict: bool = False) -> dict:
    doc = {"iso_classes": reproduce_iso_classes(), "classification": reproduce_classification()}
    bad = mismatches(doc)
    doc["all_match"] = not bad
    doc["mismatches"] = bad
    if strict and bad:
        raise TableMismatch("; ".join(bad))
    return doc


def render_text(doc: dict) -> str:
    lines = ["Conic pairs up to isomorphism"]
    for kind, rep in doc["iso_classes"]["representatives"].items():
        ok = all(c["match"] for c in rep["checks"])
        lines.append(f"  {kind:7s} {', '.join(rep['labels'])}  pairwise non-isomorphic: {'yes' if ok else 'NO'}")
    for cond in doc["iso_classes"]["conditions"]:
        n_ok = sum(s["match"] for s in cond["samples"])
        lines.append(f"  {cond['condition']}: {n_ok}/{len(cond['samples'])} samples agree")
    lines.append("")
    lines.append("C(A) by conic")
    width = max(len(r["row"]) for r in doc["classification"]["rows"] + doc["classification"]["unlisted"])
    for r in doc["classification"]["rows"]:
        flag = "ok" if r["match"] else "MISMATCH"
        lines.append(f"  {r['row']:{width}s}  {str(r['type']):10s} expected {r['expected']:10s} {flag}")
    for r in doc["classification"]["unlisted"]:
        lines.append(f"  {r['row']:{width}s}  {str(r['type']):10s} (no reference entry)")
    lines.append("")
    lines.append("all match" if doc["all_match"] else f"{len(doc['mismatches'])} mismatches")
    return "\n".join(lines)
