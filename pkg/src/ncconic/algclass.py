"""Commutative four-dimensional algebras: radical, radical profile, the six
Frobenius types, minimal polynomials and Frobenius pairings."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Sequence

from .errors import NotCommutative, UnknownProfile, WrongDimension
from .exactfield import MultiPoly, bareiss_det
from .finite import FiniteAlgebra, from_multiplication
from .linalg import Echelon, nullspace


class FrobeniusType(str, Enum):
    K4 = "K4"
    K2xDUAL = "K2xDUAL"
    DUALxDUAL = "DUALxDUAL"
    JET3xK = "JET3xK"
    JET4 = "JET4"
    TWOVAR = "TWOVAR"

    @property
    def algebra(self) -> str:
        return DESCRIPTIONS[self]


DESCRIPTIONS = {
    FrobeniusType.K4: "k^4",
    FrobeniusType.K2xDUAL: "k[u]/(u^2) x k^2",
    FrobeniusType.DUALxDUAL: "k[u]/(u^2) x k[u]/(u^2)",
    FrobeniusType.JET3xK: "k[u]/(u^3) x k",
    FrobeniusType.JET4: "k[u]/(u^4)",
    FrobeniusType.TWOVAR: "k[u,v]/(u^2,v^2)",
}

PROFILES: dict[tuple[int, int, int], FrobeniusType] = {
    (0, 0, 0): FrobeniusType.K4,
    (1, 0, 0): FrobeniusType.K2xDUAL,
    (2, 0, 0): FrobeniusType.DUALxDUAL,
    (2, 1, 0): FrobeniusType.JET3xK,
    (3, 1, 0): FrobeniusType.TWOVAR,
    (3, 2, 1): FrobeniusType.JET4,
}


@dataclass(frozen=True)
class RadicalProfile:
    j1: int
    j2: int
    j3: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.j1, self.j2, self.j3)


def _span(vectors: Sequence[Sequence[Any]]) -> list[list[Any]]:
    ech = Echelon()
    for v in vectors:
        ech.add({k: c for k, c in enumerate(v) if c})
    dim = len(vectors[0]) if vectors else 0
    return [[row.get(k, Fraction(0)) for k in range(dim)] for row in ech.basis()]


def trace_form(A: FiniteAlgebra) -> list[list[Any]]:
    # tr(L_a L_b) = tr(L_{ab}) by associativity
    return [[A.trace(A.table[i][j]) for j in range(A.dim)] for i in range(A.dim)]


def radical(A: FiniteAlgebra) -> list[list[Any]]:
    """Kernel of the trace form; the nilradical in characteristic zero."""
    T = trace_form(A)
    eqs = [{j: c for j, c in enumerate(row) if c} for row in T]
    kernel = nullspace([e for e in eqs if e], range(A.dim))
    return [[v.get(k, Fraction(0)) for k in range(A.dim)] for v in kernel]


def _products(A: FiniteAlgebra, X: Sequence[Sequence[Any]], Y: Sequence[Sequence[Any]]) -> list[list[Any]]:
    prods = [A.mul(x, y) for x in X for y in Y]
    return _span(prods) if prods else []


def radical_profile(A: FiniteAlgebra) -> RadicalProfile:
    if A.dim != 4:
        raise WrongDimension(f"expected a 4-dimensional algebra, got {A.dim}")
    if not A.is_commutative():
        raise NotCommutative("radical profile is defined here for commutative algebras")
    J = radical(A)
    J2 = _products(A, J, J)
    J3 = _products(A, J2, J)
    return RadicalProfile(len(J), len(J2), len(J3))


def classify4(A: FiniteAlgebra) -> FrobeniusType:
    prof = radical_profile(A).as_tuple()
    if prof not in PROFILES:
        raise UnknownProfile(f"radical profile {prof} matches none of the six Frobenius types")
    return PROFILES[prof]


def is_semisimple(A: FiniteAlgebra) -> bool:
    return not radical(A)


def minimal_polynomial(A: FiniteAlgebra, a: Sequence[Any]) -> list[Any]:
    """Monic minimal polynomial of a, coefficients from the constant term up."""
    ech = Echelon(track=True)
    power = list(A.unit)
    for k in range(A.dim + 1):
        vec = {i: c for i, c in enumerate(power) if c}
        coords = ech.coordinates(vec) if ech.rank else ({} if not vec else None)
        if coords is not None:
            return [-coords.get(i, Fraction(0)) for i in range(k)] + [Fraction(1)]
        ech.add(vec, tag=k)
        power = A.mul(power, a)
    raise AssertionError("powers never became dependent")


def gram_determinant(A: FiniteAlgebra) -> MultiPoly:
    ell = [MultiPoly.var(f"l{k}") for k in range(A.dim)]
    G = [[sum((ell[k] * c for k, c in enumerate(A.table[i][j]) if c), MultiPoly()) for j in range(A.dim)] for i in range(A.dim)]
    return bareiss_det(G)


def frobenius_pairing_exists(A: FiniteAlgebra) -> bool:
    """Some functional l makes (a, b) -> l(ab) nondegenerate."""
    return bool(gram_determinant(A))


def report(A: FiniteAlgebra) -> dict:
    prof = radical_profile(A)
    try:
        kind: str | None = classify4(A).value
    except UnknownProfile:
        kind = None
    return {
        "profile": list(prof.as_tuple()),
        "type": kind,
        "semisimple": is_semisimple(A),
        "frobenius": frobenius_pairing_exists(A),
    }


# model algebras ----------------------------------------------------------


def _monomial_algebra(labels, exps, relations_zero) -> FiniteAlgebra:
    """Monomial algebra on exponent vectors; a product is zero when it leaves the list."""
    index = {e: k for k, e in enumerate(exps)}

    def product(i, j):
        e = tuple(a + b for a, b in zip(exps[i], exps[j]))
        out = [Fraction(0)] * len(exps)
        if e in index and not relations_zero(e):
            out[index[e]] = Fraction(1)
        return out

    return from_multiplication(labels, product)


def _product_algebra(parts: Sequence[FiniteAlgebra], labels: Sequence[str]) -> FiniteAlgebra:
    """Direct product; basis position 0 is the global unit, then each factor's
    non-unit basis, then the units of all factors except the first."""
    # work in the naive block basis, then move the unit to position 0
    blocks: list[tuple[int, int]] = []
    for p, A in enumerate(parts):
        for i in range(A.dim):
            blocks.append((p, i))
    n = len(blocks)
    table = []
    for (p, i) in blocks:
        row = []
        for (q, j) in blocks:
            out = [Fraction(0)] * n
            if p == q:
                prod = parts[p].table[i][j]
                for k, c in enumerate(prod):
                    if c:
                        out[blocks.index((p, k))] = c
            row.append(out)
        table.append(row)
    unit = [Fraction(0)] * n
    for p, A in enumerate(parts):
        for k, c in enumerate(A.unit):
            unit[blocks.index((p, k))] = c
    naive = FiniteAlgebra([f"b{k}" for k in range(n)], table, unit)
    # new basis: global unit first, then every block element except the first factor's unit
    first_unit = blocks.index((0, 0))
    cols = [unit] + [[Fraction(int(r == k)) for r in range(n)] for k in range(n) if k != first_unit]
    P = [[cols[j][i] for j in range(n)] for i in range(n)]
    out = naive.change_basis(P, labels)
    out.check()
    return out


def model_algebra(kind: FrobeniusType | str) -> FiniteAlgebra:
    """Structure constants of the six model algebras; basis position 0 is 1."""
    kind = FrobeniusType(kind)
    k1 = _monomial_algebra(["1"], [(0,)], lambda e: False)
    dual = _monomial_algebra(["1", "u"], [(0,), (1,)], lambda e: False)
    jet3 = _monomial_algebra(["1", "u", "u2"], [(0,), (1,), (2,)], lambda e: False)
    if kind is FrobeniusType.K4:
        return _product_algebra([k1, k1, k1, k1], ["1", "e2", "e3", "e4"])
    if kind is FrobeniusType.K2xDUAL:
        return _product_algebra([dual, k1, k1], ["1", "u", "e2", "e3"])
    if kind is FrobeniusType.DUALxDUAL:
        return _product_algebra([dual, dual], ["1", "u", "v", "e2"])
    if kind is FrobeniusType.JET3xK:
        return _product_algebra([jet3, k1], ["1", "u", "u2", "e2"])
    if kind is FrobeniusType.JET4:
        return _monomial_algebra(["1", "u", "u2", "u3"], [(0,), (1,), (2,), (3,)], lambda e: False)
    return _monomial_algebra(["1", "u", "v", "uv"], [(0, 0), (1, 0), (0, 1), (1, 1)], lambda e: False)


def square_zero_algebra() -> FiniteAlgebra:
    """k[u,v,w]/(u,v,w)^2: local with three-dimensional socle, not Frobenius."""
    return _monomial_algebra(
        ["1", "u", "v", "w"], [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], lambda e: False
    )


def _validate_profile_table() -> None:
    for kind, want in ((v, k) for k, v in PROFILES.items()):
        got = radical_profile(model_algebra(kind)).as_tuple()
        if got != want:
            raise AssertionError(f"model {kind.value} has profile {got}, table says {want}")


_validate_profile_table()
