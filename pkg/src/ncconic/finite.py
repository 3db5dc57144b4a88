"""Finite-dimensional unital associative algebras given by structure constants."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping, Sequence

from .errors import NotAssociative
from .exactfield import RationalFunction, scalar_to_json
from .linalg import inverse, mat_mul


def _zero() -> Fraction:
    return Fraction(0)


class FiniteAlgebra:
    """Algebra on an ordered basis; ``table[i][j]`` is the coefficient list of b_i b_j.

    The unit is stored as a coordinate vector rather than a basis index, so
    bases in which 1 is not a basis element are allowed.
    """

    def __init__(
        self,
        labels: Sequence[str],
        table: Sequence[Sequence[Sequence[Any]]],
        unit: Sequence[Any],
        parity: Sequence[int] | None = None,
        check: bool = True,
    ):
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.table = [[list(v) for v in row] for row in table]
        self.unit = list(unit)
        self.parity = list(parity) if parity is not None else None
        if check:
            self.check()

    # arithmetic -----------------------------------------------------
    def basis_vector(self, i: int) -> list[Any]:
        return [Fraction(int(k == i)) for k in range(self.dim)]

    def mul(self, a: Sequence[Any], b: Sequence[Any]) -> list[Any]:
        out: list[Any] = [_zero()] * self.dim
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                c = ai * bj
                for k, t in enumerate(self.table[i][j]):
                    if t:
                        out[k] = out[k] + c * t
        return out

    def add(self, a: Sequence[Any], b: Sequence[Any]) -> list[Any]:
        return [x + y for x, y in zip(a, b)]

    def scale(self, c: Any, a: Sequence[Any]) -> list[Any]:
        return [c * x for x in a]

    def power(self, a: Sequence[Any], e: int) -> list[Any]:
        out = list(self.unit)
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def left_matrix(self, a: Sequence[Any]) -> list[list[Any]]:
        """Matrix of x -> a x; column j is a * b_j."""
        cols = [self.mul(a, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def trace(self, a: Sequence[Any]) -> Any:
        t: Any = _zero()
        for i, ai in enumerate(a):
            if ai:
                for k in range(self.dim):
                    c = self.table[i][k][k]
                    if c:
                        t = t + ai * c
        return t

    # checks ---------------------------------------------------------
    def associativity_defects(self) -> list[tuple[int, int, int]]:
        bad = []
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.table[i][j]
                for k in range(self.dim):
                    left = self.mul(ij, self.basis_vector(k))
                    right = self.mul(self.basis_vector(i), self.table[j][k])
                    if any(x != y for x, y in zip(left, right)):
                        bad.append((i, j, k))
        return bad

    def is_associative(self) -> bool:
        return not self.associativity_defects()

    def unit_ok(self) -> bool:
        for i in range(self.dim):
            e = self.basis_vector(i)
            for prod in (self.mul(self.unit, e), self.mul(e, self.unit)):
                if any(x != y for x, y in zip(prod, e)):
                    return False
        return True

    def is_commutative(self) -> bool:
        return all(
            all(x == y for x, y in zip(self.table[i][j], self.table[j][i]))
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def parity_ok(self) -> bool:
        if self.parity is None:
            return True
        for i in range(self.dim):
            for j in range(self.dim):
                want = (self.parity[i] + self.parity[j]) % 2
                if any(c and self.parity[k] != want for k, c in enumerate(self.table[i][j])):
                    return False
        return True

    def check(self) -> None:
        bad = self.associativity_defects()
        if bad:
            raise NotAssociative(f"associativity fails on basis triples {bad[:5]}")
        if not self.unit_ok():
            raise NotAssociative("the declared unit is not a two-sided identity")
        if not self.parity_ok():
            raise NotAssociative("products do not respect the Z2 grading")

    # transformations -------------------------------------------------
    def change_basis(self, P: Sequence[Sequence[Any]], labels: Sequence[str] | None = None) -> FiniteAlgebra:
        """New basis c_j = sum_i P[i][j] b_i (P invertible)."""
        Pinv = inverse(P)
        n = self.dim
        cols = [[P[i][j] for i in range(n)] for j in range(n)]
        table = []
        for a in range(n):
            row = []
            for b in range(n):
                prod = self.mul(cols[a], cols[b])
                row.append([sum((Pinv[k][i] * prod[i] for i in range(n)), _zero()) for k in range(n)])
            table.append(row)
        unit = [sum((Pinv[k][i] * self.unit[i] for i in range(n)), _zero()) for k in range(n)]
        return FiniteAlgebra(labels or [f"c{j}" for j in range(n)], table, unit, check=False)

    def specialize(self, values: Mapping[str, Any]) -> FiniteAlgebra:
        """Substitute parameter values; vanishing denominators raise GenericityViolated."""

        def sub(c):
            return c.subs(values) if isinstance(c, RationalFunction) else c

        table = [[[sub(c) for c in v] for v in row] for row in self.table]
        return FiniteAlgebra(self.labels, table, [sub(c) for c in self.unit], self.parity)

    def to_json(self) -> dict:
        return {
            "basis": self.labels,
            "unit": [scalar_to_json(c) for c in self.unit],
            "structure_constants": [[[scalar_to_json(c) for c in v] for v in row] for row in self.table],
        }

    def __repr__(self) -> str:
        return f"FiniteAlgebra(dim={self.dim}, basis={self.labels})"


def from_multiplication(labels: Sequence[str], product, unit_index: int = 0, **kw) -> FiniteAlgebra:
    """Build from a function (i, j) -> coefficient list."""
    n = len(labels)
    table = [[product(i, j) for j in range(n)] for i in range(n)]
    unit = [Fraction(int(k == unit_index)) for k in range(n)]
    return FiniteAlgebra(labels, table, unit, **kw)


def transport(A: FiniteAlgebra, P: Sequence[Sequence[Any]]) -> FiniteAlgebra:
    return A.change_basis(P)


__all__ = ["FiniteAlgebra", "from_multiplication", "transport", "mat_mul"]
