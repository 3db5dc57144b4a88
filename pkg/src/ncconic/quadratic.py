"""Quadratic algebras T(V)/(R) handled degree by degree with exact linear algebra."""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .errors import InhomogeneousRelation, KernelNotOneDimensional, NotCentral
from .linalg import Echelon, axpy, clean, nullspace, same_span
from .tensoralg import Tensor, Word, word_key, words


def _as_tensor(n: int, r: Tensor | dict) -> Tensor:
    return r if isinstance(r, Tensor) else Tensor(n, r)


class QuadraticAlgebra:
    """T(V)/(R) with dim V = n and R a subspace of V (x) V.

    Degree-d pieces of the ideal are built lazily and memoised; the memo is
    guarded by a lock so concurrent readers see one consistent fill.
    """

    def __init__(self, n: int, relations: Iterable[Tensor | dict], name: str | None = None):
        self.n = n
        self.name = name
        ech = Echelon(order=word_key)
        for r in relations:
            t = _as_tensor(n, r)
            if not t.is_homogeneous(2):
                raise InhomogeneousRelation(f"relation {t!r} is not homogeneous of degree 2")
            ech.add(t.terms)
        self.relations: list[Tensor] = [Tensor(n, ech.rows[p]) for p in sorted(ech.rows, key=word_key)]
        self._ideal: dict[int, Echelon] = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"QuadraticAlgebra(n={self.n}, dim R={len(self.relations)})"

    @property
    def dim_relations(self) -> int:
        return len(self.relations)

    def ideal(self, d: int) -> Echelon:
        """Echelon form of I_d = sum_{i+j=d-2} V^i R V^j inside V^d."""
        with self._lock:
            if d not in self._ideal:
                ech = Echelon(order=word_key)
                if d >= 2:
                    for i in range(d - 1):
                        j = d - 2 - i
                        for u in words(self.n, i):
                            for w in words(self.n, j):
                                for r in self.relations:
                                    ech.add({u + rw + w: c for rw, c in r.terms.items()})
                self._ideal[d] = ech
            return self._ideal[d]

    def graded_component(self, d: int) -> tuple[list[Word], Callable[[Tensor | dict], dict]]:
        ech = self.ideal(d)
        basis = ech.normal_keys(words(self.n, d))

        def reduce(t: Tensor | dict) -> dict:
            terms = t.terms if isinstance(t, Tensor) else t
            return ech.reduce(terms)

        return basis, reduce

    def normal_form(self, t: Tensor | dict) -> dict:
        """Reduce a homogeneous element to its normal-word coordinates."""
        terms = t.terms if isinstance(t, Tensor) else t
        if not terms:
            return {}
        degs = {len(w) for w in terms}
        if len(degs) != 1:
            raise InhomogeneousRelation("normal_form expects a homogeneous element")
        return self.ideal(degs.pop()).reduce(terms)

    def hilbert_dim(self, d: int) -> int:
        return self.n ** d - self.ideal(d).rank

    def quadratic_dual(self) -> QuadraticAlgebra:
        cols = list(words(self.n, 2))
        perp = nullspace([r.terms for r in self.relations], cols)
        return QuadraticAlgebra(self.n, [Tensor(self.n, v) for v in perp], name=f"{self.name}!" if self.name else None)

    def dual_is_commutative(self) -> bool:
        dual = self.quadratic_dual()
        ech = dual.ideal(2)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if not ech.contains({(i, j): Fraction(1), (j, i): Fraction(-1)}):
                    return False
        return True

    def same_relations(self, other: QuadraticAlgebra) -> bool:
        return self.n == other.n and same_span([r.terms for r in self.relations], [r.terms for r in other.relations])

    def with_relation(self, f: Tensor) -> QuadraticAlgebra:
        return QuadraticAlgebra(self.n, self.relations + [f])

    def commutator_defect(self, f: Tensor | dict) -> list[dict]:
        """Normal forms of f x_i - x_i f in degree 3, one per generator."""
        terms = f.terms if isinstance(f, Tensor) else f
        out = []
        for i in range(self.n):
            vec: dict = {}
            for w, c in terms.items():
                axpy(vec, c, {w + (i,): Fraction(1)})
                axpy(vec, -c, {(i,) + w: Fraction(1)})
            out.append(self.normal_form(vec))
        return out

    def center_degree2(self) -> list[Tensor]:
        """Basis (in normal-word coordinates) of the degree-2 centre."""
        basis, _ = self.graded_component(2)
        defects = {b: self.commutator_defect({b: Fraction(1)}) for b in basis}
        equations: list[dict] = []
        for i in range(self.n):
            rows: dict = {}
            for b in basis:
                for w, c in defects[b][i].items():
                    rows.setdefault(w, {})[b] = c
            equations.extend(rows.values())
        sols = nullspace(equations, basis)
        return [Tensor(self.n, s) for s in sols]

    def is_central(self, f: Tensor | dict) -> bool:
        return all(not d for d in self.commutator_defect(f))


def make_quadratic(n: int, relations: Sequence[Tensor | dict], name: str | None = None) -> QuadraticAlgebra:
    return QuadraticAlgebra(n, relations, name=name)


def hilbert_dim(A: QuadraticAlgebra, d: int) -> int:
    return A.hilbert_dim(d)


def graded_component(A: QuadraticAlgebra, d: int):
    return A.graded_component(d)


def quadratic_dual(A: QuadraticAlgebra) -> QuadraticAlgebra:
    return A.quadratic_dual()


def dual_is_commutative(A: QuadraticAlgebra) -> bool:
    return A.dual_is_commutative()


def center_degree2(S: QuadraticAlgebra) -> list[Tensor]:
    return S.center_degree2()


def is_central(S: QuadraticAlgebra, f: Tensor) -> bool:
    return S.is_central(f)


def conic(S: QuadraticAlgebra, f: Tensor) -> QuadraticAlgebra:
    """A = S/(f) presented as T(V)/(R + kf)."""
    if not S.is_central(f):
        raise NotCentral(f"{f!r} is not central in degree 2")
    return S.with_relation(f)


def f_shriek(S: QuadraticAlgebra, f: Tensor) -> Tensor:
    """Spanning vector of ker(A!_2 -> S!_2), written in A!_2 normal form."""
    if not S.is_central(f):
        raise NotCentral(f"{f!r} is not central in degree 2")
    A = S.with_relation(f)
    s_perp = S.quadratic_dual()
    a_perp = A.quadratic_dual()
    k = s_perp.dim_relations - a_perp.dim_relations
    if k != 1:
        raise KernelNotOneDimensional(f"kernel of A!_2 -> S!_2 has dimension {k}")
    ech = a_perp.ideal(2)
    for r in s_perp.relations:
        red = ech.reduce(r.terms)
        if red:
            lead = max(red, key=word_key)
            inv = 1 / red[lead]
            return Tensor(S.n, {w: c * inv for w, c in red.items()})
    raise KernelNotOneDimensional("no dual relation survives modulo the conic's dual relations")


def symmetrize(n: int, poly: dict[tuple, Any]) -> Tensor:
    """Commutative quadratic monomials -> symmetric tensors (xy -> (xy + yx)/2)."""
    out: dict = {}
    for (i, j), c in poly.items():
        if i == j:
            out[(i, i)] = out.get((i, i), 0) + c
        else:
            half = c * Fraction(1, 2)
            out[(i, j)] = out.get((i, j), 0) + half
            out[(j, i)] = out.get((j, i), 0) + half
    return Tensor(n, clean(out))


def commutative_presentation(n: int, quadrics: Sequence[dict[tuple, Any]]) -> QuadraticAlgebra:
    """k[x_1..x_n]/(quadrics) as a quadratic algebra: commutators plus symmetrized quadrics."""
    rels = [Tensor(n, {(i, j): Fraction(1), (j, i): Fraction(-1)}) for i in range(n) for j in range(i + 1, n)]
    rels += [symmetrize(n, q) for q in quadrics]
    return QuadraticAlgebra(n, rels)
