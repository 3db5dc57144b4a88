"""Clifford maps and Clifford deformations T(V*)/(r - theta(r) : r in R-perp).

The deformation is computed by filtered elimination: the ideal J is cut down
to J ∩ F_4 (words of length <= 4), row reduced with pivots on leading words,
and the surviving words become the basis.  Products up to length 6 are
reduced letter by letter.  Associativity of the resulting table together with
the defining relations holding in it certifies the presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .errors import NotCentral, NotCliffordMap, OddDimension, PBWFailure
from .finite import FiniteAlgebra
from .linalg import Echelon, axpy, nullspace
from .quadratic import QuadraticAlgebra
from .tensoralg import Tensor, Word, letters, word_key, words, words_upto

ELIM_DEPTH = 4
CHECK_DEPTH = 6


def clifford_map(S: QuadraticAlgebra, f: Tensor) -> tuple[list[Tensor], list[Any]]:
    """Dual relation basis of S and the values theta_f(r) = <r, f>."""
    if not S.is_central(f):
        raise NotCentral(f"{f!r} is not central in degree 2")
    dual = S.quadratic_dual().relations
    values = [sum((c * f.terms.get(w, 0) for w, c in r.terms.items()), Fraction(0)) for r in dual]
    return dual, values


class _Theta:
    """Evaluate a linear map on R-perp given its values on a basis."""

    def __init__(self, basis: Sequence[Tensor], values: Sequence[Any]):
        self.values = list(values)
        self.ech = Echelon(order=word_key, track=True)
        for i, r in enumerate(basis):
            self.ech.add(r.terms, tag=i)

    def __call__(self, terms: dict) -> Any:
        coords = self.ech.coordinates(terms)
        if coords is None:
            raise NotCliffordMap("a slice of V*(x)R-perp ∩ R-perp(x)V* left R-perp")
        return sum((c * self.values[i] for i, c in coords.items()), Fraction(0))


def check_clifford_condition(S: QuadraticAlgebra, dual: Sequence[Tensor], theta: Sequence[Any]) -> None:
    """(theta (x) 1 - 1 (x) theta) vanishes on V (x) R-perp ∩ R-perp (x) V."""
    n = S.n
    # the intersection is the annihilator of V (x) R + R (x) V
    equations = []
    for r in S.relations:
        for a in range(n):
            equations.append({(a,) + w: c for w, c in r.terms.items()})
            equations.append({w + (a,): c for w, c in r.terms.items()})
    W = nullspace(equations, list(words(n, 3)))
    th = _Theta(dual, theta)
    for w in W:
        for i in range(n):
            left = th({k[:2]: c for k, c in w.items() if k[2] == i})
            right = th({k[1:]: c for k, c in w.items() if k[0] == i})
            if left != right:
                raise NotCliffordMap(f"theta is not a Clifford map: (theta(x)1)(w) != (1(x)theta)(w) at generator {i}")


@dataclass
class CliffordDeformation:
    n: int
    dual_relations: list[Tensor]
    theta: list[Any]
    basis: list[Word]
    table: list[list[list[Any]]]
    parity: list[int]
    filtered_dims: list[int]
    j_dims: dict[int, int]
    pbw_generators_checked: int
    nf_cache: dict = field(repr=False, default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def labels(self) -> list[str]:
        names = letters(self.n)
        return ["".join(names[i] for i in w) or "1" for w in self.basis]

    def algebra(self) -> FiniteAlgebra:
        unit = [Fraction(int(w == ())) for w in self.basis]
        return FiniteAlgebra(self.labels(), self.table, unit, self.parity, check=False)

    def normal_form(self, vec: dict) -> list[Any]:
        out: list[Any] = [Fraction(0)] * self.dim
        for w, c in vec.items():
            for k, v in self.nf_cache[w].items():
                out[k] = out[k] + c * v
        return out

    def low_filtration_ok(self) -> bool:
        return self.j_dims.get(1, 0) == 0 and self.j_dims.get(2, 0) == len(self.dual_relations)

    def to_json(self) -> dict:
        alg = self.algebra().to_json()
        alg["parity"] = self.parity
        return alg


def deformation(S: QuadraticAlgebra, theta: Sequence[Any], dual: Sequence[Tensor] | None = None) -> CliffordDeformation:
    n = S.n
    if dual is None:
        dual = S.quadratic_dual().relations
    dual = list(dual)
    theta = list(theta)
    if len(theta) != len(dual):
        raise NotCliffordMap(f"{len(theta)} values for {len(dual)} dual relations")
    check_clifford_condition(S, dual, theta)

    deformed = []
    for r, t in zip(dual, theta):
        rel = dict(r.terms)
        if t:
            rel[()] = -t
        deformed.append(rel)

    def generator(u: Word, rel: dict, w: Word) -> dict:
        return {u + k + w: c for k, c in rel.items()}

    ech = Echelon(order=word_key)
    for total in range(ELIM_DEPTH - 1):
        for i in range(total + 1):
            for u in words(n, i):
                for w in words(n, total - i):
                    for rel in deformed:
                        ech.add(generator(u, rel, w))

    universe = words_upto(n, ELIM_DEPTH)
    basis = ech.normal_keys(universe)
    if any(len(b) >= ELIM_DEPTH for b in basis):
        raise PBWFailure(f"normal words reach length {ELIM_DEPTH}; the deformation is not flat")
    index = {b: k for k, b in enumerate(basis)}

    cache: dict[Word, dict[int, Any]] = {}

    def nf_word(w: Word) -> dict[int, Any]:
        if w in cache:
            return cache[w]
        if len(w) <= ELIM_DEPTH:
            red = ech.reduce({w: Fraction(1)})
            out = {index[k]: c for k, c in red.items()}
        else:
            head = nf_word(w[:-1])
            vec: dict = {}
            for k, c in head.items():
                axpy(vec, c, {basis[k] + w[-1:]: Fraction(1)})
            out = {}
            for k2, c2 in vec.items():
                for idx, v in nf_word(k2).items():
                    nv = out.get(idx, 0) + c2 * v
                    if nv:
                        out[idx] = nv
                    else:
                        out.pop(idx, None)
        cache[w] = out
        return out

    def nf(vec: dict) -> dict[int, Any]:
        out: dict = {}
        for w, c in vec.items():
            for idx, v in nf_word(w).items():
                nv = out.get(idx, 0) + c * v
                if nv:
                    out[idx] = nv
                else:
                    out.pop(idx, None)
        return out

    # PBW check: every generator of J ∩ F_6 must reduce to zero
    checked = 0
    for total in range(CHECK_DEPTH - 1):
        for i in range(total + 1):
            for u in words(n, i):
                for w in words(n, total - i):
                    for rel in deformed:
                        checked += 1
                        if nf(generator(u, rel, w)):
                            raise PBWFailure(f"generator {u}·r·{w} does not vanish; PBW fails")

    # dim F_d / (J ∩ F_d) for d <= 6, as the rank of the normal-form map
    filtered_dims = []
    rank_ech = Echelon()
    for d in range(CHECK_DEPTH + 1):
        for w in words(n, d):
            rank_ech.add(nf_word(w))
        filtered_dims.append(rank_ech.rank)
    expected = [sum(len([b for b in basis if len(b) == k]) for k in range(d + 1)) for d in range(CHECK_DEPTH + 1)]
    if filtered_dims != expected:
        raise PBWFailure(f"filtered dimensions {filtered_dims} differ from {expected}")

    j_dims = {d: sum(1 for p in ech.rows if len(p) <= d) for d in range(ELIM_DEPTH + 1)}

    dim = len(basis)
    table = []
    for bi in basis:
        row = []
        for bj in basis:
            prod = nf_word(bi + bj)
            row.append([prod.get(k, Fraction(0)) for k in range(dim)])
        table.append(row)
    parity = [len(b) % 2 for b in basis]

    D = CliffordDeformation(n, dual, theta, basis, table, parity, filtered_dims, j_dims, checked, cache)
    _certify(D, deformed)
    return D


def _certify(D: CliffordDeformation, deformed: Sequence[dict]) -> None:
    """Associativity, relations holding in the table, and h(b) = b."""
    alg = D.algebra()
    alg.check()
    gens = [alg.basis_vector(D.basis.index((i,))) for i in range(D.n)]

    def evaluate(w: Word) -> list[Any]:
        out = list(alg.unit)
        for a in w:
            out = alg.mul(out, gens[a])
        return out

    for k, b in enumerate(D.basis):
        if any(x != y for x, y in zip(evaluate(b), alg.basis_vector(k))):
            raise PBWFailure(f"basis word {b} does not evaluate to itself")
    for rel in deformed:
        total = [Fraction(0)] * D.dim
        for w, c in rel.items():
            total = [t + c * v for t, v in zip(total, evaluate(w))]
        if any(total):
            raise PBWFailure("a defining relation fails in the computed table")


def even_part(D: CliffordDeformation) -> FiniteAlgebra:
    """Degree-zero part of the Z2 grading (even-length basis words)."""
    if D.dim % 2 or sum(1 for p in D.parity if p == 0) * 2 != D.dim:
        raise OddDimension(f"deformation of dimension {D.dim} has an unbalanced Z2 grading")
    even = [k for k, p in enumerate(D.parity) if p == 0]
    for i in even:
        for j in even:
            if any(D.table[i][j][k] for k in range(D.dim) if D.parity[k]):
                raise OddDimension("even products leave the even part")
    labels = D.labels()
    table = [[[D.table[i][j][k] for k in even] for j in even] for i in even]
    unit = [Fraction(int(D.basis[k] == ())) for k in even]
    return FiniteAlgebra([labels[k] for k in even], table, unit)


def verify_strong_grading(D: CliffordDeformation) -> bool:
    """D_1 · D_1 spans D_0."""
    odd = [k for k, p in enumerate(D.parity) if p]
    n_even = D.dim - len(odd)
    ech = Echelon()
    for i in odd:
        for j in odd:
            ech.add({k: c for k, c in enumerate(D.table[i][j]) if c})
    return ech.rank == n_even


def clifford_deformation(S: QuadraticAlgebra, f: Tensor) -> CliffordDeformation:
    dual, theta = clifford_map(S, f)
    return deformation(S, theta, dual)


def c_of_a(S: QuadraticAlgebra, f: Tensor) -> FiniteAlgebra:
    return even_part(clifford_deformation(S, f))
