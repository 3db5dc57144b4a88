"""The four symmetric-superpotential algebras, their graded automorphisms, the
induced action on central quadrics ax^2 + by^2 + cz^2, pair isomorphism and
the C(A) pipeline."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence

from . import algclass
from .clifford import clifford_map, deformation, even_part, verify_strong_grading
from .errors import (
    GeneratorRejected,
    GroupTooLarge,
    InvalidXi,
    NotAutomorphism,
    NotInSquareSpan,
    NotSupported,
    TypeMismatch,
    UnknownProfile,
)
from .exactfield import QE, FieldElement, FieldTower, MultiPoly, common_tower, scalar_to_json
from .hesse import ec_graded_iso, j_invariant, lambda_of_xi, tau_case, tau_matrix, HesseCurve
from .linalg import identity, inverse, mat_mul, mat_vec, solve, transpose
from .quadratic import QuadraticAlgebra, f_shriek
from .tensoralg import Tensor, derivation_quotient

KINDS = ("S", "Sprime", "NC", "EC")
GROUP_CAP = 10000


def validate_xi(xi: Any) -> None:
    if xi is None:
        raise InvalidXi("type EC needs a parameter xi")
    if not xi:
        raise InvalidXi("xi must be nonzero")
    c = xi ** 3
    if c == 1:
        raise InvalidXi(f"xi = {xi} has xi^3 = 1")
    if c == -8:
        raise InvalidXi(f"xi = {xi} has xi^3 = -8 (xi = -2 or 1 ± sqrt(-3))")


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise TypeMismatch(f"unknown algebra type {kind!r}; expected one of {KINDS}")


def potential(kind: str, xi: Any = None) -> Tensor:
    _check_kind(kind)
    one = Fraction(1)
    terms: dict = {w: one for w in itertools.permutations(range(3))}
    if kind == "Sprime":
        terms[(0, 0, 0)] = one
    elif kind == "NC":
        terms[(0, 0, 0)] = one
        terms[(1, 1, 1)] = one
    elif kind == "EC":
        validate_xi(xi)
        for i in range(3):
            terms[(i, i, i)] = xi
    return Tensor(3, terms)


@lru_cache(maxsize=None)
def _catalog_cached(kind: str, xi_key: Any) -> QuadraticAlgebra:
    xi = xi_key
    name = kind if kind != "EC" else f"EC({xi})"
    return QuadraticAlgebra(3, derivation_quotient(potential(kind, xi)), name=name)


def catalog(kind: str, xi: Any = None) -> QuadraticAlgebra:
    """The derivation-quotient algebra of the type's potential."""
    _check_kind(kind)
    if kind == "EC":
        validate_xi(xi)
        return _catalog_cached(kind, xi)
    return _catalog_cached(kind, None)


def square_tensor(coeffs: Sequence[Any]) -> Tensor:
    return Tensor(3, {(i, i): c for i, c in enumerate(coeffs)})


@dataclass(frozen=True)
class ConicPair:
    kind: str
    coeffs: tuple
    xi: Any = None

    def __post_init__(self):
        _check_kind(self.kind)
        if len(self.coeffs) != 3:
            raise ValueError("a conic pair needs three coefficients (a, b, c)")
        if not any(self.coeffs):
            raise ValueError("f = 0 is not a conic")
        if self.kind == "EC":
            validate_xi(self.xi)
        elif self.xi is not None:
            raise TypeMismatch(f"type {self.kind} takes no xi")

    @property
    def algebra(self) -> QuadraticAlgebra:
        return catalog(self.kind, self.xi)

    @property
    def f(self) -> Tensor:
        return square_tensor(self.coeffs)

    def label(self) -> str:
        names = ["x^2", "y^2", "z^2"]
        parts = []
        for c, n in zip(self.coeffs, names):
            if not c:
                continue
            if c == 1:
                parts.append(n)
            else:
                parts.append(f"({c})*{n}")
        head = self.kind if self.kind != "EC" else f"EC[xi={self.xi}]"
        return f"({head}, {' + '.join(parts)})"

    def to_json(self) -> dict:
        out = {"type": self.kind, "f": [scalar_to_json(c) for c in self.coeffs]}
        if self.xi is not None:
            out["xi"] = scalar_to_json(self.xi)
        return out


# automorphisms -------------------------------------------------------------


def working_tower(*values: Any) -> FieldTower:
    """Smallest built-in tower holding the inputs and a primitive cube root of unity."""
    t = common_tower(v for v in values if v is not None)
    return t if t is not None and t.height > 0 else QE


def _mat(rows: Sequence[Sequence[Any]], tower: FieldTower | None) -> tuple:
    if tower is None:
        return tuple(tuple(Fraction(x) if isinstance(x, int) else x for x in r) for r in rows)
    return tuple(tuple(tower(x) for x in r) for r in rows)


SWAP_XY = ((0, 1, 0), (1, 0, 0), (0, 0, 1))
SWAP_YZ = ((1, 0, 0), (0, 0, 1), (0, 1, 0))


@dataclass
class AutGeneratorSet:
    kind: str
    torus: list[str]
    finite: list[tuple]
    names: list[str]
    tower: FieldTower | None = None

    def to_json(self) -> dict:
        return {
            "type": self.kind,
            "torus": self.torus,
            "finite": [{"name": n, "matrix": [[scalar_to_json(c) for c in r] for r in m]} for n, m in zip(self.names, self.finite)],
        }


def is_sqrt3_shift(xi: Any) -> bool:
    """xi^2 - 2 xi - 2 = 0, i.e. xi = 1 ± sqrt 3."""
    return xi * xi - 2 * xi - 2 == 0


def preserves_relations(S: QuadraticAlgebra, M: Sequence[Sequence[Any]], target: QuadraticAlgebra | None = None) -> bool:
    target = target or S
    ech = target.ideal(2)
    return all(ech.contains(r.substitute(M).terms) for r in S.relations)


def graut_generators(kind: str, xi: Any = None, tower: FieldTower | None = None) -> AutGeneratorSet:
    _check_kind(kind)
    S = catalog(kind, xi)
    if kind == "S":
        gens = [("swap_xy", _mat(SWAP_XY, None)), ("swap_yz", _mat(SWAP_YZ, None))]
        torus = ["diag(a,b,c)"]
        tower_used = tower
    elif kind == "Sprime":
        gens = [("swap_yz", _mat(SWAP_YZ, None))]
        torus = ["diag(a,a,a)", "diag(1,b,1/b)"]
        tower_used = tower
    else:
        tower_used = tower or working_tower(xi)
        eps = tower_used.cube_root_of_unity()
        one, zero = tower_used.one(), tower_used.zero()
        diag = ((eps * eps, zero, zero), (zero, one, zero), (zero, zero, eps))
        gens = [("diag(e^2,1,e)", diag), ("swap_xy", _mat(SWAP_XY, tower_used))]
        torus = ["diag(a,a,a)"]
        if kind == "EC":
            gens.append(("swap_yz", _mat(SWAP_YZ, tower_used)))
            if is_sqrt3_shift(tower_used(xi)):
                e2 = eps * eps
                vander = ((e2, eps, one), (eps, e2, one), (one, one, one))
                gens.insert(1, ("vandermonde", vander))
    for name, M in gens:
        if not preserves_relations(S, M):
            raise GeneratorRejected(f"generator {name} does not preserve the relations of {kind}")
    return AutGeneratorSet(kind, torus, [m for _, m in gens], [n for n, _ in gens], tower_used)


def induced_action(S: QuadraticAlgebra, M: Sequence[Sequence[Any]], target: QuadraticAlgebra | None = None) -> list[list[Any]]:
    """Matrix of ax^2 + by^2 + cz^2 -> M(f) on the square coefficients."""
    target = target or S
    if not preserves_relations(S, M, target):
        raise NotAutomorphism("the matrix does not carry the relations into the relations")
    ech = target.ideal(2)
    squares = [ech.reduce({(i, i): Fraction(1)}) for i in range(3)]
    cols = []
    for j in range(3):
        image = square_tensor([Fraction(int(k == j)) for k in range(3)]).substitute(M)
        coords = solve(squares, ech.reduce(image.terms))
        if coords is None:
            raise NotInSquareSpan(f"the image of the square of generator {j} leaves span(x^2, y^2, z^2)")
        cols.append(coords)
    return [[cols[j][i] for j in range(3)] for i in range(3)]


def _normalize(M: Sequence[Sequence[Any]]) -> tuple:
    lead = next(c for r in M for c in r if c)
    inv = 1 / lead
    return tuple(tuple(c * inv for c in r) for r in M)


def projective_closure(gens: Sequence[Sequence[Sequence[Any]]], cap: int = GROUP_CAP) -> list[tuple]:
    """All products of the generators, up to scalars."""
    gens_n = [_normalize(g) for g in gens]
    start = _normalize(identity(3))
    seen = {start: None}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens_n:
                p = _normalize(mat_mul(h, g))
                if p not in seen:
                    seen[p] = None
                    order.append(p)
                    nxt.append(p)
                    if len(order) > cap:
                        raise GroupTooLarge(f"induced group exceeds {cap} elements")
        frontier = nxt
    return order


_GROUP_CACHE: dict = {}


def induced_group(kind: str, xi: Any, tower: FieldTower) -> list[tuple]:
    key = (kind, xi, tower)
    if key not in _GROUP_CACHE:
        gens = graut_generators(kind, xi, tower)
        S = catalog(kind, xi)
        induced = [induced_action(S, m) for m in gens.finite]
        _GROUP_CACHE[key] = projective_closure(induced)
    return _GROUP_CACHE[key]


@dataclass
class IsoResult:
    iso: bool
    witness: list[list[Any]] | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.iso

    def to_json(self) -> dict:
        return {
            "isomorphic": self.iso,
            "witness": None if self.witness is None else [[scalar_to_json(c) for c in r] for r in self.witness],
            "note": self.note,
        }


def _pattern(v: Sequence[Any]) -> tuple:
    return tuple(bool(c) for c in v)


def _proportional(u: Sequence[Any], v: Sequence[Any]) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i in range(3) for j in range(i + 1, 3))


def _diag_witness(g: Sequence[Sequence[Any]], v: Sequence[Any], v2: Sequence[Any]) -> list[list[Any]]:
    w = mat_vec(g, v)
    d = [v2[i] / w[i] if w[i] else Fraction(1) for i in range(3)]
    return [[d[i] * g[i][j] for j in range(3)] for i in range(3)]


PERMUTATIONS = [
    [[Fraction(int(p[i] == j)) for j in range(3)] for i in range(3)] for p in itertools.permutations(range(3))
]


def _iso_S(v, v2) -> IsoResult:
    for P in PERMUTATIONS:
        if _pattern(mat_vec(P, v)) == _pattern(v2):
            return IsoResult(True, _diag_witness(P, v, v2), "zero patterns agree up to permutation; torus rescales the rest")
    return IsoResult(False, None, "zero patterns differ under every permutation")


def _iso_Sprime(v, v2) -> IsoResult:
    for P in (identity(3), [list(r) for r in _mat(SWAP_YZ, None)]):
        w = mat_vec(P, v)
        if _pattern(w) != _pattern(v2):
            continue
        if all(w) and w[0] ** 2 * v2[1] * v2[2] != v2[0] ** 2 * w[1] * w[2]:
            continue
        return IsoResult(True, _diag_witness(P, v, v2), "orbit of s*diag(1,t,1/t) and the y<->z swap")
    return IsoResult(False, None, "no element of the induced group matches (invariant bc/a^2 or zero pattern differs)")


def _iso_finite(group: Sequence[tuple], v, v2) -> IsoResult:
    for g in group:
        w = mat_vec(g, v)
        if _proportional(w, v2):
            k = next(i for i in range(3) if w[i])
            s = v2[k] / w[k]
            return IsoResult(True, [[s * c for c in r] for r in g], f"projective match in a group of {len(group)} elements")
    return IsoResult(False, None, f"no element of the induced group ({len(group)} elements up to scalars) matches")


def _ec_transfer(xi: Any, xi2: Any, tower: FieldTower) -> list[list[Any]] | None:
    """A linear map carrying the relations of E_xi onto those of E_xi', built from tau."""
    S, S2 = catalog("EC", xi), catalog("EC", xi2)
    lam = lambda_of_xi(tower(xi))
    T = tau_matrix(HesseCurve(lam), tau_case(lam), tower)
    power = identity(3)
    for _ in range(12):
        power = mat_mul(T, power)
        for M in (power, transpose(power), inverse(power), transpose(inverse(power))):
            if preserves_relations(S, M, S2):
                return M
    return None


def pair_iso(p: ConicPair, p2: ConicPair, tower: FieldTower | None = None) -> IsoResult:
    """Decide (S, f) ≅ (S', f') over the algebraic closure."""
    if p.kind != p2.kind:
        raise TypeMismatch(f"cannot compare type {p.kind} with type {p2.kind}")
    kind = p.kind
    if kind == "S":
        return _iso_S(p.coeffs, p2.coeffs)
    if kind == "Sprime":
        return _iso_Sprime(p.coeffs, p2.coeffs)
    tower = tower or working_tower(p.xi, p2.xi, *p.coeffs, *p2.coeffs)
    v = [tower(c) for c in p.coeffs]
    v2 = [tower(c) for c in p2.coeffs]
    if kind == "EC" and tower(p.xi) != tower(p2.xi):
        xi, xi2 = tower(p.xi), tower(p2.xi)
        lam, lam2 = lambda_of_xi(xi), lambda_of_xi(xi2)
        if lam != lam2:
            if j_invariant(lam) == j_invariant(lam2):
                raise NotSupported(
                    "equal j-invariant but different lambda: the projective equivalence is not constructive here"
                )
            return IsoResult(False, None, "the curves have different j-invariants")
        if not ec_graded_iso(xi, xi2, tower):
            return IsoResult(False, None, "the algebras are not isomorphic (distinct tau-orbits)")
        M = _ec_transfer(xi, xi2, tower)
        if M is None:
            raise NotSupported("no tau-derived linear map carries one presentation onto the other")
        v = mat_vec(induced_action(catalog("EC", xi), M, catalog("EC", xi2)), v)
        res = _iso_finite(induced_group("EC", xi2, tower), v, v2)
        res.note = "after transport along a tau-derived isomorphism; " + res.note
        return res
    return _iso_finite(induced_group(kind, p.xi, tower), v, v2)


# discriminant and the pipeline ---------------------------------------------


def nc_quartic(alpha: Any, beta: Any) -> list[Any]:
    """u^4 - 2 beta u^2 - u - alpha + beta^2, coefficients from the constant term."""
    return [beta * beta - alpha, Fraction(-1), -2 * beta, Fraction(0), Fraction(1)]


def discriminant_nc(alpha: Any, beta: Any) -> Any:
    return -27 - 256 * alpha ** 3 + 288 * alpha * beta + 256 * alpha ** 2 * beta ** 2 - 256 * beta ** 3


def ec_quartic(xi: Any, alpha: Any, beta: Any) -> list[Any]:
    """The quartic for the class of xz in C(E_xi / (alpha x^2 + beta y^2 + z^2)), constant term first."""
    d = xi ** 3 - 1
    c3 = 3 * beta * xi ** 2 / d
    c2 = (3 * beta ** 2 * xi ** 4 - alpha * xi ** 3 - 2 * alpha) / d ** 2
    c1 = xi ** 2 * (beta ** 3 * xi ** 4 - 2 * alpha * beta * xi ** 3 + (1 + alpha ** 3) * xi - alpha * beta) / d ** 3
    c0 = (-alpha * beta ** 2 * xi ** 4 + (alpha ** 3 * beta + beta) * xi ** 2 - alpha ** 2) / d ** 3
    return [c0, c1, c2, c3, Fraction(1)]


@dataclass
class PipelineResult:
    pair: ConicPair
    deformation: Any
    cA: Any
    f_shriek: Tensor
    profile: tuple
    ftype: str | None
    semisimple: bool
    frobenius: bool
    strongly_graded: bool
    expected: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def match(self) -> bool | None:
        if self.expected is None:
            return None
        return self.ftype == self.expected

    def to_json(self) -> dict:
        return {
            "pair": self.pair.to_json(),
            "label": self.pair.label(),
            "f_shriek": self.f_shriek.to_json(),
            "cA": {k: v for k, v in self.cA.to_json().items() if k != "unit"},
            "deformation_dim": self.deformation.dim,
            "strongly_graded": self.strongly_graded,
            "profile": list(self.profile),
            "type": self.ftype,
            "algebra": algclass.DESCRIPTIONS[algclass.FrobeniusType(self.ftype)] if self.ftype else None,
            "semisimple": self.semisimple,
            "frobenius": self.frobenius,
            "expected": self.expected,
            "match": self.match,
        }


def element_in_even_part(D, word: tuple) -> list[Any]:
    """Coordinates of a word's class in the even-part basis."""
    vec = D.normal_form({word: Fraction(1)})
    even = [k for k, p in enumerate(D.parity) if p == 0]
    return [vec[k] for k in even]


def conic_pipeline(p: ConicPair, expected: str | None = None) -> PipelineResult:
    S = p.algebra
    f = p.f
    fs = f_shriek(S, f)
    dual, theta = clifford_map(S, f)
    D = deformation(S, theta, dual)
    C = even_part(D)
    prof = algclass.radical_profile(C).as_tuple()
    try:
        ftype: str | None = algclass.classify4(C).value
    except UnknownProfile:
        ftype = None
    return PipelineResult(
        pair=p,
        deformation=D,
        cA=C,
        f_shriek=fs,
        profile=prof,
        ftype=ftype,
        semisimple=algclass.is_semisimple(C),
        frobenius=algclass.frobenius_pairing_exists(C),
        strongly_graded=verify_strong_grading(D),
        expected=expected,
    )
