"""Hesse cubics x^3 + y^3 + z^3 = 3 lambda xyz: group law, 2-torsion,
j-invariant and the automorphisms fixing o = (1:-1:0)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from .errors import (
    BothFormulasVanish,
    CaseMismatch,
    CubicDoesNotSplit,
    DifferentLambda,
    NotOnCurve,
    SingularCurve,
    ZeroXi,
)
from .exactfield import QE, FieldElement, FieldTower, MultiPoly, common_tower, roots_in_tower, scalar_to_json

CASES = ("generic", "j0", "j1728")


@dataclass(frozen=True)
class HessePoint:
    coords: tuple

    @classmethod
    def of(cls, a: Any, b: Any, c: Any) -> HessePoint:
        coords = (a, b, c)
        lead = next((x for x in coords if x), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        return cls(tuple(x / lead for x in coords))

    def __iter__(self):
        return iter(self.coords)

    def to_json(self) -> list:
        return [scalar_to_json(x) for x in self.coords]

    def __repr__(self) -> str:
        return "(" + " : ".join(str(x) for x in self.coords) + ")"


ORIGIN = HessePoint((Fraction(1), Fraction(-1), Fraction(0)))


class HesseCurve:
    def __init__(self, lam: Any):
        if lam ** 3 == 1:
            raise SingularCurve(f"lambda = {lam} has lambda^3 = 1; the cubic is singular")
        self.lam = lam

    def __repr__(self) -> str:
        return f"HesseCurve(lambda={self.lam})"

    def cubic(self, a: Any, b: Any, c: Any) -> Any:
        return a ** 3 + b ** 3 + c ** 3 - 3 * self.lam * a * b * c

    def contains(self, p: HessePoint) -> bool:
        return self.cubic(*p.coords) == 0

    @property
    def origin(self) -> HessePoint:
        return ORIGIN


def on_curve(E: HesseCurve, p: HessePoint) -> bool:
    return E.contains(p)


def _require(E: HesseCurve, *pts: HessePoint) -> None:
    for p in pts:
        if not E.contains(p):
            raise NotOnCurve(f"{p} is not on {E}")


def add(E: HesseCurve, p: HessePoint, q: HessePoint) -> HessePoint:
    _require(E, p, q)
    a, b, c = p.coords
    al, be, ga = q.coords
    first = (a * c * be ** 2 - b ** 2 * al * ga, b * c * al ** 2 - a ** 2 * be * ga, a * b * ga ** 2 - c ** 2 * al * be)
    if any(first):
        return HessePoint.of(*first)
    second = (a * b * al ** 2 - c ** 2 * be * ga, a * c * ga ** 2 - b ** 2 * al * be, b * c * be ** 2 - a ** 2 * al * ga)
    if any(second):
        return HessePoint.of(*second)
    raise BothFormulasVanish(f"both addition formulas vanish at {p} + {q}")


def negate(E: HesseCurve, p: HessePoint) -> HessePoint:
    """(b:a:c), validated through the group law."""
    a, b, c = p.coords
    cand = HessePoint.of(b, a, c)
    if add(E, p, cand) != ORIGIN:
        raise AssertionError(f"(b:a:c) is not the inverse of {p}")
    return cand


def lambda_of_xi(xi: Any) -> Any:
    if not xi:
        raise ZeroXi("lambda(xi) needs xi != 0")
    return (2 + xi ** 3) / (3 * xi)


def j_invariant(lam: Any) -> Any:
    l3 = lam ** 3
    if l3 == 1:
        raise SingularCurve(f"lambda = {lam} has lambda^3 = 1")
    return 27 * l3 * (l3 + 8) ** 3 / (l3 - 1) ** 3


def two_torsion(E: HesseCurve, tower: FieldTower) -> list[HessePoint]:
    """o plus the three points (1:1:xi) with xi^3 - 3 lambda xi + 2 = 0."""
    roots = roots_in_tower([2, -3 * tower(E.lam), 0, 1], tower)
    if len(roots) != 3:
        raise CubicDoesNotSplit(
            f"xi^3 - 3*({E.lam})*xi + 2 has {len(roots)} roots in {tower.name}; extend the tower"
        )
    return [ORIGIN] + [HessePoint.of(tower.one(), tower.one(), r) for r in roots]


def translation(E: HesseCurve, p: HessePoint) -> Callable[[HessePoint], HessePoint]:
    _require(E, p)
    return lambda q: add(E, q, p)


def _working_tower(*values: Any) -> FieldTower:
    t = common_tower(values)
    return t if t is not None and t.height > 0 else QE


def _tau_linear(case: str, tower: FieldTower) -> list[list[Any]]:
    one, zero = tower.one(), tower.zero()
    if case == "generic":
        return [[zero, one, zero], [one, zero, zero], [zero, zero, one]]
    eps = tower.cube_root_of_unity()
    if case == "j0":
        return [[zero, one, zero], [one, zero, zero], [zero, zero, eps]]
    if case == "j1728":
        e2 = eps * eps
        return [[e2, eps, one], [eps, e2, one], [one, one, one]]
    raise ValueError(f"unknown case {case!r}; expected one of {CASES}")


def tau_matrix(E: HesseCurve, case: str, tower: FieldTower | None = None) -> list[list[Any]]:
    """Matrix T with tau(p) = T p, verified to preserve E and fix o."""
    tower = tower or _working_tower(E.lam)
    T = _tau_linear(case, tower)
    a, b, c = (MultiPoly.var(v) for v in "abc")
    image = [sum((T[i][j] * v for j, v in enumerate((a, b, c))), MultiPoly()) for i in range(3)]
    F = E.cubic(a, b, c)
    G = E.cubic(*image)
    kappa = G.terms.get((("a", 3),), 0)
    if not kappa or G != F * kappa:
        raise CaseMismatch(f"the {case} automorphism does not preserve the curve with lambda = {E.lam}")
    o_img = HessePoint.of(*[sum((T[i][j] * x for j, x in enumerate(ORIGIN.coords)), tower.zero()) for i in range(3)])
    if o_img != HessePoint.of(*(tower(x) for x in ORIGIN.coords)):
        raise CaseMismatch(f"the {case} automorphism moves o")
    return T


def tau_generator(E: HesseCurve, case: str, tower: FieldTower | None = None) -> Callable[[HessePoint], HessePoint]:
    T = tau_matrix(E, case, tower)

    def tau(p: HessePoint) -> HessePoint:
        return HessePoint.of(*[sum((T[i][j] * x for j, x in enumerate(p.coords)), Fraction(0)) for i in range(3)])

    return tau


def tau_case(lam: Any) -> str:
    if lam == 0:
        return "j0"
    if j_invariant(lam) == 1728:
        return "j1728"
    return "generic"


def orbit(f: Callable[[HessePoint], HessePoint], p: HessePoint, cap: int = 64) -> list[HessePoint]:
    """Iterate until the orbit closes."""
    seen = [p]
    q = f(p)
    while q != p:
        seen.append(q)
        if len(seen) > cap:
            raise AssertionError("orbit did not close")
        q = f(q)
    return seen


def torsion_orbits(E: HesseCurve, tower: FieldTower, case: str | None = None) -> list[list[HessePoint]]:
    """Orbits of tau on the primitive 2-torsion points."""
    case = case or tau_case(E.lam)
    tau = tau_generator(E, case, tower)
    pts = two_torsion(E, tower)[1:]
    orbits: list[list[HessePoint]] = []
    for p in pts:
        if any(p in o for o in orbits):
            continue
        orbits.append(orbit(tau, p))
    return orbits


def ec_graded_iso(xi: Any, xi2: Any, tower: FieldTower | None = None) -> bool:
    """Whether (1:1:xi') lies in the tau-orbit of (1:1:xi) on the common curve."""
    lam, lam2 = lambda_of_xi(xi), lambda_of_xi(xi2)
    if lam != lam2:
        raise DifferentLambda(f"lambda({xi}) = {lam} differs from lambda({xi2}) = {lam2}")
    E = HesseCurve(lam)
    tower = tower or _working_tower(xi, xi2)
    one = tower.one()
    p, q = HessePoint.of(one, one, tower(xi)), HessePoint.of(one, one, tower(xi2))
    tau = tau_generator(E, tau_case(lam), tower)
    return q in orbit(tau, p)


def curve_report(lam: Any, tower: FieldTower) -> dict:
    E = HesseCurve(tower(lam))
    case = tau_case(E.lam)
    pts = two_torsion(E, tower)
    orbs = torsion_orbits(E, tower, case)
    return {
        "lambda": scalar_to_json(E.lam),
        "j": scalar_to_json(j_invariant(E.lam)),
        "tower": tower.name,
        "two_torsion": [p.to_json() for p in pts],
        "tau_case": case,
        "orbit_sizes": sorted(len(o) for o in orbs),
    }


def group_axioms_hold(E: HesseCurve, pts: Sequence[HessePoint]) -> bool:
    """Identity, inverses, commutativity, closure and associativity on a finite subgroup."""
    S = set(pts)
    for p in pts:
        if add(E, p, ORIGIN) != p or negate(E, p) not in S:
            return False
        for q in pts:
            pq = add(E, p, q)
            if pq not in S or pq != add(E, q, p):
                return False
            for r in pts:
                if add(E, pq, r) != add(E, p, add(E, q, r)):
                    return False
    return True
