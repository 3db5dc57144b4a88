from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from ncconic.errors import CaseMismatch, CubicDoesNotSplit, DifferentLambda, NotOnCurve, SingularCurve, ZeroXi
from ncconic.exactfield import QE, QEC, QESQ, MultiPoly, discriminant
from ncconic.hesse import (
    ORIGIN,
    HesseCurve,
    HessePoint,
    add,
    curve_report,
    ec_graded_iso,
    group_axioms_hold,
    j_invariant,
    lambda_of_xi,
    negate,
    on_curve,
    tau_generator,
    torsion_orbits,
    translation,
    two_torsion,
)

e = QE.gen("e")
SQRT3 = QESQ.gen("q") ** 2
FOURTH3 = QESQ.gen("q")
SQRT2 = QESQ.gen("s")
CBRT = QEC.gen("c")
CASES = [(QEC, QEC(0)), (QESQ, 1 + SQRT3), (QESQ, QESQ(F(5, 3)))]


def flexes(tower):
    eps = tower.cube_root_of_unity()
    one, zero = tower.one(), tower.zero()
    pts = []
    for k in range(3):
        w = eps ** k
        pts += [HessePoint.of(one, -w, zero), HessePoint.of(zero, one, -w), HessePoint.of(-w, zero, one)]
    return pts


def test_on_curve_examples():
    E = HesseCurve(QE(0))
    assert on_curve(E, ORIGIN)
    assert on_curve(E, HessePoint.of(QE(1), -e, QE(0)))
    assert not on_curve(E, HessePoint.of(F(1), F(1), F(1)))


def test_origin_is_identity_and_inverse():
    E = HesseCurve(QE(F(5, 3)))
    for p in flexes(QE):
        assert add(E, p, ORIGIN) == p
        assert add(E, p, negate(E, p)) == ORIGIN


@pytest.mark.parametrize("tower,lam", CASES)
def test_two_torsion(tower, lam):
    E = HesseCurve(lam)
    pts = two_torsion(E, tower)
    assert len(pts) == 4
    for p in pts[1:]:
        assert add(E, p, p) == ORIGIN
        sigma = translation(E, p)
        for q in pts:
            assert sigma(sigma(q)) == q
    assert group_axioms_hold(E, pts)


def test_two_torsion_points_named():
    pts = two_torsion(HesseCurve(QEC(0)), QEC)
    xis = {p.coords[2] for p in pts[1:]}
    assert xis == {CBRT, CBRT * QEC.gen("e"), CBRT * QEC.gen("e") ** 2}
    pts = two_torsion(HesseCurve(1 + SQRT3), QESQ)
    sqrt6 = SQRT2 * SQRT3
    want = {1 + SQRT3, -(1 + SQRT3 + sqrt6 * FOURTH3) / 2, -(1 + SQRT3 - sqrt6 * FOURTH3) / 2}
    assert {p.coords[2] for p in pts[1:]} == want
    assert HessePoint.of(F(1), F(1), F(2)) in two_torsion(HesseCurve(F(5, 3)), QESQ)


def test_cubic_does_not_split():
    with pytest.raises(CubicDoesNotSplit):
        two_torsion(HesseCurve(QE(0)), QE)


# exhaustive 9x9x9 associativity per curve is slow, so sample few curves
@settings(max_examples=6)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=7).filter(lambda l: l ** 3 != 1))
def test_group_law_on_flexes(lam):
    E = HesseCurve(QE(lam))
    pts = flexes(QE)
    assert all(E.contains(p) for p in pts)
    assert group_axioms_hold(E, pts)


def test_torsion_discriminant():
    xi, lam = MultiPoly.var("u"), MultiPoly.var("l")
    assert discriminant(xi ** 3 - 3 * lam * xi + 2, "u") == -108 + 108 * lam ** 3


def test_lambda_and_j():
    assert j_invariant(F(0)) == 0
    assert lambda_of_xi(CBRT) == 0
    assert lambda_of_xi(F(2)) == F(5, 3)
    assert lambda_of_xi(1 + SQRT3) == 1 + SQRT3
    assert j_invariant(1 + SQRT3) == 1728
    with pytest.raises(ZeroXi):
        lambda_of_xi(F(0))
    with pytest.raises(SingularCurve):
        HesseCurve(F(1))
    with pytest.raises(SingularCurve):
        j_invariant(e)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=9).filter(lambda x: x != 0 and x ** 3 not in (1, -8)))
def test_j_defined_for_admissible_xi(xi):
    j_invariant(lambda_of_xi(xi))


def test_not_on_curve():
    with pytest.raises(NotOnCurve):
        add(HesseCurve(F(0)), HessePoint.of(F(1), F(1), F(1)), ORIGIN)


def test_tau_j0():
    E = HesseCurve(QEC(0))
    tau = tau_generator(E, "j0", QEC)
    p = HessePoint.of(QEC(1), QEC(1), CBRT)
    assert tau(p) == HessePoint.of(QEC(1), QEC(1), CBRT * QEC.gen("e"))


def test_tau_j1728_fixes_one_point():
    E = HesseCurve(1 + SQRT3)
    tau = tau_generator(E, "j1728", QESQ)
    one = QESQ.one()
    assert tau(HessePoint.of(one, one, 1 + SQRT3)) == HessePoint.of(one, one, 1 + SQRT3)
    others = [p for p in two_torsion(E, QESQ)[1:] if p.coords[2] != 1 + SQRT3]
    assert tau(others[0]) == others[1] and tau(others[1]) == others[0]


def test_case_mismatch():
    with pytest.raises(CaseMismatch):
        tau_generator(HesseCurve(QEC(F(5, 3))), "j0", QEC)


@pytest.mark.parametrize("tower,lam,sizes", [(QEC, QEC(0), [3]), (QESQ, 1 + SQRT3, [1, 2]), (QESQ, QESQ(F(5, 3)), [1, 1, 1])])
def test_orbit_structure(tower, lam, sizes):
    assert sorted(len(o) for o in torsion_orbits(HesseCurve(lam), tower)) == sizes


def test_ec_graded_iso():
    assert ec_graded_iso(CBRT, CBRT * QEC.gen("e"))
    other = -(1 + SQRT3 + SQRT2 * SQRT3 * FOURTH3) / 2
    assert not ec_graded_iso(1 + SQRT3, other)
    s = QESQ.gen("s")
    assert not ec_graded_iso(QESQ(2), -1 + s)
    assert ec_graded_iso(QESQ(2), QESQ(2))
    with pytest.raises(DifferentLambda):
        ec_graded_iso(F(2), F(3))


def test_curve_report():
    doc = curve_report(F(0), QEC)
    assert doc["orbit_sizes"] == [3] and doc["tau_case"] == "j0"
    assert len(doc["two_torsion"]) == 4
