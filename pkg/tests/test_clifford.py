from __future__ import annotations

from fractions import Fraction as F

import pytest

from ncconic.algclass import minimal_polynomial, radical
from ncconic.clifford import (
    c_of_a,
    clifford_deformation,
    clifford_map,
    deformation,
    even_part,
    verify_strong_grading,
)
from ncconic.errors import NotCentral, NotCliffordMap
from ncconic.exactfield import RationalFunction
from ncconic.pairs import ConicPair, catalog, element_in_even_part, square_tensor
from ncconic.tables import class_representatives
from ncconic.tensoralg import Tensor

P = lambda s: Tensor.parse(3, s)  # noqa: E731
ALL_PAIRS = [p for reps in class_representatives().values() for _, p in reps] + [
    ConicPair("EC", (F(1), F(0), F(0)), F(2)),
    ConicPair("EC", (F(1), F(2), F(3)), F(-3)),
]


def _vanishes(D, terms: dict) -> bool:
    return not any(D.normal_form(terms))


def test_theta_for_x_squared():
    dual, theta = clifford_map(catalog("S"), P("xx"))
    for r, t in zip(dual, theta):
        assert t == r.terms.get((0, 0), 0)
    assert sorted(theta) == [0, 0, 0, 0, 0, 1]


def test_theta_zero():
    _, theta = clifford_map(catalog("NC"), Tensor(3, {}))
    assert not any(theta)


def test_theta_not_central():
    with pytest.raises(NotCentral):
        clifford_map(catalog("S"), P("xy"))


def test_deformation_of_S_by_x_squared():
    D = clifford_deformation(catalog("S"), P("xx"))
    assert D.dim == 8
    one = {(): F(1)}
    # the dual of the anticommutator algebra is commutative
    for rel in ("xy-yx", "xz-zx", "yz-zy", "yy", "zz"):
        assert _vanishes(D, P(rel).terms)
    xx = D.normal_form({(0, 0): F(1)})
    assert xx == D.normal_form(one)
    assert D.low_filtration_ok()
    assert D.j_dims[1] == 0 and D.j_dims[2] == 6


def test_nc_relations_hold():
    a, b = F(2), F(-3)
    D = clifford_deformation(catalog("NC"), square_tensor([a, b, F(1)]))
    one = D.normal_form({(): F(1)})
    for word, sym, value in (((0, 0), (1, 2), a), ((1, 1), (0, 2), b)):
        i, j = sym
        lhs = D.normal_form({word: F(1), (i, j): F(-1, 2), (j, i): F(-1, 2)})
        assert lhs == [value * c for c in one]
    assert D.normal_form({(2, 2): F(1)}) == one


def test_zero_theta_is_the_dual():
    D = deformation(catalog("S"), [F(0)] * 6)
    lengths = [len(w) for w in D.basis]
    assert [lengths.count(d) for d in range(4)] == [1, 3, 3, 1]
    assert not verify_strong_grading(D)


def test_non_clifford_theta_rejected():
    S = catalog("S")
    dual, _ = clifford_map(S, P("xx"))
    theta = [F(int(r.terms.get((0, 1)) == -1)) for r in dual]
    with pytest.raises(NotCliffordMap):
        deformation(S, theta, dual)


@pytest.mark.parametrize("pair", ALL_PAIRS, ids=lambda p: p.label())
def test_dimension_laws_and_structure(pair):
    D = clifford_deformation(pair.algebra, pair.f)
    A = D.algebra()
    assert D.dim == 8
    assert A.is_associative()
    assert A.parity_ok()
    assert D.low_filtration_ok()
    C = even_part(D)
    assert C.dim == 4
    assert C.is_commutative()
    assert verify_strong_grading(D)


def test_even_part_of_S_x_squared():
    C = c_of_a(catalog("S"), P("xx"))
    assert C.labels == ["1", "xy", "xz", "yz"]
    J = radical(C)
    assert len(J) == 3
    for v in J:
        assert not any(C.mul(v, v))


def test_jet4_element():
    D = clifford_deformation(catalog("Sprime"), P("yy"))
    C = even_part(D)
    found = [v for v in radical(C) if any(C.power(v, 3))]
    assert found
    assert not any(C.power(found[0], 4))


def test_strong_grading_examples():
    assert verify_strong_grading(clifford_deformation(catalog("S"), P("xx")))
    assert verify_strong_grading(clifford_deformation(catalog("NC"), P("yy")))


def test_symbolic_quartic():
    a, b = RationalFunction.var("a"), RationalFunction.var("b")
    D = clifford_deformation(catalog("NC"), square_tensor([a, b, F(1)]))
    C = even_part(D)
    poly = minimal_polynomial(C, element_in_even_part(D, (1, 2)))
    assert poly == [b * b - a, F(-1), -2 * b, F(0), F(1)]
    values = {"a": 1, "b": 1}
    special = C.specialize(values)
    v = [c.subs(values) if isinstance(c, RationalFunction) else c for c in element_in_even_part(D, (1, 2))]
    assert minimal_polynomial(special, v) == [0, -1, -2, 0, 1]
