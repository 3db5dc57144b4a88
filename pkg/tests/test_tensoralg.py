from __future__ import annotations

import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from ncconic.errors import WrongDegree, WrongGeneratorCount
from ncconic.pairs import potential
from ncconic.quadratic import QuadraticAlgebra
from ncconic.tensoralg import (
    Tensor,
    classify_potential,
    cyclic_shift,
    derivation_quotient,
    find_twist,
    is_superpotential,
    is_symmetric,
    transpose_positions,
    words,
)

coef = st.integers(-3, 3).map(F)
cubic = st.lists(coef, min_size=27, max_size=27).map(lambda cs: Tensor(3, dict(zip(words(3, 3), cs))))


def test_parse_and_repr():
    t = Tensor.parse(3, "xy+yx-2*zz")
    assert t.terms == {(0, 1): 1, (1, 0): 1, (2, 2): -2}
    assert Tensor.parse(3, "x^3") == Tensor.word(3, (0, 0, 0))


def test_cyclic_shift_examples():
    assert cyclic_shift(Tensor.parse(3, "xyz")) == Tensor.parse(3, "yzx")
    assert cyclic_shift(Tensor.parse(3, "xxx")) == Tensor.parse(3, "xxx")
    omega = potential("S")
    assert cyclic_shift(omega) == omega
    with pytest.raises(WrongDegree):
        cyclic_shift(Tensor.parse(3, "xy"))


@given(cubic)
def test_cyclic_shift_has_order_three(omega):
    assert cyclic_shift(cyclic_shift(cyclic_shift(omega))) == omega


@given(cubic)
def test_symmetrized_tensors_are_superpotentials(omega):
    sym = Tensor(3, {})
    for p in itertools.permutations(range(3)):
        sym = sym + omega.map_words(lambda w, p=p: tuple(w[i] for i in p))
    assert is_symmetric(sym)
    assert is_superpotential(sym)


@given(cubic, cubic, coef)
def test_derivation_quotient_is_linear(a, b, c):
    lhs = derivation_quotient(a + b * c)
    rhs = [x + y * c for x, y in zip(derivation_quotient(a), derivation_quotient(b))]
    assert lhs == rhs


def test_transpose_positions():
    assert transpose_positions(Tensor.parse(3, "xyz"), 0, 1) == Tensor.parse(3, "yxz")


def test_classify_potentials():
    nc = classify_potential(potential("NC"))
    assert nc.is_superpotential and nc.is_symmetric
    assert nc.twist is not None

    plain = classify_potential(Tensor.parse(3, "xyz"))
    assert not plain.is_superpotential and not plain.is_symmetric

    alt = classify_potential(Tensor.parse(3, "xyz+yzx+zxy-xzy-zyx-yxz"))
    assert alt.is_superpotential and not alt.is_symmetric

    with pytest.raises(WrongGeneratorCount):
        classify_potential(Tensor(2, {(0, 0, 1): F(1), (0, 1, 0): F(1), (1, 0, 0): F(1)}))


def test_twist_solves_equation():
    omega = Tensor.parse(3, "xyz+yzx+zxy+2*xzy+2*zyx+2*yxz")
    sigma = find_twist(omega)
    if sigma is not None:
        phi = cyclic_shift(omega)
        twisted: dict = {}
        for (a, b, c), v in phi.terms.items():
            for k in range(3):
                if sigma[k][a]:
                    twisted[(k, b, c)] = twisted.get((k, b, c), 0) + sigma[k][a] * v
        assert Tensor(3, twisted) == omega


def test_derivation_quotient_spans():
    def span(rels):
        return QuadraticAlgebra(3, rels)

    assert span(derivation_quotient(potential("S"))).same_relations(
        span([Tensor.parse(3, s) for s in ("xy+yx", "yz+zy", "zx+xz")])
    )
    assert span(derivation_quotient(potential("NC"))).same_relations(
        span([Tensor.parse(3, s) for s in ("xy+yx", "yz+zy+xx", "zx+xz+yy")])
    )
    assert span(derivation_quotient(potential("EC", F(2)))).same_relations(
        span([Tensor.parse(3, s) for s in ("xy+yx+2*zz", "yz+zy+2*xx", "zx+xz+2*yy")])
    )
