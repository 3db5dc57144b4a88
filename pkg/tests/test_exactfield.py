from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from ncconic.errors import (
    DivisionByZero,
    GenericityViolated,
    MalformedModulus,
    NonUnitLeadingCoefficient,
    ReducibleModulus,
    ZeroInput,
)
from ncconic.exactfield import (
    Q,
    QE,
    QEC,
    QESQ,
    TOWERS,
    FieldTower,
    MultiPoly,
    RationalFunction,
    as_fraction,
    discriminant,
    get_tower,
    make_tower,
    parse_scalar,
    resultant,
    roots_in_tower,
    scalar_to_json,
)

u, al, be, lam = (MultiPoly.var(v) for v in ("u", "a", "b", "l"))
small = st.integers(-5, 5).map(F) | st.fractions(min_value=-4, max_value=4, max_denominator=5)


def elements(tower: FieldTower):
    return st.lists(small, min_size=tower.dim, max_size=tower.dim).map(tower.from_flat)


def test_cube_root_of_unity():
    t = make_tower([("e", [1, 1, 1])])
    e = t.gen("e")
    assert e ** 3 == 1
    assert e + e * e == -1


def test_cube_root_of_minus_two():
    c = QEC.gen("c")
    assert c ** 3 == -2


def test_fourth_root_of_three():
    q = QESQ.gen("q")
    assert q ** 2 * q ** 2 == 3
    s = QESQ.gen("s")
    assert s * s == 2


def test_inverse_of_two():
    assert QE(2).inverse() == F(1, 2)


def test_reducible_modulus_detected():
    t = make_tower([("t", [-1, 0, 1])])
    with pytest.raises(ReducibleModulus):
        (t.gen("t") - 1).inverse()


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QE.zero().inverse()


@pytest.mark.parametrize("levels", [[("e", [1, 1])], [("e", [1, 1, 2])], [("e", [3])]])
def test_malformed_modulus(levels):
    with pytest.raises(MalformedModulus):
        make_tower(levels)


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_fraction(0.5)


@pytest.mark.parametrize("tower", list(TOWERS.values()), ids=list(TOWERS))
@given(data=st.data())
def test_field_axioms(tower, data):
    a, b, c = (data.draw(elements(tower)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


def test_hash_agrees_with_fraction():
    assert hash(QE(F(3, 4))) == hash(F(3, 4))
    assert QE(F(3, 4)) == F(3, 4)
    assert {QESQ(2): 1}[F(2)] == 1


def test_parse_scalar():
    assert parse_scalar("3/4") == F(3, 4)
    e = parse_scalar("[0,1]@Qe")
    assert e == QE.gen("e")
    # short flat lists are padded with zeros
    sqrt3 = parse_scalar("[0,0,0,0,0,0,0,0,1]@Qesq")
    assert sqrt3 * sqrt3 == 3
    # decimal strings are read exactly
    assert parse_scalar("0.5") == F(1, 2)


def test_scalar_json():
    assert scalar_to_json(F(1, 2)) == "1/2"
    assert scalar_to_json(QE(5)) == "5"
    assert scalar_to_json(QE.gen("e")) == ["0", "1"]


def test_tower_json_roundtrip(tmp_path):
    doc = QESQ.to_json()
    again = FieldTower.from_json(doc, name="copy")
    assert again.key() == QESQ.key()
    path = tmp_path / "tower.json"
    import json

    path.write_text(json.dumps(doc))
    assert get_tower(str(path)).dim == 16


def test_resultant_examples():
    assert resultant(u - 1, u + 1, "u") == MultiPoly.const(2)
    assert resultant(u * u - al, u, "u") == -al
    assert resultant(u * u + be * u + 1, u - 1, "u") == be + 2
    with pytest.raises(ZeroInput):
        resultant(MultiPoly(), u, "u")


def test_discriminant_examples():
    b, c = MultiPoly.var("b"), MultiPoly.var("c")
    assert discriminant(u * u + b * u + c, "u") == b * b - 4 * c
    quartic = u ** 4 - 2 * be * u * u - u - al + be * be
    want = -27 - 256 * al ** 3 + 288 * al * be + 256 * al ** 2 * be ** 2 - 256 * be ** 3
    assert discriminant(quartic, "u") == want
    assert discriminant(u ** 3 - 3 * lam * u + 2, "u") == -108 + 108 * lam ** 3
    assert discriminant(2 * u * u + 1, "u") == MultiPoly.const(-8)
    with pytest.raises(NonUnitLeadingCoefficient):
        discriminant(al * u * u + 1, "u")


@given(small, small)
def test_discriminant_vanishes_on_repeated_roots(a, b):
    p = (u - a) ** 2 * (u - b)
    assert discriminant(p, "u") == MultiPoly()


@given(st.lists(small, min_size=3, max_size=3))
def test_rational_function_equality(vals):
    x = RationalFunction.var("a")
    p, q, r = (x + v for v in vals)
    forms = [p / q, (p * r) / (q * r), (p * (x + 7)) / (q * (x + 7))]
    for f in forms:
        assert f == f
    assert forms[0] == forms[1] and forms[1] == forms[0]
    assert forms[1] == forms[2] and forms[0] == forms[2]


def test_rational_function_subs():
    x = RationalFunction.var("a")
    f = (x + 1) / (x - 2)
    assert f.subs({"a": 3}) == 4
    with pytest.raises(GenericityViolated):
        f.subs({"a": 2})


def test_roots_over_tower():
    c = QEC.gen("c")
    e = QEC.gen("e")
    roots = roots_in_tower([2, 0, 0, 1], QEC)
    assert len(roots) == 3
    for r in (c, c * e, c * e * e):
        assert r in roots


def test_roots_not_split():
    assert roots_in_tower([2, 0, 0, 1], Q) == []
    assert len(roots_in_tower([-2, 0, 1], QE)) == 0


def test_roots_generic_lambda():
    roots = roots_in_tower([2, -5, 0, 1], QESQ)
    s = QESQ.gen("s")
    assert sorted(map(str, roots)) == sorted(map(str, [QESQ(2), -1 - s, -1 + s]))
