"""Exact scalars: number-field towers over Q, sparse multivariate polynomials,
unreduced rational functions, resultants and discriminants.

Rationals are plain :class:`fractions.Fraction`.  A tower element is stored as
a nested tuple of coefficients: a level-``k`` value is a tuple of ``deg_k``
level-``k-1`` values, and a level-0 value is a Fraction.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from functools import reduce
from typing import Any, Iterable, Mapping, Sequence

from .errors import (
    CubicDoesNotSplit,
    DivisionByZero,
    GenericityViolated,
    MalformedModulus,
    NonUnitLeadingCoefficient,
    ReducibleModulus,
    ZeroInput,
)

Rational = Fraction


def as_fraction(x: Any) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational (floats are not accepted)")


def is_zero(x: Any) -> bool:
    return x == 0


# ---------------------------------------------------------------------------
# towers


class FieldTower:
    """Q(g_1)(g_2)... with each generator given by a monic minimal polynomial
    whose coefficients live in the previous level.

    Irreducibility is not checked; a failed inversion raises ReducibleModulus.
    """

    def __init__(self, levels: Sequence[tuple[str, Sequence[Any]]], name: str | None = None):
        self.names: tuple[str, ...] = ()
        self.degrees: tuple[int, ...] = ()
        self.moduli: tuple[tuple, ...] = ()
        for gen_name, modulus in levels:
            k = len(self.names)
            coeffs = [self._raw_from_any(k, c) for c in modulus]
            if len(coeffs) < 3:
                raise MalformedModulus(f"modulus of {gen_name} must have degree >= 2")
            if coeffs[-1] != self._one(k):
                raise MalformedModulus(f"modulus of {gen_name} is not monic")
            self.names += (gen_name,)
            self.degrees += (len(coeffs) - 1,)
            self.moduli += (tuple(coeffs[:-1]),)
        self.name = name or ("Q" if not self.names else "Q(" + ",".join(self.names) + ")")
        self.dim = reduce(lambda a, b: a * b, self.degrees, 1)

    @property
    def height(self) -> int:
        return len(self.names)

    def key(self) -> tuple:
        return (self.names, self.moduli)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldTower) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"FieldTower({self.name})"

    def extends(self, other: FieldTower) -> bool:
        return (self.names[: other.height], self.moduli[: other.height]) == (
            other.names,
            other.moduli,
        )

    # raw arithmetic ---------------------------------------------------
    def _zero(self, k: int):
        if k == 0:
            return Fraction(0)
        return (self._zero(k - 1),) * self.degrees[k - 1]

    def _one(self, k: int):
        if k == 0:
            return Fraction(1)
        return (self._one(k - 1),) + (self._zero(k - 1),) * (self.degrees[k - 1] - 1)

    def _lift(self, k: int, q: Fraction, src: int = 0):
        # embed a level-src raw value into level k
        out = q
        for j in range(src, k):
            out = (out,) + (self._zero(j),) * (self.degrees[j] - 1)
        return out

    def _raw_from_any(self, k: int, x: Any):
        if isinstance(x, FieldElement):
            if not self.extends(x.tower) and not (x.tower.height <= k and self.extends(x.tower)):
                raise TypeError(f"element of {x.tower.name} does not embed into {self.name}")
            if x.tower.height > k:
                raise TypeError("element lives above the requested level")
            return self._lift(k, x.raw, x.tower.height)
        if isinstance(x, (list, tuple)):
            if k == 0:
                raise TypeError(f"nested coefficients too deep: {x!r}")
            if len(x) != self.degrees[k - 1]:
                raise TypeError(f"expected {self.degrees[k - 1]} coefficients at level {k}, got {len(x)}")
            return tuple(self._raw_from_any(k - 1, c) for c in x)
        return self._lift(k, as_fraction(x))

    def _is_zero(self, k: int, a) -> bool:
        if k == 0:
            return a == 0
        return all(self._is_zero(k - 1, c) for c in a)

    def _add(self, k: int, a, b):
        if k == 0:
            return a + b
        return tuple(self._add(k - 1, x, y) for x, y in zip(a, b))

    def _neg(self, k: int, a):
        if k == 0:
            return -a
        return tuple(self._neg(k - 1, x) for x in a)

    def _sub(self, k: int, a, b):
        if k == 0:
            return a - b
        return tuple(self._sub(k - 1, x, y) for x, y in zip(a, b))

    def _mul(self, k: int, a, b):
        if k == 0:
            return a * b
        j = k - 1
        d = self.degrees[j]
        prod = [self._zero(j)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if self._is_zero(j, ai):
                continue
            for m, bm in enumerate(b):
                if self._is_zero(j, bm):
                    continue
                prod[i + m] = self._add(j, prod[i + m], self._mul(j, ai, bm))
        return tuple(self._reduce_poly(k, prod))

    def _reduce_poly(self, k: int, coeffs: list) -> list:
        """Reduce a polynomial in the level-k generator modulo its minimal polynomial."""
        j = k - 1
        d = self.degrees[j]
        mod = self.moduli[j]
        coeffs = list(coeffs) + [self._zero(j)] * max(0, d - len(coeffs))
        for top in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[top]
            if self._is_zero(j, c):
                continue
            for t in range(d):
                coeffs[top - d + t] = self._sub(j, coeffs[top - d + t], self._mul(j, c, mod[t]))
            coeffs[top] = self._zero(j)
        return coeffs[:d]

    def _inv(self, k: int, a):
        if self._is_zero(k, a):
            raise DivisionByZero("inverse of zero")
        if k == 0:
            return 1 / a
        j = k - 1
        # extended Euclid in K_j[t] between a and the modulus
        modulus = list(self.moduli[j]) + [self._one(j)]
        r0, r1 = _ptrim(self, j, modulus), _ptrim(self, j, list(a))
        s0, s1 = [], [self._one(j)]
        while r1:
            q, r = _pdivmod(self, j, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(self, j, s0, _pmul(self, j, q, s1))
        if len(r0) != 1:
            raise ReducibleModulus(
                f"modulus of {self.names[j]} shares a factor with a nonzero element; it is reducible"
            )
        c = self._inv(j, r0[0])
        s = [self._mul(j, c, x) for x in s0]
        return tuple(self._reduce_poly(k, s))

    # public helpers -------------------------------------------------
    def __call__(self, x: Any) -> FieldElement:
        if isinstance(x, FieldElement) and x.tower == self:
            return x
        return FieldElement(self, self._raw_from_any(self.height, x))

    def zero(self) -> FieldElement:
        return FieldElement(self, self._zero(self.height))

    def one(self) -> FieldElement:
        return FieldElement(self, self._one(self.height))

    def gen(self, name: str) -> FieldElement:
        k = self.names.index(name)
        raw = (self._zero(k), self._one(k)) + (self._zero(k),) * (self.degrees[k] - 2)
        return FieldElement(self, self._lift(self.height, raw, k + 1))

    def gens(self) -> dict[str, FieldElement]:
        return {n: self.gen(n) for n in self.names}

    def from_flat(self, coeffs: Sequence[Any]) -> FieldElement:
        """Build from a flat coefficient list; the lowest level varies fastest."""
        if len(coeffs) != self.dim:
            raise TypeError(f"{self.name} needs {self.dim} coefficients, got {len(coeffs)}")

        def build(k: int, flat: list):
            if k == 0:
                return as_fraction(flat[0])
            size = len(flat) // self.degrees[k - 1]
            return tuple(build(k - 1, flat[i * size:(i + 1) * size]) for i in range(self.degrees[k - 1]))

        return FieldElement(self, build(self.height, list(coeffs)))

    def cube_root_of_unity(self) -> FieldElement:
        for name, mod in zip(self.names, self.moduli):
            if mod == (self._lift(self.names.index(name), Fraction(1)),) * 2:
                return self.gen(name)
        roots = roots_in_tower([Fraction(1), Fraction(1), Fraction(1)], self)
        if not roots:
            raise CubicDoesNotSplit(f"{self.name} contains no primitive cube root of unity")
        return roots[0]

    def to_json(self) -> list:
        out = []
        for k, (name, mod) in enumerate(zip(self.names, self.moduli)):
            coeffs = [FieldElement(_prefix(self, k), c).to_json() for c in mod]
            coeffs.append(FieldElement(_prefix(self, k), self._one(k)).to_json())
            out.append({"name": name, "modulus": coeffs})
        return out

    @classmethod
    def from_json(cls, doc: list | str, name: str | None = None) -> FieldTower:
        if isinstance(doc, str):
            doc = json.loads(doc)
        return make_tower([(lvl["name"], lvl["modulus"]) for lvl in doc], name=name)


def _prefix(tower: FieldTower, k: int) -> FieldTower:
    return FieldTower(list(zip(tower.names[:k], [list(m) + [tower._one(i)] for i, m in enumerate(tower.moduli[:k])])))


def _ptrim(t: FieldTower, j: int, p: list) -> list:
    p = list(p)
    while p and t._is_zero(j, p[-1]):
        p.pop()
    return p


def _psub(t: FieldTower, j: int, a: list, b: list) -> list:
    n = max(len(a), len(b))
    z = t._zero(j)
    out = [t._sub(j, a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)]
    return _ptrim(t, j, out)


def _pmul(t: FieldTower, j: int, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [t._zero(j)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for m, y in enumerate(b):
            out[i + m] = t._add(j, out[i + m], t._mul(j, x, y))
    return _ptrim(t, j, out)


def _pdivmod(t: FieldTower, j: int, a: list, b: list) -> tuple[list, list]:
    a = list(a)
    inv_lead = t._inv(j, b[-1])
    q = [t._zero(j)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = t._mul(j, a[-1], inv_lead)
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = t._sub(j, a[shift + i], t._mul(j, c, y))
        a = _ptrim(t, j, a)
    return _ptrim(t, j, q), a


def make_tower(levels: Sequence[tuple[str, Sequence[Any]]], name: str | None = None) -> FieldTower:
    return FieldTower(levels, name=name)


class FieldElement:
    __slots__ = ("tower", "raw")

    def __init__(self, tower: FieldTower, raw):
        self.tower = tower
        self.raw = raw

    def _coerce(self, other: Any):
        if isinstance(other, FieldElement):
            if other.tower == self.tower:
                return self.tower, self.raw, other.raw
            if self.tower.extends(other.tower):
                return self.tower, self.raw, self.tower(other).raw
            if other.tower.extends(self.tower):
                return other.tower, other.tower(self).raw, other.raw
            raise TypeError(f"cannot mix {self.tower.name} and {other.tower.name}")
        if isinstance(other, (int, Fraction)):
            return self.tower, self.raw, self.tower._lift(self.tower.height, Fraction(other))
        return None

    def _binop(self, other, fn, swap=False):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        tower, a, b = c
        if swap:
            a, b = b, a
        return FieldElement(tower, fn(tower, a, b))

    def __add__(self, other):
        return self._binop(other, lambda t, a, b: t._add(t.height, a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda t, a, b: t._sub(t.height, a, b))

    def __rsub__(self, other):
        return self._binop(other, lambda t, a, b: t._sub(t.height, a, b), swap=True)

    def __mul__(self, other):
        return self._binop(other, lambda t, a, b: t._mul(t.height, a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda t, a, b: t._mul(t.height, a, t._inv(t.height, b)))

    def __rtruediv__(self, other):
        return self._binop(other, lambda t, a, b: t._mul(t.height, a, t._inv(t.height, b)), swap=True)

    def __neg__(self):
        return FieldElement(self.tower, self.tower._neg(self.tower.height, self.raw))

    def __pos__(self):
        return self

    def inverse(self) -> FieldElement:
        return FieldElement(self.tower, self.tower._inv(self.tower.height, self.raw))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = self.tower.one()
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return c[1] == c[2]

    def __bool__(self) -> bool:
        return not self.tower._is_zero(self.tower.height, self.raw)

    def rational_value(self) -> Fraction | None:
        raw = self.raw
        for k in range(self.tower.height, 0, -1):
            if any(not self.tower._is_zero(k - 1, c) for c in raw[1:]):
                return None
            raw = raw[0]
        return raw

    def __hash__(self) -> int:
        q = self.rational_value()
        if q is not None:
            return hash(q)
        return hash((self.tower.key(), self.raw))

    def flat(self) -> list[Fraction]:
        def walk(k, raw):
            if k == 0:
                return [raw]
            return [x for c in raw for x in walk(k - 1, c)]

        return walk(self.tower.height, self.raw)

    def to_json(self):
        def walk(k, raw):
            if k == 0:
                return str(raw)
            return [walk(k - 1, c) for c in raw]

        return walk(self.tower.height, self.raw)

    def __repr__(self) -> str:
        terms = []
        names = self.tower.names
        degrees = self.tower.degrees

        def walk(k, raw, exps):
            if k == 0:
                if raw != 0:
                    terms.append((raw, exps))
                return
            for i, c in enumerate(raw):
                walk(k - 1, c, (i,) + exps)

        walk(self.tower.height, self.raw, ())
        if not terms:
            return "0"
        parts = []
        for coeff, exps in terms:
            mono = "*".join(
                names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e
            )
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append("-" + mono)
            else:
                c = str(coeff)
                parts.append(f"({c})*{mono}" if "/" in c else f"{c}*{mono}")
        del degrees
        return " + ".join(parts).replace("+ -", "- ")


def fraction_to_str(q: Fraction) -> str:
    return str(q)


def scalar_to_json(x: Any):
    """Rationals as "p/q" strings, other tower elements as nested coefficient lists."""
    if isinstance(x, FieldElement):
        q = x.rational_value()
        return str(q) if q is not None else x.to_json()
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    return str(x)


# built-in towers -----------------------------------------------------------

Q = FieldTower([], name="Q")
QE = FieldTower([("e", [1, 1, 1])], name="Qe")
QEC = FieldTower([("e", [1, 1, 1]), ("c", [2, 0, 0, 1])], name="Qec")
QESQ = FieldTower([("e", [1, 1, 1]), ("s", [-2, 0, 1]), ("q", [-3, 0, 0, 0, 1])], name="Qesq")

TOWERS: dict[str, FieldTower] = {t.name: t for t in (Q, QE, QEC, QESQ)}


def get_tower(name_or_path: str) -> FieldTower:
    if name_or_path in TOWERS:
        return TOWERS[name_or_path]
    with open(name_or_path) as fh:
        return FieldTower.from_json(json.load(fh), name=name_or_path)


def parse_scalar(text: str, tower: FieldTower | None = None):
    """Parse ``"p/q"`` or ``"[c0,c1,...]@Tower"`` (flat or nested coefficients)."""
    text = text.strip()
    if "@" in text:
        body, tname = text.rsplit("@", 1)
        t = get_tower(tname.strip())
        data = json.loads(body.replace("'", '"'))
        if data and not any(isinstance(c, list) for c in data):
            flat = [as_fraction(str(c)) for c in data]
            if len(flat) < t.dim:
                flat += [Fraction(0)] * (t.dim - len(flat))
            el = t.from_flat(flat)
        else:
            el = t(_strings_to_fractions(data))
        return tower(el) if tower is not None else el
    q = as_fraction(text)
    return tower(q) if tower is not None else q


def _strings_to_fractions(data):
    if isinstance(data, list):
        return [_strings_to_fractions(d) for d in data]
    return as_fraction(str(data))


def common_tower(values: Iterable[Any]) -> FieldTower | None:
    best: FieldTower | None = None
    for v in values:
        if isinstance(v, FieldElement):
            if best is None or v.tower.extends(best):
                best = v.tower
            elif not best.extends(v.tower):
                raise TypeError(f"cannot mix {best.name} and {v.tower.name}")
    return best


# ---------------------------------------------------------------------------
# multivariate polynomials

Monomial = tuple  # sorted tuple of (variable, exponent) pairs


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    d = dict(a)
    for v, e in b:
        if d.get(v, 0) < e:
            return None
        d[v] -= e
    return tuple(sorted((v, e) for v, e in d.items() if e))


def _lex_key(m: Monomial, variables: Sequence[str]) -> tuple:
    d = dict(m)
    return tuple(d.get(v, 0) for v in variables)


class MultiPoly:
    """Sparse polynomial in named variables over Q or a tower."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Any] | None = None):
        self.terms: dict[Monomial, Any] = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c: Any) -> MultiPoly:
        if isinstance(c, int):
            c = Fraction(c)
        return cls({(): c})

    @staticmethod
    def _wrap(x: Any) -> MultiPoly | None:
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Fraction, FieldElement)):
            return MultiPoly.const(x)
        return None

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_value(self):
        return self.terms.get((), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out[m] + c if m in out else c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out[m] + c1 * c2 if m in out else c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = MultiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return MultiPoly({m: c / other for m, c in self.terms.items()})
        if isinstance(other, MultiPoly) and other.is_constant() and other:
            return self / other.constant_value()
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return not (self - o).terms

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash(frozenset((m, c) for m, c in self.terms.items()))

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self.terms)
        return max(dict(m).get(var, 0) for m in self.terms)

    def coeffs_in(self, var: str) -> list[MultiPoly]:
        """Coefficients as polynomials in the remaining variables, lowest power first."""
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.pop(var, 0)
            out.setdefault(e, {})[tuple(sorted(d.items()))] = c
        n = max(out) if out else -1
        return [MultiPoly(out.get(i, {})) for i in range(n + 1)]

    def diff(self, var: str) -> MultiPoly:
        out: dict = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(var, 0)
            if e == 0:
                continue
            if e == 1:
                del d[var]
            else:
                d[var] = e - 1
            out[tuple(sorted(d.items()))] = c * e
        return MultiPoly(out)

    def subs(self, values: Mapping[str, Any]) -> MultiPoly:
        out = MultiPoly()
        for m, c in self.terms.items():
            term = MultiPoly.const(c)
            rest = []
            for v, e in m:
                if v in values:
                    val = values[v]
                    term = term * (val ** e if not isinstance(val, MultiPoly) else val ** e)
                else:
                    rest.append((v, e))
            if rest:
                term = term * MultiPoly({tuple(rest): Fraction(1)})
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, Any]):
        r = self.subs(values)
        if not r.is_constant():
            raise ValueError(f"unassigned variables {sorted(r.variables())}")
        return r.constant_value()

    def leading(self, variables: Sequence[str]) -> tuple[Monomial, Any]:
        m = max(self.terms, key=lambda mono: _lex_key(mono, variables))
        return m, self.terms[m]

    def divexact(self, other: MultiPoly) -> MultiPoly:
        if not other:
            raise DivisionByZero("polynomial division by zero")
        if other.is_constant():
            return self / other.constant_value()
        variables = sorted(self.variables() | other.variables())
        lm, lc = other.leading(variables)
        rem = self
        quot: dict = {}
        while rem.terms:
            m, c = rem.leading(variables)
            qm = _mono_div(m, lm)
            if qm is None:
                raise ArithmeticError("inexact polynomial division")
            qc = c / lc
            quot[qm] = qc
            rem = rem - MultiPoly({qm: qc}) * other
        return MultiPoly(quot)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        variables = sorted(self.variables())
        parts = []
        for m in sorted(self.terms, key=lambda mono: _lex_key(mono, variables), reverse=True):
            c = self.terms[m]
            mono = "*".join(v + (f"^{e}" if e > 1 else "") for v, e in m)
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}" if isinstance(c, FieldElement) or "/" in cs else f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_from_coeffs(coeffs: Sequence[Any], var: str) -> MultiPoly:
    """Univariate polynomial from coefficients, lowest power first."""
    x = MultiPoly.var(var)
    out = MultiPoly()
    for i, c in enumerate(coeffs):
        out = out + MultiPoly._wrap(c) * x ** i if isinstance(c, MultiPoly) else out + MultiPoly.const(c) * x ** i
    return out


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """num/den with no forced reduction; equality by cross-multiplication."""

    __slots__ = ("num", "den")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, num: Any, den: Any = 1):
        num = MultiPoly._wrap(num) if not isinstance(num, MultiPoly) else num
        den = MultiPoly._wrap(den) if not isinstance(den, MultiPoly) else den
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if den.is_constant():
            num, den = num / den.constant_value(), MultiPoly.const(1)
        else:
            num, den = _cancel_univariate(num, den)
        self.num = num
        self.den = den

    @classmethod
    def var(cls, name: str) -> RationalFunction:
        return cls(MultiPoly.var(name))

    @staticmethod
    def _wrap(x: Any) -> RationalFunction | None:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction, FieldElement, MultiPoly)):
            return RationalFunction(x)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(self.den ** -e, self.num ** -e)
        return RationalFunction(self.num ** e, self.den ** e)

    def __eq__(self, other: object) -> bool:
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __bool__(self) -> bool:
        return bool(self.num)

    def variables(self) -> set[str]:
        return self.num.variables() | self.den.variables()

    def subs(self, values: Mapping[str, Any]):
        """Specialize; raises GenericityViolated when the denominator vanishes."""
        den = self.den.subs(values)
        if not den:
            raise GenericityViolated(
                f"denominator {self.den!r} vanishes at {dict(values)}; recompute at the specialized value"
            )
        num = self.num.subs(values)
        if den.is_constant() and num.is_constant():
            return num.constant_value() / den.constant_value()
        return RationalFunction(num, den)

    def __repr__(self) -> str:
        if self.den == 1:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def _cancel_univariate(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Strip a common factor when everything lives in a single variable."""
    vs = num.variables() | den.variables()
    if len(vs) != 1 or not num:
        if not num:
            return num, MultiPoly.const(1)
        return num, den
    (v,) = vs
    g = _univariate_gcd(num, den, v)
    if g.degree(v) > 0:
        num, den = num.divexact(g), den.divexact(g)
    # make the denominator monic
    lead = den.coeffs_in(v)[-1].constant_value()
    if lead != 1:
        num, den = num / lead, den / lead
    if den.is_constant():
        return num / den.constant_value(), MultiPoly.const(1)
    return num, den


def _univariate_gcd(a: MultiPoly, b: MultiPoly, v: str) -> MultiPoly:
    while b:
        a, b = b, _univariate_rem(a, b, v)
    return a


def _univariate_rem(a: MultiPoly, b: MultiPoly, v: str) -> MultiPoly:
    x = MultiPoly.var(v)
    db = b.degree(v)
    lb = b.coeffs_in(v)[-1].constant_value()
    while a and a.degree(v) >= db:
        da = a.degree(v)
        la = a.coeffs_in(v)[-1].constant_value()
        a = a - b * (x ** (da - db)) * (la / lb)
    return a


# ---------------------------------------------------------------------------
# determinants, resultants, discriminants


def bareiss_det(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free determinant over a polynomial ring."""
    n = len(matrix)
    if n == 0:
        return MultiPoly.const(1)
    m = [[MultiPoly._wrap(x) for x in row] for row in matrix]
    sign = 1
    prev = MultiPoly.const(1)
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divexact(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> list[list[MultiPoly]]:
    a = p.coeffs_in(var)[::-1]
    b = q.coeffs_in(var)[::-1]
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = MultiPoly()
    rows = []
    for i in range(n):
        rows.append([zero] * i + a + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + b + [zero] * (size - n - 1 - i))
    return rows


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    if not p or not q:
        raise ZeroInput("resultant of a zero polynomial")
    if p.degree(var) == 0 and q.degree(var) == 0:
        raise ZeroInput(f"neither input involves {var}")
    if p.degree(var) == 0:
        return p ** q.degree(var)
    if q.degree(var) == 0:
        return q ** p.degree(var)
    return bareiss_det(sylvester_matrix(p, q, var))


def discriminant(p: MultiPoly, var: str) -> MultiPoly:
    n = p.degree(var)
    if n < 2:
        raise ValueError(f"discriminant needs degree >= 2 in {var}")
    lead = p.coeffs_in(var)[-1]
    if not lead.is_constant():
        raise NonUnitLeadingCoefficient(f"leading coefficient {lead!r} is not a unit")
    res = resultant(p, p.diff(var), var)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return res * sign / lead.constant_value()


# ---------------------------------------------------------------------------
# roots of univariate polynomials inside a tower


def roots_in_tower(coeffs: Sequence[Any], tower: FieldTower, seed: int = 0) -> list[FieldElement]:
    """All roots in ``tower`` of the squarefree polynomial sum coeffs[i] t^i.

    B = K[t]/(p) is split as a commutative Q-algebra.  For an element b whose
    characteristic polynomial over Q is squarefree, the components ker g(M_b)
    for the Q-irreducible factors g are the simple factors of B, and those of
    Q-dimension [K:Q] are exactly the linear factors of p over K.
    """
    import sympy
    from sympy.polys.domains import QQ
    from sympy.polys.matrices import DomainMatrix

    p = [tower(c) for c in coeffs]
    while p and not p[-1]:
        p.pop()
    deg = len(p) - 1
    if deg < 1:
        return []
    lead_inv = p[-1].inverse()
    p = [c * lead_inv for c in p]
    if deg == 1:
        return [-p[0]]
    N = tower.dim
    D = deg * N
    kbasis = _tower_basis(tower)

    def to_coords(poly: Sequence[FieldElement]) -> list[Fraction]:
        return [x for c in poly for x in c.flat()]

    def from_coords(vec: Sequence[Any]) -> list[FieldElement]:
        return [tower.from_flat([Fraction(int(v.numerator), int(v.denominator)) for v in vec[i * N:(i + 1) * N]]) for i in range(deg)]

    def times_t(poly: list[FieldElement]) -> list[FieldElement]:
        top = poly[-1]
        out = [tower.zero()] + poly[:-1]
        return [o - top * c for o, c in zip(out, p[:deg])] if top else out

    def qmatrix(images: list[list[Fraction]]) -> DomainMatrix:
        rows = [[QQ(int(images[j][i].numerator), int(images[j][i].denominator)) for j in range(D)] for i in range(D)]
        return DomainMatrix(rows, (D, D), QQ)

    unit_vectors = []
    for i in range(deg):
        for b in kbasis:
            unit_vectors.append([tower.zero()] * i + [b] + [tower.zero()] * (deg - 1 - i))
    m_t = qmatrix([to_coords(times_t(v)) for v in unit_vectors])
    m_gens = [qmatrix([to_coords([g * c for c in v]) for v in unit_vectors]) for g in tower.gens().values()]

    rng = random.Random(seed)
    t = sympy.Symbol("t")
    for _attempt in range(20):
        mb = m_t
        for mg in m_gens:
            mb = mb + mg * QQ(rng.randint(-5, 5))
        cp = sympy.Poly(mb.charpoly(), t, domain="QQ")
        if sympy.degree(sympy.gcd(cp, cp.diff(t)), t) > 0:
            continue
        _, factors = cp.factor_list()
        roots: list[FieldElement] = []
        for g, _ in factors:
            if g.degree() != N:
                continue
            gm = DomainMatrix.zeros((D, D), QQ)
            for c in g.all_coeffs():
                gm = gm * mb + DomainMatrix.eye(D, QQ) * QQ.from_sympy(c)
            kernel = gm.nullspace().to_Matrix()
            vec = [kernel[0, j] for j in range(D)]
            e = from_coords(vec)
            te = times_t(e)
            root = next(y / x for x, y in zip(e, te) if x)
            if _horner(p, root) == 0:
                roots.append(root)
        return sorted(roots, key=lambda r: [str(x) for x in r.flat()])
    raise CubicDoesNotSplit("could not split the polynomial algebra; try another seed")


def _tower_basis(tower: FieldTower) -> list[FieldElement]:
    out = []
    for i in range(tower.dim):
        flat = [0] * tower.dim
        flat[i] = 1
        out.append(tower.from_flat(flat))
    return out


def _horner(p: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    acc = x.tower.zero()
    for c in reversed(p):
        acc = acc * x + c
    return acc
