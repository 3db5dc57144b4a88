"""Tensors in the free algebra k<x_0, ..., x_{n-1}>, cubic potentials and their
partial derivatives.

Words are tuples of generator indices.  ``(0, 1, 2)`` is ``xyz`` when n = 3.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator, Mapping

from .errors import WrongDegree, WrongGeneratorCount
from .exactfield import MultiPoly, as_fraction, bareiss_det, scalar_to_json
from .linalg import clean, nullspace

Word = tuple


def word_key(w: Word) -> tuple:
    """Degree-lex order with x < y < z."""
    return (len(w), w)


def letters(n: int) -> list[str]:
    return list("xyz") if n == 3 else [f"x{i}" for i in range(n)]


def words(n: int, d: int) -> Iterator[Word]:
    return itertools.product(range(n), repeat=d)


def words_upto(n: int, d: int) -> list[Word]:
    return [w for k in range(d + 1) for w in words(n, k)]


class Tensor:
    """Finitely supported combination of words on n generators."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Word, Any] | None = None):
        self.n = n
        self.terms: dict[Word, Any] = clean({tuple(w): c for w, c in (terms or {}).items()})
        for w in self.terms:
            if any(not 0 <= i < n for i in w):
                raise WrongGeneratorCount(f"word {w} uses a generator outside 0..{n - 1}")

    @classmethod
    def word(cls, n: int, w: Iterable[int], coeff: Any = 1) -> Tensor:
        return cls(n, {tuple(w): Fraction(coeff) if isinstance(coeff, int) else coeff})

    @classmethod
    def parse(cls, n: int, text: str) -> Tensor:
        """Parse sums like ``"xy + yx - 2*zz"`` with rational coefficients (n = 3)."""
        names = letters(n)
        text = text.replace(" ", "").replace("-", "+-")
        out: dict = {}
        for chunk in filter(None, text.split("+")):
            coeff = Fraction(1)
            if "*" in chunk:
                c, chunk = chunk.rsplit("*", 1)
                coeff = as_fraction(c)
            elif chunk.startswith("-"):
                coeff, chunk = Fraction(-1), chunk[1:]
            w: list[int] = []
            i = 0
            while i < len(chunk):
                if chunk[i] == "^":
                    j = i + 1
                    while j < len(chunk) and chunk[j].isdigit():
                        j += 1
                    w.extend([w[-1]] * (int(chunk[i + 1:j]) - 1))
                    i = j
                    continue
                w.append(names.index(chunk[i]))
                i += 1
            out[tuple(w)] = out.get(tuple(w), 0) + coeff
        return cls(n, out)

    def __add__(self, other: Tensor) -> Tensor:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return Tensor(self.n, out)

    def __neg__(self) -> Tensor:
        return Tensor(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: Tensor) -> Tensor:
        return self + (-other)

    def __mul__(self, other: Any) -> Tensor:
        if isinstance(other, Tensor):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, 0) + c1 * c2
            return Tensor(self.n, out)
        return Tensor(self.n, {w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other: Any) -> Tensor:
        return Tensor(self.n, {w: other * c for w, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.n == other.n and not (self - other).terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    def component(self, d: int) -> Tensor:
        return Tensor(self.n, {w: c for w, c in self.terms.items() if len(w) == d})

    def map_words(self, fn) -> Tensor:
        out: dict = {}
        for w, c in self.terms.items():
            nw = fn(w)
            out[nw] = out.get(nw, 0) + c
        return Tensor(self.n, out)

    def substitute(self, matrix) -> Tensor:
        """Apply the graded map x_j -> sum_k matrix[k][j] x_k letterwise."""
        out: dict = {}
        for w, c in self.terms.items():
            partial = {(): c}
            for a in w:
                nxt: dict = {}
                for pw, pc in partial.items():
                    for k in range(self.n):
                        m = matrix[k][a]
                        if m:
                            nw = pw + (k,)
                            nxt[nw] = nxt.get(nw, 0) + pc * m
                partial = nxt
            for pw, pc in partial.items():
                out[pw] = out.get(pw, 0) + pc
        return Tensor(self.n, out)

    def to_json(self) -> dict:
        return {"".join(str(i + 1) for i in w): scalar_to_json(c) for w, c in sorted(self.terms.items(), key=lambda t: word_key(t[0]))}

    @classmethod
    def from_json(cls, n: int, doc: Mapping[str, Any] | str) -> Tensor:
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(n, {tuple(int(ch) - 1 for ch in k): as_fraction(v) for k, v in doc.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = letters(self.n)
        parts = []
        for w in sorted(self.terms, key=word_key):
            c = self.terms[w]
            mono = "".join(names[i] for i in w) or "1"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}" if mono != "1" else f"{c}")
        return " + ".join(parts).replace("+ -", "- ")


def _require_cubic(omega: Tensor) -> None:
    if not omega.is_homogeneous(3):
        raise WrongDegree(f"expected a homogeneous cubic tensor, got degrees {sorted(omega.degrees())}")


def cyclic_shift(omega: Tensor) -> Tensor:
    """x_a x_b x_c -> x_b x_c x_a."""
    _require_cubic(omega)
    return omega.map_words(lambda w: (w[1], w[2], w[0]))


def transpose_positions(omega: Tensor, i: int, j: int) -> Tensor:
    def swap(w):
        w = list(w)
        w[i], w[j] = w[j], w[i]
        return tuple(w)

    return omega.map_words(swap)


def is_superpotential(omega: Tensor) -> bool:
    return cyclic_shift(omega) == omega


def is_symmetric(omega: Tensor) -> bool:
    _require_cubic(omega)
    return transpose_positions(omega, 0, 1) == omega and transpose_positions(omega, 1, 2) == omega


@dataclass(frozen=True)
class PotentialClass:
    is_superpotential: bool
    is_symmetric: bool
    twist: tuple | None

    def to_json(self) -> dict:
        twist = None
        if self.twist is not None:
            twist = [[scalar_to_json(c) for c in row] for row in self.twist]
        return {"is_superpotential": self.is_superpotential, "is_symmetric": self.is_symmetric, "twist": twist}


def find_twist(omega: Tensor) -> tuple | None:
    """An invertible sigma with (sigma (x) id (x) id) phi(omega) = omega, if any."""
    _require_cubic(omega)
    n = omega.n
    phi = cyclic_shift(omega)
    unknowns = [(k, a) for k in range(n) for a in range(n)]
    # word (k, b, c) of the left side collects sigma[k][a] * phi[(a, b, c)]
    equations = []
    for w in words(n, 3):
        k, b, c = w
        eq = {(k, a): phi.terms.get((a, b, c), 0) for a in range(n)}
        eq["one"] = -omega.terms.get(w, 0)
        eq = clean(eq)
        if eq:
            equations.append(eq)
    sols = nullspace(equations, unknowns + ["one"])
    particular = next((s for s in sols if s.get("one")), None)
    if particular is None:
        return None
    particular = {key: v / particular["one"] for key, v in particular.items()}
    homogeneous = []
    for s in sols:
        if s is particular:
            continue
        c = s.get("one", 0)
        vec = {key: s.get(key, 0) - c * particular.get(key, 0) for key in unknowns}
        homogeneous.append(clean(vec))
    homogeneous = [h for h in homogeneous if h]
    params = [MultiPoly.var(f"t{i}") for i in range(len(homogeneous))]
    sym = [[MultiPoly.const(particular.get((k, a), 0)) + sum((p * h.get((k, a), 0) for p, h in zip(params, homogeneous)), MultiPoly())
            for a in range(n)] for k in range(n)]
    det = bareiss_det(sym)
    if not det:
        return None
    names = [f"t{i}" for i in range(len(homogeneous))]
    # the particular solution first, then small integer offsets
    points = sorted(itertools.product(range(-2, 3), repeat=len(names)), key=lambda p: (sum(map(abs, p)), p))
    for point in points:
        values = dict(zip(names, [Fraction(v) for v in point]))
        if det.evaluate(values) != 0:
            return tuple(tuple(sym[k][a].evaluate(values) for a in range(n)) for k in range(n))
    return None


def classify_potential(omega: Tensor) -> PotentialClass:
    _require_cubic(omega)
    if omega.n != 3:
        raise WrongGeneratorCount(f"potential classification needs 3 generators, got {omega.n}")
    return PotentialClass(is_superpotential(omega), is_symmetric(omega), find_twist(omega))


def derivation_quotient(omega: Tensor) -> list[Tensor]:
    """The partial derivatives d_i omega, where omega = sum_i x_i (x) omega_i."""
    _require_cubic(omega)
    out = []
    for i in range(omega.n):
        out.append(Tensor(omega.n, {w[1:]: c for w, c in omega.terms.items() if w[0] == i}))
    return out
