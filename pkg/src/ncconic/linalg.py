"""Sparse exact linear algebra over any field-like scalars.

Vectors are dicts ``key -> scalar`` with zero entries dropped.  The echelon
form pivots on the *largest* key under a caller-supplied order, so the keys
left without a pivot are the smallest surviving ones.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Sequence

Vec = dict


def clean(vec: dict) -> dict:
    return {k: v for k, v in vec.items() if v}


def axpy(target: dict, coeff: Any, vec: dict) -> None:
    """target += coeff * vec, in place."""
    for k, v in vec.items():
        nv = target.get(k, 0) + coeff * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


def scale(vec: dict, c: Any) -> dict:
    return clean({k: c * v for k, v in vec.items()})


def add(a: dict, b: dict, cb: Any = 1) -> dict:
    out = dict(a)
    axpy(out, cb, b)
    return out


class Echelon:
    """Incremental row echelon form keyed by dict vectors.

    With ``track=True`` every stored row remembers how it was assembled from
    the tagged input vectors, which makes :meth:`coordinates` possible.
    """

    def __init__(self, order: Callable[[Hashable], Any] | None = None, track: bool = False):
        self.order = order or (lambda k: k)
        self.track = track
        self.rows: dict[Hashable, dict] = {}
        self.combos: dict[Hashable, dict] = {}
        self._sorted: list | None = None

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        if self._sorted is None:
            self._sorted = sorted(self.rows, key=self.order, reverse=True)
        return self._sorted

    def _lead(self, vec: dict):
        return max(vec, key=self.order)

    def reduce(self, vec: dict, combo: dict | None = None) -> dict:
        """Reduce ``vec`` against the stored rows; optionally track the combination."""
        vec = clean(vec)
        for p in self.pivots():
            c = vec.get(p)
            if c:
                axpy(vec, -c, self.rows[p])
                if combo is not None:
                    axpy(combo, -c, self.combos[p])
        return vec

    def add(self, vec: dict, tag: Hashable | None = None) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        combo = {tag: Fraction(1)} if self.track else None
        red = self.reduce(vec, combo)
        if not red:
            return False
        p = self._lead(red)
        inv = 1 / red[p]
        row = scale(red, inv)
        row[p] = Fraction(1)
        self.rows[p] = row
        if self.track:
            self.combos[p] = scale(combo, inv)
        self._sorted = None
        return True

    def extend(self, vecs: Iterable[dict]) -> None:
        for v in vecs:
            self.add(v)

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def coordinates(self, vec: dict) -> dict | None:
        """Express ``vec`` as a combination of the tagged inputs, or None."""
        if not self.track:
            raise ValueError("coordinates need a tracking echelon")
        combo: dict = {}
        red = self.reduce(vec, combo)
        if red:
            return None
        return {k: -v for k, v in combo.items() if v}

    def normal_keys(self, universe: Iterable[Hashable]) -> list:
        return sorted((k for k in universe if k not in self.rows), key=self.order)

    def rref(self) -> dict[Hashable, dict]:
        """Fully reduced rows (each pivot absent from every other row)."""
        piv = sorted(self.rows, key=self.order)
        out: dict = {}
        for p in piv:
            row = dict(self.rows[p])
            # reduce the non-pivot part against already reduced smaller pivots
            for q in sorted(out, key=self.order, reverse=True):
                c = row.get(q)
                if c and q != p:
                    axpy(row, -c, out[q])
            out[p] = row
        return out

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in self.pivots()]


def rank(vecs: Iterable[dict], order: Callable | None = None) -> int:
    e = Echelon(order)
    e.extend(vecs)
    return e.rank


def span_basis(vecs: Iterable[dict], order: Callable | None = None) -> list[dict]:
    e = Echelon(order)
    e.extend(vecs)
    return [e.rows[p] for p in e.pivots()]


def same_span(a: Sequence[dict], b: Sequence[dict]) -> bool:
    ea, eb = Echelon(), Echelon()
    ea.extend(a)
    eb.extend(b)
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(v) for v in b)


def nullspace(equations: Sequence[dict], columns: Iterable[Hashable]) -> list[dict]:
    """Basis of {x : sum_k eq[k] * x[k] = 0 for every equation}."""
    cols = list(columns)
    position = {c: i for i, c in enumerate(cols)}
    e = Echelon(order=lambda k: position[k])
    e.extend(equations)
    reduced = e.rref()
    out = []
    for free in cols:
        if free in reduced:
            continue
        vec = {free: Fraction(1)}
        for p, row in reduced.items():
            c = row.get(free)
            if c:
                vec[p] = -c / row[p]
        out.append(clean(vec))
    return out


def solve(columns: Sequence[dict], target: dict) -> list | None:
    """Coefficients c with sum c_i columns[i] = target, or None."""
    e = Echelon(track=True)
    for i, col in enumerate(columns):
        e.add(col, tag=i)
    coords = e.coordinates(target)
    if coords is None:
        return None
    return [coords.get(i, Fraction(0)) for i in range(len(columns))]


def mat_mul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> list[list[Any]]:
    n, m, p = len(a), len(b), len(b[0])
    return [[sum((a[i][k] * b[k][j] for k in range(m)), Fraction(0)) for j in range(p)] for i in range(n)]


def mat_vec(a: Sequence[Sequence[Any]], v: Sequence[Any]) -> list[Any]:
    return [sum((row[k] * v[k] for k in range(len(v))), Fraction(0)) for row in a]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[Any]]) -> list[list[Any]]:
    return [list(r) for r in zip(*a)]


def det(a: Sequence[Sequence[Any]]) -> Any:
    """Determinant by elimination over a field."""
    m = [list(r) for r in a]
    n = len(m)
    d: Any = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            d = -d
        d = d * m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            c = m[i][k] * inv
            if c:
                for j in range(k, n):
                    m[i][j] = m[i][j] - c * m[k][j]
    return d


def inverse(a: Sequence[Sequence[Any]]) -> list[list[Any]]:
    n = len(a)
    m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k]:
                c = m[i][k]
                m[i] = [x - c * y for x, y in zip(m[i], m[k])]
    return [r[n:] for r in m]
