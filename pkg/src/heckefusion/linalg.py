"""Exact linear algebra over Q(q): sparse echelon bases for subspaces of H_l
and small dense matrices."""

from __future__ import annotations

from typing import Sequence

from .combinatorics import length
from .hecke import AlgebraElement
from .scalars import RationalFunction

__all__ = ["Basis", "Echelon", "NotInSpan", "mat_inverse", "mat_vec", "mat_mul", "mat_eq", "mat_identity", "det", "rank", "mat_sub_scalar"]

Matrix = list  # list of rows


class NotInSpan(ValueError):
    pass


def _key(s):
    return (length(s), s)


class Echelon:
    """Reduced row-echelon basis of a subspace of H_l.

    Each basis vector has coefficient 1 at its pivot word and 0 at every other
    pivot word, so coordinates of a member are read off at the pivots.
    """

    def __init__(self, rank: int):
        self.rank = rank
        self.pivots: list[tuple] = []
        self.vectors: list[dict] = []

    def __len__(self):
        return len(self.vectors)

    def _reduce(self, v: dict) -> dict:
        v = dict(v)
        for p, b in zip(self.pivots, self.vectors):
            c = v.get(p)
            if c:
                for s, x in b.items():
                    y = v.get(s)
                    y = -(c * x) if y is None else y - c * x
                    if y:
                        v[s] = y
                    else:
                        v.pop(s, None)
        return v

    def insert(self, elem: AlgebraElement) -> bool:
        """Add elem to the span; return True if it was independent."""
        v = self._reduce(elem.terms)
        if not v:
            return False
        p = max(v, key=_key)
        inv = v[p].inv()
        v = {s: x * inv for s, x in v.items()}
        for b in self.vectors:
            c = b.get(p)
            if c:
                for s, x in v.items():
                    y = b.get(s)
                    y = -(c * x) if y is None else y - c * x
                    if y:
                        b[s] = y
                    else:
                        b.pop(s, None)
        self.pivots.append(p)
        self.vectors.append(v)
        return True

    def contains(self, elem: AlgebraElement) -> bool:
        return not self._reduce(elem.terms)

    def coords(self, elem: AlgebraElement) -> list:
        if self._reduce(elem.terms):
            raise NotInSpan("element is not in the span")
        return [elem.terms.get(p, RationalFunction.ZERO) for p in self.pivots]

    def element(self, k: int) -> AlgebraElement:
        return AlgebraElement._raw(self.rank, dict(self.vectors[k]))

    def elements(self) -> list[AlgebraElement]:
        return [self.element(k) for k in range(len(self))]


def mat_identity(n: int) -> Matrix:
    return [[RationalFunction.ONE if i == j else RationalFunction.ZERO for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = RationalFunction.ZERO
            for t in range(k):
                x, y = a[i][t], b[t][j]
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_sub_scalar(a: Matrix, r: RationalFunction) -> Matrix:
    return [[x - r if i == j else x for j, x in enumerate(row)] for i, row in enumerate(a)]


def _weight(x: RationalFunction) -> int:
    return x.degree_bound()


def _eliminate(a: Sequence[Sequence[RationalFunction]]):
    """Gaussian elimination; yields (rank, determinant-or-zero)."""
    m = [list(r) for r in a]
    n = len(m)
    cols = len(m[0]) if m else 0
    det = RationalFunction.ONE
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, n):
            if m[i][c] and (piv is None or _weight(m[i][c]) < _weight(m[piv][c])):
                piv = i
        if piv is None:
            det = RationalFunction.ZERO
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            det = -det
        p = m[r][c]
        det = det * p
        inv = p.inv()
        for i in range(r + 1, n):
            f = m[i][c]
            if f:
                f = f * inv
                row_r = m[r]
                row_i = m[i]
                for j in range(c + 1, cols):
                    if row_r[j]:
                        row_i[j] = row_i[j] - f * row_r[j]
                row_i[c] = RationalFunction.ZERO
        r += 1
        if r == n:
            break
    if r < n or n != cols:
        det = RationalFunction.ZERO
    return r, det


def det(a: Matrix) -> RationalFunction:
    if not a:
        return RationalFunction.ONE
    return _eliminate(a)[1]


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return _eliminate(a)[0]


def mat_inverse(a: Matrix) -> Matrix:
    """Inverse by Gauss-Jordan elimination; raises ZeroDivisionError if singular."""
    n = len(a)
    m = [list(row) + [RationalFunction.ONE if i == j else RationalFunction.ZERO for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c] and (piv is None or _weight(m[i][c]) < _weight(m[piv][c])):
                piv = i
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = m[c][c].inv()
        m[c] = [x * inv if x else x for x in m[c]]
        for i in range(n):
            f = m[i][c]
            if i != c and f:
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def mat_vec(a: Matrix, v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v) if x and y), RationalFunction.ZERO) for row in a]


class Basis:
    """A fixed list of independent elements of H_l with exact coordinates
    of members of their span in that list."""

    def __init__(self, elements: Sequence[AlgebraElement]):
        self.elements = list(elements)
        if not self.elements:
            raise ValueError("empty basis")
        self.echelon = Echelon(self.elements[0].rank)
        for e in self.elements:
            if not self.echelon.insert(e):
                raise ValueError("elements are linearly dependent")
        piv = self.echelon.pivots
        p = [[e.terms.get(s, RationalFunction.ZERO) for e in self.elements] for s in piv]
        self._pinv = mat_inverse(p)

    def __len__(self):
        return len(self.elements)

    def coords(self, v: AlgebraElement) -> list:
        if not self.echelon.contains(v):
            raise NotInSpan("element is not in the span")
        return mat_vec(self._pinv, [v.terms.get(s, RationalFunction.ZERO) for s in self.echelon.pivots])
