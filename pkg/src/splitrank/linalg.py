"""Exact rational linear algebra: rank and span membership.

Everything works on sequences of ints or Fractions. No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def rank(rows: Iterable[Sequence[int | Fraction]]) -> int:
    """Rank of an integer/rational matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    # clear denominators row by row so Bareiss stays in the integers
    for i, row in enumerate(m):
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // _gcd(den, x.denominator)
        m[i] = [int(x * den) for x in row]
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            for j in range(c, ncols):
                m[i][j] = (p * m[i][j] - a * m[r][j]) // prev
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class EchelonBasis:
    """Incrementally maintained reduced row-echelon basis over Q."""

    def __init__(self, dim: int, vectors: Iterable[Sequence[int | Fraction]] = ()):
        self.dim = dim
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def copy(self) -> "EchelonBasis":
        other = EchelonBasis(self.dim)
        other._rows = [row[:] for row in self._rows]
        other._pivots = self._pivots[:]
        return other

    def _reduce(self, v: Sequence[int | Fraction]) -> list[Fraction]:
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in a space of dimension {self.dim}")
        w = [Fraction(x) for x in v]
        for row, p in zip(self._rows, self._pivots):
            a = w[p]
            if a:
                for j in range(p, self.dim):
                    if row[j]:
                        w[j] -= a * row[j]
        return w

    def contains(self, v: Sequence[int | Fraction]) -> bool:
        return not any(self._reduce(v))

    def normals(self) -> list[list[int]]:
        """Integer basis of the null space; v is in the span iff v . n = 0 for each n."""
        out = []
        pivots = set(self._pivots)
        for free in range(self.dim):
            if free in pivots:
                continue
            n = [Fraction(0)] * self.dim
            n[free] = Fraction(1)
            for row, p in zip(self._rows, self._pivots):
                n[p] = -row[free]
            den = 1
            for x in n:
                den = den * x.denominator // _gcd(den, x.denominator)
            out.append([int(x * den) for x in n])
        return out

    def add(self, v: Sequence[int | Fraction]) -> bool:
        """Add ``v`` to the span; return True if the rank grew."""
        w = self._reduce(v)
        p = next((j for j, x in enumerate(w) if x), None)
        if p is None:
            return False
        lead = w[p]
        w = [x / lead for x in w]
        for row in self._rows:
            a = row[p]
            if a:
                for j in range(p, self.dim):
                    row[j] -= a * w[j]
        idx = next((i for i, q in enumerate(self._pivots) if q > p), len(self._pivots))
        self._rows.insert(idx, w)
        self._pivots.insert(idx, p)
        return True


def in_span(v: Sequence[int | Fraction], generators: Iterable[Sequence[int | Fraction]]) -> bool:
    gens = list(generators)
    if not gens:
        return not any(v)
    return EchelonBasis(len(v), gens).contains(v)


def solve(matrix: Sequence[Sequence[int | Fraction]], rhs: Sequence[int | Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system exactly (Gauss-Jordan over Q)."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][n] for i in range(n)]
