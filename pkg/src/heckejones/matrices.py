"""
Square matrices over a Laurent ring, used for images of Hecke generators.

Products skip zero entries, which keeps the long relation words (full twists of
14x14 matrices) cheap: generator images have only a handful of nonzero entries
per column.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .laurent import LaurentPoly, evaluate, to_json

__all__ = ["HeckeMatrix"]


class HeckeMatrix:
    __slots__ = ("rows", "var", "d")

    def __init__(self, rows: Sequence[Sequence], var: str = "q", d: int | None = None):
        size = len(rows)
        out = []
        for row in rows:
            if len(row) != size:
                raise ValueError("matrix must be square")
            out.append(tuple(_as_poly(x, var, d) for x in row))
        self.rows = tuple(out)
        self.var = var
        self.d = d

    @classmethod
    def _raw(cls, rows, var, d) -> HeckeMatrix:
        m = cls.__new__(cls)
        m.rows = tuple(tuple(r) for r in rows)
        m.var = var
        m.d = d
        return m

    @classmethod
    def identity(cls, size: int, var: str = "q", d: int | None = None) -> HeckeMatrix:
        one = LaurentPoly.const(1, var, d)
        zero = LaurentPoly(var=var, d=d)
        return cls._raw([[one if i == j else zero for j in range(size)] for i in range(size)], var, d)

    @classmethod
    def scalar(cls, c: LaurentPoly, size: int) -> HeckeMatrix:
        zero = c.zero()
        return cls._raw([[c if i == j else zero for j in range(size)] for i in range(size)], c.var, c.d)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _zero(self) -> LaurentPoly:
        return LaurentPoly(var=self.var, d=self.d)

    def __matmul__(self, other: HeckeMatrix) -> HeckeMatrix:
        if self.size != other.size:
            raise ValueError("size mismatch")
        n = self.size
        acc = [[None] * n for _ in range(n)]
        # iterate over nonzero entries of the right factor
        for k in range(n):
            left_col = [self.rows[i][k] for i in range(n)]
            if not any(left_col):
                continue
            for j, b in enumerate(other.rows[k]):
                if not b:
                    continue
                for i, a in enumerate(left_col):
                    if a:
                        prod = a * b
                        acc[i][j] = prod if acc[i][j] is None else acc[i][j] + prod
        zero = self._zero()
        return HeckeMatrix._raw([[x if x is not None else zero for x in row] for row in acc],
                                self.var, self.d)

    def __add__(self, other: HeckeMatrix) -> HeckeMatrix:
        return HeckeMatrix._raw([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                                self.var, self.d)

    def __sub__(self, other: HeckeMatrix) -> HeckeMatrix:
        return HeckeMatrix._raw([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                                self.var, self.d)

    def __neg__(self) -> HeckeMatrix:
        return HeckeMatrix._raw([[-a for a in r] for r in self.rows], self.var, self.d)

    def scale(self, c) -> HeckeMatrix:
        return HeckeMatrix._raw([[a * c for a in r] for r in self.rows], self.var, self.d)

    def __pow__(self, k: int) -> HeckeMatrix:
        if k < 0:
            raise ValueError("use an explicit inverse for negative powers")
        result, base = HeckeMatrix.identity(self.size, self.var, self.d), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, HeckeMatrix):
            return NotImplemented
        return self.rows == other.rows and self.var == other.var and self.d == other.d

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def scalar_value(self) -> LaurentPoly | None:
        """The c with self == c * Id, or None."""
        n = self.size
        c = self.rows[0][0]
        for i in range(n):
            for j in range(n):
                x = self.rows[i][j]
                if (i == j and x != c) or (i != j and x):
                    return None
        return c

    def trace(self) -> LaurentPoly:
        total = self._zero()
        for i in range(self.size):
            total = total + self.rows[i][i]
        return total

    def transpose(self) -> HeckeMatrix:
        return HeckeMatrix._raw(list(zip(*self.rows)), self.var, self.d)

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> list[list[LaurentPoly]]:
        return [[self.rows[i][j] for j in cols] for i in rows]

    def submatrix(self, k: int) -> HeckeMatrix:
        """Leading k x k block."""
        return HeckeMatrix._raw([r[:k] for r in self.rows[:k]], self.var, self.d)

    def permuted(self, order: Sequence[int]) -> HeckeMatrix:
        """Simultaneous row/column permutation: new basis vector i is old vector order[i]."""
        return HeckeMatrix._raw([[self.rows[i][j] for j in order] for i in order], self.var, self.d)

    def map(self, f: Callable[[LaurentPoly], LaurentPoly]) -> HeckeMatrix:
        rows = [[f(x) for x in r] for r in self.rows]
        sample = rows[0][0]
        return HeckeMatrix._raw(rows, sample.var, sample.d)

    def determinant(self) -> LaurentPoly:
        """Fraction-free Bareiss elimination; every division is exact."""
        n = self.size
        a = [list(r) for r in self.rows]
        sign = 1
        prev = LaurentPoly.const(1, self.var, self.d)
        for k in range(n - 1):
            if not a[k][k]:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return self._zero()
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev)
            prev = a[k][k]
        det = a[n - 1][n - 1]
        return det if sign > 0 else -det

    def evaluate(self, z: complex) -> np.ndarray:
        return np.array([[evaluate(x, z) for x in r] for r in self.rows], dtype=complex)

    def to_json(self) -> list[list]:
        return [[to_json(x) for x in r] for r in self.rows]

    def __repr__(self):
        width = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join("[" + "  ".join(str(x).rjust(width) for x in r) + "]" for r in self.rows)


def _as_poly(x, var, d) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        if x.var != var or x.d != d:
            raise ValueError("entry lives in a different ring")
        return x
    return LaurentPoly.const(int(x), var, d)
