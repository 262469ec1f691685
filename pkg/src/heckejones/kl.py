"""
Kazhdan-Lusztig polynomials of S_n, edge weights mu, and the C-basis.

Polynomials P_{y,w} are stored in the classical variable (the one that appears
squared inside C_w).  The recursion used is the classical one for a left
descent s of w, v = s*w, and x with s*x < x:

    P_{x,w} = P_{sx,v} + q P_{x,v} - sum_{z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}

with z running over x <= z < v, s*z < z, mu(z,v) != 0.  When s*x > x the
identity P_{x,w} = P_{sx,w} moves x up first.

The Hecke algebra here satisfies T_s^2 = 1 + (q - q^{-1}) T_s, and

    C_w = sum_{y <= w} (-q)^{l(w)-l(y)} bar(P_{y,w}(q^2)) T_y.

`HeckeElement` and `c_basis_by_products` give an independent route to the same
polynomials through C_s C_v = C_{sv} + sum mu(z,v) C_z.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Mapping

from .coxeter import (Permutation, all_permutations, bruhat_leq, left_descents, length,
                      reduced_word, right_descents)
from .laurent import LaurentPoly, bar

__all__ = [
    "KLPoly", "CBasisElement", "HeckeElement", "kl_polynomial", "kl_coefficients", "mu",
    "c_basis", "c_basis_by_products", "polys_from_c_basis", "lower_interval", "clear_cache",
]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Coeffs = tuple[int, ...]

_P: dict[tuple[tuple, tuple], Coeffs] = {}
_INTERVALS: dict[tuple[tuple, tuple], tuple] = {}


def clear_cache() -> None:
    _P.clear()
    _INTERVALS.clear()


def _bruhat_covers_below(z: tuple) -> Iterable[tuple]:
    """Elements z*t covered by z (one fewer inversion)."""
    n = len(z)
    for i in range(n):
        zi = z[i]
        highest_below = 0
        for j in range(i + 1, n):
            zj = z[j]
            # swapping positions i, j is a cover iff no value strictly between sits in between
            if highest_below < zj < zi:
                out = list(z)
                out[i], out[j] = zj, zi
                yield tuple(out)
                highest_below = zj


def lower_interval(x, v) -> tuple:
    """All z with x <= z <= v (Bruhat), found by walking down covers from v."""
    x, v = tuple(x), tuple(v)
    key = (x, v)
    hit = _INTERVALS.get(key)
    if hit is not None:
        return hit
    if not bruhat_leq(x, v):
        _INTERVALS[key] = ()
        return ()
    lx = length(x)
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for z in frontier:
            if length(z) <= lx:
                continue
            for y in _bruhat_covers_below(z):
                if y not in seen and bruhat_leq(x, y):
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    out = tuple(seen)
    _INTERVALS[key] = out
    return out


def _lmul(i: int, w: tuple) -> tuple:
    return tuple(i + 1 if a == i else i if a == i + 1 else a for a in w)


def _rmul(w: tuple, i: int) -> tuple:
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def _add(a: Coeffs, b: Coeffs, shift: int = 0, scale: int = 1) -> list[int]:
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for k, c in enumerate(b):
        out[k + shift] += scale * c
    return out


def _trim(c: list[int]) -> Coeffs:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _mu_from(p: Coeffs, gap: int) -> int:
    """Coefficient of q^{(gap-1)/2}, the top degree allowed for P_{y,w}."""
    if gap % 2 == 0:
        return 0
    k = (gap - 1) // 2
    return p[k] if k < len(p) else 0


def kl_coefficients(x, w) -> Coeffs:
    """P_{x,w} as a coefficient tuple (index = power of the classical variable)."""
    x, w = tuple(x), tuple(w)
    if len(x) != len(w):
        raise ValueError(f"size mismatch: S_{len(x)} vs S_{len(w)}")
    key = (x, w)
    hit = _P.get(key)
    if hit is not None:
        return hit
    if not bruhat_leq(x, w):
        result: Coeffs = ()
    elif length(w) - length(x) <= 2:
        result = (1,)
    else:
        result = _kl_recurse(x, w)
    _P[key] = result
    return result


def _kl_recurse(x: tuple, w: tuple) -> Coeffs:
    # push x up while a descent of w is an ascent of x
    dl = left_descents(w)
    for i in sorted(dl):
        if i not in left_descents(x):
            return kl_coefficients(_lmul(i, x), w)
    for i in sorted(right_descents(w)):
        if i not in right_descents(x):
            return kl_coefficients(_rmul(x, i), w)

    s = min(dl)
    v = _lmul(s, w)
    lw = length(w)
    lv = lw - 1
    result = _add(kl_coefficients(_lmul(s, x), v), kl_coefficients(x, v), shift=1)
    for z in lower_interval(x, v):
        lz = length(z)
        gap = lv - lz
        if gap % 2 == 0 or s not in left_descents(z):
            continue
        m = 1 if gap == 1 else _mu_from(kl_coefficients(z, v), gap)
        if m:
            result = _add(result, kl_coefficients(x, z), shift=(lw - lz) // 2, scale=-m)
    return _trim(result)


@dataclass(frozen=True)
class KLPoly:
    y: Permutation
    w: Permutation
    poly: LaurentPoly

    def coefficients(self) -> Coeffs:
        return tuple(self.poly.coeff(k) for k in range(self.poly.degree() + 1))


def kl_polynomial(y, w) -> KLPoly:
    coeffs = kl_coefficients(y, w)
    return KLPoly(Permutation._raw(y), Permutation._raw(w),
                  LaurentPoly(dict(enumerate(coeffs))))


def mu(y, w) -> int:
    """Top coefficient of P_{y,w} when y < w has odd length gap and maximal degree; else 0."""
    y, w = tuple(y), tuple(w)
    gap = length(w) - length(y)
    if gap <= 0 or gap % 2 == 0 or not bruhat_leq(y, w):
        return 0
    if gap == 1:
        return 1
    return _mu_from(kl_coefficients(y, w), gap)


# Hecke algebra in the T-basis

class HeckeElement:
    """A finite sum of a_w T_w with a_w in Z[q^{±1}]."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        self.terms: dict[Permutation, LaurentPoly] = {
            Permutation._raw(w): c for w, c in (terms or {}).items() if c
        }

    @classmethod
    def t(cls, w, coeff: LaurentPoly | None = None) -> HeckeElement:
        return cls(len(w), {w: coeff if coeff is not None else LaurentPoly.const(1)})

    @classmethod
    def one(cls, n: int) -> HeckeElement:
        return cls.t(Permutation.identity(n))

    def __add__(self, other: HeckeElement) -> HeckeElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.n, out)

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, c: LaurentPoly) -> HeckeElement:
        return HeckeElement(self.n, {w: a * c for w, a in self.terms.items()})

    def left_generator(self, i: int) -> HeckeElement:
        """T_{s_i} * self."""
        q = LaurentPoly.gen()
        gap = q - q ** -1
        out: dict = {}
        for w, a in self.terms.items():
            sw = w.lmul(i)
            if i in left_descents(w):
                out[sw] = out[sw] + a if sw in out else a
                out[w] = out[w] + a * gap if w in out else a * gap
            else:
                out[sw] = out[sw] + a if sw in out else a
        return HeckeElement(self.n, out)

    def left_generator_inverse(self, i: int) -> HeckeElement:
        """T_{s_i}^{-1} * self, using T_s^{-1} = T_s - (q - q^{-1})."""
        q = LaurentPoly.gen()
        return self.left_generator(i) - self.scale(q - q ** -1)

    def __mul__(self, other: HeckeElement) -> HeckeElement:
        total = HeckeElement(self.n)
        for x, a in self.terms.items():
            piece = other
            for i in reversed(reduced_word(x)):
                piece = piece.left_generator(i)
            total = total + piece.scale(a)
        return total

    def bar(self) -> HeckeElement:
        """sum a_w T_w -> sum bar(a_w) T_{w^{-1}}^{-1}."""
        total = HeckeElement(self.n)
        for w, a in self.terms.items():
            piece = HeckeElement.one(self.n)
            for i in reversed(reduced_word(w)):
                piece = piece.left_generator_inverse(i)
            total = total + piece.scale(bar(a))
        return total

    def coeff(self, w) -> LaurentPoly:
        return self.terms.get(Permutation._raw(w), LaurentPoly())

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        parts = [f"({c})T[{w}]" for w, c in sorted(self.terms.items(), key=lambda kv: (length(kv[0]), kv[0]))]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class CBasisElement:
    w: Permutation
    expansion: dict

    def as_hecke(self) -> HeckeElement:
        return HeckeElement(len(self.w), self.expansion)


def _dress(coeffs: Coeffs, gap: int) -> LaurentPoly:
    """(-q)^gap * bar(P(q^2))."""
    sign = -1 if gap % 2 else 1
    return LaurentPoly({gap - 2 * k: sign * c for k, c in enumerate(coeffs)})


def c_basis(w) -> CBasisElement:
    """C_w in the T-basis from the KL polynomials."""
    w = Permutation._raw(w)
    n = len(w)
    lw = length(w)
    expansion = {}
    for y in lower_interval(Permutation.identity(n), w):
        coeffs = kl_coefficients(y, w)
        if coeffs:
            expansion[Permutation._raw(y)] = _dress(coeffs, lw - length(y))
    return CBasisElement(w, expansion)


def c_basis_by_products(n: int) -> dict[Permutation, HeckeElement]:
    """
    Build every C_w of S_n from C_1 = T_1 and C_s = T_s - q T_1 by
    C_w = C_s C_v - sum_{z < v, sz < z} mu(z,v) C_z, reading mu off the
    T-coefficients already computed.  No KL recursion is involved.
    """
    q = LaurentPoly.gen()
    basis: dict[Permutation, HeckeElement] = {}
    for w in all_permutations(n):
        if length(w) == 0:
            basis[w] = HeckeElement.one(n)
            continue
        s = min(left_descents(w))
        v = w.lmul(s)
        cv = basis[v]
        product = cv.left_generator(s) - cv.scale(q)
        lv = length(v)
        for z, coeff in cv.terms.items():
            gap = lv - length(z)
            if gap % 2 == 1 and s in left_descents(z):
                # top allowed degree of P_{z,v} lands on q^1 with sign (-1)^gap
                m = -coeff.coeff(1)
                if m:
                    product = product - basis[z].scale(LaurentPoly.const(m))
        basis[w] = product
    return basis


def polys_from_c_basis(w, element: HeckeElement) -> dict[Permutation, Coeffs]:
    """Invert the dressing (-q)^gap bar(P(q^2)) on each T-coefficient."""
    lw = length(w)
    out = {}
    for y, c in element.terms.items():
        gap = lw - length(y)
        sign = -1 if gap % 2 else 1
        coeffs: dict[int, int] = {}
        for e, a in c.terms().items():
            k2 = gap - e
            if k2 < 0 or k2 % 2:
                raise ArithmeticError(f"coefficient of T_{y} in C_{w} has the wrong shape: {c}")
            coeffs[k2 // 2] = sign * a
        top = max(coeffs)
        out[y] = tuple(coeffs.get(k, 0) for k in range(top + 1))
    return out
