"""
Exact Laurent polynomials with integer coefficients.

A `LaurentPoly` lives in Z[q^{±1}], in Z[t^{±1}] where q = t^d, or (with d
left unset) in a free Laurent ring in t such as the one carrying the Burau
matrices.  Internally
a polynomial is a lowest exponent plus a dense tuple of Python ints, trimmed so
that both the first and last coefficients are nonzero.  The zero polynomial has
an empty coefficient tuple.

>>> q = LaurentPoly.gen()
>>> (q + q**-1) * (q - q**-1)
q^2 - q^-2
>>> bar(3*q**2 - 1)
-1 + 3q^-2
>>> embed_q_in_t(q - q**-1, 5)
t^5 - t^-5
"""

from __future__ import annotations

import cmath
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "bar", "embed_q_in_t", "substitute_power", "evaluate", "to_json", "from_json"]


class LaurentPoly:
    __slots__ = ("lo", "coeffs", "var", "d", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "q", d: int | None = None):
        if var == "q" and d is not None:
            raise ValueError("modulus d only applies to polynomials in t")
        lo, coeffs = 0, ()
        if terms:
            items = {e: int(c) for e, c in terms.items() if c}
            if items:
                lo, hi = min(items), max(items)
                coeffs = tuple(items.get(e, 0) for e in range(lo, hi + 1))
        self._set(lo, coeffs, var, d)

    def _set(self, lo, coeffs, var, d):
        self.lo = lo
        self.coeffs = coeffs
        self.var = var
        self.d = d
        self._hash = None

    @classmethod
    def _raw(cls, lo: int, coeffs: Iterable[int], var: str, d: int | None) -> LaurentPoly:
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        p = cls.__new__(cls)
        if start == end:
            p._set(0, (), var, d)
        else:
            p._set(lo + start, tuple(coeffs[start:end]), var, d)
        return p

    # constructors

    @classmethod
    def gen(cls, name: str = "q", d: int | None = None) -> LaurentPoly:
        return cls._raw(1, (1,), name, d)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "q", d: int | None = None) -> LaurentPoly:
        return cls._raw(exponent, (coeff,), var, d)

    @classmethod
    def const(cls, c: int, var: str = "q", d: int | None = None) -> LaurentPoly:
        return cls._raw(0, (c,), var, d)

    def zero(self) -> LaurentPoly:
        return LaurentPoly._raw(0, (), self.var, self.d)

    def one(self) -> LaurentPoly:
        return LaurentPoly._raw(0, (1,), self.var, self.d)

    # inspection

    def terms(self) -> dict[int, int]:
        return {self.lo + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def is_constant(self) -> bool:
        return not self.coeffs or (self.lo == 0 and len(self.coeffs) == 1)

    def constant_value(self) -> int:
        if not self.coeffs:
            return 0
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.coeffs[0]

    def coeff(self, exponent: int) -> int:
        i = exponent - self.lo
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def degree(self) -> int:
        """Highest exponent; -1 for the zero polynomial."""
        return self.hi if self.coeffs else -1

    def __bool__(self):
        return bool(self.coeffs)

    # arithmetic

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.var != self.var or other.d != self.d:
                raise ValueError(f"ring mismatch: {self.var}(d={self.d}) vs {other.var}(d={other.d})")
            return other
        if isinstance(other, int):
            return LaurentPoly._raw(0, (other,), self.var, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs, self.lo - lo):
            out[i] += c
        for i, c in enumerate(other.coeffs, other.lo - lo):
            out[i] += c
        return LaurentPoly._raw(lo, out, self.var, self.d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.lo, [-c for c in self.coeffs], self.var, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.zero()
        if len(b) == 1:
            c = b[0]
            return LaurentPoly._raw(self.lo + other.lo, [x * c for x in a], self.var, self.d)
        if len(a) == 1:
            c = a[0]
            return LaurentPoly._raw(self.lo + other.lo, [x * c for x in b], self.var, self.d)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly._raw(self.lo + other.lo, out, self.var, self.d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) != 1 or self.coeffs[0] not in (1, -1):
                raise ValueError(f"{self} is not a unit of the Laurent ring")
            return LaurentPoly._raw(self.lo * k, (self.coeffs[0] ** k,), self.var, self.d)
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by var^k."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.lo + k, self.coeffs, self.var, self.d)

    def divexact(self, other) -> LaurentPoly:
        """Exact division; raises ArithmeticError when `other` does not divide `self`."""
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return self
        rem = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        nq = len(rem) - len(den) + 1
        if nq <= 0:
            raise ArithmeticError(f"{other} does not divide {self}")
        quot = [0] * nq
        for k in range(nq - 1, -1, -1):
            c = rem[k + len(den) - 1]
            if c % lead:
                raise ArithmeticError(f"{other} does not divide {self}")
            f = c // lead
            quot[k] = f
            if f:
                for j, y in enumerate(den):
                    rem[k + j] -= f * y
        if any(rem):
            raise ArithmeticError(f"{other} does not divide {self}")
        return LaurentPoly._raw(self.lo - other.lo, quot, self.var, self.d)

    # comparison

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.coeffs
            return self.lo == 0 and self.coeffs == (other,)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.coeffs == other.coeffs and self.lo == other.lo
                and self.var == other.var and self.d == other.d)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.lo, self.coeffs, self.var, self.d))
        return self._hash

    # display

    def __repr__(self):
        return str(self)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(self.hi, self.lo - 1, -1):
            c = self.coeff(e)
            if not c:
                continue
            if e == 0:
                mono = str(abs(c))
            else:
                x = self.var if e == 1 else f"{self.var}^{e}"
                mono = x if abs(c) == 1 else f"{abs(c)}{x}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


def bar(p: LaurentPoly) -> LaurentPoly:
    """The involution var -> var^{-1}."""
    if not p.coeffs:
        return p
    return LaurentPoly._raw(-p.hi, reversed(p.coeffs), p.var, p.d)


def embed_q_in_t(p: LaurentPoly, d: int) -> LaurentPoly:
    """Send q to t^d, landing in Z[t^{±1}] with q = t^d."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    if p.var != "q":
        raise ValueError("embed_q_in_t expects a polynomial in q")
    return LaurentPoly(
        {e * d: c for e, c in p.terms().items()}, var="t", d=d
    ) if p.coeffs else LaurentPoly(var="t", d=d)


def substitute_power(p: LaurentPoly, k: int, var: str = "q", d: int | None = None) -> LaurentPoly:
    """Replace the variable x by y^k, e.g. Burau's t by q^2."""
    return LaurentPoly({e * k: c for e, c in p.terms().items()}, var=var, d=d)


def evaluate(p: LaurentPoly, z: complex) -> complex:
    """Substitute a nonzero complex number for the variable (Horner on the dense part)."""
    z = complex(z)
    if z == 0:
        raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
    if not p.coeffs:
        return 0j
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    if p.lo:
        # z**lo via polar form keeps unit-modulus inputs on the circle
        r, phi = cmath.polar(z)
        acc *= cmath.rect(r ** p.lo, phi * p.lo)
    return acc


def to_json(p: LaurentPoly) -> list[list]:
    """[[exponent, "coefficient"], ...] sorted by exponent; decimal strings avoid precision loss."""
    return [[e, str(c)] for e, c in sorted(p.terms().items())]


def from_json(data, var: str = "q", d: int | None = None) -> LaurentPoly:
    return LaurentPoly({int(e): int(c) for e, c in data}, var=var, d=d)
