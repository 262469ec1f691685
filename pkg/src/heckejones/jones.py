"""
The Jones representation of the sphere mapping class group.

Start from the cell representation pi of the braid group B_n attached to a
Young diagram of size n, with f_i = pi(sigma_i) over Z[q^{±1}].  With d the
dimension and r the rank of e_i = (q - f_i)/(q + q^{-1}), the rescaled
generators

    J(H_i) = q^{(2r-d)/d} f_i

satisfy the sphere relations exactly when the diagram is a rectangle.  The
fractional power is handled by writing q = t^d, so the prefactor is t^{2r-d}
and every entry lives in Z[t^{±1}].

For the two-row rectangle [g+1, g+1] the basis puts the five elements
u_k s_7 s_9 ... s_{2g+1} first (u_k running over the cell of s_1 s_3 s_5 in
canonical order); the remaining members follow in canonical order.  With this
arrangement each of sigma_1..sigma_5 acts block upper-triangularly with the
n = 6 matrices in the top-left corner.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .coxeter import evaluate_word, reduced_word
from .laurent import LaurentPoly, embed_q_in_t
from .matrices import HeckeMatrix
from .tableaux import Cell, YoungDiagram, cell_of, dimension, representative
from .wgraph import RelationReport, build_wgraph, generator_matrices

__all__ = [
    "JonesRep", "Idempotent", "idempotent", "central_element_check", "determinant_check",
    "jones_rep", "rescaled_representation", "verify_sphere_relations", "block_embedding_check",
    "closed_form_dimension", "closed_form_rank", "parity_identity", "full_twist", "chain",
    "MAX_GENUS", "rescaled_quadratic_check", "eigenvalue_multiplicities", "check_rectangular",
]

MAX_GENUS = 4


def closed_form_dimension(g: int) -> int:
    return comb(2 * g + 2, g + 1) // (g + 2)


def closed_form_rank(g: int) -> int:
    return comb(2 * g, g) // (g + 1)


def parity_identity(g: int) -> Fraction:
    """(2g+1)(2g+2) r/d, which should equal (g+1)(g+2)."""
    return Fraction((2 * g + 1) * (2 * g + 2) * closed_form_rank(g), closed_form_dimension(g))


# idempotents

def _q_plus_qinv() -> LaurentPoly:
    return LaurentPoly({1: 1, -1: 1})


@dataclass(frozen=True)
class Idempotent:
    """e = numerator / (q + q^{-1})^power, kept as an exact pair."""

    numerator: HeckeMatrix
    power: int = 1

    def is_idempotent(self) -> bool:
        # (N / D^k)^2 = N / D^k  <=>  N^2 = D^k N
        den = _q_plus_qinv() ** self.power
        return (self.numerator @ self.numerator) == self.numerator.scale(den)

    def trace(self) -> LaurentPoly:
        return self.numerator.trace().divexact(_q_plus_qinv() ** self.power)

    def rank(self) -> int:
        """Exact trace (a constant for an idempotent), cross-checked by Gaussian elimination at q = 2."""
        tr = self.trace()
        if not tr.is_constant():
            raise ArithmeticError(f"trace {tr} of an idempotent should be a constant")
        rk = _rank_at(self.numerator, Fraction(2))
        if rk != tr.constant_value():
            raise ArithmeticError(f"rank {rk} at q=2 disagrees with trace {tr}")
        return rk


def _rank_at(m: HeckeMatrix, value: Fraction) -> int:
    rows = [[_eval_fraction(x, value) for x in r] for r in m.rows]
    rank, ncols = 0, len(rows)
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _eval_fraction(p: LaurentPoly, value: Fraction) -> Fraction:
    return sum((Fraction(c) * value ** e for e, c in p.terms().items()), Fraction(0))


def idempotent(f: HeckeMatrix) -> Idempotent:
    """e = (q - f)/(q + q^{-1}) for an unrescaled generator image f."""
    if f.var != "q":
        raise ValueError("idempotents are formed from the unrescaled matrices over Z[q^{±1}]")
    q = LaurentPoly.gen()
    e = Idempotent(HeckeMatrix.scalar(q, f.size) - f)
    if not e.is_idempotent():
        raise ArithmeticError("(q - f)/(q + q^-1) is not idempotent; f is not a Hecke generator image")
    return e


# words in the generators

def full_twist(matrices: list[HeckeMatrix]) -> HeckeMatrix:
    """(M_1 M_2 ... M_{n-1})^n."""
    prod = matrices[0]
    for m in matrices[1:]:
        prod = prod @ m
    return prod ** (len(matrices) + 1)


def chain(matrices: list[HeckeMatrix]) -> HeckeMatrix:
    """M_1 M_2 ... M_{n-1}^2 ... M_2 M_1."""
    word = list(range(len(matrices))) + list(range(len(matrices) - 1, -1, -1))
    prod = matrices[word[0]]
    for k in word[1:]:
        prod = prod @ matrices[k]
    return prod


# the representation

@dataclass(frozen=True)
class JonesRep:
    shape: YoungDiagram
    d: int
    r: int
    vertices: tuple
    base: tuple[HeckeMatrix, ...]      # f_i over Z[q^{±1}]
    matrices: tuple[HeckeMatrix, ...]  # t^{2r-d} f_i over Z[t^{±1}], q = t^d
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return self.shape.size

    @property
    def g(self) -> int | None:
        if len(self.shape) == 2 and self.shape[0] == self.shape[1]:
            return self.shape[0] - 1
        return None

    @property
    def prefactor_exponent(self) -> int:
        return 2 * self.r - self.d

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "variable": "t",
            "q": f"t^{self.d}",
            "prefactor": f"t^{self.prefactor_exponent}",
            "basis": [list(reduced_word(v)) for v in self.vertices],
            "matrices": [m.to_json() for m in self.matrices],
        }


def _ordered_cell(shape: YoungDiagram) -> Cell:
    cell = cell_of(representative(shape))
    g = shape[0] - 1
    if len(shape) != 2 or shape[0] != shape[1] or g < 3:
        return cell
    # the five elements u_k s_7 s_9 ... s_{2g+1} first
    small = cell_of(representative(YoungDiagram((3, 3))))
    tail = tuple(range(7, 2 * g + 2, 2))
    head = [evaluate_word(reduced_word(u) + tail, 2 * g + 2) for u in small.members]
    if any(w not in cell for w in head):
        raise RuntimeError("embedded elements are missing from the cell")
    rest = [w for w in cell.members if w not in head]
    return Cell(cell.representative, tuple(head + rest), cell.shape, cell.q_tableau)


def rescaled_representation(shape) -> JonesRep:
    """Cell representation of any shape with the prefactor t^{2r-d}; no rectangularity gate."""
    shape = YoungDiagram(shape)
    cell = _ordered_cell(shape)
    graph = build_wgraph(cell)
    base = tuple(generator_matrices(graph))
    d = len(cell)
    if d != dimension(shape):
        raise RuntimeError(f"cell size {d} disagrees with the hook length formula")
    r = idempotent(base[0]).rank() if base else 0
    pref = LaurentPoly.monomial(2 * r - d, 1, "t", d)
    rescaled = tuple(m.map(lambda p: embed_q_in_t(p, d) * pref) for m in base)
    return JonesRep(shape, d, r, cell.members, base, rescaled)


@lru_cache(maxsize=None)
def jones_rep(g: int) -> JonesRep:
    """Jones representation for 2g+2 points, shape [g+1, g+1]."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    if g > MAX_GENUS:
        raise ValueError(f"genus {g} exceeds the supported cap {MAX_GENUS}")
    rep = rescaled_representation(YoungDiagram((g + 1, g + 1)))
    if rep.d != closed_form_dimension(g) or rep.r != closed_form_rank(g):
        raise RuntimeError(f"(d, r) = ({rep.d}, {rep.r}) disagrees with the closed forms")
    return rep


def check_rectangular(shape) -> None:
    shape = YoungDiagram(shape)
    if not shape.is_rectangular():
        raise ValueError(
            f"shape {shape} is not rectangular: its restriction to B_{shape.size - 1} splits into "
            f"pieces with different (d_i - 2r_i)/d_i, so no single rescaling kills the chain relation"
        )


# checks

def central_element_check(rep: JonesRep) -> LaurentPoly:
    """Scalar of the unrescaled full twist; asserts it equals q^{n(n-1)(d-2r)/d}."""
    twist = full_twist(list(rep.base))
    scalar = twist.scalar_value()
    if scalar is None:
        raise ArithmeticError("full twist is not a scalar matrix")
    n = rep.n
    exponent = Fraction(n * (n - 1) * (rep.d - 2 * rep.r), rep.d)
    if exponent.denominator != 1 or scalar != LaurentPoly.monomial(int(exponent)):
        raise ArithmeticError(f"full twist scalar {scalar} differs from q^{exponent}")
    return scalar


def determinant_check(rep: JonesRep) -> bool:
    """det f_i = (-1)^r q^{d-2r} for every generator."""
    target = LaurentPoly.monomial(rep.d - 2 * rep.r, (-1) ** rep.r)
    return all(m.determinant() == target for m in rep.base)


def verify_sphere_relations(rep_or_matrices) -> RelationReport:
    """Braid, commutation, full twist and chain relations, each as a single exact verdict."""
    mats = list(rep_or_matrices.matrices if isinstance(rep_or_matrices, JonesRep) else rep_or_matrices)
    one = HeckeMatrix.identity(mats[0].size, mats[0].var, mats[0].d)
    report = RelationReport()
    report.record("braid", all(a @ b @ a == b @ a @ b for a, b in zip(mats, mats[1:])))
    report.record("commutation", all(mats[i] @ mats[j] == mats[j] @ mats[i]
                                     for i in range(len(mats)) for j in range(i + 2, len(mats))))
    report.record("full_twist", full_twist(mats) == one)
    report.record("chain", chain(mats) == one)
    return report


def rescaled_quadratic_check(rep: JonesRep) -> bool:
    """(M - t^{2r-d} t^d)(M + t^{2r-d} t^{-d}) = 0 for each generator."""
    d, p = rep.d, rep.prefactor_exponent
    one = HeckeMatrix.identity(rep.d, "t", d)
    a = LaurentPoly.monomial(p + d, 1, "t", d)
    b = LaurentPoly.monomial(p - d, 1, "t", d)
    return all(((m - one.scale(a)) @ (m + one.scale(b))).is_zero() for m in rep.matrices)


def eigenvalue_multiplicities(rep: JonesRep) -> list[tuple[int, int]]:
    """
    Multiplicities of the two eigenvalues t^{2r-d} t^d and -t^{2r-d} t^{-d},
    read off the exact trace (the quadratic relation makes each M semisimple).
    """
    d, p = rep.d, rep.prefactor_exponent
    out = []
    for m in rep.matrices:
        tr = m.trace()
        a, b = tr.coeff(p + d), -tr.coeff(p - d)
        if tr != LaurentPoly({p + d: a, p - d: -b}, "t", d):
            raise ArithmeticError(f"trace {tr} is not a combination of the two eigenvalues")
        out.append((a, b))
    return out


def block_embedding_check(g: int, generators=range(1, 6)) -> dict:
    """
    Compare the top-left 5x5 block of each unrescaled generator at genus g with
    the genus-2 matrices, and check the lower-left block is zero.
    """
    if g < 3:
        raise ValueError("the block embedding compares genus g >= 3 against genus 2")
    big = jones_rep(g)
    small = jones_rep(2)
    k = small.d
    results = {}
    for i in generators:
        if not 1 <= i <= 2 * g + 1:
            raise ValueError(f"sigma_{i} is not a generator of B_{2 * g + 2}")
        if i > 5:
            results[i] = "not applicable"
            continue
        m = big.base[i - 1]
        top = m.block(range(k), range(k)) == [list(r) for r in small.base[i - 1].rows]
        lower = all(not x for row in m.block(range(k, big.d), range(k)) for x in row)
        results[i] = "pass" if top and lower else "fail"
    ok = all(v != "fail" for v in results.values())
    return {"g": g, "d": big.d, "blocks": results, "ok": ok}
