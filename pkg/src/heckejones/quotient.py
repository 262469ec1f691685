"""
Root-of-unity specializations of the Jones representation.

With f_i the cell matrices over Z[q^{±1}] (eigenvalues q and -q^{-1}), a
specialization picks a complex unit q and a per-generator scalar c so that

    J'(H_i) = c f_i(q)

satisfies J'(H_i)^m = 1 together with the sphere relations.  Raising to the
m-th power needs (c q)^m = 1 and (-c/q)^m = 1; the second condition reduces
to (-q^{-2})^m = 1, a constraint on q alone.  The sphere relations need
c = t^{2r-d} zeta with t any d-th root of q and zeta^{2(n-1)} = 1.

Two parameter schemes are offered:

  even  q = t^d is an m-th root of unity (exp(i pi/3) when 6 | m,
        exp(4 pi i k/m) when m = 2(3k ± 1), and 1 when m = 2);
        the scalar first tried is t^{(d-2r)m} t^{2r-d}.
  odd   q^2 = exp(3k pi i/m) for odd k and exp((3k-1) pi i/m) for even k,
        where m = 4k ± 1; the scalar first tried is exp(-i pi r/d) t^{2r-d}.

When the first-tried scalar fails, every admissible c is searched in a fixed
order and the label of the one used is recorded.

The infinite-order certificate evaluates A = (H_1H_2)^6 H_3 (H_1H_2)^6 H_3^{-1}
exactly over Z[q^{±1}] (H_3^{-1} = f_3 - (q - q^{-1})), takes its leading 5x5
block and reports the dominant eigenvalue modulus.  Scalars have modulus one,
so the dressing never changes the modulus.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .eigen import eigenvalues
from .jones import JonesRep, jones_rep
from .laurent import LaurentPoly, substitute_power
from .matrices import HeckeMatrix

__all__ = [
    "Specialization", "Certificate", "specialize", "scheme_q", "infinite_order_certificate",
    "certificate_at", "sweep", "element_a", "burau", "burau_quadratic_residual",
    "burau_hecke_bridge", "bridge_matrix", "hecke_burau", "free_subgroup_witness", "PingPong",
    "EVEN_EXCLUDED", "ODD_EXCLUDED", "TOL",
]

TOL = 1e-9
EVEN_EXCLUDED = (2, 4, 6, 10)
ODD_EXCLUDED = (1, 3, 5)


def _unit(angle: float) -> complex:
    return cmath.exp(1j * angle)


def _close(a: complex, b: complex, tol: float = TOL) -> bool:
    return abs(a - b) < tol


# parameter schemes

def scheme_q(m: int, scheme: str, k: int | None = None, variant: str = "corrected") -> tuple[complex, str]:
    """The value of q used by a scheme, with a description of the formula."""
    if scheme == "even":
        if m % 2:
            raise ValueError(f"the even scheme needs even m, got {m}")
        if m == 2:
            return 1 + 0j, "q = 1"
        if k is not None:
            if m not in (2 * (3 * k - 1), 2 * (3 * k + 1)):
                raise ValueError(f"m = {m} is not 2(3k ± 1) for k = {k}")
            return _unit(4 * math.pi * k / m), f"q = exp(4 pi i {k}/{m})"
        if m % 6 == 0:
            return _unit(math.pi / 3), "q = exp(i pi/3)"
        # m = 2(3k ± 1)
        k = (m // 2 + 1) // 3 if (m // 2) % 3 == 2 else (m // 2 - 1) // 3
        return _unit(4 * math.pi * k / m), f"q = exp(4 pi i {k}/{m})"
    if scheme == "odd":
        if m % 2 == 0:
            raise ValueError(f"the odd scheme needs odd m, got {m}")
        if k is None:
            k = round(m / 4)
        if m not in (4 * k - 1, 4 * k + 1):
            raise ValueError(f"m = {m} is not 4k ± 1 for k = {k}")
        if k % 2:
            q2, text = _unit(3 * k * math.pi / m), f"q^2 = exp(3*{k} pi i/{m})"
        else:
            q2, text = _unit((3 * k - 1) * math.pi / m), f"q^2 = exp((3*{k}-1) pi i/{m})"
            if variant == "verbatim":
                q2, text = (-1) ** (-m) * q2, "q^2 = (-1)^(-m) " + text[6:]
            elif variant != "corrected":
                raise ValueError(f"unknown variant {variant!r}")
        return cmath.sqrt(q2), text
    raise ValueError(f"unknown scheme {scheme!r}; use 'even' or 'odd'")


# specializations

@dataclass(frozen=True)
class Specialization:
    g: int
    m: int
    parity: str
    q_value: complex
    t_value: complex
    scalar: complex          # c with J'(H_i) = c f_i(q)
    dressing: complex        # c / t^{2r-d}, the unit applied on top of J
    label: str
    formula: str
    matrices: tuple[np.ndarray, ...]
    power_ok: bool
    sphere_ok: bool
    flags: tuple[str, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return bool(self.power_ok and self.sphere_ok)

    def summary(self) -> dict:
        return {
            "g": self.g, "m": self.m, "parity": self.parity,
            "q": [round(self.q_value.real, 12), round(self.q_value.imag, 12)],
            "q_formula": self.formula, "dressing": self.label,
            "power_ok": self.power_ok, "sphere_ok": self.sphere_ok, "valid": self.valid,
            "flags": list(self.flags),
        }


def _power_condition(c: complex, q: complex, m: int) -> bool:
    return _close((c * q) ** m, 1) and _close((-c / q) ** m, 1)


def _numeric_sphere_ok(mats: list[np.ndarray], tol: float = TOL) -> bool:
    ident = np.eye(mats[0].shape[0])

    def near(a, b):
        return np.linalg.norm(a - b) < tol * max(1.0, np.linalg.norm(b))

    for a, b in zip(mats, mats[1:]):
        if not near(a @ b @ a, b @ a @ b):
            return False
    for i in range(len(mats)):
        for j in range(i + 2, len(mats)):
            if not near(mats[i] @ mats[j], mats[j] @ mats[i]):
                return False
    prod = np.linalg.multi_dot(mats) if len(mats) > 1 else mats[0]
    twist = np.linalg.matrix_power(prod, len(mats) + 1)
    word = list(range(len(mats))) + list(range(len(mats) - 1, -1, -1))
    loop = np.linalg.multi_dot([mats[k] for k in word])
    return bool(near(twist, ident) and near(loop, ident))


def _candidates(q: complex, d: int, r: int, n: int, m: int, first: tuple[complex, str]):
    """The first-tried scalar, then every t^{2r-d} zeta in a fixed order."""
    yield first
    base = cmath.exp(1j * cmath.phase(q) / d)
    order = 2 * (n - 1)
    for j in range(d):
        t = base * _unit(2 * math.pi * j / d)
        for l in range(order):
            yield t ** (2 * r - d) * _unit(2 * math.pi * l / order), f"forced: t-branch {j}, zeta^{l} (zeta^{order} = 1)"


def specialize(g: int, m: int, scheme: str, k: int | None = None, variant: str = "corrected",
               q: complex | None = None) -> Specialization:
    if g not in (2, 3):
        raise ValueError("specializations are built for g = 2 or 3")
    if m < 1:
        raise ValueError("m must be positive")
    rep = jones_rep(g)
    d, r, n = rep.d, rep.r, rep.n
    flags = []
    if m <= 3:
        flags.append("finite-index regime (m <= 3)")
    if q is None:
        q, formula = scheme_q(m, scheme, k, variant)
    else:
        formula = "q supplied"
    t = cmath.exp(1j * cmath.phase(q) / d)
    pref = t ** (2 * r - d)
    if scheme == "even":
        first = (pref * t ** ((d - 2 * r) * m), "literal t^{(d-2r)m}")
    else:
        first = (pref * _unit(-math.pi * r / d), "literal (-1)^{-r/d} = exp(-i pi r/d)")
    if not _close((-q ** -2) ** m, 1):
        flags.append("q violates (-q^-2)^m = 1")
    base = [m_.evaluate(q) for m_ in rep.base]
    chosen = None
    for c, label in _candidates(q, d, r, n, m, first):
        if not _power_condition(c, q, m):
            continue
        mats = [c * b for b in base]
        if _numeric_sphere_ok(mats):
            chosen = (c, label, mats, True, True)
            break
    if chosen is None:
        c, label = first
        mats = [c * b for b in base]
        chosen = (c, label, mats, _power_condition(c, q, m), _numeric_sphere_ok(mats))
        flags.append("no admissible scalar")
    c, label, mats, power_ok, sphere_ok = chosen
    power_ok = power_ok and all(
        np.linalg.norm(np.linalg.matrix_power(x, m) - np.eye(d)) < TOL for x in mats)
    return Specialization(g, m, scheme, complex(q), complex(t), complex(c), complex(c / pref),
                          label, formula, tuple(mats), power_ok, sphere_ok, tuple(flags))


# the element A and its certificate

@lru_cache(maxsize=None)
def element_a(g: int) -> HeckeMatrix:
    """(f_1 f_2)^6 f_3 (f_1 f_2)^6 f_3^{-1} over Z[q^{±1}]."""
    rep: JonesRep = jones_rep(g)
    f1, f2, f3 = rep.base[:3]
    q = LaurentPoly.gen()
    f3_inv = f3 - HeckeMatrix.scalar(q - q ** -1, rep.d)
    p = (f1 @ f2) ** 6
    return p @ f3 @ p @ f3_inv


@dataclass(frozen=True)
class Certificate:
    element: str
    modulus: float | None
    verdict: str
    parameters: dict
    eigenvalues: tuple[complex, ...] = ()
    growth: tuple[float, ...] = ()

    def to_json(self) -> dict:
        return {
            "element": self.element,
            "dominant_modulus": None if self.modulus is None else f"{self.modulus:.7f}",
            "verdict": self.verdict,
            "parameters": self.parameters,
            "eigenvalue_moduli": [f"{abs(z):.7f}" for z in self.eigenvalues],
        }


A_WORD = "(H1 H2)^6 H3 (H1 H2)^6 H3^-1"


def certificate_at(g: int, q: complex, scalar: complex = 1, valid: bool = True,
                   parameters: dict | None = None) -> Certificate:
    """Certificate for A at an explicit q; the modulus of a unit scalar does not matter."""
    a = element_a(g).evaluate(q) * scalar ** 24
    block = a[:5, :5]
    res = eigenvalues(block)
    params = dict(parameters or {})
    params.update({"g": g, "block": "leading 5x5"})
    if not res.accepted:
        return Certificate(A_WORD, None, "inconclusive", {**params, "reason": "eigen-solver not accepted"},
                           tuple(res.values))
    modulus = float(np.max(res.moduli))
    growth = tuple(float(np.linalg.norm(np.linalg.matrix_power(a, k))) for k in (1, 5, 10, 15, 20))
    infinite = modulus > 1 + 1e-6 and valid
    reason = None if infinite else ("specialization invalid" if not valid else "modulus <= 1 + 1e-6")
    if reason:
        params["reason"] = reason
    return Certificate(A_WORD, modulus, "infinite-order" if infinite else "inconclusive", params,
                       tuple(res.values), growth)


def infinite_order_certificate(g: int, m: int, scheme: str = "even", k: int | None = None,
                               variant: str = "corrected") -> Certificate:
    spec = specialize(g, m, scheme, k, variant)
    return certificate_at(g, spec.q_value, spec.scalar, spec.valid, spec.summary())


def sweep(g: int, powers, scheme: str, variants=("corrected",)) -> list[dict]:
    """One row per (m, variant): q formula, dressing label, validity, modulus, verdict."""
    rows = []
    for m in powers:
        for variant in variants:
            if scheme == "odd" and variant == "verbatim" and round(m / 4) % 2:
                continue  # the two readings only differ for even k
            cert = infinite_order_certificate(g, m, scheme, variant=variant)
            p = cert.parameters
            rows.append({
                "m": m, "scheme": scheme, "variant": variant, "q_formula": p["q_formula"],
                "dressing": p["dressing"], "valid": p["valid"],
                "modulus": None if cert.modulus is None else round(cert.modulus, 7),
                "verdict": cert.verdict,
            })
    return rows


# Burau

def burau(n: int) -> list[HeckeMatrix]:
    """Reduced Burau matrices beta_t(sigma_i), i = 1..n-1, over Z[t^{±1}]."""
    if n < 3:
        raise ValueError("the reduced Burau representation needs n >= 3")
    size = n - 1
    t = LaurentPoly.gen("t")
    zero, one = t.zero(), t.one()
    out = []
    for i in range(1, n):
        rows = [[one if a == b else zero for b in range(size)] for a in range(size)]
        k = i - 1  # row/column of the -t entry
        rows[k][k] = -t
        if k - 1 >= 0:
            rows[k][k - 1] = t
        if k + 1 < size:
            rows[k][k + 1] = one
        out.append(HeckeMatrix._raw(rows, "t", None))
    return out


def burau_quadratic_residual(n: int) -> list[HeckeMatrix]:
    """(-beta)^2 - (t-1)(-beta) - t for every generator; each should be zero."""
    t = LaurentPoly.gen("t")
    out = []
    for b in burau(n):
        ident = HeckeMatrix.identity(b.size, "t", None)
        mb = -b
        out.append(mb @ mb - mb.scale(t - 1) - ident.scale(t))
    return out


def hecke_burau(n: int) -> list[HeckeMatrix]:
    """-q^{-1} beta_{q^2}(sigma_i) over Z[q^{±1}]."""
    minus_qinv = LaurentPoly.monomial(-1, -1)
    return [b.map(lambda p: substitute_power(p, 2)).scale(minus_qinv) for b in burau(n)]


def bridge_matrix() -> HeckeMatrix:
    """
    P with P (-q^{-1} beta_{q^2}(sigma_i)) = rho_i P, rho_i the two-vertex S_3
    W-graph matrices.  Intertwiners are unique up to scalar; det P = q^3 + q + q^{-1}
    is not a unit, so P is invertible over Q(q) but not over Z[q^{±1}].
    """
    q = LaurentPoly.gen()
    return HeckeMatrix([[-q, q + q ** -1], [-(q ** 2) - 1, LaurentPoly.const(1)]])


def burau_hecke_bridge() -> dict:
    from .tableaux import cell_of
    from .coxeter import Permutation
    from .wgraph import build_wgraph, generator_matrices
    rho = generator_matrices(build_wgraph(cell_of(Permutation.generator(1, 3))))
    beta = hecke_burau(3)
    p = bridge_matrix()
    hecke = [(b @ b) == (HeckeMatrix.identity(2) + b.scale(LaurentPoly({1: 1, -1: -1}))) for b in beta]
    intertwines = [p @ b == r @ p for b, r in zip(beta, rho)]
    det = p.determinant()
    return {
        "matrix": p.to_json(), "determinant": str(det), "hecke_quadratic": hecke,
        "intertwines": intertwines, "ok": all(hecke) and all(intertwines) and not det.is_zero(),
    }


# free subgroup witness

@dataclass(frozen=True)
class PingPong:
    words: tuple[str, str]
    power: int
    discs: tuple[tuple[complex, float], ...]
    verified: bool


def _normalize(m: np.ndarray) -> np.ndarray:
    return m / np.sqrt(np.linalg.det(m))


def _disc_form(centre: complex, radius: float) -> np.ndarray:
    """Hermitian form H with {z : (z,1) H (z,1)^* <= 0} the closed disc."""
    return np.array([[1, -centre], [-np.conj(centre), abs(centre) ** 2 - radius ** 2]], dtype=complex)


def _form_to_disc(h: np.ndarray) -> tuple[complex, float] | None:
    a = h[0, 0].real
    if a <= 0:
        return None
    b, dd = h[0, 1], h[1, 1].real
    r2 = (abs(b) ** 2 - a * dd) / a ** 2
    if r2 <= 0:
        return None
    return -b / a, math.sqrt(r2)


def _image_of_exterior(m: np.ndarray, centre: complex, radius: float) -> tuple[complex, float] | None:
    """M applied to the closed exterior of a disc, when the image is a bounded disc."""
    h = -_disc_form(centre, radius)
    minv = np.linalg.inv(m)
    return _form_to_disc(minv.conj().T @ h @ minv)


def _fixed_points(m: np.ndarray) -> tuple[complex, complex] | None:
    """(attracting, repelling) for a loxodromic matrix with finite fixed points."""
    vals, vecs = np.linalg.eig(m)
    if abs(abs(vals[0]) - abs(vals[1])) < 1e-9 * max(abs(vals)):
        return None
    order = np.argsort(-np.abs(vals))
    pts = []
    for idx in order:
        v = vecs[:, idx]
        if abs(v[1]) < 1e-12:
            return None
        pts.append(complex(v[0] / v[1]))
    return pts[0], pts[1]


def _words(gens: dict, max_len: int):
    inverse = {"a": "A", "A": "a", "b": "B", "B": "b"}
    frontier = [("", np.eye(2, dtype=complex))]
    for _ in range(max_len):
        nxt = []
        for w, m in frontier:
            for s in "aAbB":
                if w and inverse[w[-1]] == s:
                    continue
                nxt.append((w + s, m @ gens[s]))
        yield from nxt
        frontier = nxt


def _ping_pong(x: np.ndarray, y: np.ndarray, max_power: int = 64):
    fx, fy = _fixed_points(x), _fixed_points(y)
    if fx is None or fy is None:
        return None
    pts = [fx[0], fx[1], fy[0], fy[1]]
    sep = min(abs(p - q) for i, p in enumerate(pts) for q in pts[i + 1:])
    if sep < 1e-6:
        return None
    radius = sep / 3
    xi, yi = np.linalg.inv(x), np.linalg.inv(y)
    power = 1
    while power <= max_power:
        xp, yp = np.linalg.matrix_power(x, power), np.linalg.matrix_power(y, power)
        xpi, ypi = np.linalg.matrix_power(xi, power), np.linalg.matrix_power(yi, power)
        ok = True
        for mat, src, dst in ((xp, fx[1], fx[0]), (xpi, fx[0], fx[1]), (yp, fy[1], fy[0]), (ypi, fy[0], fy[1])):
            img = _image_of_exterior(mat, src, radius)
            if img is None or abs(img[0] - dst) + img[1] > radius * (1 - 1e-9):
                ok = False
                break
        if ok:
            return power, tuple((p, radius) for p in pts)
        power *= 2
    return None


def _witness_at(m: int, scheme: str, q: complex, spec: Specialization | None, formula: str,
                max_len: int) -> Certificate:
    rep = jones_rep(2)
    d, r = rep.d, rep.r
    t = cmath.exp(1j * cmath.phase(q) / d) if abs(abs(q) - 1) < 1e-12 else q ** (1 / d)
    c = spec.scalar if spec is not None else t ** (2 * r - d)
    from .coxeter import Permutation
    from .tableaux import cell_of
    from .wgraph import build_wgraph, generator_matrices
    small = [c * mm.evaluate(q) for mm in generator_matrices(build_wgraph(cell_of(Permutation.generator(1, 3))))]
    a, b = small[0] @ small[0], small[1] @ small[1]
    comm = a @ b @ np.linalg.inv(a) @ np.linalg.inv(b)
    comm_dist = float(np.linalg.norm(comm - np.eye(2)))
    power_resid = [float(np.linalg.norm(np.linalg.matrix_power(x, m) - np.eye(2))) for x in small] if spec else []
    params = {
        "m": m, "scheme": scheme, "q_formula": formula, "commutator_distance": comm_dist,
        "power_residuals": power_resid,
        "dressing": spec.label if spec else "t^{2r-d}",
        "specialization_valid": spec.valid if spec else None,
    }
    gens = {"a": _normalize(a), "b": _normalize(b)}
    gens["A"], gens["B"] = np.linalg.inv(gens["a"]), np.linalg.inv(gens["b"])
    lox = []
    for w, mat in _words(gens, max_len):
        tr = np.trace(mat)
        if abs(tr.imag) > 1e-6 or abs(tr.real) > 2 + 1e-6:
            lox.append((w, mat))
    for i, (w1, x) in enumerate(lox):
        for w2, y in lox[i + 1:]:
            found = _ping_pong(x, y)
            if found:
                power, discs = found
                params["ping_pong"] = {
                    "words": [w1, w2], "power": power,
                    "discs": [[[p.real, p.imag], rad] for p, rad in discs],
                }
                if spec is not None and not spec.valid:
                    # the discs are fine, but the matrices do not define a map on the quotient
                    return Certificate("<J'(H1^2), J'(H2^2)>", None, "inconclusive",
                                       {**params, "reason": "specialization invalid"})
                return Certificate(f"<({w1})^{power}, ({w2})^{power}> in <a, b>, a = J'(H1^2), b = J'(H2^2)",
                                   None, "free-subgroup-witness", params)
    reason = "no ping-pong pair found" if lox else "every word tried is elliptic"
    return Certificate("<J'(H1^2), J'(H2^2)>", None, "inconclusive", {**params, "reason": reason})


def free_subgroup_witness(m: int, scheme: str, max_len: int = 4, q: complex | None = None) -> Certificate:
    """
    Ping-pong search in the group generated by J'(H_1^2), J'(H_2^2) on the
    two-dimensional [2,1] summand.  Never claims freeness without a verified
    set of four disjoint discs.

    Freeness of a group of matrices over a number field does not depend on the
    complex embedding, so when the first root of unity gives only elliptic
    elements (a compact image, where ping-pong cannot apply) the Galois
    conjugates exp(2 pi i j/N), gcd(j, N) = 1, are tried in turn; each one is
    specialized and validated independently.
    """
    excluded = EVEN_EXCLUDED if scheme == "even" else ODD_EXCLUDED
    if scheme not in ("even", "odd"):
        raise ValueError(f"unknown scheme {scheme!r}")
    if q is not None:
        return _witness_at(m, scheme, q, None, "q supplied", max_len)
    if m in excluded:
        raise ValueError(f"m = {m} is excluded for the {scheme} scheme (excluded: {list(excluded)})")
    if (m % 2 == 0) != (scheme == "even"):
        raise ValueError(f"m = {m} does not match the {scheme} scheme")
    d = jones_rep(2).d
    # even: t^2 = exp(2 pi i j/m), q = t^d; odd: -q^2 = exp(2 pi i j/m)
    order = 2 * m if scheme == "even" else m
    first = None
    for j in (j for j in range(1, order) if math.gcd(j, order) == 1):
        if scheme == "even":
            qj = _unit(math.pi * j / m) ** d
            formula = f"t^2 = exp(2 pi i {j}/{m})" if j > 1 else f"t^2 = exp(2 pi i/{m})"
        else:
            qj = cmath.sqrt(-_unit(2 * math.pi * j / m))
            formula = f"-q^2 = exp(2 pi i {j}/{m})" if j > 1 else f"-q^2 = exp(2 pi i/{m})"
        cert = _witness_at(m, scheme, qj, specialize(2, m, scheme, q=qj), formula, max_len)
        cert.parameters["embedding"] = j
        if cert.verdict == "free-subgroup-witness":
            return cert
        first = first or cert
    return first
