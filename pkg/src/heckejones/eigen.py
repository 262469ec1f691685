"""
Eigenvalues of small complex matrices through the characteristic polynomial.

The coefficients come from the Faddeev-LeVerrier recursion and the roots from
Aberth-Ehrlich simultaneous iteration; tight clusters (multiple roots) are
refined as simple roots of a derivative.  Each root is accepted only when the
determinant residual |det(C - lambda I)| is below tol * max(1, ||C||)^k; a
failure is reported, never papered over.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["EigenResult", "charpoly", "aberth", "eigenvalues", "dominant_modulus"]


def charpoly(c: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial det(xI - C), highest degree first."""
    c = np.asarray(c, dtype=complex)
    k = c.shape[0]
    coeffs = np.zeros(k + 1, dtype=complex)
    coeffs[0] = 1.0
    m = np.zeros_like(c)
    ident = np.eye(k, dtype=complex)
    for j in range(1, k + 1):
        m = c @ m + coeffs[j - 1] * ident
        coeffs[j] = -np.trace(c @ m) / j
    return coeffs


def aberth(coeffs: np.ndarray, tol: float = 1e-14, max_iter: int = 500) -> tuple[np.ndarray, bool]:
    """Roots of a monic polynomial by Aberth-Ehrlich iteration; returns (roots, converged)."""
    coeffs = np.asarray(coeffs, dtype=complex)
    deg = len(coeffs) - 1
    if deg == 0:
        return np.zeros(0, dtype=complex), True
    dcoeffs = np.polyder(coeffs)
    # starting points on a circle of the Cauchy bound radius, slightly rotated
    radius = 1 + np.max(np.abs(coeffs[1:]))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(deg) / deg + 0.4))
    best, stalled = np.inf, 0
    for _ in range(max_iter):
        p = np.polyval(coeffs, z)
        dp = np.polyval(dcoeffs, z)
        ratio = np.zeros_like(z)
        nz = dp != 0
        ratio[nz] = p[nz] / dp[nz]
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        s = np.sum(1.0 / diff, axis=1) - 1.0  # remove the diagonal 1/1 term
        step = ratio / (1 - ratio * s)
        z = z - step
        size = float(np.max(np.abs(step) / np.maximum(1.0, np.abs(z))))
        if size <= tol:
            return z, True
        # clustered (multiple) roots stall at rounding level rather than reaching tol
        if size < best:
            best, stalled = size, 0
        else:
            stalled += 1
            if stalled >= 25:
                return z, best < 1e-4
    return z, False


def _vanishes(coeffs: np.ndarray, z: complex, order: int, rel: float = 1e-8) -> bool:
    """p, p', ..., p^{(order-1)} all vanish at z relative to the size of their terms."""
    p = coeffs
    for _ in range(order):
        scale = float(np.polyval(np.abs(p), abs(z))) or 1.0
        if abs(np.polyval(p, z)) > rel * scale:
            return False
        p = np.polyder(p)
    return True


def _merge_clusters(coeffs: np.ndarray, roots: np.ndarray, rel: float = 1e-2) -> tuple[np.ndarray, bool]:
    """
    A root of multiplicity k is only resolved to about eps^{1/k} by simultaneous
    iteration.  It is a simple root of the (k-1)-th derivative, so each cluster
    is replaced by the Newton limit on that derivative started from the cluster
    mean, and kept only if p and its first k-1 derivatives vanish there.
    Returns the roots and whether every root (simple or merged) checks out.
    """
    roots = roots.copy()
    k = len(roots)
    label = list(range(k))
    for i in range(k):
        for j in range(i + 1, k):
            if abs(roots[i] - roots[j]) < rel * max(1.0, abs(roots[i])):
                old, new = label[j], label[i]
                label = [new if x == old else x for x in label]
    resolved = True
    for lab in sorted(set(label)):
        idx = [i for i in range(k) if label[i] == lab]
        if len(idx) == 1:
            resolved = resolved and _vanishes(coeffs, roots[idx[0]], 1)
            continue
        f = np.polyder(coeffs, len(idx) - 1)
        df = np.polyder(f)
        z = np.mean(roots[idx])
        for _ in range(50):
            dz = np.polyval(f, z) / np.polyval(df, z)
            z = z - dz
            if abs(dz) < 1e-15 * max(1.0, abs(z)):
                break
        if _vanishes(coeffs, z, len(idx)):
            roots[idx] = z
        else:
            resolved = False
    return roots, resolved


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray
    residuals: np.ndarray
    converged: bool
    accepted: bool

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.values)

    @property
    def dominant(self) -> complex:
        return complex(self.values[int(np.argmax(self.moduli))])


def eigenvalues(c: np.ndarray, tol: float = 1e-8) -> EigenResult:
    c = np.asarray(c, dtype=complex)
    k = c.shape[0]
    coeffs = charpoly(c)
    roots, converged = aberth(coeffs)
    roots, resolved = _merge_clusters(coeffs, roots)
    # stalled iteration is fine when every cluster was certified as a multiple root
    converged = converged or resolved
    ident = np.eye(k)
    residuals = np.array([abs(np.linalg.det(c - lam * ident)) for lam in roots])
    scale = max(1.0, np.linalg.norm(c, 2)) ** k
    accepted = converged and bool(np.all(residuals < tol * scale))
    order = np.lexsort((np.angle(roots), -np.abs(roots)))
    return EigenResult(roots[order], residuals[order], converged, accepted)


def dominant_modulus(c: np.ndarray) -> float | None:
    """Largest eigenvalue modulus, or None when the root finder's output is not accepted."""
    res = eigenvalues(c)
    return float(np.max(res.moduli)) if res.accepted else None
