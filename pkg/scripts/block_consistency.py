"""
Numerical block consistency across genera: the leading 5x5 block of the
rescaled g = 3 matrices against the rescaled g = 2 matrices at the same q.
The prefactors differ (t^{-1} with t^5 = q against t^{-4} with t^14 = q), so
the blocks agree only after removing q^{-1/5} and q^{-4/14}.
"""

import argparse
import cmath

import numpy as np

from heckejones.jones import block_embedding_check, jones_rep
from heckejones.quotient import certificate_at


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--angles", type=float, nargs="*", default=[0.3, 1.1, 2.5])
    ap.add_argument("--tol", type=float, default=1e-8)
    a = ap.parse_args()
    print("exact:", block_embedding_check(3))
    small, big = jones_rep(2), jones_rep(3)
    worst = 0.0
    for angle in a.angles:
        q = cmath.exp(1j * angle)
        t2, t3 = cmath.exp(1j * angle / small.d), cmath.exp(1j * angle / big.d)
        for i in range(5):
            m2 = small.matrices[i].evaluate(t2) / t2 ** small.prefactor_exponent
            m3 = big.matrices[i].evaluate(t3)[:5, :5] / t3 ** big.prefactor_exponent
            lower = np.abs(big.matrices[i].evaluate(t3)[5:, :5]).max()
            err = max(float(np.abs(m2 - m3).max()), float(lower))
            worst = max(worst, err)
            print(f"q = exp({angle}i)  H{i + 1}: max deviation {err:.2e}")
    print(f"worst {worst:.2e} <= {a.tol}: {worst <= a.tol}")
    for angle in a.angles:
        q = cmath.exp(1j * angle)
        m2, m3 = certificate_at(2, q).modulus, certificate_at(3, q).modulus
        print(f"certificate at q = exp({angle}i): g=2 {m2:.10f}  g=3 {m3:.10f}  |diff| {abs(m2 - m3):.1e}")


if __name__ == "__main__":
    main()
