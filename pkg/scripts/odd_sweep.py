"""Dominant modulus of A under the odd scheme, m = 4k ± 1, both readings of the even-k formula."""

import argparse
import cmath
import math

from heckejones.quotient import certificate_at, sweep

LIMIT = 9.5521659


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--mmax", type=int, default=201)
    ap.add_argument("--variants", default="corrected,verbatim")
    a = ap.parse_args()
    rows = sweep(2, range(5, a.mmax + 1, 2), "odd", tuple(a.variants.split(",")))
    print(f"{'m':>5} {'variant':>9} {'valid':>6} {'modulus':>11} {'diff':>10}  dressing")
    for r in rows:
        mod = r["modulus"]
        diff = "" if mod is None else f"{mod - LIMIT:+.6f}"
        print(f"{r['m']:>5} {r['variant']:>9} {str(r['valid']):>6} {str(mod):>11} {diff:>10}  {r['dressing']}")
    lim = certificate_at(2, cmath.sqrt(cmath.exp(3j * math.pi / 4))).modulus
    print(f"limit q^2 = exp(3 pi i/4): {lim:.7f}")


if __name__ == "__main__":
    main()
