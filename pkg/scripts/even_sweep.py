"""Dominant modulus of A under the even scheme, m = 2(3k ± 1), against the limit value."""

import argparse
import cmath
import math

from heckejones.quotient import certificate_at, infinite_order_certificate

LIMIT = 9.8989795


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=30)
    ap.add_argument("--far", type=int, nargs="*", default=[100, 1000, 10000],
                    help="extra k values evaluated at the raw q only")
    a = ap.parse_args()
    print(f"{'k':>6} {'m':>7} {'modulus':>11} {'diff':>10}  verdict")
    for k in range(1, a.kmax + 1):
        for m in (2 * (3 * k - 1), 2 * (3 * k + 1)):
            cert = infinite_order_certificate(2, m, "even", k=k)
            mod = cert.modulus
            diff = "" if mod is None else f"{mod - LIMIT:+.6f}"
            print(f"{k:>6} {m:>7} {mod if mod is None else f'{mod:.7f}':>11} {diff:>10}  {cert.verdict}")
    for k in a.far:
        for m in (2 * (3 * k - 1), 2 * (3 * k + 1)):
            mod = certificate_at(2, cmath.exp(4j * math.pi * k / m)).modulus
            print(f"{k:>6} {m:>7} {mod:11.7f} {mod - LIMIT:+10.6f}  (raw q)")
    print(f"limit q = exp(2 pi i/3): {certificate_at(2, cmath.exp(2j * math.pi / 3)).modulus:.7f}")


if __name__ == "__main__":
    main()
