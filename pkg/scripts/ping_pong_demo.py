"""Ping-pong search in <J'(H1^2), J'(H2^2)> on the [2,1] summand for a list of powers."""

import argparse

from heckejones.quotient import EVEN_EXCLUDED, ODD_EXCLUDED, free_subgroup_witness


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--powers", type=int, nargs="*", default=list(range(5, 31)))
    ap.add_argument("--max-len", type=int, default=4)
    a = ap.parse_args()
    for m in a.powers:
        scheme = "even" if m % 2 == 0 else "odd"
        if m in (EVEN_EXCLUDED if scheme == "even" else ODD_EXCLUDED):
            print(f"m = {m:3d} ({scheme}): excluded")
            continue
        cert = free_subgroup_witness(m, scheme, a.max_len)
        p = cert.parameters
        words = p.get("ping_pong", {}).get("words")
        print(f"m = {m:3d} ({scheme}): {cert.verdict:22s} valid={p['specialization_valid']} "
              f"commutator={p['commutator_distance']:.3f} words={words}")


if __name__ == "__main__":
    main()
