"""
Command-line entry point.

    heckejones cells   --n 6 --rep s1s3s5
    heckejones klpoly  --n 6 --y s1s3s5 --w s3s2s1s4s3s5
    heckejones wgraph  --n 6 --rep s1s3s5
    heckejones jones   --genus 2 --format json
    heckejones verify  --genus 3
    heckejones certify --genus 2 --power 6 --scheme even
    heckejones sweep   --genus 2 --powers 5..40 --scheme odd --out csv
    heckejones burau   --n 4

Exit codes: 0 when every check or verdict in the payload succeeded, 1 on a
failed check or a domain error (reported as JSON), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .coxeter import evaluate_word, format_word, left_descents, length, parse_word, reduced_word

__all__ = ["CommandResult", "run", "main"]

FORMATS = ("json", "csv", "plain")


@dataclass
class CommandResult:
    command: str
    parameters: dict
    payload: dict
    exit_code: int
    table: list[dict] | None = None
    text: str | None = None

    def render(self, fmt: str) -> str:
        if fmt == "json" or (fmt == "csv" and self.table is None):
            return json.dumps({"command": self.command, "parameters": self.parameters,
                               "payload": self.payload}, indent=2, sort_keys=True)
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=list(self.table[0]) if self.table else [],
                                    lineterminator="\n")
            writer.writeheader()
            writer.writerows(self.table)
            return buf.getvalue().rstrip("\n")
        return self.text if self.text is not None else _plain(self.payload)


def _plain(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_plain(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_plain(x, indent) if isinstance(x, (dict, list)) and not _flat(x)
                         else f"{pad}{_scalar(x)}" for x in obj)
    return f"{pad}{_scalar(obj)}"


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return " ".join(map(str, v))
    return str(v)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(2) from UsageError(message)


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heckejones", description="Hecke algebra cells, Jones representations and certificates.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--out", default=None, help="output path, or one of json|csv|plain")
        return p

    p = common(sub.add_parser("cells", help="list the cell of an element"))
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--rep", help="word such as s1s3s5 or 1,3,5")
    g.add_argument("--shape", help="Young diagram such as [3,3]")

    p = common(sub.add_parser("klpoly", help="Kazhdan-Lusztig polynomial P_{y,w} and mu"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--w", required=True)

    p = common(sub.add_parser("wgraph", help="W-graph of a cell"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rep", required=True)

    p = common(sub.add_parser("jones", help="Jones representation matrices"))
    p.add_argument("--genus", type=int, required=True)

    p = common(sub.add_parser("verify", help="sphere relations and related exact checks"))
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--shape", default=None, help="check an arbitrary shape instead of [g+1,g+1]")

    p = common(sub.add_parser("certify", help="infinite-order certificate for A"))
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--power", type=int, required=True)
    p.add_argument("--scheme", choices=("even", "odd"), required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--variant", choices=("corrected", "verbatim"), default="corrected")
    p.add_argument("--free-subgroup", action="store_true", help="also search for a ping-pong witness")

    p = common(sub.add_parser("sweep", help="certificates over a range of powers"))
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--powers", required=True, help="range like 5..40")
    p.add_argument("--scheme", choices=("even", "odd"), required=True)
    p.add_argument("--variants", default="corrected", help="comma list of corrected,verbatim")

    p = common(sub.add_parser("burau", help="reduced Burau matrices"))
    p.add_argument("--n", type=int, required=True)
    return parser


def _perm(text: str, n: int):
    return evaluate_word(parse_word(text), n)


def _cmd_cells(a) -> CommandResult:
    from .tableaux import YoungDiagram, cell_of, dimension, representative
    if a.rep is not None:
        w = _perm(a.rep, a.n)
    else:
        shape = YoungDiagram.parse(a.shape)
        if shape.size != a.n:
            raise ValueError(f"shape {shape} has size {shape.size}, not {a.n}")
        w = representative(shape)
    cell = cell_of(w)
    members = [{"word": format_word(reduced_word(x)), "one_line": str(x), "length": length(x),
                "descents": sorted(left_descents(x))} for x in cell.members]
    payload = {"shape": list(cell.shape), "size": len(cell), "dimension": dimension(cell.shape),
               "q_tableau": cell.q_tableau.to_json(), "members": members}
    return CommandResult("cells", vars(a), payload, 0, table=members)


def _cmd_klpoly(a) -> CommandResult:
    from .kl import kl_polynomial, mu
    y, w = _perm(a.y, a.n), _perm(a.w, a.n)
    p = kl_polynomial(y, w)
    payload = {"y": format_word(reduced_word(y)), "w": format_word(reduced_word(w)),
               "P": str(p.poly), "coefficients": list(p.coefficients()), "mu": mu(y, w)}
    return CommandResult("klpoly", vars(a), payload, 0)


def _cmd_wgraph(a) -> CommandResult:
    from .tableaux import cell_of
    from .wgraph import build_wgraph
    graph = build_wgraph(cell_of(_perm(a.rep, a.n)))
    payload = graph.to_json()
    table = [{"y": format_word(reduced_word(graph.vertices[i])), "w": format_word(reduced_word(graph.vertices[j])),
              "mu": m} for i, j, m in payload["edges"]]
    return CommandResult("wgraph", vars(a), payload, 0, table=table)


def _cmd_jones(a) -> CommandResult:
    from .jones import jones_rep
    rep = jones_rep(a.genus)
    payload = rep.to_json()
    text = "\n\n".join(f"H{k + 1} (q = t^{rep.d}):\n{m}" for k, m in enumerate(rep.matrices))
    table = [{"generator": k + 1, "row": i + 1, "col": j + 1, "entry": str(x)}
             for k, m in enumerate(rep.matrices) for i, row in enumerate(m.rows) for j, x in enumerate(row)]
    return CommandResult("jones", vars(a), payload, 0, table=table, text=text)


def _cmd_verify(a) -> CommandResult:
    from .jones import (block_embedding_check, central_element_check, determinant_check, jones_rep,
                        rescaled_quadratic_check, rescaled_representation, verify_sphere_relations)
    from .tableaux import YoungDiagram
    if a.shape is not None:
        rep = rescaled_representation(YoungDiagram.parse(a.shape))
    elif a.genus is not None:
        rep = jones_rep(a.genus)
    else:
        raise ValueError("verify needs --genus or --shape")
    report = verify_sphere_relations(rep)
    unscaled = verify_sphere_relations(list(rep.base))
    payload = {"shape": list(rep.shape), "d": rep.d, "r": rep.r, "relations": report.results,
               "rescaled_quadratic": rescaled_quadratic_check(rep),
               "determinant": determinant_check(rep),
               "without_prefactor": unscaled.results}
    checks = [report.ok, payload["rescaled_quadratic"], payload["determinant"]]
    if rep.shape.is_rectangular():
        try:
            payload["full_twist_scalar_without_prefactor"] = str(central_element_check(rep))
        except ArithmeticError as exc:
            payload["full_twist_scalar_without_prefactor"] = f"error: {exc}"
            checks.append(False)
    g = rep.g
    if g is not None and g >= 3:
        block = block_embedding_check(g)
        payload["block_embedding"] = {str(k): v for k, v in block["blocks"].items()}
        checks.append(block["ok"])
    payload["ok"] = all(checks)
    table = [{"relation": k, "pass": v} for k, v in report.results.items()]
    return CommandResult("verify", vars(a), payload, 0 if payload["ok"] else 1, table=table)


def _cmd_certify(a) -> CommandResult:
    from .quotient import free_subgroup_witness, infinite_order_certificate
    cert = infinite_order_certificate(a.genus, a.power, a.scheme, a.k, a.variant)
    payload = cert.to_json()
    ok = cert.verdict == "infinite-order"
    if a.free_subgroup:
        witness = free_subgroup_witness(a.power, a.scheme)
        payload["free_subgroup"] = {"element": witness.element, "verdict": witness.verdict,
                                    "parameters": witness.parameters}
        ok = ok and witness.verdict == "free-subgroup-witness"
    return CommandResult("certify", vars(a), payload, 0 if ok else 1)


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",") if x.strip()]


def _cmd_sweep(a) -> CommandResult:
    from .quotient import sweep
    parity = 0 if a.scheme == "even" else 1
    powers = [m for m in _parse_range(a.powers) if m % 2 == parity and m >= (4 if parity == 0 else 5)]
    if not powers:
        raise ValueError(f"no {a.scheme} powers in {a.powers}")
    rows = sweep(a.genus, powers, a.scheme, tuple(v.strip() for v in a.variants.split(",")))
    for row in rows:
        row["modulus"] = "" if row["modulus"] is None else f"{row['modulus']:.7f}"
    ok = all(r["verdict"] == "infinite-order" for r in rows)
    return CommandResult("sweep", vars(a), {"rows": rows, "all_infinite_order": ok}, 0 if ok else 1, table=rows)


def _cmd_burau(a) -> CommandResult:
    from .quotient import burau, burau_hecke_bridge, burau_quadratic_residual
    mats = burau(a.n)
    residual_zero = all(m.is_zero() for m in burau_quadratic_residual(a.n))
    payload = {"n": a.n, "variable": "t", "matrices": [m.to_json() for m in mats],
               "quadratic_residual_zero": residual_zero}
    ok = residual_zero
    if a.n == 3:
        payload["hecke_bridge"] = burau_hecke_bridge()
        ok = ok and payload["hecke_bridge"]["ok"]
    text = "\n\n".join(f"beta(sigma_{k + 1}):\n{m}" for k, m in enumerate(mats))
    table = [{"generator": k + 1, "row": i + 1, "col": j + 1, "entry": str(x)}
             for k, m in enumerate(mats) for i, row in enumerate(m.rows) for j, x in enumerate(row)]
    return CommandResult("burau", vars(a), payload, 0 if ok else 1, table=table, text=text)


COMMANDS = {
    "cells": _cmd_cells, "klpoly": _cmd_klpoly, "wgraph": _cmd_wgraph, "jones": _cmd_jones,
    "verify": _cmd_verify, "certify": _cmd_certify, "sweep": _cmd_sweep, "burau": _cmd_burau,
}


def _output_target(a) -> tuple[str, str | None]:
    if a.out in FORMATS:
        return a.out, None
    return a.format, a.out


def run(argv: list[str]) -> CommandResult:
    """Parse and dispatch; raises SystemExit(2) on usage errors."""
    a = _build_parser().parse_args(argv)
    try:
        return COMMANDS[a.command](a)
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        params = {k: v for k, v in vars(a).items()}
        return CommandResult(a.command, params, {"error": str(exc), "type": type(exc).__name__}, 1)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        result = run(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    a = _build_parser().parse_args(argv)
    fmt, path = _output_target(a)
    if "error" in result.payload and len(result.payload) == 2:
        fmt = "json"
    text = result.render(fmt)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
