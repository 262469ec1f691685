"""
W-graphs of cells and the matrices of the Hecke generators acting on them.

For a vertex w and a generator s_i,

    tau_i(w) = -q^{-1} w                          if i in I_w
    tau_i(w) = q w + sum_y mu(y, w) y             otherwise,

the sum running over the neighbours y of w with i in I_y.  Vectors are
columns, so column j of the matrix is the image of vertex j.

Edge weights are stored symmetrically: mu(y, w) = mu(w, y) = the top
coefficient of P_{min, max}.  The two-vertex S_3 graph needs the weight on
both orientations to produce the q s_1 + s_2 s_1 image of s_1 under tau_2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import Permutation, bruhat_leq, left_descents, length, reduced_word
from .kl import mu
from .laurent import LaurentPoly
from .matrices import HeckeMatrix
from .tableaux import Cell

__all__ = ["WGraph", "RelationReport", "build_wgraph", "generator_matrix", "generator_matrices",
           "verify_hecke_relations", "edge_weight"]


def edge_weight(y, w) -> int:
    """Symmetric W-graph weight of the unordered pair {y, w}."""
    if length(y) > length(w):
        y, w = w, y
    return mu(y, w)


@dataclass(frozen=True)
class WGraph:
    vertices: tuple[Permutation, ...]
    descents: tuple[frozenset[int], ...]
    edges: dict[tuple[int, int], int] = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.vertices[0])

    def __len__(self):
        return len(self.vertices)

    def weight(self, a: int, b: int) -> int:
        return self.edges.get((a, b), 0)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [list(reduced_word(v)) for v in self.vertices],
            "descents": [sorted(d) for d in self.descents],
            "edges": [[a, b, m] for (a, b), m in sorted(self.edges.items()) if a < b],
        }


def build_wgraph(cell: Cell, check: bool = True) -> WGraph:
    vertices = tuple(cell.members)
    descents = tuple(left_descents(v) for v in vertices)
    edges: dict[tuple[int, int], int] = {}
    for a, y in enumerate(vertices):
        for b in range(a + 1, len(vertices)):
            w = vertices[b]
            lo, hi = (y, w) if length(y) <= length(w) else (w, y)
            if (length(hi) - length(lo)) % 2 == 0 or not bruhat_leq(lo, hi):
                continue
            m = mu(lo, hi)
            if m:
                edges[(a, b)] = edges[(b, a)] = m
    graph = WGraph(vertices, descents, edges)
    if check:
        report = verify_hecke_relations(generator_matrices(graph))
        if not report.ok:
            raise RuntimeError(f"W-graph of {cell.representative} fails: {report.failures()}")
    return graph


def generator_matrix(graph: WGraph, i: int) -> HeckeMatrix:
    """Matrix of tau_{s_i}; column j is the image of vertex j."""
    n = graph.n
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    size = len(graph)
    zero = LaurentPoly()
    q = LaurentPoly.gen()
    minus_qinv = LaurentPoly.monomial(-1, -1)
    rows = [[zero] * size for _ in range(size)]
    for j in range(size):
        if i in graph.descents[j]:
            rows[j][j] = minus_qinv
            continue
        rows[j][j] = q
        for k in range(size):
            if i in graph.descents[k]:
                m = graph.weight(k, j)
                if m:
                    rows[k][j] = LaurentPoly.const(m)
    return HeckeMatrix._raw(rows, "q", None)


def generator_matrices(graph: WGraph) -> list[HeckeMatrix]:
    return [generator_matrix(graph, i) for i in range(1, graph.n)]


@dataclass
class RelationReport:
    """Exact pass/fail per named relation."""

    results: dict[str, bool] = field(default_factory=dict)

    def record(self, name: str, passed: bool) -> None:
        self.results[name] = bool(passed)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.results.items() if not v]

    def to_json(self) -> dict:
        return {"ok": self.ok, "relations": dict(self.results)}


def verify_hecke_relations(matrices: list[HeckeMatrix]) -> RelationReport:
    """Quadratic, braid and commutation relations; matrices[k] represents s_{k+1}."""
    report = RelationReport()
    if not matrices:
        return report
    var, d = matrices[0].var, matrices[0].d
    size = matrices[0].size
    if var == "q":
        q = LaurentPoly.gen()
    else:
        q = LaurentPoly.monomial(d, 1, var, d)
    one = HeckeMatrix.identity(size, var, d)
    qi = q ** -1
    for k, m in enumerate(matrices, 1):
        residual = (m + one.scale(qi)) @ (m - one.scale(q))
        report.record(f"quadratic[{k}]", residual.is_zero())
    for k in range(len(matrices) - 1):
        a, b = matrices[k], matrices[k + 1]
        report.record(f"braid[{k + 1},{k + 2}]", a @ b @ a == b @ a @ b)
    for k in range(len(matrices)):
        for l in range(k + 2, len(matrices)):
            a, b = matrices[k], matrices[l]
            report.record(f"commute[{k + 1},{l + 1}]", a @ b == b @ a)
    return report
