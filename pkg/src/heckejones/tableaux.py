"""
Young diagrams, standard tableaux, Robinson-Schensted and cells of S_n.

Cells are enumerated as dual-Knuth classes: two permutations lie in the same
(left) cell exactly when their Q-symbols agree, and dual Knuth moves connect
every pair with equal Q-symbol.  Members are kept in a canonical order, first by
length and then lexicographically by canonical reduced word; that order fixes
the row/column indices of every matrix built from the cell.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import factorial, prod

from .coxeter import Permutation, length, reduced_word

__all__ = [
    "YoungDiagram", "StandardTableau", "Cell", "row_insert", "rs_correspondence",
    "p_symbol", "q_symbol", "dimension", "hook_lengths", "standard_tableaux",
    "dual_knuth_neighbors", "cell_of", "restriction_shapes", "representative",
    "canonical_key", "partitions",
]


class YoungDiagram(tuple):
    """Row lengths mu_1 >= mu_2 >= ... > 0."""

    __slots__ = ()

    def __new__(cls, rows=()):
        rows = tuple(int(r) for r in rows)
        if any(r <= 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"{list(rows)} is not a partition")
        return tuple.__new__(cls, rows)

    @classmethod
    def parse(cls, text: str) -> YoungDiagram:
        """Parse "[4,4]" or "4,4"."""
        body = text.strip().strip("[]")
        return cls(int(x) for x in body.split(",") if x.strip())

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> YoungDiagram:
        if not self:
            return self
        return YoungDiagram(sum(1 for r in self if r > c) for c in range(self[0]))

    def is_rectangular(self) -> bool:
        return len(set(self)) <= 1

    def boxes(self):
        for i, r in enumerate(self):
            for j in range(r):
                yield i, j

    def __repr__(self):
        return f"YoungDiagram({self})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = self.rows
        shape = YoungDiagram(len(r) for r in rows)
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, shape.size + 1)):
            raise ValueError(f"{rows} does not contain each of 1..{shape.size} once")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError(f"columns of {rows} are not increasing")

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(len(r) for r in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Row-insert x in place; return the (row, column) of the new box."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return i, 0
        row = rows[i]
        # the smallest entry exceeding x is bumped to the next row
        for j, k in enumerate(row):
            if k > x:
                row[j], x = x, k
                break
        else:
            row.append(x)
            return i, len(row) - 1
        i += 1


def rs_correspondence(w) -> tuple[StandardTableau, StandardTableau]:
    """(P(w), Q(w)): insertion tableau and recording tableau of w_1 w_2 ... w_n."""
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, x in enumerate(w, 1):
        i, j = row_insert(p, x)
        if i == len(q):
            q.append([])
        q[i].append(step)
    return (StandardTableau(tuple(map(tuple, p))), StandardTableau(tuple(map(tuple, q))))


def p_symbol(w) -> StandardTableau:
    return rs_correspondence(w)[0]


def q_symbol(w) -> StandardTableau:
    """Q(w) = P(w^{-1})."""
    return p_symbol(Permutation._raw(w).inverse())


def hook_lengths(shape: YoungDiagram) -> list[list[int]]:
    conj = shape.conjugate()
    return [[(r - j - 1) + (conj[j] - i - 1) + 1 for j in range(r)]
            for i, r in enumerate(shape)]


def dimension(shape: YoungDiagram) -> int:
    """Number of standard tableaux of the shape, by the hook length formula."""
    shape = YoungDiagram(shape)
    hooks = prod(h for row in hook_lengths(shape) for h in row)
    return factorial(shape.size) // hooks


def standard_tableaux(shape: YoungDiagram):
    """Enumerate standard tableaux by placing the largest entry in a removable corner."""
    shape = YoungDiagram(shape)
    n = shape.size
    if n == 0:
        yield StandardTableau(())
        return
    for i, r in enumerate(shape):
        if i + 1 < len(shape) and shape[i + 1] == r:
            continue
        smaller = list(shape)
        smaller[i] -= 1
        smaller = YoungDiagram(x for x in smaller if x)
        for t in standard_tableaux(smaller):
            rows = [list(row) for row in t.rows]
            if i == len(rows):
                rows.append([])
            rows[i].append(n)
            yield StandardTableau(tuple(map(tuple, rows)))


def restriction_shapes(shape: YoungDiagram) -> list[YoungDiagram]:
    """Shapes obtained by deleting one removable box (branching rule)."""
    shape = YoungDiagram(shape)
    if shape.size < 1:
        raise ValueError("the empty diagram has no removable box")
    out = []
    for i, r in enumerate(shape):
        if i + 1 < len(shape) and shape[i + 1] == r:
            continue
        smaller = list(shape)
        smaller[i] -= 1
        out.append(YoungDiagram(x for x in smaller if x))
    return out


def partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield YoungDiagram()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield YoungDiagram((first,) + tuple(rest))


def dual_knuth_neighbors(w) -> set[Permutation]:
    """
    Permutations obtained by swapping the values i and i+1 when i-1 or i+2 sits
    at a position strictly between them.
    """
    n = len(w)
    pos = [0] * (n + 2)
    for p, v in enumerate(w):
        pos[v] = p
    out = set()
    w = Permutation._raw(w)
    for i in range(1, n):
        a, b = sorted((pos[i], pos[i + 1]))
        witnesses = [v for v in (i - 1, i + 2) if 1 <= v <= n]
        if any(a < pos[v] < b for v in witnesses):
            out.add(w.lmul(i))
    return out


def canonical_key(w) -> tuple[int, tuple[int, ...]]:
    return length(w), reduced_word(Permutation._raw(w))


@dataclass(frozen=True)
class Cell:
    """A left cell of S_n, with members in canonical order."""

    representative: Permutation
    members: tuple[Permutation, ...]
    shape: YoungDiagram
    q_tableau: StandardTableau = field(compare=False)

    def __len__(self):
        return len(self.members)

    def __contains__(self, w):
        return w in self.members

    def index(self, w) -> int:
        return self.members.index(w)


def cell_of(w) -> Cell:
    """Breadth-first closure of {w} under dual Knuth moves."""
    w = Permutation(w)
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for y in dual_knuth_neighbors(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    members = tuple(sorted(seen, key=canonical_key))
    qt = q_symbol(w)
    return Cell(representative=w, members=members, shape=qt.shape, q_tableau=qt)


def representative(shape: YoungDiagram) -> Permutation:
    """
    An element whose cell has the given shape: the longest element of the Young
    subgroup with blocks given by the conjugate shape.  For [g+1, g+1] this is
    s_1 s_3 ... s_{2g+1}.
    """
    shape = YoungDiagram(shape)
    images = []
    start = 0
    for block in shape.conjugate():
        images.extend(range(start + block, start, -1))
        start += block
    return Permutation._raw(images)
