"""
The symmetric group S_n as a Coxeter system with generators s_i = (i, i+1).

Permutations are tuples in one-line notation on 1..n.  Products compose like
functions, (a*b)(i) = a(b(i)), so left multiplication by s_i swaps the *values*
i and i+1 and right multiplication swaps the *positions* i and i+1.

>>> s1, s2 = Permutation.generator(1, 3), Permutation.generator(2, 3)
>>> s1 * s2
Permutation(2 3 1)
>>> (s1 * s2).length()
2
>>> left_descents(s2 * s1)
frozenset({2})
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "Word", "multiply", "length", "left_descents", "right_descents",
    "bruhat_leq", "reduced_word", "evaluate_word", "parse_word", "format_word",
    "longest_element", "all_permutations",
]

Word = tuple[int, ...]


class Permutation(tuple):
    """An element of S_n in one-line notation."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> Permutation:
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._raw(range(1, n + 1))

    @classmethod
    def generator(cls, i: int, n: int) -> Permutation:
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not a generator of S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls._raw(images)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse space-separated one-line notation, e.g. "2 3 1"."""
        return cls(int(x) for x in text.split())

    @property
    def n(self) -> int:
        return len(self)

    def __mul__(self, other):
        return multiply(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for pos, val in enumerate(self, 1):
            inv[val - 1] = pos
        return Permutation._raw(inv)

    def length(self) -> int:
        return length(self)

    def lmul(self, i: int) -> Permutation:
        """s_i * self: swap the values i and i+1."""
        return Permutation._raw(i + 1 if x == i else i if x == i + 1 else x for x in self)

    def rmul(self, i: int) -> Permutation:
        """self * s_i: swap the entries in positions i and i+1."""
        images = list(self)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation._raw(images)

    def embed(self, n: int) -> Permutation:
        """View as an element of S_n for n >= len(self)."""
        return Permutation._raw(tuple(self) + tuple(range(len(self) + 1, n + 1)))

    def __repr__(self):
        return f"Permutation({' '.join(map(str, self))})"

    def __str__(self):
        return " ".join(map(str, self))


def multiply(a: Permutation, b: Permutation) -> Permutation:
    if len(a) != len(b):
        raise ValueError(f"size mismatch: S_{len(a)} vs S_{len(b)}")
    return Permutation._raw(a[x - 1] for x in b)


@lru_cache(maxsize=None)
def length(w: Sequence[int]) -> int:
    """Number of inversions, which is the Coxeter length."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def left_descents(w: Sequence[int]) -> frozenset[int]:
    """Indices i with l(s_i w) < l(w), i.e. value i+1 sits left of value i."""
    pos = [0] * (len(w) + 1)
    for p, v in enumerate(w):
        pos[v] = p
    return frozenset(i for i in range(1, len(w)) if pos[i + 1] < pos[i])


def right_descents(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


@lru_cache(maxsize=None)
def bruhat_leq(y: Sequence[int], w: Sequence[int]) -> bool:
    """
    Bruhat order via the tableau criterion: y <= w iff for every k the sorted
    first k entries of y are dominated entrywise by those of w.
    """
    if len(y) != len(w):
        raise ValueError(f"size mismatch: S_{len(y)} vs S_{len(w)}")
    if y == w:
        return True
    ly, lw = length(y), length(w)
    if ly >= lw:
        return False
    for k in range(1, len(y)):
        a = sorted(y[:k])
        b = sorted(w[:k])
        if any(x > z for x, z in zip(a, b)):
            return False
    return True


@lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> Word:
    """Canonical reduced word: repeatedly strip the smallest left descent."""
    letters = []
    w = Permutation._raw(w)
    while True:
        desc = left_descents(w)
        if not desc:
            return tuple(letters)
        i = min(desc)
        letters.append(i)
        w = w.lmul(i)


def evaluate_word(word: Iterable[int], n: int) -> Permutation:
    """Evaluate s_{i_1} s_{i_2} ... s_{i_k} in S_n."""
    w = Permutation.identity(n)
    for i in reversed(tuple(word)):
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not a generator of S_{n}")
        w = w.lmul(i)
    return w


def is_reduced(word: Sequence[int], n: int) -> bool:
    return len(word) == length(evaluate_word(word, n))


def parse_word(text: str) -> Word:
    """Accept "1,3,5", "s1s3s5", "s_1 s_3 s_5" or "" (identity)."""
    text = text.strip()
    if not text or text in ("e", "id"):
        return ()
    if "s" in text:
        parts = [p for p in text.replace("_", "").replace(" ", "").split("s") if p]
    else:
        parts = [p for p in text.replace(" ", ",").split(",") if p]
    return tuple(int(p) for p in parts)


def format_word(word: Sequence[int]) -> str:
    return ",".join(map(str, word))


def longest_element(n: int) -> Permutation:
    return Permutation._raw(range(n, 0, -1))


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n sorted by length, then by one-line notation."""
    perms = [Permutation._raw(p) for p in permutations(range(1, n + 1))]
    perms.sort(key=lambda p: (length(p), tuple(p)))
    return perms

