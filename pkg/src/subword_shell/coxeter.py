"""
Exact arithmetic in the finite Coxeter groups A(n), B(n) and I2(m).

Generators are numbered 1..rank. Elements are stored in a canonical form:

* A(n): one-line permutation of 1..n+1, ``s_i`` swaps i and i+1.
* B(n): signed permutation of 1..n in one-line form; ``s_1`` negates the
  first entry, ``s_i`` (i >= 2) swaps entries i-1 and i.
* I2(m): pair ``(k, f)`` standing for ``r**k * s_1**f`` where ``r = s_1 s_2``.

Products follow composition of functions, so ``g * s`` acts on positions of
the one-line form and ``s * g`` acts on values.

>>> A3 = CoxeterSystem.A(3)
>>> element_of_word(A3, (1, 2, 3, 2)).value
(2, 4, 3, 1)
>>> length(A3, element_of_word(A3, (1, 2, 3, 2)))
4
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidGenerator

__all__ = [
    "CoxeterSystem", "GroupElement", "Word",
    "element_of_word", "length", "is_reduced_word", "left_descents",
    "right_descents", "reduced_words", "bruhat_leq", "demazure_product",
    "multiply", "inverse",
]

Word = tuple[int, ...]

MAX_RANK = {"A": 7, "B": 5}
I2_RANGE = (3, 12)


@dataclass(frozen=True)
class GroupElement:
    value: tuple
    length: int = field(compare=False)

    def __repr__(self):
        return f"GroupElement({self.value}, length={self.length})"


def _inversions(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


class _TypeA:
    def __init__(self, rank: int):
        self.rank = rank
        self.identity = tuple(range(1, rank + 2))

    def length(self, v):
        return _inversions(v)

    def right(self, v, s):
        w = list(v)
        w[s - 1], w[s] = w[s], w[s - 1]
        return tuple(w)

    def left(self, v, s):
        swap = {s: s + 1, s + 1: s}
        return tuple(swap.get(x, x) for x in v)

    def validate(self, v):
        return sorted(v) == list(self.identity)


class _TypeB:
    def __init__(self, rank: int):
        self.rank = rank
        self.identity = tuple(range(1, rank + 1))

    def length(self, v):
        n = len(v)
        nsp = sum(1 for i in range(n) for j in range(i + 1, n) if v[i] + v[j] < 0)
        neg = sum(1 for x in v if x < 0)
        return _inversions(v) + nsp + neg

    def right(self, v, s):
        w = list(v)
        if s == 1:
            w[0] = -w[0]
        else:
            w[s - 2], w[s - 1] = w[s - 1], w[s - 2]
        return tuple(w)

    def left(self, v, s):
        if s == 1:
            return tuple(-x if abs(x) == 1 else x for x in v)
        a, b = s - 1, s
        swap = {a: b, b: a, -a: -b, -b: -a}
        return tuple(swap.get(x, x) for x in v)

    def validate(self, v):
        return sorted(abs(x) for x in v) == list(self.identity)


class _Dihedral:
    def __init__(self, m: int):
        self.m = m
        self.rank = 2
        self.identity = (0, 0)

    def length(self, v):
        k, f = v
        m = self.m
        if f == 0:
            return 2 * min(k, m - k)
        return min(2 * k + 1, 2 * (m - k) - 1)

    def _mul(self, a, b):
        (k1, f1), (k2, f2) = a, b
        k = k1 - k2 if f1 else k1 + k2
        return (k % self.m, (f1 + f2) % 2)

    def gen(self, s):
        return (0, 1) if s == 1 else (self.m - 1, 1)

    def right(self, v, s):
        return self._mul(v, self.gen(s))

    def left(self, v, s):
        return self._mul(self.gen(s), v)

    def validate(self, v):
        return len(v) == 2 and 0 <= v[0] < self.m and v[1] in (0, 1)


@dataclass(frozen=True)
class CoxeterSystem:
    """A finite Coxeter system from one of the families A, B, I2."""

    family: str
    rank: int
    m: int | None = None

    def __post_init__(self):
        if self.family in MAX_RANK:
            if not 1 <= self.rank <= MAX_RANK[self.family]:
                raise ValueError(
                    f"{self.family}({self.rank}) outside supported ranks 1..{MAX_RANK[self.family]}")
        elif self.family == "I2":
            lo, hi = I2_RANGE
            if self.m is None or not lo <= self.m <= hi or self.rank != 2:
                raise ValueError(f"I2(m) needs {lo} <= m <= {hi}")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    @classmethod
    def A(cls, rank: int) -> CoxeterSystem:
        return cls("A", rank)

    @classmethod
    def B(cls, rank: int) -> CoxeterSystem:
        return cls("B", rank)

    @classmethod
    def I2(cls, m: int) -> CoxeterSystem:
        return cls("I2", 2, m)

    def __str__(self):
        return f"I2({self.m})" if self.family == "I2" else f"{self.family}({self.rank})"

    @property
    def _backend(self):
        return _backend_for(self.family, self.rank, self.m)

    @property
    def generators(self) -> range:
        return range(1, self.rank + 1)

    @property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        if self.family == "I2":
            rows[0][1] = rows[1][0] = self.m
        else:
            for i in range(n - 1):
                rows[i][i + 1] = rows[i + 1][i] = 3
            if self.family == "B" and n >= 2:
                rows[0][1] = rows[1][0] = 4
        return tuple(map(tuple, rows))

    def identity(self) -> GroupElement:
        return GroupElement(self._backend.identity, 0)

    def element(self, value: Iterable[int]) -> GroupElement:
        """Wrap a backend value, checking that it is a valid canonical form."""
        value = tuple(value)
        b = self._backend
        if not b.validate(value) or len(value) != len(b.identity):
            raise ValueError(f"{value} is not an element of {self}")
        return GroupElement(value, b.length(value))

    def check_generator(self, s: int) -> None:
        if not (isinstance(s, int) and 1 <= s <= self.rank):
            raise InvalidGenerator(f"{s!r} is not a generator of {self} (1..{self.rank})")

    def check_word(self, w: Iterable[int]) -> Word:
        w = tuple(w)
        for s in w:
            self.check_generator(s)
        return w

    def mul_right(self, g: GroupElement, s: int) -> GroupElement:
        """Return g * s_s."""
        return _mul_right(self.family, self.rank, self.m, g.value, s)

    def mul_left(self, s: int, g: GroupElement) -> GroupElement:
        """Return s_s * g."""
        return _mul_left(self.family, self.rank, self.m, g.value, s)

    def elements(self) -> list[GroupElement]:
        """Every element of the group, by breadth-first search from the identity."""
        seen = {self.identity()}
        frontier = [self.identity()]
        while frontier:
            nxt = []
            for g in frontier:
                for s in self.generators:
                    h = self.mul_right(g, s)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return sorted(seen, key=lambda g: (g.length, g.value))


@lru_cache(maxsize=None)
def _backend_for(family, rank, m):
    if family == "A":
        return _TypeA(rank)
    if family == "B":
        return _TypeB(rank)
    return _Dihedral(m)


@lru_cache(maxsize=None)
def _mul_right(family, rank, m, value, s):
    b = _backend_for(family, rank, m)
    v = b.right(value, s)
    return GroupElement(v, b.length(v))


@lru_cache(maxsize=None)
def _mul_left(family, rank, m, value, s):
    b = _backend_for(family, rank, m)
    v = b.left(value, s)
    return GroupElement(v, b.length(v))


def element_of_word(sys: CoxeterSystem, w: Iterable[int]) -> GroupElement:
    """Ordered product of the simple reflections in ``w``."""
    g = sys.identity()
    for s in sys.check_word(w):
        g = sys.mul_right(g, s)
    return g


def length(sys: CoxeterSystem, g: GroupElement) -> int:
    return g.length


def multiply(sys: CoxeterSystem, g: GroupElement, h: GroupElement) -> GroupElement:
    for s in reduced_words(sys, h)[0]:
        g = sys.mul_right(g, s)
    return g


def inverse(sys: CoxeterSystem, g: GroupElement) -> GroupElement:
    return element_of_word(sys, reversed(reduced_words(sys, g)[0]))


def is_reduced_word(sys: CoxeterSystem, w: Iterable[int]) -> bool:
    g = sys.identity()
    for s in sys.check_word(w):
        h = sys.mul_right(g, s)
        if h.length < g.length:
            return False
        g = h
    return True


def left_descents(sys: CoxeterSystem, g: GroupElement) -> frozenset[int]:
    return frozenset(s for s in sys.generators if sys.mul_left(s, g).length < g.length)


def right_descents(sys: CoxeterSystem, g: GroupElement) -> frozenset[int]:
    return frozenset(s for s in sys.generators if sys.mul_right(g, s).length < g.length)


def reduced_words(sys: CoxeterSystem, g: GroupElement) -> tuple[Word, ...]:
    """All reduced expressions of ``g``, sorted lexicographically."""
    return _reduced_words(sys, g)


@lru_cache(maxsize=4096)
def _reduced_words(sys, g):
    if g.length == 0:
        return ((),)
    out = []
    for s in sorted(left_descents(sys, g)):
        for w in _reduced_words(sys, sys.mul_left(s, g)):
            out.append((s,) + w)
    return tuple(sorted(out))


def _greedy_contains(sys: CoxeterSystem, word: Sequence[int], target: GroupElement) -> bool:
    # right-to-left: absorb a letter whenever it is a right descent of the residual
    residual = target
    for s in reversed(word):
        if residual.length == 0:
            break
        h = sys.mul_right(residual, s)
        if h.length < residual.length:
            residual = h
    return residual.length == 0


def bruhat_leq(sys: CoxeterSystem, u: GroupElement, w: GroupElement) -> bool:
    """Bruhat order test via the subword property on one reduced word of ``w``."""
    if u.length > w.length:
        return False
    return _greedy_contains(sys, reduced_words(sys, w)[0], u)


def demazure_product(sys: CoxeterSystem, w: Iterable[int]) -> GroupElement:
    d = sys.identity()
    for s in sys.check_word(w):
        h = sys.mul_right(d, s)
        if h.length > d.length:
            d = h
    return d
