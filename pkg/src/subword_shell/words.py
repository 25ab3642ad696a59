"""Words, subwords, containment and the Demazure census."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .coxeter import (
    CoxeterSystem, GroupElement, Word, _greedy_contains, bruhat_leq,
    is_reduced_word,
)
from .errors import IndexOutOfRange, NotReduced, WordTooLarge

__all__ = [
    "Subword", "parse_word", "format_word", "contains", "representations",
    "demazure_subwords", "demazure_census", "make_repeated_word", "CENSUS_LIMIT",
]

CENSUS_LIMIT = 20


@dataclass(frozen=True, order=True)
class Subword:
    """Strictly increasing 1-based positions into a word.

    Ordering is lexicographic on positions, which is the lex-decreasing
    order of the associated squarefree monomials.
    """

    positions: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.positions)
        object.__setattr__(self, "positions", p)
        if any(a >= b for a, b in zip(p, p[1:])) or (p and p[0] < 1):
            raise ValueError(f"subword positions must be strictly increasing and >= 1: {p}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions)

    def __len__(self):
        return len(self.positions)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.positions)

    def letters(self, word: Sequence[int]) -> Word:
        return tuple(word[p - 1] for p in self.positions)


def parse_word(text: str) -> Word:
    """Parse ``"1,2,1,3"`` into a word; the empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))


def format_word(w: Iterable[int]) -> str:
    return ",".join(str(s) for s in w)


def contains(sys: CoxeterSystem, Q: Sequence[int], pi: GroupElement) -> bool:
    """True iff some subword of ``Q`` is a reduced expression for ``pi``."""
    return _greedy_contains(sys, sys.check_word(Q), pi)


def representations(sys: CoxeterSystem, Q: Sequence[int], pi: GroupElement) -> list[Subword]:
    """All subwords of ``Q`` that are reduced expressions for ``pi``, in lex order."""
    Q = sys.check_word(Q)
    n = len(Q)
    out: list[Subword] = []
    chosen: list[int] = []

    # residual = (prefix product)^-1 * pi; the next letter must shorten it on the left
    def dfs(start: int, residual: GroupElement):
        if residual.length == 0:
            out.append(Subword(tuple(chosen)))
            return
        for p in range(start, n - residual.length + 1):
            h = sys.mul_left(Q[p], residual)
            if h.length < residual.length:
                chosen.append(p + 1)
                dfs(p + 1, h)
                chosen.pop()

    dfs(0, pi)
    return sorted(out)


def demazure_subwords(sys: CoxeterSystem, Q: Sequence[int], pi: GroupElement,
                      census_limit: int = CENSUS_LIMIT) -> Iterator[Subword]:
    """Yield every subword ``P`` of ``Q`` with Demazure product ``pi``.

    Every subword is visited except those extending a prefix whose Demazure
    product already fails to lie under ``pi`` in Bruhat order (the product
    only grows as letters are appended).
    """
    Q = sys.check_word(Q)
    if len(Q) > census_limit:
        raise WordTooLarge(f"|Q| = {len(Q)} exceeds census limit {census_limit}")
    below: dict[GroupElement, bool] = {}
    chosen: list[int] = []

    def dfs(start: int, d: GroupElement):
        if d == pi:
            yield Subword(tuple(chosen))
        for p in range(start, len(Q)):
            h = sys.mul_right(d, Q[p])
            if h.length < d.length:
                h = d
            if h not in below:
                below[h] = bruhat_leq(sys, h, pi)
            if below[h]:
                chosen.append(p + 1)
                yield from dfs(p + 1, h)
                chosen.pop()

    yield from dfs(0, sys.identity())


def demazure_census(sys: CoxeterSystem, Q: Sequence[int], pi: GroupElement,
                    census_limit: int = CENSUS_LIMIT) -> dict[int, int]:
    """Number of subwords of ``Q`` with Demazure product ``pi``, keyed by size."""
    counts = Counter(len(p) for p in demazure_subwords(sys, Q, pi, census_limit))
    return dict(sorted(counts.items()))


def make_repeated_word(sys: CoxeterSystem, rw: Sequence[int], i: int, reps: int) -> Word:
    """Repeat the ``i``-th letter (1-based) of the reduced word ``rw`` ``reps`` times."""
    rw = sys.check_word(rw)
    if not is_reduced_word(sys, rw):
        raise NotReduced(f"{rw} is not reduced")
    if not 1 <= i <= len(rw):
        raise IndexOutOfRange(f"index {i} outside 1..{len(rw)}")
    if reps < 1:
        raise ValueError("reps must be >= 1")
    return rw[:i - 1] + (rw[i - 1],) * reps + rw[i:]
