"""
Brute-force ground truth used to cross-check the structural routes.

Nothing here shares code paths with the greedy/combinatorial algorithms it
checks: homology is computed from boundary matrices with exact integer
elimination, Betti numbers from Hochster's formula, containment and Bruhat
order by enumerating subwords.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, _face_masks
from .coxeter import CoxeterSystem, GroupElement, element_of_word, reduced_words
from .errors import TooLarge
from .ideals import BettiTable, MonomialIdeal

__all__ = [
    "HomologyProfile", "simplicial_homology", "hochster_betti",
    "exhaustive_contains", "exhaustive_bruhat",
    "HOMOLOGY_MAX_VERTICES", "HOCHSTER_MAX_VARIABLES",
]

HOMOLOGY_MAX_VERTICES = 14
HOCHSTER_MAX_VARIABLES = 10
CONTAINS_MAX_WORD = 18
BRUHAT_MAX_LENGTH = 12


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced rational Betti numbers; ``ranks[k + 1]`` is dim H~_k."""

    ranks: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        i = k + 1
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    @property
    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic sum_k (-1)^k dim H~_k."""
        return sum((-1) ** (i - 1) * r for i, r in enumerate(self.ranks))

    def is_sphere(self, d: int) -> bool:
        """Homology of a d-sphere: H~_d = Q and nothing else."""
        return all(self[k] == (1 if k == d else 0) for k in range(-1, max(d, len(self.ranks)) + 1))

    def vanishes_below(self, d: int) -> bool:
        return all(self[k] == 0 for k in range(-1, d))

    def is_zero(self) -> bool:
        return not any(self.ranks)


def _rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix, by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                break
            a, b = row[col], piv[col]
            new = {}
            for c in row.keys() | piv.keys():
                v = b * row.get(c, 0) - a * piv.get(c, 0)
                if v:
                    new[c] = v
            g = 0
            for v in new.values():
                g = gcd(g, v)
            row = {c: v // g for c, v in new.items()} if g > 1 else new
    return len(pivots)


def _reduced_homology(masks: Iterable[int]) -> tuple[int, ...]:
    by_size: dict[int, list[int]] = {}
    for m in masks:
        by_size.setdefault(m.bit_count(), []).append(m)
    if not by_size:
        return ()
    top = max(by_size)
    index = {size: {m: i for i, m in enumerate(sorted(ms))} for size, ms in by_size.items()}

    def boundary_rank(size: int) -> int:
        # boundary from faces with ``size`` vertices to faces with size - 1
        if size == 0 or size not in by_size:
            return 0
        lower = index.get(size - 1, {})
        rows = []
        for m in by_size[size]:
            row, sign, bit = {}, 1, 0
            while m >> bit:
                if m >> bit & 1:
                    row[lower[m & ~(1 << bit)]] = sign
                    sign = -sign
                bit += 1
            rows.append(row)
        return _rank(rows)

    ranks = [boundary_rank(s) for s in range(top + 2)]
    return tuple(len(by_size.get(s, ())) - ranks[s] - ranks[s + 1] for s in range(top + 1))


def simplicial_homology(delta: SimplicialComplex) -> HomologyProfile:
    if delta.n > HOMOLOGY_MAX_VERTICES:
        raise TooLarge(f"{delta.n} vertices; homology oracle capped at {HOMOLOGY_MAX_VERTICES}")
    return HomologyProfile(_reduced_homology(_face_masks(delta)))


def _mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << (v - 1)
    return m


def hochster_betti(I: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers of ``I`` from Hochster's formula.

    With Gamma the complex whose Stanley-Reisner ideal is ``I``,
    beta_{i,sigma}(I) = dim H~_{|sigma|-i-2}(Gamma restricted to sigma).
    The restriction is a cone unless sigma is a union of generator supports,
    so only those sigma are visited.
    """
    if I.n > HOCHSTER_MAX_VARIABLES:
        raise TooLarge(f"{I.n} variables; Hochster oracle capped at {HOCHSTER_MAX_VARIABLES}")
    if I.is_zero:
        return BettiTable()
    if I.is_unit:
        return BettiTable({(0, 0): 1})
    gens = [_mask(g) for g in I.gens]
    lattice = set()
    frontier = set(gens)
    while frontier:
        lattice |= frontier
        frontier = {a | g for a in frontier for g in gens} - lattice

    entries: dict[tuple[int, int], int] = {}
    for sigma in lattice:
        inside = [g for g in gens if g & sigma == g]
        faces = []
        sub = sigma
        while True:
            if not any(g & sub == g for g in inside):
                faces.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & sigma
        size = sigma.bit_count()
        for idx, r in enumerate(_reduced_homology(faces)):
            i = size - (idx - 1) - 2
            if r and i >= 0:
                entries[(i, size)] = entries.get((i, size), 0) + r
    return BettiTable(entries)


def exhaustive_contains(sys: CoxeterSystem, Q: Sequence[int], pi: GroupElement) -> bool:
    """Literal search over all subwords of size length(pi)."""
    Q = sys.check_word(Q)
    if len(Q) > CONTAINS_MAX_WORD:
        raise TooLarge(f"|Q| = {len(Q)} exceeds {CONTAINS_MAX_WORD}")
    return any(element_of_word(sys, (Q[i] for i in idx)) == pi
               for idx in combinations(range(len(Q)), pi.length))


def exhaustive_bruhat(sys: CoxeterSystem, u: GroupElement, w: GroupElement) -> bool:
    """u <= w iff a reduced word of u sits inside one fixed reduced word of w."""
    if w.length > BRUHAT_MAX_LENGTH:
        raise TooLarge(f"length {w.length} exceeds {BRUHAT_MAX_LENGTH}")
    return exhaustive_contains(sys, reduced_words(sys, w)[0], u)
