"""
Simplicial complexes on the vertex set [n] = {1..n}, subword complexes,
Alexander duality, link/deletion, shellings and shiftedness.

Facet lists keep their construction order (so the subword complex carries
the lex-dual order of its facets) but equality ignores order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coxeter import CoxeterSystem, GroupElement
from .errors import (
    DegeneratePi, NotAPermutation, NotContained, ShellingMismatch,
    TooManyVertices,
)
from .ideals import MonomialIdeal
from .words import contains, representations

__all__ = [
    "SimplicialComplex", "ShellingOrder", "subword_complex", "lex_dual_shelling",
    "alexander_dual_ideal", "link", "deletion", "vertex_decompose_shelling",
    "is_shelling", "is_shifted", "minimal_nonfaces", "faces", "f_vector",
    "SHIFTED_MAX_VERTICES",
]

ShellingOrder = tuple[frozenset[int], ...]

SHIFTED_MAX_VERTICES = 9


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Complex on [n] given by its facets.

    ``facets == ()`` is the void complex (no faces at all);
    ``facets == (frozenset(),)`` is the complex {emptyset}.
    """

    n: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: list[frozenset[int]] = []
        for f in map(frozenset, self.facets):
            if f and not (min(f) >= 1 and max(f) <= self.n):
                raise ValueError(f"facet {sorted(f)} outside vertex set 1..{self.n}")
            if f not in seen:
                seen.append(f)
        maximal = tuple(f for f in seen if not any(f < g for g in seen))
        object.__setattr__(self, "facets", maximal)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and set(self.facets) == set(other.facets)

    def __hash__(self):
        return hash((self.n, frozenset(self.facets)))

    def __repr__(self):
        fs = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, <{fs}>)"

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.facets)

    def is_face(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def sorted_facets(self) -> list[list[int]]:
        return [sorted(f) for f in self.facets]


def _complement_facets(sys, Q, positions: Sequence[int], pi) -> list[frozenset[int]]:
    """Facets of the subword complex of the subword of Q at ``positions``, lex-dual order."""
    letters = [Q[p - 1] for p in positions]
    everything = frozenset(positions)
    return [everything - {positions[i - 1] for i in rep}
            for rep in representations(sys, letters, pi)]


def subword_complex(sys: CoxeterSystem, Q: Sequence[int], pi: GroupElement) -> SimplicialComplex:
    """Delta(Q, pi): facets are complements of the reduced subwords for ``pi``."""
    Q = sys.check_word(Q)
    if pi.length == 0:
        raise DegeneratePi("pi = identity gives the full simplex; rejected")
    if not contains(sys, Q, pi):
        raise NotContained(f"word {Q} does not contain {pi.value}")
    n = len(Q)
    return SimplicialComplex(n, tuple(_complement_facets(sys, Q, range(1, n + 1), pi)))


def lex_dual_shelling(sys: CoxeterSystem, Q: Sequence[int], pi: GroupElement) -> ShellingOrder:
    """Facets Q - P_1, ..., Q - P_r with x_{P_1} >lex ... >lex x_{P_r}."""
    return subword_complex(sys, Q, pi).facets


def alexander_dual_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    if not delta.facets:
        raise ValueError("the void complex has no Alexander dual ideal")
    everything = frozenset(range(1, delta.n + 1))
    return MonomialIdeal(delta.n, tuple(everything - f for f in delta.facets))


def link(delta: SimplicialComplex, v: int) -> SimplicialComplex:
    return SimplicialComplex(delta.n, tuple(f - {v} for f in delta.facets if v in f))


def deletion(delta: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces of ``delta`` not containing ``v``."""
    return SimplicialComplex(delta.n, tuple(f - {v} for f in delta.facets))


def vertex_decompose_shelling(sys: CoxeterSystem, Q: Sequence[int], pi: GroupElement,
                              check: bool = True) -> ShellingOrder:
    """Shelling built by vertex-decomposing Delta(Q, pi) at the first letter.

    With ``check`` set, the link and deletion produced at every level are
    compared to :func:`link` and :func:`deletion` of the complex computed
    directly; a mismatch raises ShellingMismatch.
    """
    delta = subword_complex(sys, Q, pi)
    n = len(Q)

    def decompose(positions: tuple[int, ...], g: GroupElement) -> list[frozenset[int]]:
        if g.length == 0:
            return [frozenset(positions)]
        if len(positions) < g.length:
            return []
        p, rest = positions[0], positions[1:]
        sg = sys.mul_left(Q[p - 1], g)
        if sg.length < g.length:
            dele = decompose(rest, sg)
            lk = decompose(rest, g)
        else:
            dele = lk = decompose(rest, g)
        order = list(dele) if sg.length < g.length else []
        order += [f | {p} for f in lk]
        if check:
            here = SimplicialComplex(n, tuple(_complement_facets(sys, Q, positions, g)))
            if SimplicialComplex(n, tuple(lk)) != link(here, p):
                raise ShellingMismatch(f"link at vertex {p} differs from Delta(Q', pi)")
            if SimplicialComplex(n, tuple(dele)) != deletion(here, p):
                raise ShellingMismatch(f"deletion at vertex {p} differs from the recursive part")
            if sorted(map(sorted, order)) != sorted(map(sorted, here.facets)):
                raise ShellingMismatch(f"order at vertex {p} is not a facet permutation")
        return order

    return tuple(decompose(tuple(range(1, n + 1)), pi)) if delta.facets else ()


def is_shelling(delta: SimplicialComplex, order: Sequence[Iterable[int]]) -> bool:
    """Pure shelling test: each F_j meets the earlier facets in codimension one."""
    order = [frozenset(f) for f in order]
    if len(order) != len(delta.facets) or set(order) != set(delta.facets):
        raise NotAPermutation("order is not a permutation of the facets")
    for j in range(1, len(order)):
        fj = order[j]
        # vertices v such that F_j - {v} lies in an earlier facet
        single = {next(iter(fj - order[k])) for k in range(j) if len(fj - order[k]) == 1}
        for i in range(j):
            if not (fj - order[i]) & single:
                return False
    return True


def is_shifted(delta: SimplicialComplex) -> bool:
    """Whether some labelling of the vertices makes ``delta`` shifted.

    Only vertices that lie in some face are labelled. A labelling works iff
    each vertex can replace (in every facet) every vertex labelled after it,
    so the search only extends a partial order by vertices that dominate all
    remaining ones.
    """
    verts = sorted(delta.vertices)
    if len(verts) > SHIFTED_MAX_VERTICES:
        raise TooManyVertices(f"{len(verts)} vertices; labelling search capped at {SHIFTED_MAX_VERTICES}")

    def replaces(u, v):
        return all(delta.is_face((f - {v}) | {u}) for f in delta.facets if v in f and u not in f)

    dom = {(u, v): replaces(u, v) for u in verts for v in verts if u != v}

    def extend(remaining: frozenset[int]) -> bool:
        if not remaining:
            return True
        for u in sorted(remaining):
            rest = remaining - {u}
            if all(dom[u, v] for v in rest) and extend(rest):
                return True
        return False

    return extend(frozenset(verts))


def _face_masks(delta: SimplicialComplex) -> set[int]:
    out: set[int] = set()
    for f in delta.facets:
        full = 0
        for v in f:
            full |= 1 << (v - 1)
        if full in out:
            continue
        sub = full
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & full
    return out


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def faces(delta: SimplicialComplex) -> set[frozenset[int]]:
    return {_mask_to_set(m) for m in _face_masks(delta)}


def f_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_dim); empty for the void complex."""
    masks = _face_masks(delta)
    if not masks:
        return ()
    counts = [0] * (max(m.bit_count() for m in masks) + 1)
    for m in masks:
        counts[m.bit_count()] += 1
    return tuple(counts)


def minimal_nonfaces(delta: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal I_Delta, by its minimal nonfaces."""
    masks = _face_masks(delta)
    if not masks:
        return MonomialIdeal(delta.n, (frozenset(),))
    found = set()
    for m in masks:
        for i in range(delta.n):
            bit = 1 << i
            if m & bit:
                continue
            s = m | bit
            if s in masks or s in found:
                continue
            if all((s & ~(1 << j)) in masks for j in range(delta.n) if s >> j & 1):
                found.add(s)
    return MonomialIdeal(delta.n, tuple(_mask_to_set(s) for s in found))
