"""
Squarefree monomial ideals.

A squarefree monomial is stored as the frozenset of its variable indices
(1-based). Variables are ordered x_1 > x_2 > ... > x_n, so for two monomials
the one containing the smallest index of their symmetric difference is
lex-larger.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import MixedDegrees, NoLinearQuotients, UnitIdeal, ZeroIdeal
from .words import Subword

__all__ = [
    "Monomial", "monomial", "monomial_str", "lex_compare", "lex_sorted",
    "MonomialIdeal", "colon_by_monomial", "LinearQuotientsCertificate",
    "linear_quotients_certificate", "has_linear_quotients", "min_formula_sets",
    "set_via_min_formula", "BettiTable", "betti_from_certificate",
    "projdim_bound_check", "Regularity", "regularity_of_SR_ideal",
    "HilbertNumerator", "hilbert_numerator", "height",
]

Monomial = frozenset


def monomial(*indices: int) -> frozenset[int]:
    return frozenset(indices)


def monomial_str(u: Iterable[int]) -> str:
    u = sorted(u)
    return "".join(f"x{i}" for i in u) if u else "1"


def lex_compare(u: Iterable[int], v: Iterable[int]) -> int:
    """Return 1 if u >lex v, -1 if u <lex v, 0 if equal."""
    u, v = frozenset(u), frozenset(v)
    diff = u ^ v
    if not diff:
        return 0
    return 1 if min(diff) in u else -1


def lex_sorted(monomials: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Sort lex-decreasing."""
    return sorted(monomials, key=cmp_to_key(lambda a, b: lex_compare(b, a)))


def _minimalize(gens: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    gens = sorted(set(map(frozenset, gens)), key=len)
    kept: list[frozenset[int]] = []
    for g in gens:
        if not any(k <= g for k in kept):
            kept.append(g)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal in n variables, by its minimal generators.

    ``gens`` is normalised to the minimal generating set in lex-decreasing
    order. The unit ideal is ``gens == (frozenset(),)``; the zero ideal has
    no generators.
    """

    n: int
    gens: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        gens = lex_sorted(_minimalize(self.gens))
        for g in gens:
            if g and not (min(g) >= 1 and max(g) <= self.n):
                raise ValueError(f"generator {sorted(g)} outside variables 1..{self.n}")
        object.__setattr__(self, "gens", tuple(gens))

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"

    @property
    def is_unit(self) -> bool:
        return self.gens == (frozenset(),)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def degrees(self) -> set[int]:
        return {len(g) for g in self.gens}

    def contains_monomial(self, u: Iterable[int]) -> bool:
        u = frozenset(u)
        return any(g <= u for g in self.gens)


def colon_by_monomial(I: MonomialIdeal, u: Iterable[int]) -> MonomialIdeal:
    u = frozenset(u)
    return MonomialIdeal(I.n, tuple(g - u for g in I.gens))


@dataclass(frozen=True)
class LinearQuotientsCertificate:
    order: tuple[frozenset[int], ...]
    sets: tuple[frozenset[int], ...]

    @property
    def d(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    @property
    def projdim(self) -> int:
        return max(self.d, default=0)


def linear_quotients_certificate(I: MonomialIdeal,
                                 order: Sequence[Iterable[int]] | None = None
                                 ) -> LinearQuotientsCertificate:
    """Check that every successive colon ideal is generated by variables.

    ``order`` defaults to the lex-decreasing order of the generators.
    Raises NoLinearQuotients at the first failing (1-based) index.
    """
    order = I.gens if order is None else tuple(frozenset(u) for u in order)
    if sorted(map(sorted, order)) != sorted(map(sorted, I.gens)):
        raise ValueError("order must be a permutation of the minimal generators")
    sets = [frozenset()] if order else []
    for i in range(1, len(order)):
        colon = colon_by_monomial(MonomialIdeal(I.n, order[:i]), order[i])
        if any(len(g) != 1 for g in colon.gens):
            raise NoLinearQuotients(i + 1, colon)
        sets.append(frozenset().union(*colon.gens))
    return LinearQuotientsCertificate(tuple(order), tuple(sets))


def has_linear_quotients(I: MonomialIdeal, order=None) -> bool:
    try:
        linear_quotients_certificate(I, order)
    except NoLinearQuotients:
        return False
    return True


def min_formula_sets(supports: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    """``{min(F_j - F_i) : j < i}`` for each i, for any list of supports.

    Only equal to the linear-quotient sets for duals of subword complexes;
    use :func:`set_via_min_formula` for those.
    """
    supports = [frozenset(s) for s in supports]
    return [frozenset(min(supports[j] - supports[i]) for j in range(i))
            for i in range(len(supports))]


def set_via_min_formula(reps: Sequence[Subword]) -> list[frozenset[int]]:
    """Linear-quotient sets of a subword-complex dual from its representing subwords.

    ``reps`` must be the output of :func:`words.representations`, already in
    lex order.
    """
    if not all(isinstance(p, Subword) for p in reps):
        raise TypeError("set_via_min_formula needs Subword instances from representations()")
    if list(reps) != sorted(reps):
        raise ValueError("representations must be in lex order")
    return min_formula_sets([p.support for p in reps])


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j}, stored sparsely."""

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: v for k, v in sorted(self.entries.items()) if v}
        if any(v < 0 for v in clean.values()):
            raise ValueError("Betti numbers are non-negative")
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def totals(self) -> tuple[int, ...]:
        return tuple(self.total(i) for i in range(self.projdim + 1)) if self.entries else ()

    @property
    def projdim(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def rows(self) -> list[list[int]]:
        return [[i, j, v] for (i, j), v in self.entries.items()]


def betti_from_certificate(cert: LinearQuotientsCertificate) -> BettiTable:
    """beta_{i,i+deg} = sum_j C(d_j, i) for an equigenerated ideal with linear quotients."""
    degrees = {len(u) for u in cert.order}
    if len(degrees) > 1:
        raise MixedDegrees(f"generator degrees {sorted(degrees)}")
    if not degrees:
        return BettiTable()
    deg = degrees.pop()
    entries: dict[tuple[int, int], int] = {}
    for i in range(cert.projdim + 1):
        entries[(i, i + deg)] = sum(comb(d, i) for d in cert.d)
    return BettiTable(entries)


def projdim_bound_check(cert: LinearQuotientsCertificate, n: int, ell: int) -> bool:
    bound = n - ell
    if cert.projdim > bound:
        return False
    # d_i = i - 1 can only happen for i <= n - ell + 1
    return all(i <= bound + 1 for i, d in enumerate(cert.d, start=1) if d == i - 1)


class Regularity(NamedTuple):
    reg: int
    bound: int
    within_bound: bool


def regularity_of_SR_ideal(sys, Q, pi) -> Regularity:
    """reg(I_Delta) of a subword complex, as projdim of the dual ideal plus one."""
    from .complexes import alexander_dual_ideal, subword_complex

    delta = subword_complex(sys, Q, pi)
    cert = linear_quotients_certificate(alexander_dual_ideal(delta))
    reg = cert.projdim + 1
    bound = len(Q) - pi.length + 1
    return Regularity(reg, bound, reg <= bound)


@dataclass(frozen=True)
class HilbertNumerator:
    """K-polynomial: coefficients by total degree, optionally fine-graded."""

    coefficients: Mapping[int, int]
    fine: Mapping[frozenset[int], int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "coefficients",
                           {k: v for k, v in sorted(self.coefficients.items()) if v})
        if self.fine is not None:
            fine = {k: v for k, v in self.fine.items() if v}
            coarse: dict[int, int] = {}
            for s, v in fine.items():
                coarse[len(s)] = coarse.get(len(s), 0) + v
            if {k: v for k, v in coarse.items() if v} != self.coefficients:
                raise ValueError("fine-graded numerator does not specialise to the coarse one")
            object.__setattr__(self, "fine", fine)

    def __eq__(self, other):
        if not isinstance(other, HilbertNumerator):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    def __str__(self):
        return _poly_str(self.coefficients)


def _poly_str(coeffs: Mapping[int, int]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for deg, c in sorted(coeffs.items()):
        mag = abs(c)
        var = "" if deg == 0 else ("t" if deg == 1 else f"t^{deg}")
        term = str(mag) if not var else (var if mag == 1 else f"{mag}{var}")
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


def hilbert_numerator(I: MonomialIdeal | None = None, cert: LinearQuotientsCertificate | None = None,
                      *, betti: BettiTable | None = None, census: Mapping[int, int] | None = None,
                      subwords: Iterable[Subword] | None = None, ell: int | None = None
                      ) -> HilbertNumerator:
    """K-polynomial of a squarefree ideal, by one of two routes.

    Resolution route: pass ``cert`` (or a ``betti`` table) and get
    sum (-1)^i beta_{i,j} t^j. Enumeration route: pass the Demazure
    ``census`` (size -> count) or the ``subwords`` themselves, plus ``ell``,
    and get sum (-1)^(|P|-ell) t^|P|; ``subwords`` also yields the fine
    grading.
    """
    if cert is not None:
        if I is not None and set(cert.order) != set(I.gens):
            raise ValueError("certificate does not belong to this ideal")
        betti = betti_from_certificate(cert)
    if betti is not None:
        coeffs: dict[int, int] = {}
        for (i, j), v in betti.entries.items():
            coeffs[j] = coeffs.get(j, 0) + (-1) ** i * v
        return HilbertNumerator(coeffs)
    if ell is None:
        raise ValueError("the enumeration route needs ell = length(pi)")
    if subwords is not None:
        fine: dict[frozenset[int], int] = {}
        for p in subwords:
            fine[p.support] = (-1) ** (len(p) - ell)
        coarse: dict[int, int] = {}
        for s, v in fine.items():
            coarse[len(s)] = coarse.get(len(s), 0) + v
        return HilbertNumerator(coarse, fine)
    if census is not None:
        return HilbertNumerator({size: (-1) ** (size - ell) * m for size, m in census.items()})
    raise ValueError("need a certificate, Betti table, census or subwords")


def height(I: MonomialIdeal) -> int:
    """Minimum vertex cover of the generator supports."""
    if I.is_zero:
        raise ZeroIdeal("height of the zero ideal")
    if I.is_unit:
        raise UnitIdeal("height of the unit ideal")
    variables = sorted(frozenset().union(*I.gens))
    for k in range(1, len(variables) + 1):
        for cover in combinations(variables, k):
            c = set(cover)
            if all(g & c for g in I.gens):
                return k
    raise AssertionError("unreachable: all variables always cover")
