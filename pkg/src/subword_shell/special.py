"""
Subword complexes whose dual ideal has r <= n - l(pi) + 1 generators and
d_r = r - 1.

For these the dual ideal factors as a monomial times an ideal generated by
r distinct variables, which pins down Betti numbers, the K-polynomial, the
Demazure census, the sphere criterion and a complete-intersection
Stanley-Reisner ideal. Every closed formula here is recomputed by a general
route and any disagreement is raised or reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from math import comb
from typing import NamedTuple, Sequence

from .complexes import SimplicialComplex, minimal_nonfaces
from .coxeter import CoxeterSystem, GroupElement, demazure_product
from .errors import CIGeneratorMismatch, FactorizationMismatch, NotSpecial, PropertyViolation
from .ideals import (
    BettiTable, HilbertNumerator, LinearQuotientsCertificate, MonomialIdeal,
    betti_from_certificate, hilbert_numerator,
)
from .oracles import HOCHSTER_MAX_VARIABLES, HOMOLOGY_MAX_VERTICES, hochster_betti, simplicial_homology
from .words import CENSUS_LIMIT, Subword, demazure_census

__all__ = [
    "SpecialClassReport", "SphereCheck", "detect_and_factor", "special_formulas",
    "expected_census", "census_check", "sphere_criterion", "ci_and_cm",
    "has_linear_resolution",
]


@dataclass(frozen=True)
class SpecialClassReport:
    r: int
    n: int
    ell: int
    is_special: bool
    cert: LinearQuotientsCertificate = field(repr=False, compare=False)
    pivot_l: int | None = None
    # False only for r = 1, where every variable of x_{P_1} works and the largest is taken
    pivot_unique: bool = False
    common_factor: frozenset[int] = frozenset()
    linear_vars: tuple[int, ...] = ()
    betti: BettiTable | None = None
    numerator: HilbertNumerator | None = None
    census: dict[int, int] | None = None
    census_ok: bool | None = None
    is_sphere: bool | None = None
    ci_generators: MonomialIdeal | None = None
    ci_disjoint: bool | None = None
    cm_dual: bool | None = None
    cm_dual_formula: bool | None = None

    @property
    def dual_generators(self) -> list[frozenset[int]]:
        """The factorised generators common_factor * x_v, v in linear_vars."""
        return [self.common_factor | {v} for v in self.linear_vars]


def detect_and_factor(cert: LinearQuotientsCertificate, reps: Sequence[Subword],
                      n: int, ell: int) -> SpecialClassReport:
    """Decide membership and, when special, factor the dual ideal.

    Finds the unique l in supp(x_{P_r}) with
    x_{P_j} = x_{min(P_j - P_r)} * x_{P_r} / x_l for all j < r and checks
    that the factorisation gives back the generators exactly.
    """
    r = len(reps)
    if [p.support for p in reps] != list(cert.order):
        raise ValueError("certificate order must match the lex-ordered representations")
    special = r >= 1 and r <= n - ell + 1 and cert.d[-1] == r - 1
    report = SpecialClassReport(r=r, n=n, ell=ell, is_special=special, cert=cert)
    if not special:
        return report

    last = reps[-1].support
    mins = [min(p.support - last) for p in reps[:-1]]
    candidates = [l for l in sorted(last)
                  if all(p.support == (last - {l}) | {m} for p, m in zip(reps, mins))]
    if r == 1:
        l, unique = max(last), False
    elif len(candidates) == 1:
        l, unique = candidates[0], True
    else:
        raise FactorizationMismatch(
            f"expected exactly one pivot in {sorted(last)}, found {candidates}")

    common = last - {l}
    linear = tuple(mins) + (l,)
    report = replace(report, pivot_l=l, pivot_unique=unique,
                     common_factor=common, linear_vars=linear)
    if sorted(map(sorted, report.dual_generators)) != sorted(map(sorted, cert.order)):
        raise FactorizationMismatch("factorisation does not reproduce the generators")
    if len(set(linear)) != r or set(linear) & common:
        raise FactorizationMismatch("linear part is not a sequence of distinct new variables")
    return report


def _require_special(report: SpecialClassReport) -> None:
    if not report.is_special:
        raise NotSpecial(f"r = {report.r}, d_r = {report.cert.d[-1] if report.cert.d else None}")


def special_formulas(report: SpecialClassReport) -> SpecialClassReport:
    """Koszul Betti numbers C(r, i+1) and the matching K-polynomial."""
    _require_special(report)
    r, ell = report.r, report.ell
    betti = BettiTable({(i, i + ell): comb(r, i + 1) for i in range(r)})
    numerator = HilbertNumerator({i + ell: (-1) ** i * comb(r, i + 1) for i in range(r)})
    general = betti_from_certificate(report.cert)
    if general != betti:
        raise PropertyViolation(f"Koszul Betti table {betti.entries} != certificate route {general.entries}")
    if hilbert_numerator(cert=report.cert) != numerator:
        raise PropertyViolation("Koszul K-polynomial disagrees with the certificate route")
    return replace(report, betti=betti, numerator=numerator)


def expected_census(report: SpecialClassReport) -> dict[int, int]:
    return {report.ell + j: comb(report.r, j + 1) for j in range(report.r)}


def census_check(sys: CoxeterSystem, Q: Sequence[int], pi: GroupElement,
                 report: SpecialClassReport, census_limit: int = CENSUS_LIMIT) -> bool:
    """Demazure census equals C(r, j+1) in size l(pi)+j, and zero beyond."""
    _require_special(report)
    return demazure_census(sys, Q, pi, census_limit) == expected_census(report)


class SphereCheck(NamedTuple):
    verdict: bool
    demazure_agrees: bool
    # None when the complex is too large for the homology oracle
    homology_agrees: bool | None

    @property
    def ok(self) -> bool:
        return self.demazure_agrees and self.homology_agrees is not False


def sphere_criterion(sys: CoxeterSystem, Q: Sequence[int], pi: GroupElement,
                     report: SpecialClassReport, delta: SimplicialComplex | None = None
                     ) -> SphereCheck:
    """Sphere iff r = n - l(pi) + 1; checked against delta(Q) = pi and homology.

    The homology check is necessary-condition only: a sphere verdict needs
    the rational homology of a (n - l(pi) - 1)-sphere, a non-sphere verdict
    needs vanishing top homology.
    """
    _require_special(report)
    top = report.n - report.ell - 1
    verdict = report.r == report.n - report.ell + 1
    demazure = (demazure_product(sys, Q) == pi) == verdict
    homology = None
    if delta is not None and delta.n <= HOMOLOGY_MAX_VERTICES:
        h = simplicial_homology(delta)
        homology = h.is_sphere(top) if verdict else h[top] == 0
    return SphereCheck(verdict, demazure, homology)


def has_linear_resolution(I: MonomialIdeal) -> bool | None:
    """Betti table in a single strand, by Hochster's formula; None if too large."""
    if I.n > HOCHSTER_MAX_VARIABLES:
        return None
    strands = {j - i for i, j in hochster_betti(I).entries}
    return len(strands) <= 1


def ci_and_cm(report: SpecialClassReport, delta: SimplicialComplex) -> SpecialClassReport:
    """Complete-intersection generators of I_Delta and Cohen-Macaulayness of the dual.

    ``cm_dual`` is decided independently (Eagon-Reiner: I_Delta has a linear
    resolution) and ``cm_dual_formula`` records the principal-ideal
    prediction r == 1; callers compare the two.
    """
    _require_special(report)
    n = report.n
    product = frozenset(report.linear_vars)
    ci = MonomialIdeal(n, (product,) + tuple(frozenset({k}) for k in report.common_factor))
    actual = minimal_nonfaces(delta)
    if ci != actual:
        raise CIGeneratorMismatch(f"formula gives {ci}, minimal nonfaces are {actual}")
    disjoint = all(not (a & b) for a, b in combinations(ci.gens, 2))
    return replace(report, ci_generators=ci, ci_disjoint=disjoint,
                   cm_dual=has_linear_resolution(actual), cm_dual_formula=report.r == 1)
