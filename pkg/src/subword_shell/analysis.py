"""
Full analysis of one (system, word, element) instance.

Every structural result is paired with an independent check and recorded
as a verdict: ``"pass"``, ``"fail"`` or ``"skipped(<reason>)"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any, Sequence

from .complexes import (
    SHIFTED_MAX_VERTICES, SimplicialComplex, alexander_dual_ideal, is_shelling,
    is_shifted, minimal_nonfaces, subword_complex, vertex_decompose_shelling,
)
from .coxeter import CoxeterSystem, GroupElement, bruhat_leq, demazure_product, reduced_words
from .errors import NoLinearQuotients, PropertyViolation
from .ideals import (
    BettiTable, HilbertNumerator, LinearQuotientsCertificate, betti_from_certificate,
    height, hilbert_numerator, linear_quotients_certificate,
    projdim_bound_check, set_via_min_formula,
)
from .oracles import (
    BRUHAT_MAX_LENGTH, CONTAINS_MAX_WORD, HOCHSTER_MAX_VARIABLES,
    HOMOLOGY_MAX_VERTICES, exhaustive_bruhat, exhaustive_contains,
    hochster_betti, simplicial_homology,
)
from .special import (
    SpecialClassReport, census_check, ci_and_cm, detect_and_factor,
    sphere_criterion, special_formulas,
)
from .words import CENSUS_LIMIT, contains, demazure_subwords, representations

__all__ = ["AnalysisReport", "analyze", "PASS", "FAIL", "skipped"]

PASS, FAIL = "pass", "fail"


def skipped(reason: str = "size") -> str:
    return f"skipped({reason})"


def _verdict(ok: bool | None, reason: str = "size") -> str:
    if ok is None:
        return skipped(reason)
    return PASS if ok else FAIL


def _sets(xs) -> list[list[int]]:
    return [sorted(x) for x in xs]


@dataclass
class AnalysisReport:
    sys: CoxeterSystem
    word: tuple[int, ...]
    pi: GroupElement
    delta: SimplicialComplex
    cert: LinearQuotientsCertificate | None = None
    projdim: int | None = None
    reg: int | None = None
    lex_order: tuple = ()
    vd_order: tuple | None = None
    betti: BettiTable | None = None
    numerator: HilbertNumerator | None = None
    census_numerator: HilbertNumerator | None = None
    census: dict[int, int] | None = None
    shifted: bool | None = None
    special: SpecialClassReport | None = None
    verdicts: dict[str, str] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def ell(self) -> int:
        return self.pi.length

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.verdicts.items() if v == FAIL]

    def to_dict(self) -> dict[str, Any]:
        sys = self.sys
        inst = {
            "family": sys.family, "rank": sys.rank, "m": sys.m,
            "word": list(self.word), "pi": list(self.pi.value),
            "pi_word": list(reduced_words(sys, self.pi)[0]),
            "n": self.n, "ell": self.ell,
        }
        num = None
        if self.numerator is not None:
            num = {
                "polynomial": str(self.numerator),
                "coefficients": [[d, c] for d, c in self.numerator.coefficients.items()],
                "fine": None,
            }
            if self.census_numerator is not None and self.census_numerator.fine is not None:
                fine = sorted(self.census_numerator.fine.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
                num["fine"] = [[sorted(s), c] for s, c in fine]
        return {
            "instance": inst,
            "facets": self.delta.sorted_facets(),
            "dual_generators": _sets(self.cert.order) if self.cert else None,
            "certificate": {"sets": _sets(self.cert.sets), "d": list(self.cert.d)} if self.cert else None,
            "projdim": {"value": self.projdim, "bound": self.n - self.ell},
            "regularity": {"value": self.reg, "bound": self.n - self.ell + 1},
            "shelling": {
                "lex_dual": _sets(self.lex_order),
                "vertex_decomposition": _sets(self.vd_order) if self.vd_order is not None else None,
                "coincide": self.vd_order is not None and list(self.vd_order) == list(self.lex_order),
            },
            "betti": self.betti.rows() if self.betti else None,
            "hilbert_numerator": num,
            "census": [[k, v] for k, v in self.census.items()] if self.census is not None else None,
            "shifted": self.shifted if self.shifted is not None else skipped(),
            "special": _special_dict(self.special),
            "verdicts": dict(self.verdicts),
        }


def _special_dict(rep: SpecialClassReport | None) -> dict[str, Any] | None:
    if rep is None:
        return None
    out: dict[str, Any] = {"r": rep.r, "n": rep.n, "ell": rep.ell, "is_special": rep.is_special}
    if rep.is_special:
        out.update({
            "pivot_l": rep.pivot_l,
            "pivot_unique": rep.pivot_unique,
            "common_factor": sorted(rep.common_factor),
            "linear_vars": list(rep.linear_vars),
            "betti": [rep.betti.total(i) for i in range(rep.r)] if rep.betti else None,
            "numerator": str(rep.numerator) if rep.numerator else None,
            "census_ok": rep.census_ok,
            "is_sphere": rep.is_sphere,
            "ci_generators": _sets(rep.ci_generators.gens) if rep.ci_generators else None,
            "ci_disjoint": rep.ci_disjoint,
            "cm_dual": rep.cm_dual,
            "cm_dual_formula": rep.cm_dual_formula,
        })
    return out


def _d_propagates(d: Sequence[int]) -> bool:
    # d_i = i - 1 forces d_j = j - 1 for every j < i
    hits = [i for i, di in enumerate(d, start=1) if di == i - 1]
    if not hits:
        return True
    top = max(hits)
    return all(d[j - 1] == j - 1 for j in range(1, top + 1))


def analyze(sys: CoxeterSystem, word: Sequence[int], pi: GroupElement,
            census_limit: int = CENSUS_LIMIT, oracles: bool = True) -> AnalysisReport:
    """Run the whole pipeline on one instance.

    Raises NotContained / DegeneratePi for invalid instances. Property
    violations never raise; they show up as ``"fail"`` verdicts.
    """
    word = sys.check_word(word)
    delta = subword_complex(sys, word, pi)
    n, ell = len(word), pi.length
    rep = AnalysisReport(sys, word, pi, delta)
    v = rep.verdicts
    reps = representations(sys, word, pi)
    I = alexander_dual_ideal(delta)

    v["pure_dimension"] = _verdict(delta.is_pure and delta.dim == n - ell - 1)
    v["representation_size"] = _verdict(all(len(p) == ell for p in reps))
    v["double_dual"] = _verdict(
        set(I.gens) == {p.support for p in reps}
        and set(delta.facets) == {frozenset(range(1, n + 1)) - g for g in I.gens})

    try:
        cert = linear_quotients_certificate(I)
        v["linear_quotients"] = PASS
    except NoLinearQuotients:
        v["linear_quotients"] = FAIL
        return rep
    rep.cert = cert
    rep.projdim = cert.projdim
    rep.reg = cert.projdim + 1

    v["min_formula"] = _verdict(set_via_min_formula(reps) == list(cert.sets))
    v["sets_within_max"] = _verdict(all(
        s <= frozenset(range(1, max(u) + 1)) - u for s, u in zip(cert.sets, cert.order)))
    v["d_propagation"] = _verdict(_d_propagates(cert.d))
    v["projdim_bound"] = _verdict(projdim_bound_check(cert, n, ell))
    v["reg_bound"] = _verdict(rep.reg <= n - ell + 1)

    rep.lex_order = delta.facets
    v["lex_dual_shelling"] = _verdict(is_shelling(delta, rep.lex_order))
    try:
        rep.vd_order = vertex_decompose_shelling(sys, word, pi, check=True)
        v["vd_coincides"] = _verdict(list(rep.vd_order) == list(rep.lex_order))
    except PropertyViolation:
        v["vd_coincides"] = FAIL

    rep.betti = betti_from_certificate(cert)
    rep.numerator = hilbert_numerator(I, cert)
    if n <= census_limit:
        subwords = list(demazure_subwords(sys, word, pi, census_limit))
        rep.census_numerator = hilbert_numerator(subwords=subwords, ell=ell)
        counts: dict[int, int] = {}
        for p in subwords:
            counts[len(p)] = counts.get(len(p), 0) + 1
        rep.census = dict(sorted(counts.items()))
        v["hilbert_routes"] = _verdict(rep.census_numerator == rep.numerator
                                       and rep.census.get(ell, 0) == len(reps))
    else:
        v["hilbert_routes"] = skipped()

    support = delta.vertices
    rep.shifted = is_shifted(delta) if len(support) <= SHIFTED_MAX_VERTICES else None

    hoch_ok = oracles and n <= HOCHSTER_MAX_VARIABLES
    if hoch_ok:
        v["betti_hochster"] = _verdict(hochster_betti(I) == rep.betti)
        sr_betti = hochster_betti(minimal_nonfaces(delta))
        v["reg_hochster"] = _verdict(sr_betti.regularity == rep.reg)
        v["projdim_k_delta"] = _verdict(sr_betti.projdim + 1 == ell)
    else:
        for name in ("betti_hochster", "reg_hochster", "projdim_k_delta"):
            v[name] = skipped()

    homology = None
    if oracles and n <= HOMOLOGY_MAX_VERTICES:
        homology = simplicial_homology(delta)
        v["homology_cm"] = _verdict(homology.vanishes_below(n - ell - 1))
    else:
        v["homology_cm"] = skipped()

    if oracles and n <= CONTAINS_MAX_WORD:
        v["contains_oracle"] = _verdict(contains(sys, word, pi) == exhaustive_contains(sys, word, pi))
    else:
        v["contains_oracle"] = skipped()
    dq = demazure_product(sys, word)
    if oracles and dq.length <= BRUHAT_MAX_LENGTH:
        greedy = bruhat_leq(sys, pi, dq)
        v["bruhat_oracle"] = _verdict(greedy == exhaustive_bruhat(sys, pi, dq) == contains(sys, word, pi))
    else:
        v["bruhat_oracle"] = skipped()

    _special_suite(rep, reps, census_limit, oracles, homology)
    return rep


SPECIAL_CHECKS = ("special_factorization", "special_height", "special_betti",
                  "special_numerator", "special_census", "special_sphere",
                  "special_ci", "special_cm_dual")


def _special_suite(rep: AnalysisReport, reps, census_limit, oracles, homology) -> None:
    v = rep.verdicts
    sys, word, pi, delta = rep.sys, rep.word, rep.pi, rep.delta
    n, ell = rep.n, rep.ell
    try:
        sp = detect_and_factor(rep.cert, reps, n, ell)
    except PropertyViolation:
        v["special_factorization"] = FAIL
        return
    rep.special = sp
    if not sp.is_special:
        for name in SPECIAL_CHECKS:
            v[name] = skipped("not special")
        return
    v["special_factorization"] = PASS
    v["special_height"] = _verdict(height(alexander_dual_ideal(delta)) == 1)

    try:
        sp = special_formulas(sp)
        hoch = hochster_betti(alexander_dual_ideal(delta)) == sp.betti if oracles and n <= HOCHSTER_MAX_VARIABLES else True
        v["special_betti"] = _verdict(hoch)
    except PropertyViolation:
        v["special_betti"] = FAIL
    if sp.numerator is not None and rep.census_numerator is not None:
        v["special_numerator"] = _verdict(sp.numerator == rep.census_numerator)
    else:
        v["special_numerator"] = skipped()

    if n <= census_limit:
        ok = census_check(sys, word, pi, sp, census_limit)
        sp = replace(sp, census=rep.census, census_ok=ok)
        v["special_census"] = _verdict(ok)
    else:
        v["special_census"] = skipped()

    sphere = sphere_criterion(sys, word, pi, sp, delta if oracles else None)
    sp = replace(sp, is_sphere=sphere.verdict)
    v["special_sphere"] = _verdict(sphere.ok)

    try:
        sp = ci_and_cm(sp, delta)
        v["special_ci"] = _verdict(sp.ci_disjoint)
        cm = sp.cm_dual if oracles else None
        v["special_cm_dual"] = _verdict(None if cm is None else cm == sp.cm_dual_formula)
    except PropertyViolation:
        v["special_ci"] = FAIL
        v["special_cm_dual"] = skipped("ci failed")
    rep.special = sp
