"""Seeded instance corpora and the randomized verification sweep."""

from __future__ import annotations

import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .analysis import FAIL, PASS, analyze
from .coxeter import CoxeterSystem, GroupElement, element_of_word, reduced_words
from .words import CENSUS_LIMIT, contains, format_word, make_repeated_word

__all__ = [
    "Instance", "random_instances", "constructor_instances", "VerifyConfig",
    "VerifySummary", "run_verify", "minimize", "reproducer",
]

THREADS_ENV = "SUBWORD_SHELL_THREADS"


@dataclass(frozen=True)
class Instance:
    sys: CoxeterSystem
    word: tuple[int, ...]
    pi: GroupElement


def random_instances(sys: CoxeterSystem, count: int, max_word: int, seed: int) -> list[Instance]:
    """``count`` random (Q, pi) with 1 <= |Q| <= max_word and pi != e contained in Q.

    pi is the product of a random subword of Q, so containment is automatic.
    """
    rng = random.Random(seed)
    gens = list(sys.generators)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_word)
        word = tuple(rng.choice(gens) for _ in range(n))
        pick = [s for s in word if rng.random() < 0.5]
        pi = element_of_word(sys, pick)
        if pi.length == 0:
            continue
        out.append(Instance(sys, word, pi))
    return out


def constructor_instances(sys: CoxeterSystem, max_reps: int = 4) -> Iterator[Instance]:
    """Every reduced word of every pi != e with one letter repeated 1..max_reps times."""
    for pi in sys.elements():
        if pi.length == 0:
            continue
        for rw in reduced_words(sys, pi):
            for i in range(1, len(rw) + 1):
                for reps in range(1, max_reps + 1):
                    yield Instance(sys, make_repeated_word(sys, rw, i, reps), pi)


def reproducer(inst: Instance) -> str:
    sys = inst.sys
    fam = f"--family I2 --m {sys.m}" if sys.family == "I2" else f"--family {sys.family} --rank {sys.rank}"
    pi_word = format_word(reduced_words(sys, inst.pi)[0])
    return f"analyze {fam} --word {format_word(inst.word)} --pi-word {pi_word}"


def minimize(inst: Instance, failing: set[str], census_limit: int = CENSUS_LIMIT) -> Instance:
    """Drop letters of Q while pi stays contained and some of ``failing`` still fails."""
    current = inst
    changed = True
    while changed:
        changed = False
        for k in range(len(current.word)):
            word = current.word[:k] + current.word[k + 1:]
            if not contains(current.sys, word, current.pi):
                continue
            rep = analyze(current.sys, word, current.pi, census_limit)
            if failing & set(rep.failures):
                current = Instance(current.sys, word, current.pi)
                changed = True
                break
    return current


@dataclass
class VerifyConfig:
    family: str = "A"
    rank: int = 3
    m: int | None = None
    count: int = 500
    max_word: int = 8
    seed: int = 0
    census_limit: int = CENSUS_LIMIT
    constructor: bool = False
    max_reps: int = 4
    workers: int | None = None

    def system(self) -> CoxeterSystem:
        if self.family == "I2":
            return CoxeterSystem.I2(self.m)
        return CoxeterSystem(self.family, self.rank)

    def instances(self) -> list[Instance]:
        sys = self.system()
        if self.constructor:
            return list(constructor_instances(sys, self.max_reps))
        return random_instances(sys, self.count, self.max_word, self.seed)


@dataclass
class VerifySummary:
    instances: int = 0
    special: int = 0
    counts: dict[str, Counter] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "instances": self.instances,
            "special": self.special,
            "checks": {name: dict(sorted(c.items())) for name, c in sorted(self.counts.items())},
            "failures": self.failures,
            "ok": self.ok,
        }


def _analyze_one(args) -> tuple[dict[str, str], bool]:
    inst, census_limit = args
    rep = analyze(inst.sys, inst.word, inst.pi, census_limit)
    return rep.verdicts, bool(rep.special and rep.special.is_special)


def _workers(config: VerifyConfig) -> int:
    cap = os.environ.get(THREADS_ENV)
    n = config.workers or (int(cap) if cap else os.cpu_count() or 1)
    if cap:
        n = min(n, int(cap))
    return max(1, n)


def run_verify(config: VerifyConfig) -> VerifySummary:
    """Analyze every corpus instance; results are merged in instance order."""
    insts = config.instances()
    jobs = [(inst, config.census_limit) for inst in insts]
    workers = _workers(config)
    if workers > 1 and len(jobs) > 50:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_analyze_one, jobs, chunksize=16))
    else:
        results = [_analyze_one(j) for j in jobs]

    summary = VerifySummary(instances=len(insts))
    for inst, (verdicts, special) in zip(insts, results):
        summary.special += special
        for name, verdict in verdicts.items():
            kind = verdict if verdict in (PASS, FAIL) else "skipped"
            summary.counts.setdefault(name, Counter())[kind] += 1
        bad = {k for k, v in verdicts.items() if v == FAIL}
        if bad:
            small = minimize(inst, bad, config.census_limit)
            summary.failures.append({
                "word": list(inst.word), "pi": list(inst.pi.value),
                "checks": sorted(bad), "reproducer": reproducer(small),
            })
    return summary
