"""
Random and constructor sweeps over several Coxeter systems.

    python3 scripts/sweep.py                  # default table
    python3 scripts/sweep.py --count 2000 --max-word 9 --out sweep.json
    python3 scripts/sweep.py --full           # also the B(3) constructor family, ~4 min
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from subword_shell.corpus import VerifyConfig, run_verify


@dataclass
class SweepConfig:
    count: int = 500
    max_word: int = 8
    seed: int = 0
    constructor: bool = True
    full: bool = False


SYSTEMS = [("A", 2, None), ("A", 3, None), ("A", 4, None), ("B", 2, None),
           ("B", 3, None), ("I2", 2, 5), ("I2", 2, 6)]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--max-word", type=int, default=SweepConfig.max_word)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--no-constructor", action="store_true")
    ap.add_argument("--full", action="store_true")
    ap.add_argument("--out")
    a = ap.parse_args()
    cfg = SweepConfig(a.count, a.max_word, a.seed, not a.no_constructor, a.full)

    rows = []
    for family, rank, m in SYSTEMS:
        heavy = (family, rank) in {("A", 4), ("B", 3)}
        modes = [False, True] if cfg.constructor and (cfg.full or not heavy) else [False]
        for constructor in modes:
            vc = VerifyConfig(family=family, rank=rank, m=m, count=cfg.count,
                              max_word=cfg.max_word, seed=cfg.seed, constructor=constructor)
            t0 = time.perf_counter()
            s = run_verify(vc)
            failing = sorted({c for f in s.failures for c in f["checks"]})
            rows.append({
                "system": str(vc.system()), "corpus": "constructor" if constructor else "random",
                "instances": s.instances, "special": s.special, "failing_instances": len(s.failures),
                "failing_checks": failing, "seconds": round(time.perf_counter() - t0, 2),
            })
            r = rows[-1]
            print(f"{r['system']:8} {r['corpus']:12} {r['instances']:6} special {r['special']:6} "
                  f"fail {r['failing_instances']:5} {','.join(failing) or '-':32} {r['seconds']:6.1f}s")
    if a.out:
        with open(a.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
