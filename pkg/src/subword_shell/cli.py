"""
Command-line front end.

    subword-shell analyze --family A --rank 3 --word 1,2,1,3,1,2,3,1 --pi-word 1,2,3,2
    subword-shell verify --family A --rank 3 --count 500 --max-word 8 --seed 0
    subword-shell census --family A --rank 3 --word 1,2,2,2,3 --pi-word 1,2,3
    subword-shell special --family A --rank 3 --word 1,2,2,2,3 --pi-word 1,2,3

Exit codes: 0 success, 1 property violation, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys
from dataclasses import dataclass
from typing import Sequence

from .analysis import AnalysisReport, analyze
from .corpus import VerifyConfig, run_verify
from .coxeter import CoxeterSystem, GroupElement, element_of_word, is_reduced_word
from .errors import SubwordShellError
from .ideals import hilbert_numerator, monomial_str
from .words import CENSUS_LIMIT, contains, demazure_census, format_word, parse_word

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass(frozen=True)
class InstanceSpec:
    sys: CoxeterSystem
    word: tuple[int, ...]
    pi: GroupElement


def _system(args) -> CoxeterSystem:
    try:
        if args.family == "I2":
            if args.m is None:
                raise InputError("--family I2 needs --m")
            return CoxeterSystem.I2(args.m)
        if args.rank is None:
            raise InputError(f"--family {args.family} needs --rank")
        return CoxeterSystem(args.family, args.rank)
    except ValueError as e:
        raise InputError(str(e)) from e


def parse_instance(args) -> InstanceSpec:
    sys = _system(args)
    try:
        word = sys.check_word(parse_word(args.word))
        if args.pi_word is not None:
            pw = sys.check_word(parse_word(args.pi_word))
            if not is_reduced_word(sys, pw):
                raise InputError(f"--pi-word {args.pi_word} is not reduced")
            pi = element_of_word(sys, pw)
        elif args.pi is not None:
            pi = sys.element(parse_word(args.pi))
        else:
            raise InputError("give --pi or --pi-word")
    except (ValueError, SubwordShellError) as e:
        raise InputError(str(e)) from e
    return InstanceSpec(sys, word, pi)


def _table(rows: Sequence[Sequence[object]]) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def render_text(rep: AnalysisReport) -> str:
    d = rep.to_dict()
    inst = d["instance"]
    out = [
        f"system   {rep.sys}",
        f"word     {format_word(rep.word)}  (n = {rep.n})",
        f"pi       {inst['pi']}  reduced word {format_word(inst['pi_word'])}  (length {rep.ell})",
        "",
    ]
    rows = [["i", "facet", "dual generator", "set", "d"]]
    cert = rep.cert
    for i, facet in enumerate(rep.lex_order):
        gen = monomial_str(cert.order[i]) if cert else "-"
        s = _fmt_set(cert.sets[i]) if cert else "-"
        rows.append([i + 1, _fmt_set(facet), gen, s, len(cert.sets[i]) if cert else "-"])
    out += [_table(rows), ""]
    out.append(f"projdim(I_dual) = {rep.projdim}  (bound n - l = {rep.n - rep.ell})")
    out.append(f"reg(I_Delta)    = {rep.reg}  (bound n - l + 1 = {rep.n - rep.ell + 1})")
    out.append(f"vertex decomposition agrees with lex-dual shelling: {d['shelling']['coincide']}")
    if rep.betti:
        out.append("betti    " + ", ".join(f"b_{i},{j} = {v}" for i, j, v in rep.betti.rows()))
    if rep.numerator is not None:
        out.append(f"K(t)     {rep.numerator}")
    if rep.census is not None:
        out.append("census   " + ", ".join(f"|P|={k}: {v}" for k, v in rep.census.items()))
    out.append(f"shifted  {d['shifted']}")
    out.append("")
    out.append(render_special(rep))
    out.append("")
    out.append(_table([["check", "verdict"]] + [[k, v] for k, v in rep.verdicts.items()]))
    return "\n".join(out)


def render_special(rep: AnalysisReport) -> str:
    sp = rep.special
    if sp is None:
        return "special class: not evaluated"
    if not sp.is_special:
        return f"special class: no (r = {sp.r}, bound n - l + 1 = {sp.n - sp.ell + 1}, d_r = {sp.cert.d[-1]})"
    lines = [
        f"special class: yes (r = {sp.r})",
        f"  pivot l          {sp.pivot_l}" + ("" if sp.pivot_unique else "  (r = 1: any variable works)"),
        f"  factorisation    {monomial_str(sp.common_factor)} * ("
        + ", ".join(f"x{v}" for v in sp.linear_vars) + ")",
    ]
    if sp.betti:
        lines.append("  betti            " + ", ".join(str(sp.betti.total(i)) for i in range(sp.r)))
    if sp.numerator is not None:
        lines.append(f"  K(t)             {sp.numerator}")
    lines.append(f"  census ok        {sp.census_ok}")
    lines.append(f"  sphere           {sp.is_sphere}  (homology-verified)")
    if sp.ci_generators is not None:
        lines.append(f"  I_Delta (CI)     {sp.ci_generators}  disjoint supports: {sp.ci_disjoint}")
    lines.append(f"  k[dual] CM       {sp.cm_dual}  (principal-ideal prediction: {sp.cm_dual_formula})")
    return "\n".join(lines)


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def cmd_analyze(args) -> int:
    inst = parse_instance(args)
    if not contains(inst.sys, inst.word, inst.pi):
        raise InputError(f"word {format_word(inst.word)} does not contain pi")
    try:
        rep = analyze(inst.sys, inst.word, inst.pi, args.census_limit)
    except SubwordShellError as e:
        raise InputError(str(e)) from e
    _emit(rep.to_dict(), args.format, render_text(rep))
    return EXIT_VIOLATION if rep.failures else EXIT_OK


def cmd_special(args) -> int:
    inst = parse_instance(args)
    if not contains(inst.sys, inst.word, inst.pi):
        raise InputError(f"word {format_word(inst.word)} does not contain pi")
    try:
        rep = analyze(inst.sys, inst.word, inst.pi, args.census_limit)
    except SubwordShellError as e:
        raise InputError(str(e)) from e
    special_checks = {k: v for k, v in rep.verdicts.items() if k.startswith("special_")}
    obj = {"instance": rep.to_dict()["instance"], "special": rep.to_dict()["special"],
           "verdicts": special_checks}
    text = render_special(rep) + "\n\n" + _table([["check", "verdict"]] + [[k, v] for k, v in special_checks.items()])
    _emit(obj, args.format, text)
    return EXIT_VIOLATION if any(v == "fail" for v in special_checks.values()) else EXIT_OK


def cmd_census(args) -> int:
    inst = parse_instance(args)
    try:
        census = demazure_census(inst.sys, inst.word, inst.pi, args.census_limit)
    except SubwordShellError as e:
        raise InputError(str(e)) from e
    num = hilbert_numerator(census=census, ell=inst.pi.length)
    obj = {"word": list(inst.word), "pi": list(inst.pi.value), "ell": inst.pi.length,
           "census": [[k, v] for k, v in census.items()], "numerator": str(num)}
    text = "\n".join([_table([["|P|", "count"]] + [[k, v] for k, v in census.items()]),
                      f"K(t) = {num}"])
    _emit(obj, args.format, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.family == "I2" and args.m is None:
        raise InputError("--family I2 needs --m")
    cfg = VerifyConfig(family=args.family, rank=args.rank or 3, m=args.m, count=args.count,
                       max_word=args.max_word, seed=args.seed, census_limit=args.census_limit,
                       constructor=args.constructor, max_reps=args.max_reps)
    try:
        cfg.system()
    except ValueError as e:
        raise InputError(str(e)) from e
    summary = run_verify(cfg)
    d = summary.to_dict()
    rows = [["check", "pass", "fail", "skipped"]]
    for name, c in d["checks"].items():
        rows.append([name, c.get("pass", 0), c.get("fail", 0), c.get("skipped", 0)])
    lines = [f"instances {d['instances']}  special {d['special']}", ""]
    if len(rows) > 1:
        lines.append(_table(rows))
    for f in d["failures"]:
        lines.append(f"FAIL {','.join(f['checks'])}: reproduce with `{f['reproducer']}`")
    _emit(d, args.format, "\n".join(lines))
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="subword-shell", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, instance=True):
        sp.add_argument("--family", choices=["A", "B", "I2"], required=True)
        sp.add_argument("--rank", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--census-limit", type=int, default=CENSUS_LIMIT)
        if instance:
            sp.add_argument("--word", required=True, help="comma-separated generator indices")
            g = sp.add_mutually_exclusive_group(required=True)
            g.add_argument("--pi", help="one-line (signed) permutation, or 'k,f' for I2")
            g.add_argument("--pi-word", help="a reduced word for pi")

    for name, fn in [("analyze", cmd_analyze), ("census", cmd_census), ("special", cmd_special)]:
        sp = sub.add_parser(name)
        common(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("verify")
    common(sp, instance=False)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=500)
    sp.add_argument("--max-word", type=int, default=8)
    sp.add_argument("--constructor", action="store_true",
                    help="sweep repeated-letter words built from every reduced word instead")
    sp.add_argument("--max-reps", type=int, default=4)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=_sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    _sys.exit(main())
