"""
Special-class instances where pi is a single generator.

Here x_{P_r} has degree one, so the common factor is 1 and the dual ideal is
generated by r distinct variables. The script tabulates height(I_dual),
whether I_Delta has a linear resolution (k[dual] Cohen-Macaulay) and the
principal-ideal prediction, against r.
"""

from collections import Counter

from subword_shell.complexes import alexander_dual_ideal, minimal_nonfaces, subword_complex
from subword_shell.corpus import constructor_instances
from subword_shell.coxeter import CoxeterSystem
from subword_shell.ideals import height
from subword_shell.special import has_linear_resolution
from subword_shell.words import representations

if __name__ == "__main__":
    sys = CoxeterSystem.A(3)
    table = Counter()
    for inst in constructor_instances(sys, max_reps=6):
        if inst.pi.length != 1:
            continue
        delta = subword_complex(sys, inst.word, inst.pi)
        r = len(representations(sys, inst.word, inst.pi))
        dual = alexander_dual_ideal(delta)
        table[r, height(dual), has_linear_resolution(minimal_nonfaces(delta))] += 1
    print(f"{'r':>3} {'height':>7} {'CM dual':>8} {'r == 1':>7} {'count':>6}")
    for (r, h, cm), k in sorted(table.items()):
        print(f"{r:>3} {h:>7} {str(cm):>8} {str(r == 1):>7} {k:>6}")
