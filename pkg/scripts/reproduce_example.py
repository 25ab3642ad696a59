"""Print the full analysis of the eight-letter S_4 example and its repeated-letter cousin."""

from subword_shell.analysis import analyze
from subword_shell.cli import render_text
from subword_shell.coxeter import CoxeterSystem, element_of_word

A3 = CoxeterSystem.A(3)

CASES = [
    ((1, 2, 1, 3, 1, 2, 3, 1), (1, 2, 3, 2)),
    ((1, 3, 3, 1, 2, 3), (1, 2, 3, 2)),
    ((1, 2, 2, 2, 3), (1, 2, 3)),
]

if __name__ == "__main__":
    for Q, pi_word in CASES:
        rep = analyze(A3, Q, element_of_word(A3, pi_word))
        print(render_text(rep))
        print("=" * 72)
