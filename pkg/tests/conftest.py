from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from subword_shell.coxeter import CoxeterSystem, element_of_word

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

SMALL_SYSTEMS = [
    CoxeterSystem.A(1), CoxeterSystem.A(2), CoxeterSystem.A(3),
    CoxeterSystem.B(2), CoxeterSystem.B(3),
    CoxeterSystem.I2(3), CoxeterSystem.I2(5), CoxeterSystem.I2(6),
]

systems = st.sampled_from(SMALL_SYSTEMS)


def words(sys: CoxeterSystem, min_size: int = 0, max_size: int = 8):
    return st.lists(st.sampled_from(list(sys.generators)), min_size=min_size, max_size=max_size).map(tuple)


@st.composite
def instances(draw, max_word: int = 8, system=None):
    """(sys, Q, pi) with pi != e the product of a random subword of Q."""
    sys = system or draw(systems)
    Q = draw(words(sys, 1, max_word))
    mask = draw(st.lists(st.booleans(), min_size=len(Q), max_size=len(Q)))
    pi = element_of_word(sys, [s for s, keep in zip(Q, mask) if keep])
    if pi.length == 0:
        pi = element_of_word(sys, Q[:1])
    return sys, Q, pi


@st.composite
def elements(draw, sys=None):
    sys = sys or draw(systems)
    return sys, draw(st.sampled_from(sys.elements()))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
