import pytest
from hypothesis import strategies as st

from lamplighter.an_ring import AnContext, AnElement
from lamplighter.ring import Z, Zmod

# (n, ring) pairs where the rank hypothesis holds
CONTEXTS = [
    (1, Z),
    (1, Zmod(2)),
    (2, Z),
    (2, Zmod(2)),
    (2, Zmod(5)),
    (2, Zmod(6)),
    (3, Zmod(5)),
    (3, Zmod(9)),
    (4, Zmod(7)),
]

ACCEPTANCE_LINES = []


@st.composite
def an_elements(draw, ctx: AnContext, max_terms=8, spread=5):
    laurent = {}
    poles = {}
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(st.integers(-20, 20))
        l = draw(st.integers(0, ctx.n - 1))
        if l == 0 or draw(st.booleans()):
            j = draw(st.integers(-spread, spread))
            laurent[j] = laurent.get(j, 0) + c
        else:
            j = draw(st.integers(1, spread))
            poles[(l, j)] = poles.get((l, j), 0) + c
    return AnElement(ctx, laurent, poles)


@st.composite
def heights(draw, n, bound=4):
    return tuple(draw(st.integers(-bound, bound)) for _ in range(n))


@pytest.fixture
def record():
    """Collects one summary line per acceptance criterion."""

    def _record(label, passed, detail=""):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] {label}" + (f": {detail}" if detail else ""))

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
