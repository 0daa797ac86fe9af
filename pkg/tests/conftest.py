import random

import pytest
from hypothesis import strategies as st

from po2.oracle import random_element


def element_from(seed: int):
    return random_element(seed, random.Random(seed).randint(0, 6))


seeds = st.integers(min_value=0, max_value=2**32 - 1)
elements = seeds.map(element_from)


@pytest.fixture
def rng():
    return random.Random(1234)


ACCEPTANCE_RESULTS: dict = {}


def record(criterion: int, title: str, violations: int, detail: str = "") -> None:
    ACCEPTANCE_RESULTS[criterion] = (title, violations, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        title, violations, detail = ACCEPTANCE_RESULTS[k]
        status = "PASS" if violations == 0 else "FAIL"
        terminalreporter.write_line(f"[{status}] {k:>2}. {title}: violations={violations} {detail}".rstrip())
