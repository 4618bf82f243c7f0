import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def signed_perms(draw, min_n=0, max_n=8):
    """Unframed signed permutations."""
    n = draw(st.integers(min_n, max_n))
    mags = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return tuple(-m if s else m for m, s in zip(mags, signs))


def random_signed(rng: random.Random, n: int) -> tuple[int, ...]:
    mags = list(range(1, n + 1))
    rng.shuffle(mags)
    return tuple(-m if rng.random() < 0.5 else m for m in mags)


@pytest.fixture
def rng():
    return random.Random(20261014)


# -- acceptance reporting ------------------------------------------------------

ACCEPTANCE: dict[int, str] = {}


def record(number: int, ok: bool, detail: str) -> bool:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
