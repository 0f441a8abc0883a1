import random

import pytest

from hdthompson.words import PI, TWO_V, Generator, Word

_ACCEPTANCE_LINES = []


def random_pi_word(rng: random.Random, max_len=12, index_bound=4, sigma=True, signed=False):
    kinds = "vhs" if sigma else "vh"
    out = []
    for _ in range(rng.randint(0, max_len)):
        k = rng.choice(kinds)
        sign = -1 if signed and k != "s" and rng.random() < 0.4 else 1
        out.append(Generator(k, rng.randint(0, index_bound), sign))
    return Word(PI, tuple(out))


def random_2v_word(rng: random.Random, max_len=8, index_bound=3):
    out = []
    for _ in range(rng.randint(0, max_len)):
        k = rng.choice("ABCpP")
        sign = -1 if k in "ABC" and rng.random() < 0.5 else 1
        out.append(Generator(k, rng.randint(0, index_bound), sign))
    return Word(TWO_V, tuple(out))


@pytest.fixture
def rng():
    return random.Random(20261019)


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
