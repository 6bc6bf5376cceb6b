import json
import random
from pathlib import Path

import pytest

from lcskit import fixtures

FROZEN = json.loads((Path(__file__).parent / "data" / "frozen_oracles.json").read_text())


@pytest.fixture(scope="session")
def frozen():
    return FROZEN


def generated_fixtures(count: int, seed: int = 20240601, max_n: int = 10):
    rng = random.Random(seed)
    return [fixtures.random_cycle_separated(rng, max_n=max_n) for _ in range(count)]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
