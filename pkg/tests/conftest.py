import random
import sys

import pytest

from toricauto.fan import random_blowup_fan


def random_fans(n: int, seed: int, max_rays: int = 20):
    rng = random.Random(seed)
    return [random_blowup_fan(rng, max_rays=max_rays, max_n=5) for _ in range(n)]


@pytest.fixture(scope="session")
def fans_small():
    return random_fans(60, seed=11, max_rays=12)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for name, mod in list(sys.modules.items()):
        if name.endswith("test_acceptance"):
            lines += getattr(mod, "ACCEPTANCE_LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
