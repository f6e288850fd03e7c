import sys
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from floer_gamma.engine import tensor_power  # noqa: E402
from floer_gamma.model import build_9_42  # noqa: E402


@lru_cache(maxsize=None)
def power_942(m: int):
    """Tensor powers of 9_42 shared across test modules."""
    return tensor_power(build_9_42(), m)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
