from collections import Counter
from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"

# criterion number -> (passed, detail), filled by test_acceptance
CRITERIA: dict[int, tuple[bool, str]] = {}


def read_golden(path: Path) -> dict[int, list[Counter]]:
    """[eU] sections; each following line is one radical layer of v@d entries."""
    out, cur = {}, None
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[e"):
            cur = int(line[2:-1])
            out[cur] = []
            continue
        out[cur].append(Counter(tuple(int(x) for x in tok.split("@")) for tok in line.split()))
    return out


@pytest.fixture(scope="session")
def triangle_golden():
    return read_golden(GOLDEN_DIR / "triangle_piw.txt")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, detail = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
