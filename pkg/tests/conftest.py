import pytest

from hooklens.partitions import partition_numbers


def coin_change_partition_counts(limit: int) -> list[int]:
    """p(0..limit) by the unbounded-knapsack recurrence; independent of the pentagonal table."""
    counts = [1] + [0] * limit
    for part in range(1, limit + 1):
        for total in range(part, limit + 1):
            counts[total] += counts[total - part]
    return counts


@pytest.fixture(scope="session")
def pn_oracle():
    return coin_change_partition_counts(600)


@pytest.fixture(scope="session")
def pn_table():
    return partition_numbers(600)


ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number: int, title: str, passed: bool, detail: str = "") -> None:
    line = f"criterion {number} [{title}]: {'PASS' if passed else 'FAIL'}"
    if detail:
        line += f" -- {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
