from __future__ import annotations

from fractions import Fraction

import pytest

from pivotlab.problems import Certifier, MaxCutInstance, SwopInstance, independent_set_instance

ACCEPTANCE_LINES: dict[int, str] = {}


def record_acceptance(number: int, ok: bool, title: str, detail: str) -> None:
    ACCEPTANCE_LINES[number] = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture
def edge_wis() -> SwopInstance:
    """WIS on a single edge {u, v} with weights (1, 2) and 3-swaps."""
    return independent_set_instance(2, [(0, 1)], [1, 2], c=3)


@pytest.fixture
def cycle5() -> SwopInstance:
    return independent_set_instance(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], [1] * 5, c=3)


@pytest.fixture
def single_edge_cut() -> MaxCutInstance:
    return MaxCutInstance(2, [(0, 1)], [4])


def all_subsets(n: int, weights, c: int, sense=None) -> SwopInstance:
    kw = {} if sense is None else {"sense": sense}
    return SwopInstance(n, (), tuple(Fraction(w) for w in weights), (Certifier("all-subsets"),), c,
                        include_edges=False, **kw)
