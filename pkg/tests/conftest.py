from __future__ import annotations

import pytest

from spectra.catalog import derive_sporadic_maximal
from spectra.graphcore import Graph, add_vertex, canonical_pair

# acceptance outcomes, filled by test_acceptance and echoed after the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def all_graphs_upto(n_max: int) -> dict[int, list[Graph]]:
    """Every graph (connected or not) up to isomorphism, by one-vertex augmentation with any mask."""
    levels = {1: [Graph(1, (0,))]}
    for n in range(2, n_max + 1):
        seen: dict[bytes, Graph] = {}
        for g in levels[n - 1]:
            for m in range(1 << g.n):
                cert, canon = canonical_pair(add_vertex(g, m))
                seen.setdefault(cert, canon)
        levels[n] = [seen[c] for c in sorted(seen)]
    return levels


@pytest.fixture(scope="session")
def all_graphs7() -> dict[int, list[Graph]]:
    return all_graphs_upto(7)


@pytest.fixture(scope="session")
def catalog14():
    return derive_sporadic_maximal(14)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {msg}")
