from __future__ import annotations

import random

import pytest

from factorlab import Graph

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def random_multigraph(rng: random.Random, n: int, m: int, multi: bool = True) -> Graph:
    """Random loopless graph on ``n`` vertices with ``m`` edges (parallel edges allowed if ``multi``)."""
    pairs: list[tuple[int, int]] = []
    seen = set()
    while len(pairs) < m:
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        if not multi and key in seen:
            if len(seen) == n * (n - 1) // 2:
                break
            continue
        seen.add(key)
        pairs.append((u, v))
    return Graph(n, pairs)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240607)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")
