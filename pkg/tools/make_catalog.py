"""Regenerate the frozen graph catalogs under src/factorlab/data/."""

import sys
import time
from pathlib import Path

from factorlab.catalog import (BIPARTITE_CUBIC_COUNTS, CUBIC_SIMPLE_COUNTS, cubic_graphs,
                               cubic_multigraphs)
from factorlab.graph import write_edge_list, write_graph6

OUT = Path(__file__).resolve().parents[1] / "src" / "factorlab" / "data"


def main() -> int:
    for n in range(4, 13, 2):
        gs = cubic_graphs(n)
        assert len(gs) == CUBIC_SIMPLE_COUNTS[n], (n, len(gs))
        (OUT / f"cubic_{n}.g6").write_text("".join(write_graph6(g) + "\n" for g in gs))
        print(f"cubic n={n}: {len(gs)}")
    for n in range(6, 15, 2):
        t = time.time()
        gs = cubic_graphs(n, bipartite=True)
        assert len(gs) == BIPARTITE_CUBIC_COUNTS[n], (n, len(gs))
        (OUT / f"bipartite_cubic_{n}.g6").write_text("".join(write_graph6(g) + "\n" for g in gs))
        print(f"bipartite cubic n={n}: {len(gs)} ({time.time() - t:.1f}s)")
    for n in (2, 4, 6):
        gs = [g for g in cubic_multigraphs(n) if g.has_multiedge()]
        (OUT / f"cubic_multi_{n}.txt").write_text("\n".join(write_edge_list(g) for g in gs))
        print(f"cubic multigraphs with a multiedge n={n}: {len(gs)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
