import random

import numpy as np
import pytest

from specconn.graphs import Graph, from_edges


def dense_rho(g: Graph) -> float:
    """Independent spectral-radius oracle: dense symmetric eigensolver."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return float(np.linalg.eigvalsh(a)[-1]) if g.n > 1 else 0.0


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edges(
        n,
        [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p],
    )


@pytest.fixture
def rng():
    return random.Random(20240817)
