"""Exhaustive conditional-connectivity computation with cut certificates.

Residual-degree semantics (the one choice with real behavioral impact): a
good-neighbor condition of threshold g requires every vertex that survives
the deletion to keep at least g neighbors *inside the deleted graph*, not in
the original graph. All searches here use that reading.

Modes:
  CLASSIC    smallest F leaving a disconnected graph or a single vertex
  COMPONENT  smallest F leaving >= r components or fewer than r vertices
  NEIGHBOR   smallest nonempty F disconnecting with residual degrees >= g
  FULL       NEIGHBOR strengthened to >= r components

Searches enumerate candidate sets by increasing size and lexicographically
within a size, so the returned certificate is the lexicographically least
minimum cut. Complete graphs have no valid cut in NEIGHBOR/FULL mode; that is
reported as None rather than an invented value.
"""

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple

from . import kernels
from .graphs import Graph, is_connected

SEARCH_MAX_VERTICES = 20


class CutMode(IntEnum):
    CLASSIC = 0
    COMPONENT = 1
    NEIGHBOR = 2
    FULL = 3


@dataclass(frozen=True)
class CutQuery:
    g: int = 0
    r: int = 2
    mode: CutMode = CutMode.FULL

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("good-neighbor threshold g must be >= 0")
        if self.r < 2:
            raise ValueError("component threshold r must be >= 2")


@dataclass(frozen=True)
class CutCertificate:
    """Witness for a valid cut: the set, the shattering, residual degrees."""

    cut: int  # vertex bitmask
    component_sizes: tuple[int, ...]  # descending
    min_residual_degree: int

    @property
    def size(self) -> int:
        return self.cut.bit_count()


class MinCut(NamedTuple):
    value: int
    certificate: CutCertificate


def _certificate(g: Graph, fmask: int) -> CutCertificate:
    comps = kernels.components_masks(g.adj, g.n, fmask)
    sizes = tuple(sorted((c.bit_count() for c in comps), reverse=True))
    surv = g.vertex_mask & ~fmask
    min_res = min(
        ((g.adj[v] & surv).bit_count() for v in range(g.n) if surv >> v & 1),
        default=0,
    )
    return CutCertificate(fmask, sizes, min_res)


def is_valid_cut(g: Graph, fmask: int, query: CutQuery) -> CutCertificate | None:
    """Certificate if fmask satisfies the mode's predicate, else None.

    NEIGHBOR/FULL cuts must be nonempty proper subsets; COMPONENT mode also
    accepts deletions leaving fewer than r vertices (including all of them).
    """
    fmask &= g.vertex_mask
    if kernels.cut_valid(g.adj, g.n, fmask, query.g, query.r, int(query.mode)):
        return _certificate(g, fmask)
    return None


def min_cut(g: Graph, query: CutQuery) -> MinCut | None:
    """Minimum-size valid cut with its certificate; None if no set qualifies.

    Exhaustive bitset search, increasing size, lexicographic within a size;
    the first hit is returned, so the certificate is the lexicographically
    least minimizer.
    """
    if g.n > SEARCH_MAX_VERTICES:
        raise ValueError(
            f"exhaustive cut search is capped at {SEARCH_MAX_VERTICES} vertices"
        )
    if not is_connected(g):
        raise ValueError("cut search expects a connected graph")
    fmask = kernels.min_cut_search(g.adj, g.n, query.g, query.r, int(query.mode))
    if fmask < 0:
        return None
    return MinCut(fmask.bit_count(), _certificate(g, fmask))


def vertex_connectivity(g: Graph) -> int:
    result = min_cut(g, CutQuery(mode=CutMode.CLASSIC))
    assert result is not None  # classic mode always has a cut
    return result.value


def edge_connectivity(g: Graph) -> int:
    """Exact edge connectivity via unit-capacity max-flow from vertex 0."""
    if g.n == 1:
        return 0
    best = g.n * g.n
    for t in range(1, g.n):
        best = min(best, _max_flow(g, 0, t))
    return best


def _max_flow(g: Graph, s: int, t: int) -> int:
    # Edmonds-Karp on the doubled directed graph, capacity 1 per arc
    cap = [[0] * g.n for _ in range(g.n)]
    for u in range(g.n):
        for v in range(g.n):
            if g.adj[u] >> v & 1:
                cap[u][v] = 1
    flow = 0
    while True:
        parent = [-1] * g.n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            u = queue.popleft()
            for v in range(g.n):
                if parent[v] < 0 and cap[u][v] > 0:
                    parent[v] = u
                    queue.append(v)
        if parent[t] < 0:
            return flow
        v = t
        while v != s:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        flow += 1
