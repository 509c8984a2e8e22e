"""Immutable bitset graphs: graph6 codec, components, degrees, canonical forms.

Vertices are labeled 0..n-1 and every neighborhood is a Python int used as a
bitmask, so set algebra on neighborhoods is single machine-word work for the
supported range n <= 64. Canonical labeling (and therefore isomorphism
testing) is exact for n <= 12, which covers everything the verification
pipeline compares.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, NamedTuple

from . import kernels

MAX_VERTICES = 64
CANON_MAX_VERTICES = 12


class GraphFormatError(ValueError):
    """Malformed graph6 input."""


# ---------------------------------------------------------------------------
# vertex-set helpers (a VertexSet is a plain int bitmask)

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on labeled vertices 0..n-1.

    adj[v] is the neighbor bitmask of v. Instances are immutable (all edits
    return new graphs) and safe to share between workers.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbor bits of vertex {v} out of range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    # -- basic queries ------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return vertices_of(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"


# ---------------------------------------------------------------------------
# construction helpers

def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.adj)
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def remove_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.adj)
    for u, v in edges:
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    rows = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, tuple(rows))


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    a_mask = (1 << a.n) - 1
    b_mask = ((1 << b.n) - 1) << a.n
    rows = [row | b_mask for row in a.adj]
    rows += [(row << a.n) | a_mask for row in b.adj]
    return Graph(a.n + b.n, tuple(rows))


def permute(g: Graph, perm: Iterable[int]) -> Graph:
    """Relabel: vertex v becomes perm[v]."""
    p = list(perm)
    rows = [0] * g.n
    for v in range(g.n):
        acc = 0
        for w in bits(g.adj[v]):
            acc |= 1 << p[w]
        rows[p[v]] = acc
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Induced subgraph on the masked vertices, relabeled in ascending order."""
    vs = vertices_of(mask)
    if not vs:
        raise ValueError("induced subgraph needs at least one vertex")
    index = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        acc = 0
        for w in bits(g.adj[v] & mask):
            acc |= 1 << index[w]
        rows.append(acc)
    return Graph(len(vs), tuple(rows))


# ---------------------------------------------------------------------------
# graph6 codec
#
# One printable-ASCII record per graph: size byte n+63 for n <= 62 (decode
# also accepts the '~'-prefixed multi-byte size header), then the upper
# triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit
# groups, each offset by 63; the final group is zero-padded.

def graph6_encode(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 encoding supports n <= 62 (single size byte)")
    out = [chr(g.n + 63)]
    group = 0
    nbits = 0
    for col in range(1, g.n):
        for row in range(col):
            group = group << 1 | (g.adj[row] >> col & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr((group << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 record")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"non-printable graph6 byte {ord(ch)}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise GraphFormatError("8-byte graph6 size header exceeds the n <= 64 cap")
        if len(s) < 4:
            raise GraphFormatError("truncated multi-byte graph6 size header")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        payload = s[4:]
    else:
        n = ord(s[0]) - 63
        payload = s[1:]
    if n == 0:
        raise GraphFormatError("graph6 record encodes an empty vertex set")
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph6 order {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(payload) != want:
        raise GraphFormatError(
            f"graph6 payload length {len(payload)} != {want} for order {n}"
        )
    rows = [0] * n
    i = 0
    for ch in payload:
        group = ord(ch) - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = group >> shift & 1
            if i < nbits:
                if bit:
                    row, col = _triangle_position(i)
                    rows[row] |= 1 << col
                    rows[col] |= 1 << row
            elif bit:
                raise GraphFormatError("nonzero padding bits in final graph6 group")
            i += 1
    return Graph(n, tuple(rows))


def _triangle_position(i: int) -> tuple[int, int]:
    # inverse of the column-major upper-triangle enumeration
    col = 1
    base = 0
    while base + col <= i:
        base += col
        col += 1
    return i - base, col


# ---------------------------------------------------------------------------
# components / degrees

def components(g: Graph, removed: int = 0) -> list[int]:
    """Connected components of g minus the removed vertices.

    Returns component masks sorted by least member; empty list iff every
    vertex was removed.
    """
    return kernels.components_masks(g.adj, g.n, removed & g.vertex_mask)


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


class DegreeProfile(NamedTuple):
    min_degree: int
    max_degree: int
    degrees: tuple[int, ...]


def degree_profile(g: Graph) -> DegreeProfile:
    degs = tuple(row.bit_count() for row in g.adj)
    return DegreeProfile(min(degs), max(degs), degs)


# ---------------------------------------------------------------------------
# canonical form / isomorphism
#
# Equitable color refinement followed by individualization backtracking.
# Within the branching cell, candidates that are twins of an already explored
# candidate are skipped: swapping twins is an automorphism fixing the current
# coloring, so their subtrees yield identical label sets. The leaf with the
# minimal relabeled adjacency tuple defines the canonical labeling. Exact for
# the documented range n <= 12.

def canonical_form(g: Graph) -> str:
    """Canonical graph6 string; equal iff isomorphic (n <= 12)."""
    if g.n > CANON_MAX_VERTICES:
        raise ValueError(
            f"exact canonicalization is limited to n <= {CANON_MAX_VERTICES}"
        )
    return graph6_encode(Graph(g.n, _canonical_adj(g)))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    return canonical_form(a) == canonical_form(b)


def _refine(adj: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[w] for w in bits(adj[v]))
            sigs.append((colors[v], tuple(nbr)))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[sig] for sig in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical_adj(g: Graph) -> tuple[int, ...]:
    n, adj = g.n, g.adj
    best: list[tuple[int, ...] | None] = [None]

    def leaf(colors: list[int]) -> None:
        order = sorted(range(n), key=colors.__getitem__)
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = [0] * n
        for v in range(n):
            acc = 0
            for w in bits(adj[v]):
                acc |= 1 << pos[w]
            rows[pos[v]] = acc
        cand = tuple(rows)
        if best[0] is None or cand < best[0]:
            best[0] = cand

    def descend(colors: list[int]) -> None:
        colors = _refine(adj, n, colors)
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            leaf(colors)
            return
        reps: list[int] = []
        for v in target:
            if any(_twins(adj, v, u) for u in reps):
                continue
            reps.append(v)
            child = [2 * c for c in colors]
            child[v] -= 1
            descend(child)

    descend([0] * n)
    assert best[0] is not None
    return best[0]


def _twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def _brute_canonical_adj(g: Graph) -> tuple[int, ...]:
    """Reference canonicalization by trying all n! labelings (tests only)."""
    best = None
    for perm in permutations(range(g.n)):
        rows = [0] * g.n
        for v in range(g.n):
            acc = 0
            for w in bits(g.adj[v]):
                acc |= 1 << perm[w]
            rows[perm[v]] = acc
        cand = tuple(rows)
        if best is None or cand < best:
            best = cand
    return best
