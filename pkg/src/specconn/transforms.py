"""Executable spectral-radius comparisons: edge rotation, subgraph
monotonicity, join rebalancing, plus randomized harnesses for hunting
counterexamples.

Each check computes both sides numerically and raises ViolationError if a
strict inequality that must hold fails by more than the safety margin. The
margins sit two orders above the eigensolver tolerance so a violation means
a genuine counterexample (or solver bug), not float noise.
"""

import random
from dataclasses import dataclass, field

from .graphs import (
    Graph,
    add_edges,
    from_edges,
    induced_subgraph,
    is_connected,
    mask_of,
    permute,
    remove_edges,
    vertices_of,
)
from .spectral import (
    CliqueJoinShape,
    ViolationError,
    quotient_spectral_radius,
    spectral_radius,
)

STRICT_MARGIN = 1e-10
PERRON_TIE_TOL = 1e-12


@dataclass(frozen=True)
class RotationSpec:
    """Move the edges v-w (w in moved) onto u; moved must avoid N(u) and u."""

    u: int
    v: int
    moved: int  # vertex bitmask

    def validate(self, g: Graph) -> None:
        if self.u == self.v:
            raise ValueError("rotation endpoints must be distinct")
        if not self.moved:
            raise ValueError("rotation needs a nonempty moved set")
        if self.moved >> self.u & 1 or self.moved >> self.v & 1:
            raise ValueError("moved set may not contain the endpoints")
        if self.moved & ~g.adj[self.v]:
            raise ValueError("moved vertices must be neighbors of v")
        if self.moved & g.adj[self.u]:
            raise ValueError("moved vertices must avoid N(u) to keep the graph simple")


def rotate(g: Graph, spec: RotationSpec) -> Graph:
    """Apply the rotation; edge count is preserved, only deg(u), deg(v) change."""
    spec.validate(g)
    targets = vertices_of(spec.moved)
    h = remove_edges(g, [(spec.v, w) for w in targets])
    return add_edges(h, [(spec.u, w) for w in targets])


@dataclass(frozen=True)
class RotationCheck:
    applicable: bool
    rho_before: float
    rho_after: float | None
    x_u: float
    x_v: float
    result_connected: bool | None


def check_rotation_increase(g: Graph, spec: RotationSpec) -> RotationCheck:
    """If x(u) >= x(v), rotating strictly increases the spectral radius.

    Near-ties (|x(u)-x(v)| <= 1e-12, e.g. symmetric vertices) count as
    satisfying the hypothesis. When x(u) < x(v) the check is inapplicable and
    nothing is asserted. Rotations that disconnect the result are evaluated
    anyway (rho = max over components) and flagged via result_connected.
    """
    spec.validate(g)
    res = spectral_radius(g)
    x_u, x_v = res.perron[spec.u], res.perron[spec.v]
    if x_u < x_v - PERRON_TIE_TOL:
        return RotationCheck(False, res.rho, None, x_u, x_v, None)
    star = rotate(g, spec)
    rho_after = spectral_radius(star).rho
    if not rho_after > res.rho + STRICT_MARGIN:
        raise ViolationError(
            f"rotation failed to increase rho: {res.rho!r} -> {rho_after!r} "
            f"(u={spec.u}, v={spec.v}, moved={vertices_of(spec.moved)})"
        )
    return RotationCheck(True, res.rho, rho_after, x_u, x_v, is_connected(star))


@dataclass(frozen=True)
class MonotonicityCheck:
    rho_sub: float
    rho_super: float
    margin: float


def check_subgraph_monotonicity(g: Graph, h: Graph) -> MonotonicityCheck:
    """A proper subgraph of a connected graph has strictly smaller rho.

    h must be a proper subgraph of g under the identity embedding: either
    fewer vertices (a prefix of the labeling) or fewer edges, with every edge
    of h an edge of g.
    """
    if not is_connected(g):
        raise ValueError("the host graph must be connected")
    if h.n > g.n:
        raise ValueError("not a subgraph: more vertices than the host")
    for v in range(h.n):
        if h.adj[v] & ~g.adj[v]:
            raise ValueError(f"not a subgraph: extra edges at vertex {v}")
    if h.n == g.n and h.edge_count() == g.edge_count():
        raise ValueError("not a proper subgraph: graphs are identical")
    rho_sub = spectral_radius(h).rho
    rho_super = spectral_radius(g).rho
    if not rho_sub < rho_super - STRICT_MARGIN:
        raise ViolationError(
            f"proper subgraph did not lose spectral radius: {rho_sub!r} vs {rho_super!r}"
        )
    return MonotonicityCheck(rho_sub, rho_super, rho_super - rho_sub)


@dataclass(frozen=True)
class RebalanceCheck:
    rho_before: float
    rho_after: float
    margin: float
    balanced_parts: tuple[int, ...]


def check_join_rebalance(s: int, parts: list[int], p: int) -> RebalanceCheck:
    """Concentrating clique parts (all but one pushed down to p) raises rho.

    Hypothesis: parts sorted descending, every part >= p, and the largest
    part strictly below n - s - p(t-1); then the concentrated shape
    (n-s-p(t-1), p, ..., p) has strictly larger quotient spectral radius.
    """
    parts = list(parts)
    t = len(parts)
    n = s + sum(parts)
    if sorted(parts, reverse=True) != parts:
        raise ValueError("parts must be sorted descending")
    if any(q < p for q in parts):
        raise ValueError("every part must be >= p")
    big = n - s - p * (t - 1)
    if not parts[0] < big:
        raise ValueError("hypothesis needs largest part < n - s - p(t-1)")
    before = quotient_spectral_radius(CliqueJoinShape(s, tuple(parts)))
    balanced = (big,) + (p,) * (t - 1)
    after = quotient_spectral_radius(CliqueJoinShape(s, balanced))
    if not before < after - STRICT_MARGIN:
        raise ViolationError(
            f"rebalancing failed to increase rho: {before!r} vs {after!r} "
            f"for s={s}, parts={parts}, p={p}"
        )
    return RebalanceCheck(before, after, after - before, balanced)


# ---------------------------------------------------------------------------
# randomized harnesses

def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random attachment tree plus independent extra edges (always connected)."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    p = rng.uniform(0.1, 0.9)
    present = set(edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < p:
                edges.append((u, v))
    return from_edges(n, edges)


@dataclass
class FuzzReport:
    trials: int = 0
    applicable: int = 0
    violations: list[str] = field(default_factory=list)
    disconnected_results: int = 0
    min_margin: float = float("inf")

    @property
    def ok(self) -> bool:
        return not self.violations


def fuzz_rotation_increase(trials: int, seed: int, max_n: int = 10) -> FuzzReport:
    """Run `trials` applicable random rotation checks; collect violations."""
    rng = random.Random(seed)
    report = FuzzReport()
    while report.applicable < trials:
        report.trials += 1
        n = rng.randint(4, max_n)
        g = random_connected_graph(rng, n)
        u, v = rng.sample(range(n), 2)
        movable = g.adj[v] & ~g.adj[u] & ~(1 << u) & ~(1 << v)
        if not movable:
            continue
        pool = vertices_of(movable)
        chosen = [w for w in pool if rng.random() < 0.6] or [pool[0]]
        spec = RotationSpec(u, v, mask_of(chosen))
        try:
            check = check_rotation_increase(g, spec)
        except ViolationError as exc:
            report.applicable += 1
            report.violations.append(str(exc))
            continue
        if not check.applicable:
            continue
        report.applicable += 1
        assert check.rho_after is not None
        report.min_margin = min(report.min_margin, check.rho_after - check.rho_before)
        if check.result_connected is False:
            report.disconnected_results += 1
    return report


def fuzz_subgraph_monotonicity(trials: int, seed: int, max_n: int = 10) -> FuzzReport:
    """Random (G, G-e) and (G, G-v) pairs; rho must strictly decrease."""
    rng = random.Random(seed)
    report = FuzzReport()
    while report.applicable < trials:
        report.trials += 1
        n = rng.randint(3, max_n)
        g = random_connected_graph(rng, n)
        try:
            # edge deletion
            e = rng.choice(sorted(g.edges()))
            check = check_subgraph_monotonicity(g, remove_edges(g, [e]))
            report.min_margin = min(report.min_margin, check.margin)
            # vertex deletion: relabel the victim to the last slot so the
            # induced prefix is an identity-embedded subgraph
            victim = rng.randrange(n)
            perm = list(range(n))
            perm[victim], perm[n - 1] = perm[n - 1], perm[victim]
            relabeled = permute(g, perm)
            sub = induced_subgraph(relabeled, (1 << (n - 1)) - 1)
            check = check_subgraph_monotonicity(relabeled, sub)
            report.min_margin = min(report.min_margin, check.margin)
        except ViolationError as exc:
            report.violations.append(str(exc))
        report.applicable += 1
    return report
