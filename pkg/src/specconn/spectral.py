"""Adjacency spectral radius, Perron vectors, and join-of-cliques quotients.

The eigensolver is a shifted power iteration (A+I) per connected component;
the shift keeps the dominant eigenvalue simple-signed so convergence is
linear for every adjacency matrix. Join-of-cliques graphs additionally get
an exact small quotient-matrix computation used to cross-check the iterative
path.
"""

import math
from dataclasses import dataclass
from functools import reduce

from . import kernels
from .graphs import Graph, complete_graph, components, disjoint_union, join, vertices_of

DEFAULT_TOL = 1e-12
TWIN_TOL = 1e-9


class ConvergenceError(RuntimeError):
    """Power iteration did not reach the requested residual."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


class ViolationError(RuntimeError):
    """A strict spectral inequality that must hold was violated numerically."""


@dataclass(frozen=True)
class SpectralResult:
    """Dominant eigenpair: rho, unit Perron vector, solver metadata.

    For disconnected input rho is the maximum over components and the vector
    is supported on the first dominant component (zero elsewhere), so strict
    positivity only holds for connected graphs. residual is the infinity norm
    of A*x - rho*x on the dominant component.
    """

    rho: float
    perron: tuple[float, ...]
    iterations: int
    residual: float


def iteration_cap(n: int, tol: float) -> int:
    return max(1000, int(200 * n * math.log(1.0 / tol)))


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralResult:
    """Largest adjacency eigenvalue with its Perron vector.

    rho is accurate to tol*max(1,rho); raises ConvergenceError if the
    iteration cap is hit (pathological tolerances only).
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    cap = iteration_cap(g.n, tol)
    best = None
    for comp in components(g):
        rho, x, iters, resid, ok = kernels.power_iteration(g.adj, g.n, comp, tol, cap)
        if not ok:
            raise ConvergenceError(
                f"no convergence after {cap} iterations (residual {resid:.3e})"
            )
        if best is None or rho > best[0]:
            best = (rho, comp, x, iters, resid)
    assert best is not None
    rho, comp, x, iters, resid = best
    perron = [0.0] * g.n
    for i, v in enumerate(vertices_of(comp)):
        perron[v] = x[i]
    return SpectralResult(rho, tuple(perron), iters, resid)


# ---------------------------------------------------------------------------
# join-of-cliques quotient

@dataclass(frozen=True)
class CliqueJoinShape:
    """K_s joined to a disjoint union of cliques with the given part sizes."""

    s: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.s < 0:
            raise ValueError("join core size must be >= 0")
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError("clique parts must be nonempty positive sizes")
        if self.s == 0 and len(self.parts) > 1:
            raise ValueError("shape is disconnected (s = 0 with several parts)")

    @property
    def n(self) -> int:
        return self.s + sum(self.parts)


def assemble_clique_join(shape: CliqueJoinShape) -> Graph:
    """Build the labeled graph: core vertices first, then parts in order."""
    parts = reduce(disjoint_union, (complete_graph(p) for p in shape.parts))
    if shape.s == 0:
        return parts
    return join(complete_graph(shape.s), parts)


def quotient_spectral_radius(shape: CliqueJoinShape) -> float:
    """Exact spectral radius via the equitable-partition quotient matrix.

    The partition {core, part_1, ..., part_t} is equitable, so the dominant
    eigenvalue of the (t+1)x(t+1) quotient equals rho of the full graph. The
    characteristic polynomial (Leverrier-Faddeev) has all-real roots because
    the quotient is similar to a symmetric matrix, so Newton from above the
    row-sum upper bound decreases monotonically to the largest root (sign
    bisection is unusable here: several subdominant roots can exceed the
    min-row-sum lower bound). A short Newton polish finishes the root.
    """
    s, parts = shape.s, shape.parts
    t = len(parts)
    if t == 1:
        return float(s + parts[0] - 1)
    m = t + 1
    b = [[0.0] * m for _ in range(m)]
    b[0][0] = float(s - 1)
    for j, p in enumerate(parts, start=1):
        b[0][j] = float(p)
        b[j][0] = float(s)
        b[j][j] = float(p - 1)
    coeffs = _char_poly(b)
    hi = float(shape.n)
    while _poly_eval(coeffs, hi) <= 0.0:
        hi += 1.0
    root = _newton_from_above(coeffs, hi)
    for _ in range(3):
        p, dp = _poly_eval_with_derivative(coeffs, root)
        if dp == 0.0:
            break
        step = p / dp
        root -= step
        if abs(step) <= 1e-15 * max(1.0, abs(root)):
            break
    return root


def _char_poly(b: list[list[float]]) -> list[float]:
    """Monic characteristic polynomial coefficients [1, c1, ..., cm]."""
    m = len(b)
    coeffs = [1.0]
    work = [[1.0 if i == j else 0.0 for j in range(m)] for i in range(m)]
    c = 0.0
    for k in range(1, m + 1):
        if k > 1:
            prod = [[sum(b[i][x] * work[x][j] for x in range(m)) for j in range(m)]
                    for i in range(m)]
            for i in range(m):
                prod[i][i] += c
            work = prod
        bm = [[sum(b[i][x] * work[x][j] for x in range(m)) for j in range(m)]
              for i in range(m)]
        c = -sum(bm[i][i] for i in range(m)) / k
        coeffs.append(c)
    return coeffs


def _poly_eval(coeffs: list[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _poly_eval_with_derivative(coeffs: list[float], x: float) -> tuple[float, float]:
    acc = 0.0
    dacc = 0.0
    for c in coeffs:
        dacc = dacc * x + acc
        acc = acc * x + c
    return acc, dacc


def _newton_from_above(coeffs: list[float], start: float) -> float:
    # monotone for a monic polynomial with all-real roots when started above
    # the largest one
    x = start
    for _ in range(200):
        p, dp = _poly_eval_with_derivative(coeffs, x)
        if dp <= 0.0:
            break
        nxt = x - p / dp
        if abs(x - nxt) <= 1e-14 * max(1.0, abs(x)):
            return nxt
        x = nxt
    return x


# ---------------------------------------------------------------------------
# Perron entry comparison

@dataclass(frozen=True)
class PerronComparison:
    """Structural classification of a vertex pair plus measured entries.

    relation is "nested" (neighborhood of v strictly inside u's, so
    x(u) > x(v)), "twin" (closed neighborhoods mutually contained, so
    x(u) = x(v)), or "incomparable" (no assertion).
    """

    relation: str
    x_u: float
    x_v: float


def perron_compare(g: Graph, u: int, v: int, tol: float = DEFAULT_TOL) -> PerronComparison:
    """Classify (u, v) by neighborhood containment and check the Perron order.

    The classification is purely structural; the measured entries are then
    required to respect it (ViolationError otherwise, which would indicate an
    eigensolver failure).
    """
    if u == v:
        raise ValueError("vertices must be distinct")
    comps = components(g)
    if len(comps) != 1:
        raise DisconnectedGraphError("Perron comparison needs a connected graph")
    res = spectral_radius(g, tol)
    x_u, x_v = res.perron[u], res.perron[v]
    nu = g.adj[u] & ~(1 << v)
    nv = g.adj[v] & ~(1 << u)
    if nu == nv:
        if abs(x_u - x_v) > TWIN_TOL * max(1.0, abs(x_u), abs(x_v)):
            raise ViolationError(
                f"twin vertices {u},{v} have unequal Perron entries {x_u} vs {x_v}"
            )
        return PerronComparison("twin", x_u, x_v)
    if nv & ~nu == 0:
        if not x_u > x_v:
            raise ViolationError(
                f"nested pair {u},{v} violates x({u}) > x({v}): {x_u} vs {x_v}"
            )
        return PerronComparison("nested", x_u, x_v)
    return PerronComparison("incomparable", x_u, x_v)
