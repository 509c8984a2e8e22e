"""Exhaustive extremal verification over graph classes, with reports.

A class fixes (n, delta, g, r, k): connected graphs of order n with minimum
degree delta whose good-neighbor component connectivity (mode "component")
or good-neighbor connectivity (mode "neighbor", r ignored for membership)
equals k. The pipeline classifies every graph of a census, finds the
rho-maximizer of each class, builds the claimed extremal family for the same
parameters, and records whether the maximizer is isomorphic to it with
matching rho. Reports record facts; they never assume the claim.

Merging is associative and commutative with ties broken on canonical form
(lexicographically least wins), so results are independent of --jobs.
"""

import csv
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .census import connected_census
from .connectivity import CutMode, CutQuery, min_cut
from .families import InfeasibleFamilyError, claimed_extremal, construct
from .graphs import Graph, canonical_form, degree_profile, graph6_decode, graph6_encode
from .spectral import spectral_radius

RHO_TOL = 1e-8

COMPONENT_MODE = "component"
NEIGHBOR_MODE = "neighbor"


@dataclass(frozen=True)
class ClassSpec:
    n: int
    delta: int
    g: int
    r: int
    k: int

    def in_hypothesis(self) -> bool:
        return self.n >= self.k + self.r * (self.g + 1)


def classify(g: Graph, delta: int, g_param: int, r: int) -> int | None:
    """Class key k of g for (delta, g_param, r), or None when not in any class."""
    if degree_profile(g).min_degree != delta:
        return None
    result = min_cut(g, CutQuery(g_param, r, CutMode.FULL))
    return result.value if result else None


def _membership_query(g_param: int, r: int, mode: str) -> CutQuery:
    if mode == NEIGHBOR_MODE:
        return CutQuery(g_param, 2, CutMode.NEIGHBOR)
    return CutQuery(g_param, r, CutMode.FULL)


def _scan_chunk(args) -> list[tuple[str, int, int, float, str]]:
    """Worker: classify a chunk of graph6 records, rho/canon for members."""
    lines, g_param, r, mode = args
    query = _membership_query(g_param, r, mode)
    out = []
    for line in lines:
        g = graph6_decode(line)
        delta = degree_profile(g).min_degree
        result = min_cut(g, query)
        if result is None:
            continue
        rho = spectral_radius(g).rho
        out.append((line, delta, result.value, rho, canonical_form(g)))
    return out


@dataclass
class _CellBest:
    population: int = 0
    top: list[tuple[float, str, str]] = field(default_factory=list)  # (rho, canon, g6)

    def add(self, rho: float, canon: str, g6: str) -> None:
        self.population += 1
        self.top.append((rho, canon, g6))
        # keep the two best; on equal rho the lexicographically least
        # canonical form wins, making the merge order-independent
        self.top.sort(key=lambda t: (-t[0], t[1]))
        del self.top[2:]


@dataclass
class VerificationReport:
    spec: ClassSpec
    mode: str
    population: int
    best_rho: float | None
    best_graph6: str | None
    best_canonical: str | None
    claimed_family: str | None
    claimed_rho: float | None
    claimed_graph6: str | None
    isomorphic: bool | None
    second_best_rho: float | None
    runtime_ms: int
    warnings: list[str]

    @property
    def confirmed(self) -> bool:
        """True when the extremality claim holds (vacuously for empty cells)."""
        if self.population == 0:
            return True
        if any(w.startswith("anomaly") for w in self.warnings):
            return False
        if self.claimed_rho is None:
            # out-of-hypothesis: no claim to confirm
            return not self.spec.in_hypothesis()
        assert self.best_rho is not None
        return bool(self.isomorphic) and abs(self.best_rho - self.claimed_rho) <= RHO_TOL

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "mode": self.mode,
            "class": {
                "n": self.spec.n,
                "delta": self.spec.delta,
                "g": self.spec.g,
                "r": self.spec.r,
                "k": self.spec.k,
            },
            "population": self.population,
            "best": None
            if self.best_rho is None
            else {"rho": self.best_rho, "graph6": self.best_graph6},
            "claimed": None
            if self.claimed_family is None
            else {
                "family": self.claimed_family,
                "rho": self.claimed_rho,
                "graph6": self.claimed_graph6,
            },
            "isomorphic": self.isomorphic,
            "second_best_rho": self.second_best_rho,
            "runtime_ms": self.runtime_ms,
            "warnings": list(self.warnings),
        }


def run_verification(
    n: int,
    g: int,
    r: int,
    mode: str = COMPONENT_MODE,
    source: Iterable[Graph] | None = None,
    cells: list[tuple[int, int]] | None = None,
    jobs: int = 1,
    allow_out_of_hypothesis: bool = False,
) -> list[VerificationReport]:
    """Verify the extremality claims over a census.

    cells: explicit (delta, k) cells, or None for every nonempty cell found.
    source: any iterable of graphs covering all isomorphism classes of
    connected graphs of order n; defaults to the built-in census (n <= 8).
    """
    if mode not in (COMPONENT_MODE, NEIGHBOR_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    started = time.perf_counter()
    graphs = list(source) if source is not None else connected_census(n)
    for h in graphs:
        if h.n != n:
            raise ValueError(f"source contains a graph of order {h.n}, expected {n}")
    lines = [graph6_encode(h) for h in graphs]
    records = _scan_records(lines, g, r, mode, jobs)

    buckets: dict[tuple[int, int], _CellBest] = {}
    for line, delta, k, rho, canon in records:
        buckets.setdefault((delta, k), _CellBest()).add(rho, canon, line)

    if cells is None:
        wanted = sorted(buckets)
    else:
        wanted = list(cells)
        for delta, k in wanted:
            spec = ClassSpec(n, delta, g, r, k)
            if not spec.in_hypothesis() and not allow_out_of_hypothesis:
                raise ValueError(
                    f"class {spec} is outside the hypothesis n >= k + r(g+1); "
                    "pass allow_out_of_hypothesis to report it anyway"
                )

    reports = []
    for delta, k in wanted:
        reports.append(
            _cell_report(ClassSpec(n, delta, g, r, k), mode, buckets.get((delta, k)))
        )
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    for rep in reports:
        rep.runtime_ms = elapsed_ms
    return reports


def _scan_records(lines, g, r, mode, jobs):
    if jobs <= 1 or len(lines) < 64:
        return _scan_chunk((lines, g, r, mode))
    chunks = []
    step = max(32, (len(lines) + jobs * 4 - 1) // (jobs * 4))
    for i in range(0, len(lines), step):
        chunks.append((lines[i : i + step], g, r, mode))
    records = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_scan_chunk, chunks):
            records.extend(part)
    return records


def _cell_report(spec: ClassSpec, mode: str, cell: _CellBest | None) -> VerificationReport:
    warnings: list[str] = []
    population = cell.population if cell else 0
    best_rho = best_g6 = best_canon = None
    second = None
    if cell:
        best_rho, best_canon, best_g6 = cell.top[0]
        if len(cell.top) > 1:
            second = cell.top[1][0]

    claimed_family = claimed_rho = claimed_g6 = None
    isomorphic = None
    if not spec.in_hypothesis():
        warnings.append("out-of-hypothesis: n < k + r(g+1); no claim checked")
    elif population > 0:
        try:
            params = claimed_extremal(spec.n, spec.k, spec.delta, spec.g, spec.r)
            claimed = construct(params)
        except (InfeasibleFamilyError, ValueError) as exc:
            warnings.append(f"anomaly: claimed family infeasible for nonempty class ({exc})")
        else:
            claimed_family = params.family.value
            claimed_rho = spectral_radius(claimed).rho
            claimed_g6 = graph6_encode(claimed)
            isomorphic = canonical_form(claimed) == best_canon
            member_k = _claimed_membership(claimed, spec, mode)
            if member_k != spec.k or degree_profile(claimed).min_degree != spec.delta:
                warnings.append(
                    f"anomaly: claimed family graph not in its own class "
                    f"(classified as k={member_k})"
                )
            if best_rho is not None and best_rho < claimed_rho - RHO_TOL:
                warnings.append(
                    "anomaly: claimed family exceeds every class member's rho"
                )
    return VerificationReport(
        spec=spec,
        mode=mode,
        population=population,
        best_rho=best_rho,
        best_graph6=best_g6,
        best_canonical=best_canon,
        claimed_family=claimed_family,
        claimed_rho=claimed_rho,
        claimed_graph6=claimed_g6,
        isomorphic=isomorphic,
        second_best_rho=second,
        runtime_ms=0,
        warnings=warnings,
    )


def _claimed_membership(claimed: Graph, spec: ClassSpec, mode: str) -> int | None:
    result = min_cut(claimed, _membership_query(spec.g, spec.r, mode))
    return result.value if result else None


def verify_class(
    spec: ClassSpec,
    source: Iterable[Graph] | None = None,
    mode: str = COMPONENT_MODE,
    jobs: int = 1,
    allow_out_of_hypothesis: bool = False,
) -> VerificationReport:
    """Single-cell verification (population 0 yields an empty-class report)."""
    return run_verification(
        spec.n,
        spec.g,
        spec.r,
        mode=mode,
        source=source,
        cells=[(spec.delta, spec.k)],
        jobs=jobs,
        allow_out_of_hypothesis=allow_out_of_hypothesis,
    )[0]


# ---------------------------------------------------------------------------
# persistence

CSV_COLUMNS = [
    "schema",
    "mode",
    "n",
    "delta",
    "g",
    "r",
    "k",
    "population",
    "best_rho",
    "best_graph6",
    "claimed_family",
    "claimed_rho",
    "claimed_graph6",
    "isomorphic",
    "second_best_rho",
    "runtime_ms",
    "warnings",
]


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([rep.to_dict() for rep in reports], indent=2) + "\n"


def write_json(reports: list[VerificationReport], path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(reports_to_json(reports))


def write_csv(reports: list[VerificationReport], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        for rep in reports:
            d = rep.to_dict()
            writer.writerow(
                [
                    d["schema"],
                    d["mode"],
                    d["class"]["n"],
                    d["class"]["delta"],
                    d["class"]["g"],
                    d["class"]["r"],
                    d["class"]["k"],
                    d["population"],
                    "" if d["best"] is None else repr(d["best"]["rho"]),
                    "" if d["best"] is None else d["best"]["graph6"],
                    "" if d["claimed"] is None else d["claimed"]["family"],
                    "" if d["claimed"] is None else repr(d["claimed"]["rho"]),
                    "" if d["claimed"] is None else d["claimed"]["graph6"],
                    "" if d["isomorphic"] is None else d["isomorphic"],
                    "" if d["second_best_rho"] is None else repr(d["second_best_rho"]),
                    d["runtime_ms"],
                    ";".join(d["warnings"]),
                ]
            )
