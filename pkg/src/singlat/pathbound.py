"""Minimum-cost monotone computation sequences over a cycle cube.

The states 0 <= l <= Z form a finite cube; adding a vertex class is a
directed edge of cost max{0, (E_i, l) - 1}.  Every edge raises the total
coefficient sum by one, so the cube is a DAG graded by levels and the exact
minimum is a level-by-level dynamic program.  The sweep runs on int64 numpy
arrays (exact integer arithmetic; a guard refuses inputs whose worst-case
cost could approach the int64 range).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

import numpy as np

from .chimin import min_chi
from .cycles import Cycle, canonical_cycle, require_negative_definite
from .errors import CycleError, GraphError, SearchLimitError
from .graph import ResolutionGraph, intersection_matrix
from .laufer import ComputationSequence, SequenceStep

DEFAULT_STATE_LIMIT = 10**8
_INT64_GUARD = 2**62


@dataclass(frozen=True)
class PathResult:
    value: int
    witness: ComputationSequence
    end_cycle: Cycle
    states_expanded: int


@dataclass(frozen=True)
class BoundsReport:
    pg_lower: int
    pg_upper: int
    min_chi: int
    path_gamma: int
    gap: int


def _require_rational_curves(g: ResolutionGraph) -> None:
    for v in g.vertices:
        if v.genus != 0:
            raise GraphError(
                f"vertex {v.id!r} has genus {v.genus}; path bounds need genus-0 vertices"
            )


def _target_ints(g: ResolutionGraph, z: Cycle) -> tuple[int, ...]:
    if len(z) != g.n:
        raise CycleError(f"cycle has {len(z)} coefficients, graph has {g.n} vertices")
    if not z.is_integral:
        raise CycleError("path target must be an integral cycle")
    if not z.is_effective:
        raise CycleError("path target must be an effective cycle")
    return z.as_ints()


class _Cube:
    """Precomputed level structure and step costs of the cube [0, z]."""

    def __init__(self, g: ResolutionGraph, z: tuple[int, ...], limit: int):
        self.z = z
        n = g.n
        shape = tuple(c + 1 for c in z)
        total = prod(shape)
        if total > limit:
            raise SearchLimitError(
                f"state space of size {total} exceeds the limit {limit}"
            )
        eulers = g.eulers()
        adj = g.adjacency
        # Conservative worst-case total cost must stay well inside int64.
        maxpair = max(
            abs(eulers[i]) * z[i] + sum(z[j] for j in adj[i]) + 1 for i in range(n)
        )
        if sum(z) * maxpair >= _INT64_GUARD:
            raise SearchLimitError(
                "cycle coefficients too large for the int64 search arrays"
            )
        self.n = n
        self.total = total
        self.strides = tuple(prod(shape[i + 1:]) for i in range(n))
        idx = np.arange(total, dtype=np.int64)
        self.coords = [
            ((idx // self.strides[i]) % shape[i]).astype(np.int32) for i in range(n)
        ]
        levels = np.zeros(total, dtype=np.int64)
        for c in self.coords:
            levels += c
        order = np.argsort(levels, kind="stable")
        counts = np.bincount(levels, minlength=sum(z) + 1)
        offsets = np.zeros(len(counts) + 1, dtype=np.int64)
        np.cumsum(counts, out=offsets[1:])
        self._order = order
        self._offsets = offsets
        self.costs = []
        for i in range(n):
            pair = eulers[i] * self.coords[i].astype(np.int64)
            for j in adj[i]:
                pair += self.coords[j]
            self.costs.append(np.maximum(pair - 1, 0))

    def level(self, s: int) -> np.ndarray:
        return self._order[self._offsets[s]:self._offsets[s + 1]]

    @property
    def top_level(self) -> int:
        return sum(self.z)


_UNREACHED = np.iinfo(np.int64).max // 4


def _cost_to_go(cube: _Cube) -> np.ndarray:
    """Minimal remaining cost from every state up to the cube corner."""
    goal = cube.total - 1
    g_arr = np.full(cube.total, _UNREACHED, dtype=np.int64)
    g_arr[goal] = 0
    for s in range(cube.top_level - 1, -1, -1):
        states = cube.level(s)
        for i in range(cube.n):
            movable = states[cube.coords[i][states] < cube.z[i]]
            if not movable.size:
                continue
            succ = movable + cube.strides[i]
            cand = cube.costs[i][movable] + g_arr[succ]
            g_arr[movable] = np.minimum(g_arr[movable], cand)
    return g_arr


def _cost_from_origin(cube: _Cube) -> np.ndarray:
    """Minimal cost from the zero cycle to every state of the cube."""
    d_arr = np.full(cube.total, _UNREACHED, dtype=np.int64)
    d_arr[0] = 0
    for s in range(1, cube.top_level + 1):
        states = cube.level(s)
        for i in range(cube.n):
            movable = states[cube.coords[i][states] > 0]
            if not movable.size:
                continue
            pred = movable - cube.strides[i]
            cand = d_arr[pred] + cube.costs[i][pred]
            d_arr[movable] = np.minimum(d_arr[movable], cand)
    return d_arr


def _greedy_witness(g: ResolutionGraph, cube: _Cube, g_arr: np.ndarray) -> ComputationSequence:
    """Lexicographically least minimum-cost vertex sequence, via tight edges."""
    m = intersection_matrix(g)
    n = cube.n
    cur = [0] * n
    flat = 0
    steps: list[SequenceStep] = []
    total = int(g_arr[0])
    for _ in range(cube.top_level):
        for i in range(n):
            if cur[i] >= cube.z[i]:
                continue
            pair = sum(m[i][j] * cur[j] for j in range(n))
            cost = pair - 1 if pair > 1 else 0
            if cost + int(g_arr[flat + cube.strides[i]]) == int(g_arr[flat]):
                steps.append(SequenceStep(g.vertices[i].id, Fraction(pair)))
                cur[i] += 1
                flat += cube.strides[i]
                break
        else:  # pragma: no cover - the DP guarantees a tight edge exists
            raise AssertionError("no tight edge during witness reconstruction")
    end = Cycle.of(cur)
    return ComputationSequence(Cycle.zero(n), tuple(steps), end, total)


def _trivial_result(g: ResolutionGraph) -> PathResult:
    zero = Cycle.zero(g.n)
    seq = ComputationSequence(zero, (), zero, 0)
    return PathResult(0, seq, zero, 1)


def path_value(g: ResolutionGraph, z: Cycle, state_limit: int | None = None) -> PathResult:
    """Exact minimum cost over all monotone sequences from 0 to z."""
    _require_rational_curves(g)
    target = _target_ints(g, z)
    return _path_value_cached(g, target, state_limit or DEFAULT_STATE_LIMIT)


@lru_cache(maxsize=32)
def _path_value_cached(g: ResolutionGraph, target: tuple[int, ...], limit: int) -> PathResult:
    if not any(target):
        return _trivial_result(g)
    cube = _Cube(g, target, limit)
    g_arr = _cost_to_go(cube)
    witness = _greedy_witness(g, cube, g_arr)
    value = int(g_arr[0])
    assert witness.cost == value
    return PathResult(value, witness, Cycle.of(target), cube.total)


def path_gamma(
    g: ResolutionGraph,
    cap: Cycle | None = None,
    state_limit: int | None = None,
) -> PathResult:
    """Minimum of the path cost over all targets dominating floor(Z_K).

    In the numerically Gorenstein case with effective canonical cycle this
    reduces to the single target Z_K.  When floor(Z_K) <= 0 the zero target
    is admissible and the minimum is 0.  Otherwise an explicit cap is
    required; the search then scans the cube [0, cap] once and minimizes over
    all states dominating floor(Z_K).
    """
    require_negative_definite(g)
    _require_rational_curves(g)
    limit = state_limit or DEFAULT_STATE_LIMIT
    zk = canonical_cycle(g)
    if zk.is_integral and zk.is_effective:
        return path_value(g, zk, limit)
    floor = zk.floor()
    if all(a <= 0 for a in floor.coeffs):
        return _trivial_result(g)
    if cap is None:
        raise SearchLimitError(
            "canonical cycle is not integral and effective; the target family "
            "is unbounded, pass an explicit cap cycle"
        )
    cap_ints = _target_ints(g, cap)
    lower = tuple(max(int(a), 0) for a in floor.coeffs)
    if any(c < lo for c, lo in zip(cap_ints, lower)):
        raise CycleError("cap does not dominate floor of the canonical cycle")
    cube = _Cube(g, cap_ints, limit)
    d_arr = _cost_from_origin(cube)
    mask = np.ones(cube.total, dtype=bool)
    for i in range(cube.n):
        mask &= cube.coords[i] >= lower[i]
    value = int(d_arr[mask].min())
    flats = np.flatnonzero(mask & (d_arr == value))
    ends = sorted(tuple(int(cube.coords[i][f]) for i in range(cube.n)) for f in flats)
    end = ends[0]
    sub = path_value(g, Cycle.of(end), limit)
    assert sub.value == value
    return PathResult(value, sub.witness, Cycle.of(end), cube.total)


def bounds_report(
    g: ResolutionGraph,
    cap: Cycle | None = None,
    state_limit: int | None = None,
) -> BoundsReport:
    """Combine the chi lower bound and the path upper bound for the genus."""
    chi_min = min_chi(g).min_chi
    upper = path_gamma(g, cap, state_limit).value
    lower = 1 - chi_min
    return BoundsReport(
        pg_lower=lower,
        pg_upper=upper,
        min_chi=chi_min,
        path_gamma=upper,
        gap=upper - lower,
    )
