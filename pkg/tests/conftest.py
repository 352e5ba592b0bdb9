"""Shared fixtures, random corpora, and independent oracles for the suite.

The oracles deliberately avoid the library's algorithms: determinants use
Laplace expansion instead of Bareiss, definiteness uses principal minors
instead of elimination, the path oracle is a dict-based DP, and anti-nef /
chi oracles are plain box scans.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import isqrt, prod
from pathlib import Path

import numpy as np
import pytest

from singlat import (
    Cycle,
    build_graph,
    canonical_cycle,
    dual_basis,
    intersection_matrix,
    parse_graph,
)

DATA = Path(__file__).parent / "data"

# Golden values for the reference graph (vertex order E_0..E_6).
REF_ZMIN = (1, 2, 3, 3, 2, 6, 6)
REF_ZK = (3, 5, 7, 7, 5, 14, 14)
REF_E1_DUAL = (2, 5, 7, 6, 4, 12, 14)
REF_E4_DUAL = (2, 4, 6, 7, 5, 14, 12)


@pytest.fixture(scope="session")
def ref_text() -> str:
    return (DATA / "reference.graph").read_text()


@pytest.fixture(scope="session")
def ref(ref_text):
    return parse_graph(ref_text)


def quick_graph(eulers, edges=(), genera=None):
    """Build a graph with ids v0, v1, ... from Euler numbers and index edges."""
    genera = genera or [0] * len(eulers)
    vertices = [(f"v{i}", e, g) for i, (e, g) in enumerate(zip(eulers, genera))]
    return build_graph(vertices, [(f"v{i}", f"v{j}") for i, j in edges])


def e8_graph():
    """All (-2) star with arms of 1, 2 and 4 vertices around the branch node."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]
    return quick_graph([-2] * 8, edges)


def cusp_triangle():
    """Negative definite cycle graph (-3)(-2)(-2): a minimally elliptic case."""
    return quick_graph([-3, -2, -2], [(0, 1), (1, 2), (0, 2)])


def nongorenstein_star():
    """(-2) center with three (-3) legs: canonical cycle (1, 2/3, 2/3, 2/3)."""
    return quick_graph([-2, -3, -3, -3], [(0, 1), (0, 2), (0, 3)])


# ---------------------------------------------------------------------------
# Random corpora


def random_connected_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.randrange(100) < 12:
                edges.add((i, j))
    return sorted(edges)


def random_graph(rng: random.Random, max_n: int = 6):
    """Random connected simple graph with arbitrary ( possibly positive) weights."""
    n = rng.randint(1, max_n)
    edges = random_connected_edges(rng, n)
    eulers = [rng.randint(-5, 1) for _ in range(n)]
    return quick_graph(eulers, edges)


def random_negdef_graph(rng: random.Random, max_n: int = 6):
    """Random connected graph filtered to negative definite by the minor oracle."""
    while True:
        n = rng.randint(1, max_n)
        edges = random_connected_edges(rng, n)
        deg = [0] * n
        for i, j in edges:
            deg[i] += 1
            deg[j] += 1
        eulers = [min(-1, -(deg[i] + rng.randint(-1, 3))) for i in range(n)]
        g = quick_graph(eulers, edges)
        neg = [[-x for x in row] for row in intersection_matrix(g)]
        if oracle_positive_definite(neg):
            return g


def random_integral_cycle(rng: random.Random, n: int, lo=-8, hi=8) -> Cycle:
    return Cycle.of([rng.randint(lo, hi) for _ in range(n)])


@pytest.fixture(scope="session")
def negdef_corpus():
    rng = random.Random(20260808)
    return [random_negdef_graph(rng) for _ in range(500)]


# ---------------------------------------------------------------------------
# Independent oracles


def cofactor_det(m) -> int:
    """Laplace-expansion determinant (independent of the Bareiss routine)."""
    n = len(m)

    @lru_cache(maxsize=None)
    def rec(row: int, cols: tuple[int, ...]) -> int:
        if not cols:
            return 1
        total = 0
        for k, j in enumerate(cols):
            if m[row][j]:
                minor = rec(row + 1, cols[:k] + cols[k + 1:])
                total += (-1) ** k * m[row][j] * minor
        return total

    return rec(0, tuple(range(n)))


def _principal_minor(m, subset) -> int:
    sub = [[m[i][j] for j in subset] for i in subset]
    return cofactor_det(sub)


def oracle_positive_definite(neg) -> bool:
    """Sylvester: all leading principal minors positive."""
    return all(_principal_minor(neg, list(range(k + 1))) > 0 for k in range(len(neg)))


def oracle_positive_semidefinite(neg) -> bool:
    """All principal minors (every subset) nonnegative."""
    n = len(neg)
    for mask in range(1, 1 << n):
        subset = [i for i in range(n) if mask >> i & 1]
        if _principal_minor(neg, subset) < 0:
            return False
    return True


def box_points(bounds) -> np.ndarray:
    """All integer points of prod [lo_i, hi_i], as an (N, n) int64 array."""
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in bounds]
    grids = np.meshgrid(*axes, indexing="ij")
    return np.stack([a.ravel() for a in grids], axis=1)


def oracle_minimal_antinef(g, box_hi) -> tuple[int, ...]:
    """Componentwise minimum of all nonzero effective anti-nef cycles in a box.

    Sound whenever the box contains some anti-nef cycle: the componentwise
    minimum of anti-nef cycles is again anti-nef, and the true least one lies
    below every candidate.
    """
    m = np.array(intersection_matrix(g), dtype=np.int64)
    pts = box_points([(0, hi) for hi in box_hi])
    pair = pts @ m
    mask = (pair <= 0).all(axis=1) & (pts.sum(axis=1) > 0)
    cands = pts[mask]
    assert cands.size, "oracle box contains no anti-nef cycle"
    low = cands.min(axis=0)
    assert ((low @ m) <= 0).all()
    return tuple(int(x) for x in low)


def oracle_min_chi(g, max_points=600_000):
    """Brute-force chi minimum over a certified box around Z_K/2.

    Returns None when the certified box is too large to scan.
    """
    m = intersection_matrix(g)
    n = g.n
    zk = canonical_cycle(g)
    c = [a / 2 for a in zk.coeffs]
    seed = []
    for x in c:
        fl = x.numerator // x.denominator
        seed.append(fl + 1 if x - fl > Fraction(1, 2) else fl)
    y = [Fraction(s) - ci for s, ci in zip(seed, c)]
    my = [sum(Fraction(m[i][j]) * y[j] for j in range(n)) for i in range(n)]
    bound = -sum(a * b for a, b in zip(y, my))
    neg = [[-x for x in row] for row in m]
    det = cofactor_det(neg)
    bounds = []
    for i in range(n):
        minor = _principal_minor(neg, [j for j in range(n) if j != i])
        radius_sq = bound * Fraction(minor, det)
        r = isqrt(radius_sq.numerator // radius_sq.denominator) + 1
        bounds.append((seed[i] - r, seed[i] + r))
    if prod(hi - lo + 1 for lo, hi in bounds) > max_points:
        return None
    pts = box_points(bounds)
    m_np = np.array(m, dtype=np.int64)
    k = np.array([v.euler + 2 - 2 * v.genus for v in g.vertices], dtype=np.int64)
    quad = np.einsum("ij,ij->i", pts @ m_np, pts)
    chi2 = -(quad - pts @ k)
    assert not (chi2 & 1).any()
    return int(chi2.min()) // 2


def oracle_path_value(g, z) -> int:
    """Exhaustive dict-based DP over all monotone sequences 0 -> z."""
    from itertools import product as iproduct

    m = intersection_matrix(g)
    n = g.n
    states = sorted(iproduct(*(range(c + 1) for c in z)), key=sum)
    dist: dict[tuple[int, ...], int] = {}
    for st in states:
        if not any(st):
            dist[st] = 0
            continue
        best = None
        for i in range(n):
            if st[i] == 0:
                continue
            pred = tuple(c - 1 if j == i else c for j, c in enumerate(st))
            pair = sum(m[i][j] * pred[j] for j in range(n))
            cand = dist[pred] + max(0, pair - 1)
            if best is None or cand < best:
                best = cand
        dist[st] = best
    return dist[tuple(z)]


def oracle_antinef_box(g, constraints, max_points=400_000):
    """Box scan of every effective integral cycle below the dual-basis bound.

    Returns None when the certified box is too large to scan.
    """
    duals = dual_basis(g)
    n = g.n
    cons = [(g.index(v), r) for v, r in constraints]
    bound = [Fraction(0)] * n
    for i in range(n):
        cmax = min(Fraction(r) / duals[i].coeffs[v] for v, r in cons)
        for j in range(n):
            bound[j] += cmax * duals[i].coeffs[j]
    hi = [b.numerator // b.denominator for b in bound]
    if prod(h + 1 for h in hi) > max_points:
        return None
    m = np.array(intersection_matrix(g), dtype=np.int64)
    pts = box_points([(0, h) for h in hi])
    mask = ((pts @ m) <= 0).all(axis=1)
    for v, r in cons:
        mask &= pts[:, v] == r
    return sorted(tuple(int(x) for x in row) for row in pts[mask])
