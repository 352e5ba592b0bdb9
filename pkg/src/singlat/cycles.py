"""Cycle arithmetic on the lattice spanned by the exceptional curves.

A cycle is a vector of exact rationals in the canonical vertex order of the
graph it belongs to.  All operations are pure; cycles are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import CycleError, NotNegativeDefiniteError
from .graph import ResolutionGraph, definiteness, intersection_matrix


@dataclass(frozen=True)
class Cycle:
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(values) -> "Cycle":
        return Cycle(tuple(Fraction(v) for v in values))

    @staticmethod
    def zero(n: int) -> "Cycle":
        return Cycle((Fraction(0),) * n)

    @staticmethod
    def unit(n: int, i: int) -> "Cycle":
        return Cycle(tuple(Fraction(1 if j == i else 0) for j in range(n)))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "Cycle") -> "Cycle":
        _same_length(self, other)
        return Cycle(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cycle") -> "Cycle":
        _same_length(self, other)
        return Cycle(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cycle":
        return Cycle(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar) -> "Cycle":
        s = Fraction(scalar)
        return Cycle(tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def __le__(self, other: "Cycle") -> bool:
        """Componentwise partial order."""
        _same_length(self, other)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def __ge__(self, other: "Cycle") -> bool:
        _same_length(self, other)
        return all(a >= b for a, b in zip(self.coeffs, other.coeffs))

    def floor(self) -> "Cycle":
        return Cycle(tuple(Fraction(math.floor(a)) for a in self.coeffs))

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    @property
    def is_effective(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise CycleError(f"cycle {self.coeffs} is not integral")
        return tuple(int(a) for a in self.coeffs)


def _same_length(a: Cycle, b: Cycle) -> None:
    if len(a) != len(b):
        raise CycleError(f"cycle length mismatch: {len(a)} vs {len(b)}")


def _match_graph(g: ResolutionGraph, c: Cycle) -> None:
    if len(c) != g.n:
        raise CycleError(f"cycle has {len(c)} coefficients, graph has {g.n} vertices")


def require_negative_definite(g: ResolutionGraph) -> None:
    if not definiteness(g).negative_definite:
        raise NotNegativeDefiniteError("intersection form is not negative definite")


def vertex_pairings(g: ResolutionGraph, c: Cycle) -> tuple[Fraction, ...]:
    """The vector of pairings of c with every vertex class, i.e. M*c."""
    _match_graph(g, c)
    m = intersection_matrix(g)
    return tuple(
        sum((Fraction(m[i][j]) * c.coeffs[j] for j in range(g.n)), Fraction(0))
        for i in range(g.n)
    )


def pairing(g: ResolutionGraph, a: Cycle, b: Cycle) -> Fraction:
    """Symmetric bilinear intersection pairing a^T M b."""
    _match_graph(g, a)
    _match_graph(g, b)
    mb = vertex_pairings(g, b)
    return sum((x * y for x, y in zip(a.coeffs, mb)), Fraction(0))


def is_antinef(g: ResolutionGraph, c: Cycle) -> bool:
    """True when c pairs nonpositively with every vertex class."""
    return all(p <= 0 for p in vertex_pairings(g, c))


def adjunction_vector(g: ResolutionGraph) -> tuple[int, ...]:
    """Required pairings of the canonical cycle: E_i^2 + 2 - 2*genus_i."""
    return tuple(v.euler + 2 - 2 * v.genus for v in g.vertices)


@lru_cache(maxsize=None)
def canonical_cycle(g: ResolutionGraph) -> Cycle:
    """The rational cycle pairing to E_i^2 + 2 - 2g_i with every vertex."""
    require_negative_definite(g)
    sol = linalg.solve(intersection_matrix(g), adjunction_vector(g))
    assert sol is not None  # negative definite forms are nonsingular
    return Cycle(tuple(sol))


def chi(g: ResolutionGraph, l: Cycle) -> Fraction:
    """Riemann-Roch Euler characteristic -(l, l - Z_K)/2."""
    zk = canonical_cycle(g)
    return -(pairing(g, l, l) - pairing(g, l, zk)) / 2


@lru_cache(maxsize=None)
def dual_basis(g: ResolutionGraph) -> tuple[Cycle, ...]:
    """All dual cycles: column i of (-M)^{-1} pairs to -1 with E_i, 0 elsewhere."""
    require_negative_definite(g)
    neg = tuple(tuple(-x for x in row) for row in intersection_matrix(g))
    inv = linalg.invert(neg)
    assert inv is not None
    return tuple(Cycle(tuple(row[i] for row in inv)) for i in range(g.n))


def dual_cycle(g: ResolutionGraph, vertex_id: str) -> Cycle:
    return dual_basis(g)[g.index(vertex_id)]


def is_numerically_gorenstein(g: ResolutionGraph) -> bool:
    return canonical_cycle(g).is_integral


def enumerate_antinef(g: ResolutionGraph, constraints) -> list[Cycle]:
    """All integral effective anti-nef cycles with the prescribed coefficients.

    Every anti-nef cycle decomposes as a nonnegative integer combination of
    the dual cycles, whose coefficients are all strictly positive on a
    connected negative definite graph; a single positive coefficient
    constraint therefore bounds the search.  Output is sorted
    lexicographically on the coefficient vector.
    """
    require_negative_definite(g)
    items = list(constraints)
    if not items:
        raise CycleError("refusing unbounded enumeration: no coefficient constraints given")
    required: dict[int, int] = {}
    for vid, value in items:
        idx = g.index(vid)
        value = int(value)
        if idx in required and required[idx] != value:
            raise CycleError(f"conflicting constraints for vertex {vid!r}")
        required[idx] = value
    if not any(v > 0 for v in required.values()):
        raise CycleError("need at least one constraint with a positive coefficient")
    if any(v < 0 for v in required.values()):
        return []

    duals = dual_basis(g)
    n = g.n
    cons = sorted(required.items())
    results: list[Cycle] = []
    partial = [Fraction(0)] * len(cons)
    acc = [Fraction(0)] * n

    def shift(i: int, times: int) -> None:
        dual = duals[i].coeffs
        for k, (v, _) in enumerate(cons):
            partial[k] += times * dual[v]
        for j in range(n):
            acc[j] += times * dual[j]

    def rec(i: int) -> None:
        if i == n:
            if all(partial[k] == r for k, (_, r) in enumerate(cons)):
                c = Cycle(tuple(acc))
                if c.is_integral:
                    results.append(c)
            return
        dual = duals[i].coeffs
        # Largest multiple of this dual cycle that keeps every constrained
        # coefficient within its required value (dual coefficients are > 0).
        top = min(math.floor((Fraction(r) - partial[k]) / dual[v])
                  for k, (v, r) in enumerate(cons))
        if top < 0:
            return
        for ci in range(top + 1):
            if ci:
                shift(i, 1)
            rec(i + 1)
        shift(i, -top)

    rec(0)
    results.sort(key=lambda c: c.coeffs)
    return results


def parse_cycle(g: ResolutionGraph, text: str) -> Cycle:
    """Parse the literal syntax ``id:coeff,id:coeff`` (omitted ids mean 0)."""
    coeffs = [Fraction(0)] * g.n
    text = text.strip()
    if not text:
        return Cycle(tuple(coeffs))
    seen: set[int] = set()
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ":" not in chunk:
            raise CycleError(f"invalid cycle term {chunk!r}: expected 'id:coeff'")
        vid, _, value = chunk.partition(":")
        idx = g.index(vid.strip())
        if idx in seen:
            raise CycleError(f"vertex {vid.strip()!r} appears twice in cycle literal")
        seen.add(idx)
        try:
            coeffs[idx] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise CycleError(f"invalid coefficient {value.strip()!r}") from None
    return Cycle(tuple(coeffs))


def format_cycle(g: ResolutionGraph, c: Cycle) -> str:
    """Round-trippable literal form, all vertices listed in canonical order."""
    _match_graph(g, c)
    return ",".join(f"{v.id}:{a}" for v, a in zip(g.vertices, c.coeffs))
