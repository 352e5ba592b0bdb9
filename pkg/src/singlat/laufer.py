"""Computation sequences, the Artin cycle, and anti-nef closures.

A computation sequence is a monotone chain of cycles l_{k+1} = l_k + E_{i(k)};
its cost sums max{0, (E_{i(k)}, l_k) - 1} over the steps.  A step with value
exactly 2 is a simple jump.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cycles import Cycle, require_negative_definite
from .errors import CycleError
from .graph import ResolutionGraph, intersection_matrix


@dataclass(frozen=True)
class SequenceStep:
    vertex: str
    value: Fraction

    @property
    def simple_jump(self) -> bool:
        return self.value == 2


@dataclass(frozen=True)
class ComputationSequence:
    start: Cycle
    steps: tuple[SequenceStep, ...]
    end: Cycle
    cost: int

    @property
    def simple_jumps(self) -> int:
        return sum(1 for s in self.steps if s.simple_jump)

    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(s.vertex for s in self.steps)

    def describe(self) -> str:
        """Arrow-chain rendering; simple jumps are starred."""
        return " -> ".join(
            f"{s.vertex}({s.value}{'*' if s.simple_jump else ''})" for s in self.steps
        )


def score_sequence(g: ResolutionGraph, start: Cycle, vertex_ids) -> ComputationSequence:
    """Replay vertex additions from ``start``, recording pairings and cost."""
    if len(start) != g.n:
        raise CycleError(f"cycle has {len(start)} coefficients, graph has {g.n} vertices")
    m = intersection_matrix(g)
    p = [sum((Fraction(m[i][j]) * start.coeffs[j] for j in range(g.n)), Fraction(0))
         for i in range(g.n)]
    cur = list(start.coeffs)
    steps = []
    cost = Fraction(0)
    for vid in vertex_ids:
        i = g.index(vid)
        value = p[i]
        steps.append(SequenceStep(vid, value))
        if value > 1:
            cost += value - 1
        cur[i] += 1
        for j in range(g.n):
            if m[i][j]:
                p[j] += m[i][j]
    assert cost.denominator == 1
    return ComputationSequence(start, tuple(steps), Cycle(tuple(cur)), int(cost))


def laufer_sequence(g: ResolutionGraph, start: Cycle) -> ComputationSequence:
    """Run the generalized Laufer loop from an effective nonzero integral cycle.

    While the current cycle pairs positively with some vertex class, add the
    lowest-index such class.  On a negative definite graph this terminates at
    the least anti-nef cycle dominating the start.
    """
    require_negative_definite(g)
    if len(start) != g.n:
        raise CycleError(f"cycle has {len(start)} coefficients, graph has {g.n} vertices")
    if not start.is_integral:
        raise CycleError("Laufer runs need an integral starting cycle")
    if not start.is_effective:
        raise CycleError("Laufer runs need an effective starting cycle")
    if start.is_zero:
        raise CycleError("Laufer runs need a nonzero starting cycle")
    m = intersection_matrix(g)
    cur = list(start.as_ints())
    p = [sum(m[i][j] * cur[j] for j in range(g.n)) for i in range(g.n)]
    steps = []
    cost = 0
    while True:
        i = next((j for j in range(g.n) if p[j] > 0), None)
        if i is None:
            break
        steps.append(SequenceStep(g.vertices[i].id, Fraction(p[i])))
        if p[i] > 1:
            cost += p[i] - 1
        cur[i] += 1
        for j in range(g.n):
            if m[i][j]:
                p[j] += m[i][j]
    return ComputationSequence(start, tuple(steps), Cycle.of(cur), cost)


def artin_cycle(g: ResolutionGraph) -> tuple[Cycle, ComputationSequence]:
    """Least nonzero effective anti-nef cycle, with the sequence producing it.

    The recorded sequence starts at the zero cycle, adds the first canonical
    vertex as base element, then follows the deterministic Laufer loop.
    """
    require_negative_definite(g)
    base = Cycle.unit(g.n, 0)
    run = laufer_sequence(g, base)
    steps = (SequenceStep(g.vertices[0].id, Fraction(0)),) + run.steps
    return run.end, ComputationSequence(Cycle.zero(g.n), steps, run.end, run.cost)


def antinef_closure(g: ResolutionGraph, d: Cycle) -> Cycle:
    """Least anti-nef integral cycle componentwise above ``d``."""
    if len(d) == g.n and d.is_zero:
        raise CycleError("anti-nef closure of the zero cycle refused (degenerate)")
    return laufer_sequence(g, d).end
