"""Splice diagrams: weights, edge determinants, semigroup condition, leading forms.

The diagram of a tree-shaped resolution graph suppresses every valence-<=2
vertex into an edge; the remaining valence->=3 vertices are the nodes and the
valence-1 vertices are the leaves.  The weight a node carries toward an
incident edge is the determinant of the negated intersection form restricted
to the branch on the far side of that node.

Linking-number conventions used below, for a node v and a leaf w:

* l'(v, w) multiplies the off-path weights at every node strictly beyond v
  on the path v -> w (used by the semigroup condition, against the edge
  weight d_ve);
* l(v, w) additionally multiplies v's own off-path weights (used by the
  leading forms, against the node determinant d_v = product of all weights
  at v).

The two are proportional, so both tests accept the same exponent vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .cycles import require_negative_definite
from .errors import SpliceError
from .graph import ResolutionGraph, intersection_matrix


@dataclass(frozen=True)
class SpliceEdge:
    ends: tuple[str, str]
    weights: tuple[int | None, int | None]
    chain: tuple[str, ...]

    def other(self, end_id: str) -> str:
        if end_id == self.ends[0]:
            return self.ends[1]
        if end_id == self.ends[1]:
            return self.ends[0]
        raise SpliceError(f"{end_id!r} is not an end of edge {self.ends}")

    def weight_at(self, end_id: str) -> int | None:
        if end_id == self.ends[0]:
            return self.weights[0]
        if end_id == self.ends[1]:
            return self.weights[1]
        raise SpliceError(f"{end_id!r} is not an end of edge {self.ends}")


@dataclass(frozen=True)
class SpliceDiagram:
    nodes: tuple[str, ...]
    leaves: tuple[str, ...]
    edges: tuple[SpliceEdge, ...]

    def is_leaf(self, end_id: str) -> bool:
        return end_id in self.leaves

    def incident(self, end_id: str) -> tuple[SpliceEdge, ...]:
        return tuple(e for e in self.edges if end_id in e.ends)

    def node_determinant(self, node: str) -> int:
        """Product of all weights carried by the node."""
        d = 1
        for e in self.incident(node):
            w = e.weight_at(node)
            assert w is not None
            d *= w
        return d


def splice_diagram(g: ResolutionGraph) -> SpliceDiagram:
    """Splice diagram of a tree-shaped, genus-0, negative definite graph."""
    require_negative_definite(g)
    for v in g.vertices:
        if v.genus != 0:
            raise SpliceError(f"vertex {v.id!r} has positive genus; diagram undefined")
    if len(g.edges) != g.n - 1:
        raise SpliceError("graph is not a tree; splice diagram undefined")
    deg = [g.degree(i) for i in range(g.n)]
    node_idx = [i for i in range(g.n) if deg[i] >= 3]
    leaf_idx = [i for i in range(g.n) if deg[i] == 1]
    if not node_idx:
        raise SpliceError(
            "no vertex of valence >= 3: suppressing the valence-<=2 chains "
            "reduces the whole graph away, the diagram is degenerate"
        )
    m = intersection_matrix(g)
    neg = tuple(tuple(-x for x in row) for row in m)
    ids = g.ids

    def branch_det(excluded: int, first: int) -> int:
        seen = {excluded, first}
        stack = [first]
        branch = [first]
        while stack:
            for j in g.adjacency[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    branch.append(j)
                    stack.append(j)
        return linalg.bareiss_determinant(linalg.submatrix(neg, sorted(branch)))

    edges: dict[tuple[int, int], SpliceEdge] = {}
    for v in node_idx:
        for first in g.adjacency[v]:
            chain: list[int] = []
            prev, cur = v, first
            while deg[cur] == 2:
                nxt = next(j for j in g.adjacency[cur] if j != prev)
                chain.append(cur)
                prev, cur = cur, nxt
            key = (min(v, cur), max(v, cur))
            if key in edges:
                continue
            if v > cur:
                chain.reverse()
            lo, hi = key
            first_from_lo = chain[0] if chain else hi
            first_from_hi = chain[-1] if chain else lo
            w_lo = branch_det(lo, first_from_lo) if deg[lo] >= 3 else None
            w_hi = branch_det(hi, first_from_hi) if deg[hi] >= 3 else None
            edges[key] = SpliceEdge(
                ends=(ids[lo], ids[hi]),
                weights=(w_lo, w_hi),
                chain=tuple(ids[c] for c in chain),
            )
    ordered = tuple(edges[k] for k in sorted(edges))
    return SpliceDiagram(
        nodes=tuple(ids[i] for i in node_idx),
        leaves=tuple(ids[i] for i in leaf_idx),
        edges=ordered,
    )


def edge_determinant(sd: SpliceDiagram, v: str, w: str) -> int:
    """d_v*d_w minus the product of the remaining weights at both ends."""
    edge = next((e for e in sd.edges if set(e.ends) == {v, w}), None)
    if edge is None:
        raise SpliceError(f"no diagram edge between {v!r} and {w!r}")
    if sd.is_leaf(v) or sd.is_leaf(w):
        raise SpliceError("edge determinant needs both ends to be nodes")
    dv = edge.weight_at(v)
    dw = edge.weight_at(w)
    rest_v = sd.node_determinant(v) // dv
    rest_w = sd.node_determinant(w) // dw
    return dv * dw - rest_v * rest_w


def _links_beyond(sd: SpliceDiagram, node: str, edge: SpliceEdge) -> dict[str, int]:
    """l'(node, w) for every leaf w on the far side of ``edge``."""
    res: dict[str, int] = {}

    def walk(prev_end: str, via: SpliceEdge, acc: int) -> None:
        cur = via.other(prev_end)
        if sd.is_leaf(cur):
            res[cur] = acc
            return
        incident = sd.incident(cur)
        for nxt in incident:
            if nxt == via:
                continue
            off = 1
            for f in incident:
                if f != via and f != nxt:
                    w = f.weight_at(cur)
                    assert w is not None
                    off *= w
            walk(cur, nxt, acc * off)

    walk(node, edge, 1)
    return res


def semigroup_member(generators, target: int) -> bool:
    """Bounded DP: is target a nonnegative integer combination of the generators."""
    if target == 0:
        return True
    reach = [False] * (target + 1)
    reach[0] = True
    for s in range(1, target + 1):
        reach[s] = any(s >= a and reach[s - a] for a in generators)
    return reach[target]


@dataclass(frozen=True)
class SemigroupVerdict:
    node: str
    toward: str
    weight: int
    generators: tuple[int, ...]
    vacuous: bool
    satisfied: bool


def semigroup_condition(sd: SpliceDiagram) -> tuple[SemigroupVerdict, ...]:
    """Per (node, incident edge): is the edge weight in the semigroup spanned
    by the linking numbers of the leaves beyond that edge.

    Leaf edges are vacuous (the single leaf beyond has linking number 1).
    """
    verdicts = []
    for node in sd.nodes:
        for edge in sd.incident(node):
            other = edge.other(node)
            weight = edge.weight_at(node)
            assert weight is not None
            if sd.is_leaf(other):
                verdicts.append(
                    SemigroupVerdict(node, other, weight, (1,), True, True)
                )
                continue
            gens = tuple(sorted(_links_beyond(sd, node, edge).values()))
            ok = semigroup_member(gens, weight)
            verdicts.append(SemigroupVerdict(node, other, weight, gens, False, ok))
    return tuple(verdicts)


@dataclass(frozen=True)
class LeadingForm:
    """One polynomial per 3-valent node: a sum of one monomial per incident
    edge, in the variables attached to the diagram leaves.  Coefficients are
    emitted as 1; genuine equations carry generic coefficients instead.
    """

    node: str
    monomials: tuple[tuple[tuple[str, int], ...], ...]

    def text(self) -> str:
        parts = []
        for mono in self.monomials:
            factors = [
                f"z_{leaf}" if e == 1 else f"z_{leaf}^{e}" for leaf, e in mono
            ]
            parts.append("*".join(factors))
        return " + ".join(parts)


def _min_degree_exponents(links: list[int], target: int) -> tuple[int, ...] | None:
    """Nonnegative solution of sum(a_i * links_i) = target with minimal total
    degree, ties broken lexicographically on the exponent vector."""
    k = len(links)
    best: tuple[int, tuple[int, ...]] | None = None
    alpha = [0] * k

    def rec(idx: int, remaining: int, total: int) -> None:
        nonlocal best
        if idx == k:
            if remaining == 0:
                cand = (total, tuple(alpha))
                if best is None or cand < best:
                    best = cand
            return
        for a in range(remaining // links[idx] + 1):
            alpha[idx] = a
            rec(idx + 1, remaining - a * links[idx], total + a)
        alpha[idx] = 0

    rec(0, target, 0)
    return best[1] if best is not None else None


def leading_forms(sd: SpliceDiagram) -> tuple[LeadingForm, ...]:
    """Leading forms of the splice equations, one per (3-valent) node."""
    for node in sd.nodes:
        if len(sd.incident(node)) != 3:
            raise SpliceError(
                f"node {node!r} has valence {len(sd.incident(node))}; "
                "leading forms are only emitted for 3-valent nodes"
            )
    for verdict in semigroup_condition(sd):
        if not verdict.satisfied:
            raise SpliceError(
                f"semigroup condition fails at node {verdict.node!r} toward "
                f"{verdict.toward!r}: {verdict.weight} is not in "
                f"<{', '.join(map(str, verdict.generators))}>"
            )
    leaf_pos = {leaf: i for i, leaf in enumerate(sd.leaves)}
    forms = []
    for node in sd.nodes:
        d_node = sd.node_determinant(node)
        monomials = []
        for edge in sd.incident(node):
            off = d_node // edge.weight_at(node)
            if sd.is_leaf(edge.other(node)):
                beyond = {edge.other(node): 1}
            else:
                beyond = _links_beyond(sd, node, edge)
            leaves = sorted(beyond, key=leaf_pos.__getitem__)
            links = [off * beyond[w] for w in leaves]
            expo = _min_degree_exponents(links, d_node)
            assert expo is not None  # guaranteed by the semigroup condition
            mono = tuple((w, e) for w, e in zip(leaves, expo) if e > 0)
            monomials.append((min(leaf_pos[w] for w in leaves), mono))
        monomials.sort()
        forms.append(LeadingForm(node, tuple(m for _, m in monomials)))
    return tuple(forms)
