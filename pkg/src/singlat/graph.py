"""Resolution-graph model: parsing, validation, intersection form, definiteness.

A resolution graph is a connected simple graph whose vertices carry an Euler
number (self-intersection) and a genus.  The vertex order of the input file is
the canonical coefficient order used by every cycle operation downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import linalg
from .errors import GraphError, GraphParseError

_ID_RE = re.compile(r"^[^\s:,#=]+$")


@dataclass(frozen=True)
class Vertex:
    id: str
    euler: int
    genus: int = 0


@dataclass(frozen=True)
class ResolutionGraph:
    """Immutable weighted dual graph.

    ``vertices`` keeps the canonical order; ``edges`` holds index pairs
    (i, j) with i < j, sorted.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v.id: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbr: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            nbr[i].append(j)
            nbr[j].append(i)
        return tuple(tuple(sorted(x)) for x in nbr)

    def index(self, vertex_id: str) -> int:
        try:
            return self._index[vertex_id]
        except KeyError:
            raise GraphError(f"unknown vertex id {vertex_id!r}") from None

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def eulers(self) -> tuple[int, ...]:
        return tuple(v.euler for v in self.vertices)

    def genera(self) -> tuple[int, ...]:
        return tuple(v.genus for v in self.vertices)

    def to_text(self) -> str:
        """Serialize back to the line format accepted by parse_graph."""
        lines = []
        for v in self.vertices:
            line = f"vertex {v.id} {v.euler}"
            if v.genus:
                line += f" genus={v.genus}"
            lines.append(line)
        for i, j in self.edges:
            lines.append(f"edge {self.vertices[i].id} {self.vertices[j].id}")
        return "\n".join(lines) + "\n"


def build_graph(vertices, edges) -> ResolutionGraph:
    """Validate and build a graph from (id, euler[, genus]) items and id pairs."""
    vs: list[Vertex] = []
    for item in vertices:
        if isinstance(item, Vertex):
            vs.append(item)
        else:
            vs.append(Vertex(*item))
    if not vs:
        raise GraphError("graph needs at least one vertex")
    index: dict[str, int] = {}
    for v in vs:
        if not _ID_RE.match(v.id):
            raise GraphError(f"invalid vertex id {v.id!r}")
        if v.id in index:
            raise GraphError(f"duplicate vertex id {v.id!r}")
        if v.genus < 0:
            raise GraphError(f"vertex {v.id!r} has negative genus")
        index[v.id] = len(index)
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for a, b in edges:
        if a not in index:
            raise GraphError(f"edge references unknown vertex id {a!r}")
        if b not in index:
            raise GraphError(f"edge references unknown vertex id {b!r}")
        i, j = index[a], index[b]
        if i == j:
            raise GraphError(f"self-loop at vertex {a!r}")
        if i > j:
            i, j = j, i
        if (i, j) in seen:
            raise GraphError(f"duplicate edge {a!r} -- {b!r}")
        seen.add((i, j))
        pairs.append((i, j))
    g = ResolutionGraph(tuple(vs), tuple(sorted(pairs)))
    _check_connected(g)
    return g


def _check_connected(g: ResolutionGraph) -> None:
    reached = {0}
    stack = [0]
    while stack:
        for j in g.adjacency[stack.pop()]:
            if j not in reached:
                reached.add(j)
                stack.append(j)
    if len(reached) != g.n:
        missing = sorted(set(range(g.n)) - reached)
        raise GraphError(
            f"graph is disconnected (vertex {g.vertices[missing[0]].id!r} unreachable)"
        )


def parse_graph(text: str) -> ResolutionGraph:
    """Parse the line-oriented graph format.

    Lines are ``vertex <id> <euler:int> [genus=<int>]`` or ``edge <id> <id>``;
    ``#`` starts a comment.  The vertex order of the file is the canonical
    coefficient order everywhere.
    """
    vertices: list[Vertex] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) not in (3, 4):
                raise GraphParseError(lineno, "expected 'vertex <id> <euler> [genus=<g>]'")
            vid = parts[1]
            if not _ID_RE.match(vid):
                raise GraphParseError(lineno, f"invalid vertex id {vid!r}")
            try:
                euler = int(parts[2])
            except ValueError:
                raise GraphParseError(lineno, f"invalid Euler number {parts[2]!r}") from None
            genus = 0
            if len(parts) == 4:
                if not parts[3].startswith("genus="):
                    raise GraphParseError(lineno, f"expected 'genus=<int>', got {parts[3]!r}")
                try:
                    genus = int(parts[3][len("genus="):])
                except ValueError:
                    raise GraphParseError(lineno, f"invalid genus {parts[3]!r}") from None
                if genus < 0:
                    raise GraphParseError(lineno, "genus must be nonnegative")
            vertices.append(Vertex(vid, euler, genus))
        elif parts[0] == "edge":
            if len(parts) != 3:
                raise GraphParseError(lineno, "expected 'edge <id> <id>'")
            edges.append((parts[1], parts[2]))
        else:
            raise GraphParseError(lineno, f"unknown directive {parts[0]!r}")
    return build_graph(vertices, edges)


@lru_cache(maxsize=None)
def intersection_matrix(g: ResolutionGraph) -> linalg.IntMatrix:
    """Symmetric matrix with Euler numbers on the diagonal, 1 per edge."""
    m = [[0] * g.n for _ in range(g.n)]
    for i, v in enumerate(g.vertices):
        m[i][i] = v.euler
    for i, j in g.edges:
        m[i][j] = 1
        m[j][i] = 1
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class DefinitenessResult:
    negative_definite: bool
    negative_semidefinite: bool
    det_neg_m: int


@lru_cache(maxsize=None)
def definiteness(g: ResolutionGraph) -> DefinitenessResult:
    """Exact definiteness flags of the intersection form, plus det(-M)."""
    neg = tuple(tuple(-x for x in row) for row in intersection_matrix(g))
    return DefinitenessResult(
        negative_definite=linalg.is_positive_definite(neg),
        negative_semidefinite=linalg.is_positive_semidefinite(neg),
        det_neg_m=linalg.bareiss_determinant(neg),
    )


def extend_with_minus_one(g: ResolutionGraph, attach: str) -> ResolutionGraph:
    """Glue a fresh genus-0 vertex of Euler number -1 to ``attach`` by one edge."""
    i = g.index(attach)
    k = g.n
    fresh = f"v{k}"
    taken = set(g.ids)
    while fresh in taken:
        k += 1
        fresh = f"v{k}"
    vertices = g.vertices + (Vertex(fresh, -1, 0),)
    edges = tuple(sorted(g.edges + ((i, g.n),)))
    return ResolutionGraph(vertices, edges)


@dataclass(frozen=True)
class MinimalGoodResult:
    minimal: bool
    contractible: tuple[str, ...]


def is_minimal_good(g: ResolutionGraph) -> MinimalGoodResult:
    """List genus-0 (-1)-vertices of valence <= 2 (the blow-downs that keep
    the graph simple); the graph is minimal good when there are none."""
    bad = tuple(
        v.id
        for i, v in enumerate(g.vertices)
        if v.euler == -1 and v.genus == 0 and g.degree(i) <= 2
    )
    return MinimalGoodResult(minimal=not bad, contractible=bad)
