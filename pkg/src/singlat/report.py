"""Aggregate invariant report and the JSON / text / DOT serializations.

JSON output is byte-stable for a fixed input: keys keep a fixed order,
rationals are rendered as exact "p/q" strings, integers stay bare.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .chimin import ChiMinResult, arithmetic_genus, min_chi, pg_lower_bound
from .cycles import Cycle, canonical_cycle, format_cycle, is_numerically_gorenstein
from .errors import SpliceError
from .graph import ResolutionGraph, definiteness, extend_with_minus_one
from .laufer import ComputationSequence, artin_cycle
from .pathbound import BoundsReport, PathResult, bounds_report, path_gamma
from .splice import (
    LeadingForm,
    SemigroupVerdict,
    SpliceDiagram,
    edge_determinant,
    leading_forms,
    semigroup_condition,
    splice_diagram,
)


@dataclass(frozen=True)
class KodairaCheck:
    attach: str
    semidefinite: bool


def check_kodaira(g: ResolutionGraph, attach: str) -> KodairaCheck:
    """Attach a (-1)-vertex and test negative semidefiniteness of the result."""
    extended = extend_with_minus_one(g, attach)
    return KodairaCheck(attach, definiteness(extended).negative_semidefinite)


@dataclass(frozen=True)
class SpliceReport:
    diagram: SpliceDiagram
    edge_determinants: tuple[tuple[tuple[str, str], int], ...]
    semigroup: tuple[SemigroupVerdict, ...]
    forms: tuple[LeadingForm, ...] | None
    integral_homology_sphere: bool


def build_splice_report(g: ResolutionGraph) -> SpliceReport:
    sd = splice_diagram(g)
    dets = tuple(
        (e.ends, edge_determinant(sd, *e.ends))
        for e in sd.edges
        if not (sd.is_leaf(e.ends[0]) or sd.is_leaf(e.ends[1]))
    )
    verdicts = semigroup_condition(sd)
    forms = None
    if all(v.satisfied for v in verdicts) and all(
        len(sd.incident(node)) == 3 for node in sd.nodes
    ):
        forms = leading_forms(sd)
    return SpliceReport(
        diagram=sd,
        edge_determinants=dets,
        semigroup=verdicts,
        forms=forms,
        integral_homology_sphere=definiteness(g).det_neg_m == 1,
    )


@dataclass(frozen=True)
class InvariantReport:
    graph: ResolutionGraph
    det_neg_m: int
    negative_definite: bool
    numerically_gorenstein: bool
    z_min: Cycle
    z_k: Cycle
    min_chi: ChiMinResult
    arithmetic_genus: int
    pg_lower_bound: int
    path: PathResult
    bounds: BoundsReport
    splice: SpliceReport | None
    kodaira: KodairaCheck | None


def build_report(
    g: ResolutionGraph,
    attach: str | None = None,
    cap: Cycle | None = None,
    state_limit: int | None = None,
) -> InvariantReport:
    """Compute every invariant the report aggregates; pure and replayable."""
    defres = definiteness(g)
    z_min, _ = artin_cycle(g)
    try:
        splice_section = build_splice_report(g)
    except SpliceError:
        splice_section = None
    return InvariantReport(
        graph=g,
        det_neg_m=defres.det_neg_m,
        negative_definite=defres.negative_definite,
        numerically_gorenstein=is_numerically_gorenstein(g),
        z_min=z_min,
        z_k=canonical_cycle(g),
        min_chi=min_chi(g),
        arithmetic_genus=arithmetic_genus(g),
        pg_lower_bound=pg_lower_bound(g),
        path=path_gamma(g, cap, state_limit),
        bounds=bounds_report(g, cap, state_limit),
        splice=splice_section,
        kodaira=check_kodaira(g, attach) if attach is not None else None,
    )


# ---------------------------------------------------------------------------
# JSON encoding


def frac_json(x):
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def cycle_json(g: ResolutionGraph, c: Cycle) -> dict:
    return {v.id: frac_json(a) for v, a in zip(g.vertices, c.coeffs)}


def sequence_json(seq: ComputationSequence) -> list:
    return [{"vertex": s.vertex, "value": frac_json(s.value)} for s in seq.steps]


def graph_json(g: ResolutionGraph) -> dict:
    return {
        "vertices": [
            {"id": v.id, "euler": v.euler, "genus": v.genus} for v in g.vertices
        ],
        "edges": [[g.vertices[i].id, g.vertices[j].id] for i, j in g.edges],
    }


def splice_json(sr: SpliceReport) -> dict:
    sd = sr.diagram
    data = {
        "nodes": list(sd.nodes),
        "leaves": list(sd.leaves),
        "edges": [
            {
                "ends": list(e.ends),
                "weights": {
                    end: w for end, w in zip(e.ends, e.weights) if w is not None
                },
                "chain": list(e.chain),
            }
            for e in sd.edges
        ],
        "edge_determinants": [
            {"edge": list(ends), "value": value}
            for ends, value in sr.edge_determinants
        ],
        "semigroup": [
            {
                "node": v.node,
                "toward": v.toward,
                "weight": v.weight,
                "generators": list(v.generators),
                "vacuous": v.vacuous,
                "satisfied": v.satisfied,
            }
            for v in sr.semigroup
        ],
        "integral_homology_sphere": sr.integral_homology_sphere,
    }
    if sr.forms is not None:
        data["leading_forms"] = [
            {
                "node": f.node,
                "monomials": [
                    {leaf: e for leaf, e in mono} for mono in f.monomials
                ],
                "text": f.text(),
                "coefficients": "unit (generic coefficients are not determined "
                "by the diagram)",
            }
            for f in sr.forms
        ]
    return data


def path_json(g: ResolutionGraph, p: PathResult) -> dict:
    return {
        "value": p.value,
        "end_cycle": cycle_json(g, p.end_cycle),
        "witness": sequence_json(p.witness),
        "states_expanded": p.states_expanded,
    }


def report_json(rep: InvariantReport) -> dict:
    g = rep.graph
    data = {
        "graph": graph_json(g),
        "det_neg_m": rep.det_neg_m,
        "negative_definite": rep.negative_definite,
        "numerically_gorenstein": rep.numerically_gorenstein,
        "z_min": cycle_json(g, rep.z_min),
        "z_k": cycle_json(g, rep.z_k),
        "min_chi": rep.min_chi.min_chi,
        "min_chi_witness": cycle_json(g, rep.min_chi.minimizer),
        "arithmetic_genus": rep.arithmetic_genus,
        "pg_lower_bound": rep.pg_lower_bound,
        "path": path_json(g, rep.path),
        "bounds": {
            "pg_lower": rep.bounds.pg_lower,
            "pg_upper": rep.bounds.pg_upper,
            "gap": rep.bounds.gap,
        },
    }
    if rep.splice is not None:
        data["splice"] = splice_json(rep.splice)
    if rep.kodaira is not None:
        data["kodaira_extension"] = {
            "attach": rep.kodaira.attach,
            "semidefinite": rep.kodaira.semidefinite,
        }
    return data


def dump_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# Text encoding ("key = value" lines; cycles use the round-trippable literal)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def splice_text(g: ResolutionGraph, sr: SpliceReport, prefix: str = "") -> list[str]:
    sd = sr.diagram
    lines = [
        f"{prefix}nodes = {','.join(sd.nodes)}",
        f"{prefix}leaves = {','.join(sd.leaves)}",
    ]
    for e in sd.edges:
        weights = ",".join(
            f"{end}:{w}" for end, w in zip(e.ends, e.weights) if w is not None
        )
        lines.append(f"{prefix}edge[{e.ends[0]}--{e.ends[1]}] = {weights}")
    for ends, value in sr.edge_determinants:
        lines.append(f"{prefix}edge_determinant[{ends[0]}--{ends[1]}] = {value}")
    for v in sr.semigroup:
        gens = ",".join(map(str, v.generators))
        kind = "vacuous" if v.vacuous else f"{v.weight} in <{gens}>"
        lines.append(
            f"{prefix}semigroup[{v.node}->{v.toward}] = {_bool(v.satisfied)} ({kind})"
        )
    lines.append(
        f"{prefix}integral_homology_sphere = {_bool(sr.integral_homology_sphere)}"
    )
    if sr.forms is not None:
        for f in sr.forms:
            lines.append(f"{prefix}form[{f.node}] = {f.text()}")
        lines.append(
            f"{prefix}form_coefficients = unit (generic coefficients are not "
            "determined by the diagram)"
        )
    return lines


def report_text(rep: InvariantReport) -> str:
    g = rep.graph
    lines = [
        f"vertices = {g.n}",
        f"edges = {len(g.edges)}",
        f"det_neg_m = {rep.det_neg_m}",
        f"negative_definite = {_bool(rep.negative_definite)}",
        f"numerically_gorenstein = {_bool(rep.numerically_gorenstein)}",
        f"z_min = {format_cycle(g, rep.z_min)}",
        f"z_k = {format_cycle(g, rep.z_k)}",
        f"min_chi = {rep.min_chi.min_chi}",
        f"min_chi_witness = {format_cycle(g, rep.min_chi.minimizer)}",
        f"arithmetic_genus = {rep.arithmetic_genus}",
        f"pg_lower_bound = {rep.pg_lower_bound} (valid when the geometric genus is positive)",
        f"path.value = {rep.path.value}",
        f"path.end_cycle = {format_cycle(g, rep.path.end_cycle)}",
        f"path.witness = {rep.path.witness.describe()}",
        f"bounds.pg_lower = {rep.bounds.pg_lower}",
        f"bounds.pg_upper = {rep.bounds.pg_upper}",
        f"bounds.gap = {rep.bounds.gap}",
    ]
    if rep.splice is not None:
        lines.extend(splice_text(g, rep.splice, prefix="splice."))
    if rep.kodaira is not None:
        lines.append(f"kodaira_extension.attach = {rep.kodaira.attach}")
        lines.append(
            f"kodaira_extension.semidefinite = {_bool(rep.kodaira.semidefinite)}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# DOT encoding


def graph_dot(g: ResolutionGraph, cycle: Cycle | None = None) -> str:
    lines = ["graph resolution {"]
    for i, v in enumerate(g.vertices):
        label = f"{v.id} ({v.euler})"
        if v.genus:
            label += f" g={v.genus}"
        if cycle is not None:
            label += f" : {cycle.coeffs[i]}"
        lines.append(f'  "{v.id}" [label="{label}"];')
    for i, j in g.edges:
        lines.append(f'  "{g.vertices[i].id}" -- "{g.vertices[j].id}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def splice_dot(sd: SpliceDiagram) -> str:
    lines = ["graph splice {"]
    for node in sd.nodes:
        lines.append(f'  "{node}" [shape=circle];')
    for leaf in sd.leaves:
        lines.append(f'  "{leaf}" [shape=plaintext];')
    for e in sd.edges:
        attrs = []
        if e.weights[0] is not None:
            attrs.append(f'taillabel="{e.weights[0]}"')
        if e.weights[1] is not None:
            attrs.append(f'headlabel="{e.weights[1]}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{e.ends[0]}" -- "{e.ends[1]}"{suffix};')
    lines.append("}")
    return "\n".join(lines) + "\n"
