"""JSON and DOT serialization for paths, graphs, and reports.

Exactness is contractual: times and rational weight coordinates serialize as
fraction strings ("3/4"), never decimals.  Reduced words serialize as
1-based integer lists.  All emitters iterate fixed orderings so identical
inputs produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .crystal import CrystalGraph
from .qbg import BRUHAT, Qbg, QbgEdge, assemble_qbg
from .qlspaths import RationalPath, ShapeData, shape_of
from .rootsys import root_system
from .weylgroup import WeylElem, from_word


def frac_str(x) -> str:
    return str(Fraction(x))


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def word_str(w: WeylElem) -> str:
    return "e" if not w.reduced_word else "".join(f"s{j}" for j in w.reduced_word)


# -- rational paths -----------------------------------------------------------


def path_to_json(eta: RationalPath) -> dict:
    return {
        "cosets": [list(w.reduced_word) for w in eta.cosets],
        "times": [frac_str(t) for t in eta.times],
    }


def path_from_json(shape: ShapeData, obj: dict) -> RationalPath:
    cosets = tuple(from_word(shape.rs, word) for word in obj["cosets"])
    times = tuple(parse_frac(t) for t in obj["times"])
    return RationalPath(cosets, times)


def render_path(eta: RationalPath) -> str:
    """Compact one-line form, e.g. ``(e, s1; 0, 1/2, 1)``."""
    ws = ", ".join(word_str(w) for w in eta.cosets)
    ts = ", ".join(frac_str(t) for t in eta.times)
    return f"({ws}; {ts})"


# -- quantum Bruhat graphs ----------------------------------------------------


def qbg_to_json(g: Qbg) -> dict:
    return {
        "cartan_type": str(g.rs.cartan),
        "parabolic": sorted(g.J),
        "vertices": [list(w.reduced_word) for w in g.vertices],
        "edges": [
            {
                "source": list(e.source.reduced_word),
                "target": list(e.target.reduced_word),
                "label": list(e.label),
                "kind": e.kind,
            }
            for e in g.edges
        ],
    }


def qbg_from_json(obj: dict) -> Qbg:
    rs = root_system(obj["cartan_type"])
    J = rs.normalize_parabolic(obj["parabolic"])
    vertices = tuple(from_word(rs, w) for w in obj["vertices"])
    edges = tuple(
        QbgEdge(
            from_word(rs, e["source"]),
            from_word(rs, e["target"]),
            tuple(e["label"]),
            e["kind"],
        )
        for e in obj["edges"]
    )
    return assemble_qbg(rs, J, vertices, edges)


def qbg_to_dot(g: Qbg) -> str:
    """Bruhat edges solid, quantum edges dashed, labels in root coordinates."""
    lines = ["digraph qbg {"]
    for w in g.vertices:
        lines.append(f'  "{word_str(w)}";')
    for e in g.edges:
        style = "solid" if e.kind == BRUHAT else "dashed"
        label = ",".join(str(c) for c in e.label)
        lines.append(
            f'  "{word_str(e.source)}" -> "{word_str(e.target)}"'
            f' [label="{label}", style={style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- crystal graphs -----------------------------------------------------------


def crystal_to_json(g: CrystalGraph) -> dict:
    return {
        "cartan_type": str(g.shape.rs.cartan),
        "weight": list(g.shape.weight),
        "nodes": [path_to_json(eta) for eta in g.nodes],
        "arrows": [{"source": s, "index": j, "target": t} for s, j, t in g.arrows],
    }


def crystal_from_json(obj: dict) -> CrystalGraph:
    shape = shape_of(root_system(obj["cartan_type"]), obj["weight"])
    nodes = tuple(path_from_json(shape, n) for n in obj["nodes"])
    arrows = tuple((a["source"], a["index"], a["target"]) for a in obj["arrows"])
    return CrystalGraph(shape, nodes, arrows)


def crystal_to_dot(g: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for i, eta in enumerate(g.nodes):
        lines.append(f'  n{i} [label="{render_path(eta)}"];')
    for s, j, t in g.arrows:
        lines.append(f'  n{s} -> n{t} [label="{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- reports ------------------------------------------------------------------


def to_json_str(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
