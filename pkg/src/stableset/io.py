"""Instance parsing and result serialization.

Two instance formats are accepted: a JSON object {"n": ..., "labels": ...,
"edges": [[u, v], ...]} and a whitespace edge list whose first line is the
alternative count.  Loops are rejected; duplicate edges collapse.
"""

from __future__ import annotations

import json
from typing import Optional

from .bitset import Mask, members
from .contraction import Contraction
from .errors import LoopEdge, ParseError
from .relations import DecisionProblem
from .solutions import SolutionFamily, FamilyForm


def parse_instance(text: str) -> DecisionProblem:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_edge_list(text)


def _parse_json(text: str) -> DecisionProblem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(doc, dict) or "n" not in doc:
        raise ParseError("instance object needs an 'n' field")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer")
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise ParseError("'labels' must list one name per alternative")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list of [u, v] pairs")
    checked = []
    for e in edges:
        if (not isinstance(e, (list, tuple)) or len(e) != 2
                or not all(isinstance(v, int) for v in e)):
            raise ParseError(f"malformed edge {e!r}")
        u, v = e
        _check_edge(u, v, n)
        checked.append((u, v))
    return DecisionProblem.from_edges(n, checked,
                                      labels=[str(x) for x in labels] if labels else None)


def _parse_edge_list(text: str) -> DecisionProblem:
    lines = text.splitlines()
    header = None
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise ParseError("header must be the alternative count", line=lineno)
            header = int(fields[0])
            if header < 1:
                raise ParseError("alternative count must be positive", line=lineno)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer edge {line!r}", line=lineno) from None
        _check_edge(u, v, header)
        edges.append((u, v))
    if header is None:
        raise ParseError("empty instance document")
    return DecisionProblem.from_edges(header, edges)


def _check_edge(u: int, v: int, n: int):
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"edge ({u},{v}) out of range for n={n}")
    if u == v:
        raise LoopEdge(u)


def serialize_instance(p: DecisionProblem) -> str:
    doc = {"n": p.n, "labels": list(p.labels),
           "edges": sorted([x, y] for x, y in p.rel.pairs())}
    return json.dumps(doc, sort_keys=True)


def family_document(family: SolutionFamily) -> dict:
    doc: dict = {"form": family.form.value, "count": family.count()}
    if family.form is FamilyForm.EXPLICIT:
        doc["sets"] = [list(members(v)) for v in family]
    else:
        doc["components"] = [list(members(c)) for c in family.components]
        doc["sets"] = [list(members(v)) for v in family]
    return doc


def set_document(mask: Mask) -> list[int]:
    return list(members(mask))


def export_dot(p: DecisionProblem, c: Optional[Contraction] = None) -> str:
    """Graphviz digraph; components become clusters when a contraction is
    supplied, with condensation edges drawn bold between cluster anchors."""
    lines = ["digraph decision_problem {"]
    if c is None:
        for x in range(p.n):
            lines.append(f'  a{x} [label="{p.labels[x]}"];')
    else:
        for i, cls in enumerate(c.classes):
            xs = members(cls)
            if len(xs) == 1:
                lines.append(f'  a{xs[0]} [label="{p.labels[xs[0]]}"];')
            else:
                lines.append(f"  subgraph cluster_{i} {{")
                lines.append(f'    label="component {i}";')
                for x in xs:
                    lines.append(f'    a{x} [label="{p.labels[x]}"];')
                lines.append("  }")
    for x, y in sorted(p.rel.pairs()):
        lines.append(f"  a{x} -> a{y};")
    if c is not None:
        for i, j in sorted(c.cond.pairs()):
            src = members(c.classes[i])[0]
            dst = members(c.classes[j])[0]
            lines.append(f"  a{src} -> a{dst} [style=bold, color=red, "
                         f"ltail=cluster_{i}, lhead=cluster_{j}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
