"""Labeled Hasse diagrams of positive roots, and their exports.

Nodes are positive roots layered by height; an edge labeled i joins a root
to root-plus-simple-i.  The flag variant erases edges labeled by crossed
nodes, which splits the diagram; the piece holding a component's highest
root recovers that component's box.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .grading import GradedRootSystem
from .rootsys import (
    DiagramType,
    Root,
    RootSystem,
    build_root_system,
    height,
)


@dataclass(frozen=True)
class HasseDiagram:
    """nodes: (root, height) sorted by (height, root); edges: (from, to, label).

    Edge labels are 1-based global simple-root indices.
    """

    nodes: tuple[tuple[Root, int], ...]
    edges: tuple[tuple[int, int, int], ...]


@lru_cache(maxsize=None)
def _full_hasse(dtype: DiagramType) -> HasseDiagram:
    rs = build_root_system(dtype)
    nodes = tuple(
        (r, height(r)) for r in sorted(rs.positive_roots, key=lambda r: (height(r), r))
    )
    index = {r: i for i, (r, _) in enumerate(nodes)}
    rank = dtype.total_rank
    edges = []
    for a, (root, _) in enumerate(nodes):
        for i in range(rank):
            succ = tuple(c + int(j == i) for j, c in enumerate(root))
            b = index.get(succ)
            if b is not None:
                edges.append((a, b, i + 1))
    return HasseDiagram(nodes, tuple(edges))


def hasse(rs: RootSystem) -> HasseDiagram:
    """Full Hasse diagram on the positive roots."""
    return _full_hasse(rs.dtype)


def flag_hasse(graded: GradedRootSystem) -> HasseDiagram:
    """Full diagram minus every edge labeled by a crossed node."""
    full = hasse(graded.rs)
    crossed = {i + 1 for i in graded.decoration.crossed_nodes()}
    return HasseDiagram(
        full.nodes, tuple(e for e in full.edges if e[2] not in crossed)
    )


def highest_component(
    h: HasseDiagram, graded: GradedRootSystem
) -> tuple[frozenset[Root], ...]:
    """Per ambient component, the piece of h holding its highest root."""
    adj: dict[int, list[int]] = {i: [] for i in range(len(h.nodes))}
    for a, b, _ in h.edges:
        adj[a].append(b)
        adj[b].append(a)
    index = {r: i for i, (r, _) in enumerate(h.nodes)}
    out = []
    for top in graded.rs.highest_roots:
        seen = {index[top]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        out.append(frozenset(h.nodes[i][0] for i in seen))
    return tuple(out)


def restrict(h: HasseDiagram, roots: frozenset[Root]) -> HasseDiagram:
    """Induced subdiagram on a subset of the nodes."""
    keep = [i for i, (r, _) in enumerate(h.nodes) if r in roots]
    remap = {old: new for new, old in enumerate(keep)}
    return HasseDiagram(
        tuple(h.nodes[i] for i in keep),
        tuple(
            (remap[a], remap[b], lab)
            for a, b, lab in h.edges
            if a in remap and b in remap
        ),
    )


def _coeffs(root: Root) -> str:
    return ",".join(str(c) for c in root)


def export(h: HasseDiagram, format: str) -> bytes:
    """Serialize a diagram; identical inputs give byte-identical output."""
    if format == "json":
        doc = {
            "nodes": [{"coeffs": list(r), "grade": g} for r, g in h.nodes],
            "edges": [{"from": a, "to": b, "label": lab} for a, b, lab in h.edges],
        }
        return json.dumps(doc, separators=(",", ":")).encode()
    if format == "dot":
        lines = ["digraph hasse {", "rankdir=BT;"]
        by_height: dict[int, list[str]] = {}
        for r, g in h.nodes:
            by_height.setdefault(g, []).append(f'"{_coeffs(r)}"')
        for g in sorted(by_height):
            lines.append("{ rank=same; " + " ".join(s + ";" for s in by_height[g]) + " }")
        for a, b, lab in h.edges:
            lines.append(
                f'"{_coeffs(h.nodes[a][0])}" -> "{_coeffs(h.nodes[b][0])}" [label={lab}];'
            )
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if format == "text":
        lines = []
        by_height: dict[int, list[Root]] = {}
        for r, g in h.nodes:
            by_height.setdefault(g, []).append(r)
        for g in sorted(by_height):
            row = " ".join("(" + _coeffs(r) + ")" for r in by_height[g])
            lines.append(f"height {g}: {row}")
        for a, b, lab in h.edges:
            lines.append(
                f"({_coeffs(h.nodes[a][0])}) -{lab}-> ({_coeffs(h.nodes[b][0])})"
            )
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown export format {format!r}; use dot, json or text")
