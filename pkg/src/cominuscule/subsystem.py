"""The root subsystem spanned by the extreme-grade roots of a decoration.

Two independent constructions of the same subsystem: generate_subsystem
closes the top- and bottom-grade roots under reflection, direct_subsystem
takes them together with their pairwise differences.  Either way the result
carries an induced simple system whose decorated diagram is the answer the
rest of the package is about.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classify import recognize_labelings
from .errors import ClassificationError
from .grading import Decoration, GradedRootSystem, box_union
from .rootsys import Component, DiagramType, Root, RootSystem, is_positive


@dataclass(frozen=True)
class Subsystem:
    """A reflection-closed set of ambient roots with its induced simple system.

    check_grades rescales each member's grade by its component's top grade,
    so values are always -1, 0 or +1.
    """

    graded: GradedRootSystem
    roots: frozenset[Root]
    simples: tuple[Root, ...]
    cartan: tuple[tuple[int, ...], ...]
    check_grades: dict[Root, int]

    @property
    def ambient(self) -> RootSystem:
        return self.graded.rs


@dataclass(frozen=True)
class DecoratedDiagram:
    """A diagram type with a decoration, plus where its nodes sit upstream.

    node_embedding[i] is the ambient root realizing global node i (components
    concatenated, Bourbaki order inside each).  For user-built diagrams the
    embedding is just the diagram's own simple roots.
    """

    dtype: DiagramType
    decoration: Decoration
    node_embedding: tuple[Root, ...]

    def __str__(self) -> str:
        return f"{self.dtype}:{self.decoration}"


def _check_grade(graded: GradedRootSystem, root: Root) -> int:
    g = graded.grades[root]
    if g == 0:
        return 0
    m = graded.max_grades[graded.rs.root_component(root)]
    if g != m and g != -m:
        raise ClassificationError(
            f"root {root} has grade {g}, outside {{-{m}, 0, {m}}}"
        )
    return 1 if g > 0 else -1


def _make_subsystem(graded: GradedRootSystem, roots: frozenset[Root]) -> Subsystem:
    rs = graded.rs
    positives = sorted(
        (r for r in roots if is_positive(r)),
        key=lambda r: (rs.root_component(r), r),
    )
    pos_set = set(positives)
    sums = set()
    for i, a in enumerate(positives):
        for b in positives[i:]:
            sums.add(tuple(x + y for x, y in zip(a, b)))
    simples = tuple(p for p in positives if p not in sums)
    idx = [rs.index[s] for s in simples]
    cartan = tuple(
        tuple(int(rs._pair[b, a]) for b in idx) for a in idx
    )
    check_grades = {r: _check_grade(graded, r) for r in roots}
    return Subsystem(graded, roots, simples, cartan, check_grades)


def generate_subsystem(graded: GradedRootSystem) -> Subsystem:
    """Reflection closure of the top-grade roots and their negatives."""
    rs = graded.rs
    index = rs.index
    members = {index[r] for r in box_union(graded)}
    members |= {index[tuple(-c for c in rs.roots[i])] for i in members}
    while True:
        arr = np.fromiter(members, dtype=np.int64, count=len(members))
        closure = set(map(int, rs._refl[np.ix_(arr, arr)].flat))
        if closure <= members:
            break
        members |= closure
    return _make_subsystem(graded, frozenset(rs.roots[i] for i in members))


def direct_subsystem(graded: GradedRootSystem) -> Subsystem:
    """Top-grade roots, their negatives, and their pairwise differences.

    Independent of generate_subsystem by construction; the two must agree.
    """
    rs = graded.rs
    box = sorted(box_union(graded))
    out = set(box)
    out |= {tuple(-c for c in r) for r in box}
    for a in box:
        for b in box:
            if a is b:
                continue
            d = tuple(x - y for x, y in zip(a, b))
            if d in rs.index:
                out.add(d)
    return _make_subsystem(graded, frozenset(out))


def simple_system(sub: Subsystem) -> tuple[Root, ...]:
    """Positive members not expressible as a sum of two positive members."""
    return sub.simples


def decorated_diagram(sub: Subsystem) -> DecoratedDiagram:
    """Name the subsystem's diagram and cross its grade +1 simple roots.

    Among the automorphic Bourbaki labelings of each component, take the one
    placing the crossed node earliest; this makes the output a fixed point of
    the pipeline instead of flipping under chain reversal or fork swaps.
    """
    components: list[Component] = []
    order: list[int] = []
    crossed: list[bool] = []
    for family, rank, labelings in recognize_labelings(sub.cartan):
        def marks(nodes: tuple[int, ...]) -> tuple[bool, ...]:
            return tuple(sub.check_grades[sub.simples[i]] == 1 for i in nodes)

        nodes = min(labelings, key=lambda c: ([not m for m in marks(c)], c))
        local = marks(nodes)
        if sum(local) != 1:
            raise ClassificationError(
                f"subsystem component has {sum(local)} grade-1 simple roots,"
                " expected 1"
            )
        components.append(Component(family, rank))
        order.extend(nodes)
        crossed.extend(local)
    embedding = tuple(sub.simples[i] for i in order)
    return DecoratedDiagram(
        DiagramType(tuple(components)), Decoration(tuple(crossed)), embedding
    )


def perpendicular_compacts(sub: Subsystem) -> frozenset[Root]:
    """Ambient grade-0 roots pairing to zero with every subsystem member."""
    rs = sub.graded.rs
    if not sub.roots:
        return frozenset(r for r in rs.roots if sub.graded.grades[r] == 0)
    sub_idx = np.fromiter(
        (rs.index[r] for r in sub.roots), dtype=np.int64, count=len(sub.roots)
    )
    out = []
    for r in rs.roots:
        if sub.graded.grades[r] == 0:
            if not rs._pair[rs.index[r], sub_idx].any():
                out.append(r)
    return frozenset(out)


def associated_diagram(graded: GradedRootSystem) -> DecoratedDiagram:
    """Full pipeline step: decoration in, associated decorated diagram out."""
    return decorated_diagram(generate_subsystem(graded))
