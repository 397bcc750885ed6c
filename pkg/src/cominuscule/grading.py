"""Decorations and the grading they induce on a root system.

Crossing a set of nodes grades every root by the sum of its coefficients
over the crossed nodes.  Per component, the roots sitting at the top grade
form the box; their negatives are the minimal roots.  A component with no
cross contributes nothing and is normally an input error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DecorationError, NotARootError
from .rootsys import DiagramType, Root, RootSystem, build_root_system, negate


@dataclass(frozen=True)
class Decoration:
    """Which nodes of a diagram are crossed, as a 0/1-style boolean tuple."""

    crossed: tuple[bool, ...]

    @staticmethod
    def from_string(text: str) -> "Decoration":
        marks = []
        for pos, ch in enumerate(text):
            if ch == "x":
                marks.append(True)
            elif ch == "o":
                marks.append(False)
            else:
                raise DecorationError(
                    f"bad decoration character {ch!r} at position {pos}; use 'x' or 'o'"
                )
        return Decoration(tuple(marks))

    def crossed_nodes(self) -> tuple[int, ...]:
        """0-based indices of the crossed nodes."""
        return tuple(i for i, c in enumerate(self.crossed) if c)

    def __str__(self) -> str:
        return "".join("x" if c else "o" for c in self.crossed)


class GradedRootSystem:
    """A root system together with the grading cut out by a decoration."""

    def __init__(
        self,
        rs: RootSystem,
        decoration: Decoration,
        *,
        allow_point_factors: bool = False,
    ) -> None:
        if len(decoration.crossed) != rs.dtype.total_rank:
            raise DecorationError(
                f"decoration length {len(decoration.crossed)} != rank"
                f" {rs.dtype.total_rank} of {rs.dtype}"
            )
        self.rs = rs
        self.decoration = decoration

        crossed = decoration.crossed_nodes()
        self.grades: dict[Root, int] = {
            r: sum(r[i] for i in crossed) for r in rs.roots
        }

        ncomp = len(rs.dtype.components)
        max_grades = [0] * ncomp
        for r in rs.positive_roots:
            ci = rs.root_component(r)
            g = self.grades[r]
            if g > max_grades[ci]:
                max_grades[ci] = g
        self.max_grades = tuple(max_grades)

        self.point_components = tuple(i for i, m in enumerate(max_grades) if m == 0)
        if self.point_components and not allow_point_factors:
            names = ", ".join(
                str(rs.dtype.components[i]) for i in self.point_components
            )
            raise DecorationError(
                f"component(s) {names} carry no cross; enable point-factor"
                " dropping to ignore them"
            )

    def grade(self, root: Root) -> int:
        return self.grades[root]


def grade_diagram(
    dtype: DiagramType,
    decoration: Decoration,
    *,
    allow_point_factors: bool = False,
) -> GradedRootSystem:
    return GradedRootSystem(
        build_root_system(dtype), decoration, allow_point_factors=allow_point_factors
    )


def box(graded: GradedRootSystem) -> tuple[frozenset[Root], ...]:
    """Top-grade positive roots of each component; empty slot for point factors."""
    rs = graded.rs
    out: list[set[Root]] = [set() for _ in rs.dtype.components]
    for ci, m in enumerate(graded.max_grades):
        if m == 0:
            continue
        for r in rs.positive_roots:
            if rs.root_component(r) == ci and graded.grades[r] == m:
                out[ci].add(r)
    return tuple(frozenset(s) for s in out)


def box_union(graded: GradedRootSystem) -> frozenset[Root]:
    u: set[Root] = set()
    for part in box(graded):
        u |= part
    return frozenset(u)


def minimal_roots(graded: GradedRootSystem) -> frozenset[Root]:
    """Negatives of the box: the lowest-grade roots of each component."""
    return frozenset(negate(r) for r in box_union(graded))


def p_grade(graded: GradedRootSystem, root: Root) -> int:
    """Grade of a root: its coefficient sum over the crossed nodes."""
    try:
        return graded.grades[tuple(root)]
    except (KeyError, TypeError):
        raise NotARootError(f"{root!r} is not a root of {graded.rs.dtype}") from None
