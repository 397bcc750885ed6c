"""Recognition of finite-type Cartan matrices and the cominuscule table.

recognize() turns an abstract Cartan matrix into named components plus the
node relabeling into Bourbaki numbering, canonicalized under diagram
automorphisms.  classify_cominuscule() matches a one-cross-per-component
decorated diagram against the table of irreducible cominuscule varieties.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .errors import (
    ClassificationError,
    DecorationError,
    InvalidDiagramError,
    NotCominusculeError,
)
from .rootsys import Component, DiagramType, component_cartan

if TYPE_CHECKING:  # pragma: no cover
    from .subsystem import DecoratedDiagram

Matrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class RecognizedComponent:
    """One identified component.  nodes[b] = input index of Bourbaki node b+1."""

    family: str
    rank: int
    nodes: tuple[int, ...]


@dataclass(frozen=True)
class Recognition:
    components: tuple[RecognizedComponent, ...]

    @property
    def dtype(self) -> DiagramType:
        return DiagramType(
            tuple(Component(c.family, c.rank) for c in self.components)
        )

    def node_order(self) -> tuple[int, ...]:
        """Input indices in global output order (components then Bourbaki)."""
        out: list[int] = []
        for c in self.components:
            out.extend(c.nodes)
        return tuple(out)


def _validate_cartan(cartan: Matrix) -> int:
    n = len(cartan)
    for i, row in enumerate(cartan):
        if len(row) != n:
            raise ClassificationError("Cartan matrix is not square")
        for j, v in enumerate(row):
            if not isinstance(v, int):
                raise ClassificationError("Cartan matrix entries must be integers")
            if i == j:
                if v != 2:
                    raise ClassificationError("Cartan diagonal must be all 2")
            elif v > 0:
                raise ClassificationError("off-diagonal Cartan entries must be <= 0")
            elif (v == 0) != (cartan[j][i] == 0):
                raise ClassificationError("Cartan zero pattern must be symmetric")
    return n


def _component_nodes(cartan: Matrix, n: int) -> list[list[int]]:
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _path_order(nodes: list[int], adj: dict[int, list[int]]) -> list[int]:
    """Nodes of a path graph in walking order, from one endpoint."""
    ends = [v for v in nodes if len(adj[v]) <= 1]
    if len(nodes) == 1:
        return nodes[:]
    if len(ends) != 2:
        raise ClassificationError("Dynkin component contains a cycle")
    order = [ends[0]]
    prev = None
    while len(order) < len(nodes):
        nxt = [v for v in adj[order[-1]] if v != prev]
        if len(nxt) != 1:
            raise ClassificationError("Dynkin component contains a cycle")
        prev = order[-1]
        order.append(nxt[0])
    return order


def _arm(start: int, branch: int, adj: dict[int, list[int]]) -> list[int]:
    """Walk from a branch neighbor outward to the tip of its arm."""
    arm = [start]
    prev = branch
    while True:
        nxt = [v for v in adj[arm[-1]] if v != prev]
        if not nxt:
            return arm
        if len(nxt) > 1:
            raise ClassificationError("two branch nodes in one component")
        prev = arm[-1]
        arm.append(nxt[0])


def _candidates(
    cartan: Matrix, nodes: list[int]
) -> tuple[str, int, list[tuple[int, ...]]]:
    """Identify one connected component; return candidate Bourbaki labelings."""
    rank = len(nodes)
    if rank == 1:
        return "A", 1, [(nodes[0],)]

    adj: dict[int, list[int]] = {v: [] for v in nodes}
    mults: dict[tuple[int, int], int] = {}
    for a in nodes:
        for b in nodes:
            if a < b and cartan[a][b] != 0:
                m = cartan[a][b] * cartan[b][a]
                if m not in (1, 2, 3):
                    raise ClassificationError(
                        f"edge multiplicity {m} is not finite type"
                    )
                adj[a].append(b)
                adj[b].append(a)
                mults[(a, b)] = mults[(b, a)] = m

    branches = [v for v in nodes if len(adj[v]) > 2]
    if any(len(adj[v]) > 3 for v in nodes) or len(branches) > 1:
        raise ClassificationError("diagram branching is not finite type")

    multi_edges = [e for e, m in mults.items() if e[0] < e[1] and m > 1]

    if branches:
        if multi_edges:
            raise ClassificationError("branched multiply-laced diagram")
        center = branches[0]
        arms = sorted(
            (_arm(nb, center, adj) for nb in adj[center]), key=len
        )
        lengths = tuple(len(a) for a in arms)
        if lengths[:2] == (1, 1):
            # D family: tips are the two short arms, Bourbaki 1 ends the long arm
            r = lengths[2] + 3
            cands: list[tuple[int, ...]] = []
            if r == 4:
                tips = [a[0] for a in arms]
                for i in range(3):
                    for j in range(3):
                        if j == i:
                            continue
                        k = 3 - i - j
                        cands.append((tips[i], center, tips[j], tips[k]))
            else:
                long_arm = arms[2]
                chain = tuple(reversed(long_arm)) + (center,)
                t1, t2 = arms[0][0], arms[1][0]
                cands = [chain + (t1, t2), chain + (t2, t1)]
            return "D", r, cands
        if lengths == (1, 2, 2):
            tip = arms[0][0]
            a, b = arms[1], arms[2]
            return "E", 6, [
                (a[1], tip, a[0], center, b[0], b[1]),
                (b[1], tip, b[0], center, a[0], a[1]),
            ]
        if lengths == (1, 2, 3):
            tip, two, three = arms[0][0], arms[1], arms[2]
            return "E", 7, [(two[1], tip, two[0], center, *three)]
        if lengths == (1, 2, 4):
            tip, two, four = arms[0][0], arms[1], arms[2]
            return "E", 8, [(two[1], tip, two[0], center, *four)]
        raise ClassificationError(f"branch arm lengths {lengths} are not finite type")

    path = _path_order(nodes, adj)
    if not multi_edges:
        return "A", rank, [tuple(path), tuple(reversed(path))]
    if len(multi_edges) > 1:
        raise ClassificationError("more than one multiple edge in a path")
    (a, b) = multi_edges[0]
    m = mults[(a, b)]

    if m == 3:
        if rank != 2:
            raise ClassificationError("triple edge only occurs at rank 2")
        # Bourbaki node 1 is the short root: its row carries the -3
        short, long_ = (a, b) if cartan[a][b] == -3 else (b, a)
        return "G", 2, [(short, long_)]

    pos = {v: i for i, v in enumerate(path)}
    lo = min(pos[a], pos[b])
    if lo != 0 and lo != rank - 2:
        # interior double edge: only F4 is finite type
        if rank != 4 or lo != 1:
            raise ClassificationError("interior double edge is not finite type")
        p = path if cartan[path[2]][path[1]] == -2 else list(reversed(path))
        return "F", 4, [tuple(p)]

    if rank == 2:
        # normalized to B2: node 1 long; the short node's row holds the -2
        long_, short = (b, a) if cartan[a][b] == -2 else (a, b)
        return "B", 2, [(long_, short)]

    p = path if lo == rank - 2 else list(reversed(path))
    last, penult = p[-1], p[-2]
    family = "B" if cartan[last][penult] == -2 else "C"
    return family, rank, [tuple(p)]


def recognize_labelings(
    cartan: Matrix,
) -> tuple[tuple[str, int, tuple[tuple[int, ...], ...]], ...]:
    """Per component: family, rank, and every Bourbaki labeling that fits.

    Multiple labelings appear exactly when the diagram has automorphisms
    (chain reversal, fork swap, D4 triality, E6 reflection).  Callers that
    carry extra structure, like a decoration, pick among them; recognize()
    picks the lexicographically least.
    """
    n = _validate_cartan(cartan)
    if n == 0:
        raise ClassificationError("empty Cartan matrix")
    out: list[tuple[str, int, tuple[tuple[int, ...], ...]]] = []
    for comp_nodes in _component_nodes(cartan, n):
        family, rank, cands = _candidates(cartan, comp_nodes)
        std = component_cartan(family, rank)
        valid = tuple(
            c
            for c in cands
            if all(
                cartan[c[i]][c[j]] == std[i][j]
                for i in range(rank)
                for j in range(rank)
            )
        )
        if not valid:
            raise ClassificationError(
                f"component does not match the {family}{rank} Cartan matrix"
            )
        out.append((family, rank, valid))
    return tuple(out)


def recognize(cartan: Matrix) -> Recognition:
    """Name a finite-type Cartan matrix and map its nodes to Bourbaki order."""
    return Recognition(
        tuple(
            RecognizedComponent(family, rank, min(valid))
            for family, rank, valid in recognize_labelings(cartan)
        )
    )


# ---------------------------------------------------------------------------
# The cominuscule table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CominusculeId:
    """One table row: which cominuscule variety a crossed component is.

    crossed_node is the canonical representative under diagram automorphisms;
    embedded_node is the node actually crossed in the diagram at hand.
    """

    family: str
    rank: int
    crossed_node: int
    embedded_node: int
    dimension: int
    description: str

    def key(self) -> tuple[str, int, int, int]:
        return (self.family, self.rank, self.crossed_node, self.dimension)

    def __str__(self) -> str:
        return (
            f"{self.family}{self.rank}, node {self.crossed_node} crossed,"
            f" dim {self.dimension} - {self.description}"
        )


def cominuscule_id(family: str, rank: int, node: int) -> CominusculeId:
    """Table lookup for an irreducible component with one crossed node."""
    if not 1 <= node <= rank:
        raise InvalidDiagramError(f"node {node} out of range for {family}{rank}")

    if family == "A":
        k = min(node, rank + 1 - node)
        dim = k * (rank + 1 - k)
        if rank == 1:
            desc = "projective line P^1"
        elif k == 1:
            desc = f"projective space P^{rank}"
        else:
            desc = f"Grassmannian of {k}-planes in C^{rank + 1}"
        return CominusculeId("A", rank, k, node, dim, desc)
    if family == "B" and node == 1:
        return CominusculeId(
            "B", rank, 1, 1, 2 * rank - 1,
            f"quadric hypersurface Q^{2 * rank - 1} in P^{2 * rank}",
        )
    if family == "C" and node == rank:
        return CominusculeId(
            "C", rank, rank, rank, rank * (rank + 1) // 2,
            f"space of Lagrangian {rank}-planes in C^{2 * rank}",
        )
    if family == "D":
        if node == 1:
            return CominusculeId(
                "D", rank, 1, 1, 2 * rank - 2,
                f"quadric hypersurface Q^{2 * rank - 2} in P^{2 * rank - 1}",
            )
        if node in (rank - 1, rank):
            return CominusculeId(
                "D", rank, rank, node, rank * (rank - 1) // 2,
                f"space of null {rank}-planes in C^{2 * rank}",
            )
    if family == "E" and rank == 6 and node in (1, 6):
        return CominusculeId(
            "E", 6, 1, node, 16, "complexified octave projective plane"
        )
    if family == "E" and rank == 7 and node == 7:
        return CominusculeId(
            "E", 7, 7, 7, 27, "space of null octave 3-planes in octave 6-space"
        )
    raise NotCominusculeError(
        f"{family}{rank} with node {node} crossed is not cominuscule"
    )


def classify_cominuscule(diagram: "DecoratedDiagram") -> tuple[CominusculeId, ...]:
    """Identify each component of a one-cross-per-component decorated diagram."""
    out: list[CominusculeId] = []
    for (start, stop), comp in zip(
        diagram.dtype.ranges(), diagram.dtype.components
    ):
        crossed = [
            i - start + 1
            for i in range(start, stop)
            if diagram.decoration.crossed[i]
        ]
        if len(crossed) != 1:
            raise DecorationError(
                f"component {comp} must have exactly one crossed node,"
                f" found {len(crossed)}"
            )
        out.append(cominuscule_id(comp.family, comp.rank, crossed[0]))
    return tuple(out)
