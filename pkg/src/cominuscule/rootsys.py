"""Finite reduced root systems of types A-G and their products.

A root is a tuple of integer coefficients over the simple roots, using
Bourbaki node numbering inside each component.  Construction closes the
simple roots under simple reflections; after that, pairings and reflections
between arbitrary roots are table lookups.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import InvalidDiagramError, NotARootError

Root = tuple[int, ...]

# Inclusive rank bounds for canonical (already normalized) components.
_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class Component:
    """One irreducible factor: family letter plus rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        bounds = _RANK_BOUNDS.get(self.family)
        if bounds is None:
            raise InvalidDiagramError(f"unknown family {self.family!r}")
        lo, hi = bounds
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidDiagramError(
                f"rank {self.rank} out of range for family {self.family}"
            )

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def normalize_component(family: str, rank: int) -> tuple[Component, tuple[int, ...]]:
    """Canonicalize a family/rank pair and report the node relabeling.

    Low-rank coincidences collapse: B1 and C1 become A1, C2 becomes B2 with
    the two nodes swapped, and D3 becomes A3 (the D3 diagram is the A3 chain
    entered middle-node-first).  D2 is rejected outright since it is not
    irreducible.  The returned tuple maps input node position i to the
    stored position (0-based).
    """
    if not isinstance(rank, int) or rank < 1:
        raise InvalidDiagramError(f"bad rank {rank!r} for family {family!r}")
    if family in ("B", "C") and rank == 1:
        return Component("A", 1), (0,)
    if family == "C" and rank == 2:
        return Component("B", 2), (1, 0)
    if family == "D" and rank == 2:
        raise InvalidDiagramError("D2 is not irreducible; write A1xA1 instead")
    if family == "D" and rank == 3:
        return Component("A", 3), (1, 0, 2)
    return Component(family, rank), tuple(range(rank))


@dataclass(frozen=True)
class DiagramType:
    """An ordered product of irreducible components."""

    components: tuple[Component, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise InvalidDiagramError("diagram must have at least one component")

    @property
    def total_rank(self) -> int:
        return sum(c.rank for c in self.components)

    def ranges(self) -> tuple[tuple[int, int], ...]:
        """Half-open global node index range of each component."""
        out, start = [], 0
        for c in self.components:
            out.append((start, start + c.rank))
            start += c.rank
        return tuple(out)

    def __str__(self) -> str:
        return "x".join(str(c) for c in self.components)


def diagram_type(*pairs: tuple[str, int]) -> DiagramType:
    """Build a DiagramType from (family, rank) pairs, normalizing each."""
    return DiagramType(tuple(normalize_component(f, r)[0] for f, r in pairs))


# ---------------------------------------------------------------------------
# Cartan data
# ---------------------------------------------------------------------------

def component_cartan(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix in Bourbaki numbering; entry [i][j] is <a_j, a_i-check>."""
    C = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        C[i][j] = cij
        C[j][i] = cji

    if family == "A":
        for i in range(rank - 1):
            edge(i, i + 1)
    elif family == "B":
        # last node is the short root: its row carries the -2
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 2, rank - 1, cij=-1, cji=-2)
    elif family == "C":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 2, rank - 1, cij=-2, cji=-1)
    elif family == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif family == "E":
        edge(0, 2)
        for i in range(2, rank - 1):
            edge(i, i + 1)
        edge(1, 3)
    elif family == "F":
        edge(0, 1)
        edge(1, 2, cij=-1, cji=-2)  # nodes 3,4 short
        edge(2, 3)
    elif family == "G":
        edge(0, 1, cij=-3, cji=-1)  # node 1 short
    else:
        raise InvalidDiagramError(f"unknown family {family!r}")
    return tuple(tuple(row) for row in C)


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Positive integer vector d with gcd 1 making diag(d) @ cartan symmetric."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise InvalidDiagramError("component Cartan matrix is disconnected")
    denom = 1
    for x in d:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    for i in range(n):
        for j in range(n):
            if ints[i] * cartan[i][j] != ints[j] * cartan[j][i]:
                raise InvalidDiagramError("Cartan matrix is not symmetrizable")
    return tuple(ints)


def _close_simples(cartan: tuple[tuple[int, ...], ...]) -> set[Root]:
    """All roots of the component: close the simples under simple reflections."""
    rank = len(cartan)
    simples = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    found: set[Root] = set(simples)
    frontier: list[Root] = simples
    while frontier:
        fresh: list[Root] = []
        for beta in frontier:
            for i in range(rank):
                k = sum(cartan[i][j] * beta[j] for j in range(rank) if beta[j])
                if k == 0:
                    continue
                img = list(beta)
                img[i] -= k
                timg = tuple(img)
                if timg not in found:
                    found.add(timg)
                    fresh.append(timg)
        frontier = fresh
    return found


# ---------------------------------------------------------------------------
# Root helpers
# ---------------------------------------------------------------------------

def is_positive(root: Root) -> bool:
    """Sign of a root; coefficients of a root never mix signs."""
    for c in root:
        if c:
            return c > 0
    return False


def height(root: Root) -> int:
    return sum(root)


def negate(root: Root) -> Root:
    return tuple(-c for c in root)


# ---------------------------------------------------------------------------
# RootSystem
# ---------------------------------------------------------------------------

class RootSystem:
    """A built root system.  Treat as immutable; all operations are pure.

    Roots are stored in one canonical total order (lexicographic on the
    coefficient vectors), so repeated builds are byte-for-byte identical.
    """

    def __init__(
        self,
        dtype: DiagramType,
        cartan: tuple[tuple[int, ...], ...],
        symmetrizer: tuple[int, ...],
        roots: tuple[Root, ...],
        positive_roots: tuple[Root, ...],
        highest_roots: tuple[Root, ...],
        component_of_node: tuple[int, ...],
    ) -> None:
        self.dtype = dtype
        self.cartan = cartan
        self.symmetrizer = symmetrizer
        self.roots = roots
        self.positive_roots = positive_roots
        self.highest_roots = highest_roots
        self.component_of_node = component_of_node
        n = dtype.total_rank
        self.simple_roots = tuple(
            tuple(int(i == j) for j in range(n)) for i in range(n)
        )
        self.index = {r: i for i, r in enumerate(roots)}
        self.positive_set = frozenset(positive_roots)

        M = np.array(roots, dtype=np.int64)
        B = np.diag(np.array(symmetrizer, dtype=np.int64)) @ np.array(
            cartan, dtype=np.int64
        )
        G = M @ B @ M.T
        diag = np.diag(G)
        num = 2 * G
        if (num % diag[None, :]).any():
            raise InvalidDiagramError("pairing table is not integral")
        # pair[b, a] = <root_b, root_a-check>
        self._pair = (num // diag[None, :]).astype(np.int64)
        m = len(roots)
        refl = np.empty((m, m), dtype=np.int32)
        index = self.index
        for a in range(m):
            rows = M - np.outer(self._pair[:, a], M[a])
            refl[a] = [index[tuple(int(x) for x in row)] for row in rows]
        self._refl = refl

    def root_component(self, root: Root) -> int:
        """Index of the component a root lives in."""
        for i, c in enumerate(root):
            if c:
                return self.component_of_node[i]
        raise NotARootError("zero vector is not a root")

    def __repr__(self) -> str:
        return f"RootSystem({self.dtype}, {len(self.roots)} roots)"


@lru_cache(maxsize=None)
def _build(dtype: DiagramType) -> RootSystem:
    total = dtype.total_rank
    cartan_rows = [[0] * total for _ in range(total)]
    symmetrizer: list[int] = []
    all_roots: list[Root] = []
    highest: list[Root] = []
    comp_of: list[int] = []

    for ci, ((start, stop), comp) in enumerate(zip(dtype.ranges(), dtype.components)):
        C = component_cartan(comp.family, comp.rank)
        for i in range(comp.rank):
            for j in range(comp.rank):
                cartan_rows[start + i][start + j] = C[i][j]
        symmetrizer.extend(_symmetrizer(C))
        comp_of.extend([ci] * comp.rank)

        local = _close_simples(C)
        local_pos = {r for r in local if is_positive(r)}
        tops = [
            r
            for r in local_pos
            if all(
                tuple(a + int(i == j) for j, a in enumerate(r)) not in local
                for i in range(comp.rank)
            )
        ]
        if len(tops) != 1:
            raise InvalidDiagramError(f"component {comp} has no unique highest root")

        def embed(r: Root) -> Root:
            return (0,) * start + r + (0,) * (total - stop)

        all_roots.extend(embed(r) for r in local)
        highest.append(embed(tops[0]))

    roots = tuple(sorted(all_roots))
    positive = tuple(r for r in roots if is_positive(r))
    return RootSystem(
        dtype,
        tuple(tuple(row) for row in cartan_rows),
        tuple(symmetrizer),
        roots,
        positive,
        tuple(highest),
        tuple(comp_of),
    )


def build_root_system(dtype: DiagramType) -> RootSystem:
    """Build (or fetch the cached copy of) the root system for a diagram type."""
    return _build(dtype)


def _root_index(rs: RootSystem, root: Root) -> int:
    try:
        return rs.index[tuple(root)]
    except (KeyError, TypeError):
        raise NotARootError(f"{root!r} is not a root of {rs.dtype}") from None


def pairing(rs: RootSystem, beta: Root, alpha: Root) -> int:
    """<beta, alpha-check> = 2(beta, alpha)/(alpha, alpha)."""
    return int(rs._pair[_root_index(rs, beta), _root_index(rs, alpha)])


def reflect(rs: RootSystem, alpha: Root, beta: Root) -> Root:
    """Reflection of beta in the hyperplane of alpha: beta - <beta, alpha-check> alpha."""
    return rs.roots[rs._refl[_root_index(rs, alpha), _root_index(rs, beta)]]
