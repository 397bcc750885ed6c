"""Rule-based expected answers and the exhaustive verification sweep.

Each family has a closed-form rule mapping a decoration straight to the
cominuscule answer, with no root arithmetic.  The sweep runs the actual
pipeline over every decoration of every type in range, compares it against
the rules, and checks the structural invariants that tie the modules
together.  Rules and pipeline share only the final table lookup, so
agreement is meaningful.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .classify import CominusculeId, classify_cominuscule, cominuscule_id
from .errors import CominusculeError
from .grading import Decoration, box, grade_diagram
from .hasse import flag_hasse, highest_component
from .rootsys import DiagramType, Root, diagram_type
from .subsystem import (
    decorated_diagram,
    direct_subsystem,
    generate_subsystem,
    perpendicular_compacts,
)


@dataclass(frozen=True)
class ExpectedResult:
    dtype: DiagramType
    decoration: Decoration
    expected: tuple[CominusculeId, ...]
    rule_source: str


def _proj(n: int) -> CominusculeId:
    return cominuscule_id("A", n, 1)


def _lagrangian(rank: int) -> CominusculeId:
    if rank == 2:
        return cominuscule_id("B", 2, 1)
    return cominuscule_id("C", rank, rank)


def _spinor(rank: int) -> CominusculeId:
    # low ranks collapse: the D3 spinor is P^3, the D4 spinor is the quadric Q^6
    if rank == 3:
        return cominuscule_id("A", 3, 1)
    if rank == 4:
        return cominuscule_id("D", 4, 1)
    return cominuscule_id("D", rank, rank)


def _expect_a(rank: int, s: set[int]) -> tuple[CominusculeId, str]:
    p, q = min(s), max(s)
    return cominuscule_id("A", p + rank - q, p), "A:interval"


def _expect_b(rank: int, s: set[int]) -> tuple[CominusculeId, str]:
    if 2 in s:
        return _proj(1), "B:point"
    if 1 in s:
        rest = s - {1}
        if not rest:
            return cominuscule_id("B", rank, 1), "B:quadric-self"
        return _proj(min(rest) - 1), "B:projective-chain"
    return _spinor(min(s)), "B:spinor-prefix"


def _expect_c(rank: int, s: set[int]) -> tuple[CominusculeId, str]:
    if 1 in s:
        return _proj(1), "C:point"
    m = min(s)
    if m == rank:
        return cominuscule_id("C", rank, rank), "C:lagrangian-self"
    return _lagrangian(m), "C:lagrangian-prefix"


def _expect_d(rank: int, s: set[int]) -> tuple[CominusculeId, str]:
    fork = {rank - 1, rank}
    if 2 in s:
        return _proj(1), "D:point"
    if 1 in s:
        rest = s - {1}
        if not rest:
            return cominuscule_id("D", rank, 1), "D:quadric-self"
        m = min(rest)
        if m <= rank - 2:
            return _proj(m - 1), "D:projective-chain"
        if rest == fork:
            return _proj(rank - 2), "D:projective-fork"
        return _proj(rank - 1), "D:projective-fork"
    m = min(s)
    if m <= rank - 2:
        return _spinor(m), "D:spinor-prefix"
    if s == fork:
        return _spinor(rank - 1), "D:spinor-fork"
    return _spinor(rank), "D:spinor-self"


def _expect_e6(rank: int, s: set[int]) -> tuple[CominusculeId, str]:
    tag = "E6"
    if 2 in s:
        return _proj(1), tag
    if 4 in s:
        return _proj(2), tag
    if 3 in s and 5 in s:
        return _proj(3), tag
    if 3 in s:
        return (_proj(4) if 6 in s else _proj(5)), tag
    if 5 in s:
        return (_proj(4) if 1 in s else _proj(5)), tag
    if s == {1, 6}:
        return cominuscule_id("D", 5, 1), tag
    return cominuscule_id("E", 6, 1), tag


def _expect_e7(rank: int, s: set[int]) -> tuple[CominusculeId, str]:
    tag = "E7"
    if 1 in s:
        return _proj(1), tag
    if 3 in s:
        return _proj(2), tag
    if 4 in s:
        return _proj(3), tag
    if 5 in s:
        return (_proj(4) if 2 in s else _proj(5)), tag
    if 2 in s:
        if 6 in s:
            return _proj(5), tag
        if 7 in s:
            return _proj(6), tag
        return _proj(7), tag
    if 6 in s:
        return cominuscule_id("D", 6, 1), tag
    return cominuscule_id("E", 7, 7), tag


def _expect_e8(rank: int, s: set[int]) -> tuple[CominusculeId, str]:
    tag = "E8"
    if 8 in s:
        return _proj(1), tag
    if 7 in s:
        return _proj(2), tag
    if 6 in s:
        return _proj(3), tag
    if 5 in s:
        return _proj(4), tag
    if 4 in s:
        return _proj(5), tag
    if 3 in s:
        return (_proj(6) if 2 in s else _proj(7)), tag
    if 2 in s:
        return (_proj(7) if 1 in s else _proj(8)), tag
    return cominuscule_id("D", 8, 1), tag


def _expect_e(rank: int, s: set[int]) -> tuple[CominusculeId, str]:
    return {6: _expect_e6, 7: _expect_e7, 8: _expect_e8}[rank](rank, s)


def _expect_f(rank: int, s: set[int]) -> tuple[CominusculeId, str]:
    k = min(s)
    if k == 4:
        return cominuscule_id("B", 4, 1), "F4:first-cross"
    return _proj(k), "F4:first-cross"


def _expect_g(rank: int, s: set[int]) -> tuple[CominusculeId, str]:
    if 2 in s:
        return _proj(1), "G2"
    return _proj(2), "G2"


FAMILY_RULES = {
    "A": _expect_a,
    "B": _expect_b,
    "C": _expect_c,
    "D": _expect_d,
    "E": _expect_e,
    "F": _expect_f,
    "G": _expect_g,
}


def expected_answer(dtype: DiagramType, decoration: Decoration) -> ExpectedResult:
    """Closed-form answer for an irreducible type, bypassing the pipeline."""
    if len(dtype.components) != 1:
        raise ValueError("expected_answer takes irreducible types only")
    comp = dtype.components[0]
    s = {i + 1 for i in decoration.crossed_nodes()}
    if not s:
        raise ValueError("decoration must cross at least one node")
    if len(decoration.crossed) != comp.rank:
        raise ValueError("decoration length does not match the rank")
    cid, tag = FAMILY_RULES[comp.family](comp.rank, s)
    return ExpectedResult(dtype, decoration, (cid,), tag)


# ---------------------------------------------------------------------------
# Sweep
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    dtype: str
    decoration: str
    kind: str
    detail: str


@dataclass(frozen=True)
class SweepReport:
    total: int
    passed: int
    failed: int
    mismatches: tuple[Mismatch, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_text(self) -> str:
        lines = [
            f"sweep: {self.total} inputs, {self.passed} passed,"
            f" {self.failed} failed ({self.elapsed:.1f}s)"
        ]
        for m in self.mismatches:
            lines.append(f"  {m.dtype}:{m.decoration} [{m.kind}] {m.detail}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "total": self.total,
                "passed": self.passed,
                "failed": self.failed,
                "mismatches": [
                    {
                        "dtype": m.dtype,
                        "decoration": m.decoration,
                        "kind": m.kind,
                        "detail": m.detail,
                    }
                    for m in self.mismatches
                ],
            },
            indent=2,
        )


def _root_list(roots: frozenset[Root]) -> str:
    return "[" + ", ".join(str(r) for r in sorted(roots)) + "]"


def _check_input(
    dtype: DiagramType, decoration: Decoration, problems: list[Mismatch]
) -> None:
    def fail(kind: str, detail: str) -> None:
        problems.append(Mismatch(str(dtype), str(decoration), kind, detail))

    try:
        graded = grade_diagram(dtype, decoration)
    except CominusculeError as exc:
        fail("grading", str(exc))
        return

    try:
        gen = generate_subsystem(graded)
        direct = direct_subsystem(graded)
    except CominusculeError as exc:
        fail("subsystem", str(exc))
        return

    if gen.roots != direct.roots:
        fail(
            "oracle",
            "generated "
            + _root_list(gen.roots)
            + " != direct "
            + _root_list(direct.roots),
        )
        return

    try:
        dd = decorated_diagram(gen)
        ids = classify_cominuscule(dd)
    except CominusculeError as exc:
        fail("classify", str(exc))
        return

    expected = expected_answer(dtype, decoration)
    got_keys = tuple(c.key() for c in ids)
    want_keys = tuple(c.key() for c in expected.expected)
    if got_keys != want_keys:
        fail(
            "expected-answer",
            f"pipeline {got_keys} != rule {expected.rule_source} {want_keys};"
            f" subsystem roots {_root_list(gen.roots)}",
        )

    if len(dd.dtype.components) != len(dtype.components):
        fail("component-count", f"{len(dd.dtype.components)} components out")

    # compact dichotomy: grade-0 roots split into members of the subsystem
    # and roots perpendicular to all of it
    compacts = {r for r in graded.rs.roots if graded.grades[r] == 0}
    perp = perpendicular_compacts(gen)
    in_sub = {r for r in compacts if r in gen.roots}
    if perp | in_sub != compacts or perp & in_sub:
        fail("compact-dichotomy", _root_list(compacts - perp - in_sub))

    boxes = box(graded)
    high = highest_component(flag_hasse(graded), graded)
    for b, h in zip(boxes, high):
        if b != h:
            fail(
                "box-vs-hasse",
                f"box {_root_list(b)} != highest component {_root_list(h)}",
            )

    total_dim = sum(c.dimension for c in ids)
    box_size = sum(len(b) for b in boxes)
    if total_dim != box_size:
        fail("dimension", f"classified dim {total_dim} != |box| {box_size}")

    try:
        graded2 = grade_diagram(dd.dtype, dd.decoration)
        dd2 = decorated_diagram(generate_subsystem(graded2))
    except CominusculeError as exc:
        fail("idempotence", str(exc))
        return
    if (dd2.dtype, dd2.decoration) != (dd.dtype, dd.decoration):
        fail("idempotence", f"{dd} maps to {dd2}")


def sweep_inputs(max_rank: int) -> list[DiagramType]:
    """Irreducible types in sweep range; C2 is covered as B2."""
    if max_rank < 2:
        raise ValueError("sweep needs max_rank >= 2")
    types: list[DiagramType] = []
    for rank in range(1, max_rank + 1):
        types.append(diagram_type(("A", rank)))
    for rank in range(2, max_rank + 1):
        types.append(diagram_type(("B", rank)))
    for rank in range(3, max_rank + 1):
        types.append(diagram_type(("C", rank)))
    for rank in range(4, max_rank + 1):
        types.append(diagram_type(("D", rank)))
    for family, rank in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        if rank <= max_rank:
            types.append(diagram_type((family, rank)))
    return types


def sweep(max_rank: int = 8) -> SweepReport:
    """Run every decoration of every type in range through all the checks."""
    start = time.monotonic()
    total = passed = 0
    problems: list[Mismatch] = []
    for dtype in sweep_inputs(max_rank):
        rank = dtype.total_rank
        for bits in range(1, 1 << rank):
            decoration = Decoration(
                tuple(bool(bits >> i & 1) for i in range(rank))
            )
            total += 1
            before = len(problems)
            _check_input(dtype, decoration, problems)
            if len(problems) == before:
                passed += 1
    return SweepReport(
        total,
        passed,
        total - passed,
        tuple(problems),
        time.monotonic() - start,
    )
