"""Subsystem extraction: worked fixtures, dual-route agreement, structure.

The two construction routes share nothing but the ambient root system, so
exhaustive agreement over small products is the main correctness check here.
"""

import dataclasses
import itertools

import pytest

from cominuscule import (
    ClassificationError,
    Decoration,
    associated_diagram,
    box_union,
    decorated_diagram,
    diagram_type,
    direct_subsystem,
    generate_subsystem,
    grade_diagram,
    perpendicular_compacts,
    simple_system,
)
from cominuscule.rootsys import is_positive
from cominuscule.subsystem import _make_subsystem


def run(pairs, dec):
    return grade_diagram(diagram_type(*pairs), Decoration.from_string(dec))


# ---------------------------------------------------------------- fixtures


def test_f4_last_node_gives_b4():
    graded = run([("F", 4)], "ooox")
    sub = generate_subsystem(graded)
    assert sub.simples == (
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (0, 1, 2, 2),
        (1, 0, 0, 0),
    )
    assert len(sub.roots) == 32
    out = decorated_diagram(sub)
    assert str(out) == "B4:xooo"
    # Bourbaki node 1 of the subsystem is not an ambient simple root.
    assert out.node_embedding == (
        (0, 1, 2, 2),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
    )


def test_g2_first_node_gives_long_root_a2():
    graded = run([("G", 2)], "xo")
    sub = generate_subsystem(graded)
    assert sub.simples == ((0, 1), (3, 1))
    assert sub.roots == {(0, 1), (3, 1), (3, 2), (0, -1), (-3, -1), (-3, -2)}
    out = decorated_diagram(sub)
    assert str(out) == "A2:xo"
    assert out.node_embedding == ((3, 1), (0, 1))


def test_g2_second_node_gives_highest_root_only():
    graded = run([("G", 2)], "ox")
    sub = generate_subsystem(graded)
    assert sub.roots == {(3, 2), (-3, -2)}
    assert str(decorated_diagram(sub)) == "A1:x"


def test_b5_two_crossings_gives_a3():
    graded = run([("B", 5)], "xooxo")
    sub = generate_subsystem(graded)
    assert sub.simples == (
        (0, 0, 1, 0, 0),
        (0, 1, 0, 0, 0),
        (1, 1, 1, 2, 2),
    )
    assert len(sub.roots) == 12
    out = decorated_diagram(sub)
    assert str(out) == "A3:xoo"
    assert out.node_embedding[0] == (1, 1, 1, 2, 2)


def test_b5_interior_single_cross_is_a_line():
    graded = run([("B", 5)], "oxooo")
    sub = generate_subsystem(graded)
    theta = (1, 2, 2, 2, 2)
    assert sub.roots == {theta, (-1, -2, -2, -2, -2)}
    assert sub.simples == (theta,)
    assert sub.check_grades[theta] == 1
    assert str(decorated_diagram(sub)) == "A1:x"


def test_d6_middle_cross_gives_a3():
    graded = run([("D", 6)], "ooxooo")
    sub = generate_subsystem(graded)
    assert sub.simples == (
        (0, 1, 0, 0, 0, 0),
        (0, 1, 2, 2, 1, 1),
        (1, 0, 0, 0, 0, 0),
    )
    assert str(decorated_diagram(sub)) == "A3:xoo"


def test_simple_system_is_the_simples_tuple():
    sub = generate_subsystem(run([("A", 3)], "oxo"))
    assert simple_system(sub) == sub.simples


# ------------------------------------------------- perpendicular compacts


def test_perpendicular_compacts_quadric_case():
    # With only the highest root in play every compact root is orthogonal.
    graded = run([("B", 5)], "oxooo")
    sub = generate_subsystem(graded)
    perp = perpendicular_compacts(sub)
    zero_grade = {r for r in graded.rs.roots if graded.grades[r] == 0}
    assert perp == zero_grade
    assert len(perp) == 20


def test_compact_roots_split_between_subsystem_and_perpendicular():
    for pairs, dec in [
        ([("B", 5)], "xooxo"),
        ([("C", 4)], "ooxo"),
        ([("F", 4)], "xoox"),
        ([("D", 5)], "oooox"),
    ]:
        graded = run(pairs, dec)
        sub = generate_subsystem(graded)
        perp = perpendicular_compacts(sub)
        compacts = {r for r in graded.rs.roots if graded.grades[r] == 0}
        inside = {r for r in sub.roots if graded.grades[r] == 0}
        assert perp | inside == compacts
        assert not perp & inside


def test_perpendicular_compacts_empty_for_projective_space():
    # A_r crossed at an end leaves no compact root orthogonal to everything.
    graded = run([("A", 4)], "xooo")
    sub = generate_subsystem(graded)
    assert perpendicular_compacts(sub) == frozenset()


# ------------------------------------------------- exhaustive dual routes

_TYPES_BY_RANK = {
    1: [("A", 1)],
    2: [("A", 2), ("B", 2), ("G", 2)],
    3: [("A", 3), ("B", 3), ("C", 3)],
    4: [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("F", 4)],
    5: [("A", 5), ("B", 5), ("C", 5), ("D", 5)],
}


def _all_types(max_total):
    """Non-decreasing component sequences with total rank <= max_total."""

    def rec(start, budget):
        yield ()
        for rank in range(1, budget + 1):
            for t in _TYPES_BY_RANK.get(rank, []):
                if t < start:
                    continue
                for rest in rec(t, budget - rank):
                    yield (t,) + rest

    return [p for p in rec(("A", 0), max_total) if p]


def _full_decorations(pairs):
    """Every decoration string crossing each component at least once."""
    per_component = []
    for _, rank in pairs:
        masks = []
        for bits in range(1, 1 << rank):
            masks.append(
                "".join("x" if bits >> i & 1 else "o" for i in range(rank))
            )
        per_component.append(masks)
    for combo in itertools.product(*per_component):
        yield "".join(combo)


def _assert_routes_agree(graded):
    a = generate_subsystem(graded)
    b = direct_subsystem(graded)
    assert a.roots == b.roots
    assert a.simples == b.simples
    assert a.cartan == b.cartan
    assert a.check_grades == b.check_grades
    return a


def _assert_structure(graded, sub):
    rs = graded.rs
    # Simple system shape: diagonal 2, off-diagonal non-positive.
    for i, row in enumerate(sub.cartan):
        assert row[i] == 2
        assert all(v <= 0 for j, v in enumerate(row) if j != i)
    # Closed under negation, grades rescale to -1/0/+1 antisymmetrically.
    for r in sub.roots:
        neg = tuple(-c for c in r)
        assert neg in sub.roots
        assert sub.check_grades[r] in (-1, 0, 1)
        assert sub.check_grades[neg] == -sub.check_grades[r]
    for r in box_union(graded):
        assert sub.check_grades[r] == 1
    # Every positive member reaches a simple root by subtracting simples.
    simple_set = set(sub.simples)
    for r in sub.roots:
        if not is_positive(r) or r in simple_set:
            continue
        assert any(
            tuple(x - y for x, y in zip(r, s)) in sub.roots
            for s in sub.simples
        )


def test_routes_agree_on_all_small_products():
    seen = 0
    for pairs in _all_types(5):
        for dec in _full_decorations(pairs):
            graded = run(list(pairs), dec)
            sub = _assert_routes_agree(graded)
            _assert_structure(graded, sub)
            out = decorated_diagram(sub)
            # One subsystem component per crossed ambient component.
            assert len(out.dtype.components) == len(pairs)
            assert out == associated_diagram(graded)
            seen += 1
    assert seen > 500


def test_routes_agree_on_exceptional_types():
    for pairs in ([("E", 6)], [("E", 7)], [("F", 4)], [("G", 2)]):
        rank = pairs[0][1]
        for bits in range(1, 1 << rank):
            if bits.bit_count() > 3:
                continue
            dec = "".join("x" if bits >> i & 1 else "o" for i in range(rank))
            graded = run(pairs, dec)
            _assert_routes_agree(graded)


# ----------------------------------------------------------- point factors


def test_point_factor_components_contribute_no_roots():
    graded = grade_diagram(
        diagram_type(("A", 2), ("B", 3)),
        Decoration.from_string("ooxoo"),
        allow_point_factors=True,
    )
    sub = _assert_routes_agree(graded)
    # All members live in the crossed component's coordinate block.
    assert all(r[0] == r[1] == 0 for r in sub.roots)
    out = decorated_diagram(sub)
    assert len(out.dtype.components) == 1
    assert str(out) == "B3:xoo"


def test_all_point_factors_give_empty_subsystem():
    graded = grade_diagram(
        diagram_type(("A", 2)),
        Decoration.from_string("oo"),
        allow_point_factors=True,
    )
    sub = _assert_routes_agree(graded)
    assert sub.roots == frozenset()
    assert sub.simples == ()
    assert perpendicular_compacts(sub) == frozenset(graded.rs.roots)
    # An empty subsystem has no diagram; diagram types cannot be empty.
    with pytest.raises(ClassificationError):
        decorated_diagram(sub)


# ------------------------------------------------------------ error paths


def test_two_crossed_simples_is_rejected():
    sub = generate_subsystem(run([("A", 3)], "xoo"))
    doctored = dict(sub.check_grades)
    for s in sub.simples:
        doctored[s] = 1
    bad = dataclasses.replace(sub, check_grades=doctored)
    with pytest.raises(ClassificationError):
        decorated_diagram(bad)


def test_intermediate_grade_is_rejected():
    # A grade-1 root in a grading whose top grade is 2 violates trichotomy.
    graded = run([("B", 3)], "oxo")
    assert graded.max_grades[0] == 2
    alpha2 = (0, 1, 0)
    assert graded.grades[alpha2] == 1
    with pytest.raises(ClassificationError):
        _make_subsystem(graded, frozenset({alpha2}))
