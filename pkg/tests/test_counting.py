from fractions import Fraction

import pytest

from tropcyl.classes import class_from_profile, divisor_class, intersect, make_class
from tropcyl.counting import (
    ElementaryCountTable,
    build_cylinder,
    contributing_classes,
    count_primitive_cylinder,
    count_spine,
    default_table,
    elementary_class,
    elementary_cylinder,
    spine_extension_shift,
    splitting_sum,
)
from tropcyl.errors import NotPrimitiveCylinder, OutOfPrimitiveScope
from tropcyl.model import P2_RAYS, build_model
from tropcyl.tropical import Cylinder


def test_default_table_supports_one_class_per_pair(cubic):
    table = default_table(cubic)
    for (i, j), counts in table.by_pair.items():
        assert len(counts) == 1
        beta, n = counts[0]
        assert n == 1
        assert table.count(i, j, beta) == 1


def test_table_lookup_miss(cubic):
    table = default_table(cubic)
    wrong = elementary_class(cubic, 3, 2)
    assert table.count(3, 1, wrong) == 0
    zero = make_class(cubic.fan.rays, (0, 0, 0))
    assert table.count(3, 1, zero) == 0


def test_elementary_class_profile(cubic):
    beta = elementary_class(cubic, 3, 1)
    prof = intersect(cubic, beta)
    assert prof.dE_map == {(3, 1): 1}


def test_contributing_single_leaf(cubic):
    cyl = build_cylinder(cubic, ((-1, -1),))
    entries = contributing_classes(cubic, cyl)
    assert len(entries) == 2
    assert all(n == 1 for _, _, n in entries)
    b1, b2 = entries[0][1], entries[1][1]
    assert intersect(cubic, b1).dD == intersect(cubic, b2).dD
    assert intersect(cubic, b1).dE_map == {(3, 1): 1}
    assert intersect(cubic, b2).dE_map == {(3, 2): 1}


def test_contributing_two_leaves(cubic):
    cyl = build_cylinder(cubic, ((1, 0), (0, 1)))
    entries = contributing_classes(cubic, cyl)
    assert len(entries) == 4
    assert all(n == 1 for _, _, n in entries)


def test_contributing_single_component():
    m = build_model(P2_RAYS, (1, 0, 0))
    cyl = build_cylinder(m, ((1, 0),))
    assert len(contributing_classes(m, cyl)) == 1


def test_count_matches_contributing_entry(cubic):
    cyl = build_cylinder(cubic, ((-1, -1),))
    for _, beta, n in contributing_classes(cubic, cyl):
        assert count_primitive_cylinder(cubic, cyl, beta) == n


def test_count_zero_off_support(cubic):
    cyl = build_cylinder(cubic, ((-1, -1),))
    beta = contributing_classes(cubic, cyl)[0][1] + divisor_class(cubic.fan, 1)
    assert count_primitive_cylinder(cubic, cyl, beta) == 0
    assert splitting_sum(cubic, cyl, beta) == 0


def test_repeated_leaf_rejected(cubic):
    cyl = Cylinder((1, 0), (1, 0), (Fraction(-1), Fraction(0)), ((1, 0), (1, 0)), extended=True)
    with pytest.raises(NotPrimitiveCylinder):
        count_primitive_cylinder(cubic, cyl, make_class(cubic.fan.rays, (0, 0, 0)))


def test_out_of_scope_class(cubic):
    cyl = build_cylinder(cubic, ((-1, -1),))
    beta = class_from_profile(cubic, (2, 2, 0), {(3, 1): 2})
    with pytest.raises(OutOfPrimitiveScope):
        count_primitive_cylinder(cubic, cyl, beta)


def test_oracle_equality_three_leaves(p1xp1):
    cyl = build_cylinder(p1xp1, ((1, 0), (0, 1), (0, -1)))
    entries = contributing_classes(p1xp1, cyl)
    assert len(entries) == 2
    for _, beta, n in entries:
        assert n == 1
        assert count_primitive_cylinder(p1xp1, cyl, beta) == splitting_sum(p1xp1, cyl, beta) == 1


def test_extension_invariance(cubic):
    """The infinitesimal count at beta equals the extended count at
    beta + the spine extension shift."""
    inf = build_cylinder(cubic, ((1, 0), (0, 1)), extended=False)
    ext = build_cylinder(cubic, ((1, 0), (0, 1)), extended=True)
    shift = spine_extension_shift(cubic, ext)
    for _, beta_ext, n in contributing_classes(cubic, ext):
        assert count_primitive_cylinder(cubic, inf, beta_ext - shift) == n


def test_twig_type_permutation_invariance(cubic):
    a = build_cylinder(cubic, ((1, 0), (0, 1)))
    b = build_cylinder(cubic, ((0, 1), (1, 0)))
    va = sorted((intersect(cubic, beta).dE, n) for _, beta, n in contributing_classes(cubic, a))
    vb = sorted((intersect(cubic, beta).dE, n) for _, beta, n in contributing_classes(cubic, b))
    assert va == vb


def test_scaled_table_scales_counts(cubic):
    base = default_table(cubic)
    scaled = ElementaryCountTable(
        tuple((pair, tuple((c, 3 * n) for c, n in counts)) for pair, counts in base.entries)
    )
    cyl = build_cylinder(cubic, ((1, 0), (0, 1)))
    for _, beta, n in contributing_classes(cubic, cyl, scaled):
        assert n == 9
        assert count_primitive_cylinder(cubic, cyl, beta, scaled) == 9
        assert splitting_sum(cubic, cyl, beta, scaled) == 9


class TestCountSpine:
    def test_single_twig_type(self, cubic):
        cyl = build_cylinder(cubic, ((-1, -1),))
        _, beta, _ = contributing_classes(cubic, cyl)[0]
        spine = Cylinder(cyl.p1, cyl.p2, cyl.bend, (), cyl.extended)
        assert count_spine(cubic, spine, beta) == 1

    def test_no_exceptional_contact(self, cubic):
        cyl = build_cylinder(cubic, ((-1, -1),))
        spine = Cylinder(cyl.p1, cyl.p2, cyl.bend, (), cyl.extended)
        zero = make_class(cubic.fan.rays, (0, 0, 0))
        assert count_spine(cubic, spine, zero) == 0

    def test_high_multiplicity_out_of_scope(self, cubic):
        cyl = build_cylinder(cubic, ((-1, -1),))
        spine = Cylinder(cyl.p1, cyl.p2, cyl.bend, (), cyl.extended)
        beta = class_from_profile(cubic, (2, 2, 0), {(3, 1): 2})
        with pytest.raises(OutOfPrimitiveScope):
            count_spine(cubic, spine, beta)


def test_elementary_cylinder_shape(cubic):
    for i in (1, 2, 3):
        cyl = elementary_cylinder(cubic, i)
        assert cyl.twig_type == (cubic.fan.ray(i),)
        assert len(contributing_classes(cubic, cyl)) == cubic.multiplicity(i)
