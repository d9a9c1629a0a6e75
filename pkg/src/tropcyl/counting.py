"""Primitive cylinder counts: elementary tables, the closed-form product
count, and the independent splitting sum.

The count of a primitive cylinder factors over its twig leaves: every leaf
toward an exceptional ray direction contributes one elementary cylinder,
and a class is counted once per way of distributing the leaves over the
exceptional components it meets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import classes as cls
from .errors import NotPrimitiveCylinder, OutOfPrimitiveScope, ZeroVector
from .lattice import Point, Vec, det, norm, primitive_part
from .model import ToricModel
from .tropical import (
    Cylinder,
    canonical_spine_split,
    extension_class,
    unimodular_complement,
)

Support = dict[cls.CurveClass, int]


@dataclass(frozen=True)
class ElementaryCountTable:
    """Counts of elementary cylinders: (i, j) -> ((class, count), ...).

    The default table supports, for each exceptional component E_ij, exactly
    the canonical elementary class with count 1.
    """

    entries: tuple[tuple[tuple[int, int], tuple[tuple[cls.CurveClass, int], ...]], ...]

    @property
    def by_pair(self) -> dict[tuple[int, int], tuple[tuple[cls.CurveClass, int], ...]]:
        return dict(self.entries)

    def count(self, i: int, j: int, beta: cls.CurveClass) -> int:
        for c, n in self.by_pair.get((i, j), ()):
            if c == beta:
                return n
        return 0


def default_table(model: ToricModel) -> ElementaryCountTable:
    entries = []
    for i, j in model.exceptional_pairs:
        entries.append(((i, j), ((elementary_class(model, i, j), 1),)))
    return ElementaryCountTable(tuple(entries))


def _frac_point(v: Vec, scale: Fraction) -> Point:
    return (Fraction(v[0]) * scale, Fraction(v[1]) * scale)


def elementary_cylinder(model: ToricModel, i: int) -> Cylinder:
    """The canonical elementary cylinder for the leaf direction u_i: bend at
    u_i / 2, spine slopes given by the canonical split of -u_i."""
    w = model.fan.ray(i)
    if model.multiplicity(i) == 0:
        raise OutOfPrimitiveScope(f"ray {i} carries no exceptional components")
    p1, p2 = canonical_spine_split(model, w)
    return Cylinder(p1, p2, _frac_point(w, Fraction(1, 2)), (w,), extended=False)


def spine_extension_shift(model: ToricModel, cyl: Cylinder) -> cls.CurveClass:
    """Sum of the extension classes of the two spine legs, from the bend."""
    return extension_class(model, cyl.bend, cyl.p1) + extension_class(
        model, cyl.bend, cyl.p2
    )


def extended_boundary_profile(model: ToricModel, cyl: Cylinder) -> tuple[int, ...]:
    """Boundary intersections of the extended cylinder, by cone decomposition
    of the two spine slopes."""
    a = cls.direction_contrib(model.fan, cyl.p1)
    b = cls.direction_contrib(model.fan, cyl.p2)
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _elementary_data(model: ToricModel, i: int):
    cyl = elementary_cylinder(model, i)
    shift = spine_extension_shift(model, cyl)
    profile = extended_boundary_profile(model, cyl)
    return cyl, shift, profile


def elementary_extension_shift(model: ToricModel, i: int) -> cls.CurveClass:
    return _elementary_data(model, i)[1]


def elementary_class(model: ToricModel, i: int, j: int) -> cls.CurveClass:
    """The unique class supported by the default table at (i, j): meets E_ij
    once, no other exceptional curve, toric part fixed by the extended
    elementary cylinder's boundary profile."""
    _, shift, profile = _elementary_data(model, i)
    extended = cls.class_from_profile(model, profile, {(i, j): 1})
    return extended - shift


def twig_components(model: ToricModel, cyl: Cylinder) -> tuple[int, ...]:
    """Ray index i(s) for each twig leaf; leaves must head toward rays with
    positive blowup multiplicity."""
    out = []
    for w in cyl.twig_type:
        d, _ = primitive_part(w)
        i = model.fan.ray_index(d)
        if i is None or model.multiplicity(i) == 0:
            raise OutOfPrimitiveScope(
                f"leaf {w} does not head toward an exceptional ray"
            )
        out.append(i)
    return tuple(out)


def check_primitive(model: ToricModel, cyl: Cylinder) -> None:
    if not cyl.twig_type:
        raise NotPrimitiveCylinder("cylinder has no twig leaves")
    degrees = [norm(model.fan, w) for w in cyl.twig_type]
    if any(d != 1 for d in degrees):
        raise NotPrimitiveCylinder(f"twig leaf degrees {degrees} are not all 1")
    dirs = [primitive_part(w)[0] for w in cyl.twig_type]
    if len(set(dirs)) != len(dirs):
        raise NotPrimitiveCylinder("twig leaf directions are not pairwise distinct")


def contributing_classes(
    model: ToricModel, cyl: Cylinder, table: ElementaryCountTable | None = None
) -> tuple[tuple[tuple[int, ...], cls.CurveClass, int], ...]:
    """One entry per choice of exceptional components (j_s): the extended
    class assembled as the spine extension shift plus the sum of the chosen
    elementary classes, and the product of elementary counts.

    Assembling from the elementary summands rather than from the cylinder's
    own boundary profile keeps the closed form and the splitting sum indexed
    by the same classes on every model; the two assemblies agree whenever
    all extension ledgers vanish but differ in general, because extension
    classes only record transverse ray crossings.
    """
    check_primitive(model, cyl)
    if table is None:
        table = default_table(model)
    comps = twig_components(model, cyl)
    shift = spine_extension_shift(model, cyl)
    out = []
    ranges = [range(1, model.multiplicity(i) + 1) for i in comps]
    for choice in product(*ranges):
        beta = shift
        count = 1
        for i, j in zip(comps, choice):
            beta = beta + elementary_class(model, i, j)
            count *= table.count(i, j, elementary_class(model, i, j))
        out.append((choice, beta, count))
    return tuple(out)


def count_primitive_cylinder(
    model: ToricModel,
    cyl: Cylinder,
    beta: cls.CurveClass,
    table: ElementaryCountTable | None = None,
) -> int:
    """Closed-form count: the matching entry of ``contributing_classes``.

    For an infinitesimal cylinder the extension bookkeeping is applied first,
    so ``beta`` is matched at the extended level beta + extension shift.
    """
    prof = cls.intersect(model, beta)
    if any(v not in (0, 1) for _, v in prof.dE):
        raise OutOfPrimitiveScope("class meets an exceptional curve with multiplicity > 1")
    key = beta
    if not cyl.extended:
        key = beta + spine_extension_shift(model, cyl)
    total = 0
    for _choice, c, n in contributing_classes(model, cyl, table):
        if c == key:
            total += n
    return total


def splitting_sum(
    model: ToricModel,
    cyl: Cylinder,
    beta: cls.CurveClass,
    table: ElementaryCountTable | None = None,
) -> int:
    """Independent oracle: sum over decompositions beta = beta_1 + ... + beta_t
    of products of elementary counts, enumerated from the table's supported
    classes factor by factor."""
    check_primitive(model, cyl)
    if table is None:
        table = default_table(model)
    comps = twig_components(model, cyl)
    target = beta
    if cyl.extended:
        target = beta - spine_extension_shift(model, cyl)
    by_pair = table.by_pair
    factors = []
    for i in comps:
        cands = []
        for j in range(1, model.multiplicity(i) + 1):
            for c, n in by_pair.get((i, j), ()):
                cands.append((c, n))
        factors.append(cands)
    total = 0
    zero = cls.make_class(model.fan.rays, (0,) * model.m)

    def rec(idx: int, acc: cls.CurveClass, prod: int):
        nonlocal total
        if prod == 0:
            return
        if idx == len(factors):
            if acc == target:
                total += prod
            return
        for c, n in factors[idx]:
            rec(idx + 1, acc + c, prod * n)

    rec(0, zero, 1)
    return total


def count_spine(
    model: ToricModel,
    spine: Cylinder,
    beta: cls.CurveClass,
    table: ElementaryCountTable | None = None,
) -> int:
    """Count over twig types compatible with the class: the dE pattern of
    beta forces the leaf set; incompatible patterns either count 0 (wrong
    bend direction) or fall outside the primitive method's scope."""
    prof = cls.intersect(model, beta)
    if any(v not in (0, 1) for _, v in prof.dE):
        raise OutOfPrimitiveScope("class meets an exceptional curve with multiplicity > 1")
    rays_hit = [i for (i, _j), v in prof.dE if v == 1]
    if len(set(rays_hit)) != len(rays_hit):
        raise OutOfPrimitiveScope(
            "class needs two twig leaves in the same direction; not primitive"
        )
    if not rays_hit:
        return 0
    leaves = tuple(sorted(model.fan.ray(i) for i in rays_hit))
    w0 = (0, 0)
    for w in leaves:
        w0 = (w0[0] + w[0], w0[1] + w[1])
    deficit = (spine.p1[0] + spine.p2[0], spine.p1[1] + spine.p2[1])
    if (deficit[0] + w0[0], deficit[1] + w0[1]) != (0, 0):
        return 0
    cyl = Cylinder(spine.p1, spine.p2, spine.bend, leaves, spine.extended)
    return count_primitive_cylinder(model, cyl, beta, table)


def build_cylinder(model: ToricModel, twig_type, extended: bool = False) -> Cylinder:
    """Canonical cylinder for a twig type: bend on the ray opposite the leaf
    sum, spine slopes from the canonical split."""
    w0 = (0, 0)
    twig = tuple(tuple(w) for w in twig_type)
    for w in twig:
        w0 = (w0[0] + w[0], w0[1] + w[1])
    if w0 == (0, 0):
        raise ZeroVector("leaf weights sum to zero; no bend direction")
    neg, _ = primitive_part((-w0[0], -w0[1]))
    p1, p2 = canonical_spine_split(model, w0)
    return Cylinder(p1, p2, (Fraction(neg[0]), Fraction(neg[1])), twig, extended)
