"""Mapped trees, spines, twigs, and tropical cylinders.

A mapped tree is a metric tree together with an affine map to the plane:
vertices carry rational positions (or None when at infinity), edges carry
integral weight vectors and positive rational lengths (None for infinite
edges). Marked legs are 1-valent vertices addressed by labels, partitioned
into interior (I), boundary (B), and finite (F) marks.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import classes as cls
from .errors import (
    AffineInconsistent,
    IdentityViolation,
    NotATropicalCurve,
    NotUnimodular,
    PathThroughOrigin,
    SlopeNotRayDirection,
    ZeroVector,
)
from .lattice import Point, Vec, det, dot, norm, primitive_part
from .model import ToricModel
from .walls import is_wall_direction


@dataclass(frozen=True)
class Edge:
    tail: str
    head: str
    weight: Vec
    length: Fraction | None = None  # None marks an infinite edge


@dataclass(frozen=True)
class MappedTree:
    positions: tuple[tuple[str, Point | None], ...]
    edges: tuple[Edge, ...]
    marks: tuple[tuple[str, str], ...]  # label -> vertex
    interior: frozenset[str] = frozenset()
    boundary: frozenset[str] = frozenset()
    finite: frozenset[str] = frozenset()

    @property
    def pos(self) -> dict[str, Point | None]:
        return dict(self.positions)

    @property
    def mark_vertex(self) -> dict[str, str]:
        return dict(self.marks)

    def incident(self, v: str) -> list[Edge]:
        return [e for e in self.edges if v in (e.tail, e.head)]

    def valency(self, v: str) -> int:
        return len(self.incident(v))

    def outgoing(self, v: str) -> list[Vec]:
        out = []
        for e in self.incident(v):
            if e.tail == v:
                out.append(e.weight)
            else:
                out.append((-e.weight[0], -e.weight[1]))
        return out


def make_tree(positions, edges, marks, interior=(), boundary=(), finite=()) -> MappedTree:
    tree = MappedTree(
        tuple(sorted(positions.items())),
        tuple(edges),
        tuple(sorted(marks.items())),
        frozenset(interior),
        frozenset(boundary),
        frozenset(finite),
    )
    problems = structural_problems(tree)
    if problems:
        raise AffineInconsistent("; ".join(problems))
    return tree


def structural_problems(tree: MappedTree) -> list[str]:
    """Structural and affine-consistency failures, empty when well formed."""
    out = []
    pos = tree.pos
    verts = set(pos)
    for e in tree.edges:
        if e.tail not in verts or e.head not in verts:
            out.append(f"edge {e.tail}-{e.head} references unknown vertex")
            continue
        pt, ph = pos[e.tail], pos[e.head]
        if e.length is None:
            if ph is not None:
                out.append(f"infinite edge {e.tail}-{e.head} must end at infinity")
            if pt is None:
                out.append(f"infinite edge {e.tail}-{e.head} must start at a finite point")
        else:
            if e.length <= 0:
                out.append(f"edge {e.tail}-{e.head} has nonpositive length")
            if pt is None or ph is None:
                out.append(f"finite edge {e.tail}-{e.head} has an infinite endpoint")
            else:
                expect = (pt[0] + e.length * e.weight[0], pt[1] + e.length * e.weight[1])
                if expect != ph:
                    out.append(
                        f"edge {e.tail}-{e.head} is affinely inconsistent"
                    )
            if e.weight == (0, 0):
                out.append(f"finite edge {e.tail}-{e.head} has weight zero")
    if len(tree.edges) != len(verts) - 1:
        out.append("graph is not a tree (wrong edge count)")
    else:
        seen = set()
        stack = [next(iter(verts))] if verts else []
        adj: dict[str, list[str]] = {v: [] for v in verts}
        for e in tree.edges:
            if e.tail in adj and e.head in adj:
                adj[e.tail].append(e.head)
                adj[e.head].append(e.tail)
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
        if seen != verts:
            out.append("graph is not connected")
    for label, v in tree.marks:
        if v not in verts:
            out.append(f"mark {label} at unknown vertex")
        elif tree.valency(v) != 1:
            out.append(f"mark {label} must sit at a 1-valent vertex")
    labels = {label for label, _ in tree.marks}
    for name, subset in (("interior", tree.interior), ("boundary", tree.boundary), ("finite", tree.finite)):
        extra = subset - labels
        if extra:
            out.append(f"{name} marks {sorted(extra)} are not marks of the tree")
    return out


BALANCED = "balanced"
BENDING = "bending"
UNBALANCED = "unbalanced"


@dataclass(frozen=True)
class VertexReport:
    vertex: str
    status: str
    deficit: Vec


def validate_balancing(model: ToricModel, tree: MappedTree) -> tuple[VertexReport, ...]:
    """Per-vertex balancing report for vertices of valency > 1.

    A nonzero weight sum parallel to a wall direction is ``bending``.
    """
    reports = []
    for v, p in tree.positions:
        if tree.valency(v) <= 1:
            continue
        s = (0, 0)
        for w in tree.outgoing(v):
            s = (s[0] + w[0], s[1] + w[1])
        if s == (0, 0):
            reports.append(VertexReport(v, BALANCED, s))
        elif is_wall_direction(model, s):
            reports.append(VertexReport(v, BENDING, s))
        else:
            reports.append(VertexReport(v, UNBALANCED, s))
    return tuple(reports)


def spine_decomposition(tree: MappedTree) -> tuple[set[str], list[tuple[str, MappedTree]]]:
    """Split into the convex hull of the marked legs and the attached twigs.

    Returns the spine's vertex set and a list of (attachment vertex, twig);
    each twig is rooted by a mark ``r`` at the attachment vertex.
    """
    pos = tree.pos
    marked = {v for _, v in tree.marks}
    spine = set(pos)
    # Prune unmarked 1-valent vertices until the hull of the marks remains.
    changed = True
    while changed:
        changed = False
        for v in list(spine):
            if v in marked:
                continue
            deg = sum(1 for e in tree.edges if (e.tail in spine) and (e.head in spine) and v in (e.tail, e.head))
            if deg <= 1:
                spine.discard(v)
                changed = True
    twigs = []
    outside = set(pos) - spine
    visited: set[str] = set()
    for start_edge in tree.edges:
        ends = {start_edge.tail, start_edge.head}
        if not (ends & spine and ends & outside):
            continue
        attach = (ends & spine).pop()
        first_out = (ends & outside).pop()
        if first_out in visited:
            continue
        comp = {first_out}
        stack = [first_out]
        while stack:
            v = stack.pop()
            for e in tree.edges:
                for o in (e.tail, e.head):
                    if o in outside and o not in comp and v in (e.tail, e.head):
                        comp.add(o)
                        stack.append(o)
        visited |= comp
        tw_vertices = comp | {attach}
        tw_edges = tuple(
            e for e in tree.edges if e.tail in tw_vertices and e.head in tw_vertices
        )
        twig = MappedTree(
            tuple(sorted((v, pos[v]) for v in tw_vertices)),
            tw_edges,
            (("r", attach),),
            finite=frozenset({"r"}),
        )
        twigs.append((attach, twig))
    return spine, twigs


@dataclass(frozen=True)
class Cylinder:
    """Geometric data of a tropical cylinder: a 2-leg spine with one twig."""

    p1: Vec
    p2: Vec
    bend: Point
    twig_type: tuple[Vec, ...]
    extended: bool = False

    @property
    def leaf_sum(self) -> Vec:
        s = (0, 0)
        for w in self.twig_type:
            s = (s[0] + w[0], s[1] + w[1])
        return s


@dataclass(frozen=True)
class Classification:
    kind: str  # cylinder | twig | spine | tropical_curve | invalid
    reasons: tuple[str, ...] = ()
    cylinder: Cylinder | None = None
    primitive: bool | None = None


def _twig_problems(model: ToricModel, twig: MappedTree, root_label: str = "r") -> list[str]:
    """Failures of the twig clauses: image in the wall set, leaves to the
    exceptional boundary, balancing, only the root finite."""
    out = []
    pos = twig.pos
    root = twig.mark_vertex.get(root_label)
    if root is None:
        return [f"twig has no root mark {root_label!r}"]
    if pos[root] is None:
        out.append("twig root must be finite")
    for v, p in twig.positions:
        if v == root:
            continue
        if twig.valency(v) == 1 and p is not None:
            out.append(f"twig vertex {v} is finite but only the root may be")
    for e in twig.edges:
        a = pos[e.tail]
        if e.weight == (0, 0):
            out.append(f"twig edge {e.tail}-{e.head} has weight zero")
            continue
        if a is not None and det(a, e.weight) != 0:
            out.append(f"twig edge {e.tail}-{e.head} does not lie on a line through the origin")
        if not is_wall_direction(model, e.weight):
            out.append(f"twig edge {e.tail}-{e.head} direction {e.weight} is not a wall direction")
    for e in twig.edges:
        if e.length is not None:
            continue
        d, _ = primitive_part(e.weight)
        i = model.fan.ray_index(d)
        if i is None or model.multiplicity(i) == 0:
            out.append(
                f"twig leaf toward {e.weight} does not reach an exceptional boundary point"
            )
    for rep in validate_balancing(model, twig):
        if rep.status != BALANCED:
            out.append(f"twig vertex {rep.vertex} is unbalanced (deficit {rep.deficit})")
    return out


def _leaf_weights(twig: MappedTree) -> tuple[Vec, ...]:
    leaves = []
    for e in twig.edges:
        if e.length is None:
            leaves.append(e.weight)
    return tuple(sorted(leaves))


def classify(model: ToricModel, tree: MappedTree) -> Classification:
    """Decide whether the tree is a cylinder, twig, spine, or tropical curve.

    Clause-level failure reasons accompany an ``invalid`` verdict.
    """
    problems = structural_problems(tree)
    if problems:
        return Classification("invalid", tuple(problems))

    cyl_reasons, cyl = _try_cylinder(model, tree)
    if not cyl_reasons:
        primitive = all(norm(model.fan, w) == 1 for w in cyl.twig_type) and len(
            set(primitive_part(w)[0] for w in cyl.twig_type)
        ) == len(cyl.twig_type)
        return Classification("cylinder", (), cyl, primitive)

    twig_reasons = _try_twig(model, tree)
    if not twig_reasons:
        return Classification("twig", ())

    spine_reasons = _try_spine(model, tree)
    if not spine_reasons:
        return Classification("spine", ())

    curve_reasons = _try_curve(model, tree)
    if not curve_reasons:
        return Classification("tropical_curve", ())

    reasons = tuple(
        f"{kind}: {r}"
        for kind, rs in (
            ("cylinder", cyl_reasons),
            ("twig", twig_reasons),
            ("spine", spine_reasons),
            ("tropical curve", curve_reasons),
        )
        for r in rs
    )
    return Classification("invalid", reasons)


def _try_cylinder(model: ToricModel, tree: MappedTree):
    out: list[str] = []
    marks = tree.mark_vertex
    pos = tree.pos
    leg_labels = [l for l in marks if l not in tree.interior]
    if len(leg_labels) != 2:
        out.append(f"needs exactly two marked spine legs, found {len(leg_labels)}")
    if len(tree.interior) != 1:
        out.append("needs exactly one interior constant leg")
    if out:
        return out, None
    wlabel = next(iter(tree.interior))
    wvert = marks[wlabel]
    wedge = tree.incident(wvert)[0]
    if wedge.weight != (0, 0) or wedge.length is not None:
        out.append("interior leg must be an infinite constant leg")
    spine_verts, twigs = spine_decomposition(tree)
    if len(twigs) != 1:
        out.append(f"needs exactly one twig, found {len(twigs)}")
        return out, None
    attach, twig = twigs[0]
    if pos[attach] is None:
        return out + ["bending vertex must be finite"], None
    tw_problems = _twig_problems(model, twig)
    out.extend(tw_problems)
    # Spine-side weights at the bending vertex.
    spine_sum = (0, 0)
    twig_vertices = {v for v, _ in twig.positions} - {attach}
    for e in tree.incident(attach):
        other = e.head if e.tail == attach else e.tail
        if other in twig_vertices:
            continue
        w = e.weight if e.tail == attach else (-e.weight[0], -e.weight[1])
        spine_sum = (spine_sum[0] + w[0], spine_sum[1] + w[1])
    if spine_sum == (0, 0):
        out.append("bending vertex has balanced spine weights; no bend")
    else:
        if not is_wall_direction(model, spine_sum):
            out.append(f"spine weight sum {spine_sum} at the bend is not parallel to a wall")
        if det(pos[attach], spine_sum) != 0:
            out.append("bending vertex does not lie on the wall it bends along")
    # Full-curve balancing at the bend and plain balancing elsewhere.
    for rep in validate_balancing(model, tree):
        if rep.vertex == attach:
            if rep.status != BALANCED:
                out.append(
                    f"bending vertex fails full-curve balancing (deficit {rep.deficit})"
                )
        elif rep.status != BALANCED:
            out.append(f"vertex {rep.vertex} is unbalanced (deficit {rep.deficit})")
    # The constant leg must attach to the spine away from the bend.
    wattach = None
    for e in tree.edges:
        if wvert in (e.tail, e.head):
            wattach = e.head if e.tail == wvert else e.tail
    if wattach == attach:
        out.append("interior constant leg attaches at the bending vertex")
    if wattach in twig_vertices:
        out.append("interior constant leg must attach to the spine")
    # Spine legs: both marked, nonzero weights.
    legs = {}
    extended = False
    for label in leg_labels:
        v = marks[label]
        e = tree.incident(v)[0]
        w = e.weight if e.head == v else (-e.weight[0], -e.weight[1])
        if w == (0, 0):
            out.append(f"spine leg {label} has weight zero")
        legs[label] = w
        if e.length is None:
            extended = True
    if out:
        return out, None
    p1, p2 = (legs[l] for l in sorted(legs))
    cyl = Cylinder(p1, p2, pos[attach], _leaf_weights(twig), extended)
    return out, cyl


def _try_twig(model: ToricModel, tree: MappedTree) -> list[str]:
    out = []
    labels = set(tree.mark_vertex)
    if labels != {"r"} and len(labels) != 1:
        out.append("twig must carry exactly one root mark")
        return out
    root_label = next(iter(labels))
    out.extend(_twig_problems(model, tree, root_label))
    return out


def _try_spine(model: ToricModel, tree: MappedTree) -> list[str]:
    out = []
    pos = tree.pos
    marks = tree.mark_vertex
    marked_vertices = set(marks.values())
    for v, p in tree.positions:
        if tree.valency(v) == 1 and p is None and v not in marked_vertices:
            out.append(f"unmarked infinite leg at {v}; spines meet the boundary only at marks")
    for label in tree.interior:
        e = tree.incident(marks[label])[0]
        if e.weight != (0, 0) or e.length is not None:
            out.append(f"interior mark {label} must sit on an infinite constant leg")
    for label in tree.boundary:
        v = marks[label]
        e = tree.incident(v)[0]
        w = e.weight if e.head == v else (-e.weight[0], -e.weight[1])
        d_ok = w != (0, 0) and model.fan.ray_index(w) is not None
        if e.length is not None or not d_ok:
            out.append(f"boundary mark {label} must be an infinite leg along a fan ray")
    for label in tree.finite:
        v = marks[label]
        if pos[v] is None:
            out.append(f"finite mark {label} must sit at a finite point")
    for rep in validate_balancing(model, tree):
        if rep.status == UNBALANCED:
            out.append(f"vertex {rep.vertex} is unbalanced (deficit {rep.deficit})")
        elif rep.status == BENDING:
            v = rep.vertex
            if pos[v] is None or det(pos[v], rep.deficit) != 0:
                out.append(f"vertex {v} bends away from its wall")
    return out


def _try_curve(model: ToricModel, tree: MappedTree) -> list[str]:
    out = []
    pos = tree.pos
    marks = tree.mark_vertex
    marked_vertices = set(marks.values())
    for label, v in tree.marks:
        e = tree.incident(v)[0]
        if e.length is not None:
            out.append(f"marked leg {label} must be infinite in an extended curve")
    for label in tree.interior:
        e = tree.incident(marks[label])[0]
        if e.weight != (0, 0):
            out.append(f"interior mark {label} must be a constant leg")
    for label in tree.boundary:
        v = marks[label]
        e = tree.incident(v)[0]
        w = e.weight if e.head == v else (-e.weight[0], -e.weight[1])
        if w == (0, 0) or model.fan.ray_index(w) is None:
            out.append(f"boundary mark {label} must point along a fan ray")
    for v, p in tree.positions:
        if tree.valency(v) == 1 and p is None and v not in marked_vertices:
            e = tree.incident(v)[0]
            w = e.weight if e.head == v else (-e.weight[0], -e.weight[1])
            if w == (0, 0):
                out.append(f"unmarked constant leg at {v}")
                continue
            d, _ = primitive_part(w)
            i = model.fan.ray_index(d)
            if i is None or model.multiplicity(i) == 0:
                out.append(
                    f"unmarked leg at {v} does not reach an exceptional boundary point"
                )
        if tree.valency(v) == 2 and p is not None and v not in marked_vertices:
            ws = tree.outgoing(v)
            if ws[0] == (-ws[1][0], -ws[1][1]):
                out.append(f"vertex {v} is an unmarked 2-valent vertex; curve is not simple")
    for rep in validate_balancing(model, tree):
        if rep.status != BALANCED:
            out.append(f"vertex {rep.vertex} is unbalanced (deficit {rep.deficit})")
    return out


def extension_class(model: ToricModel, x: Point, p: Vec) -> cls.CurveClass:
    """Curve class picked up by extending affinely from x to infinity with slope p.

    Each transverse crossing of a ray rho contributes |det(u_rho, p)| times the
    class of D_{t,rho}. Raises PathThroughOrigin when the open path hits 0.
    """
    if p == (0, 0):
        raise ZeroVector("extension slope must be nonzero")
    if x == (Fraction(0), Fraction(0)):
        raise PathThroughOrigin("extension starts at the origin")
    total = cls.make_class(model.fan.rays, (0,) * model.m)
    for i in range(1, model.m + 1):
        u = model.fan.ray(i)
        d = det(p, u)
        if d == 0:
            continue
        # Solve x + t p = s u exactly.
        t = det(u, x) / Fraction(d)
        s = det(p, x) / Fraction(d)
        if t > 0:
            if s == 0:
                raise PathThroughOrigin("extension path passes through the origin")
            if s > 0:
                mult = abs(det(u, p))
                total = total + mult * cls.divisor_class(model.fan, i)
    return total


def extend_spine(
    model: ToricModel, tree: MappedTree, strict: bool = False
) -> tuple[MappedTree, dict[str, cls.CurveClass], cls.CurveClass]:
    """Extend every finite marked leg to infinity; return the extended tree,
    the per-leg extension classes, and their sum.

    With ``strict`` set, slopes that are not ray directions of the fan raise
    SlopeNotRayDirection instead of being accepted (conceptually the fan is
    refined so the slope becomes a ray; crossing contributions only ever
    involve the original rays).
    """
    pos = tree.pos
    marks = tree.mark_vertex
    deltas: dict[str, cls.CurveClass] = {}
    new_edges = list(tree.edges)
    new_pos = dict(pos)
    for label in sorted(tree.finite):
        v = marks[label]
        e = tree.incident(v)[0]
        w = e.weight if e.head == v else (-e.weight[0], -e.weight[1])
        if w == (0, 0):
            raise ZeroVector(f"finite leg {label} has weight zero")
        if strict and model.fan.ray_index(w) is None:
            raise SlopeNotRayDirection(f"slope {w} of leg {label} is not a ray direction")
        deltas[label] = extension_class(model, pos[v], w)
        idx = new_edges.index(e)
        if e.head == v:
            new_edges[idx] = replace(e, length=None)
        else:
            new_edges[idx] = Edge(e.head, e.tail, (-e.weight[0], -e.weight[1]), None)
        new_pos[v] = None
    total = cls.make_class(model.fan.rays, (0,) * model.m)
    for d in deltas.values():
        total = total + d
    extended = MappedTree(
        tuple(sorted(new_pos.items())),
        tuple(new_edges),
        tree.marks,
        tree.interior,
        tree.boundary | tree.finite,
        frozenset(),
    )
    return extended, deltas, total


def unimodular_complement(fan, w: Vec) -> Vec:
    """The canonical complement: |det(w, w')| = 1 with smallest fan norm,
    ties broken by lexicographic order."""
    from .lattice import _complement

    d, _ = primitive_part(w)
    c0 = _complement(d)
    best = None
    for base in (c0, (-c0[0], -c0[1])):
        for k in range(-6 - 2 * norm(fan, c0), 7 + 2 * norm(fan, c0)):
            cand = (base[0] + k * d[0], base[1] + k * d[1])
            key = (norm(fan, cand), cand)
            if best is None or key < best:
                best = key
    return best[1]


@dataclass(frozen=True)
class TropicalLine:
    point: Point
    direction: Vec
    boundary_profile: tuple[int, ...]


def tropical_line(model: ToricModel, w: Vec, point: Point, w2: Vec | None = None) -> TropicalLine:
    """The line through the point whose ends head in directions w' and -w'.

    w' is the canonical unimodular complement of w unless supplied; the
    boundary profile decomposes each end in cone coordinates. When w spans a
    ray rho_k the profile is checked to meet D_k exactly once.
    """
    if point == (Fraction(0), Fraction(0)):
        raise PathThroughOrigin("line basepoint must not be the origin")
    d, _ = primitive_part(w)
    if w2 is None:
        w2 = unimodular_complement(model.fan, d)
    elif abs(det(d, w2)) != 1:
        raise NotUnimodular(f"det({d}, {w2}) is not a unit")
    prof = [
        a + b
        for a, b in zip(
            cls.direction_contrib(model.fan, w2),
            cls.direction_contrib(model.fan, (-w2[0], -w2[1])),
        )
    ]
    k = model.fan.ray_index(d)
    if k is not None and prof[k - 1] != 1:
        raise IdentityViolation(
            f"line profile meets D_{k} in {prof[k - 1]}, expected 1"
        )
    return TropicalLine(point, w2, tuple(prof))


def canonical_spine_split(model: ToricModel, w0: Vec) -> tuple[Vec, Vec]:
    """Deterministic split of -w0 into two nonzero leg slopes p1 + p2 = -w0,
    preferring slopes along fan rays."""
    fan = model.fan
    neg = (-w0[0], -w0[1])
    if neg == (0, 0):
        raise ZeroVector("leaf weights sum to zero; no bend direction")
    from .lattice import cone_coordinates

    i, a, b = cone_coordinates(fan, neg)
    u, v = fan.ray(i), fan.ray(i + 1)
    if a > 0 and b > 0:
        return (a * u[0], a * u[1]), (b * v[0], b * v[1])
    # -w0 lies on a ray; legs parallel to the wall line would extend through
    # the origin, so split off a transverse unimodular complement instead.
    w2 = unimodular_complement(fan, w0)
    p1 = (neg[0] - w2[0], neg[1] - w2[1])
    return p1, w2


def cylinder_tree(
    model: ToricModel,
    cyl: Cylinder,
    leg_length: Fraction | None = None,
    attach_param: Fraction = Fraction(1, 2),
) -> MappedTree:
    """Materialize a cylinder as a mapped tree with marks 1, 2 (spine legs)
    and w (interior constant leg on leg 1)."""
    bend = cyl.bend
    w0 = cyl.leaf_sum
    if leg_length is None and not cyl.extended:
        leg_length = Fraction(1, 4)
    attach_len = attach_param if cyl.extended else leg_length * attach_param
    positions: dict[str, Point | None] = {"b": bend}
    edges = []
    marks = {}
    # Spine leg 1 carries the constant leg at distance attach_len from the bend.
    a1 = (bend[0] + attach_len * cyl.p1[0], bend[1] + attach_len * cyl.p1[1])
    positions["a1"] = a1
    edges.append(Edge("b", "a1", cyl.p1, attach_len))
    positions["w"] = None
    edges.append(Edge("a1", "w", (0, 0), None))
    marks["w"] = "w"
    if cyl.extended:
        positions["v1"] = None
        edges.append(Edge("a1", "v1", cyl.p1, None))
        positions["v2"] = None
        edges.append(Edge("b", "v2", cyl.p2, None))
    else:
        rest = leg_length - attach_len
        v1 = (a1[0] + rest * cyl.p1[0], a1[1] + rest * cyl.p1[1])
        positions["v1"] = v1
        edges.append(Edge("a1", "v1", cyl.p1, rest))
        v2 = (bend[0] + leg_length * cyl.p2[0], bend[1] + leg_length * cyl.p2[1])
        positions["v2"] = v2
        edges.append(Edge("b", "v2", cyl.p2, leg_length))
    marks["1"] = "v1"
    marks["2"] = "v2"
    # Twig: single straight leaf when t = 1, a vertex at the origin otherwise.
    if len(cyl.twig_type) == 1:
        positions["t1"] = None
        edges.append(Edge("b", "t1", cyl.twig_type[0], None))
    else:
        positions["o"] = (Fraction(0), Fraction(0))
        lam = -bend[0] / Fraction(w0[0]) if w0[0] else -bend[1] / Fraction(w0[1])
        edges.append(Edge("b", "o", w0, lam))
        for s, wleaf in enumerate(cyl.twig_type, start=1):
            positions[f"t{s}"] = None
            edges.append(Edge("o", f"t{s}", wleaf, None))
    boundary = frozenset({"1", "2"}) if cyl.extended else frozenset()
    finite = frozenset() if cyl.extended else frozenset({"1", "2"})
    return make_tree(positions, edges, marks, {"w"}, boundary, finite)
