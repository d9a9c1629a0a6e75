"""Deformation families and the induction replay behind the cylinder count.

Starting from an extended cylinder V with t twig leaves, the replay builds
three interlocking families of mapped trees: L_k (the cylinder with the
first k - 1 leaves forgotten), M_k (the elementary spine for leaf k), and
N_k (the elementary cylinder for leaf k with both twig anchors marked).
Counts with fixed curve class satisfy, for each k, a splitting identity
relating L_k to L_{k+1} through M_k and N_k; chaining the t identities
turns the count of V into a product of elementary counts. The identities
are witnessed combinatorially by a path of glued stable domains whose two
branches coincide at gluing parameter r = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import classes as cls
from .counting import (
    ElementaryCountTable,
    check_primitive,
    contributing_classes,
    count_primitive_cylinder,
    default_table,
    elementary_cylinder,
    elementary_extension_shift,
    spine_extension_shift,
    twig_components,
)
from .errors import AnchorOnWall, AnchorOrderViolation, NotATropicalCurve
from .lattice import Point, Vec, det, primitive_part
from .model import ToricModel, refine_model
from .tropical import (
    Cylinder,
    Edge,
    MappedTree,
    classify,
    extension_class,
    make_tree,
    spine_decomposition,
)

Support = dict[cls.CurveClass, int]

_ORIGIN = (Fraction(0), Fraction(0))


def _fpoint(v, scale=Fraction(1)) -> Point:
    return (Fraction(v[0]) * scale, Fraction(v[1]) * scale)


def _ray_param(u: Vec, x: Point) -> Fraction:
    """The scalar c with x = c * u, or raise AnchorOrderViolation."""
    c = Fraction(x[0], u[0]) if u[0] else Fraction(x[1], u[1])
    if (Fraction(u[0]) * c, Fraction(u[1]) * c) != tuple(x):
        raise AnchorOrderViolation(f"anchor {x} does not lie on the ray through {u}")
    return c


def default_anchors(model: ToricModel, cyl: Cylinder) -> tuple[tuple[Point, Point], ...]:
    """Per leaf s: the two interior anchor points on the leaf ray, at lattice
    parameters 1 and 2."""
    out = []
    for i in twig_components(model, cyl):
        u = model.fan.ray(i)
        out.append((_fpoint(u), _fpoint(u, Fraction(2))))
    return tuple(out)


def _check_anchors(model, comps, anchors) -> tuple[tuple[Fraction, Fraction], ...]:
    if len(anchors) != len(comps):
        raise AnchorOrderViolation(
            f"expected {len(comps)} anchor pairs, got {len(anchors)}"
        )
    params = []
    for i, (xg, xt) in zip(comps, anchors):
        u = model.fan.ray(i)
        g = _ray_param(u, xg)
        t = _ray_param(u, xt)
        if not 0 < g < t:
            raise AnchorOrderViolation(
                f"anchor parameters ({g}, {t}) on ray {u} must satisfy 0 < g < t"
            )
        params.append((g, t))
    return tuple(params)


_ATTACH_CANDIDATES = (
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(2, 5),
    Fraction(1, 4),
    Fraction(3, 7),
    Fraction(1, 5),
    Fraction(2, 7),
    Fraction(1, 6),
    Fraction(3, 8),
    Fraction(1, 7),
)


def _pick_attach(bend: Point, p1: Vec, wall_dirs) -> Fraction:
    """Deterministic attach parameter whose point avoids the leaf wall lines
    and the origin."""
    for q in _ATTACH_CANDIDATES:
        x = (bend[0] + q * p1[0], bend[1] + q * p1[1])
        if x == _ORIGIN:
            continue
        if all(det(w, x) != 0 for w in wall_dirs):
            return q
    raise AnchorOnWall("no attach point off the leaf wall lines was found")


def _spine_base(positions, edges, marks, bend: Point, p1: Vec, p2: Vec, attach: Fraction, suffix: str = ""):
    """Shared spine skeleton: bend, interior constant leg on leg 1, two
    extended boundary legs."""
    b, a1, w, v1, v2 = "b" + suffix, "a1" + suffix, "w" + suffix, "v1" + suffix, "v2" + suffix
    positions[b] = bend
    positions[a1] = (bend[0] + attach * p1[0], bend[1] + attach * p1[1])
    edges.append(Edge(b, a1, p1, attach))
    positions[w] = None
    edges.append(Edge(a1, w, (0, 0), None))
    positions[v1] = None
    edges.append(Edge(a1, v1, p1, None))
    positions[v2] = None
    edges.append(Edge(b, v2, p2, None))
    marks["w" + suffix] = w
    marks["1" + suffix] = v1
    marks["2" + suffix] = v2


def family_tree_L(
    model: ToricModel,
    cyl: Cylinder,
    k: int,
    anchors: tuple[tuple[Point, Point], ...] | None = None,
    attach: Fraction | None = None,
) -> MappedTree:
    """The k-th member of the L family, 1 <= k <= t + 1: leaves 1 .. k - 1
    are forgotten, their t-marks are boundary legs carrying the leaf weight.

    L_1 is the extended cylinder with both anchor marks interior on every
    leaf; L_{t+1} has no leaves left.
    """
    comps = twig_components(model, cyl)
    t = len(comps)
    if not 1 <= k <= t + 1:
        raise AnchorOrderViolation(f"family index {k} out of range 1..{t + 1}")
    if anchors is None:
        anchors = default_anchors(model, cyl)
    params = _check_anchors(model, comps, anchors)
    leaf_dirs = [model.fan.ray(i) for i in comps]
    if attach is None:
        attach = _pick_attach(cyl.bend, cyl.p1, leaf_dirs)
    positions: dict[str, Point | None] = {}
    edges: list[Edge] = []
    marks: dict[str, str] = {}
    _spine_base(positions, edges, marks, cyl.bend, cyl.p1, cyl.p2, attach)
    w0 = (-(cyl.p1[0] + cyl.p2[0]), -(cyl.p1[1] + cyl.p2[1]))
    interior = {"w"}
    boundary = {"1", "2"}
    if t == 1:
        branch_root = "b"
        base_param = _ray_param(leaf_dirs[0], cyl.bend)
    else:
        lam = -cyl.bend[0] / Fraction(w0[0]) if w0[0] else -cyl.bend[1] / Fraction(w0[1])
        positions["o"] = _ORIGIN
        edges.append(Edge("b", "o", w0, lam))
        branch_root = "o"
        base_param = Fraction(0)
    for s in range(1, t + 1):
        u = leaf_dirs[s - 1]
        g_param, t_param = params[s - 1]
        if g_param <= base_param:
            raise AnchorOrderViolation(
                f"anchor parameter {g_param} on leaf {s} must exceed {base_param}"
            )
        gname = f"vg{s}"
        positions[gname] = anchors[s - 1][0]
        edges.append(Edge(branch_root, gname, u, g_param - base_param))
        positions[f"g{s}"] = None
        edges.append(Edge(gname, f"g{s}", (0, 0), None))
        marks[f"g{s}"] = f"g{s}"
        interior.add(f"g{s}")
        if s < k:
            # Forgotten leaf: the t-mark is a boundary leg with the leaf weight.
            positions[f"t{s}"] = None
            edges.append(Edge(gname, f"t{s}", u, None))
            marks[f"t{s}"] = f"t{s}"
            boundary.add(f"t{s}")
        else:
            tname = f"vt{s}"
            positions[tname] = anchors[s - 1][1]
            edges.append(Edge(gname, tname, u, t_param - g_param))
            positions[f"t{s}"] = None
            edges.append(Edge(tname, f"t{s}", (0, 0), None))
            marks[f"t{s}"] = f"t{s}"
            interior.add(f"t{s}")
            positions[f"lf{s}"] = None
            edges.append(Edge(tname, f"lf{s}", u, None))
    return make_tree(positions, edges, marks, interior, boundary, frozenset())


def _elementary_extended(model: ToricModel, i: int) -> Cylinder:
    e = elementary_cylinder(model, i)
    return Cylinder(e.p1, e.p2, e.bend, e.twig_type, extended=True)


def _family_tree_MN(
    model: ToricModel,
    i: int,
    anchor: tuple[Point, Point],
    marked_twig_end: bool,
    attach: Fraction | None = None,
) -> MappedTree:
    e = _elementary_extended(model, i)
    u = model.fan.ray(i)
    g_param, t_param = _check_anchors(model, (i,), (anchor,))[0]
    bend_param = _ray_param(u, e.bend)
    if g_param <= bend_param:
        raise AnchorOrderViolation(
            f"anchor parameter {g_param} must exceed the bend parameter {bend_param}"
        )
    if attach is None:
        attach = _pick_attach(e.bend, e.p1, (u,))
    positions: dict[str, Point | None] = {}
    edges: list[Edge] = []
    marks: dict[str, str] = {}
    _spine_base(positions, edges, marks, e.bend, e.p1, e.p2, attach, suffix="p")
    interior = {"wp", "gp"}
    boundary = {"1p", "2p"}
    positions["vg"] = anchor[0]
    edges.append(Edge("bp", "vg", u, g_param - bend_param))
    positions["gp"] = None
    edges.append(Edge("vg", "gp", (0, 0), None))
    marks["gp"] = "gp"
    positions["tp"] = None
    if marked_twig_end:
        # N-shape: both anchors interior, the leaf continues past them.
        positions["vt"] = anchor[1]
        edges.append(Edge("vg", "vt", u, t_param - g_param))
        edges.append(Edge("vt", "tp", (0, 0), None))
        marks["tp"] = "tp"
        interior.add("tp")
        positions["lf"] = None
        edges.append(Edge("vt", "lf", u, None))
    else:
        # M-shape: the leaf is replaced by a boundary leg past the g-anchor.
        edges.append(Edge("vg", "tp", u, None))
        marks["tp"] = "tp"
        boundary.add("tp")
    return make_tree(positions, edges, marks, interior, boundary, frozenset())


def family_tree_M(model, i, anchor, attach=None) -> MappedTree:
    """The balanced spine for leaf direction u_i: the leaf becomes a boundary
    leg, with one interior anchor mark left on it."""
    return _family_tree_MN(model, i, anchor, marked_twig_end=False, attach=attach)


def family_tree_N(model, i, anchor, attach=None) -> MappedTree:
    """The elementary cylinder for leaf direction u_i with both anchor marks
    interior on the leaf."""
    return _family_tree_MN(model, i, anchor, marked_twig_end=True, attach=attach)


def refine_for_slopes(model: ToricModel, slopes) -> ToricModel:
    """Refine the fan until every given slope spans a ray; inserted rays
    carry no exceptional components."""
    out = model
    dirs = sorted({primitive_part(w)[0] for w in slopes if w != (0, 0)})
    for d in dirs:
        if out.fan.ray_index(d) is None:
            out = refine_model(out, d)
    return out


_EXPECTED_KIND = {"V": "cylinder", "L": "tropical_curve", "M": "spine", "N": "tropical_curve"}


@dataclass(frozen=True)
class DeformationFamily:
    """All members of the replay: the cylinder V and the trees L_1 .. L_{t+1},
    M_1 .. M_t, N_1 .. N_t, indexed by name."""

    model: ToricModel
    cylinder: Cylinder
    comps: tuple[int, ...]
    anchors: tuple[tuple[Point, Point], ...]
    curves: tuple[tuple[str, MappedTree], ...]

    @property
    def t(self) -> int:
        return len(self.comps)

    @property
    def by_name(self) -> dict[str, MappedTree]:
        return dict(self.curves)


def build_deformation(
    model: ToricModel,
    cyl: Cylinder,
    anchors: tuple[tuple[Point, Point], ...] | None = None,
) -> DeformationFamily:
    """Construct and validate every member of the deformation family.

    Each tree is classified over a fan refined so the spine slopes span rays;
    a member of unexpected kind raises NotATropicalCurve.
    """
    check_primitive(model, cyl)
    if not cyl.extended:
        cyl = Cylinder(cyl.p1, cyl.p2, cyl.bend, cyl.twig_type, extended=True)
    comps = twig_components(model, cyl)
    t = len(comps)
    if anchors is None:
        anchors = default_anchors(model, cyl)
    curves: list[tuple[str, MappedTree]] = []
    for k in range(1, t + 2):
        curves.append((f"L{k}", family_tree_L(model, cyl, k, anchors)))
    for k in range(1, t + 1):
        curves.append((f"M{k}", family_tree_M(model, comps[k - 1], anchors[k - 1])))
        curves.append((f"N{k}", family_tree_N(model, comps[k - 1], anchors[k - 1])))
    slopes = [cyl.p1, cyl.p2]
    for i in set(comps):
        e = elementary_cylinder(model, i)
        slopes += [e.p1, e.p2]
    refined = refine_for_slopes(model, slopes)
    for name, tree in curves:
        kind = classify(refined, tree).kind
        expected = _EXPECTED_KIND[name[0]]
        if name == f"L{t + 1}":
            expected = "spine"  # no unmarked leaves remain
        if kind != expected:
            raise NotATropicalCurve(
                f"family member {name} classifies as {kind}, expected {expected}"
            )
    return DeformationFamily(model, cyl, comps, tuple(anchors), tuple(curves))


@dataclass(frozen=True)
class ExtensionLedger:
    """Every extension class used by the replay.

    delta_V: sum over the two spine legs of V.
    delta_elem: per leaf, the same sum for the elementary cylinder.
    delta_leaf: per leaf, the class of extending past the forgotten anchor
    (zero whenever the anchors sit on the leaf ray).
    """

    delta_V: cls.CurveClass
    delta_elem: tuple[cls.CurveClass, ...]
    delta_leaf: tuple[cls.CurveClass, ...]

    @property
    def final_class(self) -> cls.CurveClass:
        out = self.delta_V
        for d in self.delta_leaf:
            out = out + d
        return out


def extension_ledger(
    model: ToricModel,
    cyl: Cylinder,
    anchors: tuple[tuple[Point, Point], ...] | None = None,
) -> ExtensionLedger:
    comps = twig_components(model, cyl)
    if anchors is None:
        anchors = default_anchors(model, cyl)
    _check_anchors(model, comps, anchors)
    delta_v = spine_extension_shift(model, cyl)
    elems = tuple(elementary_extension_shift(model, i) for i in comps)
    leaves = tuple(
        extension_class(model, anchors[s][0], model.fan.ray(i))
        for s, i in enumerate(comps)
    )
    return ExtensionLedger(delta_v, elems, leaves)


def _zero(model: ToricModel) -> cls.CurveClass:
    return cls.make_class(model.fan.rays, (0,) * model.m)


def convolve(a: Support, b: Support) -> Support:
    out: Support = {}
    for ca, na in a.items():
        for cb, nb in b.items():
            key = ca + cb
            out[key] = out.get(key, 0) + na * nb
    return {c: n for c, n in out.items() if n != 0}


def _leaf_support(model: ToricModel, i: int, table: ElementaryCountTable) -> Support:
    out: Support = {}
    for j in range(1, model.multiplicity(i) + 1):
        for c, n in table.by_pair.get((i, j), ()):
            out[c] = out.get(c, 0) + n
    return out


def family_support(
    model: ToricModel,
    cyl: Cylinder,
    name: str,
    table: ElementaryCountTable | None = None,
    anchors: tuple[tuple[Point, Point], ...] | None = None,
) -> Support:
    """The counting measure of a family member: curve class -> count.

    Classes are recorded at the extended level. L_k aggregates one elementary
    factor per remaining leaf on top of the spine extension classes; M_k is a
    single spine; N_k is a single elementary factor.
    """
    if table is None:
        table = default_table(model)
    comps = twig_components(model, cyl)
    t = len(comps)
    ledger = extension_ledger(model, cyl, anchors)
    kind, idx = name[0], int(name[1:]) if name[1:] else 0
    if kind == "V":
        kind, idx = "L", 1
    if kind == "M":
        return {ledger.delta_elem[idx - 1]: 1}
    if kind == "N":
        base = ledger.delta_elem[idx - 1]
        return {
            c + base: n for c, n in _leaf_support(model, comps[idx - 1], table).items()
        }
    if kind != "L" or not 1 <= idx <= t + 1:
        raise KeyError(f"unknown family member {name}")
    shift = ledger.delta_V
    for s in range(idx - 1):
        shift = shift + ledger.delta_leaf[s]
    supp: Support = {shift: 1}
    for s in range(idx - 1, t):
        supp = convolve(supp, _leaf_support(model, comps[s], table))
    return supp


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class ReplayReport:
    checks: tuple[IdentityCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> list[str]:
        return [
            f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}" for c in self.checks
        ]


def _fmt_support(model: ToricModel, supp: Support) -> str:
    items = sorted((c.toric, sorted(c.exc), n) for c, n in supp.items())
    return "{" + ", ".join(f"{t}|{dict(e)}:{n}" for t, e, n in items) + "}"


def replay_induction(
    model: ToricModel,
    cyl: Cylinder,
    beta: cls.CurveClass | None = None,
    table: ElementaryCountTable | None = None,
    anchors: tuple[tuple[Point, Point], ...] | None = None,
) -> ReplayReport:
    """Replay the induction: per-step splitting identities, both endpoints,
    and (when a class is given) agreement with the closed-form count.

    All comparisons are exact equalities of counting measures; the checks
    hold for any table, not only the canonical one.
    """
    check_primitive(model, cyl)
    if not cyl.extended:
        cyl = Cylinder(cyl.p1, cyl.p2, cyl.bend, cyl.twig_type, extended=True)
    if table is None:
        table = default_table(model)
    comps = twig_components(model, cyl)
    t = len(comps)
    ledger = extension_ledger(model, cyl, anchors)
    supp = {
        name: family_support(model, cyl, name, table, anchors)
        for name in [f"L{k}" for k in range(1, t + 2)]
        + [f"M{k}" for k in range(1, t + 1)]
        + [f"N{k}" for k in range(1, t + 1)]
    }
    checks: list[IdentityCheck] = []
    for k in range(1, t + 1):
        lhs = convolve(supp[f"L{k}"], supp[f"M{k}"])
        rhs = convolve(supp[f"L{k + 1}"], supp[f"N{k}"])
        ok = lhs == rhs
        detail = "measures agree" if ok else (
            f"lhs {_fmt_support(model, lhs)} != rhs {_fmt_support(model, rhs)}"
        )
        checks.append(IdentityCheck(f"splitting-{k}", ok, detail))
    agg: Support = {}
    for _choice, c, n in contributing_classes(model, cyl, table):
        if n:
            agg[c] = agg.get(c, 0) + n
    ok = supp["L1"] == agg
    checks.append(
        IdentityCheck(
            "endpoint-initial",
            ok,
            "L1 matches the cylinder's contributing classes"
            if ok
            else f"L1 {_fmt_support(model, supp['L1'])} != {_fmt_support(model, agg)}",
        )
    )
    final = {ledger.final_class: 1}
    ok = supp[f"L{t + 1}"] == final
    checks.append(
        IdentityCheck(
            "endpoint-final",
            ok,
            "last member is the pure extension class"
            if ok
            else f"L{t + 1} is {_fmt_support(model, supp[f'L{t + 1}'])}",
        )
    )
    if beta is not None:
        key = beta if cyl.extended else beta + ledger.delta_V
        got = supp["L1"].get(key, 0)
        want = count_primitive_cylinder(model, cyl, beta, table)
        checks.append(
            IdentityCheck(
                "closed-form",
                got == want,
                f"replayed count {got}, closed form {want}",
            )
        )
    return ReplayReport(tuple(checks))


# ---------------------------------------------------------------------------
# Stable domains and the degeneration path.


@dataclass(frozen=True)
class AbstractTree:
    """A finite labeled tree: edges with a length (None for the glued edge at
    infinite parameter), and mark labels attached to vertices."""

    edges: tuple[tuple[str, str, Fraction | None], ...]
    legs: tuple[tuple[str, str], ...]  # label -> vertex

    @property
    def vertices(self) -> set[str]:
        vs = {v for e in self.edges for v in e[:2]}
        vs.update(v for _, v in self.legs)
        return vs

    def canonical(self):
        """Root-independent canonical encoding (labels and edge lengths)."""
        adj: dict[str, list[tuple[str, Fraction | None]]] = {}
        for a, b, ln in self.edges:
            adj.setdefault(a, []).append((b, ln))
            adj.setdefault(b, []).append((a, ln))
        legs_at: dict[str, list[str]] = {}
        for label, v in self.legs:
            legs_at.setdefault(v, []).append(label)

        def enc(v: str, parent: str | None):
            items = [("leg", label) for label in sorted(legs_at.get(v, ()))]
            kids = []
            for o, ln in adj.get(v, ()):
                if o == parent:
                    continue
                key = (0, ln) if ln is not None else (1,)
                kids.append(("edge", key, enc(o, v)))
            return tuple(items) + tuple(sorted(kids))

        return min(enc(v, None) for v in sorted(self.vertices))


def stable_domain(tree: MappedTree) -> AbstractTree:
    """Forget the map: the convex hull of the marked legs, marked legs turned
    into labels at their attachment vertices, then unmarked 2-valent vertices
    smoothed away."""
    hull, _ = spine_decomposition(tree)
    mark_vertex = tree.mark_vertex
    endpoint = {v: label for label, v in mark_vertex.items()}
    legs: dict[str, str] = {}
    edges: list[tuple[str, str, Fraction | None]] = []
    for e in tree.edges:
        if e.tail not in hull or e.head not in hull:
            continue
        if e.head in endpoint:
            legs[endpoint[e.head]] = e.tail
        elif e.tail in endpoint:
            legs[endpoint[e.tail]] = e.head
        else:
            edges.append((e.tail, e.head, e.length))
    marked = set(legs.values())
    changed = True
    while changed:
        changed = False
        degree: dict[str, list[int]] = {}
        for idx, (a, b, _ln) in enumerate(edges):
            degree.setdefault(a, []).append(idx)
            degree.setdefault(b, []).append(idx)
        for v, inc in degree.items():
            if v in marked or len(inc) != 2:
                continue
            i1, i2 = inc
            a1, b1, l1 = edges[i1]
            a2, b2, l2 = edges[i2]
            o1 = a1 if b1 == v else b1
            o2 = a2 if b2 == v else b2
            ln = None if l1 is None or l2 is None else l1 + l2
            for idx in sorted((i1, i2), reverse=True):
                edges.pop(idx)
            edges.append((o1, o2, ln))
            changed = True
            break
    return AbstractTree(tuple(edges), tuple(sorted(legs.items())))


def _prefixed(tree: AbstractTree, prefix: str) -> AbstractTree:
    return AbstractTree(
        tuple((prefix + a, prefix + b, ln) for a, b, ln in tree.edges),
        tuple((label, prefix + v) for label, v in tree.legs),
    )


def glue_domains(
    a: AbstractTree,
    b: AbstractTree,
    leg_a: str,
    leg_b: str,
    mid_label: str,
    r: Fraction | None,
) -> AbstractTree:
    """Join two domains by a bridge of length r between the carriers of two
    legs, those legs removed, a fresh leg at the midpoint. r = 0 contracts
    the bridge; r = None leaves it infinite."""
    a = _prefixed(a, "a.")
    b = _prefixed(b, "b.")
    va = dict(a.legs)[leg_a]
    vb = dict(b.legs)[leg_b]
    legs = [(l, v) for l, v in a.legs if l != leg_a]
    legs += [(l, v) for l, v in b.legs if l != leg_b]
    edges = list(a.edges) + list(b.edges)
    if r == 0:
        ren = {va: "mid", vb: "mid"}
        edges = [(ren.get(x, x), ren.get(y, y), ln) for x, y, ln in edges]
        legs = [(l, ren.get(v, v)) for l, v in legs]
        legs.append((mid_label, "mid"))
    else:
        half = None if r is None else r / 2
        edges.append((va, "mid", half))
        edges.append(("mid", vb, half))
        legs.append((mid_label, "mid"))
    return AbstractTree(tuple(edges), tuple(sorted(legs)))


def _swap_legs(tree: AbstractTree, l1: str, l2: str) -> AbstractTree:
    ren = {l1: l2, l2: l1}
    return AbstractTree(
        tree.edges, tuple(sorted((ren.get(l, l), v) for l, v in tree.legs))
    )


@dataclass(frozen=True)
class DegenerationStep:
    """The two glued domains at one value of the parameter r.

    first glues L_k with M_k; second glues L_{k+1} with N_k and swaps the
    t-labels so both carry the same 2t + 7 marks. At r = 0 the two trees
    coincide, which is what lets the two identities be chained.
    """

    k: int
    r: Fraction | None
    first: AbstractTree
    second: AbstractTree

    @property
    def coincide(self) -> bool:
        return self.first.canonical() == self.second.canonical()


def degeneration_path(fam: DeformationFamily, k: int, r: Fraction | None) -> DegenerationStep:
    if not 1 <= k <= fam.t:
        raise KeyError(f"step index {k} out of range 1..{fam.t}")
    by = fam.by_name
    first = glue_domains(
        stable_domain(by[f"L{k}"]),
        stable_domain(by[f"M{k}"]),
        f"g{k}",
        "gp",
        f"g{k}",
        r,
    )
    second = glue_domains(
        stable_domain(by[f"L{k + 1}"]),
        stable_domain(by[f"N{k}"]),
        f"g{k}",
        "gp",
        f"g{k}",
        r,
    )
    second = _swap_legs(second, f"t{k}", "tp")
    expect = 2 * fam.t + 7
    for tree in (first, second):
        assert len(tree.legs) == expect
    return DegenerationStep(k, r, first, second)
