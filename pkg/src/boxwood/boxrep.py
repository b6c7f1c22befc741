"""Box contact representations of 3-connected plane graphs.

Two constructions are provided. The first places one axis-aligned box per
vertex straight from the level assignment of a Schnyder wood, pairs it
with boxes for the inner faces anchored at joins of the vertex boxes, and
wraps everything in a rectangular shell; segment contacts left by
bi-directional edges can then be upgraded to facet contacts on a doubled
grid. The second builds vertex boxes incrementally along an elementary
canonical order, one staircase layer per class, and needs no upgrade step.

Shape ids follow one scheme everywhere: vertex u owns id u, the face
behind split-dual vertex i owns id n + i, and the shell takes the next id
after all faces.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import (
    FormatError,
    InternalInvariantError,
    PreconditionError,
    VerificationError,
)
from .geomverify import (
    Box3,
    ExpectedContacts,
    LShape,
    Shell,
    format_rat,
    grid_bounds,
    parse_rat,
    verify_representation,
)
from .planegraph import PlaneGraph
from .schnyder import (
    SchnyderWood,
    compatible_wood_from_order,
    compute_schnyder_wood,
    dual_schnyder_wood,
    levels_from_wood,
)

_ROLES = ("vertex", "face", "shell")


def _solid_boxes(solid):
    """The axis-aligned pieces of a solid, as Box3 values."""
    return solid.boxes if hasattr(solid, "boxes") else (solid,)


def _scale_solid(solid, factor):
    f = Fraction(factor)
    if isinstance(solid, Box3):
        return Box3(*(((lo * f), (hi * f)) for lo, hi in solid.ivals))
    if isinstance(solid, LShape):
        return LShape(_scale_solid(solid.boxes[0], f), _scale_solid(solid.boxes[1], f))
    if isinstance(solid, Shell):
        return Shell(_scale_solid(solid.outer, f), _scale_solid(solid.cavity, f))
    raise PreconditionError(f"cannot scale solid of type {type(solid).__name__}")


class Shape:
    """One solid of a representation, with its identity and role."""

    __slots__ = ("id", "role", "solid")

    def __init__(self, id, role, solid):
        if role not in _ROLES:
            raise PreconditionError(f"unknown shape role {role!r}")
        self.id = id
        self.role = role
        self.solid = solid

    @property
    def kind(self) -> str:
        if isinstance(self.solid, Box3):
            return "box"
        if isinstance(self.solid, LShape):
            return "l"
        return "shell"

    def __repr__(self):
        return f"Shape({self.id!r}, {self.role!r}, {self.solid!r})"


class Representation:
    """A finished collection of shapes.

    graph and vertex_shape tie the geometry back to its source when the
    representation was computed rather than loaded: vertex_shape maps a
    graph vertex to the id of the shape that stands for it. report holds
    the last verification result, unpromoted the shape id pairs whose
    segment contacts could not be widened to facet contacts.
    """

    def __init__(self, builder, shapes, graph=None, vertex_shape=None):
        self.builder = builder
        self.shapes = list(shapes)
        self.graph = graph
        self.vertex_shape = dict(vertex_shape or {})
        self.face_shape = {}
        self.report = None
        self.unpromoted = []

    def __iter__(self):
        return iter(self.shapes)

    def __len__(self):
        return len(self.shapes)

    def shape_by_id(self, sid) -> Shape:
        for s in self.shapes:
            if s.id == sid:
                return s
        raise PreconditionError(f"no shape with id {sid!r}")

    @property
    def grid(self) -> int:
        """Smallest integer N such that every coordinate lies in [0, N]."""
        lo, hi, _ = grid_bounds(self)
        if lo < 0:
            raise PreconditionError("representation has negative coordinates")
        n = -(-hi.numerator // hi.denominator)
        return int(n)

    def to_json(self) -> str:
        shapes = []
        for s in self.shapes:
            boxes = [
                [[format_rat(lo), format_rat(hi)] for lo, hi in b.ivals]
                for b in _solid_boxes(s.solid)
            ]
            shapes.append({"id": s.id, "role": s.role, "kind": s.kind, "boxes": boxes})
        doc = {"builder": self.builder, "grid": self.grid, "shapes": shapes}
        return json.dumps(doc, indent=2)

    def to_obj(self) -> str:
        """Wavefront OBJ text: one group per shape, six quads per box."""
        lines = []
        base = 1
        for s in self.shapes:
            lines.append(f"g {s.role}_{s.id}")
            for b in _solid_boxes(s.solid):
                (x0, x1), (y0, y1), (z0, z1) = b.ivals
                corners = [
                    (x0, y0, z0), (x1, y0, z0), (x1, y1, z0), (x0, y1, z0),
                    (x0, y0, z1), (x1, y0, z1), (x1, y1, z1), (x0, y1, z1),
                ]
                for c in corners:
                    lines.append("v " + " ".join(repr(float(t)) for t in c))
                for quad in (
                    (0, 3, 2, 1), (4, 5, 6, 7),
                    (0, 1, 5, 4), (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7),
                ):
                    lines.append("f " + " ".join(str(base + q) for q in quad))
                base += 8
        return "\n".join(lines) + "\n"


def _shell_from_slabs(boxes):
    """Rebuild a Shell from its six wall slabs.

    The two x walls are the slabs spanning the full outer footprint on y
    and z; of the rest, the y walls still span full z. The cavity sits
    between the inner faces of opposite walls.
    """
    if len(boxes) != 6:
        raise FormatError(f"shell must be exactly six wall slabs, got {len(boxes)}")

    def span(vals):
        return (min(v[0] for v in vals), max(v[1] for v in vals))

    oy = span([b.y for b in boxes])
    oz = span([b.z for b in boxes])
    xw = sorted((b for b in boxes if b.y == oy and b.z == oz), key=lambda b: b.x)
    rest = [b for b in boxes if not (b.y == oy and b.z == oz)]
    yw = sorted((b for b in rest if b.z == oz), key=lambda b: b.y)
    zw = sorted((b for b in rest if b.z != oz), key=lambda b: b.z)
    if len(xw) != 2 or len(yw) != 2 or len(zw) != 2:
        raise FormatError("six slabs do not form two walls per axis")
    cavity = Box3(
        (xw[0].x[1], xw[1].x[0]),
        (yw[0].y[1], yw[1].y[0]),
        (zw[0].z[1], zw[1].z[0]),
    )
    return Shell(Box3(span([b.x for b in boxes]), oy, oz), cavity)


def representation_from_json(text: str) -> Representation:
    """Parse a representation serialized by Representation.to_json."""
    try:
        doc = json.loads(text)
    except ValueError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "shapes" not in doc or "builder" not in doc:
        raise FormatError("representation document needs builder and shapes")
    shapes = []
    for entry in doc["shapes"]:
        try:
            boxes = [
                Box3(*((parse_rat(lo), parse_rat(hi)) for lo, hi in b))
                for b in entry["boxes"]
            ]
            kind = entry["kind"]
            if kind == "box":
                if len(boxes) != 1:
                    raise FormatError("box shape must hold exactly one box")
                solid = boxes[0]
            elif kind == "l":
                if len(boxes) != 2:
                    raise FormatError("l shape must hold exactly two boxes")
                solid = LShape(boxes[0], boxes[1])
            elif kind == "shell":
                solid = _shell_from_slabs(boxes)
            else:
                raise FormatError(f"unknown shape kind {kind!r}")
            shapes.append(Shape(entry["id"], entry["role"], solid))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed shape entry: {exc}") from None
    return Representation(doc["builder"], shapes)


# ---------------------------------------------------------------------------
# vertex boxes from a wood


def primal_boxes(g: PlaneGraph, w: SchnyderWood) -> Representation:
    """One box per vertex, straight from the wood's level assignment.

    On each axis a vertex spans from its own level in that axis's path
    partition up to the level of its parent in the same-color tree. A root
    has no such parent in its own color and runs one unit past the maximum
    level instead, which later puts its outer facet flush against the
    shell. Uni-directional edges come out as facet contacts of positive
    area (child's high facet against the parent box); bi-directional edges
    come out as axis-parallel segment contacts.
    """
    host = w.host
    if host.n != g.n:
        raise PreconditionError("wood does not belong to this graph")
    lv = levels_from_wood(w)
    levels = (lv.x_level, lv.y_level, lv.z_level)
    maxes = tuple(max(axis) for axis in levels)
    shapes = []
    for u in range(host.n):
        ivals = []
        for c in range(3):
            p = w.parent(u, c + 1)
            hi = maxes[c] + 1 if p is None else levels[c][p]
            ivals.append((Fraction(levels[c][u]), Fraction(hi)))
        shapes.append(Shape(u, "vertex", Box3(*ivals)))
    return Representation(
        "primal_boxes", shapes, graph=host, vertex_shape={u: u for u in range(host.n)}
    )


# ---------------------------------------------------------------------------
# face boxes anchored at joins


def dual_boxes(primal_rep: Representation, w_dual: SchnyderWood) -> Representation:
    """One box per inner face, sitting in the joins of the vertex boxes.

    A face's low corner is the componentwise maximum of the low corners of
    its boundary vertices' boxes; that point lies on the boundary of every
    one of those boxes. Each high coordinate is a touch witness borrowed
    from a neighboring face: across a bi-directional dual edge the arc
    source rises to its parent's anchor on the axis colored by the reverse
    arc, and along a uni-directional dual arc the parent rises to the
    child's anchor on the arc's own color. An axis with no witness falls
    back to one unit past the axis maximum, flush with the enclosing
    cavity wall, which is only sound for a face next to an outer region.

    Raises VerificationError when witnesses disagree, when a witnessless
    axis has no outer region to lean on, or when the box would be
    degenerate.
    """
    info = w_dual.split_info
    if info is None:
        raise PreconditionError("dual wood carries no split-dual bookkeeping")
    host = info.primal
    shape_of = {}
    for s in primal_rep.shapes:
        shape_of[s.id] = s
    vmap = primal_rep.vertex_shape

    def locorner(v):
        return tuple(iv[0] for iv in shape_of[vmap[v]].solid.ivals)

    dg = info.graph
    anchors: list[tuple | None] = []
    for fv in range(dg.n):
        f = info.face_of_dual_vertex[fv]
        if f is None:
            anchors.append(None)
            continue
        pts = [locorner(v) for v in host.face_vertices(f)]
        anchors.append(tuple(max(p[c] for p in pts) for c in range(3)))

    o_set = set(info.o_vertices)
    spans: list[list] = [[None, None, None] for _ in range(dg.n)]
    has_outer_neighbor = [False] * dg.n

    def witness(fv, axis, value):
        cur = spans[fv][axis]
        if cur is not None and cur != value:
            raise VerificationError(
                f"face of dual vertex {fv}: touch witnesses on axis {axis} "
                f"disagree ({format_rat(cur)} vs {format_rat(value)})"
            )
        spans[fv][axis] = value

    for e in range(dg.m):
        s, t = dg.endpoints(e)
        s_out, t_out = s in o_set, t in o_set
        if s_out and t_out:
            continue
        if s_out or t_out:
            has_outer_neighbor[s if t_out else t] = True
            continue
        c0, c1 = w_dual.edge_colors(e)
        if c0 is not None and c1 is not None:
            # both arcs present: each source must reach its parent's anchor
            # on the axis the reverse arc is colored with
            witness(s, c1 - 1, anchors[t][c1 - 1])
            witness(t, c0 - 1, anchors[s][c0 - 1])
        elif c0 is not None:
            witness(t, c0 - 1, anchors[s][c0 - 1])
        elif c1 is not None:
            witness(s, c1 - 1, anchors[t][c1 - 1])
        else:
            raise InternalInvariantError(f"dual edge {e} carries no arc")

    walls = tuple(
        max(s.solid.ivals[c][1] for s in primal_rep.shapes) for c in range(3)
    )
    shapes = []
    fmap = {}
    base = host.n
    for fv in range(dg.n):
        if anchors[fv] is None:
            continue
        ivals = []
        for c in range(3):
            lo = anchors[fv][c]
            hi = spans[fv][c]
            if hi is None:
                if not has_outer_neighbor[fv]:
                    raise VerificationError(
                        f"face of dual vertex {fv}: no touch witness on axis "
                        f"{c} and no outer region to lean on"
                    )
                hi = walls[c]
            if hi <= lo:
                raise VerificationError(
                    f"face of dual vertex {fv}: degenerate on axis {c} "
                    f"([{format_rat(lo)}, {format_rat(hi)}])"
                )
            ivals.append((Fraction(lo), Fraction(hi)))
        sid = base + fv
        fmap[fv] = sid
        shapes.append(Shape(sid, "face", Box3(*ivals)))
    rep = Representation("dual_boxes", shapes, graph=dg, vertex_shape=fmap)
    return rep


# ---------------------------------------------------------------------------
# widening segment contacts into facet contacts


def _piece_dim(a, b):
    """-1 disjoint, else the number of axes with positive overlap (3 = solid)."""
    dim = 0
    for p in range(3):
        lo = a[p][0] if a[p][0] > b[p][0] else b[p][0]
        hi = a[p][1] if a[p][1] < b[p][1] else b[p][1]
        if lo > hi:
            return -1
        if lo < hi:
            dim += 1
    return dim


class _ExtensionPass:
    """Mutable state for widening contacts on a doubled grid.

    Every shape is broken into axis-aligned pieces (a shell into its six
    wall slabs). A candidate move pushes one box's high facet one unit
    along one axis; only pieces whose low coordinate sits on the old or
    the new facet plane can change their contact with the moved box, so
    those are indexed up front. A move is vetoed when it would overlap
    anything or raise a pair that is not on the allow list to a contact of
    positive dimension.
    """

    def __init__(self, shapes, allowed_pairs):
        self.shapes = list(shapes)
        self.allowed = allowed_pairs
        self.index = {s.id: i for i, s in enumerate(self.shapes)}
        self.pieces = []
        self.piece_owner = []
        self.owner_pieces = [[] for _ in self.shapes]
        for i, s in enumerate(self.shapes):
            for b in _solid_boxes(s.solid):
                self.owner_pieces[i].append(len(self.pieces))
                self.pieces.append([[lo, hi] for lo, hi in b.ivals])
                self.piece_owner.append(i)
        self.lo_maps = ({}, {}, {})
        for pi, iv in enumerate(self.pieces):
            for c in range(3):
                self.lo_maps[c].setdefault(iv[c][0], []).append(pi)

    def box_of(self, i):
        pieces = self.owner_pieces[i]
        if len(pieces) != 1:
            raise InternalInvariantError("only single-box shapes can be widened")
        return self.pieces[pieces[0]]

    def pair_dim(self, i, j):
        best = -1
        for pa in self.owner_pieces[i]:
            for pb in self.owner_pieces[j]:
                d = _piece_dim(self.pieces[pa], self.pieces[pb])
                if d == 3:
                    return 3
                if d > best:
                    best = d
        return best

    def try_widen(self, i, axis) -> bool:
        iv = self.box_of(i)
        h = iv[axis][1]
        neighbors = set()
        for plane in (h, h + 1):
            for pi in self.lo_maps[axis].get(plane, ()):
                owner = self.piece_owner[pi]
                if owner != i:
                    neighbors.add(owner)
        old = {j: self.pair_dim(i, j) for j in neighbors}
        iv[axis][1] = h + 1
        veto = False
        for j in neighbors:
            new = self.pair_dim(i, j)
            if new == 3:
                veto = True
                break
            if new >= 1 and new > old[j]:
                key = ExpectedContacts.key(self.shapes[i].id, self.shapes[j].id)
                if key not in self.allowed:
                    veto = True
                    break
        if veto:
            iv[axis][1] = h
            return False
        return True

    def rebuilt(self):
        out = []
        for i, s in enumerate(self.shapes):
            if len(self.owner_pieces[i]) == 1 and isinstance(s.solid, Box3):
                iv = self.pieces[self.owner_pieces[i][0]]
                out.append(Shape(s.id, s.role, Box3(*(tuple(p) for p in iv))))
            else:
                out.append(s)
        return out


def _widen_edges(pass_, w: SchnyderWood, id_of, *, strict: bool):
    """Give every mapped bi-directional edge a facet contact if room allows.

    Returns the shape id pairs left at segment contacts. With strict=True
    a blocked edge raises instead; per the construction of vertex boxes
    one of the two sides of a touch plane is always free there.
    """
    host = w.host
    blocked = []
    for e in range(host.m):
        c0, c1 = w.edge_colors(e)
        if c0 is None or c1 is None:
            continue
        u, v = host.endpoints(e)
        a, b = id_of.get(u), id_of.get(v)
        if a is None or b is None:
            continue
        ia, ib = pass_.index[a], pass_.index[b]
        if pass_.pair_dim(ia, ib) >= 2:
            continue
        candidates = []
        for s, t, color in ((ia, ib, c0), (ib, ia, c1)):
            ax = color - 1
            ivs = pass_.box_of(s)[ax]
            ivt = pass_.box_of(t)[ax]
            # widen whichever box lies below the shared touch plane
            if ivs[1] == ivt[0]:
                candidates.append((s, ax))
            elif ivt[1] == ivs[0]:
                candidates.append((t, ax))
            else:
                raise InternalInvariantError(
                    f"edge {e} ({u}, {v}): arc colored {color} has no touch plane"
                )
        if not any(pass_.try_widen(i, ax) for i, ax in candidates):
            if strict:
                raise InternalInvariantError(
                    f"edge {e} ({u}, {v}): both widening directions are blocked"
                )
            blocked.append(ExpectedContacts.key(a, b))
    return blocked


def make_proper(rep: Representation, w: SchnyderWood) -> Representation:
    """Upgrade the segment contacts of bi-directional edges to facet contacts.

    Doubles every coordinate, then pushes, per bi-directional edge still
    at a segment contact, one endpoint's box one unit through the shared
    touch plane: first the box lying below the plane of the first arc's
    axis, then the other side as fallback. Moves that would overlap
    anything or create a positive-dimension contact across a non-edge are
    dropped.

    For vertex boxes a fully blocked edge raises InternalInvariantError;
    one side is always free there. Face boxes can genuinely run out of
    room (three faces pairwise at segment contacts may block each other's
    last upgrade), so blocked face pairs are left as segments and listed
    in the result's unpromoted attribute.
    """
    doubled = [Shape(s.id, s.role, _scale_solid(s.solid, 2)) for s in rep.shapes]
    id_of = rep.vertex_shape
    allowed = set()
    for e in range(w.host.m):
        u, v = w.host.endpoints(e)
        a, b = id_of.get(u), id_of.get(v)
        if a is not None and b is not None:
            allowed.add(ExpectedContacts.key(a, b))
    pass_ = _ExtensionPass(doubled, allowed)
    strict = all(s.role == "vertex" for s in rep.shapes)
    blocked = _widen_edges(pass_, w, id_of, strict=strict)
    out = Representation(
        rep.builder, pass_.rebuilt(), graph=rep.graph, vertex_shape=dict(id_of)
    )
    out.face_shape = dict(rep.face_shape)
    out.unpromoted = blocked
    return out


# ---------------------------------------------------------------------------
# the assembled primal-dual representation


def _expected_contacts(w, w_dual, vmap, fmap, shell_id) -> ExpectedContacts:
    """The contact obligations of an assembled representation.

    Every primal edge and every uni-directional inner dual edge must be a
    facet contact, as must the shell against each outer-walk vertex (flush
    at a cavity wall) and against each face box that leans on an outer
    region. Bi-directional inner dual edges and vertex-face incidences
    must meet but may do so in any positive dimension.
    """
    key = ExpectedContacts.key
    host = w.host
    proper = set()
    nonempty = set()
    for e in range(host.m):
        u, v = host.endpoints(e)
        proper.add(key(vmap[u], vmap[v]))
    info = w_dual.split_info
    dg = info.graph
    for e in range(dg.m):
        s, t = dg.endpoints(e)
        if s in fmap and t in fmap:
            c0, c1 = w_dual.edge_colors(e)
            pair = key(fmap[s], fmap[t])
            if c0 is None or c1 is None:
                proper.add(pair)
            else:
                nonempty.add(pair)
        elif s in fmap or t in fmap:
            inner = s if s in fmap else t
            other = t if s in fmap else s
            if other in info.o_vertices:
                proper.add(key(fmap[inner], shell_id))
    for f, fv in enumerate(info.dual_vertex_of_face):
        if fv is None:
            continue
        for u in set(host.face_vertices(f)):
            nonempty.add(key(vmap[u], fmap[fv]))
    for u in set(host.outer_walk()):
        proper.add(key(vmap[u], shell_id))
    return ExpectedContacts(proper=proper, nonempty=nonempty)


def assemble_primal_dual(g: PlaneGraph, roots=None, *, verify: bool = True):
    """Vertex boxes, face boxes, and a shell for one 3-connected plane graph.

    Builds a Schnyder wood (for the given roots, or the first three outer
    vertices), the vertex boxes from its levels, the face boxes from the
    split-dual wood, and a one-unit-thick shell around their common
    bounding box. The grid is then doubled and bi-directional edges are
    widened into facet contacts: strictly among vertex boxes, best effort
    among face boxes, where a blocked pair stays a segment contact and is
    recorded in unpromoted.

    With verify=True the finished geometry is certified in incidence mode
    against the expected contacts; failure raises VerificationError with
    the report attached. The report is kept on the result either way.
    """
    if roots is None:
        walk = g.outer_walk()
        roots = (walk[0], walk[1], walk[2])
    w = compute_schnyder_wood(g, roots)
    host = w.host
    prep = primal_boxes(host, w)
    w_dual = dual_schnyder_wood(w)
    drep = dual_boxes(prep, w_dual)
    vmap = prep.vertex_shape
    fmap = drep.vertex_shape

    boxes = [s.solid for s in prep.shapes] + [s.solid for s in drep.shapes]
    cavity = Box3(
        *(
            (min(b.ivals[c][0] for b in boxes), max(b.ivals[c][1] for b in boxes))
            for c in range(3)
        )
    )
    outer = Box3(*((lo - 1, hi + 1) for lo, hi in cavity.ivals))
    shell_id = host.n + len(drep.shapes)
    shapes = (
        prep.shapes + drep.shapes + [Shape(shell_id, "shell", Shell(outer, cavity))]
    )

    expected = _expected_contacts(w, w_dual, vmap, fmap, shell_id)
    doubled = [Shape(s.id, s.role, _scale_solid(s.solid, 2)) for s in shapes]
    pass_ = _ExtensionPass(doubled, expected.proper | expected.nonempty)
    _widen_edges(pass_, w, vmap, strict=True)
    blocked = _widen_edges(pass_, w_dual, fmap, strict=False)

    rep = Representation(
        "primal_dual", pass_.rebuilt(), graph=host, vertex_shape=dict(vmap)
    )
    rep.face_shape = dict(fmap)
    rep.unpromoted = blocked
    rep.expected = expected
    if verify:
        report = verify_representation(rep, expected, mode="incidence")
        rep.report = report
        if not report.ok:
            err = VerificationError(
                f"assembled representation fails certification with "
                f"{len(report.violations)} violations"
            )
            err.report = report
            raise err
    return rep


# ---------------------------------------------------------------------------
# staircase construction along a canonical order


def _orient_class(w: SchnyderWood, seq):
    """The class in left-to-right order: successive members joined by 2-arcs."""
    if len(seq) > 1 and w.parent(seq[0], 2) != seq[1]:
        seq = tuple(reversed(seq))
    for a, b in zip(seq, seq[1:]):
        if w.parent(a, 2) != b:
            raise InternalInvariantError("class members are not chained by 2-arcs")
    return seq


def boxes_by_canonical_order(g: PlaneGraph, order) -> Representation:
    """Vertex boxes built layer by layer along an elementary canonical order.

    The two base vertices become interlocking slabs in the bottom layer.
    Every later class lands in the next z slab, hooked between its
    leftmost predecessor (by an edge colored 1) and its rightmost (colored
    2): a singleton stretches from one hook to the other and covers
    whatever the staircase holds strictly between them; a chain descends
    in small steps, each member holding a sliver of the x range and a
    share of the y range. When the hook edge is bi-directional the new box
    aligns flush with the hook's facet and the hook retires from the
    staircase. Retired boxes keep their height and are skipped by all
    later hooks, which is sound because a retirement only happens on a
    vertex's last upward edge.

    All contacts come out as facet contacts of positive area, one per
    edge. Coordinates are finally renamed to consecutive integers per
    axis, which preserves every contact.
    """
    if getattr(order, "head_index", None) != 3:
        raise PreconditionError("canonical order must have head color 3")
    if not getattr(order, "elementary", False):
        raise PreconditionError("only elementary canonical orders are supported")
    w = compatible_wood_from_order(order)
    host = w.host
    if host.n != g.n:
        raise PreconditionError("order does not belong to this graph")

    half = Fraction(1, 2)
    v1, v2 = order.classes[0]
    boxes: dict[int, list] = {
        v1: [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)], [Fraction(0), Fraction(1)]],
        v2: [[Fraction(0), Fraction(1)], [half, 1 + half], [Fraction(0), Fraction(1)]],
    }
    contour = [v1, v2]
    active = {v1: True, v2: True}

    def first_active(pos, step):
        i = pos + step
        while 0 <= i < len(contour):
            if active[contour[i]]:
                return contour[i]
            i += step
        return None

    for level in range(1, len(order.classes)):
        seq = _orient_class(w, tuple(order.classes[level]))
        v_a, v_b = seq[0], seq[-1]
        w_l = w.parent(v_a, 1)
        w_r = w.parent(v_b, 2)
        if w_l is None or w_r is None or not (active.get(w_l) and active.get(w_r)):
            raise InternalInvariantError(f"class at level {level} lacks live hooks")
        i_l = contour.index(w_l)
        i_r = contour.index(w_r)
        if i_l >= i_r:
            raise InternalInvariantError(f"hooks of level {level} out of order")
        middles = contour[i_l + 1 : i_r]
        active_middles = [m for m in middles if active[m]]

        d = w.out_dart(v_a, 1)
        bury_l = w.color_of(d ^ 1) == 3
        d = w.out_dart(v_b, 2)
        bury_r = w.color_of(d ^ 1) == 3

        box_l, box_r = boxes[w_l], boxes[w_r]

        # left attachment: x stop and y start of the first member. Burying
        # the left hook means sitting on part of its top instead of against
        # its low-x facet, so the first member overhangs it a little and
        # starts at the very bottom of its y range.
        if bury_l:
            pred = first_active(i_l, -1)
            cap = box_l[0][1]
            if pred is not None and boxes[pred][0][0] < cap:
                cap = boxes[pred][0][0]
            x_stop = (box_l[0][0] + cap) / 2
            y_start = box_l[1][0]
        else:
            x_stop = box_l[0][0]
            after = first_active(i_l, 1)
            cap = box_l[1][1]
            if after is not None and boxes[after][1][0] < cap:
                cap = boxes[after][1][0]
            y_start = (box_l[1][0] + cap) / 2

        # right attachment, mirrored: y stop and x start of the last member
        if bury_r:
            succ = first_active(i_r, 1)
            cap = box_r[1][1]
            if succ is not None and boxes[succ][1][0] < cap:
                cap = boxes[succ][1][0]
            y_stop = (box_r[1][0] + cap) / 2
            x_start = box_r[0][0]
        else:
            y_stop = box_r[1][0]
            cap = box_l[0][0]
            if active_middles and boxes[active_middles[-1]][0][0] < cap:
                cap = boxes[active_middles[-1]][0][0]
            x_start = (box_r[0][0] + cap) / 2

        z = [Fraction(level), Fraction(level + 1)]
        if len(seq) == 1:
            for m in active_middles:
                if w.parent(m, 3) != v_a:
                    raise InternalInvariantError(
                        f"covered vertex {m} does not hang from level {level}"
                    )
            boxes[v_a] = [[x_start, x_stop], [y_start, y_stop], list(z)]
        else:
            if active_middles:
                raise InternalInvariantError(
                    f"chain at level {level} would cover live boxes"
                )
            m = len(seq)
            barrier = box_l[0][0]
            floor = box_r[0][0]
            h = (barrier - floor) / (2 * m + 2)
            if h <= 0:
                raise InternalInvariantError(f"chain at level {level} has no x room")
            # the ladder interleaves: member i+1 starts under member i's
            # overhang, giving each consecutive pair a strip of shared
            # footprint; y is split at knots running only to the right
            # hook's bottom so that no interior member can reach it
            y_top = box_r[1][0]
            for i, u in enumerate(seq):
                x_hi = x_stop if i == 0 else barrier - 2 * i * h
                x_lo = barrier - (2 * i + 3) * h
                y_lo = y_start + i * (y_top - y_start) / m
                y_hi = y_start + (i + 1) * (y_top - y_start) / m
                boxes[u] = [[x_lo, x_hi], [y_lo, y_hi], list(z)]
            boxes[v_b][1][1] = y_stop
            if bury_r:
                boxes[v_b][0][0] = floor

        # retire what this layer buries or covers, then splice the contour
        for m in middles:
            if active[m]:
                boxes[m][2][1] = Fraction(level)
            active[m] = False
        if bury_l:
            boxes[w_l][2][1] = Fraction(level)
            active[w_l] = False
        if bury_r:
            boxes[w_r][2][1] = Fraction(level)
            active[w_r] = False
        for u in seq:
            active[u] = True
        contour[i_l + 1 : i_r] = list(seq)

    top = Fraction(len(order.classes))
    for u, alive in active.items():
        if alive:
            boxes[u][2][1] = top

    # rename each axis's coordinates to consecutive integers
    for axis in range(3):
        vals = sorted({iv[axis][k] for iv in boxes.values() for k in (0, 1)})
        rank = {val: Fraction(i) for i, val in enumerate(vals)}
        for iv in boxes.values():
            iv[axis][0] = rank[iv[axis][0]]
            iv[axis][1] = rank[iv[axis][1]]

    shapes = [
        Shape(u, "vertex", Box3(*(tuple(p) for p in boxes[u]))) for u in range(host.n)
    ]
    return Representation(
        "canonical_staircase",
        shapes,
        graph=host,
        vertex_shape={u: u for u in range(host.n)},
    )
