"""Schnyder woods, ordered path partitions, and canonical orders.

Colors are 1, 2, 3 with wrap-around arithmetic. A wood stores one optional
color per dart; a dart carrying a color is an arc from its origin toward its
target. Roots carry one outgoing half-edge each, colored by root index.

Partition classes are stored left to right: class k of a partition with head
v_i runs from the v_{i+1} side to the v_{i-1} side, and V_1 is the outer path
from v_{i+1} to v_{i-1}.
"""

from __future__ import annotations

import heapq

from .errors import FormatError, InternalInvariantError, PreconditionError
from .planegraph import PlaneGraph, is_three_connected, split_dual

__all__ = [
    "CanonicalOrder",
    "LevelAssignment",
    "OrderedPathPartition",
    "SchnyderWood",
    "compatible_wood_from_order",
    "compute_schnyder_wood",
    "dual_schnyder_wood",
    "elementary_canonical_order",
    "is_compatible",
    "is_elementary",
    "levels_from_wood",
    "next_color",
    "ordered_path_partition",
    "parse_partition",
    "parse_wood",
    "prev_color",
    "serialize_partition",
    "serialize_wood",
    "validate_partition",
    "validate_wood",
]


def next_color(c: int) -> int:
    return c % 3 + 1


def prev_color(c: int) -> int:
    return (c - 2) % 3 + 1


class SchnyderWood:
    """An edge orientation and coloring of a plane graph with three roots.

    dart_colors[d] is the color of the arc origin(d) -> target(d), or None
    when the edge is not directed that way. half_edges maps each root to its
    half-edge color. added_base_edge names the edge id of a base edge that
    was inserted to make the base pair adjacent; it belongs to the host but
    not to the original input graph.
    """

    __slots__ = (
        "host",
        "roots",
        "half_edges",
        "added_base_edge",
        "split_info",
        "_dart_color",
        "_out",
        "_children",
        "_arcs",
    )

    def __init__(
        self,
        host: PlaneGraph,
        roots,
        dart_colors,
        half_edges: dict[int, int] | None = None,
        added_base_edge: int | None = None,
        split_info=None,
    ):
        if len(roots) != 3 or len(set(roots)) != 3:
            raise PreconditionError("a wood needs three distinct roots")
        dart_colors = list(dart_colors)
        if len(dart_colors) != 2 * host.m:
            raise PreconditionError("dart color table length must be twice the edge count")
        for c in dart_colors:
            if c is not None and c not in (1, 2, 3):
                raise PreconditionError(f"invalid color {c!r}")
        self.host = host
        self.roots = tuple(roots)
        self._dart_color = dart_colors
        if half_edges is None:
            half_edges = {roots[k]: k + 1 for k in range(3)}
        self.half_edges = dict(half_edges)
        self.added_base_edge = added_base_edge
        self.split_info = split_info
        out: list[list[int | None]] = [[None, None, None] for _ in range(host.n)]
        for d, c in enumerate(dart_colors):
            if c is not None:
                out[host.origin(d)][c - 1] = d
        self._out = out
        self._children = None
        self._arcs = None

    # -- queries ---------------------------------------------------------

    def color_of(self, d: int) -> int | None:
        """Color of the arc along dart d, if the edge is directed that way."""
        return self._dart_color[d]

    def edge_colors(self, e: int) -> tuple[int | None, int | None]:
        """Colors of the two directions of edge e (dart 2e, dart 2e+1)."""
        return self._dart_color[2 * e], self._dart_color[2 * e + 1]

    def is_bidirectional(self, e: int) -> bool:
        a, b = self.edge_colors(e)
        return a is not None and b is not None

    def out_dart(self, v: int, color: int) -> int | None:
        """Dart of v's outgoing arc in a color; None where the half-edge
        stands in."""
        return self._out[v][color - 1]

    def parent(self, v: int, color: int) -> int | None:
        d = self._out[v][color - 1]
        return None if d is None else self.host.target(d)

    def children(self, v: int, color: int) -> list[int]:
        if self._children is None:
            ch: list[list[list[int]]] = [[[], [], []] for _ in range(self.host.n)]
            for d, c in enumerate(self._dart_color):
                if c is not None:
                    ch[self.host.target(d)][c - 1].append(self.host.origin(d))
            self._children = ch
        return list(self._children[v][color - 1])

    @property
    def arcs(self) -> tuple[frozenset, ...]:
        """Per edge, the set of (dart, color) pairs carried by that edge."""
        if self._arcs is None:
            out = []
            for e in range(self.host.m):
                pairs = []
                for d in (2 * e, 2 * e + 1):
                    c = self._dart_color[d]
                    if c is not None:
                        pairs.append((d, c))
                out.append(frozenset(pairs))
            self._arcs = tuple(out)
        return self._arcs

    def cyclic_paths(self, i: int) -> list[list[int]]:
        """Maximal paths of edges bi-colored {i-1, i+1}, each listed left to
        right: an (i-1)-colored arc moves one step rightward along a path."""
        g = self.host
        ca = prev_color(i)
        cb = next_color(i)
        dart_to: list[dict[int, int]] = [dict() for _ in range(g.n)]
        for e in range(g.m):
            a, b = self.edge_colors(e)
            if a is not None and b is not None and {a, b} == {ca, cb}:
                u, v = g.endpoints(e)
                if v in dart_to[u]:
                    raise PreconditionError("two cyclic edges join one vertex pair")
                dart_to[u][v] = 2 * e
                dart_to[v][u] = 2 * e + 1
        for u in range(g.n):
            if len(dart_to[u]) > 2:
                raise PreconditionError(f"vertex {u} lies on three cyclic edges")
        paths = []
        seen = [False] * g.n

        def step_right(u: int) -> int | None:
            for v, d in dart_to[u].items():
                if self._dart_color[d] == ca:
                    return v
            return None

        def step_left(u: int) -> int | None:
            for v in dart_to[u]:
                if self._dart_color[dart_to[v][u]] == ca:
                    return v
            return None

        for s in range(g.n):
            if seen[s] or not dart_to[s]:
                continue
            u = s
            steps = 0
            while True:
                v = step_left(u)
                if v is None:
                    break
                u = v
                steps += 1
                if steps > g.n:
                    raise PreconditionError("bi-colored edges form a cycle")
            path = [u]
            seen[u] = True
            while True:
                v = step_right(u)
                if v is None or seen[v]:
                    break
                path.append(v)
                seen[v] = True
                u = v
            paths.append(path)
        return paths


# -- validation ---------------------------------------------------------------


def validate_wood(w: SchnyderWood) -> list[str]:
    """All violations of the four wood conditions (empty iff valid)."""
    g = w.host
    out: list[str] = []
    for e in range(g.m):
        a, b = w.edge_colors(e)
        u, v = g.endpoints(e)
        if a is None and b is None:
            out.append(f"edge ({u},{v}) carries no direction")
        elif a is not None and b is not None and a == b:
            out.append(f"edge ({u},{v}) is bi-directional in a single color {a}")
    for k in range(3):
        r = w.roots[k]
        c = w.half_edges.get(r)
        if c != k + 1:
            out.append(f"half-edge at root {r} has color {c}, expected {k + 1}")
    for v in w.half_edges:
        if v not in w.roots:
            out.append(f"half-edge at non-root vertex {v}")
    outer = g.outer_face if g.has_outer() else None
    for v in range(g.n):
        counts = [0, 0, 0]
        for d in g.vertex_darts(v):
            c = w._dart_color[d]
            if c is not None:
                counts[c - 1] += 1
        root_index = None
        if v in w.roots and w.half_edges.get(v) == w.roots.index(v) + 1:
            root_index = w.roots.index(v) + 1
            counts[root_index - 1] += 1
        for c in (1, 2, 3):
            if counts[c - 1] != 1:
                out.append(f"vertex {v} has out-degree {counts[c - 1]} in color {c}")
        seq = _sector_sequence(w, v, root_index, outer)
        if seq is None:
            out.append(f"vertex {v} has a bi-directional edge with clashing colors")
        elif not _sector_pattern_ok(seq):
            out.append(f"vertex {v} violates the cyclic sector pattern")
    for f in range(g.face_count()):
        if outer is not None and f == outer:
            continue
        fwalk = g.face_walk(f)
        if not fwalk:
            continue
        for darts in (fwalk, [d ^ 1 for d in fwalk]):
            colors = {w._dart_color[d] for d in darts}
            if len(colors) == 1 and None not in colors:
                out.append(f"inner face {f} is a directed cycle in color {colors.pop()}")
                break
    return out


def _sector_sequence(w, v, root_index, outer):
    """Expand v's rotation into its circular (kind, color) item sequence.

    A bi-directional edge contributes its two items in the only order the
    sector pattern permits. At a root, the half-edge item is inserted in the
    wedge bordering the outer face. Returns None when a bi-directional edge
    admits no legal local order.
    """
    g = w.host
    seq: list[tuple[str, int]] = []
    for d in g.vertex_darts(v):
        oc = w._dart_color[d]
        ic = w._dart_color[d ^ 1]
        if oc is not None and ic is not None:
            if ic == prev_color(oc):
                seq.append(("in", ic))
                seq.append(("out", oc))
            elif ic == next_color(oc):
                seq.append(("out", oc))
                seq.append(("in", ic))
            else:
                return None
        elif oc is not None:
            seq.append(("out", oc))
        elif ic is not None:
            seq.append(("in", ic))
        if root_index is not None and outer is not None and g.face_of(d) == outer:
            seq.append(("out", root_index))
            root_index = None
    if root_index is not None:
        seq.append(("out", root_index))
    return seq


def _sector_pattern_ok(seq) -> bool:
    """Circular match against: out1, in2*, out3, in1*, out2, in3*."""
    outs = [(k, c) for k, (kind, c) in enumerate(seq) if kind == "out"]
    if len(outs) != 3 or sorted(c for _, c in outs) != [1, 2, 3]:
        return False
    start = next(k for k, c in outs if c == 1)
    n = len(seq)
    rot = [seq[(start + j) % n] for j in range(n)]
    expected_out = [1, 3, 2]
    in_after = {1: 2, 3: 1, 2: 3}
    oi = 0
    cur_in = None
    for kind, c in rot:
        if kind == "out":
            if oi >= 3 or c != expected_out[oi]:
                return False
            cur_in = in_after[c]
            oi += 1
        elif c != cur_in:
            return False
    return oi == 3


# -- partitions -----------------------------------------------------------------


class OrderedPathPartition:
    """Vertex classes V_1..V_L with per-vertex levels.

    classes[k] lists class k+1 left to right. head is v_i, and base_pair is
    (v_{i-1}, v_{i+1}) = (right end of V_1, left end of V_1).
    """

    elementary = False

    def __init__(
        self,
        host: PlaneGraph,
        roots,
        head_index: int,
        classes,
        added_base_edge: int | None = None,
    ):
        if head_index not in (1, 2, 3):
            raise PreconditionError("head index must be 1, 2, or 3")
        self.host = host
        self.roots = tuple(roots)
        self.head_index = head_index
        self.classes = tuple(tuple(c) for c in classes)
        self.added_base_edge = added_base_edge
        level = [0] * host.n
        count = 0
        for k, cls in enumerate(self.classes, start=1):
            for v in cls:
                if not 0 <= v < host.n:
                    raise PreconditionError(f"class {k} names an unknown vertex {v}")
                if level[v]:
                    raise PreconditionError(f"vertex {v} appears in two classes")
                level[v] = k
                count += 1
        if count != host.n:
            raise PreconditionError("classes do not partition the vertex set")
        self.level = tuple(level)

    @property
    def head(self) -> int:
        return self.roots[self.head_index - 1]

    @property
    def left_base(self) -> int:
        return self.roots[self.head_index % 3]

    @property
    def right_base(self) -> int:
        return self.roots[self.head_index - 2]

    @property
    def base_pair(self) -> tuple[int, int]:
        return (self.right_base, self.left_base)

    @property
    def length(self) -> int:
        return len(self.classes)


class CanonicalOrder(OrderedPathPartition):
    """An ordered path partition produced as a canonical order."""

    def __init__(self, *args, elementary: bool = False, **kwargs):
        super().__init__(*args, **kwargs)
        self.elementary = elementary


class LevelAssignment:
    """Per-vertex levels in the three partitions of one wood: the partition
    with head v_1 gives x, head v_2 gives y, head v_3 gives z."""

    __slots__ = ("x_level", "y_level", "z_level")

    def __init__(self, x_level, y_level, z_level):
        self.x_level = tuple(x_level)
        self.y_level = tuple(y_level)
        self.z_level = tuple(z_level)

    def of(self, v: int) -> tuple[int, int, int]:
        return self.x_level[v], self.y_level[v], self.z_level[v]


# -- elementary canonical order by peeling ----------------------------------------


def elementary_canonical_order(g: PlaneGraph, base_edge, head: int) -> CanonicalOrder:
    """Canonical order with |V_1| = 2, peeling classes off the top.

    base_edge (v1, v2) must be an outer edge with v2 following v1 on the
    outer walk, and head an outer vertex distinct from both.
    """
    v1, v2 = base_edge
    classes = _peel(g, v1, v2, head)
    return CanonicalOrder(g, (v1, v2, head), 3, classes, elementary=True)


def _peel(g: PlaneGraph, v1: int, v2: int, v3: int) -> list[list[int]]:
    if not is_three_connected(g):
        raise PreconditionError("canonical orders require a 3-connected graph")
    if not g.has_outer():
        raise PreconditionError("graph has no designated outer face")
    walk = g.face_vertices(g.outer_face)
    if v3 in (v1, v2) or v3 not in walk:
        raise PreconditionError("head must be an outer vertex distinct from the base pair")
    L = len(walk)
    try:
        p1 = walk.index(v1)
    except ValueError:
        raise PreconditionError("base pair must lie on the outer face") from None
    if walk[(p1 + 1) % L] != v2:
        raise PreconditionError(
            "base pair is not an outer edge traversed (v1, v2) on the outer walk"
        )

    n = g.n
    outer = g.outer_face
    peeled = bytearray(n)
    on_contour = bytearray(n)
    has_peeled_nbr = bytearray(n)
    deg = [g.degree(v) for v in range(n)]
    cv = [0] * g.face_count()
    cprev = [-1] * n
    cnext = [-1] * n

    def join_contour(v: int) -> None:
        on_contour[v] = 1
        for d in g.vertex_darts(v):
            f = g.face_of(d)
            if f != outer:
                cv[f] += 1

    heap: list[int] = []
    queued = bytearray(n)

    def push(v: int) -> None:
        if not peeled[v] and not queued[v]:
            queued[v] = 1
            heapq.heappush(heap, v)

    def peel_vertex(z: int) -> None:
        peeled[z] = 1
        on_contour[z] = 0
        cprev[z] = cnext[z] = -1
        for u in g.neighbors(z):
            if not peeled[u]:
                deg[u] -= 1
                has_peeled_nbr[u] = 1
                push(u)

    def splice(piece) -> None:
        for a, b in zip(piece, piece[1:]):
            cnext[a] = b
            cprev[b] = a

    def dart_to(u: int, tgt: int) -> int:
        for d in g.vertex_darts(u):
            if g.target(d) == tgt:
                return d
        raise InternalInvariantError(f"no dart {u}->{tgt}")

    def fan_darts(z: int) -> list[int]:
        # All unpeeled darts at z, from (z -> cprev[z]) around to
        # (z -> cnext[z]); by planarity of the peel they are one rotation arc.
        d = dart_to(z, cprev[z])
        fan = [d]
        while g.target(d) != cnext[z]:
            d = g.rot_next(d)
            if peeled[g.target(d)]:
                raise InternalInvariantError("peeled dart inside the contour fan")
            fan.append(d)
            if len(fan) > deg[z]:
                raise InternalInvariantError("contour fan does not close")
        return fan

    def face_piece(d: int, removed) -> list[int]:
        # Origins along face_of(d)'s walk starting after d, stopping at the
        # first removed vertex.
        fwalk = g.face_walk(g.face_of(d))
        k = fwalk.index(d)
        out: list[int] = []
        for step in range(1, len(fwalk)):
            e = fwalk[(k + step) % len(fwalk)]
            if g.origin(e) in removed:
                break
            out.append(g.origin(e))
        return out

    for v in walk:
        join_contour(v)

    # The top class {head} is forced; peel it, then retrace the whole
    # boundary once since this step has no eligibility guard to localize it.
    peel_vertex(v3)
    d0 = None
    for d in g.face_walk(outer):
        if g.origin(d) == v1 and g.target(d) == v2:
            d0 = d
            break
    if d0 is None:
        raise InternalInvariantError("base edge dart missing from the outer walk")
    boundary = []
    d = d0
    while True:
        boundary.append(g.origin(d))
        nd = g.rot_prev(d ^ 1)
        while peeled[g.target(nd)]:
            nd = g.rot_prev(nd)
        d = nd
        if d == d0:
            break
    if len(set(boundary)) != len(boundary):
        raise InternalInvariantError("boundary is not simple after removing the head")
    for v in boundary:
        if not on_contour[v]:
            join_contour(v)
        push(v)
    for idx, v in enumerate(boundary):
        cnext[v] = boundary[(idx + 1) % len(boundary)]
        cprev[v] = boundary[idx - 1]

    classes: list[list[int]] = [[v3]]
    remaining = n - 1
    stalled = False

    while remaining > 2:
        if not heap:
            if stalled:
                raise InternalInvariantError("peeling is stuck: no class is eligible")
            stalled = True
            for v in range(n):
                if on_contour[v]:
                    push(v)
            continue
        z = heapq.heappop(heap)
        queued[z] = 0
        if peeled[z] or not on_contour[z] or z in (v1, v2):
            continue
        if deg[z] == 2:
            # Chain: the maximal run of degree-2 contour vertices through z,
            # in contour order (geometrically right to left).
            run = [z]
            u = cprev[z]
            while u not in (v1, v2) and deg[u] == 2:
                run.insert(0, u)
                u = cprev[u]
            u = cnext[z]
            while u not in (v1, v2) and deg[u] == 2:
                run.append(u)
                u = cnext[u]
            right_att = cprev[run[0]]
            left_att = cnext[run[-1]]
            d = dart_to(run[0], right_att)
            f = g.face_of(d)
            if f == outer or cv[f] != len(run) + 2:
                continue
            piece = face_piece(d, set(run))
            if not piece or piece[0] != right_att or piece[-1] != left_att:
                raise InternalInvariantError("chain exposure does not span its gap")
            for v in run:
                peel_vertex(v)
            newly = [v for v in piece if not on_contour[v]]
            splice(piece)
            for v in newly:
                join_contour(v)
            for v in piece:
                push(v)
            classes.append(list(reversed(run)))
            remaining -= len(run)
            stalled = False
        else:
            if not has_peeled_nbr[z]:
                continue
            fan = fan_darts(z)
            total = 0
            for d in fan[:-1]:
                f = g.face_of(d)
                if f == outer:
                    total = -1
                    break
                total += cv[f]
            if total != deg[z] + 1:
                continue
            piece: list[int] = []
            for d in fan[:-1]:
                local = face_piece(d, (z,))
                if piece and local and piece[-1] == local[0]:
                    piece.extend(local[1:])
                else:
                    piece.extend(local)
            if not piece or piece[0] != cprev[z] or piece[-1] != cnext[z]:
                raise InternalInvariantError("singleton exposure does not span its gap")
            if len(piece) != len(set(piece)):
                raise InternalInvariantError("exposure revisits a vertex")
            peel_vertex(z)
            newly = [v for v in piece if not on_contour[v]]
            splice(piece)
            for v in newly:
                join_contour(v)
            for v in piece:
                push(v)
            classes.append([z])
            remaining -= 1
            stalled = False

    classes.append([v1, v2])
    classes.reverse()
    return classes


# -- partition -> wood ------------------------------------------------------------


def _expected_out_darts(p: OrderedPathPartition):
    """Per vertex, the darts its three out-arcs must use (None where a
    half-edge stands in), or None if the partition admits no compatible wood
    on this embedding.

    For head index i, the leftmost predecessor takes color i+1, the
    rightmost predecessor i-1, and the highest-level successor i.
    """
    g = p.host
    i = p.head_index
    level = p.level
    cl = next_color(i)
    cr = prev_color(i)
    out: list[list[int | None]] = [[None, None, None] for _ in range(g.n)]

    def set_arc(u: int, color: int, target: int) -> bool:
        for d in g.vertex_darts(u):
            if g.target(d) == target:
                out[u][color - 1] = d
                return True
        return False

    for u in range(g.n):
        if u == p.head:
            continue
        best = None
        best_lv = level[u]
        tie = False
        for v in g.neighbors(u):
            if level[v] > best_lv:
                best, best_lv, tie = v, level[v], False
            elif best is not None and level[v] == best_lv and v != best:
                tie = True
        if best is None or tie:
            return None
        if not set_arc(u, i, best):
            return None

    base = list(p.classes[0])
    if base[0] != p.left_base:
        if base[-1] == p.left_base and base[0] == p.right_base:
            base.reverse()
        else:
            return None
    if base[-1] != p.right_base:
        return None
    for j, u in enumerate(base):
        if j > 0 and not set_arc(u, cl, base[j - 1]):
            return None
        if j + 1 < len(base) and not set_arc(u, cr, base[j + 1]):
            return None

    for cls in p.classes[1:]:
        oriented = _orient_class(p, list(cls))
        if oriented is None:
            return None
        for u, left_t, right_t in oriented:
            if not set_arc(u, cl, left_t) or not set_arc(u, cr, right_t):
                return None
    return out


def _orient_class(p: OrderedPathPartition, cls: list[int]):
    """Resolve one non-base class to [(vertex, leftmost_target,
    rightmost_target)], flipping the stored sequence if the embedding
    demands it. None when the class fits neither way.

    A vertex's predecessors and class neighbors must occupy one contiguous
    rotation arc, running from its rightmost attachment to its leftmost.
    The head is anchored by its outer-walk neighbors instead.
    """
    g = p.host
    level = p.level

    def arc_targets(u: int, left_nbr: int | None, right_nbr: int | None):
        want = {v for v in g.neighbors(u) if 0 < level[v] < level[u]}
        if left_nbr is not None:
            want.add(left_nbr)
        if right_nbr is not None:
            want.add(right_nbr)
        if not want:
            return None
        darts = g.vertex_darts(u)
        nd = len(darts)
        members = [g.target(d) in want for d in darts]
        if all(members):
            if u != p.head:
                return None
            owalk = g.outer_walk()
            pos = owalk.index(u)
            return owalk[(pos + 1) % len(owalk)], owalk[pos - 1]
        start = None
        for j in range(nd):
            if members[j] and not members[j - 1]:
                if start is not None:
                    return None
                start = j
        if start is None:
            return None
        run = []
        j = start
        while members[j % nd]:
            run.append(g.target(darts[j % nd]))
            j += 1
        if len(run) != len(want):
            return None
        return run[-1], run[0]

    t = len(cls)
    for attempt in (cls, list(reversed(cls))):
        result = []
        good = True
        for j, u in enumerate(attempt):
            left_nbr = attempt[j - 1] if j > 0 else None
            right_nbr = attempt[j + 1] if j + 1 < t else None
            ends = arc_targets(u, left_nbr, right_nbr)
            if ends is None:
                good = False
                break
            left_t, right_t = ends
            if left_nbr is not None and left_t != left_nbr:
                good = False
                break
            if right_nbr is not None and right_t != right_nbr:
                good = False
                break
            result.append((u, left_t, right_t))
        if good:
            return result
        if t == 1:
            return None
    return None


def compatible_wood_from_order(p: OrderedPathPartition) -> SchnyderWood:
    """The Schnyder wood defined by a valid ordered path partition."""
    out = _expected_out_darts(p)
    if out is None:
        raise PreconditionError("partition admits no compatible wood on this embedding")
    g = p.host
    colors: list[int | None] = [None] * (2 * g.m)
    for u in range(g.n):
        for c in (1, 2, 3):
            d = out[u][c - 1]
            if d is not None:
                if colors[d] is not None:
                    raise PreconditionError("partition forces two colors on one arc")
                colors[d] = c
    for e in range(g.m):
        if colors[2 * e] is None and colors[2 * e + 1] is None:
            u, v = g.endpoints(e)
            raise PreconditionError(
                f"partition leaves edge ({u},{v}) undirected; no compatible wood"
            )
    return SchnyderWood(g, p.roots, colors, added_base_edge=p.added_base_edge)


def is_compatible(p: OrderedPathPartition, w: SchnyderWood) -> bool:
    """True iff every vertex's out-arcs match the partition's rule: leftmost
    predecessor in color i+1, rightmost in i-1, highest-level successor in
    i, for head index i."""
    if p.roots != w.roots:
        return False
    if p.host.n != w.host.n or p.host.m != w.host.m:
        return False
    expected = _expected_out_darts(p)
    if expected is None:
        return False
    for u in range(p.host.n):
        for c in (1, 2, 3):
            if w._out[u][c - 1] != expected[u][c - 1]:
                return False
    return True


# -- wood -> partition --------------------------------------------------------------


def ordered_path_partition(
    w: SchnyderWood, i: int, augment: bool = True
) -> OrderedPathPartition:
    """Compatible partition with head v_i, from the wood's augmented digraph.

    Nodes are maximal paths of bi-colored {i-1, i+1} edges. Tree-i arcs run
    forward, tree-(i-1) and tree-(i+1) arcs reversed, plus one arc from each
    child of a vertex in those two trees to that vertex's tree-i parent.
    Classes follow a topological order with the base node first, the head
    last, and the smallest contained vertex id breaking ties.

    augment=False drops the child-to-parent arcs and orders the plain path
    digraph instead. That variant can return a partition that is NOT
    compatible with w; it exists to demonstrate why the augmentation is
    needed, and skips the base/head position checks.
    """
    if i not in (1, 2, 3):
        raise PreconditionError("head index must be 1, 2, or 3")
    g = w.host
    n = g.n
    ca = prev_color(i)
    cb = next_color(i)
    group = [-1] * n
    groups: list[list[int]] = []
    for path in w.cyclic_paths(i):
        idx = len(groups)
        groups.append(path)
        for v in path:
            group[v] = idx
    for v in range(n):
        if group[v] < 0:
            group[v] = len(groups)
            groups.append([v])
    k = len(groups)
    succ: list[set[int]] = [set() for _ in range(k)]
    indeg = [0] * k

    def add_arc(u: int, v: int) -> None:
        gu, gv = group[u], group[v]
        if gu != gv and gv not in succ[gu]:
            succ[gu].add(gv)
            indeg[gv] += 1

    for d in range(2 * g.m):
        c = w._dart_color[d]
        if c is None:
            continue
        other = w._dart_color[d ^ 1]
        if other is not None and {c, other} == {ca, cb}:
            continue
        u, v = g.origin(d), g.target(d)
        if c == i:
            add_arc(u, v)
        else:
            add_arc(v, u)
    if augment:
        for v in range(n):
            dp = w._out[v][i - 1]
            if dp is None:
                continue
            r = g.target(dp)
            for color in (ca, cb):
                for child in w.children(v, color):
                    if child != r:
                        add_arc(child, r)

    base_group = group[w.roots[i % 3]]
    if group[w.roots[i - 2]] != base_group:
        raise PreconditionError("base pair is not joined by a bi-colored path")
    head_group = group[w.roots[i - 1]]
    if augment and indeg[base_group] != 0:
        raise InternalInvariantError("base class is not a source of the order digraph")

    order: list[int] = []
    if indeg[base_group] == 0:
        ready: list[tuple[int, int]] = [
            (min(groups[j]), j) for j in range(k) if indeg[j] == 0 and j != base_group
        ]
        heapq.heapify(ready)
        current = base_group
        while True:
            order.append(current)
            for t in succ[current]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    heapq.heappush(ready, (min(groups[t]), t))
            if not ready:
                break
            _, current = heapq.heappop(ready)
    else:
        ready = [(min(groups[j]), j) for j in range(k) if indeg[j] == 0]
        heapq.heapify(ready)
        while ready:
            _, current = heapq.heappop(ready)
            order.append(current)
            for t in succ[current]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    heapq.heappush(ready, (min(groups[t]), t))
    if len(order) != k:
        raise PreconditionError("order digraph has a cycle; wood is invalid")
    if augment and order[-1] != head_group:
        raise InternalInvariantError("head class does not close the order")

    classes = [list(groups[j]) for j in order]
    lb = w.roots[i % 3]
    base_cls = classes[order.index(base_group)]
    if base_cls[0] != lb:
        if base_cls[-1] != lb:
            raise InternalInvariantError("left base is not an end of the base class")
        base_cls.reverse()
    return OrderedPathPartition(g, w.roots, i, classes, added_base_edge=w.added_base_edge)


def levels_from_wood(w: SchnyderWood) -> LevelAssignment:
    """Vertex levels in the three compatible partitions of one wood."""
    return LevelAssignment(
        ordered_path_partition(w, 1).level,
        ordered_path_partition(w, 2).level,
        ordered_path_partition(w, 3).level,
    )


# -- computing a wood ---------------------------------------------------------------


def compute_schnyder_wood(g: PlaneGraph, roots) -> SchnyderWood:
    """A Schnyder wood of a 3-connected plane graph with the given roots.

    Peels an elementary canonical order for base (v1, v2) and head v3, then
    reads off the compatible wood. If (v1, v2) is not an edge, it is first
    added inside the outer face; the wood's host then carries that extra
    edge, recorded in added_base_edge.
    """
    roots = tuple(roots)
    if len(roots) != 3:
        raise PreconditionError("exactly three roots required")
    v1, v2, v3 = roots
    if g.outer_roots != roots:
        g = g.with_outer(roots)
    if not is_three_connected(g):
        raise PreconditionError("graph is not 3-connected")
    host = g
    added = None
    if g.edge_between(v1, v2) is None:
        host, added = g.add_edge_in_face(v1, v2, g.outer_face)
    walk = host.outer_walk()
    if walk[(walk.index(v1) + 1) % len(walk)] != v2:
        raise PreconditionError(
            "base pair is adjacent but not consecutive on the outer face; "
            "no elementary canonical order exists for these roots"
        )
    order = elementary_canonical_order(host, (v1, v2), v3)
    w = compatible_wood_from_order(order)
    if added is not None:
        w = SchnyderWood(
            host, w.roots, w._dart_color, half_edges=w.half_edges, added_base_edge=added
        )
    return w


# -- dual woods ---------------------------------------------------------------------


def dual_schnyder_wood(w: SchnyderWood) -> SchnyderWood:
    """The wood on the split dual induced by the color exchange rule.

    A uni-directional primal arc colored i makes its dual edge bi-colored:
    the dual dart with the same id (leaving the face left of the primal arc)
    takes i-1 and its twin i+1. A bi-directional primal edge whose direction
    d carries c-1, with c the absent color, makes the dual uni-directional
    along twin(d) in color c. The triangle edge crossed by root k's
    half-edge runs o_{k+1} -> o_{k-1} in color k-1 and back in k+1.
    """
    g = w.host
    info = split_dual(g, w.roots)
    sd = info.graph
    colors: list[int | None] = [None] * (2 * sd.m)
    for e in range(g.m):
        a, b = w.edge_colors(e)
        if a is not None and b is None:
            colors[2 * e] = prev_color(a)
            colors[2 * e + 1] = next_color(a)
        elif b is not None and a is None:
            colors[2 * e + 1] = prev_color(b)
            colors[2 * e] = next_color(b)
        elif a is not None and b is not None:
            c = ({1, 2, 3} - {a, b}).pop()
            if a == prev_color(c):
                colors[2 * e + 1] = c
            else:
                colors[2 * e] = c
        else:
            raise PreconditionError("wood leaves an edge undirected")
    for k in (1, 2, 3):
        e = info.tau_edges[k % 3]
        colors[2 * e] = prev_color(k)
        colors[2 * e + 1] = next_color(k)
    return SchnyderWood(sd, info.o_vertices, colors, split_info=info)


# -- elementarity ---------------------------------------------------------------------


def is_elementary(w: SchnyderWood, i: int) -> bool:
    """True iff (v_{i-1}, v_{i+1}) is an outer edge and every maximal
    bi-colored {i-1, i+1} path with two or more vertices satisfies the
    canonical property: interior vertices have no tree-i children, the left
    end's only permitted tree-i child is its tree-(i+1) parent, and the
    right end's is its tree-(i-1) parent."""
    g = w.host
    lb = w.roots[i % 3]
    rb = w.roots[i - 2]
    if g.edge_between(lb, rb) is None:
        return False
    walk = g.outer_walk()
    L = len(walk)
    pl = walk.index(lb)
    if walk[(pl + 1) % L] != rb and walk[pl - 1] != rb:
        return False
    for path in w.cyclic_paths(i):
        if len(path) < 2:
            continue
        for u in path[1:-1]:
            if w.children(u, i):
                return False
        u1, ut = path[0], path[-1]
        allowed1 = w.parent(u1, next_color(i))
        if any(ch != allowed1 for ch in w.children(u1, i)):
            return False
        allowedt = w.parent(ut, prev_color(i))
        if any(ch != allowedt for ch in w.children(ut, i)):
            return False
    return True


# -- literal partition validation -----------------------------------------------------


def validate_partition(p: OrderedPathPartition, elementary: bool | None = None) -> list[str]:
    """Violations of the partition conditions, checked literally.

    Always checked: V_1 is the outer base path and V_L the head; every class
    is a path; every prefix graph is 2-connected (trivial prefixes exempt)
    and internally 3-connected, with the base edge on its outer cycle; no
    outer-cycle vertex gains two neighbors in the next class. With
    elementary=True (the default for canonical orders built here), the
    stricter path condition is added: classes lie on the prefix outer cycle,
    every class below the top has a vertex with a neighbor above,
    multi-vertex classes attach to exactly one contour vertex below at each
    end and none in the middle, and V_1 has two vertices. Prefixes live in
    the host augmented with the base edge when absent.
    """
    if elementary is None:
        elementary = bool(getattr(p, "elementary", False))
    g = p.host
    out: list[str] = []
    host = g
    base_e = g.edge_between(p.left_base, p.right_base)
    if base_e is None:
        host, base_e = g.add_edge_in_face(p.left_base, p.right_base, g.outer_face)
    # the base path lives on the original outer cycle: the arc from the left
    # base to the right base that avoids the head
    walk = g.outer_walk()
    L0 = len(walk)
    pl = walk.index(p.left_base)
    arcs = []
    for step in (1, -1):
        arc = []
        j = pl
        while len(arc) <= L0:
            arc.append(walk[j % L0])
            if walk[j % L0] == p.right_base:
                arcs.append(arc)
                break
            j += step
    seg = next((a for a in arcs if p.head not in a), None)
    if seg is None:
        out.append("no outer arc between the base pair avoids the head")
    elif list(p.classes[0]) != seg:
        out.append(f"V_1 {list(p.classes[0])} is not the outer base path {seg}")
    if list(p.classes[-1]) != [p.head]:
        out.append("last class is not the head alone")

    n = host.n
    level = p.level
    Lc = len(p.classes)
    adj = [host.neighbors(v) for v in range(n)]
    for k, cls in enumerate(p.classes, start=1):
        for a, b in zip(cls, cls[1:]):
            if b not in adj[a]:
                out.append(f"class {k} is not a path: ({a},{b}) is not an edge")

    member = bytearray(n)
    contour_prev: list[int] | None = None
    size = 0
    for k in range(1, Lc + 1):
        cls = list(p.classes[k - 1])
        for v in cls:
            member[v] = 1
        size += len(cls)
        cyc = _prefix_outer_cycle(host, member, base_e)
        if cyc is None:
            out.append(f"prefix graph G_{k} has no simple outer cycle through the base edge")
            break
        cycset = set(cyc)
        if size > 2:
            viol = _check_two_connected(adj, member, n, size)
            if viol:
                out.append(f"G_{k}: {viol}")
                break
            # an internal pair disconnecting G_k must contain a vertex that
            # became internal this step; earlier pairs were ruled out at the
            # step their second vertex left the contour
            fresh = [v for v in (contour_prev or []) if v not in cycset]
            fresh += [v for v in cls if v not in cycset]
            for u in fresh:
                w = _internal_pair_cut(adj, member, n, size, u, cycset)
                if w is not None:
                    out.append(f"G_{k}: internal pair ({u},{w}) disconnects the prefix")
                    break
        if k >= 2 and contour_prev is not None:
            oncyc_prev = set(contour_prev)
            incls = set(cls)
            for v in contour_prev:
                cnt = sum(1 for u in adj[v] if u in incls)
                if cnt > 1:
                    out.append(f"vertex {v} on C_{k - 1} has {cnt} neighbors in V_{k}")
            if elementary:
                if k < Lc:
                    for v in cls:
                        if not any(level[u] > k for u in adj[v]):
                            out.append(f"vertex {v} in V_{k} has no neighbor above")
                pos = {v: idx for idx, v in enumerate(cyc)}
                if not all(v in pos for v in cls):
                    out.append(f"V_{k} does not lie on C_{k}")
                elif len(cls) > 1:
                    L2 = len(cyc)
                    idxs = [pos[v] for v in cls]
                    fwd = all((idxs[t + 1] - idxs[t]) % L2 == 1 for t in range(len(idxs) - 1))
                    bwd = all((idxs[t] - idxs[t + 1]) % L2 == 1 for t in range(len(idxs) - 1))
                    if not (fwd or bwd):
                        out.append(f"V_{k} is not a contiguous path on C_{k}")
                    for t, v in enumerate(cls):
                        downs = [u for u in adj[v] if 0 < level[u] < k]
                        if t in (0, len(cls) - 1):
                            if len(downs) != 1:
                                out.append(f"end {v} of V_{k} has {len(downs)} neighbors below")
                            elif downs[0] not in oncyc_prev:
                                out.append(f"end {v} of V_{k} attaches below C_{k - 1}")
                        elif downs:
                            out.append(f"interior {v} of V_{k} has neighbors below")
        contour_prev = cyc
    if elementary and len(p.classes[0]) != 2:
        out.append("base class of an elementary order must have two vertices")
    return out


def _prefix_outer_cycle(host, member, base_e):
    """Outer boundary of the prefix subgraph, traced from the base edge; None
    unless it is a simple cycle."""
    outer = host.outer_face
    d0 = 2 * base_e if host.face_of(2 * base_e) == outer else 2 * base_e + 1
    verts = []
    d = d0
    for _ in range(4 * host.m + 4):
        verts.append(host.origin(d))
        nd = host.rot_prev(d ^ 1)
        guard = 0
        while not member[host.target(nd)]:
            nd = host.rot_prev(nd)
            guard += 1
            if guard > host.degree(host.origin(nd)):
                return None
        d = nd
        if d == d0:
            return verts if len(set(verts)) == len(verts) else None
    return None


def _articulation(adj, member, n, skip, size):
    """Cut vertices of the member-induced subgraph minus skip, one DFS.

    Returns (cut_set, reached) where reached counts visited vertices, so the
    caller can also detect disconnection.
    """
    disc = {}
    low = {}
    cuts = set()
    start = next(v for v in range(n) if member[v] and v != skip)
    timer = 0
    # iterative Tarjan; stack entries are (v, parent, neighbor iterator)
    stack = [(start, -1, iter(adj[start]))]
    disc[start] = low[start] = timer
    timer += 1
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for x in it:
            if not member[x] or x == skip or x == parent:
                continue
            if x in disc:
                if disc[x] < low[v]:
                    low[v] = disc[x]
                continue
            disc[x] = low[x] = timer
            timer += 1
            if v == start:
                root_children += 1
            stack.append((x, v, iter(adj[x])))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != start and low[v] >= disc[p]:
                    cuts.add(p)
    if root_children > 1:
        cuts.add(start)
    return cuts, len(disc)


def _check_two_connected(adj, member, n, size):
    cuts, reached = _articulation(adj, member, n, None, size)
    if reached != size:
        return "prefix is disconnected"
    if cuts:
        return f"vertex {min(cuts)} is a cut vertex of the prefix"
    return None


def _internal_pair_cut(adj, member, n, size, removed, contour):
    """An internal vertex whose removal together with `removed` disconnects
    the member subgraph, or None. Assumes the subgraph itself is 2-connected,
    so dropping one vertex keeps it connected."""
    cuts, _ = _articulation(adj, member, n, removed, size - 1)
    for w in cuts:
        if w not in contour:
            return w
    return None


# -- text formats ---------------------------------------------------------------------


def serialize_wood(w: SchnyderWood) -> str:
    """One 'edge u v: ...' line per host edge plus three half-edge lines."""
    g = w.host
    lines = []
    for e in range(g.m):
        u, v = g.endpoints(e)
        a, b = w.edge_colors(e)
        parts = []
        if a is not None:
            parts.append(f"uv {a}")
        if b is not None:
            parts.append(f"vu {b}")
        lines.append(f"edge {u} {v}: " + " ".join(parts))
    for k in range(3):
        lines.append(f"halfedge {w.roots[k]} {k + 1}")
    return "\n".join(lines) + "\n"


def parse_wood(text: str, g: PlaneGraph) -> SchnyderWood:
    """Parse the wood text format against a host graph.

    Roots come from the half-edge lines in color order. An edge line naming
    a missing edge is accepted only for the base pair (roots 1 and 2), which
    is then added inside the outer face.
    """
    edge_lines: list[tuple[int, int, int, list[tuple[str, int]]]] = []
    halfedges: dict[int, int] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "edge":
            if len(tokens) < 5 or not tokens[2].endswith(":"):
                raise FormatError("expected 'edge u v: dir color ...'", line=ln)
            try:
                u = int(tokens[1])
                v = int(tokens[2][:-1])
            except ValueError:
                raise FormatError("bad vertex id on edge line", line=ln) from None
            rest = tokens[3:]
            if len(rest) % 2 or not 2 <= len(rest) <= 4:
                raise FormatError("edge line needs one or two 'dir color' pairs", line=ln)
            pairs = []
            for t in range(0, len(rest), 2):
                dirn = rest[t]
                if dirn not in ("uv", "vu"):
                    raise FormatError(f"bad direction {dirn!r}", line=ln)
                try:
                    c = int(rest[t + 1])
                except ValueError:
                    raise FormatError("bad color", line=ln) from None
                if c not in (1, 2, 3):
                    raise FormatError(f"color {c} out of range", line=ln)
                pairs.append((dirn, c))
            edge_lines.append((ln, u, v, pairs))
        elif tokens[0] == "halfedge":
            if len(tokens) != 3:
                raise FormatError("expected 'halfedge v color'", line=ln)
            try:
                v = int(tokens[1])
                c = int(tokens[2])
            except ValueError:
                raise FormatError("bad half-edge line", line=ln) from None
            if c not in (1, 2, 3):
                raise FormatError(f"color {c} out of range", line=ln)
            if c in halfedges.values():
                raise FormatError(f"duplicate half-edge color {c}", line=ln)
            halfedges[v] = c
        else:
            raise FormatError(f"unknown directive {tokens[0]!r}", line=ln)
    if len(halfedges) != 3:
        raise FormatError("wood needs exactly three half-edge lines")
    by_color = {c: v for v, c in halfedges.items()}
    roots = (by_color[1], by_color[2], by_color[3])
    added = None
    host = g
    for ln, u, v, _ in edge_lines:
        if host.edge_between(u, v) is None:
            if {u, v} == {roots[0], roots[1]} and added is None:
                host, added = host.add_edge_in_face(roots[0], roots[1], host.outer_face)
            else:
                raise FormatError(f"edge ({u},{v}) does not exist in the host", line=ln)
    colors: list[int | None] = [None] * (2 * host.m)
    seen_edges = set()
    for ln, u, v, pairs in edge_lines:
        e = host.edge_between(u, v)
        if e in seen_edges:
            raise FormatError(f"duplicate line for edge ({u},{v})", line=ln)
        seen_edges.add(e)
        eu, _ = host.endpoints(e)
        for dirn, c in pairs:
            forward = (dirn == "uv") == (eu == u)
            d = 2 * e if forward else 2 * e + 1
            if colors[d] is not None:
                raise FormatError(f"direction repeated on edge ({u},{v})", line=ln)
            colors[d] = c
    if len(seen_edges) != host.m:
        raise FormatError("wood text does not cover every edge")
    return SchnyderWood(host, roots, colors, half_edges=halfedges, added_base_edge=added)


def serialize_partition(p: OrderedPathPartition) -> str:
    lines = [
        f"class {k}:" + "".join(f" {v}" for v in cls)
        for k, cls in enumerate(p.classes, start=1)
    ]
    return "\n".join(lines) + "\n"


def parse_partition(text: str, g: PlaneGraph, roots=None, head_index: int = 3):
    """Parse 'class k: ...' lines against a host graph.

    Without explicit roots, the head is the last class's vertex and the base
    ends come from the first class, filling the root slots for the given
    head index.
    """
    classes: list[list[int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] != "class" or len(tokens) < 3 or not tokens[1].endswith(":"):
            raise FormatError("expected 'class k: v ...'", line=ln)
        try:
            k = int(tokens[1][:-1])
            verts = [int(t) for t in tokens[2:]]
        except ValueError:
            raise FormatError("bad class line", line=ln) from None
        if k != len(classes) + 1:
            raise FormatError(f"class index {k} out of order", line=ln)
        classes.append(verts)
    if len(classes) < 2:
        raise FormatError("partition needs at least two classes")
    if roots is None:
        if len(classes[-1]) != 1:
            raise FormatError("last class must be a single head vertex")
        head = classes[-1][0]
        triple = [None, None, None]
        triple[head_index - 1] = head
        triple[head_index % 3] = classes[0][0]
        triple[head_index - 2] = classes[0][-1]
        roots = tuple(triple)
    return OrderedPathPartition(g, roots, head_index, classes)
