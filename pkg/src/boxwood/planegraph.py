"""Plane multigraphs as rotation systems: faces, duals, outer-face splitting.

A graph is stored dart-wise. Edge ``k`` owns the two darts ``2k`` and
``2k + 1`` (mutual twins); a dart's origin is the vertex whose rotation lists
it. Faces are traced with ``next(d) = rotation_predecessor(twin(d))``, which
walks every inner face counterclockwise and the outer face clockwise along
the boundary. All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FormatError, InternalInvariantError, PreconditionError

__all__ = [
    "PlaneGraph",
    "SplitDualInfo",
    "dual",
    "faces",
    "is_three_connected",
    "parse_plane_graph",
    "serialize_plane_graph",
    "split_dual",
    "split_outer_face",
    "twin",
]


def twin(d: int) -> int:
    """The dart on the other end of d's edge."""
    return d ^ 1


class PlaneGraph:
    """A connected plane (multi)graph with a fixed rotation system."""

    __slots__ = (
        "n",
        "m",
        "multi_allowed",
        "outer_roots",
        "_vdarts",
        "_origin",
        "_pos",
        "_faces",
        "_face_of",
        "_outer",
        "_primal",
    )

    def __init__(self, *args, **kwargs):
        raise TypeError("use PlaneGraph.from_rotations or an operation that builds graphs")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rotations(
        cls,
        rotations: list[list[int]],
        outer_roots: tuple[int, ...] | None = None,
        multi_allowed: bool = False,
    ) -> "PlaneGraph":
        """Build a graph from counterclockwise neighbor lists.

        Parallel edges repeat the neighbor and are matched by position: the
        i-th occurrence of v in u's list pairs with the i-th occurrence of u
        in v's list. Self-loops are rejected (the pairing cannot express
        them).
        """
        n = len(rotations)
        if n == 0:
            raise PreconditionError("graph must have at least one vertex")
        occurrences: dict[tuple[int, int], list[int]] = {}
        for u, rot in enumerate(rotations):
            for p, v in enumerate(rot):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise PreconditionError(f"rotation of {u} references invalid vertex {v!r}")
                if v == u:
                    raise PreconditionError(f"self-loop at vertex {u} is not supported")
                occurrences.setdefault((u, v), []).append(p)
        vdarts: list[list[int | None]] = [[None] * len(rot) for rot in rotations]
        origin: list[int] = []
        has_parallel = False
        for u, rot in enumerate(rotations):
            for p, v in enumerate(rot):
                if vdarts[u][p] is not None:
                    continue
                here = occurrences.get((u, v), [])
                there = occurrences.get((v, u), [])
                if len(here) != len(there):
                    raise PreconditionError(
                        f"edge ({u},{v}) listed {len(here)} time(s) at {u} "
                        f"but {len(there)} time(s) at {v}"
                    )
                if len(here) > 1:
                    has_parallel = True
                    if not multi_allowed:
                        raise PreconditionError(f"duplicate edge ({u},{v}) without multi flag")
                for pu, pv in zip(here, there):
                    e = len(origin) // 2
                    origin.append(u)
                    origin.append(v)
                    vdarts[u][pu] = 2 * e
                    vdarts[v][pv] = 2 * e + 1
        return cls._build(
            [list(map(int, row)) for row in vdarts],  # type: ignore[arg-type]
            origin,
            outer_roots=outer_roots,
            multi_allowed=multi_allowed or has_parallel,
        )

    @classmethod
    def _build(
        cls,
        vdarts: list[list[int]],
        origin: list[int],
        outer_roots: tuple[int, ...] | None = None,
        outer_face: int | None = None,
        multi_allowed: bool = False,
        primal: "PlaneGraph | None" = None,
    ) -> "PlaneGraph":
        self = object.__new__(cls)
        n = len(vdarts)
        ndarts = len(origin)
        if ndarts % 2:
            raise InternalInvariantError("odd dart count")
        m = ndarts // 2
        pos = [0] * ndarts
        seen = 0
        for v, row in enumerate(vdarts):
            for i, d in enumerate(row):
                if not 0 <= d < ndarts or origin[d] != v:
                    raise InternalInvariantError(f"dart {d} misplaced at vertex {v}")
                pos[d] = i
                seen += 1
        if seen != ndarts:
            raise InternalInvariantError("rotation lists do not partition the darts")
        self.n = n
        self.m = m
        self.multi_allowed = multi_allowed
        self._vdarts = vdarts
        self._origin = origin
        self._pos = pos
        self._primal = primal
        self._check_connected()
        self._faces, self._face_of = self._trace_faces()
        if n == 1 and m == 0:
            self._faces = [[]]
        if n - m + len(self._faces) != 2:
            raise PreconditionError(
                f"rotation system is not a sphere embedding: V={n} E={m} F={len(self._faces)}"
            )
        self.outer_roots = tuple(outer_roots) if outer_roots is not None else None
        if outer_face is not None:
            self._outer = outer_face
        elif self.outer_roots is not None:
            self._outer = self._resolve_outer(self.outer_roots)
        else:
            self._outer = None
        return self

    def _check_connected(self) -> None:
        if self.n <= 1:
            return
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        origin = self._origin
        count = 1
        while stack:
            v = stack.pop()
            for d in self._vdarts[v]:
                w = origin[d ^ 1]
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    stack.append(w)
        if count != self.n:
            raise PreconditionError("graph is not connected")

    def _trace_faces(self) -> tuple[list[list[int]], list[int]]:
        ndarts = 2 * self.m
        origin = self._origin
        pos = self._pos
        vdarts = self._vdarts
        face_of = [-1] * ndarts
        walks: list[list[int]] = []
        for d0 in range(ndarts):
            if face_of[d0] >= 0:
                continue
            idx = len(walks)
            walk = []
            d = d0
            while face_of[d] < 0:
                face_of[d] = idx
                walk.append(d)
                t = d ^ 1
                row = vdarts[origin[t]]
                d = row[pos[t] - 1]
            if d != d0:
                raise InternalInvariantError("face walk did not close at its start")
            walks.append(walk)
        return walks, face_of

    def _resolve_outer(self, roots: tuple[int, ...]) -> int:
        for r in roots:
            if not 0 <= r < self.n:
                raise PreconditionError(f"root {r} out of range")
        if len(set(roots)) != len(roots):
            raise PreconditionError("roots must be distinct")
        matches = []
        wrong_order = False
        for idx in range(len(self._faces)):
            verts = self.face_vertices(idx)
            if all(r in verts for r in roots):
                if _cyclic_positions_ordered(verts, roots):
                    matches.append(idx)
                else:
                    wrong_order = True
        if len(matches) == 1:
            return matches[0]
        if not matches and wrong_order:
            raise PreconditionError(
                "outer roots lie on a common face but in clockwise order; "
                "list them counterclockwise"
            )
        if not matches:
            raise PreconditionError("outer roots do not lie on a common face in the given order")
        raise PreconditionError("outer roots match more than one face")

    # -- dart-level accessors ----------------------------------------------

    def origin(self, d: int) -> int:
        return self._origin[d]

    def target(self, d: int) -> int:
        return self._origin[d ^ 1]

    def rot_next(self, d: int) -> int:
        row = self._vdarts[self._origin[d]]
        i = self._pos[d] + 1
        return row[0] if i == len(row) else row[i]

    def rot_prev(self, d: int) -> int:
        row = self._vdarts[self._origin[d]]
        return row[self._pos[d] - 1]

    def face_next(self, d: int) -> int:
        return self.rot_prev(d ^ 1)

    def vertex_darts(self, v: int) -> list[int]:
        return list(self._vdarts[v])

    def neighbors(self, v: int) -> list[int]:
        origin = self._origin
        return [origin[d ^ 1] for d in self._vdarts[v]]

    def degree(self, v: int) -> int:
        return len(self._vdarts[v])

    # -- edges ---------------------------------------------------------------

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._origin[2 * e], self._origin[2 * e + 1]

    def edges(self) -> list[tuple[int, int]]:
        return [self.endpoints(e) for e in range(self.m)]

    def edge_between(self, u: int, v: int) -> int | None:
        """Some edge id joining u and v, or None. Ignores multiplicity."""
        if self.degree(u) > self.degree(v):
            u, v = v, u
        for d in self._vdarts[u]:
            if self._origin[d ^ 1] == v:
                return d // 2
        return None

    def has_parallel_edges(self) -> bool:
        seen = set()
        for e in range(self.m):
            u, v = self.endpoints(e)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return True
            seen.add(key)
        return False

    # -- faces ---------------------------------------------------------------

    def face_count(self) -> int:
        return len(self._faces)

    def face_walk(self, idx: int) -> list[int]:
        """Darts of face idx in trace order."""
        return list(self._faces[idx])

    def face_walks(self) -> list[list[int]]:
        return [list(w) for w in self._faces]

    def face_vertices(self, idx: int) -> list[int]:
        origin = self._origin
        return [origin[d] for d in self._faces[idx]]

    def faces(self) -> list[list[int]]:
        """Vertex walks of all faces, in trace order."""
        return [self.face_vertices(i) for i in range(len(self._faces))]

    def face_of(self, d: int) -> int:
        return self._face_of[d]

    @property
    def outer_face(self) -> int:
        if self._outer is None:
            raise PreconditionError("graph has no designated outer face")
        return self._outer

    def has_outer(self) -> bool:
        return self._outer is not None

    def outer_walk(self) -> list[int]:
        """Outer boundary vertices in trace order, starting at the first root."""
        verts = self.face_vertices(self.outer_face)
        if self.outer_roots:
            i = verts.index(self.outer_roots[0])
            verts = verts[i:] + verts[:i]
        return verts

    def with_outer(self, roots: tuple[int, ...]) -> "PlaneGraph":
        """The same embedding with a different outer designation."""
        return PlaneGraph._build(
            [list(r) for r in self._vdarts],
            list(self._origin),
            outer_roots=roots,
            multi_allowed=self.multi_allowed,
            primal=self._primal,
        )

    # -- surgery -------------------------------------------------------------

    def add_edge_in_face(self, u: int, v: int, face: int | None = None) -> tuple["PlaneGraph", int]:
        """Add edge (u, v) drawn inside the given face (default: outer).

        Returns the new graph and the new edge id (= old edge count). The
        outer face is re-resolved from the stored roots.
        """
        idx = self.outer_face if face is None else face
        walk = self._faces[idx]
        du = dv = None
        for d in walk:
            if self._origin[d] == u and du is None:
                du = d
            if self._origin[d] == v and dv is None:
                dv = d
        if du is None or dv is None:
            raise PreconditionError(f"face {idx} does not contain both {u} and {v}")
        if u == v:
            raise PreconditionError("cannot add a self-loop")
        new_u = 2 * self.m
        new_v = new_u + 1
        vdarts = [list(r) for r in self._vdarts]
        vdarts[u].insert(self._pos[du] + 1, new_u)
        vdarts[v].insert(self._pos[dv] + 1, new_v)
        origin = list(self._origin) + [u, v]
        multi = self.multi_allowed or self.edge_between(u, v) is not None
        g2 = PlaneGraph._build(
            vdarts, origin, outer_roots=self.outer_roots, multi_allowed=multi
        )
        return g2, self.m


def faces(g: PlaneGraph) -> list[list[int]]:
    """Vertex walks of all faces of g (inner counterclockwise, outer clockwise)."""
    return g.faces()


def dual(g: PlaneGraph) -> PlaneGraph:
    """The dual embedding: one vertex per face, one crossing edge per edge.

    Edge ids are shared with the primal: dual edge k crosses primal edge k,
    and dual dart d originates at the face on the left of primal dart d. The
    result keeps a reference to g so split_outer_face can recover the primal.
    """
    vdarts = [list(w) for w in g.face_walks()]
    origin = [g.face_of(d) for d in range(2 * g.m)]
    return PlaneGraph._build(
        vdarts,
        origin,
        multi_allowed=True,
        primal=g,
    )


@dataclass(frozen=True)
class SplitDualInfo:
    """Bookkeeping for a split dual.

    dual_vertex_of_face maps primal face index -> split-dual vertex (None for
    the primal outer face). Dual edge k still crosses primal edge k, with
    dual dart d originating at the region left of primal dart d; outer-side
    darts originate at the split vertex of their boundary region. tau_edges
    are the three added triangle edge ids in the order (o1,o2), (o2,o3),
    (o3,o1).
    """

    primal: PlaneGraph
    graph: PlaneGraph
    o_vertices: tuple[int, int, int]
    dual_vertex_of_face: tuple[int | None, ...]
    face_of_dual_vertex: tuple[int | None, ...]
    region_of_outer_dart: dict[int, int]
    tau_edges: tuple[int, int, int]


def split_dual(g: PlaneGraph, roots: tuple[int, int, int] | None = None) -> SplitDualInfo:
    """Dual of g with the outer-face vertex split into a root triangle.

    The outer region is divided at the three roots: region o_i runs along
    the boundary from root v_{i+1} to root v_{i+2} (indices cyclic). Each
    o_i takes the dual edge-ends of its boundary arc, and the three o_i are
    joined into a triangle, which becomes the outer face of the result with
    roots (o1, o2, o3).
    """
    if roots is None:
        if g.outer_roots is None or len(g.outer_roots) != 3:
            raise PreconditionError("split_dual needs three outer roots")
        roots = g.outer_roots  # type: ignore[assignment]
    if len(roots) != 3:
        raise PreconditionError("split_dual needs exactly three roots")
    if g.outer_roots is not None and tuple(roots) != tuple(g.outer_roots):
        g = g.with_outer(tuple(roots))
    elif g.outer_roots is None:
        g = g.with_outer(tuple(roots))
    fo = g.outer_face
    nf = g.face_count()
    m = g.m

    dual_vertex_of_face: list[int | None] = [None] * nf
    k = 0
    for f in range(nf):
        if f != fo:
            dual_vertex_of_face[f] = k
            k += 1
    n_inner = k
    o_ids = (n_inner, n_inner + 1, n_inner + 2)

    # Cut the outer walk at the roots. Walk order visits (v1, v2, v3), so the
    # arc starting at v1 belongs to o3 (the region between v1 and v2), the arc
    # at v2 to o1, and the arc at v3 to o2.
    walk = g.face_walk(fo)
    L = len(walk)
    p = {}
    for i, d in enumerate(walk):
        v = g.origin(d)
        if v in roots and v not in p:
            p[v] = i
    if len(p) != 3:
        raise PreconditionError("outer roots do not all lie on the outer face")
    p1, p2, p3 = p[roots[0]], p[roots[1]], p[roots[2]]
    if not (0 < (p2 - p1) % L < (p3 - p1) % L):
        raise PreconditionError("outer roots are not in counterclockwise order on the outer face")
    region_of_dart: dict[int, int] = {}
    arc_darts: dict[int, list[int]] = {o_ids[0]: [], o_ids[1]: [], o_ids[2]: []}
    bounds = [(p1, p2, o_ids[2]), (p2, p3, o_ids[0]), (p3, p1, o_ids[1])]
    for start, stop, o in bounds:
        i = start
        while i != stop:
            d = walk[i]
            region_of_dart[d] = o
            arc_darts[o].append(d)
            i = (i + 1) % L

    origin: list[int] = [0] * (2 * m + 6)
    for d in range(2 * m):
        f = g.face_of(d)
        if f == fo:
            origin[d] = region_of_dart[d]
        else:
            origin[d] = dual_vertex_of_face[f]  # type: ignore[assignment]
    t12, t23, t31 = m, m + 1, m + 2
    origin[2 * t12], origin[2 * t12 + 1] = o_ids[0], o_ids[1]
    origin[2 * t23], origin[2 * t23 + 1] = o_ids[1], o_ids[2]
    origin[2 * t31], origin[2 * t31 + 1] = o_ids[2], o_ids[0]

    vdarts: list[list[int]] = [[] for _ in range(n_inner + 3)]
    for f in range(nf):
        dv = dual_vertex_of_face[f]
        if dv is not None:
            vdarts[dv] = list(g.face_walk(f))
    # Each region lists its arc (in walk order) and then the two triangle
    # darts: first toward the next region counterclockwise, then the other.
    vdarts[o_ids[0]] = arc_darts[o_ids[0]] + [2 * t12, 2 * t31 + 1]
    vdarts[o_ids[1]] = arc_darts[o_ids[1]] + [2 * t23, 2 * t12 + 1]
    vdarts[o_ids[2]] = arc_darts[o_ids[2]] + [2 * t31, 2 * t23 + 1]

    sd = PlaneGraph._build(
        vdarts,
        origin,
        outer_roots=o_ids,
        multi_allowed=True,
        primal=g,
    )
    if sd.outer_face != sd.face_of(2 * t12):
        raise InternalInvariantError("split dual outer face is not the root triangle")
    face_of_dual_vertex: list[int | None] = [None] * (n_inner + 3)
    for f, dv in enumerate(dual_vertex_of_face):
        if dv is not None:
            face_of_dual_vertex[dv] = f
    return SplitDualInfo(
        primal=g,
        graph=sd,
        o_vertices=o_ids,
        dual_vertex_of_face=tuple(dual_vertex_of_face),
        face_of_dual_vertex=tuple(face_of_dual_vertex),
        region_of_outer_dart=region_of_dart,
        tau_edges=(t12, t23, t31),
    )


def split_outer_face(gdual: PlaneGraph, primal_outer: tuple[int, int, int]) -> PlaneGraph:
    """Split the outer-face vertex of a dual into the root triangle.

    gdual must come from dual(); the primal embedding is recovered from it.
    Vertex ids: inner-face vertices keep their dual order (ids above the
    outer face's shift down by one), then o1, o2, o3.
    """
    primal = gdual._primal
    if primal is None:
        raise PreconditionError("split_outer_face needs a graph produced by dual()")
    return split_dual(primal, tuple(primal_outer)).graph


# -- connectivity ------------------------------------------------------------


def is_three_connected(g: PlaneGraph) -> bool:
    """True iff g is simple with no vertex cut of size at most 2."""
    if g.has_parallel_edges():
        raise PreconditionError("is_three_connected requires a simple graph")
    n = g.n
    if n < 4:
        return False
    adj = [g.neighbors(v) for v in range(n)]
    if any(len(a) < 3 for a in adj):
        return False
    if _cut_or_disconnected(adj, n, None):
        return False
    # A simple sphere embedding with all faces triangular is maximal planar,
    # hence 3-connected; skips the quadratic pair search on triangulations.
    if all(len(w) == 3 for w in g.face_walks()):
        return True
    for v in range(n):
        if _cut_or_disconnected(adj, n, v):
            return False
    return True


def _cut_or_disconnected(adj: list[list[int]], n: int, skip: int | None) -> bool:
    """True if removing skip (or nothing) leaves a disconnected graph or one
    with an articulation vertex."""
    total = n if skip is None else n - 1
    if total <= 1:
        return False
    root = 0
    while root == skip:
        root += 1
    num = [0] * n
    low = [0] * n
    parent = [-1] * n
    it = [0] * n
    counter = 1
    num[root] = 1
    low[root] = 1
    stack = [root]
    visited = 1
    root_children = 0
    found = False
    while stack:
        v = stack[-1]
        if it[v] < len(adj[v]):
            w = adj[v][it[v]]
            it[v] += 1
            if w == skip:
                continue
            if num[w] == 0:
                counter += 1
                visited += 1
                num[w] = counter
                low[w] = counter
                parent[w] = v
                if v == root:
                    root_children += 1
                stack.append(w)
            elif w != parent[v]:
                if num[w] < low[v]:
                    low[v] = num[w]
        else:
            stack.pop()
            if stack:
                u = stack[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
                if u != root and low[v] >= num[u]:
                    found = True
                    break
    if visited != total:
        return True
    if found:
        return True
    return root_children > 1


# -- text format ---------------------------------------------------------------


def parse_plane_graph(text: str) -> PlaneGraph:
    """Parse the .pg text format.

    Lines: '#' comments, 'n <count>', optional 'multi', one
    'rot <v>: <u1> ... <uk>' per vertex (counterclockwise neighbors,
    parallel edges repeated and matched by position), and 'outer <a> <b> <c>'
    or 'outerface <a> <b> <c> <d>'. Vertices are 0-based.
    """
    n: int | None = None
    multi = False
    rotations: list[list[int]] | None = None
    seen_rot: dict[int, int] = {}
    outer: tuple[int, ...] | None = None

    def err(msg: str, ln: int, raw: str, token: str | None = None) -> FormatError:
        col = raw.find(token) + 1 if token is not None and token in raw else 1
        return FormatError(msg, line=ln, column=col)

    def parse_int(tok: str, ln: int, raw: str) -> int:
        try:
            return int(tok)
        except ValueError:
            raise err(f"expected an integer, got {tok!r}", ln, raw, tok) from None

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "n":
            if n is not None:
                raise err("duplicate n line", ln, raw)
            if len(tokens) != 2:
                raise err("n takes exactly one count", ln, raw)
            n = parse_int(tokens[1], ln, raw)
            if n <= 0:
                raise err("vertex count must be positive", ln, raw, tokens[1])
            rotations = [[] for _ in range(n)]
        elif head == "multi":
            if len(tokens) != 1:
                raise err("multi takes no arguments", ln, raw)
            multi = True
        elif head == "rot":
            if n is None or rotations is None:
                raise err("rot before n", ln, raw)
            if len(tokens) < 2 or not tokens[1].endswith(":"):
                raise err("expected 'rot <v>: ...'", ln, raw)
            v = parse_int(tokens[1][:-1], ln, raw)
            if not 0 <= v < n:
                raise err(f"vertex {v} out of range", ln, raw, tokens[1])
            if v in seen_rot:
                raise err(f"duplicate rotation for vertex {v} (first at line {seen_rot[v]})", ln, raw)
            seen_rot[v] = ln
            nbrs = [parse_int(t, ln, raw) for t in tokens[2:]]
            for t, w in zip(tokens[2:], nbrs):
                if not 0 <= w < n:
                    raise err(f"neighbor {w} out of range", ln, raw, t)
                if w == v:
                    raise err("self-loops are not supported", ln, raw, t)
            rotations[v] = nbrs
        elif head in ("outer", "outerface"):
            if n is None:
                raise err(f"{head} before n", ln, raw)
            want = 3 if head == "outer" else 4
            if len(tokens) != 1 + want:
                raise err(f"{head} takes exactly {want} vertices", ln, raw)
            if outer is not None:
                raise err("duplicate outer directive", ln, raw)
            outer = tuple(parse_int(t, ln, raw) for t in tokens[1:])
        else:
            raise err(f"unknown directive {head!r}", ln, raw, head)
    if n is None or rotations is None:
        raise FormatError("missing n line")
    if n > 1:
        for v in range(n):
            if v not in seen_rot:
                raise FormatError(f"no rotation line for vertex {v}")
    # Symmetry first, so inconsistencies report as such rather than as
    # pairing failures inside from_rotations.
    counts: dict[tuple[int, int], int] = {}
    for u, rot in enumerate(rotations):
        for v in rot:
            counts[(u, v)] = counts.get((u, v), 0) + 1
    for (u, v), c in counts.items():
        c2 = counts.get((v, u), 0)
        if c != c2:
            raise FormatError(
                f"rotation inconsistency: edge ({u},{v}) appears {c} time(s) at {u} "
                f"and {c2} time(s) at {v}",
                line=seen_rot.get(u),
            )
        if c > 1 and not multi:
            raise FormatError(
                f"duplicate edge ({u},{v}) without the multi flag", line=seen_rot.get(u)
            )
    try:
        return PlaneGraph.from_rotations(rotations, outer_roots=outer, multi_allowed=multi)
    except PreconditionError as e:
        raise FormatError(str(e)) from e


def serialize_plane_graph(g: PlaneGraph) -> str:
    """Canonical .pg text for g; raises if the format cannot reproduce g.

    Each rotation is rotated to its lexicographically smallest phase. The
    output is re-parsed and compared, because positional parallel-edge
    matching cannot express every multigraph embedding.
    """
    lines = [f"n {g.n}"]
    if g.has_parallel_edges():
        lines.append("multi")
    for v in range(g.n):
        nbrs = _min_rotation(g.neighbors(v))
        lines.append(f"rot {v}:" + "".join(f" {w}" for w in nbrs))
    if g.outer_roots is not None:
        head = "outer" if len(g.outer_roots) == 3 else "outerface"
        lines.append(head + "".join(f" {r}" for r in g.outer_roots))
    text = "\n".join(lines) + "\n"
    back = parse_plane_graph(text)
    if not _same_embedding(g, back):
        raise FormatError("embedding is not representable in the positional text format")
    return text


def _min_rotation(seq: list[int]) -> list[int]:
    if not seq:
        return []
    best = seq
    for k in range(1, len(seq)):
        cand = seq[k:] + seq[:k]
        if cand < best:
            best = cand
    return best


def _canonical_faces(g: PlaneGraph) -> list[tuple[int, ...]]:
    return sorted(tuple(_min_rotation(g.face_vertices(i))) for i in range(g.face_count()))


def _same_embedding(a: PlaneGraph, b: PlaneGraph) -> bool:
    if a.n != b.n or a.m != b.m or a.outer_roots != b.outer_roots:
        return False
    for v in range(a.n):
        if _min_rotation(a.neighbors(v)) != _min_rotation(b.neighbors(v)):
            return False
    if _canonical_faces(a) != _canonical_faces(b):
        return False
    if a.outer_roots is not None:
        if tuple(_min_rotation(a.face_vertices(a.outer_face))) != tuple(
            _min_rotation(b.face_vertices(b.outer_face))
        ):
            return False
    return True


def _cyclic_positions_ordered(walk: list[int], roots: tuple[int, ...]) -> bool:
    """True if the roots' first occurrences appear in walk in cyclic order."""
    L = len(walk)
    try:
        ps = [walk.index(r) for r in roots]
    except ValueError:
        return False
    rel = [(q - ps[0]) % L for q in ps]
    return all(rel[i] < rel[i + 1] for i in range(1, len(rel) - 1)) and all(r > 0 for r in rel[1:])
