"""Instance generators: a fixed catalog plus seeded random families.

Everything here returns a PlaneGraph built from explicit rotation lists, so
repeated calls with the same arguments give byte-identical embeddings. The
random families accept a seed and use an isolated random.Random.
"""

from __future__ import annotations

import random

from .errors import PreconditionError
from .planegraph import PlaneGraph, dual, is_three_connected

# ---------------------------------------------------------------------------
# fixed catalog


def tetrahedron() -> PlaneGraph:
    """K4 with outer triangle 0,1,2 and center vertex 3."""
    return PlaneGraph.from_rotations(
        [[2, 3, 1], [0, 3, 2], [1, 3, 0], [1, 0, 2]], outer_roots=(0, 1, 2)
    )


def prism(k: int) -> PlaneGraph:
    """k-gonal prism: outer cycle 0..k-1, inner cycle k..2k-1, rungs (i, k+i)."""
    if k < 3:
        raise PreconditionError("prism needs k >= 3")
    rots = []
    for i in range(k):
        rots.append([(i - 1) % k, k + i, (i + 1) % k])
    for i in range(k):
        rots.append([i, k + (i - 1) % k, k + (i + 1) % k])
    return PlaneGraph.from_rotations(rots, outer_roots=(0, 1, 2))


def cube() -> PlaneGraph:
    return prism(4)


def wheel(k: int) -> PlaneGraph:
    """Wheel: outer rim cycle 0..k-1 around hub k."""
    if k < 3:
        raise PreconditionError("wheel needs k >= 3")
    rots = [[(i - 1) % k, k, (i + 1) % k] for i in range(k)]
    rots.append(list(range(k - 1, -1, -1)))
    return PlaneGraph.from_rotations(rots, outer_roots=(0, 1, 2))


def octahedron() -> PlaneGraph:
    return PlaneGraph.from_rotations(
        [
            [2, 3, 4, 1],
            [0, 4, 5, 2],
            [1, 5, 3, 0],
            [4, 0, 2, 5],
            [1, 0, 3, 5],
            [1, 4, 3, 2],
        ],
        outer_roots=(0, 1, 2),
    )


def icosahedron() -> PlaneGraph:
    # Rotations read off vertex coordinates (0, +-1, +-phi) and cyclic shifts.
    return PlaneGraph.from_rotations(
        [
            [2, 1, 7, 5, 6],
            [2, 8, 3, 7, 0],
            [4, 8, 1, 0, 6],
            [1, 8, 9, 11, 7],
            [8, 2, 6, 10, 9],
            [6, 0, 7, 11, 10],
            [4, 2, 0, 5, 10],
            [0, 1, 3, 11, 5],
            [1, 2, 4, 9, 3],
            [8, 4, 10, 11, 3],
            [9, 4, 6, 5, 11],
            [3, 9, 10, 5, 7],
        ],
        outer_roots=(0, 2, 1),
    )


def dodecahedron() -> PlaneGraph:
    # Dual of the icosahedron embedding above; vertex j is that embedding's
    # face j, relabeled through its face order.
    return PlaneGraph.from_rotations(
        [
            [1, 17, 2],
            [0, 4, 8],
            [0, 18, 3],
            [2, 5, 4],
            [3, 7, 1],
            [3, 10, 6],
            [5, 12, 7],
            [6, 9, 4],
            [1, 9, 15],
            [7, 14, 8],
            [5, 18, 11],
            [10, 19, 12],
            [11, 14, 6],
            [14, 19, 15],
            [13, 9, 12],
            [13, 17, 8],
            [17, 19, 18],
            [16, 0, 15],
            [16, 10, 2],
            [11, 16, 13],
        ],
        outer_roots=(0, 1, 8),
    )


def catalog() -> dict[str, PlaneGraph]:
    """The named fixed instances used throughout the test corpus."""
    out = {
        "tetrahedron": tetrahedron(),
        "cube": cube(),
        "octahedron": octahedron(),
        "dodecahedron": dodecahedron(),
        "icosahedron": icosahedron(),
    }
    for k in (3, 5, 6, 8):
        out[f"prism{k}"] = prism(k)
    for k in (5, 7, 12):
        out[f"wheel{k}"] = wheel(k)
    return out


def cycle_graph(k: int) -> PlaneGraph:
    """Plain k-cycle (2-connected only; a negative-gate input)."""
    if k < 3:
        raise PreconditionError("cycle needs k >= 3")
    rots = [[(i - 1) % k, (i + 1) % k] for i in range(k)]
    return PlaneGraph.from_rotations(rots, outer_roots=(0, 1, 2))


def k23() -> PlaneGraph:
    """K_{2,3} drawn as a quadrangulation: outer 4-cycle 0,1,2,3, inner 4.

    Vertices 0 and 2 are the degree-3 class. Not 3-connected; serves both as
    a negative gate and as the base-case host of the L-shape recursion.
    """
    return PlaneGraph.from_rotations(
        [[3, 4, 1], [0, 2], [1, 4, 3], [2, 0], [0, 2]], outer_roots=(0, 1, 2, 3)
    )


# ---------------------------------------------------------------------------
# random triangulations (stacked growth + diagonal flips)


def random_triangulation(n: int, seed: int, flip_factor: float = 1.0) -> PlaneGraph:
    """Random n-vertex plane triangulation, outer triangle 0,1,2.

    Grows from K4 by repeatedly placing a vertex inside a uniformly random
    inner face, then applies ~flip_factor*n random diagonal flips (skipping
    any flip that would create a parallel edge). Simple maximal planar, hence
    3-connected.
    """
    if n < 4:
        raise PreconditionError("triangulation needs n >= 4")
    rng = random.Random(seed)
    rot: list[list[int]] = [[2, 3, 1], [0, 3, 2], [1, 3, 0], [1, 0, 2]]
    tris: list[tuple[int, int, int]] = [(0, 2, 3), (0, 3, 1), (1, 3, 2)]
    for v in range(4, n):
        fi = rng.randrange(len(tris))
        a, b, c = tris[fi]
        rot.append([a, b, c])
        for x, succ in ((a, b), (b, c), (c, a)):
            rx = rot[x]
            rx.insert(rx.index(succ) + 1, v)
        tris[fi] = (a, b, v)
        tris.append((b, c, v))
        tris.append((c, a, v))

    attempts = int(flip_factor * n)
    if attempts:
        adj = [set(r) for r in rot]
        eface: dict[tuple[int, int], list[int]] = {}
        for i, (a, b, c) in enumerate(tris):
            for u, v in ((a, b), (b, c), (c, a)):
                eface.setdefault((min(u, v), max(u, v)), []).append(i)
        # edges with both sides inner are flippable; list may grow
        flippable = [e for e, fs in eface.items() if len(fs) == 2]

        def walk_succ(t: tuple[int, int, int], u: int) -> int:
            i = t.index(u)
            return t[(i + 1) % 3]

        for _ in range(attempts):
            u, v = flippable[rng.randrange(len(flippable))]
            fs = eface.get((u, v))
            if fs is None or len(fs) != 2:
                continue
            f1, f2 = fs
            if walk_succ(tris[f1], u) != v:
                f1, f2 = f2, f1
            x = walk_succ(tris[f1], v)
            y = walk_succ(tris[f2], u)
            if x == y or x in adj[y]:
                continue
            rot[u].remove(v)
            rot[v].remove(u)
            adj[u].discard(v)
            adj[v].discard(u)
            rot[x].insert(rot[x].index(u) + 1, y)
            rot[y].insert(rot[y].index(v) + 1, x)
            adj[x].add(y)
            adj[y].add(x)
            tris[f1] = (x, u, y)
            tris[f2] = (y, v, x)
            del eface[(u, v)]
            eface[(min(x, y), max(x, y))] = [f1, f2]
            flippable.append((min(x, y), max(x, y)))
            # (u,y) moved from f2 to f1, (v,x) from f1 to f2
            for p, q, old, new in ((u, y, f2, f1), (v, x, f1, f2)):
                lst = eface[(min(p, q), max(p, q))]
                lst[lst.index(old)] = new
    return PlaneGraph.from_rotations(rot, outer_roots=(0, 1, 2))


def triangulation_dual(n_tri: int, seed: int) -> PlaneGraph:
    """3-regular 3-connected plane graph: dual of a random triangulation."""
    g = dual(random_triangulation(n_tri, seed))
    rots = [[g.target(d) for d in g.vertex_darts(v)] for v in range(g.n)]
    roots = tuple(g.face_vertices(0)[:3])
    return PlaneGraph.from_rotations(rots, outer_roots=roots)


def sparsified_triangulation(n: int, seed: int) -> PlaneGraph:
    """Triangulation with a few verified edge deletions (stays 3-connected).

    Deletion candidates keep every face; each removal is accepted only if the
    graph remains 3-connected, so this is only sensible for small n.
    """
    g = random_triangulation(n, seed)
    rng = random.Random(seed ^ 0x5F5E1)
    pairs = [g.endpoints(e) for e in range(g.m)]
    rng.shuffle(pairs)
    removed = 0
    for u, v in pairs:
        if removed >= max(2, n // 6):
            break
        if g.degree(u) <= 3 or g.degree(v) <= 3:
            continue
        rots = [list(g.neighbors(w)) for w in range(g.n)]
        rots[u].remove(v)
        rots[v].remove(u)
        try:
            g2 = PlaneGraph.from_rotations(rots, outer_roots=g.outer_roots)
        except PreconditionError:
            continue
        if is_three_connected(g2):
            g = g2
            removed += 1
    return g


def corpus_graph(seed: int) -> PlaneGraph:
    """Deterministic mixed corpus member for the random test corpus.

    Sizes skew small so thousand-instance sweeps stay fast, with a tail of
    large instances; style rotates through triangulations, duals, sparsified
    triangulations and parametric families.
    """
    rng = random.Random(0xC0FFEE ^ seed)
    bucket = rng.random()
    if bucket < 0.80:
        n = rng.randint(4, 64)
    elif bucket < 0.95:
        n = rng.randint(65, 200)
    else:
        n = rng.randint(201, 500)
    style = seed % 5
    if style == 3:
        size = max(4, min(n, 32))
        return sparsified_triangulation(size, seed)
    if style == 4:
        k = max(3, n - 1) if rng.random() < 0.5 else max(3, n // 2)
        return wheel(min(k, 499)) if rng.random() < 0.5 else prism(min(max(k, 3), 250))
    if style == 2:
        n_tri = max(4, (n + 4) // 2)
        return triangulation_dual(n_tri, seed)
    return random_triangulation(n, seed)


# ---------------------------------------------------------------------------
# quadrangulations


def pseudo_double_wheel(k: int) -> PlaneGraph:
    """Quadrangulation on 2k+2 vertices: alternating rim, two apexes.

    Rim vertices 2i (class B) and 2i+1 (class W); vertex 2k joins all of B,
    vertex 2k+1 all of W. 3-connected with no separating 4-cycles for k >= 3.
    """
    if k < 3:
        raise PreconditionError("pseudo double wheel needs k >= 3")
    rots = []
    for i in range(k):
        rots.append([2 * i + 1, 2 * k, 2 * ((i - 1) % k) + 1])
        rots.append([2 * i, 2 * k + 1, 2 * ((i + 1) % k)])
    rots.append([2 * i for i in range(k)])
    rots.append(list(reversed([2 * i + 1 for i in range(k)])))
    g0 = PlaneGraph.from_rotations(rots)
    return PlaneGraph.from_rotations(rots, outer_roots=tuple(g0.face_vertices(0)))


def cube_quadrangulation() -> PlaneGraph:
    """The cube embedding with a quadrilateral outer face designation."""
    g = prism(4)
    return g.with_outer((0, 1, 2, 3))


def radial_graph(g: PlaneGraph) -> PlaneGraph:
    """Vertex-face incidence quadrangulation of a plane graph.

    Vertices 0..n-1 are g's vertices, n+j is g's face j; each corner becomes
    an edge. For 3-connected simple g the result is a 3-connected
    quadrangulation with no separating 4-cycles.
    """
    rots = []
    for v in range(g.n):
        rots.append([g.n + g.face_of(d) for d in g.vertex_darts(v)])
    for f in range(g.face_count()):
        rots.append([g.origin(d) for d in g.face_walk(f)])
    g0 = PlaneGraph.from_rotations(rots)
    return PlaneGraph.from_rotations(rots, outer_roots=tuple(g0.face_vertices(0)))


def random_prime_quadrangulation(seed: int, max_n: int = 200) -> PlaneGraph:
    """3-connected quadrangulation without separating 4-cycles, |V| <= max_n."""
    rng = random.Random(0x9AD ^ seed)
    if seed % 3 == 0:
        k = rng.randint(3, max(3, (max_n - 2) // 2))
        return pseudo_double_wheel(k)
    # radial graph of a triangulation on t vertices has 3t-4 vertices
    t_hi = max(4, (max_n + 4) // 3)
    t = rng.randint(4, t_hi)
    return radial_graph(random_triangulation(t, seed))


def glue_into_face(host: PlaneGraph, face_idx: int, guest: PlaneGraph) -> PlaneGraph:
    """Glue a quadrangulation into an inner quad face of another.

    The guest's outer 4-cycle is identified (orientation-reversed) with the
    host face's walk; the face's 4-cycle becomes separating, enclosing the
    guest's interior.
    """
    qwalk = host.face_vertices(face_idx)
    if face_idx == host.outer_face:
        raise PreconditionError("cannot glue into the outer face")
    gwalk = guest.face_vertices(guest.outer_face)
    if len(qwalk) != 4 or len(gwalk) != 4:
        raise PreconditionError("gluing needs quadrilateral faces on both sides")
    gwalk = [gwalk[0]] + list(reversed(gwalk[1:]))
    merged: dict[int, int] = {}
    for c, q in zip(gwalk, qwalk):
        merged[c] = q
    nxt = host.n
    for v in range(guest.n):
        if v not in merged:
            merged[v] = nxt
            nxt += 1
    rots: list[list[int] | None] = [list(host.neighbors(v)) for v in range(host.n)]
    rots.extend([None] * (nxt - host.n))
    boundary = set(gwalk)
    for v in range(guest.n):
        if v in boundary:
            continue
        rots[merged[v]] = [merged[w] for w in guest.neighbors(v)]
    for i, (c, q) in enumerate(zip(gwalk, qwalk)):
        cprev = gwalk[(i - 1) % 4]
        cnext = gwalk[(i + 1) % 4]
        grot = guest.neighbors(c)
        k = len(grot)
        pi = grot.index(cprev)
        seq = [grot[(pi + 1 + t) % k] for t in range(k - 1)]
        ci = seq.index(cnext)
        inner = seq[:ci] if seq[:ci] else seq[ci + 1 :]
        inner_ids = [merged[w] for w in inner]
        rq = rots[q]
        assert rq is not None
        j = rq.index(qwalk[(i + 1) % 4])
        rots[q] = rq[: j + 1] + inner_ids + rq[j + 1 :]
    final = [r for r in rots if r is not None]
    if len(final) != nxt:
        raise PreconditionError("guest rotation assembly incomplete")
    return PlaneGraph.from_rotations(final, outer_roots=host.outer_roots)


def _innermost_face(g: PlaneGraph, avoid: set[int]) -> int:
    for i in range(g.face_count()):
        if i == g.outer_face:
            continue
        if not (set(g.face_vertices(i)) & avoid):
            return i
    raise PreconditionError("no face free of the outer boundary")


def nested_chain_quadrangulation(k: int) -> PlaneGraph:
    """Chain of k cube quadrangulations, each glued inside the last.

    Produces k nested separating 4-cycles; 8 + 4k vertices total.
    """
    if k < 0:
        raise PreconditionError("nesting depth must be >= 0")
    g = cube_quadrangulation()
    lo = 0
    for _ in range(k):
        # deepest block's interior 4 vertices arrived last; its inner face
        # avoids everything older
        old = set(range(lo))
        face = _innermost_face(g, old) if lo else _innermost_face(g, set(g.face_vertices(g.outer_face)))
        lo = g.n
        g = glue_into_face(g, face, cube_quadrangulation())
    return g


def random_glued_quadrangulation(seed: int, max_n: int = 200) -> PlaneGraph:
    """Mixed quadrangulation: a prime host with random blocks glued in."""
    rng = random.Random(0x61E ^ seed)
    g = random_prime_quadrangulation(seed, max_n=max(8, max_n // 3))
    blocks = rng.randint(1, 4)
    for b in range(blocks):
        if seed % 2 and b % 2:
            guest = pseudo_double_wheel(rng.randint(3, 6))
        else:
            guest = cube_quadrangulation()
        if g.n + guest.n - 4 > max_n:
            break
        inner = [i for i in range(g.face_count()) if i != g.outer_face]
        face = inner[rng.randrange(len(inner))]
        g = glue_into_face(g, face, guest)
    return g
