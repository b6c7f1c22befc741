"""Woods, partitions, and the exhaustive small-graph cross-check.

The enumeration in TestEnumeration is an independent implementation of the
wood conditions (wedge arithmetic instead of the validator's sector machine).
Both run side by side over every arc coloring of the small catalog graphs, so
a disagreement in either direction surfaces as a concrete counterexample.
"""

import pytest

from boxwood import (
    PlaneGraph,
    SchnyderWood,
    compatible_wood_from_order,
    compute_schnyder_wood,
    dual_schnyder_wood,
    elementary_canonical_order,
    generate,
    is_compatible,
    is_elementary,
    levels_from_wood,
    next_color,
    ordered_path_partition,
    parse_partition,
    parse_wood,
    prev_color,
    serialize_partition,
    serialize_wood,
    validate_partition,
    validate_wood,
)
from boxwood.schnyder import _sector_pattern_ok, _sector_sequence

# woods per catalog graph at most 8 vertices, frozen from the enumeration
EXPECTED_WOOD_COUNTS = {
    "tetrahedron": 1,
    "prism3": 1,
    "wheel5": 1,
    "wheel7": 1,
    "octahedron": 2,
    "cube": 2,
}


def colors_of(w):
    return tuple(w._dart_color)


class TestColors:
    def test_cyclic_successors(self):
        assert [next_color(c) for c in (1, 2, 3)] == [2, 3, 1]
        assert [prev_color(c) for c in (1, 2, 3)] == [3, 1, 2]


class TestGoldenK4:
    """The unique K4 wood, written out arc by arc."""

    def wood(self):
        g = generate.tetrahedron()
        return compute_schnyder_wood(g, (0, 1, 2))

    def test_inner_vertex_arcs(self):
        w = self.wood()
        g = w.host
        for i, root in enumerate((0, 1, 2), start=1):
            e = g.edge_between(3, root)
            a, b = w.edge_colors(e)
            c = a if g.origin(2 * e) == 3 else b
            other = b if g.origin(2 * e) == 3 else a
            assert c == i and other is None

    def test_outer_edges_bidirected(self):
        w = self.wood()
        g = w.host
        # arc u->v carries the color of v's root index
        for u, v in ((0, 1), (1, 2), (2, 0)):
            e = g.edge_between(u, v)
            d = 2 * e if g.origin(2 * e) == u else 2 * e + 1
            assert w._dart_color[d] == v + 1
            assert w._dart_color[d ^ 1] == u + 1

    def test_validates(self):
        assert validate_wood(self.wood()) == []

    def test_levels(self):
        lv = levels_from_wood(self.wood())
        assert lv.x_level[0] == 3 and lv.y_level[1] == 3 and lv.z_level[2] == 3
        assert lv.of(3) == (2, 2, 2)


class TestValidatorNegatives:
    def test_recolored_arc_breaks_out_degree(self):
        w = compute_schnyder_wood(generate.tetrahedron(), (0, 1, 2))
        g = w.host
        e = g.edge_between(3, 0)
        d = 2 * e if g.origin(2 * e) == 3 else 2 * e + 1
        bad = list(w._dart_color)
        bad[d] = 2
        rep = validate_wood(SchnyderWood(g, w.roots, bad))
        assert any("out-degree" in v for v in rep)

    def test_monochrome_face_detected(self):
        # orient the inner triangle of the octahedron as a color-1 cycle
        g = generate.octahedron()
        w = compute_schnyder_wood(g, (0, 1, 2))
        bad = list(w._dart_color)
        walk = None
        for f in range(g.face_count()):
            vs = g.face_vertices(f)
            if not set(vs) & {0, 1, 2}:
                walk = g.face_walk(f)
                break
        for d in walk:
            bad[d] = 1
            bad[d ^ 1] = None
        rep = validate_wood(SchnyderWood(g, w.roots, bad))
        assert any("directed cycle" in v for v in rep)

    def test_missing_direction_detected(self):
        w = compute_schnyder_wood(generate.tetrahedron(), (0, 1, 2))
        bad = list(w._dart_color)
        bad[0] = bad[1] = None
        rep = validate_wood(SchnyderWood(w.host, w.roots, bad))
        assert any("no direction" in v for v in rep)


# ---------------------------------------------------------------------------
# exhaustive enumeration against the validator


def wedge_check(g, dart_color, roots, v, outer):
    """Local wood conditions at v, phrased as wedge arithmetic.

    Out-arcs (virtual root half-edge included) sit at even positions 2k, the
    half-edge at an odd one; the three must read 1,3,2 counterclockwise and
    every incoming uni arc of color j must fall strictly between the outgoing
    arcs of colors j-1 and j+1.
    """
    deg = g.degree(v)
    D = 2 * deg
    darts = g.vertex_darts(v)
    out_pos = {}
    ins = []
    for k, d in enumerate(darts):
        oc = dart_color[d]
        ic = dart_color[d ^ 1]
        if oc is not None:
            if oc in out_pos:
                return False
            out_pos[oc] = 2 * k
        if ic is not None and oc is None:
            ins.append((2 * k, ic))
    if v in roots:
        i = roots.index(v) + 1
        hk = next((k for k, d in enumerate(darts) if g.face_of(d) == outer), None)
        if hk is None or i in out_pos:
            return False
        out_pos[i] = 2 * hk + 1
    if sorted(out_pos) != [1, 2, 3]:
        return False
    a, b, c = out_pos[1], out_pos[3], out_pos[2]
    if (b - a) % D >= (c - a) % D:
        return False
    for p, j in ins:
        lo = out_pos[prev_color(j)]
        hi = out_pos[next_color(j)]
        if not 0 < (p - lo) % D < (hi - lo) % D:
            return False
    return True


def face_check(g, dart_color, outer):
    for f in range(g.face_count()):
        if f == outer:
            continue
        walk = g.face_walk(f)
        for ds in (walk, [d ^ 1 for d in walk]):
            cs = {dart_color[d] for d in ds}
            if len(cs) == 1 and None not in cs:
                return False
    return True


class _Shim:
    """Minimal stand-in so the validator's local helpers run mid-search."""

    def __init__(self, g, dart_color, roots):
        self.host = g
        self._dart_color = dart_color
        self.roots = roots
        self.half_edges = {roots[i]: i + 1 for i in range(3)}


def enumerate_woods(g, roots):
    """All arc colorings passing both local filters, with disagreements.

    Returns (oracle_set, validator_set, mismatches). Branches are cut only
    when out-degree caps fail (a condition both sides state identically) or
    when both local checks reject a completed vertex; any one-sided local
    verdict is recorded instead of pruned, and completed colorings are judged
    by the independent face filter and by validate_wood in full.
    """
    outer = g.outer_face
    m, n = g.m, g.n
    dart_color = [None] * (2 * m)
    counts = [[0, 0, 0] for _ in range(n)]
    for i, r in enumerate(roots):
        counts[r][i] = 1
    shim = _Shim(g, dart_color, roots)

    states = [(a, None) for a in (1, 2, 3)] + [(None, a) for a in (1, 2, 3)]
    states += [(a, b) for a in (1, 2, 3) for b in (1, 2, 3) if a != b]

    # close vertices as early as possible
    edge_order = []
    left = [g.degree(v) for v in range(n)]
    pool = set(range(m))
    while pool:
        e = min(pool, key=lambda e: min(left[g.endpoints(e)[0]], left[g.endpoints(e)[1]]))
        pool.remove(e)
        edge_order.append(e)
        u, v = g.endpoints(e)
        left[u] -= 1
        left[v] -= 1

    unassigned = [g.degree(v) for v in range(n)]
    oracle, validator, mismatches = set(), set(), []

    def local_both(v):
        ok_counts = counts[v] == [1, 1, 1]
        mine = ok_counts and wedge_check(g, dart_color, roots, v, outer)
        ri = roots.index(v) + 1 if v in roots else None
        seq = _sector_sequence(shim, v, ri, outer)
        theirs = ok_counts and seq is not None and _sector_pattern_ok(seq)
        if mine != theirs:
            mismatches.append(("local", v, tuple(dart_color)))
        return mine or theirs

    def rec(k):
        if k == len(edge_order):
            mine = face_check(g, dart_color, outer)
            full = not validate_wood(SchnyderWood(g, roots, list(dart_color)))
            if mine:
                oracle.add(tuple(dart_color))
            if full:
                validator.add(tuple(dart_color))
            if mine != full:
                mismatches.append(("full", None, tuple(dart_color)))
            return
        e = edge_order[k]
        u, v = g.endpoints(e)
        du = 2 * e if g.origin(2 * e) == u else 2 * e + 1
        dv = du ^ 1
        for a, b in states:
            if a is not None and counts[u][a - 1] >= 1:
                continue
            if b is not None and counts[v][b - 1] >= 1:
                continue
            dart_color[du], dart_color[dv] = a, b
            if a is not None:
                counts[u][a - 1] += 1
            if b is not None:
                counts[v][b - 1] += 1
            unassigned[u] -= 1
            unassigned[v] -= 1
            ok = all(3 - sum(counts[x]) <= unassigned[x] for x in (u, v))
            if ok and unassigned[u] == 0 and not local_both(u):
                ok = False
            if ok and unassigned[v] == 0 and not local_both(v):
                ok = False
            if ok:
                rec(k + 1)
            unassigned[u] += 1
            unassigned[v] += 1
            if a is not None:
                counts[u][a - 1] -= 1
            if b is not None:
                counts[v][b - 1] -= 1
            dart_color[du] = dart_color[dv] = None
    rec(0)
    return oracle, validator, mismatches


class TestEnumeration:
    def test_small_catalog_exact_set_equality(self, small_catalog):
        assert set(small_catalog) == set(EXPECTED_WOOD_COUNTS)
        for name, g in sorted(small_catalog.items()):
            oracle, validator, mismatches = enumerate_woods(g, g.outer_roots)
            assert not mismatches, (name, mismatches[:3])
            assert oracle == validator, name
            assert len(oracle) == EXPECTED_WOOD_COUNTS[name], (name, len(oracle))
            w = compute_schnyder_wood(g, g.outer_roots)
            assert colors_of(w) in oracle, name

    def test_out_degree_rejections_agree(self, small_catalog):
        # the shared pruning rule: both sides refuse a doubled out color
        import random

        rng = random.Random(7)
        g = small_catalog["tetrahedron"]
        for _ in range(50):
            dart_color = [None] * (2 * g.m)
            for e in range(g.m):
                a = rng.choice([1, 2, 3, None])
                b = rng.choice([1, 2, 3, None]) if a is None else rng.choice([1, 2, 3])
                dart_color[2 * e], dart_color[2 * e + 1] = a, b
            counts = [[0, 0, 0] for _ in range(g.n)]
            for i, r in enumerate((0, 1, 2)):
                counts[r][i] = 1
            for d, c in enumerate(dart_color):
                if c is not None:
                    counts[g.origin(d)][c - 1] += 1
            if all(cv == [1, 1, 1] for cv in counts):
                continue
            rep = validate_wood(SchnyderWood(g, (0, 1, 2), dart_color))
            assert rep, "validator must reject an out-degree violation"


class TestPartitions:
    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_catalog_partitions_valid_and_compatible(self, catalog, i):
        for name, g in catalog.items():
            w = compute_schnyder_wood(g, g.outer_roots)
            p = ordered_path_partition(w, i)
            assert validate_partition(p) == [], name
            assert is_compatible(p, w), name

    def test_unaugmented_order_can_break_compatibility(self):
        # frozen witness from the random corpus
        g = generate.corpus_graph(3)
        w = compute_schnyder_wood(g, g.outer_roots)
        p = ordered_path_partition(w, 2, augment=False)
        assert not is_compatible(p, w)
        assert is_compatible(ordered_path_partition(w, 2), w)

    def test_levels_match_partitions(self, catalog):
        for g in catalog.values():
            w = compute_schnyder_wood(g, g.outer_roots)
            lv = levels_from_wood(w)
            for i in (1, 2, 3):
                p = ordered_path_partition(w, i)
                for k, cls in enumerate(p.classes, start=1):
                    for v in cls:
                        assert lv.of(v)[i - 1] == k

    def test_wood_round_trip_through_partition(self, mixed_corpus):
        for name, g in mixed_corpus[:10]:
            w = compute_schnyder_wood(g, g.outer_roots)
            p = ordered_path_partition(w, 3)
            w2 = compatible_wood_from_order(p)
            assert is_compatible(p, w2), name
            assert validate_wood(w2) == [], name


class TestElementary:
    def test_cube_peel_class_count(self):
        g = generate.cube()
        order = elementary_canonical_order(g, (0, 1), 2)
        assert len(order.classes) == 5
        assert list(order.classes[0]) == [0, 1]
        assert list(order.classes[-1]) == [2]
        assert validate_partition(order, elementary=True) == []

    def test_prism_peel(self):
        g = generate.prism(5)
        order = elementary_canonical_order(g, (0, 1), 2)
        assert validate_partition(order, elementary=True) == []
        w = compatible_wood_from_order(order)
        assert validate_wood(w) == []

    def test_elementary_iff_strict_conditions(self, catalog):
        for name, g in catalog.items():
            w = compute_schnyder_wood(g, g.outer_roots)
            for i in (1, 2, 3):
                p = ordered_path_partition(w, i)
                strict = (
                    len(p.classes[0]) == 2
                    and validate_partition(p, elementary=True) == []
                )
                assert is_elementary(w, i) == strict, (name, i)


class TestDualWood:
    def test_dual_wood_validates(self, catalog):
        for name, g in catalog.items():
            w = compute_schnyder_wood(g, g.outer_roots)
            dw = dual_schnyder_wood(w)
            assert validate_wood(dw) == [], name

    def test_k4_dual_is_prism_wood(self):
        w = compute_schnyder_wood(generate.tetrahedron(), (0, 1, 2))
        dw = dual_schnyder_wood(w)
        assert dw.host.n == 6
        assert validate_wood(dw) == []


class TestSerialization:
    def test_wood_round_trip(self, catalog):
        for name, g in catalog.items():
            w = compute_schnyder_wood(g, g.outer_roots)
            text = serialize_wood(w)
            w2 = parse_wood(text, g)
            assert colors_of(w2) == colors_of(w), name

    def test_partition_round_trip(self):
        g = generate.icosahedron()
        w = compute_schnyder_wood(g, g.outer_roots)
        p = ordered_path_partition(w, 1)
        p2 = parse_partition(serialize_partition(p), g)
        assert p2.classes == p.classes and p2.head == p.head


class TestRandomCorpus:
    def test_woods_validate_everywhere(self, mixed_corpus):
        for name, g in mixed_corpus:
            w = compute_schnyder_wood(g, g.outer_roots)
            assert validate_wood(w) == [], name

    def test_partitions_validate_everywhere(self, mixed_corpus):
        for name, g in mixed_corpus:
            w = compute_schnyder_wood(g, g.outer_roots)
            for i in (1, 2, 3):
                p = ordered_path_partition(w, i)
                assert validate_partition(p) == [], (name, i)
                assert is_compatible(p, w), (name, i)
