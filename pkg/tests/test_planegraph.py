"""Combinatorial map core: faces, duals, split duals, parsing."""

import pytest

from boxwood import (
    FormatError,
    PlaneGraph,
    PreconditionError,
    dual,
    is_three_connected,
    parse_plane_graph,
    serialize_plane_graph,
    split_dual,
)
from boxwood import generate

K4_ROTS = [[2, 3, 1], [0, 3, 2], [1, 3, 0], [1, 0, 2]]


def k4():
    return PlaneGraph.from_rotations(K4_ROTS, outer_roots=(0, 1, 2))


class TestFaces:
    def test_k4_face_walks(self):
        g = k4()
        assert g.face_count() == 4
        assert sorted(sorted(f) for f in g.faces()) == [
            [0, 1, 2],
            [0, 1, 3],
            [0, 2, 3],
            [1, 2, 3],
        ]
        # outer face is the one holding 0,1,2 in cyclic order
        assert sorted(g.face_vertices(g.outer_face)) == [0, 1, 2]

    def test_euler_on_catalog(self, catalog):
        for name, g in catalog.items():
            assert g.n - g.m + g.face_count() == 2, name

    def test_cube_faces_are_quads(self):
        g = generate.cube()
        assert all(len(f) == 4 for f in g.faces())

    def test_degree_neighbor_consistency(self, catalog):
        for g in catalog.values():
            for v in range(g.n):
                nb = g.neighbors(v)
                assert len(nb) == g.degree(v)
                for u in nb:
                    assert v in g.neighbors(u)

    def test_disconnected_rejected(self):
        with pytest.raises(PreconditionError):
            PlaneGraph.from_rotations([[1], [0], [3], [2]])

    def test_bad_genus_rejected(self):
        # K4 with one rotation flipped is not a sphere embedding
        rots = [list(r) for r in K4_ROTS]
        rots[3] = list(reversed(rots[3]))
        with pytest.raises(PreconditionError):
            PlaneGraph.from_rotations(rots, outer_roots=(0, 1, 2))

    def test_clockwise_roots_rejected(self):
        with pytest.raises(PreconditionError):
            PlaneGraph.from_rotations(K4_ROTS, outer_roots=(0, 2, 1))


class TestDual:
    def test_k4_dual_is_k4(self):
        gd = dual(k4())
        assert gd.n == 4 and gd.m == 6
        assert sorted(len(f) for f in gd.faces()) == [3, 3, 3, 3]

    def test_dual_dual_sizes(self, catalog):
        for name, g in catalog.items():
            gd = dual(g)
            assert gd.n == g.face_count() and gd.m == g.m, name
            assert gd.face_count() == g.n, name

    def test_cube_octahedron_duality(self):
        gd = dual(generate.cube())
        assert gd.n == 6 and all(g == 4 for g in map(gd.degree, range(6)))

    def test_split_dual_k4(self):
        info = split_dual(k4())
        sd = info.graph
        # 3 inner face vertices plus 3 outer pieces
        assert sd.n == 6
        assert len(info.o_vertices) == 3
        assert len(info.tau_edges) == 3
        # the split dual of K4 is the triangular prism
        assert sorted(map(sd.degree, range(sd.n))) == [3] * 6

    def test_split_dual_cube(self):
        info = split_dual(generate.cube())
        assert info.graph.n == 5 + 3


class TestConnectivity:
    def test_catalog_three_connected(self, catalog):
        for name, g in catalog.items():
            assert is_three_connected(g), name

    def test_cycle_not_three_connected(self):
        assert not is_three_connected(generate.cycle_graph(4))
        assert not is_three_connected(generate.cycle_graph(7))

    def test_k23_not_three_connected(self):
        assert not is_three_connected(generate.k23())


class TestAddEdge:
    def test_chord_splits_face(self):
        g = generate.cube()
        f = g.outer_face
        g2, e = g.add_edge_in_face(0, 2, f)
        assert g2.m == g.m + 1
        assert g2.face_count() == g.face_count() + 1
        assert g2.edge_between(0, 2) == e

    def test_chord_endpoints_must_share_face(self):
        g = generate.cube()
        with pytest.raises(PreconditionError):
            g.add_edge_in_face(0, 6, g.outer_face)


class TestFormat:
    def test_round_trip_catalog(self, catalog):
        for name, g in catalog.items():
            text = serialize_plane_graph(g)
            h = parse_plane_graph(text)
            assert h.n == g.n and h.m == g.m, name
            assert serialize_plane_graph(h) == text, name

    def test_round_trip_random(self):
        for s in range(6):
            g = generate.random_triangulation(16, s)
            assert parse_plane_graph(serialize_plane_graph(g)).m == g.m

    def test_parse_k4(self):
        text = "n 4\nrot 0: 2 3 1\nrot 1: 0 3 2\nrot 2: 1 3 0\nrot 3: 1 0 2\nouter 0 1 2\n"
        g = parse_plane_graph(text)
        assert g.n == 4 and g.m == 6
        assert sorted(g.face_vertices(g.outer_face)) == [0, 1, 2]

    def test_parse_rejects_garbage(self):
        for text in (
            "",
            "n x\n",
            "n 2\nrot 0: 1\n",
            "n 4\nrot 0: 2 3 1\nrot 0: 2 3 1\n",
            "n 4\nrot 0: 9\n",
        ):
            with pytest.raises(FormatError):
                parse_plane_graph(text)

    def test_parse_error_carries_location(self):
        try:
            parse_plane_graph("n 4\nrot 0: q\n")
        except FormatError as e:
            assert e.line == 2
        else:
            pytest.fail("no error raised")
