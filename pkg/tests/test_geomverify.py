"""Exact contact classification against an independent small-grid oracle."""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import pytest

from boxwood import PreconditionError
from boxwood.geomverify import (
    Box3,
    Disjoint,
    ExpectedContacts,
    LShape,
    Overlap,
    PointContact,
    ProperContact,
    SegmentContact,
    Shell,
    box_contact,
    contact,
    format_rat,
    grid_bounds,
    parse_rat,
    verify_representation,
)


def oracle_class(a, b):
    """Independent classification: dimension of the intersection box."""
    dims = 0
    degenerate = 0
    for p in range(3):
        lo = max(a.ivals[p][0], b.ivals[p][0])
        hi = min(a.ivals[p][1], b.ivals[p][1])
        if lo > hi:
            return "disjoint"
        if lo == hi:
            degenerate += 1
        else:
            dims += 1
    if degenerate == 0:
        return "overlap"
    return {2: "proper", 1: "segment", 0: "point"}[dims]


def small_boxes():
    iv = [(lo, hi) for lo in range(4) for hi in range(lo + 1, 4)]
    return [Box3(x, y, z) for x in iv for y in iv for z in iv]


class TestRationals:
    def test_round_trip(self):
        for s in ("3", "-7", "1/2", "-9/4", "0"):
            assert format_rat(parse_rat(s)) == s

    def test_rejects_garbage(self):
        from boxwood import FormatError

        for s in ("", "x", "1/0", "1/-2", "1.5"):
            with pytest.raises(FormatError):
                parse_rat(s)


class TestBoxContactOracle:
    def test_exhaustive_small_grid(self):
        boxes = small_boxes()
        assert len(boxes) == 216
        # sampled exhaustively in blocks to keep the quadratic pair count sane
        for a, b in itertools.combinations(boxes[::3], 2):
            got = box_contact(a, b)
            assert got.kind == oracle_class(a, b), (a, b)

    def test_symmetry_random_rationals(self):
        rng = random.Random(11)

        def riv():
            lo = Fraction(rng.randint(-12, 12), rng.randint(1, 4))
            return (lo, lo + Fraction(rng.randint(1, 9), rng.randint(1, 4)))

        for _ in range(400):
            a = Box3(riv(), riv(), riv())
            b = Box3(riv(), riv(), riv())
            ca, cb = box_contact(a, b), box_contact(b, a)
            assert ca.kind == cb.kind
            if isinstance(ca, ProperContact):
                assert ca.area == cb.area > 0
            if isinstance(ca, SegmentContact):
                assert ca.length == cb.length > 0

    def test_known_classes(self):
        u = Box3((0, 1), (0, 1), (0, 1))
        assert isinstance(box_contact(u, Box3((1, 2), (0, 1), (0, 1))), ProperContact)
        assert box_contact(u, Box3((1, 2), (0, 1), (0, 1))).area == 1
        assert isinstance(box_contact(u, Box3((1, 2), (1, 2), (0, 1))), SegmentContact)
        assert isinstance(box_contact(u, Box3((1, 2), (1, 2), (1, 2))), PointContact)
        assert isinstance(box_contact(u, Box3((2, 3), (0, 1), (0, 1))), Disjoint)
        ov = box_contact(u, Box3((Fraction(1, 2), 2), (0, 1), (0, 1)))
        assert isinstance(ov, Overlap) and len(ov.witness) == 3

    def test_degenerate_box_rejected(self):
        with pytest.raises(PreconditionError):
            Box3((0, 0), (0, 1), (0, 1))
        with pytest.raises(PreconditionError):
            Box3((1, 0), (0, 1), (0, 1))


class TestLShape:
    def test_accepts_overlapping_legs(self):
        a = Box3((0, 3), (2, 3), (0, 4))
        b = Box3((2, 3), (0, 3), (0, 4))
        ell = LShape(a, b)
        assert ell.axis == 2

    def test_accepts_disjoint_cross_sections_meeting_at_corner_leg(self):
        ell = LShape(Box3((0, 3), (0, 1), (0, 1)), Box3((2, 3), (1, 4), (0, 1)))
        assert ell.axis == 2

    def test_rejects_full_cover(self):
        with pytest.raises(PreconditionError):
            LShape(Box3((0, 2), (0, 1), (0, 1)), Box3((0, 2), (1, 2), (0, 1)))

    def test_rejects_disconnected_gap_shapes(self):
        # middle column missing: not a corner gap
        with pytest.raises(PreconditionError):
            LShape(Box3((0, 1), (0, 3), (0, 1)), Box3((2, 3), (0, 3), (0, 1)))

    def test_rejects_when_no_shared_axis(self):
        with pytest.raises(PreconditionError):
            LShape(Box3((0, 1), (0, 1), (0, 1)), Box3((2, 3), (2, 3), (2, 3)))

    def test_l_contact_merges_both_legs(self):
        ell = LShape(Box3((0, 3), (2, 3), (0, 1)), Box3((2, 3), (0, 3), (0, 1)))
        wall = Box3((0, 3), (0, 3), (1, 2))
        c = contact(ell, wall)
        assert isinstance(c, ProperContact)
        # area of the L cross-section, counted once: 3+3-1
        assert c.area == 5


class TestShell:
    def test_six_slabs(self):
        sh = Shell(Box3((0, 10), (0, 10), (0, 10)), Box3((1, 9), (1, 9), (1, 9)))
        assert len(sh.boxes) == 6

    def test_flush_cavity_drops_slabs(self):
        sh = Shell(Box3((0, 10), (0, 10), (0, 10)), Box3((0, 9), (1, 9), (1, 9)))
        assert len(sh.boxes) == 5

    def test_cavity_must_fit(self):
        with pytest.raises(PreconditionError):
            Shell(Box3((0, 5), (0, 5), (0, 5)), Box3((1, 6), (1, 4), (1, 4)))

    def test_box_in_cavity_touches_wall(self):
        sh = Shell(Box3((0, 10), (0, 10), (0, 10)), Box3((1, 9), (1, 9), (1, 9)))
        c = contact(sh, Box3((1, 3), (2, 5), (2, 5)))
        assert isinstance(c, ProperContact) and c.area == 9
        assert isinstance(contact(sh, Box3((3, 7), (3, 7), (3, 7))), Disjoint)

    def test_corner_box_touches_two_walls(self):
        sh = Shell(Box3((0, 10), (0, 10), (0, 10)), Box3((1, 9), (1, 9), (1, 9)))
        c = contact(sh, Box3((1, 3), (1, 4), (2, 6)))
        assert isinstance(c, ProperContact)
        # x-wall rect 3*4 plus y-wall rect 2*4, in distinct planes
        assert c.area == 12 + 8


@dataclass
class _Shape:
    id: str
    role: str
    solid: object


def _rep(*shapes):
    return [_Shape(f"s{i}", "vertex", s) for i, s in enumerate(shapes)]


class TestVerify:
    def test_clean_pair_certifies(self):
        shapes = _rep(Box3((0, 1), (0, 1), (0, 1)), Box3((1, 2), (0, 1), (0, 1)))
        exp = ExpectedContacts(proper={("s0", "s1")})
        rep = verify_representation(shapes, exp)
        assert rep.ok and rep.violations == []
        assert rep.contacts == [("s0", "s1", "proper", "area 1")]

    def test_overlap_flagged(self):
        shapes = _rep(Box3((0, 2), (0, 1), (0, 1)), Box3((1, 3), (0, 1), (0, 1)))
        rep = verify_representation(shapes, ExpectedContacts())
        assert not rep.ok
        assert any("overlap" in v for v in rep.violations)

    def test_missing_expected_contact_flagged(self):
        shapes = _rep(Box3((0, 1), (0, 1), (0, 1)), Box3((5, 6), (0, 1), (0, 1)))
        rep = verify_representation(shapes, ExpectedContacts(proper={("s0", "s1")}))
        assert not rep.ok
        assert any("expected proper" in v for v in rep.violations)

    def test_unexpected_proper_flagged(self):
        shapes = _rep(Box3((0, 1), (0, 1), (0, 1)), Box3((1, 2), (0, 1), (0, 1)))
        rep = verify_representation(shapes, ExpectedContacts())
        assert not rep.ok

    def test_segment_between_strangers_passes(self):
        shapes = _rep(Box3((0, 1), (0, 1), (0, 1)), Box3((1, 2), (1, 2), (0, 1)))
        rep = verify_representation(shapes, ExpectedContacts())
        assert rep.ok
        assert rep.contacts[0][2] == "segment"

    def test_incidence_mode_iff(self):
        shapes = [
            _Shape("v", "vertex", Box3((0, 1), (0, 1), (0, 1))),
            _Shape("f", "face", Box3((1, 2), (0, 1), (0, 1))),
            _Shape("g", "face", Box3((0, 1), (0, 1), (1, 2))),
        ]
        exp = ExpectedContacts(nonempty={("f", "v")})
        rep = verify_representation(shapes, exp, mode="incidence")
        # v-g contact exists but is not an expected incidence
        assert not rep.ok
        assert any("non-incident" in v for v in rep.violations)
        exp2 = ExpectedContacts(nonempty={("f", "v"), ("g", "v")})
        assert verify_representation(shapes, exp2, mode="incidence").ok

    def test_incidence_ignores_point_touches_both_ways(self):
        # corner-touch pairs: neither satisfying nor indicting
        shapes = [
            _Shape("v", "vertex", Box3((0, 1), (0, 1), (0, 1))),
            _Shape("f", "face", Box3((1, 2), (1, 2), (1, 2))),
        ]
        rep = verify_representation(shapes, ExpectedContacts(), mode="incidence")
        assert rep.ok
        rep2 = verify_representation(
            shapes, ExpectedContacts(nonempty={("f", "v")}), mode="incidence"
        )
        assert not rep2.ok
        assert any("got point" in v for v in rep2.violations)

    def test_incidence_segment_indicts_unlisted_pair(self):
        shapes = [
            _Shape("v", "vertex", Box3((0, 1), (0, 1), (0, 1))),
            _Shape("f", "face", Box3((1, 2), (1, 2), (0, 1))),
        ]
        rep = verify_representation(shapes, ExpectedContacts(), mode="incidence")
        assert not rep.ok
        assert any("non-incident" in v for v in rep.violations)

    def test_nonempty_pair_may_be_proper_in_exact_mode(self):
        shapes = _rep(Box3((0, 1), (0, 1), (0, 1)), Box3((1, 2), (0, 1), (0, 1)))
        exp = ExpectedContacts(nonempty={("s0", "s1")})
        assert verify_representation(shapes, exp, mode="exact-proper").ok

    def test_bad_mode_rejected(self):
        with pytest.raises(PreconditionError):
            verify_representation(_rep(Box3((0, 1), (0, 1), (0, 1))), ExpectedContacts(), mode="loose")

    def test_report_json_shape(self):
        shapes = _rep(Box3((0, 1), (0, 1), (0, 1)), Box3((1, 2), (0, 1), (0, 1)))
        data = verify_representation(shapes, ExpectedContacts(proper={("s0", "s1")})).to_json()
        assert set(data) == {"ok", "violations", "contacts"}
        assert data["contacts"] == [["s0", "s1", "proper", "area 1"]]


class TestGridBounds:
    def test_integral_rep(self):
        lo, hi, integral = grid_bounds(_rep(Box3((0, 2), (1, 3), (0, 5))))
        assert (lo, hi, integral) == (0, 5, True)

    def test_fractional_rep(self):
        lo, hi, integral = grid_bounds(_rep(Box3((0, Fraction(5, 2)), (0, 1), (0, 1))))
        assert (lo, hi, integral) == (0, Fraction(5, 2), False)
