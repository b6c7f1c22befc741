"""Exact geometric certification of contact representations.

All coordinates are rationals (fractions.Fraction); every classification is
decided by interval arithmetic, never by floating point. A shape is one box,
an L (two boxes whose union is a box minus a corner slab), or a shell (the
region between an outer box and a cavity box, decomposed into six slabs).
Contacts between two shapes are classified by dimension:

    Overlap          interiors intersect (always a violation)
    ProperContact    intersection contains a 2D piece; carries its area
    SegmentContact   1D intersection; carries its length
    PointContact     finitely many points
    Disjoint         empty intersection
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import FormatError, PreconditionError

Rat = Fraction


def parse_rat(text: str) -> Fraction:
    """Rational from 'p' or 'p/q' (q positive)."""
    s = text.strip()
    try:
        if "/" in s:
            p, q = s.split("/", 1)
            den = int(q)
            if den <= 0:
                raise ValueError
            return Fraction(int(p), den)
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad rational {text!r}") from None


def format_rat(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# primitive solids


class Box3:
    """Closed axis-aligned box with positive extent on every axis."""

    __slots__ = ("ivals",)

    def __init__(self, x, y, z):
        ivals = []
        for lo, hi in (x, y, z):
            lo, hi = Fraction(lo), Fraction(hi)
            if lo >= hi:
                raise PreconditionError(f"degenerate interval [{lo},{hi}]")
            ivals.append((lo, hi))
        self.ivals = tuple(ivals)

    @property
    def x(self):
        return self.ivals[0]

    @property
    def y(self):
        return self.ivals[1]

    @property
    def z(self):
        return self.ivals[2]

    def __repr__(self):
        return "Box3(%s)" % ", ".join(f"[{format_rat(a)},{format_rat(b)}]" for a, b in self.ivals)

    def __eq__(self, other):
        return isinstance(other, Box3) and self.ivals == other.ivals

    def __hash__(self):
        return hash(self.ivals)

    def translated(self, dx, dy, dz) -> "Box3":
        (x0, x1), (y0, y1), (z0, z1) = self.ivals
        return Box3((x0 + dx, x1 + dx), (y0 + dy, y1 + dy), (z0 + dz, z1 + dz))

    def contains(self, other: "Box3") -> bool:
        return all(a0 <= b0 and b1 <= a1 for (a0, a1), (b0, b1) in zip(self.ivals, other.ivals))


def _rect_union_area(rects):
    """Area of a union of axis-aligned rectangles ((x0,x1),(y0,y1))."""
    xs = sorted({v for (x0, x1), _ in rects for v in (x0, x1)})
    ys = sorted({v for _, (y0, y1) in rects for v in (y0, y1)})
    total = Fraction(0)
    for i in range(len(xs) - 1):
        for j in range(len(ys) - 1):
            cx = (xs[i] + xs[i + 1]) / 2
            cy = (ys[j] + ys[j + 1]) / 2
            for (x0, x1), (y0, y1) in rects:
                if x0 < cx < x1 and y0 < cy < y1:
                    total += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j])
                    break
    return total


def _seg_union_length(segs):
    segs = sorted(segs)
    total = Fraction(0)
    cur_lo = cur_hi = None
    for lo, hi in segs:
        if cur_hi is None or lo > cur_hi:
            if cur_hi is not None:
                total += cur_hi - cur_lo
            cur_lo, cur_hi = lo, hi
        elif hi > cur_hi:
            cur_hi = hi
    if cur_hi is not None:
        total += cur_hi - cur_lo
    return total


class LShape:
    """Union of two boxes forming a box minus a corner slab.

    Both boxes span the same interval on one axis (the prism axis); the two
    cross-section rectangles cover the bounding rectangle except for one
    nonempty corner rectangle. Overlapping decompositions are accepted.
    """

    __slots__ = ("boxes", "axis")

    def __init__(self, a: Box3, b: Box3):
        axis = next((p for p in range(3) if a.ivals[p] == b.ivals[p]), None)
        if axis is None:
            raise PreconditionError("L parts share no full axis interval")
        p, q = [t for t in range(3) if t != axis]
        r1 = (a.ivals[p], a.ivals[q])
        r2 = (b.ivals[p], b.ivals[q])
        bx = (min(r1[0][0], r2[0][0]), max(r1[0][1], r2[0][1]))
        by = (min(r1[1][0], r2[1][0]), max(r1[1][1], r2[1][1]))
        area_b = (bx[1] - bx[0]) * (by[1] - by[0])
        area_u = _rect_union_area([r1, r2])
        missing = area_b - area_u
        if missing <= 0:
            raise PreconditionError("parts cover their bounding box; not an L")
        # the gap must be one rectangle in a corner of the bounding box
        xs = sorted({bx[0], bx[1], r1[0][0], r1[0][1], r2[0][0], r2[0][1]})
        ys = sorted({by[0], by[1], r1[1][0], r1[1][1], r2[1][0], r2[1][1]})
        gap_cells = []
        for i in range(len(xs) - 1):
            for j in range(len(ys) - 1):
                cx, cy = (xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2
                hit = False
                for (x0, x1), (y0, y1) in (r1, r2):
                    if x0 < cx < x1 and y0 < cy < y1:
                        hit = True
                        break
                if not hit:
                    gap_cells.append((i, j))
        if not gap_cells:
            raise PreconditionError("parts cover their bounding box; not an L")
        gis = {i for i, _ in gap_cells}
        gjs = {j for _, j in gap_cells}
        if len(gap_cells) != len(gis) * len(gjs):
            raise PreconditionError("gap is not a rectangle; not an L")
        if sorted(gis) != list(range(min(gis), max(gis) + 1)) or sorted(gjs) != list(
            range(min(gjs), max(gjs) + 1)
        ):
            raise PreconditionError("gap is not a rectangle; not an L")
        corner_i = {0, len(xs) - 2}
        corner_j = {0, len(ys) - 2}
        if not (gis & corner_i and gjs & corner_j):
            raise PreconditionError("gap does not sit in a corner; not an L")
        # a gap spanning a full side leaves a plain box, not an L
        if len(gis) == len(xs) - 1 or len(gjs) == len(ys) - 1:
            raise PreconditionError("gap spans a full side; use a box")
        self.boxes = (a, b)
        self.axis = axis


class Shell:
    """Region between an outer box and a strictly contained cavity box."""

    __slots__ = ("outer", "cavity", "boxes")

    def __init__(self, outer: Box3, cavity: Box3):
        if not outer.contains(cavity):
            raise PreconditionError("cavity exceeds the outer box")
        if outer.ivals == cavity.ivals:
            raise PreconditionError("shell has no material")
        (ox0, ox1), (oy0, oy1), (oz0, oz1) = outer.ivals
        (cx0, cx1), (cy0, cy1), (cz0, cz1) = cavity.ivals
        slabs = []
        if ox0 < cx0:
            slabs.append(Box3((ox0, cx0), (oy0, oy1), (oz0, oz1)))
        if cx1 < ox1:
            slabs.append(Box3((cx1, ox1), (oy0, oy1), (oz0, oz1)))
        if oy0 < cy0:
            slabs.append(Box3((cx0, cx1), (oy0, cy0), (oz0, oz1)))
        if cy1 < oy1:
            slabs.append(Box3((cx0, cx1), (cy1, oy1), (oz0, oz1)))
        if oz0 < cz0:
            slabs.append(Box3((cx0, cx1), (cy0, cy1), (oz0, cz0)))
        if cz1 < oz1:
            slabs.append(Box3((cx0, cx1), (cy0, cy1), (cz1, oz1)))
        self.outer = outer
        self.cavity = cavity
        self.boxes = tuple(slabs)


# ---------------------------------------------------------------------------
# contact classification


class ContactClass:
    kind = "none"


@dataclass(frozen=True)
class Disjoint(ContactClass):
    kind = "disjoint"


@dataclass(frozen=True)
class PointContact(ContactClass):
    kind = "point"


@dataclass(frozen=True)
class SegmentContact(ContactClass):
    kind = "segment"
    length: Fraction = Fraction(0)


@dataclass(frozen=True)
class ProperContact(ContactClass):
    kind = "proper"
    area: Fraction = Fraction(0)


@dataclass(frozen=True)
class Overlap(ContactClass):
    kind = "overlap"
    witness: tuple = ()


def _box_meet(a: Box3, b: Box3):
    """Per-axis intersection intervals and the count of degenerate axes.

    Returns (ivals, zero_axes) or None when some axis misses entirely.
    """
    ivals = []
    zero = []
    for p in range(3):
        lo = max(a.ivals[p][0], b.ivals[p][0])
        hi = min(a.ivals[p][1], b.ivals[p][1])
        if lo > hi:
            return None
        if lo == hi:
            zero.append(p)
        ivals.append((lo, hi))
    return ivals, zero


def box_contact(a: Box3, b: Box3) -> ContactClass:
    """Exact contact class of two boxes."""
    met = _box_meet(a, b)
    if met is None:
        return Disjoint()
    ivals, zero = met
    if not zero:
        w = tuple((lo + hi) / 2 for lo, hi in ivals)
        return Overlap(witness=w)
    if len(zero) == 1:
        area = Fraction(1)
        for p in range(3):
            if p not in zero:
                area *= ivals[p][1] - ivals[p][0]
        return ProperContact(area=area)
    if len(zero) == 2:
        p = next(t for t in range(3) if t not in zero)
        return SegmentContact(length=ivals[p][1] - ivals[p][0])
    return PointContact()


def _boxes_of(shape) -> tuple:
    if isinstance(shape, Box3):
        return (shape,)
    return tuple(shape.boxes)


def contact(a, b) -> ContactClass:
    """Exact contact class of two shapes (Box3, LShape, or Shell).

    The shapes' own decompositions never count against each other; only
    cross-shape box pairs enter. Proper areas and segment lengths are measured
    on the union of the pieces, so an L meeting a box along both legs reports
    the combined area once.
    """
    best_overlap = None
    planes = {}
    lines = {}
    points = False
    for pa in _boxes_of(a):
        for pb in _boxes_of(b):
            met = _box_meet(pa, pb)
            if met is None:
                continue
            ivals, zero = met
            if not zero:
                w = tuple((lo + hi) / 2 for lo, hi in ivals)
                return Overlap(witness=w)
            if len(zero) == 1:
                ax = zero[0]
                coord = ivals[ax][0]
                p, q = [t for t in range(3) if t != ax]
                planes.setdefault((ax, coord), []).append((ivals[p], ivals[q]))
            elif len(zero) == 2:
                ax = next(t for t in range(3) if t not in zero)
                key = (ax, ivals[zero[0]][0], ivals[zero[1]][0], zero[0], zero[1])
                lines.setdefault(key, []).append(ivals[ax])
            else:
                points = True
    if planes:
        area = sum(_rect_union_area(rects) for rects in planes.values())
        if area > 0:
            return ProperContact(area=area)
        points = True
    if lines:
        length = sum(_seg_union_length(segs) for segs in lines.values())
        if length > 0:
            return SegmentContact(length=length)
        points = True
    if points:
        return PointContact()
    return Disjoint()


# ---------------------------------------------------------------------------
# representation-level verification


@dataclass
class ExpectedContacts:
    """What the representation must realize.

    proper: unordered id pairs that must meet in a ProperContact.
    nonempty: unordered id pairs that may meet in any class; a proper
        contact on such a pair is an upgrade, never a violation. Presence is
        checked only in incidence mode, where each listed pair must meet in a
        contact of positive dimension (segment or proper), and a segment or
        proper contact joining the two named roles on an UNLISTED pair is a
        violation (the incidence is an iff at dimension >= 1; isolated point
        touches are ignored both ways).
    incidence_roles: the ordered role pair the iff applies to.
    """

    proper: set = field(default_factory=set)
    nonempty: set = field(default_factory=set)
    incidence_roles: tuple = ("vertex", "face")

    @staticmethod
    def key(i, j):
        return (i, j) if str(i) <= str(j) else (j, i)


@dataclass
class VerifyReport:
    ok: bool
    violations: list
    contacts: list

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": list(self.violations), "contacts": [list(c) for c in self.contacts]}


def _measure_str(c: ContactClass) -> str:
    if isinstance(c, ProperContact):
        return f"area {format_rat(c.area)}"
    if isinstance(c, SegmentContact):
        return f"length {format_rat(c.length)}"
    if isinstance(c, Overlap):
        return "witness " + " ".join(format_rat(v) for v in c.witness)
    return ""


def _shape_span(shape):
    boxes = _boxes_of(shape)
    lo = min(b.x[0] for b in boxes)
    hi = max(b.x[1] for b in boxes)
    return lo, hi


def verify_representation(rep, expected: ExpectedContacts, mode: str = "exact-proper") -> VerifyReport:
    """Certify a representation against its expected contact structure.

    rep: an object with .shapes, each shape having .id, .role, and .solid (a
    Box3, LShape, or Shell), or a plain list of such shapes. Modes:

    exact-proper: every expected proper pair is ProperContact; any Overlap is
        a violation; a ProperContact on a pair listed in neither proper nor
        nonempty is a violation. Segment and point contacts between unlisted
        pairs pass.
    incidence: exact-proper plus the incidence iff between the two roles in
        expected.incidence_roles, taken at dimension >= 1: listed nonempty
        pairs must meet in a segment or proper contact; unlisted pairs of
        those roles must not, though point touches are ignored both ways.
    """
    if mode not in ("exact-proper", "incidence"):
        raise PreconditionError(f"unknown mode {mode!r}")
    shapes = list(rep.shapes) if hasattr(rep, "shapes") else list(rep)
    ids = [s.id for s in shapes]
    if len(set(ids)) != len(ids):
        raise PreconditionError("duplicate shape ids")
    by_id = {s.id: s for s in shapes}
    for i, j in list(expected.proper) + list(expected.nonempty):
        if i not in by_id or j not in by_id:
            raise PreconditionError(f"expected pair ({i},{j}) names a missing shape")

    violations = []
    contacts = []
    found = {}

    # x-sweep prefilter: only spans that overlap or touch get the exact test
    events = sorted(
        ((sp := _shape_span(s.solid))[0], sp[1], k) for k, s in enumerate(shapes)
    )
    active: list[tuple] = []
    for lo, hi, k in events:
        still = []
        for h2, k2 in active:
            if h2 >= lo:
                still.append((h2, k2))
                a, b = shapes[k2], shapes[k]
                c = contact(a.solid, b.solid)
                if c.kind != "disjoint":
                    key = ExpectedContacts.key(a.id, b.id)
                    found[key] = c
                    contacts.append((key[0], key[1], c.kind, _measure_str(c)))
        active = still
        active.append((hi, k))

    # a nonempty pair that turns out proper is never a violation; properness
    # there is a bonus (an upgraded contact), not a defect
    proper_ok = expected.proper | expected.nonempty
    for key, c in sorted(found.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))):
        i, j = key
        if c.kind == "overlap":
            violations.append(f"shapes {i} and {j} overlap ({_measure_str(c)})")
        elif c.kind == "proper" and key not in proper_ok:
            violations.append(f"unexpected proper contact between {i} and {j}")
    for key in sorted(expected.proper):
        c = found.get(key)
        if c is None or c.kind != "proper":
            got = c.kind if c is not None else "disjoint"
            violations.append(f"expected proper contact {key[0]}-{key[1]}, got {got}")
    if mode == "incidence":
        # the iff lives at dimension >= 1: corner touches carry no meaning
        # in either direction, so points neither satisfy a listed pair nor
        # indict an unlisted one
        ra, rb = expected.incidence_roles
        for key in sorted(expected.nonempty):
            c = found.get(key)
            if c is None:
                violations.append(f"expected nonempty contact {key[0]}-{key[1]}, got disjoint")
            elif c.kind == "point":
                violations.append(
                    f"expected contact of positive dimension {key[0]}-{key[1]}, got point"
                )
        allowed = expected.nonempty | expected.proper
        for key, c in sorted(found.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))):
            if c.kind == "point":
                continue
            roles = {by_id[key[0]].role, by_id[key[1]].role}
            if roles == {ra, rb} and key not in allowed:
                violations.append(
                    f"non-incident pair {key[0]}-{key[1]} intersects ({c.kind})"
                )

    contacts.sort(key=lambda t: (str(t[0]), str(t[1])))
    return VerifyReport(ok=not violations, violations=violations, contacts=contacts)


def grid_bounds(rep):
    """(lowest coordinate, highest coordinate, all integral) over all boxes."""
    shapes = list(rep.shapes) if hasattr(rep, "shapes") else list(rep)
    lo = hi = None
    integral = True
    for s in shapes:
        solid = s.solid if hasattr(s, "solid") else s
        for b in _boxes_of(solid):
            for a0, a1 in b.ivals:
                lo = a0 if lo is None or a0 < lo else lo
                hi = a1 if hi is None or a1 > hi else hi
                if a0.denominator != 1 or a1.denominator != 1:
                    integral = False
    if lo is None:
        raise PreconditionError("empty representation")
    return lo, hi, integral
