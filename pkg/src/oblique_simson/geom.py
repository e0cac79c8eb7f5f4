"""Backend-generic planar primitives: lines, circles and their constructions.

Everything here is square-root-free.  Lines are stored as ax + by + c = 0,
circles in general form x^2 + y^2 + dx + ey + f = 0, and every "second
intersection" is recovered from a known common point via Vieta's relation on
the restricted quadratic, so exact-rational inputs give exact-rational
outputs throughout.

On the exact backend lines are canonical: integer coefficients with content 1
and the first nonzero of (a, b) positive, so equal lines compare equal
field-by-field.  On the float backend lines are scaled to unit normal with
the analogous sign rule, and all zero tests use the backend tolerance scaled
by the magnitude of the participating entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import (
    CoincidentPoints,
    CollinearPoints,
    ConstructionError,
    GeometryError,
    IdenticalCircles,
    KnownPointNotIncident,
    NoRadicalLine,
    ParallelLines,
    ZeroRadius,
)
from .numeric import Backend, Scalar, is_zero, scalars_equal


@dataclass(frozen=True, eq=True)
class Point:
    x: Scalar
    y: Scalar

    @property
    def backend(self) -> Backend:
        return self.x.backend

    def __repr__(self) -> str:
        return f"Point({self.x.value}, {self.y.value})"


@dataclass(frozen=True, eq=True)
class Line:
    """ax + by + c = 0 with (a, b) != (0, 0); build via make_line."""

    a: Scalar
    b: Scalar
    c: Scalar

    @property
    def backend(self) -> Backend:
        return self.a.backend

    def __repr__(self) -> str:
        return f"Line({self.a.value}, {self.b.value}, {self.c.value})"


@dataclass(frozen=True, eq=True)
class Circle:
    """x^2 + y^2 + dx + ey + f = 0 with positive discriminant d^2+e^2-4f."""

    d: Scalar
    e: Scalar
    f: Scalar

    @property
    def backend(self) -> Backend:
        return self.d.backend

    def center(self) -> Point:
        return Point(-self.d / 2, -self.e / 2)

    def radius_sq(self) -> Scalar:
        return (self.d * self.d + self.e * self.e) / 4 - self.f

    def __repr__(self) -> str:
        return f"Circle({self.d.value}, {self.e.value}, {self.f.value})"


@dataclass(frozen=True)
class DirectedTan:
    """Tangent of a directed angle between lines, mod pi; may be infinite."""

    value: Optional[Scalar]
    infinite: bool = False

    @classmethod
    def of(cls, value: Scalar) -> "DirectedTan":
        return cls(value=value, infinite=False)

    @classmethod
    def infinity(cls) -> "DirectedTan":
        return cls(value=None, infinite=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedTan):
            return NotImplemented
        if self.infinite or other.infinite:
            return self.infinite and other.infinite
        return self.value == other.value

    def __repr__(self) -> str:
        return "DirectedTan(inf)" if self.infinite else f"DirectedTan({self.value.value})"


# -- factories -----------------------------------------------------------------


def point(backend: Backend, x, y) -> Point:
    return Point(backend.scalar(x), backend.scalar(y))


def make_line(a: Scalar, b: Scalar, c: Scalar) -> Line:
    """Canonicalize coefficients and build a Line; (a,b) must not both vanish."""
    if is_zero(a) and is_zero(b):
        raise GeometryError("line coefficients degenerate: a = b = 0")
    backend = a.backend
    if backend.exact:
        lcm = math.lcm(a.value.denominator, b.value.denominator, c.value.denominator)
        ia, ib, ic = (int(v.value * lcm) for v in (a, b, c))
        g = math.gcd(ia, ib, ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        return Line(backend.scalar(ia), backend.scalar(ib), backend.scalar(ic))
    norm = math.hypot(float(a), float(b))
    fa, fb, fc = float(a) / norm, float(b) / norm, float(c) / norm
    lead = fa if abs(fa) > backend.eps_abs else fb
    if lead < 0:
        fa, fb, fc = -fa, -fb, -fc
    return Line(backend.scalar(fa), backend.scalar(fb), backend.scalar(fc))


def make_circle(d: Scalar, e: Scalar, f: Scalar) -> Circle:
    """Validate the proper-circle discriminant and build a Circle."""
    disc = d * d + e * e - 4 * f
    if not disc > 0:
        raise GeometryError("not a proper circle: d^2 + e^2 - 4f <= 0")
    return Circle(d, e, f)


# -- incidence helpers -----------------------------------------------------------


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def dist_sq(p: Point, q: Point) -> Scalar:
    dx, dy = p.x - q.x, p.y - q.y
    return dx * dx + dy * dy


def line_eval(l: Line, p: Point) -> Scalar:
    return l.a * p.x + l.b * p.y + l.c


def on_line(l: Line, p: Point) -> bool:
    return is_zero(line_eval(l, p), (l.a * p.x, l.b * p.y, l.c))


def circle_eval(c: Circle, p: Point) -> Scalar:
    return p.x * p.x + p.y * p.y + c.d * p.x + c.e * p.y + c.f


def on_circle(c: Circle, p: Point) -> bool:
    return is_zero(circle_eval(c, p), (p.x * p.x, p.y * p.y, c.d * p.x, c.e * p.y, c.f))


def points_equal(p: Point, q: Point) -> bool:
    return scalars_equal(p.x, q.x) and scalars_equal(p.y, q.y)


# -- constructions ----------------------------------------------------------------


def line_through(p: Point, q: Point) -> Line:
    """The line through two distinct points."""
    if points_equal(p, q):
        raise CoincidentPoints(f"no unique line through coincident points {p}")
    a = p.y - q.y
    b = q.x - p.x
    c = p.x * q.y - q.x * p.y
    return make_line(a, b, c)


def perpendicular_through(p: Point, l: Line) -> Line:
    """The perpendicular to l through p (well-defined even for p on l)."""
    a, b = l.b, -l.a
    return make_line(a, b, -(a * p.x + b * p.y))


def foot_perpendicular(p: Point, l: Line) -> Point:
    """Orthogonal projection of p onto l."""
    k = line_eval(l, p) / (l.a * l.a + l.b * l.b)
    return Point(p.x - k * l.a, p.y - k * l.b)


def reflect_in_line(p: Point, l: Line) -> Point:
    """Mirror image of p in l; an involution fixing exactly the points of l."""
    foot = foot_perpendicular(p, l)
    return Point(2 * foot.x - p.x, 2 * foot.y - p.y)


def intersect_lines(l1: Line, l2: Line) -> Point:
    """The unique common point of two non-parallel lines."""
    det = l1.a * l2.b - l2.a * l1.b
    if is_zero(det, (l1.a * l2.b, l2.a * l1.b)):
        raise ParallelLines("lines are parallel or identical")
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l1.c * l2.a - l2.c * l1.a) / det
    return Point(x, y)


def circle_through3(p: Point, q: Point, r: Point) -> Circle:
    """The circumcircle of three non-collinear points.

    Solves the 2x2 linear system obtained by subtracting the circle equation
    pairwise (eliminating f), then recovers f from the first point.
    """
    if collinear3(p, q, r):
        raise CollinearPoints("no circle through collinear (or repeated) points")
    s1 = p.x * p.x + p.y * p.y
    s2 = q.x * q.x + q.y * q.y
    s3 = r.x * r.x + r.y * r.y
    # d*(x1-x2) + e*(y1-y2) = s2 - s1, and similarly for (p, r)
    a11, a12, b1 = p.x - q.x, p.y - q.y, s2 - s1
    a21, a22, b2 = p.x - r.x, p.y - r.y, s3 - s1
    det = a11 * a22 - a21 * a12
    d = (b1 * a22 - b2 * a12) / det
    e = (a11 * b2 - a21 * b1) / det
    f = -(s1 + d * p.x + e * p.y)
    return make_circle(d, e, f)


def circle_center_through(center: Point, p: Point) -> Circle:
    """The circle with the given center passing through p."""
    if points_equal(center, p):
        raise ZeroRadius("circle through its own center has zero radius")
    r_sq = dist_sq(center, p)
    d = -2 * center.x
    e = -2 * center.y
    f = center.x * center.x + center.y * center.y - r_sq
    return make_circle(d, e, f)


def radical_line(c1: Circle, c2: Circle) -> Line:
    """The radical axis of two distinct circles.

    Obtained by subtracting the two general-form equations; it contains every
    common point and is perpendicular to the line of centers.
    """
    d, e, f = c1.d - c2.d, c1.e - c2.e, c1.f - c2.f
    if is_zero(d, (c1.d, c2.d)) and is_zero(e, (c1.e, c2.e)):
        if is_zero(f, (c1.f, c2.f)):
            raise IdenticalCircles("radical line of identical circles is undefined")
        raise NoRadicalLine("concentric distinct circles have no radical line")
    return make_line(d, e, f)


def second_line_circle(l: Line, c: Circle, known: Point) -> Tuple[Point, bool]:
    """The other intersection of l and c, given one known common point.

    Uses Vieta's relation on the restricted quadratic, so the result is
    rational whenever the inputs are.  If l is tangent to c at the known
    point the known point itself is returned with the tangency flag set.
    """
    if not on_line(l, known):
        raise KnownPointNotIncident("known point is not on the line")
    if not on_circle(c, known):
        raise KnownPointNotIncident("known point is not on the circle")
    a, b = l.a, l.b
    # eliminate the variable with the larger coefficient magnitude
    if abs(b) >= abs(a):
        # substitute y = -(a x + c)/b: (a^2+b^2) x^2 + (2ac + d b^2 - e a b) x + ... = 0
        sum_roots = -(2 * a * l.c + c.d * b * b - c.e * a * b) / (a * a + b * b)
        x1 = sum_roots - known.x
        y1 = -(a * x1 + l.c) / b
    else:
        sum_roots = -(2 * b * l.c + c.e * a * a - c.d * a * b) / (a * a + b * b)
        y1 = sum_roots - known.y
        x1 = -(b * y1 + l.c) / a
    other = Point(x1, y1)
    if points_equal(other, known):
        return known, True
    return other, False


def second_circle_circle(c1: Circle, c2: Circle, known: Point) -> Tuple[Point, bool]:
    """The other common point of two circles through a known common point.

    Reduces to the radical axis and the second line-circle intersection;
    the tangency flag is set when the circles touch at the known point.
    """
    rad = radical_line(c1, c2)
    return second_line_circle(rad, c1, known)


# -- predicates ---------------------------------------------------------------------


def collinear3(p: Point, q: Point, r: Point) -> bool:
    """Whether the 3x3 homogeneous determinant of the three points vanishes."""
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    entries = (p.x, p.y, q.x, q.y, r.x, r.y)
    return is_zero(det, entries)


def concyclic4(p: Point, q: Point, r: Point, s: Point) -> bool:
    """Whether the standard 4x4 concyclicity determinant vanishes.

    Rows are (x, y, x^2 + y^2, 1); collinear triples count as concyclic
    (circle through infinity), matching the determinant convention.
    """
    rows = []
    for pt_ in (p, q, r, s):
        rows.append((pt_.x, pt_.y, pt_.x * pt_.x + pt_.y * pt_.y))
    det = _det4_homogeneous(rows)
    entries = [v for row in rows for v in row]
    return is_zero(det, entries)


def _det3(
    r0: Tuple[Scalar, Scalar, Scalar],
    r1: Tuple[Scalar, Scalar, Scalar],
    r2: Tuple[Scalar, Scalar, Scalar],
) -> Scalar:
    return (
        r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
        - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
    )


def _det4_homogeneous(rows) -> Scalar:
    # | x y s 1 | expanded along the all-ones column by row subtraction
    r0, r1, r2, r3 = rows
    d1 = tuple(r1[i] - r0[i] for i in range(3))
    d2 = tuple(r2[i] - r0[i] for i in range(3))
    d3 = tuple(r3[i] - r0[i] for i in range(3))
    return _det3(d1, d2, d3)


def directed_tan(l1: Line, l2: Line) -> DirectedTan:
    """Tangent of the directed angle from l1 to l2, working mod pi.

    Equals (a1 b2 - a2 b1) / (a1 a2 + b1 b2); infinite iff the lines are
    perpendicular.  Invariant under rescaling of either line's coefficients
    and independent of line orientation.
    """
    num = l1.a * l2.b - l2.a * l1.b
    den = l1.a * l2.a + l1.b * l2.b
    if is_zero(den, (l1.a * l2.a, l1.b * l2.b)):
        return DirectedTan.infinity()
    return DirectedTan.of(num / den)


def orthocenter3(p: Point, q: Point, r: Point) -> Point:
    """Orthocentre of a proper triangle, as the meet of two altitudes.

    Incidence with the third altitude is verified; its failure would indicate
    broken arithmetic (or an intolerably ill-conditioned float instance).
    """
    if collinear3(p, q, r):
        raise CollinearPoints("orthocentre of collinear points is undefined")
    alt_p = perpendicular_through(p, line_through(q, r))
    alt_q = perpendicular_through(q, line_through(r, p))
    h = intersect_lines(alt_p, alt_q)
    alt_r = perpendicular_through(r, line_through(p, q))
    if not on_line(alt_r, h):
        raise ConstructionError("orthocentre failed third-altitude incidence")
    return h


def lines_equal(l1: Line, l2: Line) -> bool:
    """Equality of canonical line values (coefficient-wise on the backend)."""
    return (
        scalars_equal(l1.a, l2.a)
        and scalars_equal(l1.b, l2.b)
        and scalars_equal(l1.c, l2.c)
    )


def circles_equal(c1: Circle, c2: Circle) -> bool:
    return (
        scalars_equal(c1.d, c2.d)
        and scalars_equal(c1.e, c2.e)
        and scalars_equal(c1.f, c2.f)
    )
