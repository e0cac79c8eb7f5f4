"""The oblique Wallace-Simson construction in the canonical frame.

Frame convention: the base point J is the origin, the circumcenter O is
(1, 0), the circumcircle Sigma is x^2 + y^2 - 2x = 0 (radius 1).  A vertex
with parameter p sits at (2, 2p)/(1 + p^2); the parameter is recoverable as
p = y/x.  One instance of the construction is Params(a, b, c, t): three
vertex parameters plus the similarity parameter t selecting the point Q on
the perpendicular bisector of JH.

The pipeline never solves a general quadratic: every second intersection is
taken against a known common point (Vieta), so a rational instance yields a
fully rational Scene.  The orthocentre and the altitudes are always computed
constructively from perpendiculars and intersections; the closed-form
variants live in :mod:`oblique_simson.verify` as audit material only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from . import geom
from .errors import (
    AllCoincident,
    BackendMismatch,
    ConstructionError,
    DegenerateTriangle,
    JEqualsH,
    NotCollinear,
    NotOnCircumcircle,
)
from .geom import Circle, Line, Point
from .numeric import EXACT, Backend, Scalar

VERTEX_ORDER = ("A", "B", "C")

POINT_NAMES = (
    "J", "O", "A", "B", "C", "H", "Q", "K",
    "A0", "B0", "C0", "X", "Y", "Z", "L", "M", "N",
)
LINE_NAMES = (
    "sideBC", "sideCA", "sideAB",
    "altA", "altB", "altC",
    "gwsLine",
    "imageSideB0C0", "imageSideC0A0", "imageSideA0B0",
)
CIRCLE_NAMES = ("Sigma", "Sigma0", "S", "cA", "cB", "cC")


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise ConstructionError(f"construction invariant failed: {what}")


@dataclass(frozen=True)
class Params:
    """One instance: vertex parameters a, b, c and similarity parameter t."""

    a: Scalar
    b: Scalar
    c: Scalar
    t: Scalar

    def __post_init__(self):
        pairs = (("a", self.a, "b", self.b), ("a", self.a, "c", self.c),
                 ("b", self.b, "c", self.c))
        be = self.a.backend
        for s in (self.b, self.c, self.t):
            if s.backend != be:
                raise BackendMismatch("all parameters must share one backend")
        for n1, v1, n2, v2 in pairs:
            if v1 == v2:
                raise DegenerateTriangle(f"degenerate triangle: {n1} = {n2}")

    @classmethod
    def make(cls, a, b, c, t, backend: Backend = EXACT) -> "Params":
        return cls(backend.scalar(a), backend.scalar(b),
                   backend.scalar(c), backend.scalar(t))

    @property
    def backend(self) -> Backend:
        return self.a.backend

    def vertex_parameter(self, vertex: str) -> Scalar:
        return {"A": self.a, "B": self.b, "C": self.c}[vertex]

    def other_parameters(self, vertex: str) -> Tuple[Scalar, Scalar]:
        return {
            "A": (self.b, self.c),
            "B": (self.c, self.a),
            "C": (self.a, self.b),
        }[vertex]


@dataclass(frozen=True)
class Similarity:
    """The direct similarity about J = (0,0) taking the orthocentre H to Q.

    As a matrix it is ((1/2, -t), (t, 1/2)): a rotation-dilation whose
    squared scale factor is (1 + 4 t^2) / 4.
    """

    t: Scalar

    def apply(self, p: Point) -> Point:
        return Point(p.x / 2 - self.t * p.y, self.t * p.x + p.y / 2)

    def scale_sq(self) -> Scalar:
        return (1 + 4 * self.t * self.t) / 4


@dataclass(frozen=True, eq=True)
class Scene:
    """Fully named output of one construction run."""

    params: Params
    points: Dict[str, Point]
    lines: Dict[str, Line]
    circles: Dict[str, Circle]
    flags: Tuple[str, ...]

    @property
    def backend(self) -> Backend:
        return self.params.backend


def origin_j(backend: Backend) -> Point:
    return geom.point(backend, 0, 0)


def circumcenter_o(backend: Backend) -> Point:
    return geom.point(backend, 1, 0)


def circumcircle_sigma(backend: Backend) -> Circle:
    """x^2 + y^2 - 2x = 0: center (1, 0), radius 1."""
    return Circle(backend.scalar(-2), backend.scalar(0), backend.scalar(0))


def vertex_point(p: Scalar) -> Point:
    """The circumcircle point (2, 2p) / (1 + p^2) for vertex parameter p."""
    den = 1 + p * p
    return Point(2 / den, 2 * p / den)


def apply_similarity(t: Scalar, p: Point) -> Point:
    return Similarity(t).apply(p)


def image_vertex(p: Scalar, t: Scalar) -> Point:
    """Image of the vertex with parameter p under the similarity."""
    return apply_similarity(t, vertex_point(p))


def perspector_k(t: Scalar) -> Point:
    """The common second intersection of every vertex-image line with Sigma.

    K = (8t^2, 4t) / (1 + 4t^2); independent of the vertex parameters, and
    equal to J itself at t = 0.
    """
    den = 1 + 4 * t * t
    return Point(8 * t * t / den, 4 * t / den)


def orthocenter_h(params: Params) -> Point:
    """Orthocentre of the parametrized triangle, built from two altitudes."""
    a_pt = vertex_point(params.a)
    b_pt = vertex_point(params.b)
    c_pt = vertex_point(params.c)
    return geom.orthocenter3(a_pt, b_pt, c_pt)


def q_point(h: Point, t: Scalar) -> Point:
    """Q = (h/2 - kt, k/2 + ht): the similarity image of H = (h, k).

    Q runs over the whole perpendicular bisector of JH as t varies; t = 0
    gives the midpoint of JH (the classical case).
    """
    if geom.points_equal(h, origin_j(h.backend)):
        raise JEqualsH("H coincides with J: perpendicular bisector undefined")
    return apply_similarity(t, h)


def vertex_circle(p: Scalar, t: Scalar) -> Circle:
    """Circle centered at the image vertex, through J (hence through the vertex)."""
    return geom.circle_center_through(image_vertex(p, t), origin_j(p.backend))


def side_line(vertex: str, params: Params) -> Line:
    """The triangle side opposite the named vertex."""
    q, r = params.other_parameters(vertex)
    return geom.line_through(vertex_point(q), vertex_point(r))


def altitude_line(vertex: str, params: Params) -> Line:
    """Altitude from the named vertex: perpendicular to the opposite side.

    Its normal direction is proportional to (q + r, -(1 - q r)) for the two
    opposite-vertex parameters q, r.
    """
    own = params.vertex_parameter(vertex)
    return geom.perpendicular_through(vertex_point(own), side_line(vertex, params))


def xyz_point(vertex: str, params: Params) -> Tuple[Point, bool]:
    """Second intersection of a vertex's altitude with its vertex circle.

    This is the single-valued route to the point where the altitude meets the
    circle S: the altitude meets the vertex circle at the vertex itself and at
    the wanted point.  The flag marks the tangency collapse (result = vertex).
    """
    own = params.vertex_parameter(vertex)
    return geom.second_line_circle(
        altitude_line(vertex, params),
        vertex_circle(own, params.t),
        vertex_point(own),
    )


def hagge_circle(params: Params) -> Circle:
    """Circle through the three altitude points X, Y, Z.

    By the theory it is centered at Q and passes through J and H; those
    incidences are asserted by build_scene and re-checked by the verifier.
    """
    x, _ = xyz_point("A", params)
    y, _ = xyz_point("B", params)
    z, _ = xyz_point("C", params)
    return geom.circle_through3(x, y, z)


_LMN_SOURCES = {"L": ("B", "C"), "M": ("C", "A"), "N": ("A", "B")}


def lmn_point(which: str, params: Params) -> Tuple[Point, bool]:
    """Second common point of two vertex circles, the known one being J.

    L comes from the circles of B and C, M from C and A, N from A and B.
    The flag marks the circles touching at J (result = J).
    """
    v1, v2 = _LMN_SOURCES[which]
    c1 = vertex_circle(params.vertex_parameter(v1), params.t)
    c2 = vertex_circle(params.vertex_parameter(v2), params.t)
    return geom.second_circle_circle(c1, c2, origin_j(params.backend))


def gws_line(l: Point, m: Point, n: Point) -> Line:
    """The line carrying three collinear points (at least two distinct).

    Raises NotCollinear if the points do not line up; on scenes built by this
    package that indicates an internal bug, never a valid configuration.
    """
    if not geom.collinear3(l, m, n):
        raise NotCollinear("L, M, N are not collinear")
    for p, q in ((l, m), (l, n), (m, n)):
        if not geom.points_equal(p, q):
            return geom.line_through(p, q)
    raise AllCoincident("all three points coincide; no unique line")


def double_simson_line(j: Point, p: Point, q: Point, r: Point) -> Line:
    """Line through the reflections of j in the three sides of triangle pqr.

    Requires j on the circumcircle of pqr; the returned line passes through
    the orthocentre of pqr (checked by the verifier, not here).
    """
    circ = geom.circle_through3(p, q, r)
    if not geom.on_circle(circ, j):
        raise NotOnCircumcircle("point is not on the circumcircle of the triangle")
    refs = [
        geom.reflect_in_line(j, geom.line_through(q, r)),
        geom.reflect_in_line(j, geom.line_through(r, p)),
        geom.reflect_in_line(j, geom.line_through(p, q)),
    ]
    if not geom.collinear3(*refs):
        raise NotCollinear("side reflections failed to line up")
    for u, v in ((refs[0], refs[1]), (refs[0], refs[2]), (refs[1], refs[2])):
        if not geom.points_equal(u, v):
            return geom.line_through(u, v)
    raise AllCoincident("all three reflections coincide")


def build_scene(params: Params) -> Scene:
    """Run the full construction and return the named Scene.

    Inline asserts cover the cheap identities (vertices and K on Sigma, the
    image circumcircle through J and K, S centered at Q through J and H, the
    vertex-image lines meeting at K); everything else is the verifier's job.
    """
    be = params.backend
    j = origin_j(be)
    o = circumcenter_o(be)
    sigma = circumcircle_sigma(be)

    verts = {v: vertex_point(params.vertex_parameter(v)) for v in VERTEX_ORDER}
    for v, pt in verts.items():
        _check(geom.on_circle(sigma, pt), f"vertex {v} off the circumcircle")

    h = orthocenter_h(params)
    if geom.points_equal(h, j):
        raise JEqualsH("H coincides with J")
    q = q_point(h, params.t)

    images = {v: apply_similarity(params.t, verts[v]) for v in VERTEX_ORDER}
    k = perspector_k(params.t)
    _check(geom.on_circle(sigma, k), "perspector off the circumcircle")

    flags: List[str] = []
    for v in VERTEX_ORDER:
        join = geom.line_through(verts[v], images[v])
        k_again, tangent = geom.second_line_circle(join, sigma, verts[v])
        _check(geom.points_equal(k_again, k), f"{v}{v}0 misses the perspector")
        if tangent:
            flags.append(f"tangent:{v}{v}0")

    sides = {v: side_line(v, params) for v in VERTEX_ORDER}
    alts = {v: altitude_line(v, params) for v in VERTEX_ORDER}
    for v in VERTEX_ORDER:
        _check(geom.on_line(alts[v], h), f"altitude {v} misses the orthocentre")

    circles_v = {v: vertex_circle(params.vertex_parameter(v), params.t)
                 for v in VERTEX_ORDER}

    xyz = {}
    for v, name in zip(VERTEX_ORDER, ("X", "Y", "Z")):
        pt, tangent = geom.second_line_circle(alts[v], circles_v[v], verts[v])
        xyz[name] = pt
        if tangent:
            flags.append(f"tangent:{name}")

    s_circle = geom.circle_through3(xyz["X"], xyz["Y"], xyz["Z"])
    _check(geom.points_equal(s_circle.center(), q), "S is not centered at Q")
    _check(geom.on_circle(s_circle, j), "S misses J")
    _check(geom.on_circle(s_circle, h), "S misses H")

    sigma0 = geom.circle_through3(images["A"], images["B"], images["C"])
    _check(geom.on_circle(sigma0, j), "image circumcircle misses J")
    _check(geom.on_circle(sigma0, k), "image circumcircle misses K")

    lmn = {}
    for name in ("L", "M", "N"):
        pt, tangent = lmn_point(name, params)
        lmn[name] = pt
        if tangent:
            flags.append(f"tangent:{name}")

    gws = gws_line(lmn["L"], lmn["M"], lmn["N"])

    points = {
        "J": j, "O": o,
        "A": verts["A"], "B": verts["B"], "C": verts["C"],
        "H": h, "Q": q, "K": k,
        "A0": images["A"], "B0": images["B"], "C0": images["C"],
        "X": xyz["X"], "Y": xyz["Y"], "Z": xyz["Z"],
        "L": lmn["L"], "M": lmn["M"], "N": lmn["N"],
    }
    lines = {
        "sideBC": sides["A"], "sideCA": sides["B"], "sideAB": sides["C"],
        "altA": alts["A"], "altB": alts["B"], "altC": alts["C"],
        "gwsLine": gws,
        "imageSideB0C0": geom.line_through(images["B"], images["C"]),
        "imageSideC0A0": geom.line_through(images["C"], images["A"]),
        "imageSideA0B0": geom.line_through(images["A"], images["B"]),
    }
    circles = {
        "Sigma": sigma, "Sigma0": sigma0, "S": s_circle,
        "cA": circles_v["A"], "cB": circles_v["B"], "cC": circles_v["C"],
    }
    return Scene(params=params, points=points, lines=lines, circles=circles,
                 flags=tuple(flags))


# -- frame normalization -----------------------------------------------------------


def _complex_mul(u: Point, v: Point) -> Point:
    return Point(u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x)


def _complex_div(u: Point, v: Point) -> Point:
    den = v.x * v.x + v.y * v.y
    return Point((u.x * v.x + u.y * v.y) / den, (u.y * v.x - u.x * v.y) / den)


@dataclass(frozen=True)
class FrameTransform:
    """Similarity w -> (w - origin) / unit mapping a configuration to the
    canonical frame; from_canonical is the recorded inverse."""

    origin: Point
    unit: Point

    def to_canonical(self, p: Point) -> Point:
        return _complex_div(Point(p.x - self.origin.x, p.y - self.origin.y), self.unit)

    def from_canonical(self, p: Point) -> Point:
        w = _complex_mul(p, self.unit)
        return Point(w.x + self.origin.x, w.y + self.origin.y)

    @property
    def identity(self) -> bool:
        be = self.origin.backend
        return geom.points_equal(self.origin, geom.point(be, 0, 0)) and \
            geom.points_equal(self.unit, geom.point(be, 1, 0))


@dataclass(frozen=True)
class NormalizedFrame:
    """Vertex parameters of an arbitrary triangle plus the frame transform."""

    a: Scalar
    b: Scalar
    c: Scalar
    transform: FrameTransform

    def params(self, t) -> Params:
        be = self.a.backend
        return Params(self.a, self.b, self.c, be.scalar(t))


def normalize_frame(a_pt: Point, b_pt: Point, c_pt: Point, j_pt: Point) -> NormalizedFrame:
    """Map an arbitrary triangle with circumcircle point J' to the canonical frame.

    The circumcenter goes to (1, 0) and J' to the origin; vertex parameters
    are read off as y/x of each mapped vertex.  J' must be on the circumcircle
    and distinct from every vertex.
    """
    if geom.collinear3(a_pt, b_pt, c_pt):
        raise DegenerateTriangle("triangle vertices are collinear")
    for name, v in (("A", a_pt), ("B", b_pt), ("C", c_pt)):
        if geom.points_equal(v, j_pt):
            raise DegenerateTriangle(
                f"J coincides with vertex {name}: parameter undefined")
    bis_ab = geom.perpendicular_through(geom.midpoint(a_pt, b_pt),
                                        geom.line_through(a_pt, b_pt))
    bis_ac = geom.perpendicular_through(geom.midpoint(a_pt, c_pt),
                                        geom.line_through(a_pt, c_pt))
    center = geom.intersect_lines(bis_ab, bis_ac)
    if geom.dist_sq(j_pt, center) != geom.dist_sq(a_pt, center):
        raise NotOnCircumcircle("J is not on the circumcircle of the triangle")
    unit = Point(center.x - j_pt.x, center.y - j_pt.y)
    transform = FrameTransform(origin=j_pt, unit=unit)
    out: List[Scalar] = []
    for v in (a_pt, b_pt, c_pt):
        m = transform.to_canonical(v)
        out.append(m.y / m.x)
    return NormalizedFrame(a=out[0], b=out[1], c=out[2], transform=transform)
