"""Upper half-plane primitives.

Real Mobius transformations, horoball-decorated cusps, geodesics, truncated
distances between horoballs and lambda-lengths, axes of hyperbolic elements
and the one-parameter translation flow along an axis.

Conventions used throughout:

* the boundary circle is R together with the single point ``INFINITY``;
* a horoball at a finite base point is recorded by its Euclidean diameter,
  a horoball at infinity by the Euclidean height of its boundary line;
* truncated distances are signed: overlapping horoballs give negative values.
"""

from __future__ import annotations

import cmath
import math

INFINITY = math.inf

DET_DRIFT = 1e-12


class HalfPlaneError(ValueError):
    pass


class NotHyperbolicError(HalfPlaneError):
    """Raised when an axis is requested for a non-hyperbolic element."""


def _is_inf(z) -> bool:
    return z == INFINITY


class MobiusMap:
    """Orientation-preserving isometry z -> (az + b)/(cz + d), ad - bc = 1.

    Entries are kept real with determinant renormalized to 1 whenever the
    drift after a composition exceeds ``DET_DRIFT``.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: float, b: float, c: float, d: float):
        det = a * d - b * c
        if det <= 0.0:
            raise HalfPlaneError(f"determinant {det} is not positive")
        if abs(det - 1.0) > DET_DRIFT:
            s = math.sqrt(det)
            a, b, c, d = a / s, b / s, c / s, d / s
        self.a, self.b, self.c, self.d = float(a), float(b), float(c), float(d)

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1.0, 0.0, 0.0, 1.0)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """Return self o other (apply ``other`` first)."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return self.compose(other)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def trace(self) -> float:
        return self.a + self.d

    def __call__(self, z):
        """Act on a boundary point (float or INFINITY) or an interior complex point."""
        if _is_inf(z):
            if self.c == 0.0:
                return INFINITY
            return self.a / self.c
        den = self.c * z + self.d
        if isinstance(z, complex):
            return (self.a * z + self.b) / den
        if den == 0.0:
            return INFINITY
        return (self.a * z + self.b) / den

    def __repr__(self):
        return f"MobiusMap({self.a}, {self.b}, {self.c}, {self.d})"


class DecoratedCusp:
    """A boundary point together with a tangent horoball.

    ``size`` is the Euclidean diameter of the horoball for a finite base
    point and the Euclidean height of the horoball boundary when the base
    point is INFINITY.
    """

    __slots__ = ("base", "size")

    def __init__(self, base, size: float):
        if size <= 0.0:
            raise HalfPlaneError(f"horoball size must be positive, got {size}")
        if not _is_inf(base):
            base = float(base)
        self.base = base
        self.size = float(size)

    def __repr__(self):
        return f"DecoratedCusp({self.base}, {self.size})"


class Geodesic:
    """Complete geodesic recorded by its two distinct ideal endpoints."""

    __slots__ = ("u", "v")

    def __init__(self, u, v):
        if u == v:
            raise HalfPlaneError("geodesic endpoints must be distinct")
        self.u, self.v = u, v

    def __repr__(self):
        return f"Geodesic({self.u}, {self.v})"


def apply_mobius(m: MobiusMap, cusp: DecoratedCusp) -> DecoratedCusp:
    """Transform a decorated cusp; horoballs map to horoballs exactly.

    A horoball at infinity of height H maps, when c != 0, to a horoball at
    a/c of diameter 1/(c^2 H); the finite-base rule follows by conjugation
    and equals scaling the diameter by |m'(base)|.
    """
    if _is_inf(cusp.base):
        if m.c == 0.0:
            # z -> (a/d) (z + b/a) scales heights by a/d = a^2
            return DecoratedCusp(INFINITY, (m.a / m.d) * cusp.size)
        return DecoratedCusp(m.a / m.c, 1.0 / (m.c * m.c * cusp.size))
    t = m.c * cusp.base + m.d
    if t == 0.0:
        return DecoratedCusp(INFINITY, (m.a * cusp.base + m.b) ** 2 / cusp.size)
    return DecoratedCusp(m(cusp.base), cusp.size / (t * t))


def truncated_length(c1: DecoratedCusp, c2: DecoratedCusp) -> float:
    """Signed hyperbolic length of the geodesic arc between two horoballs.

    The geodesic joining the two base points meets both horocycles
    orthogonally; the returned value is the length of the segment between
    the two crossings, negative when the horoballs overlap.
    """
    if c1.base == c2.base:
        raise HalfPlaneError("cusps share the same base point")
    if _is_inf(c1.base):
        c1, c2 = c2, c1
    if _is_inf(c2.base):
        return math.log(c2.size / c1.size)
    gap = c1.base - c2.base
    return math.log(gap * gap / (c1.size * c2.size))


def lambda_length(c1: DecoratedCusp, c2: DecoratedCusp) -> float:
    """exp(truncated_length / 2); satisfies the Ptolemy relation on quadruples."""
    return math.exp(0.5 * truncated_length(c1, c2))


def fixed_points(m: MobiusMap):
    """Boundary fixed points of m, ordered (repelling, attracting) when hyperbolic."""
    tr = m.trace()
    disc = tr * tr - 4.0
    if disc <= 0.0:
        raise NotHyperbolicError(f"|trace| = {abs(tr)} <= 2")
    if m.c == 0.0:
        finite = m.b / (m.d - m.a) if m.a != m.d else INFINITY
        other = INFINITY
        # z -> a^2 z + ab: infinity attracts iff |a| > 1
        if abs(m.a) > 1.0:
            return finite, other
        return other, finite
    root = math.sqrt(disc)
    z1 = (m.a - m.d + root) / (2.0 * m.c)
    z2 = (m.a - m.d - root) / (2.0 * m.c)
    # attracting fixed point has |m'(z)| = 1/(cz + d)^2 < 1
    if abs(m.c * z1 + m.d) > 1.0:
        return z2, z1
    return z1, z2


def axis_and_translation_length(m: MobiusMap):
    """Axis (oriented repelling -> attracting) and translation length of m."""
    rep, att = fixed_points(m)
    tr = abs(m.trace())
    return Geodesic(rep, att), 2.0 * math.acosh(tr / 2.0)


def _frame_to_axis(rep, att) -> MobiusMap:
    """Mobius map sending (0, infinity) to (rep, att)."""
    if _is_inf(att):
        # columns: (1, 0) -> infinity, (rep, 1) -> rep
        return MobiusMap(1.0, rep, 0.0, 1.0)
    if _is_inf(rep):
        return MobiusMap(att, -1.0, 1.0, 0.0)
    gap = att - rep
    s = 1.0 / math.sqrt(abs(gap))
    if gap > 0:
        return MobiusMap(att * s, rep * s, s, s)
    return MobiusMap(att * s, -rep * s, s, -s)


def translation_along_axis(m: MobiusMap, t: float) -> MobiusMap:
    """Hyperbolic translation by t along the axis of m, in the direction of m.

    Satisfies the one-parameter group law and reproduces m (up to sign in
    SL(2,R)) at t equal to the translation length of m.
    """
    rep, att = fixed_points(m)
    frame = _frame_to_axis(rep, att)
    e = math.exp(0.5 * t)
    core = MobiusMap(e, 0.0, 0.0, 1.0 / e)
    return frame @ core @ frame.inverse()


def scaled_translation_along_axis(m: MobiusMap, t: float):
    """Translation along the axis of m as (matrix entries, log-scale).

    Returns ((a, b, c, d), sigma) with the actual map exp(sigma) * (a b; c d),
    safe for amplitudes t far beyond floating-point range of exp(t/2).
    """
    rep, att = fixed_points(m)
    f = _frame_to_axis(rep, att)
    g = f.inverse()
    # f @ diag(e^{t/2}, e^{-t/2}) @ g = e^{t/2} * (f @ diag(1, e^{-t}) @ g)
    w = math.exp(-t) if t >= 0 else 0.0
    if t < 0:
        # factor out e^{-t/2} instead to keep entries bounded
        w = math.exp(t)
        core = ((w, 0.0), (0.0, 1.0))
        sigma = -0.5 * t
    else:
        core = ((1.0, 0.0), (0.0, w))
        sigma = 0.5 * t
    fa, fb, fc, fd = f.a, f.b, f.c, f.d
    ga, gb, gc, gd = g.a, g.b, g.c, g.d
    m00 = fa * core[0][0] * ga + fb * core[1][1] * gc
    m01 = fa * core[0][0] * gb + fb * core[1][1] * gd
    m10 = fc * core[0][0] * ga + fd * core[1][1] * gc
    m11 = fc * core[0][0] * gb + fd * core[1][1] * gd
    return (m00, m01, m10, m11), sigma


def mobius_to_zero_one_infinity(z1, z2, z3) -> MobiusMap:
    """The Mobius map sending the distinct boundary points (z1, z2, z3) to (0, 1, infinity).

    The triple must be positively oriented on the boundary circle, otherwise
    no orientation-preserving such map exists and HalfPlaneError is raised.
    """
    if len({z1, z2, z3}) != 3:
        raise HalfPlaneError("points must be pairwise distinct")
    if _is_inf(z1):
        m = MobiusMap(0.0, z2 - z3, 1.0, -z3)
    elif _is_inf(z2):
        m = MobiusMap(1.0, -z1, 1.0, -z3)
    elif _is_inf(z3):
        m = MobiusMap(1.0 / (z2 - z1), -z1 / (z2 - z1), 0.0, 1.0)
    else:
        m = MobiusMap(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))
    return m


def map_to_zero_infinity(u, v) -> MobiusMap:
    """An orientation-preserving map with u -> 0 and v -> infinity (any u != v)."""
    if u == v:
        raise HalfPlaneError("endpoints must be distinct")
    if _is_inf(v):
        return MobiusMap(1.0, -u, 0.0, 1.0)
    if _is_inf(u):
        return MobiusMap(0.0, -1.0, 1.0, -v)
    g = u - v
    return MobiusMap(1.0 / g, -u / g, 1.0, -v)


def geodesic_midpoint(side_u, side_v, apex) -> complex:
    """Foot of the perpendicular from the ideal point ``apex`` onto geodesic (side_u, side_v).

    This is the tangency point of the horocyclic inscribed triple of the
    ideal triangle (side_u, side_v, apex) on the side (side_u, side_v).
    """
    m = map_to_zero_infinity(side_u, side_v)
    w = m(apex)
    # side is now the axis (0, infinity); the foot under apex w is i|w|
    return m.inverse()(complex(0.0, abs(w)))


def point_to_horoball_distance(z: complex, cusp: DecoratedCusp) -> float:
    """Signed distance from an interior point to a horoball (negative inside)."""
    if _is_inf(cusp.base):
        return math.log(cusp.size / z.imag)
    w = -1.0 / (z - cusp.base)
    # horoball at base, diameter s, maps to height 1/s at infinity
    return math.log((1.0 / cusp.size) / w.imag)


def hyperbolic_distance(z1: complex, z2: complex) -> float:
    """Distance between interior points of the upper half-plane."""
    d2 = abs(z1 - z2) ** 2
    return math.acosh(1.0 + d2 / (2.0 * z1.imag * z2.imag))
