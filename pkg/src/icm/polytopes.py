"""The integral polytope group, its 2D basis, and the map onto ideal classes.

Polytopes are stored by their exact vertex sets.  Group elements are formal
differences of translation classes; ideal classes are formal fractions of
integrally closed monomial ideals modulo monomial factors.  The 2D basis
consists of primitive segments and their shadows (right triangles), and
decomposition works on the counterclockwise edge-vector multiset, which is
additive under Minkowski sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DimensionMismatchError
from .feasibility import convex_combination_exists
from .ideals import (MonomialIdeal, colon, minimalize, normalize_translation,
                     translate, unit_ideal)
from .monoid import star
from .newton import integral_closure


@dataclass(frozen=True)
class IntegralPolytope:
    dim: int
    verts: tuple  # sorted tuple of integer points; exactly the vertex set

    def __post_init__(self):
        if not self.verts:
            raise ValueError("a polytope needs at least one vertex")
        for v in self.verts:
            if len(v) != self.dim:
                raise DimensionMismatchError(
                    f"vertex {v} has length {len(v)}, expected {self.dim}")


def _hull_2d(points):
    """Monotone chain; returns the ccw vertex cycle with collinear points
    dropped (strict turns only)."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) == 2 and cycle[0] == cycle[1]:  # degenerate segment
        return [min(pts), max(pts)]
    return cycle


def hull(points, dim):
    """Vertex set of conv(points), exactly.

    A point is a vertex iff it is not a rational convex combination of the
    other points; in 2D the monotone chain decides this directly.
    """
    pts = sorted(set(map(tuple, points)))
    if not pts:
        raise ValueError("cannot take the hull of an empty point set")
    for p in pts:
        if len(p) != dim:
            raise DimensionMismatchError(
                f"point {p} has length {len(p)}, expected {dim}")
    if dim == 1:
        verts = {min(pts), max(pts)}
    elif dim == 2:
        verts = set(_hull_2d(pts))
    else:
        verts = {p for i, p in enumerate(pts)
                 if not convex_combination_exists(pts[:i] + pts[i + 1:], p)}
    return IntegralPolytope(dim, tuple(sorted(verts)))


def ccw_cycle(P):
    """Vertices of a 2D polytope in counterclockwise order."""
    if P.dim != 2:
        raise DimensionMismatchError("ccw cycle is a 2D notion")
    return _hull_2d(P.verts)


def p_mink_sum(P, Q):
    """Minkowski sum of bounded polytopes."""
    if P.dim != Q.dim:
        raise DimensionMismatchError(f"dimensions differ: {P.dim} vs {Q.dim}")
    return hull({tuple(a + b for a, b in zip(p, q))
                 for p in P.verts for q in Q.verts}, P.dim)


def translate_polytope(P, shift):
    return IntegralPolytope(P.dim, tuple(sorted(
        tuple(a + b for a, b in zip(v, shift)) for v in P.verts)))


def normalize_polytope(P):
    """Translate so the componentwise minimum of the vertices is 0."""
    m = tuple(min(v[k] for v in P.verts) for k in range(P.dim))
    return translate_polytope(P, tuple(-x for x in m))


def point_polytope(dim):
    return IntegralPolytope(dim, ((0,) * dim,))


def height(P):
    """Minimum last coordinate over the vertices."""
    return min(v[-1] for v in P.verts)


def shadow(P):
    """conv(P together with P projected down to its own height)."""
    h = height(P)
    proj = {v[:-1] + (h,) for v in P.verts}
    return hull(set(P.verts) | proj, P.dim)


@dataclass(frozen=True)
class PolytopeGroupElement:
    """Formal difference [pos] - [neg] of translation classes."""
    pos: IntegralPolytope
    neg: IntegralPolytope

    def __post_init__(self):
        if self.pos.dim != self.neg.dim:
            raise DimensionMismatchError("pos and neg must share a dimension")

    @property
    def dim(self):
        return self.pos.dim


def group_element(pos, neg=None):
    if neg is None:
        neg = point_polytope(pos.dim)
    return PolytopeGroupElement(normalize_polytope(pos), normalize_polytope(neg))


def group_add(a, b):
    return group_element(p_mink_sum(a.pos, b.pos), p_mink_sum(a.neg, b.neg))


def group_negate(a):
    return group_element(a.neg, a.pos)


def class_equal(a, b):
    """Grothendieck equality: pos_a + neg_b is a translate of pos_b + neg_a."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimensions differ: {a.dim} vs {b.dim}")
    left = normalize_polytope(p_mink_sum(a.pos, b.neg))
    right = normalize_polytope(p_mink_sum(b.pos, a.neg))
    return left.verts == right.verts


# ---------------------------------------------------------------------------
# 2D basis: primitive segments and their shadow triangles


def _primitive(v):
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g), g


def _upper_half(v):
    """Canonical representative of {v, -v}: second coordinate positive, or
    zero second coordinate with positive first."""
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return v
    return (-v[0], -v[1])


@dataclass(frozen=True)
class BasisElement:
    kind: str  # "segment" | "triangle"
    v: tuple   # primitive direction, upper-half normalized

    def polytope(self):
        if self.kind == "segment":
            return basis_segment(self.v)
        return basis_triangle(self.v)

    def __repr__(self):
        return f"{self.kind.capitalize()}({self.v[0]},{self.v[1]})"


def _check_primitive_upper(v):
    v = tuple(v)
    if len(v) != 2:
        raise DimensionMismatchError("basis directions live in Z^2")
    if v == (0, 0):
        raise ValueError("the zero vector is not a basis direction")
    if gcd(abs(v[0]), abs(v[1])) != 1:
        raise ValueError(f"direction {v} is not primitive")
    if _upper_half(v) != v:
        raise ValueError(f"direction {v} is not upper-half normalized")
    return v


def basis_segment(v):
    """conv{0, v} for a primitive upper-half direction v."""
    v = _check_primitive_upper(v)
    return hull({(0, 0), v}, 2)


def basis_triangle(v):
    """The shadow of conv{0, v}, translation-normalized; needs both
    coordinates nonzero, otherwise the shadow stays 1-dimensional."""
    v = _check_primitive_upper(v)
    if v[0] == 0 or v[1] == 0:
        raise ValueError(f"shadow of segment {v} is degenerate, not a triangle")
    return normalize_polytope(shadow(hull({(0, 0), v}, 2)))


def edge_vector_counts(P):
    """Lattice lengths of the ccw boundary edges, keyed by primitive
    direction.  Additive under Minkowski sums; a segment counts in both
    directions, a point not at all."""
    if P.dim != 2:
        raise DimensionMismatchError("edge counts are a 2D notion")
    cyc = ccw_cycle(P)
    counts = {}
    if len(cyc) == 1:
        return counts
    if len(cyc) == 2:
        w = tuple(a - b for a, b in zip(cyc[1], cyc[0]))
        u, length = _primitive(w)
        counts[u] = length
        counts[(-u[0], -u[1])] = length
        return counts
    for p, q in zip(cyc, cyc[1:] + cyc[:1]):
        w = (q[0] - p[0], q[1] - p[1])
        u, length = _primitive(w)
        counts[u] = counts.get(u, 0) + length
    return counts


def _triangle_axis_edges(v):
    """Axis-direction edge counts contributed by Triangle(v), v = (a, b)."""
    a, b = v
    if a > 0:
        return {(1, 0): a, (0, 1): b}
    return {(1, 0): -a, (0, -1): b}


def decompose_2d(e, _verify=True):
    """Integer coefficients over the segment/triangle basis.

    Every non-axis direction pair is covered by exactly one segment and one
    triangle hypotenuse, so those coefficients read off directly; axis
    directions are settled afterwards by the two axis segments.  The
    reconstruction identity is re-checked before returning.
    """
    if e.dim != 2:
        raise DimensionMismatchError("basis decomposition is implemented in 2D")
    n = dict(edge_vector_counts(e.pos))
    for u, c in edge_vector_counts(e.neg).items():
        n[u] = n.get(u, 0) - c

    coeffs = {}
    axis_residual = {(1, 0): n.get((1, 0), 0), (-1, 0): n.get((-1, 0), 0),
                     (0, 1): n.get((0, 1), 0), (0, -1): n.get((0, -1), 0)}
    non_axis = {_upper_half(u) for u in n if u[0] != 0 and u[1] != 0}
    for v in sorted(non_axis):
        fwd = n.get(v, 0)
        bwd = n.get((-v[0], -v[1]), 0)
        # Triangle(v) has hypotenuse direction v when v[0] < 0 and -v when
        # v[0] > 0; Segment(v) contributes to both directions equally.
        if v[0] > 0:
            c_seg, c_tri = fwd, bwd - fwd
        else:
            c_seg, c_tri = bwd, fwd - bwd
        if c_seg:
            coeffs[BasisElement("segment", v)] = c_seg
        if c_tri:
            coeffs[BasisElement("triangle", v)] = c_tri
            for u, k in _triangle_axis_edges(v).items():
                axis_residual[u] = axis_residual.get(u, 0) - c_tri * k

    if (axis_residual[(1, 0)] != axis_residual[(-1, 0)]
            or axis_residual[(0, 1)] != axis_residual[(0, -1)]):
        raise AssertionError("edge multiset does not close up; invalid input")
    if axis_residual[(1, 0)]:
        coeffs[BasisElement("segment", (1, 0))] = axis_residual[(1, 0)]
    if axis_residual[(0, 1)]:
        coeffs[BasisElement("segment", (0, 1))] = axis_residual[(0, 1)]

    if _verify and not _reconstructs(e, coeffs):
        raise AssertionError("basis decomposition failed its reconstruction check")
    return coeffs


def _reconstructs(e, coeffs):
    """left = sum of positive parts + e.neg, right = negative parts + e.pos."""
    left = e.neg
    right = e.pos
    for B, c in coeffs.items():
        P = B.polytope()
        for _ in range(abs(c)):
            if c > 0:
                left = p_mink_sum(left, P)
            else:
                right = p_mink_sum(right, P)
    return normalize_polytope(left).verts == normalize_polytope(right).verts


# ---------------------------------------------------------------------------
# The surjection onto ideal classes


@dataclass(frozen=True)
class IdealClassElement:
    """Formal fraction [num, den] modulo monomial (principal) classes."""
    num: MonomialIdeal
    den: MonomialIdeal

    def __post_init__(self):
        if self.num.dim != self.den.dim:
            raise DimensionMismatchError("num and den must share a dimension")

    @property
    def dim(self):
        return self.num.dim

    @property
    def is_identity(self):
        return self.num == self.den


def ideal_class(num, den=None):
    """Build a class element: close both ideals and drop monomial factors."""
    if den is None:
        den = unit_ideal(num.dim)
    num = normalize_translation(integral_closure(num))[0]
    den = normalize_translation(integral_closure(den))[0]
    return IdealClassElement(num, den)


def class_equal_ideal(a, b):
    """Equality in the quotient group: cross star-products agree up to a
    monomial factor."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimensions differ: {a.dim} vs {b.dim}")
    left = normalize_translation(star(a.num, b.den))[0]
    right = normalize_translation(star(b.num, a.den))[0]
    return left == right


def class_multiply(a, b):
    return ideal_class(star(a.num, b.num), star(a.den, b.den))


def phi(P):
    """Class of the ideal spanned by the lattice points of P + R^d_+, after
    translating P into the nonnegative orthant."""
    Pn = normalize_polytope(P)
    generated = minimalize(Pn.verts, P.dim)
    return ideal_class(integral_closure(generated))


def phi_group(e):
    """phi extended to formal differences of polytopes."""
    return ideal_class(phi(e.pos).num, phi(e.neg).num)


def ideal_to_polytope(I):
    """Bounded hull of the generators; phi of it recovers the class of I."""
    return hull(I.gens, I.dim)


# ---------------------------------------------------------------------------
# Colon-ideal factorization over the 2D basis


@dataclass(frozen=True)
class ColonFactorization:
    """I as closure(x^num_monomial * prod (x^a, y^b)) colon the same shape.

    Factors are (a, b) exponent pairs, one entry per copy.
    """
    base: MonomialIdeal
    num_monomial: tuple
    num_factors: tuple
    den_monomial: tuple
    den_factors: tuple

    def evaluate(self):
        num = _evaluate_product(self.num_monomial, self.num_factors)
        den = _evaluate_product(self.den_monomial, self.den_factors)
        return colon(num, den)


def _axis_factor_ideal(a, b):
    return integral_closure(minimalize({(a, 0), (0, b)}, 2))


def _evaluate_product(monomial, factors):
    result = unit_ideal(2)
    for a, b in factors:
        result = star(result, _axis_factor_ideal(a, b))
    return translate(result, monomial)


def colon_factorization_2d(I):
    """Express a closed 2D ideal as a colon of star products of
    closures of (x^a, y^b), by decomposing its generator polygon over the
    basis and pushing each basis element through phi.

    Only segments with direction (-a, b), a, b > 0 have a nontrivial
    phi-image; every other basis element lands on the identity class (this
    is computed per element, not assumed).  The returned expression
    evaluates back to I exactly.
    """
    if I.dim != 2:
        raise DimensionMismatchError("colon factorization is implemented in 2D")
    if integral_closure(I) != I:
        raise ValueError("input must be integrally closed")
    zero = (0, 0)
    if I.is_unit:
        return ColonFactorization(I, zero, (), zero, ())

    coeffs = decompose_2d(group_element(hull(I.gens, 2)))
    num_factors, den_factors = [], []
    for B, c in coeffs.items():
        image = phi(B.polytope())
        if image.is_identity:
            continue
        a, b = -B.v[0], B.v[1]
        pair = (a, b)
        if c > 0:
            num_factors.extend([pair] * c)
        else:
            den_factors.extend([pair] * (-c))

    num_ideal = _evaluate_product(zero, num_factors)
    den_ideal = _evaluate_product(zero, den_factors)
    shifted = star(den_ideal, I)
    s_norm, s = normalize_translation(shifted)
    n_norm, t = normalize_translation(num_ideal)
    if s_norm != n_norm:
        raise AssertionError("phi images do not recombine to the input class")
    num_monomial = tuple(max(si - ti, 0) for si, ti in zip(s, t))
    den_monomial = tuple(max(ti - si, 0) for si, ti in zip(s, t))
    return ColonFactorization(I, num_monomial, tuple(sorted(num_factors)),
                              den_monomial, tuple(sorted(den_factors)))
