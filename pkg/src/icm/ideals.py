"""Monomial ideals in d variables with exact integer arithmetic.

An exponent vector is a plain tuple of d nonnegative ints.  A monomial ideal
is stored by its minimal generators, which always form an antichain under
componentwise <=.  The unit ideal is generated by the zero vector; the zero
ideal is not representable (constructors reject empty generator sets).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .errors import DimensionMismatchError

Exponent = tuple


def dominates(a, b):
    """True iff a >= b componentwise."""
    return all(x >= y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialIdeal:
    dim: int
    gens: tuple  # sorted tuple of exponent tuples, an antichain

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        if not self.gens:
            raise ValueError("a monomial ideal needs at least one generator")
        for g in self.gens:
            if len(g) != self.dim:
                raise DimensionMismatchError(
                    f"generator {g} has length {len(g)}, expected {self.dim}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in generator {g}")
        for g in self.gens:
            for h in self.gens:
                if g != h and dominates(g, h):
                    raise ValueError(
                        f"generators are not an antichain: {g} dominates {h}")
        if tuple(sorted(self.gens)) != self.gens:
            raise ValueError("generators must be stored sorted")

    @property
    def is_unit(self):
        return self.gens == ((0,) * self.dim,)

    def __repr__(self):
        return f"MonomialIdeal(dim={self.dim}, gens={list(self.gens)})"


def minimalize(points, dim):
    """Ideal generated by the given exponent vectors: keep the <=-minimal ones."""
    pts = set(map(tuple, points))
    if not pts:
        raise ValueError("cannot build an ideal from an empty point set")
    minimal = []
    for p in pts:
        if not any(q != p and dominates(p, q) for q in pts):
            minimal.append(p)
    return MonomialIdeal(dim, tuple(sorted(minimal)))


def unit_ideal(dim):
    return MonomialIdeal(dim, ((0,) * dim,))


def principal_ideal(exponent):
    """Ideal generated by a single monomial."""
    return MonomialIdeal(len(exponent), (tuple(exponent),))


def _check_dims(I, J):
    if I.dim != J.dim:
        raise DimensionMismatchError(f"dimensions differ: {I.dim} vs {J.dim}")


def product(I, J):
    """Ideal product: pairwise generator sums, minimalized."""
    _check_dims(I, J)
    sums = {tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens}
    return minimalize(sums, I.dim)


def intersection(I, J):
    """Monomial-ideal intersection: componentwise max of generator pairs."""
    _check_dims(I, J)
    lcms = {tuple(max(a, b) for a, b in zip(g, h)) for g in I.gens for h in J.gens}
    return minimalize(lcms, I.dim)


def colon(I, J):
    """Colon ideal I : J, computed generator by generator of J."""
    _check_dims(I, J)
    result = None
    for g in J.gens:
        shifted = {tuple(max(a - b, 0) for a, b in zip(h, g)) for h in I.gens}
        part = minimalize(shifted, I.dim)
        result = part if result is None else intersection(result, part)
    return result


def contains(I, a):
    """True iff the monomial with exponent a lies in I."""
    a = tuple(a)
    if len(a) != I.dim:
        raise DimensionMismatchError(f"point has length {len(a)}, expected {I.dim}")
    return any(dominates(a, g) for g in I.gens)


def ord_valuation(I):
    """max{n : I is inside the n-th power of the maximal ideal}.

    For a monomial ideal this is the minimum total degree of a generator.
    """
    return min(sum(g) for g in I.gens)


def normalize_translation(I):
    """Canonical representative of the translation class of I.

    Returns (I', m) where m is the componentwise minimum over generators and
    I' has generators gens(I) - m.  I' is the monomial gcd-free form of I.
    """
    m = tuple(min(g[k] for g in I.gens) for k in range(I.dim))
    shifted = tuple(sorted(tuple(a - b for a, b in zip(g, m)) for g in I.gens))
    return MonomialIdeal(I.dim, shifted), m


def translate(I, m):
    """Multiply I by the monomial with exponent m (shift all generators)."""
    if len(m) != I.dim:
        raise DimensionMismatchError(f"shift has length {len(m)}, expected {I.dim}")
    shifted = tuple(sorted(tuple(a + b for a, b in zip(g, m)) for g in I.gens))
    return MonomialIdeal(I.dim, shifted)


def generator_box(I):
    """Componentwise maximum over generators; minimal generators of the
    integral closure always lie in the box [0, M]."""
    return tuple(max(g[k] for g in I.gens) for k in range(I.dim))


def box_points(bound):
    """All lattice points p with 0 <= p <= bound componentwise."""
    return iter_product(*(range(b + 1) for b in bound))
