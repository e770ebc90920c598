"""Hilbert metric on finite polyhedral cones, in three equivalent forms.

A cone is held in H-representation: the set of x with f_k(x) >= 0 for a
finite family of linear functionals f_k.  Three computations of the same
projective distance are provided so they can cross-validate each other:

* ``birkhoff_distance``     extreme ratios of facet values,
* ``yamada_distance``       supporting-hyperplane distance ratios,
* ``cross_ratio_distance``  the classical chord cross-ratio.

For the chord construction the boundary points are ordered by the affine
parameter s along the line x + s(y - x): the point a is the exit closest to
x on the side s < 0, the point b the exit on the side s > 1, giving the
order a, x, y, b.  When the chord leaves the cone in only one direction the
missing endpoint is at infinity and the one-sided (degenerate) cross-ratio
is used.
"""

from __future__ import annotations

import math

import numpy as np


class ConeError(ValueError):
    pass


class NotInteriorError(ConeError):
    """A point failed strict positivity on some facet functional."""

    def __init__(self, facet: int, value: float):
        self.facet = facet
        self.value = value
        super().__init__(f"facet {facet} has non-positive value {value}")


class ConeFunctionalSet:
    """Polyhedral cone {x in R^N : f_k(x) >= 0} with a supplied interior witness."""

    def __init__(self, dimension: int, functionals, witness):
        if dimension < 1:
            raise ConeError(f"dimension must be positive, got {dimension}")
        mat = np.atleast_2d(np.asarray(functionals, dtype=float))
        if mat.size == 0:
            raise ConeError("functional list is empty")
        if mat.shape[1] != dimension:
            raise ConeError(f"functionals have length {mat.shape[1]}, expected {dimension}")
        norms = np.linalg.norm(mat, axis=1)
        if np.any(norms == 0.0):
            raise ConeError("zero functional supplied")
        w = np.asarray(witness, dtype=float)
        if w.shape != (dimension,):
            raise ConeError(f"witness has shape {w.shape}, expected ({dimension},)")
        vals = mat @ w
        if np.any(vals <= 0.0):
            k = int(np.argmin(vals))
            raise ConeError(f"witness is not interior: functional {k} gives {vals[k]}")
        self.dimension = int(dimension)
        self.functionals = mat
        self.witness = w
        self._norms = norms

    def values(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dimension,):
            raise ConeError(f"point has shape {x.shape}, expected ({self.dimension},)")
        return self.functionals @ x

    def contains(self, x) -> bool:
        return bool(np.all(self.values(x) >= 0.0))

    def interior_values(self, x) -> np.ndarray:
        vals = self.values(x)
        if np.any(vals <= 0.0):
            k = int(np.argmin(vals))
            raise NotInteriorError(k, float(vals[k]))
        return vals

    def __repr__(self):
        return (f"ConeFunctionalSet(dim={self.dimension}, "
                f"facets={self.functionals.shape[0]})")


def contains(cone: ConeFunctionalSet, x) -> bool:
    """Membership in the closed cone."""
    return cone.contains(x)


def birkhoff_distance(cone: ConeFunctionalSet, x, y) -> float:
    """(1/2) log(M/m) where M, m are the extreme facet-value ratios f_k(x)/f_k(y)."""
    fx = cone.interior_values(x)
    fy = cone.interior_values(y)
    ratios = fx / fy
    return 0.5 * math.log(float(np.max(ratios)) / float(np.min(ratios)))


def yamada_distance(cone: ConeFunctionalSet, x, y) -> float:
    """Supporting-hyperplane form: half the sum of the two extreme log distance ratios.

    Euclidean distances to the facet hyperplanes are f_k(.) divided by the
    functional norm, so this evaluates the same quantity as
    ``birkhoff_distance`` through an independent arithmetic route.
    """
    dx = cone.interior_values(x) / cone._norms
    dy = cone.interior_values(y) / cone._norms
    with np.errstate(divide="ignore"):
        logs = np.log(dx) - np.log(dy)
    return 0.5 * (float(np.max(logs)) + float(np.max(-logs)))


def _projectively_equal(x, y, tol: float = 1e-12) -> bool:
    nx = np.sum(np.abs(x))
    ny = np.sum(np.abs(y))
    if nx == 0.0 or ny == 0.0:
        return False
    return bool(np.max(np.abs(x / nx - y / ny)) <= tol)


def cross_ratio_distance(cone: ConeFunctionalSet, x, y) -> float:
    """Chord cross-ratio form of the Hilbert distance.

    Intersects the line through x and y with the facet hyperplanes,
    takes the nearest exits a (before x) and b (beyond y) and returns
    (1/2) log [a,b,y,x].  One-sided exits give the degenerate cross-ratio.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    fx = cone.interior_values(x)
    fy = cone.interior_values(y)
    if _projectively_equal(x, y):
        return 0.0
    # f_k(x + s (y - x)) = fx_k + s (fy_k - fx_k) vanishes at s_k
    diff = fy - fx
    s_a = -math.inf
    s_b = math.inf
    for k in range(fx.shape[0]):
        if diff[k] == 0.0:
            continue
        s_k = -fx[k] / diff[k]
        if s_k < 0.0:
            s_a = max(s_a, s_k)
        elif s_k > 1.0:
            s_b = min(s_b, s_k)
        # roots inside [0, 1] cannot occur for interior x, y
    if math.isinf(s_a) and math.isinf(s_b):
        return 0.0
    if math.isinf(s_b):
        return 0.5 * math.log((1.0 - s_a) / (-s_a))
    if math.isinf(s_a):
        return 0.5 * math.log(s_b / (s_b - 1.0))
    return 0.5 * math.log(((1.0 - s_a) * s_b) / ((-s_a) * (s_b - 1.0)))
