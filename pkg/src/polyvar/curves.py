"""Discrete planar curves and their elementary geometric quantities.

A curve is an ordered list of vertices ``p_0 .. p_{n-1}`` joined by straight
edges, either closed (polygon) or open (path).  The sign ``sigma`` fixes the
rotation ``R`` (by ``sigma * pi/2``) used to turn unit edge directions into
edge normals; every signed quantity downstream (turning angles, enclosed
area, curvatures) inherits this convention.  The default ``sigma = -1``
makes normals of counterclockwise convex polygons point outward.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    CuspPresent,
    CuspWarning,
    InvalidWinding,
    NonIntegerTurning,
    OpenCurve,
    TooFewVertices,
    ZeroEdge,
)

# 1 + cos(theta_k) at or below this marks vertex k as a cusp (theta = +/-pi).
CUSP_TOL = 1e-12

# |sum(theta_k) - 2*pi*round(...)| above this means corrupted angles.
TURNING_RESIDUAL_TOL = 1e-9


def rot90(vectors, sigma):
    """Rotate 2-vectors by sigma * pi/2 (the map R of the normal convention)."""
    v = np.asarray(vectors, dtype=float)
    out = np.empty_like(v)
    out[..., 0] = -sigma * v[..., 1]
    out[..., 1] = sigma * v[..., 0]
    return out


@dataclass(frozen=True, eq=False, repr=False)
class DiscreteCurve:
    """Immutable polygonal curve: vertex positions, closed flag, normal sign.

    points  -- (n, 2) float array, one row per vertex
    closed  -- True for a polygon, False for a path
    sigma   -- +1 or -1, fixed for the whole curve
    """

    points: np.ndarray
    closed: bool = True
    sigma: int = -1

    def __repr__(self):
        kind = "closed" if self.closed else "open"
        return f"DiscreteCurve(n={self.n}, {kind}, sigma={self.sigma:+d})"

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError("points must be an (n, 2) array of vertices")
        if not np.all(np.isfinite(pts)):
            raise ValueError("vertex coordinates must be finite")
        n = len(pts)
        if (self.closed and n < 3) or (not self.closed and n < 2):
            raise TooFewVertices(f"{n} vertices (closed={self.closed})")
        if self.sigma not in (-1, 1):
            raise ValueError("sigma must be +1 or -1")
        diffs = pts[1:] - pts[:-1]
        if self.closed:
            diffs = np.vstack([diffs, pts[:1] - pts[-1:]])
        lengths = np.hypot(diffs[:, 0], diffs[:, 1])
        zero = np.flatnonzero(lengths == 0.0)
        if zero.size:
            raise ZeroEdge(int(zero[0]))
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "sigma", int(self.sigma))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def edge_count(self) -> int:
        return self.n if self.closed else self.n - 1

    def is_interior(self, k: int) -> bool:
        return self.closed or 0 < k < self.n - 1

    def interior_range(self) -> range:
        return range(self.n) if self.closed else range(1, self.n - 1)

    def with_points(self, points) -> "DiscreteCurve":
        """New curve with the same closed/sigma convention."""
        return DiscreteCurve(points, closed=self.closed, sigma=self.sigma)

    def diameter(self) -> float:
        """Bounding-box diagonal; the length scale used by tolerances."""
        span = self.points.max(axis=0) - self.points.min(axis=0)
        return float(np.hypot(span[0], span[1]))


def make_curve(points, closed: bool = True, sigma: int = -1) -> DiscreteCurve:
    """Validate and build a curve from a sequence of 2-vectors."""
    return DiscreteCurve(points, closed=closed, sigma=sigma)


def regular_polygon(n, m=1, a=1.0, center=(0.0, 0.0), phase=0.0, sigma=-1) -> DiscreteCurve:
    """Regular (possibly star) polygon: p_k = center + a*(cos, sin)(2*pi*m*k/n + phase).

    ``m`` is the winding of the vertex placement: m = 1 is the convex polygon,
    2 <= m <= n-2 the star polygons.  m/n = 1/2 is rejected (antipodal vertex
    pairs collapse the construction).
    """
    n = int(n)
    m = int(m)
    if n < 3:
        raise TooFewVertices(f"{n} vertices")
    if 2 * m == n:
        raise InvalidWinding(f"m/n = 1/2 rejected (m = {m}, n = {n})")
    if not 1 <= m <= n - 1:
        raise InvalidWinding(f"m = {m} outside 1..{n - 1}")
    if not a > 0:
        raise ValueError("radius a must be positive")
    angles = 2.0 * np.pi * m * np.arange(n) / n + phase
    pts = np.asarray(center, dtype=float) + a * np.column_stack([np.cos(angles), np.sin(angles)])
    return DiscreteCurve(pts, closed=True, sigma=sigma)


def edge_vectors(curve: DiscreteCurve) -> np.ndarray:
    """p_{k+1} - p_k for every edge k."""
    pts = curve.points
    diffs = pts[1:] - pts[:-1]
    if curve.closed:
        diffs = np.vstack([diffs, pts[:1] - pts[-1:]])
    return diffs


def edge_lengths(curve: DiscreteCurve) -> np.ndarray:
    e = edge_vectors(curve)
    return np.hypot(e[:, 0], e[:, 1])


def edge_normals(curve: DiscreteCurve) -> np.ndarray:
    """Unit edge normals nu_k = R((p_{k+1} - p_k) / l_k)."""
    e = edge_vectors(curve)
    return rot90(e / edge_lengths(curve)[:, None], curve.sigma)


def edge_normal(curve: DiscreteCurve, k: int) -> np.ndarray:
    if not 0 <= k < curve.edge_count:
        raise IndexError(f"edge index {k} out of range")
    return edge_normals(curve)[k]


def _direction_angles(curve: DiscreteCurve):
    """Signed angle phi_k rotating edge direction k-1 onto edge direction k.

    Returned per interior vertex in a length-n array (NaN at the boundary
    vertices of an open curve).  theta_k = sigma * phi_k.
    """
    e = edge_vectors(curve)
    t = e / edge_lengths(curve)[:, None]
    if curve.closed:
        prev = np.roll(t, 1, axis=0)
        cur = t
    else:
        prev = t[:-1]
        cur = t[1:]
    cross = prev[:, 0] * cur[:, 1] - prev[:, 1] * cur[:, 0]
    dot = prev[:, 0] * cur[:, 0] + prev[:, 1] * cur[:, 1]
    phi = np.arctan2(cross, dot)
    if curve.closed:
        return phi
    full = np.full(curve.n, np.nan)
    full[1:-1] = phi
    return full


def turning_angles(curve: DiscreteCurve) -> np.ndarray:
    """Signed turning angle theta_k at every vertex (NaN at open-curve ends).

    Defined by R_{sigma * theta_k}(nu_{k-1}) = nu_k with theta_k in (-pi, pi].
    Antiparallel edges give theta_k = +pi and emit a CuspWarning.
    """
    theta = curve.sigma * _direction_angles(curve)
    with np.errstate(invalid="ignore"):
        cusp = 1.0 + np.cos(theta) <= CUSP_TOL
    if np.any(cusp):
        theta[cusp] = np.pi
        warnings.warn(CuspWarning(f"cusp at vertices {np.flatnonzero(cusp).tolist()}"))
    return theta


def turning_angle(curve: DiscreteCurve, k: int) -> float:
    if not curve.is_interior(k):
        raise IndexError(f"vertex {k} is not interior")
    return float(turning_angles(curve)[k])


def cusp_vertices(curve: DiscreteCurve) -> np.ndarray:
    """Indices of interior vertices whose adjacent edges are antiparallel."""
    e = edge_vectors(curve)
    t = e / edge_lengths(curve)[:, None]
    if curve.closed:
        prev, cur, offset = np.roll(t, 1, axis=0), t, 0
    else:
        prev, cur, offset = t[:-1], t[1:], 1
    cos_theta = prev[:, 0] * cur[:, 0] + prev[:, 1] * cur[:, 1]
    return np.flatnonzero(1.0 + cos_theta <= CUSP_TOL) + offset


def total_length(curve: DiscreteCurve) -> float:
    return float(edge_lengths(curve).sum())


def enclosed_volume(curve: DiscreteCurve) -> float:
    """Signed area (1/2) sum <p_k, nu_k> l_k; sign depends on orientation and sigma."""
    if not curve.closed:
        raise OpenCurve("enclosed volume requires a closed curve")
    pts = curve.points
    re = rot90(edge_vectors(curve), curve.sigma)
    return 0.5 * float(np.sum(pts[:, 0] * re[:, 0] + pts[:, 1] * re[:, 1]))


def turning_number(curve: DiscreteCurve) -> int:
    """Integer m with sum(theta_k) = 2*pi*m."""
    if not curve.closed:
        raise OpenCurve("turning number requires a closed curve")
    if cusp_vertices(curve).size:
        raise CuspPresent("turning number undefined with cusp vertices")
    total = float(turning_angles(curve).sum())
    m = round(total / (2.0 * np.pi))
    if abs(total - 2.0 * np.pi * m) > TURNING_RESIDUAL_TOL:
        raise NonIntegerTurning(f"angle sum {total} is not a multiple of 2*pi")
    return int(m)
