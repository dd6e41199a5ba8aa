"""Vertex normals, parallel offset curves, and the exact Steiner-type formula.

The vertex normal ``N_k = (nu_k + nu_{k-1}) / (1 + cos theta_k)`` is the unique
direction along which moving every vertex keeps each edge parallel to its
source edge.  The offset edge lengths then satisfy, exactly,

    |p_{k+1}(t) - p_k(t)| = l_k (1 - t * kappa(e_k)),

with the edge-osculating-circle curvature ``kappa(e_k)``.  Of the three ways to
join offset edges (segment, arc, wedge) only the wedge preserves the vertex
count; its joined curve is exactly the parallel curve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curvature import edge_curvatures
from .curves import DiscreteCurve, cusp_vertices, edge_lengths, edge_normals, edge_vectors, rot90, turning_angles
from .errors import CuspVertex, EdgeCollapse, OpenCurve

OFFSET_VARIANTS = ("segment", "arc", "wedge")

# |1 - t * kappa(e_k)| at or below this aborts the offset instead of
# producing a zero-length edge.
EDGE_COLLAPSE_TOL = 1e-9


def vertex_normals(curve: DiscreteCurve) -> np.ndarray:
    """N_k = (nu_k + nu_{k-1}) / (1 + cos theta_k); NaN at cusps and open ends.

    |N_k| = 1/cos(theta_k/2), so N_k is defined (and unit) at straight
    vertices but blows up toward a cusp.
    """
    nu = edge_normals(curve)
    theta = turning_angles(curve)
    if curve.closed:
        nu_sum = nu + np.roll(nu, 1, axis=0)
    else:
        nu_sum = np.full((curve.n, 2), np.nan)
        nu_sum[1:-1] = nu[1:] + nu[:-1]
    with np.errstate(invalid="ignore", divide="ignore"):
        out = nu_sum / (1.0 + np.cos(theta))[:, None]
    out[~np.isfinite(out)] = np.nan
    return out


def vertex_normal(curve: DiscreteCurve, k: int) -> np.ndarray:
    if not curve.is_interior(k):
        raise IndexError(f"vertex {k} is not interior")
    value = vertex_normals(curve)[k]
    if not np.all(np.isfinite(value)):
        raise CuspVertex(k)
    return value


def vertex_tangents(curve: DiscreteCurve) -> np.ndarray:
    """T_k = -R N_k; orthogonal to N_k with the same norm."""
    return -rot90(vertex_normals(curve), curve.sigma)


def vertex_tangent(curve: DiscreteCurve, k: int) -> np.ndarray:
    if not curve.is_interior(k):
        raise IndexError(f"vertex {k} is not interior")
    value = vertex_tangents(curve)[k]
    if not np.all(np.isfinite(value)):
        raise CuspVertex(k)
    return value


def weighted_vertex_normals(curve: DiscreteCurve) -> np.ndarray:
    """Length-weighted normal (l_k nu_k + l_{k-1} nu_{k-1}) / (l_k + l_{k-1}).

    The volume-descent counterpart of N_k; the two agree in direction exactly
    when the adjacent edges have equal length.
    """
    nu = edge_normals(curve)
    l = edge_lengths(curve)
    if curve.closed:
        nu_prev, l_prev = np.roll(nu, 1, axis=0), np.roll(l, 1)
        return (l[:, None] * nu + l_prev[:, None] * nu_prev) / (l + l_prev)[:, None]
    out = np.full((curve.n, 2), np.nan)
    out[1:-1] = (l[1:, None] * nu[1:] + l[:-1, None] * nu[:-1]) / (l[1:] + l[:-1])[:, None]
    return out


def weighted_vertex_normal(curve: DiscreteCurve, k: int) -> np.ndarray:
    if not curve.is_interior(k):
        raise IndexError(f"vertex {k} is not interior")
    return weighted_vertex_normals(curve)[k]


def _require_no_cusp(curve: DiscreteCurve):
    cusps = cusp_vertices(curve)
    if cusps.size:
        raise CuspVertex(int(cusps[0]))


def parallel_curve(curve: DiscreteCurve, t: float) -> DiscreteCurve:
    """Offset curve p_k + t N_k; every edge stays parallel to its source edge."""
    if not curve.closed:
        raise OpenCurve("parallel offsets require a closed curve")
    _require_no_cusp(curve)
    factors = 1.0 - t * edge_curvatures(curve)
    collapsing = np.flatnonzero(np.abs(factors) <= EDGE_COLLAPSE_TOL)
    if collapsing.size:
        raise EdgeCollapse(int(collapsing[0]))
    return curve.with_points(curve.points + t * vertex_normals(curve))


@dataclass(frozen=True)
class SteinerReport:
    t: float
    predicted_lengths: np.ndarray
    actual_lengths: np.ndarray
    max_abs_error: float


def steiner_report(curve: DiscreteCurve, t: float) -> SteinerReport:
    """Compare per-edge offset lengths against l_k (1 - t * kappa(e_k)).

    The identity is algebraically exact, so max_abs_error is pure round-off.
    Requires 1 - t * kappa(e_k) > 0 on every edge (no sign flip under the
    absolute value).
    """
    if not curve.closed:
        raise OpenCurve("Steiner report requires a closed curve")
    _require_no_cusp(curve)
    factors = 1.0 - t * edge_curvatures(curve)
    bad = np.flatnonzero(factors <= EDGE_COLLAPSE_TOL)
    if bad.size:
        raise EdgeCollapse(int(bad[0]))
    predicted = edge_lengths(curve) * factors
    actual = edge_lengths(parallel_curve(curve, t))
    return SteinerReport(
        t=float(t),
        predicted_lengths=predicted,
        actual_lengths=actual,
        max_abs_error=float(np.max(np.abs(predicted - actual))),
    )


def offset_length(curve: DiscreteCurve, t: float, variant: str) -> float:
    """Total length of the offset with segment / arc / wedge corner joins.

    segment: L - t * sum 2 sin(theta_k/2)
    arc:     L - t * sum theta_k          (Minkowski / normal-cone boundary)
    wedge:   L - t * sum 2 tan(theta_k/2) (equals the Steiner per-edge sum)
    """
    if not curve.closed:
        raise OpenCurve("offset lengths require a closed curve")
    theta = turning_angles(curve)
    length = float(edge_lengths(curve).sum())
    if variant == "segment":
        return length - t * float(np.sum(2.0 * np.sin(0.5 * theta)))
    if variant == "arc":
        return length - t * float(theta.sum())
    if variant == "wedge":
        _require_no_cusp(curve)
        return length - t * float(np.sum(2.0 * np.tan(0.5 * theta)))
    raise ValueError(f"unknown offset variant {variant!r}")


def offset_polygon(curve: DiscreteCurve, t: float, variant: str) -> DiscreteCurve:
    """Materialize the offset polygon for the segment or wedge variant.

    The wedge offset keeps the vertex count (it is the parallel curve); the
    segment offset inserts one corner chord per turning vertex.  The arc
    variant is not polygonal and cannot be materialized.
    """
    if variant == "wedge":
        return parallel_curve(curve, t)
    if variant == "segment":
        if not curve.closed:
            raise OpenCurve("segment offsets require a closed curve")
        nu = edge_normals(curve)
        pts = curve.points
        nxt = np.roll(pts, -1, axis=0)
        doubled = np.empty((2 * curve.n, 2))
        doubled[0::2] = pts + t * nu
        doubled[1::2] = nxt + t * nu
        # straight vertices (theta = 0) duplicate their corner point; drop them
        dedupe_tol = 1e-14 * max(curve.diameter(), 1.0)
        gaps = np.hypot(*(doubled - np.roll(doubled, 1, axis=0)).T)
        keep = gaps > dedupe_tol
        return DiscreteCurve(doubled[keep], closed=True, sigma=curve.sigma)
    if variant == "arc":
        raise ValueError("arc offsets are not polygonal; use offset_length")
    raise ValueError(f"unknown offset variant {variant!r}")


def frenet_edge_residuals(curve: DiscreteCurve) -> np.ndarray:
    """(N_{k+1} - N_k)/l_k + kappa(e_k) t_k per edge; identically zero."""
    N = vertex_normals(curve)
    l = edge_lengths(curve)
    t_unit = edge_vectors(curve) / l[:, None]
    if curve.closed:
        dN = np.roll(N, -1, axis=0) - N
    else:
        dN = N[1:] - N[:-1]  # NaN endpoints poison the two boundary edges
    kap = edge_curvatures(curve)
    return dN / l[:, None] + kap[:, None] * t_unit


def frenet_edge_residual(curve: DiscreteCurve, k: int) -> np.ndarray:
    value = frenet_edge_residuals(curve)[k]
    if not np.all(np.isfinite(value)):
        raise CuspVertex(k)
    return value
