"""Independent oracles and random-curve generators used across the tests.

Everything here is deliberately written from first principles (plain loops,
shoelace formula, finite differences, cyclic Jacobi rotations) so it shares
no code path with the library under test.
"""

from __future__ import annotations

import numpy as np

from polyvar import DiscreteCurve


def brute_length(points: np.ndarray) -> float:
    n = len(points)
    total = 0.0
    for k in range(n):
        dx = points[(k + 1) % n, 0] - points[k, 0]
        dy = points[(k + 1) % n, 1] - points[k, 1]
        total += np.sqrt(dx * dx + dy * dy)
    return total


def shoelace(points: np.ndarray) -> float:
    n = len(points)
    acc = 0.0
    for k in range(n):
        x0, y0 = points[k]
        x1, y1 = points[(k + 1) % n]
        acc += x0 * y1 - x1 * y0
    return 0.5 * acc


def oracle_volume(points: np.ndarray, sigma: int) -> float:
    """Signed area in the library's convention: -sigma * shoelace."""
    return -sigma * shoelace(points)


def central_gradient(f, points: np.ndarray, h: float) -> np.ndarray:
    """Central finite-difference gradient of f over all vertex coordinates."""
    grad = np.zeros_like(points, dtype=float)
    for k in range(len(points)):
        for c in range(2):
            plus = points.copy()
            plus[k, c] += h
            minus = points.copy()
            minus[k, c] -= h
            grad[k, c] = (f(plus) - f(minus)) / (2.0 * h)
    return grad


def second_derivative(f, h: float) -> float:
    """Fourth-order five-point second derivative of f: R -> R at 0."""
    return (
        -f(2.0 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) - f(-2.0 * h)
    ) / (12.0 * h * h)


def jacobi_eigenvalues(matrix: np.ndarray, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted."""
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    scale = np.sqrt(np.sum(a * a)) + 1.0
    for _ in range(max_sweeps):
        off = np.sqrt(2.0 * np.sum(np.tril(a, -1) ** 2))
        if off <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                tau = 0.5 * (a[q, q] - a[p, p]) / apq
                if tau >= 0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    return np.sort(np.diag(a))


def random_star_polygon(rng, n: int, sigma: int = -1) -> DiscreteCurve:
    """Star-shaped polygon with jittered angles and radii; no tiny edges."""
    jitter = rng.uniform(-0.4, 0.4, size=n)
    angles = 2.0 * np.pi * (np.arange(n) + jitter) / n
    radii = rng.uniform(0.7, 1.3, size=n)
    pts = np.column_stack([radii * np.cos(angles), radii * np.sin(angles)])
    pts += rng.uniform(-1.0, 1.0, size=2)
    return DiscreteCurve(pts, closed=True, sigma=sigma)


def random_equilateral_polygon(rng, n: int, sigma: int = -1) -> DiscreteCurve:
    """Closed polygon with all edges of length exactly 1 (up to round-off).

    Walk n-2 near-regular unit steps, then close with two unit edges through
    the intersection of two unit circles.
    """
    for _ in range(200):
        headings = 2.0 * np.pi * np.arange(n - 2) / n + rng.uniform(-0.5, 0.5, size=n - 2)
        steps = np.column_stack([np.cos(headings), np.sin(headings)])
        pts = np.vstack([np.zeros(2), np.cumsum(steps, axis=0)])
        q = pts[-1]
        d = np.hypot(q[0], q[1])
        if not 0.2 < d < 1.95:
            continue
        mid = 0.5 * q
        height = np.sqrt(1.0 - 0.25 * d * d)
        perp = np.array([-q[1], q[0]]) / d
        closer = mid + (1.0 if rng.random() < 0.5 else -1.0) * height * perp
        candidate = np.vstack([pts, closer])
        # reject near-cusp corners so every scheme applies
        diffs = np.vstack([candidate[1:] - candidate[:-1], candidate[:1] - candidate[-1:]])
        unit = diffs / np.hypot(diffs[:, 0], diffs[:, 1])[:, None]
        cos_turn = np.sum(unit * np.roll(unit, 1, axis=0), axis=1)
        if np.min(1.0 + cos_turn) < 1e-3:
            continue
        return DiscreteCurve(candidate, closed=True, sigma=sigma)
    raise RuntimeError(f"failed to build an equilateral {n}-gon")
