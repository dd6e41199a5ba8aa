"""Area-constrained steepest descent of length on closed discrete curves.

Each step projects the length gradient onto the volume-preserving subspace
(orthogonal complement of the area gradient in configuration space), moves
the vertices, and restores the enclosed area exactly by a homothety about the
vertex centroid (area is quadratic under scaling, so the correct factor is
sqrt(target / current)).  Steps that collapse an edge or increase the length
are retried with a halved step size.  At convergence the Lagrange multiplier
is recovered by least squares and the limit is classified as an equilibrium.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import DiscreteCurve, enclosed_volume, total_length
from .errors import ZeroEdge, ZeroVolumeGradient
from .variation import EquilibriumReport, classify_equilibrium, length_gradients, volume_gradients

VOLUME_CORRECTIONS = ("project_only", "project_and_rescale")

MAX_HALVINGS = 20


@dataclass(frozen=True)
class FlowConfig:
    step_size: float = 0.1
    max_steps: int = 20000
    grad_tolerance: float = 1e-8
    volume_correction: str = "project_and_rescale"
    record_every: int = 10
    classify_tolerance: float = 1e-6

    def __post_init__(self):
        if self.step_size <= 0:
            raise ValueError("step_size must be positive")
        if self.grad_tolerance <= 0:
            raise ValueError("grad_tolerance must be positive")
        if self.volume_correction not in VOLUME_CORRECTIONS:
            raise ValueError(f"volume_correction must be one of {VOLUME_CORRECTIONS}")


@dataclass(frozen=True)
class FlowSnapshot:
    step: int
    curve: DiscreteCurve
    length: float
    volume: float
    max_projected_gradient: float


@dataclass(frozen=True)
class FlowTrajectory:
    snapshots: list[FlowSnapshot]
    verdict: str  # "converged" | "max_steps" | "degenerated"
    steps_taken: int
    report: EquilibriumReport | None = None
    reason: str | None = None
    kappa_estimate: float | None = None


def project_volume_preserving(curve: DiscreteCurve, field) -> np.ndarray:
    """Remove the component of the field along the area gradient.

    The result w satisfies first_variation(curve, w, "volume") = 0 up to
    round-off.
    """
    v = np.asarray(field, dtype=float)
    gv = volume_gradients(curve)
    gv_norm_sq = float(np.sum(gv * gv))
    if gv_norm_sq <= (1e-14 * max(curve.diameter(), 1.0)) ** 2:
        raise ZeroVolumeGradient("area gradient vanishes; projection undefined")
    return v - (float(np.sum(v * gv)) / gv_norm_sq) * gv


def lagrange_kappa(curve: DiscreteCurve) -> float:
    """Least-squares kappa minimizing |grad L + kappa grad Vol|."""
    gl = length_gradients(curve)
    gv = volume_gradients(curve)
    return -float(np.sum(gl * gv)) / float(np.sum(gv * gv))


def _rescaled_to_volume(curve: DiscreteCurve, target: float) -> DiscreteCurve:
    """Homothety about the vertex centroid restoring the enclosed area."""
    current = enclosed_volume(curve)
    if current == 0.0 or not target / current > 0:
        raise ValueError("enclosed area degenerated during the step")
    centroid = curve.points.mean(axis=0)
    return curve.with_points(centroid + np.sqrt(target / current) * (curve.points - centroid))


def flow_step(curve: DiscreteCurve, config: FlowConfig, target_volume: float | None = None):
    """One descent step; returns (new_curve, diagnostics dict).

    The projected gradient is evaluated at the input curve; the step is
    backtracked (up to 20 halvings) if it produces a zero edge, flips the
    enclosed area, or increases the length.  diagnostics carries the
    pre-step gradient norm and the accepted step size (None if converged or
    no acceptable step exists).
    """
    g = project_volume_preserving(curve, length_gradients(curve))
    gradnorm = float(np.hypot(g[:, 0], g[:, 1]).max())
    diagnostics = {
        "max_projected_gradient": gradnorm,
        "length": total_length(curve),
        "volume": enclosed_volume(curve),
        "step_size_used": None,
    }
    if gradnorm < config.grad_tolerance:
        return curve, diagnostics

    g_norm_sq = float(np.sum(g * g))
    roundoff = 1e-14 * max(1.0, diagnostics["length"])
    h = config.step_size
    for _ in range(MAX_HALVINGS + 1):
        try:
            candidate = curve.with_points(curve.points - h * g)
            if config.volume_correction == "project_and_rescale":
                if target_volume is None:
                    target_volume = diagnostics["volume"]
                candidate = _rescaled_to_volume(candidate, target_volume)
            # expected first-order decrease is h * |g|^2; demand a tenth of it,
            # up to the round-off resolution of the length itself
            if total_length(candidate) <= diagnostics["length"] - 0.1 * h * g_norm_sq + roundoff:
                diagnostics["step_size_used"] = h
                return candidate, diagnostics
        except (ZeroEdge, ValueError):
            pass
        h *= 0.5
    return curve, diagnostics


def run_flow(curve: DiscreteCurve, config: FlowConfig = FlowConfig()) -> FlowTrajectory:
    """Iterate flow_step until the projected gradient falls below tolerance.

    Convergence hands the limit to classify_equilibrium with the recovered
    Lagrange multiplier; a step with no acceptable size degenerates the run.
    """
    if not curve.closed:
        raise ValueError("the constrained flow is defined for closed curves")
    target_volume = enclosed_volume(curve)
    snapshots: list[FlowSnapshot] = []

    def record(step: int, c: DiscreteCurve, diag: dict):
        if snapshots and snapshots[-1].step == step:
            return
        snapshots.append(
            FlowSnapshot(
                step=step,
                curve=c,
                length=diag["length"],
                volume=diag["volume"],
                max_projected_gradient=diag["max_projected_gradient"],
            )
        )

    current = curve
    for step in range(config.max_steps + 1):
        new_curve, diag = flow_step(current, config, target_volume=target_volume)
        converged = diag["max_projected_gradient"] < config.grad_tolerance
        stuck = not converged and diag["step_size_used"] is None
        if step % config.record_every == 0 or converged or stuck or step == config.max_steps:
            record(step, current, diag)
        if converged:
            kappa = lagrange_kappa(current)
            report = classify_equilibrium(current, kappa, tol=config.classify_tolerance)
            return FlowTrajectory(
                snapshots=snapshots,
                verdict="converged",
                steps_taken=step,
                report=report,
                kappa_estimate=kappa,
            )
        if stuck:
            return FlowTrajectory(
                snapshots=snapshots,
                verdict="degenerated",
                steps_taken=step,
                reason=f"no acceptable step at step {step} "
                f"(gradient {diag['max_projected_gradient']:.3e})",
            )
        if step == config.max_steps:
            return FlowTrajectory(snapshots=snapshots, verdict="max_steps", steps_taken=step)
        current = new_curve
