"""
Boundary-coupling optimization for end-to-end transfer.

Weakening the outermost bonds of a uniform chain narrows the weight of the
kick state onto the quasi-linear center of the dispersion, which raises the
peak end-site amplitude well above the uniform-chain value.  This module
maximizes that peak over the edge scale factor x (single-bond variant) or
over (x, y) with the second bond pair in play, using a coarse grid followed
by derivative-free golden-section refinement.  Everything is deterministic:
fixed grids, fixed sweep order, ties resolved to the lowest x then lowest y.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._golden import golden_max
from .chains import edge_modified_chain
from .dynamics import TransferReport, peak_transfer
from .spectral import diagonalize

GRID_LO = 0.02
PARAM_TOL = 1e-4
# lower clip for refinement brackets; x = 0 would disconnect the endpoints
X_FLOOR = 1e-9


@dataclass(frozen=True)
class TuneResult:
    """Best coupling factors found, with the full evaluation trace."""

    best_params: tuple[float, ...]
    best_amplitude: float
    best_time: float
    evaluations: int
    trace: tuple

    def __post_init__(self):
        object.__setattr__(self, "best_params", tuple(float(p) for p in self.best_params))
        object.__setattr__(self, "trace", tuple(self.trace))


def _objective(M: int, tau: float, params: tuple[float, ...]) -> TransferReport:
    x = params[0]
    y = params[1] if len(params) > 1 else None
    return peak_transfer(diagonalize(edge_modified_chain(M, tau, x, y)))


def _axis_grid(points: int) -> np.ndarray:
    # degenerate resolution anchors at the unmodified chain
    if points < 1:
        raise ValueError("grid resolution must be >= 1")
    if points == 1:
        return np.array([1.0])
    return np.linspace(GRID_LO, 1.0, points)


def tune_single(M: int, tau: float, x_grid: int = 50) -> TuneResult:
    """Maximize peak transfer over the edge factor x in (0, 1].

    Coarse grid of ``x_grid`` points, then golden-section refinement around
    the best sample to parameter tolerance 1e-4.
    """
    if M < 3:
        raise ValueError("tune_single needs M >= 3")
    xs = _axis_grid(x_grid)
    trace: list[tuple[tuple[float, ...], float]] = []

    best_i, best_amp, best_time = 0, -1.0, 0.0
    for i, x in enumerate(xs):
        rep = _objective(M, tau, (x,))
        trace.append(((float(x),), rep.peak_amplitude))
        if rep.peak_amplitude > best_amp:
            best_i, best_amp, best_time = i, rep.peak_amplitude, rep.peak_time
    best_x = float(xs[best_i])

    if len(xs) >= 2:
        h = float(xs[1] - xs[0])
        a = max(X_FLOOR, best_x - h)
        b = min(1.0, best_x + h)

        def f(x: float) -> float:
            rep = _objective(M, tau, (x,))
            trace.append(((float(x),), rep.peak_amplitude))
            return rep.peak_amplitude

        x_ref, amp_ref, _ = golden_max(f, a, b, PARAM_TOL)
        if amp_ref > best_amp:
            best_x, best_amp = float(x_ref), float(amp_ref)
            best_time = _objective(M, tau, (best_x,)).peak_time

    return TuneResult(
        best_params=(best_x,),
        best_amplitude=best_amp,
        best_time=best_time,
        evaluations=len(trace),
        trace=tuple(trace),
    )


def tune_double(M: int, tau: float, grid: int = 50) -> TuneResult:
    """Maximize peak transfer over (x, y), both in (0, 1].

    Coarse 2-d grid of ``grid`` points per axis, then coordinate descent
    with golden-section line searches (tolerance 1e-4 per coordinate); a
    line-search move is accepted only when it strictly improves the peak.
    """
    if M < 5:
        raise ValueError("tune_double needs M >= 5")
    xs = _axis_grid(grid)
    trace: list[tuple[tuple[float, ...], float]] = []

    best = (float(xs[0]), float(xs[0]))
    best_amp, best_time = -1.0, 0.0
    for x in xs:
        for y in xs:
            rep = _objective(M, tau, (float(x), float(y)))
            trace.append(((float(x), float(y)), rep.peak_amplitude))
            if rep.peak_amplitude > best_amp:
                best = (float(x), float(y))
                best_amp, best_time = rep.peak_amplitude, rep.peak_time

    if len(xs) >= 2:
        h = float(xs[1] - xs[0])
        params = list(best)
        for _ in range(20):
            moved = 0.0
            for axis in (0, 1):
                a = max(X_FLOOR, params[axis] - h)
                b = min(1.0, params[axis] + h)

                def f(v: float, axis=axis) -> float:
                    trial = list(params)
                    trial[axis] = v
                    rep = _objective(M, tau, tuple(trial))
                    trace.append((tuple(trial), rep.peak_amplitude))
                    return rep.peak_amplitude

                v_ref, amp_ref, _ = golden_max(f, a, b, PARAM_TOL)
                if amp_ref > best_amp:
                    moved = max(moved, abs(v_ref - params[axis]))
                    params[axis] = float(v_ref)
                    best_amp = float(amp_ref)
            if moved < PARAM_TOL:
                break
        best = (params[0], params[1])
        best_time = _objective(M, tau, best).peak_time

    return TuneResult(
        best_params=best,
        best_amplitude=best_amp,
        best_time=best_time,
        evaluations=len(trace),
        trace=tuple(trace),
    )


def flatness_probe(M: int, tau: float, params, radius: float) -> float:
    """Worst peak amplitude in an axis-aligned neighborhood of ``params``.

    Samples 5 points per axis on [p - radius, p + radius], clipped to (0, 1].
    radius = 0 reproduces the amplitude at ``params`` itself.
    """
    params = tuple(float(p) for p in params)
    if len(params) not in (1, 2):
        raise ValueError("params must hold one (x) or two (x, y) factors")
    if not all(0.0 < p <= 1.0 for p in params):
        raise ValueError("params must lie inside (0, 1]")
    if radius < 0.0:
        raise ValueError("radius must be >= 0")

    axes = []
    for p in params:
        pts = np.clip(np.linspace(p - radius, p + radius, 5), X_FLOOR, 1.0)
        if not np.any((pts > 0.0) & (pts <= 1.0)):
            raise ValueError("neighborhood lies entirely outside (0, 1]")
        axes.append(pts)

    worst = np.inf
    if len(axes) == 1:
        for x in axes[0]:
            worst = min(worst, _objective(M, tau, (float(x),)).peak_amplitude)
    else:
        for x in axes[0]:
            for y in axes[1]:
                worst = min(worst, _objective(M, tau, (float(x), float(y))).peak_amplitude)
    return float(worst)
