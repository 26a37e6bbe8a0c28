"""
Spectral analysis of hopping chains.

Diagonalizes the real symmetric tridiagonal single-particle Hamiltonian of a
ChainSpec, classifies eigenvector mirror parity, solves the boundary-modified
quantization condition for the pseudo-wavevectors of an edge-weakened chain,
and provides the spectrum/state diagnostics (equal-spacing deviation, mode
overlaps) used by the transfer studies.

Eigenvalues are returned in ascending order.  Eigenvectors follow a
deterministic sign convention: the first component that is not numerically
zero (scanning sites j = 1..M) is positive, so serialized spectra and parity
labels do not depend on solver internals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .chains import ChainSpec, WaveState, _readonly
from .errors import DegenerateSpectrumError, NoRootError

# Eigenvalues closer than this fraction of the spectral width are treated as
# degenerate when assigning parity labels.
DEGENERACY_REL_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (ascending) and row-wise eigenvectors of a chain."""

    omega: np.ndarray
    g: np.ndarray
    spec: ChainSpec

    def __post_init__(self):
        object.__setattr__(self, "omega", _readonly(np.asarray(self.omega, dtype=float)))
        object.__setattr__(self, "g", _readonly(np.asarray(self.g, dtype=float)))
        if np.any(np.diff(self.omega) < 0):
            raise ValueError("omega must be nondecreasing")

    @property
    def M(self) -> int:
        return self.spec.M


@dataclass(frozen=True)
class ParitySignature:
    """Mirror parity per mode: +1, -1, or None when undefined."""

    parity: tuple
    max_deviation: float

    def all_defined(self) -> bool:
        return all(p is not None for p in self.parity)

    def alternating(self) -> bool:
        ps = self.parity
        return self.all_defined() and all(
            ps[n + 1] == -ps[n] for n in range(len(ps) - 1)
        )


def diagonalize(spec: ChainSpec) -> Spectrum:
    """Full eigendecomposition of the chain Hamiltonian.

    Backed by the LAPACK symmetric-tridiagonal solver, O(M^2) instead of the
    dense O(M^3) path.
    """
    if spec.M == 1:
        return Spectrum(omega=spec.eps.copy(), g=np.ones((1, 1)), spec=spec)
    w, v = eigh_tridiagonal(spec.eps, -spec.tau)
    g = np.ascontiguousarray(v.T)
    # sign convention: first non-negligible component positive
    thresh = 1e-8 * np.max(np.abs(g), axis=1)
    for n in range(spec.M):
        nz = np.nonzero(np.abs(g[n]) > thresh[n])[0]
        if g[n, nz[0]] < 0:
            g[n] = -g[n]
    return Spectrum(omega=w, g=g, spec=spec)


def mirror_parity(spectrum: Spectrum, tol: float = 1e-8) -> ParitySignature:
    """Classify each eigenvector as mirror symmetric (+1) or antisymmetric (-1).

    A mode gets None when neither sign matches within ``tol`` or when its
    eigenvalue sits in a near-degenerate cluster (parity is basis-dependent
    there).  For a mirror-symmetric chain with simple spectrum the labels
    alternate between consecutive modes.
    """
    g = spectrum.g
    rev = g[:, ::-1]
    d_plus = np.max(np.abs(rev - g), axis=1)
    d_minus = np.max(np.abs(rev + g), axis=1)
    max_deviation = float(np.max(np.minimum(d_plus, d_minus))) if g.size else 0.0

    omega = spectrum.omega
    degenerate = np.zeros(spectrum.M, dtype=bool)
    if spectrum.M > 1:
        width = float(omega[-1] - omega[0])
        gap_tol = DEGENERACY_REL_TOL * width
        close = np.diff(omega) <= gap_tol
        degenerate[:-1] |= close
        degenerate[1:] |= close

    parity = []
    for n in range(spectrum.M):
        if degenerate[n]:
            parity.append(None)
        elif d_plus[n] <= tol and d_plus[n] <= d_minus[n]:
            parity.append(1)
        elif d_minus[n] <= tol:
            parity.append(-1)
        else:
            parity.append(None)
    return ParitySignature(parity=tuple(parity), max_deviation=max_deviation)


def _boundary_shift(k: float, x: float) -> float:
    """Quantization shift of an edge-weakened chain, in (0, pi).

    Derived by matching a sin(kj + delta) interior ansatz to the weakened
    edge rows: tan psi = c tan k with c = x^2/(2 - x^2), taken on the branch
    continuous across k = pi/2.  The pseudo-wavevector equation then reads
    (M+1) k_n = pi n + 2 (k_n - psi(k_n)).
    """
    c = x * x / (2.0 - x * x)
    # acot on the (0, pi) branch; cot(k)/c stays finite away from k = 0, pi
    return 0.5 * np.pi - np.arctan(np.cos(k) / (np.sin(k) * c))


def pseudo_wavevectors(M: int, x: float, root_tol: float = 1e-12) -> np.ndarray:
    """Solve the boundary-modified quantization condition of the edge chain.

    Returns the M strictly increasing pseudo-wavevectors k_n in (0, pi);
    -2 tau cos(k_n) reproduces the eigenvalues of edge_modified_chain(M, tau, x).
    At x = 1 the shift vanishes and k_n = pi n / (M + 1) exactly.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    if not 0.0 < x <= 1.0:
        raise ValueError("x must lie in (0, 1]")
    if not root_tol > 0.0:
        raise ValueError("root_tol must be > 0")

    ks = np.empty(M)
    lo0, hi0 = 1e-12, np.pi - 1e-12
    for n in range(1, M + 1):
        def residual(k: float) -> float:
            # strictly increasing in k: d/dk >= M - 1
            return (M - 1) * k + 2.0 * _boundary_shift(k, x) - np.pi * n

        lo, hi = lo0, hi0
        flo, fhi = residual(lo), residual(hi)
        if not (flo < 0.0 < fhi):
            raise NoRootError(n, f"no bracket for pseudo-wavevector n={n} at x={x}")
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            fmid = residual(mid)
            if abs(fmid) <= root_tol:
                lo = hi = mid
                break
            if fmid < 0.0:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-16 * max(1.0, hi):
                break
        k = 0.5 * (lo + hi)
        if abs(residual(k)) > max(root_tol, 4.0 * (M + 1) * np.finfo(float).eps):
            raise NoRootError(n, f"bisection stalled for n={n} at x={x}")
        ks[n - 1] = k
    return ks


def linearity_deviation(spectrum: Spectrum, index_range: tuple[int, int]) -> float:
    """Worst relative deviation of eigenvalue spacings from their mean.

    ``index_range`` is a 1-based inclusive (lo, hi) mode window of at least
    three modes.  Returns max_n |omega_{n+1} - omega_n - s| / s with s the
    mean spacing in the window; 0 means exactly equispaced.
    """
    lo, hi = index_range
    if not (1 <= lo < hi <= spectrum.M):
        raise ValueError(f"index_range must satisfy 1 <= lo < hi <= {spectrum.M}")
    if hi - lo + 1 < 3:
        raise ValueError("index_range must contain at least 3 modes")
    spacings = np.diff(spectrum.omega[lo - 1 : hi])
    sbar = float(np.mean(spacings))
    if sbar == 0.0:
        raise DegenerateSpectrumError("mean level spacing is zero in the window")
    return float(np.max(np.abs(spacings - sbar)) / sbar)


def mode_overlaps(spectrum: Spectrum, state: WaveState) -> np.ndarray:
    """Weights w_n = |<mode n | state>|^2; they sum to one."""
    if state.M != spectrum.M:
        raise ValueError(f"state has {state.M} sites, spectrum has {spectrum.M}")
    return np.abs(spectrum.g @ state.z) ** 2
