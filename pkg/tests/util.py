"""Shared test helpers: independent dense-matrix oracles and random chains."""

from __future__ import annotations

import numpy as np

from qcradle import ChainSpec


def dense_eig(spec: ChainSpec):
    """Independent spectral oracle: dense symmetric eigensolve of H."""
    w, v = np.linalg.eigh(spec.hamiltonian())
    return w, v


def dense_propagate(spec: ChainSpec, z0: np.ndarray, t: float) -> np.ndarray:
    """Independent evolution oracle: e^{-iHt} z0 via the dense eigenbasis."""
    w, v = dense_eig(spec)
    return v @ (np.exp(-1j * w * t) * (v.conj().T @ z0))


def random_chain(rng: np.random.Generator, M: int | None = None, symmetric: bool = False) -> ChainSpec:
    if M is None:
        M = int(rng.integers(1, 31))
    if symmetric:
        # mirror halves exactly so the symmetry holds in floating point
        ht = rng.uniform(0.2, 2.5, size=(M - 1 + 1) // 2)
        tau = np.concatenate([ht, ht[: (M - 1) // 2][::-1]])
        he = rng.uniform(-1.0, 1.0, size=(M + 1) // 2)
        eps = np.concatenate([he, he[: M // 2][::-1]])
    else:
        tau = rng.uniform(0.2, 2.5, size=M - 1)
        eps = rng.uniform(-1.0, 1.0, size=M)
    return ChainSpec(M=M, tau=tau, eps=eps)


def residual_norm(spec: ChainSpec, omega: np.ndarray, g: np.ndarray) -> float:
    """max_n max_j |(H g_n)_j - omega_n g_nj| for row-wise eigenvectors."""
    H = spec.hamiltonian()
    R = g @ H.T - omega[:, None] * g
    return float(np.max(np.abs(R))) if R.size else 0.0
