#!/usr/bin/env python3
"""
Almost-perfect transfer by weakening just the boundary bonds.

Scaling the outermost bond pair of a uniform chain by x < 1 narrows the
excitation onto the quasi-linear part of the dispersion; adding the second
bond pair (factor y) controls the dispersion shape independently.  One and
two tuned parameters already recover most of the engineered chain's quality.
"""

import numpy as np

from qcradle import (
    diagonalize,
    edge_modified_chain,
    flatness_probe,
    peak_transfer,
    pseudo_wavevectors,
    tune_double,
    tune_single,
    uniform_chain,
)

M = 100

baseline = peak_transfer(diagonalize(uniform_chain(M, 1.0)))
print(f"uniform M={M}: peak end amplitude {baseline.peak_amplitude:.4f}")

single = tune_single(M, 1.0)
print(f"\none tuned bond pair: x* = {single.best_params[0]:.4f}, "
      f"amplitude {single.best_amplitude:.4f} "
      f"({single.evaluations} objective evaluations)")
print(f"  asymptotic law 1.03 M^(-1/6) = {1.03 * M ** (-1 / 6):.4f}")

double = tune_double(M, 1.0)
x, y = double.best_params
print(f"\ntwo tuned bond pairs: (x*, y*) = ({x:.4f}, {y:.4f}), "
      f"amplitude {double.best_amplitude:.4f}")
print(f"  asymptotic laws (2 M^(-1/3), 2^(3/4) M^(-1/6)) = "
      f"({2 * M ** (-1 / 3):.4f}, {2 ** 0.75 * M ** (-1 / 6):.4f})")
print(f"  worst amplitude within +-0.02 of the optimum: "
      f"{flatness_probe(M, 1.0, double.best_params, 0.02):.4f}")

# the analytic quantization condition behind the single-bond family
k = pseudo_wavevectors(M, single.best_params[0])
omega = diagonalize(edge_modified_chain(M, 1.0, single.best_params[0])).omega
print(f"\npseudo-wavevector check at x*: max |(-2 cos k_n) - omega_n| = "
      f"{np.max(np.abs(-2 * np.cos(k) - omega)):.2e}")
spacing = np.diff(k)
print(f"level spacing near the band center varies by "
      f"{spacing[45:54].max() / spacing[45:54].min() - 1:.1%} "
      f"(vs {spacing.max() / spacing.min() - 1:.1%} across the band)")
