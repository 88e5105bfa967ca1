"""Physical constants and default probe/material numbers.

All internal quantities are SI: tesla for mu0*M fields, rad/s for angular
frequencies, meters, kelvin. Spectra J(omega) are in 1/s.
"""
import numpy as np
from scipy.constants import hbar, mu_0, c, k as k_B, physical_constants

MU_B = physical_constants["Bohr magneton"][0]  # J/T

# free-electron gyromagnetic ratio, rad s^-1 T^-1 (g ~ 2 ferromagnets)
GAMMA_E = 1.760859e11

# NV defaults: g-factor and the polar angle of the four crystallographic axes
NV_G_FACTOR = 2.003
NV_POLAR_DEG = 54.7
NV_TRANSITION = 2 * np.pi * 2.87e9  # rad/s, ground-state zero-field splitting

GAUSS_TO_TESLA = 1e-4

__all__ = [
    "hbar", "mu_0", "c", "k_B", "MU_B",
    "GAMMA_E", "NV_G_FACTOR", "NV_POLAR_DEG", "NV_TRANSITION", "GAUSS_TO_TESLA",
]
