"""Exact cyclotomic polynomial heights: Phi_n/Psi_n construction, A/S/C/B
statistics, and rigorous bound constants, backed by the C++ core."""

from cyclotome._core import (
    constant_c,
    cyclotomic,
    cyclotomic_via_recursion,
    decomposition,
    dm,
    heights,
    inverse_cyclotomic,
    max_divisor_height,
    mk,
    psi_prefix,
    rho,
    sperner_bound,
)

__all__ = [
    "constant_c",
    "cyclotomic",
    "cyclotomic_via_recursion",
    "decomposition",
    "dm",
    "heights",
    "inverse_cyclotomic",
    "max_divisor_height",
    "mk",
    "psi_prefix",
    "rho",
    "sperner_bound",
]
