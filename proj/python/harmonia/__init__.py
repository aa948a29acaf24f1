"""Spherical analysis on SL(2,R) for type-(n,n) functions."""

from ._core import (
    HarmoniaError,
    b,
    b_set,
    c,
    connection_residual,
    delta_density,
    discrete_transform,
    format_double17,
    gamma,
    gamma_set,
    hyp2f1,
    in_B1,
    l1_norm_b,
    lgamma,
    phi,
    phi_cap,
    principal_transform,
    psi,
    reconstruct,
    suite_names,
    verify,
)

__all__ = [
    "HarmoniaError",
    "b",
    "b_set",
    "c",
    "connection_residual",
    "delta_density",
    "discrete_transform",
    "format_double17",
    "gamma",
    "gamma_set",
    "hyp2f1",
    "in_B1",
    "l1_norm_b",
    "lgamma",
    "phi",
    "phi_cap",
    "principal_transform",
    "psi",
    "reconstruct",
    "suite_names",
    "verify",
]
