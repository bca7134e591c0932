"""Cube roots of differential operators via 3x3 tau matrices.

``(b*tau_1 + c*tau_2)**3 == (b**3 + c**3) * I`` turns
``d/dt phi = (d^3/dx^3 + k)**(1/3) phi`` into a first-order system for a
three-component field, evolved here with a Fourier split-step scheme.
"""
from .pseudo_hyperbolic import CubicRoots, cube_roots_of_unity, pseudo_hyp, pseudo_hyp_series
from .spectral_solver import (
    EvolutionParams,
    GridSpec,
    convergence_table,
    error_norm,
    evolve,
    evolve_exact,
    initial_state,
    mode_generator,
    trotter_step,
)
from .tau_algebra import (
    check_cubic_clifford,
    commutator,
    cubic_combination,
    exp_general,
    exp_tau,
    tau,
)

__version__ = "0.1.0"

__all__ = [
    "CubicRoots",
    "EvolutionParams",
    "GridSpec",
    "check_cubic_clifford",
    "commutator",
    "convergence_table",
    "cube_roots_of_unity",
    "cubic_combination",
    "error_norm",
    "evolve",
    "evolve_exact",
    "exp_general",
    "exp_tau",
    "initial_state",
    "mode_generator",
    "pseudo_hyp",
    "pseudo_hyp_series",
    "tau",
    "trotter_step",
]
