"""Spectral evolution of the matrix-linearized cube-root equation.

The scalar problem ``d/dt phi = (d^3/dx^3 + k)**(1/3) phi`` is replaced by the
first-order three-component system

    d/dt Phi = (d/dx tau_1 + k tau_2) Phi

on a periodic grid.  ``d/dx`` is diagonal in Fourier space (``i*kappa``), so
each mode evolves under its own 3x3 generator.  The split propagator
``exp(delta k tau_2) exp(delta d/dx tau_1)`` is iterated (first order in
``delta``); the unsplit exponential per mode is the reference solution.

Since ``(i kappa tau_1 + k tau_2)**3 = ((i kappa)**3 + k**3) I``, the
generator is a cube root of ``d^3/dx^3 + k**3``; to model
``(d^3/dx^3 + K)**(1/3)`` pass any cube root of ``K`` as ``k``.  The two
coincide for ``k = 1``.

States are complex arrays of shape ``(3, n_points)``; row ``i`` is component
``phi_{i+1}`` sampled at ``GridSpec.x``.

The generator is not skew-Hermitian: one branch of each mode grows like
``exp(sqrt(3)/2 * |kappa| * t)``, so the norm of a state is not conserved.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .fft import dft, idft, is_power_of_two
from .tau_algebra import exp_general, exp_tau, tau

__all__ = [
    "ConvergenceRow",
    "EvolutionParams",
    "GridSpec",
    "PRESETS",
    "check_state",
    "convergence_table",
    "error_norm",
    "evolve",
    "evolve_exact",
    "exact_propagators",
    "fit_slope",
    "initial_state",
    "mode_generator",
    "step_matrices",
    "trotter_step",
]

PRESETS = ("gaussian", "plane-wave", "box")


@dataclass(frozen=True)
class GridSpec:
    """Periodic grid of ``n_points`` samples on ``[0, length)``."""

    n_points: int
    length: float

    def __post_init__(self):
        if isinstance(self.n_points, bool) or not isinstance(self.n_points, (int, np.integer)):
            raise ValueError(f"n_points must be an integer, got {self.n_points!r}")
        if self.n_points < 4 or not is_power_of_two(int(self.n_points)):
            raise ValueError(f"n_points must be a power of two >= 4, got {self.n_points}")
        if not (math.isfinite(self.length) and self.length > 0):
            raise ValueError(f"length must be finite and positive, got {self.length}")

    @property
    def x(self) -> np.ndarray:
        return np.arange(self.n_points) * (self.length / self.n_points)

    @property
    def wavenumbers(self) -> np.ndarray:
        """Signed wavenumbers per DFT bin; the Nyquist bin maps to ``-n/2``."""
        n = self.n_points
        m = np.arange(n)
        signed = np.where(m < n // 2, m, m - n)
        return 2.0 * np.pi * signed / self.length


@dataclass(frozen=True)
class EvolutionParams:
    k: complex
    t_final: float
    steps: int

    def __post_init__(self):
        if isinstance(self.steps, bool) or not isinstance(self.steps, (int, np.integer)) or self.steps < 1:
            raise ValueError(f"steps must be an integer >= 1, got {self.steps!r}")
        if not math.isfinite(self.t_final):
            raise ValueError(f"t_final must be finite, got {self.t_final}")
        k = complex(self.k)
        if not (math.isfinite(k.real) and math.isfinite(k.imag)):
            raise ValueError(f"k must be finite, got {self.k}")

    @property
    def delta(self) -> float:
        return self.t_final / self.steps


def check_state(state, grid: GridSpec) -> np.ndarray:
    s = np.asarray(state, dtype=complex)
    if s.shape != (3, grid.n_points):
        raise ValueError(f"state shape {s.shape} does not match grid (3, {grid.n_points})")
    return s


def initial_state(grid: GridSpec, preset: str = "gaussian", mode: int = 1, component: int = 1) -> np.ndarray:
    """Sample a preset profile into one component; the other two are zero.

    ``gaussian``: ``exp(-(x - L/2)**2 / (2 sigma**2))`` with ``sigma = L/20``.
    ``plane-wave``: ``exp(i * 2 pi mode x / L)``.
    ``box``: 1 on ``[L/4, 3L/4)``, 0 elsewhere.
    """
    if component not in (1, 2, 3):
        raise ValueError(f"component must be 1, 2 or 3, got {component!r}")
    x, L = grid.x, grid.length
    if preset == "gaussian":
        sigma = L / 20.0
        profile = np.exp(-((x - L / 2) ** 2) / (2 * sigma**2))
    elif preset == "plane-wave":
        profile = np.exp(2j * np.pi * mode * x / L)
    elif preset == "box":
        profile = ((x >= L / 4) & (x < 3 * L / 4)).astype(float)
    else:
        raise ValueError(f"unknown preset {preset!r}; expected one of {', '.join(PRESETS)}")
    state = np.zeros((3, grid.n_points), dtype=complex)
    state[component - 1] = profile
    return state


def mode_generator(kappa: float, k: complex) -> np.ndarray:
    """Generator ``i*kappa*tau_1 + k*tau_2`` of a single Fourier mode.

    Its cube is ``((i*kappa)**3 + k**3) * I``; it is nilpotent for ``k = -i*kappa``.
    """
    return (1j * kappa) * tau(1) + complex(k) * tau(2)


def _apply_per_mode(matrices: np.ndarray, spectrum: np.ndarray) -> np.ndarray:
    # matrices: (n, 3, 3), spectrum: (3, n)
    return np.einsum("mij,jm->im", matrices, spectrum)


def trotter_step(state, grid: GridSpec, k: complex, delta: float) -> np.ndarray:
    """One split step ``exp(delta k tau_2) exp(delta d/dx tau_1)`` on a sampled state.

    The derivative factor is applied mode by mode in Fourier space, then the
    constant ``tau_2`` factor pointwise on the grid.
    """
    s = check_state(state, grid)
    spectrum = dft(s)
    spectrum = _apply_per_mode(exp_tau(1, 1j * grid.wavenumbers * delta), spectrum)
    s = idft(spectrum)
    return exp_tau(2, delta * complex(k)) @ s


def step_matrices(grid: GridSpec, k: complex, delta: float) -> np.ndarray:
    """Per-mode matrix of one split step, shape ``(n_points, 3, 3)``."""
    return exp_tau(2, delta * complex(k)) @ exp_tau(1, 1j * grid.wavenumbers * delta)


def evolve(initial, grid: GridSpec, params: EvolutionParams) -> np.ndarray:
    """Apply the split step ``params.steps`` times with ``delta = t_final / steps``.

    The pointwise ``tau_2`` factor is constant in x and therefore commutes with
    the transform, so all steps are carried out on the spectrum and only one
    forward and one inverse transform are taken.  Transforming back every
    step would give the same result in exact arithmetic, but its rounding
    error lands in every mode and is then amplified by the growing branch.
    """
    s = check_state(initial, grid)
    step = step_matrices(grid, params.k, params.delta)
    spectrum = dft(s)
    for _ in range(params.steps):
        spectrum = _apply_per_mode(step, spectrum)
    return idft(spectrum)


def exact_propagators(grid: GridSpec, k: complex, t: float) -> np.ndarray:
    return np.array([exp_general(mode_generator(kappa, k), t) for kappa in grid.wavenumbers])


def evolve_exact(initial, grid: GridSpec, params: EvolutionParams) -> np.ndarray:
    """Unsplit solution: each mode multiplied by ``exp(t * generator)``."""
    s = check_state(initial, grid)
    return idft(_apply_per_mode(exact_propagators(grid, params.k, params.t_final), dft(s)))


def error_norm(a, b) -> float:
    """Max over points and components of ``|a - b|``."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))


class ConvergenceRow(NamedTuple):
    n: int
    delta: float
    max_error: float


def convergence_table(initial, grid: GridSpec, k: complex, t_final: float,
                      steps_list: Sequence[int]) -> list[ConvergenceRow]:
    """Split-step error against the exact solution for each step count."""
    steps_list = list(steps_list)
    if not steps_list:
        raise ValueError("steps_list must be nonempty")
    if any(b <= a for a, b in zip(steps_list, steps_list[1:])):
        raise ValueError(f"steps_list must be strictly ascending, got {steps_list}")
    reference = evolve_exact(initial, grid, EvolutionParams(k, t_final, 1))
    rows = []
    for n in steps_list:
        params = EvolutionParams(k, t_final, n)
        err = error_norm(evolve(initial, grid, params), reference)
        rows.append(ConvergenceRow(n, params.delta, err))
    return rows


def fit_slope(rows: Sequence[ConvergenceRow], floor: float = 1e-13) -> float | None:
    """Least-squares slope of log(error) against log(delta).

    Rows with error below ``floor`` are dropped; ``None`` if fewer than two remain.
    """
    pts = [(r.delta, r.max_error) for r in rows if r.max_error >= floor and r.delta > 0]
    if len(pts) < 2:
        return None
    logd = np.log([p[0] for p in pts])
    loge = np.log([p[1] for p in pts])
    slope, _ = np.polyfit(logd, loge, 1)
    return float(slope)
