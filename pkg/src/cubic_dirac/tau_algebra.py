"""The 3x3 tau matrices and their exponentials.

tau_1, tau_2, tau_3 are cube roots of the identity whose pairwise mixed sums
``a@a@b + a@b@a + b@a@a`` vanish.  Consequently every cross term in
``(b*tau_1 + c*tau_2)**3`` cancels and the cube is ``(b**3 + c**3) * I``:
a linear matrix expression replaces the cube root of a sum of cubes.

Matrices are plain ``numpy`` arrays of shape ``(3, 3)`` and dtype complex.
Tolerances use the max-abs-entry norm (:func:`max_norm`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pseudo_hyperbolic import ROOTS, pseudo_hyp

__all__ = [
    "CliffordReport",
    "characteristic_polynomial",
    "check_cubic_clifford",
    "commutator",
    "cubic_combination",
    "exp_general",
    "exp_tau",
    "identity",
    "matadd",
    "matmul",
    "matscale",
    "matsub",
    "max_norm",
    "tau",
]

_EP, _EM = ROOTS.eps_plus, ROOTS.eps_minus

_TAU = {
    1: np.array([[0, 1, 0],
                 [0, 0, 1],
                 [1, 0, 0]], dtype=complex),
    2: np.array([[0, _EP, 0],
                 [0, 0, _EM],
                 [1, 0, 0]], dtype=complex),
    3: np.array([[0, 0, 1],
                 [_EP, 0, 0],
                 [0, _EM, 0]], dtype=complex),
}
for _m in _TAU.values():
    _m.flags.writeable = False


def tau(j: int) -> np.ndarray:
    """Return a fresh copy of tau_j, ``j`` in ``{1, 2, 3}``."""
    if isinstance(j, bool) or j not in _TAU:
        raise ValueError(f"tau index must be 1, 2 or 3, got {j!r}")
    return _TAU[j].copy()


def identity() -> np.ndarray:
    return np.eye(3, dtype=complex)


def matmul(a, b) -> np.ndarray:
    return np.asarray(a, dtype=complex) @ np.asarray(b, dtype=complex)


def matadd(a, b) -> np.ndarray:
    return np.asarray(a, dtype=complex) + np.asarray(b, dtype=complex)


def matsub(a, b) -> np.ndarray:
    return np.asarray(a, dtype=complex) - np.asarray(b, dtype=complex)


def matscale(s: complex, a) -> np.ndarray:
    return complex(s) * np.asarray(a, dtype=complex)


def max_norm(a) -> float:
    """Largest absolute entry."""
    return float(np.max(np.abs(a)))


def commutator(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return a @ b - b @ a


@dataclass(frozen=True)
class CliffordReport:
    cube_a_ok: bool
    cube_b_ok: bool
    mixed_ok: bool
    max_residual: float
    cube_a_residual: float = 0.0
    cube_b_residual: float = 0.0
    mixed_residual: float = 0.0

    @property
    def ok(self) -> bool:
        return self.cube_a_ok and self.cube_b_ok and self.mixed_ok


def check_cubic_clifford(a, b, tol: float) -> CliffordReport:
    """Check ``a**3 = b**3 = I`` and ``a@a@b + a@b@a + b@a@a = 0``.

    Only the ordered pair ``(a, b)`` is examined; swap the arguments to test
    the other mixed sum.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    eye = identity()
    a2 = a @ a
    r_a = max_norm(a2 @ a - eye)
    r_b = max_norm(b @ b @ b - eye)
    r_mix = max_norm(a2 @ b + a @ b @ a + b @ a2)
    return CliffordReport(
        cube_a_ok=r_a <= tol,
        cube_b_ok=r_b <= tol,
        mixed_ok=r_mix <= tol,
        max_residual=max(r_a, r_b, r_mix),
        cube_a_residual=r_a,
        cube_b_residual=r_b,
        mixed_residual=r_mix,
    )


def exp_tau(j: int, alpha) -> np.ndarray:
    """``exp(alpha * tau_j)`` as ``C_0 I + C_1 tau_j + C_2 tau_j**2``.

    Since tau_j**3 = I the exponential series collapses onto three powers.
    ``alpha`` may be an array; the result then has shape ``alpha.shape + (3, 3)``.
    """
    t = tau(j)
    t2 = t @ t
    a = np.asarray(alpha, dtype=complex)
    c0, c1, c2 = (np.asarray(pseudo_hyp(m, a))[..., None, None] for m in range(3))
    return c0 * identity() + c1 * t + c2 * t2


def exp_general(m, t: complex = 1.0) -> np.ndarray:
    """Dense ``exp(t * m)`` by scaling and squaring with a Taylor kernel.

    Makes no use of the tau structure, so it serves as a reference for
    :func:`exp_tau` and as the exact per-mode propagator.  Works for
    defective (non-diagonalizable) inputs.
    """
    a = complex(t) * np.asarray(m, dtype=complex)
    n = a.shape[0]
    norm = float(np.max(np.sum(np.abs(a), axis=1))) if a.size else 0.0
    squarings = 0
    if norm > 0.5:
        squarings = int(math.ceil(math.log2(norm / 0.5)))
        a = a / 2.0**squarings
    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, 60):
        term = term @ a / k
        result = result + term
        if max_norm(term) <= 1e-16 * max_norm(result):
            break
    for _ in range(squarings):
        result = result @ result
    return result


def cubic_combination(b: complex, c: complex) -> np.ndarray:
    """``b * tau_1 + c * tau_2``, whose cube is ``(b**3 + c**3) * I``."""
    return complex(b) * tau(1) + complex(c) * tau(2)


def characteristic_polynomial(m) -> np.ndarray:
    """Coefficients ``[1, c2, c1, c0]`` of ``det(lambda I - m)`` for a 3x3 ``m``.

    Built from trace invariants, not from eigenvalues.
    """
    m = np.asarray(m, dtype=complex)
    tr = np.trace(m)
    tr2 = np.trace(m @ m)
    det = (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )
    return np.array([1.0, -tr, 0.5 * (tr * tr - tr2), -det], dtype=complex)
