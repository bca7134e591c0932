"""Order-3 pseudo-hyperbolic functions and the cube roots of unity.

The three functions

    C_m(alpha) = sum_{l >= 0} alpha**(3l + m) / (3l + m)!     (m = 0, 1, 2)

split the exponential series by the residue of the exponent mod 3, so that
C_0 + C_1 + C_2 = exp.  They are evaluated through the root-of-unity filter

    C_m(alpha) = 1/3 * sum_j eps_j**(-m) * exp(eps_j * alpha)

which keeps the accuracy of ``exp`` for large arguments.  The truncated series
is kept as an independent reference (``pseudo_hyp_series``).
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

__all__ = [
    "ALPHA_MAX",
    "CubicRoots",
    "ROOTS",
    "cube_roots_of_unity",
    "pseudo_hyp",
    "pseudo_hyp_all",
    "pseudo_hyp_series",
]

#: Largest |alpha| accepted by :func:`pseudo_hyp`.
ALPHA_MAX = 50.0

# below this |alpha| the filtered sum for C_2 loses relative accuracy (its
# O(alpha) parts cancel); a three-term expansion is exact to rounding there
_SMALL = 1e-2


class CubicRoots(NamedTuple):
    eps0: complex
    eps_plus: complex
    eps_minus: complex


def cube_roots_of_unity() -> CubicRoots:
    """Return ``(1, -1/2 + i*sqrt(3)/2, -1/2 - i*sqrt(3)/2)``."""
    half_root3 = 0.5 * math.sqrt(3.0)
    return CubicRoots(
        complex(1.0, 0.0),
        complex(-0.5, half_root3),
        complex(-0.5, -half_root3),
    )


ROOTS = cube_roots_of_unity()

# eps_j**(-m) for j = 0, +, -; eps_+**-1 == eps_-, so inverse powers are
# conjugate powers.
_FILTER = tuple(
    (1.0 + 0j, ROOTS.eps_minus**m, ROOTS.eps_plus**m) for m in range(3)
)


def _check_index(m) -> int:
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m not in (0, 1, 2):
        raise ValueError(f"residue index must be 0, 1 or 2, got {m!r}")
    return int(m)


def _as_argument(alpha) -> np.ndarray:
    a = np.asarray(alpha, dtype=complex)
    if not np.all(np.isfinite(a)):
        raise ValueError("alpha must be finite")
    if a.size and np.max(np.abs(a)) > ALPHA_MAX:
        raise ValueError(
            f"|alpha| = {np.max(np.abs(a)):.6g} exceeds the supported range {ALPHA_MAX:g}"
        )
    return a


def pseudo_hyp(m: int, alpha):
    """Evaluate ``C_m(alpha)`` via the root-of-unity closed form.

    ``alpha`` may be a complex scalar or an array (evaluated elementwise).
    Raises ``ValueError`` for ``m`` outside ``{0, 1, 2}``, non-finite input,
    or ``|alpha| > ALPHA_MAX``.
    """
    m = _check_index(m)
    a = _as_argument(alpha)
    _, wp, wm = _FILTER[m]
    if m == 0:
        out = (np.exp(a) + wp * np.exp(ROOTS.eps_plus * a) + wm * np.exp(ROOTS.eps_minus * a)) / 3.0
    else:
        # the filter weights sum to zero for m = 1, 2; dropping the constant
        # term of exp avoids cancellation when alpha is small
        out = (np.expm1(a) + wp * np.expm1(ROOTS.eps_plus * a) + wm * np.expm1(ROOTS.eps_minus * a)) / 3.0
        if m == 2:
            small = np.abs(a) < _SMALL
            if np.any(small):
                z = a[small] if a.ndim else a
                sq = z * z
                near = sq / 2.0 * (1.0 + sq * z / 60.0 * (1.0 + sq * z / 336.0))
                if a.ndim:
                    out[small] = near
                else:
                    out = np.asarray(near)
    if out.ndim == 0:
        return complex(out)
    return out


def pseudo_hyp_all(alpha):
    """Return ``(C_0, C_1, C_2)`` evaluated at ``alpha``."""
    return tuple(pseudo_hyp(m, alpha) for m in range(3))


def pseudo_hyp_series(m: int, alpha: complex, terms: int) -> complex:
    """Partial sum of the defining series with ``terms`` summands."""
    m = _check_index(m)
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    alpha = complex(alpha)
    cube = alpha**3
    term = alpha**m / math.factorial(m)
    total = term
    for l in range(terms - 1):
        p = 3 * l + m
        term = term * cube / ((p + 1) * (p + 2) * (p + 3))
        total += term
    return total
