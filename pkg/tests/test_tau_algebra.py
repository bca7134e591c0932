import cmath
import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.linalg import expm

from cubic_dirac.pseudo_hyperbolic import ROOTS, pseudo_hyp, pseudo_hyp_all
from cubic_dirac.tau_algebra import (
    characteristic_polynomial,
    check_cubic_clifford,
    commutator,
    cubic_combination,
    exp_general,
    exp_tau,
    identity,
    matadd,
    matmul,
    matscale,
    matsub,
    max_norm,
    tau,
)

EP, EM = ROOTS.eps_plus, ROOTS.eps_minus
I3 = np.eye(3)


def complex_in_disk(radius):
    return st.builds(lambda r, th: r * cmath.exp(1j * th), st.floats(0, radius), st.floats(0, 2 * math.pi))


class TestConstruction:
    def test_tau1(self):
        np.testing.assert_array_equal(tau(1), [[0, 1, 0], [0, 0, 1], [1, 0, 0]])

    def test_tau2(self):
        np.testing.assert_array_equal(tau(2), [[0, EP, 0], [0, 0, EM], [1, 0, 0]])

    def test_tau3(self):
        np.testing.assert_array_equal(tau(3), [[0, 0, 1], [EP, 0, 0], [0, EM, 0]])

    def test_tau1_cubed(self):
        t = tau(1)
        np.testing.assert_array_equal(t @ t @ t, I3)

    @pytest.mark.parametrize("j", [0, 4, True, "1"])
    def test_bad_index(self, j):
        with pytest.raises(ValueError):
            tau(j)

    def test_returns_copy(self):
        t = tau(1)
        t[0, 0] = 5
        assert tau(1)[0, 0] == 0


class TestArithmetic:
    def test_identity_product(self):
        np.testing.assert_array_equal(matmul(identity(), tau(2)), tau(2))

    def test_permutation_squared(self):
        np.testing.assert_array_equal(matmul(tau(1), tau(1)), [[0, 0, 1], [1, 0, 0], [0, 1, 0]])

    def test_tau2_cubed(self):
        t = tau(2)
        assert max_norm(matmul(t, matmul(t, t)) - I3) <= 1e-15

    def test_add_sub_scale(self):
        a, b = tau(1), tau(3)
        np.testing.assert_array_equal(matsub(matadd(a, b), b), a)
        np.testing.assert_array_equal(matscale(2j, a), 2j * a)


class TestClifford:
    def test_tau1_tau2(self):
        r = check_cubic_clifford(tau(1), tau(2), 1e-13)
        assert r.cube_a_ok and r.cube_b_ok and r.mixed_ok

    def test_identity_pair_fails_mixed(self):
        r = check_cubic_clifford(I3, I3, 1e-13)
        assert r.cube_a_ok and r.cube_b_ok and not r.mixed_ok
        assert r.max_residual == pytest.approx(3.0)

    def test_tau1_tau3(self):
        assert check_cubic_clifford(tau(1), tau(3), 1e-13).ok

    @pytest.mark.parametrize("j,k", list(itertools.permutations([1, 2, 3], 2)))
    def test_all_ordered_pairs(self, j, k):
        r = check_cubic_clifford(tau(j), tau(k), 1e-14)
        assert r.ok, r

    def test_bad_tol(self):
        with pytest.raises(ValueError):
            check_cubic_clifford(I3, I3, 0.0)


class TestCommutator:
    def test_tau1_tau2(self):
        assert max_norm(commutator(tau(1), tau(2)) + 1j * math.sqrt(3) * tau(3)) <= 1e-15

    def test_self(self):
        np.testing.assert_array_equal(commutator(tau(1), tau(1)), np.zeros((3, 3)))

    def test_antisymmetry(self):
        assert max_norm(commutator(tau(2), tau(1)) - 1j * math.sqrt(3) * tau(3)) <= 1e-15


class TestExpTau:
    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_zero(self, j):
        np.testing.assert_array_equal(exp_tau(j, 0), I3)

    def test_tau2_explicit_pattern(self):
        # first-iteration matrix written out entry by entry
        a = 0.3
        c0, c1, c2 = pseudo_hyp_all(a)
        expected = np.array([
            [c0, EP * c1, c2],
            [EM * c2, c0, EM * c1],
            [c1, EP * c2, c0],
        ])
        assert max_norm(exp_tau(2, a) - expected) <= 1e-15

    def test_tau1_circulant(self):
        c0, c1, c2 = pseudo_hyp_all(1.0)
        expected = np.array([[c0, c1, c2], [c2, c0, c1], [c1, c2, c0]])
        assert max_norm(exp_tau(1, 1.0) - expected) <= 1e-15

    def test_batched(self):
        alphas = np.array([0.1, 1j, -2 + 0.5j])
        out = exp_tau(3, alphas)
        assert out.shape == (3, 3, 3)
        for a, m in zip(alphas, out):
            assert max_norm(m - exp_tau(3, a)) <= 1e-15

    @settings(max_examples=100)
    @given(complex_in_disk(5.0), st.sampled_from([1, 2, 3]))
    def test_inverse(self, alpha, j):
        assert max_norm(exp_tau(j, alpha) @ exp_tau(j, -alpha) - I3) <= 1e-12

    @settings(max_examples=100)
    @given(complex_in_disk(5.0), st.sampled_from([1, 2, 3]))
    def test_matches_general(self, alpha, j):
        assert max_norm(exp_tau(j, alpha) - exp_general(tau(j), alpha)) <= 1e-12


class TestExpGeneral:
    def test_zero_time(self):
        m = np.arange(9).reshape(3, 3) * (1 + 1j)
        assert max_norm(exp_general(m, 0) - I3) == 0

    def test_tau1_matches_finite_form(self):
        assert max_norm(exp_general(tau(1), 1.0) - exp_tau(1, 1.0)) <= 1e-13

    @pytest.mark.parametrize("t", [0.1, 1.0, 3.0 - 2j, 25.0])
    def test_nilpotent(self, t):
        m = cubic_combination(1, -1)
        expected = I3 + t * m + t * t * (m @ m) / 2
        scale = max(1.0, max_norm(expected))
        assert max_norm(exp_general(m, t) - expected) <= 1e-13 * scale

    def test_jordan_block(self):
        j = np.array([[2.0, 1.0, 0.0], [0.0, 2.0, 1.0], [0.0, 0.0, 2.0]])
        t = 1.5
        e = math.exp(2 * t)
        expected = e * np.array([[1, t, t * t / 2], [0, 1, t], [0, 0, 1]])
        assert max_norm(exp_general(j, t) - expected) <= 1e-13 * e

    @settings(max_examples=50)
    @given(st.lists(st.floats(-3, 3), min_size=18, max_size=18))
    def test_against_scipy(self, vals):
        m = np.array(vals[:9]).reshape(3, 3) + 1j * np.array(vals[9:]).reshape(3, 3)
        ref = expm(m)
        assert max_norm(exp_general(m) - ref) <= 1e-12 * max(1.0, max_norm(ref))


class TestCubicCombination:
    def test_definition(self):
        np.testing.assert_array_equal(cubic_combination(2, 1j), 2 * tau(1) + 1j * tau(2))

    @pytest.mark.parametrize("b,c,s", [(1, 0, 1), (1, -1, 0), (2, 1, 9)])
    def test_cube(self, b, c, s):
        m = cubic_combination(b, c)
        assert max_norm(m @ m @ m - s * I3) <= 1e-12

    @settings(max_examples=100)
    @given(complex_in_disk(2.0), complex_in_disk(2.0))
    def test_cube_random(self, b, c):
        m = cubic_combination(b, c)
        assert max_norm(m @ m @ m - (b**3 + c**3) * I3) <= 1e-12

    @settings(max_examples=100)
    @given(complex_in_disk(2.0), complex_in_disk(2.0))
    def test_characteristic_polynomial(self, b, c):
        coeffs = characteristic_polynomial(cubic_combination(b, c))
        expected = np.array([1, 0, 0, -(b**3 + c**3)])
        assert np.max(np.abs(coeffs - expected)) <= 1e-11

    def test_eigenvalues_are_rotated_cube_roots(self):
        b, c = 1.3 - 0.2j, 0.4 + 0.9j
        w = (b**3 + c**3) ** (1 / 3)
        ev = np.linalg.eigvals(cubic_combination(b, c))
        for e in (1, EP, EM):
            assert np.min(np.abs(ev - e * w)) <= 1e-12


def test_characteristic_polynomial_generic():
    m = np.array([[1, 2, 0], [0, 3, 1j], [4, 0, -1]])
    ref = np.poly(m)
    assert np.max(np.abs(characteristic_polynomial(m) - ref)) <= 1e-12


def test_pseudo_hyp_used_for_exp_tau_entries():
    a = 0.7 - 0.1j
    assert exp_tau(1, a)[0, 1] == pytest.approx(pseudo_hyp(1, a), abs=1e-16)
