"""The rule checker itself: completeness, fault sensitivity, numeric probes."""

import math
from dataclasses import replace

import numpy as np
import pytest

from poincarerep.generators import GeneratorSet, direct_sum, irrep_generators, spin
from poincarerep.matrix import Matrix, commutator
from poincarerep.momentum import BlockChoice, momentum_from_vectors
from poincarerep.radical import I_UNIT, ONE, ZERO, RadicalScalar
from poincarerep.spins import SpinPair
from poincarerep.vectors import FreeParams, closed_form_vectors
from poincarerep.verify import (
    SeriesDivergenceError,
    check_clifford,
    check_lorentz,
    check_poincare,
    check_translations,
    check_vector_rules,
    epsilon,
    finite_covariance_check,
    matrix_exp,
)

UNIT = FreeParams(ONE, ONE)


def _weyl_rep():
    pair1, pair2 = SpinPair(spin(1), spin(0)), SpinPair(spin(0), spin(1))
    g = direct_sum(pair1, pair2)
    v = closed_form_vectors(spin(1), spin(0), spin(0), spin(1), UNIT)
    return g, v


class TestEpsilon:
    def test_values(self):
        assert epsilon("x", "y", "z") == 1
        assert epsilon("y", "x", "z") == -1
        assert epsilon("x", "x", "z") == 0


class TestCommutator:
    def test_identity_commutes(self):
        m = Matrix.from_entries(2, 2, {(0, 1): ONE, (1, 0): -I_UNIT})
        assert commutator(Matrix.identity(2), m).is_zero()

    def test_jz_jx_gives_i_jy(self):
        g = irrep_generators(SpinPair(spin(1), spin(0)))
        assert commutator(g.J[2], g.J[0]) == g.J[1].times_i()

    def test_two_by_two_hand_value(self):
        diag = Matrix.from_entries(2, 2, {(0, 0): ONE, (1, 1): -ONE})
        anti = Matrix.from_entries(2, 2, {(0, 1): ONE, (1, 0): ONE})
        expected = Matrix.from_entries(
            2, 2, {(0, 1): RadicalScalar.from_rational(2),
                   (1, 0): RadicalScalar.from_rational(-2)}
        )
        assert commutator(diag, anti) == expected

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            commutator(Matrix.identity(2), Matrix.identity(3))


class TestLorentzChecks:
    def test_all_hold_for_irrep(self):
        reports = check_lorentz(irrep_generators(SpinPair(spin(1), spin(0))))
        assert len(reports) == 15 and all(r.holds for r in reports)

    def test_trivial_rep_holds(self):
        reports = check_lorentz(irrep_generators(SpinPair(spin(0), spin(0))))
        assert all(r.holds for r in reports)

    def test_transposed_boost_caught(self):
        g = irrep_generators(SpinPair(spin(1), spin(1)))
        # adjoint of the anti-Hermitian K_x is -K_x: a genuine sign fault
        broken = GeneratorSet(
            spins=g.spins,
            J=g.J,
            K=(g.K[0].conjugate_transpose(), g.K[1], g.K[2]),
        )
        reports = check_lorentz(broken)
        failing = [r.rule_id for r in reports if not r.holds]
        assert failing, "transposing K_x must break at least one rule"
        assert any(rid.startswith(("JK", "KK")) for rid in failing)

    def test_report_carries_residual_location(self):
        g = irrep_generators(SpinPair(spin(1), spin(0)))
        broken = GeneratorSet(spins=g.spins, J=g.J, K=(g.K[0].scale(2), g.K[1], g.K[2]))
        bad = [r for r in check_lorentz(broken) if not r.holds]
        assert bad and all(r.first_violation is not None for r in bad)
        row, col, residual = bad[0].first_violation
        assert not residual.is_zero()
        assert bad[0].to_json()["firstViolation"]["row"] == row


class TestVectorRuleChecks:
    def test_closed_form_passes(self):
        g, v = _weyl_rep()
        reports = check_vector_rules(g, v)
        assert len(reports) == 24 and all(r.holds for r in reports)

    def test_zero_vectors_pass(self):
        g, v = _weyl_rep()
        zero = replace(
            v,
            Vx=Matrix.zeros(4), Vy=Matrix.zeros(4),
            Vz=Matrix.zeros(4), Vt=Matrix.zeros(4),
        )
        assert all(r.holds for r in check_vector_rules(g, zero))

    def test_flipped_time_component_fails_kv_diagonal(self):
        g, v = _weyl_rep()
        flipped = replace(v, Vt=v.Vt.scale(-1))
        failing = {r.rule_id for r in check_vector_rules(g, flipped) if not r.holds}
        assert {"KV.xx", "KV.yy", "KV.zz", "KV.xt", "KV.yt", "KV.zt"} <= failing

    def test_single_entry_perturbation_detected(self):
        g, v = _weyl_rep()
        for mu in "xyzt":
            mat = v.component(mu)
            i, j, val = mat.first_nonzero()
            bumped = mat + Matrix.from_entries(4, 4, {(i, j): ONE})
            assert bumped.get(i, j) == val + ONE
            broken = replace(v, **{f"V{mu}": bumped})
            assert not all(r.holds for r in check_vector_rules(g, broken))


class TestTranslationsAndCount:
    def test_momentum_holds_and_full_set_is_45(self):
        g, v = _weyl_rep()
        p = momentum_from_vectors(v, BlockChoice.KEEP_21)
        reports = check_poincare(g, p)
        assert len(reports) == 45
        assert all(r.holds for r in reports)
        ids = [r.rule_id for r in reports]
        assert len(set(ids)) == 45
        assert sum(rid.startswith("PP") for rid in ids) == 6

    def test_two_block_vector_fails_translations(self):
        v = closed_form_vectors(spin(1), spin(1), spin(0), spin(0), UNIT)
        failing = [r for r in check_translations(v) if not r.holds]
        assert failing

    def test_zero_momentum_holds(self):
        v = closed_form_vectors(
            spin(1), spin(1), spin(0), spin(0), FreeParams(ZERO, ZERO)
        )
        assert all(r.holds for r in check_translations(v))


class TestClifford:
    def test_dirac_holds_with_k_two(self):
        v = closed_form_vectors(spin(1), spin(0), spin(0), spin(1), UNIT)
        rep = check_clifford(v)
        assert rep.holds and not rep.degenerate_zero
        assert rep.k == RadicalScalar.from_rational(2)

    def test_vector_rep_fails(self):
        v = closed_form_vectors(spin(1), spin(1), spin(0), spin(0), UNIT)
        rep = check_clifford(v)
        assert not rep.holds
        assert rep.first_violation is not None

    def test_zero_set_degenerate(self):
        v = closed_form_vectors(
            spin(1), spin(0), spin(0), spin(1), FreeParams(ZERO, ZERO)
        )
        rep = check_clifford(v)
        assert rep.holds and rep.degenerate_zero and rep.k == ZERO


class TestMatrixExp:
    def test_zero_matrix(self):
        out = matrix_exp(np.zeros((3, 3), dtype=complex))
        assert np.allclose(out, np.eye(3), atol=1e-15)

    def test_rotation_matches_cos_sin(self):
        theta = 0.7
        g = np.array([[0.0, -1j], [1j, 0.0]])  # sigma_y
        d = matrix_exp(1j * theta * g / 2)
        # exp(i theta sigma_y / 2) = cos(theta/2) I + i sin(theta/2) sigma_y
        expected = math.cos(theta / 2) * np.eye(2) + 1j * math.sin(theta / 2) * g
        assert np.max(np.abs(d - expected)) < 1e-14

    def test_large_angle_uses_squaring(self):
        g = np.diag([1.0, -2.0]).astype(complex)
        out = matrix_exp(g * 6.0)
        assert abs(out[0, 0] - math.exp(6.0)) < 1e-9 * math.exp(6.0)

    def test_divergence_flagged(self):
        with pytest.raises(SeriesDivergenceError):
            matrix_exp(np.eye(2, dtype=complex), max_terms=2)


class TestFiniteCovariance:
    def test_identity_transformation(self):
        g, v = _weyl_rep()
        assert finite_covariance_check(g, v, "rotation", "z", 0.0) < 1e-14

    def test_quarter_turn_on_vector_rep(self):
        A, B, C, D = spin(1), spin(1), spin(0), spin(0)
        g = direct_sum(SpinPair(A, B), SpinPair(C, D))
        v = closed_form_vectors(A, B, C, D, UNIT)
        assert finite_covariance_check(g, v, "rotation", "z", math.pi / 2) < 1e-10

    def test_boost_on_weyl_rep(self):
        g, v = _weyl_rep()
        assert finite_covariance_check(g, v, "boost", "z", 1.0) < 1e-9

    def test_all_axes_small_angles(self):
        g, v = _weyl_rep()
        for axis in "xyz":
            assert finite_covariance_check(g, v, "rotation", axis, 0.3) < 1e-11
            assert finite_covariance_check(g, v, "boost", axis, 0.4) < 1e-11
