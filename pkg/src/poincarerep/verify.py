"""Zero-tolerance checks of the 45 commutation rules, plus numeric probes.

Rule identifiers: "JJ.xy" means [J_x, J_y] against its right-hand side,
"KV.zt" means [K_z, V_t], "PP.xt" means [P_x, P_t], and so on.  The axis
letters are x, y, z for generators and x, y, z, t for vector components.
A full representation produces exactly 45 reports: 15 homogeneous rules,
24 rules linear in the vector components, and 6 commuting-momentum rules.

Every pass/fail verdict rests on exact RadicalScalar zero tests; only
``finite_covariance_check`` and ``matrix_exp`` work in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .generators import GeneratorSet
from .matrix import Matrix, anticommutator, commutator
from .radical import ZERO, RadicalScalar
from .vectors import VectorSet

AXES = ("x", "y", "z")
COMPONENTS = ("x", "y", "z", "t")

# Antisymmetric symbol with eps_xyz = +1; all sign flow goes through here.
_EPSILON: dict[tuple[str, str, str], int] = {}
for _i, _j, _k, _v in (
    ("x", "y", "z", 1),
    ("y", "z", "x", 1),
    ("z", "x", "y", 1),
    ("y", "x", "z", -1),
    ("x", "z", "y", -1),
    ("z", "y", "x", -1),
):
    _EPSILON[(_i, _j, _k)] = _v


def epsilon(i: str, j: str, k: str) -> int:
    return _EPSILON.get((i, j, k), 0)


@dataclass(frozen=True)
class RuleReport:
    rule_id: str
    holds: bool
    first_violation: tuple[int, int, RadicalScalar] | None = None

    def to_json(self) -> dict:
        out: dict = {"ruleId": self.rule_id, "holds": self.holds}
        if self.first_violation is not None:
            row, col, residual = self.first_violation
            out["firstViolation"] = {
                "row": row,
                "col": col,
                "residual": [
                    {"d": d, "re": [re.numerator, re.denominator], "im": [im.numerator, im.denominator]}
                    for d, re, im in residual.sorted_terms()
                ],
            }
        return out


def _report(rule_id: str, residual: Matrix) -> RuleReport:
    nz = residual.first_nonzero()
    if nz is None:
        return RuleReport(rule_id, True)
    return RuleReport(rule_id, False, nz)


def _eps_combination(mats: dict[str, Matrix], i: str, j: str, n: int) -> Matrix:
    acc = Matrix.zeros(n)
    for k in AXES:
        e = epsilon(i, j, k)
        if e:
            acc = acc + (mats[k] if e > 0 else -mats[k])
    return acc


def check_lorentz(gen: GeneratorSet) -> list[RuleReport]:
    """The 15 homogeneous rules among the J and K matrices."""
    n = gen.dimension
    J = dict(zip(AXES, gen.J))
    K = dict(zip(AXES, gen.K))
    reports = []
    for ai, i in enumerate(AXES):
        for j in AXES[ai + 1 :]:
            residual = commutator(J[i], J[j]) - _eps_combination(J, i, j, n).times_i()
            reports.append(_report(f"JJ.{i}{j}", residual))
    for i in AXES:
        for j in AXES:
            residual = commutator(J[i], K[j]) - _eps_combination(K, i, j, n).times_i()
            reports.append(_report(f"JK.{i}{j}", residual))
    for ai, i in enumerate(AXES):
        for j in AXES[ai + 1 :]:
            residual = commutator(K[i], K[j]) + _eps_combination(J, i, j, n).times_i()
            reports.append(_report(f"KK.{i}{j}", residual))
    return reports


def check_vector_rules(gen: GeneratorSet, vec: VectorSet) -> list[RuleReport]:
    """The 24 rules linear in the vector components."""
    if gen.dimension != vec.dimension:
        raise ValueError("generator and vector dimensions differ")
    n = gen.dimension
    J = dict(zip(AXES, gen.J))
    K = dict(zip(AXES, gen.K))
    V = {mu: vec.component(mu) for mu in COMPONENTS}
    reports = []
    for i in AXES:
        for j in AXES:
            residual = commutator(J[i], V[j]) - _eps_combination(V, i, j, n).times_i()
            reports.append(_report(f"JV.{i}{j}", residual))
        reports.append(_report(f"JV.{i}t", commutator(J[i], V["t"])))
    for i in AXES:
        for j in AXES:
            residual = commutator(K[i], V[j])
            if i == j:
                residual = residual + V["t"].times_i()
            reports.append(_report(f"KV.{i}{j}", residual))
        reports.append(_report(f"KV.{i}t", commutator(K[i], V["t"]) + V[i].times_i()))
    return reports


def check_translations(mom: VectorSet) -> list[RuleReport]:
    """The 6 pairwise momentum commutators."""
    P = {mu: mom.component(mu) for mu in COMPONENTS}
    reports = []
    for ai, mu in enumerate(COMPONENTS):
        for nu in COMPONENTS[ai + 1 :]:
            reports.append(_report(f"PP.{mu}{nu}", commutator(P[mu], P[nu])))
    return reports


def check_poincare(gen: GeneratorSet, mom: VectorSet) -> list[RuleReport]:
    """All 45 rules for a candidate full Poincare set (J, K, P)."""
    return check_lorentz(gen) + check_vector_rules(gen, mom) + check_translations(mom)


# ---------------------------------------------------------------------------
# Clifford spot check
# ---------------------------------------------------------------------------

# Metric diag(1, 1, 1, -1); check_clifford accepts either overall sign of k,
# so the opposite convention diag(-1, -1, -1, 1) is covered as k < 0.
_METRIC = {"x": 1, "y": 1, "z": 1, "t": -1}


@dataclass(frozen=True)
class CliffordReport:
    holds: bool
    k: RadicalScalar
    degenerate_zero: bool
    first_violation: tuple[str, str, int, int, RadicalScalar] | None = None


def check_clifford(vec: VectorSet) -> CliffordReport:
    """Test V_mu V_nu + V_nu V_mu = k * eta_mu_nu * I for a single scalar k."""
    n = vec.dimension
    V = {mu: vec.component(mu) for mu in COMPONENTS}
    anti: dict[tuple[str, str], Matrix] = {}
    for ai, mu in enumerate(COMPONENTS):
        for nu in COMPONENTS[ai:]:
            anti[(mu, nu)] = anticommutator(V[mu], V[nu])

    if all(mat.is_zero() for mat in anti.values()):
        return CliffordReport(holds=True, k=ZERO, degenerate_zero=True)
    k = ZERO
    for mu in COMPONENTS:
        diag = anti[(mu, mu)]
        if not diag.is_zero():
            k = diag.get(0, 0) * Fraction(_METRIC[mu])
            break

    identity = Matrix.identity(n)
    for (mu, nu), mat in anti.items():
        expected = (
            identity.scale(k * Fraction(_METRIC[mu])) if mu == nu else Matrix.zeros(n)
        )
        residual = mat - expected
        nz = residual.first_nonzero()
        if nz is not None:
            row, col, value = nz
            return CliffordReport(
                holds=False, k=k, degenerate_zero=False,
                first_violation=(mu, nu, row, col, value),
            )
    return CliffordReport(holds=True, k=k, degenerate_zero=False)


# ---------------------------------------------------------------------------
# Floating-point finite-transformation check
# ---------------------------------------------------------------------------


class SeriesDivergenceError(ArithmeticError):
    """The scaled exponential series failed to converge."""


def matrix_exp(m: np.ndarray, tol: float = 1e-16, max_terms: int = 80) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring of the Taylor series."""
    norm = float(np.max(np.sum(np.abs(m), axis=1))) if m.size else 0.0
    squarings = max(0, int(math.ceil(math.log2(norm)))) + 1 if norm > 1.0 else 0
    scaled = m / (2.0**squarings)
    n = m.shape[0]
    acc = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for order in range(1, max_terms + 1):
        term = term @ scaled / order
        acc += term
        if float(np.max(np.abs(term))) < tol:
            break
    else:
        raise SeriesDivergenceError(f"no convergence after {max_terms} terms")
    for _ in range(squarings):
        acc = acc @ acc
    return acc


def _lambda_matrix(kind: str, axis: str, angle: float) -> np.ndarray:
    """The 4x4 transformation of the components (x, y, z, t)."""
    lam = np.eye(4)
    if kind == "rotation":
        k = AXES.index(axis)
        i, j = (k + 1) % 3, (k + 2) % 3
        c, s = math.cos(angle), math.sin(angle)
        lam[i, i] = c
        lam[i, j] = -s
        lam[j, i] = s
        lam[j, j] = c
    elif kind == "boost":
        k = AXES.index(axis)
        ch, sh = math.cosh(angle), math.sinh(angle)
        lam[k, k] = ch
        lam[k, 3] = sh
        lam[3, k] = sh
        lam[3, 3] = ch
    else:
        raise ValueError("kind must be 'rotation' or 'boost'")
    return lam


def finite_covariance_check(
    gen: GeneratorSet, vec: VectorSet, kind: str, axis: str, angle: float
) -> float:
    """Max-entry residual of D V_mu D^-1 = Lambda_mu^nu V_nu, in floats.

    D = exp(i * angle * G) with G the requested rotation or boost generator.
    Meaningful for |angle| <= pi (rotations) or |rapidity| <= 2 (boosts);
    convergence failures of the series raise SeriesDivergenceError.
    """
    source = gen.J if kind == "rotation" else gen.K
    g = source[AXES.index(axis)].to_numpy()
    d = matrix_exp(1j * angle * g)
    d_inv = matrix_exp(-1j * angle * g)
    lam = _lambda_matrix(kind, axis, angle)
    v = [vec.component(mu).to_numpy() for mu in COMPONENTS]
    worst = 0.0
    for mu in range(4):
        transformed = d @ v[mu] @ d_inv
        target = sum(lam[mu, nu] * v[nu] for nu in range(4))
        worst = max(worst, float(np.max(np.abs(transformed - target))))
    return worst
