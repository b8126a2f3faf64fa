"""Vector matrices V_mu for two-block representations (A,B) + (C,D).

Two independent construction routes are provided and must agree exactly:

* ``closed_form_vectors`` evaluates the solved component formulas for the
  four admissible spin cases.  Per case there are four formula families:
  the combinations V+/- = (V_x +/- i V_y)/2 on the delta pattern
  a-c = b-d = +/-1/2, and (V_z +/- V_t)/2 on a-c = -(b-d) = +/-1/2.

* ``recursion_solve`` + ``vectors_from_coefficients`` re-derives the same
  matrices by anchoring the two free parameters at the extreme index of
  each off-diagonal block and stepping the ladder recursions across the
  index lattice, then assembling V_z and V_t from commutators with the
  ladder coefficients.

Nonzero solutions exist only when A = C +/- 1/2 and B = D +/- 1/2; every
other spin choice admits exactly the zero solution and is reported as
``CaseTag.NO_SOLUTION`` rather than a zero matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .matrix import Matrix
from .radical import ZERO, RadicalScalar, RationalLike, _coerce, sqrt_of_rational
from .spins import HalfInt, Spin, SpinPair
from .generators import ladder_coeff_r, ladder_coeff_s


class CaseTag(enum.Enum):
    """Which admissible spin relation holds for (A,B) + (C,D)."""

    CASE_1 = "case1"  # A = C + 1/2, B = D + 1/2
    CASE_2 = "case2"  # A = C + 1/2, B = D - 1/2
    CASE_3 = "case3"  # A = C - 1/2, B = D + 1/2
    CASE_4 = "case4"  # A = C - 1/2, B = D - 1/2
    NO_SOLUTION = "nosolution"


SELECTION_RULE = "A = C +/- 1/2 and B = D +/- 1/2"


class NoSolutionError(ValueError):
    """Raised when the spins admit only zero vector matrices."""

    def __init__(self, A: Spin, B: Spin, C: Spin, D: Spin):
        self.spins = (A, B, C, D)
        super().__init__(
            f"({A},{B})+({C},{D}) admits no nonzero vector matrices; "
            f"the selection rule {SELECTION_RULE} is violated"
        )


@dataclass(frozen=True)
class FreeParams:
    """The two scalars scaling the 12- and 21-blocks of a solution."""

    t12: RadicalScalar
    t21: RadicalScalar

    @classmethod
    def of(cls, t12: "RadicalScalar | RationalLike", t21: "RadicalScalar | RationalLike") -> "FreeParams":
        return cls(_coerce(t12), _coerce(t21))


@dataclass(frozen=True)
class VectorSet:
    """Four vector matrices with their construction metadata.

    ``kept_block`` is None for a full vector set; momentum sets produced by
    zeroing one block carry "12" or "21" so callers cannot confuse the two.
    """

    spins: tuple[SpinPair, SpinPair]
    case: CaseTag
    params: FreeParams
    Vx: Matrix
    Vy: Matrix
    Vz: Matrix
    Vt: Matrix
    kept_block: str | None = None

    @property
    def dimension(self) -> int:
        return self.Vx.rows

    @property
    def block1_dim(self) -> int:
        return self.spins[0].dimension

    def components(self) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        return (self.Vx, self.Vy, self.Vz, self.Vt)

    def component(self, mu: str) -> Matrix:
        return {"x": self.Vx, "y": self.Vy, "z": self.Vz, "t": self.Vt}[mu]

    def block(self, mat: Matrix, which: str) -> Matrix:
        n1 = self.block1_dim
        n = self.dimension
        if which == "12":
            return mat.submatrix(0, n1, n1, n)
        if which == "21":
            return mat.submatrix(n1, n, 0, n1)
        raise ValueError("block must be '12' or '21'")

    def plus_minus(self) -> tuple[Matrix, Matrix]:
        """V+ = (Vx + iVy)/2 and V- = (Vx - iVy)/2."""
        half = Fraction(1, 2)
        plus = (self.Vx + self.Vy.times_i()).scale(half)
        minus = (self.Vx - self.Vy.times_i()).scale(half)
        return plus, minus


def classify_case(A: Spin, B: Spin, C: Spin, D: Spin) -> CaseTag:
    """Match the spin quadruple against the selection rule."""
    da, db = A.twice - C.twice, B.twice - D.twice
    if abs(da) != 1 or abs(db) != 1:
        return CaseTag.NO_SOLUTION
    return {
        (1, 1): CaseTag.CASE_1,
        (1, -1): CaseTag.CASE_2,
        (-1, 1): CaseTag.CASE_3,
        (-1, -1): CaseTag.CASE_4,
    }[(da, db)]


# ---------------------------------------------------------------------------
# Closed-form route
# ---------------------------------------------------------------------------

# Component tables, one entry per case and family.  A family entry is
# (sign, (factor, factor)) evaluated on the branch sigma = +/-1:
#   sign: "s" -> sigma, "-s" -> -sigma, +1/-1 -> fixed
#   factor (slot, eps, normalized): sqrt(spin_slot + eps*sigma*index_slot),
#     divided by sqrt(2*spin_slot) when normalized.
# Families and their delta patterns (doubled-index differences):
#   pm12: rows (a,b), a-c = sigma, b-d = sigma      -> V+ (sigma=+1) / V- (sigma=-1)
#   zt12: rows (a,b), a-c = sigma, b-d = -sigma     -> (V_z + sigma*V_t)/2
#   pm21: rows (c,d), c-a = sigma, d-b = sigma
#   zt21: rows (c,d), c-a = sigma, d-b = -sigma
_CASE_FORMS: dict[CaseTag, dict[str, tuple[object, tuple, tuple]]] = {
    CaseTag.CASE_1: {
        "pm12": ("s", ("A", +1, True), ("B", +1, True)),
        "zt12": (-1, ("A", +1, True), ("B", -1, True)),
        "pm21": ("s", ("A", -1, False), ("B", -1, False)),
        "zt21": (+1, ("A", -1, False), ("B", +1, False)),
    },
    CaseTag.CASE_2: {
        "pm12": (+1, ("A", +1, True), ("D", -1, False)),
        "zt12": ("s", ("A", +1, True), ("D", +1, False)),
        "pm21": (+1, ("A", -1, False), ("D", +1, True)),
        "zt21": ("-s", ("A", -1, False), ("D", -1, True)),
    },
    CaseTag.CASE_3: {
        "pm12": (+1, ("C", -1, False), ("B", +1, True)),
        "zt12": ("-s", ("C", -1, False), ("B", -1, True)),
        "pm21": (+1, ("C", +1, True), ("B", -1, False)),
        "zt21": ("s", ("C", +1, True), ("B", +1, False)),
    },
    CaseTag.CASE_4: {
        "pm12": ("s", ("C", -1, False), ("D", -1, False)),
        "zt12": (+1, ("C", -1, False), ("D", +1, False)),
        "pm21": ("s", ("C", +1, True), ("D", +1, True)),
        "zt21": (-1, ("C", +1, True), ("D", -1, True)),
    },
}


def _factor(
    slot: str,
    eps: int,
    normalized: bool,
    sigma: int,
    spins: dict[str, Spin],
    indices: dict[str, HalfInt],
) -> RadicalScalar:
    spin = spins[slot]
    idx = indices[slot.lower()]
    val = Fraction(spin.twice + eps * sigma * idx.twice, 2)
    if normalized:
        val /= spin.twice  # divide the radicand by 2*spin
    return sqrt_of_rational(val)


def _form_sign(mode: object, sigma: int) -> int:
    if mode == "s":
        return sigma
    if mode == "-s":
        return -sigma
    return int(mode)  # type: ignore[arg-type]


def closed_form_vectors(
    A: Spin, B: Spin, C: Spin, D: Spin, params: FreeParams
) -> VectorSet:
    """Assemble V_x, V_y, V_z, V_t from the per-case component tables."""
    case = classify_case(A, B, C, D)
    if case is CaseTag.NO_SOLUTION:
        raise NoSolutionError(A, B, C, D)
    forms = _CASE_FORMS[case]
    spins = {"A": A, "B": B, "C": C, "D": D}
    pair1, pair2 = SpinPair(A, B), SpinPair(C, D)
    n1 = pair1.dimension
    n = n1 + pair2.dimension

    plus, minus = Matrix.zeros(n), Matrix.zeros(n)
    zt_plus, zt_minus = Matrix.zeros(n), Matrix.zeros(n)

    def family(name: str, sigma: int, indices: dict[str, HalfInt]) -> RadicalScalar:
        sign, f1, f2 = forms[name]
        coeff = _factor(*f1, sigma, spins, indices) * _factor(*f2, sigma, spins, indices)
        s = _form_sign(sign, sigma)
        return -coeff if s < 0 else coeff

    basis1, basis2 = pair1.basis(), pair2.basis()
    for i, (a, b) in enumerate(basis1):
        for j, (c, d) in enumerate(basis2):
            idx = {"a": a, "b": b, "c": c, "d": d}
            da, db = a.twice - c.twice, b.twice - d.twice
            for sigma in (+1, -1):
                if da == sigma and db == sigma:
                    target = plus if sigma > 0 else minus
                    target.set(i, n1 + j, family("pm12", sigma, idx) * params.t12)
                if da == sigma and db == -sigma:
                    target = zt_plus if sigma > 0 else zt_minus
                    target.set(i, n1 + j, family("zt12", sigma, idx) * params.t12)
                if -da == sigma and -db == sigma:
                    target = plus if sigma > 0 else minus
                    target.set(n1 + j, i, family("pm21", sigma, idx) * params.t21)
                if -da == sigma and -db == -sigma:
                    target = zt_plus if sigma > 0 else zt_minus
                    target.set(n1 + j, i, family("zt21", sigma, idx) * params.t21)

    return _vector_set_from_families(
        (pair1, pair2), case, params, plus, minus, zt_plus, zt_minus
    )


def _vector_set_from_families(
    spins: tuple[SpinPair, SpinPair],
    case: CaseTag,
    params: FreeParams,
    plus: Matrix,
    minus: Matrix,
    zt_plus: Matrix,
    zt_minus: Matrix,
) -> VectorSet:
    """Recover Cartesian components from V+/-, (V_z +/- V_t)/2."""
    vx = plus + minus
    vy = (plus - minus).times_i().scale(-1)
    vz = zt_plus + zt_minus
    vt = zt_plus - zt_minus
    return VectorSet(spins=spins, case=case, params=params, Vx=vx, Vy=vy, Vz=vz, Vt=vt)


# ---------------------------------------------------------------------------
# Recursion route (independent cross-check of the closed forms)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TUCoefficients:
    """Block coefficients keyed by doubled index pairs.

    ``t12``/``u12`` are keyed by (2a, 2b) and scale the 12-block patterns
    a-c = b-d = +1/2 and -1/2; ``t21``/``u21`` are keyed by (2c, 2d) for
    the mirrored 21-block patterns.
    """

    spins: tuple[SpinPair, SpinPair]
    case: CaseTag
    params: FreeParams
    t12: dict[tuple[int, int], RadicalScalar]
    u12: dict[tuple[int, int], RadicalScalar]
    t21: dict[tuple[int, int], RadicalScalar]
    u21: dict[tuple[int, int], RadicalScalar]


def _solve_block(
    P: Spin, Q: Spin, R: Spin, S: Spin, anchor: RadicalScalar
) -> tuple[dict[tuple[int, int], RadicalScalar], dict[tuple[int, int], RadicalScalar]]:
    """Ladder-recursion coefficients for one block, rows (P,Q), cols (R,S).

    tau[(2p, 2q)] sits on the pattern p-r = q-s = +1/2 and is anchored at
    the top of its index ranges with the block's free parameter; ups, on
    p-r = q-s = -1/2, is anchored at the bottom with sign - when P-R and
    Q-S agree in sign and + otherwise.  Each step divides by an in-range
    ladder coefficient, which is never zero there.
    """
    t_plo, t_phi = max(-P.twice, -R.twice + 1), min(P.twice, R.twice + 1)
    t_qlo, t_qhi = max(-Q.twice, -S.twice + 1), min(Q.twice, S.twice + 1)

    tau: dict[tuple[int, int], RadicalScalar] = {(t_phi, t_qhi): anchor}
    for p in range(t_phi, t_plo, -2):
        step = ladder_coeff_r(R, HalfInt(p - 3)) / ladder_coeff_r(P, HalfInt(p - 2))
        tau[(p - 2, t_qhi)] = tau[(p, t_qhi)] * step
    for p in range(t_plo, t_phi + 1, 2):
        for q in range(t_qhi, t_qlo, -2):
            step = ladder_coeff_r(S, HalfInt(q - 3)) / ladder_coeff_r(Q, HalfInt(q - 2))
            tau[(p, q - 2)] = tau[(p, q)] * step

    u_plo, u_phi = max(-P.twice, -R.twice - 1), min(P.twice, R.twice - 1)
    u_qlo, u_qhi = max(-Q.twice, -S.twice - 1), min(Q.twice, S.twice - 1)
    same_orientation = (P.twice - R.twice) == (Q.twice - S.twice)
    seed = -anchor if same_orientation else anchor

    ups: dict[tuple[int, int], RadicalScalar] = {(u_plo, u_qlo): seed}
    for p in range(u_plo, u_phi, 2):
        step = ladder_coeff_s(R, HalfInt(p + 3)) / ladder_coeff_s(P, HalfInt(p + 2))
        ups[(p + 2, u_qlo)] = ups[(p, u_qlo)] * step
    for p in range(u_plo, u_phi + 1, 2):
        for q in range(u_qlo, u_qhi, 2):
            step = ladder_coeff_s(S, HalfInt(q + 3)) / ladder_coeff_s(Q, HalfInt(q + 2))
            ups[(p, q + 2)] = ups[(p, q)] * step
    return tau, ups


def recursion_solve(
    A: Spin, B: Spin, C: Spin, D: Spin, params: FreeParams
) -> TUCoefficients:
    """Populate every in-range t/u coefficient from the two anchors."""
    case = classify_case(A, B, C, D)
    if case is CaseTag.NO_SOLUTION:
        raise NoSolutionError(A, B, C, D)
    t12, u12 = _solve_block(A, B, C, D, params.t12)
    # The 21-block obeys the same recursions with the roles of the two
    # blocks exchanged (a<->c, b<->d, 12<->21).
    t21, u21 = _solve_block(C, D, A, B, params.t21)
    return TUCoefficients(
        spins=(SpinPair(A, B), SpinPair(C, D)),
        case=case,
        params=params,
        t12=t12,
        u12=u12,
        t21=t21,
        u21=u21,
    )


def vectors_from_coefficients(coeffs: TUCoefficients) -> VectorSet:
    """Place t/u coefficients on their delta patterns and derive V_z, V_t.

    V_z and V_t come from commutators of the ladder matrices with V-:
    on the pattern a-c = -(b-d) = +1/2 both equal
    r^A_(a-1) u12_(a-1,b) - r^C_c u12_(a,b), and on the mirrored pattern
    they differ by a sign; likewise for the 21-block with a<->c, b<->d.
    """
    pair1, pair2 = coeffs.spins
    A, B = pair1.left, pair1.right
    C, D = pair2.left, pair2.right
    n1 = pair1.dimension
    n = n1 + pair2.dimension
    plus, minus = Matrix.zeros(n), Matrix.zeros(n)
    zt_plus, zt_minus = Matrix.zeros(n), Matrix.zeros(n)

    pos1 = {(a.twice, b.twice): i for i, (a, b) in enumerate(pair1.basis())}
    pos2 = {(c.twice, d.twice): j for j, (c, d) in enumerate(pair2.basis())}

    for (a, b), val in coeffs.t12.items():
        j = pos2.get((a - 1, b - 1))
        if j is not None:
            plus.set(pos1[(a, b)], n1 + j, val)
    for (a, b), val in coeffs.u12.items():
        j = pos2.get((a + 1, b + 1))
        if j is not None:
            minus.set(pos1[(a, b)], n1 + j, val)
    for (c, d), val in coeffs.t21.items():
        i = pos1.get((c - 1, d - 1))
        if i is not None:
            plus.set(n1 + pos2[(c, d)], i, val)
    for (c, d), val in coeffs.u21.items():
        i = pos1.get((c + 1, d + 1))
        if i is not None:
            minus.set(n1 + pos2[(c, d)], i, val)

    def u12_at(a: int, b: int) -> RadicalScalar:
        return coeffs.u12.get((a, b), ZERO)

    def u21_at(c: int, d: int) -> RadicalScalar:
        return coeffs.u21.get((c, d), ZERO)

    for (a, b), i in pos1.items():
        j = pos2.get((a - 1, b + 1))
        if j is not None:
            term = ladder_coeff_r(A, HalfInt(a - 2)) * u12_at(a - 2, b) - ladder_coeff_r(
                C, HalfInt(a - 1)
            ) * u12_at(a, b)
            zt_plus.set(i, n1 + j, term)
        j = pos2.get((a + 1, b - 1))
        if j is not None:
            term = ladder_coeff_r(B, HalfInt(b - 2)) * u12_at(a, b - 2) - ladder_coeff_r(
                D, HalfInt(b - 1)
            ) * u12_at(a, b)
            zt_minus.set(i, n1 + j, term)

    for (c, d), j in pos2.items():
        i = pos1.get((c - 1, d + 1))
        if i is not None:
            term = ladder_coeff_r(C, HalfInt(c - 2)) * u21_at(c - 2, d) - ladder_coeff_r(
                A, HalfInt(c - 1)
            ) * u21_at(c, d)
            zt_plus.set(n1 + j, i, term)
        i = pos1.get((c + 1, d - 1))
        if i is not None:
            term = ladder_coeff_r(D, HalfInt(d - 2)) * u21_at(c, d - 2) - ladder_coeff_r(
                B, HalfInt(d - 1)
            ) * u21_at(c, d)
            zt_minus.set(n1 + j, i, term)

    return _vector_set_from_families(
        coeffs.spins, coeffs.case, coeffs.params, plus, minus, zt_plus, zt_minus
    )
