"""Exact Clebsch-Gordan coefficients and the coupling-based vector route.

Coefficients are computed in the Condon-Shortley convention by seeding the
stretched state |J,J> (its leading coefficient real and positive), fixing
the M = J row from the requirement that raising annihilates it, and then
walking M downward with the exact lowering recursion

    s(J, M) <m1 m2|J M-1>
        = s(j1, m1+1) <m1+1 m2|J M> + s(j2, m2+1) <m1 m2+1|J M>.

Every value is (rational) * sqrt(positive integer), so the whole table is
exact in RadicalScalar.  The closed Racah sum is deliberately not used
here; it serves as the independent oracle in the test suite.

The vector construction dresses a fixed 2x2 seed table with two CG
factors per entry.  For the 12-block (rows (a,b), columns (c,d)):

    (V_mu_12)_{ab,cd} = lam12 * sum_{m,n} T_mu[m,n] <1/2 m, C c|A a> <1/2 n, B b|D d>

and for the 21-block the mirrored couplings <1/2 m, A a|C c> <1/2 n, D d|B b>.
The seed tables T_mu are the 12-block of the spin (1/2,0)+(0,1/2) vector
matrices in this package's basis and metric convention; relative to the
usual contravariant tabulation this flips the sign of the t component.
Coupling selection rules enforce A = C +/- 1/2, B = D +/- 1/2, so
inadmissible spins yield identically zero blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .generators import ladder_coeff_r, ladder_coeff_s
from .matrix import Matrix
from .radical import I_UNIT, ONE, ZERO, RadicalScalar, sqrt_of_rational
from .spins import HalfInt, Spin, SpinPair
from .vectors import (
    CaseTag,
    FreeParams,
    NoSolutionError,
    VectorSet,
    classify_case,
)


@dataclass(frozen=True)
class CGKey:
    j1: Spin
    j2: Spin
    J: Spin
    m1: HalfInt
    m2: HalfInt
    M: HalfInt


def _as_rational(value: RadicalScalar) -> Fraction:
    terms = value.terms
    if not terms:
        return Fraction(0)
    if set(terms) != {1} or terms[1][1]:
        raise ValueError(f"expected a rational value, got {value}")
    return terms[1][0]


@lru_cache(maxsize=None)
def _cg_table(tj1: int, tj2: int, tJ: int) -> dict[tuple[int, int, int], RadicalScalar]:
    """All coefficients <j1 m1, j2 m2|J M> for one (j1, j2, J) triple."""
    j1, j2, J = Spin(tj1), Spin(tj2), Spin(tJ)
    table: dict[tuple[int, int, int], RadicalScalar] = {}
    if tJ < abs(tj1 - tj2) or tJ > tj1 + tj2 or (tj1 + tj2 + tJ) % 2:
        return table

    # M = J row, unnormalized, from J+ |J,J> = 0.
    m1_hi = min(tj1, tJ + tj2)
    m1_lo = max(-tj1, tJ - tj2)
    row: dict[int, RadicalScalar] = {m1_hi: ONE}
    for tm1 in range(m1_hi, m1_lo, -2):
        # <m1-1, M-m1+1|J J> = -(r(j2, J-m1) / r(j1, m1-1)) <m1, M-m1|J J>
        step = ladder_coeff_r(j2, HalfInt(tJ - tm1)) / ladder_coeff_r(j1, HalfInt(tm1 - 2))
        row[tm1 - 2] = -(row[tm1] * step)
    norm_sq = Fraction(0)
    for val in row.values():
        norm_sq += _as_rational(val * val)
    inv_norm = sqrt_of_rational(norm_sq).reciprocal_single()
    row = {tm1: val * inv_norm for tm1, val in row.items()}
    for tm1, val in row.items():
        table[(tm1, tJ - tm1, tJ)] = val

    # Walk M downward with the lowering recursion.
    for tM in range(tJ, -tJ + 1, -2):
        denom = ladder_coeff_s(J, HalfInt(tM))
        next_row: dict[int, RadicalScalar] = {}
        lo = max(-tj1, (tM - 2) - tj2)
        hi = min(tj1, (tM - 2) + tj2)
        for tm1 in range(lo, hi + 2, 2):
            tm2 = (tM - 2) - tm1
            acc = ZERO
            up1 = table.get((tm1 + 2, tm2, tM))
            if up1 is not None:
                acc = acc + ladder_coeff_s(j1, HalfInt(tm1 + 2)) * up1
            up2 = table.get((tm1, tm2 + 2, tM))
            if up2 is not None:
                acc = acc + ladder_coeff_s(j2, HalfInt(tm2 + 2)) * up2
            next_row[tm1] = acc / denom
        for tm1, val in next_row.items():
            if not val.is_zero():
                table[(tm1, (tM - 2) - tm1, tM - 2)] = val
    return table


def clebsch_gordan(
    j1: Spin, m1: HalfInt, j2: Spin, m2: HalfInt, J: Spin, M: HalfInt
) -> RadicalScalar:
    """<j1 m1, j2 m2 | J M>, exactly; zero outside the selection rules."""
    if m1.twice + m2.twice != M.twice:
        return ZERO
    if abs(m1.twice) > j1.twice or abs(m2.twice) > j2.twice or abs(M.twice) > J.twice:
        return ZERO
    if (j1.twice - m1.twice) % 2 or (j2.twice - m2.twice) % 2 or (J.twice - M.twice) % 2:
        return ZERO
    return _cg_table(j1.twice, j2.twice, J.twice).get(
        (m1.twice, m2.twice, M.twice), ZERO
    )


def cg_for_key(key: CGKey) -> RadicalScalar:
    return clebsch_gordan(key.j1, key.m1, key.j2, key.m2, key.J, key.M)


# Seed tables over doubled (m, n) in {-1, +1}; see the module docstring.
_SEED: dict[str, dict[tuple[int, int], RadicalScalar]] = {
    "x": {(-1, 1): ONE, (1, -1): ONE},
    "y": {(-1, 1): I_UNIT, (1, -1): -I_UNIT},
    "z": {(-1, -1): -ONE, (1, 1): ONE},
    "t": {(-1, -1): ONE, (1, 1): ONE},
}
_HALF = Spin(1)


def cg_block_12(
    A: Spin, B: Spin, C: Spin, D: Spin, lam12: RadicalScalar
) -> dict[str, Matrix]:
    """The four 12-blocks (rows (a,b), cols (c,d)), scaled by lam12."""
    pair1, pair2 = SpinPair(A, B), SpinPair(C, D)
    blocks = {mu: Matrix(pair1.dimension, pair2.dimension) for mu in _SEED}
    if lam12.is_zero():
        return blocks
    for i, (a, b) in enumerate(pair1.basis()):
        for j, (c, d) in enumerate(pair2.basis()):
            first = {
                tm: clebsch_gordan(_HALF, HalfInt(tm), C, c, A, a) for tm in (-1, 1)
            }
            second = {
                tn: clebsch_gordan(_HALF, HalfInt(tn), B, b, D, d) for tn in (-1, 1)
            }
            for mu, seed in _SEED.items():
                acc = ZERO
                for (tm, tn), weight in seed.items():
                    f1, f2 = first[tm], second[tn]
                    if f1.is_zero() or f2.is_zero():
                        continue
                    acc = acc + weight * f1 * f2
                if not acc.is_zero():
                    blocks[mu].set(i, j, acc * lam12)
    return blocks


def cg_block_21(
    A: Spin, B: Spin, C: Spin, D: Spin, lam21: RadicalScalar
) -> dict[str, Matrix]:
    """The four 21-blocks (rows (c,d), cols (a,b)), scaled by lam21."""
    pair1, pair2 = SpinPair(A, B), SpinPair(C, D)
    blocks = {mu: Matrix(pair2.dimension, pair1.dimension) for mu in _SEED}
    if lam21.is_zero():
        return blocks
    for j, (c, d) in enumerate(pair2.basis()):
        for i, (a, b) in enumerate(pair1.basis()):
            first = {
                tm: clebsch_gordan(_HALF, HalfInt(tm), A, a, C, c) for tm in (-1, 1)
            }
            second = {
                tn: clebsch_gordan(_HALF, HalfInt(tn), D, d, B, b) for tn in (-1, 1)
            }
            for mu, seed in _SEED.items():
                acc = ZERO
                for (tm, tn), weight in seed.items():
                    f1, f2 = first[tm], second[tn]
                    if f1.is_zero() or f2.is_zero():
                        continue
                    acc = acc + weight * f1 * f2
                if not acc.is_zero():
                    blocks[mu].set(j, i, acc * lam21)
    return blocks


@dataclass(frozen=True)
class LambdaParams:
    lambda12: RadicalScalar
    lambda21: RadicalScalar


def cg_vector_matrices(
    A: Spin, B: Spin, C: Spin, D: Spin, lams: LambdaParams
) -> VectorSet:
    """Full vector matrices from the coupling route."""
    case = classify_case(A, B, C, D)
    if case is CaseTag.NO_SOLUTION:
        raise NoSolutionError(A, B, C, D)
    pair1, pair2 = SpinPair(A, B), SpinPair(C, D)
    n1 = pair1.dimension
    n = n1 + pair2.dimension
    b12 = cg_block_12(A, B, C, D, lams.lambda12)
    b21 = cg_block_21(A, B, C, D, lams.lambda21)
    mats = {}
    for mu in ("x", "y", "z", "t"):
        full = Matrix.zeros(n)
        full.paste(b12[mu], 0, n1)
        full.paste(b21[mu], n1, 0)
        mats[mu] = full
    return VectorSet(
        spins=(pair1, pair2),
        case=case,
        params=FreeParams(lams.lambda12, lams.lambda21),
        Vx=mats["x"],
        Vy=mats["y"],
        Vz=mats["z"],
        Vt=mats["t"],
    )


# ---------------------------------------------------------------------------
# Per-block proportionality fitting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatioFit:
    """Scalars with ratio * candidate_block = reference_block, entrywise."""

    ratio12: RadicalScalar
    ratio21: RadicalScalar


@dataclass(frozen=True)
class RatioMismatch:
    block: str
    component: str
    row: int
    col: int
    reference: RadicalScalar
    candidate: RadicalScalar


def equivalence_ratio(
    reference: VectorSet, candidate: VectorSet
) -> "RatioFit | RatioMismatch":
    """Fit one constant per off-diagonal block or report the first mismatch.

    Blocks that are identically zero on both sides fit with ratio 1.
    """
    if reference.spins != candidate.spins:
        raise ValueError("vector sets live on different representations")
    ratios = {}
    for which in ("12", "21"):
        pairs = [
            (mu, reference.block(reference.component(mu), which),
             candidate.block(candidate.component(mu), which))
            for mu in ("x", "y", "z", "t")
        ]
        ratio = None
        saw_nonzero = False
        for mu, ref, cand in pairs:
            for row, col, val in cand.nonzero_items():
                saw_nonzero = True
                if len(val.terms) == 1:
                    ratio = ref.get(row, col) / val
                    break
            if ratio is not None:
                break
        if ratio is None and saw_nonzero:
            raise ValueError(
                "cannot fit a ratio: candidate block has no single-term entries"
            )
        if ratio is None:
            hot = next(
                ((mu, ref) for mu, ref, _ in pairs if not ref.is_zero()), None
            )
            if hot is not None:
                mu, ref = hot
                row, col, val = ref.first_nonzero()
                return RatioMismatch(which, mu, row, col, val, ZERO)
            ratio = ONE
        for mu, ref, cand in pairs:
            residual = ref - cand.scale(ratio)
            bad = residual.first_nonzero()
            if bad is not None:
                row, col, _ = bad
                return RatioMismatch(
                    which, mu, row, col, ref.get(row, col), cand.get(row, col)
                )
        ratios[which] = ratio
    return RatioFit(ratio12=ratios["12"], ratio21=ratios["21"])
