"""Rotation-group ladder matrices and Lorentz generators J_k, K_k.

Basis convention, fixed once for the whole package: within an irreducible
block (A,B) the index pair (a, b) runs with a descending from +A to -A as
the outer index and b descending from +B to -B as the inner index, so the
diagonal of J_z starts at its maximum.  In a two-block direct sum the
(A,B) block precedes the (C,D) block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrix import Matrix, block_diag, kron
from .radical import ZERO, RadicalScalar, sqrt_of_rational
from .spins import HalfInt, Spin, SpinPair


def ladder_coeff_r(spin: Spin, sigma: HalfInt) -> RadicalScalar:
    """Raising coefficient sqrt((A - s)(A + s + 1)); zero off the ladder."""
    if abs(sigma.twice) > spin.twice or (spin.twice - sigma.twice) % 2:
        return ZERO
    lo = Fraction(spin.twice - sigma.twice, 2)
    hi = Fraction(spin.twice + sigma.twice + 2, 2)
    return sqrt_of_rational(lo * hi)


def ladder_coeff_s(spin: Spin, sigma: HalfInt) -> RadicalScalar:
    """Lowering coefficient sqrt((A + s)(A - s + 1)) = r at -s."""
    return ladder_coeff_r(spin, -sigma)


def rotation_rep(spin: Spin) -> tuple[Matrix, Matrix, Matrix]:
    """(M+, M-, Mz) for one spin: a (2A+1)-dimensional rotation irrep.

    M+ has entries r_(s1) at (row s1+1, col s1); M- has s_(s1) at
    (row s1-1, col s1); Mz is diagonal with the projection values.
    """
    n = spin.multiplicity
    mplus, mminus, mz = Matrix(n, n), Matrix(n, n), Matrix(n, n)
    projections = spin.projections()
    pos = {s.twice: idx for idx, s in enumerate(projections)}
    for idx, s1 in enumerate(projections):
        mz.set(idx, idx, RadicalScalar.from_rational(s1.value))
        up = s1.twice + 2
        if up in pos:
            mplus.set(pos[up], idx, ladder_coeff_r(spin, s1))
        down = s1.twice - 2
        if down in pos:
            mminus.set(pos[down], idx, ladder_coeff_s(spin, s1))
    return mplus, mminus, mz


@dataclass(frozen=True)
class GeneratorSet:
    """The six matrices (Jx, Jy, Jz) and (Kx, Ky, Kz) of a representation."""

    spins: tuple[SpinPair, ...]
    J: tuple[Matrix, Matrix, Matrix]
    K: tuple[Matrix, Matrix, Matrix]

    @property
    def dimension(self) -> int:
        return self.J[0].rows

    def j_plus(self) -> Matrix:
        return self.J[0] + self.J[1].times_i()

    def j_minus(self) -> Matrix:
        return self.J[0] - self.J[1].times_i()


def _cartesian_from_ladder(plus: Matrix, minus: Matrix) -> tuple[Matrix, Matrix]:
    """(X, Y) with plus = X + iY and minus = X - iY."""
    half = Fraction(1, 2)
    x = (plus + minus).scale(half)
    y = (plus - minus).scale(half).times_i().scale(-1)
    return x, y


def irrep_generators(pair: SpinPair) -> GeneratorSet:
    """Generators of the (A,B) Lorentz irrep: J_k = A_k + B_k, K_k = -i(A_k - B_k)."""
    ea = Matrix.identity(pair.left.multiplicity)
    eb = Matrix.identity(pair.right.multiplicity)
    a_ops = [kron(m, eb) for m in rotation_rep(pair.left)]
    b_ops = [kron(ea, m) for m in rotation_rep(pair.right)]

    j_plus = a_ops[0] + b_ops[0]
    j_minus = a_ops[1] + b_ops[1]
    j_z = a_ops[2] + b_ops[2]
    k_plus = (a_ops[0] - b_ops[0]).times_i().scale(-1)
    k_minus = (a_ops[1] - b_ops[1]).times_i().scale(-1)
    k_z = (a_ops[2] - b_ops[2]).times_i().scale(-1)

    j_x, j_y = _cartesian_from_ladder(j_plus, j_minus)
    k_x, k_y = _cartesian_from_ladder(k_plus, k_minus)
    return GeneratorSet(spins=(pair,), J=(j_x, j_y, j_z), K=(k_x, k_y, k_z))


def direct_sum(p1: SpinPair, p2: SpinPair) -> GeneratorSet:
    """Block-diagonal generators for (A,B) + (C,D), first block first."""
    g1, g2 = irrep_generators(p1), irrep_generators(p2)
    return GeneratorSet(
        spins=(p1, p2),
        J=tuple(block_diag(a, b) for a, b in zip(g1.J, g2.J)),
        K=tuple(block_diag(a, b) for a, b in zip(g1.K, g2.K)),
    )


def generators_for(spins: "tuple[SpinPair, ...] | SpinPair") -> GeneratorSet:
    if isinstance(spins, SpinPair):
        return irrep_generators(spins)
    if len(spins) == 1:
        return irrep_generators(spins[0])
    if len(spins) == 2:
        return direct_sum(spins[0], spins[1])
    raise ValueError("only one- and two-block representations are supported")


def spin(twice: int) -> Spin:
    """Shorthand: spin from its doubled integer value."""
    return Spin(twice)
