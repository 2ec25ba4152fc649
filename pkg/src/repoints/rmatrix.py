"""R-matrices of the classical series, the braided matrix S = PR, and the
rank-one invariant projector varpi for the orthogonal and symplectic cases.

Tensor indices are lexicographic: component (i, j) of C^N tensor C^N sits at
row (i - 1) * N + j (1-based i, j).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .qmatrix import QMatrix
from .rootdata import LieSeries, build_root_system
from .scalar import ONE, Q, QINV, QScalar


def _exponent_weights(ls: LieSeries) -> list:
    """Doubled rho-style exponents r_j entering the kappa term of the R-matrix.

    These follow two_rho except in the B series, where the middle basis vector
    contributes exponent +1 (doubled), as forced by compatibility with the
    natural representation's normalization of the short-root generators.
    """
    n, N = ls.rank, ls.dim
    if ls.series == "B":
        top = [2 * (n - j) - 1 for j in range(n)]
        return top + [1] + [-t for t in reversed(top)]
    if ls.series == "C":
        top = [2 * (n - j) for j in range(n)]
        return top + [-t for t in reversed(top)]
    if ls.series == "D":
        top = [2 * (n - j) - 2 for j in range(n)]
        return top + [-t for t in reversed(top)]
    raise ValueError("A series has no kappa term")


@dataclass
class RMatrixData:
    series_data: LieSeries
    R: QMatrix
    S: QMatrix
    varpi: QMatrix | None  # absent for the A series
    epsilon: int | None  # +1 orthogonal, -1 symplectic, absent for A


def build_R(ls: LieSeries) -> QMatrix:
    N = ls.dim
    R = QMatrix(N * N)
    lam = Q - QINV

    def idx(i: int, j: int) -> int:
        # 1-based tensor component (i, j)
        return (i - 1) * N + (j - 1)

    if ls.series == "A":
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                R.put(idx(i, j), idx(i, j), Q if i == j else ONE)
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                # (q - q^-1) e_ji x e_ij over i < j
                R.put(idx(j, i), idx(i, j), R.get(idx(j, i), idx(i, j)) + lam)
        return R

    rs = build_root_system(ls)
    r = _exponent_weights(ls)
    kappa = rs.kappa

    def prime(i: int) -> int:
        return N - i + 1

    for i in range(1, N + 1):
        for j in range(1, N + 1):
            e = (1 if i == j else 0) - (1 if j == prime(i) else 0)
            R.put(idx(i, j), idx(i, j), QScalar.q_power(e))
    for i in range(1, N + 1):
        for j in range(1, i):
            # (q - q^-1) (e_ij x e_ji - kappa_i kappa_j q^(rho_i - rho_j) e_ij x e_i'j')
            R.put(idx(i, j), idx(j, i), R.get(idx(i, j), idx(j, i)) + lam)
            num = r[i - 1] - r[j - 1]
            if num % 2:
                raise AssertionError("non-integral exponent in R-matrix")
            c = QScalar.q_power(num // 2)
            if kappa[i - 1] * kappa[j - 1] < 0:
                c = -c
            pos = (idx(i, prime(i)), idx(j, prime(j)))
            R.put(pos[0], pos[1], R.get(pos[0], pos[1]) - lam * c)
    return R


def flip_rows(M: QMatrix) -> QMatrix:
    """P * M where P is the tensor-flip permutation."""
    dim = M.dim
    N = round(dim ** 0.5)
    if N * N != dim:
        raise ValueError("dimension is not a perfect square")
    rows = [M.rows[(t % N) * N + t // N] for t in range(dim)]
    return QMatrix(dim, rows)


def build_S(R: QMatrix) -> QMatrix:
    return flip_rows(R)


def epsilon_for(ls: LieSeries) -> int:
    if ls.series in ("B", "D"):
        return 1
    if ls.series == "C":
        return -1
    raise ValueError("epsilon is defined for orthogonal and symplectic series only")


def build_varpi(S: QMatrix, ls: LieSeries) -> QMatrix:
    """The projector onto the one-dimensional invariant submodule of V x V.

    Built spectrally from the cubic annihilating polynomial of S: the factor
    (S - q)(S + 1/q) kills the other two eigenspaces; dividing by its value at
    the remaining eigenvalue makes it idempotent.
    """
    eps = epsilon_for(ls)
    N = ls.dim
    mu = QScalar.q_power(eps - N)
    if eps < 0:
        mu = -mu
    den = (mu - Q) * (mu + QINV)
    if not den:
        raise ArithmeticError("degenerate eigenvalue; projector undefined")
    raw = S.add_scalar_diag(-Q) * S.add_scalar_diag(QINV)
    return raw.scale(den.inv())


@lru_cache(maxsize=None)
def build_rmatrix_data(ls: LieSeries) -> RMatrixData:
    R = build_R(ls)
    S = build_S(R)
    if ls.series == "A":
        return RMatrixData(ls, R, S, None, None)
    return RMatrixData(ls, R, S, build_varpi(S, ls), epsilon_for(ls))


def braid_identity_holds(S: QMatrix, N: int) -> bool:
    """S12 S23 S12 = S23 S12 S23 on the N^3-dimensional triple tensor product."""
    I = QMatrix.identity(N)
    S12 = S.kron(I)
    S23 = I.kron(S)
    return S12 * S23 * S12 == S23 * S12 * S23


def annihilating_polynomial_holds(S: QMatrix, ls: LieSeries) -> bool:
    """Hecke relation (A series) or the cubic relation (B/C/D)."""
    quad = S.add_scalar_diag(-Q) * S.add_scalar_diag(QINV)
    if ls.series == "A":
        return quad.is_zero()
    eps = epsilon_for(ls)
    mu = QScalar.q_power(eps - ls.dim)
    if eps < 0:
        mu = -mu
    return (quad * S.add_scalar_diag(-mu)).is_zero()
