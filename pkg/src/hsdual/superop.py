"""Superoperators on the space of operators H1 -> H2 and their representations.

Three interchangeable representations are supported:

* an ``HSMap``: the abstract linear action A -> B(A), backed by either a Kraus
  list or a dense matrix in the matrix-unit basis (flat index j*d2 + i);
* the R-matrix: the dense matrix of vec . B . devec on the tensor-product
  space, in standard coordinates — the canonical internal form, where
  composition of maps is a plain matrix product;
* the Choi matrix (square case only), which is positive semidefinite exactly
  for completely positive maps but does not respect products.

Kraus convention used throughout: B(A) = sum_i M_i* A M_i, trace preserving
when sum_i M_i M_i* = I.  This is the adjoint of the other common convention
B(A) = sum_i M_i A M_i*; mind the stars when importing channels from
elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    DimensionMismatchError,
    Tolerance,
    adjoint,
    as_matrix,
    as_vector,
    is_psd,
    kron,
)
from .vectorize import Basis, BasisPair, devec_jstar, phi_plus, vec_j, vec_t


def _check_kraus(ms: Sequence[np.ndarray]) -> list[np.ndarray]:
    ms = [as_matrix(m) for m in ms]
    if not ms:
        raise DimensionMismatchError("empty Kraus list")
    d = ms[0].shape[0]
    for m in ms:
        if m.shape != (d, d):
            raise DimensionMismatchError("Kraus operators must be square with equal dims")
    return ms


def kraus_apply(ms: Sequence[np.ndarray], a) -> np.ndarray:
    """Apply the channel in Kraus form: sum_i M_i* a M_i."""
    ms = _check_kraus(ms)
    a = as_matrix(a)
    d = ms[0].shape[0]
    if a.shape != (d, d):
        raise DimensionMismatchError(f"kraus_apply: state shape {a.shape} != ({d}, {d})")
    out = np.zeros_like(a)
    for m in ms:
        out += m.conj().T @ a @ m
    return out


class HSMap:
    """A linear map on d2 x d1 operators, with a concrete apply action."""

    def __init__(self, d1: int, d2: int, apply_fn: Callable[[np.ndarray], np.ndarray]):
        self.d1 = d1
        self.d2 = d2
        self._apply = apply_fn

    def __call__(self, a) -> np.ndarray:
        a = as_matrix(a)
        if a.shape != (self.d2, self.d1):
            raise DimensionMismatchError(
                f"HSMap: operand shape {a.shape} != ({self.d2}, {self.d1})"
            )
        return self._apply(a)

    apply = __call__

    @classmethod
    def identity(cls, d1: int, d2: int) -> "HSMap":
        return cls(d1, d2, lambda a: a.copy())

    @classmethod
    def from_kraus(cls, ms: Sequence[np.ndarray]) -> "HSMap":
        ms = _check_kraus(ms)
        d = ms[0].shape[0]
        return cls(d, d, lambda a: kraus_apply(ms, a))

    @classmethod
    def sandwich(cls, m, n) -> "HSMap":
        """The map A -> m @ A @ n."""
        m = as_matrix(m)
        n = as_matrix(n)
        return cls(n.shape[0], m.shape[1], lambda a: m @ a @ n)

    @classmethod
    def from_matrix(cls, mat, d1: int, d2: int) -> "HSMap":
        """Dense map in the matrix-unit basis: mat acts on column-stacked operators."""
        mat = as_matrix(mat)
        n = d1 * d2
        if mat.shape != (n, n):
            raise DimensionMismatchError(f"HSMap.from_matrix: shape {mat.shape} != ({n}, {n})")
        def apply(a):
            return (mat @ a.T.reshape(-1)).reshape(d1, d2).T
        return cls(d1, d2, apply)

    def matrix(self) -> np.ndarray:
        """Dense matrix in the matrix-unit basis (probe on standard matrix units);
        equals the R-matrix with standard bases."""
        return lift_r(self, BasisPair.standard(self.d1, self.d2))


@dataclass(frozen=True)
class SuperOp:
    """A superoperator pinned to its canonical R-matrix representation."""

    rmatrix: np.ndarray
    bases: BasisPair

    @property
    def d1(self) -> int:
        return self.bases.d1

    @property
    def d2(self) -> int:
        return self.bases.d2

    @staticmethod
    def identity(bases: BasisPair) -> "SuperOp":
        n = bases.d1 * bases.d2
        return SuperOp(np.eye(n, dtype=complex), bases)

    @staticmethod
    def from_hsmap(b: HSMap, bases: BasisPair) -> "SuperOp":
        return SuperOp(lift_r(b, bases), bases)

    @staticmethod
    def from_kraus(ms: Sequence[np.ndarray], basis: Basis) -> "SuperOp":
        return SuperOp(kraus_to_r(ms, basis), BasisPair(basis, basis))

    def as_hsmap(self) -> HSMap:
        return lower_s(self.rmatrix, self.bases)


def lift_r(b: HSMap, bases: BasisPair) -> np.ndarray:
    """Lift a map on operators to the tensor-product space: vec . b . devec.

    Built by probing b on the matrix units |psi_i><phi_j| of the given bases,
    then rotating back to standard coordinates.
    """
    d1, d2 = bases.d1, bases.d2
    if (b.d1, b.d2) != (d1, d2):
        raise DimensionMismatchError("lift_r: map and bases dimensions differ")
    n = d1 * d2
    probes = np.zeros((n, n), dtype=complex)
    for j in range(d1):
        for i in range(d2):
            unit = np.outer(bases.b2.column(i), np.conj(bases.b1.column(j)))
            probes[:, j * d2 + i] = vec_j(b(unit), bases)
    if bases.b1.is_standard and bases.b2.is_standard:
        return probes
    return probes @ adjoint(kron(bases.b1.u, bases.b2.u))


def lower_s(c, bases: BasisPair) -> HSMap:
    """Inverse of lift_r: bring an operator on the tensor product down to a
    map on operators, devec . c . vec."""
    c = as_matrix(c)
    n = bases.d1 * bases.d2
    if c.shape != (n, n):
        raise DimensionMismatchError(f"lower_s: shape {c.shape} != ({n}, {n})")
    return HSMap(bases.d1, bases.d2, lambda a: devec_jstar(c @ vec_j(a, bases), bases))


def m_alpha(ms: Sequence[np.ndarray], alpha, basis: Basis) -> np.ndarray:
    """The collapsed operator sum_{r,s} <phi_r (x) phi_s, alpha>
    sum_i |M_i* phi_s><M_i* phi_r| attached to a tensor-product vector."""
    ms = _check_kraus(ms)
    d = basis.dim
    alpha = as_vector(alpha)
    if alpha.shape[0] != d * d:
        raise DimensionMismatchError("m_alpha: vector length != d*d")
    w = kron(basis.u, basis.u)
    coeff = (adjoint(w) @ alpha).reshape(d, d)  # coeff[r, s] = <phi_r (x) phi_s, alpha>
    out = np.zeros((d, d), dtype=complex)
    for m in ms:
        cols = m.conj().T @ basis.u  # column s is M* phi_s
        out += cols @ coeff.T @ adjoint(cols)
    return out


def kraus_to_r(ms: Sequence[np.ndarray], basis: Basis) -> np.ndarray:
    """R-matrix of a Kraus channel, built columnwise as
    alpha -> sum_s phi_s (x) (M_alpha phi_s).

    Independent of lift_r(HSMap.from_kraus(ms), ...); the two constructions
    are cross-checked in the test suite.
    """
    ms = _check_kraus(ms)
    d = basis.dim
    n = d * d
    out = np.zeros((n, n), dtype=complex)
    eye = np.eye(n, dtype=complex)
    for k in range(n):
        out[:, k] = vec_t(m_alpha(ms, eye[:, k], basis), basis)
    return out


def kraus_to_r_kron(ms: Sequence[np.ndarray]) -> np.ndarray:
    """Closed Kronecker form of the R-matrix in the standard basis:
    sum_i transpose(M_i) (x) adjoint(M_i)."""
    ms = _check_kraus(ms)
    d = ms[0].shape[0]
    out = np.zeros((d * d, d * d), dtype=complex)
    for m in ms:
        out += kron(m.T, m.conj().T)
    return out


def choi_map(b: HSMap, basis: Basis, normalize: bool = False) -> np.ndarray:
    """Choi matrix sum_{i,j} |phi_i><phi_j| (x) b(|phi_i><phi_j|).

    Defined for the square case only; the reference vector
    sum_j phi_j (x) phi_j is kept unnormalized unless ``normalize`` is set,
    which divides the result by the dimension.
    """
    d = basis.dim
    if (b.d1, b.d2) != (d, d):
        raise DimensionMismatchError("choi_map: requires a square map matching the basis")
    n = d * d
    out = np.zeros((n, n), dtype=complex)
    for i in range(d):
        for j in range(d):
            unit = np.outer(basis.column(i), np.conj(basis.column(j)))
            out += kron(unit, b(unit))
    if normalize:
        out /= d
    return out


def choi_of_vector(a, basis: Basis) -> np.ndarray:
    """(I (x) A) applied to the unnormalized maximally entangled vector;
    coincides with vec_t(A)."""
    a = as_matrix(a)
    d = basis.dim
    if a.shape != (d, d):
        raise DimensionMismatchError("choi_of_vector: requires a d x d operator")
    return kron(np.eye(d, dtype=complex), a) @ phi_plus(basis)


def compose(b1: SuperOp, b2: SuperOp) -> SuperOp:
    """Composition b1 after b2, a plain product of R-matrices."""
    if (b1.d1, b1.d2) != (b2.d1, b2.d2):
        raise DimensionMismatchError("compose: dimension mismatch")
    if not (
        np.array_equal(b1.bases.b1.u, b2.bases.b1.u)
        and np.array_equal(b1.bases.b2.u, b2.bases.b2.u)
    ):
        raise DimensionMismatchError("compose: superoperators use different bases")
    return SuperOp(b1.rmatrix @ b2.rmatrix, b1.bases)


def check_cp(b: HSMap, basis: Basis, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Complete positivity via the Choi criterion."""
    return is_psd(choi_map(b, basis), tol)


def check_tp(ms: Sequence[np.ndarray], tol: Tolerance = DEFAULT_TOL) -> bool:
    """Trace preservation of a Kraus channel: sum_i M_i M_i* == I."""
    dev = tp_deviation(ms)
    return dev <= tol.abs + tol.rel


def tp_deviation(ms: Sequence[np.ndarray]) -> float:
    """Max-entry deviation of sum_i M_i M_i* from the identity."""
    ms = _check_kraus(ms)
    d = ms[0].shape[0]
    acc = np.zeros((d, d), dtype=complex)
    for m in ms:
        acc += m @ m.conj().T
    return float(np.abs(acc - np.eye(d)).max())
