"""Schmidt decomposition and entanglement analysis of bipartite vectors.

The decomposition is computed by one SVD of the devectorized operator: for
alpha in H1 (x) H2 the operator devec(alpha) factors as sum_i lambda_i
|w_i><x_i|, and alpha = sum_i lambda_i (K x_i) (x) w_i where K is the
conjugation of the H1 basis.  A single SVD yields both orthonormal families
at once, with no phase mismatch between separately diagonalized marginals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DimensionMismatchError, as_matrix, as_vector, kron, svd
from .superop import HSMap, lower_s
from .vectorize import Basis, BasisPair, conjugate_in_basis, devec_jstar


@dataclass(frozen=True)
class SchmidtResult:
    """Singular values plus the two orthonormal vector families.

    Reconstruction: alpha == sum_i lambdas[i] * kron(left[:, i], right[:, i]).
    """

    lambdas: np.ndarray  # nonnegative, descending
    left: np.ndarray  # d1 x k, orthonormal columns in H1
    right: np.ndarray  # d2 x k, orthonormal columns in H2

    @property
    def rank(self) -> int:
        return rank_from_lambdas(self.lambdas, cutoff=None)


def rank_from_lambdas(lambdas: np.ndarray, cutoff: float | None) -> int:
    if cutoff is None:
        cutoff = 1e-10 * float(np.linalg.norm(lambdas))
    return int(np.count_nonzero(lambdas > cutoff))


def schmidt(alpha, bases: BasisPair) -> SchmidtResult:
    """Schmidt decomposition of a bipartite vector relative to the given bases."""
    alpha = as_vector(alpha)
    if alpha.shape[0] != bases.d1 * bases.d2:
        raise DimensionMismatchError("schmidt: vector length != d1*d2")
    a = devec_jstar(alpha, bases)
    w, s, x = svd(a)  # a == w @ diag(s) @ x.conj().T
    # Phase convention: first nonzero component of each x-column made real
    # nonnegative, the w-column absorbing the compensating phase.
    for i in range(s.shape[0]):
        col = x[:, i]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size:
            phase = col[nz[0]] / abs(col[nz[0]])
            x[:, i] = col / phase
            w[:, i] = w[:, i] / phase
    left = np.column_stack(
        [conjugate_in_basis(bases.b1, x[:, i]) for i in range(x.shape[1])]
    )
    return SchmidtResult(lambdas=s, left=left, right=w)


def schmidt_rank(alpha, d1: int, d2: int, cutoff: float | None = None) -> int:
    """Number of Schmidt coefficients above the cutoff (default 1e-10 * norm).

    Basis independent; the zero vector has rank 0.  A vector is entangled iff
    the rank is at least 2.
    """
    alpha = as_vector(alpha)
    if alpha.shape[0] != d1 * d2:
        raise DimensionMismatchError("schmidt_rank: vector length != d1*d2")
    s = np.linalg.svd(alpha.reshape(d1, d2).T, compute_uv=False)
    return rank_from_lambdas(s, cutoff)


def is_entangled(alpha, d1: int, d2: int, cutoff: float | None = None) -> bool:
    return schmidt_rank(alpha, d1, d2, cutoff) >= 2


def _check_unit(v, name: str) -> np.ndarray:
    v = as_vector(v)
    if abs(np.linalg.norm(v) - 1.0) > 1e-8:
        raise ValueError(f"{name}: expected a unit vector")
    return v


def product_state_devec(phi, psi, bases: BasisPair) -> np.ndarray:
    """Devectorization of the product vector phi (x) psi: the rank-one
    operator |psi><K phi|."""
    phi = _check_unit(phi, "product_state_devec")
    psi = _check_unit(psi, "product_state_devec")
    return devec_jstar(np.kron(phi, psi), bases)


def pure_state_transport(phi, psi, bases: BasisPair) -> HSMap:
    """The image under the S isomorphism of the product projection
    P_phi (x) P_psi: a rank-one projection on operator space."""
    phi = _check_unit(phi, "pure_state_transport")
    psi = _check_unit(psi, "pure_state_transport")
    p = kron(np.outer(phi, phi.conj()), np.outer(psi, psi.conj()))
    return lower_s(p, bases)
