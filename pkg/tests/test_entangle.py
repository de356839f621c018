import numpy as np
import pytest

from hsdual.entangle import (
    is_entangled,
    product_state_devec,
    pure_state_transport,
    schmidt,
    schmidt_rank,
)
from hsdual.linalg import complex_gaussian, hs_inner, kron, random_unitary
from hsdual.superop import lift_r
from hsdual.vectorize import Basis, BasisPair, conjugate_in_basis


def unit(v):
    return v / np.linalg.norm(v)


def rand_pair(d1, d2, seed):
    return BasisPair(Basis.random(d1, seed), Basis.random(d2, seed + 100))


def test_product_vector_rank_one():
    rng = np.random.default_rng(1)
    phi = unit(complex_gaussian(3, 1, rng)[:, 0])
    psi = unit(complex_gaussian(2, 1, rng)[:, 0])
    alpha = np.kron(phi, psi)
    res = schmidt(alpha, BasisPair.standard(3, 2))
    assert abs(res.lambdas[0] - 1.0) < 1e-12
    assert schmidt_rank(alpha, 3, 2) == 1
    assert not is_entangled(alpha, 3, 2)


def test_bell_vector():
    bell = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    res = schmidt(bell, BasisPair.standard(2, 2))
    assert np.abs(res.lambdas - 0.7071067811865476).max() < 1e-12
    assert schmidt_rank(bell, 2, 2) == 2
    assert is_entangled(bell, 2, 2)


def test_zero_vector():
    assert schmidt_rank(np.zeros(4), 2, 2) == 0
    assert not is_entangled(np.zeros(4), 2, 2)


def test_reconstruction_random():
    rng = np.random.default_rng(2)
    for _ in range(100):
        d1 = int(rng.integers(2, 7))
        d2 = int(rng.integers(2, 7))
        bases = rand_pair(d1, d2, int(rng.integers(0, 10000)))
        alpha = complex_gaussian(d1 * d2, 1, rng)[:, 0]
        res = schmidt(alpha, bases)
        rebuilt = sum(
            res.lambdas[i] * np.kron(res.left[:, i], res.right[:, i])
            for i in range(len(res.lambdas))
        )
        assert np.abs(rebuilt - alpha).max() < 1e-10
        # Orthonormal families and the norm identity.
        k = res.left.shape[1]
        assert np.abs(res.left.conj().T @ res.left - np.eye(k)).max() < 1e-10
        assert np.abs(res.right.conj().T @ res.right - np.eye(k)).max() < 1e-10
        assert abs(np.sum(res.lambdas**2) - np.linalg.norm(alpha) ** 2) < 1e-10


def test_generic_rank_full():
    rng = np.random.default_rng(3)
    for _ in range(10):
        alpha = complex_gaussian(9, 1, rng)[:, 0]
        assert schmidt_rank(alpha, 3, 3) == 3


def test_phase_convention_deterministic():
    rng = np.random.default_rng(4)
    alpha = complex_gaussian(6, 1, rng)[:, 0]
    bases = BasisPair.standard(3, 2)
    r1 = schmidt(alpha, bases)
    r2 = schmidt(alpha.copy(), bases)
    assert np.array_equal(r1.left, r2.left)
    assert np.array_equal(r1.right, r2.right)


def test_unitary_invariance_of_lambdas():
    rng = np.random.default_rng(5)
    d1, d2 = 3, 4
    alpha = complex_gaussian(d1 * d2, 1, rng)[:, 0]
    u = random_unitary(d1, 6)
    v = random_unitary(d2, 7)
    s0 = schmidt(alpha, BasisPair.standard(d1, d2)).lambdas
    s1 = schmidt(kron(u, v) @ alpha, BasisPair.standard(d1, d2)).lambdas
    assert np.abs(np.sort(s0) - np.sort(s1)).max() < 1e-10


def test_product_state_devec_standard():
    e0 = np.array([1, 0], dtype=complex)
    f0 = np.array([1, 0, 0], dtype=complex)
    got = product_state_devec(e0, f0, BasisPair.standard(2, 3))
    expected = np.zeros((3, 2), dtype=complex)
    expected[0, 0] = 1
    assert np.array_equal(got, expected)


def test_product_state_devec_adapted_basis():
    rng = np.random.default_rng(8)
    phi = unit(complex_gaussian(3, 1, rng)[:, 0])
    psi = unit(complex_gaussian(2, 1, rng)[:, 0])
    bases = BasisPair(Basis.adapted_to(phi), Basis.standard(2))
    got = product_state_devec(phi, psi, bases)
    assert np.abs(got - np.outer(psi, np.conj(phi))).max() < 1e-10


def test_product_state_devec_standard_conjugates():
    rng = np.random.default_rng(9)
    phi = unit(complex_gaussian(3, 1, rng)[:, 0])
    psi = unit(complex_gaussian(2, 1, rng)[:, 0])
    got = product_state_devec(phi, psi, BasisPair.standard(3, 2))
    assert np.abs(got - np.outer(psi, phi)).max() < 1e-12  # <conj(phi)| row = phi^T


def test_product_state_devec_rejects_non_unit():
    with pytest.raises(ValueError):
        product_state_devec(np.array([2.0, 0]), np.array([1.0, 0]), BasisPair.standard(2, 2))


def test_pure_state_transport_projection():
    e0 = np.array([1, 0], dtype=complex)
    p = pure_state_transport(e0, e0, BasisPair.standard(2, 2))
    e00 = np.zeros((2, 2), dtype=complex)
    e00[0, 0] = 1
    e11 = np.zeros((2, 2), dtype=complex)
    e11[1, 1] = 1
    assert np.abs(p(e00) - e00).max() < 1e-12
    assert np.abs(p(e11)).max() < 1e-12


def test_pure_state_transport_fixed_point_and_trace():
    rng = np.random.default_rng(10)
    bases = rand_pair(2, 2, 11)
    phi = unit(complex_gaussian(2, 1, rng)[:, 0])
    psi = unit(complex_gaussian(2, 1, rng)[:, 0])
    p = pure_state_transport(phi, psi, bases)
    fixed = np.outer(psi, np.conj(conjugate_in_basis(bases.b1, phi)))
    assert np.abs(p(fixed) - fixed).max() < 1e-10
    # Rank-one projection on operator space: acts as C -> <E,C> E / <E,E>.
    rngc = np.random.default_rng(12)
    c = complex_gaussian(2, 2, rngc)
    expected = hs_inner(fixed, c) * fixed / hs_inner(fixed, fixed).real
    assert np.abs(p(c) - expected).max() < 1e-10
    mat = lift_r(p, bases)
    assert abs(np.trace(mat) - 1.0) < 1e-10
