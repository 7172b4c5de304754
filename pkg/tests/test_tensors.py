"""Symmetric tensor storage: construction, evaluation, multilinearity."""

import numpy as np
import pytest

from fsjet.tensors import (
    HomPoly,
    ScalarHomPoly,
    exponents_to_multi_index,
    multi_index_to_exponents,
    multinomial,
    polarization_check,
)


def _random_hompoly(rng, degree, n, m):
    from fsjet import polyops

    coeffs = {}
    for exps in polyops.exponents_of_degree(n, degree):
        idx = exponents_to_multi_index(exps)
        coeffs[idx] = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    return HomPoly(degree, n, m, coeffs)


def test_multi_index_round_trip():
    assert multi_index_to_exponents((1, 1, 3), 3) == (2, 0, 1)
    assert exponents_to_multi_index((2, 0, 1)) == (1, 1, 3)


def test_multinomial_values():
    assert multinomial((1, 1)) == 1
    assert multinomial((1, 2)) == 2
    assert multinomial((1, 2, 3)) == 6
    assert multinomial((1, 1, 2)) == 3


def test_validation_rejects_bad_indices():
    with pytest.raises(ValueError):
        HomPoly(2, 2, 2, {(2, 1): np.ones(2)})  # unsorted
    with pytest.raises(ValueError):
        HomPoly(2, 2, 2, {(1, 3): np.ones(2)})  # out of range
    with pytest.raises(ValueError):
        HomPoly(2, 2, 2, {(1,): np.ones(2)})  # wrong length
    with pytest.raises(ValueError):
        HomPoly(2, 2, 2, {(1, 1): np.ones(3)})  # wrong codomain


def test_from_monomials_round_trip():
    rng = np.random.default_rng(4)
    P = _random_hompoly(rng, 3, 2, 2)
    Q = HomPoly.from_monomials(3, 2, 2, P.to_monomials())
    assert P.allclose(Q, atol=0.0, rtol=1e-15)


def test_eval_matches_dense_contraction():
    rng = np.random.default_rng(5)
    for degree in (2, 3, 4):
        P = _random_hompoly(rng, degree, 3, 2)
        dense = P.dense()
        x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        expect = dense
        for _ in range(degree):
            expect = np.tensordot(x, expect, axes=(0, 0))
        assert np.allclose(P.eval(x), expect, atol=1e-12)


def test_eval_many_matches_eval():
    rng = np.random.default_rng(6)
    P = _random_hompoly(rng, 3, 2, 2)
    xs = rng.standard_normal((7, 2)) + 1j * rng.standard_normal((7, 2))
    batch = P.eval_many(xs)
    for i, x in enumerate(xs):
        assert np.allclose(batch[i], P.eval(x), atol=1e-13)


def test_multilinear_eval_diagonal_is_eval():
    rng = np.random.default_rng(7)
    P = _random_hompoly(rng, 3, 2, 2)
    x = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    assert np.allclose(P.multilinear_eval([x, x, x]), P.eval(x), atol=1e-12)


def test_multilinear_eval_is_linear_in_each_slot():
    rng = np.random.default_rng(8)
    P = _random_hompoly(rng, 3, 3, 3)
    u, v, w, z = (rng.standard_normal(3) + 1j * rng.standard_normal(3) for _ in range(4))
    a = 0.7 - 0.3j
    lhs = P.multilinear_eval([u, a * v + w, z])
    rhs = a * P.multilinear_eval([u, v, z]) + P.multilinear_eval([u, w, z])
    assert np.allclose(lhs, rhs, atol=1e-11)


def test_multilinear_eval_permutation_symmetry_bit_exact():
    rng = np.random.default_rng(9)
    P = _random_hompoly(rng, 3, 2, 2)
    u, v, w = (rng.standard_normal(2) + 1j * rng.standard_normal(2) for _ in range(3))
    base = P.multilinear_eval([u, v, w])
    for perm in ([v, u, w], [w, v, u], [v, w, u]):
        assert np.array_equal(P.multilinear_eval(perm), base)


def test_multilinear_eval_matches_dense_contraction():
    rng = np.random.default_rng(10)
    P = _random_hompoly(rng, 2, 3, 2)
    u, v = (rng.standard_normal(3) + 1j * rng.standard_normal(3) for _ in range(2))
    expect = np.einsum("abm,a,b->m", P.dense(), u, v)
    assert np.allclose(P.multilinear_eval([u, v]), expect, atol=1e-12)


def test_polarization_identity():
    rng = np.random.default_rng(11)
    P = _random_hompoly(rng, 2, 3, 3)
    x1 = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    x2 = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    assert polarization_check(P, x1, x2) < 1e-12


def test_polarization_rejects_wrong_degree():
    rng = np.random.default_rng(12)
    P = _random_hompoly(rng, 3, 2, 2)
    with pytest.raises(ValueError):
        polarization_check(P, np.ones(2), np.ones(2))


def test_add_and_scale():
    rng = np.random.default_rng(13)
    P = _random_hompoly(rng, 2, 2, 2)
    Q = _random_hompoly(rng, 2, 2, 2)
    x = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    assert np.allclose((P + Q).eval(x), P.eval(x) + Q.eval(x), atol=1e-12)
    assert np.allclose(P.scale(2.5j).eval(x), 2.5j * P.eval(x), atol=1e-12)
    assert (P + P.scale(-1.0)).is_zero(atol=0.0)


def test_scalar_hompoly():
    p = ScalarHomPoly.from_scalar_monomials(2, 2, {(2, 0): 3.0, (1, 1): -1.0j})
    x = np.array([0.5, 2.0 - 1.0j])
    expect = 3.0 * x[0] ** 2 - 1.0j * x[0] * x[1]
    assert abs(p.eval_scalar(x) - expect) < 1e-13
    assert p.codomain_dim == 1
    assert p.scalar_poly() == {(2, 0): 3.0 + 0j, (1, 1): -1.0j}


def test_coeff_arrays_are_frozen():
    P = HomPoly(2, 2, 2, {(1, 1): np.ones(2)})
    arr = P.coeffs[(1, 1)]
    with pytest.raises(ValueError):
        arr[0] = 5.0
