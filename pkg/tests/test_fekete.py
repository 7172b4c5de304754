"""The Fekete-Szego mapping, scalar variants, operator variant, and the
bilinear operator norm estimator."""

import numpy as np
import pytest

from fsjet.fekete import (
    FSContext,
    ell,
    fs_error_term,
    fs_mapping,
    fs_mapping_many,
    fs_operator_variant,
    fs_scalar,
    operator_norm_bilinear,
)
from fsjet.gallery import example_gallery
from fsjet.jets import compose, random_jet
from fsjet.sampling import sample_sphere
from fsjet.tensors import HomPoly


def test_context_normalizes_direction():
    ctx = FSContext(np.array([1.0 + 1e-8, 0.0]), 0.5, 0.25)
    assert abs(np.linalg.norm(ctx.e) - 1.0) < 1e-14
    with pytest.raises(ValueError):
        FSContext(np.array([2.0, 0.0]), 0.0, 0.0)


def test_koebe_scalar_value():
    f = example_gallery("koebe1d").jet
    e = np.array([1.0 + 0j])
    for lam in (0.0, 0.5, 1.0, 0.3 - 0.2j):
        for variant in (1, 2, 3, 4):
            val = fs_scalar(f, e, lam, variant)
            assert abs(val - (3.0 - 4.0 * lam)) < 1e-13


def test_example_5_6_closed_form():
    f = example_gallery("example_5_6").jet
    e = np.array([1.0, 0.0], dtype=complex)
    for lam in (0.0, 0.25, 1.0 + 0.5j):
        for mu in (0.0, -0.7, 2.0j):
            got = fs_mapping(f, FSContext(e, lam, mu)).vector
            expect = (1.0 - lam) / 4.0 * np.array([1.0, 1.0])
            assert np.allclose(got, expect, atol=1e-14)


def test_example_5_7_closed_form():
    f = example_gallery("example_5_7").jet
    e = np.array([1.0, 0.0], dtype=complex)
    for lam in (0.0, 0.5, -1.0j):
        for mu in (0.0, 0.4, 1.5 + 1.0j):
            got = fs_mapping(f, FSContext(e, lam, mu)).vector
            expect = np.array([0.0, (1.0 - mu) / 2.0])
            assert np.allclose(got, expect, atol=1e-14)


def test_scalar_projection_consistent():
    rng = np.random.default_rng(30)
    f = random_jet(3, 3, rng)
    e = sample_sphere(rng, 1, 3)[0]
    v = fs_mapping(f, FSContext(e, 0.3, 0.9))
    assert abs(v.scalar_projection - np.vdot(e, v.vector)) < 1e-14


def test_fs_mapping_many_matches_single():
    rng = np.random.default_rng(31)
    f = random_jet(2, 3, rng)
    es = sample_sphere(rng, 8, 2)
    lam, mu = 0.4 - 0.2j, 1.1
    batch = fs_mapping_many(f, es, lam, mu)
    for i, e in enumerate(es):
        single = fs_mapping(f, FSContext(e, lam, mu)).vector
        assert np.allclose(batch[i], single, atol=1e-12)


def test_global_phase_invariance_of_norm():
    rng = np.random.default_rng(32)
    f = random_jet(2, 3, rng)
    e = sample_sphere(rng, 1, 2)[0]
    lam, mu = 0.7, -0.3j
    base = fs_mapping(f, FSContext(e, lam, mu)).vector
    rotated = fs_mapping(f, FSContext(np.exp(0.9j) * e, lam, mu)).vector
    assert abs(np.linalg.norm(base) - np.linalg.norm(rotated)) < 1e-12


def test_fs_scalar_variant_validation():
    rng = np.random.default_rng(33)
    f = random_jet(2, 3, rng)
    with pytest.raises(ValueError):
        fs_scalar(f, np.array([1.0, 0.0]), 0.0, variant=5)


def test_operator_variant_identity_reduces_to_variant_two():
    rng = np.random.default_rng(34)
    for n in (2, 3):
        f = random_jet(n, 3, rng)
        e = sample_sphere(rng, 1, n)[0]
        for lam in (0.0, 0.6 - 0.1j, 2.0):
            got = fs_operator_variant(f, e, np.eye(n), lam)
            expect = fs_scalar(f, e, lam, variant=2)
            assert abs(got - expect) < 1e-12


def test_operator_variant_dense_second_path():
    # recompute every ingredient with dense einsum contractions
    rng = np.random.default_rng(35)
    f = random_jet(2, 3, rng)
    e = sample_sphere(rng, 1, 2)[0]
    A = np.array([[2.0, 0.3j], [0.0, 3.0]], dtype=complex)
    lam = 0.4 + 0.2j
    B = f.poly(2).dense()
    T = f.poly(3).dense()
    Ae = A @ e
    P2e = np.einsum("abm,a,b->m", B, e, e)
    P3e = np.einsum("abcm,a,b,c->m", T, e, e, e)
    d2 = 2.0 * np.einsum("abm,a,b->m", B, e, Ae)
    d3 = 6.0 * np.einsum("abcm,a,b,c->m", T, e, e, Ae)
    a2 = np.vdot(e, d2 - A @ P2e)
    a3 = 0.25 * np.vdot(e, d3 - 2.0 * (A @ P3e))
    a22 = 0.5 * np.vdot(
        e,
        2.0 * np.einsum("abm,a,b->m", B, e, d2)
        - 2.0 * np.einsum("abm,a,b->m", B, e, A @ P2e),
    )
    expect = a3 - (lam - 1.0) * a2**2 - a22
    got = fs_operator_variant(f, e, A, lam)
    assert abs(got - expect) < 1e-12


def test_operator_norm_known_tensors():
    koebe = example_gallery("koebe1d").jet
    est = operator_norm_bilinear(koebe.poly(2))
    assert abs(est.value - 2.0) < 1e-10

    f56 = example_gallery("example_5_6").jet
    est = operator_norm_bilinear(f56.poly(2))
    assert abs(est.value - np.sqrt(2.0) / 2.0) < 1e-10

    zero = HomPoly.zero(2, 2, 2)
    assert operator_norm_bilinear(zero).value == 0.0


def test_operator_norm_dominates_samples():
    rng = np.random.default_rng(36)
    B = random_jet(3, 2, rng).poly(2)
    est = operator_norm_bilinear(B, seed=5)
    # the witness achieves the value
    achieved = float(np.linalg.norm(B.multilinear_eval([est.u, est.v])))
    assert abs(achieved - est.value) < 1e-9
    # no random pair beats it
    us = sample_sphere(rng, 200, 3)
    vs = sample_sphere(rng, 200, 3)
    for u, v in zip(us, vs):
        val = float(np.linalg.norm(B.multilinear_eval([u, v])))
        assert val <= est.value + 1e-9


def test_ell_values():
    assert abs(ell(0.0, 0.0) - 2.0) < 1e-15
    assert abs(ell(1.0, 1.0) - 2.0) < 1e-15
    assert abs(ell(2.0, 0.0) - 6.0) < 1e-15
    assert abs(ell(1.0j, 0.0) - 4.0) < 1e-15


def test_error_term_definition_and_bound():
    rng = np.random.default_rng(37)
    f = random_jet(2, 3, rng)
    g = random_jet(2, 3, rng)
    e = sample_sphere(rng, 1, 2)[0]
    ctx = FSContext(e, 0.3 - 0.4j, 1.2)
    R, bound = fs_error_term(f, g, ctx)
    direct = (
        fs_mapping(compose(f, g), ctx).vector
        - fs_mapping(f, ctx).vector
        - fs_mapping(g, ctx).vector
    )
    assert np.allclose(R, direct, atol=1e-13)
    assert float(np.linalg.norm(R)) <= bound + 1e-9
