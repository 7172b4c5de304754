"""One-dimensional-type jets, detection, the root transform, and the
sampled injectivity check."""

import numpy as np
import pytest

from fsjet.transforms import (
    OneDimJet,
    check_injectivity_sampled,
    detect_onedim,
    koebe_onedim,
    root_transform,
)
from fsjet.gallery import example_gallery
from fsjet.tensors import ScalarHomPoly
from fsjet.verify import random_onedim_jet


def test_koebe_onedim_values():
    od = koebe_onedim(dim=1, order=3)
    z = np.array([0.1 + 0j])
    # s(z) = 1 + 2z + 3z^2 -> f(z) = z + 2z^2 + 3z^3
    assert abs(od.eval(z)[0] - 0.123) < 1e-15
    jet = od.to_mapping_jet()
    assert abs(jet.eval(z)[0] - 0.123) < 1e-15


def test_to_mapping_jet_matches_pointwise():
    rng = np.random.default_rng(40)
    od = random_onedim_jet(3, 4, rng)
    jet = od.to_mapping_jet()
    for _ in range(10):
        x = 0.2 * (rng.standard_normal(3) + 1j * rng.standard_normal(3))
        assert np.allclose(jet.eval(x), od.eval(x), atol=1e-13)


def test_detect_onedim_round_trip():
    rng = np.random.default_rng(41)
    od = random_onedim_jet(2, 4, rng)
    found = detect_onedim(od.to_mapping_jet())
    assert found is not None
    for k in range(1, 4):
        diff = found.scalar_part(k) + od.scalar_part(k).scale(-1.0)
        assert diff.max_coeff() < 1e-10


def test_detect_onedim_rejects_generic_jet():
    # P2(x) = -(x1^2/2)(1,1) does not factor as p1(x) x
    f = example_gallery("example_5_6").jet
    assert detect_onedim(f) is None


def test_onedim_validation():
    with pytest.raises(ValueError):
        OneDimJet(2, 3, {5: ScalarHomPoly(5, 2, {})})


def test_root_transform_koebe_golden_series():
    # square-root transform of the Koebe function: z + z^3 + z^5
    g = root_transform(koebe_onedim(), 2, np.array([1.0 + 0j]))
    one = np.array([1.0 + 0j])
    assert sorted(g.polys) == [3, 5]
    assert abs(g.poly(3).eval(one)[0] - 1.0) < 1e-14
    assert abs(g.poly(5).eval(one)[0] - 1.0) < 1e-14


def test_root_transform_sparsity_pattern():
    rng = np.random.default_rng(42)
    od = random_onedim_jet(2, 3, rng)
    e = np.array([0.6, 0.8j])
    for n in (2, 3):
        g = root_transform(od, n, e)
        assert g.order == 2 * n + 1
        for k in g.polys:
            assert (k - 1) % n == 0


def test_root_transform_pointwise():
    # g(x) = s(<x,e>^n e)^(1/n) x, compared by direct evaluation at small x
    rng = np.random.default_rng(43)
    od = random_onedim_jet(2, 3, rng)
    e = np.array([1.0, 0.0], dtype=complex)
    for n in (2, 3):
        g = root_transform(od, n, e, order=4 * n + 1)
        for _ in range(5):
            x = 0.2 * (rng.standard_normal(2) + 1j * rng.standard_normal(2))
            u = complex(np.vdot(e, x)) ** n
            s_val = od.s_eval(u * e)
            expect = s_val ** (1.0 / n) * x
            # both sides agree up to the truncation order of g
            err = np.linalg.norm(g.eval(x) - expect)
            assert err < (0.5) ** (4 * n + 1) * 10


def test_root_transform_validation():
    od = koebe_onedim()
    with pytest.raises(ValueError):
        root_transform(od, 1, np.array([1.0 + 0j]))
    with pytest.raises(ValueError):
        root_transform(od, 2, np.array([1.0 + 0j]), order=3)


def test_injectivity_check_passes_for_univalent_map():
    def f(x):
        return x / (1.0 - x**2)

    report = check_injectivity_sampled(f, dim=1, samples=2000, seed=1)
    assert report.passed


def test_injectivity_check_catches_collisions():
    def collapse(x):
        return np.zeros_like(x)

    report = check_injectivity_sampled(collapse, dim=2, samples=500, seed=2)
    assert not report.passed
    assert report.witnesses
