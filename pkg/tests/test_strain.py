import numpy as np
import pytest

import isokam as ik


@pytest.fixture(scope="module")
def mean_free_system():
    return ik.reference_system(dim=2, epsilon=0.02, kind="mean_free", seed=0)


def test_split_strain():
    rng = np.random.default_rng(0)
    root = np.eye(3) + 0.1 * rng.standard_normal((5, 3, 3))
    pullback = root.transpose(0, 2, 1) @ root
    E, E_C, E_NC = ik.split_strain(pullback)
    assert np.allclose(E, (pullback - np.eye(3)) / 2)
    assert np.allclose(E_C + E_NC, E)
    assert np.allclose(np.trace(E_NC, axis1=1, axis2=2), 0, atol=1e-15)
    assert np.allclose(E_C[:, 0, 1], 0)


def test_strain_of_isometry_vanishes():
    f = ik.PerturbedMap(ik.haar_sample(3, seed=1))
    sample = ik.strain_at(f, np.array([0.0, 0.6, 0.8]))
    assert sample.dim == 2
    assert np.allclose(sample.pullback, np.eye(2), atol=1e-12)
    assert sample.norm_sq <= 1e-24
    norms = ik.strain_norms(f, n_quad=2000, seed=2)
    assert norms["H0_sq"] <= 1e-24
    assert norms["sup"] <= 1e-12


def test_strain_sample():
    rotation = ik.haar_sample(4, seed=3)
    field = ik.TangentField.random(3, scale=0.05, seed=4)
    f = ik.PerturbedMap(rotation, field)
    points = ik.haar_sphere_points(4, 5, seed=5)
    pullbacks = ik.pullback_metric(f, points)
    assert pullbacks.shape == (5, 3, 3)
    sample = ik.strain_at(f, points[0])
    assert np.allclose(sample.pullback, pullbacks[0])
    assert sample.norm_sq == pytest.approx(
        sample.conformal_norm_sq + sample.non_conformal_norm_sq
    )
    assert sample.conformal_norm_sq == pytest.approx(sample.trace ** 2 / 3)
    assert set(sample.to_dict()) == {"point", "pullback", "E", "E_C", "E_NC"}


def test_strain_norms(mean_free_system):
    f = mean_free_system[0]
    norms = ik.strain_norms(f, n_quad=20000, seed=6)
    assert norms["H0_sq"] == pytest.approx(
        4 * (norms["H0_E_C_sq"] + norms["H0_E_NC_sq"]), rel=1e-10
    )
    assert norms["H0_trace_sq"] == pytest.approx(2 * norms["H0_E_C_sq"], rel=1e-10)
    assert 0 < norms["H0_sq"] <= norms["sup"] ** 2
    assert norms["H0_sq_se"] > 0
    with pytest.raises(ValueError):
        ik.strain_norms(f, n_quad=10)


def test_strain_expansion_identities(mean_free_system):
    d = mean_free_system.dim
    expansions = [
        ik.lambda_r_strain_expansion(mean_free_system, r, n_quad=20000, seed=7)
        for r in range(1, d + 1)
    ]
    top = expansions[-1]
    # The non-conformal part does not change the total volume.
    assert top["Lambda_r"] == pytest.approx(-top["trace_sq"] / 2, rel=1e-10)
    assert sum(e["lambda_r"] for e in expansions) == pytest.approx(top["Lambda_r"], rel=1e-10)
    assert expansions[0]["Lambda_r"] == pytest.approx(expansions[0]["lambda_r"])
    first = expansions[0]
    assert first["Lambda_r"] == pytest.approx(
        -first["trace_sq"] / 4 + first["non_conformal_sq"] / 4, rel=1e-10
    )
    with pytest.raises(ValueError):
        ik.lambda_r_strain_expansion(mean_free_system, 3, n_quad=2000)


def test_strain_expansion_does_not_depend_on_threads(mean_free_system):
    first = ik.lambda_r_strain_expansion(mean_free_system, 1, n_quad=150000, threads=1)
    second = ik.lambda_r_strain_expansion(mean_free_system, 1, n_quad=150000, threads=2)
    assert first == second


@pytest.mark.slow
def test_strain_expansion_predicts_top_exponent(mean_free_system):
    epsilon = 0.02
    prediction = ik.lambda_r_strain_expansion(mean_free_system, 1, n_quad=10 ** 6, seed=8)
    spectrum = mean_free_system.lyapunov_spectrum(n_steps=10 ** 5, n_walkers=10, seed=9)
    error = np.hypot(spectrum.standard_errors[0], prediction["Lambda_r_se"])
    residual = abs(spectrum.exponents[0] - prediction["Lambda_r"])
    assert residual <= 3 * error + 10 * epsilon ** 3


@pytest.mark.slow
def test_strain_expansion_residual_shrinks_with_epsilon():
    residuals, errors = [], []
    for epsilon in (0.02, 0.01):
        system = ik.reference_system(dim=2, epsilon=epsilon, kind="mean_free", seed=0)
        prediction = ik.lambda_r_strain_expansion(system, 1, n_quad=10 ** 6, seed=8)
        spectrum = system.lyapunov_spectrum(n_steps=10 ** 5, n_walkers=10, seed=9)
        residuals.append(abs(spectrum.exponents[0] - prediction["Lambda_r"]))
        errors.append(np.hypot(spectrum.standard_errors[0], prediction["Lambda_r_se"]))
    # Third order remainder: halving epsilon divides it by about 8.
    large, small = residuals
    assert small <= 0.35 * (large + 3 * errors[0]) + 3 * errors[1]
