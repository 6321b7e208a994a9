import numpy as np
import pytest

import isokam as ik


@pytest.fixture(scope="module")
def golden_pair():
    return ik.GeneratorTuple.reference_pair()


def product_quadrature(n):
    """Points and weights integrating polynomials of degree < 2n exactly
    against the probability measure of S^2."""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    azimuths = 2 * np.pi * np.arange(2 * n) / (2 * n)
    z, phi = np.meshgrid(nodes, azimuths, indexing="ij")
    radius = np.sqrt(1 - z ** 2)
    points = np.stack(
        [radius * np.cos(phi), radius * np.sin(phi), z], axis=-1
    ).reshape((-1, 3))
    point_weights = np.repeat(weights, 2 * n) / (2 * (2 * n))
    return points, point_weights


def random_coeffs(l_max, seed, channel="scalar"):
    rng = np.random.default_rng(seed)
    shape = (lambda l: (2 * l + 1,)) if channel == "scalar" else (lambda l: (2 * l + 1, 3))
    return ik.HarmonicCoeffs(
        [rng.standard_normal(shape(l)) / (l + 1) ** 2 for l in range(l_max + 1)],
        channel,
    )


def test_casimir():
    assert [ik.casimir(l) for l in range(4)] == [0, 2, 6, 12]
    block = ik.HarmonicBlock(3)
    assert block.dim == 7
    assert block.casimir == 12
    assert block.orders.tolist() == [-3, -2, -1, 0, 1, 2, 3]
    with pytest.raises(ValueError):
        ik.HarmonicBlock(-1)


def test_harmonics_are_orthonormal():
    points, weights = product_quadrature(12)
    values = np.hstack([ik.real_spherical_harmonics(l, points) for l in range(6)])
    gram = values.T @ (weights[:, None] * values)
    assert np.abs(gram - np.eye(gram.shape[0])).max() <= 1e-10


def test_low_degree_harmonics():
    points = ik.haar_sphere_points(3, 50, seed=0)
    assert np.allclose(ik.real_spherical_harmonics(0, points), 1)
    degree_one = ik.real_spherical_harmonics(1, points)
    assert np.allclose(degree_one, np.sqrt(3) * points[:, [1, 2, 0]])


def test_sphere_panels():
    panel = ik.sphere_panel(100)
    assert panel.shape == (100, 3)
    assert np.allclose(np.linalg.norm(panel, axis=1), 1)
    haar = ik.sphere_panel(100, kind="haar", seed=1)
    assert np.allclose(haar, ik.sphere_panel(100, kind="haar", seed=1))
    with pytest.raises(ValueError):
        ik.sphere_panel(10, kind="grid")


def test_wigner_block_is_a_representation():
    g, h = ik.haar_sample(3, seed=1), ik.haar_sample(3, seed=2)
    for degree in [0, 1, 2, 5]:
        M_g, M_h = ik.wigner_block(g, degree), ik.wigner_block(h, degree)
        assert np.allclose(M_g @ M_g.T, np.eye(2 * degree + 1), atol=1e-10)
        assert np.allclose(ik.wigner_block(g @ h, degree), M_g @ M_h, atol=1e-10)
        assert np.allclose(ik.HarmonicBlock(degree).rotation(g), M_g)
    with pytest.raises(ik.DimensionMismatch):
        ik.wigner_block(ik.GroupElement.identity(4), 2)


def test_rotated_coefficients_evaluate_rotated_functions():
    g = ik.haar_sample(3, seed=3)
    points = ik.haar_sphere_points(3, 40, seed=4)
    phi = random_coeffs(4, seed=5)
    rotated = ik.rotate_coefficients(g, phi)
    # Rows of points @ g are g^-1 x.
    assert np.allclose(rotated.evaluate(points), phi.evaluate(points @ g.mat), atol=1e-10)
    X = random_coeffs(3, seed=6, channel="vector")
    pushed = ik.rotate_coefficients(g, X)
    expected = X.evaluate(points @ g.mat) @ g.mat.T
    assert np.allclose(pushed.evaluate(points), expected, atol=1e-10)


def test_averaging_operators(golden_pair):
    points = ik.haar_sphere_points(3, 40, seed=7)
    phi = random_coeffs(4, seed=8)
    for degree in range(1, 5):
        assert np.allclose(
            ik.koopman_block(golden_pair, degree),
            ik.averaging_block(golden_pair, degree).T,
        )
    averaged = ik.apply_averaging(golden_pair, phi)
    expected = np.mean([phi.evaluate(points @ g.mat.T) for g in golden_pair], axis=0)
    assert np.allclose(averaged.evaluate(points), expected, atol=1e-10)

    X = random_coeffs(3, seed=9, channel="vector")
    averaged = ik.apply_averaging(golden_pair, X)
    expected = np.mean(
        [X.evaluate(points @ g.mat) @ g.mat.T for g in golden_pair], axis=0
    )
    assert np.allclose(averaged.evaluate(points), expected, atol=1e-10)
    block = X.block(2)
    flat_average = ik.vector_averaging_operator(golden_pair, 2) @ block.ravel()
    assert np.allclose(flat_average.reshape(block.shape), averaged.block(2))


def test_radial_field_is_fixed_by_rotations(golden_pair):
    radial = ik.HarmonicCoeffs(
        [np.zeros((1, 3)), ik.radial_coefficients()], channel="vector"
    )
    points = ik.haar_sphere_points(3, 30, seed=10)
    assert np.allclose(radial.evaluate(points), points, atol=1e-10)
    assert ik.apply_averaging(golden_pair, radial).allclose(radial)


def test_harmonic_coeffs_basics(tmpdir):
    phi = ik.HarmonicCoeffs.basis_function(degree=2, order=1)
    assert phi.l_max == 2
    assert phi.l2_norm() == pytest.approx(1)
    assert phi.sobolev_norm(1) == pytest.approx(np.sqrt(7))
    assert phi.mean == 0
    assert phi.block(5).shape == (11,)
    with pytest.raises(ValueError):
        ik.HarmonicCoeffs.basis_function(degree=1, order=2)
    with pytest.raises(ValueError):
        ik.HarmonicCoeffs([np.zeros(1), np.zeros(2)])
    with pytest.raises(ValueError):
        ik.HarmonicCoeffs([np.zeros(1)], channel="tensor")

    constant = ik.HarmonicCoeffs([[2.0]])
    total = phi + constant
    assert total.l_max == 2 and total.mean == 2
    assert total.without_mean().allclose(phi)
    assert (2 * phi - phi).allclose(phi)
    with pytest.raises(ValueError):
        phi + ik.HarmonicCoeffs.zeros(1, channel="vector")

    path = tmpdir.join("phi.json")
    path.write(ik.tools.dumps_json(total.to_dict()))
    assert ik.HarmonicCoeffs.from_json_file(str(path)).allclose(total, atol=0)
    sparse = ik.HarmonicCoeffs.from_dict(
        {"l_max": 2, "coefficients": {"2": [0, 0, 0, 1, 0]}}
    )
    assert sparse.allclose(phi, atol=0)


def test_fit_from_samples():
    phi = random_coeffs(5, seed=11)
    points = ik.fibonacci_panel(400)
    fitted = ik.HarmonicCoeffs.from_samples(points, phi.evaluate(points), l_max=5)
    assert fitted.allclose(phi, atol=1e-9)
    assert fitted.fit_residual <= 1e-9
    assert ik.design_matrix(points, 5).shape == (400, 36)
    X = random_coeffs(3, seed=12, channel="vector")
    fitted = ik.HarmonicCoeffs.from_samples(points, X.evaluate(points), l_max=3)
    assert fitted.channel == "vector"
    assert fitted.allclose(X, atol=1e-9)
    with pytest.raises(ValueError):
        ik.HarmonicCoeffs.from_samples(points[:10], phi.evaluate(points[:10]), l_max=5)


def test_smooth_truncate():
    phi = ik.HarmonicCoeffs([np.ones(2 * l + 1) for l in range(4)])
    low, high = ik.smooth_truncate(phi, cutoff=6)
    assert [np.abs(b).sum() > 0 for b in low.blocks] == [True, True, False, False]
    assert [np.abs(b).sum() > 0 for b in high.blocks] == [False, False, True, True]
    assert (low + high).allclose(phi, atol=0)
    low, high = ik.smooth_truncate(phi, cutoff=0)
    assert high.allclose(phi, atol=0)
    with pytest.raises(ValueError):
        ik.smooth_truncate(phi, cutoff=-1)


def test_diophantine_margin(golden_pair):
    # Rotations about a single axis fix the zonal harmonics.
    single_axis = ik.GeneratorTuple([ik.GroupElement.plane_rotation(3, 0, 1, 0.7)])
    assert ik.diophantine_margin(single_axis, 1) <= 1e-10
    for degree in range(1, 6):
        assert ik.diophantine_margin(golden_pair, degree) > 1e-3
    with pytest.raises(ValueError):
        ik.diophantine_margin(golden_pair, 0)


def test_solve_coboundary_scalar(golden_pair):
    phi = random_coeffs(8, seed=13)
    psi = ik.solve_coboundary(golden_pair, phi)
    assert psi.mean == 0
    assert psi.fit_residual <= 1e-10
    equation = psi - ik.apply_averaging(golden_pair, psi)
    assert equation.allclose(phi.without_mean(), atol=1e-9)


def test_solve_coboundary_vector(golden_pair):
    phi = random_coeffs(4, seed=14, channel="vector")
    radial = ik.radial_coefficients().ravel()
    radial /= np.linalg.norm(radial)
    blocks = list(phi.blocks)
    degree_one = blocks[1].ravel()
    blocks[1] = (degree_one - degree_one.dot(radial) * radial).reshape((3, 3))
    phi = ik.HarmonicCoeffs(blocks, channel="vector")

    psi = ik.solve_coboundary(golden_pair, phi, threads=2)
    assert psi.channel == "vector"
    assert abs(psi.block(1).ravel().dot(radial)) <= 1e-12
    equation = psi - ik.apply_averaging(golden_pair, psi)
    assert equation.allclose(phi, atol=1e-9)


def test_solve_coboundary_not_diophantine():
    single_axis = ik.GeneratorTuple([ik.GroupElement.plane_rotation(3, 0, 1, 0.7)])
    phi = ik.HarmonicCoeffs.basis_function(degree=1, order=0)
    with pytest.raises(ik.NotDiophantineAtDegree) as error:
        ik.solve_coboundary(single_axis, phi)
    assert error.value.degree == 1
    assert error.value.margin <= 1e-12


def test_fit_gap_bound():
    degrees = [1, 2, 3, 4]
    casimirs = [ik.casimir(l) for l in degrees]
    D2, alpha = ik.fit_gap_bound(degrees, casimirs, [0.5, 0.2, 0.1, 0.05])
    assert 0 <= alpha <= 4
    bounds = 1 / (D2 * np.log(casimirs[1:]) ** alpha)
    assert np.all(np.array([0.2, 0.1, 0.05]) >= bounds)
    D2, alpha = ik.fit_gap_bound(degrees, casimirs, [0.5, 0.2, 0.0, 0.05])
    assert D2 == np.inf and np.isnan(alpha)


def test_gap_profile(golden_pair):
    profile = ik.gap_profile(golden_pair, l_max=16, threads=2)
    assert profile.violations() == []
    assert 0 <= profile.alpha <= 4
    assert np.isfinite(profile.D2)
    assert np.all(profile.gaps > 0)
    dataframe = profile.to_dataframe()
    assert list(dataframe.columns) == [
        "l", "casimir", "norm", "norm_power", "gap", "gap_one_step", "bound_fit"
    ]
    assert dataframe["l"].tolist() == list(range(1, 17))
    assert np.all(dataframe["norm"] <= 1 + 1e-10)
    summary = profile.to_dict()
    assert summary["n_powers"] == 16 and summary["violations"] == []
    with pytest.raises(ValueError):
        ik.gap_profile(golden_pair, l_max=0)


def test_gap_profile_does_not_depend_on_threads(golden_pair):
    first = ik.gap_profile(golden_pair, l_max=6, threads=1).to_dataframe()
    second = ik.gap_profile(golden_pair, l_max=6, threads=3).to_dataframe()
    assert first.equals(second)


def test_tameness_profile(golden_pair):
    dataframe = ik.tameness_profile(golden_pair, l_max=8)
    assert list(dataframe.columns) == ["l", "casimir", "inverse_norm", "ratio_log4"]
    assert np.all(np.isfinite(dataframe["inverse_norm"]))
    assert np.all(dataframe["inverse_norm"] >= 0.5)


@pytest.mark.slow
def test_gap_profile_up_to_degree_64(golden_pair):
    profile = ik.gap_profile(golden_pair, l_max=64)
    assert profile.violations() == []
    assert profile.alpha <= 4
    assert np.all(profile.gaps > 0)
