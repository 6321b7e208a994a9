import numpy as np
import pytest

import isokam as ik

# Third-order tolerance of the Taylor expansions: |MC - Taylor| <= C |L|^3.
CUBIC_CONSTANT = 5


def random_matrices(n, size, scale, seed):
    rng = np.random.default_rng(seed)
    return np.eye(n) + scale * rng.standard_normal((size, n, n))


def random_small_matrix(d, norm, seed):
    L = np.random.default_rng(seed).standard_normal((d, d))
    return L * (norm / np.linalg.norm(L))


def test_subspace_frames():
    with pytest.raises(ValueError):
        ik.SubspaceFrame([[1.0, 1.0], [0.0, 1.0], [0.0, 0.0]])
    frame = ik.SubspaceFrame.from_basis([[1.0, 1.0], [0.0, 1.0], [0.0, 0.0]])
    assert frame.n == 3 and frame.rank == 2
    assert np.allclose(frame.projector, np.diag([1.0, 1.0, 0.0]))
    assert frame.cos2_with([1.0, 0.0, 1.0]) == pytest.approx(0.5)
    assert np.array_equal(ik.SubspaceFrame.coordinate(4, 1).matrix, np.eye(4)[:, :1])
    with pytest.raises(ik.RankDeficient):
        ik.SubspaceFrame.from_basis([[1.0, 2.0], [1.0, 2.0], [0.0, 0.0]])


def test_determinant_of_full_space_is_determinant():
    for seed in range(10):
        A = random_matrices(4, 1, 0.3, seed)[0]
        value = ik.subspace_det(A, np.eye(4))
        assert value == pytest.approx(abs(np.linalg.det(A)), rel=1e-12)


def test_determinant_cocycle_and_basis_independence():
    n, r, size = 5, 2, 1000
    A = random_matrices(n, size, 0.15, seed=1)
    B = random_matrices(n, size, 0.15, seed=2)
    bases = np.random.default_rng(3).standard_normal((size, n, r))
    changes = random_matrices(r, size, 0.15, seed=4)
    composed = ik.log_subspace_det(A @ B, bases)
    chained = ik.log_subspace_det(A, B @ bases) + ik.log_subspace_det(B, bases)
    assert np.abs(composed - chained).max() <= 1e-9
    assert np.abs(ik.log_subspace_det(A, bases @ changes) - ik.log_subspace_det(A, bases)).max() <= 1e-9


def test_determinant_with_metrics():
    rng = np.random.default_rng(5)
    E = ik.haar_grassmannian(4, 2, seed=6)
    root = np.eye(4) + 0.2 * rng.standard_normal((4, 4))
    g = root.T @ root
    assert ik.subspace_det(np.eye(4), E, g, g) == pytest.approx(1, abs=1e-12)
    # det(L, g1, g2 | E) = det(root L root1^-1 | root1 E) with g = root^T root.
    L = random_matrices(4, 1, 0.3, seed=7)[0]
    expected = ik.subspace_det(root @ L, E)
    assert ik.subspace_det(L, E, None, g) == pytest.approx(expected, rel=1e-10)


def test_rank_deficient_image():
    with pytest.raises(ik.RankDeficient):
        ik.subspace_det(np.zeros((3, 3)), ik.SubspaceFrame.coordinate(3, 2))


def test_haar_grassmannian():
    E = ik.haar_grassmannian(5, 2, seed=8)
    assert np.allclose(E.matrix.T @ E.matrix, np.eye(2), atol=1e-12)
    assert np.array_equal(E.matrix, ik.haar_grassmannian(5, 2, seed=8).matrix)
    frames = ik.haar_frames(4, 3, 10 ** 4, np.random.default_rng(9))
    mean_projector = np.mean(frames @ frames.transpose(0, 2, 1), axis=0)
    assert np.abs(mean_projector - 0.75 * np.eye(4)).max() <= 0.02
    with pytest.raises(ValueError):
        ik.haar_frames(3, 4, 1, np.random.default_rng(0))


@pytest.mark.parametrize("d", range(1, 7))
def test_taylor_closed_form_anchors(d):
    projection = np.zeros((d, d))
    projection[0, 0] = 1.0
    for r in range(1, d + 1):
        alpha_1, alpha_2 = ik.lambda_r_taylor_terms(np.eye(d), r)
        assert alpha_1 == pytest.approx(r, abs=1e-12)
        assert alpha_2 == pytest.approx(-r / 2.0, abs=1e-12)
        alpha_2 = ik.lambda_r_taylor_terms(projection, r)[1]
        expected = r / (2.0 * d) - r * (r + 2.0) / (d * (d + 2.0))
        assert alpha_2 == pytest.approx(expected, abs=1e-12)


def test_per_exponent_taylor_sums_to_lambda_r():
    L = random_small_matrix(5, 0.1, seed=10)
    partial_sums = np.cumsum([ik.lambda_per_exponent_taylor(L, r) for r in range(1, 6)])
    expected = [ik.lambda_r_taylor(L, r) for r in range(1, 6)]
    assert np.allclose(partial_sums, expected, atol=1e-14)
    # In dimension 1 this is the expansion of ln(1 + L).
    assert ik.lambda_r_taylor([[0.1]], 1) == pytest.approx(0.1 - 0.005)
    with pytest.raises(ValueError):
        ik.lambda_r_taylor(L, 6)
    with pytest.raises(ValueError):
        ik.lambda_per_exponent_taylor(L, 0)


def test_strain_expansion_coefficients():
    assert ik.strain_expansion_coefficients(2, 1) == (-0.25, 0.25)
    conformal, non_conformal = ik.strain_expansion_coefficients(3, 3)
    assert conformal == -0.5 and non_conformal == 0


def test_lambda_r_mc_matches_taylor():
    d, r, norm = 4, 2, 0.05
    for seed in range(3):
        L = random_small_matrix(d, norm, seed)
        estimate, error = ik.lambda_r_mc(L, r, n_samples=10 ** 5, seed=seed)
        bound = CUBIC_CONSTANT * norm ** 3 + 3 * error
        assert abs(estimate - ik.lambda_r_taylor(L, r)) <= bound


def test_lambda_r_mc_control_variate_is_unbiased():
    L = random_small_matrix(3, 0.2, seed=11)
    plain, plain_error = ik.lambda_r_mc(L, 1, 2 * 10 ** 5, seed=12, control_variate=False)
    reduced, reduced_error = ik.lambda_r_mc(L, 1, 2 * 10 ** 5, seed=12)
    assert reduced_error < plain_error
    assert abs(plain - reduced) <= 4 * plain_error


def test_lambda_r_mc_does_not_depend_on_threads():
    L = random_small_matrix(3, 0.1, seed=13)
    first = ik.lambda_r_mc(L, 2, n_samples=250000, seed=14, threads=1)
    second = ik.lambda_r_mc(L, 2, n_samples=250000, seed=14, threads=3)
    assert first == second
    with pytest.raises(ValueError):
        ik.lambda_r_mc(np.zeros((2, 3)), 1)


def test_metric_average_matches_first_order():
    rng = np.random.default_rng(15)
    G = rng.standard_normal((4, 4))
    G = 0.01 * (G + G.T) / np.linalg.norm(G + G.T)
    estimate, error = ik.metric_lambda_mc(G, 2, n_samples=10 ** 5, seed=16)
    assert abs(estimate - ik.metric_taylor(G, 2)) <= CUBIC_CONSTANT * 0.01 ** 2 + 3 * error


@pytest.mark.parametrize("d", [3, 5])
def test_sphere_moments(d):
    moments = ik.sphere_moments(d, n_samples=2 * 10 ** 5, seed=d)
    for name in ["m2", "m4", "m22"]:
        assert moments[name + "_exact"] == pytest.approx(
            {"m2": 1.0 / d, "m4": 3.0 / (d * (d + 2)), "m22": 1.0 / (d * (d + 2))}[name]
        )
        assert abs(moments[name] - moments[name + "_exact"]) <= 4 * moments[name + "_se"]
    with pytest.raises(ValueError):
        ik.sphere_moments(1)


def test_induced_maps():
    f = ik.PerturbedMap(ik.haar_sample(4, seed=17))
    x = np.array([0.0, 0.0, 0.0, 1.0])
    E = ik.SubspaceFrame.from_basis(np.eye(4)[:, :2])
    image, F = ik.induced_map(f, x, E)
    assert np.allclose(image, f.rotation.apply(x))
    assert np.allclose(ik.principal_angles(F, f.rotation.mat @ E.matrix), 0, atol=1e-7)

    field = ik.TangentField.random(3, scale=0.1, seed=18)
    g = ik.PerturbedMap(ik.haar_sample(4, seed=19), field)
    points = ik.haar_sphere_points(4, 10, seed=20)
    frames = ik.tangent_frames(points)[:, :, :2]
    images, new_frames, log_dets = ik.push_frames(g, points, frames)
    assert np.allclose(images, g(points))
    assert np.allclose(new_frames.transpose(0, 2, 1) @ new_frames, np.eye(2), atol=1e-12)
    assert np.allclose(log_dets, ik.log_subspace_det(np.eye(4), g.differential(points, frames)))


def test_chart_induced_map():
    J = random_matrices(4, 1, 0.3, seed=21)[0]
    A = 0.2 * np.random.default_rng(22).standard_normal((2, 2))
    image = ik.chart_induced_map(J, A)
    assert image.shape == (2, 2)
    expected = J @ np.vstack([np.eye(2), A])
    assert np.allclose(
        ik.principal_angles(ik.grassmann.chart_frame(image), expected), 0, atol=1e-7
    )


@pytest.mark.slow
def test_lambda_r_mc_panel():
    d, r, norm = 4, 2, 0.05
    ratios = []
    for seed in range(20):
        L = random_small_matrix(d, norm, seed)
        estimate, error = ik.lambda_r_mc(L, r, n_samples=10 ** 6, seed=seed)
        difference = abs(estimate - ik.lambda_r_taylor(L, r))
        assert difference <= CUBIC_CONSTANT * norm ** 3 + 3 * error
        half, _ = ik.lambda_r_mc(L / 2, r, n_samples=10 ** 6, seed=seed)
        ratios.append(abs(half - ik.lambda_r_taylor(L / 2, r)) / difference)
    assert np.median(ratios) <= 0.35


@pytest.mark.slow
@pytest.mark.parametrize("d", [3, 5])
def test_sphere_moments_panel(d):
    moments = ik.sphere_moments(d, n_samples=10 ** 6, seed=100 + d)
    for name in ["m2", "m4", "m22"]:
        assert abs(moments[name] - moments[name + "_exact"]) <= 3 * moments[name + "_se"]
