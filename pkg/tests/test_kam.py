import numpy as np
import pytest

import isokam as ik


@pytest.fixture(scope="module")
def conjugated_system():
    return ik.reference_system(dim=2, epsilon=1e-3, kind="conjugated", seed=0)


@pytest.fixture(scope="module")
def conjugated_step(conjugated_system):
    return ik.kam_step(
        conjugated_system.maps,
        list(conjugated_system.generators),
        cutoff=10,
        l_max=16,
    )


def small_field(dim, scale, seed):
    return ik.TangentField.random(dim, max_degree=2, scale=scale, seed=seed)


def test_geodesic_flow_inverse():
    field = small_field(2, 0.1, seed=0)
    flow = ik.GeodesicFlowMap(field)
    inverse = flow.inverse()
    points = ik.haar_sphere_points(3, 200, seed=1)
    preimages = inverse(points)
    assert np.abs(ik.geodesic_distance(flow(preimages), points)).max() <= 1e-12
    assert inverse.last_residual <= 1e-13
    assert np.allclose(inverse.jacobian(points), inverse.jacobian_fd(points), atol=1e-6)
    with pytest.raises(ik.InversionNotConverged) as error:
        ik.InverseGeodesicFlowMap(field, max_iterations=1)(points)
    assert error.value.iterations == 1


def test_conjugated_map():
    rotation = ik.haar_sample(3, seed=2)
    field = small_field(2, 0.05, seed=3)
    f = ik.ConjugatedMap(ik.PerturbedMap(rotation), field)
    assert f.dim == 2
    assert f.rotation.allclose(rotation)
    points = ik.haar_sphere_points(3, 50, seed=4)
    flow = ik.GeodesicFlowMap(field)
    # psi_V o R o psi_V^-1 applied to psi_V(x) is psi_V(R x).
    assert np.allclose(f(flow(points)), flow(points @ rotation.mat.T), atol=1e-12)
    assert np.allclose(f.jacobian(points), f.jacobian_fd(points), atol=1e-6)


def test_error_field_of_perturbed_map():
    rotation = ik.haar_sample(3, seed=5)
    field = ik.TangentField.random(2, max_degree=3, scale=0.01, seed=6)
    f = ik.PerturbedMap(rotation, field)
    Y = ik.error_field(f, rotation, l_max=16)
    assert np.allclose(Y.values, field(Y.points), atol=1e-13)
    assert Y.c0_norm <= 0.011
    assert Y.fit_residual <= 1e-10
    assert np.allclose(Y.field()(Y.points), Y.values, atol=1e-10)
    assert ik.c0_distance(f, f) == 0
    assert ik.c0_distance(f, rotation) == pytest.approx(Y.c0_norm, rel=0.05)


def test_error_field_beyond_injectivity_radius():
    half_turn = ik.PerturbedMap(ik.GroupElement.plane_rotation(3, 0, 1, np.pi))
    points = np.array([[1.0, 0, 0], [0, 0, 1.0]])
    with pytest.raises(ik.TooFarFromIsometry):
        ik.error_field(half_turn, np.eye(3), points=points)


@pytest.mark.parametrize("dim", [3, 4])
def test_extract_exact_isometry(dim):
    R = ik.haar_sample(dim, seed=7)
    guess = R @ ik.exp_so(ik.random_skew(dim, 0.2, seed=8))
    extracted = ik.extract_isometry(ik.PerturbedMap(R), guess, n_points=2000)
    assert np.abs(extracted.mat - R.mat).max() <= 1e-9
    assert ik.extract_isometry(R, R, n_points=2000).allclose(R, atol=1e-12)


def test_extract_isometry_of_perturbed_map():
    R = ik.haar_sample(3, seed=9)
    f = ik.PerturbedMap(R, ik.TangentField.random(2, 3, scale=0.01, seed=10))
    panel = ik.haar_sphere_points(3, 2000, seed=0)
    extracted = ik.extract_isometry(f, R, n_points=2000, seed=0)
    best = ik.c0_distance(f, extracted, points=panel)
    assert best <= ik.c0_distance(f, R, points=panel) + 1e-9
    for seed in range(5):
        nudge = ik.exp_so(ik.random_skew(3, 0.005, seed=100 + seed))
        assert best <= ik.c0_distance(f, extracted @ nudge, points=panel) + 1e-9


def test_extraction_too_far():
    f = ik.PerturbedMap(ik.GroupElement.plane_rotation(3, 0, 1, 2.0))
    with pytest.raises(ik.TooFarFromIsometry):
        ik.extract_isometry(f, ik.GroupElement.identity(3), n_points=500)


def test_schedule():
    schedule = ik.Schedule(100, 1, 0.1, 3)
    assert np.allclose(schedule.cutoffs, [100, 100 ** 1.1, 100 ** 1.21])
    assert ik.Schedule.from_string("100, 1, 0.1, 3").to_dict() == schedule.to_dict()
    for arguments in [(1, 1, 0.1, 3), (100, 0, 0.1, 3), (100, 1, 0.2, 3), (100, 1, 0.1, 0)]:
        with pytest.raises(ValueError):
            ik.Schedule(*arguments)
    with pytest.raises(ValueError):
        ik.Schedule.from_string("100,1,0.1")


def test_non_diophantine_tuple():
    identities = ik.GeneratorTuple([np.eye(3), np.eye(3)])
    with pytest.raises(ik.NotDiophantineAtDegree) as error:
        ik.check_diophantine(identities, l_max=4)
    assert error.value.degree == 1
    maps = [ik.PerturbedMap(g) for g in identities]
    run = ik.kam_run(maps, list(identities), ik.Schedule(100, 1, 0.1, 3), l_max=4)
    assert len(run) == 1
    assert isinstance(run.errors[0], ik.NotDiophantineAtDegree)
    assert run.errors[0].degree == 1
    assert run[0].failed and "failed" in run[0].summary()
    assert run[0].to_dict()["error"]["name"] == "NotDiophantineAtDegree"
    assert len(run.epsilon_trace()) == 0


def test_kam_step_on_isometries():
    system = ik.reference_system(dim=2, kind="isometric")
    report = ik.kam_step(
        system.maps,
        list(system.generators),
        cutoff=10,
        l_max=4,
        n_quad=1000,
        extraction_points=2000,
    )
    assert report.mean_field_before <= 1e-12
    assert report.eps_after["0"] <= 1e-12
    assert max(report.rotation_distances) <= 1e-9
    with pytest.raises(ValueError):
        ik.kam_step(
            [ik.PerturbedMap(np.eye(4))], [np.eye(4)], cutoff=10, l_max=2
        )


def test_kam_step_reduces_the_mean_field(conjugated_step):
    report = conjugated_step
    assert report.mean_field_reduction <= 0.01
    assert report.eps_after["0"] <= report.eps_before["0"]
    assert set(report.eps_before) == {"0", "1", "2", "s"}
    assert report.conjugacy is not None
    assert report.diagnostics["coboundary_residual"] <= 1e-10
    assert report.diagnostics["inversion_residual"] <= 1e-13
    assert len(report.rotations) == 2 and len(report.maps) == 2
    data = ik.tools.dumps_json(report.to_dict())
    assert '"conjugacy"' in data and '"stagnated": false' in data


def test_epsilon_trace(conjugated_step):
    run = ik.KamRun([conjugated_step])
    trace = run.epsilon_trace()
    assert list(trace.columns) == ["step", "lambda", "eps_0", "eps_2", "strain_H0", "dist_R"]
    assert trace["step"].tolist() == [0, 1]
    assert np.isnan(trace["lambda"][0]) and trace["lambda"][1] == 10
    assert trace["eps_0"][1] == conjugated_step.eps_after["0"]
    assert not run.stagnated and run.errors == []


def test_top_bottom_symmetry_on_two_sphere():
    system = ik.reference_system(dim=2, epsilon=0.02, kind="mean_free")
    with pytest.warns(UserWarning):
        report = ik.top_bottom_symmetry(system, n_steps=1000, predict=False)
    assert report["defect"] == 0
    assert report["Lambda_d"] == pytest.approx(report["lambda_1"] + report["lambda_d"])
    assert "predicted_lambda_1" not in report


def test_top_bottom_symmetry_report():
    rotations = ik.reference_generators(3, seed=1)
    field = small_field(3, 0.02, seed=11)
    maps = [ik.PerturbedMap(R, Y) for R, Y in zip(rotations, [field, -field])]
    report = ik.top_bottom_symmetry(
        maps, rotations=rotations, n_steps=2000, predict=True, n_quad=2000
    )
    assert report["dim"] == 3
    assert report["lambda_1"] >= report["lambda_d"]
    assert report["epsilon"] == pytest.approx(0.02, rel=0.1)
    assert report["defect_se"] > 0
    assert {"predicted_lambda_1", "predicted_lambda_d", "predicted_Lambda_d"} <= set(report)
    with pytest.raises(ValueError):
        ik.symmetry_scaling(list(rotations) + [rotations[0]], n_steps=1000)


@pytest.mark.slow
def test_kam_run_decreases_eps_0(conjugated_system):
    run = ik.kam_run(
        conjugated_system.maps,
        list(conjugated_system.generators),
        ik.Schedule(100, 1, 0.1, 3),
    )
    assert run.errors == []
    trace = run.epsilon_trace()
    assert len(trace) == 4
    assert np.all(np.diff(trace["eps_0"]) < 0)


@pytest.mark.slow
def test_top_bottom_symmetry_scaling():
    rotations = ik.reference_generators(3, seed=0)
    reports = ik.symmetry_scaling(
        rotations, epsilons=(0.02, 0.01), n_steps=10 ** 5, n_walkers=4
    )
    for report in reports:
        bound = 0.5 * abs(report["lambda_d"]) + 3 * report["defect_se"]
        assert report["defect"] <= bound
    large, small = reports
    noise = 3 * small["defect_se"] / abs(small["lambda_d"])
    assert small["relative_defect"] <= large["relative_defect"] + noise
