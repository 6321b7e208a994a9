import numpy as np
import pytest

import isokam as ik


@pytest.fixture(scope="module")
def golden_pair():
    return ik.GeneratorTuple.reference_pair()


@pytest.fixture(scope="module")
def coarse_net(golden_pair):
    return ik.epsilon_net_bfs(golden_pair, epsilon=0.3, max_len=12)


@pytest.fixture(scope="module")
def fine_net(golden_pair):
    return ik.epsilon_net_bfs(golden_pair, epsilon=0.12, max_len=16)


def test_word_basics(golden_pair):
    word = ik.Word.from_letters([(0, 1), (1, 1), (0, -1), (1, -1)], golden_pair)
    assert word.length == 4
    assert word.is_balanced
    assert word.has_inverses
    assert word.is_consistent(golden_pair)
    assert (word + word.inverse()).value.allclose(np.eye(3))
    assert word.concatenate(word).length == 8
    unbalanced = ik.Word.from_letters([(0, 1), (0, 1), (1, -1)], golden_pair)
    assert not unbalanced.is_balanced
    assert unbalanced.to_dict()["letters"] == [[0, 1, 2], [1, -1, 1]]
    with pytest.raises(ValueError):
        ik.Word([(0, 2)], ik.GroupElement.identity(3))


def test_identity_generates_nothing():
    S = ik.GeneratorTuple([np.eye(3)])
    with pytest.raises(ik.NotDenseAtBudget) as error:
        ik.epsilon_net_bfs(S, epsilon=0.1, max_len=3)
    assert error.value.radius == pytest.approx(np.sqrt(2) * np.pi)
    assert error.value.radius == ik.so_diameter(3)
    assert ik.so_diameter(4) == pytest.approx(2 * np.pi)
    half_turn = ik.GroupElement.plane_rotation(3, 0, 1, np.pi - 1e-6)
    assert ik.distance(np.eye(3), half_turn) <= ik.so_diameter(3)


def test_epsilon_net_bfs(golden_pair, coarse_net):
    assert coarse_net.covering_radius <= 0.3
    assert coarse_net.max_length <= 12
    panel = ik.certification_panel(3)
    assert coarse_net.panel_covering_radius(panel) == pytest.approx(
        coarse_net.covering_radius
    )
    for index in range(0, len(coarse_net), max(1, len(coarse_net) // 200)):
        word = coarse_net[index]
        assert word.is_consistent(golden_pair, tolerance=1e-10)
    with pytest.raises(ValueError):
        ik.epsilon_net_bfs(golden_pair, epsilon=0, max_len=3)


def test_net_too_short_raises(golden_pair):
    with pytest.raises(ik.NotDenseAtBudget) as error:
        ik.epsilon_net_bfs(golden_pair, epsilon=0.01, max_len=2)
    assert error.value.length == 2
    assert error.value.radius > 0.01


def test_nearest_matches_linear_scan(coarse_net):
    for seed in range(10):
        target = ik.haar_sample(3, seed=seed)
        word, word_distance = coarse_net.nearest(target)
        scan = ik.batch_distance(coarse_net.values, target.mat[None])
        assert word_distance == pytest.approx(scan.min(), abs=1e-9)
        assert ik.distance(target, word.value) == pytest.approx(scan.min(), abs=1e-9)


def test_net_imbalances(coarse_net):
    step = max(1, len(coarse_net) // 100)
    for index in range(0, len(coarse_net), step):
        word = coarse_net[index]
        assert np.array_equal(coarse_net.imbalances[index], word.imbalance(2))
    balanced = coarse_net.balanced_indices
    assert balanced[0] == 0 and len(balanced) > 1
    assert all(coarse_net[int(index)].is_balanced for index in balanced[:50])
    word = ik.Word.from_letters([(0, 1), (0, 1), (1, -1)], coarse_net.generators)
    assert word.imbalance(3).tolist() == [2, -1, 0]


def test_balanced_nearest_word(coarse_net):
    index = int(coarse_net.balanced_indices[1])
    target = coarse_net[index].value @ ik.exp_so(ik.random_skew(3, 0.03, seed=4))
    word = ik.solovay_kitaev(target, coarse_net, depth=0, balanced=True)
    assert word.is_balanced
    assert ik.distance(target, word.value) <= 0.03 + 1e-9
    _, plain_distance = coarse_net.nearest(target)
    _, balanced_distance = coarse_net.nearest(target, balanced=True)
    assert plain_distance <= balanced_distance + 1e-12


def test_commutator_corrections_keep_the_imbalance(coarse_net):
    target = ik.exp_so(ik.random_skew(3, 0.001, seed=5))
    base = ik.solovay_kitaev(target, coarse_net, depth=0)
    word = ik.solovay_kitaev(target, coarse_net, depth=1)
    assert np.array_equal(word.imbalance(2), base.imbalance(2))
    assert word.is_consistent(coarse_net.generators, tolerance=1e-9)


def test_approximate_inverse_examples():
    n, achieved = ik.approximate_inverse(ik.GroupElement.identity(3), 0.1, 10)
    assert (n, achieved) == (1, 0)
    order_five = ik.GroupElement.plane_rotation(3, 0, 1, 2 * np.pi / 5)
    n, achieved = ik.approximate_inverse(order_five, 1e-6, 100)
    assert n == 4
    assert achieved < 1e-6


def test_approximate_inverse_is_minimal():
    h = ik.GroupElement.plane_rotation(3, 0, 1, ik.GOLDEN_ANGLE)
    n, achieved = ik.approximate_inverse(h, 0.05, 10 ** 6)
    assert achieved < 0.05
    assert ik.distance(h.inverse(), ik.GroupElement(np.linalg.matrix_power(h.mat, n))) == (
        pytest.approx(achieved, abs=1e-8)
    )
    if n > 1:
        assert np.all(ik.power_distances(h, np.arange(1, n)) >= 0.05)


def test_approximate_inverse_budget():
    h = ik.GroupElement.plane_rotation(3, 0, 1, ik.GOLDEN_ANGLE)
    with pytest.raises(ik.BudgetExceeded) as error:
        ik.approximate_inverse(h, 1e-9, 10)
    assert error.value.best > 1e-9


def test_solovay_kitaev_exact_hit(coarse_net):
    word = coarse_net[len(coarse_net) // 2]
    found = ik.solovay_kitaev(word.value, coarse_net, depth=0)
    assert ik.distance(found.value, word.value) == pytest.approx(0, abs=1e-9)


def test_solovay_kitaev_depth_zero_is_nearest(coarse_net):
    nudge = ik.exp_so(ik.random_skew(3, 0.05, seed=1))
    target = coarse_net[10].value @ nudge
    word = ik.solovay_kitaev(target, coarse_net, depth=0)
    scan = ik.batch_distance(coarse_net.values, target.mat[None])
    assert ik.distance(target, word.value) == pytest.approx(scan.min(), abs=1e-9)


def test_solovay_kitaev_errors(golden_pair):
    lonely_net = ik.EpsilonNet(
        generators=golden_pair,
        alphabet=[(0, 1)],
        values=np.eye(3)[None],
        parents=[-1],
        letter_ids=[-1],
        epsilon=0.1,
        covering_radius=np.inf,
        max_length=0,
    )
    far = ik.GroupElement.plane_rotation(3, 0, 1, 1.0)
    with pytest.raises(ik.NetTooCoarse):
        ik.solovay_kitaev(far, lonely_net, depth=1)
    with pytest.raises(ik.DimUnsupported):
        ik.solovay_kitaev(ik.GroupElement.identity(4), lonely_net, depth=1)


def test_group_commutator_decomposition():
    delta = ik.exp_so(ik.random_skew(3, 0.01, seed=3))
    V, W = ik.group_commutator_decomposition(delta)
    commutator = V @ W @ V.inverse() @ W.inverse()
    assert commutator.allclose(delta, atol=1e-9)
    identity = ik.GroupElement.identity(3)
    assert ik.distance(identity, V) < 0.2
    assert ik.distance(identity, W) < 0.2


def test_compile_generator_and_inverse(golden_pair, coarse_net):
    compiled = ik.compile_without_inverses(golden_pair[0], golden_pair, 0.05, net=coarse_net)
    assert compiled.word.letters.tolist() == [[0, 1]]
    assert compiled.distance == pytest.approx(0, abs=1e-9)
    compiled = ik.compile_without_inverses(
        golden_pair[0].inverse(), golden_pair, 0.05, net=coarse_net
    )
    assert not compiled.word.has_inverses
    assert compiled.distance < 0.05
    assert list(compiled.inverse_powers) == [0]
    assert compiled.to_dict()["symmetric_length"] == 1


def test_fit_contraction_constant():
    traces = [[0.1, 0.01, 0.0005], [0.2, 0.05]]
    expected = max(0.01 / 0.1 ** 1.5, 0.0005 / 0.01 ** 1.5, 0.05 / 0.2 ** 1.5)
    assert ik.fit_contraction_constant(traces) == pytest.approx(expected)


@pytest.mark.slow
def test_solovay_kitaev_contraction_panel(fine_net):
    assert fine_net.covering_radius <= 0.12
    traces = []
    for seed in range(50):
        target = ik.haar_sample(3, seed=1000 + seed)
        word, trace = ik.solovay_kitaev(target, fine_net, depth=4, return_trace=True)
        assert len(trace) == 5
        assert word.is_consistent(fine_net.generators, tolerance=1e-8)
        base = ik.solovay_kitaev(target, fine_net, depth=0)
        assert np.array_equal(word.imbalance(2), base.imbalance(2))
        traces.append(trace)
    c = ik.fit_contraction_constant(traces)
    assert np.isfinite(c)
    for trace in traces:
        for previous, following in zip(trace[:-1], trace[1:]):
            assert following <= c * previous ** 1.5 * (1 + 1e-12)
    final = np.median([trace[-1] for trace in traces])
    assert final <= 1e-3


@pytest.mark.slow
def test_compile_without_inverses_panel(golden_pair, fine_net):
    for seed in range(20):
        target = ik.haar_sample(3, seed=2000 + seed)
        compiled = ik.compile_without_inverses(target, golden_pair, 0.05, net=fine_net)
        assert not compiled.word.has_inverses
        assert compiled.distance < 0.05


@pytest.mark.slow
def test_balanced_solovay_kitaev(fine_net):
    balanced = fine_net.balanced_indices
    for seed, index in enumerate(balanced[1 : len(balanced) : max(1, len(balanced) // 5)]):
        nudge = ik.exp_so(ik.random_skew(3, 0.05, seed=3000 + seed))
        target = fine_net[int(index)].value @ nudge
        word, trace = ik.solovay_kitaev(
            target, fine_net, depth=2, balanced=True, return_trace=True
        )
        assert word.is_balanced
        assert word.is_consistent(fine_net.generators, tolerance=1e-8)
        assert trace[0] <= 0.05 + 1e-9
