# -*- coding: utf-8 -*-
import math
from fractions import Fraction

import numpy as np
import pytest
import torch

from genrank.exceptions import (
    CapacityRefusedError, ConvergenceError, PreconditionError, ShapeError)
from genrank.linalg import Matrix, rank_exact, rank_float
from genrank.network import (
    NetworkParams, PowerSeries, SolverConfig, TwoLayerNetwork, assemble_doubled,
    capacity_verdict, capacity_verdict_multioutput, custom, doubled_output,
    finite_difference_jacobian, forward, get_activation, interpolate,
    interpolate_multioutput, jacobian_full, jacobian_wrt_W, pad_odd_width,
    polynomial, polynomial_rank_bound, rank_at_initialization)
from genrank.network.capacity import (
    M_ODD, NOT_DIVISIBLE, SARD_PARAM_COUNT, SARD_POLY_RANK, SATISFIED,
    WIDTH_INSUFFICIENT)

ACTIVATIONS = ['tanh', 'logistic', 'arctan', 'gelu', 'cubic']


def random_params(rng, d, m):
    return NetworkParams(rng.standard_normal((d, m)) * 0.5,
                         rng.standard_normal(m) * 0.1,
                         rng.standard_normal(m))


def test_series_coefficients():
    tanh = get_activation('tanh').value_coefficients(5)
    assert tanh == [0, 1, 0, Fraction(-1, 3), 0, Fraction(2, 15)]
    logistic = get_activation('logistic').value_coefficients(3)
    assert logistic == [Fraction(1, 2), Fraction(1, 4), 0, Fraction(-1, 48)]
    arctan = get_activation('arctan').value_coefficients(5)
    assert arctan == [0, 1, 0, Fraction(-1, 3), 0, Fraction(1, 5)]
    gelu = get_activation('gelu').value_coefficients(3)
    assert gelu[:2] == [0, Fraction(1, 2)] and gelu[3] == 0
    assert float(gelu[2]) == pytest.approx(1 / math.sqrt(2 * math.pi))


def test_power_series_algebra():
    inv = PowerSeries([1, -1, 0, 0]).reciprocal()
    assert inv == PowerSeries([1, 1, 1, 1])
    assert PowerSeries([0, 0, 0, 1]).shift(1) == PowerSeries([1, 3, 3, 1])
    assert PowerSeries([1, 2, 3]).derivative() == PowerSeries([2, 6])
    with pytest.raises(ZeroDivisionError):
        PowerSeries([0, 1]).reciprocal()


@pytest.mark.parametrize('name', ['tanh', 'logistic', 'arctan', 'gelu'])
def test_series_evaluates_the_function(name):
    act = get_activation(name)
    coeffs = act.value_coefficients(30)
    dcoeffs = act.derivative_coefficients(30)
    x = 0.2
    assert sum(float(c) * x ** k for k, c in enumerate(coeffs)) == \
        pytest.approx(float(act(act.eta + x)), rel=1e-9)
    assert sum(float(c) * x ** k for k, c in enumerate(dcoeffs)) == \
        pytest.approx(float(act.derivative(act.eta + x)), rel=1e-9)


def test_polynomial_activation():
    act = polynomial('0,0,0,1', eta=1)
    assert act.coefficients == [1, 3, 3, 1]
    assert float(act(2.0)) == pytest.approx(8.0)
    assert get_activation('poly:1,2').is_polynomial
    with pytest.raises(ValueError):
        get_activation('relu')


def test_custom_activation():
    act = custom('exp', np.exp, np.exp, PowerSeries.exp)
    assert act.value_coefficients(3) == [1, 1, Fraction(1, 2), Fraction(1, 6)]
    assert act.derivative_coefficients(2) == [1, 1, Fraction(1, 2)]
    assert polynomial_rank_bound(3, act) is None
    assert capacity_verdict(6, 10, 4, act).reason == SATISFIED


def test_phi_modes():
    act = get_activation('logistic')
    x = np.linspace(-1, 1, 5)
    np.testing.assert_allclose(act.phi(x), act.derivative(x))
    np.testing.assert_allclose(act.phi(x, mode='subtract'), act.derivative(x))
    with pytest.raises(ValueError):
        act.phi(x, mode='other')


@pytest.mark.parametrize('name', ACTIVATIONS)
def test_jacobian_matches_finite_differences(name, rng):
    act = get_activation(name)
    for _ in range(20):
        d, m, n = 3, 4, 6
        params = random_params(rng, d, m)
        X = rng.standard_normal((d, n))
        J = jacobian_wrt_W(params, X, act)
        assert J.shape == (m * d, n)
        numeric = finite_difference_jacobian(
            lambda w: forward(params.with_vec_W(w), X, act), params.vec_W(), step=1e-6)
        np.testing.assert_allclose(J, numeric.T, rtol=1e-5, atol=1e-7)


@pytest.mark.parametrize('name', ['tanh', 'gelu', 'cubic'])
def test_full_jacobian_with_autograd(name, rng):
    act = get_activation(name)
    params = random_params(rng, 2, 3)
    X = rng.standard_normal((2, 5))
    J = jacobian_full(params, X, act)
    assert J.shape == (3 * (2 + 2), 5)
    np.testing.assert_allclose(J[:6], jacobian_wrt_W(params, X, act), rtol=1e-10,
                               atol=1e-12)

    def outputs(theta):
        return forward(NetworkParams.from_flat(theta, 2, 3), X, act)
    numeric = finite_difference_jacobian(outputs, params.flat(), step=1e-6)
    np.testing.assert_allclose(J, numeric.T, rtol=1e-5, atol=1e-7)


def test_torch_module_matches_numpy_forward(rng):
    params = random_params(rng, 3, 4)
    X = rng.standard_normal((3, 7))
    net = TwoLayerNetwork.from_params(params, 'arctan')
    with torch.no_grad():
        out = net(torch.from_numpy(X)).numpy()
    np.testing.assert_allclose(out, forward(params, X, 'arctan'), rtol=1e-12)
    np.testing.assert_allclose(net.to_params().W, params.W)


def test_params_serialization(tmp_path):
    params = NetworkParams(np.arange(6.0).reshape(2, 3), [0, 1, 2], [1, -1, 0.5])
    again = NetworkParams.from_json(params.to_json())
    np.testing.assert_array_equal(again.W, params.W)
    flat = NetworkParams.from_flat(params.flat(), 2, 3)
    np.testing.assert_array_equal(flat.W, params.W)
    params.save(tmp_path / 'p.json', extra={'act': 'tanh'})
    np.testing.assert_array_equal(NetworkParams.load(tmp_path / 'p.json').v, params.v)
    with pytest.raises(ShapeError):
        NetworkParams(np.zeros((2, 3)), [0, 1], [1, 1, 1])


def test_capacity_verdicts():
    verdict = capacity_verdict(6, 10, 4, 'tanh')
    assert verdict.surjective_predicted and verdict.reason == SATISFIED
    assert capacity_verdict(4, 3, 3, 'tanh').reason == 'thm61_satisfied'

    verdict = capacity_verdict(2, 9, 2, 'tanh')
    assert not verdict and verdict.reason == SARD_PARAM_COUNT
    assert verdict.bound_values['param_count'] == 8

    assert capacity_verdict(5, 10, 4, 'tanh').reason == M_ODD
    assert capacity_verdict(3, 11, 2, 'cubic').reason == SARD_POLY_RANK


def test_capacity_degree_condition_large_example():
    verdict = capacity_verdict(1000, 100000, 100, 'cubic')
    assert polynomial_rank_bound(100, 'cubic') == 171700
    assert verdict.conditions['degree_condition']
    assert verdict.bound_values['poly_rank_bound'] == 171700
    assert verdict.reason == WIDTH_INSUFFICIENT


def test_capacity_multioutput():
    assert capacity_verdict_multioutput(12, 10, 4, 2, 'tanh').reason == SATISFIED
    assert capacity_verdict_multioutput(7, 10, 4, 2, 'tanh').reason == NOT_DIVISIBLE
    assert capacity_verdict_multioutput(2, 10, 2, 3, 'tanh').reason == SARD_PARAM_COUNT


def test_rank_at_initialization(rng):
    X = rng.standard_normal((4, 10))
    rank, rho, W0 = rank_at_initialization(X, 3, 'tanh', seed=0)
    assert rank == 10
    assert rho >= 1.0 and W0.shape == (4, 3)
    assert np.max(np.abs(W0.T @ X)) <= 0.5 * math.pi / 2 + 1e-12


def test_rank_at_initialization_over_seeds(rng):
    X = rng.standard_normal((4, 10))
    full = sum(rank_at_initialization(X, 5, 'tanh', seed=seed)[0] == 10
               for seed in range(20))
    assert full >= 19


def test_rank_at_initialization_duplicate_columns(rng):
    X = rng.standard_normal((3, 6))
    X[:, 5] = X[:, 2]
    for seed in range(5):
        rank, _, _ = rank_at_initialization(X, 6, 'tanh', seed=seed)
        assert rank <= 5


def test_lower_bound_parameter_count(rng):
    # m(d+2) = 8 < n = 9
    for _ in range(100):
        params = random_params(rng, 2, 2)
        X = rng.standard_normal((2, 9))
        assert rank_float(jacobian_full(params, X, 'tanh')).rank < 9


def test_lower_bound_cubic_polynomial_rank(rng):
    # Degree <= 3 polynomials in 2 variables span 10 < n = 11. Integer inputs
    # keep the cubic Jacobian integral, so its rank is computed exactly.
    for _ in range(20):
        params = NetworkParams(rng.integers(-2, 2, size=(2, 3), endpoint=True),
                               rng.integers(-2, 2, size=3, endpoint=True),
                               rng.integers(-2, 2, size=3, endpoint=True))
        X = rng.integers(-2, 2, size=(2, 11), endpoint=True).astype(np.float64)
        J = jacobian_full(params, X, 'cubic')
        entries = np.rint(J).astype(np.int64)
        np.testing.assert_array_equal(entries, J)
        assert rank_exact(Matrix(entries.tolist())).rank <= 10


def test_doubled_network_matches_assembly(rng):
    W = rng.standard_normal((3, 2))
    W0 = rng.standard_normal((3, 2))
    X = rng.standard_normal((3, 5))
    v0 = np.ones(2)
    params = assemble_doubled(W, W0, 0.0, v0, 0.25)
    np.testing.assert_allclose(
        forward(params, X, 'tanh'), doubled_output(W, W0, X, 'tanh', 0.0, v0, 0.25))
    assert params.m == 4


def test_pad_odd_width():
    params = NetworkParams(np.ones((2, 3)), [0, 0, 0], [1, 1, 1])
    padded, changed = pad_odd_width(params)
    assert changed and padded.m == 4 and padded.v[-1] == 0
    same, changed = pad_odd_width(padded)
    assert not changed and same is padded


def _desk_data(seed):
    rng = np.random.default_rng(seed)
    return rng.standard_normal((4, 10)), rng.standard_normal(10)


def test_interpolate_desk_scale():
    X, y = _desk_data(0)
    result = interpolate(X, y, 6, 'tanh', seed=0)
    assert result.residual < 1e-6
    assert result.params.m == 6
    assert np.max(np.abs(forward(result.params, X, 'tanh') - y)) == result.residual
    assert result.summary()['iterations'] == len(result.trace)


def test_interpolate_preconditions():
    X, y = _desk_data(1)
    with pytest.raises(PreconditionError):
        interpolate(X, y, 7, 'tanh')
    with pytest.raises(CapacityRefusedError) as err:
        interpolate(np.ones((2, 9)), np.ones(9), 2, 'tanh')
    assert err.value.verdict.reason == SARD_PARAM_COUNT
    with pytest.raises(ShapeError):
        interpolate(X, y[:5], 6, 'tanh')


def test_interpolate_pads_odd_width():
    X, y = _desk_data(2)
    result = interpolate(X, y, 7, 'tanh', seed=0, pad_odd=True)
    assert result.padded and result.params.m == 7
    assert result.residual < 1e-6


def test_interpolate_multioutput_modes(rng):
    X = rng.standard_normal((4, 5))
    Y = rng.standard_normal((5, 2))
    split = interpolate_multioutput(X, Y, 8, 'tanh', seed=0)
    assert split.params.q == 2 and split.residual < 1e-6
    np.testing.assert_allclose(forward(split.params, X, 'tanh'), Y, atol=1e-6)

    X3 = rng.standard_normal((3, 6))
    Y3 = rng.standard_normal((6, 2))
    solved = interpolate_multioutput(X3, Y3, 8, 'tanh', mode='solve_V', seed=0)
    assert solved.residual < 1e-6
    with pytest.raises(PreconditionError):
        interpolate_multioutput(X3, Y3, 4, 'tanh', mode='solve_V')


def test_interpolate_single_point():
    X = np.array([[0.7]])
    y = np.array([0.3])
    result = interpolate(X, y, 2, 'tanh', seed=0)
    assert result.residual < 1e-10
    assert forward(result.params, X, 'tanh')[0] == pytest.approx(0.3, abs=1e-10)


def test_solve_V_with_square_features(rng):
    X = rng.standard_normal((3, 6))
    Y = rng.standard_normal((6, 2))
    solved = interpolate_multioutput(X, Y, 6, 'tanh', mode='solve_V', seed=0)
    assert solved.params.m == 6
    assert solved.residual < 1e-8


def test_solver_config():
    cfg = SolverConfig(max_restarts=2)
    assert cfg.eps_schedule()[:3] == [1.0, 0.5, 0.25]
    assert cfg.to_dict()['max_restarts'] == 2
    with pytest.raises(ValueError):
        SolverConfig(step_size=1)


@pytest.mark.slow
def test_interpolate_over_master_seeds():
    successes = 0
    for seed in range(10):
        X, y = _desk_data(100 + seed)
        try:
            result = interpolate(X, y, 6, 'tanh', seed=seed)
        except ConvergenceError:
            continue
        if result.residual < 1e-6:
            successes += 1
    assert successes >= 9
