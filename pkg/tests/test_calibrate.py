import numpy as np
import pytest

from hestonfit.calibrate import (CalibrationConfig, MarketQuote, OptVector,
                                 acceptance_check, calibrate_global,
                                 calibrate_local, objective,
                                 optvector_from_params, params_from_optvector)
from hestonfit.charfn import HestonParams
from hestonfit.data import builtin_dataset
from hestonfit.errors import DegenerateParams
from hestonfit.pricer import OptionSpec, price_call_heston
from hestonfit.quadrature import QuadratureConfig

# published per-option |mid - model| for D1 at the least-squares solution
D1_DIFFS_LOCAL = [0.886, 0.728, 0.018, 0.185, 0.460, 0.059, 0.620, 0.519,
                  0.157, 0.188, 0.389, 0.420, 0.049, 0.349, 0.026]


def synthetic_quotes(params, quad, base="D1"):
    """Exact model prices on a dataset's contract grid, zero spreads."""
    quotes = []
    for q_ in builtin_dataset(base):
        price = price_call_heston(
            params, OptionSpec(q_.s0, q_.k, q_.r, q_.t), quad).price
        quotes.append(MarketQuote(s0=q_.s0, t=q_.t, k=q_.k, r=q_.r,
                                  mid=price, bid=price, ask=price))
    return quotes


def test_market_quote_validation():
    good = dict(s0=100.0, t=0.5, k=100.0, r=0.01, mid=5.0, bid=4.8, ask=5.2)
    MarketQuote(**good)
    with pytest.raises(ValueError):
        MarketQuote(**good | {"t": 0.0})
    with pytest.raises(ValueError):
        MarketQuote(**good | {"bid": 5.1})      # bid above mid
    with pytest.raises(ValueError):
        MarketQuote(**good | {"ask": 4.9})      # ask below mid
    with pytest.raises(ValueError):
        MarketQuote(**good | {"bid": -1.0})


def test_reparameterization_from_default_start():
    params = params_from_optvector(OptVector(0.5, 0.5, 1.0, -0.5, 1.0))
    assert params.a == 2.0
    assert params.feller_slack() == 1.0


def test_reparameterization_inverse_map(d1_local_params):
    x = optvector_from_params(d1_local_params)
    assert x.feller_slack == pytest.approx(
        2 * 0.7331 * 0.3407 - 0.7068**2, rel=1e-15)
    back = params_from_optvector(x)
    assert back.a == pytest.approx(0.7331, rel=1e-12)


def test_reparameterization_degenerate_inputs():
    with pytest.raises(DegenerateParams):
        params_from_optvector(OptVector(0.1, 0.0, 1.0, 0.0, 1.0))
    # slack so negative the recovered speed is nonpositive
    with pytest.raises(DegenerateParams):
        params_from_optvector(OptVector(0.1, 0.5, 0.5, 0.0, -0.3))


def test_feller_round_trip_random():
    rng = np.random.default_rng(99)
    for _ in range(100):
        x = OptVector(rng.uniform(1e-4, 1.0), rng.uniform(1e-4, 1.0),
                      rng.uniform(1e-4, 5.0), rng.uniform(-1.0, 1.0),
                      rng.uniform(0.0, 20.0))
        slack = params_from_optvector(x).feller_slack()
        assert slack == pytest.approx(x.feller_slack, rel=1e-12, abs=1e-12)
        if x.feller_slack > 0:
            assert slack > 0


def test_objective_zero_for_exact_quotes(quad, d1_local_params):
    quotes = synthetic_quotes(d1_local_params, quad)[:5]
    mse, residuals = objective(d1_local_params, quotes, quad)
    assert mse <= 1e-12
    assert max(abs(r) for r in residuals) <= 1e-9


def test_objective_reproduces_published_differences(quad, d1_local_params):
    quotes = builtin_dataset("D1")
    mse, residuals = objective(d1_local_params, quotes, quad)
    for got, want in zip(residuals, D1_DIFFS_LOCAL):
        assert abs(got) == pytest.approx(want, abs=5e-3)
    assert np.mean(np.abs(residuals)) == pytest.approx(0.3369, abs=5e-3)


def test_objective_at_global_solution(quad, d1_global_params):
    _, residuals = objective(d1_global_params, builtin_dataset("D1"), quad)
    assert np.mean(np.abs(residuals)) == pytest.approx(0.3436, abs=5e-3)


def test_acceptance_check_boundary():
    quote = MarketQuote(s0=100.0, t=1.0, k=100.0, r=0.0,
                        mid=5.0, bid=5.0, ask=5.0)
    from hestonfit.calibrate import QuoteFit
    rows = [QuoteFit(quote=quote, model_price=5.0, abs_difference=0.0,
                     within_spread=True)]
    assert acceptance_check(rows)                 # 0 <= 0
    assert not acceptance_check([])


def test_acceptance_widening_spreads_never_hurts():
    from hestonfit.calibrate import QuoteFit
    rng = np.random.default_rng(17)
    for _ in range(50):
        rows = []
        wider = []
        for _ in range(rng.integers(3, 12)):
            mid = rng.uniform(1.0, 50.0)
            half = mid * rng.uniform(0.01, 0.4)
            model = mid + rng.normal(0.0, 1.0)
            quote = MarketQuote(s0=100.0, t=1.0, k=100.0, r=0.0, mid=mid,
                                bid=mid - half, ask=mid + half)
            stretched = MarketQuote(s0=100.0, t=1.0, k=100.0, r=0.0, mid=mid,
                                    bid=(mid - half) * 0.5,
                                    ask=mid + half + rng.uniform(0.0, 3.0))
            rows.append(QuoteFit(quote, model, abs(mid - model),
                                 quote.bid <= model <= quote.ask))
            wider.append(QuoteFit(stretched, model, abs(mid - model),
                                  stretched.bid <= model <= stretched.ask))
        if acceptance_check(rows):
            assert acceptance_check(wider)


def test_config_validation():
    with pytest.raises(ValueError):
        CalibrationConfig(method="newton")
    with pytest.raises(ValueError):
        CalibrationConfig(method="global")       # seed missing
    with pytest.raises(ValueError):
        CalibrationConfig(x0=OptVector(2.0, 0.5, 1.0, 0.0, 1.0))  # v0 > ub
    assert CalibrationConfig(method="local").budget() == 400
    assert CalibrationConfig(method="global", seed=1).budget() == 20000


def test_method_mismatch_rejected(quad):
    quotes = builtin_dataset("D1")[:3]
    with pytest.raises(ValueError):
        calibrate_local(quotes, CalibrationConfig(method="global", seed=1), quad)
    with pytest.raises(ValueError):
        calibrate_global(quotes, CalibrationConfig(method="local"), quad)


def test_local_determinism(quad):
    quotes = builtin_dataset("D1")
    cfg = CalibrationConfig(method="local", max_iterations=25)
    first = calibrate_local(quotes, cfg, quad)
    second = calibrate_local(quotes, cfg, quad)
    assert first.params == second.params
    assert first.objective == second.objective
    assert first.evaluations == second.evaluations
    assert first.per_option == second.per_option


def test_local_unconverged_flagged(quad):
    quotes = builtin_dataset("D1")
    res = calibrate_local(quotes, CalibrationConfig(method="local",
                                                    max_iterations=3), quad)
    assert not res.converged
    assert "not converged" in res.message


def test_global_determinism_and_progress(quad):
    quotes = builtin_dataset("D1")
    cfg = CalibrationConfig(method="global", seed=123, max_iterations=60)
    first = calibrate_global(quotes, cfg, quad)
    second = calibrate_global(quotes, cfg, quad)
    assert first.params == second.params
    assert first.objective == second.objective
    assert first.evaluations == second.evaluations

    x0_params = params_from_optvector(cfg.x0)
    start_mse, _ = objective(x0_params, quotes, quad)
    assert first.objective <= start_mse

    other = calibrate_global(quotes,
                             CalibrationConfig(method="global", seed=321,
                                               max_iterations=60), quad)
    assert other.converged  # different seed still produces a usable result


def test_reported_objective_is_recomputable(quad):
    quotes = builtin_dataset("D1")
    res = calibrate_local(quotes, CalibrationConfig(method="local",
                                                    max_iterations=25), quad)
    again, _ = objective(res.params, quotes, quad)
    assert res.objective == pytest.approx(again, abs=1e-12)


def test_objective_names_the_failing_quote(d1_local_params):
    from hestonfit.errors import QuadratureFailure
    quotes = builtin_dataset("D1")
    starved = QuadratureConfig(max_subdivisions=1)
    with pytest.raises(QuadratureFailure, match="quote 1 "):
        objective(d1_local_params, quotes, starved)


def test_synthetic_round_trip_small(quad):
    truth = HestonParams(v0=0.09, vbar=0.3, a=1.0, eta=0.7, rho=-0.3)
    quotes = synthetic_quotes(truth, quad)[:6]
    res = calibrate_local(quotes, CalibrationConfig(method="local"), quad)
    assert res.converged
    assert res.objective <= 1e-8
    assert max(r.abs_difference for r in res.per_option) <= 1e-3
