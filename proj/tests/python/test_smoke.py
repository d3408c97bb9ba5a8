import math

import pytest

import ncdiamond as nd


def params(T=3, g=(4, 1, 2, 3), snr=None):
    return nd.NetworkParams(T, *g, snr=snr)


def test_classify_worked_examples():
    r = nd.classify(params())
    assert r.kind == nd.RegimeKind.NONTRIVIAL
    assert not r.swapped

    r = nd.classify(params(g=(2, 1, 3, 0)))
    assert r.kind == nd.RegimeKind.RELAY_SELECT_SR_LIMITED
    assert r.selected_relay == 1


def test_gdof_values():
    assert nd.gdof_simple_bound(params()) == pytest.approx(2.0)
    value, relay = nd.gdof_relay_selection(params())
    assert value == pytest.approx(4.0 / 3.0)
    assert relay == 1
    res = nd.gdof_network(params())
    assert res.gdof == pytest.approx(14.0 / 9.0)
    assert res.subregime == "1"


def test_optimizer_routes_agree():
    closed = nd.solve_reduced_closed(params())
    grid = nd.solve_reduced_grid(params(), 1001)
    assert closed.value == pytest.approx(14.0 / 3.0)
    assert abs(closed.value - grid.value) < 1e-2
    assert closed.p_lambda == pytest.approx(1.0 / 3.0)


def test_special_function_anchor():
    assert nd.exp_integral_e1(1.0) == pytest.approx(0.219384, abs=1e-6)
    with pytest.raises(ValueError):
        nd.exp_integral_e1(-1.0)


def test_sampler_determinism():
    a = nd.sample_cgauss(2.0, 4, 7)
    b = nd.sample_cgauss(2.0, 4, 7)
    assert a == b
    assert nd.sample_cgauss(0.0, 3, 1) == [0j, 0j, 0j]


def test_rate_report_and_sweep():
    rep = nd.tsqmf_rate_bound(params(snr=1e6), 1.0 / 3.0, 0.0)
    L = math.log2(1e6)
    assert 3 * rep.rate_per_symbol == pytest.approx(14.0 / 3.0 * L)

    sweep = nd.sweep_slope(params(), [60, 70, 80, 90, 100, 110, 120], "tsqmf")
    assert sweep["rel_error"] < 0.02


def test_mass_point_distribution():
    dist = nd.MassPointDistribution([nd.MassPoint(3.0, 0.0, 0.0, 1.0 / 3.0),
                                     nd.MassPoint(0.0, 1.5, 1.5, 2.0 / 3.0)])
    v = nd.cutset_objective(dist, params(snr=1e6))
    assert v / math.log2(1e6) == pytest.approx(14.0 / 3.0, rel=0.05)


def test_lemma_report():
    mc = nd.McConfig(samples=100_000, seed=3)
    rep = nd.mc_jensen_exponential(1.0, 1.0, 1.0, mc)
    assert rep.pass_
    assert rep.bound_lo <= rep.lhs_estimate + 3 * rep.std_error
