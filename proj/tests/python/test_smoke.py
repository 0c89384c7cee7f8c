import math

import pytest

import xrisk


@pytest.fixture(scope="module")
def c0():
    return xrisk.calibrate_c0()


def test_p_doom():
    assert xrisk.p_doom(0.9, 0.8, 0.3, 0.3) == pytest.approx(0.3672, abs=1e-15)
    leaves = xrisk.leaf_distribution(0.5, 0.5, 0.5, 0.5)
    assert sum(leaves.values()) == pytest.approx(1.0, abs=1e-12)


def test_calibration(c0):
    assert 10.74 <= math.log(c0) <= 10.78


def test_extinction_time(c0):
    spec = xrisk.ScenarioSpec(c0=c0, g_ai=0.05, rho=0.05, theta=1.0)
    assert xrisk.solve_extinction_time(spec) == pytest.approx(62.63, rel=2e-3)


def test_sentinels_are_strings(c0):
    spec = xrisk.ScenarioSpec(c0=c0, g_ai=0.3, rho=0.03, theta=1.0)
    assert xrisk.solve_p4_delayed(spec, p3=3e-5, T=50.0) == "TAI_PREFERRED"


def test_equivalent_variation(c0):
    spec = xrisk.ScenarioSpec(c0=c0, g_ai=0.05, rho=0.05, theta=1.0)
    ev = xrisk.equivalent_variation(spec, "B", p3=0.1)
    assert ev["ev"] == pytest.approx(0.308575, rel=5e-3)
    with pytest.raises(xrisk.DomainError):
        xrisk.equivalent_variation(xrisk.ScenarioSpec(c0=c0, theta=2.0), "B", p3=0.1)


def test_table_csv():
    text = xrisk.emit_table("t2", "output_format=csv")
    lines = text.splitlines()
    assert len(lines) == 6
    assert lines[1].startswith("0.05,0.454445,")


def test_config_error():
    with pytest.raises(xrisk.ConfigError):
        xrisk.emit_table("t1", "c0=0.5")


def test_growth():
    run = xrisk.simulate_growth(full_automation=True, saving_rate=0.3, delta=0.05)
    assert run["growth_rate"] == pytest.approx(0.25, abs=1e-3)
    assert len(run["t"]) == len(run["Y"])
