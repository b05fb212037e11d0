import math
import os
from pathlib import Path

import pytest

import cibench

FIXTURES = Path(os.environ.get("CIBENCH_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_fit_ols_recovers_line():
    x = [[float(i), float(i * i % 7)] for i in range(12)]
    y = [3.0 + 2.0 * a + 0.5 * b for a, b in x]
    y[3] += 0.1
    fit = cibench.fit_ols(x, y, ["a", "b"], "y")
    assert fit.n_obs == 12
    assert fit.coefficients[0].estimate == pytest.approx(2.0, abs=0.05)
    assert 0.99 < fit.r_squared <= 1.0


def test_fit_ols_errors_raise_value_error():
    with pytest.raises(ValueError):
        cibench.fit_ols([[1.0], [2.0]], [1.0, 2.0], ["a"], "y")


def test_kendall_and_pvalue():
    assert cibench.kendall_tau([1, 2, 3, 4], [2, 4, 6, 8]) == 1.0
    assert cibench.t_pvalue(2.0, 10.0) == pytest.approx(0.073388, abs=1e-6)
    assert cibench.significance_stars(0.0005) == "***"


def test_preset_sizing():
    coeffs = cibench.preset("survey-2025", "herd")
    result = cibench.size_investment(coeffs, 1000.0)
    assert result.modeled_tf == pytest.approx(11470.0)
    assert round(result.modeled_salaries, 2) == 2.94
    assert round(result.modeled_budget, 2) == 8.66


def test_growth_and_projection():
    assert cibench.estimate_growth([100.0, 141.0, 198.81]).annual_rate == pytest.approx(0.41, abs=1e-12)
    curve = cibench.project_capacity(100.0, 2025, 0.5, 2)
    assert curve.points[-1] == (2027, pytest.approx(225.0))


def test_fixture_panel_suite():
    panel = cibench.load_panel(str(FIXTURES / "fixture_panel.csv"), False)
    assert len(panel.institutions) == 5
    suite = cibench.fit_suite(panel, "combined")
    assert len(suite.models) == 4
    for model in suite.models:
        assert math.isclose(sum(model.importance.shares), model.fit.r_squared, rel_tol=1e-9)
