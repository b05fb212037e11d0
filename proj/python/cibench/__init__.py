"""Production-function fits and investment benchmarks for research computing."""

from ._core import (  # noqa: F401
    Basis,
    BenchmarkCoefficients,
    CibenchError,
    adjusted_r2,
    estimate_growth,
    fit_ols,
    fit_suite,
    kendall_tau,
    lmg,
    load_panel,
    preset,
    project_capacity,
    significance_stars,
    size_investment,
    t_pvalue,
)

__version__ = "0.1.0"
