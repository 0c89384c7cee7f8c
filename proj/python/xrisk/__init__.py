"""Welfare and indifference calculus for AI existential risk."""

from ._core import (
    ConfigError,
    ConvergenceError,
    DomainError,
    ScenarioSpec,
    calibrate_c0,
    emit_table,
    equivalent_variation,
    expected_lifespan_mounting,
    leaf_distribution,
    p_doom,
    simulate_growth,
    solve_epsilon_mounting,
    solve_extinction_time,
    solve_p3_delayed,
    solve_p3_immediate,
    solve_p4_delayed,
    solve_T_delayed,
    welfare_cornucopia,
    welfare_mounting,
    welfare_no_takeover,
    welfare_truncated,
)

__all__ = [name for name in dir() if not name.startswith("_")]
