"""Config validation, exact Bernoulli numbers, conversion helpers."""

from fractions import Fraction

import pytest
from mpmath import mp, mpf

from zetabench.precision import (
    GUARD_DIGITS,
    PrecisionConfig,
    bernoulli,
    default_config,
    set_default_config,
    to_mpf,
)


def test_config_defaults():
    cfg = PrecisionConfig()
    assert cfg.working_digits == 40
    assert cfg.asymptotic_switch == 20.0
    assert cfg.em_terms == 8
    assert cfg.dps == 40 + GUARD_DIGITS


def test_config_invariants():
    with pytest.raises(ValueError):
        PrecisionConfig(working_digits=24)
    with pytest.raises(ValueError):
        PrecisionConfig(asymptotic_switch=9)
    with pytest.raises(ValueError):
        PrecisionConfig(em_terms=0)


def test_config_is_hashable_and_frozen():
    cfg = PrecisionConfig()
    assert hash(cfg) == hash(PrecisionConfig())
    with pytest.raises(Exception):
        cfg.working_digits = 50


def test_bernoulli_exact_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)
    for n in (3, 5, 7, 99):
        assert bernoulli(n) == 0
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_to_mpf_fraction_is_correctly_rounded():
    cfg = PrecisionConfig()
    with cfg.workdps():
        x = to_mpf(Fraction(1, 3), cfg)
        assert abs(x - mpf(1) / 3) == 0


def test_default_config_round_trip():
    original = default_config()
    try:
        other = PrecisionConfig(working_digits=50)
        set_default_config(other)
        assert default_config() is other
    finally:
        set_default_config(original)


def test_min_tolerance_scaling():
    cfg = PrecisionConfig()
    with cfg.workdps():
        assert cfg.min_tolerance() == mpf(10) ** (-32)
