"""Working-precision configuration and shared exact-arithmetic helpers.

All real arithmetic in this package runs on mpmath's arbitrary-precision
floats.  A PrecisionConfig fixes the number of significant decimal digits a
result is good for; internally every computation carries GUARD_DIGITS extra
digits so that the final working_digits are trustworthy.  Given the same
config and inputs, results are bit-identical across runs.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

GUARD_DIGITS = 15

ENV_DIGITS = "ZETA_DIGITS"


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class ConvergenceError(ArithmeticError):
    """A series or cross-route check failed to converge."""


@dataclass(frozen=True)
class PrecisionConfig:
    """Precision and algorithm-switch settings.

    working_digits: significant decimal digits results are accurate to.
    asymptotic_switch: argument size above which digamma-family evaluation
        uses asymptotic series instead of upward recurrence.
    em_terms: maximum number of Bernoulli correction terms in
        Euler-Maclaurin summation.
    """

    working_digits: int = 40
    asymptotic_switch: float = 20.0
    em_terms: int = 8

    def __post_init__(self) -> None:
        if self.working_digits < 25:
            raise ValueError("working_digits must be >= 25")
        if self.asymptotic_switch < 10:
            raise ValueError("asymptotic_switch must be >= 10")
        if self.em_terms < 1:
            raise ValueError("em_terms must be >= 1")

    @property
    def dps(self) -> int:
        """Internal decimal precision (working digits plus guard digits)."""
        return self.working_digits + GUARD_DIGITS

    def workdps(self):
        """Context manager running mpmath at this config's internal dps."""
        return mp.workdps(self.dps)

    @property
    def eps(self) -> mpf:
        """10**(-working_digits), the nominal resolution of results."""
        with self.workdps():
            return mpf(10) ** (-self.working_digits)

    def min_tolerance(self) -> mpf:
        """Tightest tolerance honoured: 10**-(working_digits - 8)."""
        with self.workdps():
            return mpf(10) ** (-(self.working_digits - 8))


_default_lock = threading.Lock()
_default_config: PrecisionConfig | None = None


def default_config() -> PrecisionConfig:
    """Process-wide default config; honours the ZETA_DIGITS env override."""
    global _default_config
    with _default_lock:
        if _default_config is None:
            digits = os.environ.get(ENV_DIGITS)
            if digits is not None:
                _default_config = PrecisionConfig(working_digits=int(digits))
            else:
                _default_config = PrecisionConfig()
        return _default_config


def set_default_config(cfg: PrecisionConfig) -> None:
    global _default_config
    with _default_lock:
        _default_config = cfg


def resolve(cfg: PrecisionConfig | None) -> PrecisionConfig:
    return cfg if cfg is not None else default_config()


def to_mpf(x, cfg: PrecisionConfig | None = None) -> mpf:
    """Convert int/str/Fraction/mpf to mpf at the config's precision.

    Strings and Fractions convert exactly-then-round; floats are accepted
    but discouraged for non-dyadic values.
    """
    cfg = resolve(cfg)
    with cfg.workdps():
        if isinstance(x, Fraction):
            return mpf(x.numerator) / x.denominator
        return mpf(x)


_bernoulli_lock = threading.Lock()
_bernoulli_even: list[Fraction] = [Fraction(1)]  # B_0


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (convention B_1 = -1/2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    k = n // 2
    with _bernoulli_lock:
        _extend_bernoulli(k)
        return _bernoulli_even[k]


def _extend_bernoulli(k: int) -> None:
    # Binomial recurrence over even indices only; odd B_n vanish for n >= 3
    # and the lone B_1 contribution is folded in explicitly.
    from math import comb

    while len(_bernoulli_even) <= k:
        m = len(_bernoulli_even)
        n = 2 * m
        s = Fraction(0)
        for j in range(m):
            s += comb(n + 1, 2 * j) * _bernoulli_even[j]
        s += Fraction(n + 1) * Fraction(-1, 2)
        _bernoulli_even.append(-s / (n + 1))
