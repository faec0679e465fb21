"""Digamma-family kernels and the named auxiliary integral functions.

The kernels are differences like log u - psi(1+u) + 1/(2(1+u)) whose direct
evaluation cancels catastrophically once u is large.  Above the asymptotic
switch each kernel is therefore computed from the Bernoulli series of the
*difference* itself (leading terms -1/(2u(1+u)), 1/(2u^2), ...), never by
subtracting two large logarithms.  Quadrature then samples these kernels
safely at the astronomically large arguments the reciprocal tail map
produces.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from mpmath import mp, mpf

from .precision import DomainError, PrecisionConfig, bernoulli, resolve, to_mpf
from . import quadrature, specfun
from .quadrature import Domain
from .specfun import _asym_target, _bernoulli_series, digamma, polygamma

__all__ = [
    "kernel_eval",
    "kernel_a",
    "kernel_b",
    "kernel_db",
    "kernel_dbk",
    "psi_reg",
    "psi1_reg",
    "psi1_reg2",
    "bose_reg",
    "log_ratio_reg",
    "named_function_eval",
    "k_func",
    "j_func",
    "h_func",
    "i_func",
    "i_func_closed",
]

KERNEL_IDS = ("A", "B", "DB")
NAMED_IDS = ("J", "K", "H", "I")


def _check_positive(u, cfg) -> mpf:
    u = to_mpf(u, cfg)
    if not u > 0:
        raise DomainError("kernel argument must be positive")
    return u


def psi_reg(x, cfg: PrecisionConfig | None = None) -> mpf:
    """psi(x) - log x + 1/(2x); decays like -1/(12 x^2)."""
    cfg = resolve(cfg)
    with cfg.workdps():
        x = _check_positive(x, cfg)
        if x < _asym_target(cfg):
            return digamma(x, cfg) - mp.log(x) + 1 / (2 * x)

        def terms(v):
            v2 = v * v
            p = mpf(1)
            k = 1
            while True:
                p *= v2
                yield -to_mpf(bernoulli(2 * k), cfg) / (2 * k * p)
                k += 1

        return _bernoulli_series(x, terms, cfg.dps)


def psi1_reg(x, cfg: PrecisionConfig | None = None) -> mpf:
    """psi'(x) - 1/x; decays like 1/(2 x^2)."""
    cfg = resolve(cfg)
    with cfg.workdps():
        x = _check_positive(x, cfg)
        if x < _asym_target(cfg, 1):
            return polygamma(1, x, cfg) - 1 / x
        return 1 / (2 * x * x) + _psi1_tail(x, cfg)


def psi1_reg2(x, cfg: PrecisionConfig | None = None) -> mpf:
    """psi'(x) - 1/x - 1/(2x^2); decays like 1/(6 x^3)."""
    cfg = resolve(cfg)
    with cfg.workdps():
        x = _check_positive(x, cfg)
        if x < _asym_target(cfg, 1):
            return polygamma(1, x, cfg) - 1 / x - 1 / (2 * x * x)
        return _psi1_tail(x, cfg)


def _psi1_tail(x: mpf, cfg: PrecisionConfig) -> mpf:
    # sum_k B_2k x^-(2k+1)
    def terms(v):
        v2 = v * v
        p = 1 / v
        k = 1
        while True:
            p /= v2
            yield to_mpf(bernoulli(2 * k), cfg) * p
            k += 1

    return _bernoulli_series(x, terms, cfg.dps)


def kernel_a(u, cfg: PrecisionConfig | None = None) -> mpf:
    """log u - psi(1+u) + 1/(2(1+u)); asymptotically -5/(12u^2) + O(u^-3)."""
    cfg = resolve(cfg)
    with cfg.workdps():
        u = _check_positive(u, cfg)
        if u < _asym_target(cfg):
            return mp.log(u) - digamma(1 + u, cfg) + 1 / (2 * (1 + u))
        return -1 / (2 * u * (1 + u)) - psi_reg(u, cfg)


def kernel_b(u, cfg: PrecisionConfig | None = None) -> mpf:
    """psi'(1+u) - 1/(1+u); asymptotically 1/(2u^2) + O(u^-3)."""
    cfg = resolve(cfg)
    with cfg.workdps():
        u = _check_positive(u, cfg)
        return psi1_reg(1 + u, cfg)


def kernel_db(u, cfg: PrecisionConfig | None = None) -> mpf:
    """log(1+u) - psi(1+u); asymptotically 1/(2u) + O(u^-2)."""
    cfg = resolve(cfg)
    with cfg.workdps():
        u = _check_positive(u, cfg)
        if u < _asym_target(cfg):
            return mp.log(1 + u) - digamma(1 + u, cfg)
        return mp.log1p(1 / u) - 1 / (2 * u) - psi_reg(u, cfg)


def kernel_dbk(u, cfg: PrecisionConfig | None = None) -> mpf:
    """log u - psi(1+u); asymptotically -1/(2u) + O(u^-2)."""
    cfg = resolve(cfg)
    with cfg.workdps():
        u = _check_positive(u, cfg)
        if u < _asym_target(cfg):
            return mp.log(u) - digamma(1 + u, cfg)
        return -1 / (2 * u) - psi_reg(u, cfg)


_KERNELS = {"A": kernel_a, "B": kernel_b, "DB": kernel_db}


def kernel_eval(kid: str, u, cfg: PrecisionConfig | None = None) -> mpf:
    try:
        f = _KERNELS[kid]
    except KeyError:
        raise KeyError(f"unknown kernel id {kid!r}; expected one of {KERNEL_IDS}")
    return f(u, cfg)


def bose_reg(y, cfg: PrecisionConfig | None = None) -> mpf:
    """1/(e^y - 1) - 1/y, stable for small y via its Bernoulli series."""
    cfg = resolve(cfg)
    with cfg.workdps():
        y = to_mpf(y, cfg)
        if y >= 1:
            return 1 / mp.expm1(y) - 1 / y
        # -1/2 + sum_k B_2k y^(2k-1)/(2k)!, convergent for |y| < 2 pi
        thr = mpf(10) ** (-(cfg.dps + 5))
        acc = mpf(-1) / 2
        p = 1 / y
        y2 = y * y
        k = 1
        while True:
            p *= y2
            term = to_mpf(Fraction(bernoulli(2 * k), factorial(2 * k)), cfg) * p
            acc += term
            if abs(term) < thr:
                return acc
            k += 1


def log_ratio_reg(u, cfg: PrecisionConfig | None = None) -> mpf:
    """log u - log(1+u) + 1/(1+u); asymptotically -1/(2u^2) + O(u^-3).

    For large u the direct form cancels to second order, so it is summed
    as sum_{k>=2} (-1)^(k-1) (k-1)/k u^-k instead.
    """
    cfg = resolve(cfg)
    with cfg.workdps():
        u = _check_positive(u, cfg)
        if u < 8:
            return mp.log(u) - mp.log(1 + u) + 1 / (1 + u)
        thr = mpf(10) ** (-(cfg.dps + 5))
        x = 1 / u
        acc = mpf(0)
        p = x
        k = 2
        while True:
            p *= -x
            term = p * (k - 1) / k
            acc += term
            if abs(term) < thr:
                return acc
            k += 1


def _default_tol(cfg: PrecisionConfig) -> mpf:
    return mpf(10) ** (-(cfg.working_digits - 10))


def k_func(u, tol=None, cfg: PrecisionConfig | None = None) -> mpf:
    """K(u) = int_0^oo arctan(x/u) / (e^(2 pi x) - 1) dx."""
    return specfun.binet_tail_integral(u, tol, cfg)


def j_func(u, tol=None, cfg: PrecisionConfig | None = None) -> mpf:
    """J(u) = int_0^oo log(u^2+x^2) arctan(x/u) / (e^(2 pi x) - 1) dx."""
    cfg = resolve(cfg)
    with cfg.workdps():
        u = _check_positive(u, cfg)
        tol = _default_tol(cfg) if tol is None else mpf(tol)
        u2 = u * u
        two_pi = 2 * mp.pi

        def f(x: mpf) -> mpf:
            return mp.log(u2 + x * x) * mp.atan(x / u) / mp.expm1(two_pi * x)

        return quadrature.integrate(f, Domain.semi_infinite(decay="exponential"),
                                    tol, cfg).require_converged("J integral").value


def h_func(u, tol=None, cfg: PrecisionConfig | None = None) -> mpf:
    """H(u): like J(u) but with denominator e^(pi x) + 1."""
    cfg = resolve(cfg)
    with cfg.workdps():
        u = _check_positive(u, cfg)
        tol = _default_tol(cfg) if tol is None else mpf(tol)
        u2 = u * u

        def f(x: mpf) -> mpf:
            return mp.log(u2 + x * x) * mp.atan(x / u) / (mp.exp(mp.pi * x) + 1)

        return quadrature.integrate(f, Domain.semi_infinite(decay="exponential"),
                                    tol, cfg).require_converged("H integral").value


def i_func(u, tol=None, cfg: PrecisionConfig | None = None) -> mpf:
    """I(u) = int_0^oo [psi(t+u) - log(t+u) + 1/(2(t+u))] dt by quadrature."""
    cfg = resolve(cfg)
    with cfg.workdps():
        u = _check_positive(u, cfg)
        tol = _default_tol(cfg) if tol is None else mpf(tol)

        def f(t: mpf) -> mpf:
            return psi_reg(t + u, cfg)

        return quadrature.integrate(f, Domain.semi_infinite(decay="algebraic", decay_p=2),
                                    tol, cfg).require_converged("I integral").value


def i_func_closed(u, tol=None, cfg: PrecisionConfig | None = None) -> mpf:
    """Closed form of I(u): (u - 1/2) log u - u + log(2 pi)/2 - log Gamma(u).

    log Gamma comes from the exact factorial forms when 2u is integral,
    otherwise from the Binet integral.
    """
    cfg = resolve(cfg)
    with cfg.workdps():
        u = _check_positive(u, cfg)
        try:
            lg = specfun.log_gamma_closed(u, cfg)
        except DomainError:
            lg = specfun.log_gamma_binet(u, tol, cfg)
        return (u - mpf(1) / 2) * mp.log(u) - u + mp.log(2 * mp.pi) / 2 - lg


_NAMED = {"J": j_func, "K": k_func, "H": h_func, "I": i_func}


def named_function_eval(fid: str, u, tol=None,
                        cfg: PrecisionConfig | None = None) -> mpf:
    try:
        f = _NAMED[fid]
    except KeyError:
        raise KeyError(f"unknown named function {fid!r}; expected one of {NAMED_IDS}")
    return f(u, tol, cfg)
