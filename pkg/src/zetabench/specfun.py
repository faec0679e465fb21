"""Cancellation-safe extended-precision special functions.

Everything here is computed from scratch on top of bare mpf arithmetic:
digamma and polygamma by upward recurrence into the Bernoulli asymptotic
regime, the Riemann zeta by Euler-Maclaurin summation (valid on both sides
of s = 1), the Hurwitz zeta by Hermite's integral, log-gamma by Binet's
second integral formula, and the Stieltjes constants by their limit
definition completed with Euler-Maclaurin corrections.  The Stieltjes
routine is the package's independent oracle: nothing downstream of the
integral-representation checks feeds back into it.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import ceil, factorial, log10

from mpmath import mp, mpf

from .precision import (
    ConvergenceError,
    DomainError,
    PoleError,
    PrecisionConfig,
    bernoulli,
    resolve,
    to_mpf,
)
from . import quadrature
from .quadrature import Domain

__all__ = [
    "digamma",
    "polygamma",
    "zeta_em",
    "zeta_tail",
    "zeta_tail_log",
    "hurwitz_hermite",
    "log_gamma_binet",
    "log_gamma_closed",
    "binet_tail_integral",
    "stieltjes_oracle",
    "euler_gamma",
]

_cache_lock = threading.Lock()
_zeta_cache: dict[tuple, mpf] = {}
_stieltjes_cache: dict[tuple, tuple] = {}


def clear_caches() -> None:
    with _cache_lock:
        _zeta_cache.clear()
        _stieltjes_cache.clear()


def _asym_target(cfg: PrecisionConfig, r: int = 0) -> float:
    # Smallest argument at which the Bernoulli series bottoms out safely
    # below the 10^-(dps+5) truncation threshold; the configured switch is
    # honoured whenever it is at least that large.
    return max(cfg.asymptotic_switch, 0.3665 * (cfg.dps + 6) + 2.0 + r)


def _bernoulli_series(x: mpf, terms, dps: int) -> mpf:
    """Sum c_k(x) until negligible, aborting if the tail starts diverging."""
    thr = mpf(10) ** (-(dps + 5))
    acc = mpf(0)
    prev = grew = None
    for term in terms(x):
        acc += term
        t = abs(term)
        if t < thr:
            return acc
        if prev is not None and t > prev:
            grew = (grew or 0) + 1
            if grew >= 2:
                raise ConvergenceError(
                    "asymptotic series diverging before reaching tolerance; "
                    "argument too small for this precision")
        else:
            grew = 0
        prev = t
    return acc


def digamma(u, cfg: PrecisionConfig | None = None) -> mpf:
    """psi(u) for u > 0: upward recurrence, then the asymptotic series."""
    cfg = resolve(cfg)
    with cfg.workdps():
        u = to_mpf(u, cfg)
        if not u > 0:
            raise DomainError("digamma requires u > 0")
        target = _asym_target(cfg)
        acc = mpf(0)
        while u < target:
            acc -= 1 / u
            u += 1

        def terms(x):
            # psi(x) = log x - 1/(2x) - sum B_2k / (2k x^2k)
            x2 = x * x
            p = mpf(1)
            k = 1
            while True:
                p *= x2
                yield -to_mpf(bernoulli(2 * k), cfg) / (2 * k * p)
                k += 1

        tail = _bernoulli_series(u, terms, cfg.dps)
        return acc + mp.log(u) - 1 / (2 * u) + tail


def polygamma(r: int, u, cfg: PrecisionConfig | None = None) -> mpf:
    """psi^(r)(u) for r >= 1, u > 0."""
    if r < 1:
        raise DomainError("polygamma requires r >= 1")
    cfg = resolve(cfg)
    with cfg.workdps():
        u = to_mpf(u, cfg)
        if not u > 0:
            raise DomainError("polygamma requires u > 0")
        target = _asym_target(cfg, r)
        r_fact = factorial(r)
        sign = -1 if r % 2 == 0 else 1  # (-1)^(r-1)
        acc = mpf(0)
        while u < target:
            # psi^(r)(u) = psi^(r)(u+1) - (-1)^r r! u^-(r+1)
            acc -= (-1) ** r * r_fact * u ** (-(r + 1))
            u += 1

        def terms(x):
            # sum_k B_2k (2k+r-1)!/(2k)! x^-(2k+r)
            x2 = x * x
            p = x ** (-r)
            k = 1
            while True:
                p /= x2
                coef = Fraction(factorial(2 * k + r - 1), factorial(2 * k))
                yield to_mpf(coef * bernoulli(2 * k), cfg) * p
                k += 1

        tail = _bernoulli_series(u, terms, cfg.dps)
        head = factorial(r - 1) * u ** (-r) + r_fact / 2 * u ** (-(r + 1))
        return acc + sign * (head + tail)


def _rising(s: mpf, m: int) -> mpf:
    p = mpf(1)
    for i in range(m):
        p *= s + i
    return p


def _em_cutoff(s_float: float, J: int, dps: int) -> int:
    """Summation cutoff N making the first omitted EM term < 10^-(dps+2)."""
    m = 2 * J + 1
    b = abs(Fraction(bernoulli(2 * J + 2), factorial(2 * J + 2)))
    log_b = log10(b.numerator) - log10(b.denominator)
    # |rising(s, m)| <= (|s| + m)^m
    log_rising = m * log10(abs(s_float) + m + 1)
    log_n = (dps + 2 + log_b + log_rising) / (s_float + m)
    n = ceil(10 ** min(log_n, 7.0))
    return max(16, int(2 * (abs(s_float) + m)) + 2, n)


def zeta_tail(s, a: int, cfg: PrecisionConfig | None = None) -> mpf:
    """sum_{k>=a} k^-s by Euler-Maclaurin (a past the asymptotic cutoff)."""
    cfg = resolve(cfg)
    with cfg.workdps():
        s = to_mpf(s, cfg)
        a_ = mpf(a)
        out = a_ ** (1 - s) / (s - 1) + a_ ** (-s) / 2
        thr = mpf(10) ** (-(cfg.dps + 5))
        prev = grew = None
        for j in range(1, cfg.em_terms + 1):
            c = Fraction(bernoulli(2 * j), factorial(2 * j))
            term = to_mpf(c, cfg) * _rising(s, 2 * j - 1) * a_ ** (-s - 2 * j + 1)
            out += term
            t = abs(term)
            if t < thr:
                break
            if prev is not None and t > prev:
                grew = (grew or 0) + 1
                if grew >= 2:
                    raise ConvergenceError("Euler-Maclaurin tail diverging; cutoff too small")
            else:
                grew = 0
            prev = t
        return out


def zeta_tail_log(s, a: int, cfg: PrecisionConfig | None = None) -> mpf:
    """sum_{k>=a} log(k) k^-s, the -d/ds of zeta_tail."""
    cfg = resolve(cfg)
    with cfg.workdps():
        s = to_mpf(s, cfg)
        a_ = mpf(a)
        la = mp.log(a_)
        out = a_ ** (1 - s) * la / (s - 1) + a_ ** (1 - s) / (s - 1) ** 2
        out += a_ ** (-s) * la / 2
        thr = mpf(10) ** (-(cfg.dps + 5))
        for j in range(1, cfg.em_terms + 1):
            c = to_mpf(Fraction(bernoulli(2 * j), factorial(2 * j)), cfg)
            rise = _rising(s, 2 * j - 1)
            dlog = mp.fsum(1 / (s + i) for i in range(2 * j - 1))
            term = c * (rise * la - rise * dlog) * a_ ** (-s - 2 * j + 1)
            out += term
            if abs(term) < thr:
                break
        return out


def zeta_em(s, cfg: PrecisionConfig | None = None) -> mpf:
    """Riemann zeta(s) for real s != 1 by Euler-Maclaurin summation.

    Serves as the independent zeta oracle for every integral
    representation checked elsewhere in the package.
    """
    cfg = resolve(cfg)
    with cfg.workdps():
        s = to_mpf(s, cfg)
        if s == 1:
            raise PoleError("zeta has a pole at s = 1")
        key = (s, cfg)
        with _cache_lock:
            if key in _zeta_cache:
                return _zeta_cache[key]
        N = _em_cutoff(float(s), cfg.em_terms, cfg.dps)
        head = mp.fsum(mpf(k) ** (-s) for k in range(1, N))
        out = head + zeta_tail(s, N, cfg)
        with _cache_lock:
            _zeta_cache[key] = out
        return out


def hurwitz_hermite(s, u, tol=None, cfg: PrecisionConfig | None = None) -> mpf:
    """Hurwitz zeta(s, u) by Hermite's integral, for real s != 1, u > 0.

    zeta(s,u) = u^-s/2 + u^(1-s)/(s-1)
                + 2 int_0^oo sin(s arctan(x/u)) / ((u^2+x^2)^(s/2) (e^(2 pi x)-1)) dx
    """
    cfg = resolve(cfg)
    with cfg.workdps():
        s = to_mpf(s, cfg)
        u = to_mpf(u, cfg)
        if s == 1:
            raise PoleError("hurwitz zeta has a pole at s = 1")
        if not u > 0:
            raise DomainError("hurwitz_hermite requires u > 0")
        if tol is None:
            tol = mpf(10) ** (-(cfg.working_digits - 10))
        u2 = u * u
        half_s = s / 2
        two_pi = 2 * mp.pi

        def integrand(x: mpf) -> mpf:
            return mp.sin(s * mp.atan(x / u)) / (
                (u2 + x * x) ** half_s * mp.expm1(two_pi * x))

        q = quadrature.integrate(integrand, Domain.semi_infinite(decay="exponential"),
                                 tol, cfg).require_converged("Hermite integral")
        return u ** (-s) / 2 + u ** (1 - s) / (s - 1) + 2 * q.value


def binet_tail_integral(u, tol=None, cfg: PrecisionConfig | None = None) -> mpf:
    """int_0^oo arctan(x/u) / (e^(2 pi x) - 1) dx for u > 0."""
    cfg = resolve(cfg)
    with cfg.workdps():
        u = to_mpf(u, cfg)
        if not u > 0:
            raise DomainError("binet_tail_integral requires u > 0")
        if tol is None:
            tol = mpf(10) ** (-(cfg.working_digits - 10))
        two_pi = 2 * mp.pi

        def integrand(x: mpf) -> mpf:
            return mp.atan(x / u) / mp.expm1(two_pi * x)

        q = quadrature.integrate(integrand, Domain.semi_infinite(decay="exponential"),
                                 tol, cfg).require_converged("Binet integral")
        return q.value


def log_gamma_binet(u, tol=None, cfg: PrecisionConfig | None = None) -> mpf:
    """log Gamma(u) for u > 0 by Binet's second formula."""
    cfg = resolve(cfg)
    with cfg.workdps():
        u = to_mpf(u, cfg)
        if not u > 0:
            raise DomainError("log_gamma_binet requires u > 0")
        tail = binet_tail_integral(u, tol, cfg)
        return (u - mpf(1) / 2) * mp.log(u) - u + mp.log(2 * mp.pi) / 2 + 2 * tail


def log_gamma_closed(u, cfg: PrecisionConfig | None = None) -> mpf:
    """Exact log Gamma(u) for positive integer and half-integer u.

    Gamma(m) = (m-1)!; Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!).
    Used as the independent side of Binet/Lerch checks.
    """
    cfg = resolve(cfg)
    with cfg.workdps():
        twice = to_mpf(u, cfg) * 2
        if twice != int(twice) or twice <= 0:
            raise DomainError("closed form requires positive u with 2u integral")
        n2 = int(twice)
        if n2 % 2 == 0:
            return mp.log(mpf(factorial(n2 // 2 - 1)))
        m = (n2 - 1) // 2
        ratio = Fraction(factorial(2 * m), 4 ** m * factorial(m))
        return mp.log(to_mpf(ratio, cfg)) + mp.log(mp.pi) / 2


def _logpow_deriv_polys(n: int, m_max: int) -> list[list[Fraction]]:
    """Coefficient vectors P_m with d^m/dx^m [log^n x / x] = P_m(log x)/x^(m+1).

    P_0 = L^n and P_{m+1} = P_m' - (m+1) P_m, exact in Fractions.
    """
    polys = [[Fraction(0)] * n + [Fraction(1)]]
    for m in range(m_max):
        p = polys[-1]
        q = [Fraction(0)] * len(p)
        for i, c in enumerate(p):
            q[i] -= (m + 1) * c
            if i >= 1:
                q[i - 1] += i * c
        polys.append(q)
    return polys


def stieltjes_oracle(n: int, cfg: PrecisionConfig | None = None,
                     cutoff: int | None = None) -> mpf:
    """Stieltjes constant gamma_n, 0 <= n <= 12, by the limit definition.

    sum_{k<=N} log^n k / k - log^(n+1) N/(n+1), completed with the
    -log^n N/(2N) midpoint term and em_terms Bernoulli corrections in the
    derivatives of log^n x / x, so N = 10^4 reaches working precision.
    This is the package's independent oracle for every gamma_n route.
    """
    if not 0 <= n <= 12:
        raise DomainError("stieltjes oracle supports 0 <= n <= 12")
    cfg = resolve(cfg)
    N = cutoff if cutoff is not None else 10_000
    key = (cfg, N)
    with _cache_lock:
        table = _stieltjes_cache.get(key)
    if table is None:
        table = _stieltjes_table(12, N, cfg)
        with _cache_lock:
            _stieltjes_cache[key] = table
    return table[n]


def _stieltjes_table(nmax: int, N: int, cfg: PrecisionConfig) -> tuple:
    # The raw sums cancel ~log^(n+1)N digits against the integral term, so
    # run the accumulation with extra internal digits.
    dps = cfg.dps + 25
    with mp.workdps(dps):
        sums = [mpf(0)] * (nmax + 1)
        for k in range(2, N + 1):
            lk = mp.log(k)
            inv = mpf(1) / k
            p = inv
            sums[0] += p
            for i in range(1, nmax + 1):
                p *= lk
                sums[i] += p
        sums[0] += 1  # k = 1 contributes only at n = 0
        lN = mp.log(N)
        out = []
        for n in range(nmax + 1):
            polys = _logpow_deriv_polys(n, 2 * cfg.em_terms - 1)
            val = sums[n] - lN ** (n + 1) / (n + 1)
            val -= lN ** n / (2 * N)
            for j in range(1, cfg.em_terms + 1):
                m = 2 * j - 1
                deriv = _poly_eval(polys[m], lN) / mpf(N) ** (m + 1)
                coef = Fraction(bernoulli(2 * j), factorial(2 * j))
                val -= mpf(coef.numerator) / coef.denominator * deriv
            out.append(val)
        with cfg.workdps():
            return tuple(+v for v in out)


def _poly_eval(coeffs: list[Fraction], x: mpf) -> mpf:
    acc = mpf(0)
    for c in reversed(coeffs):
        acc = acc * x + mpf(c.numerator) / c.denominator
    return acc


def euler_gamma(cfg: PrecisionConfig | None = None) -> mpf:
    """Euler's constant, from the Stieltjes oracle."""
    return stieltjes_oracle(0, cfg)
