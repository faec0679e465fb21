"""Catalog of verifiable identities, each an independent LHS/RHS pair.

Every record pairs two evaluation routes that share nothing beyond the
base special functions: typically a quadrature assembly on one side and a
closed form, an Euler-Maclaurin oracle value, or a second independent
integral on the other.  evaluate_identity() returns the residual between
the sides; the CLI verify command runs the whole catalog.

Catalog keys are stable strings (EQ_1_5_6, LERCH, ...) used verbatim in
CLI arguments and JSON reports.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from mpmath import mp, mpf

from .precision import ConvergenceError, DomainError, PrecisionConfig, resolve, to_mpf
from . import kernels, quadrature, specfun
from .bell import bell_complete_recurrence
from .kernels import (
    bose_reg,
    h_func,
    i_func,
    i_func_closed,
    j_func,
    k_func,
    kernel_a,
    kernel_b,
    kernel_db,
    kernel_dbk,
    log_ratio_reg,
    psi_reg,
    psi1_reg,
    psi1_reg2,
)
from .quadrature import Domain
from .specfun import (
    digamma,
    hurwitz_hermite,
    log_gamma_binet,
    log_gamma_closed,
    polygamma,
    stieltjes_oracle,
    zeta_em,
    zeta_tail,
    zeta_tail_log,
)

__all__ = [
    "IdentityRecord",
    "Residual",
    "catalog",
    "catalog_ids",
    "resolve_id",
    "evaluate_identity",
    "zeta_debruijn",
    "zeta_kloosterman",
    "cohen_series",
    "cohen_routes",
    "gamma1_of_u",
    "gamma1_of_u_choi",
    "weighted_kernel_integral",
    "bell_psi_args",
    "stieltjes_bell_2_3",
    "stieltjes_inversion_2_5",
    "stieltjes_leibniz_2_13",
    "zeta_deriv0_integral_1_8",
    "zeta_deriv0_bell_1_16",
    "zeta_deriv0_leibniz_1_16_1",
    "zeta_dd0_ramanujan",
    "zeta_dd0_u_log_integral",
    "zeta_dd0_u_shifted_integral",
]


# --------------------------------------------------------------------------
# evaluation context and shared cached integrals
# --------------------------------------------------------------------------

_wki_lock = threading.Lock()
_wki_cache: dict[tuple, tuple] = {}
_cohen_lock = threading.Lock()
_cohen_cache: dict[tuple, dict] = {}


def clear_caches() -> None:
    with _wki_lock:
        _wki_cache.clear()
    with _cohen_lock:
        _cohen_cache.clear()


def weighted_kernel_integral(kid: str, j: int,
                             cfg: PrecisionConfig | None = None) -> tuple:
    """Cached (value, err, evaluations) of int_0^oo kernel(u) log(u)**j du.

    Computed once per (kernel, weight, config) at the tightest honoured
    tolerance, then shared by every route that needs it.  The recorded
    evaluation count is charged to every consumer so that reported costs
    do not depend on cache warmth.
    """
    cfg = resolve(cfg)
    key = (kid, j, cfg)
    with _wki_lock:
        hit = _wki_cache.get(key)
    if hit is not None:
        return hit
    f = kernels.kernel_a if kid == "A" else kernels.kernel_b
    with cfg.workdps():
        r = quadrature.integrate_with_log_weight(
            lambda u: f(u, cfg), j, cfg.min_tolerance(), cfg)
        r.require_converged(f"kernel {kid} log^{j} integral")
        out = (r.value, r.err_estimate, r.evaluations)
    with _wki_lock:
        _wki_cache[key] = out
    return out


class EvalContext:
    """Carries tolerance/precision; tallies evaluations and error budget."""

    def __init__(self, tol, cfg: PrecisionConfig):
        self.cfg = cfg
        with cfg.workdps():
            self.tol = mpf(tol)
            floor = cfg.min_tolerance()
            if self.tol < floor:
                raise ValueError(f"tolerance below resolution {mp.nstr(floor, 3)}")
            self.qtol = max(self.tol / 50, floor)
            self.err_acc = mpf(0)
        self.evals = 0

    def integrate(self, f, dom: Domain, what: str, qtol=None) -> mpf:
        r = quadrature.integrate(f, dom, qtol or self.qtol, self.cfg)
        self.evals += r.evaluations
        self.err_acc += r.err_estimate
        r.require_converged(what)
        return r.value

    def log_weight(self, f, k: int, what: str, qtol=None) -> mpf:
        r = quadrature.integrate_with_log_weight(f, k, qtol or self.qtol, self.cfg)
        self.evals += r.evaluations
        self.err_acc += r.err_estimate
        r.require_converged(what)
        return r.value

    def kernel_integral(self, kid: str, j: int) -> mpf:
        value, err, evals = weighted_kernel_integral(kid, j, self.cfg)
        self.evals += evals
        self.err_acc += err
        return value


@dataclass(frozen=True)
class Param:
    name: str
    default: str
    check: Callable[[mpf], bool]
    doc: str


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    description: str
    params: tuple[Param, ...]
    lhs: Callable[[EvalContext, dict], mpf]
    rhs: Callable[[EvalContext, dict], mpf]


@dataclass(frozen=True)
class Residual:
    identity: str
    lhs_value: mpf
    rhs_value: mpf
    abs_err: mpf
    rel_err: mpf
    evaluations: int
    tol: mpf
    passed: bool


_CATALOG: dict[str, IdentityRecord] = {}

ALIASES = {"EQ_1_9_vs_1_10": "EQ_1_9"}


def _register(id_: str, description: str, lhs, rhs, params: tuple[Param, ...] = ()):
    _CATALOG[id_] = IdentityRecord(id_, description, params, lhs, rhs)


def catalog() -> dict[str, IdentityRecord]:
    return dict(_CATALOG)


def catalog_ids() -> list[str]:
    return sorted(_CATALOG)


def resolve_id(id_: str) -> str:
    id_ = ALIASES.get(id_, id_)
    if id_ not in _CATALOG:
        raise KeyError(f"unknown identity id {id_!r}")
    return id_


def evaluate_identity(id_: str, params: Optional[dict] = None, tol="1e-8",
                      cfg: PrecisionConfig | None = None) -> Residual:
    """Evaluate both sides of a catalog identity and return the residual."""
    cfg = resolve(cfg)
    rec = _CATALOG[resolve_id(id_)]
    with cfg.workdps():
        values: dict[str, mpf] = {}
        given = dict(params or {})
        for p in rec.params:
            raw = given.pop(p.name, p.default)
            v = to_mpf(raw, cfg)
            if not p.check(v):
                raise DomainError(f"{rec.id}: parameter {p.name}={raw} outside "
                                  f"valid domain ({p.doc})")
            values[p.name] = v
        if given:
            raise ValueError(f"{rec.id}: unknown parameters {sorted(given)}")
        ctx = EvalContext(tol, cfg)
        lhs = rec.lhs(ctx, values)
        rhs = rec.rhs(ctx, values)
        abs_err = abs(lhs - rhs)
        scale = max(abs(lhs), abs(rhs), mpf(10) ** (-cfg.working_digits))
        return Residual(rec.id, lhs, rhs, abs_err, abs_err / scale,
                        ctx.evals, ctx.tol, bool(abs_err <= ctx.tol))


# --------------------------------------------------------------------------
# shared assemblies
# --------------------------------------------------------------------------

_SIN_HALF = (0, 1, 0, -1)  # sin(k pi/2) exactly


def bell_psi_args(k: int, sign: int, cfg: PrecisionConfig) -> tuple:
    """Arguments (x_1..x_k) with x_j = sign*2*(j-1)!*zeta(j) at even j, else 0."""
    from math import factorial

    args = []
    for j in range(1, k + 1):
        if j % 2 == 0:
            args.append(sign * 2 * factorial(j - 1) * zeta_em(j, cfg))
        else:
            args.append(mpf(0))
    return tuple(args)


def _bell_psi_value(k: int, sign: int, cfg: PrecisionConfig) -> mpf:
    if k == 0:
        return mpf(1)
    return mpf(bell_complete_recurrence(bell_psi_args(k, sign, cfg), k))


def zeta_dd0_ramanujan(cfg: PrecisionConfig | None = None) -> mpf:
    """zeta''(0) assembled from gamma_1, gamma, zeta(2), log 2pi."""
    cfg = resolve(cfg)
    with cfg.workdps():
        g = stieltjes_oracle(0, cfg)
        g1 = stieltjes_oracle(1, cfg)
        return g1 + g * g / 2 - zeta_em(2, cfg) / 4 - mp.log(2 * mp.pi) ** 2 / 2


def _dd0_u_prefix(u: mpf) -> mpf:
    lu = mp.log(u)
    return (mpf(1) / 2 - u) * lu * lu + 2 * u * lu - 2 * u


def zeta_dd0_u_log_integral(ctx: EvalContext, u: mpf) -> mpf:
    """d^2/ds^2 zeta(s,u) at s=0 via the log(u^2+x^2) arctan integral."""
    return _dd0_u_prefix(u) - 2 * j_func(u, ctx.qtol, ctx.cfg)


def zeta_dd0_u_shifted_integral(ctx: EvalContext, u: mpf) -> mpf:
    """Same value via the log-weighted shifted digamma remainder integral."""
    cfg = ctx.cfg
    val = ctx.log_weight(lambda t: psi_reg(t + u, cfg), 1, "shifted psi log integral")
    return _dd0_u_prefix(u) + 2 * val


def gamma1_of_u(u, tol=None, cfg: PrecisionConfig | None = None,
                ctx: EvalContext | None = None) -> mpf:
    """First generalized Stieltjes constant gamma_1(u), u > 0.

    gamma_1(u) = -log^2(u)/2 + int_0^oo [psi'(t+u) - 1/(t+u)] log t dt.

    (Absorbing the 1/(2(t+u)^2) piece of the integrand turns its exact
    log-moment, int log t/(t+u)^2 dt = log(u)/u, into the vanishing of the
    rational prefactor; the u = 1/2 closed form pins this down.)
    """
    cfg = resolve(cfg if ctx is None else ctx.cfg)
    with cfg.workdps():
        u = to_mpf(u, cfg)
        if not u > 0:
            raise DomainError("gamma1_of_u requires u > 0")
        if ctx is None:
            ctx = EvalContext(tol if tol is not None
                              else mpf(10) ** (-(cfg.working_digits - 12)), cfg)
        val = ctx.log_weight(lambda t: psi1_reg(t + u, cfg), 1,
                             "shifted trigamma log integral")
        lu = mp.log(u)
        return -lu * lu / 2 + val


def gamma1_of_u_choi(u, tol=None, cfg: PrecisionConfig | None = None,
                     ctx: EvalContext | None = None) -> mpf:
    """gamma_1(u) by the two Bose-kernel x-integrals (cross-check route)."""
    cfg = resolve(cfg if ctx is None else ctx.cfg)
    with cfg.workdps():
        u = to_mpf(u, cfg)
        if not u > 0:
            raise DomainError("gamma1_of_u_choi requires u > 0")
        if ctx is None:
            ctx = EvalContext(tol if tol is not None
                              else mpf(10) ** (-(cfg.working_digits - 12)), cfg)
        u2 = u * u
        two_pi = 2 * mp.pi

        def f_log(x: mpf) -> mpf:
            return x * mp.log(u2 + x * x) / ((u2 + x * x) * mp.expm1(two_pi * x))

        def f_atan(x: mpf) -> mpf:
            return mp.atan(x / u) / ((u2 + x * x) * mp.expm1(two_pi * x))

        dom = Domain.semi_infinite(decay="exponential")
        i_log = ctx.integrate(f_log, dom, "Bose log integral")
        i_atan = ctx.integrate(f_atan, dom, "Bose arctan integral")
        lu = mp.log(u)
        return lu / (2 * u) - lu * lu / 2 + i_log - 2 * u * i_atan


# ---- zeta representations -------------------------------------------------

def zeta_debruijn(s, tol=None, cfg: PrecisionConfig | None = None,
                  ctx: EvalContext | None = None) -> mpf:
    """zeta(s) for 0 < s < 2, s != 1, from the trigamma-kernel integral.

    zeta(s) = 1/(s-1) - sin(pi s)/(pi (s-1)) int_0^oo B(u) u^(1-s) du.
    """
    cfg = resolve(cfg if ctx is None else ctx.cfg)
    with cfg.workdps():
        s = to_mpf(s, cfg)
        if not 0 < s < 2:
            raise DomainError("zeta_debruijn requires 0 < s < 2")
        if s == 1:
            raise DomainError("zeta_debruijn: pole at s = 1")
        if ctx is None:
            ctx = EvalContext(tol if tol is not None
                              else mpf(10) ** (-(cfg.working_digits - 12)), cfg)
            tol = None  # EvalContext already owns the requested tightness

        def f(u: mpf) -> mpf:
            return kernel_b(u, cfg) * u ** (1 - s)

        val = ctx.integrate(f, Domain.semi_infinite(decay="algebraic",
                                                    decay_p=float(1 + s)),
                            "trigamma kernel integral", qtol=tol)
        return 1 / (s - 1) - mp.sin(mp.pi * s) / (mp.pi * (s - 1)) * val


def zeta_kloosterman(s, tol=None, cfg: PrecisionConfig | None = None,
                     ctx: EvalContext | None = None) -> mpf:
    """zeta(s) for 0 < s < 1 from the log u - psi(1+u) integral.

    The integrand decays only like u^(-1-s), so the far tail past u = 32
    is completed analytically from the kernel's Bernoulli expansion.
    """
    cfg = resolve(cfg if ctx is None else ctx.cfg)
    with cfg.workdps():
        s = to_mpf(s, cfg)
        if not 0 < s < 1:
            raise DomainError("zeta_kloosterman requires 0 < s < 1")
        if ctx is None:
            ctx = EvalContext(tol if tol is not None
                              else mpf(10) ** (-(cfg.working_digits - 12)), cfg)
        cut = mpf(32)

        def f(u: mpf) -> mpf:
            return kernel_dbk(u, cfg) * u ** (-s)

        low = ctx.integrate(f, Domain.finite(0, 1), "kernel integral on (0,1)")
        mid = ctx.integrate(f, Domain.finite(1, cut), "kernel integral on (1,32)")
        # tail: int_M^oo [-1/(2u) + sum B_2k/(2k u^2k)] u^-s du
        from .precision import bernoulli

        tail = -cut ** (-s) / (2 * s)
        thr = mpf(10) ** (-(cfg.dps + 5))
        k = 1
        while True:
            c = to_mpf(bernoulli(2 * k), cfg) / (2 * k)
            term = c * cut ** (1 - s - 2 * k) / (s + 2 * k - 1)
            tail += term
            if abs(term) < thr:
                break
            k += 1
        return mp.sin(mp.pi * s) / mp.pi * (low + mid + tail)


# ---- the slowly-converging log series and its equivalent routes -----------

def cohen_routes(tol="1e-10", cfg: PrecisionConfig | None = None) -> dict:
    """All four routes to S = sum log(n+1)/(n(n+1)), keyed by route name."""
    cfg = resolve(cfg)
    with cfg.workdps():
        tol = mpf(tol)
        if tol < mpf("1e-25"):
            raise ValueError("cohen series tolerance floor is 1e-25")
        key = (cfg, mp.nstr(tol, 5))
        with _cohen_lock:
            hit = _cohen_cache.get(key)
        if hit is not None:
            return dict(hit)
        thr = mpf(10) ** (-(cfg.dps + 2))
        base = specfun._em_cutoff(2.0, cfg.em_terms, cfg.dps) + 2

        # direct: partial sum + tails sum_{j>=2} sum_{m>=M} log(m) m^-j
        direct = mp.fsum(mp.log(n + 1) / (mpf(n) * (n + 1))
                         for n in range(1, base - 1))
        j = 2
        while True:
            t = zeta_tail_log(j, base, cfg)
            direct += t
            if abs(t) < thr:
                break
            j += 1

        # alternating zeta: log 2 + sum (-1)^(n+1) (zeta(n+1)-1)/n
        alt = mp.log(2)
        n = 1
        while True:
            t = (-1) ** (n + 1) * (zeta_em(n + 1, cfg) - 1) / n
            alt += t
            if abs(t) < thr:
                break
            n += 1

        # zeta prime: -sum_{n>=2} zeta'(n), central differences at h = 1e-10
        h = mpf("1e-10")
        zp = mpf(0)
        n = 2
        while mpf(2) ** (-n) > thr:
            d = (zeta_em(n + h, cfg) - zeta_em(n - h, cfg)) / (2 * h)
            zp -= d
            n += 1
        m = 2
        while True:  # remainder sum_{m>=2} log(m) m^-(n-1) / (m-1)
            t = mp.log(m) * mpf(m) ** (-(n - 1)) / (m - 1)
            zp += t
            if abs(t) < thr:
                break
            m += 1

        # log ratio: sum (1/n) log((n+1)/n) + analytic tail
        logr = mp.fsum(mp.log1p(mpf(1) / n) / n for n in range(1, base))
        k = 1
        while True:
            t = (-1) ** (k - 1) * zeta_tail(k + 1, base, cfg) / k
            logr += t
            if abs(t) < thr:
                break
            k += 1

        routes = {"direct": direct, "alternating_zeta": alt,
                  "zeta_prime": zp, "log_ratio": logr}
        names = sorted(routes)
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                if abs(routes[a] - routes[b]) > tol:
                    raise ConvergenceError(
                        f"series routes {a} and {b} disagree by "
                        f"{mp.nstr(abs(routes[a] - routes[b]), 3)} (> {mp.nstr(tol, 3)})")
        with _cohen_lock:
            _cohen_cache[key] = dict(routes)
        return routes


def cohen_series(tol="1e-10", cfg: PrecisionConfig | None = None) -> mpf:
    """S = sum_{n>=1} log(n+1)/(n(n+1)), cross-checked over four routes."""
    return cohen_routes(tol, cfg)["direct"]


# ---- integral routes for constants ----------------------------------------

def stieltjes_bell_2_3(n: int, cfg: PrecisionConfig | None = None,
                       ctx: EvalContext | None = None) -> mpf:
    """gamma_n as a Bell-weighted sum of log-power trigamma-kernel integrals."""
    cfg = resolve(cfg if ctx is None else ctx.cfg)
    with cfg.workdps():
        if ctx is None:
            ctx = EvalContext(mpf(10) ** (-(cfg.working_digits - 12)), cfg)
        acc = mpf(0)
        for k in range(n + 1):
            y = _bell_psi_value(k, -1, cfg)
            if y == 0:
                continue
            acc += comb(n, k) * (-1) ** k * y * ctx.kernel_integral("B", n - k)
        return acc


def stieltjes_inversion_2_5(n: int, cfg: PrecisionConfig | None = None,
                            ctx: EvalContext | None = None) -> mpf:
    """gamma_n by solving the triangular Bell system of the log-moment sums."""
    cfg = resolve(cfg if ctx is None else ctx.cfg)
    with cfg.workdps():
        if ctx is None:
            ctx = EvalContext(mpf(10) ** (-(cfg.working_digits - 12)), cfg)
        gammas: list[mpf] = []
        for m in range(n + 1):
            val = ctx.kernel_integral("B", m)
            for k in range(1, m + 1):
                y = _bell_psi_value(k, +1, cfg)
                if y == 0:
                    continue
                val -= comb(m, k) * (-1) ** k * y * gammas[m - k]
            gammas.append(val)
        return gammas[n]


def stieltjes_leibniz_2_13(m: int, cfg: PrecisionConfig | None = None,
                           ctx: EvalContext | None = None) -> mpf:
    """gamma_m from the sine-prefactor Leibniz expansion of the kernel moments.

    The assembled form is (-1)^(m) / (m+1) * sum_j ... with the overall sign
    fixed so the m = 0 instance reduces to the plain kernel integral
    (whose value is Euler's constant).
    """
    cfg = resolve(cfg if ctx is None else ctx.cfg)
    with cfg.workdps():
        if ctx is None:
            ctx = EvalContext(mpf(10) ** (-(cfg.working_digits - 12)), cfg)
        nn = m + 1
        acc = mpf(0)
        for j in range(nn + 1):
            s = _SIN_HALF[(nn - j) % 4]
            if s == 0:
                continue
            acc += comb(nn, j) * mp.pi ** (nn - j - 1) * s * (-1) ** j \
                * ctx.kernel_integral("B", j)
        return (-1) ** (nn - 1) * acc / nn


def zeta_deriv0_integral_1_8(n: int, cfg: PrecisionConfig | None = None,
                             ctx: EvalContext | None = None) -> mpf:
    """zeta^(n)(0) from sine-derivative weights over log-power A-integrals."""
    cfg = resolve(cfg if ctx is None else ctx.cfg)
    with cfg.workdps():
        if n < 1:
            raise DomainError("route needs n >= 1")
        if ctx is None:
            ctx = EvalContext(mpf(10) ** (-(cfg.working_digits - 12)), cfg)
        acc = mpf(0)
        for k in range(n + 1):
            s = _SIN_HALF[k % 4]
            if s == 0:
                continue
            acc += comb(n, k) * mp.pi ** (k - 1) * s * (-1) ** (n - k) \
                * ctx.kernel_integral("A", n - k)
        return acc


def zeta_deriv0_bell_1_16(n: int, cfg: PrecisionConfig | None = None,
                          ctx: EvalContext | None = None) -> mpf:
    """zeta^(n)(0) from the Bell-polynomial form of the reflection factor."""
    cfg = resolve(cfg if ctx is None else ctx.cfg)
    with cfg.workdps():
        if n < 1:
            raise DomainError("route needs n >= 1")
        if ctx is None:
            ctx = EvalContext(mpf(10) ** (-(cfg.working_digits - 12)), cfg)
        acc = mpf(0)
        for k in range(n):
            y = _bell_psi_value(k, -1, cfg)
            if y == 0:
                continue
            acc += comb(n - 1, k) * (-1) ** (k + 1) * y \
                * ctx.kernel_integral("A", n - k - 1)
        return n * (-1) ** n * acc


def zeta_deriv0_leibniz_1_16_1(n: int, cfg: PrecisionConfig | None = None,
                               ctx: EvalContext | None = None) -> mpf:
    """zeta^(n)(0) by recursively solving the Leibniz relation

    sum_{k=0}^{m-1} C(m,k) zeta^(m-k)(0) Y_k = m (-1)^(m-1) A_(m-1).
    """
    cfg = resolve(cfg if ctx is None else ctx.cfg)
    with cfg.workdps():
        if n < 1:
            raise DomainError("route needs n >= 1")
        if ctx is None:
            ctx = EvalContext(mpf(10) ** (-(cfg.working_digits - 12)), cfg)
        derivs: dict[int, mpf] = {}
        for m in range(1, n + 1):
            val = m * (-1) ** (m - 1) * ctx.kernel_integral("A", m - 1)
            for k in range(1, m):
                y = _bell_psi_value(k, +1, cfg)
                if y == 0:
                    continue
                val -= comb(m, k) * y * derivs[m - k]
            derivs[m] = val
        return derivs[n]


# --------------------------------------------------------------------------
# catalog records
# --------------------------------------------------------------------------

def _p_s01(default="0.5"):
    return Param("s", default, lambda v: 0 < v < 1, "requires 0 < s < 1")


def _p_u_pos(default="1"):
    return Param("u", default, lambda v: v > 0, "requires u > 0")


def _seq_zeta_deriv0(ctx: EvalContext, n: int) -> mpf:
    from . import constants

    return constants.zeta_deriv0(n, route="lehmer_4_19", cfg=ctx.cfg)


_register(
    "EQ_1_1",
    "zeta(s) on (0,1) from the sine-prefactored log u - psi(1+u) moment "
    "integral versus the Euler-Maclaurin oracle",
    lambda ctx, p: zeta_kloosterman(p["s"], ctx=ctx),
    lambda ctx, p: zeta_em(p["s"], ctx.cfg),
    (_p_s01(),),
)

_register(
    "EQ_1_2",
    "int_0^oo u^-s/(1+u) du equals pi/sin(pi s)",
    lambda ctx, p: ctx.integrate(
        lambda u: u ** (-p["s"]) / (1 + u),
        Domain.semi_infinite(decay="algebraic", decay_p=float(1 + p["s"])),
        "beta-type integral"),
    lambda ctx, p: mp.pi / mp.sin(mp.pi * p["s"]),
    (_p_s01(),),
)

_register(
    "EQ_1_3",
    "zeta(s) on (0,1) from the log(1+u) - psi(1+u) kernel with simple pole "
    "split off, versus the Euler-Maclaurin oracle",
    lambda ctx, p: 1 / (p["s"] - 1) + mp.sin(mp.pi * p["s"]) / mp.pi * ctx.integrate(
        lambda u: kernel_db(u, ctx.cfg) * u ** (-p["s"]),
        Domain.semi_infinite(decay="algebraic", decay_p=float(1 + p["s"])),
        "smoothed kernel integral"),
    lambda ctx, p: zeta_em(p["s"], ctx.cfg),
    (_p_s01(),),
)

_register(
    "EQ_1_5_6",
    "int_0^oo [log u - psi(1+u) + 1/(2(1+u))] du equals -log(2 pi)/2",
    lambda ctx, p: ctx.kernel_integral("A", 0),
    lambda ctx, p: -mp.log(2 * mp.pi) / 2,
)


def _eq_1_7_lhs(ctx: EvalContext, p: dict) -> mpf:
    s = p["s"]
    n = int(p["n"])
    cfg = ctx.cfg
    sin_pi_s = mp.sin(mp.pi * s)
    cos_pi_s = mp.cos(mp.pi * s)
    acc = mpf(0)
    for k in range(n + 1):
        # sin(pi s + k pi/2) expanded with exact quarter-turn factors
        trig = sin_pi_s * (1, 0, -1, 0)[k % 4] + cos_pi_s * _SIN_HALF[k % 4]
        if trig == 0:
            continue
        j = n - k

        def low(u: mpf, j=j) -> mpf:
            return kernel_a(u, cfg) * mp.log(u) ** j * u ** (-s)

        def high(t: mpf, j=j) -> mpf:
            return kernel_a(1 / t, cfg) * (-mp.log(t)) ** j * t ** (s - 2)

        val = ctx.integrate(low, Domain.finite(0, 1), "weighted A integral, low")
        val += ctx.integrate(high, Domain.finite(0, 1), "weighted A integral, tail")
        acc += comb(n, k) * mp.pi ** (k - 1) * trig * (-1) ** j * val
    return acc


def _eq_1_7_rhs(ctx: EvalContext, p: dict) -> mpf:
    s = p["s"]
    n = int(p["n"])
    h = mpf("1e-6")
    qtol = max(ctx.cfg.min_tolerance(), mpf(10) ** (-(ctx.cfg.working_digits - 16)))
    f = lambda v: zeta_debruijn(v, qtol, ctx.cfg, ctx=ctx)
    if n == 1:
        return (f(s + h) - f(s - h)) / (2 * h)
    return (f(s + h) - 2 * f(s) + f(s - h)) / (h * h)


_register(
    "EQ_1_7",
    "n-th zeta derivative on (0,1) from the Leibniz sine expansion of the "
    "kernel moments versus central differences of the trigamma-kernel zeta",
    _eq_1_7_lhs,
    _eq_1_7_rhs,
    (Param("s", "0.3", lambda v: 0 < v < 1, "requires 0 < s < 1"),
     Param("n", "1", lambda v: v in (1, 2), "n in {1, 2}")),
)

_register(
    "EQ_1_8",
    "zeta^(n)(0) from sine-weighted log-moment integrals of the digamma "
    "kernel versus the alternating-constant Bell route",
    lambda ctx, p: zeta_deriv0_integral_1_8(int(p["n"]), ctx=ctx),
    lambda ctx, p: _seq_zeta_deriv0(ctx, int(p["n"])),
    (Param("n", "2", lambda v: 1 <= v <= 8 and v == int(v), "integer 1 <= n <= 8"),),
)

_register(
    "EQ_1_9",
    "zeta''(0) as -2 int A(u) log u du versus its Stieltjes closed form",
    lambda ctx, p: -2 * ctx.kernel_integral("A", 1),
    lambda ctx, p: zeta_dd0_ramanujan(ctx.cfg),
)

_register(
    "EQ_1_10",
    "Stieltjes closed form of zeta''(0) versus the sign-constant Bell route",
    lambda ctx, p: zeta_dd0_ramanujan(ctx.cfg),
    lambda ctx, p: _seq_zeta_deriv0(ctx, 2),
)

_register(
    "EQ_1_13",
    "zeta'''(0) = 3 int A(u) log^2 u du + pi^2 log(2 pi)/2 versus the "
    "sign-constant Bell route",
    lambda ctx, p: 3 * ctx.kernel_integral("A", 2) + mp.pi ** 2 / 2 * mp.log(2 * mp.pi),
    lambda ctx, p: _seq_zeta_deriv0(ctx, 3),
)

_register(
    "EQ_1_16",
    "zeta^(n)(0) from the Bell expansion of the reflection factor versus "
    "the alternating-constant Bell route",
    lambda ctx, p: zeta_deriv0_bell_1_16(int(p["n"]), ctx=ctx),
    lambda ctx, p: _seq_zeta_deriv0(ctx, int(p["n"])),
    (Param("n", "3", lambda v: 1 <= v <= 8 and v == int(v), "integer 1 <= n <= 8"),),
)


def _eq_1_16_1_lhs(ctx: EvalContext, p: dict) -> mpf:
    n = int(p["n"])
    acc = mpf(0)
    for k in range(n):
        y = _bell_psi_value(k, +1, ctx.cfg)
        if y == 0:
            continue
        acc += comb(n, k) * _seq_zeta_deriv0(ctx, n - k) * y
    return acc


_register(
    "EQ_1_16_1",
    "Leibniz relation binding lower zeta derivatives at 0 to a single "
    "log-moment kernel integral",
    _eq_1_16_1_lhs,
    lambda ctx, p: int(p["n"]) * (-1) ** (int(p["n"]) - 1)
    * ctx.kernel_integral("A", int(p["n"]) - 1),
    (Param("n", "3", lambda v: 1 <= v <= 8 and v == int(v), "integer 1 <= n <= 8"),),
)

_register(
    "EQ_1_18",
    "int_0^oo u^-s/(x^2+u^2) du equals pi/(2 x^(s+1) cos(pi s/2))",
    lambda ctx, p: _lwa(ctx, p)[0],
    lambda ctx, p: mp.pi / (2 * p["x"] ** (p["s"] + 1) * mp.cos(mp.pi * p["s"] / 2)),
    (Param("s", "0.5", lambda v: abs(v) < 1, "requires |s| < 1"),
     Param("x", "1", lambda v: v > 0, "requires x > 0")),
)


def _lwa(ctx: EvalContext, p: dict) -> tuple[mpf, mpf]:
    plain, logw = quadrature.log_weighted_algebraic_full(
        p["s"], p["x"], ctx.qtol, ctx.cfg)
    ctx.evals += plain.evaluations + logw.evaluations
    return plain.value, logw.value


_register(
    "EQ_1_20",
    "log u - psi(1+u) equals twice the regularized Bose-kernel moment of "
    "x/(x^2+u^2)",
    lambda ctx, p: kernel_dbk(p["u"], ctx.cfg),
    lambda ctx, p: 2 * ctx.integrate(
        lambda x: x / (x * x + p["u"] ** 2) * bose_reg(2 * mp.pi * x, ctx.cfg),
        Domain.semi_infinite(decay="algebraic", decay_p=2),
        "regularized Bose moment"),
    (_p_u_pos(),),
)

_register(
    "EQ_1_22",
    "int_0^oo u^-s log u/(x^2+u^2) du against its differentiated closed "
    "form (sign fixed by the s = 0 special case)",
    lambda ctx, p: _lwa(ctx, p)[1],
    lambda ctx, p: mp.pi / 2 * p["x"] ** (-(p["s"] + 1))
    * (mp.cos(mp.pi * p["s"] / 2) * mp.log(p["x"])
       - mp.pi / 2 * mp.sin(mp.pi * p["s"] / 2))
    / mp.cos(mp.pi * p["s"] / 2) ** 2,
    (Param("s", "0.5", lambda v: abs(v) < 1, "requires |s| < 1"),
     Param("x", "2", lambda v: v > 0, "requires x > 0")),
)

_register(
    "EQ_1_23",
    "int_0^oo log u/(x^2+u^2) du equals pi log(x)/(2x)",
    lambda ctx, p: quadrature.log_weighted_algebraic(0, p["x"], ctx.qtol, ctx.cfg)[1],
    lambda ctx, p: mp.pi / (2 * p["x"]) * mp.log(p["x"]),
    (Param("x", str(mp.e), lambda v: v > 0, "requires x > 0"),),
)

_register(
    "EQ_2_1",
    "zeta(s) on (0,2) from the trigamma-kernel integral versus the "
    "Euler-Maclaurin oracle",
    lambda ctx, p: zeta_debruijn(p["s"], ctx=ctx),
    lambda ctx, p: zeta_em(p["s"], ctx.cfg),
    (Param("s", "0.5", lambda v: 0 < v < 2 and v != 1, "0 < s < 2, s != 1"),),
)

_register(
    "EQ_2_2",
    "int_0^oo [psi'(1+u) - 1/(1+u)] du equals Euler's constant",
    lambda ctx, p: ctx.kernel_integral("B", 0),
    lambda ctx, p: stieltjes_oracle(0, ctx.cfg),
)

_register(
    "EQ_2_3",
    "gamma_n from the Bell-weighted trigamma-kernel moments versus the "
    "limit-definition oracle",
    lambda ctx, p: stieltjes_bell_2_3(int(p["n"]), ctx=ctx),
    lambda ctx, p: stieltjes_oracle(int(p["n"]), ctx.cfg),
    (Param("n", "2", lambda v: 0 <= v <= 8 and v == int(v), "integer 0 <= n <= 8"),),
)

_register(
    "EQ_2_4",
    "int_0^oo [psi'(1+u) - 1/(1+u)] log u du equals gamma_1",
    lambda ctx, p: ctx.kernel_integral("B", 1),
    lambda ctx, p: stieltjes_oracle(1, ctx.cfg),
)


def _eq_2_5_rhs(ctx: EvalContext, p: dict) -> mpf:
    n = int(p["n"])
    acc = mpf(0)
    for k in range(n + 1):
        y = _bell_psi_value(k, +1, ctx.cfg)
        if y == 0:
            continue
        acc += comb(n, k) * (-1) ** k * y * stieltjes_oracle(n - k, ctx.cfg)
    return acc


_register(
    "EQ_2_5",
    "log-moment of the trigamma kernel versus its Bell expansion in "
    "Stieltjes constants",
    lambda ctx, p: ctx.kernel_integral("B", int(p["n"])),
    _eq_2_5_rhs,
    (Param("n", "2", lambda v: 0 <= v <= 8 and v == int(v), "integer 0 <= n <= 8"),),
)

_register(
    "EQ_2_6",
    "int_1^oo [log u - log(1+u)]/u du equals -zeta(2)/2",
    lambda ctx, p: ctx.integrate(
        lambda u: -mp.log1p(1 / u) / u,
        Domain.semi_infinite(a=1, decay="algebraic", decay_p=2),
        "log-ratio integral"),
    lambda ctx, p: -zeta_em(2, ctx.cfg) / 2,
)

_register(
    "EQ_2_7",
    "split digamma integrals summing to zeta(2) - gamma_1",
    lambda ctx, p: ctx.integrate(
        lambda u: (digamma(1 + u, ctx.cfg) + stieltjes_oracle(0, ctx.cfg)) / u,
        Domain.finite(0, 1), "digamma integral on (0,1)")
    + ctx.integrate(
        lambda u: -kernel_dbk(u, ctx.cfg) / u,
        Domain.semi_infinite(a=1, decay="algebraic", decay_p=2),
        "digamma integral on (1,oo)"),
    lambda ctx, p: zeta_em(2, ctx.cfg) - stieltjes_oracle(1, ctx.cfg),
)

_register(
    "EQ_2_8",
    "int_0^1 [psi(1+u) + gamma]/u du equals the log(n+1)/(n(n+1)) series",
    lambda ctx, p: ctx.integrate(
        lambda u: (digamma(1 + u, ctx.cfg) + stieltjes_oracle(0, ctx.cfg)) / u,
        Domain.finite(0, 1), "digamma integral on (0,1)"),
    lambda ctx, p: cohen_series(max(ctx.qtol, mpf("1e-25")), ctx.cfg),
)

_register(
    "EQ_2_9_10",
    "difference of the split log-moment halves of the trigamma kernel "
    "versus its series/Stieltjes closed combination",
    lambda ctx, p: ctx.integrate(
        lambda u: kernel_b(u, ctx.cfg) * mp.log(u),
        Domain.semi_infinite(a=1, decay="algebraic", decay_p=2, log_power=1),
        "kernel log moment on (1,oo)")
    - ctx.integrate(
        lambda u: kernel_b(u, ctx.cfg) * mp.log(u),
        Domain.finite(0, 1), "kernel log moment on (0,1)"),
    lambda ctx, p: 2 * cohen_series(max(ctx.qtol, mpf("1e-25")), ctx.cfg)
    + stieltjes_oracle(1, ctx.cfg) - zeta_em(2, ctx.cfg),
)

_register(
    "EQ_2_11_12",
    "int_0^1 psi'(1+u) log u du equals minus the log(n+1)/(n(n+1)) series",
    lambda ctx, p: ctx.integrate(
        lambda u: polygamma(1, 1 + u, ctx.cfg) * mp.log(u),
        Domain.finite(0, 1), "trigamma log integral"),
    lambda ctx, p: -cohen_series(max(ctx.qtol, mpf("1e-25")), ctx.cfg),
)

_register(
    "EQ_2_13",
    "gamma_n from the sine-prefactor Leibniz route versus the oracle",
    lambda ctx, p: stieltjes_leibniz_2_13(int(p["n"]), ctx=ctx),
    lambda ctx, p: stieltjes_oracle(int(p["n"]), ctx.cfg),
    (Param("n", "1", lambda v: 0 <= v <= 7 and v == int(v), "integer 0 <= n <= 7"),),
)


def _hurwitz_oracle(ctx: EvalContext, s: mpf, u: mpf) -> mpf:
    """zeta(s,u) for integer or half-integer u via shifts of zeta(s)."""
    cfg = ctx.cfg
    z = zeta_em(s, cfg)
    twice = 2 * u
    if twice != int(twice):
        raise DomainError("oracle needs 2u integral")
    if u == int(u):
        m = int(u)
        return z - mp.fsum(mpf(k) ** (-s) for k in range(1, m))
    m = int(u - mpf(1) / 2)
    base = (2 ** s - 1) * z
    return base - mp.fsum((k + mpf(1) / 2) ** (-s) for k in range(m))


_register(
    "EQ_3_3",
    "Hurwitz zeta by the arctan-kernel integral versus shifted "
    "Euler-Maclaurin zeta values",
    lambda ctx, p: hurwitz_hermite(p["s"], p["u"], ctx.qtol, ctx.cfg),
    lambda ctx, p: _hurwitz_oracle(ctx, p["s"], p["u"]),
    (Param("s", "2", lambda v: v != 1, "s != 1"),
     Param("u", "1", lambda v: v > 0 and 2 * v == int(2 * v),
           "u > 0 with 2u integral")),
)

_register(
    "EQ_3_5",
    "log Gamma by the arctan Bose integral versus the exact factorial form",
    lambda ctx, p: log_gamma_binet(p["u"], ctx.qtol, ctx.cfg),
    lambda ctx, p: log_gamma_closed(p["u"], ctx.cfg),
    (Param("u", "0.5", lambda v: v > 0 and 2 * v == int(2 * v),
           "u > 0 with 2u integral"),),
)

_register(
    "LERCH",
    "s-derivative of Hurwitz zeta at 0 versus log Gamma(u) - log(2 pi)/2 "
    "with log Gamma in exact factorial form",
    lambda ctx, p: (p["u"] - mpf(1) / 2) * mp.log(p["u"]) - p["u"]
    + 2 * k_func(p["u"], ctx.qtol, ctx.cfg),
    lambda ctx, p: log_gamma_closed(p["u"], ctx.cfg) - mp.log(2 * mp.pi) / 2,
    (Param("u", "5", lambda v: v > 0 and 2 * v == int(2 * v),
           "u > 0 with 2u integral"),),
)

_register(
    "EQ_3_6",
    "second s-derivative of Hurwitz zeta at 0: log-arctan Bose integral "
    "route versus shifted-digamma log-moment route",
    lambda ctx, p: zeta_dd0_u_log_integral(ctx, p["u"]),
    lambda ctx, p: zeta_dd0_u_shifted_integral(ctx, p["u"]),
    (_p_u_pos("0.5"),),
)

_register(
    "EQ_3_7",
    "int_0^oo log t/((t+u)^2+x^2) dt equals log(u^2+x^2) arctan(x/u)/(2x)",
    lambda ctx, p: ctx.log_weight(
        lambda t: 1 / ((t + p["u"]) ** 2 + p["x"] ** 2), 1,
        "shifted Cauchy log moment"),
    lambda ctx, p: mp.log(p["u"] ** 2 + p["x"] ** 2) * mp.atan(p["x"] / p["u"])
    / (2 * p["x"]),
    (_p_u_pos(), Param("x", "1", lambda v: v > 0, "requires x > 0")),
)

_register(
    "EQ_3_8",
    "digamma recovered from its Bose-kernel integral representation",
    lambda ctx, p: digamma(p["u"], ctx.cfg),
    lambda ctx, p: -1 / (2 * p["u"]) + mp.log(p["u"]) - 2 * ctx.integrate(
        lambda x: x / ((p["u"] ** 2 + x * x) * mp.expm1(2 * mp.pi * x)),
        Domain.semi_infinite(decay="exponential"), "Bose moment"),
    (_p_u_pos(),),
)

_register(
    "EQ_3_10",
    "the log-arctan Bose integral equals minus the shifted-digamma "
    "log moment",
    lambda ctx, p: j_func(p["u"], ctx.qtol, ctx.cfg),
    lambda ctx, p: -ctx.log_weight(
        lambda t: psi_reg(t + p["u"], ctx.cfg), 1, "shifted psi log moment"),
    (_p_u_pos(),),
)

_register(
    "EQ_3_11",
    "second s-derivative of Hurwitz zeta at 0, both integral routes "
    "(complementary default parameter to EQ_3_6)",
    lambda ctx, p: zeta_dd0_u_shifted_integral(ctx, p["u"]),
    lambda ctx, p: zeta_dd0_u_log_integral(ctx, p["u"]),
    (_p_u_pos("2"),),
)

_register(
    "EQ_3_12",
    "zeta''(0) from the shifted-digamma log moment at unit offset versus "
    "its Stieltjes closed form",
    lambda ctx, p: -2 + 2 * ctx.log_weight(
        lambda t: psi_reg(t + 1, ctx.cfg), 1, "shifted psi log moment"),
    lambda ctx, p: zeta_dd0_ramanujan(ctx.cfg),
)

_register(
    "EQ_3_13",
    "int_0^oo [log u - log(1+u) + 1/(1+u)] log u du equals 1 exactly",
    lambda ctx, p: ctx.log_weight(
        lambda u: log_ratio_reg(u, ctx.cfg), 1, "log-ratio log moment"),
    lambda ctx, p: mpf(1),
)

_register(
    "EQ_3_13_1",
    "gamma_1(u): trigamma-remainder route versus the route keeping the "
    "1/(2(t+u)^2) term explicit",
    lambda ctx, p: gamma1_of_u(p["u"], ctx=ctx),
    lambda ctx, p: mp.log(p["u"]) / (2 * p["u"]) - mp.log(p["u"]) ** 2 / 2
    + ctx.log_weight(lambda t: psi1_reg2(t + p["u"], ctx.cfg), 1,
                     "trigamma remainder log moment"),
    (_p_u_pos("2"),),
)

_register(
    "EQ_3_13_2",
    "gamma_1(1) from the generalized-constant evaluator versus the oracle",
    lambda ctx, p: gamma1_of_u(1, ctx=ctx),
    lambda ctx, p: stieltjes_oracle(1, ctx.cfg),
)

_register(
    "EQ_3_13_3_CHOI",
    "gamma_1(u) by the two Bose-kernel x-integrals versus the "
    "trigamma-remainder route",
    lambda ctx, p: gamma1_of_u_choi(p["u"], ctx=ctx),
    lambda ctx, p: gamma1_of_u(p["u"], ctx=ctx),
    (_p_u_pos("2"),),
)

_register(
    "JKH_ALGEBRA",
    "Fermi-kernel log-arctan integral as a half-argument combination of "
    "the Bose-kernel ones",
    lambda ctx, p: h_func(p["u"], ctx.qtol, ctx.cfg),
    lambda ctx, p: 2 * (2 * k_func(p["u"] / 2, ctx.qtol, ctx.cfg) * mp.log(2)
                        + j_func(p["u"] / 2, ctx.qtol, ctx.cfg)
                        - j_func(p["u"], ctx.qtol, ctx.cfg)),
    (_p_u_pos(),),
)

_register(
    "HPRIME_1",
    "Fermi-kernel arctan/log pair at unit argument versus "
    "gamma_1 + gamma log 2 - log^2(2)/2",
    lambda ctx, p: 2 * ctx.integrate(
        lambda x: mp.atan(x) / ((1 + x * x) * (mp.exp(mp.pi * x) + 1)),
        Domain.semi_infinite(decay="exponential"), "Fermi arctan moment")
    - ctx.integrate(
        lambda x: x * mp.log(1 + x * x) / ((1 + x * x) * (mp.exp(mp.pi * x) + 1)),
        Domain.semi_infinite(decay="exponential"), "Fermi log moment"),
    lambda ctx, p: stieltjes_oracle(1, ctx.cfg)
    + stieltjes_oracle(0, ctx.cfg) * mp.log(2) - mp.log(2) ** 2 / 2,
)

_register(
    "SE_INTEGRAL",
    "Fermi arctan moment equals pi^2/16 - 1/4 - S/4 with S the "
    "log(n+1)/(n(n+1)) series",
    lambda ctx, p: ctx.integrate(
        lambda x: mp.atan(x) / ((1 + x * x) * (mp.exp(mp.pi * x) + 1)),
        Domain.semi_infinite(decay="exponential"), "Fermi arctan moment"),
    lambda ctx, p: mp.pi ** 2 / 16 - mpf(1) / 4
    - cohen_series(max(ctx.qtol, mpf("1e-25")), ctx.cfg) / 4,
)

_register(
    "EQ_3_14",
    "shifted digamma remainder equals its exponential-argument Bose moment",
    lambda ctx, p: psi_reg(p["w"], ctx.cfg),
    lambda ctx, p: -2 * ctx.integrate(
        lambda x: x / ((1 + x * x) * mp.expm1(2 * mp.pi * p["w"] * x)),
        Domain.semi_infinite(decay="exponential"), "exponential Bose moment"),
    (Param("w", "1.5", lambda v: v > 0, "requires w > 0"),),
)

_register(
    "EQ_3_15",
    "log(1 - e^(-2 pi u x)) Cauchy moment equals -2 u pi times the arctan "
    "Bose moment",
    lambda ctx, p: ctx.integrate(
        lambda x: mp.log(-mp.expm1(-2 * mp.pi * p["u"] * x)) / (1 + x * x),
        Domain.semi_infinite(decay="exponential"), "log Bose moment"),
    lambda ctx, p: -2 * p["u"] * mp.pi * ctx.integrate(
        lambda x: mp.atan(x) / mp.expm1(2 * mp.pi * p["u"] * x),
        Domain.semi_infinite(decay="exponential"), "arctan Bose moment"),
    (_p_u_pos(),),
)

_register(
    "EQ_3_16_17",
    "integrated digamma remainder versus its closed form in log Gamma",
    lambda ctx, p: i_func(p["u"], ctx.qtol, ctx.cfg),
    lambda ctx, p: i_func_closed(p["u"], ctx.qtol, ctx.cfg),
    (_p_u_pos(),),
)

_register(
    "EQ_3_18",
    "int_0^oo [psi'(t+u) - 1/(t+u)] dt equals log u - psi(u)",
    lambda ctx, p: ctx.integrate(
        lambda t: psi1_reg(t + p["u"], ctx.cfg),
        Domain.semi_infinite(decay="algebraic", decay_p=2),
        "trigamma remainder integral"),
    lambda ctx, p: mp.log(p["u"]) - digamma(p["u"], ctx.cfg),
    (_p_u_pos("3"),),
)
