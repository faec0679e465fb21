"""Deterministic double-exponential quadrature for the integral classes here.

Finite panels use the tanh-sinh rule, whose variable change flattens
endpoint log-power and integrable algebraic singularities.  Semi-infinite
integrals are split at 1: exponentially decaying tails go through a
one-sided exp-sinh map, algebraically decaying tails are folded onto (0,1]
by u -> 1/t, which turns a log^k weight at infinity into a log-power
endpoint singularity that tanh-sinh absorbs.

Abscissas are never generated exactly at an endpoint: each node is stored
as its distance from the endpoint (computed cancellation-free), so
integrands may blow up at panel ends and still be sampled safely.
Node/weight tables are cached per (precision, map, level) and summation
order is fixed, making results bit-identical for identical inputs.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable, Optional

from mpmath import mp, mpf

from .precision import DomainError, PrecisionConfig, resolve

__all__ = [
    "Domain",
    "QuadResult",
    "IntegrandError",
    "integrate",
    "integrate_with_log_weight",
    "log_weighted_algebraic",
    "log_weighted_algebraic_full",
]

LEVEL_CAP = 12
_MIN_LEVEL = 2
_TRUNC_RUN = 2       # consecutive negligible node pairs before a level stops
_HARD_T_MAX = 12.0   # lattice never extends past |t| = 12


class IntegrandError(ArithmeticError):
    """Integrand returned a non-finite value at an interior node."""


@dataclass(frozen=True)
class Domain:
    """Integration domain description.

    kind: "finite" on [a, b] or "semi_infinite" on [a, oo).
    log_power: order k of an integrable log^k singularity at the left
        endpoint (informational; the tanh-sinh map absorbs it).
    decay: for semi-infinite domains, "exponential" or "algebraic";
        algebraic decay |f| ~ u^-p requires p > 1.
    """

    kind: str
    a: float | mpf = 0
    b: float | mpf | None = None
    log_power: int = 0
    decay: str = "exponential"
    decay_p: float = 2.0

    @staticmethod
    def finite(a, b, log_power: int = 0) -> "Domain":
        if not (a < b):
            raise ValueError("finite domain requires a < b")
        return Domain(kind="finite", a=a, b=b, log_power=log_power)

    @staticmethod
    def semi_infinite(a=0, decay: str = "exponential", decay_p: float = 2.0,
                      log_power: int = 0) -> "Domain":
        if a < 0:
            raise ValueError("semi-infinite domain requires a >= 0")
        if decay not in ("exponential", "algebraic"):
            raise ValueError(f"unknown decay class {decay!r}")
        if decay == "algebraic" and not decay_p > 1:
            raise ValueError("algebraic decay requires p > 1 for convergence")
        return Domain(kind="semi_infinite", a=a, decay=decay, decay_p=decay_p,
                      log_power=log_power)


@dataclass(frozen=True)
class QuadResult:
    value: mpf
    err_estimate: mpf
    evaluations: int
    converged: bool

    def require_converged(self, what: str = "integral") -> "QuadResult":
        if not self.converged:
            raise IntegrandError(
                f"{what} did not converge (err~{mp.nstr(self.err_estimate, 3)} "
                f"after {self.evaluations} evaluations)")
        return self


_cache_lock = threading.Lock()
_node_cache: dict[tuple, list] = {}


def _ts_nodes(dps: int, level: int, count: int) -> list:
    """First `count` tanh-sinh node records for a refinement level.

    Level 0 walks t = 1, 2, ...; level L >= 1 walks the odd multiples of
    2^-L.  Each record is (delta, w) with delta = 1 - tanh((pi/2) sinh t)
    computed as 2/(exp(2z)+1), so tiny endpoint distances keep full
    relative accuracy.
    """
    key = (dps, "ts", level)
    with _cache_lock:
        nodes = _node_cache.setdefault(key, [])
        if len(nodes) >= count:
            return nodes
        with mp.workdps(dps):
            h = mpf(2) ** (-level)
            i = len(nodes)
            while len(nodes) < count:
                t = (i + 1) * h if level == 0 else (2 * i + 1) * h
                if t > _HARD_T_MAX:
                    break
                z = mp.pi / 2 * mp.sinh(t)
                delta = 2 / (mp.exp(2 * z) + 1)
                w = mp.pi / 2 * mp.cosh(t) / mp.cosh(z) ** 2
                nodes.append((delta, w))
                i += 1
        return nodes


def _es_nodes(dps: int, level: int, count: int) -> list:
    """Exp-sinh node records (xp, wp, xm, wm) for x = exp((pi/2) sinh t)."""
    key = (dps, "es", level)
    with _cache_lock:
        nodes = _node_cache.setdefault(key, [])
        if len(nodes) >= count:
            return nodes
        with mp.workdps(dps):
            h = mpf(2) ** (-level)
            i = len(nodes)
            while len(nodes) < count:
                t = (i + 1) * h if level == 0 else (2 * i + 1) * h
                if t > _HARD_T_MAX:
                    break
                z = mp.pi / 2 * mp.sinh(t)
                base = mp.pi / 2 * mp.cosh(t)
                xp = mp.exp(z)
                nodes.append((xp, base * xp, 1 / xp, base / xp))
                i += 1
        return nodes


def clear_caches() -> None:
    with _cache_lock:
        _node_cache.clear()


class _Tally:
    __slots__ = ("evals",)

    def __init__(self) -> None:
        self.evals = 0


def _check_finite(y: mpf, x: mpf) -> mpf:
    if not mp.isfinite(y):
        raise IntegrandError(f"non-finite integrand value at x = {mp.nstr(mpf(x), 10)}")
    return y


def _de_panel(pair_at: Callable[[int, int], mpf], center: Callable[[], mpf],
              tol: mpf, dps: int, max_level: int) -> tuple[mpf, mpf, bool]:
    """Generic double-exponential refinement loop.

    pair_at(level, i) returns the summed weighted contribution of the
    symmetric node pair i at `level`; center() the t = 0 contribution.
    Each level must walk at least as far out in t as any earlier level
    reached, so successive composite sums always refine a common lattice
    span and never un-cover the tail.  Returns (value, err, converged).
    """
    with mp.workdps(dps):
        trunc_floor = mpf(10) ** (-(dps + 5))
        trunc = max(tol * mpf("1e-5"), trunc_floor)
        total = center()
        prev = None
        value = err = None
        t_reach = 0.0
        for level in range(max_level + 1):
            h = mpf(2) ** (-level)
            i = 0
            small = 0
            while True:
                t = float((i + 1) * h if level == 0 else (2 * i + 1) * h)
                c = pair_at(level, i)
                if c is None:  # lattice exhausted
                    break
                total += c
                if abs(c) < trunc * (1 + abs(total) * h):
                    small += 1
                    if small >= _TRUNC_RUN and t >= t_reach:
                        break
                else:
                    small = 0
                i += 1
            t_reach = max(t_reach, t)
            value = h * total
            if prev is not None:
                err = abs(value - prev)
                if level >= _MIN_LEVEL and err <= tol:
                    return value, max(err, trunc_floor * (1 + abs(value))), True
            prev = value
        return value, max(err, trunc_floor * (1 + abs(value))), False


def _tanh_sinh_finite(f, a, b, tol, dps: int, tally: _Tally,
                      max_level: int = LEVEL_CAP) -> QuadResult:
    """Tanh-sinh rule on [a, b]; f is never called at the endpoints."""
    with mp.workdps(dps):
        a = mpf(a)
        b = mpf(b)
        rad = (b - a) / 2
        mid = (a + b) / 2

        def center() -> mpf:
            tally.evals += 1
            return mp.pi / 2 * _check_finite(f(mid), mid)

        def pair_at(level: int, i: int) -> Optional[mpf]:
            nodes = _ts_nodes(dps, level, i + 1)
            if i >= len(nodes):
                return None
            delta, w = nodes[i]
            d = rad * delta
            xl = a + d
            xr = b - d
            tally.evals += 2
            return w * (_check_finite(f(xl), xl) + _check_finite(f(xr), xr))

        value, err, ok = _de_panel(pair_at, center, mpf(tol) / rad, dps, max_level)
        return QuadResult(rad * value, rad * err, tally.evals, ok)


def _exp_sinh_tail(f, a, tol, dps: int, tally: _Tally,
                   max_level: int = LEVEL_CAP) -> QuadResult:
    """Exp-sinh rule on [a, oo) for exponentially decaying integrands."""
    with mp.workdps(dps):
        a = mpf(a)

        def center() -> mpf:
            x = a + 1
            tally.evals += 1
            return mp.pi / 2 * _check_finite(f(x), x)

        def pair_at(level: int, i: int) -> Optional[mpf]:
            nodes = _es_nodes(dps, level, i + 1)
            if i >= len(nodes):
                return None
            xp, wp, xm, wm = nodes[i]
            tally.evals += 2
            return wp * _check_finite(f(a + xp), a + xp) + \
                wm * _check_finite(f(a + xm), a + xm)

        value, err, ok = _de_panel(pair_at, center, mpf(tol), dps, max_level)
        return QuadResult(value, err, tally.evals, ok)


def _resolve_tol(tol, cfg: PrecisionConfig) -> mpf:
    t = mpf(tol)
    if t < cfg.min_tolerance():
        raise ValueError(
            f"tolerance {tol} below 10^-(working_digits-8) resolution "
            f"for {cfg.working_digits} working digits")
    return t


def _combine(parts: list[QuadResult]) -> QuadResult:
    value = mpf(0)
    err = mpf(0)
    evals = 0
    ok = True
    for p in parts:
        value += p.value
        err += p.err_estimate
        evals += p.evaluations
        ok = ok and p.converged
    return QuadResult(value, err, evals, ok)


def integrate(f: Callable[[mpf], mpf], d: Domain, tol,
              cfg: PrecisionConfig | None = None) -> QuadResult:
    """Integrate f over domain d to absolute tolerance tol.

    converged=False (never a silently wrong value) when the level cap is
    reached before successive refinements agree to tol.
    """
    cfg = resolve(cfg)
    with cfg.workdps():
        tol = _resolve_tol(tol, cfg)
        dps = cfg.dps
        if d.kind == "finite":
            return _tanh_sinh_finite(f, d.a, d.b, tol, dps, _Tally())
        if d.kind != "semi_infinite":
            raise ValueError(f"unknown domain kind {d.kind!r}")
        a = mpf(d.a)
        parts: list[QuadResult] = []
        if d.decay == "exponential":
            if a < 1:
                parts.append(_tanh_sinh_finite(f, a, 1, tol / 2, dps, _Tally()))
                parts.append(_exp_sinh_tail(f, 1, tol / 2, dps, _Tally()))
            else:
                parts.append(_exp_sinh_tail(f, a, tol, dps, _Tally()))
            return _combine(parts)
        # algebraic decay: fold the tail onto (0, 1/max(a,1)] by u -> 1/t
        cut = mpf(1) if a < 1 else a

        def folded(t: mpf) -> mpf:
            return f(1 / t) / (t * t)

        if a < 1:
            parts.append(_tanh_sinh_finite(f, a, 1, tol / 2, dps, _Tally()))
            parts.append(_tanh_sinh_finite(folded, 0, 1, tol / 2, dps, _Tally()))
        else:
            parts.append(_tanh_sinh_finite(folded, 0, 1 / cut, tol, dps, _Tally()))
        return _combine(parts)


def integrate_with_log_weight(f: Callable[[mpf], mpf], k: int, tol,
                              cfg: PrecisionConfig | None = None) -> QuadResult:
    """Integral of f(u) * log(u)**k over (0, oo) for u^-2-class integrands.

    Split at 1; the reciprocal map turns the tail's log^k weight into a
    log-power singularity at 0 that the tanh-sinh map handles.
    """
    if not 0 <= k <= 9:
        raise DomainError(f"log weight order k={k} outside 0..9")
    cfg = resolve(cfg)
    with cfg.workdps():
        tol = _resolve_tol(tol, cfg)
        dps = cfg.dps

        def low(u: mpf) -> mpf:
            return f(u) * mp.log(u) ** k if k else f(u)

        def high(t: mpf) -> mpf:
            g = f(1 / t) / (t * t)
            return g * (-mp.log(t)) ** k if k else g

        parts = [
            _tanh_sinh_finite(low, 0, 1, tol / 2, dps, _Tally()),
            _tanh_sinh_finite(high, 0, 1, tol / 2, dps, _Tally()),
        ]
        return _combine(parts)


def log_weighted_algebraic_full(s, x, tol, cfg: PrecisionConfig | None = None
                                ) -> tuple[QuadResult, QuadResult]:
    """Full results behind log_weighted_algebraic (value + cost metadata)."""
    cfg = resolve(cfg)
    with cfg.workdps():
        s = mpf(s)
        x = mpf(x)
        if not abs(s) < 1:
            raise DomainError("require |s| < 1")
        if not x > 0:
            raise DomainError("require x > 0")
        tol = _resolve_tol(tol, cfg)
        dps = cfg.dps
        x2 = x * x

        def plain_low(u: mpf) -> mpf:
            return u ** (-s) / (x2 + u * u)

        def plain_high(t: mpf) -> mpf:
            return t ** s / (x2 * t * t + 1)

        def logw_low(u: mpf) -> mpf:
            return u ** (-s) * mp.log(u) / (x2 + u * u)

        def logw_high(t: mpf) -> mpf:
            return -(t ** s) * mp.log(t) / (x2 * t * t + 1)

        plain = _combine([
            _tanh_sinh_finite(plain_low, 0, 1, tol / 2, dps, _Tally()),
            _tanh_sinh_finite(plain_high, 0, 1, tol / 2, dps, _Tally()),
        ]).require_converged("u^-s/(x^2+u^2) integral")
        logw = _combine([
            _tanh_sinh_finite(logw_low, 0, 1, tol / 2, dps, _Tally()),
            _tanh_sinh_finite(logw_high, 0, 1, tol / 2, dps, _Tally()),
        ]).require_converged("u^-s log u/(x^2+u^2) integral")
        return plain, logw


def log_weighted_algebraic(s, x, tol, cfg: PrecisionConfig | None = None
                           ) -> tuple[mpf, mpf]:
    """The pair (int u^-s/(x^2+u^2) du, int u^-s log u/(x^2+u^2) du) on (0, oo).

    Valid for |s| < 1, x > 0; both integrals are evaluated by the split
    strategy and must converge.
    """
    plain, logw = log_weighted_algebraic_full(s, x, tol, cfg)
    return plain.value, logw.value
