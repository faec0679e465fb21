"""Catalog mechanics, representative identity runs, and the series routes.

The full catalog sweep at the default tolerance lives in the acceptance
module; here each piece of machinery is exercised at specific parameters
with oracle-derived expectations.
"""

import pytest
from mpmath import mp, mpf

from zetabench.precision import ConvergenceError, DomainError, PrecisionConfig
from zetabench import identities as idn
from zetabench.specfun import stieltjes_oracle, zeta_em

CFG = PrecisionConfig()
mp.dps = CFG.dps

ZETA_HALF = mpf("-1.46035450880958681288949915251529801246723")
ZETA_3HALF = mpf("2.6123753486854883433485675679240716305708")
S_COHEN = mpf("1.25774688694436963000989983049588152851154")

EXPECTED_IDS = [
    "EQ_1_1", "EQ_1_2", "EQ_1_3", "EQ_1_5_6", "EQ_1_7", "EQ_1_8", "EQ_1_9",
    "EQ_1_10", "EQ_1_13", "EQ_1_16", "EQ_1_16_1", "EQ_1_18", "EQ_1_20",
    "EQ_1_22", "EQ_1_23", "EQ_2_1", "EQ_2_2", "EQ_2_3", "EQ_2_4", "EQ_2_5",
    "EQ_2_6", "EQ_2_7", "EQ_2_8", "EQ_2_9_10", "EQ_2_11_12", "EQ_2_13",
    "EQ_3_3", "EQ_3_5", "LERCH", "EQ_3_6", "EQ_3_7", "EQ_3_8", "EQ_3_10",
    "EQ_3_11", "EQ_3_12", "EQ_3_13", "EQ_3_13_1", "EQ_3_13_2",
    "EQ_3_13_3_CHOI", "JKH_ALGEBRA", "HPRIME_1", "SE_INTEGRAL", "EQ_3_14",
    "EQ_3_15", "EQ_3_16_17", "EQ_3_18",
]


def test_catalog_contents():
    assert set(idn.catalog_ids()) == set(EXPECTED_IDS)
    assert len(idn.catalog_ids()) == 46


def test_alias_resolution():
    assert idn.resolve_id("EQ_1_9_vs_1_10") == "EQ_1_9"
    with pytest.raises(KeyError):
        idn.resolve_id("EQ_9_9")


def test_every_record_has_self_contained_description():
    for rec in idn.catalog().values():
        assert rec.description
        assert rec.id == rec.id.strip()


def test_single_identity_run_shapes_residual():
    r = idn.evaluate_identity("EQ_3_13", tol="1e-10", cfg=CFG)
    assert r.passed
    assert abs(r.lhs_value - 1) < mpf("1e-10")
    assert r.abs_err == abs(r.lhs_value - r.rhs_value)
    assert r.evaluations > 0


def test_identity_with_parameters():
    r = idn.evaluate_identity("EQ_1_2", params={"s": "0.5"}, tol="1e-10", cfg=CFG)
    assert r.passed
    assert abs(r.lhs_value - mp.pi) < mpf("1e-10")


def test_parameter_domain_enforced():
    with pytest.raises(DomainError):
        idn.evaluate_identity("EQ_1_2", params={"s": "1.5"}, cfg=CFG)
    with pytest.raises(ValueError):
        idn.evaluate_identity("EQ_1_2", params={"q": "0.5"}, cfg=CFG)
    with pytest.raises(DomainError):
        idn.evaluate_identity("EQ_2_1", params={"s": "1"}, cfg=CFG)


def test_tolerance_floor_enforced():
    with pytest.raises(ValueError):
        idn.evaluate_identity("EQ_3_13", tol="1e-33", cfg=CFG)


def test_zeta_debruijn_matches_oracle():
    assert abs(idn.zeta_debruijn("0.5", mpf("1e-25"), CFG) - ZETA_HALF) < mpf("1e-24")
    assert abs(idn.zeta_debruijn("1.5", mpf("1e-25"), CFG) - ZETA_3HALF) < mpf("1e-24")


def test_zeta_debruijn_brackets_euler_gamma_near_pole():
    gamma = stieltjes_oracle(0, CFG)
    lo = idn.zeta_debruijn("0.999", mpf("1e-20"), CFG) - 1 / (mpf("0.999") - 1)
    hi = idn.zeta_debruijn("1.001", mpf("1e-20"), CFG) - 1 / (mpf("1.001") - 1)
    assert min(lo, hi) < gamma < max(lo, hi)


def test_zeta_debruijn_domain():
    with pytest.raises(DomainError):
        idn.zeta_debruijn("2.5", None, CFG)
    with pytest.raises(DomainError):
        idn.zeta_debruijn("1", None, CFG)


def test_zeta_kloosterman_matches_oracle():
    assert abs(idn.zeta_kloosterman("0.5", mpf("1e-20"), CFG) - ZETA_HALF) < mpf("1e-19")
    assert abs(idn.zeta_kloosterman("0.25", mpf("1e-20"), CFG)
               - zeta_em("0.25", CFG)) < mpf("1e-19")


def test_zeta_representations_agree():
    a = idn.zeta_kloosterman("0.3", mpf("1e-20"), CFG)
    b = idn.zeta_debruijn("0.3", mpf("1e-20"), CFG)
    assert abs(a - b) < mpf("1e-19")


def test_zeta_kloosterman_domain():
    with pytest.raises(DomainError):
        idn.zeta_kloosterman("1.2", None, CFG)


def test_cohen_routes_agree_and_match_pin():
    routes = idn.cohen_routes("1e-12", CFG)
    assert set(routes) == {"direct", "alternating_zeta", "zeta_prime", "log_ratio"}
    vals = list(routes.values())
    for a in vals:
        for b in vals:
            assert abs(a - b) < mpf("1e-12")
    assert abs(routes["direct"] - S_COHEN) < mpf("1e-35")


def test_cohen_partial_sum_is_strictly_below():
    partial = mp.fsum(mp.log(n + 1) / (mpf(n) * (n + 1)) for n in range(1, 10))
    assert partial < idn.cohen_series("1e-10", CFG)
    assert abs(partial - mpf("0.92495")) < mpf("5e-5")


def test_cohen_tolerance_floor():
    with pytest.raises(ValueError):
        idn.cohen_routes("1e-26", CFG)


def test_weighted_kernel_integral_cached_cost_is_stable():
    v1, e1, n1 = idn.weighted_kernel_integral("A", 0, CFG)
    v2, e2, n2 = idn.weighted_kernel_integral("A", 0, CFG)
    assert v1 == v2 and e1 == e2 and n1 == n2
    assert n1 > 0


def test_bell_psi_args_structure():
    args = idn.bell_psi_args(4, +1, CFG)
    assert args[0] == 0 and args[2] == 0
    assert abs(args[1] - 2 * zeta_em(2, CFG)) < mpf("1e-38")
    assert abs(args[3] - 12 * zeta_em(4, CFG)) < mpf("1e-37")


def test_stieltjes_integral_routes_against_oracle():
    for n in (0, 1, 2):
        target = stieltjes_oracle(n, CFG)
        assert abs(idn.stieltjes_bell_2_3(n, CFG) - target) < mpf("1e-20")
        assert abs(idn.stieltjes_leibniz_2_13(n, CFG) - target) < mpf("1e-20")
        assert abs(idn.stieltjes_inversion_2_5(n, CFG) - target) < mpf("1e-20")


def test_zeta_deriv0_integral_routes():
    target1 = -mp.log(2 * mp.pi) / 2
    for fn in (idn.zeta_deriv0_integral_1_8, idn.zeta_deriv0_bell_1_16,
               idn.zeta_deriv0_leibniz_1_16_1):
        assert abs(fn(1, CFG) - target1) < mpf("1e-25")
    target2 = idn.zeta_dd0_ramanujan(CFG)
    for fn in (idn.zeta_deriv0_integral_1_8, idn.zeta_deriv0_bell_1_16,
               idn.zeta_deriv0_leibniz_1_16_1):
        assert abs(fn(2, CFG) - target2) < mpf("1e-25")


def test_gamma1_of_u_values():
    gamma = stieltjes_oracle(0, CFG)
    gamma1 = stieltjes_oracle(1, CFG)
    assert abs(idn.gamma1_of_u(1, mpf("1e-20"), CFG) - gamma1) < mpf("1e-19")
    closed_half = gamma1 - mp.log(2) ** 2 - 2 * gamma * mp.log(2)
    assert abs(idn.gamma1_of_u(mpf(1) / 2, mpf("1e-20"), CFG) - closed_half) < mpf("1e-19")
    # cross-route at u = 2
    a = idn.gamma1_of_u(2, mpf("1e-15"), CFG)
    b = idn.gamma1_of_u_choi(2, mpf("1e-15"), CFG)
    assert abs(a - b) < mpf("1e-12")


def test_eq_1_7_finite_difference_cross_check():
    r = idn.evaluate_identity("EQ_1_7", params={"s": "0.3", "n": 1},
                              tol="1e-8", cfg=CFG)
    assert r.passed, f"residual {r.abs_err}"
