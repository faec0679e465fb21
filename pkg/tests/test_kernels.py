"""Kernel evaluators: closed values, cancellation safety, named functions."""

import pytest
from mpmath import mp, mpf

from zetabench.precision import DomainError, PrecisionConfig
from zetabench.kernels import (
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
    kernel_eval,
    log_ratio_reg,
    named_function_eval,
    psi_reg,
    psi1_reg,
    psi1_reg2,
)
from zetabench.specfun import stieltjes_oracle, zeta_em

CFG = PrecisionConfig()
mp.dps = CFG.dps

# zeta''(0) assembled from oracle constants, pinned after computation
ZDD0 = mpf("-2.00635645590858485121010002672996043819899")


def test_kernel_a_at_one():
    gamma = stieltjes_oracle(0, CFG)
    assert abs(kernel_a(1, CFG) - (gamma - mpf(3) / 4)) < mpf("1e-38")


def test_kernel_b_at_one():
    assert abs(kernel_b(1, CFG) - (mp.pi ** 2 / 6 - mpf(3) / 2)) < mpf("1e-38")


def test_kernel_db_at_one():
    gamma = stieltjes_oracle(0, CFG)
    assert abs(kernel_db(1, CFG) - (mp.log(2) - 1 + gamma)) < mpf("1e-38")


@pytest.mark.parametrize("fn", [kernel_a, kernel_b, kernel_db, kernel_dbk,
                                psi_reg, psi1_reg, psi1_reg2, log_ratio_reg])
def test_cancellation_safety_at_huge_arguments(fn):
    """Kernel path vs brute subtraction at 120 digits: rel err < 1e-20."""
    big = PrecisionConfig(working_digits=120)
    for u in (mpf("1e6"), mpf(50), mpf("1e40")):
        ref = fn(u, big)
        val = fn(u, CFG)
        assert abs(val - ref) / abs(ref) < mpf("1e-20")


def test_kernel_a_leading_asymptote():
    u = mpf("1e6")
    lead = -5 / (12 * u * u)
    assert abs(kernel_a(u, CFG) / lead - 1) < mpf("1e-5")


def test_kernel_b_leading_asymptote():
    u = mpf("1e6")
    assert abs(kernel_b(u, CFG) / (1 / (2 * u * u)) - 1) < mpf("1e-5")


def test_bose_reg_series_matches_direct():
    big = PrecisionConfig(working_digits=110)
    for y in (mpf("0.999"), mpf("0.5"), mpf("1e-12")):
        # direct subtraction at high precision as the reference
        with big.workdps():
            ref = 1 / mp.expm1(y) - 1 / y
        assert abs(bose_reg(y, CFG) - ref) < mpf("1e-40")


def test_bose_reg_small_limit():
    assert abs(bose_reg(mpf("1e-30"), CFG) + mpf(1) / 2) < mpf("1e-30")


def test_kernel_eval_dispatch():
    assert kernel_eval("A", 2, CFG) == kernel_a(2, CFG)
    assert kernel_eval("B", 2, CFG) == kernel_b(2, CFG)
    assert kernel_eval("DB", 2, CFG) == kernel_db(2, CFG)
    with pytest.raises(KeyError):
        kernel_eval("C", 1, CFG)
    with pytest.raises(DomainError):
        kernel_eval("A", 0, CFG)


def test_k_function_value():
    assert abs(k_func(1, None, CFG) - (mpf(1) / 2 - mp.log(2 * mp.pi) / 4)) < mpf("1e-28")


def test_i_function_closed_and_quadrature_agree():
    for u in (mpf(1) / 2, mpf(1), mpf(3)):
        assert abs(i_func(u, None, CFG) - i_func_closed(u, None, CFG)) < mpf("1e-25")


def test_i_function_at_one():
    assert abs(i_func_closed(1, None, CFG) - (mp.log(2 * mp.pi) / 2 - 1)) < mpf("1e-38")


def test_j_function_at_one():
    # J(1) = -1 - zeta''(0)/2, resolved through the oracle assembly
    assert abs(j_func(1, None, CFG) - (-1 - ZDD0 / 2)) < mpf("1e-25")


def test_named_function_dispatch():
    assert named_function_eval("K", 1, None, CFG) == k_func(1, None, CFG)
    assert named_function_eval("I", 1, None, CFG) == i_func(1, None, CFG)
    with pytest.raises(KeyError):
        named_function_eval("Q", 1, None, CFG)


def test_h_function_half_argument_relation():
    u = mpf(1)
    lhs = h_func(u, None, CFG)
    rhs = 2 * (2 * k_func(u / 2, None, CFG) * mp.log(2)
               + j_func(u / 2, None, CFG) - j_func(u, None, CFG))
    assert abs(lhs - rhs) < mpf("1e-25")
