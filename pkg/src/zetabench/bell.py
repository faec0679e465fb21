"""Complete and partial exponential Bell polynomials over exact entries.

Entries are 1-based mathematically: a Python sequence ``x`` supplies
x_1 = x[0], x_2 = x[1], ...  Exact inputs (int / Fraction) stay exact all
the way through; mpf entries are carried in mpf arithmetic with exact
rational coefficient prefactors.  Two independent algorithms are provided
for the complete polynomial (partition enumeration and the binomial
recurrence) so each can serve as the other's oracle.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

__all__ = [
    "bell_complete_partition",
    "bell_complete_recurrence",
    "bell_partial",
    "bell_invert",
]


def _entries(x: Sequence, need: int, who: str) -> tuple:
    if len(x) < need:
        raise ValueError(f"{who}: got {len(x)} entries, need at least {need}")
    return tuple(Fraction(v) if isinstance(v, int) else v for v in x)


def _partition_multiplicities(n: int) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors (k_1..k_n) with sum j*k_j = n, lexicographic."""
    ks = [0] * n

    def rec(j: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if j > n:
            if remaining == 0:
                yield tuple(ks)
            return
        for k in range(remaining // j + 1):
            ks[j - 1] = k
            yield from rec(j + 1, remaining - j * k)
        ks[j - 1] = 0

    yield from rec(1, n)


def bell_complete_partition(x: Sequence, n: int):
    """Y_n(x_1..x_n) by summing over all partitions of n.

    Each partition with multiplicities k_j contributes
    n!/(k_1!..k_n!) * prod_j (x_j/j!)**k_j.  Y_0 = 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    xs = _entries(x, n, "bell_complete_partition")
    total = None
    n_fact = factorial(n)
    for ks in _partition_multiplicities(n):
        term = Fraction(n_fact)
        for j, k in enumerate(ks, start=1):
            if k == 0:
                continue
            term = term / factorial(k)
            term = term * (xs[j - 1] / factorial(j)) ** k
        total = term if total is None else total + term
    return total


def bell_complete_recurrence(x: Sequence, n: int):
    """Y_n(x_1..x_n) via Y_{m+1} = sum_i C(m,i) Y_{m-i} x_{i+1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    xs = _entries(x, n, "bell_complete_recurrence")
    ys = [Fraction(1)]  # Y_0
    for m in range(n):
        acc = None
        for i in range(m + 1):
            term = comb(m, i) * ys[m - i] * xs[i]
            acc = term if acc is None else acc + term
        ys.append(acc)
    return ys[n]


def bell_partial(n: int, k: int, x: Sequence):
    """Partial Bell polynomial B_{n,k}(x_1..x_{n-k+1}).

    Satisfies Y_n = sum_{k=1}^{n} B_{n,k} for n >= 1; B_{0,0} = 1.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    if n == 0:
        return Fraction(1)
    if k == 0:
        return Fraction(0)
    xs = _entries(x, n - k + 1, "bell_partial")
    # B_{nn,kk} = sum_j C(nn-1, j-1) x_j B_{nn-j, kk-1}; only pairs with
    # nn - kk <= n - k feed the target, and they stay within the entries.
    table: dict[tuple[int, int], object] = {(0, 0): Fraction(1)}
    for nn in range(1, n + 1):
        for kk in range(max(1, nn - (n - k)), min(k, nn) + 1):
            acc = None
            for j in range(1, nn - kk + 2):
                prev = table.get((nn - j, kk - 1))
                if prev is None:
                    continue
                term = comb(nn - 1, j - 1) * xs[j - 1] * prev
                acc = term if acc is None else acc + term
            table[(nn, kk)] = acc if acc is not None else Fraction(0)
    return table[(n, k)]


def bell_invert(y: Sequence):
    """Invert y_n = Y_n(x_1..x_n): returns the unique preimage sequence.

    x_n = sum_{k=1}^{n} (-1)^(k-1) (k-1)! B_{n,k}(y_1..y_{n-k+1}).
    Round-trips exactly for exact input.
    """
    ys = _entries(y, len(y), "bell_invert")
    n = len(ys)
    out = []
    for m in range(1, n + 1):
        acc = None
        for k in range(1, m + 1):
            term = (-1) ** (k - 1) * factorial(k - 1) * bell_partial(m, k, ys)
            acc = term if acc is None else acc + term
        out.append(acc)
    return tuple(out)
