"""Complete homogeneous symmetric functions, plethysm, and Exp.

Everything is expressed through power sums: h_n expands as
sum over partitions (i_1, .., i_s) of n of c/n! * p_{i_1} .. p_{i_s},
where c counts permutations with that cycle type.  Substituting a
one-variable series P(t) for the power sums (p_i -> P(t^i)) yields the
plethysm h_n[P], and the plethystic exponential Exp(P) = sum_n h_n[P]
collapses to the product prod_i (1 - t^i)^(-c_i) when P = sum c_i t^i
has non-negative integer coefficients and no constant term.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NonIntegralCoefficient, NonzeroConstant
from .perms import cycle_type_count
from .series import TruncatedSeries, product_form


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n as weakly increasing tuples, lexicographically."""
    if n < 0:
        raise ValueError("partitions of a negative integer requested")

    def rec(remaining: int, minimum: int):
        if remaining == 0:
            yield ()
            return
        for first in range(minimum, remaining + 1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return tuple(rec(n, 1))


@lru_cache(maxsize=None)
def h_in_power_sums(n: int) -> dict[tuple[int, ...], Fraction]:
    """Power-sum expansion of h_n: partition -> coefficient c/n!."""
    from math import factorial

    return {
        parts: Fraction(cycle_type_count(n, parts), factorial(n))
        for parts in partitions(n)
    }


def plethysm_h(n: int, series: TruncatedSeries) -> TruncatedSeries:
    """h_n[P]: substitute P(t^i) for each power sum p_i in h_n."""
    order = series.order
    if n == 0:
        return TruncatedSeries.one(order)
    substituted: dict[int, TruncatedSeries] = {}

    def sub(i: int) -> TruncatedSeries:
        if i not in substituted:
            substituted[i] = series.substitute_power(i)
        return substituted[i]

    acc = TruncatedSeries.zero(order)
    for parts, coeff in h_in_power_sums(n).items():
        term = TruncatedSeries.one(order)
        for i in parts:
            term = term * sub(i)
        acc = acc + coeff * term
    return acc


def _exponent_map(series: TruncatedSeries) -> dict[int, int]:
    coeffs = series.coefficients
    if coeffs[0] != 0:
        raise NonzeroConstant(
            f"plethystic exponential needs a zero constant term, got {coeffs[0]}"
        )
    out = {}
    for i, c in enumerate(coeffs[1:], start=1):
        if c == 0:
            continue
        if c.denominator != 1 or c < 0:
            raise NonIntegralCoefficient(
                f"exponent of t^{i} must be a non-negative integer, got {c}"
            )
        out[i] = c.numerator
    return out


def exp_series(series: TruncatedSeries) -> TruncatedSeries:
    """Exp(P) = prod_i (1 - t^i)^(-c_i) for P = sum c_i t^i."""
    return product_form(_exponent_map(series), series.order)


def exp_series_via_h(series: TruncatedSeries) -> TruncatedSeries:
    """Exp(P) summed as sum_n h_n[P]; cross-check for exp_series.

    Since P has no constant term, h_n[P] starts at t^n and the sum over
    n <= order is exact at this truncation.
    """
    _exponent_map(series)  # enforce the same preconditions
    order = series.order
    acc = TruncatedSeries.one(order)
    for n in range(1, order + 1):
        acc = acc + plethysm_h(n, series)
    return acc
