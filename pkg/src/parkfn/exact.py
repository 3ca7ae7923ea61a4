"""Arbitrary-precision combinatorics primitives for the counting formulas.

All division goes through ``fractions.Fraction`` and is asserted integral at
the end; every count in this package is an exact integer, so a non-integral
result always signals a bug or a misapplied formula.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConventionUndefined, NonIntegralResult, ZeroToNegative


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient C(n, k) = n(n-1)...(n-k+1) / k!.

    ``n`` may be negative (falling-factorial definition); ``k`` must be >= 0.
    """
    if k < 0:
        raise ValueError("binomial: k must be non-negative")
    result = 1
    for i in range(1, k + 1):
        result = result * (n - i + 1) // i
    return result


def rising_factorial(x: int, n: int) -> Fraction:
    """Rising factorial x^(n) = x(x+1)...(x+n-1) for n >= 0, extended to n = -1.

    The degenerate case uses the convention x^(-1) = 1/(x-1), which is
    undefined at x = 1.
    """
    if n < -1:
        raise ValueError("rising_factorial: n must be >= -1")
    if n == -1:
        if x == 1:
            raise ConventionUndefined("x^(-1) = 1/(x-1) is undefined at x = 1")
        return Fraction(1, x - 1)
    result = 1
    for i in range(n):
        result *= x + i
    return Fraction(result)


def power(x: int, n: int) -> Fraction:
    """Exact power with the conventions 0^0 = 1 and x^(-n) = 1/x^n."""
    if n >= 0:
        return Fraction(x**n)
    if x == 0:
        raise ZeroToNegative("0 raised to a negative exponent")
    return Fraction(1, x ** (-n))


def as_integer(value: Fraction | int) -> int:
    """Collapse an exact rational to an int, or raise NonIntegralResult."""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise NonIntegralResult(f"expected an integer, got {value}")
    return value.numerator
