"""Exact rationals and certified rounding of logarithms and fractional powers

Every verdict in the package is decided either in `Fraction` arithmetic or
by an integer produced here. sympy evaluates ln n and n**q with adaptive
precision until the floor (or the comparison) is unambiguous, so no float
ever decides a parameter.
"""

from fractions import Fraction
from typing import Union

import sympy

from .exceptions import InputError

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike, *, allow_decimal: bool = True) -> Fraction:
    """Parse "p/q", an integer or (when allowed) a finite decimal string exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"expected an exact rational such as '1/2', got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    text = str(value).strip()
    if not allow_decimal and any(ch in text for ch in ".eE"):
        raise InputError(f"expected a rational 'p/q', got decimal {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"malformed rational {text!r}")


def format_rational(value: Fraction) -> str:
    """Canonical "p/q" form (integers keep the /1)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def to_sympy(value: Fraction) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _decide(relation) -> bool:
    if relation is sympy.true:
        return True
    if relation is sympy.false:
        return False
    raise ArithmeticError(f"could not certify {relation}")


def power_log(base: Fraction, exponent: int, n: int) -> sympy.Expr:
    """The symbolic value base**exponent * ln n."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return to_sympy(base) ** exponent * sympy.log(n)


def floor_power_log(base: Fraction, exponent: int, n: int) -> int:
    """Certified floor(base**exponent * ln n); never negative for base >= 0."""
    return int(sympy.floor(power_log(base, exponent, n)))


def strict_power_floor(n: int, exponent: Fraction) -> int:
    """Smallest integer strictly greater than n**exponent.

    sympy keeps perfect powers exact (16**(1/2) is 4), so floor + 1 is the
    right answer in both the integral and the irrational case.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return int(sympy.floor(sympy.Integer(n) ** to_sympy(exponent))) + 1


def power_log_at_least_one(base: Fraction, exponent: int, n: int) -> bool:
    """Certified test of base**exponent * ln n >= 1."""
    if n < 2:
        return False
    return _decide(power_log(base, exponent, n) >= 1)


def log_root_at_most(n: int, r: int, c: Fraction) -> bool:
    """Certified test of (ln n)**(-1/r) <= c."""
    if n < 2:
        return False
    return _decide(sympy.log(n) ** sympy.Rational(-1, r) <= to_sympy(c))
