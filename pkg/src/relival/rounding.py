"""Directed rounding for binary64 bounds.

Bounds are computed in the default round-to-nearest mode and stepped one
representable value outward whenever the result is not provably exact, so
no FPU mode switching is needed anywhere.  Exactness is decided cheaply:
sums and differences carry an error term recoverable in float arithmetic
(the two-sum trick), while products, quotients and square roots are
compared against exact rational arithmetic.  Every helper therefore
returns either the tightest representable bound or its immediate outward
neighbour.

Infinities are legal bound values here (an infinite bound encodes an
absent constraint); NaN never is.
"""

from __future__ import annotations

import math
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction

MAX_FLOAT = sys.float_info.max

BoundLike = "float | int | Fraction | Decimal | str"


def next_down(x: float) -> float:
    """Largest float strictly below ``x`` (identity on -inf)."""
    return math.nextafter(x, -math.inf)


def next_up(x: float) -> float:
    """Smallest float strictly above ``x`` (identity on +inf)."""
    return math.nextafter(x, math.inf)


def _exact_value(x) -> "Fraction | float":
    """Exact value of a bound descriptor; infinities pass through as floats."""
    if isinstance(x, float):
        if math.isnan(x):
            raise ValueError("NaN is not a real value")
        if math.isinf(x):
            return x
        return Fraction(x)
    if isinstance(x, bool):
        raise TypeError("bool is not a bound descriptor")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Decimal):
        if x.is_nan():
            raise ValueError("NaN is not a real value")
        if x.is_infinite():
            return math.inf if x > 0 else -math.inf
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "+inf", "infinity", "+infinity"):
            return math.inf
        if s in ("-inf", "-infinity"):
            return -math.inf
        try:
            # Decimal first: parses scientific notation exactly.
            return Fraction(Decimal(s))
        except InvalidOperation:
            return Fraction(s)  # "3/10" style; raises ValueError on junk
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact real")


def _fraction_down(q: Fraction) -> float:
    try:
        f = float(q)
    except OverflowError:
        return MAX_FLOAT if q > 0 else -math.inf
    if math.isinf(f):
        return MAX_FLOAT if f > 0 else f
    if Fraction(f) > q:
        return next_down(f)
    return f


def _fraction_up(q: Fraction) -> float:
    try:
        f = float(q)
    except OverflowError:
        return math.inf if q > 0 else -MAX_FLOAT
    if math.isinf(f):
        return f if f > 0 else -MAX_FLOAT
    if Fraction(f) < q:
        return next_up(f)
    return f


def round_down(x) -> float:
    """Greatest binary64 value not greater than the exact real ``x``.

    ``x`` may be a float (returned unchanged), an int, a Fraction, a
    Decimal, or a numeric literal string, all interpreted exactly.
    """
    q = _exact_value(x)
    if isinstance(q, float):
        return q
    return _fraction_down(q)


def round_up(x) -> float:
    """Least binary64 value not less than the exact real ``x``."""
    q = _exact_value(x)
    if isinstance(q, float):
        return q
    return _fraction_up(q)


def add_down(a: float, b: float) -> float:
    """Lower bound on the exact ``a + b``.

    Opposing infinities are a caller error (no set needs that sum).
    """
    s = a + b
    if math.isinf(s):
        if math.isinf(a) or math.isinf(b):
            return s
        return MAX_FLOAT if s > 0 else s
    if math.isnan(s):
        raise ValueError("sum of opposing infinities has no value")
    # two-sum: err is the exact residue of the rounded sum
    t = s - a
    err = (a - (s - t)) + (b - t)
    return next_down(s) if err < 0 else s


def add_up(a: float, b: float) -> float:
    """Upper bound on the exact ``a + b``."""
    s = a + b
    if math.isinf(s):
        if math.isinf(a) or math.isinf(b):
            return s
        return s if s > 0 else -MAX_FLOAT
    if math.isnan(s):
        raise ValueError("sum of opposing infinities has no value")
    t = s - a
    err = (a - (s - t)) + (b - t)
    return next_up(s) if err > 0 else s


def sub_down(a: float, b: float) -> float:
    """Lower bound on the exact ``a - b``."""
    return add_down(a, -b)


def sub_up(a: float, b: float) -> float:
    """Upper bound on the exact ``a - b``."""
    return add_up(a, -b)


def mul_down(a: float, b: float) -> float:
    """Lower bound on ``a * b``, where a zero factor annihilates even an
    infinite one ({0 * y} = {0} under the set reading)."""
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if math.isinf(p):
        if math.isinf(a) or math.isinf(b):
            return p
        return MAX_FLOAT if p > 0 else p
    if math.isnan(p):
        raise ValueError("product of NaN operands")
    if Fraction(p) > Fraction(a) * Fraction(b):
        return next_down(p)
    return p


def mul_up(a: float, b: float) -> float:
    """Upper bound on ``a * b`` with the same zero-annihilation rule."""
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if math.isinf(p):
        if math.isinf(a) or math.isinf(b):
            return p
        return p if p > 0 else -MAX_FLOAT
    if math.isnan(p):
        raise ValueError("product of NaN operands")
    if Fraction(p) < Fraction(a) * Fraction(b):
        return next_up(p)
    return p


def div_down(a: float, b: float) -> float:
    """Lower bound on ``a / b`` with ``b != 0``.

    An infinite divisor yields the closure bound 0 (callers use it only
    where the divisor range stretches to infinity, so 0 is the exact
    limit of the quotients).
    """
    if b == 0.0 or (math.isinf(a) and math.isinf(b)):
        raise ValueError("quotient is not defined for these bounds")
    if math.isinf(b):
        return 0.0
    if math.isinf(a):
        return math.inf if (a > 0) == (b > 0) else -math.inf
    if a == 0.0:
        return 0.0
    p = a / b
    if math.isinf(p):
        return MAX_FLOAT if p > 0 else p
    if math.isnan(p):
        raise ValueError("quotient of NaN operands")
    if Fraction(p) > Fraction(a) / Fraction(b):
        return next_down(p)
    return p


def div_up(a: float, b: float) -> float:
    """Upper bound on ``a / b`` with ``b != 0``; infinite divisors as above."""
    if b == 0.0 or (math.isinf(a) and math.isinf(b)):
        raise ValueError("quotient is not defined for these bounds")
    if math.isinf(b):
        return 0.0
    if math.isinf(a):
        return math.inf if (a > 0) == (b > 0) else -math.inf
    if a == 0.0:
        return 0.0
    p = a / b
    if math.isinf(p):
        return p if p > 0 else -MAX_FLOAT
    if math.isnan(p):
        raise ValueError("quotient of NaN operands")
    if Fraction(p) < Fraction(a) / Fraction(b):
        return next_up(p)
    return p


def sqrt_down(a: float) -> float:
    """Lower bound on the exact square root; requires ``a >= 0``."""
    if math.isnan(a) or a < 0:
        raise ValueError("square root bound needs a nonnegative argument")
    if a == math.inf:
        return a
    r = math.sqrt(a)
    if Fraction(r) ** 2 > Fraction(a):
        return next_down(r)
    return r


def sqrt_up(a: float) -> float:
    """Upper bound on the exact square root; requires ``a >= 0``."""
    if math.isnan(a) or a < 0:
        raise ValueError("square root bound needs a nonnegative argument")
    if a == math.inf:
        return a
    r = math.sqrt(a)
    if Fraction(r) ** 2 < Fraction(a):
        return next_up(r)
    return r
