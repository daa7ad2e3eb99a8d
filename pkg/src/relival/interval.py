"""Intervals as sets of reals, with total relational arithmetic.

An ``Interval`` is a closed connected set of reals: the empty set, a
bounded ``[lo, hi]``, a ray, or the whole line.  An infinite bound records
the absence of a constraint on that side; the infinities themselves are
never members.  ``Box`` is an ordered tuple of intervals with
coordinatewise membership.

Arithmetic follows the relational reading: ``X op Y`` is the tightest
representable interval around every ``z`` for which witnesses ``x in X``
and ``y in Y`` satisfy the defining equation (``x + y = z`` for addition,
``z + y = x`` for subtraction, ``z * y = x`` for division, ``y * y = x``
for the two-sided root).  This makes every operation total: division by
an interval containing zero and roots of partly negative ranges are
ordinary cases, not errors.  Image-style variants (``div_canonical``,
``sqrt_canonical``) are provided alongside for the operations where the
two readings differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rounding import (
    add_down,
    add_up,
    div_down,
    div_up,
    mul_down,
    mul_up,
    round_down,
    round_up,
    sqrt_down,
    sqrt_up,
    sub_down,
    sub_up,
)

__all__ = [
    "Interval",
    "Box",
    "EMPTY",
    "REALS",
    "hull_bounds",
    "hull_union",
    "add",
    "sub",
    "mul",
    "div",
    "div_canonical",
    "sqrt_rel",
    "sqrt_canonical",
    "neg",
    "absolute",
    "member",
    "subset",
    "intersects",
    "width",
    "midpoint",
    "parse_interval",
    "format_interval",
    "parse_box",
]


@dataclass(frozen=True)
class Interval:
    """Closed connected set of reals with binary64 bounds.

    ``Interval(lo, hi)`` normalizes: reversed bounds (lo > hi) denote the
    empty set, as do impossible ones (lo = +inf or hi = -inf, since the
    infinities are not members).  Emptiness is carried by the ``is_empty``
    flag; on the empty interval the stored bounds are inert placeholders
    that no operation consults.
    """

    lo: float
    hi: float
    is_empty: bool = False

    def __post_init__(self):
        lo = float(self.lo)
        hi = float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval bounds cannot be NaN")
        if self.is_empty or lo > hi or lo == math.inf or hi == -math.inf:
            lo, hi, empty = math.inf, -math.inf, True
        else:
            # normalize -0.0 so equal sets compare and print identically
            if lo == 0.0:
                lo = 0.0
            if hi == 0.0:
                hi = 0.0
            empty = False
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "is_empty", empty)

    @classmethod
    def point(cls, value: float) -> "Interval":
        return cls(value, value)

    @property
    def is_bounded(self) -> bool:
        """True when both bounds are finite (vacuously true on empty)."""
        if self.is_empty:
            return True
        return self.lo > -math.inf and self.hi < math.inf

    @property
    def is_degenerate(self) -> bool:
        """Single-point interval."""
        return not self.is_empty and self.lo == self.hi

    def __contains__(self, value: float) -> bool:
        return member(value, self)

    def __neg__(self) -> "Interval":
        return neg(self)

    def __abs__(self) -> "Interval":
        return absolute(self)

    def __add__(self, other: "Interval") -> "Interval":
        return add(self, other)

    def __sub__(self, other: "Interval") -> "Interval":
        return sub(self, other)

    def __mul__(self, other: "Interval") -> "Interval":
        return mul(self, other)

    def __truediv__(self, other: "Interval") -> "Interval":
        return div(self, other)

    def __str__(self) -> str:
        return format_interval(self)

    def __repr__(self) -> str:
        return format_interval(self)


EMPTY = Interval(0.0, 0.0, is_empty=True)
REALS = Interval(-math.inf, math.inf)


def hull_bounds(lo=None, hi=None) -> Interval:
    """Tightest interval around the exact real bounds ``lo <= hi``.

    Bounds may be floats, ints, Fractions, Decimals, or numeric literal
    strings; each side rounds outward.  ``hull_bounds()`` (or both bounds
    None) is the empty set; exactly one None is an error.
    """
    if lo is None and hi is None:
        return EMPTY
    if lo is None or hi is None:
        raise ValueError("either give both bounds or neither")
    return Interval(round_down(lo), round_up(hi))


def hull_union(x: Interval, y: Interval) -> Interval:
    """Smallest interval containing both arguments."""
    if x.is_empty:
        return y
    if y.is_empty:
        return x
    return Interval(min(x.lo, y.lo), max(x.hi, y.hi))


def member(value: float, x: Interval) -> bool:
    """Set membership; non-reals (NaN and the infinities) never belong."""
    if x.is_empty or not math.isfinite(value):
        return False
    return x.lo <= value <= x.hi


def subset(x: Interval, y: Interval) -> bool:
    """True when every member of ``x`` belongs to ``y``."""
    if x.is_empty:
        return True
    if y.is_empty:
        return False
    return y.lo <= x.lo and x.hi <= y.hi


def intersects(x: Interval, y: Interval) -> bool:
    """True when the two sets share at least one point."""
    if x.is_empty or y.is_empty:
        return False
    return x.lo <= y.hi and y.lo <= x.hi


def width(x: Interval) -> float:
    """Upper bound on ``hi - lo``; 0 for empty, inf when unbounded."""
    if x.is_empty:
        return 0.0
    if x.lo == -math.inf or x.hi == math.inf:
        return math.inf
    return sub_up(x.hi, x.lo)


def midpoint(x: Interval) -> float:
    """Midpoint of a bounded nonempty interval; others have none."""
    if x.is_empty or not x.is_bounded:
        raise ValueError("no midpoint: interval is empty or unbounded")
    m = x.lo / 2 + x.hi / 2
    if m < x.lo:
        m = x.lo
    elif m > x.hi:
        m = x.hi
    return m


def add(x: Interval, y: Interval) -> Interval:
    """{z | x + y = z for some x in X, y in Y}, rounded outward."""
    if x.is_empty or y.is_empty:
        return EMPTY
    return Interval(add_down(x.lo, y.lo), add_up(x.hi, y.hi))


def sub(x: Interval, y: Interval) -> Interval:
    """{z | z + y = x for some x in X, y in Y}, rounded outward."""
    if x.is_empty or y.is_empty:
        return EMPTY
    return Interval(sub_down(x.lo, y.hi), sub_up(x.hi, y.lo))


def mul(x: Interval, y: Interval) -> Interval:
    """{z | x * y = z for some witnesses}, rounded outward.

    Corner products decide the hull; a zero endpoint annihilates an
    infinite one, which is exactly the set semantics ({0 * y} = {0}).
    """
    if x.is_empty or y.is_empty:
        return EMPTY
    a, b, c, d = x.lo, x.hi, y.lo, y.hi
    lo = min(mul_down(a, c), mul_down(a, d), mul_down(b, c), mul_down(b, d))
    hi = max(mul_up(a, c), mul_up(a, d), mul_up(b, c), mul_up(b, d))
    return Interval(lo, hi)


def _div_by_positive(x: Interval, c: float, d: float) -> Interval:
    # hull of {u / v : u in x, v in [c, d], v > 0}; requires d > 0
    a, b = x.lo, x.hi
    if c <= 0.0:
        # divisors reach arbitrarily close to zero from above
        lo = -math.inf if a < 0 else (0.0 if a == 0 else div_down(a, d))
        hi = math.inf if b > 0 else (0.0 if b == 0 else div_up(b, d))
        return Interval(lo, hi)
    lo = div_down(a, c) if a < 0 else div_down(a, d)
    hi = div_up(b, c) if b > 0 else div_up(b, d)
    return Interval(lo, hi)


def div_canonical(x: Interval, y: Interval) -> Interval:
    """Hull of the quotient image {x / y : x in X, y in Y, y != 0}.

    Division by [0,0] gives the empty set; a divisor straddling zero
    splits into its sign parts and the two partial hulls are joined.
    """
    if x.is_empty or y.is_empty:
        return EMPTY
    result = EMPTY
    if y.hi > 0:
        result = _div_by_positive(x, y.lo, y.hi)
    if y.lo < 0:
        # negative divisors, reflected: {u/v : v<0} = {(-u)/(-v) : -v>0}
        vlo = -y.hi if y.hi < 0 else 0.0
        result = hull_union(result, _div_by_positive(neg(x), vlo, -y.lo))
    return result


def div(x: Interval, y: Interval) -> Interval:
    """{z | z * y = x for some witnesses}, rounded outward.

    Total: when both operands contain zero, every real is a solution of
    z * 0 = 0 and the whole line comes back.  Otherwise the solution set
    coincides with the quotient image.
    """
    if x.is_empty or y.is_empty:
        return EMPTY
    if member(0.0, x) and member(0.0, y):
        return REALS
    return div_canonical(x, y)


def sqrt_rel(x: Interval) -> Interval:
    """{y | y * y = x for some x in X}: both roots, rounded outward.

    Empty when X is entirely negative; otherwise symmetric about zero.
    """
    if x.is_empty or x.hi < 0:
        return EMPTY
    r = sqrt_up(x.hi)
    return Interval(-r, r)


def sqrt_canonical(x: Interval) -> Interval:
    """Hull of {sqrt(x) : x in X, x >= 0}: the nonnegative branch only."""
    if x.is_empty or x.hi < 0:
        return EMPTY
    lo = sqrt_down(x.lo) if x.lo > 0 else 0.0
    return Interval(lo, sqrt_up(x.hi))


def neg(x: Interval) -> Interval:
    """{-x : x in X}; exact, no rounding needed."""
    if x.is_empty:
        return EMPTY
    return Interval(-x.hi, -x.lo)


def absolute(x: Interval) -> Interval:
    """{|x| : x in X}; exact, no rounding needed."""
    if x.is_empty:
        return EMPTY
    if x.lo >= 0:
        return x
    if x.hi <= 0:
        return neg(x)
    return Interval(0.0, max(x.hi, -x.lo))


def _format_bound(v: float) -> str:
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return f"{v:.17g}"


def format_interval(x: Interval) -> str:
    """Render in the textual syntax: ``empty`` or ``[lo,hi]``.

    Finite bounds print with 17 significant digits, enough to reparse to
    the identical float.
    """
    if x.is_empty:
        return "empty"
    return f"[{_format_bound(x.lo)},{_format_bound(x.hi)}]"


def parse_interval(text: str) -> Interval:
    """Parse ``empty`` or ``[lo,hi]``; literal bounds round outward.

    Bounds are decimal literals or ``inf``/``-inf``.  Raises ValueError
    on anything else.
    """
    s = text.strip()
    if s.lower() == "empty":
        return EMPTY
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"bad interval syntax: {text!r}")
    parts = s[1:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"interval needs exactly two bounds: {text!r}")
    try:
        lo = round_down(parts[0])
        hi = round_up(parts[1])
    except (ValueError, TypeError) as exc:
        raise ValueError(f"bad interval bound in {text!r}: {exc}") from None
    return Interval(lo, hi)


def parse_box(text: str) -> "Box":
    """Parse a ``;``-separated list of interval texts into a box."""
    parts = text.split(";")
    return Box(tuple(parse_interval(p) for p in parts))


@dataclass(frozen=True)
class Box:
    """Ordered tuple of intervals; empty as a set iff any coordinate is."""

    dims: tuple

    def __post_init__(self):
        dims = tuple(self.dims)
        for d in dims:
            if not isinstance(d, Interval):
                raise TypeError("box coordinates must be intervals")
        object.__setattr__(self, "dims", dims)

    @property
    def arity(self) -> int:
        return len(self.dims)

    @property
    def is_empty(self) -> bool:
        return any(d.is_empty for d in self.dims)

    @property
    def is_bounded(self) -> bool:
        return all(d.is_bounded for d in self.dims)

    def contains(self, point) -> bool:
        """Coordinatewise membership of a real tuple."""
        pt = tuple(point)
        if len(pt) != len(self.dims):
            raise ValueError("point arity does not match box arity")
        return all(member(v, d) for v, d in zip(pt, self.dims))

    def is_subset_of(self, other: "Box") -> bool:
        if len(self.dims) != len(other.dims):
            raise ValueError("box arities differ")
        if self.is_empty:
            return True
        return all(subset(a, b) for a, b in zip(self.dims, other.dims))

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, i: int) -> Interval:
        return self.dims[i]

    def __str__(self) -> str:
        return ";".join(format_interval(d) for d in self.dims)

    def __repr__(self) -> str:
        return f"Box({self.__str__()})"
