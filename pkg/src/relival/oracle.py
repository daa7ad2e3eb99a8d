"""Independent ground truth for cross-checking the interval engine.

Everything here recomputes answers from first principles in exact
rational arithmetic, deliberately sharing no code with the rounded
engine: relational results are rebuilt from the defining equations with
corner analysis plus symbolic treatment of zero divisors, ranges of
single-occurrence product/sum expressions come from exact corner
enumeration, and inclusion is probed by random sampling.  Oracle results
use ``RationalInterval`` (exact bounds, ``None`` for an absent bound) so
comparisons against the engine can be made exactly and then judged in
float ULP steps.

A plain-text manifest format records test cases (one per line, fields
tab-separated: seed, expression, box, check name) so fixed corpora can
be committed and replayed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .expr import Binary, Expr, Unary, Var, occurs_once, parse, to_source, variable_sequence
from .interval import Box, Interval, member, parse_box
from .semantics import Interpretation, compile_real, eval_interval

__all__ = [
    "RationalInterval",
    "RATIONAL_EMPTY",
    "relational_oracle",
    "corner_range_oracle",
    "sample_inclusion",
    "random_case",
    "random_single_occurrence_case",
    "ManifestCase",
    "write_manifest",
    "read_manifest",
    "case_for",
]


@dataclass(frozen=True)
class RationalInterval:
    """Exact interval: Fraction bounds, ``None`` marking an absent bound."""

    lo: "Fraction | None"
    hi: "Fraction | None"
    is_empty: bool = False

    def __post_init__(self):
        if not self.is_empty and self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise ValueError("rational interval bounds out of order")

    @classmethod
    def bounded(cls, lo, hi) -> "RationalInterval":
        return cls(Fraction(lo), Fraction(hi))

    @classmethod
    def from_interval(cls, iv: Interval) -> "RationalInterval":
        if iv.is_empty:
            return RATIONAL_EMPTY
        lo = None if iv.lo == -math.inf else Fraction(iv.lo)
        hi = None if iv.hi == math.inf else Fraction(iv.hi)
        return cls(lo, hi)

    def contains(self, q) -> bool:
        if self.is_empty:
            return False
        q = Fraction(q)
        if self.lo is not None and q < self.lo:
            return False
        if self.hi is not None and q > self.hi:
            return False
        return True

    def is_inside(self, iv: Interval) -> bool:
        """Exact test that every member of self belongs to the float interval."""
        if self.is_empty:
            return True
        if iv.is_empty:
            return False
        if self.lo is None:
            if iv.lo != -math.inf:
                return False
        elif iv.lo != -math.inf and Fraction(iv.lo) > self.lo:
            return False
        if self.hi is None:
            if iv.hi != math.inf:
                return False
        elif iv.hi != math.inf and Fraction(iv.hi) < self.hi:
            return False
        return True


RATIONAL_EMPTY = RationalInterval(None, None, is_empty=True)
RATIONAL_REALS = RationalInterval(None, None)


def _require_bounded(iv: Interval, side: str):
    if not iv.is_empty and not iv.is_bounded:
        raise ValueError(f"oracle needs bounded operands; {side} is unbounded")


def _corners2(x: Interval, y: Interval):
    xs = {Fraction(x.lo), Fraction(x.hi)}
    ys = {Fraction(y.lo), Fraction(y.hi)}
    return xs, ys


def _sqrt_bracket(q: Fraction, bits: int = 200):
    """(lo, hi, exact) with lo <= sqrt(q) <= hi; the gap is ~2**-bits relative."""
    if q < 0:
        raise ValueError("negative radicand")
    n, d = q.numerator, q.denominator
    scaled = (n * d) << (2 * bits)
    s = isqrt(scaled)
    den = d << bits
    lo = Fraction(s, den)
    if s * s == scaled:
        return lo, lo, True
    return lo, Fraction(s + 1, den), False


def _div_oracle(x: Interval, y: Interval, grid: int) -> RationalInterval:
    # solution set of z*y = x over exact rationals
    xlo, xhi = Fraction(x.lo), Fraction(x.hi)
    ylo, yhi = Fraction(y.lo), Fraction(y.hi)
    zero_in_x = xlo <= 0 <= xhi
    zero_in_y = ylo <= 0 <= yhi
    if ylo == 0 and yhi == 0:
        # z*0 = x solvable iff 0 in X, and then by every z
        return RATIONAL_REALS if zero_in_x else RATIONAL_EMPTY
    if zero_in_x and zero_in_y:
        return RATIONAL_REALS
    # witnesses with y != 0: corner quotients plus a confirming grid
    xs = [xlo, xhi]
    ys = [v for v in (ylo, yhi) if v != 0]
    candidates = [a / b for a in xs for b in ys]
    if grid > 1:
        for i in range(grid + 1):
            a = xlo + (xhi - xlo) * Fraction(i, grid)
            for j in range(grid + 1):
                b = ylo + (yhi - ylo) * Fraction(j, grid)
                if b != 0:
                    candidates.append(a / b)
    # an endpoint at zero with the other side nonzero still witnesses z=0
    if zero_in_x:
        candidates.append(Fraction(0))
    pos_near_zero = yhi > 0 and ylo <= 0  # arbitrarily small positive divisors
    neg_near_zero = ylo < 0 and yhi >= 0
    unbounded_above = (pos_near_zero and xhi > 0) or (neg_near_zero and xlo < 0)
    unbounded_below = (pos_near_zero and xlo < 0) or (neg_near_zero and xhi > 0)
    lo = None if unbounded_below else min(candidates)
    hi = None if unbounded_above else max(candidates)
    return RationalInterval(lo, hi)


def relational_oracle(op: str, x: Interval, y: "Interval | None" = None, grid: int = 16) -> RationalInterval:
    """Recompute one operation from its defining relation, exactly.

    Operands must be bounded (the result may still be unbounded: division
    by a range through zero reports its absent bounds as ``None``).  The result is attained by witnesses, so it is always a
    subset of the true relational answer; for ``+ - * / neg abs`` it is
    the exact hull, for the roots it is exact on perfect squares and an
    inner approximation within 2**-200 otherwise.
    """
    _require_bounded(x, "the first operand")
    if y is not None:
        _require_bounded(y, "the second operand")
    if x.is_empty or (y is not None and y.is_empty):
        return RATIONAL_EMPTY
    if op == "+":
        xs, ys = _corners2(x, y)
        vals = [a + b for a in xs for b in ys]
        return RationalInterval(min(vals), max(vals))
    if op == "-":
        # z + y = x, so z ranges over corner differences
        xs, ys = _corners2(x, y)
        vals = [a - b for a in xs for b in ys]
        return RationalInterval(min(vals), max(vals))
    if op == "*":
        xs, ys = _corners2(x, y)
        vals = [a * b for a in xs for b in ys]
        return RationalInterval(min(vals), max(vals))
    if op == "/":
        return _div_oracle(x, y, grid)
    if op == "neg":
        return RationalInterval(-Fraction(x.hi), -Fraction(x.lo))
    if op == "abs":
        xlo, xhi = Fraction(x.lo), Fraction(x.hi)
        if xlo >= 0:
            return RationalInterval(xlo, xhi)
        if xhi <= 0:
            return RationalInterval(-xhi, -xlo)
        return RationalInterval(Fraction(0), max(xhi, -xlo))
    if op == "sqrtr":
        # y*y = x: symmetric pair of roots of the largest admissible radicand
        if x.hi < 0:
            return RATIONAL_EMPTY
        r, _, _ = _sqrt_bracket(Fraction(x.hi))
        return RationalInterval(-r, r)
    if op == "sqrt":
        # image of the nonnegative branch
        if x.hi < 0:
            return RATIONAL_EMPTY
        hi_inner, _, _ = _sqrt_bracket(Fraction(x.hi))
        if x.lo <= 0:
            return RationalInterval(Fraction(0), hi_inner)
        _, lo_outer, _ = _sqrt_bracket(Fraction(x.lo))
        lo_outer = min(lo_outer, hi_inner)
        return RationalInterval(lo_outer, hi_inner)
    raise ValueError(f"no oracle for operation {op!r}")


_CORNER_OPS = {"+", "-", "*", "neg"}


def _corner_ops_only(e: Expr) -> bool:
    if isinstance(e, Var):
        return True
    if isinstance(e, Unary):
        return e.op in _CORNER_OPS and _corner_ops_only(e.child)
    return e.op in _CORNER_OPS and _corner_ops_only(e.left) and _corner_ops_only(e.right)


def _exact_eval(e: Expr, env: dict) -> Fraction:
    if isinstance(e, Var):
        return env[e.name]
    if isinstance(e, Unary):
        return -_exact_eval(e.child, env)
    a = _exact_eval(e.left, env)
    b = _exact_eval(e.right, env)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    return a * b


def corner_range_oracle(e: Expr, box: Box) -> RationalInterval:
    """Exact range of a single-occurrence ``+ - * neg`` expression.

    Each variable appears in at most one leaf, so the expression is
    affine in every variable separately and its range over a box is the
    hull of its values at the corners, computed here in exact rationals.
    """
    if not occurs_once(e):
        raise ValueError("corner oracle needs each variable in a single leaf")
    if not _corner_ops_only(e):
        raise ValueError("corner oracle covers only + - * neg")
    names = variable_sequence(e)
    dims = tuple(box.dims) if isinstance(box, Box) else tuple(box)
    if len(dims) != len(names):
        raise ValueError("box arity does not match the expression")
    for d in dims:
        if d.is_empty or not d.is_bounded:
            raise ValueError("corner oracle needs bounded nonempty coordinates")
    choices = []
    for d in dims:
        lo, hi = Fraction(d.lo), Fraction(d.hi)
        choices.append((lo,) if lo == hi else (lo, hi))
    best_lo = best_hi = None
    for corner in _product(choices):
        v = _exact_eval(e, dict(zip(names, corner)))
        if best_lo is None or v < best_lo:
            best_lo = v
        if best_hi is None or v > best_hi:
            best_hi = v
    return RationalInterval(best_lo, best_hi)


def _product(choices):
    if not choices:
        yield ()
        return
    head, *rest = choices
    for v in head:
        for tail in _product(rest):
            yield (v,) + tail


def sample_inclusion(e: Expr, interp: Interpretation, box: Box, samples: int = 1000, seed: int = 0) -> int:
    """Count sampled points whose defined value escapes the box evaluation.

    Samples uniformly from a bounded box; points where the expression is
    undefined are skipped.  Zero is the expected answer for any sound
    interpretation.
    """
    dims = tuple(box.dims) if isinstance(box, Box) else tuple(box)
    if any(d.is_empty for d in dims):
        return 0
    for d in dims:
        if not d.is_bounded:
            raise ValueError("inclusion sampling needs a bounded box")
    iv = eval_interval(e, interp, dims)
    rfn = compile_real(e, interp)
    rng = random.Random(seed)
    violations = 0
    for _ in range(samples):
        pt = tuple(rng.uniform(d.lo, d.hi) for d in dims)
        v = rfn(pt)
        if v is not None and math.isfinite(v) and not member(v, iv):
            violations += 1
    return violations


def _build_tree(rng: random.Random, depth: int, pool, positive, continuous: bool) -> Expr:
    if depth <= 1 or rng.random() < 0.3:
        return Var(rng.choice(pool))
    r = rng.random()
    if continuous:
        if r < 0.18:
            return Unary("neg", _build_tree(rng, depth - 1, pool, positive, continuous))
        if r < 0.30:
            return Unary("abs", _build_tree(rng, depth - 1, pool, positive, continuous))
        if r < 0.40:
            name = rng.choice(pool)
            positive.add(name)
            return Unary("sqrt", Var(name))
        if r < 0.52:
            name = rng.choice(pool)
            positive.add(name)
            num = _build_tree(rng, depth - 1, pool, positive, continuous)
            return Binary("/", num, Var(name))
        op = rng.choice(("+", "-", "*"))
        return Binary(
            op,
            _build_tree(rng, depth - 1, pool, positive, continuous),
            _build_tree(rng, depth - 1, pool, positive, continuous),
        )
    if r < 0.10:
        return Unary("neg", _build_tree(rng, depth - 1, pool, positive, continuous))
    if r < 0.20:
        return Unary("abs", _build_tree(rng, depth - 1, pool, positive, continuous))
    if r < 0.28:
        return Unary("sqrt", _build_tree(rng, depth - 1, pool, positive, continuous))
    if r < 0.36:
        return Unary("sqrtr", _build_tree(rng, depth - 1, pool, positive, continuous))
    op = rng.choice(("+", "-", "*", "/", "+", "-", "*"))
    return Binary(
        op,
        _build_tree(rng, depth - 1, pool, positive, continuous),
        _build_tree(rng, depth - 1, pool, positive, continuous),
    )


def random_case(rng: random.Random, max_depth: int = 5, max_vars: int = 4, continuous: bool = False):
    """Random expression with a matching bounded box; returns (expr, box).

    With ``continuous=True`` the draw avoids discontinuity sources:
    division and sqrt apply only to variables whose boxes stay inside
    [1/4, 4], so evaluation is Lipschitz on the box and shrinking boxes
    give shrinking results.  Without it, anything goes (division through
    zero, roots of negative ranges), which is the right diet for
    totality and inclusion checks.
    """
    nvars = rng.randint(1, max_vars)
    pool = [f"x{i}" for i in range(nvars)]
    positive: set = set()
    e = _build_tree(rng, max_depth, pool, positive, continuous)
    dims = []
    for name in variable_sequence(e):
        if name in positive:
            lo = rng.uniform(0.25, 2.0)
            hi = lo + rng.uniform(0.05, 2.0)
        else:
            center = rng.uniform(-3.0, 3.0)
            half = rng.uniform(0.05, 2.0)
            lo, hi = center - half, center + half
        dims.append(Interval(lo, hi))
    return e, Box(tuple(dims))


def _build_single(rng: random.Random, leaves: int, counter: list) -> Expr:
    if leaves == 1:
        name = f"v{counter[0]}"
        counter[0] += 1
        node: Expr = Var(name)
    else:
        split = rng.randint(1, leaves - 1)
        node = Binary(
            rng.choice(("+", "-", "*")),
            _build_single(rng, split, counter),
            _build_single(rng, leaves - split, counter),
        )
    if rng.random() < 0.2:
        node = Unary("neg", node)
    return node


def random_single_occurrence_case(rng: random.Random, max_leaves: int = 6):
    """Random single-occurrence ``+ - * neg`` expression with a dyadic box.

    Box endpoints are multiples of 1/16 with magnitude at most 8, so any
    corner evaluation of such an expression (at most 6 leaves) stays
    exactly representable in binary64 and the engine's rounded corners
    are exact.  Returns (expr, box).
    """
    leaves = rng.randint(1, max_leaves)
    e = _build_single(rng, leaves, [0])
    dims = []
    for _ in variable_sequence(e):
        t1 = rng.randint(-128, 128)
        t2 = rng.randint(-128, 128)
        lo, hi = sorted((t1, t2))
        dims.append(Interval(lo / 16, hi / 16))
    return e, Box(tuple(dims))


@dataclass(frozen=True)
class ManifestCase:
    """One recorded test case: seed, expression source, box text, check name."""

    seed: int
    expression: str
    box: str
    check: str

    def parsed(self):
        """(expr, box) pair reconstructed from the recorded texts."""
        e, _ = parse(self.expression)
        return e, parse_box(self.box)


def write_manifest(path, cases) -> None:
    """Write cases one per line, tab-separated (fields contain spaces)."""
    with open(path, "w", encoding="utf-8") as fh:
        for c in cases:
            fh.write(f"{c.seed}\t{c.expression}\t{c.box}\t{c.check}\n")


def read_manifest(path):
    """Read a manifest written by ``write_manifest``; skips blank lines."""
    cases = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise ValueError(f"manifest line {lineno} needs 4 tab-separated fields")
            cases.append(ManifestCase(int(parts[0]), parts[1], parts[2], parts[3]))
    return cases


def case_for(seed: int, e: Expr, box: Box, check: str) -> ManifestCase:
    """Manifest record for an in-memory case."""
    return ManifestCase(seed, to_source(e), str(box), check)
