"""Evaluation of expressions over points and over boxes.

An ``Interpretation`` assigns each operation symbol a real partial
function and an interval operation that extends it setwise.  Evaluating
``e1 <op> e2`` routes one combined argument tuple to the two
subexpressions through an index plan derived from their variable
sequences: the left operand's variables form a prefix of the combined
sequence, and a variable shared by both sides receives the same
coordinate on both, never an independent copy.  That routing is what
keeps ``x - x`` over [0,1] at [-1,1] (one witness per variable, chosen
independently per side of the relation) rather than pretending the two
sides are correlated.

Point evaluation is strict about partiality: an undefined subterm makes
the whole result undefined, and a defined result is always a finite
float (overflow beyond the binary64 range counts as undefined).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping

from .expr import Binary, Expr, Unary, Var, variable_sequence
from .interval import (
    Box,
    Interval,
    absolute,
    add,
    div,
    div_canonical,
    mul,
    neg,
    sqrt_canonical,
    sqrt_rel,
    sub,
)

__all__ = [
    "DistributionPlan",
    "build_distribution",
    "RealResult",
    "UNDEFINED",
    "Interpretation",
    "default_interpretation",
    "mode_select",
    "compile_real",
    "compile_interval",
    "eval_real",
    "eval_interval",
]


@dataclass(frozen=True)
class DistributionPlan:
    """Index routing for one binary node.

    A combined tuple of ``combined_arity`` coordinates feeds the left
    subexpression through ``left_indices`` (always the identity prefix
    ``0..m-1``) and the right one through ``right_indices`` (shared
    variables point into that prefix, fresh ones continue past it, each
    exactly once, in order).
    """

    combined_arity: int
    left_indices: "tuple[int, ...]"
    right_indices: "tuple[int, ...]"


def build_distribution(left: Expr, right: Expr) -> DistributionPlan:
    """Plan for a node whose children are ``left`` and ``right``."""
    lseq = variable_sequence(left)
    rseq = variable_sequence(right)
    pos = {name: i for i, name in enumerate(lseq)}
    n = len(lseq)
    ridx = []
    for name in rseq:
        if name not in pos:
            pos[name] = n
            n += 1
        ridx.append(pos[name])
    return DistributionPlan(n, tuple(range(len(lseq))), tuple(ridx))


def _plan_for(node: Binary) -> DistributionPlan:
    plan = node.__dict__.get("_plan")
    if plan is None:
        plan = build_distribution(node.left, node.right)
        node.__dict__["_plan"] = plan
    return plan


@dataclass(frozen=True)
class RealResult:
    """Outcome of a point evaluation: a finite value, or undefined."""

    value: "float | None" = None

    @classmethod
    def defined(cls, v: float) -> "RealResult":
        if not math.isfinite(v):
            raise ValueError("defined results must be finite reals")
        v = float(v)
        if v == 0.0:
            v = 0.0  # -0.0 and 0.0 are the same real
        return cls(v)

    @property
    def is_defined(self) -> bool:
        return self.value is not None

    def __repr__(self) -> str:
        if self.value is None:
            return "Undefined"
        return f"Defined({self.value!r})"


UNDEFINED = RealResult()


def _finite_or_none(v: float) -> "float | None":
    # overflow past the float range is not a representable real result
    return v if -math.inf < v < math.inf else None


def _real_sqrt(a: float) -> "float | None":
    if a < 0:
        return None
    return math.sqrt(a)


_REAL_OPS: "Mapping[str, Callable]" = {
    "+": lambda a, b: _finite_or_none(a + b),
    "-": lambda a, b: _finite_or_none(a - b),
    "*": lambda a, b: _finite_or_none(a * b),
    "/": lambda a, b: _finite_or_none(a / b) if b != 0.0 else None,
    "neg": lambda a: -a,
    "abs": abs,
    # both root symbols name the same point function: the nonnegative root.
    # They differ only in which set extension the interval layer picks.
    "sqrt": _real_sqrt,
    "sqrtr": _real_sqrt,
}

_INTERVAL_OPS_DEFAULT: "Mapping[str, Callable]" = {
    "+": add,
    "-": sub,
    "*": mul,
    "/": div,
    "neg": neg,
    "abs": absolute,
    "sqrt": sqrt_canonical,
    "sqrtr": sqrt_rel,
}


@dataclass(frozen=True, eq=False)
class Interpretation:
    """Symbol tables for evaluation; ``name`` tags the selected mode."""

    real_ops: "Mapping[str, Callable]"
    interval_ops: "Mapping[str, Callable]"
    name: str = "default"

    def real_op(self, symbol: str) -> Callable:
        try:
            return self.real_ops[symbol]
        except KeyError:
            raise KeyError(f"no real operation bound to symbol {symbol!r}") from None

    def interval_op(self, symbol: str) -> Callable:
        try:
            return self.interval_ops[symbol]
        except KeyError:
            raise KeyError(f"no interval operation bound to symbol {symbol!r}") from None


def default_interpretation() -> Interpretation:
    """Relational division, image-style ``sqrt``, relational ``sqrtr``."""
    return Interpretation(_REAL_OPS, _INTERVAL_OPS_DEFAULT, "default")


def mode_select(base: Interpretation, mode: str) -> Interpretation:
    """Rebind ``/`` and ``sqrt`` as a family; ``sqrtr`` stays relational.

    ``"relational"`` gives the total solution-set reading for both;
    ``"canonical"`` gives the image reading for both (division by an
    interval containing only zero is then empty, not the whole line).
    """
    if mode == "canonical":
        overrides = {"/": div_canonical, "sqrt": sqrt_canonical}
    elif mode == "relational":
        overrides = {"/": div, "sqrt": sqrt_rel}
    else:
        raise ValueError(f"unknown mode {mode!r}; use 'relational' or 'canonical'")
    return Interpretation(base.real_ops, {**base.interval_ops, **overrides}, mode)


def compile_real(e: Expr, interp: Interpretation) -> Callable:
    """Compile ``e`` once into a point evaluator.

    The returned callable takes a tuple ordered like
    ``variable_sequence(e)`` and yields a float, or None where the
    partial function is undefined.  Arity is not rechecked per call; use
    ``eval_real`` for the validated one-shot form.
    """
    if isinstance(e, Var):
        return lambda args: args[0]
    if isinstance(e, Unary):
        op = interp.real_op(e.op)
        child = compile_real(e.child, interp)

        def run_unary(args, _op=op, _child=child):
            v = _child(args)
            return None if v is None else _op(v)

        return run_unary
    op = interp.real_op(e.op)
    left = compile_real(e.left, interp)
    right = compile_real(e.right, interp)
    plan = _plan_for(e)
    m = len(plan.left_indices)
    ridx = plan.right_indices

    def run_binary(args, _op=op, _l=left, _r=right, _m=m, _ridx=ridx):
        a = _l(args[:_m])
        if a is None:
            return None
        b = _r(tuple(args[i] for i in _ridx))
        if b is None:
            return None
        return _op(a, b)

    return run_binary


def compile_interval(e: Expr, interp: Interpretation) -> Callable:
    """Compile ``e`` once into a box evaluator (tuple of intervals in)."""
    if isinstance(e, Var):
        return lambda args: args[0]
    if isinstance(e, Unary):
        op = interp.interval_op(e.op)
        child = compile_interval(e.child, interp)

        def run_unary(args, _op=op, _child=child):
            return _op(_child(args))

        return run_unary
    op = interp.interval_op(e.op)
    left = compile_interval(e.left, interp)
    right = compile_interval(e.right, interp)
    plan = _plan_for(e)
    m = len(plan.left_indices)
    ridx = plan.right_indices

    def run_binary(args, _op=op, _l=left, _r=right, _m=m, _ridx=ridx):
        return _op(_l(args[:_m]), _r(tuple(args[i] for i in _ridx)))

    return run_binary


def _check_arity(e: Expr, got: int):
    names = variable_sequence(e)
    if got != len(names):
        raise ValueError(
            f"arity mismatch: expression takes {len(names)} "
            f"argument(s) ({', '.join(names)}), got {got}"
        )


def eval_real(e: Expr, interp: Interpretation, point) -> RealResult:
    """Evaluate at a tuple of finite reals ordered like the variable sequence."""
    pt = tuple(float(v) for v in point)
    _check_arity(e, len(pt))
    for v in pt:
        if not math.isfinite(v):
            raise ValueError("point coordinates must be finite reals")
    v = compile_real(e, interp)(pt)
    return UNDEFINED if v is None else RealResult.defined(v)


def eval_interval(e: Expr, interp: Interpretation, box) -> Interval:
    """Evaluate over a box (a ``Box`` or any sequence of intervals)."""
    dims = tuple(box.dims) if isinstance(box, Box) else tuple(box)
    _check_arity(e, len(dims))
    for d in dims:
        if not isinstance(d, Interval):
            raise TypeError("box coordinates must be intervals")
    return compile_interval(e, interp)(dims)
