"""Command-line front end.

Four subcommands over the same expression/box plumbing:

* ``eval``    evaluate an expression over bound intervals
* ``refine``  shrink the box toward a point and report convergence
* ``enclose`` subdivision enclosure at a tolerance
* ``check``   sample points and count inclusion violations

Exit codes: 0 success (refine/enclose: converged; check: no violations),
1 check found violations, 2 expression/literal parse error, 3 binding
coverage error, 4 did not converge, 5 refinement target rejected.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import check_convergence, refine_toward, subdivide_enclosure
from .expr import ParseError, parse, variable_sequence
from .interval import Box, format_interval, hull_bounds, parse_interval
from .semantics import default_interpretation, eval_interval, mode_select
from .oracle import sample_inclusion

__all__ = ["main"]


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _interpretation(mode):
    interp = default_interpretation()
    if mode:
        interp = mode_select(interp, mode)
    return interp


def _parse_expression(text: str):
    try:
        return parse(text)
    except ParseError as exc:
        raise _CliError(2, f"cannot parse expression: {exc}") from None


def _parse_bindings(var_flags):
    bindings = {}
    for flag in var_flags or ():
        name, sep, text = flag.partition("=")
        name = name.strip()
        if not sep or not name:
            raise _CliError(2, f"--var needs NAME=[lo,hi], got {flag!r}")
        if name in bindings:
            raise _CliError(3, f"variable {name!r} bound more than once")
        try:
            bindings[name] = parse_interval(text)
        except ValueError as exc:
            raise _CliError(2, str(exc)) from None
    return bindings


def _assemble(expr_text: str, var_flags):
    """Parse and bind; returns (expr, names, constants, user names, box)."""
    e, consts = _parse_expression(expr_text)
    bindings = _parse_bindings(var_flags)
    names = variable_sequence(e)
    constants = {b.name: b for b in consts}
    user_names = [n for n in names if n not in constants]
    missing = [n for n in user_names if n not in bindings]
    if missing:
        raise _CliError(3, f"missing binding(s) for: {', '.join(missing)}")
    extra = [n for n in bindings if n not in user_names]
    if extra:
        raise _CliError(3, f"binding(s) for unknown variable(s): {', '.join(extra)}")
    dims = []
    for n in names:
        if n in constants:
            v = constants[n].value
            dims.append(hull_bounds(v, v))
        else:
            dims.append(bindings[n])
    return e, names, constants, user_names, Box(tuple(dims))


def _parse_point(at_text: str, names, constants, user_names):
    tokens = [t.strip() for t in at_text.split(",")]
    if len(tokens) != len(user_names):
        raise _CliError(
            2,
            f"--at needs {len(user_names)} value(s) for {', '.join(user_names)}, "
            f"got {len(tokens)}",
        )
    try:
        values = [float(t) for t in tokens]
    except ValueError as exc:
        raise _CliError(2, f"bad --at value: {exc}") from None
    by_name = dict(zip(user_names, values))
    point = []
    for n in names:
        if n in constants:
            point.append(float(constants[n].value))
        else:
            point.append(by_name[n])
    return tuple(point)


def _emit(args, *, result=None, widths=None, converged=None, violations=None, text_lines=()):
    if args.json:
        payload = {
            "result": result,
            "mode": args.mode or "default",
            "widths": widths,
            "converged": converged,
            "violations": violations,
        }
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _cmd_eval(args) -> int:
    e, _, _, _, box = _assemble(args.expression, args.var)
    iv = eval_interval(e, _interpretation(args.mode), box)
    text = format_interval(iv)
    _emit(args, result=text, text_lines=(text,))
    return 0


def _cmd_refine(args) -> int:
    e, names, constants, user_names, box = _assemble(args.expression, args.var)
    interp = _interpretation(args.mode)
    point = _parse_point(args.at, names, constants, user_names)
    try:
        seq = refine_toward(box, point, args.steps)
        report = check_convergence(e, interp, seq, args.tol)
    except ValueError as exc:
        raise _CliError(5, str(exc)) from None
    text = format_interval(report.enclosure)
    lines = (
        f"enclosure: {text}",
        "widths: " + " ".join(f"{w:.17g}" for w in report.widths),
        f"converged: {'yes' if report.converged else 'no'}",
    )
    _emit(
        args,
        result=text,
        widths=list(report.widths),
        converged=report.converged,
        text_lines=lines,
    )
    return 0 if report.converged else 4


def _cmd_enclose(args) -> int:
    e, _, _, _, box = _assemble(args.expression, args.var)
    interp = _interpretation(args.mode)
    try:
        report = subdivide_enclosure(e, interp, box, args.tol, args.max_boxes)
    except ValueError as exc:
        raise _CliError(5, str(exc)) from None
    text = format_interval(report.enclosure)
    lines = (
        f"enclosure: {text}",
        f"width: {report.widths[-1]:.17g}",
        f"iterations: {report.iterations}",
        f"converged: {'yes' if report.converged else 'no'}",
    )
    _emit(
        args,
        result=text,
        widths=list(report.widths),
        converged=report.converged,
        text_lines=lines,
    )
    return 0 if report.converged else 4


def _cmd_check(args) -> int:
    e, _, _, _, box = _assemble(args.expression, args.var)
    interp = _interpretation(args.mode)
    if not box.is_bounded:
        raise _CliError(5, "check needs bounded variable intervals")
    iv = eval_interval(e, interp, box)
    violations = sample_inclusion(e, interp, box, samples=args.samples, seed=args.seed)
    text = format_interval(iv)
    lines = (f"result: {text}", f"violations: {violations}")
    _emit(args, result=text, violations=violations, text_lines=lines)
    return 0 if violations == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relival",
        description="Interval evaluation of arithmetic expressions with "
        "outward rounding and total relational division and roots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("expression", help="expression text, e.g. 'x*y + sqrt(z)'")
    common.add_argument(
        "--var",
        action="append",
        metavar="NAME=[lo,hi]",
        help="bind a variable to an interval (repeatable); bounds may be "
        "decimal literals, inf, or -inf, and round outward",
    )
    common.add_argument(
        "--mode",
        choices=("relational", "canonical"),
        help="rebind / and sqrt as a family (default: relational division, "
        "image sqrt; sqrtr is always relational)",
    )
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate over the bound box")
    p_eval.set_defaults(fn=_cmd_eval)

    p_refine = sub.add_parser(
        "refine", parents=[common], help="halve the box toward a point and test convergence"
    )
    p_refine.add_argument("--at", required=True, metavar="v1,v2,...",
                          help="target point, one value per variable in first-use order")
    p_refine.add_argument("--steps", type=int, default=40, help="halving steps (default 40)")
    p_refine.add_argument("--tol", type=float, default=1e-9,
                          help="final width tolerance (default 1e-9)")
    p_refine.set_defaults(fn=_cmd_refine)

    p_enc = sub.add_parser(
        "enclose", parents=[common], help="subdivision enclosure at a tolerance"
    )
    p_enc.add_argument("--tol", type=float, required=True, help="leaf box width tolerance")
    p_enc.add_argument("--max-boxes", type=int, default=4096, dest="max_boxes",
                       help="box budget (default 4096)")
    p_enc.set_defaults(fn=_cmd_enclose)

    p_chk = sub.add_parser(
        "check", parents=[common], help="sample points and count inclusion violations"
    )
    p_chk.add_argument("--samples", type=int, default=1000, help="sample count (default 1000)")
    p_chk.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p_chk.set_defaults(fn=_cmd_check)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
