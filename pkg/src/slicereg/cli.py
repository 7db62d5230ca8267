"""Command-line interface: ``slicereg <command> ...``.

Exit status is 0 on success, 1 when the mathematical answer is negative
(e.g. a polynomial does not vanish on the set) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .division import div_monic
from .errors import PolySyntaxError, SliceRegError
from .ideals import RightIdeal, VLeaf, enlarge_zero, set_from_json, slice_set
from .parser import infer_nvars, parse_poly
from .polyring import SlicePoly, evaluate
from .quatcore import Quaternion
from .slicegeom import Balloon, SliceFrame, represent, shadow
from .vanishing import (decompose_at_point, factor_slab, vanishes_on_arranged_sphere,
                        vanishes_on_balloon, vanishes_on_sphere_point_set,
                        vanishes_on_sphere_product)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- input helpers -----------------------------------------------------------

def load_json(text: str):
    """Inline JSON, or the contents of a JSON file when ``text`` names one."""
    path = Path(text)
    try:
        if path.is_file():
            return json.loads(path.read_text())
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {text!r}: {exc}") from None


def _is_json(text: str) -> bool:
    return Path(text).is_file() or text.lstrip().startswith("{")


def load_poly(text: str, nvars: int | None) -> SlicePoly:
    """Polynomial from a JSON file, inline JSON object or expression."""
    if _is_json(text):
        p = SlicePoly.from_json(load_json(text))
        return p.extend(nvars) if nvars and nvars > p.nvars else p
    return parse_poly(text, nvars or infer_nvars(text))


def load_quaternion(value) -> Quaternion:
    if isinstance(value, list):
        return Quaternion.from_json(value)
    if isinstance(value, (str, int)):
        return Quaternion.parse(str(value))
    raise UsageError(f"cannot read a quaternion from {value!r}")


def load_point(text: str) -> tuple[Quaternion, ...]:
    data = load_json(text)
    if not isinstance(data, list):
        raise UsageError("a point is a JSON list of quaternions")
    return tuple(load_quaternion(v) for v in data)


def quaternion_arg(text: str) -> Quaternion:
    try:
        return load_quaternion(json.loads(text))
    except json.JSONDecodeError:
        return Quaternion.parse(text)


def emit(data) -> None:
    print(json.dumps(data, indent=2))


# -- commands ----------------------------------------------------------------

def cmd_eval(args) -> int:
    point = load_point(args.at)
    p = load_poly(args.poly, args.nvars or len(point))
    value = evaluate(p, point)
    if args.json:
        emit(value.to_json())
    else:
        print(value)
    return EXIT_OK


def cmd_mul(args) -> int:
    n = args.nvars or max(infer_nvars(args.left), infer_nvars(args.right))
    left, right = load_poly(args.left, n), load_poly(args.right, n)
    product = left * right
    if args.json:
        emit(product.to_json())
    else:
        print(product)
    return EXIT_OK


def cmd_divmod(args) -> int:
    n = args.nvars or max(infer_nvars(args.poly), infer_nvars(args.by), args.m)
    p, divisor = load_poly(args.poly, n), load_poly(args.by, n)
    q, r = div_monic(p, divisor, args.m)
    if args.json:
        emit({"quotient": q.to_json(), "remainder": r.to_json()})
    else:
        print(f"quotient: {q}")
        print(f"remainder: {r}")
    return EXIT_OK


def _report(outcome) -> int:
    emit(outcome.to_json())
    return EXIT_OK if outcome else EXIT_NEGATIVE


def cmd_decompose(args) -> int:
    point = load_point(args.at)
    p = load_poly(args.poly, args.nvars or len(point))
    return _report(decompose_at_point(p, point))


def cmd_member(args) -> int:
    def poly(arity: int) -> SlicePoly:
        return load_poly(args.poly, args.nvars or arity)

    if args.balloon:
        b = Balloon.from_json(load_json(args.balloon))
        return _report(vanishes_on_balloon(poly(b.nvars), b))
    if args.point:
        point = load_point(args.point)
        return _report(decompose_at_point(poly(len(point)), point))
    if args.slab:
        if not args.m:
            raise UsageError("--slab needs -m")
        a = quaternion_arg(args.slab)
        p = poly(max(args.m, 1 if _is_json(args.poly) else infer_nvars(args.poly)))
        outcome = factor_slab(p, a, args.m)
        if isinstance(outcome, SlicePoly):
            divisor = SlicePoly.var(args.m, p.nvars) - a
            emit({"result": "vanishing", "shape": "slab",
                  "divisor": divisor.to_json(), "divisor_text": str(divisor),
                  "cofactor": outcome.to_json(), "cofactor_text": str(outcome)})
            return EXIT_OK
        return _report(outcome)
    if args.spheres:
        spheres = load_point(args.spheres)
        if args.tail:
            tail = load_point(args.tail)
            return _report(vanishes_on_sphere_point_set(poly(len(spheres) + len(tail)),
                                                        spheres, tail))
        p = poly(max(len(spheres), 1 if _is_json(args.poly) else infer_nvars(args.poly)))
        return _report(vanishes_on_sphere_product(p, spheres))
    if args.arranged:
        base = load_point(args.arranged)
        return _report(vanishes_on_arranged_sphere(poly(len(base)), base))
    raise UsageError("member needs one of --balloon, --point, --slab, --spheres, --arranged")


def _load_ideal(args) -> RightIdeal:
    if args.ideal:
        return RightIdeal.from_json(load_json(args.ideal))
    if not args.generators:
        raise UsageError("give generators or --ideal")
    n = args.nvars or max(infer_nvars(g) for g in args.generators)
    return RightIdeal(tuple(load_poly(g, n) for g in args.generators))


def cmd_enlarge(args) -> int:
    ideal = _load_ideal(args)
    report = enlarge_zero(ideal, load_point(args.at))
    emit(report.to_json())
    return EXIT_OK if report.balloons else EXIT_NEGATIVE


def cmd_slice(args) -> int:
    frame = SliceFrame(quaternion_arg(args.K), quaternion_arg(args.L))
    if args.set:
        s = set_from_json(load_json(args.set))
    elif args.generators:
        n = args.nvars or max(infer_nvars(g) for g in args.generators)
        s = VLeaf(tuple(load_poly(g, n) for g in args.generators))
    else:
        raise UsageError("give generators or --set")
    emit(slice_set(s, frame).to_json())
    return EXIT_OK


def cmd_repform(args) -> int:
    z = load_point(args.at)
    p = load_poly(args.poly, args.nvars or len(z))
    J, K = quaternion_arg(args.J), quaternion_arg(args.K)
    value = represent(p, J, K, z)
    direct = evaluate(p, tuple(shadow(zl, K, J) for zl in z))
    if args.json:
        emit({"value": value.to_json(), "direct": direct.to_json(), "agree": value == direct})
    else:
        print(value)
    return EXIT_OK if value == direct else EXIT_NEGATIVE


def cmd_selftest(args) -> int:
    from .checks import CHECKS, run_check
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("SLICEREG_SEED", "0"))
    numbers = args.only or range(1, len(CHECKS) + 1)
    ok = True
    print(f"selftest seed={seed}")
    for number in numbers:
        if not 1 <= number <= len(CHECKS):
            raise UsageError(f"no check number {number}")
        result = run_check(number, seed)
        print(result.line(), flush=True)
        ok = ok and result.passed
    return EXIT_OK if ok else EXIT_NEGATIVE


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicereg",
        description="Exact slice regular polynomials over rational quaternions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-n", "--nvars", type=int, help="number of variables (default: inferred)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = command("eval", cmd_eval, "evaluate a polynomial at a point")
    p.add_argument("poly", help="expression, JSON object or JSON file")
    p.add_argument("--at", required=True, help="point: JSON list of quaternions")

    p = command("mul", cmd_mul, "star product of two polynomials")
    p.add_argument("left")
    p.add_argument("right")

    p = command("divmod", cmd_divmod, "divide by a polynomial monic in q_m")
    p.add_argument("poly")
    p.add_argument("--by", required=True, help="monic divisor")
    p.add_argument("-m", type=int, required=True, help="division variable index")

    p = command("decompose", cmd_decompose, "decompose a polynomial at a zero")
    p.add_argument("poly")
    p.add_argument("--at", required=True)

    p = command("member", cmd_member, "decide vanishing on a structured set")
    p.add_argument("poly")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--balloon", help="balloon JSON {head, tail} or file")
    group.add_argument("--point", help="point JSON")
    group.add_argument("--slab", help="quaternion a of the slab q_m = a")
    group.add_argument("--spheres", help="JSON list of sphere representatives")
    group.add_argument("--arranged", help="arranged base point JSON")
    p.add_argument("--tail", help="fixed tail point for --spheres")
    p.add_argument("-m", type=int, help="slab variable index")

    p = command("enlarge", cmd_enlarge, "balloons through a common zero of an ideal")
    p.add_argument("generators", nargs="*")
    p.add_argument("--ideal", help="ideal JSON or file")
    p.add_argument("--at", required=True)

    p = command("slice", cmd_slice, "restrict a slice algebraic set to C_K^n")
    p.add_argument("generators", nargs="*")
    p.add_argument("--set", help="set descriptor JSON or file")
    p.add_argument("--K", required=True)
    p.add_argument("--L", required=True)

    p = command("repform", cmd_repform, "representation formula on the J-slice")
    p.add_argument("poly")
    p.add_argument("--J", required=True)
    p.add_argument("--K", required=True)
    p.add_argument("--at", required=True, help="point of C_K^n")

    p = command("selftest", cmd_selftest, "run the seeded property checks")
    p.add_argument("--seed", type=int, default=None,
                   help="random seed (default: $SLICEREG_SEED or 0)")
    p.add_argument("--only", type=int, nargs="+", help="check numbers to run")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PolySyntaxError as exc:
        print(f"slicereg: syntax error: {exc}", file=sys.stderr)
    except (UsageError, SliceRegError, ValueError, KeyError, TypeError) as exc:
        print(f"slicereg: {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
