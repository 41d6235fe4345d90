"""Command-line interface.

Exit codes: 0 on success, 1 when a computation disagrees with itself
(route mismatch, failed verification), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import bell, bellhopf, qsym
from .core.words import format_word, parse_composition, parse_permutation
from .freemod import LinComb, render

DEFAULT_MAX_DEGREE = 8


class UsageError(Exception):
    pass


def _bounded(n: int, lo: int, hi: int, what: str = "n") -> int:
    if not lo <= n <= hi:
        raise UsageError("%s must be between %d and %d, got %d" % (what, lo, hi, n))
    return n


def _shape(text: str):
    try:
        c = parse_composition(text)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not c:
        raise UsageError("empty composition")
    return c


def _emit(obj, fmt: str) -> str:
    if fmt == "json":
        if isinstance(obj, LinComb):
            return json.dumps(obj.to_json_obj())
        return json.dumps(str(obj))
    return render(obj) if isinstance(obj, LinComb) else str(obj)


def cmd_bell(args) -> int:
    n = _bounded(args.n, 1, args.max_degree)
    fn = {
        "classic": bell.bell,
        "qprime": bell.bell_prime_q,
        "qdoubleprime": bell.bell_double_prime_q,
        "triangle": bell.bell_triangle,
        "qdet": bell.quasideterminant_bell_q,
    }[args.variant]
    print(_emit(fn(n), args.format))
    return 0


def cmd_dualimm(args) -> int:
    c = _shape(args.shape)
    _bounded(sum(c), 1, args.max_degree, "weight")
    routes = qsym.DUAL_IMMACULATE_ROUTES if args.route == "all" else (args.route,)
    results = {r: qsym.dual_immaculate(c, r) for r in routes}
    first = results[routes[0]]
    bad = [r for r in routes if results[r] != first]
    if bad:
        for r in routes:
            print("%s: %s" % (r, render(results[r])), file=sys.stderr)
        print("route mismatch: %s" % ", ".join(bad), file=sys.stderr)
        return 1
    print(_emit(first, args.format))
    return 0


def cmd_ccoeff(args) -> int:
    c = _shape(args.shape)
    _bounded(sum(c), 1, args.max_degree, "weight")
    print(_emit(bell.c_coefficient(c, args.form), args.format))
    return 0


def cmd_freebell(args) -> int:
    n = _bounded(args.n, 1, args.max_degree)
    fb = bell.free_bell(n)
    keys = sorted(fb, key=lambda k: tuple(-x for x in k))
    if args.format == "json":
        print(json.dumps({"n": n, "terms": [
            {"Y": list(k), "coeff": fb[k].to_json_obj()} for k in keys]}))
    else:
        for k in keys:
            print("%s: %s" % (render(LinComb("Y", {k: 1})), render(fb[k])))
    return 0


def cmd_classes(args) -> int:
    n = _bounded(args.n, 1, args.max_degree)
    if args.format == "json":
        print(bellhopf.classes_json(n))
    else:
        for c in bellhopf.bell_classes(n):
            print("%s  min=%s  max=%s  size=%d" % (c.partition, format_word(c.min), format_word(c.max), c.size))
    return 0


def cmd_poset(args) -> int:
    try:
        sigma = parse_permutation(args.sigma)
    except ValueError as exc:
        raise UsageError(str(exc))
    p = bellhopf.poset_of(sigma)
    if args.format == "dot":
        print(bellhopf.poset_to_dot(p))
    elif args.format == "json":
        print(json.dumps(bellhopf.poset_to_json_obj(p)))
    else:
        print(bellhopf.poset_to_text(p))
    return 0


def cmd_verify(args) -> int:
    from .verify import run_suite

    md = None if args.max_degree == DEFAULT_MAX_DEGREE else args.max_degree
    checks = run_suite(args.suite, md)
    if args.format == "json":
        print(json.dumps({"ok": all(c.ok for c in checks), "checks": [c.to_json_obj() for c in checks]}))
    else:
        for c in checks:
            line = "%s %s: %s" % ("PASS" if c.ok else "FAIL", c.suite, c.name)
            if c.detail:
                line += " (%s)" % c.detail
            print(line)
    return 0 if all(c.ok for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freebell", description="Free Bell polynomials and friends.")
    parser.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE,
                        help="upper bound on sizes (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, formats=("text", "json"), **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--max-degree", type=int, default=argparse.SUPPRESS)
        p.set_defaults(func=fn)
        return p

    p = add("bell", cmd_bell, help="noncommutative Bell polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=["classic", "qprime", "qdoubleprime", "triangle", "qdet"], default="classic")

    p = add("dualimm", cmd_dualimm, help="dual immaculate function")
    p.add_argument("--shape", required=True)
    p.add_argument("--route", choices=("all",) + qsym.DUAL_IMMACULATE_ROUTES, default="all")

    p = add("ccoeff", cmd_ccoeff, help="coefficient C_I of the free Bell polynomial")
    p.add_argument("--shape", required=True)
    p.add_argument("--form", choices=["fqsym", "qsym", "qpoly"], default="fqsym")

    p = add("freebell", cmd_freebell, help="free Bell polynomial")
    p.add_argument("--n", type=int, required=True)

    p = add("classes", cmd_classes, help="Bell classes of permutations")
    p.add_argument("--n", type=int, required=True)

    p = add("poset", cmd_poset, formats=("text", "json", "dot"), help="poset of a permutation")
    p.add_argument("--sigma", required=True)

    p = add("verify", cmd_verify, help="run self-checks")
    p.add_argument("--suite", choices=["all", "bell", "dendriform", "dualimm", "hopf"], default="all")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
