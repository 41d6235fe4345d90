"""Self-checks run by ``freebell verify``.

Each suite returns a list of :class:`Check` records; a suite passes when all
of its checks do.  Degree bounds default to values that finish in seconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Callable, Dict, List

from . import bell, bellhopf, fqsym, qsym
from .core.setpartition import bell_number, set_partitions
from .core.words import all_permutations, avoids_21_3, compositions, compositions_upto


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def to_json_obj(self) -> dict:
        return {"suite": self.suite, "name": self.name, "ok": self.ok, "detail": self.detail}


def _run(suite: str, name: str, fn: Callable[[], object]) -> Check:
    try:
        res = fn()
    except Exception as exc:  # a crash is a failure, reported with its message
        return Check(suite, name, False, "%s: %s" % (type(exc).__name__, exc))
    if res is True or res is None:
        return Check(suite, name, True)
    return Check(suite, name, False, str(res))


def _first_failure(pairs) -> object:
    for label, ok in pairs:
        if not ok:
            return "fails at %s" % (label,)
    return True


def suite_bell(max_degree: int = 7) -> List[Check]:
    n6 = min(max_degree, 6)
    return [
        _run("bell", "quasideterminant equals recursion", lambda: _first_failure(
            (n, bell.quasideterminant_bell_q(n) == bell.bell_prime_q(n)) for n in range(1, n6 + 1))),
        _run("bell", "coefficient product formula", lambda: _first_failure(
            (c, bell.bell_prime_q(sum(c))[c] == bell.coefficient_formula_q(c))
            for c in compositions_upto(max_degree) if c)),
        _run("bell", "free Bell equals set-partition sum", lambda: _first_failure(
            (n, bell.free_bell(n) == bell.free_bell_from_partitions(n)) for n in range(1, max_degree + 1))),
        _run("bell", "specialization gives q-Bell", lambda: _first_failure(
            (n, bell.specialize_free_bell(bell.free_bell(n)) == bell.bell_double_prime_q(n))
            for n in range(1, max_degree + 1))),
        _run("bell", "hook formula", lambda: _first_failure(
            (c, bell.hook_length_c(c) == bell.c_coefficient(c, "qpoly"))
            for c in compositions_upto(max_degree) if c)),
    ]


def _basis_pairs(total: int, basis: str):
    for a in range(1, total):
        for b in range(1, total - a + 1):
            for s in all_permutations(a):
                for t in all_permutations(b):
                    yield s, t


def suite_dendriform(max_degree: int = 6) -> List[Check]:
    def axioms():
        top = max_degree
        for a in range(1, top - 1):
            for b in range(1, top - a):
                for c in range(1, top - a - b + 1):
                    for x, y, z in _cartesian(all_permutations(a), all_permutations(b), all_permutations(c)):
                        X, Y, Z = fqsym.G(x), fqsym.G(y), fqsym.G(z)
                        lt = lambda u, v: fqsym.dendriform_G(u, v, "<")
                        gt = lambda u, v: fqsym.dendriform_G(u, v, ">")
                        if lt(lt(X, Y), Z) != lt(X, fqsym.g_product(Y, Z)):
                            return "(x<y)<z at %s" % ((x, y, z),)
                        if lt(gt(X, Y), Z) != gt(X, lt(Y, Z)):
                            return "(x>y)<z at %s" % ((x, y, z),)
                        if gt(fqsym.g_product(X, Y), Z) != gt(X, gt(Y, Z)):
                            return "(xy)>z at %s" % ((x, y, z),)
        return True

    def splitting():
        for s, t in _basis_pairs(max_degree + 1, "F"):
            G1, G2, F1, F2 = fqsym.G(s), fqsym.G(t), fqsym.F(s), fqsym.F(t)
            if fqsym.dendriform_G(G1, G2, "<") + fqsym.dendriform_G(G1, G2, ">") != fqsym.g_product(G1, G2):
                return "G at %s" % ((s, t),)
            prod = fqsym.f_product(F1, F2)
            if fqsym.dendriform_F(F1, F2, "<") + fqsym.dendriform_F(F1, F2, ">") != prod:
                return "F at %s" % ((s, t),)
            if fqsym.dendriform_F_primed(F1, F2, "<") + fqsym.dendriform_F_primed(F1, F2, ">") != prod:
                return "F' at %s" % ((s, t),)
        return True

    def qsym_oracle():
        for a in range(1, max_degree):
            for b in range(1, max_degree - a + 1):
                for i in compositions(a):
                    for j in compositions(b):
                        for kind in qsym.HALF_PRODUCT_KINDS:
                            x, y = qsym.QF(i), qsym.QF(j)
                            if qsym.half_products(x, y, kind) != qsym.half_products_lift(x, y, kind):
                                return "%s at %s" % (kind, (i, j))
        return True

    def xy_route():
        for a in range(1, max_degree):
            for b in range(1, max_degree - a + 1):
                for i in compositions(a):
                    for j in compositions(b):
                        x, y = qsym.QF(i), qsym.QF(j)
                        if qsym.prec_prime_via_xy(x, y) != qsym.half_products(x, y, "<'"):
                            return "at %s" % ((i, j),)
        return True

    return [
        _run("dendriform", "dendriform axioms on G", axioms),
        _run("dendriform", "half-products split the product", splitting),
        _run("dendriform", "QSym closed formulas match lifts", qsym_oracle),
        _run("dendriform", "two-alphabet route for <'", xy_route),
    ]


def suite_dualimm(max_degree: int = 7) -> List[Check]:
    def routes():
        for c in compositions_upto(max_degree):
            vals = [qsym.dual_immaculate(c, r) for r in qsym.DUAL_IMMACULATE_ROUTES]
            if any(v != vals[0] for v in vals[1:]):
                return "routes disagree at %s" % (c,)
        return True

    return [_run("dualimm", "three routes agree", routes)]


def suite_hopf(max_degree: int = 6) -> List[Check]:
    n7 = min(max_degree + 1, 7)

    def counts():
        return _first_failure((n, len(bellhopf.bell_classes(n)) == bell_number(n)) for n in range(1, n7 + 1))

    def intervals():
        return _first_failure((str(c.partition), c.is_interval())
                              for n in range(1, n7 + 1) for c in bellhopf.bell_classes(n))

    def maxima():
        return _first_failure(
            (n, {c.max for c in bellhopf.bell_classes(n)} == {s for s in all_permutations(n) if avoids_21_3(s)})
            for n in range(1, n7 + 1))

    def extensions():
        for n in range(1, max_degree + 1):
            for c in bellhopf.bell_classes(n):
                p = bellhopf.poset_of(c.max)
                if bellhopf.linear_extensions(p) != c.members:
                    return "class %s" % c.partition
                if not bellhopf.regularity_check(p):
                    return "poset of %s not regular" % c.partition
        return True

    def closure():
        for a in range(max_degree + 1):
            for b in range(max_degree - a + 1):
                for pi in set_partitions(a):
                    for tau in set_partitions(b):
                        bellhopf.p_basis_product(pi, tau)
        for n in range(min(max_degree, 5) + 1):
            for pi in set_partitions(n):
                bellhopf.p_basis_coproduct(pi)
        return True

    return [
        _run("hopf", "class counts are Bell numbers", counts),
        _run("hopf", "classes are weak-order intervals", intervals),
        _run("hopf", "maxima are the 21-3 avoiders", maxima),
        _run("hopf", "classes are linear extensions of regular posets", extensions),
        _run("hopf", "P basis closed under product and coproduct", closure),
    ]


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "bell": suite_bell,
    "dendriform": suite_dendriform,
    "dualimm": suite_dualimm,
    "hopf": suite_hopf,
}


def run_suite(name: str, max_degree=None) -> List[Check]:
    names = list(SUITES) if name == "all" else [name]
    out: List[Check] = []
    for n in names:
        fn = SUITES[n]
        out.extend(fn() if max_degree is None else fn(max_degree))
    return out
