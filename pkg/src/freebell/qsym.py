"""Quasi-symmetric functions on the fundamental (``QF``) and monomial (``QM``) bases.

The product is computed by lifting ``F_I`` to a permutation with descent
composition ``I``, multiplying in FQSym and projecting back; the descent
lemma for shuffles on disjoint alphabets makes the result independent of the
lifts.  The five half-products are implemented by their Hopf-algebraic
closed formulas, which only use the coproduct, the antipode and the two
composition gluings ``I.J`` (``concat_product``) and ``I|>J``
(``near_concat_product``).  Their lift-and-project counterparts live in
:func:`half_products_lift` as an independent check.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, Tuple

from . import fqsym
from .core.words import (
    Composition,
    DendriformUndefinedError,
    canonical_lift,
    check_composition,
    concat,
    conjugate,
    deconcatenations,
    descent_composition,
    inverse,
    mirror,
    near_concat,
    refinements,
)
from .freemod import LinComb, Tensor2

HALF_PRODUCT_KINDS = ("<'", ">'", "<", ">", "<G")


def QF(*comps, coeff=1) -> LinComb:
    """``QF((2, 1))`` is ``F_{21}``; several arguments give a sum."""
    return LinComb("QF", [(check_composition(c), coeff) for c in comps])


def QM(*comps, coeff=1) -> LinComb:
    return LinComb("QM", [(check_composition(c), coeff) for c in comps])


ONE = LinComb("QF", {(): 1})


def _expect_F(a: LinComb) -> LinComb:
    if a.basis == "QM":
        return f_m_convert(a, "QF")
    if a.basis != "QF":
        raise TypeError("expected a QSym element, got basis %s" % a.basis)
    return a


def counit(a: LinComb) -> int:
    return _expect_F(a)[()]


# ---------------------------------------------------------------- product

@lru_cache(maxsize=None)
def _fund_product(i: Composition, j: Composition) -> Tuple[Tuple[Composition, int], ...]:
    if not i or not j:
        return ((i + j, 1),)
    prod = fqsym.f_product(fqsym.F(canonical_lift(i)), fqsym.F(canonical_lift(j)))
    return tuple(fqsym.project_to_qsym(prod).items())


def qsym_product(a: LinComb, b: LinComb) -> LinComb:
    a, b = _expect_F(a), _expect_F(b)
    acc: Dict = {}
    for i, ci in a.items():
        for j, cj in b.items():
            c = ci * cj
            for k, ck in _fund_product(i, j):
                acc[k] = acc[k] + c * ck if k in acc else c * ck
    return LinComb("QF", acc)


# --------------------------------------------------- Hopf structure

def coproduct(a: LinComb) -> Tensor2:
    """``Delta F_J = sum F_H # F_K`` over ``J = H.K`` and ``J = H|>K``."""
    a = _expect_F(a)
    out: Dict = {}
    for j, c in a.items():
        for h, k in deconcatenations(j):
            out[(h, k)] = out.get((h, k), 0) + c
    return Tensor2("QF", "QF", out)


def antipode(a: LinComb) -> LinComb:
    """``S(F_H) = (-1)^|H| F_{H~}``."""
    a = _expect_F(a)
    return LinComb("QF", {conjugate(h): (-1) ** sum(h) * c for h, c in a.items()})


def bar(a: LinComb) -> LinComb:
    """``F_I -> F_{mirror(I)}``."""
    return _expect_F(a).map_keys(mirror)


def concat_product(a: LinComb, b: LinComb) -> LinComb:
    """``F_I . F_J = F_{IJ}``."""
    a, b = _expect_F(a), _expect_F(b)
    return LinComb("QF", [(concat(i, j), ci * cj) for i, ci in a.items() for j, cj in b.items()])


def near_concat_product(a: LinComb, b: LinComb) -> LinComb:
    """``F_I |> F_J = F_{I|>J}``; undefined when either index is empty."""
    a, b = _expect_F(a), _expect_F(b)
    return LinComb("QF", [(near_concat(i, j), ci * cj) for i, ci in a.items() for j, cj in b.items()])


def _near_concat_unital(a: LinComb, b: LinComb) -> LinComb:
    # inside the closed formulas, F_() acts as a unit for |>
    out = []
    for i, ci in a.items():
        for j, cj in b.items():
            k = near_concat(i, j) if i and j else i + j
            out.append((k, ci * cj))
    return LinComb("QF", out)


def _basis(i: Composition) -> LinComb:
    return LinComb("QF", {i: 1})


def _nonzero_positive(a: LinComb, b: LinComb) -> None:
    if not a or not b or () in a or () in b:
        raise DendriformUndefinedError()


def half_products(a: LinComb, b: LinComb, kind: str) -> LinComb:
    """Half-products on QSym by closed formulas.

    ``<'``: ``f <' g = sum (S(g1) . f) g2``;
    ``>'``: ``f >' g = sum (S(f1) |> g) f2``;
    ``<`` : ``f < g = sum g1 (f |> S(g2))``;
    ``>`` : ``f > g = sum f1 (g . S(f2))``;
    ``<G``: ``f <G g = sum g2 (S(g1) |> f)``.
    """
    a, b = _expect_F(a), _expect_F(b)
    _nonzero_positive(a, b)
    if kind not in HALF_PRODUCT_KINDS:
        raise ValueError("unknown half-product %r" % kind)
    split = b if kind in ("<'", "<", "<G") else a
    other = a if split is b else b
    out = LinComb.zero("QF")
    for (h, k), c in coproduct(split).items():
        x1, x2 = _basis(h), _basis(k)
        if kind == "<'":
            term = qsym_product(concat_product(antipode(x1), other), x2)
        elif kind == ">'":
            term = qsym_product(_near_concat_unital(antipode(x1), other), x2)
        elif kind == "<":
            term = qsym_product(x1, _near_concat_unital(other, antipode(x2)))
        elif kind == ">":
            term = qsym_product(x1, concat_product(other, antipode(x2)))
        else:
            term = qsym_product(x2, _near_concat_unital(antipode(x1), other))
        out = out + term.scale(c)
    return out


_LIFT_OPS = {
    "<'": lambda x, y: fqsym.dendriform_F_primed(x, y, "<"),
    ">'": lambda x, y: fqsym.dendriform_F_primed(x, y, ">"),
    "<": lambda x, y: fqsym.dendriform_F(x, y, "<"),
    ">": lambda x, y: fqsym.dendriform_F(x, y, ">"),
    "<G": fqsym.grinberg_prec,
}


def lift(a: LinComb) -> LinComb:
    """Linear section QSym -> FQSym sending ``F_I`` to ``F_{lift(I)}``."""
    return _expect_F(a).map_keys(canonical_lift, "F")


def half_products_lift(a: LinComb, b: LinComb, kind: str) -> LinComb:
    """The same half-products computed by lifting to FQSym and projecting."""
    a, b = _expect_F(a), _expect_F(b)
    _nonzero_positive(a, b)
    return fqsym.project_to_qsym(_LIFT_OPS[kind](lift(a), lift(b)))


# ---------------------------------------------- two-alphabet calculus

def quasi_diff(j: Composition, f: LinComb) -> LinComb:
    """``R_J^perp f``: the right tensor factors of ``Delta f`` paired with ``F_J`` on the left."""
    f = _expect_F(f)
    j = tuple(j)
    acc: Dict = {}
    for (h, k), c in coproduct(f).items():
        if h == j:
            acc[k] = acc.get(k, 0) + c
    return LinComb("QF", acc)


def expand_x_minus_y(f: LinComb) -> Tensor2:
    """``f(X - Y) = sum_J S(F_J)(Y) R_J^perp(f)(X)``; keys are ``(Y-index, X-index)``."""
    f = _expect_F(f)
    out: Dict = {}
    for j in sorted({h for (h, _k) in coproduct(f)}):
        rj = quasi_diff(j, f)
        for y, cy in antipode(_basis(j)).items():
            for x, cx in rj.items():
                out[(y, x)] = out.get((y, x), 0) + cy * cx
    return Tensor2("QF", "QF", out)


def prec_prime_via_xy(f: LinComb, g: LinComb) -> LinComb:
    """``f <' g (X) = [g(X-Y) ._Y f(Y)]_{Y=X}``."""
    f, g = _expect_F(f), _expect_F(g)
    _nonzero_positive(f, g)
    out = LinComb.zero("QF")
    for (y, x), c in expand_x_minus_y(g).items():
        out = out + qsym_product(concat_product(_basis(y), f), _basis(x)).scale(c)
    return out


# ------------------------------------------------------- F <-> M

def f_m_convert(a: LinComb, target: str) -> LinComb:
    """``F_I = sum_{J finer than I} M_J`` and its Moebius inverse."""
    if a.basis == target:
        return a
    acc: Dict = {}
    if a.basis == "QF" and target == "QM":
        for i, c in a.items():
            for j in refinements(i):
                acc[j] = acc.get(j, 0) + c
        return LinComb("QM", acc)
    if a.basis == "QM" and target == "QF":
        for i, c in a.items():
            for j in refinements(i):
                sign = (-1) ** (len(j) - len(i))
                acc[j] = acc.get(j, 0) + sign * c
        return LinComb("QF", acc)
    raise TypeError("cannot convert %s to %s" % (a.basis, target))


# ------------------------------------------------------ dual immaculate

def standard_immaculate_tableaux(c: Composition) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Fillings of rows of lengths ``c`` (top row first) by ``1..n``, rows
    increasing and first column increasing downwards."""
    c = tuple(c)
    n = sum(c)

    def rec(row: int, remaining: Tuple[int, ...]):
        if row == len(c):
            yield ()
            return
        first, rest = remaining[0], remaining[1:]
        for others in combinations(rest, c[row] - 1):
            used = set(others)
            left = tuple(x for x in rest if x not in used)
            for tail in rec(row + 1, left):
                yield ((first,) + others,) + tail

    yield from rec(0, tuple(range(1, n + 1)))


def tableau_reading_word(t) -> Tuple[int, ...]:
    """Rows read from bottom to top, each left to right."""
    return tuple(x for row in reversed(t) for x in row)


def tableau_descent_composition(t) -> Composition:
    """``D(T)``: the recoil composition of the reading word."""
    return descent_composition(inverse(tableau_reading_word(t)))


def tableau_descent_set(t) -> Tuple[int, ...]:
    """``{i : i+1 sits in a lower row than i}``, read directly off ``T``."""
    row_of = {x: r for r, row in enumerate(t) for x in row}
    n = len(row_of)
    return tuple(i for i in range(1, n) if row_of[i + 1] > row_of[i])


def dual_immaculate(c: Composition, route: str = "tableaux") -> LinComb:
    c = check_composition(c)
    if not c:
        return ONE
    if route == "tableaux":
        return LinComb.from_keys("QF", (tableau_descent_composition(t) for t in standard_immaculate_tableaux(c)))
    if route == "grinberg_iterated":
        acc = QF((c[-1],))
        for part in reversed(c[:-1]):
            acc = half_products(acc, QF((part,)), ">'")
        return acc
    if route == "bar_CI":
        return bar(fqsym.project_to_qsym(fqsym.nested_prec(c)))
    raise ValueError("unknown route %r" % route)


DUAL_IMMACULATE_ROUTES = ("bar_CI", "grinberg_iterated", "tableaux")
