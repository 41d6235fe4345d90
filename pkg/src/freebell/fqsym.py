"""Free quasi-symmetric functions on the G and F bases.

Elements are :class:`~freebell.freemod.LinComb` objects tagged ``"G"`` or
``"F"`` whose keys are permutations (tuples).  ``F_s = G_{s^-1}``.

Two dendriform structures are provided.  The *max convention* splits the
product by where the largest letter of the result sits (G basis) or, dually,
by which factor supplies the last letter of the shifted shuffle (F basis).
The *first-letter* (primed) convention splits the shifted shuffle by which
factor supplies the first letter.  Half-products with a degree-0 operand are
undefined and raise :class:`DendriformUndefinedError`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, Tuple

from .core.qpoly import QPoly, q_pochhammer
from .core.words import (
    DendriformUndefinedError,
    Permutation,
    check_permutation,
    descent_composition,
    half_shuffle_first,
    half_shuffle_last,
    inverse,
    maj,
    schutzenberger,
    shift,
    shuffle,
    standardize,
)
from .freemod import LinComb, Tensor2, bilinear_extend

__all__ = [
    "G", "F", "S", "to_F", "to_G", "product", "g_product", "f_product",
    "dendriform_G", "dendriform_F", "dendriform_F_primed", "grinberg_prec",
    "coproduct_F", "bar_antinvolution", "schutzenberger_G", "project_to_qsym",
    "principal_specialization_times_pochhammer", "counit", "deshalf_lifts",
    "nested_prec", "principal_specialization",
]


def G(*perms, coeff=1) -> LinComb:
    """``G(132)``, ``G((1, 3, 2))`` or ``G(132, 231)`` for a sum."""
    return LinComb("G", [(_perm(p), coeff) for p in perms])


def F(*perms, coeff=1) -> LinComb:
    return LinComb("F", [(_perm(p), coeff) for p in perms])


def S(n: int) -> LinComb:
    """``S_n = G_{12...n}``; ``S(0)`` is the unit."""
    return LinComb("G", {tuple(range(1, n + 1)): 1})


def _perm(p) -> Permutation:
    if isinstance(p, int):
        p = tuple(int(ch) for ch in str(p))
    return check_permutation(p)


def to_F(a: LinComb) -> LinComb:
    if a.basis == "F":
        return a
    _expect(a, "G")
    return a.map_keys(inverse, "F")


def to_G(a: LinComb) -> LinComb:
    if a.basis == "G":
        return a
    _expect(a, "F")
    return a.map_keys(inverse, "G")


def _expect(a: LinComb, *bases: str) -> None:
    if a.basis not in bases:
        raise TypeError("expected an element on basis %s, got %s" % ("/".join(bases), a.basis))


def counit(a: LinComb) -> int:
    return a[()]


# ------------------------------------------------------------- products

@lru_cache(maxsize=None)
def _convolution(alpha: Permutation, beta: Permutation) -> Tuple[Permutation, ...]:
    """``alpha * beta``: all ``gamma = uv`` with ``Std(u) = alpha``, ``Std(v) = beta``."""
    k, l = len(alpha), len(beta)
    n = k + l
    out = []
    for vals in combinations(range(1, n + 1), k):
        chosen = set(vals)
        rest = [x for x in range(1, n + 1) if x not in chosen]
        u = tuple(vals[a - 1] for a in alpha)
        v = tuple(rest[b - 1] for b in beta)
        out.append(u + v)
    return tuple(out)


def _g_basis_product(alpha, beta) -> Dict:
    return {g: 1 for g in _convolution(alpha, beta)}


@lru_cache(maxsize=None)
def _shifted_shuffle(alpha: Permutation, beta: Permutation) -> Tuple[Permutation, ...]:
    return tuple(shuffle(alpha, shift(beta, len(alpha))))


def _f_basis_product(alpha, beta) -> Dict:
    return {g: 1 for g in _shifted_shuffle(alpha, beta)}


_g_prod = bilinear_extend(lambda a, b: LinComb("G", _g_basis_product(a, b)), "G")
_f_prod = bilinear_extend(lambda a, b: LinComb("F", _f_basis_product(a, b)), "F")


def g_product(a: LinComb, b: LinComb) -> LinComb:
    """Product on the G basis by convolution of permutations."""
    _expect(a, "G")
    _expect(b, "G")
    return _g_prod(a, b)


def f_product(a: LinComb, b: LinComb) -> LinComb:
    """Product on the F basis by the shifted shuffle."""
    _expect(a, "F")
    _expect(b, "F")
    return _f_prod(a, b)


def product(a: LinComb, b: LinComb) -> LinComb:
    """Product in the basis of ``a`` (``b`` is converted if needed)."""
    if a.basis == "G":
        return g_product(a, to_G(b))
    return f_product(a, to_F(b))


# --------------------------------------------------- dendriform, max rule

def _nonempty(alpha, beta) -> None:
    if not alpha or not beta:
        raise DendriformUndefinedError()


@lru_cache(maxsize=None)
def _g_dendriform(alpha: Permutation, beta: Permutation, side: str) -> Tuple[Permutation, ...]:
    _nonempty(alpha, beta)
    k = len(alpha)
    n = k + len(beta)
    out = []
    for g in _convolution(alpha, beta):
        max_left = n in g[:k]
        if (side == "<") == max_left:
            out.append(g)
    return tuple(out)


def _side(side: str) -> str:
    if side not in ("<", ">"):
        raise ValueError("side must be '<' or '>'")
    return side


def dendriform_G(a: LinComb, b: LinComb, side: str) -> LinComb:
    """Max-convention half-products on the G basis.

    ``side='<'`` keeps the terms of ``G_a G_b`` whose largest letter lies in
    the first ``|a|`` positions, ``side='>'`` the others.
    """
    _expect(a, "G")
    _expect(b, "G")
    side = _side(side)
    op = bilinear_extend(lambda x, y: LinComb.from_keys("G", _g_dendriform(x, y, side)), "G")
    return op(a, b)


@lru_cache(maxsize=None)
def _f_half(alpha: Permutation, beta: Permutation, side: str, first: bool) -> Tuple[Permutation, ...]:
    _nonempty(alpha, beta)
    sb = shift(beta, len(alpha))
    if first:
        return tuple(half_shuffle_first(alpha, sb, side))
    return tuple(half_shuffle_last(alpha, sb, side))


def dendriform_F(a: LinComb, b: LinComb, side: str) -> LinComb:
    """Last-letter half-shuffles of ``alpha`` and ``beta`` shifted by ``|alpha|``."""
    _expect(a, "F")
    _expect(b, "F")
    side = _side(side)
    op = bilinear_extend(lambda x, y: LinComb.from_keys("F", _f_half(x, y, side, False)), "F")
    return op(a, b)


def dendriform_F_primed(a: LinComb, b: LinComb, side: str) -> LinComb:
    """First-letter half-shuffles: ``au <' bv = a(u sh bv)``, ``au >' bv = b(au sh v)``."""
    _expect(a, "F")
    _expect(b, "F")
    side = _side(side)
    op = bilinear_extend(lambda x, y: LinComb.from_keys("F", _f_half(x, y, side, True)), "F")
    return op(a, b)


@lru_cache(maxsize=None)
def _grinberg(sigma: Permutation, tau: Permutation) -> Tuple[Permutation, ...]:
    _nonempty(sigma, tau)
    return tuple(half_shuffle_first(shift(sigma, len(tau)), tau, "<"))


def grinberg_prec(a: LinComb, b: LinComb) -> LinComb:
    """Flipped product ``F_s <_G F_t = F_{s[|t|] <' t}``."""
    _expect(a, "F")
    _expect(b, "F")
    op = bilinear_extend(lambda x, y: LinComb.from_keys("F", _grinberg(x, y)), "F")
    return op(a, b)


# ----------------------------------------------------------- coproduct

def coproduct_F(a: LinComb) -> Tensor2:
    """Deconcatenate and standardize: ``sum_{s=uv} F_Std(u) # F_Std(v)``."""
    _expect(a, "F")
    out: Dict = {}
    for s, c in a.items():
        for i in range(len(s) + 1):
            key = (standardize(s[:i]), standardize(s[i:]))
            out[key] = out.get(key, 0) + c
    return Tensor2("F", "F", out)


# ---------------------------------------------------------- involutions

def bar_antinvolution(a: LinComb) -> LinComb:
    """``F_s -> F_{w s w}`` with ``w`` the longest permutation (reverses products).

    The index map commutes with inversion, so the same rule holds on G.
    """
    _expect(a, "F", "G")
    return a.map_keys(schutzenberger)


def schutzenberger_G(a: LinComb) -> LinComb:
    _expect(a, "G")
    return a.map_keys(schutzenberger)


# ------------------------------------------------------------ projections

def project_to_qsym(a: LinComb) -> LinComb:
    """``F_s -> F_{C(s)}`` (G-basis input is converted first)."""
    a = to_F(a)
    return a.map_keys(descent_composition, "QF")


def principal_specialization_times_pochhammer(a: LinComb) -> QPoly:
    """``(q)_n a(1/(1-q))`` for homogeneous ``a`` of degree ``n``.

    Each ``F_s`` specializes to ``q^maj(C(s)) / (q)_n``, so the result is the
    polynomial ``sum_s c_s q^maj(C(s))``.
    """
    a = to_F(a)
    if not a:
        return QPoly()
    a.homogeneous_degree()
    total = QPoly()
    for s, c in a.items():
        total = total + QPoly({maj(descent_composition(s)): 1}) * c
    return total


def principal_specialization(a: LinComb) -> Tuple[QPoly, QPoly]:
    """``a(1/(1-q))`` as a (numerator, denominator) pair with denominator ``(q)_n``."""
    a = to_F(a)
    n = a.homogeneous_degree() if a else 0
    return principal_specialization_times_pochhammer(a), q_pochhammer(n)


# -------------------------------------------- lifts for descent classes

def deshalf_lifts(u: Iterable[int], v: Iterable[int]) -> Tuple[Permutation, Permutation]:
    """Permutations ``(s, t)`` with ``<u <' v> = <s <' t>`` for disjoint-letter words.

    If ``u_1 < v_1`` then ``s = Std(u)`` and ``t = Std(v)[k]``; otherwise
    ``s = Std(u)[l]`` and ``t = Std(v)``.  Returned ``t`` is already shifted.
    """
    u, v = tuple(u), tuple(v)
    if not u or not v:
        raise DendriformUndefinedError()
    if set(u) & set(v):
        raise ValueError("words must have disjoint alphabets")
    k, l = len(u), len(v)
    if u[0] < v[0]:
        return standardize(u), shift(standardize(v), k)
    return shift(standardize(u), l), standardize(v)


def nested_prec(c) -> LinComb:
    """``S_{i1} < (S_{i2} < (... < S_{ir}))`` on the G basis (right-associated).

    ``nested_prec(())`` is the unit.
    """
    c = tuple(c)
    if not c:
        return S(0)
    acc = S(c[-1])
    for part in reversed(c[:-1]):
        acc = dendriform_G(S(part), acc, "<")
    return acc
