"""Noncommutative Bell polynomials, their q-analogues and the free Bell
polynomials with coefficients in FQSym.

Y-polynomials are :class:`LinComb` objects on the ``"Y"`` basis whose keys
are compositions, ``(2, 1)`` standing for the monomial ``Y_2 Y_1``.  The
convention ``B = B''`` is used for :func:`bell` and :func:`free_bell`.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

from . import fqsym, qsym
from .core.qpoly import QPoly, q_binomial, q_factorial, q_integer
from .core.setpartition import SetPartition, set_partitions
from .core.trees import right_comb
from .core.words import Composition, Permutation, check_composition, mirror
from .freemod import LinComb

YPolynomial = LinComb
FreeBellElement = Dict[Composition, LinComb]


def _y(terms) -> LinComb:
    return LinComb("Y", terms)


def reverse_monomials(p: LinComb) -> LinComb:
    """The anti-automorphism fixing every ``Y_i``."""
    return p.map_keys(mirror)


# ------------------------------------------------------ classical, q = 1

@lru_cache(maxsize=None)
def bell_prime(n: int) -> LinComb:
    """``B'_{n+1} = sum_k binom(n, k) B'_{n-k} Y_{k+1}``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return _y({(): 1})
    m = n - 1
    acc: Dict = {}
    for k in range(m + 1):
        for key, c in bell_prime(m - k).items():
            nk = key + (k + 1,)
            acc[nk] = acc.get(nk, 0) + comb(m, k) * c
    return _y(acc)


@lru_cache(maxsize=None)
def bell_double_prime(n: int) -> LinComb:
    """``B''_{n+1} = sum_k binom(n, k) Y_{k+1} B''_{n-k}``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return _y({(): 1})
    m = n - 1
    acc: Dict = {}
    for k in range(m + 1):
        for key, c in bell_double_prime(m - k).items():
            nk = (k + 1,) + key
            acc[nk] = acc.get(nk, 0) + comb(m, k) * c
    return _y(acc)


bell = bell_double_prime


# ---------------------------------------------------------- q-analogues

@lru_cache(maxsize=None)
def bell_prime_q(n: int) -> LinComb:
    """``B'_n(q) = sum_{k<n} q^k [n-1, k]_q B'_k(q) Y_{n-k}``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return _y({(): QPoly(1)})
    acc: Dict = {}
    for k in range(n):
        w = QPoly.q(k) * q_binomial(n - 1, k)
        for key, c in bell_prime_q(k).items():
            nk = key + (n - k,)
            acc[nk] = acc[nk] + w * c if nk in acc else w * c
    return _y(acc)


@lru_cache(maxsize=None)
def bell_double_prime_q(n: int) -> LinComb:
    """``B''_n(q) = sum_{k<n} q^k Y_{n-k} [n-1, k]_q B''_k(q)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return _y({(): QPoly(1)})
    acc: Dict = {}
    for k in range(n):
        w = QPoly.q(k) * q_binomial(n - 1, k)
        for key, c in bell_double_prime_q(k).items():
            nk = (n - k,) + key
            acc[nk] = acc[nk] + w * c if nk in acc else w * c
    return _y(acc)


def specialize_y_to_one(p: LinComb) -> QPoly:
    total = QPoly()
    for _, c in p.items():
        total = total + c
    return total


def bell_triangle(n: int) -> QPoly:
    """Row ``n`` of the q-Bell triangle: ``B''_n(q)`` at ``Y_i = 1``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return specialize_y_to_one(bell_double_prime_q(n))


def at_q_equals_one(p: LinComb) -> LinComb:
    return _y({k: (c(1) if isinstance(c, QPoly) else c) for k, c in p.items()})


def coefficient_formula_q(c: Composition) -> QPoly:
    """Coefficient of ``Y^I`` in ``B'_{|I|}(q)`` as a product of Gaussian binomials:
    ``prod_{k>=2} [i_1+...+i_k - 1, i_k - 1]_q q^{i_1+...+i_{k-1}}``."""
    c = check_composition(c)
    if not c:
        raise ValueError("composition must be nonempty")
    out = QPoly(1)
    partial = c[0]
    for part in c[1:]:
        out = out * q_binomial(partial + part - 1, part - 1) * QPoly.q(partial)
        partial += part
    return out


def quasideterminant_matrix(n: int) -> List[List]:
    """Entries of the almost-triangular matrix: ``-1`` on the subdiagonal,
    ``q^{i-1} [j-1, j-i]_q Y_{j-i+1}`` on and above the diagonal (1-based),
    zero below.  Entries are returned as ``(QPoly, Y-index)`` pairs, or the
    integer ``-1`` / ``0``."""
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j >= i:
                row.append((QPoly.q(i - 1) * q_binomial(j - 1, j - i), j - i + 1))
            elif j == i - 1:
                row.append(-1)
            else:
                row.append(0)
        rows.append(row)
    return rows


def quasideterminant_bell_q(n: int) -> LinComb:
    """``|B'_n|_{1n}`` for the matrix of :func:`quasideterminant_matrix`.

    For an upper-Hessenberg matrix with ``-1`` on the subdiagonal the
    quasideterminant at ``(1, n)`` expands as the path sum
    ``T(i) = sum_{j >= i} a_{ij} T(j+1)``, ``T(n+1) = 1``, read left to
    right (products are ordered because the ``Y`` do not commute).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = quasideterminant_matrix(n)
    tail: Dict[int, LinComb] = {n + 1: _y({(): QPoly(1)})}
    for i in range(n, 0, -1):
        acc: Dict = {}
        for j in range(i, n + 1):
            w, yk = m[i - 1][j - 1]
            for key, c in tail[j + 1].items():
                nk = (yk,) + key
                acc[nk] = acc[nk] + w * c if nk in acc else w * c
        tail[i] = _y(acc)
    return tail[1]


# ------------------------------------------------- set partition statistics

def partition_stats(p: SetPartition) -> Tuple[Composition, Tuple[Tuple[int, ...], ...], Permutation, Composition]:
    """``(K_sharp, pi_flat, pi_flat_hat, K_flat)``.

    ``K_sharp``: block sizes with blocks ordered by increasing minima.
    ``pi_flat``: blocks ordered by decreasing maxima.  ``pi_flat_hat``: the
    permutation reading ``pi_flat`` block by block, each increasingly.
    """
    if not p.is_standard():
        raise ValueError("set partition must cover 1..n, got %s" % p)
    sharp = sorted(p.blocks, key=min)
    flat = tuple(sorted(p.blocks, key=max, reverse=True))
    hat = tuple(x for b in flat for x in b)
    return tuple(len(b) for b in sharp), flat, hat, tuple(len(b) for b in flat)


# ---------------------------------------------------- free Bell polynomials

@lru_cache(maxsize=None)
def _free_bell(n: int) -> Tuple[Tuple[Composition, LinComb], ...]:
    if n == 0:
        return (((), fqsym.S(0)),)
    m = n - 1
    acc: Dict[Composition, LinComb] = {}
    for k in range(m + 1):
        head = fqsym.S(k + 1)
        for key, coeff in _free_bell(m - k):
            # a < B_0 := a
            term = head if m - k == 0 else fqsym.dendriform_G(head, coeff, "<")
            nk = (k + 1,) + key
            acc[nk] = acc[nk] + term if nk in acc else term
    return tuple(sorted(acc.items()))


def free_bell(n: int) -> FreeBellElement:
    """``B_{n+1} = sum_k Y_{k+1} S_{k+1} < B_{n-k}`` with ``a < B_0 = a``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return dict(_free_bell(n))


def free_bell_from_partitions(n: int) -> FreeBellElement:
    """``sum_pi Y^{K_flat(pi)} G_{pi_flat_hat}`` over set partitions of ``[n]``."""
    acc: Dict[Composition, Dict] = {}
    for p in set_partitions(n):
        _, _, hat, kflat = partition_stats(p)
        acc.setdefault(kflat, {})
        acc[kflat][hat] = acc[kflat].get(hat, 0) + 1
    return {k: LinComb("G", v) for k, v in acc.items()}


def specialize_free_bell(fb: FreeBellElement) -> LinComb:
    """``(q)_n B_n(1/(1-q))`` as a Y-polynomial with QPoly coefficients."""
    return _y({k: fqsym.principal_specialization_times_pochhammer(v) for k, v in fb.items()})


# --------------------------------------------------------- coefficients C_I

def c_coefficient(c: Composition, form: str = "fqsym"):
    """``C_I`` as an FQSym element (G basis), its QSym image, or ``c_I(q)``."""
    c = check_composition(c)
    if not c:
        raise ValueError("composition must be nonempty")
    elt = fqsym.nested_prec(c)
    if form == "fqsym":
        return elt
    if form == "qsym":
        return fqsym.project_to_qsym(elt)
    if form == "qpoly":
        return fqsym.principal_specialization_times_pochhammer(elt)
    raise ValueError("unknown form %r" % form)


def hook_length_c(c: Composition) -> QPoly:
    """``[n]_q! prod_v q^{delta_v} / [h_v]_q`` over the right comb of ``I``."""
    c = check_composition(c)
    if not c:
        raise ValueError("composition must be nonempty")
    tree = right_comb(c)
    n = sum(c)
    num = q_factorial(n) * QPoly.q(sum(tree.right_subtree_sizes()))
    den = QPoly(1)
    for h in tree.hook_lengths():
        den = den * q_integer(h)
    try:
        return num.exact_div(den)
    except ArithmeticError as exc:
        raise RuntimeError("hook-length quotient not exact for %r" % (c,)) from exc


def c_matrix(n: int) -> Tuple[Tuple[Composition, ...], List[List[int]]]:
    """F-expansion matrix of ``C_I(X)`` over compositions of ``n`` (rows ``I``)."""
    comps = tuple(qsym_compositions(n))
    rows = []
    for i in comps:
        ci = c_coefficient(i, "qsym")
        rows.append([ci[j] for j in comps])
    return comps, rows


def qsym_compositions(n: int):
    from .core.words import compositions

    return compositions(n)


def dual_immaculate_via_bell(c: Composition) -> LinComb:
    """``bar(C_I(X))``."""
    return qsym.bar(c_coefficient(c, "qsym"))
