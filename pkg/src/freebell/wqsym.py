"""Packed words and the M basis of WQSym, with the min-convention left
tridendriform product that induces Grinberg's ``<G`` on QSym."""

from __future__ import annotations

from functools import lru_cache
from itertools import product as _cartesian
from typing import Dict, Sequence, Tuple

from .core.words import DendriformUndefinedError, Word, check_word
from .freemod import LinComb

PackedWord = Tuple[int, ...]


def pack(w: Sequence[int]) -> PackedWord:
    """Order-preserving relabelling of the letters of ``w`` onto ``1..m``."""
    rank = {a: i for i, a in enumerate(sorted(set(w)), 1)}
    return tuple(rank[a] for a in w)


def is_packed(w: Sequence[int]) -> bool:
    return set(w) == set(range(1, max(w, default=0) + 1))


def evaluation(u: Sequence[int]) -> Tuple[int, ...]:
    """Multiplicities of ``1, 2, ..., max(u)`` in the packed word ``u``."""
    if not is_packed(u):
        raise ValueError("not a packed word: %r" % (tuple(u),))
    m = max(u, default=0)
    return tuple(sum(1 for a in u if a == i) for i in range(1, m + 1))


def WM(*words, coeff=1) -> LinComb:
    out = []
    for w in words:
        if isinstance(w, int):
            w = tuple(int(ch) for ch in str(w))
        w = check_word(w)
        if not is_packed(w):
            raise ValueError("not a packed word: %r" % (w,))
        out.append((w, coeff))
    return LinComb("WM", out)


@lru_cache(maxsize=None)
def _convolution(u: PackedWord, v: PackedWord) -> Tuple[Word, ...]:
    """Packed words ``w = xy`` with ``pack(x) = u`` and ``pack(y) = v``.

    Letters of ``w`` take values in ``1..|u|+|v|``; we enumerate value
    assignments for the distinct letters of ``u`` and ``v`` and keep the
    packed results.
    """
    mu, mv = max(u, default=0), max(v, default=0)
    top = mu + mv
    out = set()
    for xs in _increasing(mu, top):
        x = tuple(xs[a - 1] for a in u)
        for ys in _increasing(mv, top):
            y = tuple(ys[b - 1] for b in v)
            w = x + y
            if is_packed(w):
                out.add(w)
    return tuple(sorted(out))


def _increasing(k: int, top: int):
    from itertools import combinations

    return combinations(range(1, top + 1), k)


def m_convolution(a: LinComb, b: LinComb) -> LinComb:
    """Product on the M basis of WQSym (prefix/suffix packing)."""
    _expect(a)
    _expect(b)
    acc: Dict = {}
    for u, cu in a.items():
        for v, cv in b.items():
            for w in _convolution(u, v):
                acc[w] = acc.get(w, 0) + cu * cv
    return LinComb("WM", acc)


def _expect(a: LinComb) -> None:
    if a.basis != "WM":
        raise TypeError("expected a WQSym M-basis element, got %s" % a.basis)


def _split(a: LinComb, b: LinComb, left: bool) -> LinComb:
    _expect(a)
    _expect(b)
    acc: Dict = {}
    for u, cu in a.items():
        for v, cv in b.items():
            if not u or not v:
                raise DendriformUndefinedError()
            k = len(u)
            for w in _convolution(u, v):
                min_only_in_prefix = 1 not in w[k:]
                if min_only_in_prefix == left:
                    acc[w] = acc.get(w, 0) + cu * cv
    return LinComb("WM", acc)


def tridendriform_left_min(a: LinComb, b: LinComb) -> LinComb:
    """``<'``: terms of the convolution whose letter 1 occurs only in the prefix."""
    return _split(a, b, True)


def tridendriform_right_min(a: LinComb, b: LinComb) -> LinComb:
    """``>'``: the complementary terms (letter 1 occurs in the suffix)."""
    return _split(a, b, False)


def project_wqsym_to_qsym(a: LinComb) -> LinComb:
    """``M_u -> M_{ev(u)}`` (QSym monomial basis)."""
    _expect(a)
    return a.map_keys(evaluation, "QM")


def lift_monomial(c: Sequence[int]) -> PackedWord:
    """A packed word of evaluation ``c``: the weakly increasing one."""
    return tuple(i for i, part in enumerate(c, 1) for _ in range(part))


def grinberg_prec_qsym(f: LinComb, g: LinComb) -> LinComb:
    """``M_I <G M_J = pi(M_u <' M_v)`` for packed words of evaluation ``I``, ``J``.

    Accepts QSym input on either basis; returns the M-basis result.
    """
    from .qsym import f_m_convert

    f = f_m_convert(f, "QM")
    g = f_m_convert(g, "QM")
    acc: Dict = {}
    for i, ci in f.items():
        for j, cj in g.items():
            prod = tridendriform_left_min(WM(lift_monomial(i)), WM(lift_monomial(j)))
            for k, ck in project_wqsym_to_qsym(prod).items():
                acc[k] = acc.get(k, 0) + ci * cj * ck
    return LinComb("QM", acc)


def packed_words(n: int):
    """All packed words of length ``n``."""
    for w in _cartesian(range(1, n + 1), repeat=n):
        if is_packed(w):
            yield w
