"""Words, permutations and compositions as plain tuples of positive integers.

A *word* is any tuple of letters ``>= 1``; a *permutation* of size ``n`` is a
word containing each of ``1..n`` exactly once (one-line notation); a
*composition* is a tuple of positive parts.  All functions here are pure and
return tuples, so results can be used directly as dictionary keys.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations as _itperms
from math import comb
from typing import Iterable, Iterator, List, Sequence, Tuple

Word = Tuple[int, ...]
Permutation = Tuple[int, ...]
Composition = Tuple[int, ...]


class DendriformUndefinedError(ValueError):
    """Raised when a half-product is applied to an empty word / degree-0 term."""

    def __init__(self, msg: str = "dendriform product with empty word undefined"):
        super().__init__(msg)


# ---------------------------------------------------------------- validation

def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def check_permutation(p: Sequence[int]) -> Permutation:
    p = tuple(p)
    if not is_permutation(p):
        raise ValueError("not a permutation of 1..%d: %r" % (len(p), p))
    return p


def check_word(w: Sequence[int]) -> Word:
    w = tuple(w)
    if any((not isinstance(a, int)) or a < 1 for a in w):
        raise ValueError("word letters must be positive integers: %r" % (w,))
    return w


def check_composition(c: Sequence[int]) -> Composition:
    c = tuple(c)
    if any((not isinstance(a, int)) or a < 1 for a in c):
        raise ValueError("composition parts must be positive integers: %r" % (c,))
    return c


# ------------------------------------------------------------- permutations

def standardize(w: Sequence[int]) -> Permutation:
    """Permutation with the same inversions as ``w``; equal letters are
    numbered from left to right."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def shift(w: Sequence[int], k: int) -> Word:
    return tuple(a + k for a in w)


def descent_set(w: Sequence[int]) -> Tuple[int, ...]:
    """Positions ``i`` (1-based) with ``w_i > w_{i+1}``."""
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def composition_from_descents(descents: Iterable[int], n: int) -> Composition:
    parts, last = [], 0
    for d in sorted(descents):
        parts.append(d - last)
        last = d
    if n:
        parts.append(n - last)
    return tuple(parts)


def descents_from_composition(c: Composition) -> Tuple[int, ...]:
    out, s = [], 0
    for part in c[:-1]:
        s += part
        out.append(s)
    return tuple(out)


def descent_composition(w: Sequence[int]) -> Composition:
    """Lengths of the maximal runs of ``w`` without a strict descent.

    ``C(32415) = (1, 2, 2)``.  Works for arbitrary words, not only permutations.
    """
    return composition_from_descents(descent_set(w), len(w))


def recoil_composition(p: Permutation) -> Composition:
    return descent_composition(inverse(p))


def inversions(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


inv = inversions


def inversion_set(p: Permutation) -> int:
    """Inversion set as value pairs ``(a, b)``, ``a < b``, ``b`` left of ``a``,
    packed into a bitmask (bit ``(a-1)*n + (b-1)``)."""
    n = len(p)
    mask = 0
    for i in range(n):
        b = p[i]
        for j in range(i + 1, n):
            a = p[j]
            if a < b:
                mask |= 1 << ((a - 1) * n + (b - 1))
    return mask


def maj(c: Composition) -> int:
    """Major index of a composition: the sum of its descent positions."""
    return sum(descents_from_composition(c))


def schutzenberger(p: Permutation) -> Permutation:
    """``omega p omega``: complement each value to ``n+1-v``, then reverse."""
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))


def all_permutations(n: int) -> Iterator[Permutation]:
    return _itperms(range(1, n + 1))


# --------------------------------------------------------------- patterns

def avoids_21_3(p: Sequence[int]) -> bool:
    """True when no ``i`` and ``j > i+1`` have ``p_j > p_i > p_{i+1}``."""
    n = len(p)
    suffix_max = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix_max[j] = max(p[j], suffix_max[j + 1])
    for i in range(n - 2):
        if p[i] > p[i + 1] and suffix_max[i + 2] > p[i]:
            return False
    return True


def avoids_1_32(p: Sequence[int]) -> bool:
    """True when no ``i < j`` have ``p_i < p_{j+1} < p_j``."""
    n = len(p)
    prefix_min = None
    for j in range(n - 1):
        if prefix_min is not None and p[j] > p[j + 1] > prefix_min:
            return False
        prefix_min = p[j] if prefix_min is None else min(prefix_min, p[j])
    return True


def avoids_dashed(p: Sequence[int], pattern: str) -> bool:
    if pattern == "21-3":
        return avoids_21_3(p)
    if pattern == "1-32":
        return avoids_1_32(p)
    raise ValueError("unsupported dashed pattern %r" % pattern)


# ------------------------------------------------------------ compositions

def mirror(c: Composition) -> Composition:
    return tuple(reversed(c))


def complement(c: Composition) -> Composition:
    """Composition of the complementary descent set (same weight)."""
    n = sum(c)
    d = set(descents_from_composition(c))
    return composition_from_descents([i for i in range(1, n) if i not in d], n)


def conjugate(c: Composition) -> Composition:
    """Ribbon conjugate: complementary descent set, then mirror.

    This is the descent composition of the mirror image of any word with
    descent composition ``c``: ``conjugate((1, 2)) == (1, 2)`` and
    ``conjugate((2,)) == (1, 1)``.
    """
    return mirror(complement(c))


def concat(i: Composition, j: Composition) -> Composition:
    return tuple(i) + tuple(j)


def near_concat(i: Composition, j: Composition) -> Composition:
    """``I |> J``: glue the last part of ``I`` to the first part of ``J``."""
    if not i or not j:
        raise ValueError("near-concatenation needs two nonempty compositions")
    return tuple(i[:-1]) + (i[-1] + j[0],) + tuple(j[1:])


@lru_cache(maxsize=None)
def compositions(n: int) -> Tuple[Composition, ...]:
    """All compositions of ``n`` in reverse lexicographic order."""
    if n == 0:
        return ((),)
    out: List[Composition] = []
    for first in range(n, 0, -1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return tuple(out)


def compositions_upto(n: int) -> Iterator[Composition]:
    for m in range(n + 1):
        yield from compositions(m)


def refinements(c: Composition) -> Iterator[Composition]:
    """Compositions ``J`` finer than ``c`` (descent set of ``J`` contains that of ``c``)."""
    n = sum(c)
    fixed = set(descents_from_composition(c))
    free = [i for i in range(1, n) if i not in fixed]
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            yield composition_from_descents(fixed | set(extra), n)


def coarsenings(c: Composition) -> Iterator[Composition]:
    n = sum(c)
    d = descents_from_composition(c)
    for k in range(len(d) + 1):
        for keep in combinations(d, k):
            yield composition_from_descents(keep, n)


def deconcatenations(c: Composition) -> Iterator[Tuple[Composition, Composition]]:
    """Pairs ``(H, K)`` with ``c = H.K`` or ``c = H |> K`` (``H, K`` nonempty for ``|>``)."""
    for k in range(len(c) + 1):
        yield c[:k], c[k:]
    for k in range(len(c)):
        part = c[k]
        for a in range(1, part):
            yield c[:k] + (a,), (part - a,) + c[k + 1:]


def canonical_lift(c: Composition) -> Permutation:
    """A permutation whose descent composition is ``c``.

    Runs are filled with blocks of consecutive values, the first run taking
    the largest block: ``(1, 2, 2) -> 5 34 12``.
    """
    n = sum(c)
    out: List[int] = []
    top = n
    for part in c:
        out.extend(range(top - part + 1, top + 1))
        top -= part
    return tuple(out)


# --------------------------------------------------------- shuffles

def shuffle(u: Sequence[int], v: Sequence[int]) -> List[Word]:
    """All interleavings of ``u`` and ``v`` as a list (a multiset).

    Positions of ``u`` are chosen among the ``|u|+|v|`` slots; the order of
    the output follows the choice of positions.
    """
    u, v = tuple(u), tuple(v)
    n = len(u) + len(v)
    out = []
    for pos in combinations(range(n), len(u)):
        w = [0] * n
        it_u, it_v = iter(u), iter(v)
        sel = set(pos)
        for i in range(n):
            w[i] = next(it_u) if i in sel else next(it_v)
        out.append(tuple(w))
    return out


def shuffle_recursive(u: Sequence[int], v: Sequence[int]) -> List[Word]:
    """Shuffle by the last-letter recursion ``ua sh vb = (ua sh v)b + (u sh vb)a``."""
    u, v = tuple(u), tuple(v)
    if not u:
        return [v]
    if not v:
        return [u]
    return [w + (v[-1],) for w in shuffle_recursive(u, v[:-1])] + \
           [w + (u[-1],) for w in shuffle_recursive(u[:-1], v)]


def _require_nonempty(u, v) -> None:
    if not u or not v:
        raise DendriformUndefinedError()


def half_shuffle_last(u: Sequence[int], v: Sequence[int], side: str) -> List[Word]:
    """Last-letter half-shuffles.

    ``side='<'``: ``ua < vb = (u sh vb) a``; ``side='>'``: ``ua > vb = (ua sh v) b``.
    """
    u, v = tuple(u), tuple(v)
    _require_nonempty(u, v)
    if side == "<":
        return [w + (u[-1],) for w in shuffle(u[:-1], v)]
    if side == ">":
        return [w + (v[-1],) for w in shuffle(u, v[:-1])]
    raise ValueError("side must be '<' or '>'")


def half_shuffle_first(u: Sequence[int], v: Sequence[int], side: str) -> List[Word]:
    """First-letter half-shuffles.

    ``side='<'``: ``au <' bv = a (u sh bv)``; ``side='>'``: ``au >' bv = b (au sh v)``.
    """
    u, v = tuple(u), tuple(v)
    _require_nonempty(u, v)
    if side == "<":
        return [(u[0],) + w for w in shuffle(u[1:], v)]
    if side == ">":
        return [(v[0],) + w for w in shuffle(u, v[1:])]
    raise ValueError("side must be '<' or '>'")


def multiset(words: Iterable[Word]) -> Counter:
    return Counter(words)


def binomial(n: int, k: int) -> int:
    return comb(n, k)


# ----------------------------------------------------------- text forms

def format_word(w: Sequence[int]) -> str:
    """Digit string when every letter is < 10, comma-separated otherwise."""
    if all(a < 10 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def parse_word(text: str) -> Word:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        return ()
    try:
        if "," in s:
            return check_word(int(x) for x in s.split(","))
        if " " in s:
            return check_word(int(x) for x in s.split())
        return check_word(int(ch) for ch in s)
    except ValueError as exc:
        raise ValueError("malformed word %r" % text) from exc


def parse_permutation(text: str) -> Permutation:
    return check_permutation(parse_word(text))


def format_composition(c: Composition) -> str:
    return "(" + ",".join(str(a) for a in c) + ")"


def parse_composition(text: str) -> Composition:
    """Accepts ``(2,2,1)``, ``2,2,1``, ``2 2 1`` and ``221`` (single digits)."""
    w = parse_word(text)
    if not w and text.strip() not in ("", "()"):
        raise ValueError("malformed composition %r" % text)
    return check_composition(w)
