"""The Bell congruence on permutations, patience-sorting insertion into
column partitions, the associated posets, and the ``P`` basis of FQSym
indexed by set partitions.

The congruence is generated by ``buca == buac`` whenever ``a < b < c`` and
every letter of ``u`` is smaller than ``b``.  Each class is the set of linear
extensions of a poset built from the columns produced by :func:`psa_insert`,
and is an interval of the right weak order.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Set, Tuple

from . import fqsym
from .core.setpartition import SetPartition
from .core.words import (
    Permutation,
    all_permutations,
    check_word,
    format_word,
    inversion_set,
    inversions,
)
from .freemod import LinComb, Tensor2


# ---------------------------------------------------------------- rewriting

def bell_rewrite_neighbors(w: Iterable[int]) -> Set[Tuple[int, ...]]:
    """Words reachable from ``w`` by one application of the relation, in
    either direction (swapping an adjacent pair ``ca``/``ac`` preceded by a
    suitable ``b u``)."""
    w = tuple(w)
    out = set()
    n = len(w)
    for k in range(n - 1):
        x, y = w[k], w[k + 1]
        lo, hi = min(x, y), max(x, y)
        # look left for b with lo < b < hi such that everything between is < b
        seen_max = 0
        for j in range(k - 1, -1, -1):
            b = w[j]
            if lo < b < hi and seen_max < b:
                out.add(w[:k] + (y, x) + w[k + 2:])
                break
            seen_max = max(seen_max, b)
    return out


def alternative_rewrite_neighbors(w: Iterable[int]) -> Set[Tuple[int, ...]]:
    """Neighbours under ``bcu == buc`` for ``b < c`` with every letter of
    ``u`` below ``b`` (moving ``c`` across a block ``u``)."""
    w = tuple(w)
    out = set()
    n = len(w)
    for i in range(n - 1):
        b = w[i]
        # bcu -> buc : c sits right after b, u follows
        c = w[i + 1]
        if b < c:
            for end in range(i + 3, n + 1):
                u = w[i + 2:end]
                if max(u) >= b:
                    break
                out.add(w[:i + 1] + u + (c,) + w[end:])
        # buc -> bcu : c sits after a nonempty u
        for end in range(i + 2, n):
            u = w[i + 1:end]
            if max(u) >= b:
                break
            c = w[end]
            if b < c:
                out.add(w[:i + 1] + (c,) + u + w[end + 1:])
    return out


def rewriting_closure(w: Iterable[int], neighbors=bell_rewrite_neighbors) -> FrozenSet[Tuple[int, ...]]:
    """Congruence class of ``w`` by breadth-first search."""
    start = tuple(w)
    seen = {start}
    todo = [start]
    while todo:
        cur = todo.pop()
        for nxt in neighbors(cur):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return frozenset(seen)


# -------------------------------------------------------------- insertion

@dataclass(frozen=True)
class ColumnPartition:
    """Blocks (columns) each increasing, ordered by decreasing maxima."""

    columns: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        seen: Set[int] = set()
        for c in cols:
            if not c or list(c) != sorted(set(c)):
                raise ValueError("columns must be nonempty and strictly increasing")
            if seen & set(c):
                raise ValueError("columns must be disjoint")
            seen |= set(c)
        maxima = [c[-1] for c in cols]
        if any(a <= b for a, b in zip(maxima, maxima[1:])):
            raise ValueError("column maxima must strictly decrease")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "ColumnPartition":
        return cls(tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: -b[-1])))

    def to_set_partition(self) -> SetPartition:
        return SetPartition(self.columns)

    def column_of(self, x: int) -> int:
        for i, c in enumerate(self.columns):
            if x in c:
                return i
        raise KeyError(x)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, c)) for c in self.columns)


def psa_insert(w: Iterable[int]) -> ColumnPartition:
    """Insert letters left to right: each letter goes to the bottom of the
    column with the largest maximum not exceeding it, or starts a new one."""
    w = check_word(tuple(w))
    if len(set(w)) != len(w):
        raise ValueError("word has repeated letters: %s" % (w,))
    cols: List[List[int]] = []
    for x in w:
        best = None
        for c in cols:
            if c[-1] <= x and (best is None or c[-1] > best[-1]):
                best = c
        if best is None:
            cols.append([x])
        else:
            best.append(x)
    return ColumnPartition.from_blocks(cols)


def bell_class_key(w: Iterable[int]) -> SetPartition:
    """The set partition labelling the class of ``w``."""
    return psa_insert(w).to_set_partition()


# ----------------------------------------------------------------- posets

@dataclass(frozen=True)
class BellPoset:
    """Covering relations ``(lower, upper)``, where ``lower <_P upper`` and
    minimal elements are drawn on top."""

    ground: Tuple[int, ...]
    covers: Tuple[Tuple[int, int], ...]
    kinds: Tuple[str, ...] = field(default=())  # "column" or "cross" per cover

    @lru_cache(maxsize=None)
    def _down(self) -> Dict[int, FrozenSet[int]]:
        below: Dict[int, Set[int]] = {x: set() for x in self.ground}
        preds: Dict[int, List[int]] = {x: [] for x in self.ground}
        for lo, hi in self.covers:
            preds[hi].append(lo)
        for x in topological_order(self.ground, self.covers):
            for p in preds[x]:
                below[x] |= below[p] | {p}
        return {x: frozenset(s) for x, s in below.items()}

    def less(self, x: int, y: int) -> bool:
        """``x <_P y``."""
        return x in self._down()[y]

    def minimal_elements(self) -> List[int]:
        uppers = {hi for _, hi in self.covers}
        return [x for x in self.ground if x not in uppers]

    def columns(self) -> List[Tuple[int, ...]]:
        """Recover the columns from the column edges (lower < upper numerically)."""
        nxt = {lo: hi for (lo, hi), k in zip(self.covers, self.kinds) if k == "column"}
        heads = set(self.ground) - set(nxt.values())
        out = []
        for h in heads:
            col = [h]
            while col[-1] in nxt:
                col.append(nxt[col[-1]])
            out.append(tuple(col))
        return sorted(out, key=lambda c: -c[-1])


def topological_order(ground: Iterable[int], covers: Iterable[Tuple[int, int]]) -> List[int]:
    ground = list(ground)
    indeg = {x: 0 for x in ground}
    succ: Dict[int, List[int]] = {x: [] for x in ground}
    for lo, hi in covers:
        succ[lo].append(hi)
        indeg[hi] += 1
    ready = sorted(x for x in ground if indeg[x] == 0)
    out = []
    while ready:
        x = ready.pop()
        out.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    if len(out) != len(ground):
        raise ValueError("relation has a cycle")
    return out


def bell_poset(s: ColumnPartition) -> BellPoset:
    """``x >_P`` its predecessor in its column and ``x >_P`` the smallest
    element greater than ``x`` in the column immediately to the left;
    the Hasse diagram of the transitive closure."""
    gen: Dict[Tuple[int, int], str] = {}
    cols = s.columns
    for i, col in enumerate(cols):
        for k, x in enumerate(col):
            if k:
                gen[(col[k - 1], x)] = "column"
            if i:
                bigger = [y for y in cols[i - 1] if y > x]
                if bigger:
                    gen.setdefault((min(bigger), x), "cross")
    ground = tuple(sorted(x for c in cols for x in c))
    full = BellPoset(ground, tuple(gen), tuple(gen.values()))
    # Hasse reduction: drop generators implied by a longer chain
    covers, kinds = [], []
    for (lo, hi), kind in gen.items():
        implied = any(
            z != lo and (z == hi or full.less(z, hi)) and full.less(lo, z)
            for z in ground if z not in (lo, hi)
        )
        if not implied:
            covers.append((lo, hi))
            kinds.append(kind)
    order = sorted(range(len(covers)), key=lambda i: covers[i])
    return BellPoset(ground, tuple(covers[i] for i in order), tuple(kinds[i] for i in order))


def poset_of(w: Iterable[int]) -> BellPoset:
    return bell_poset(psa_insert(w))


def linear_extensions(p: BellPoset) -> Set[Tuple[int, ...]]:
    """All topological orders, minimal (top) elements first."""
    succ: Dict[int, List[int]] = {x: [] for x in p.ground}
    indeg = {x: 0 for x in p.ground}
    for lo, hi in p.covers:
        succ[lo].append(hi)
        indeg[hi] += 1
    out: Set[Tuple[int, ...]] = set()
    prefix: List[int] = []

    def rec():
        if len(prefix) == len(p.ground):
            out.add(tuple(prefix))
            return
        for x in [y for y in p.ground if indeg[y] == 0 and y not in placed]:
            placed.add(x)
            prefix.append(x)
            for y in succ[x]:
                indeg[y] -= 1
            rec()
            for y in succ[x]:
                indeg[y] += 1
            prefix.pop()
            placed.discard(x)

    placed: Set[int] = set()
    rec()
    return out


def greedy_max_extension(p: BellPoset) -> Tuple[int, ...]:
    """Linear extension choosing the largest available value at each step."""
    indeg = {x: 0 for x in p.ground}
    succ: Dict[int, List[int]] = {x: [] for x in p.ground}
    for lo, hi in p.covers:
        succ[lo].append(hi)
        indeg[hi] += 1
    avail = {x for x in p.ground if indeg[x] == 0}
    out = []
    while avail:
        x = max(avail)
        avail.discard(x)
        out.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                avail.add(y)
    return tuple(out)


def regularity_check(p: BellPoset) -> bool:
    """For ``x <_P z`` and ``y`` strictly between ``x`` and ``z`` in value,
    require ``x <_P y`` or ``y <_P z``."""
    for x in p.ground:
        for z in p.ground:
            if not p.less(x, z):
                continue
            lo, hi = min(x, z), max(x, z)
            for y in range(lo + 1, hi):
                if y in p.ground and not (p.less(x, y) or p.less(y, z)):
                    return False
    return True


# ---------------------------------------------------------------- classes

@dataclass(frozen=True)
class BellClass:
    partition: SetPartition
    members: FrozenSet[Permutation]
    min: Permutation
    max: Permutation

    @property
    def size(self) -> int:
        return len(self.members)

    def is_interval(self) -> bool:
        """Members are exactly the permutations whose inversion set lies
        between those of ``min`` and ``max``."""
        return weak_interval(self.min, self.max) == self.members

    def to_json_obj(self) -> dict:
        return {
            "partition": str(self.partition),
            "min": format_word(self.min),
            "max": format_word(self.max),
            "size": self.size,
        }


def weak_interval(lo: Permutation, hi: Permutation) -> FrozenSet[Permutation]:
    """Right weak order interval ``[lo, hi]`` (empty if ``lo`` is not below ``hi``).

    Intervals are connected by covers, so we climb from ``lo`` by swapping
    adjacent ascents while staying below ``hi``.
    """
    top = inversion_set(hi)
    if inversion_set(lo) & ~top:
        return frozenset()
    seen = {tuple(lo)}
    todo = [tuple(lo)]
    while todo:
        s = todo.pop()
        for i in range(len(s) - 1):
            if s[i] < s[i + 1]:
                t = s[:i] + (s[i + 1], s[i]) + s[i + 2:]
                if t not in seen and not (inversion_set(t) & ~top):
                    seen.add(t)
                    todo.append(t)
    return frozenset(seen)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("FREEBELL_THREADS", "1")))
    except ValueError:
        return 1


def _keys_for(perms: List[Permutation]) -> List[Tuple[Permutation, SetPartition]]:
    return [(s, bell_class_key(s)) for s in perms]


def _chunks(seq: List, k: int) -> Iterator[List]:
    size = max(1, -(-len(seq) // k))
    for i in range(0, len(seq), size):
        yield seq[i:i + size]


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[BellClass, ...]:
    perms = list(all_permutations(n))
    workers = _threads()
    if workers > 1 and len(perms) > 1000:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_keys_for, _chunks(perms, workers)))
        pairs = [x for part in parts for x in part]
    else:
        pairs = _keys_for(perms)
    groups: Dict[SetPartition, List[Permutation]] = {}
    for s, key in pairs:
        groups.setdefault(key, []).append(s)
    out = []
    for key in sorted(groups, key=str):
        members = groups[key]
        out.append(BellClass(key, frozenset(members), min(members, key=inversions), max(members, key=inversions)))
    return tuple(out)


def bell_classes(n: int) -> List[BellClass]:
    """Bell classes of ``S_n``, sorted by partition string."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_classes(n))


@lru_cache(maxsize=None)
def class_index(n: int) -> Dict[Permutation, SetPartition]:
    return {s: c.partition for c in _classes(n) for s in c.members}


def class_members(pi: SetPartition) -> FrozenSet[Permutation]:
    n = pi.size
    if n == 0:
        return frozenset({()})
    if not pi.is_standard():
        raise ValueError("set partition must cover 1..n")
    for c in _classes(n):
        if c.partition == pi:
            return c.members
    raise KeyError(str(pi))


def classes_json(n: int) -> str:
    return json.dumps({"n": n, "classes": [c.to_json_obj() for c in bell_classes(n)]})


# ----------------------------------------------------------------- P basis

def P_to_F(pi: SetPartition) -> LinComb:
    """``P_pi = sum_{s == pi} F_s``."""
    return LinComb.from_keys("F", class_members(pi))


def _regroup(a: LinComb) -> LinComb:
    """Rewrite an F-basis element as a combination of ``P_pi``, or raise."""
    acc: Dict[SetPartition, object] = {}
    for s, c in a.items():
        n = len(s)
        key = class_index(n)[s] if n else SetPartition(())
        if key in acc:
            if acc[key] != c:
                raise ArithmeticError("closure violated")
        else:
            acc[key] = c
    for key, c in acc.items():
        if any(a[s] != c for s in class_members(key)):
            raise ArithmeticError("closure violated")
    return LinComb("P", acc)


def p_basis_product(pi: SetPartition, tau: SetPartition) -> LinComb:
    """``P_pi P_tau`` regrouped on the P basis."""
    return _regroup(fqsym.f_product(P_to_F(pi), P_to_F(tau)))


def p_basis_coproduct(pi: SetPartition) -> Tensor2:
    """``Delta P_pi`` with both legs regrouped on the P basis."""
    delta = fqsym.coproduct_F(P_to_F(pi))
    by_left: Dict[Permutation, Dict] = {}
    for (u, v), c in delta.items():
        by_left.setdefault(u, {})[v] = c
    # regroup right legs for each left key, then regroup across left keys
    rows: Dict[Permutation, LinComb] = {u: _regroup(LinComb("F", row)) for u, row in by_left.items()}
    out: Dict[Tuple[SetPartition, SetPartition], object] = {}
    right_keys = {k for r in rows.values() for k in r.keys()}
    for rk in right_keys:
        col = _regroup(LinComb("F", {u: r[rk] for u, r in rows.items() if r[rk]}))
        for lk, c in col.items():
            out[(lk, rk)] = c
    return Tensor2("P", "P", out)


# ------------------------------------------------------------------- output

def poset_to_dot(p: BellPoset, name: str = "P") -> str:
    """Graphviz source: minimal elements on top, column edges solid, cross
    edges dashed."""
    lines = ["digraph %s {" % name, "  rankdir=TB;", "  node [shape=plaintext];"]
    for x in p.ground:
        lines.append('  n%d [label="%d"];' % (x, x))
    for (lo, hi), kind in zip(p.covers, p.kinds):
        style = "solid" if kind == "column" else "dashed"
        lines.append("  n%d -> n%d [dir=none, style=%s];" % (lo, hi, style))
    lines.append("}")
    return "\n".join(lines)


def poset_to_json_obj(p: BellPoset) -> dict:
    return {
        "ground": list(p.ground),
        "columns": [list(c) for c in p.columns()],
        "covers": [{"lower": lo, "upper": hi, "kind": k} for (lo, hi), k in zip(p.covers, p.kinds)],
    }


def poset_to_text(p: BellPoset) -> str:
    cols = " | ".join(" ".join(map(str, c)) for c in p.columns())
    edges = ", ".join("%d<%d%s" % (lo, hi, "" if k == "column" else "*") for (lo, hi), k in zip(p.covers, p.kinds))
    return "columns: %s\ncovers: %s" % (cols, edges)


__all__ = [
    "bell_rewrite_neighbors", "alternative_rewrite_neighbors", "rewriting_closure",
    "ColumnPartition", "psa_insert", "bell_class_key", "BellPoset", "bell_poset",
    "poset_of", "linear_extensions", "greedy_max_extension", "regularity_check",
    "BellClass", "bell_classes", "class_members", "classes_json", "P_to_F",
    "p_basis_product", "p_basis_coproduct", "poset_to_dot", "poset_to_json_obj",
    "poset_to_text", "topological_order",
]
