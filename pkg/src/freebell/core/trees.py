"""Planar binary trees: decreasing trees of permutations and right combs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .words import Composition


@dataclass(frozen=True)
class BinaryTree:
    left: Optional["BinaryTree"] = None
    right: Optional["BinaryTree"] = None
    label: Optional[int] = None

    def size(self) -> int:
        return 1 + _size(self.left) + _size(self.right)

    def shape(self) -> "BinaryTree":
        """The same tree with labels forgotten."""
        return BinaryTree(
            self.left.shape() if self.left else None,
            self.right.shape() if self.right else None,
        )

    def nodes(self) -> List["BinaryTree"]:
        """Nodes in infix order."""
        out: List[BinaryTree] = []
        if self.left:
            out.extend(self.left.nodes())
        out.append(self)
        if self.right:
            out.extend(self.right.nodes())
        return out

    def hook_lengths(self) -> List[int]:
        """Subtree size at every node, infix order."""
        return [v.size() for v in self.nodes()]

    def right_subtree_sizes(self) -> List[int]:
        return [_size(v.right) for v in self.nodes()]

    def is_decreasing(self) -> bool:
        for v in self.nodes():
            for child in (v.left, v.right):
                if child is not None and not (v.label > child.label):
                    return False
        return True


def _size(t: Optional[BinaryTree]) -> int:
    return t.size() if t is not None else 0


def decreasing_tree(p: Sequence[int]) -> BinaryTree:
    """Root is the maximal letter; left and right factors give the subtrees."""
    if not p:
        raise ValueError("decreasing tree of an empty word")

    def build(lo: int, hi: int) -> Optional[BinaryTree]:
        if lo >= hi:
            return None
        m = max(range(lo, hi), key=lambda i: p[i])
        return BinaryTree(build(lo, m), build(m + 1, hi), p[m])

    return build(0, len(p))


def left_chain(k: int) -> Optional[BinaryTree]:
    t = None
    for _ in range(k):
        t = BinaryTree(t, None)
    return t


def right_comb(c: Composition) -> Optional[BinaryTree]:
    """Spine of ``len(c)`` nodes down the right; the ``k``-th spine node,
    together with its left chain, has ``c[k]`` nodes."""
    t = None
    for part in reversed(c):
        t = BinaryTree(left_chain(part - 1), t)
    return t
