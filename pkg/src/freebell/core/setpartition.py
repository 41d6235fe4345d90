"""Set partitions of finite sets of positive integers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Tuple


@dataclass(frozen=True, order=True)
class SetPartition:
    """A set partition, stored canonically as blocks sorted internally and
    ordered by their minima.

    >>> SetPartition.parse("347|28|1|56")
    SetPartition('1|28|347|56')
    """

    blocks: Tuple[Tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        norm = []
        seen = set()
        for b in blocks:
            b = tuple(sorted(b))
            if not b:
                raise ValueError("set partition blocks must be nonempty")
            if any(x < 1 for x in b):
                raise ValueError("set partition elements must be positive")
            if seen.intersection(b):
                raise ValueError("set partition blocks must be disjoint")
            seen.update(b)
            norm.append(b)
        norm.sort(key=lambda b: b[0])
        object.__setattr__(self, "blocks", tuple(norm))

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def ground_set(self) -> FrozenSet[int]:
        return frozenset(x for b in self.blocks for x in b)

    def is_standard(self) -> bool:
        """True when the ground set is exactly ``{1..n}``."""
        return self.ground_set == frozenset(range(1, self.size + 1))

    def block_of(self, x: int) -> Tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __str__(self) -> str:
        return "|".join(_fmt_block(b) for b in self.blocks)

    def __repr__(self) -> str:
        return "SetPartition(%r)" % str(self)

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse ``347|28|1|56``; blocks with letters >= 10 use commas."""
        s = text.strip()
        if s in ("", "{}", "()"):
            return cls(())
        blocks = []
        for chunk in s.split("|"):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError("empty block in %r" % text)
            if "," in chunk:
                blocks.append([int(x) for x in chunk.split(",")])
            else:
                blocks.append([int(ch) for ch in chunk])
        return cls(blocks)


def _fmt_block(b: Tuple[int, ...]) -> str:
    if all(x < 10 for x in b):
        return "".join(map(str, b))
    return ",".join(map(str, b))


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of ``{1..n}`` (restricted-growth enumeration)."""
    if n == 0:
        yield SetPartition(())
        return

    def rec(i: int, blocks: List[List[int]]):
        if i > n:
            yield SetPartition(blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def bell_number(n: int) -> int:
    """Bell numbers by the Bell triangle (no enumeration)."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]
