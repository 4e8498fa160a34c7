"""Partitions, tableaux, permutations, set partitions and their statistics."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Integer partition stored as a weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def tail(self) -> int:
        """Number of boxes below the first row."""
        return sum(self[1:])

    def removable_rows(self) -> list[int]:
        return [i for i in range(len(self)) if i == len(self) - 1 or self[i] > self[i + 1]]

    def addable_rows(self) -> list[int]:
        return [i for i in range(len(self) + 1) if i == 0 or self[i - 1] > (self[i] if i < len(self) else 0)]

    def remove_box(self, row: int) -> Partition:
        parts = list(self)
        parts[row] -= 1
        return Partition(p for p in parts if p)

    def add_box(self, row: int) -> Partition:
        parts = list(self)
        if row == len(parts):
            parts.append(1)
        else:
            parts[row] += 1
        return Partition(parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n)]


class Permutation(tuple):
    """Permutation of 1..n in one-line notation."""

    def __new__(cls, one_line: Iterable[int]):
        one_line = tuple(int(x) for x in one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError(f"not a permutation of 1..{len(one_line)}: {one_line}")
        return super().__new__(cls, one_line)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for pos, value in enumerate(self, start=1):
            inv[value - 1] = pos
        return Permutation(inv)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)!r})"


def descent_set_permutation(w: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def backsteps(w: Sequence[int]) -> list[int]:
    """Indices i such that i+1 appears to the left of i."""
    pos = {value: idx for idx, value in enumerate(w)}
    return [i for i in range(1, len(w)) if pos[i + 1] < pos[i]]


def inv(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def imaj(w: Sequence[int]) -> int:
    return sum(backsteps(w))


def maj(w: Sequence[int]) -> int:
    return sum(descent_set_permutation(w))


class StandardTableau:
    """A row-strict, column-strict filling by distinct integers (English notation).

    Intermediate tableaux of the delete-insert algorithm hold arbitrary subsets
    of 1..n, so the entry set is only required to be distinct here;
    :meth:`is_standard` checks the stronger 1..n condition.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        rows = tuple(row for row in rows if row)
        lengths = [len(row) for row in rows]
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        for row in rows:
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"rows must increase: {rows}")
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                if rows[i][j] >= rows[i + 1][j]:
                    raise ValueError(f"columns must increase: {rows}")
        entries = [x for row in rows for x in row]
        if len(set(entries)) != len(entries):
            raise ValueError(f"entries must be distinct: {rows}")
        self.rows = rows

    @classmethod
    def single_row(cls, n: int) -> StandardTableau:
        return cls([range(1, n + 1)])

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entries(self) -> set[int]:
        return {x for row in self.rows for x in row}

    def is_standard(self) -> bool:
        return self.entries() == set(range(1, self.size + 1))

    def row_of(self, x: int) -> int:
        for i, row in enumerate(self.rows):
            if x in row:
                return i
        raise KeyError(x)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __eq__(self, other) -> bool:
        if isinstance(other, StandardTableau):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"StandardTableau({[list(r) for r in self.rows]})"


def descent_set_tableau(T: StandardTableau) -> list[int]:
    """Indices i with i+1 in a strictly lower row than i."""
    row = {x: i for i, r in enumerate(T.rows) for x in r}
    return sorted(i for i in row if i + 1 in row and row[i + 1] > row[i])


def maj_tableau(T: StandardTableau) -> int:
    return sum(descent_set_tableau(T))


def standard_tableaux(shape: Sequence[int]) -> list[StandardTableau]:
    """All standard tableaux of the given shape, generated by peeling off the largest entry."""
    shape = Partition(shape)
    return [StandardTableau(rows) for rows in _syt_rows(tuple(shape))]


@lru_cache(maxsize=None)
def _syt_rows(shape: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    for i in range(len(shape)):
        if i == len(shape) - 1 or shape[i] > shape[i + 1]:
            smaller = list(shape)
            smaller[i] -= 1
            smaller_t = tuple(p for p in smaller if p)
            for rows in _syt_rows(smaller_t):
                new_rows = [list(r) for r in rows]
                if i == len(new_rows):
                    new_rows.append([n])
                else:
                    new_rows[i].append(n)
                out.append(tuple(tuple(r) for r in new_rows))
    return tuple(out)


class SetPartition:
    """Set partition of {1..r}; blocks sorted internally and by minimum element."""

    __slots__ = ("blocks", "r")

    def __init__(self, blocks: Iterable[Iterable[int]], r: int | None = None):
        blocks = [tuple(sorted(int(x) for x in b)) for b in blocks]
        blocks = tuple(sorted((b for b in blocks), key=lambda b: b[0] if b else 0))
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        elements = [x for b in blocks for x in b]
        if r is None:
            r = len(elements)
        if sorted(elements) != list(range(1, r + 1)):
            raise ValueError(f"blocks do not partition 1..{r}: {blocks}")
        self.blocks = blocks
        self.r = r

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        if isinstance(other, SetPartition):
            return self.r == other.r and self.blocks == other.blocks
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.r, self.blocks))

    def __repr__(self) -> str:
        return "SetPartition(" + " | ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"


def set_partitions(r: int) -> Iterator[SetPartition]:
    """All set partitions of {1..r}, via restricted growth strings."""

    def growth(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == r:
            yield prefix
            return
        for b in range(top + 2):
            yield from growth(prefix + [b], max(top, b))

    if r == 0:
        yield SetPartition([], 0)
        return
    for rgs in growth([0], 0):
        blocks: dict[int, list[int]] = {}
        for pos, b in enumerate(rgs, start=1):
            blocks.setdefault(b, []).append(pos)
        yield SetPartition(blocks.values(), r)


def check_sequence(a: Sequence[int], n: int) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if n < 1:
        raise ValueError("n must be positive")
    bad = [x for x in a if not 1 <= x <= n]
    if bad:
        raise ValueError(f"sequence entries must lie in 1..{n}; got {bad}")
    return a


def sequence_to_permutation(a: Sequence[int], n: int) -> Permutation:
    """The permutation w_a: rightmost occurrence of each value in (1, ..., n, a_1, ..., a_r)."""
    a = check_sequence(a, n)
    word = list(range(1, n + 1)) + list(a)
    last = {value: idx for idx, value in enumerate(word)}
    return Permutation(sorted(last, key=last.__getitem__))


def sequence_to_permutation_iterative(a: Sequence[int], n: int) -> Permutation:
    """Same map as :func:`sequence_to_permutation`, by cycling each a_i to the right end."""
    a = check_sequence(a, n)
    w = list(range(1, n + 1))
    for x in a:
        w.remove(x)
        w.append(x)
    return Permutation(w)


def shape_of_sequence(a: Sequence[int]) -> SetPartition:
    blocks: dict[int, list[int]] = {}
    for pos, x in enumerate(a, start=1):
        blocks.setdefault(x, []).append(pos)
    return SetPartition(blocks.values(), len(a))


def coset_reps(n: int, t: int) -> list[Permutation]:
    """Permutations of 1..n whose first t values increase, in lexicographic order."""
    if not 0 <= t <= n:
        raise ValueError(f"t must lie in [0, {n}]")
    return [
        Permutation(w)
        for w in permutations(range(1, n + 1))
        if all(w[i] < w[i + 1] for i in range(t - 1))
    ]


@lru_cache(maxsize=None)
def stirling2(r: int, ell: int) -> int:
    if r < 0 or ell < 0:
        raise ValueError("arguments must be nonnegative")
    if r == 0 and ell == 0:
        return 1
    if r == 0 or ell == 0:
        return 0
    return ell * stirling2(r - 1, ell) + stirling2(r - 1, ell - 1)


def bell(r: int) -> int:
    return sum(stirling2(r, ell) for ell in range(r + 1))
