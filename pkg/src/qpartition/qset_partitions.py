"""Stacks of boxes, *-heights and n-restricted q-set partitions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .combinatorics import SetPartition, set_partitions
from .errors import GuardError
from .qpoly import QPolynomial, falling_q_product

ENUMERATION_LIMIT = 10**7


def check_heights(k: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    k = tuple(int(x) for x in k)
    if any(x < 0 for x in k):
        raise ValueError(f"heights must be nonnegative: {k}")
    if n is not None and any(x > n - 1 for x in k):
        raise ValueError(f"heights must be at most {n - 1}: {k}")
    return k


def star_height(k: Sequence[int]) -> tuple[int, ...]:
    """k*_1 = 0 and k*_j = min(k_j, 1 + max of the earlier k*)."""
    k = check_heights(k)
    out: list[int] = []
    top = -1
    for x in k:
        s = 0 if not out else min(x, top + 1)
        top = max(top, s)
        out.append(s)
    return tuple(out)


def is_restricted(k: Sequence[int]) -> bool:
    """k_1 = 0 and every positive height h has an earlier column of height h - 1."""
    k = check_heights(k)
    if k and k[0] != 0:
        return False
    return all(x == 0 or (x - 1) in k[:j] for j, x in enumerate(k))


def to_set_partition(k: Sequence[int]) -> SetPartition:
    """Group positions by equal height."""
    k = check_heights(k)
    if not is_restricted(k):
        raise ValueError(f"{k} is not restricted")
    blocks: dict[int, list[int]] = {}
    for pos, x in enumerate(k, start=1):
        blocks.setdefault(x, []).append(pos)
    return SetPartition(blocks.values(), len(k))


def from_set_partition(K: SetPartition) -> tuple[int, ...]:
    """Inverse of :func:`to_set_partition`: block i (ordered by minimum) gets height i."""
    k = [0] * K.r
    for h, block in enumerate(K.blocks):
        for pos in block:
            k[pos - 1] = h
    return tuple(k)


@dataclass(frozen=True)
class QSetPartition:
    """Heights k_j with k_j - k*_j free labels per column, stored bottom-up above the star zone."""

    heights: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]
    n: int
    q: int

    def __post_init__(self):
        heights = check_heights(self.heights, self.n)
        entries = tuple(tuple(int(x) for x in col) for col in self.entries)
        object.__setattr__(self, "heights", heights)
        object.__setattr__(self, "entries", entries)
        if len(entries) != len(heights):
            raise ValueError("one entry vector per column is required")
        for k, ks, col in zip(heights, self.stars, entries):
            if len(col) != k - ks:
                raise ValueError(f"column of height {k} with *-height {ks} needs {k - ks} entries, got {col}")
            if any(not 0 <= x < self.q for x in col):
                raise ValueError(f"entries must lie in 0..{self.q - 1}: {col}")

    @property
    def r(self) -> int:
        return len(self.heights)

    @property
    def stars(self) -> tuple[int, ...]:
        return star_height(self.heights)

    def to_json(self) -> dict:
        return {"heights": list(self.heights), "entries": [list(c) for c in self.entries], "n": self.n, "q": self.q}

    @classmethod
    def from_json(cls, data: dict) -> QSetPartition:
        return cls(tuple(data["heights"]), tuple(tuple(c) for c in data["entries"]), data["n"], data["q"])


def enumeration_size_bound(n: int, r: int, q: int) -> int:
    return n**r * q ** (n * r)


def iter_qsp(n: int, r: int, q: int, limit: int = ENUMERATION_LIMIT) -> Iterator[QSetPartition]:
    if n < 1 or r < 0 or q < 1:
        raise ValueError("need n >= 1, r >= 0, q >= 1")
    bound = enumeration_size_bound(n, r, q)
    if bound > limit:
        raise GuardError("qsp-enumeration", bound, limit)
    for k in product(range(n), repeat=r):
        free = [x - s for x, s in zip(k, star_height(k))]
        for fill in product(*(product(range(q), repeat=f) for f in free)):
            yield QSetPartition(k, fill, n, q)


def enumerate_qsp(n: int, r: int, q: int, limit: int = ENUMERATION_LIMIT) -> list[QSetPartition]:
    """Every element of P_{n x r}(q), heights in lexicographic order, then fillings."""
    return list(iter_qsp(n, r, q, limit))


def count_qsp_symbolic(n: int, r: int) -> QPolynomial:
    """Sum over set partitions of {1..r} with l <= n blocks of [n][n-1]...[n-l+1]."""
    total = QPolynomial()
    for K in set_partitions(r):
        if len(K) <= n:
            total = total + falling_q_product(n, len(K))
    return total


def per_shape_counts(n: int, r: int, q: int, limit: int = ENUMERATION_LIMIT) -> dict[tuple[int, ...], int]:
    """Brute force: number of elements whose heights have a given *-height."""
    counts: dict[tuple[int, ...], int] = {}
    for K in iter_qsp(n, r, q, limit):
        counts[K.stars] = counts.get(K.stars, 0) + 1
    return counts


def tilde(K: QSetPartition, record: list | None = None) -> QSetPartition:
    """Prepend a height-0 column, then star entries column by column until valid.

    If ``record`` is a list, (1-based column of the result, starred entry) pairs are appended to it.
    """
    heights = (0,) + K.heights
    target = star_height(heights)
    starred = [0] + list(K.stars)
    cols = [[]] + [list(c) for c in K.entries]
    m = 0  # 0-based index of the column last examined
    while starred != list(target):
        m += 1
        if m >= len(heights):
            raise RuntimeError("tilde did not terminate; input is not a valid q-set partition")
        if cols[m]:
            value = cols[m].pop(0)
            starred[m] += 1
            if record is not None:
                record.append((m + 1, value))
    return QSetPartition(heights, tuple(tuple(c) for c in cols), K.n, K.q)


def render_ascii(K: QSetPartition) -> str:
    """Box picture: '*' for starred cells, labels for free cells, heights up to n - 1."""
    rows = []
    ks = K.stars
    width = max([1] + [len(str(x)) for c in K.entries for x in c])
    for h in range(K.n - 1, 0, -1):
        cells = []
        for k, s, col in zip(K.heights, ks, K.entries):
            if h > k:
                cell = ""
            elif h <= s:
                cell = "*"
            else:
                cell = str(col[h - s - 1])
            cells.append(cell.rjust(width))
        rows.append("|" + "|".join(cells) + "|")
    rows.append("+" + "+".join("-" * width for _ in K.heights) + "+")
    return "\n".join(rows)
