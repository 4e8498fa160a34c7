"""Delete-insert Schensted correspondence between words in {1..n}^r and (P, Q) pairs.

Each letter a_i is first removed from the current tableau by a jeu-de-taquin
slide and then row-inserted again.  The shapes visited form a vacillating
tableau Q, and the final tableau is P.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinatorics import (
    Partition,
    StandardTableau,
    backsteps,
    check_sequence,
    descent_set_tableau,
    sequence_to_permutation,
)


class VacillatingTableau(tuple):
    """Shapes (lambda^(0), lambda^(1/2), lambda^(1), ..., lambda^(r)).

    Stored as a flat tuple of :class:`Partition`; entry ``2*i`` is the shape at
    level ``i`` and entry ``2*i+1`` the shape at level ``i + 1/2``.
    """

    def __new__(cls, shapes: Sequence[Sequence[int]]):
        shapes = tuple(Partition(s) for s in shapes)
        if not shapes or len(shapes) % 2 == 0:
            raise ValueError("a vacillating tableau has 2r+1 shapes")
        first = shapes[0]
        if len(first) > 1:
            raise ValueError(f"first shape must be a single row, got {first}")
        n = first.n
        for idx in range(1, len(shapes)):
            prev, cur = shapes[idx - 1], shapes[idx]
            if idx % 2 == 1:
                ok = cur.n == n - 1 and _differs_by_box(cur, prev)
            else:
                ok = cur.n == n and _differs_by_box(prev, cur)
            if not ok:
                raise ValueError(f"invalid step {prev} -> {cur} at position {idx}")
            if cur.tail() > idx // 2:
                raise ValueError(f"shape {cur} exceeds level bound at position {idx}")
        return super().__new__(cls, shapes)

    @property
    def n(self) -> int:
        return self[0].n

    @property
    def r(self) -> int:
        return (len(self) - 1) // 2

    @property
    def shape(self) -> Partition:
        return self[-1]

    def at(self, level) -> Partition:
        return self[int(Fraction(level) * 2)]

    def __repr__(self) -> str:
        return f"VacillatingTableau({[tuple(s) for s in self]})"


def _differs_by_box(small: Partition, big: Partition) -> bool:
    """True when ``big`` is ``small`` plus one box."""
    return _added_row(small, big) is not None


def _added_row(small: Sequence[int], big: Sequence[int]) -> int | None:
    if sum(big) != sum(small) + 1:
        return None
    diff = [i for i in range(len(big)) if big[i] != (small[i] if i < len(small) else 0)]
    if len(diff) != 1 or big[diff[0]] - (small[diff[0]] if diff[0] < len(small) else 0) != 1:
        return None
    if len(small) > len(big):
        return None
    return diff[0]


def rsk_insert(T: StandardTableau, x: int) -> StandardTableau:
    """Schensted row insertion of ``x``."""
    rows = [list(row) for row in T.rows]
    if any(x in row for row in rows):
        raise ValueError(f"{x} is already an entry of {T}")
    for row in rows:
        bigger = [j for j, y in enumerate(row) if y > x]
        if not bigger:
            row.append(x)
            return StandardTableau(rows)
        j = bigger[0]
        row[j], x = x, row[j]
    rows.append([x])
    return StandardTableau(rows)


def rsk_uninsert(T: StandardTableau, row: int) -> tuple[StandardTableau, int]:
    """Reverse bumping from the last cell of ``row``; returns the ejected letter."""
    rows = [list(r) for r in T.rows]
    if not 0 <= row < len(rows):
        raise ValueError(f"row {row} out of range")
    if row + 1 < len(rows) and len(rows[row + 1]) == len(rows[row]):
        raise ValueError(f"last cell of row {row} is not a corner")
    y = rows[row].pop()
    for i in range(row - 1, -1, -1):
        smaller = [j for j, z in enumerate(rows[i]) if z < y]
        j = smaller[-1]
        rows[i][j], y = y, rows[i][j]
    return StandardTableau(rows), y


def jdt_delete(T: StandardTableau, x: int) -> StandardTableau:
    """Remove ``x`` and slide the hole out to an outer corner."""
    return _jdt_delete(T, x)[0]


def _jdt_delete(T: StandardTableau, x: int) -> tuple[StandardTableau, int]:
    rows = [list(r) for r in T.rows]
    try:
        i = T.row_of(x)
    except KeyError:
        raise ValueError(f"{x} is not an entry of {T}") from None
    j = rows[i].index(x)
    while True:
        right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
        below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
        if right is None and below is None:
            rows[i].pop()
            return StandardTableau(rows), i
        if below is None or (right is not None and right < below):
            rows[i][j] = right
            j += 1
        else:
            rows[i][j] = below
            i += 1


def jdt_insert(T: StandardTableau, x: int, row: int) -> StandardTableau:
    """Inverse of :func:`jdt_delete`: open a hole at the end of ``row`` and slide it in until ``x`` fits."""
    rows = [list(r) for r in T.rows]
    if any(x in r for r in rows):
        raise ValueError(f"{x} is already an entry of {T}")
    if row == len(rows):
        rows.append([])
    if row > len(rows) or (row > 0 and len(rows[row - 1]) <= len(rows[row])):
        raise ValueError(f"cannot add a cell at the end of row {row}")
    i, j = row, len(rows[row])
    rows[i].append(None)
    while True:
        above = rows[i - 1][j] if i > 0 else None
        left = rows[i][j - 1] if j > 0 else None
        candidates = [v for v in (above, left) if v is not None and v > x]
        if not candidates:
            rows[i][j] = x
            return StandardTableau(rows)
        if above is not None and (left is None or above > left):
            rows[i][j] = above
            i -= 1
        else:
            rows[i][j] = left
            j -= 1


@dataclass(frozen=True)
class TraceStep:
    level: Fraction
    letter: int | None
    tableau: StandardTableau
    prefix: tuple[int, ...]


def delete_insert_trace(a: Sequence[int], n: int) -> list[TraceStep]:
    """Every tableau P_0, P_{1/2}, P_1, ..., P_r produced while delete-inserting ``a``."""
    a = check_sequence(a, n)
    P = StandardTableau.single_row(n)
    steps = [TraceStep(Fraction(0), None, P, ())]
    for i, x in enumerate(a):
        P = jdt_delete(P, x)
        steps.append(TraceStep(Fraction(2 * i + 1, 2), x, P, a[:i]))
        P = rsk_insert(P, x)
        steps.append(TraceStep(Fraction(i + 1), x, P, a[: i + 1]))
    return steps


def delete_insert(a: Sequence[int], n: int) -> tuple[StandardTableau, VacillatingTableau]:
    steps = delete_insert_trace(a, n)
    return steps[-1].tableau, VacillatingTableau([s.tableau.shape for s in steps])


def delete_insert_inverse(P: StandardTableau, Q: VacillatingTableau) -> tuple[int, ...]:
    """Recover the word ``a`` with ``delete_insert(a, n) == (P, Q)``."""
    Q = VacillatingTableau(Q)
    n = Q.n
    if P.shape != Q.shape:
        raise ValueError(f"shape of P {P.shape} differs from final shape of Q {Q.shape}")
    if not P.is_standard() or P.size != n:
        raise ValueError("P must be standard on 1..n")
    letters = []
    T = P
    for i in range(Q.r, 0, -1):
        full, half, prev = Q[2 * i], Q[2 * i - 1], Q[2 * i - 2]
        T, x = rsk_uninsert(T, _added_row(half, full))
        T = jdt_insert(T, x, _added_row(half, prev))
        letters.append(x)
    if T != StandardTableau.single_row(n):
        raise ValueError("pair (P, Q) is not in the image of delete-insert")
    return tuple(reversed(letters))


def trace_rows(a: Sequence[int], n: int) -> list[dict]:
    """Rows of the worked-example table: tableau, prefix, w_a and BS(w_a) = Des(P) at integer steps."""
    out = []
    for step in delete_insert_trace(a, n):
        row = {
            "i": str(step.level),
            "a_i": step.letter,
            "P": step.tableau.to_lists(),
            "shape": list(step.tableau.shape),
        }
        if step.level.denominator == 1:
            w = sequence_to_permutation(step.prefix, n)
            row["a"] = list(step.prefix)
            row["w_a"] = list(w)
            row["BS"] = backsteps(w)
            row["Des"] = descent_set_tableau(step.tableau)
        out.append(row)
    return out
