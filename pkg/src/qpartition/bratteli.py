"""Bratteli diagram of vacillating shapes: level sets, path counts and DOT/JSON export."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .combinatorics import Partition, enumerate_partitions
from .schensted import VacillatingTableau


def _level(level) -> Fraction:
    lv = Fraction(level)
    if lv < 0 or (lv * 2).denominator != 1:
        raise ValueError(f"level must be a nonnegative half-integer, got {level}")
    return lv


def level_set(n: int, level) -> list[Partition]:
    """Lambda_n^level in reverse-lex order.

    Integer level r: partitions of n with at most r boxes below the first row.
    Half level r + 1/2: partitions of n - 1 with the same bound r.
    """
    return list(_level_set(n, _level(level)))


@lru_cache(maxsize=None)
def _level_set(n: int, lv: Fraction) -> tuple[Partition, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    bound = int(lv)  # floor for half levels
    size = n if lv.denominator == 1 else n - 1
    return tuple(p for p in enumerate_partitions(size) if p.tail() <= bound)


def _neighbours_below(n: int, lv: Fraction, lam: Partition) -> list[Partition]:
    """Vertices one half level above ``lv`` (closer to the root) adjacent to ``lam``."""
    prev = lv - Fraction(1, 2)
    allowed = set(_level_set(n, prev))
    if lv.denominator == 2:
        cands = [lam.add_box(i) for i in lam.addable_rows()]
    else:
        cands = [lam.remove_box(i) for i in lam.removable_rows()]
    return [c for c in cands if c in allowed]


@lru_cache(maxsize=None)
def _multiplicities(n: int, lv: Fraction) -> dict[Partition, int]:
    if lv == 0:
        return {Partition([n]): 1}
    above = _multiplicities(n, lv - Fraction(1, 2))
    return {lam: sum(above[mu] for mu in _neighbours_below(n, lv, lam)) for lam in _level_set(n, lv)}


def multiplicity(n: int, level, lam) -> int:
    """Number of paths from (n) at level 0 to ``lam`` at ``level``."""
    lv, lam = _level(level), Partition(lam)
    table = _multiplicities(n, lv)
    if lam not in table:
        raise ValueError(f"{tuple(lam)} is not in level {lv} of the diagram for n={n}")
    return table[lam]


def enumerate_vacillating(n: int, r: int, lam) -> list[VacillatingTableau]:
    """Every r-vacillating tableau ending at ``lam``, in lexicographic order of shape sequences."""
    lv, lam = _level(r), Partition(lam)
    if lv.denominator != 1:
        raise ValueError("vacillating tableaux end at an integer level")
    if lam not in _level_set(n, lv):
        raise ValueError(f"{tuple(lam)} is not in level {lv} of the diagram for n={n}")

    def back(level: Fraction, shape: Partition):
        if level == 0:
            yield (shape,)
            return
        for prev in _neighbours_below(n, level, shape):
            for path in back(level - Fraction(1, 2), prev):
                yield path + (shape,)

    return sorted(VacillatingTableau(p) for p in back(lv, lam))


@dataclass
class BratteliDiagram:
    n: int
    max_level: Fraction
    levels: dict[Fraction, list[Partition]] = field(default_factory=dict)
    edges: dict[tuple[Fraction, Partition], list[Partition]] = field(default_factory=dict)
    multiplicities: dict[tuple[Fraction, Partition], int] = field(default_factory=dict)

    @classmethod
    def build(cls, n: int, max_level) -> BratteliDiagram:
        top = _level(max_level)
        d = cls(n, top)
        lv = Fraction(0)
        while lv <= top:
            d.levels[lv] = level_set(n, lv)
            for lam in d.levels[lv]:
                d.multiplicities[(lv, lam)] = multiplicity(n, lv, lam)
                if lv > 0:
                    d.edges[(lv, lam)] = _neighbours_below(n, lv, lam)
            lv += Fraction(1, 2)
        return d

    def num_vertices(self) -> int:
        return sum(len(v) for v in self.levels.values())

    def num_edges(self) -> int:
        return sum(len(v) for v in self.edges.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "max_level": str(self.max_level),
            "levels": [
                {
                    "level": str(lv),
                    "vertices": [
                        {"partition": list(lam), "multiplicity": self.multiplicities[(lv, lam)]}
                        for lam in shapes
                    ],
                }
                for lv, shapes in self.levels.items()
            ],
        }


def _fmt(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _node(lv: Fraction, lam: Partition) -> str:
    return f"v{int(lv * 2)}_" + ("_".join(map(str, lam)) or "empty")


def dot_export(d: BratteliDiagram) -> str:
    lines = ["digraph bratteli {", "  node [shape=plaintext];"]
    for lv, shapes in d.levels.items():
        lines.append(f"  // level {lv}")
        for lam in shapes:
            label = f"{_fmt(lam)} | {d.multiplicities[(lv, lam)]}"
            lines.append(f'  {_node(lv, lam)} [label="{label}"];')
        lines.append("  { rank=same; " + " ".join(_node(lv, lam) for lam in shapes) + "; }")
    for (lv, lam), ups in d.edges.items():
        for mu in ups:
            lines.append(f"  {_node(lv - Fraction(1, 2), mu)} -> {_node(lv, lam)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def json_export(d: BratteliDiagram) -> str:
    return json.dumps(d.to_json(), indent=2)


def stabilization_table(r: int, ns) -> dict[tuple[int, ...], dict[int, int]]:
    """m_r^lambda keyed by the part of lambda below the first row, for each n in ``ns``."""
    out: dict[tuple[int, ...], dict[int, int]] = {}
    for n in ns:
        for lam in level_set(n, r):
            out.setdefault(tuple(lam[1:]), {})[n] = multiplicity(n, r, lam)
    return out
