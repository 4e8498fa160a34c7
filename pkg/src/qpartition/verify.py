"""Numbered acceptance checks, grouped into suites for the ``verify`` command."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from . import glnq
from .bratteli import level_set, multiplicity
from .combinatorics import (
    StandardTableau,
    backsteps,
    bell,
    coset_reps,
    descent_set_tableau,
    imaj,
    inv,
    sequence_to_permutation,
)
from .qpoly import QPolynomial, d_poly, f_q, falling_q_product, imaj_generating_sum, q_factorial, q_int
from .qset_partitions import count_qsp_symbolic, enumerate_qsp, per_shape_counts, tilde
from .schensted import delete_insert, delete_insert_inverse, delete_insert_trace


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({'; '.join(self.details)})" if self.details else ""
        return f"{status} criterion {self.number}: {self.name} [{self.seconds:.2f}s]{extra}"


# Bratteli diagram for n = 6 down to level 3, as drawn with path counts under each vertex.
B6_REFERENCE = {
    Fraction(0): [((6,), 1)],
    Fraction(1, 2): [((5,), 1)],
    Fraction(1): [((6,), 1), ((5, 1), 1)],
    Fraction(3, 2): [((5,), 2), ((4, 1), 1)],
    Fraction(2): [((6,), 2), ((5, 1), 3), ((4, 2), 1), ((4, 1, 1), 1)],
    Fraction(5, 2): [((5,), 5), ((4, 1), 5), ((3, 2), 1), ((3, 1, 1), 1)],
    Fraction(3): [
        ((6,), 5), ((5, 1), 10), ((4, 2), 6), ((4, 1, 1), 6), ((3, 3), 1), ((3, 2, 1), 2), ((3, 1, 1, 1), 1),
    ],
}

# Delete-insert of a = (3,5,2,3,2) with n = 6: tableau after every half step,
# and (w_a, BS(w_a)) after every full step.
DI_EXAMPLE_SEQ = (3, 5, 2, 3, 2)
DI_EXAMPLE_TABLEAUX = [
    [[1, 2, 3, 4, 5, 6]],
    [[1, 2, 4, 5, 6]],
    [[1, 2, 3, 5, 6], [4]],
    [[1, 2, 3, 6], [4]],
    [[1, 2, 3, 5], [4, 6]],
    [[1, 3, 5], [4, 6]],
    [[1, 2, 5], [3, 6], [4]],
    [[1, 2, 5], [4, 6]],
    [[1, 2, 3], [4, 5], [6]],
    [[1, 3], [4, 5], [6]],
    [[1, 2], [3, 5], [4], [6]],
]
DI_EXAMPLE_PERMS = [
    ((1, 2, 3, 4, 5, 6), []),
    ((1, 2, 4, 5, 6, 3), [3]),
    ((1, 2, 4, 6, 3, 5), [3, 5]),
    ((1, 4, 6, 3, 5, 2), [2, 3, 5]),
    ((1, 4, 6, 5, 2, 3), [3, 5]),
    ((1, 4, 6, 5, 3, 2), [2, 3, 5]),
]


def _timed(number, name, fn) -> CheckResult:
    start = time.perf_counter()
    details: list[str] = []
    try:
        ok = fn(details)
    except Exception as exc:  # a crash is a failure, reported rather than raised
        ok = False
        details.append(f"{type(exc).__name__}: {exc}")
    return CheckResult(number, name, bool(ok), details, time.perf_counter() - start)


def check_dimension_formula(details) -> bool:
    ok = True
    for n in range(1, 6):
        for r in range(0, 5):
            closed = d_poly(n, r)
            brute = imaj_generating_sum(n, r)
            tab = QPolynomial()
            for lam in level_set(n, r):
                tab = tab + f_q(lam) * multiplicity(n, r, lam)
            if not closed == brute == tab:
                ok = False
                details.append(f"mismatch at n={n}, r={r}")
    return ok


def check_specializations(details) -> bool:
    ok = True
    for n in range(1, 9):
        for r in range(0, 7):
            if d_poly(n, r)(1) != n**r:
                ok = False
                details.append(f"d({n},{r})(1) != {n}^{r}")
        for r in range(0, n + 1):
            if d_poly(n, r)(0) != bell(r):
                ok = False
                details.append(f"d({n},{r})(0) != B({r})")
    return ok


def check_b6_reference(details) -> bool:
    ok = True
    labels = 0
    for lv, expected in B6_REFERENCE.items():
        got = [(tuple(lam), multiplicity(6, lv, lam)) for lam in level_set(6, lv)]
        labels += len(got)
        if got != expected:
            ok = False
            details.append(f"level {lv}: {got}")
    square_sum = sum(m * m for _, m in B6_REFERENCE[Fraction(3)])
    computed = sum(multiplicity(6, 3, lam) ** 2 for lam in level_set(6, 3))
    if not square_sum == computed == 203 == bell(6):
        ok = False
        details.append(f"sum of squares {computed}")
    details.append(f"{labels} labels")
    return ok


def check_delete_insert(details) -> bool:
    ok = True
    for n, r in ((4, 4), (3, 5)):
        seen = set()
        for a in product(range(1, n + 1), repeat=r):
            P, Q = delete_insert(a, n)
            if delete_insert_inverse(P, Q) != a:
                ok = False
                details.append(f"round trip failed for {a}")
            if backsteps(sequence_to_permutation(a, n)) != descent_set_tableau(P):
                ok = False
                details.append(f"BS != Des for {a}")
            seen.add((P, Q))
        if len(seen) != n**r:
            ok = False
            details.append(f"forward map not injective on {{1..{n}}}^{r}")
    steps = delete_insert_trace(DI_EXAMPLE_SEQ, 6)
    if [s.tableau.to_lists() for s in steps] != DI_EXAMPLE_TABLEAUX:
        ok = False
        details.append("worked example tableaux differ")
    for i, (w, bs) in enumerate(DI_EXAMPLE_PERMS):
        step = steps[2 * i]
        got_w = sequence_to_permutation(step.prefix, 6)
        if tuple(got_w) != w or backsteps(got_w) != bs or descent_set_tableau(step.tableau) != bs:
            ok = False
            details.append(f"worked example differs at step {i}")
    return ok


def _distribution(perms, stat) -> QPolynomial:
    counts: dict[int, int] = {}
    for w in perms:
        s = stat(w)
        counts[s] = counts.get(s, 0) + 1
    return QPolynomial(counts.get(i, 0) for i in range(max(counts) + 1))


def check_equidistribution(details) -> bool:
    ok = True
    for n in range(0, 7):
        for t in range(0, n + 1):
            reps = coset_reps(n, t) if n else [()]
            target = q_factorial(n).exact_div(q_factorial(t))
            if not _distribution(reps, imaj) == _distribution(reps, inv) == target:
                ok = False
                details.append(f"n={n}, t={t}")
    for n in range(0, 8):
        if _distribution(permutations(range(1, n + 1)), inv) != q_factorial(n):
            ok = False
            details.append(f"inversions on S_{n}")
    return ok


def check_qsp_counting(details) -> bool:
    ok = True
    for n in range(1, 4):
        for r in range(0, 4):
            for q in (2, 3):
                if len(enumerate_qsp(n, r, q)) != d_poly(n, r)(q):
                    ok = False
                    details.append(f"enumeration at ({n},{r},{q})")
                for ks, count in per_shape_counts(n, r, q).items():
                    if count != falling_q_product(n, len(set(ks)))(q):
                        ok = False
                        details.append(f"shape {ks} at ({n},{r},{q})")
    for n in range(1, 7):
        for r in range(0, 6):
            if count_qsp_symbolic(n, r) != d_poly(n, r):
                ok = False
                details.append(f"symbolic count at ({n},{r})")
    return ok


BASIS_CASES = ((2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2), (3, 2, 2), (4, 2, 2))


def check_module_basis(details) -> bool:
    ok = True
    for n, r, q in BASIS_CASES:
        if len(glnq.basis(n, r, q)) != d_poly(n, r)(q):
            ok = False
            details.append(f"basis size at ({n},{r},{q})")
        if len(glnq.half_level_basis(n, r, q)) * q_int(n)(q) != d_poly(n, r + 1)(q):
            ok = False
            details.append(f"half-level size at ({n},{r},{q})")
    for K in enumerate_qsp(3, 2, 2):
        word = ((0, ()),) + glnq.qsp_to_word(K)
        if glnq.word_to_qsp(glnq.canonicalize(word), 3, 2) != tilde(K):
            ok = False
            details.append(f"tilde mismatch for {K}")
    return ok


def check_representation(details, pairs: int = 200, seed: int = 0) -> bool:
    ok = True
    for n, r, q in BASIS_CASES:
        for g in glnq.generating_set(n, q):
            glnq.rep_permutation(g, n, r, q)  # raises unless a permutation
            if glnq.rep_matrix(g, n, r, q).perm != glnq.rep_matrix(g.matrix(n, q), n, r, q).perm:
                ok = False
                details.append(f"table and matrix action differ for {g} at ({n},{r},{q})")
    rng = random.Random(seed)
    for n, r, q in ((3, 1, 2), (2, 2, 2)):
        group = glnq.all_group_elements(n, q)
        for _ in range(pairs):
            g, h = rng.choice(group), rng.choice(group)
            if glnq.rep_matrix(g, n, r, q) @ glnq.rep_matrix(h, n, r, q) != glnq.rep_matrix(g @ h, n, r, q):
                ok = False
                details.append(f"homomorphism fails at ({n},{r},{q})")
                break
    for n in range(2, 5):
        for q in (2, 3, 5):
            if not glnq.check_matrix_relations(n, q, rng):
                ok = False
                details.append(f"matrix relations at n={n}, q={q}")
    return ok


COMMUTANT_CASES = ((2, 1, 2, 2), (2, 1, 3, 2), (4, 2, 2, 15))


def check_commutant(details, max_n: int | None = None, max_group_order: int = glnq.DEFAULT_MAX_GROUP_ORDER) -> bool:
    ok = True
    for n, r, q, expected in COMMUTANT_CASES:
        if max_n is not None and n > max_n:
            details.append(f"({n},{r},{q}) skipped by --max-n")
            continue
        method = "both" if glnq.group_order(n, q) <= max_group_order else "orbits"
        got = glnq.commutant_dim(n, r, q, method=method, max_group_order=max_group_order)
        details.append(f"({n},{r},{q}) -> {got} via {method}")
        if got != expected or expected != bell(2 * r):
            ok = False
    return ok


CRITERIA = {
    1: ("dimension formula three ways", check_dimension_formula),
    2: ("specializations at q=1 and q=0", check_specializations),
    3: ("Bratteli diagram for n=6 up to level 3", check_b6_reference),
    4: ("delete-insert bijection and worked example", check_delete_insert),
    5: ("inv/imaj equidistribution on coset representatives", check_equidistribution),
    6: ("q-set partition counting", check_qsp_counting),
    7: ("module basis sizes and tilde", check_module_basis),
    8: ("representation correctness", check_representation),
    9: ("commutant dimension equals B(2r)", check_commutant),
}

SUITES = {
    "all": tuple(CRITERIA),
    "identities": (1, 2, 3, 4, 5, 6),
    "basis": (7, 8),
    "commutant": (9,),
}


def run_criterion(number: int, **kwargs) -> CheckResult:
    name, fn = CRITERIA[number]
    if kwargs:
        return _timed(number, name, lambda details: fn(details, **kwargs))
    return _timed(number, name, fn)


def run_suite(suite: str, max_n: int | None = None, max_group_order: int = glnq.DEFAULT_MAX_GROUP_ORDER):
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for number in SUITES[suite]:
        if number == 9:
            results.append(run_criterion(9, max_n=max_n, max_group_order=max_group_order))
        else:
            results.append(run_criterion(number))
    return results
