"""Integer polynomials in q, q-integers, and the dimension polynomial d_{n,r}(q)."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from . import _kernels
from .combinatorics import Partition, maj_tableau, standard_tableaux, stirling2
from .errors import GuardError

IMAJ_MAX_N = 6
IMAJ_MAX_R = 6
F_Q_MAX_SIZE = 12


class QPolynomial:
    """Polynomial with integer coefficients; ``coeffs[i]`` multiplies q**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, c: int) -> QPolynomial:
        return cls([c])

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> QPolynomial:
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> QPolynomial:
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = QPolynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, divisor: QPolynomial) -> tuple[QPolynomial, QPolynomial]:
        """Long division; the divisor's leading coefficient must divide every step exactly."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dd = divisor.degree
        quot = [0] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1 - dd, -1, -1):
            c = rem[i + dd]
            if c % lead:
                raise ValueError("division does not stay in integer coefficients")
            c //= lead
            quot[i] = c
            if c:
                for j, y in enumerate(divisor.coeffs):
                    rem[i + j] -= c * y
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, divisor: QPolynomial) -> QPolynomial:
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ValueError(f"{divisor} does not divide {self}")
        return quot

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> QPolynomial:
        return cls(data)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def q_int(i: int) -> QPolynomial:
    """[i] = 1 + q + ... + q^(i-1); [0] = 0."""
    if i < 0:
        raise ValueError("q-integer of a negative number")
    return QPolynomial([1] * i)


def falling_q_product(n: int, ell: int) -> QPolynomial:
    """[n][n-1]...[n-ell+1]."""
    if not 0 <= ell <= n:
        raise ValueError(f"need 0 <= ell <= n, got ell={ell}, n={n}")
    out = QPolynomial([1])
    for i in range(n - ell + 1, n + 1):
        out = out * q_int(i)
    return out


def q_factorial(n: int) -> QPolynomial:
    return falling_q_product(n, n)


@lru_cache(maxsize=None)
def d_poly(n: int, r: int) -> QPolynomial:
    """d_{n,r}(q) = sum over l of S(r, l) [n][n-1]...[n-l+1]."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    if r == 0:
        return QPolynomial([1])
    total = QPolynomial()
    for ell in range(1, min(n, r) + 1):
        total = total + stirling2(r, ell) * falling_q_product(n, ell)
    return total


def imaj_generating_sum(n: int, r: int, backend: str | None = None) -> QPolynomial:
    """Brute force: sum of q^imaj(w_a) over all a in {1..n}^r."""
    if n > IMAJ_MAX_N or r > IMAJ_MAX_R:
        raise GuardError("imaj-enumeration", max(n, r), max(IMAJ_MAX_N, IMAJ_MAX_R))
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    return QPolynomial(_kernels.imaj_histogram(n, r, backend=backend).tolist())


def f_q(shape: Sequence[int]) -> QPolynomial:
    """Sum of q^maj(T) over standard tableaux T of the given shape."""
    shape = Partition(shape)
    if shape.n > F_Q_MAX_SIZE:
        raise GuardError("tableau-enumeration", shape.n, F_Q_MAX_SIZE)
    return _f_q(tuple(shape))


@lru_cache(maxsize=None)
def _f_q(shape: tuple[int, ...]) -> QPolynomial:
    counts: dict[int, int] = {}
    for T in standard_tableaux(shape):
        m = maj_tableau(T)
        counts[m] = counts.get(m, 0) + 1
    top = max(counts)
    return QPolynomial(counts.get(i, 0) for i in range(top + 1))


def q_hook_formula(shape: Sequence[int]) -> QPolynomial:
    """q^{b(shape)} [n]! / prod of [hook lengths], used only as a cross-check."""
    shape = Partition(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    denom = QPolynomial([1])
    for i, row in enumerate(shape):
        for j in range(row):
            denom = denom * q_int(row - j + conj[j] - i - 1)
    b = sum(i * p for i, p in enumerate(shape))
    return (QPolynomial.monomial(b) * q_factorial(shape.n)).exact_div(denom)


def verify_corollary_sum(n: int, r: int) -> tuple[bool, dict]:
    """Compare d_poly, the imaj sum and the sum of f_q * multiplicity over Lambda_n^r."""
    from .bratteli import level_set, multiplicity

    closed = d_poly(n, r)
    brute = imaj_generating_sum(n, r)
    tableau_sum = QPolynomial()
    for lam in level_set(n, r):
        tableau_sum = tableau_sum + f_q(lam) * multiplicity(n, r, lam)
    report = {
        "n": n,
        "r": r,
        "d_poly": closed.to_json(),
        "imaj_sum": brute.to_json(),
        "tableau_sum": tableau_sum.to_json(),
        "mismatches": [
            name for name, poly in (("imaj_sum", brute), ("tableau_sum", tableau_sum)) if poly != closed
        ],
    }
    return not report["mismatches"], report
