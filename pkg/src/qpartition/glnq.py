"""GL_n(F_q) acting on pure words w_{k_1}(a^(1)) (x)_U ... (x)_U w_{k_r}(a^(r)) (x) 1.

A pure word is a tuple of columns ``(k, a)`` with ``a`` a tuple of k field
elements, ``a[i-1]`` sitting at height i.  Canonical words have every entry at
height <= k* (the *-height) equal to zero; they form a basis indexed by the
q-set partitions, and group elements permute them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import GuardError
from .qset_partitions import QSetPartition, enumerate_qsp, star_height

DEFAULT_MAX_DIM = 5000
DEFAULT_MAX_GROUP_ORDER = 25000


def is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


class PrimeField:
    def __init__(self, q: int):
        if not is_prime(q):
            raise ValueError(f"only prime fields are supported, got q={q}")
        self.q = q

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.q

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.q

    def neg(self, x: int) -> int:
        return -x % self.q

    def mul(self, x: int, y: int) -> int:
        return x * y % self.q

    def inv(self, x: int) -> int:
        x %= self.q
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(x, -1, self.q)

    def units(self) -> range:
        return range(1, self.q)

    def primitive_root(self) -> int:
        q = self.q
        for g in range(1, q):
            if len({pow(g, e, q) for e in range(1, q)}) == q - 1:
                return g
        raise AssertionError("unreachable for prime q")

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"


# --- matrices -------------------------------------------------------------------------


class GLMatrix:
    """Invertible n x n matrix over F_q, stored as a tuple of row tuples."""

    __slots__ = ("rows", "q")

    def __init__(self, rows: Iterable[Iterable[int]], q: int, check: bool = True):
        rows = tuple(tuple(int(x) % q for x in row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        self.rows = rows
        self.q = q
        if check:
            if not is_prime(q):
                raise ValueError(f"only prime fields are supported, got q={q}")
            if _rank(rows, q) != len(rows):
                raise ValueError("matrix is not invertible")

    @classmethod
    def identity(cls, n: int, q: int) -> GLMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], q, check=False)

    @classmethod
    def from_row_major(cls, values: Sequence[int], n: int, q: int) -> GLMatrix:
        values = list(values)
        if len(values) != n * n:
            raise ValueError(f"expected {n * n} entries, got {len(values)}")
        return cls([values[i * n : (i + 1) * n] for i in range(n)], q)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: GLMatrix) -> GLMatrix:
        q, n = self.q, self.n
        cols = list(zip(*other.rows))
        return GLMatrix(
            [[sum(x * y for x, y in zip(row, col)) % q for col in cols] for row in self.rows], q, check=False
        )

    def inverse(self) -> GLMatrix:
        q, n = self.q, self.n
        aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(self.rows)]
        for c in range(n):
            piv = next(i for i in range(c, n) if aug[i][c])
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = pow(aug[c][c], -1, q)
            aug[c] = [x * inv % q for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [(x - f * y) % q for x, y in zip(aug[i], aug[c])]
        return GLMatrix([row[n:] for row in aug], q, check=False)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def in_parabolic(self) -> bool:
        """Block upper triangular with blocks of sizes 1 and n - 1."""
        return all(self.rows[i][0] == 0 for i in range(1, self.n))

    def levi(self) -> GLMatrix:
        """diag(p_11, lower-right block); the U-part of a parabolic element is dropped."""
        n = self.n
        return GLMatrix(
            [[self.rows[i][j] if (i == 0) == (j == 0) else 0 for j in range(n)] for i in range(n)],
            self.q,
            check=False,
        )

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)

    def __eq__(self, other) -> bool:
        if isinstance(other, GLMatrix):
            return self.q == other.q and self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.q, self.rows))

    def __repr__(self) -> str:
        return f"GLMatrix({[list(r) for r in self.rows]}, q={self.q})"


def _rank(rows, q) -> int:
    m = [list(r) for r in rows]
    n = len(m)
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, n) if m[i][c] % q), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, q)
        for i in range(rank + 1, n):
            f = m[i][c] * inv % q
            if f:
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def group_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


# --- generators -------------------------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    """Symbolic generator: ('x', i, j, t), ('s', i) or ('h', j, t), indices 1-based."""

    kind: str
    i: int
    j: int = 0
    t: int = 1

    def matrix(self, n: int, q: int) -> GLMatrix:
        if self.kind == "x":
            return gen_x(n, q, self.i, self.j, self.t)
        if self.kind == "s":
            return gen_s(n, q, self.i)
        if self.kind == "h":
            return gen_h(n, q, self.i, self.t)
        raise ValueError(f"unknown generator kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "x":
            return f"x:{self.i},{self.j},{self.t}"
        if self.kind == "s":
            return f"s{self.i}"
        return f"h:{self.i},{self.t}"


def X(i: int, j: int, t: int) -> Gen:
    return Gen("x", i, j, t)


def S(i: int) -> Gen:
    return Gen("s", i)


def H(j: int, t: int) -> Gen:
    return Gen("h", j, t=t)


def gen_x(n: int, q: int, i: int, j: int, t: int) -> GLMatrix:
    """Identity plus t in position (i, j), i < j."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    rows[i - 1][j - 1] = t % q
    return GLMatrix(rows, q, check=False)


def gen_s(n: int, q: int, i: int) -> GLMatrix:
    """Permutation matrix of the transposition (i, i+1)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= {n - 1}, got {i}")
    perm = list(range(n))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return GLMatrix([[int(perm[a] == b) for b in range(n)] for a in range(n)], q, check=False)


def gen_h(n: int, q: int, k: int, t: int) -> GLMatrix:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got {k}")
    if t % q == 0:
        raise ValueError("h_k(t) needs t != 0")
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    rows[k - 1][k - 1] = t % q
    return GLMatrix(rows, q, check=False)


def elementary(n: int, q: int, i: int, j: int, t: int) -> GLMatrix:
    """Identity plus t at (i, j) for any i != j; upper or lower triangular."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"need distinct indices in 1..{n}, got ({i}, {j})")
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    rows[i - 1][j - 1] = t % q
    return GLMatrix(rows, q, check=False)


def perm_matrix(w: Sequence[int], q: int) -> GLMatrix:
    """Matrix sending e_j to e_{w(j)} for w in one-line notation."""
    n = len(w)
    return GLMatrix([[int(w[b] == a + 1) for b in range(n)] for a in range(n)], q, check=False)


def generating_set(n: int, q: int) -> list[Gen]:
    """All s_i, x_{i,i+1}(t) and h_k(t) with t a unit; generates GL_n(F_q) with room to spare."""
    gens = [S(i) for i in range(1, n)]
    gens += [X(i, i + 1, t) for i in range(1, n) for t in range(1, q)]
    gens += [H(k, t) for k in range(1, n + 1) for t in range(2, q)]
    return gens


def wk_matrix(n: int, q: int, k: int, a: Sequence[int]) -> GLMatrix:
    """w_k(a) = s_k(a_k) ... s_1(a_1) with s_i(t) = x_{i,i+1}(t) s_i."""
    if not 0 <= k <= n - 1 or len(a) != k:
        raise ValueError(f"need 0 <= k <= {n - 1} and {k} entries, got k={k}, a={tuple(a)}")
    out = GLMatrix.identity(n, q)
    for i in range(k, 0, -1):
        out = out @ gen_x(n, q, i, i + 1, a[i - 1]) @ gen_s(n, q, i)
    return out


def _wk_fast(n: int, q: int, k: int, a: Sequence[int]) -> GLMatrix:
    # columns: (a_1..a_k, 1, 0..), e_1, ..., e_k, e_{k+2}, ..., e_n
    rows = [[0] * n for _ in range(n)]
    for i in range(k):
        rows[i][0] = a[i] % q
    rows[k][0] = 1
    for j in range(1, k + 1):
        rows[j - 1][j] = 1
    for j in range(k + 1, n):
        rows[j][j] = 1
    return GLMatrix(rows, q, check=False)


def _wk_inverse(n: int, q: int, k: int, a: Sequence[int]) -> GLMatrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(k):
        rows[i + 1][i] = 1
        rows[i + 1][k] = -a[i] % q
    rows[0][k] = 1
    for j in range(k + 1, n):
        rows[j][j] = 1
    return GLMatrix(rows, q, check=False)


def coset_decompose(g: GLMatrix) -> tuple[int, tuple[int, ...], GLMatrix]:
    """(k, a, p) with g = w_k(a) p and p in the parabolic P_n."""
    n, q = g.n, g.q
    c = g.column(0)
    k = max(i for i in range(n) if c[i])
    lam = pow(c[k], -1, q)
    a = tuple(c[i] * lam % q for i in range(k))
    p = _wk_inverse(n, q, k, a) @ g
    if not p.in_parabolic():
        raise AssertionError(f"coset decomposition produced a non-parabolic factor {p}")
    return k, a, p


# --- pure words ---------------------------------------------------------------------------

Column = tuple  # (k, a)


def make_word(columns: Iterable, n: int, q: int) -> tuple[Column, ...]:
    out = []
    for k, a in columns:
        k, a = int(k), tuple(int(x) % q for x in a)
        if not 0 <= k <= n - 1 or len(a) != k:
            raise ValueError(f"bad column ({k}, {a}) for n={n}")
        out.append((k, a))
    return tuple(out)


def canonicalize(word: Sequence[Column]) -> tuple[Column, ...]:
    """Zero every entry at a height at or below the column's *-height."""
    stars = star_height([k for k, _ in word])
    return tuple((k, (0,) * s + tuple(a[s:])) for (k, a), s in zip(word, stars))


def word_to_qsp(word: Sequence[Column], n: int, q: int) -> QSetPartition:
    stars = star_height([k for k, _ in word])
    return QSetPartition(tuple(k for k, _ in word), tuple(tuple(a[s:]) for (k, a), s in zip(word, stars)), n, q)


def qsp_to_word(K: QSetPartition) -> tuple[Column, ...]:
    return tuple((k, (0,) * s + tuple(e)) for k, s, e in zip(K.heights, K.stars, K.entries))


def _act_column(g: Gen, k: int, a: tuple[int, ...], n: int, q: int) -> tuple[int, tuple[int, ...], list[Gen]]:
    """g w_k(a) = w_k'(a') l u with l in the Levi subgroup; returns (k', a', word for l)."""
    if g.kind == "s":
        i = g.i
        if i > k + 1:
            return k, a, [g]
        if i == k + 1:
            return k + 1, a + (0,), []
        if i == k:
            ak = a[k - 1]
            if ak == 0:
                return k - 1, a[: k - 1], []
            inv = pow(ak, -1, q)
            new = tuple(x * inv % q for x in a[: k - 1]) + (inv,)
            res = [H(1, ak)] + [X(m + 1, k + 1, a[m - 1]) for m in range(1, k) if a[m - 1]]
            res.append(H(k + 1, -inv % q))
            return k, new, res
        b = list(a)
        b[i - 1], b[i] = b[i], b[i - 1]
        return k, tuple(b), [S(i + 1)]
    if g.kind == "h":
        j, t = g.i, g.t % q
        if j > k + 1:
            return k, a, [g]
        if j == k + 1:
            inv = pow(t, -1, q)
            return k, tuple(x * inv % q for x in a), [H(1, t)]
        b = list(a)
        b[j - 1] = b[j - 1] * t % q
        return k, tuple(b), [H(j + 1, t)]
    if g.kind == "x":
        i, j, t = g.i, g.j, g.t % q
        if t == 0:
            return k, a, []
        if i > k + 1:
            return k, a, [g]
        if i == k + 1:
            if k == 0:
                return k, a, []
            return k, a, [X(m + 1, j, -t * a[m - 1] % q) for m in range(k, 0, -1) if a[m - 1]]
        if j > k + 1:
            return k, a, [X(i + 1, j, t)]
        b = list(a)
        if j == k + 1:
            b[i - 1] = (b[i - 1] + t) % q
            return k, tuple(b), []
        b[i - 1] = (b[i - 1] + t * b[j - 1]) % q
        return k, tuple(b), [X(i + 1, j + 1, t)]
    raise ValueError(f"unknown generator {g!r}")


def _check_gen(g: Gen, n: int, q: int) -> None:
    g.matrix(n, q)  # raises on bad indices or values


def act_generator(g: Gen, word: Sequence[Column], n: int, q: int) -> tuple[Column, ...]:
    """Push a generator through the word column by column using the case table."""
    _check_gen(g, n, q)
    pending = [g]
    out = []
    for k, a in word:
        residual: list[Gen] = []
        for h in reversed(pending):
            k, a, res = _act_column(h, k, tuple(a), n, q)
            residual = res + residual
        out.append((k, a))
        pending = residual
    return tuple(out)


def act_group_element(g: GLMatrix, word: Sequence[Column]) -> tuple[Column, ...]:
    """g w_k(a) = w_k'(a') p; the Levi part of p moves on to the rest of the word."""
    n, q = g.n, g.q
    out = []
    for k, a in word:
        k2, a2, p = coset_decompose(g @ _wk_fast(n, q, k, a))
        out.append((k2, a2))
        g = p.levi()
    return tuple(out)


# --- basis and representation matrices ------------------------------------------------------


@lru_cache(maxsize=None)
def _basis(n: int, r: int, q: int) -> tuple[tuple[Column, ...], ...]:
    return tuple(qsp_to_word(K) for K in enumerate_qsp(n, r, q))


def basis(n: int, r: int, q: int, max_dim: int = DEFAULT_MAX_DIM) -> list[tuple[Column, ...]]:
    """Canonical words, one per element of P_{n x r}(q)."""
    from .qpoly import d_poly

    PrimeField(q)
    dim = d_poly(n, r)(q)
    if dim > max_dim:
        raise GuardError("max-dim", dim, max_dim)
    return list(_basis(n, r, q))


def _index(n: int, r: int, q: int, max_dim: int) -> dict:
    return {w: i for i, w in enumerate(basis(n, r, q, max_dim))}


def half_level_basis(n: int, r: int, q: int, max_dim: int = DEFAULT_MAX_DIM) -> list[tuple[Column, ...]]:
    """Canonical words of length r + 1 with first column of height 0."""
    return [w for w in basis(n, r + 1, q, max_dim) if w[0][0] == 0]


def _check_permutation(perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(len(perm))):
        raise RuntimeError("action does not permute the canonical basis")


def rep_permutation(g, n: int, r: int, q: int, max_dim: int = DEFAULT_MAX_DIM) -> list[int]:
    """perm[c] = row of the single 1 in column c of the representation matrix of g."""
    idx = _index(n, r, q, max_dim)
    words = list(idx)
    if isinstance(g, Gen):
        images = [canonicalize(act_generator(g, w, n, q)) for w in words]
    else:
        if g.n != n or g.q != q:
            raise ValueError("matrix does not match (n, q)")
        images = [canonicalize(act_group_element(g, w)) for w in words]
    perm = []
    for img in images:
        if img not in idx:
            raise RuntimeError(f"image {img} is not a canonical basis word")
        perm.append(idx[img])
    _check_permutation(perm)
    return perm


@dataclass
class RepMatrix:
    dim: int
    perm: list[int]

    def dense(self) -> np.ndarray:
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        m[self.perm, np.arange(self.dim)] = 1
        return m

    def entries(self) -> list[list[int]]:
        return sorted([row, col] for col, row in enumerate(self.perm))

    def to_json(self) -> dict:
        return {"dim": self.dim, "entries": self.entries()}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __matmul__(self, other: RepMatrix) -> RepMatrix:
        return RepMatrix(self.dim, [self.perm[c] for c in other.perm])


def rep_matrix(g, n: int, r: int, q: int, max_dim: int = DEFAULT_MAX_DIM) -> RepMatrix:
    perm = rep_permutation(g, n, r, q, max_dim)
    return RepMatrix(len(perm), perm)


# --- batched action via the kernels -------------------------------------------------------


def words_to_array(words: Sequence[Sequence[Column]], n: int, r: int) -> np.ndarray:
    arr = np.zeros((len(words), r, n), dtype=np.int64)
    for w, word in enumerate(words):
        for j, (k, a) in enumerate(word):
            arr[w, j, 0] = k
            arr[w, j, 1 : 1 + k] = a
    return arr


def rep_permutations(mats: np.ndarray, n: int, r: int, q: int, max_dim: int = DEFAULT_MAX_DIM,
                     backend: str | None = None, chunk: int = 4096) -> np.ndarray:
    """Permutation arrays (m, dim) for a stack of matrices, using the batch kernel."""
    words = basis(n, r, q, max_dim)
    dim = len(words)
    if r == 0:
        return np.zeros((len(mats), 1), dtype=np.int64)
    arr = words_to_array(words, n, r)
    keys = _kernels.word_keys(arr, n, q)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    out = np.empty((len(mats), dim), dtype=np.int64)
    for start in range(0, len(mats), chunk):
        block = np.asarray(mats[start : start + chunk])
        images = _kernels.act_on_words(block, arr, q, backend=backend)
        img_keys = _kernels.word_keys(images, n, q)
        pos = np.searchsorted(sorted_keys, img_keys)
        pos = np.minimum(pos, dim - 1)
        if not np.array_equal(sorted_keys[pos], img_keys):
            raise RuntimeError("batched action left the canonical basis")
        out[start : start + len(block)] = order[pos]
    if np.any(np.sort(out, axis=1) != np.arange(dim)):
        raise RuntimeError("action does not permute the canonical basis")
    return out


def commutant_dim(n: int, r: int, q: int, method: str = "orbits", max_dim: int = DEFAULT_MAX_DIM,
                  max_group_order: int = DEFAULT_MAX_GROUP_ORDER, backend: str | None = None) -> int:
    """Dimension of End_G(IR_q^r): orbits of G on ordered pairs of basis words.

    ``method`` is "orbits" (union-find over generators), "burnside" (average of
    fix(g)^2 over the whole group) or "both" (raises if they disagree).
    """
    if method not in ("orbits", "burnside", "both"):
        raise ValueError(f"unknown method {method!r}")
    PrimeField(q)
    results = []
    if method in ("orbits", "both"):
        gens = generating_set(n, q)
        if gens:
            perms = np.array([rep_permutation(g, n, r, q, max_dim) for g in gens], dtype=np.int64)
        else:
            perms = np.arange(len(basis(n, r, q, max_dim)), dtype=np.int64)[None, :]
        results.append(_kernels.pair_orbit_count(perms, backend=backend))
    if method in ("burnside", "both"):
        order = group_order(n, q)
        if order > max_group_order:
            raise GuardError("max-group-order", order, max_group_order)
        mats = _kernels.invertible_matrices(n, q, backend=backend)
        assert len(mats) == order
        perms = rep_permutations(mats, n, r, q, max_dim, backend=backend)
        total = _kernels.fixed_square_sum(perms, backend=backend)
        if total % order:
            raise RuntimeError("Burnside sum is not divisible by the group order")
        results.append(total // order)
    if len(set(results)) != 1:
        raise RuntimeError(f"orbit count {results[0]} and Burnside count {results[1]} disagree")
    return results[0]


def all_group_elements(n: int, q: int, max_group_order: int = DEFAULT_MAX_GROUP_ORDER) -> list[GLMatrix]:
    order = group_order(n, q)
    if order > max_group_order:
        raise GuardError("max-group-order", order, max_group_order)
    return [GLMatrix(m.tolist(), q, check=False) for m in _kernels.invertible_matrices(n, q)]


def check_matrix_relations(n: int, q: int, rng, trials: int = 3) -> bool:
    """Commutation rules among the x_ij(a), and x_ij(a) w = w x_{w^-1(i), w^-1(j)}(a)."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for (i, j), (k, l) in product(pairs, repeat=2):
        for _ in range(trials):
            a, b = rng.randrange(q), rng.randrange(q)
            lhs = gen_x(n, q, i, j, a) @ gen_x(n, q, k, l, b)
            if j == k:
                rhs = gen_x(n, q, k, l, b) @ gen_x(n, q, i, l, a * b) @ gen_x(n, q, i, j, a)
            elif i == l:
                rhs = gen_x(n, q, k, l, b) @ gen_x(n, q, k, j, -a * b) @ gen_x(n, q, i, j, a)
            elif i == k and j == l:
                rhs = gen_x(n, q, i, j, a + b)
            else:
                rhs = gen_x(n, q, k, l, b) @ gen_x(n, q, i, j, a)
            if lhs != rhs:
                return False
    for w in permutations(range(1, n + 1)):
        W = perm_matrix(w, q)
        winv = {v: pos for pos, v in enumerate(w, start=1)}
        for i, j in pairs:
            a = rng.randrange(q)
            if gen_x(n, q, i, j, a) @ W != W @ elementary(n, q, winv[i], winv[j], a):
                return False
    return True


def parse_gen(spec: str, n: int, q: int):
    """Parse 's1', 'x:i,j,t', 'h:k,t' or 'matrix:v11,v12,...' (row-major)."""
    spec = spec.strip()
    try:
        if spec.startswith("matrix:"):
            vals = [int(v) for v in spec[7:].split(",")]
            return GLMatrix.from_row_major(vals, n, q)
        if spec.startswith("x:"):
            i, j, t = (int(v) for v in spec[2:].split(","))
            g = X(i, j, t % q)
        elif spec.startswith("h:"):
            k, t = (int(v) for v in spec[2:].split(","))
            g = H(k, t % q)
        elif spec.startswith("s"):
            g = S(int(spec[1:].lstrip(":")))
        else:
            raise ValueError
    except ValueError as exc:
        raise ValueError(f"cannot parse generator {spec!r}: {exc}") from None
    _check_gen(g, n, q)
    return g
