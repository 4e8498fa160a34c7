"""Independent reference computations used only by the tests.

The G-set model builds IR_q^r from scratch as iterated induced sets:
Omega_0 = {()}, and Omega_r consists of pairs (line v, U-orbit of Omega_{r-1}),
with g acting through a coset representative R(v) chosen differently from
w_k(a) (pivot at the FIRST nonzero coordinate).  Nothing from the package's
action code is reused.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def mat_mul(A, B, q):
    n = len(A)
    return tuple(tuple(sum(A[i][t] * B[t][j] for t in range(n)) % q for j in range(n)) for i in range(n))


def mat_vec(A, v, q):
    return tuple(sum(a * x for a, x in zip(row, v)) % q for row in A)


def mat_inv(A, q):
    n = len(A)
    aug = [list(A[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] % q)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], -1, q)
        aug[c] = [x * inv % q for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % q for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def normalize_line(v, q):
    """Scale so the FIRST nonzero coordinate is 1."""
    p = next(i for i, x in enumerate(v) if x)
    inv = pow(v[p], -1, q)
    return tuple(x * inv % q for x in v)


def coset_rep(v, q):
    """Matrix whose first column is v and whose other columns are e_j for j != pivot."""
    n = len(v)
    p = next(i for i, x in enumerate(v) if x)
    cols = [v] + [tuple(int(i == j) for i in range(n)) for j in range(n) if j != p]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def levi(p):
    n = len(p)
    return tuple(tuple(p[i][j] if (i == 0) == (j == 0) else 0 for j in range(n)) for i in range(n))


def unipotent_gens(n, q):
    eye = [[int(i == j) for j in range(n)] for i in range(n)]
    out = []
    for j in range(1, n):
        m = [row[:] for row in eye]
        m[0][j] = 1
        out.append(tuple(tuple(r) for r in m))
    return out


class GSetModel:
    def __init__(self, n: int, q: int):
        self.n, self.q = n, q
        self.U = unipotent_gens(n, q)

    def lines(self):
        n, q = self.n, self.q
        return sorted({normalize_line(v, q) for v in product(range(q), repeat=n) if any(v)})

    @lru_cache(maxsize=None)
    def omega(self, r: int):
        if r == 0:
            return ((),)
        orbits = self.orbits(r - 1)
        return tuple(sorted((v, o) for v in self.lines() for o in orbits))

    @lru_cache(maxsize=None)
    def orbits(self, r: int):
        return tuple(sorted({self.orbit_of(x, r) for x in self.omega(r)}))

    @lru_cache(maxsize=None)
    def orbit_of(self, x, r: int):
        """Smallest element of the U-orbit of x, used as the orbit's name."""
        seen, todo = {x}, [x]
        while todo:
            y = todo.pop()
            for u in self.U:
                z = self.act(u, y)
                if z not in seen:
                    seen.add(z)
                    todo.append(z)
        return min(seen)

    def act(self, g, x):
        if x == ():
            return ()
        q = self.q
        v, orb = x
        w = normalize_line(mat_vec(g, v, q), q)
        p = mat_mul(mat_mul(mat_inv(coset_rep(w, q), q), g, q), coset_rep(v, q), q)
        assert all(p[i][0] == 0 for i in range(1, self.n)), "not in the parabolic"
        depth = _depth(orb)
        return (w, self.orbit_of(self.act(levi(p), orb), depth))

    def element_of_word(self, word):
        """Image of w_{k_1}(a^1) (x)_U ... (x) 1 in Omega_r."""
        if not word:
            return ()
        (k, a), rest = word[0], word[1:]
        g = wk_columns(self.n, k, a)
        inner = self.element_of_word(rest)
        depth = len(rest)
        # [g, O] with g R(v)^{-1}... : (line(g e_1), orbit of (R(v)^{-1} g) acting on inner)
        q = self.q
        v = normalize_line(tuple(row[0] for row in g), q)
        p = mat_mul(mat_inv(coset_rep(v, q), q), g, q)
        return (v, self.orbit_of(self.act(levi(p), inner), depth)) if depth else (v, ())


def _depth(orb) -> int:
    d = 0
    while orb != ():
        orb = orb[1]
        d += 1
    return d


def wk_columns(n, k, a):
    """w_k(a) written out column by column: (a_1..a_k, 1, 0..), e_1, ..., e_k, e_{k+2}, ..."""
    cols = [tuple(a) + (1,) + (0,) * (n - k - 1)]
    cols += [tuple(int(i == j) for i in range(n)) for j in range(n) if j != k]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def brute_orbits_on_pairs(perms, dim):
    """Plain BFS over pairs, no union-find."""
    seen = set()
    count = 0
    for start in product(range(dim), repeat=2):
        if start in seen:
            continue
        count += 1
        seen.add(start)
        todo = [start]
        while todo:
            x, y = todo.pop()
            for p in perms:
                z = (p[x], p[y])
                if z not in seen:
                    seen.add(z)
                    todo.append(z)
    return count
