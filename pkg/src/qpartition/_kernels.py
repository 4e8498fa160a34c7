"""Hot loops, each with a numba kernel and a vectorised numpy fallback.

The backend is picked once from ``QPARTITION_BACKEND`` (``numba`` or ``numpy``;
default ``numba`` when it imports).  Every public function also takes a
``backend=`` override so both paths can be tested and benchmarked side by side.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

_requested = os.environ.get("QPARTITION_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"QPARTITION_BACKEND must be 'numba' or 'numpy', not {_requested!r}")
DEFAULT_BACKEND = "numba" if (_requested == "numba" and HAVE_NUMBA) else "numpy"


def _njit(fn):
    if HAVE_NUMBA:
        return numba.njit(cache=True)(fn)
    return fn


def _pick(backend: str | None) -> str:
    backend = DEFAULT_BACKEND if backend is None else backend
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    return backend


# --- imaj distribution over {1..n}^r -------------------------------------------------


@_njit
def _imaj_histogram_numba(n, r):
    total = n**r
    counts = np.zeros(n * (n - 1) // 2 + 1, dtype=np.int64)
    pos = np.empty(n, dtype=np.int64)
    for idx in range(total):
        for v in range(n):
            pos[v] = v
        rest = idx
        for j in range(r - 1, -1, -1):
            pos[rest % n] = n + j
            rest //= n
        s = 0
        for i in range(1, n):
            if pos[i] < pos[i - 1]:
                s += i
        counts[s] += 1
    return counts


def _imaj_histogram_numpy(n, r):
    total = n**r
    idx = np.arange(total, dtype=np.int64)
    pos = np.broadcast_to(np.arange(n, dtype=np.int64), (total, n)).copy()
    rows = np.arange(total)
    for j in range(r):
        digit = (idx // n ** (r - 1 - j)) % n
        pos[rows, digit] = n + j
    weights = np.arange(1, n, dtype=np.int64)
    s = ((pos[:, 1:] < pos[:, :-1]) * weights).sum(axis=1) if n > 1 else np.zeros(total, dtype=np.int64)
    return np.bincount(s, minlength=n * (n - 1) // 2 + 1).astype(np.int64)


def imaj_histogram(n: int, r: int, backend: str | None = None) -> np.ndarray:
    """``counts[m]`` = number of words a in {1..n}^r with imaj(w_a) = m."""
    if _pick(backend) == "numba":
        return _imaj_histogram_numba(n, r)
    return _imaj_histogram_numpy(n, r)


# --- orbits of a permutation group on ordered pairs ----------------------------------


@_njit
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@_njit
def _pair_orbits_numba(gens):
    ngen, d = gens.shape
    parent = np.arange(d * d)
    for g in range(ngen):
        for x in range(d):
            gx = gens[g, x]
            for y in range(d):
                a = _find(parent, x * d + y)
                b = _find(parent, gx * d + gens[g, y])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
    count = 0
    for u in range(d * d):
        if _find(parent, u) == u:
            count += 1
    return count


def _pair_orbits_numpy(gens):
    ngen, d = gens.shape
    pairs = np.arange(d * d)
    xs, ys = pairs // d, pairs % d
    images = [g[xs] * d + g[ys] for g in gens]
    labels = pairs.copy()
    while True:
        old = labels.copy()
        for img in images:
            np.minimum(labels, labels[img], out=labels)
            np.minimum.at(labels, img, labels.copy())
        labels = labels[labels]
        if np.array_equal(labels, old):
            break
    return int(np.unique(labels).size)


def pair_orbit_count(gens: np.ndarray, backend: str | None = None) -> int:
    """Number of orbits on ordered pairs of points under the group generated by ``gens``.

    ``gens`` has shape (number of generators, d); row g maps point x to gens[g, x].
    """
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    if gens.shape[1] == 0:
        return 0
    if _pick(backend) == "numba":
        return int(_pair_orbits_numba(gens))
    return _pair_orbits_numpy(gens)


# --- Burnside sum of squared fixed-point counts --------------------------------------


@_njit
def _fixed_square_sum_numba(perms):
    m, d = perms.shape
    total = 0
    for g in range(m):
        f = 0
        for x in range(d):
            if perms[g, x] == x:
                f += 1
        total += f * f
    return total


def fixed_square_sum(perms: np.ndarray, backend: str | None = None) -> int:
    """Sum over rows of (number of fixed points)**2."""
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    if _pick(backend) == "numba":
        return int(_fixed_square_sum_numba(perms))
    fix = (perms == np.arange(perms.shape[1])).sum(axis=1).astype(np.int64)
    return int((fix * fix).sum())


# --- enumeration of GL_n(F_q) ---------------------------------------------------------


@_njit
def _invertible_mask_numba(mats, q, inverses):
    m, n, _ = mats.shape
    out = np.zeros(m, dtype=np.bool_)
    work = np.empty((n, n), dtype=np.int64)
    for t in range(m):
        for i in range(n):
            for j in range(n):
                work[i, j] = mats[t, i, j]
        ok = True
        for c in range(n):
            piv = -1
            for i in range(c, n):
                if work[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                ok = False
                break
            if piv != c:
                for j in range(n):
                    tmp = work[c, j]
                    work[c, j] = work[piv, j]
                    work[piv, j] = tmp
            inv = inverses[work[c, c]]
            for i in range(c + 1, n):
                f = (work[i, c] * inv) % q
                if f != 0:
                    for j in range(c, n):
                        work[i, j] = (work[i, j] - f * work[c, j]) % q
        out[t] = ok
    return out


def _invertible_mask_numpy(mats, q, inverses):
    work = mats.copy()
    m, n, _ = work.shape
    ok = np.ones(m, dtype=bool)
    rows = np.arange(m)
    for c in range(n):
        nz = work[:, c:, c] != 0
        has = nz.any(axis=1)
        ok &= has
        piv = c + np.argmax(nz, axis=1)
        top = work[rows, c].copy()
        work[rows, c] = work[rows, piv]
        work[rows, piv] = top
        inv = inverses[work[:, c, c]]
        for i in range(c + 1, n):
            f = (work[:, i, c] * inv) % q
            work[:, i, :] = (work[:, i, :] - f[:, None] * work[:, c, :]) % q
    return ok


def invertible_matrices(n: int, q: int, backend: str | None = None, chunk: int = 1 << 18) -> np.ndarray:
    """All invertible n x n matrices over F_q (q prime), shape (|GL_n(F_q)|, n, n)."""
    inverses = np.zeros(q, dtype=np.int64)
    for x in range(1, q):
        inverses[x] = pow(x, -1, q)
    total = q ** (n * n)
    use = _pick(backend)
    found = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = (idx[:, None] // q ** np.arange(n * n - 1, -1, -1, dtype=np.int64)) % q
        mats = np.ascontiguousarray(digits.reshape(-1, n, n))
        if use == "numba":
            mask = _invertible_mask_numba(mats, q, inverses)
        else:
            mask = _invertible_mask_numpy(mats, q, inverses)
        found.append(mats[mask])
    return np.concatenate(found) if found else np.zeros((0, n, n), dtype=np.int64)


# --- batched action of matrices on pure words -----------------------------------------
#
# A word is an (r, n) int array: row j = (k_j, a_1, ..., a_{k_j}, 0, ...).  The image
# of each word under each matrix is canonicalised (entries at heights <= the
# *-height set to 0) and encoded as an integer key by ``word_key``.


@_njit
def _act_words_numba(mats, words, q, inverses):
    m, n, _ = mats.shape
    nw, r, _ = words.shape
    out = np.empty((m, nw, r, n), dtype=np.int64)
    R = np.empty((n, n), dtype=np.int64)
    W = np.empty((n, n), dtype=np.int64)
    Winv = np.empty((n, n), dtype=np.int64)
    T = np.empty((n, n), dtype=np.int64)
    P = np.empty((n, n), dtype=np.int64)
    c = np.empty(n, dtype=np.int64)
    for g in range(m):
        for w in range(nw):
            for i in range(n):
                for j in range(n):
                    R[i, j] = mats[g, i, j]
            for col in range(r):
                k = words[w, col, 0]
                # W = w_k(a): columns (a_1..a_k, 1, 0..), e_1, ..., e_k, e_{k+2}, ...
                for i in range(n):
                    for j in range(n):
                        W[i, j] = 0
                for i in range(k):
                    W[i, 0] = words[w, col, 1 + i]
                W[k, 0] = 1
                for j in range(1, k + 1):
                    W[j - 1, j] = 1
                for j in range(k + 1, n):
                    W[j, j] = 1
                for i in range(n):
                    for j in range(n):
                        s = 0
                        for t in range(n):
                            s += R[i, t] * W[t, j]
                        T[i, j] = s % q
                for i in range(n):
                    c[i] = T[i, 0]
                kk = n - 1
                while c[kk] == 0:
                    kk -= 1
                lam = c[kk]
                li = inverses[lam]
                out[g, w, col, 0] = kk
                for i in range(1, n):
                    out[g, w, col, i] = 0
                for i in range(kk):
                    out[g, w, col, 1 + i] = (c[i] * li) % q
                # Winv = w_kk(b)^{-1}
                for i in range(n):
                    for j in range(n):
                        Winv[i, j] = 0
                for i in range(kk):
                    Winv[i + 1, i] = 1
                Winv[0, kk] = 1
                for i in range(kk):
                    Winv[i + 1, kk] = (q - out[g, w, col, 1 + i]) % q
                for j in range(kk + 1, n):
                    Winv[j, j] = 1
                for i in range(n):
                    for j in range(n):
                        s = 0
                        for t in range(n):
                            s += Winv[i, t] * T[t, j]
                        P[i, j] = s % q
                for i in range(n):
                    for j in range(n):
                        if (i == 0) != (j == 0):
                            R[i, j] = 0
                        else:
                            R[i, j] = P[i, j]
            # canonicalise: zero the entries at heights <= *-height
            top = -1
            for col in range(r):
                k = out[g, w, col, 0]
                star = 0
                if col > 0:
                    star = min(k, top + 1)
                if star > top:
                    top = star
                for i in range(star):
                    out[g, w, col, 1 + i] = 0
    return out


def _act_words_numpy(mats, words, q, inverses):
    m, n, _ = mats.shape
    nw, r, _ = words.shape
    out = np.zeros((m, nw, r, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    rows = np.arange(m)
    for w in range(nw):
        R = mats.copy()
        for col in range(r):
            k = int(words[w, col, 0])
            W = np.zeros((n, n), dtype=np.int64)
            W[:k, 0] = words[w, col, 1 : 1 + k]
            W[k, 0] = 1
            for j in range(1, k + 1):
                W[j - 1, j] = 1
            for j in range(k + 1, n):
                W[j, j] = 1
            T = (R @ W) % q
            c = T[:, :, 0]
            kk = n - 1 - np.argmax(c[:, ::-1] != 0, axis=1)
            lam = c[rows, kk]
            li = inverses[lam]
            b = (c * li[:, None]) % q
            heights_below = np.arange(n)[None, :] < kk[:, None]
            out[:, w, col, 0] = kk
            out[:, w, col, 1:] = np.where(heights_below[:, : n - 1], b[:, : n - 1], 0)
            Winv = np.zeros((m, n, n), dtype=np.int64)
            idx = np.arange(n)
            lower = idx[None, :] < kk[:, None]
            # e_i -> e_{i+1} for i < kk
            for i in range(n - 1):
                Winv[:, i + 1, i] = np.where(lower[:, i], 1, Winv[:, i + 1, i])
            Winv[rows, 0, kk] = 1
            for i in range(n - 1):
                sel = lower[:, i]
                Winv[rows[sel], i + 1, kk[sel]] = (q - b[sel, i]) % q
            above = idx[None, :] > kk[:, None]
            Winv[:, idx, idx] = np.where(above, 1, Winv[:, idx, idx])
            P = (Winv @ T) % q
            block = (idx[:, None] == 0) == (idx[None, :] == 0)
            R = np.where(block[None, :, :], P, 0)
        top = np.full(m, -1, dtype=np.int64)
        for col in range(r):
            k = out[:, w, col, 0]
            star = np.zeros(m, dtype=np.int64) if col == 0 else np.minimum(k, top + 1)
            top = np.maximum(top, star)
            zero = np.arange(n - 1)[None, :] < star[:, None]
            out[:, w, col, 1:] = np.where(zero, 0, out[:, w, col, 1:])
    del eye
    return out


def act_on_words(mats: np.ndarray, words: np.ndarray, q: int, backend: str | None = None) -> np.ndarray:
    """Canonical images of every word under every matrix, shape (m, nw, r, n)."""
    mats = np.ascontiguousarray(mats, dtype=np.int64) % q
    words = np.ascontiguousarray(words, dtype=np.int64)
    inverses = np.zeros(q, dtype=np.int64)
    for x in range(1, q):
        inverses[x] = pow(x, -1, q)
    if words.shape[1] == 0:
        return np.zeros((mats.shape[0], words.shape[0], 0, mats.shape[1]), dtype=np.int64)
    if _pick(backend) == "numba":
        return _act_words_numba(mats, words, q, inverses)
    return _act_words_numpy(mats, words, q, inverses)


def word_keys(words: np.ndarray, n: int, q: int) -> np.ndarray:
    """Injective integer encoding of (..., r, n) word arrays, over the last two axes."""
    words = np.asarray(words, dtype=np.int64)
    r = words.shape[-2]
    base = max(n, q)
    flat = words.reshape(words.shape[:-2] + (r * n,))
    weights = base ** np.arange(r * n - 1, -1, -1, dtype=np.int64)
    if r * n * np.log2(base) > 62:
        raise OverflowError("word too large for a 64-bit key")
    return flat @ weights
