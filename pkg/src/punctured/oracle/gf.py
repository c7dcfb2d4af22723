"""Dense linear algebra over a prime field GF(p), int64 numpy arrays."""

from __future__ import annotations

import numpy as np

PRIMES = (32003, 65537)


def inv(x: int, p: int) -> int:
    return pow(int(x) % p, p - 2, p)


def as_mat(rows, p: int, ncols: int | None = None) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.size == 0:
        return np.zeros((0, ncols or 0), dtype=np.int64)
    return a % p


def row_reduce(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * inv(a[r, c], p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(a, p: int) -> int:
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    return len(row_reduce(a, p)[1])


def nullspace(a, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis of {x : a x = 0}, one vector per row."""
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        m = ncols if ncols is not None else (a.shape[1] if a.ndim == 2 else 0)
        return np.eye(m, dtype=np.int64)
    rref, piv = row_reduce(a, p)
    m = a.shape[1]
    free = [c for c in range(m) if c not in piv]
    basis = np.zeros((len(free), m), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for r, c in enumerate(piv):
            basis[t, c] = (-rref[r, f]) % p
    return basis


def solve(a, b, p: int) -> np.ndarray | None:
    """One solution x of a x = b, or None if inconsistent."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64).reshape(-1) % p
    m = a.shape[1]
    aug = np.concatenate([a, b[:, None]], axis=1)
    rref, piv = row_reduce(aug, p)
    if m in piv:
        return None
    x = np.zeros(m, dtype=np.int64)
    for r, c in enumerate(piv):
        x[c] = rref[r, m]
    return x


def complement_basis(sub: np.ndarray, whole: np.ndarray, p: int) -> np.ndarray:
    """Rows of `whole` extending a basis of span(sub) to a basis of span(sub + whole)."""
    whole = np.asarray(whole, dtype=np.int64)
    sub = np.asarray(sub, dtype=np.int64)
    width = whole.shape[-1] if whole.ndim == 2 else sub.shape[-1]
    if whole.size == 0:
        return np.zeros((0, width), dtype=np.int64)
    cur = np.zeros((0, width), dtype=np.int64) if sub.size == 0 else sub.reshape(-1, width) % p
    base = rank(cur, p)
    picked = []
    for v in whole.reshape(-1, width):
        trial = np.vstack([cur, v[None, :] % p])
        r = rank(trial, p)
        if r > base:
            cur, base = trial, r
            picked.append(v % p)
    return np.array(picked, dtype=np.int64).reshape(-1, width)
