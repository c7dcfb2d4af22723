"""Concrete graded lattices over the order, and exact graded Hom between them.

R' = K[X,Y]/(Y(X-Y)) embeds into K[X] x K[X] by X -> (X,X), Y -> (0,X).
Every module handled here is a column of R'-ideals, so row i of a module is
a K[X]-submodule of an ambient free module K[X]^c whose coordinates come in
two flavours (first or second factor of the pair).  A homogeneous element of
row i and degree D is just a coefficient vector in K^c: the X-power of each
coordinate is pinned down by D.  Multiplication by X therefore leaves the
coefficient vector unchanged and only raises the degree by A = deg X.

The order is generated by the idempotents and

    alpha_i = E_{i,i+1},  alpha_n = X E_{n,1},
    beta_i  = Y E_{i+1,i}, beta_n = X^{-1} Y E_{1,n},

which in pair form act on a coordinate of flavour s by the scalar g_s and
raise the X-power by e.  A degree-d homomorphism is determined by the images
of a K[X]-basis, so Hom in a fixed degree is the solution space of a finite
linear system: F(g.b) = g.F(b) for every generator g and basis element b.
No truncation is involved in that solve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import gf


class TruncationError(ValueError):
    pass


class TruncatedRing:
    """R' = K[X,Y]/(Y(X-Y)) modulo X^t, elements P(X) + Y Q(X)."""

    def __init__(self, t: int, p: int = gf.PRIMES[0]):
        self.t, self.p = t, p

    @property
    def dim(self) -> int:
        return 2 * self.t

    def element(self, P=(), Q=()) -> tuple[np.ndarray, np.ndarray]:
        a = np.zeros(self.t, dtype=np.int64)
        b = np.zeros(self.t, dtype=np.int64)
        a[: len(P)] = P
        b[: len(Q)] = Q
        return a % self.p, b % self.p

    def basis(self):
        for m in range(self.t):
            yield self.element(P=[0] * m + [1])
        for m in range(self.t):
            yield self.element(Q=[0] * m + [1])

    def _conv(self, f, g):
        return np.convolve(f, g)[: self.t] % self.p

    def mul(self, x, y):
        (P, Q), (P2, Q2) = x, y
        # Y^2 = XY, so (P + YQ)(P' + YQ') = PP' + Y(PQ' + QP' + X QQ')
        XQQ = np.concatenate([[0], self._conv(Q, Q2)[:-1]])
        return self._conv(P, P2), (self._conv(P, Q2) + self._conv(Q, P2) + XQQ) % self.p

    def add(self, x, y):
        return (x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p

    def structure_constants(self) -> np.ndarray:
        """c[i, j, k]: coefficient of basis k in basis_i * basis_j."""
        B = list(self.basis())
        c = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for i, x in enumerate(B):
            for j, y in enumerate(B):
                P, Q = self.mul(x, y)
                c[i, j] = np.concatenate([P, Q])
        return c

    def homogeneous(self, deg: int, c0: int, c1: int):
        """c0 X^deg + c1 X^(deg-1) Y."""
        if deg == 0 and c1 % self.p:
            raise ValueError("Y has degree 1")
        P = [0] * deg + [c0]
        Q = [0] * (deg - 1) + [c1] if deg >= 1 else []
        return self.element(P=P, Q=Q)

    def degree_part(self, x, deg: int) -> np.ndarray:
        """Pair coordinates of the degree-deg part of x: X^deg -> (1,1), X^(deg-1)Y -> (0,1)."""
        P, Q = x
        c0 = int(P[deg]) if deg < self.t else 0
        c1 = int(Q[deg - 1]) if 1 <= deg <= self.t else 0
        return np.array([c0, c0 + c1], dtype=np.int64) % self.p


# Ideals of R' by generators (degree, coefficient of X^deg, coefficient of X^(deg-1) Y).
IDEAL_GENERATORS = {
    "R'": [(0, 1, 0)],
    "(X)": [(1, 1, 0)],
    "(Y)": [(1, 0, 1)],
    "(X-Y)": [(1, 1, -1)],
    "(X,Y)": [(1, 1, 0), (1, 0, 1)],
    "(X^2)": [(2, 1, 0)],
    "(Y^2)": [(2, 0, 1)],
    "(X^2-Y^2)": [(2, 1, -1)],
    "(X^2,Y^2)": [(2, 1, 0), (2, 0, 1)],
}


@lru_cache(maxsize=None)
def ideal_basis(name: str, t: int, p: int) -> tuple[tuple[int, tuple[int, int]], ...]:
    """Homogeneous K[X]-basis of an ideal, as (X-power, pair vector)."""
    shift = 0
    if name == "X^-1(X,Y)":
        name, shift = "(X,Y)", -1
    ring = TruncatedRing(t, p)
    gens = [ring.homogeneous(*g) for g in IDEAL_GENERATORS[name]]
    found: list[tuple[int, tuple[int, int]]] = []
    prev = np.zeros((0, 2), dtype=np.int64)
    for m in range(t - 1):
        vecs = []
        for g, (dg, _, _) in zip(gens, IDEAL_GENERATORS[name]):
            k = m - dg
            if k < 0:
                continue
            mults = [ring.homogeneous(k, 1, 0)] + ([ring.homogeneous(k, 0, 1)] if k >= 1 else [])
            for r in mults:
                vecs.append(ring.degree_part(ring.mul(g, r), m))
        cur = np.array(vecs, dtype=np.int64).reshape(-1, 2)
        new = gf.complement_basis(prev, cur, p)
        for v in new:
            found.append((m + shift, (int(v[0]), int(v[1]))))
        if new.size:
            prev = np.vstack([prev, new])
        if gf.rank(prev, p) == 2:
            break
    if gf.rank(prev, p) < 2 and name not in ("(Y)", "(Y^2)", "(X-Y)", "(X^2-Y^2)"):
        raise TruncationError(f"truncation t={t} too small to see the ideal {name}")
    return tuple(found)


def generators(n: int):
    """(source row, target row, pair scalars, X-power) of the order generators, rows 0-based."""
    gens = []
    for i in range(n - 1):
        gens.append((i + 1, i, (1, 1), 0))      # alpha_i
        gens.append((i, i + 1, (0, 1), 1))      # beta_i
    gens.append((0, n - 1, (1, 1), 1))          # alpha_n
    gens.append((n - 1, 0, (0, 1), 0))          # beta_n
    return gens


@dataclass(eq=False)
class LatticeModule:
    """A graded module over the order, given row by row by a homogeneous K[X]-basis.

    Degree of a coordinate c of row i at X-power m is A*m + row_base[i] + coff[c].
    basis[i] lists (degree, coefficient vector) pairs.
    """

    n: int
    A: int
    row_base: tuple[int, ...]
    ctype: tuple[int, ...]
    coff: tuple[int, ...]
    basis: list[list[tuple[int, np.ndarray]]]
    p: int
    label: str = ""
    _spaces: dict = field(default_factory=dict, repr=False)

    @property
    def width(self) -> int:
        return len(self.ctype)

    def basis_index(self):
        """Flat list of (row, degree, vector)."""
        return [(i, D, v) for i in range(self.n) for D, v in self.basis[i]]

    def gen_degree(self, g) -> int:
        src, dst, _, e = g
        return self.row_base[dst] - self.row_base[src] + self.A * e

    def act(self, g, v: np.ndarray) -> np.ndarray:
        scal = np.array(g[2], dtype=np.int64)[list(self.ctype)]
        return (v * scal) % self.p

    def space(self, i: int, D: int):
        """Degree-D part of row i: (flat basis indices, matrix with one row per index)."""
        key = (i, D)
        if key not in self._spaces:
            offset = sum(len(self.basis[r]) for r in range(i))
            idx, rows = [], []
            for k, (Db, v) in enumerate(self.basis[i]):
                if Db <= D and (D - Db) % self.A == 0:
                    idx.append(offset + k)
                    rows.append(v)
            mat = np.array(rows, dtype=np.int64).reshape(-1, self.width)
            self._spaces[key] = (idx, mat)
        return self._spaces[key]

    def coords(self, i: int, D: int, w: np.ndarray):
        """Express a homogeneous element in the basis of its degree part."""
        idx, mat = self.space(i, D)
        if not np.any(w % self.p):
            return idx, np.zeros(len(idx), dtype=np.int64)
        if not idx:
            raise ArithmeticError(f"{self.label}: element outside the module at row {i}, degree {D}")
        lam = gf.solve(mat.T, w, self.p)
        if lam is None:
            raise ArithmeticError(f"{self.label}: element outside the module at row {i}, degree {D}")
        return idx, lam

    def min_degree(self, i: int) -> int | None:
        return min((D for D, _ in self.basis[i]), default=None)

    def check_closed(self) -> None:
        """Every generator maps every basis element back into the module."""
        for g in generators(self.n):
            src, dst = g[0], g[1]
            for D, v in self.basis[src]:
                self.coords(dst, D + self.gen_degree(g), self.act(g, v))


def from_columns(n: int, ideals: list[str], *, A: int, row_base, offset: int, p: int,
                 t: int = 6, label: str = "") -> LatticeModule:
    basis = []
    for i, name in enumerate(ideals):
        rows = []
        for m, vec in ideal_basis(name, t, p):
            rows.append((A * m + row_base[i] + offset, np.array(vec, dtype=np.int64) % p))
        basis.append(rows)
    return LatticeModule(n, A, tuple(row_base), (0, 1), (offset, offset), basis, p, label)


def direct_sum(mods: list[LatticeModule], label: str = "") -> LatticeModule:
    first = mods[0]
    ctype = sum((m.ctype for m in mods), ())
    coff = sum((m.coff for m in mods), ())
    width = len(ctype)
    basis = [[] for _ in range(first.n)]
    start = 0
    for m in mods:
        for i in range(first.n):
            for D, v in m.basis[i]:
                w = np.zeros(width, dtype=np.int64)
                w[start:start + m.width] = v
                basis[i].append((D, w))
        start += m.width
    return LatticeModule(first.n, first.A, first.row_base, ctype, coff, basis, first.p, label)


@dataclass
class GradedMap:
    """A homogeneous map, stored as the images of the source basis."""

    src: LatticeModule
    dst: LatticeModule
    degree: int
    images: np.ndarray  # one row per flat source basis element

    def apply(self, i: int, D: int, w: np.ndarray) -> np.ndarray:
        idx, lam = self.src.coords(i, D, w)
        if not idx:
            return np.zeros(self.dst.width, dtype=np.int64)
        return (lam @ self.images[idx]) % self.src.p

    def vector(self) -> np.ndarray:
        return self.images.reshape(-1)


def compose(g: GradedMap, f: GradedMap) -> GradedMap:
    """g o f."""
    rows = []
    for (i, D, _), img in zip(f.src.basis_index(), f.images):
        rows.append(g.apply(i, D + f.degree, img))
    imgs = np.array(rows, dtype=np.int64).reshape(-1, g.dst.width)
    return GradedMap(f.src, g.dst, f.degree + g.degree, imgs)


def hom_space(M: LatticeModule, N: LatticeModule, d: int) -> list[GradedMap]:
    """A basis of the degree-d homomorphisms M -> N."""
    p = M.p
    flat = M.basis_index()
    blocks = []  # per source basis element: target degree-part matrix
    start = []
    total = 0
    for i, D, _ in flat:
        _, S = N.space(i, D + d)
        blocks.append(S)
        start.append(total)
        total += S.shape[0]
    if total == 0:
        return []
    width = N.width
    eqs = []
    offsets = [sum(len(M.basis[r]) for r in range(i)) for i in range(M.n)]
    for g in generators(M.n):
        src, dst = g[0], g[1]
        dg = M.gen_degree(g)
        for k, (D, v) in enumerate(M.basis[src]):
            b = offsets[src] + k
            idx, lam = M.coords(dst, D + dg, M.act(g, v))
            rows = np.zeros((width, total), dtype=np.int64)
            # F(g.b) = sum lam_c F(b_c)
            for c, l in zip(idx, lam):
                if l and blocks[c].shape[0]:
                    rows[:, start[c]:start[c] + blocks[c].shape[0]] += l * blocks[c].T
            # - g.F(b)
            if blocks[b].shape[0]:
                gS = np.array([N.act(g, s) for s in blocks[b]], dtype=np.int64)
                rows[:, start[b]:start[b] + blocks[b].shape[0]] -= gS.T
            eqs.append(rows % p)
    A = np.vstack(eqs) if eqs else np.zeros((0, total), dtype=np.int64)
    sol = gf.nullspace(A, p, ncols=total)
    maps = []
    for y in sol:
        imgs = np.zeros((len(flat), width), dtype=np.int64)
        for b, S in enumerate(blocks):
            if S.shape[0]:
                imgs[b] = (y[start[b]:start[b] + S.shape[0]] @ S) % p
        maps.append(GradedMap(M, N, d, imgs))
    return maps


def hom_dim(M: LatticeModule, N: LatticeModule, d: int) -> int:
    return len(hom_space(M, N, d))


def span_rank(maps: list[GradedMap], p: int) -> int:
    if not maps:
        return 0
    return gf.rank(np.array([f.vector() for f in maps], dtype=np.int64), p)


def degree_floor(M: LatticeModule, N: LatticeModule) -> int:
    """No nonzero degree-d map M -> N exists for d below this value."""
    lows = []
    for i in range(M.n):
        lo = N.min_degree(i)
        if lo is None:
            continue
        for D, _ in M.basis[i]:
            lows.append(lo - D)
    return min(lows) if lows else 0


# ---------------------------------------------------------------- covers

def top_generators(M: LatticeModule):
    """Homogeneous elements (row, degree, vector) spanning M / rad M."""
    gens = []
    for i in range(M.n):
        degrees = sorted({D for D, _ in M.basis[i]})
        if not degrees:
            continue
        for D in range(degrees[0], degrees[-1] + 1):
            _, whole = M.space(i, D)
            if whole.shape[0] == 0:
                continue
            rad = []
            for g in generators(M.n):
                if g[1] != i:
                    continue
                _, S = M.space(g[0], D - M.gen_degree(g))
                rad.extend(M.act(g, s) for s in S)
            radm = np.array(rad, dtype=np.int64).reshape(-1, M.width)
            for v in gf.complement_basis(radm, whole, M.p):
                gens.append((i, D, v))
    return gens


def projective(n: int, r: int, *, A: int, row_base, p: int, t: int, degree_of_idempotent: int) -> LatticeModule:
    """Lambda e_r (0-based column r), graded so that e_r sits in the given degree."""
    cols = lambda_ideal_column(n, r)
    offset = degree_of_idempotent - row_base[r]
    return from_columns(n, cols, A=A, row_base=row_base, offset=offset, p=p, t=t, label=f"P{r + 1}")


def lambda_ideal_column(n: int, r: int) -> list[str]:
    """Column r (0-based) of the order written with ideals of R'."""
    col = []
    for i in range(n):
        if i == 0 and r == n - 1:
            col.append("X^-1(X,Y)")
        elif i <= r:
            col.append("R'")
        elif i == r + 1:
            col.append("(X,Y)")
        else:
            col.append("(X)")
    return col


def projective_cover(M: LatticeModule, t: int = 6):
    """(P0, images of P0's basis in M, generator list)."""
    gens = top_generators(M)
    summands = [projective(M.n, r, A=M.A, row_base=M.row_base, p=M.p, t=t, degree_of_idempotent=D)
                for r, D, _ in gens]
    P0 = direct_sum(summands, label=f"cover({M.label})")
    images = []
    for i in range(M.n):  # same order as direct_sum: rows outer, summands inner
        for (r, D, gvec), P in zip(gens, summands):
            for Dp, lam in P.basis[i]:
                # the element lam E_{i r} applied to the generator
                images.append((lam[list(M.ctype)] * gvec) % M.p)
    return P0, np.array(images, dtype=np.int64).reshape(-1, M.width), gens


def syzygy(M: LatticeModule, t: int = 6):
    """Kernel of the projective cover, as a lattice inside the cover's ambient."""
    P0, images, gens = projective_cover(M, t)
    p = M.p
    basis = [[] for _ in range(M.n)]
    for i in range(M.n):
        degs = sorted({D for D, _ in P0.basis[i]})
        if not degs:
            continue
        found: dict[int, np.ndarray] = {}
        for D in range(degs[0], degs[-1] + 1):
            idx, S = P0.space(i, D)
            if not idx:
                continue
            ker = gf.nullspace(images[idx].T, p, ncols=len(idx))
            vecs = (ker @ S) % p if ker.size else np.zeros((0, P0.width), dtype=np.int64)
            prev = found.get(D - M.A, np.zeros((0, P0.width), dtype=np.int64))
            for v in gf.complement_basis(prev, vecs, p):
                basis[i].append((D, v))
            found[D] = vecs if vecs.size else prev
        expected = len(P0.basis[i]) - len(M.basis[i])
        if len(basis[i]) != expected:
            raise ArithmeticError(f"syzygy rank mismatch at row {i}: {len(basis[i])} != {expected}")
    K = LatticeModule(M.n, M.A, M.row_base, P0.ctype, P0.coff, basis, p, f"syz({M.label})")
    incl = GradedMap(K, P0, 0, np.array([v for _, _, v in K.basis_index()], dtype=np.int64).reshape(-1, P0.width))
    return K, P0, incl, gens


def are_isomorphic(M: LatticeModule, N: LatticeModule, degrees=(0,)) -> int | None:
    """Degree s with M ~ N via maps of degree s and -s, or None.

    Both modules are indecomposable with local degree-0 endomorphism rings in
    all uses here, so f: M -> N is an isomorphism iff g o f is nonzero for
    some g: N -> M of the opposite degree.
    """
    if [len(b) for b in M.basis] != [len(b) for b in N.basis]:
        return None
    if hom_dim(M, M, 0) != 1:
        raise ValueError(f"{M.label}: degree-0 endomorphisms are not just scalars")
    for s in degrees:
        fs = hom_space(M, N, s)
        if not fs:
            continue
        gs = hom_space(N, M, -s)
        for f in fs:
            for g in gs:
                if np.any(compose(g, f).images % M.p):
                    return s
    return None


def relation_defects(M: LatticeModule) -> list[str]:
    """Check the generator relations on every basis element of M.

    A full cycle of alphas acts as X, a full cycle of betas as Y^(n-1), and
    alpha-beta or beta-alpha at any row as Y.
    """
    n = M.n
    gens = generators(n)
    alpha = {g[0]: g for g in gens if g[2] == (1, 1)}  # keyed by source row
    beta = {g[0]: g for g in gens if g[2] == (0, 1)}
    y_scal = np.array((0, 1), dtype=np.int64)[list(M.ctype)]
    out = []

    def run(path, i, D, v):
        for g in path:
            v = M.act(g, v)
            D += M.gen_degree(g)
            i = g[1]
        return i, D, v

    def walk(table, i, steps):
        path = []
        for _ in range(steps):
            path.append(table[i])
            i = table[i][1]
        return path

    for i in range(n):
        for D, v in M.basis[i]:
            checks = {
                "alpha cycle = X": (walk(alpha, i, n), v, D + M.A),
                "beta cycle = Y^(n-1)": (walk(beta, i, n), v * y_scal if n > 1 else v, D + (n - 1) * M.A),
                "alpha beta = Y": ([beta[i], alpha[beta[i][1]]], v * y_scal, D + M.A),
                "beta alpha = Y": ([alpha[i], beta[alpha[i][1]]], v * y_scal, D + M.A),
            }
            for name, (path, want, deg) in checks.items():
                r, Dr, w = run(path, i, D, v)
                if r != i or Dr != deg or np.any((w - want) % M.p):
                    out.append(f"{M.label}: {name} fails at row {i}, degree {D}")
    return out
