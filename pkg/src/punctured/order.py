"""Graded R'-submodules of R'' = K[u, u^-1, v]/(v(u - v)) and the order Lambda.

Every Hom-space and every entry of a module column is one of five shapes

    U(k)  = u^k R'              V(k) = u^(k-1) v R'
    W(k)  = u^(k-1) (u - v) R'  UV(k) = u^k R' + v^k R'          Zero

with deg u = deg v = 1, X = u^(2n), Y = v^(2n).

Since v(u - v) = 0, R'' splits as K[u^+-1] x K[u^+-1] through
u -> (u, u), v -> (0, u).  In that picture R' is the set of pairs
(p(X), q(X)) with p(0) = q(0), and

    U(k) = u^k {(p, q) : p(0) = q(0)}     V(k) = u^k (0, q)
    W(k) = u^k (p, 0)                     UV(k) = u^k (p, q).

`Pairs` below is that picture: it is used for products, sums,
intersections, containment and colon modules, while the Hom table and the
graded dimensions are written out case by case.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .polygon import Kind, PolygonCtx, TaggedEdge, cyclic_distance, theta_length, vdash

SHAPES = ("U", "V", "W", "UV", "zero")


@dataclass(frozen=True)
class Descriptor:
    shape: str
    degree: int | None = None

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}")
        if (self.shape == "zero") != (self.degree is None):
            raise ValueError("Zero carries no degree, every other shape does")

    @property
    def is_zero(self) -> bool:
        return self.shape == "zero"

    def shifted(self, k: int) -> "Descriptor":
        return self if self.is_zero else Descriptor(self.shape, self.degree + k)

    def __str__(self) -> str:
        return "0" if self.is_zero else f"{self.shape}({self.degree})"

    def to_json(self) -> dict:
        return {"shape": self.shape, "degree": self.degree}

    @classmethod
    def from_json(cls, obj: dict) -> "Descriptor":
        return cls(obj["shape"], obj.get("degree"))


ZERO = Descriptor("zero")


def U(k: int) -> Descriptor:
    return Descriptor("U", k)


def V(k: int) -> Descriptor:
    return Descriptor("V", k)


def W(k: int) -> Descriptor:
    return Descriptor("W", k)


def UV(k: int) -> Descriptor:
    return Descriptor("UV", k)


# ------------------------------------------------------------- pair picture

@dataclass(frozen=True)
class Pairs:
    """{u^? (p, q)}: first component u^c1 K[X] (None = 0), second u^c2 K[X].

    glued means c1 = c2 and the lowest coefficients agree.
    """

    c1: int | None
    c2: int | None
    glued: bool = False


def to_pairs(d: Descriptor) -> Pairs:
    k = d.degree
    return {
        "U": Pairs(k, k, True),
        "V": Pairs(None, k, False),
        "W": Pairs(k, None, False),
        "UV": Pairs(k, k, False),
        "zero": Pairs(None, None, False),
    }[d.shape]


def from_pairs(P: Pairs, period: int) -> Descriptor:
    c1, c2 = P.c1, P.c2
    if c1 is None and c2 is None:
        return ZERO
    if c1 is None:
        return V(c2)
    if c2 is None:
        return W(c1)
    if c1 == c2:
        return U(c1) if P.glued else UV(c1)
    raise ValueError(f"{P} is not one of the five shapes (period {period})")


def _normalize(c1, c2, glued, period):
    # a glue condition at an exponent where one side vanishes forces the
    # other side's lowest coefficient to vanish too
    if glued and (c1 is None or c2 is None or c1 != c2):
        if c1 is not None and (c2 is None or c2 > c1):
            c1 += period
        elif c2 is not None and (c1 is None or c1 > c2):
            c2 += period
        glued = False
    return Pairs(c1, c2, glued)


def _congruent(a, b, period):
    return (a - b) % period == 0


def pairs_contains(big: Pairs, small: Pairs, period: int) -> bool:
    for cb, cs in ((big.c1, small.c1), (big.c2, small.c2)):
        if cs is None:
            continue
        if cb is None or cs < cb or not _congruent(cs, cb, period):
            return False
    if big.glued:
        k = big.c1
        low1 = small.c1 == k
        low2 = small.c2 == k
        if low1 or low2:
            return small.glued and low1 and low2
    return True


def pairs_mul(a: Pairs, b: Pairs, period: int) -> Pairs:
    c1 = None if a.c1 is None or b.c1 is None else a.c1 + b.c1
    c2 = None if a.c2 is None or b.c2 is None else a.c2 + b.c2
    return _normalize(c1, c2, a.glued and b.glued, period)


def pairs_meet(a: Pairs, b: Pairs, period: int) -> Pairs:
    def meet(x, y):
        if x is None or y is None or not _congruent(x, y, period):
            return None
        return max(x, y)

    c1, c2 = meet(a.c1, b.c1), meet(a.c2, b.c2)
    glued = False
    for k in sorted({m.c1 for m in (a, b) if m.glued}):
        # an operand glued at k ties the coefficients of u^k in the result
        if c1 == k and c2 == k:
            glued = True
        elif c1 == k:
            c1 += period
        elif c2 == k:
            c2 += period
    return Pairs(c1, c2, glued)


def pairs_add(a: Pairs, b: Pairs, period: int) -> Pairs:
    def low(x, y):
        if x is None:
            return y
        if y is None:
            return x
        if not _congruent(x, y, period):
            raise ValueError("sum of submodules in different degree classes")
        return min(x, y)

    c1, c2 = low(a.c1, b.c1), low(a.c2, b.c2)
    glued = False
    if c1 is not None and c1 == c2:
        glued = all(pairs_contains(Pairs(c1, c2, True), m, period) for m in (a, b))
    return Pairs(c1, c2, glued)


def pairs_colon(src: Pairs, dst: Pairs, period: int) -> Pairs:
    """{x supported where src is : x src within dst}."""
    if src.c1 is None and src.c2 is None:
        return Pairs(None, None)
    need = []
    for cs, cd in ((src.c1, dst.c1), (src.c2, dst.c2)):
        if cs is None:
            need.append(None)
        elif cd is None:
            need.append("kill")
        else:
            need.append(cd - cs)
    c1, c2 = (None if x in (None, "kill") else x for x in need)
    if dst.glued:
        # lowest coefficients of x * src at exponent k must agree
        k = dst.c1
        hit1 = src.c1 is not None and c1 is not None and c1 + src.c1 == k
        hit2 = src.c2 is not None and c2 is not None and c2 + src.c2 == k
        if hit1 and hit2:
            if src.glued:
                return _normalize(c1, c2, True, period)
            c1, c2 = c1 + period, c2 + period
        elif hit1:
            c1 += period
        elif hit2:
            c2 += period
    return Pairs(c1, c2, False)


# ------------------------------------------------------------- descriptor API

def period_of(ctx_or_n) -> int:
    n = ctx_or_n.n if isinstance(ctx_or_n, PolygonCtx) else ctx_or_n
    return 2 * n


def descriptor_mul(f: Descriptor, g: Descriptor, n: int) -> Descriptor:
    per = 2 * n
    return from_pairs(pairs_mul(to_pairs(f), to_pairs(g), per), per)


def descriptor_meet(f: Descriptor, g: Descriptor, n: int) -> Descriptor:
    per = 2 * n
    return from_pairs(pairs_meet(to_pairs(f), to_pairs(g), per), per)


def descriptor_add(f: Descriptor, g: Descriptor, n: int) -> Descriptor:
    per = 2 * n
    return from_pairs(pairs_add(to_pairs(f), to_pairs(g), per), per)


def contains(big: Descriptor, small: Descriptor, n: int) -> bool:
    return pairs_contains(to_pairs(big), to_pairs(small), 2 * n)


def colon(src: Descriptor, dst: Descriptor, n: int) -> Descriptor:
    """Elements of R'' supported on src's components multiplying src into dst."""
    per = 2 * n
    return from_pairs(pairs_colon(to_pairs(src), to_pairs(dst), per), per)


def _summands(d: Descriptor):
    if d.shape == "UV":
        return [V(d.degree), W(d.degree)]
    if d.is_zero:
        return []
    return [d]


def _hom_atomic(s: Descriptor, t: Descriptor, n: int) -> Descriptor:
    j, jp = s.degree, t.degree
    table = {
        ("V", "V"): V(jp - j),
        ("V", "W"): ZERO,
        ("V", "U"): V(jp - j + 2 * n),
        ("W", "V"): ZERO,
        ("W", "W"): W(jp - j),
        ("W", "U"): W(jp - j + 2 * n),
        ("U", "V"): V(jp - j),
        ("U", "W"): W(jp - j),
        ("U", "U"): U(jp - j),
    }
    return table[(s.shape, t.shape)]


def hom_descriptor(src: Descriptor, dst: Descriptor, n: int) -> Descriptor:
    """Hom_{R'}(src, dst) as a descriptor; UV splits as V + W on either side."""
    out = ZERO
    for s in _summands(src):
        part = ZERO
        for t in _summands(dst):
            part = descriptor_add(part, _hom_atomic(s, t, n), n)
        out = descriptor_add(out, part, n)
    return out


def graded_dim(d: Descriptor, deg: int, n: int) -> int:
    if d.is_zero:
        return 0
    k = d.degree
    if deg < k or (deg - k) % (2 * n):
        return 0
    if d.shape == "U":
        return 1 if deg == k else 2
    if d.shape in ("V", "W"):
        return 1
    return 2


# ------------------------------------------------------------- A_{a,b}

def _as_edge(ctx: PolygonCtx, x) -> TaggedEdge:
    return ctx.side(x) if isinstance(x, int) else x


def descriptor_for(ctx: PolygonCtx, a, b) -> Descriptor:
    """A_{a,b}, the paths from a to b; an integer i stands for the side (P_i, P_{i+1})."""
    a, b = _as_edge(ctx, a), _as_edge(ctx, b)
    if a.at_puncture and b.at_puncture and a.kind is not b.kind:
        return ZERO
    ell = theta_length(ctx, a, b)
    kinds = {a.kind, b.kind}
    if Kind.PLAIN in kinds:
        return V(ell)
    if Kind.NOTCHED in kinds:
        return W(ell)
    if vdash(ctx, a, b):
        return UV(ell)
    return U(ell)


@dataclass(frozen=True)
class OrderMatrix:
    n: int
    entries: tuple[tuple[Descriptor, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.entries]


@dataclass(frozen=True)
class ModuleColumn:
    edge: TaggedEdge
    entries: tuple[Descriptor, ...]

    def __getitem__(self, i):
        return self.entries[i - 1]


def lambda_matrix(ctx: PolygonCtx) -> OrderMatrix:
    n = ctx.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            k = 2 * cyclic_distance(ctx, i, j)
            row.append(UV(k) if j == ctx.normalize(i - 1) else U(k))
        rows.append(tuple(row))
    return OrderMatrix(n, tuple(rows))


def module_column(ctx: PolygonCtx, a: TaggedEdge) -> ModuleColumn:
    return ModuleColumn(a, tuple(descriptor_for(ctx, i, a) for i in range(1, ctx.n + 1)))


def acts_on(ctx: PolygonCtx, col: ModuleColumn) -> bool:
    """Lambda_{ij} * col_j lies in col_i for all i, j."""
    n = ctx.n
    lam = lambda_matrix(ctx)
    return all(contains(col[i], descriptor_mul(lam[i, j], col[j], n), n)
               for i in range(1, n + 1) for j in range(1, n + 1))


# ------------------------------------------------------------- ideal form

IDEAL_NAMES = {
    ("U", 0): "R'", ("U", 1): "(X)", ("U", 2): "(X^2)",
    ("UV", 0): "X^-1(X,Y)", ("UV", 1): "(X,Y)", ("UV", 2): "(X^2,Y^2)",
    ("V", 1): "(Y)", ("V", 2): "(Y^2)",
    ("W", 1): "(X-Y)", ("W", 2): "(X^2-Y^2)",
}


def ideal_name(d: Descriptor, n: int) -> str:
    if d.is_zero:
        return "0"
    q, r = divmod(d.degree, 2 * n)
    if r:
        raise ValueError(f"{d} does not sit in degree 0 mod 2n")
    return IDEAL_NAMES.get((d.shape, q), f"{d}")


def lambda_ideal_form(ctx: PolygonCtx) -> list[list[Descriptor]]:
    """Conjugate by diag(u^{2d(1,i)}): entry (i,j) shifts by 2d(1,i) - 2d(1,j)."""
    lam = lambda_matrix(ctx)
    n = ctx.n
    return [[lam[i, j].shifted(2 * cyclic_distance(ctx, 1, i) - 2 * cyclic_distance(ctx, 1, j))
             for j in range(1, n + 1)] for i in range(1, n + 1)]


def normalized_column(ctx: PolygonCtx, a: TaggedEdge) -> list[Descriptor]:
    """Module column shifted row-wise by 2d(1,i), then globally as low as R' allows."""
    n = ctx.n
    col = [d.shifted(2 * cyclic_distance(ctx, 1, i)) for i, d in enumerate(module_column(ctx, a).entries, 1)]
    col = [d.shifted(-col[0].degree) for d in col]
    one = U(0)
    while not all(contains(one, d, n) for d in col):
        col = [d.shifted(2 * n) for d in col]
    while all(contains(one, d.shifted(-2 * n), n) for d in col):
        col = [d.shifted(-2 * n) for d in col]
    return col


# ------------------------------------------------------------- S^[n]

def s_pieces(ctx: PolygonCtx) -> list[Descriptor]:
    """The graded pieces S_e, e = 0..n-1, as R'-modules times x^e (x of degree 2)."""
    n = ctx.n
    return [U(0)] * (n - 1) + [UV(0)]


def s_bracket_n(ctx: PolygonCtx, pieces: list[Descriptor] | None = None):
    """Matrix (S_{j-i})_{ij}, its conjugate by diag(x^i), and equality with Lambda."""
    n = ctx.n
    pieces = s_pieces(ctx) if pieces is None else pieces
    raw = [[pieces[(j - i) % n] for j in range(1, n + 1)] for i in range(1, n + 1)]
    conj = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            e = (j - i) % n
            # x^i (S_e x^e) x^-j with deg x = 2
            row.append(raw[i - 1][j - 1].shifted(2 * (i + e - j)))
        conj.append(row)
    target = lambda_ideal_form(ctx)
    ok = all(conj[i][j] == target[i][j] for i in range(n) for j in range(n))
    mat = OrderMatrix(n, tuple(tuple(r) for r in raw))
    return mat, ok


def meet_all(ds, n: int) -> Descriptor:
    return reduce(lambda x, y: descriptor_meet(x, y, n), ds)
