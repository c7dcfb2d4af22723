"""Concrete modules attached to edges and to graded indecomposables.

Columns are written directly from the table of module shapes (ideals of R'
row by row), independently of the descriptor arithmetic in `order`.
"""

from __future__ import annotations

from ..polygon import Kind, PolygonCtx, TaggedEdge, angle_index, theta_length
from . import gf
from .lattice import LatticeModule, from_columns, ideal_basis, lambda_ideal_column


def edge_ideal_column(ctx: PolygonCtx, a: TaggedEdge) -> list[str]:
    n = ctx.n
    if a.is_side:
        return lambda_ideal_column(n, a.a1 - 1)
    k = a.a1
    if a.kind is Kind.PLAIN:
        return ["(Y)"] * k + ["(Y^2)"] * (n - k)
    if a.kind is Kind.NOTCHED:
        return ["(X-Y)"] * k + ["(X^2-Y^2)"] * (n - k)
    a1, a2 = a.a1, a.a2
    if a1 < a2:
        return ["R'"] * a1 + ["(X,Y)"] * (a2 - a1) + ["(X)"] * (n - a2)
    return ["(X,Y)"] * a2 + ["(X)"] * (a1 - a2) + ["(X^2,Y^2)"] * (n - a1)


def theta_row_base(n: int) -> tuple[int, ...]:
    return tuple(-2 * i for i in range(n))


def theta_module(ctx: PolygonCtx, a: TaggedEdge, p: int = gf.PRIMES[0], t: int = 6) -> LatticeModule:
    """M_a with its theta-grading (deg X = 2n, deg E_{ij} = 2(j - i)).

    The rows fix the grading up to one global shift.  It is anchored by giving
    the lowest element of row 1 the theta-length from the first side to a;
    that value is first checked against the rotation angle mod 2n.
    """
    n = ctx.n
    cols = edge_ideal_column(ctx, a)
    low = min(m for m, _ in ideal_basis(cols[0], t, p))
    anchor = theta_length(ctx, ctx.side(1), a)
    if (anchor - angle_index(ctx, ctx.side(1), a)) % (2 * n):
        raise ArithmeticError(f"theta-length and rotation angle disagree for {a}")
    offset = anchor - 2 * n * low
    return from_columns(n, cols, A=2 * n, row_base=theta_row_base(n), offset=offset, p=p, t=t,
                        label=str(a))


def graded_ideal_column(n: int, kind: str, i: int, j: int | None) -> tuple[list[str], int]:
    """Ideal column and degree offset of the graded indecomposable (i,j), (i,*), (i,x)."""
    k, r = divmod(i - 1, n)
    i0 = r + 1
    if kind == "star":
        cols = ["(Y)"] * i0 + ["(Y^2)"] * (n - i0)
    elif kind == "notch":
        cols = ["(X-Y)"] * i0 + ["(X^2-Y^2)"] * (n - i0)
    else:
        j0 = j - k * n
        if not 0 < j0 - i0 < n:
            raise ValueError(f"({i},{j}) is not a graded indecomposable for n={n}")
        if j0 <= n:
            cols = ["(X)"] * i0 + ["(X^2,Y^2)"] * (j0 - i0) + ["(X^2)"] * (n - j0)
        else:
            cols = ["(X,Y)"] * (j0 - n) + ["(X)"] * (n - j0 + i0) + ["(X^2,Y^2)"] * (n - i0)
    # (i + kn, j + kn) = (i, j)(k) and M(k)_d = M_{k+d}
    return cols, -k


def graded_module(n: int, kind: str, i: int, j: int | None = None, p: int = gf.PRIMES[0],
                  t: int = 6) -> LatticeModule:
    """Graded lattice with deg X = deg Y = 1 and matrix units in degree 0."""
    cols, offset = graded_ideal_column(n, kind, i, j)
    label = {"star": f"({i},*)", "notch": f"({i},x)"}.get(kind, f"({i},{j})")
    return from_columns(n, cols, A=1, row_base=(0,) * n, offset=offset, p=p, t=t, label=label)
