"""Exact integer lattice arithmetic.

Matrices are plain nested tuples/lists of Python ints (row-major), so every
answer here is exact.  Sublattices of ``Z^r`` are kept in column Hermite
normal form, which makes lattice equality a comparison of canonical bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

__all__ = [
    "INFINITE",
    "SNFDecomposition",
    "Sublattice",
    "adjugate",
    "determinant",
    "hermite_columns",
    "integer_kernel",
    "is_unimodular_basis",
    "lattice_contains",
    "lattice_index",
    "lattice_intersection",
    "matmul",
    "rank",
    "smith_normal_form",
    "solve_integer",
    "sublattice_from_generators",
]

#: Index of a sublattice of deficient rank.
INFINITE = math.inf

Matrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[int(x) for x in row] for row in rows]


def _freeze(rows) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    if not rows:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*rows))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    """Integer matrix product; shapes are taken from the operands."""
    inner = len(b)
    ncols = len(b[0]) if b else 0
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(inner)) for j in range(ncols))
        for row in a
    )


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    a = _as_matrix(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def adjugate(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """Integer adjugate, so that ``adjugate(m) @ m == det(m) * I``."""
    k = len(m)
    if k == 1:
        return [[1]]
    adj = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = [row[:j] + row[j + 1:] for t, row in enumerate(m) if t != i]
            adj[j][i] = (-1) ** (i + j) * determinant(minor)
    return adj


@dataclass(frozen=True)
class SNFDecomposition:
    """``U @ M @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal."""

    U: Matrix
    S: Matrix
    V: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.S[i][i] for i in range(min(len(self.S), len(self.V))))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SNFDecomposition:
    """Smith normal form with transforms.

    ``ncols`` is only needed for a matrix with zero rows.  The diagonal is
    nonnegative and satisfies ``d_1 | d_2 | ... | d_k``.
    """
    a = _as_matrix(m)
    nr = len(a)
    nc = len(a[0]) if nr else (ncols or 0)
    u = [list(r) for r in identity(nr)]
    v = [list(r) for r in identity(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(nr, nc)):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover entry of row/column t to the pivot
                cands = [(abs(a[i][t]), i, t) for i in range(t + 1, nr) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t + 1, nc) if a[t][j]]
                _, i, j = min(cands)
                if abs(a[i][j]) < abs(a[t][t]):
                    if i != t:
                        swap_rows(t, i)
                    else:
                        swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return SNFDecomposition(_freeze(u), _freeze(a), _freeze(v))


def rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return smith_normal_form(rows).rank


def hermite_columns(vectors: Sequence[Sequence[int]], dim: int) -> tuple[tuple[int, ...], ...]:
    """Column Hermite normal form of the group generated by ``vectors``.

    Returns independent columns ``b_1, ..., b_k``; column ``j`` has its
    pivot (first nonzero entry, positive) in row ``p_j`` with
    ``p_1 < p_2 < ...``, and the entries of earlier columns in row ``p_j``
    are reduced into ``[0, pivot)``.
    """
    cols = [list(map(int, v)) for v in vectors]
    for c in cols:
        if len(c) != dim:
            raise ValueError(f"vector {tuple(c)} has length {len(c)}, expected {dim}")
    cols = [c for c in cols if any(c)]
    basis: list[list[int]] = []
    for row in range(dim):
        live = [c for c in cols if c[row]]
        cols = [c for c in cols if not c[row]]
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[row]))
            piv = live[0]
            rest = []
            for c in live[1:]:
                q = c[row] // piv[row]
                c = [x - q * y for x, y in zip(c, piv)]
                if c[row]:
                    rest.append(c)
                elif any(c):
                    cols.append(c)
            live = [piv] + rest
        if live:
            piv = live[0]
            if piv[row] < 0:
                piv = [-x for x in piv]
            for b in basis:
                q = b[row] // piv[row]
                if q:
                    b[:] = [x - q * y for x, y in zip(b, piv)]
            basis.append(piv)
    return tuple(tuple(b) for b in basis)


@dataclass(frozen=True)
class Sublattice:
    """A subgroup of ``Z^ambient_rank`` given by its Hermite basis columns."""

    ambient_rank: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @classmethod
    def full(cls, r: int) -> "Sublattice":
        return cls(r, identity(r))

    def __contains__(self, v) -> bool:
        return lattice_contains(self, v)


def sublattice_from_generators(vectors: Sequence[Sequence[int]], ambient_rank: Optional[int] = None) -> Sublattice:
    """The subgroup generated by ``vectors`` (``ambient_rank`` needed if empty)."""
    if ambient_rank is None:
        if not vectors:
            raise ValueError("ambient_rank is required for an empty generating set")
        ambient_rank = len(vectors[0])
    return Sublattice(ambient_rank, hermite_columns(vectors, ambient_rank))


def lattice_index(lattice: Sublattice):
    """``[Z^r : L]`` as an int, or :data:`INFINITE` when the rank is deficient."""
    if lattice.rank < lattice.ambient_rank:
        return INFINITE
    if lattice.ambient_rank == 0:
        return 1
    snf = smith_normal_form(transpose(lattice.basis))
    return math.prod(snf.diagonal)


def lattice_contains(lattice: Sublattice, v: Sequence[int]) -> bool:
    if len(v) != lattice.ambient_rank:
        raise ValueError(f"vector length {len(v)} != ambient rank {lattice.ambient_rank}")
    res = [int(x) for x in v]
    row = 0
    for b in lattice.basis:
        p = next(i for i, x in enumerate(b) if x)
        if any(res[row:p]):
            return False
        q, rem = divmod(res[p], b[p])
        if rem:
            return False
        res = [x - q * y for x, y in zip(res, b)]
        row = p + 1
    return not any(res)


def integer_kernel(m: Sequence[Sequence[int]], ncols: int) -> tuple[tuple[int, ...], ...]:
    """A Z-basis (as vectors) of ``{x in Z^ncols : m x = 0}``."""
    if not m:
        return identity(ncols)
    snf = smith_normal_form(m)
    k = snf.rank
    return tuple(tuple(row[j] for row in snf.V) for j in range(k, ncols))


def solve_integer(m: Sequence[Sequence[int]], b: Sequence[int], ncols: int) -> Optional[tuple[int, ...]]:
    """A particular integer solution of ``m x = b`` or ``None``.

    Free coordinates in Smith coordinates are set to zero, so the answer is
    deterministic.
    """
    if not m:
        return tuple([0] * ncols) if not any(b) else None
    snf = smith_normal_form(m)
    ub = [sum(x * y for x, y in zip(row, b)) for row in snf.U]
    diag = snf.diagonal
    y = [0] * ncols
    for i, c in enumerate(ub):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c:
                return None
            continue
        q, rem = divmod(c, d)
        if rem:
            return None
        y[i] = q
    return tuple(sum(row[j] * y[j] for j in range(ncols)) for row in snf.V)


def lattice_intersection(l1: Sublattice, l2: Sublattice) -> Sublattice:
    """``L1 ∩ L2`` from the integer kernel of ``[B1 | -B2]``."""
    r = l1.ambient_rank
    if l2.ambient_rank != r:
        raise ValueError("lattices live in different ambient groups")
    if not l1.basis or not l2.basis:
        return Sublattice(r, ())
    k1 = len(l1.basis)
    stacked = [
        [b[i] for b in l1.basis] + [-b[i] for b in l2.basis] for i in range(r)
    ]
    kernel = integer_kernel(stacked, k1 + len(l2.basis))
    gens = [
        tuple(sum(x[j] * l1.basis[j][i] for j in range(k1)) for i in range(r))
        for x in kernel
    ]
    return Sublattice(r, hermite_columns(gens, r))


def is_unimodular_basis(vectors: Sequence[Sequence[int]]) -> bool:
    """True iff the ``r`` given vectors in ``Z^r`` form a Z-basis."""
    if not vectors:
        return False
    r = len(vectors[0])
    if len(vectors) != r:
        raise ValueError(f"expected {r} vectors, got {len(vectors)}")
    return abs(determinant(vectors)) == 1


def independent_subsets(vectors: Sequence[Sequence[int]], size: int):
    """Yield ``(indices, det)`` for each linearly independent ``size``-subset of
    square size ``len(vectors[0])``."""
    for idx in combinations(range(len(vectors)), size):
        det = determinant([vectors[i] for i in idx])
        if det:
            yield idx, det
