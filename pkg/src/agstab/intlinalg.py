"""Exact linear algebra over the integers and rationals.

Small dense matrices only (dimensions well under 100).  Gaussian
elimination runs over Fraction; integer determinants use Bareiss'
fraction-free algorithm; lattice saturation uses a Smith-style
diagonalization that tracks the inverse of the accumulated column
operations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

Vector = tuple[int, ...]


def rational_rank(rows: Sequence[Sequence]) -> int:
    return len(greedy_independent_rows(rows))


def greedy_independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal independent subset, scanning rows in order.

    Maintains a reduced echelon basis; a row joins the subset exactly
    when it does not eliminate to zero against the rows kept so far.
    """
    echelon: list[list[Fraction]] = []
    pivots: list[int] = []
    kept: list[int] = []
    for idx, row in enumerate(rows):
        vec = [Fraction(x) for x in row]
        for basis_row, piv in zip(echelon, pivots):
            if vec[piv] != 0:
                factor = vec[piv]
                vec = [a - factor * b for a, b in zip(vec, basis_row)]
        piv = next((j for j, a in enumerate(vec) if a != 0), None)
        if piv is None:
            continue
        inv = vec[piv]
        echelon.append([a / inv for a in vec])
        pivots.append(piv)
        kept.append(idx)
    return kept


def solve_in_basis(basis_rows: Sequence[Sequence], target: Sequence) -> tuple[Fraction, ...] | None:
    """Coefficients c with sum_i c_i * basis_rows[i] = target, or None.

    The basis rows must be linearly independent.
    """
    m = len(basis_rows)
    width = len(target)
    # eliminate on the transposed system [basis^T | target]
    cols = [[Fraction(basis_rows[i][j]) for i in range(m)] + [Fraction(target[j])] for j in range(width)]
    pivot_row = 0
    pivot_cols: list[int] = []
    for var in range(m):
        pivot = next((r for r in range(pivot_row, width) if cols[r][var] != 0), None)
        if pivot is None:
            continue
        cols[pivot_row], cols[pivot] = cols[pivot], cols[pivot_row]
        inv = cols[pivot_row][var]
        cols[pivot_row] = [a / inv for a in cols[pivot_row]]
        for r in range(width):
            if r != pivot_row and cols[r][var] != 0:
                factor = cols[r][var]
                cols[r] = [a - factor * b for a, b in zip(cols[r], cols[pivot_row])]
        pivot_cols.append(var)
        pivot_row += 1
    if len(pivot_cols) != m:
        raise ValueError("basis rows are not linearly independent")
    for r in range(pivot_row, width):
        if cols[r][m] != 0:
            return None
    out = [Fraction(0)] * m
    for r, var in enumerate(pivot_cols):
        out[var] = cols[r][m]
    return tuple(out)


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss' fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def invert_rational(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    """Matrix inverse over Fraction by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [
        [Fraction(matrix[i][j]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [a / inv for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def adjugate_int(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """(adjugate, determinant) with matrix * adj = det * I, all integer."""
    d = det_int(matrix)
    if d == 0:
        raise ZeroDivisionError("adjugate of a singular matrix")
    inv = invert_rational(matrix)
    n = len(matrix)
    adj = [[inv[i][j] * d for j in range(n)] for i in range(n)]
    out = []
    for row in adj:
        int_row = []
        for x in row:
            if x.denominator != 1:
                raise ArithmeticError("adjugate entries must be integers")
            int_row.append(x.numerator)
        out.append(int_row)
    return out, d


def saturation_basis(rows: Sequence[Sequence[int]]) -> list[Vector]:
    """Basis of the saturation of the row lattice inside Z^g.

    Diagonalize A by unimodular row and column operations while
    tracking W = C^{-1} for the accumulated column matrix C.  Writing
    A = R^{-1} D W with D = diag(d_1, .., d_r, 0, ..), the rational row
    space is spanned by the first r rows of W, and since W is
    unimodular those rows are a basis of the saturated lattice.
    """
    a = [list(map(int, row)) for row in rows]
    s = len(a)
    g = len(a[0]) if s else 0
    w = [[1 if i == j else 0 for j in range(g)] for i in range(g)]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        w[i], w[j] = w[j], w[i]

    def col_addmul(j, i, q):
        # col_j += q * col_i  mirrored as  w_row_i -= q * w_row_j
        for row in a:
            row[j] += q * row[i]
        w[i] = [x - q * y for x, y in zip(w[i], w[j])]

    rank = 0
    while True:
        pivot = None
        for i in range(rank, s):
            for j in range(rank, g):
                if a[i][j] != 0:
                    if pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[rank], a[pi] = a[pi], a[rank]
        if pj != rank:
            col_swap(rank, pj)
        while True:
            dirty = False
            for i in range(rank + 1, s):
                if a[i][rank] != 0:
                    q = a[i][rank] // a[rank][rank]
                    a[i] = [x - q * y for x, y in zip(a[i], a[rank])]
                    if a[i][rank] != 0:
                        a[rank], a[i] = a[i], a[rank]
                        dirty = True
            for j in range(rank + 1, g):
                if a[rank][j] != 0:
                    q = a[rank][j] // a[rank][rank]
                    col_addmul(j, rank, -q)
                    if a[rank][j] != 0:
                        col_swap(rank, j)
                        dirty = True
            if not dirty:
                break
        rank += 1
    return [tuple(w[i]) for i in range(rank)]


def coordinates_in_lattice_basis(basis: Sequence[Vector], vector: Sequence[int]) -> Vector:
    """Integer coordinates of a lattice vector in a saturation basis."""
    coords = solve_in_basis(basis, vector)
    if coords is None:
        raise ValueError(f"{vector} is not in the span of the basis")
    out = []
    for c in coords:
        if c.denominator != 1:
            raise ArithmeticError(
                f"{vector} has non-integer coordinates {coords} in the lattice basis"
            )
        out.append(c.numerator)
    return tuple(out)


def matroid_components(vectors: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Connected components of the linear matroid on the given vectors.

    Components are computed from fundamental circuits with respect to
    one basis: each dependent vector is joined to the basis vectors
    appearing in its unique expansion.  For any basis this reproduces
    matroid connectivity; basis vectors joined to nothing are coloops
    and form singleton components.  Indices returned are 0-based and
    each component is sorted.
    """
    n = len(vectors)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    basis_idx = greedy_independent_rows(vectors)
    basis_rows = [vectors[i] for i in basis_idx]
    basis_set = set(basis_idx)
    for i in range(n):
        if i in basis_set:
            continue
        coords = solve_in_basis(basis_rows, vectors[i])
        for pos, c in enumerate(coords):
            if c != 0:
                union(i, basis_idx[pos])
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(tuple(sorted(v)) for v in groups.values())


def all_circuits(vectors: Sequence[Sequence[int]], max_size: int | None = None) -> list[frozenset[int]]:
    """All circuits (minimal dependent subsets) of a small configuration.

    Subsets are scanned by increasing size; a dependent subset is a
    circuit exactly when it contains no previously found circuit.
    Only intended for configurations with at most a dozen vectors.
    """
    n = len(vectors)
    rank_total = rational_rank(vectors)
    limit = min(max_size if max_size is not None else n, rank_total + 1)
    circuits: list[frozenset[int]] = []
    for size in range(1, limit + 1):
        for subset in combinations(range(n), size):
            sset = frozenset(subset)
            if any(c <= sset for c in circuits):
                continue
            if rational_rank([vectors[i] for i in subset]) < size:
                circuits.append(sset)
    return circuits
