"""Exact linear algebra over arbitrary-precision rationals and integers.

Matrices are plain lists of lists with ``fractions.Fraction`` entries;
vectors are tuples.  Everything is deterministic: elimination always picks
the leftmost pivot column and the topmost nonzero row in it, so echelon
forms, kernel bases and Smith normal forms are unique for a given input and
safe to compare byte-for-byte in fixtures.  No floating point anywhere.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class SingularMatrixError(ValueError):
    """Raised when a matrix expected to be invertible is singular."""


class DimensionMismatchError(ValueError):
    """Raised on incompatible shapes."""


def as_fraction(x):
    """Coerce an int, string 'p/q' or Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact/boolean coefficient {x!r}")
    return Fraction(x)


def matrix(rows):
    """Copy a list-of-lists into Fraction entries, checking rectangularity."""
    out = [[as_fraction(v) for v in row] for row in rows]
    if out and any(len(row) != len(out[0]) for row in out):
        raise DimensionMismatchError("ragged matrix")
    return out


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[ZERO] * n for _ in range(m)]


def transpose(rows):
    if not rows:
        return []
    return [list(col) for col in zip(*rows)]


def matmul(a, b):
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatchError(f"{len(a[0])} columns vs {len(b)} rows")
    if not b:
        return [[] for _ in a]
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), ZERO) for col in bt] for row in a]


def mat_vec(a, v):
    if a and len(a[0]) != len(v):
        raise DimensionMismatchError(f"{len(a[0])} columns vs vector of length {len(v)}")
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in a)


def rref(rows):
    """Reduced row echelon form.

    Returns (rref_rows, pivot_columns).  Zero rows are dropped, leading
    entries are 1 and pivot columns are cleared, so two matrices have equal
    row spaces iff their rrefs are identical.
    """
    a = matrix(rows)
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(a)):
            if a[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = a[r][col]
        a[r] = [v / inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def kernel_basis(rows, ncols=None):
    """Echelonized basis of the right null space {v : rows . v = 0}.

    ``ncols`` is required when ``rows`` is empty.  The basis is the rref of
    the standard free-variable kernel vectors, so it is deterministic and
    spans comparisons reduce to list equality.
    """
    if not rows:
        if ncols is None:
            raise DimensionMismatchError("empty matrix needs explicit ncols")
        return [tuple(ONE if j == i else ZERO for j in range(ncols)) for i in range(ncols)]
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [j for j in range(ncols) if j not in pivot_set]
    vectors = []
    for j in free_cols:
        v = [ZERO] * ncols
        v[j] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r][j]
        vectors.append(v)
    reduced, _ = rref(vectors)
    return [tuple(row) for row in reduced]


def solve(rows, b):
    """One exact solution of rows . x = b, or None if inconsistent.

    Free variables are set to 0, with the leftmost-pivot rule, so the
    returned solution is deterministic.
    """
    a = matrix(rows)
    if len(a) != len(b):
        raise DimensionMismatchError(f"{len(a)} rows vs rhs of length {len(b)}")
    if not a:
        return ()
    ncols = len(a[0])
    aug = [row + [as_fraction(x)] for row, x in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        x[p] = red[r][ncols]
    return tuple(x)


def invert(rows):
    """Exact inverse of a square matrix; raises SingularMatrixError."""
    a = matrix(rows)
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatchError("inverse of a non-square matrix")
    aug = [row + ident_row for row, ident_row in zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in red]


def determinant(rows):
    """Exact determinant by fraction-based Gaussian elimination."""
    a = matrix(rows)
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatchError("determinant of a non-square matrix")
    det = ONE
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if a[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            det = -det
        det *= a[col][col]
        inv = a[col][col]
        for i in range(col + 1, n):
            if a[i][col] != 0:
                f = a[i][col] / inv
                a[i] = [v - f * w for v, w in zip(a[i], a[col])]
    return det


def _int_matrix(rows):
    out = []
    for row in rows:
        r = []
        for v in row:
            i = int(v)
            if i != v:
                raise TypeError(f"non-integer entry {v!r}")
            r.append(i)
        out.append(r)
    if out and any(len(row) != len(out[0]) for row in out):
        raise DimensionMismatchError("ragged matrix")
    return out


def smith_normal_form(rows):
    """Smith normal form over the integers.

    Returns (U, D, V) with U . A . V = D, U and V unimodular, D diagonal
    with nonnegative entries and d_i | d_{i+1}.  Pivot selection is by
    minimal (|value|, row, column), so the output is deterministic.
    """
    a = _int_matrix(rows)
    m = len(a)
    n = len(a[0]) if a else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, q):
        # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):
        # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while True:
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (pivot is None or (abs(a[i][j]), i, j) < pivot):
                    pivot = (abs(a[i][j]), i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            # clear column t below the pivot
            dirty = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # pull the offending row up so the pivot shrinks to a gcd
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            u[t] = [x + y for x, y in zip(u[t], u[offender])]
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    d = [[a[i][j] if i == j else 0 for j in range(n)] for i in range(m)]
    return u, d, v


def integer_kernel_basis(rows, ncols=None):
    """Basis of the saturated integer kernel lattice {v in Z^n : rows . v = 0}.

    Columns of the Smith V whose invariant factor vanishes form a basis, so
    the result generates every integer solution (not just a finite-index
    sublattice).
    """
    if not rows:
        if ncols is None:
            raise DimensionMismatchError("empty matrix needs explicit ncols")
        return [tuple(int(j == i) for j in range(ncols)) for i in range(ncols)]
    if ncols is None:
        ncols = len(rows[0])
    _, d, v = smith_normal_form(rows)
    out = []
    for k in range(ncols):
        dk = d[k][k] if k < len(d) else 0
        if dk == 0:
            out.append(tuple(v[i][k] for i in range(ncols)))
    return out
