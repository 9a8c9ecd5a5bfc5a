"""Exact linear algebra over the fraction fields of :mod:`cellalg.exactring`.

Matrices are lists of lists of :class:`~cellalg.exactring.CoeffFraction`.
Everything here is plain fraction-based Gaussian elimination; sizes in this
package stay small (a few hundred rows at most), so exactness is preferred
over sparsity tricks.
"""

from .exactring import CoeffFraction


class SingularMatrixError(ArithmeticError):
    """Raised when a linear system that must be regular is not."""


def zeros(rows: int, cols: int, vars: tuple):
    z = CoeffFraction.const(0, vars)
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity_matrix(n: int, vars: tuple):
    out = zeros(n, n, vars)
    one = CoeffFraction.const(1, vars)
    for i in range(n):
        out[i][i] = one
    return out


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = None
            for k in range(inner):
                if a[i][k].is_zero() or b[k][j].is_zero():
                    continue
                term = a[i][k] * b[k][j]
                acc = term if acc is None else acc + term
            if acc is None:
                acc = a[i][0] - a[i][0]
            row.append(acc)
        out.append(row)
    return out


def _echelon(matrix):
    """Row-reduce a copy of ``matrix`` in place; return (rows, pivot columns)."""
    m = [list(row) for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not m[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and not m[i][c].is_zero():
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(matrix) -> int:
    if not matrix:
        return 0
    _, pivots = _echelon(matrix)
    return len(pivots)


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` for square regular ``matrix``.

    ``rhs`` is a list of column vectors' rows, i.e. an n x m matrix; the
    result has the same shape.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    aug = [list(matrix[i]) + list(rhs[i]) for i in range(n)]
    reduced, pivots = _echelon(aug)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in reduced]


def invert(matrix):
    n = len(matrix)
    vars = matrix[0][0].vars
    return solve(matrix, identity_matrix(n, vars))


def invert_fraction_free(matrix):
    """Invert a square regular matrix by fraction-free Gauss-Jordan.

    Denominators are cleared row by row, elimination runs over polynomials
    with exact single-step divisions (Bareiss), and fractions are formed
    only once at the very end.  This avoids the polynomial-gcd blowup of
    naive fraction elimination on multivariate entries.
    """
    from .exactring import (CoeffFraction, poly_const, poly_divexact,
                            poly_mul, poly_sub)

    n = len(matrix)
    vars = matrix[0][0].vars
    nv = len(vars)
    one = poly_const(1, nv)
    work = []
    for row in matrix:
        den = one
        for cell in row:
            den = poly_mul(den, cell.den)
        prow = [poly_mul(cell.num, poly_divexact(den, cell.den, nv))
                for cell in row]
        # augment with diag(row denominator): the elimination then solves
        # (cleared matrix) X = diag(dens), whose solution is the inverse
        work.append((prow, den))
    aug = []
    for i, (prow, den) in enumerate(work):
        arow = [dict(c) for c in prow]
        arow += [den if j == i else {} for j in range(n)]
        aug.append(arow)
    prev = one
    for k in range(n):
        if not aug[k][k]:
            for r in range(k + 1, n):
                if aug[r][k]:
                    aug[k], aug[r] = aug[r], aug[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        pivot = aug[k][k]
        for i in range(n):
            if i == k:
                continue
            lead = aug[i][k]
            for j in range(2 * n):
                if j == k:
                    continue
                val = poly_sub(poly_mul(pivot, aug[i][j]),
                               poly_mul(lead, aug[k][j]))
                aug[i][j] = poly_divexact(val, prev, nv) if val else {}
            aug[i][k] = {}
        prev = pivot
    det_like = aug[n - 1][n - 1]
    return [[CoeffFraction(vars, aug[i][n + j], det_like)
             for j in range(n)] for i in range(n)]


class ColumnSolver:
    """Solve A x = b for a (tall) matrix A with full column rank.

    Factors the normal-equation matrix once; every solve verifies the
    residual, so an inconsistent right-hand side raises instead of silently
    returning a least-squares artefact.
    """

    def __init__(self, columns):
        # columns: list of k column vectors, each of length m
        self._cols = columns
        k = len(columns)
        gram = [[_dot(columns[i], columns[j]) for j in range(k)]
                for i in range(k)]
        try:
            self._gram_inv = invert(gram)
        except SingularMatrixError:
            raise SingularMatrixError("columns are linearly dependent")

    def solve_vector(self, rhs):
        k = len(self._cols)
        proj = [_dot(col, rhs) for col in self._cols]
        x = []
        for i in range(k):
            acc = None
            for j in range(k):
                if self._gram_inv[i][j].is_zero() or proj[j].is_zero():
                    continue
                term = self._gram_inv[i][j] * proj[j]
                acc = term if acc is None else acc + term
            x.append(acc if acc is not None else
                     self._gram_inv[i][0] - self._gram_inv[i][0])
        # residual check: the system must be consistent
        m = len(rhs)
        for row in range(m):
            acc = None
            for j in range(k):
                cell = self._cols[j][row]
                if cell.is_zero() or x[j].is_zero():
                    continue
                term = cell * x[j]
                acc = term if acc is None else acc + term
            lhs = acc if acc is not None else rhs[row] - rhs[row]
            if lhs != rhs[row]:
                raise SingularMatrixError(
                    "right-hand side outside the column span")
        return x


class TallSolver:
    """Solve A x = b for a tall m x k matrix A with full column rank.

    Performs one elimination pass to locate k pivot rows, inverts the
    resulting k x k submatrix, and answers each solve by applying that
    inverse to the pivot entries of the right-hand side.  Every solve
    verifies the residual on all m rows, so an inconsistent right-hand
    side raises instead of returning garbage.

    Compared with normal equations (``A^T A``), this keeps polynomial
    degrees from doubling, which matters for multivariate fractions.
    """

    def __init__(self, columns):
        # columns: list of k column vectors, each of length m
        self._cols = columns
        k = len(columns)
        m = len(columns[0])
        rows = [[columns[j][i] for j in range(k)] for i in range(m)]
        work = [list(r) for r in rows]
        orig = list(range(m))
        pivot_rows = []
        r = 0
        for c in range(k):
            pr = None
            for i in range(r, m):
                if not work[i][c].is_zero():
                    pr = i
                    break
            if pr is None:
                raise SingularMatrixError("columns are linearly dependent")
            work[r], work[pr] = work[pr], work[r]
            orig[r], orig[pr] = orig[pr], orig[r]
            inv = work[r][c].inverse()
            work[r] = [x * inv for x in work[r]]
            for i in range(r + 1, m):
                if not work[i][c].is_zero():
                    factor = work[i][c]
                    work[i] = [a - factor * b
                               for a, b in zip(work[i], work[r])]
            pivot_rows.append(orig[r])
            r += 1
        self._pivot_rows = pivot_rows
        self._sub_inv = invert([rows[i] for i in pivot_rows])

    def solve_vector(self, rhs):
        k = len(self._cols)
        x = []
        for i in range(k):
            acc = None
            for j, row in enumerate(self._pivot_rows):
                cell = self._sub_inv[i][j]
                if cell.is_zero() or rhs[row].is_zero():
                    continue
                term = cell * rhs[row]
                acc = term if acc is None else acc + term
            x.append(acc if acc is not None else
                     self._sub_inv[i][0] - self._sub_inv[i][0])
        for row in range(len(rhs)):
            acc = None
            for j in range(k):
                cell = self._cols[j][row]
                if cell.is_zero() or x[j].is_zero():
                    continue
                term = cell * x[j]
                acc = term if acc is None else acc + term
            lhs = acc if acc is not None else rhs[row] - rhs[row]
            if lhs != rhs[row]:
                raise SingularMatrixError(
                    "right-hand side outside the column span")
        return x


def _dot(a, b):
    acc = None
    for x, y in zip(a, b):
        if x.is_zero() or y.is_zero():
            continue
        term = x * y
        acc = term if acc is None else acc + term
    if acc is None:
        acc = a[0] - a[0]
    return acc


class LinearSolver:
    """Factor a square regular matrix once; solve many right-hand sides."""

    def __init__(self, matrix):
        self._n = len(matrix)
        self._inv = invert(matrix)

    @property
    def n(self) -> int:
        return self._n

    def solve_vector(self, rhs):
        if len(rhs) != self._n:
            raise ValueError("bad right-hand side length")
        out = []
        for i in range(self._n):
            acc = None
            for k in range(self._n):
                if self._inv[i][k].is_zero() or rhs[k].is_zero():
                    continue
                term = self._inv[i][k] * rhs[k]
                acc = term if acc is None else acc + term
            if acc is None:
                acc = self._inv[i][0] - self._inv[i][0]
            out.append(acc)
        return out
