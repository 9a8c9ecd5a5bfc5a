"""Restriction machinery for the two diagram-algebra towers.

Each cell module S^lambda of B_n restricts to a filtered B_{n-1}-module
whose subquotients are the cell modules S^mu over the one-box neighbors
mu of lambda.  Iterating the construction produces a basis of S^lambda
indexed by the up-down (Bratteli) paths of shape lambda, on which the
Jucys-Murphy operators act triangularly with explicit diagonal values.
"""

from functools import lru_cache

from . import bmw as _bmw
from . import brauer as _brauer
from .combin import (
    Permutation,
    StdTableau,
    check_partition,
    enumerate_paths,
    maximal_path,
    neighbors,
    path_dominance,
    superstandard,
    tab_perm,
    up_neighbor_data,
)
from .exactring import BMW_VARS, BRAUER_VARS, CoeffFraction
from .linalg import identity_matrix, invert_fraction_free, mat_mul

ALGEBRAS = ("bmw", "brauer")


class _BmwOps:
    """Cell-module operations of the two-parameter tower."""

    name = "bmw"
    vars = BMW_VARS
    gen_kinds = ("T", "E")

    @staticmethod
    def index(lam, n):
        return _bmw.bmw_index(lam, n)

    @staticmethod
    def gen_matrix(lam, n, kind, i):
        return _bmw.bmw_gen_matrix(lam, n, kind, i)

    @staticmethod
    def jm_matrix(lam, n, k):
        return _bmw.bmw_jm_matrix(lam, n, k)

    @staticmethod
    def perm_letters(w):
        return [("T", i) for i in w.reduced_word()]

    @staticmethod
    def inverse_letters(word):
        return [("Tinv", i) for i in reversed(word)]

    @staticmethod
    def step_coeff(i):
        return _qr_power(i, 0)

    @staticmethod
    def content(prev, cur):
        node, added = _changed_node(prev, cur)
        i, j = node
        if added:
            return _qr_power(2 * (j - i), 0)
        return _qr_power(2 * (i - j), -2)

    jm_start = 1  # L_1 = 1
    central_is_product = True


class _BrauerOps:
    """Cell-module operations of the one-parameter tower."""

    name = "brauer"
    vars = BRAUER_VARS
    gen_kinds = ("s", "E")

    @staticmethod
    def index(lam, n):
        return _brauer.br_index(lam, n)

    @staticmethod
    def gen_matrix(lam, n, kind, i):
        return _brauer.br_cell_matrix(lam, n, kind, i)

    @staticmethod
    def jm_matrix(lam, n, k):
        return _brauer.br_jm_matrix(lam, n, k)

    @staticmethod
    def perm_letters(w):
        return [("s", i) for i in w.reduced_word()]

    @staticmethod
    def inverse_letters(word):
        return [("s", i) for i in reversed(word)]

    @staticmethod
    def step_coeff(i):
        return CoeffFraction.const(1, BRAUER_VARS)

    @staticmethod
    def content(prev, cur):
        node, added = _changed_node(prev, cur)
        i, j = node
        if added:
            return CoeffFraction.const(j - i, BRAUER_VARS)
        return (CoeffFraction.const(i - j + 1, BRAUER_VARS)
                - CoeffFraction.var("z", BRAUER_VARS))

    jm_start = 0  # L_1 = 0
    central_is_product = False


def _ops(algebra: str):
    if algebra == "bmw":
        return _BmwOps
    if algebra == "brauer":
        return _BrauerOps
    raise ValueError("unknown algebra {!r}".format(algebra))


@lru_cache(maxsize=None)
def _qr_power(a: int, b: int) -> CoeffFraction:
    q = CoeffFraction.var("q", BMW_VARS)
    r = CoeffFraction.var("r", BMW_VARS)
    return q ** a * r ** b


def _changed_node(prev, cur):
    """The box by which cur differs from prev: ((row, col), added?)."""
    prev, cur = check_partition(prev), check_partition(cur)
    if sum(cur) == sum(prev) + 1:
        big, small, added = cur, prev, True
    elif sum(cur) == sum(prev) - 1:
        big, small, added = prev, cur, False
    else:
        raise ValueError("consecutive path shapes must differ by one box")
    for i in range(len(big)):
        a = big[i]
        b = small[i] if i < len(small) else 0
        if a == b + 1:
            return (i + 1, a), added
        if a != b:
            break
    raise ValueError("consecutive path shapes must differ by one box")


def path_content(algebra: str, path, k: int) -> CoeffFraction:
    """The symbolic eigenvalue P_t(k) of L_k attached to step k of a path."""
    if not 1 <= k <= len(path) - 1:
        raise ValueError("step index out of range")
    return _ops(algebra).content(path[k - 1], path[k])


# -- paths in recursion order --------------------------------------------------------

@lru_cache(maxsize=None)
def ordered_paths(lam, n: int):
    """All paths of shape lam, grouped by the neighbor chain at each level
    (a linear extension of path dominance, most dominant path first)."""
    lam = check_partition(lam)
    if n == 0:
        if lam:
            raise ValueError("only the empty shape exists at level zero")
        return (((),),)
    out = []
    for mu in neighbors(lam, n):
        for p in ordered_paths(mu, n - 1):
            out.append(p + (lam,))
    return tuple(out)


# -- y-elements ----------------------------------------------------------------------

class YElement:
    """The vector y^lambda_mu in S^lambda attached to a neighbor mu."""

    __slots__ = ("algebra", "n", "lam", "mu", "vector")

    def __init__(self, algebra, n, lam, mu, vector):
        self.algebra = algebra
        self.n = n
        self.lam = lam
        self.mu = mu
        self.vector = tuple(vector)

    def __repr__(self):
        return "YElement({}, n={}, lam={}, mu={})".format(
            self.algebra, self.n, self.lam, self.mu)


def down_tableau(lam, mu, n: int) -> StdTableau:
    """The standard tableau s of shape lam whose restriction to n-1 is the
    row-filling tableau of mu (one box removed from lam)."""
    lam, mu = check_partition(lam), check_partition(mu)
    node, added = _changed_node(lam, mu)
    if added:
        raise ValueError("mu must have one box fewer than lam")
    base = superstandard(mu, n - 1)
    rows = [list(r) for r in base.rows]
    i, j = node
    while len(rows) < i:
        rows.append([])
    rows[i - 1].append(n)
    s = StdTableau(rows, n)
    if not s.is_standard() or s.shape != lam:
        raise AssertionError("down tableau construction failed")
    return s


def _unit_vector(ops, lam, n, key):
    index = ops.index(lam, n)
    zero = CoeffFraction.const(0, ops.vars)
    one = CoeffFraction.const(1, ops.vars)
    return [one if tu == key else zero for tu in index]


def _apply_letters(ops, vec, lam, n, letters):
    for kind, i in letters:
        mat = ops.gen_matrix(lam, n, kind, i)
        vec = [_dot_col(vec, mat, j) for j in range(len(vec))]
    return vec


def _dot_col(vec, mat, j):
    acc = None
    for a, c in enumerate(vec):
        if c.is_zero() or mat[a][j].is_zero():
            continue
        term = c * mat[a][j]
        acc = term if acc is None else acc + term
    return acc if acc is not None else vec[0] - vec[0]


def y_element(algebra: str, lam, mu, n: int) -> YElement:
    """The generator y^lambda_mu of the restriction filtration layer N^mu."""
    ops = _ops(algebra)
    lam, mu = check_partition(lam), check_partition(mu)
    if mu not in neighbors(lam, n):
        raise ValueError(
            "{} is not a Bratteli neighbor of {} at level {}".format(
                mu, lam, n))
    one = Permutation.identity(n)
    if sum(mu) == sum(lam) - 1:
        s = down_tableau(lam, mu, n)
        vec = _unit_vector(ops, lam, n, (s, one))
        return YElement(algebra, n, lam, mu, vec)
    # one box added: act on m_lambda by the inverse of the distinguished
    # permutation, then by the telescoping sum over the new row
    for entry, a, d_word, w_word in up_neighbor_data(lam, n):
        if entry == mu:
            break
    else:
        raise AssertionError("neighbor data must contain mu")
    (row, _col), added = _changed_node(lam, mu)
    if not added:
        raise AssertionError("expected an added box")
    seed = _unit_vector(ops, lam, n, (superstandard(lam, n), one))
    base = _apply_letters(ops, seed, lam, n, ops.inverse_letters(w_word))
    depth = lam[row - 1] if row - 1 < len(lam) else 0
    acc = list(base)
    cur = base
    for i in range(1, depth + 1):
        cur = _apply_letters(ops, cur, lam, n, [(ops.gen_kinds[0], a - i)])
        coeff = ops.step_coeff(i)
        acc = [x + y * coeff for x, y in zip(acc, cur)]
    return YElement(algebra, n, lam, mu, acc)


# -- the recursive path basis --------------------------------------------------------

class PathBasis:
    """Basis of S^lambda indexed by up-down paths.

    ``vectors[t]`` holds the cell-basis coordinates of m_t and
    ``b_words[t]`` the element b_t with m_t = m_lambda b_t, stored as
    coefficients on the permutation monomials d(t)u of the cell basis.
    """

    __slots__ = ("algebra", "n", "lam", "paths", "index", "vectors",
                 "b_words", "_inverse")

    def __init__(self, algebra, n, lam, paths, index, vectors, b_words,
                 inverse):
        self.algebra = algebra
        self.n = n
        self.lam = lam
        self.paths = paths
        self.index = index
        self.vectors = vectors
        self.b_words = b_words
        self._inverse = inverse

    def transition_matrix(self):
        """Columns are the path vectors m_t over the cell basis rows."""
        return [[self.vectors[t][i] for t in self.paths]
                for i in range(len(self.index))]

    def path_rows(self):
        """The path vectors as rows (one row per path)."""
        return [list(self.vectors[t]) for t in self.paths]

    def to_path_coords(self, vec):
        """Coordinates of a cell-basis vector over the path basis."""
        return [_dot_col(vec, self._inverse, j)
                for j in range(len(self.paths))]

    def conjugate(self, matrix):
        """Rewrite a cell-basis action matrix in the path basis."""
        return mat_mul(mat_mul(self.path_rows(), matrix), self._inverse)


@lru_cache(maxsize=None)
def build_path_basis(algebra: str, lam, n: int) -> PathBasis:
    """Lift bases through the tower: m_t = y^lambda_mu b_u for t|_{n-1} = u."""
    ops = _ops(algebra)
    lam = check_partition(lam)
    index = ops.index(lam, n)
    one_c = CoeffFraction.const(1, ops.vars)
    if n == 1:
        path = ((), lam)
        vectors = {path: (one_c,)}
        b_words = {path: {Permutation.identity(1): one_c}}
        return PathBasis(algebra, n, lam, (path,), index, vectors, b_words,
                         identity_matrix(1, ops.vars))
    paths = ordered_paths(lam, n)
    vectors = {}
    b_words = {}
    for mu in neighbors(lam, n):
        y = y_element(algebra, lam, mu, n).vector
        sub = build_path_basis(algebra, mu, n - 1)
        for u in sub.paths:
            t = u + (lam,)
            acc = None
            for w, c in sub.b_words[u].items():
                lifted = Permutation(w.img + (n,))
                piece = _apply_letters(ops, list(y), lam, n,
                                       ops.perm_letters(lifted))
                piece = [x * c for x in piece]
                acc = piece if acc is None else \
                    [x + yv for x, yv in zip(acc, piece)]
            vectors[t] = tuple(acc)
            b_words[t] = {
                tab_perm(tt) * uu: c
                for (tt, uu), c in zip(index, acc) if not c.is_zero()}
    if set(paths) != set(vectors):
        raise AssertionError("path recursion missed a path")
    rows = [list(vectors[t]) for t in paths]
    inverse = invert_fraction_free(rows)  # also certifies independence
    return PathBasis(algebra, n, lam, paths, index, vectors, b_words, inverse)


# -- restriction filtration ----------------------------------------------------------

def restriction_filtration_check(algebra: str, lam, n: int) -> dict:
    """Verify the neighbor filtration of S^lambda restricted to B_{n-1}.

    For each neighbor mu (most dominant first) the span of the paths
    passing through mu and its predecessors must be stable under the
    generators with index < n-1, and the induced action on the subquotient
    must match the structure constants of S^mu one level down.
    """
    ops = _ops(algebra)
    lam = check_partition(lam)
    pb = build_path_basis(algebra, lam, n)
    report = {
        "algebra": algebra, "n": n, "lam": lam, "ok": True,
        "neighbors": [], "failures": [],
    }
    if n == 1:
        report["dimension_match"] = len(pb.paths) == len(pb.index)
        return report
    mus = neighbors(lam, n)
    blocks = []
    start = 0
    for mu in mus:
        size = len(ordered_paths(mu, n - 1))
        blocks.append((mu, start, start + size))
        report["neighbors"].append({"mu": mu, "dim": size})
        start += size
    report["dimension_match"] = start == len(pb.index)
    if not report["dimension_match"]:
        report["ok"] = False
        report["failures"].append(("dimension", start, len(pb.index)))
    gens = [(kind, i) for i in range(1, n - 1) for kind in ops.gen_kinds]
    subs = {mu: build_path_basis(algebra, mu, n - 1) for mu in mus}
    for kind, i in gens:
        acted = pb.conjugate(ops.gen_matrix(lam, n, kind, i))
        expected = {mu: subs[mu].conjugate(ops.gen_matrix(mu, n - 1, kind, i))
                    for mu in mus}
        for mu, lo, hi in blocks:
            for a in range(lo, hi):
                for b in range(hi, len(pb.paths)):
                    if not acted[a][b].is_zero():
                        report["ok"] = False
                        report["failures"].append(
                            ("stability", (kind, i), mu,
                             pb.paths[a], pb.paths[b]))
            exp = expected[mu]
            for a in range(lo, hi):
                for b in range(lo, hi):
                    if acted[a][b] != exp[a - lo][b - lo]:
                        report["ok"] = False
                        report["failures"].append(
                            ("subquotient", (kind, i), mu,
                             pb.paths[a], pb.paths[b]))
    return report


# -- Jucys-Murphy triangularity ------------------------------------------------------

def jm_triangularity(algebra: str, lam, n: int) -> dict:
    """Check that every L_k is triangular on the path basis with diagonal
    P_t(k); returns the per-path diagonal values."""
    ops = _ops(algebra)
    lam = check_partition(lam)
    pb = build_path_basis(algebra, lam, n)
    report = {
        "algebra": algebra, "n": n, "lam": lam, "ok": True,
        "diagonals": {t: [] for t in pb.paths}, "failures": [],
    }
    for k in range(1, n + 1):
        mat = pb.conjugate(ops.jm_matrix(lam, n, k))
        for a, t in enumerate(pb.paths):
            for b, u in enumerate(pb.paths):
                if a == b:
                    expected = path_content(algebra, t, k)
                    report["diagonals"][t].append(mat[a][b])
                    if mat[a][b] != expected:
                        report["ok"] = False
                        report["failures"].append(
                            ("diagonal", k, t, mat[a][b], expected))
                elif not mat[a][b].is_zero():
                    if path_dominance(u, t) != "dominates":
                        report["ok"] = False
                        report["failures"].append(("offdiagonal", k, t, u))
    return report


# -- central elements ----------------------------------------------------------------

def central_scalar(algebra: str, lam, n: int) -> CoeffFraction:
    """The scalar by which the central combination of Jucys-Murphy operators
    (product for the two-parameter tower, sum for the one-parameter tower)
    acts on S^lambda; raises if the action is not scalar."""
    ops = _ops(algebra)
    lam = check_partition(lam)
    dim = len(ops.index(lam, n))
    acc = None
    for k in range(2, n + 1):
        mat = ops.jm_matrix(lam, n, k)
        if acc is None:
            acc = mat
        elif ops.central_is_product:
            acc = mat_mul(acc, mat)
        else:
            acc = [[x + y for x, y in zip(ra, rb)]
                   for ra, rb in zip(acc, mat)]
    t_max = maximal_path(lam, n)
    alpha = None
    for k in range(2, n + 1):
        c = path_content(algebra, t_max, k)
        if alpha is None:
            alpha = c
        elif ops.central_is_product:
            alpha = alpha * c
        else:
            alpha = alpha + c
    if n == 1:
        alpha = CoeffFraction.const(1 if ops.central_is_product else 0,
                                    ops.vars)
        acc = identity_matrix(dim, ops.vars) if ops.central_is_product \
            else [[CoeffFraction.const(0, ops.vars)] * dim
                  for _ in range(dim)]
    for a in range(dim):
        for b in range(dim):
            expected = alpha if a == b else alpha - alpha
            if acc[a][b] != expected:
                raise AssertionError(
                    "central combination failed to act as a scalar")
    return alpha
