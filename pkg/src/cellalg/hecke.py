"""The Iwahori-Hecke algebra H_n(q^2) of the symmetric group.

Elements are stored on the word basis {X_w : w in S_n}.  The module provides
the cellular (Murphy) basis c_{uv} = X_{d(u)}* c_lambda X_{d(v)}, conversion
between the two bases by an exact linear solve, cell ("Specht") modules as
quotient coordinates, Jucys-Murphy elements D_i, and the permutation-module
elements attached to semistandard tableaux.

Coefficients live in the two-variable fraction field on ("q", "r") so that
these elements embed directly into the tangle-algebra computations; the
variable r never occurs in anything produced here.
"""

from functools import lru_cache
from itertools import permutations as _iter_perms

from .combin import (
    Permutation,
    StdTableau,
    check_partition,
    dominance,
    dominance_key,
    enumerate_std,
    partitions_of,
    path_dominance,
    path_of_tableau,
    superstandard,
    tab_perm,
)
from .exactring import BMW_VARS, CoeffFraction
from .linalg import LinearSolver

HK_VARS = BMW_VARS


def _const(c) -> CoeffFraction:
    return CoeffFraction.const(c, HK_VARS)


def _q() -> CoeffFraction:
    return CoeffFraction.var("q", HK_VARS)


@lru_cache(maxsize=None)
def _delta() -> CoeffFraction:
    q = _q()
    return q - q.inverse()


@lru_cache(maxsize=None)
def _q_power(k: int) -> CoeffFraction:
    return _q() ** k


class HeckeElement:
    """Finitely supported map Permutation -> coefficient, fixed rank n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict):
        self.n = n
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls(n, {Permutation.identity(n): _const(1)})

    @classmethod
    def x(cls, w: Permutation) -> "HeckeElement":
        return cls(w.n, {w: _const(1)})

    @classmethod
    def gen(cls, i: int, n: int) -> "HeckeElement":
        return cls.x(Permutation.s(i, n))

    # -- linear structure -------------------------------------------------
    def _check(self, other: "HeckeElement"):
        if self.n != other.n:
            raise ValueError("rank mismatch")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return HeckeElement(self.n, terms)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.n, {w: -c for w, c in self.terms.items()})

    def scale(self, c: CoeffFraction) -> "HeckeElement":
        return HeckeElement(self.n, {w: x * c for w, x in self.terms.items()})

    def coeff(self, w: Permutation) -> CoeffFraction:
        return self.terms.get(w, _const(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, HeckeElement) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = HeckeElement.zero(self.n)
        for w, c in other.terms.items():
            piece = self.scale(c)
            for i in w.reduced_word():
                piece = hk_mul_gen(piece, i, "right")
            out = out + piece
        return out

    def __repr__(self):
        if not self.terms:
            return "HeckeElement(0)"
        bits = ["({})*X{}".format(c, list(w.img))
                for w, c in sorted(self.terms.items(), key=lambda t: t[0].img)]
        return " + ".join(bits)


def hk_mul_gen(h: HeckeElement, i: int, side: str = "right") -> HeckeElement:
    """Multiply by the generator X_i on the given side."""
    if not 1 <= i < h.n:
        raise ValueError("generator index out of range")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    delta = _delta()
    terms = {}

    def put(w, c):
        if w in terms:
            terms[w] = terms[w] + c
        else:
            terms[w] = c

    for w, c in h.terms.items():
        if side == "right":
            ws = w.rmul_s(i)
            longer = w.inverse()(i) < w.inverse()(i + 1)
        else:
            ws = w.lmul_s(i)
            longer = w(i) < w(i + 1)
        if longer:
            put(ws, c)
        else:
            put(ws, c)
            put(w, c * delta)
    return HeckeElement(h.n, terms)


def hk_star(h: HeckeElement) -> HeckeElement:
    """The anti-involution X_w -> X_{w^{-1}}."""
    return HeckeElement(h.n, {w.inverse(): c for w, c in h.terms.items()})


def row_stabilizer(mu, n: int):
    """All permutations fixing each row of the superstandard mu-filling."""
    mu = check_partition(mu)
    t = superstandard(mu, n)
    blocks = [list(row) for row in t.rows]
    fixed = tuple(range(1, n + 1))

    perms = [Permutation.identity(n)]
    for block in blocks:
        new = []
        for assignment in _iter_perms(block):
            img = list(fixed)
            for pos, val in zip(block, assignment):
                img[pos - 1] = val
            new.append(Permutation(img))
        perms = [p * b for p in perms for b in new]
    return perms


def hk_c_mu(mu, n: int) -> HeckeElement:
    """c_mu = sum over the row stabilizer of q^{l(w)} X_w."""
    terms = {}
    for w in row_stabilizer(mu, n):
        terms[w] = _q_power(w.length())
    return HeckeElement(n, terms)


# -- Murphy basis ------------------------------------------------------------

@lru_cache(maxsize=None)
def murphy_index(n: int):
    """Ordered index [(lambda, u, v)] for the cellular basis of H_n."""
    out = []
    for lam in sorted(partitions_of(n), key=dominance_key):
        tabs = enumerate_std(lam, n)
        for u in tabs:
            for v in tabs:
                out.append((lam, u, v))
    return tuple(out)


def murphy_element(lam, u: StdTableau, v: StdTableau) -> HeckeElement:
    """c_{uv} = X_{d(u)}* c_lambda X_{d(v)}."""
    n = u.n
    c = hk_c_mu(lam, n)
    left = hk_star(HeckeElement.x(tab_perm(u)))
    return left * c * HeckeElement.x(tab_perm(v))


@lru_cache(maxsize=None)
def _perm_order(n: int):
    perms = sorted((Permutation(img) for img in _iter_perms(range(1, n + 1))),
                   key=lambda p: p.img)
    return tuple(perms), {p: i for i, p in enumerate(perms)}


@lru_cache(maxsize=None)
def _murphy_solver(n: int) -> LinearSolver:
    perms, pos = _perm_order(n)
    index = murphy_index(n)
    if len(index) != len(perms):
        raise AssertionError("cellular basis size must be n!")
    zero = _const(0)
    cols = []
    for lam, u, v in index:
        e = murphy_element(lam, u, v)
        col = [zero] * len(perms)
        for w, c in e.terms.items():
            col[pos[w]] = c
        cols.append(col)
    matrix = [[cols[j][i] for j in range(len(cols))]
              for i in range(len(perms))]
    return LinearSolver(matrix)


def hk_to_murphy(h: HeckeElement) -> dict:
    """Coordinates of h in the cellular basis: (lambda, u, v) -> coeff."""
    n = h.n
    perms, pos = _perm_order(n)
    zero = _const(0)
    rhs = [zero] * len(perms)
    for w, c in h.terms.items():
        rhs[pos[w]] = c
    coords = _murphy_solver(n).solve_vector(rhs)
    index = murphy_index(n)
    return {index[i]: c for i, c in enumerate(coords) if not c.is_zero()}


def murphy_to_hk(coords: dict, n: int) -> HeckeElement:
    out = HeckeElement.zero(n)
    for (lam, u, v), c in coords.items():
        out = out + murphy_element(lam, u, v).scale(c)
    return out


# -- Specht (cell) modules ----------------------------------------------------

def specht_basis(lam, n: int):
    return enumerate_std(lam, n)


def specht_action_matrix(lam, n: int, h: HeckeElement):
    """Matrix of h acting on the cell module C^lambda (rows = images).

    Row s of the result expresses (c_lambda X_{d(s)}) h in the Murphy basis
    of C^lambda, with coordinates indexed like specht_basis(lam, n).
    """
    lam = check_partition(lam)
    tabs = specht_basis(lam, n)
    col_of = {t: j for j, t in enumerate(tabs)}
    c_lam = hk_c_mu(lam, n)
    t_lam = superstandard(lam, n)
    zero = _const(0)
    rows = []
    for s in tabs:
        elt = c_lam * HeckeElement.x(tab_perm(s)) * h
        row = [zero] * len(tabs)
        for (mu, u, v), c in hk_to_murphy(elt).items():
            if mu == lam:
                if u != t_lam:
                    raise AssertionError(
                        "left tableau must stay maximal in the cell layer")
                row[col_of[v]] = c
            elif dominance(mu, lam) != "dominates":
                raise AssertionError(
                    "product escaped below the cell filtration layer")
        rows.append(row)
    return rows


# -- Jucys-Murphy elements -----------------------------------------------------

@lru_cache(maxsize=None)
def hk_jm(i: int, n: int) -> HeckeElement:
    """D_1 = 1 and D_i = X_{i-1} D_{i-1} X_{i-1}."""
    if not 1 <= i <= n:
        raise ValueError("index out of range")
    if i == 1:
        return HeckeElement.one(n)
    x = HeckeElement.gen(i - 1, n)
    return x * hk_jm(i - 1, n) * x


def hk_jm_sum(i: int, n: int) -> HeckeElement:
    """The transposition sum form: sum_{k<i} X_{(k,i)}."""
    if not 1 <= i <= n:
        raise ValueError("index out of range")
    out = HeckeElement.zero(n)
    for k in range(1, i):
        out = out + HeckeElement.x(Permutation.transposition(k, i, n))
    return out


def hk_content(t: StdTableau, k: int) -> CoeffFraction:
    """The eigenvalue q^{2(j-i)} where k sits in box (i,j) of t."""
    i, j = t.position_of(k)
    return _q_power(2 * (j - i))


def tab_dominance(s: StdTableau, t: StdTableau) -> str:
    """Dominance on standard tableaux via levelwise shape dominance."""
    return path_dominance(path_of_tableau(s), path_of_tableau(t))


# -- permutation modules --------------------------------------------------------

def hk_semistd_elt(S, t: StdTableau, mu) -> HeckeElement:
    """The sum over {s : mu(s) = S} of q^{l(d(s))} c_{st}."""
    from .combin import type_map

    nu = S.shape
    if t.shape != nu:
        raise ValueError("incompatible shapes")
    n = t.n
    out = HeckeElement.zero(n)
    for s in enumerate_std(nu, n):
        if type_map(s, mu) == S:
            coeff = _q_power(tab_perm(s).length())
            out = out + murphy_element(nu, s, t).scale(coeff)
    return out
