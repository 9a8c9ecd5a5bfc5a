"""Semisimplicity certification for the two diagram-algebra towers.

The Jucys-Murphy eigenvalue vector of an up-down path gives a sufficient
criterion for semisimplicity: if paths of distinct comparable shapes never
share an eigenvalue vector, the algebra is semisimple.  The criterion is
one-directional, so failures are reported as Inconclusive with witnesses;
a definite negative answer only ever comes from Gram-rank computations.
"""

from fractions import Fraction
from functools import lru_cache

from . import bmw as _bmw
from . import brauer as _brauer
from .combin import dominance, dominance_key, partitions_of, path_key
from .exactring import (
    BMW_VARS,
    BRAUER_VARS,
    CoeffFraction,
    Specialization,
)
from .linalg import rank
from .towers import ordered_paths, path_content

CERTIFIED_SEMISIMPLE = "CertifiedSemisimple"
CERTIFIED_NOT_SEMISIMPLE = "CertifiedNotSemisimple"
INCONCLUSIVE = "Inconclusive"


class Verdict:
    """Outcome of a certification run plus its supporting evidence."""

    __slots__ = ("outcome", "evidence")

    def __init__(self, outcome, evidence):
        self.outcome = outcome
        self.evidence = list(evidence)

    def __repr__(self):
        return "Verdict({}, {} witnesses)".format(self.outcome,
                                                  len(self.evidence))


def _source_vars(algebra):
    if algebra == "bmw":
        return BMW_VARS
    if algebra == "brauer":
        return BRAUER_VARS
    raise ValueError("unknown algebra {!r}".format(algebra))


def _layer_shapes(n):
    out = []
    for f in range(n // 2 + 1):
        out.extend(partitions_of(n - 2 * f))
    return sorted(out, key=dominance_key)


def content_vector(algebra, path, spec=None):
    """The tuple (P_t(1), ..., P_t(n)), optionally specialized."""
    values = [path_content(algebra, path, k) for k in range(1, len(path))]
    if spec is not None:
        values = [spec.apply(v) for v in values]
    return tuple(values)


def certify(algebra, n, spec=None):
    """Eigenvalue-vector criterion: semisimple if no two paths of distinct
    comparable shapes share a content vector.  Never certifies the negative;
    collisions are reported as Inconclusive with the colliding path pairs."""
    shapes = _layer_shapes(n)
    vectors = {
        lam: [(t, content_vector(algebra, t, spec))
              for t in ordered_paths(lam, n)]
        for lam in shapes}
    witnesses = []
    for lam in shapes:
        for mu in shapes:
            if lam == mu or dominance(lam, mu) != "dominates":
                continue
            for s, vs in vectors[lam]:
                for t, vt in vectors[mu]:
                    if vs == vt:
                        witnesses.append((s, t, vs))
    if not witnesses:
        return Verdict(CERTIFIED_SEMISIMPLE, [])
    witnesses.sort(key=lambda w: (path_key(w[0]), path_key(w[1])))
    return Verdict(INCONCLUSIVE, witnesses)


def gram_rank_certify(algebra, n, spec=None):
    """Rank criterion: semisimple iff every specialized Gram matrix has full
    rank; a rank drop certifies non-semisimplicity (witness: shape, rank,
    dimension, radical dimension)."""
    gram = _bmw.bmw_gram if algebra == "bmw" else _brauer.br_gram
    drops = []
    report = []
    for lam in _layer_shapes(n):
        g = gram(lam, n)
        if spec is not None:
            g = [[spec.apply(x) for x in row] for row in g]
        dim = len(g)
        r = rank([list(row) for row in g])
        report.append((lam, r, dim))
        if r < dim:
            drops.append((lam, r, dim, dim - r))
    if drops:
        return Verdict(CERTIFIED_NOT_SEMISIMPLE, drops)
    return Verdict(CERTIFIED_SEMISIMPLE, report)


def _content_sum(lam):
    return sum(j - i for i, row in enumerate(lam) for j in range(row))


def hom_obstruction(algebra, lam, mu, spec=None):
    """Whether the necessary eigenvalue identity for a nonzero module
    homomorphism S^lam -> S^mu holds; False certifies Hom = 0."""
    lam, mu = tuple(lam), tuple(mu)
    diff = sum(lam) - sum(mu)
    if diff < 0 or diff % 2:
        raise ValueError("need |lam| >= |mu| with matching parity")
    f = diff // 2
    vars = _source_vars(algebra)
    if algebra == "bmw":
        r = CoeffFraction.var("r", vars)
        q = CoeffFraction.var("q", vars)
        lhs = r ** (2 * f) * q ** (2 * _content_sum(lam))
        rhs = q ** (2 * _content_sum(mu))
    else:
        z = CoeffFraction.var("z", vars)
        lhs = CoeffFraction.const(_content_sum(lam) - _content_sum(mu), vars)
        rhs = (CoeffFraction.const(1, vars) - z) * CoeffFraction.const(f, vars)
    if spec is not None:
        lhs, rhs = spec.apply(lhs), spec.apply(rhs)
    return lhs == rhs


def _is_root_of_unity(x, bound):
    if x.is_zero():
        return None
    one = CoeffFraction.const(1, x.vars)
    acc = one
    for k in range(1, bound + 1):
        acc = acc * x
        if acc == one:
            return k
    return None


def _divides_unity_poly(coeffs, bound):
    """Order k <= bound such that the monic rational polynomial (ascending
    coefficients) divides x^k - 1, if any."""
    coeffs = [Fraction(c) for c in coeffs]
    if not coeffs or coeffs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    deg = len(coeffs) - 1
    if deg == 0:
        return None
    for k in range(1, bound + 1):
        rem = [Fraction(0)] * k
        rem[0] = Fraction(-1)
        target = ([Fraction(0)] * k) + [Fraction(1)]
        target[0] = Fraction(-1)
        # long division of x^k - 1 by the candidate
        work = list(target)
        while len(work) - 1 >= deg and any(work):
            lead = work[-1] / coeffs[-1]
            shift = len(work) - 1 - deg
            for i, c in enumerate(coeffs):
                work[shift + i] -= lead * c
            while len(work) > 1 and work[-1] == 0:
                work.pop()
        if all(c == 0 for c in work):
            return k
    return None


def necessary_condition_note(spec, bound=24, q_minimal_poly=None):
    """Informational check of the coarse non-semisimplicity prerequisites
    for the two-parameter algebra: q a root of unity (bounded order, or via
    a supplied minimal polynomial) or r = +/- q^k with |k| <= bound."""
    if spec.source_vars != BMW_VARS:
        raise ValueError("expected a two-parameter specialization")
    q = spec.assignment["q"]
    r = spec.assignment["r"]
    note = {"bound": bound, "q_root_of_unity": None, "r_power_of_q": None}
    if q_minimal_poly is not None:
        note["q_root_of_unity"] = _divides_unity_poly(q_minimal_poly, bound)
    else:
        note["q_root_of_unity"] = _is_root_of_unity(q, bound)
    for k in range(-bound, bound + 1):
        power = q ** k
        if r == power:
            note["r_power_of_q"] = (1, k)
            break
        if r == -power:
            note["r_power_of_q"] = (-1, k)
            break
    note["matched"] = (note["q_root_of_unity"] is not None
                       or note["r_power_of_q"] is not None)
    return note


@lru_cache(maxsize=None)
def conjecture_poly(i):
    """The polynomial p_i(z): p_1 = (z+2)(z-1) and
    p_i = (z+2i)(z-i)(z+i-2)p_{i-1} for odd i, (z+2i)(z-i)p_{i-1} even."""
    if i < 1:
        raise ValueError("index must be positive")
    z = CoeffFraction.var("z", BRAUER_VARS)

    def shifted(c):
        return z + CoeffFraction.const(c, BRAUER_VARS)

    if i == 1:
        return shifted(2) * shifted(-1)
    p = shifted(2 * i) * shifted(-i) * conjecture_poly(i - 1)
    if i % 2:
        p = p * shifted(i - 2)
    return p


def _det(matrix):
    """Determinant over the fraction field by elimination with pivoting."""
    m = [list(row) for row in matrix]
    k = len(m)
    vars = m[0][0].vars if k else BRAUER_VARS
    det = CoeffFraction.const(1, vars)
    for col in range(k):
        pivot = next((a for a in range(col, k) if not m[a][col].is_zero()),
                     None)
        if pivot is None:
            return CoeffFraction.const(0, vars)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for a in range(col + 1, k):
            if m[a][col].is_zero():
                continue
            factor = m[a][col] * inv
            m[a] = [x - factor * y for x, y in zip(m[a], m[col])]
    return det


def _poly_coeffs(x):
    """Ascending rational coefficient list of a univariate fraction that is
    actually a polynomial (after clearing the constant denominator)."""
    den = x.den
    if any(e != (0,) for e in den):
        raise ValueError("not a polynomial")
    d = den.get((0,), 1)
    deg = max((e[0] for e in x.num), default=0)
    out = [Fraction(0)] * (deg + 1)
    for (e,), c in x.num.items():
        out[e] = Fraction(c, d)
    return out


def _linear_roots(coeffs):
    """Split off rational roots: returns (multiset of roots as a sorted list,
    remaining ascending coefficients)."""
    coeffs = [Fraction(c) for c in coeffs]
    roots = []
    while len(coeffs) > 1:
        lead = coeffs[-1]
        low = next(i for i, c in enumerate(coeffs) if c != 0)
        if low > 0:
            roots.extend([Fraction(0)] * low)
            coeffs = coeffs[low:]
            continue
        candidates = set()
        a0 = coeffs[0]
        for p in _divisors(a0.numerator * lead.denominator):
            for q in _divisors(lead.numerator * a0.denominator):
                candidates.add(Fraction(p, q))
                candidates.add(Fraction(-p, q))
        found = None
        for cand in sorted(candidates):
            if _poly_eval_at(coeffs, cand) == 0:
                found = cand
                break
        if found is None:
            break
        coeffs = _divide_linear(coeffs, found)
        roots.append(found)
    return sorted(roots), coeffs


def _divisors(a):
    a = abs(a)
    if a == 0:
        return [1]
    return [d for d in range(1, a + 1) if a % d == 0]


def _poly_eval_at(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divide_linear(coeffs, root):
    """Exact division by (x - root), ascending coefficients."""
    d = len(coeffs) - 1
    out = [Fraction(0)] * d
    carry = coeffs[d]
    for i in range(d - 1, -1, -1):
        out[i] = carry
        carry = coeffs[i] + carry * root
    if carry != 0:
        raise AssertionError("inexact linear division")
    return out


def conjecture_evidence(n):
    """Compare the rational root set of the Gram determinant of the smallest
    one-parameter cell module at level n with the conjectured polynomial."""
    if n < 2:
        raise ValueError("need n >= 2")
    k = (n - 1) // 2 if n % 2 else n // 2
    lam = (1,) if n % 2 else ()
    det = _det(_brauer.br_gram(lam, n))
    roots, remainder = _linear_roots(_poly_coeffs(det))
    expected, _ = _linear_roots(_poly_coeffs(conjecture_poly(k)))
    expected = set(expected)
    if n % 2 == 0:
        expected.add(Fraction(0))
    report = {
        "n": n,
        "k": k,
        "lam": lam,
        "roots": sorted(set(roots)),
        "expected_roots": sorted(expected),
        "agrees": set(roots) == expected,
        "nonlinear_remainder_degree": len(remainder) - 1,
    }
    return report
