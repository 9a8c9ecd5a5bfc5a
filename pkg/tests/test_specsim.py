from fractions import Fraction

import pytest

from cellalg.combin import maximal_path
from cellalg.exactring import (
    BMW_VARS,
    BRAUER_VARS,
    Specialization,
    parse_fraction,
)
from cellalg.specsim import (
    CERTIFIED_NOT_SEMISIMPLE,
    CERTIFIED_SEMISIMPLE,
    INCONCLUSIVE,
    Verdict,
    certify,
    conjecture_evidence,
    conjecture_poly,
    content_vector,
    gram_rank_certify,
    hom_obstruction,
    necessary_condition_note,
)


def bqr(s):
    return parse_fraction(s, BMW_VARS)


def bz(s):
    return parse_fraction(s, BRAUER_VARS)


SPEC_R_Q3 = Specialization.parse("r=-q^-3", BMW_VARS)
SPEC_Z4 = Specialization.parse("z=4", BRAUER_VARS)


# -- content vectors -----------------------------------------------------------------

def test_content_vector_down_step_collision():
    s = ((), (1,), (2,), (1,))
    t = ((), (1,), (2,), (3,))
    assert content_vector("bmw", s, SPEC_R_Q3) == \
        tuple(parse_fraction(x, ("q",)) for x in ("1", "q^2", "q^4"))
    assert content_vector("bmw", s, SPEC_R_Q3) == \
        content_vector("bmw", t, SPEC_R_Q3)
    assert content_vector("bmw", s) != content_vector("bmw", t)
    assert content_vector("bmw", s)[2] == bqr("q^-2 * r^-2")


def test_content_vector_brauer_example():
    t = ((), (1,), (1, 1), (1,))
    u = ((), (1,), (1, 1), (1, 1, 1))
    expected = tuple(parse_fraction(x, ()) for x in ("0", "-1", "-2"))
    assert content_vector("brauer", t, SPEC_Z4) == expected
    assert content_vector("brauer", u, SPEC_Z4) == expected
    assert content_vector("brauer", t) != content_vector("brauer", u)


def test_content_vector_one_row_is_all_additions():
    for n in (2, 3, 4):
        vec = content_vector("bmw", maximal_path((n,), n))
        assert vec == tuple(bqr("q^{}".format(2 * k)) for k in range(n))


# -- the eigenvalue-vector criterion -------------------------------------------------

@pytest.mark.parametrize("algebra,nmax", [("bmw", 4), ("brauer", 5)])
def test_symbolic_certify_semisimple(algebra, nmax):
    for n in range(1, nmax + 1):
        verdict = certify(algebra, n)
        assert verdict.outcome == CERTIFIED_SEMISIMPLE
        assert verdict.evidence == []


def test_certify_collision_two_parameter():
    verdict = certify("bmw", 3, SPEC_R_Q3)
    assert verdict.outcome == INCONCLUSIVE
    s = ((), (1,), (2,), (1,))
    t = ((), (1,), (2,), (3,))
    pairs = [(w[0], w[1]) for w in verdict.evidence]
    assert (s, t) in pairs
    shared = next(w[2] for w in verdict.evidence if (w[0], w[1]) == (s, t))
    assert shared == tuple(parse_fraction(x, ("q",))
                           for x in ("1", "q^2", "q^4"))


def test_certify_collision_one_parameter():
    verdict = certify("brauer", 3, SPEC_Z4)
    assert verdict.outcome == INCONCLUSIVE
    t = ((), (1,), (1, 1), (1,))
    u = ((), (1,), (1, 1), (1, 1, 1))
    pairs = [(w[0], w[1]) for w in verdict.evidence]
    assert (t, u) in pairs
    shared = next(w[2] for w in verdict.evidence if (w[0], w[1]) == (t, u))
    assert shared == tuple(parse_fraction(x, ()) for x in ("0", "-1", "-2"))


def test_certify_never_negative():
    for spec in (SPEC_R_Q3, None):
        assert certify("bmw", 3, spec).outcome != CERTIFIED_NOT_SEMISIMPLE
    for text in ("z=4", "z=1", "z=0"):
        spec = Specialization.parse(text, BRAUER_VARS)
        assert certify("brauer", 3, spec).outcome != CERTIFIED_NOT_SEMISIMPLE


# -- Gram-rank certification ---------------------------------------------------------

def test_gram_rank_follow_up_semisimple():
    assert gram_rank_certify("bmw", 3, SPEC_R_Q3).outcome == \
        CERTIFIED_SEMISIMPLE
    assert gram_rank_certify("brauer", 3, SPEC_Z4).outcome == \
        CERTIFIED_SEMISIMPLE


def test_gram_rank_detects_degeneracy():
    verdict = gram_rank_certify("brauer", 3,
                                Specialization.parse("z=1", BRAUER_VARS))
    assert verdict.outcome == CERTIFIED_NOT_SEMISIMPLE
    assert [(lam, r, dim) for lam, r, dim, _rad in verdict.evidence] == \
        [((1,), 1, 3)]
    assert verdict.evidence[0][3] == 2  # radical dimension


def test_verdict_cross_check_soundness():
    # whenever the rank route certifies a negative, the eigenvalue route
    # must not certify a positive
    for text in ("z=1", "z=0", "z=-2", "z=2", "z=4"):
        spec = Specialization.parse(text, BRAUER_VARS)
        for n in (2, 3, 4):
            g = gram_rank_certify("brauer", n, spec)
            c = certify("brauer", n, spec)
            if g.outcome == CERTIFIED_NOT_SEMISIMPLE:
                assert c.outcome != CERTIFIED_SEMISIMPLE


def test_gram_rank_symbolic_generic():
    assert gram_rank_certify("brauer", 4).outcome == CERTIFIED_SEMISIMPLE
    assert gram_rank_certify("bmw", 3).outcome == CERTIFIED_SEMISIMPLE


# -- Hom obstructions ----------------------------------------------------------------

def test_hom_obstruction_brauer_example():
    assert hom_obstruction("brauer", (3,), (1,), SPEC_Z4) is False
    spec_neg3 = Specialization.parse("z=-3", BRAUER_VARS)
    assert hom_obstruction("brauer", (3,), (1,), spec_neg3) is False
    spec_m2 = Specialization.parse("z=-2", BRAUER_VARS)
    assert hom_obstruction("brauer", (3,), (1,), spec_m2) is True


def test_hom_obstruction_equal_shapes():
    assert hom_obstruction("bmw", (2, 1), (2, 1)) is True
    assert hom_obstruction("brauer", (2, 1), (2, 1)) is True


def test_hom_obstruction_bmw_example():
    assert hom_obstruction("bmw", (3,), (1,), SPEC_R_Q3) is True
    assert hom_obstruction("bmw", (3,), (1,)) is False


def test_hom_obstruction_parity_error():
    with pytest.raises(ValueError):
        hom_obstruction("bmw", (2,), (1,))
    with pytest.raises(ValueError):
        hom_obstruction("brauer", (1,), (3,))


# -- necessary-condition notes -------------------------------------------------------

def test_note_power_match():
    note = necessary_condition_note(SPEC_R_Q3)
    assert note["r_power_of_q"] == (-1, -3)
    assert note["matched"] is True


def test_note_generic_no_match():
    generic = Specialization(BMW_VARS, {}, BMW_VARS)
    note = necessary_condition_note(generic)
    assert note["q_root_of_unity"] is None
    assert note["r_power_of_q"] is None
    assert note["matched"] is False


def test_note_root_of_unity_via_minimal_polynomial():
    spec = Specialization(BMW_VARS, {"q": 2, "r": 3})
    note = necessary_condition_note(spec, q_minimal_poly=[1, 1, 1, 1, 1])
    assert note["q_root_of_unity"] == 5
    note2 = necessary_condition_note(spec, q_minimal_poly=[1, 1])  # q = -1
    assert note2["q_root_of_unity"] == 2
    note3 = necessary_condition_note(spec, q_minimal_poly=[1, 0, 1])
    assert note3["q_root_of_unity"] == 4


# -- conjecture harness --------------------------------------------------------------

def test_conjecture_polynomials():
    assert conjecture_poly(1) == bz("(z+2)*(z-1)")
    assert conjecture_poly(2) == bz("(z+4)*(z-2)*(z+2)*(z-1)")
    assert conjecture_poly(3) == bz("(z+6)*(z-3)*(z+1)*(z+4)*(z-2)*(z+2)*(z-1)")


def test_conjecture_evidence_three_strands():
    report = conjecture_evidence(3)
    assert report["lam"] == (1,)
    assert report["k"] == 1
    assert report["roots"] == [Fraction(-2), Fraction(1)]
    assert report["agrees"] is True
    assert report["nonlinear_remainder_degree"] == 0


def test_conjecture_evidence_five_strands():
    report = conjecture_evidence(5)
    assert report["lam"] == (1,)
    assert report["k"] == 2
    assert report["roots"] == [Fraction(-4), Fraction(-2), Fraction(1),
                               Fraction(2)]
    assert report["agrees"] is True
    assert report["nonlinear_remainder_degree"] == 0


def test_conjecture_evidence_even_levels_reported_honestly():
    # the determinants at even levels are computed exactly and compared
    # verbatim; the harness reports, it does not assert
    report = conjecture_evidence(4)
    assert report["lam"] == ()
    assert report["roots"] == [Fraction(-2), Fraction(0), Fraction(1)]
    assert Fraction(0) in report["expected_roots"]
    report2 = conjecture_evidence(2)
    assert report2["roots"] == [Fraction(0)]
