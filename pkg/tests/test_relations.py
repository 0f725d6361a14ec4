from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ninthschur.relations import (E, H, Factor, PolyBackend, RelationInstance, S, Term, VandermondeBackend, ZetaBackend,
                                  dj_relation, evaluate_terms, giambelli_formula, giambelli_quadratic, jt_formula,
                                  kleber_classical, plucker_first_step, plucker_quadratic, rectangle_general,
                                  rectangle_general_suite, rectangle_relation, skew_shapes_in, verify,
                                  zeta_corollaries)
from ninthschur.shapes import Partition, ShapeError, SkewShape, as_skew, frobenius


def _terms(rel):
    return [(t.coeff,) + tuple((tuple(f.outer), f.shift) for f in t.factors) for t in rel.lhs + rel.rhs]


# [TRIVIAL] --------------------------------------------------------------------

def test_factor_zero_convention():
    assert S([1, 2]).shape() is None
    assert S(None).shape() is None
    assert H(-1, 0).shape() is None
    assert E(-2, 0).shape() is None
    assert str(S([2, 1], [1], -1)) == "S^(r-1)[2,1/1]"
    assert str(H(0, 2)) == "S^(r+2)[∅]"


def test_min_r_and_instance_id():
    rel = RelationInstance("t", {"b": 1, "a": (1, 2)}, [Term(1, (S([2, 2, 1], (), -1),))], [])
    assert rel.min_r() == 4
    assert rel.instance_id == "t[a=(1,2);b=1]"


def test_builder_preconditions():
    with pytest.raises(ShapeError):
        dj_relation((3,), "H")
    with pytest.raises(ShapeError):
        rectangle_relation(0, 1)
    with pytest.raises(ShapeError):
        rectangle_general(2, 2, 3, 0)
    with pytest.raises(ShapeError):
        plucker_quadratic((2, 1), 3)
    with pytest.raises(ValueError):
        verify(rectangle_relation(1, 1), mode="nope")


# [PAPER] ----------------------------------------------------------------------

PLUCKER_ROW = [
    (1, ((3, 2, 2, 1), 0), ((3, 2, 2, 1), -1)),
    (1, ((2, 1, 1, 1), 0), ((4, 3, 3, 1), -1)),
    (1, ((3, 3, 3, 3), 0), ((1, 1, 1, 1), -1)),
    (1, ((3, 3, 3, 3, 2), 0), ((1, 1), -1)),
    (1, ((3, 2, 2, 2), 0), ((3, 2, 1, 1), -1)),
    (1, ((3, 2, 2, 2, 2), 0), ((3, 2), -1)),
    (-1, ((3, 3, 3, 3, 3), 0), ((1,), -1)),
]

PLUCKER_COLUMN = [
    (1, ((3, 2, 2, 1), 0), ((3, 2, 2, 1), 1)),
    (1, ((3, 2, 1), 0), ((3, 2, 2, 2, 1), 1)),
    (1, ((3, 3, 3, 3), 0), ((3, 1), 1)),
    (1, ((4, 4, 3, 3), 0), ((1, 1), 1)),
    (1, ((3, 3, 3, 1), 0), ((3, 1, 1, 1), 1)),
    (1, ((4, 4, 3, 1), 0), ((1, 1, 1, 1), 1)),
    (-1, ((4, 4, 4, 4), 0), ((), 1)),
]


@pytest.mark.parametrize("variant,expected", [("row", PLUCKER_ROW), ("column", PLUCKER_COLUMN)])
def test_plucker_worked_instance(variant, expected):
    rel = plucker_quadratic((3, 2, 2, 1), 2, variant)
    assert _terms(rel) == expected
    assert verify(rel).result == "proved-equal"


@pytest.mark.parametrize("variant", ["H", "E"])
def test_dj_worked_instance(variant):
    rel = dj_relation(((5, 4, 4, 3), (3, 1, 1)), variant)
    assert verify(rel).result == "proved-equal"


def test_dj_worked_instance_terms():
    rel = dj_relation(((5, 4, 4, 3), (3, 1, 1)), "H")
    (lhs,) = rel.lhs
    assert [(f.outer, f.inner, f.shift) for f in lhs.factors] == [
        ((5, 4, 4, 3), (3, 1, 1, 0), 0), ((4, 4), (1, 1), -1)]


def test_rectangle_general_worked_display():
    rel = rectangle_general(3, 3, 1, 2)
    assert _terms(rel) == [
        (-1, ((4, 4, 4, 4), 0), ((3, 2), -1)),
        (1, ((4, 4, 4), 0), ((3, 3, 3), -1)),
        (-1, ((2, 2, 2), 0), ((5, 5, 5), -1)),
        (-1, ((4, 4, 4, 3), 0), ((3, 3), -1)),
    ]
    assert verify(rel).result == "proved-equal"


# [DERIVED] --------------------------------------------------------------------

@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (2, 3), (3, 3)])
def test_rectangle_relation(p, q):
    assert verify(rectangle_relation(p, q)).result == "proved-equal"


def test_rectangle_general_a_plus_b_two_is_rectangle_relation():
    for a in range(3):
        assert verify(rectangle_general(3, 2, a, 2 - a)).result == "proved-equal"


def test_rectangle_general_nondegenerate_all_pass():
    rels = rectangle_general_suite(3, include_degenerate=False)
    assert len(rels) == 69
    assert all(verify(r).ok for r in rels)


@pytest.mark.xfail(strict=True, reason="a = b = 0: left side vanishes, right side is minus the rectangle relation")
@pytest.mark.parametrize("p,q", [(1, 1), (2, 2), (3, 3)])
def test_rectangle_general_degenerate(p, q):
    assert verify(rectangle_general(p, q, 0, 0)).ok


def test_rectangle_general_degenerate_residual_is_rectangle_relation():
    # at a = b = 0 the stated right side equals -(S[p+1|q] S[p-1|q]^{(r-1)})
    for p, q in ((2, 2), (3, 2)):
        deg = rectangle_general(p, q, 0, 0)
        rect = rectangle_relation(p, q)
        b = PolyBackend()
        r = max(deg.min_r(), rect.min_r())
        assert evaluate_terms(deg.lhs, b, r) == 0
        assert evaluate_terms(deg.rhs, b, r) == -evaluate_terms(rect.lhs, b, r)


@pytest.mark.parametrize("shape", ["3,3,1", "4,3,2/1", "3,2,2/2,1", "4,4,2,1/2"])
def test_giambelli_quadratic(shape):
    sh = as_skew(shape)
    variant = "skew" if frobenius(sh.inner).rank else "nonskew"
    assert verify(giambelli_quadratic(sh, variant)).result == "proved-equal"


@pytest.mark.parametrize("shape", ["2,1", "3,2/1", "2,2,1/1"])
def test_formula_relations_exact_and_modular(shape):
    for rel in (giambelli_formula(shape), jt_formula(shape), jt_formula(shape, dual=True)):
        assert verify(rel).result == "proved-equal"
        v = verify(rel, "modular", seed=5, trials=3)
        assert v.result == "equal-with-confidence" and v.epsilon < 1e-50


def test_modular_catches_a_false_relation():
    bad = RelationInstance("bad", {}, [Term(1, (S([2]),))], [Term(1, (S([1, 1]),))])
    v = verify(bad, "modular", seed=0, trials=2)
    assert v.result == "unequal" and not v.ok
    assert v.to_dict()["mode"] == "modular"


@settings(max_examples=15)
@given(st.sampled_from([s for s in skew_shapes_in((3, 3, 2)) if len(s.outer) >= 2]))
def test_dj_h_property(sh):
    assert verify(dj_relation(sh, "H")).ok


@pytest.mark.parametrize("lam,d", [((2, 1), 1), ((2, 1), 2), ((3, 2, 2, 1), 2), ((4, 2, 1), 3)])
def test_plucker_first_step(lam, d):
    assert all(x == 0 for x in plucker_first_step(lam, d))


@pytest.mark.parametrize("lam,d", [((2, 1), 1), ((2, 2), 1), ((3, 2, 1), 2)])
@pytest.mark.parametrize("n", [2, 3])
def test_kleber_classical_routes(lam, d, n):
    assert kleber_classical(lam, d, n).ok
    assert kleber_classical(lam, d, n, route="ssyt").ok


def test_vandermonde_backend_caches():
    b = VandermondeBackend(2)
    sh = SkewShape(Partition((1,)))
    assert b.value(sh, 2, 0) is b.value(sh, 2, 0)


def test_zeta_backend_single_cell():
    # ζ^M over one cell with exponent 2 is the harmonic number H^{(2)}_M
    b = ZetaBackend(lambda c: 2, 4)
    assert b.value(SkewShape(Partition((1,))), 0, 0) == sum(Fraction(1, k * k) for k in range(1, 5))


@pytest.mark.parametrize("rel", [dj_relation("3,2,1/1", "H"), rectangle_relation(2, 2),
                                 plucker_quadratic((2, 1), 1, "column"), giambelli_formula("3,2/1")],
                         ids=lambda r: r.theorem)
def test_zeta_corollaries_at_finite_M(rel):
    assert zeta_corollaries(rel, lambda c: (1, 2, 3)[c % 3], 5).result == "proved-equal"


def test_factor_is_hashable():
    assert len({Factor((1,)), Factor((1,))}) == 1
