import json
import random
from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import given, strategies as st

from qgwa.algebra import Algebra, AlgebraError
from qgwa.localization import LocElement, invert_unit
from qgwa.morphisms import (EndoData, IsoCase, MorphismError, UnverifiedMapError, apply_morphism,
                            classify_affine, compose, dixmier_invert, identity, iso_candidate,
                            iso_case_holds, make_isomorphism, make_negative_aut, make_positive_endo,
                            make_scalar_aut, make_triangular_aut, match_negative_shape, psi_minus,
                            psi_minus_inverse, reduced_shape, require_verified, scalar_aut_params,
                            swap_matrix, verify_relations, z_type)
from qgwa.randgen import random_pbw, random_sl2
from qgwa.scalars import ParamConfig, ParamScalar
from qgwa.serialize import genmap_from_json

p, q, l, u = (ParamScalar.symbol(n) for n in "pqlu")


def fixture(name):
    text = resources.files("qgwa").joinpath("fixtures", name).read_text()
    return genmap_from_json(json.loads(text))


def L(alg, a=0, b=0, c=0, d=0, coeff=1):
    return LocElement(alg, {(a, b, c, d): coeff})


# -- fixtures and verification ---------------------------------------------------------

def test_phi_fixture_verifies():
    f = fixture("phi_2_3_5.json")
    assert not f.verified
    report = verify_relations(f)
    assert report.ok and not report.failures
    g = report.genmap
    A = f.domain
    assert apply_morphism(g, A.element("x*y*s*t")) == A.element("x*y*s*t") * 15
    assert scalar_aut_params(g) == (2, 3, 5)


def test_swap_generic_fails_with_residual():
    f = fixture("swap_generic.json")
    report = verify_relations(f)
    assert not report.ok
    names = [name for name, _ in report.failures]
    assert names and all(not r.is_zero() for _, r in report.failures)
    with pytest.raises(MorphismError):
        require_verified(f)


def test_swap_at_p_minus_one_verifies():
    f = fixture("swap_p_minus_one.json")
    assert verify_relations(f).ok


def test_positive_endo_fixture():
    f = require_verified(fixture("positive_endo.json"))
    assert z_type(f) == "positive"
    res = dixmier_invert(f)
    assert compose(f, res.inverse) == identity(f.domain)


def test_unverified_map_rejected(A):
    f = fixture("phi_2_3_5.json")
    with pytest.raises(UnverifiedMapError):
        apply_morphism(f, f.domain.gen("x"))
    with pytest.raises(UnverifiedMapError):
        compose(f, f)


@given(st.integers(0, 10 ** 6))
def test_scalar_map_is_multiplicative(seed):
    r = random.Random(seed)
    A = Algebra()
    f = make_scalar_aut(A, 2, 3, 5)
    a, b = random_pbw(r, A, 4), random_pbw(r, A, 4)
    assert apply_morphism(f, a * b) == apply_morphism(f, a) * apply_morphism(f, b)


def test_scalar_group_law(A):
    f = make_scalar_aut(A, 2, 3, p)
    g = make_scalar_aut(A, q, Fraction(1, 2), 7)
    assert compose(f, g) == make_scalar_aut(A, 2 * q, Fraction(3, 2), 7 * p)
    assert compose(f, make_scalar_aut(A, Fraction(1, 2), Fraction(1, 3), 1 / p)) == identity(A)
    with pytest.raises(MorphismError):
        make_scalar_aut(A, 0, 1, 1)


def test_triangular_composition(Aw):
    """w -> 2w + 3 after w -> 5w + 7 gives w -> 10w + 22"""
    f = make_triangular_aut(Aw, 1, 1, 1, 2, 3)
    g = make_triangular_aut(Aw, 1, 1, 1, 5, 7)
    w = Aw.gen("w")
    assert compose(f, g)["w"] == w * 10 + 22
    assert compose(g, f)["w"] == w * 10 + 17


def test_triangular_rejections(A, Aw):
    with pytest.raises(AlgebraError):
        make_triangular_aut(A, 1, 1, 1, 2, 3)
    with pytest.raises(MorphismError):
        make_triangular_aut(Aw, 1, 1, 1, 0, 3)
    with pytest.raises(MorphismError):
        make_triangular_aut(Aw, 1, 1, 1, 2, Aw.gen("x"))
    with pytest.raises(MorphismError):
        # central but not a scalar
        make_triangular_aut(Aw, 1, 1, 1, 2, Aw.gen("w"))


# -- isomorphisms -----------------------------------------------------------------------

@pytest.mark.parametrize("case,tgt", [
    (1, (p, q, l, u)),
    (2, (1 / p, q, 1 / l, 1 / u)),
    (3, (p, 1 / q, u, l)),
    (4, (1 / p, 1 / q, 1 / u, 1 / l)),
])
def test_iso_cases(case, tgt):
    cfg = ParamConfig.generic()
    src, dst = Algebra(cfg), Algebra(cfg, tgt)
    assert iso_case_holds(case, src.params, dst.params)
    f = make_isomorphism(IsoCase(case, 2, q, 3), src, dst)
    assert f.verified


def test_iso_falsification():
    cfg = ParamConfig.generic()
    s, t = (2, 3, 5, 7), (3, 3, 5, 7)
    a, b = Algebra(cfg, s), Algebra(cfg, t)
    for case in range(1, 5):
        assert not iso_case_holds(case, s, t)
        with pytest.raises(MorphismError):
            make_isomorphism(IsoCase(case), a, b)
        assert not verify_relations(iso_candidate(IsoCase(case), a, b)).ok


# -- positive endomorphisms and Dixmier inversion ----------------------------------------

def test_dixmier_example_d_one(B):
    """s -> s t needs psi with s -> s t^-1"""
    f = make_positive_endo(B, EndoData(2, 3, 5, i=1, c=1, d=1, e=0, f=1))
    res = dixmier_invert(f)
    assert res.psi["s"] == L(B, 0, 1, -1)
    assert res.psi["t"] == L(B, 0, 0, 1)
    assert reduced_shape(res.residual) is not None
    ident = identity(B)
    assert compose(f, res.inverse) == ident and compose(res.inverse, f) == ident


def test_dixmier_root_of_unity_example():
    """at p = 2, q = 4: p^2 q^-1 = 1 allows s -> z^2 s t"""
    alg = Algebra(ParamConfig.specialized(2, 4, 1, 1), kind="A-loc")
    data = EndoData(2, 3, 5, i=1, j=0, k=1, m=2, n=0)
    f = make_positive_endo(alg, data)
    assert f["s"] == L(alg, 2, 1, 0, coeff=3)
    res = dixmier_invert(f)
    assert compose(res.inverse, f) == identity(alg)


def test_generic_m_rejected(B):
    with pytest.raises(MorphismError):
        make_positive_endo(B, EndoData(1, 1, 1, m=1))
    with pytest.raises(MorphismError):
        make_positive_endo(B, EndoData(1, 1, 1, c=2, d=1, e=1, f=2))


def test_positive_endo_needs_trivial_twist(Aloc):
    with pytest.raises(AlgebraError):
        make_positive_endo(Aloc, EndoData(1, 1, 1))


@given(st.integers(0, 10 ** 6))
def test_dixmier_random(seed):
    r = random.Random(seed)
    B = Algebra(ParamConfig({"l": 1, "u": 1}), kind="A-loc")
    c, d, e, f_ = random_sl2(r)
    data = EndoData(r.randint(1, 5), r.randint(1, 5), -r.randint(1, 5), i=r.randint(-2, 2),
                    c=c, d=d, e=e, f=f_)
    f = make_positive_endo(B, data)
    assert f.z_image() == B.gen("z")
    inv = dixmier_invert(f).inverse
    assert compose(f, inv) == identity(B)


# -- negative type -------------------------------------------------------------------------

def test_psi_minus(B):
    pm, pmi = psi_minus(B), psi_minus_inverse(B)
    assert pm.z_image() == invert_unit(B.gen("z")) / p
    ident = identity(B)
    assert compose(pm, pmi) == ident and compose(pmi, pm) == ident
    assert z_type(pm) == z_type(pmi) == "negative"


def test_negative_parity(B):
    f = make_positive_endo(B, EndoData(2, 3, 5, i=1, c=2, d=1, e=1, f=1))
    neg = make_negative_aut(f)
    assert z_type(neg) == "negative"
    assert z_type(compose(neg, neg)) == "positive"
    with pytest.raises(MorphismError):
        make_negative_aut(neg)


def test_negative_shape_sign(B):
    """the y-image carries a leading minus; the unsigned form never matches"""
    for data in (EndoData(2, 3, 5), EndoData(p, 3, q, i=2, c=2, d=1, e=1, f=1),
                 EndoData(7, 1, 1, i=-1, c=1, d=3, e=0, f=1)):
        neg = make_negative_aut(make_positive_endo(B, data))
        shape = match_negative_shape(neg)
        assert shape is not None
        assert shape.i == data.i
        assert match_negative_shape(neg, literal_sign=True) is None


# -- affine maps ------------------------------------------------------------------------------

@pytest.mark.parametrize("pv", [-1, 2, 3])
@pytest.mark.parametrize("qv", [-1, 5])
def test_classify_grid(pv, qv):
    cfg = ParamConfig.specialized(pv, qv, 1, 1)
    expect = {"diagonal": True, "xy-swap": pv == -1, "st-swap": qv == -1,
              "both-swaps": pv == -1 and qv == -1}
    for kind, ok in expect.items():
        res = classify_affine(cfg, swap_matrix(kind, 2, 3, 5))
        assert res.verified == ok
        assert res.family == (kind if ok else None)


def test_classify_rejects_bad_configs():
    with pytest.raises(AlgebraError):
        classify_affine(ParamConfig.generic(), swap_matrix("diagonal"))
    with pytest.raises(AlgebraError):
        classify_affine(ParamConfig.specialized(2, 3, 2, 1), swap_matrix("diagonal"))
    with pytest.raises(AlgebraError):
        classify_affine(ParamConfig.specialized(1, 3, 1, 1), swap_matrix("diagonal"))


def test_classify_unclassified_and_failing():
    cfg = ParamConfig.specialized(2, 3, 1, 1)
    mixed = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]]
    assert not classify_affine(cfg, mixed).verified
    shifted = classify_affine(cfg, swap_matrix("diagonal"), [0, 0, 1, 0])
    assert not shifted.verified
