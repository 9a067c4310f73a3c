import pytest
import sympy

from qgwa.algebra import Algebra, AlgebraError
from qgwa.linalg import nullspace, rref, solve
from qgwa.localization import QuantumTorus, torus_matrix
from qgwa.probes import center_scan, normal_witness, normality_check, q_integer
from qgwa.scalars import ParamConfig, ParamScalar

p = ParamScalar.symbol("p")


def test_nullspace_matches_sympy():
    from fractions import Fraction as F
    rows = [[1, 2, 3, 4], [2, 4, 6, 8], [1, 0, 1, 0]]
    sparse = [{j: F(v) for j, v in enumerate(r) if v} for r in rows]
    basis = nullspace(sparse, 4, F(1))
    want = sympy.Matrix(rows).nullspace()
    assert len(basis) == len(want)
    for vec in basis:
        for r in rows:
            assert sum(r[j] * v for j, v in vec.items()) == 0


def test_rref_over_rational_functions():
    rows = [{0: p, 1: ParamScalar(1)}, {0: p ** 2, 1: p}]
    red, piv = rref(rows)
    assert len(red) == 1
    assert nullspace(rows, 2, ParamScalar(1))


def test_solve_inconsistent():
    assert solve([{0: 1}, {0: 1}], [1, 2], 1) is None
    assert solve([{0: 2, 1: 1}], [4], 2) is not None


def test_center_of_A(A):
    res = center_scan(A, 4)
    assert res.dimension == 1
    assert res.basis[0] == 1


def test_center_of_A_w(Aw):
    res = center_scan(Aw, 3)
    w = Aw.gen("w")
    assert [b.pretty() for b in res.basis] == ["(1)", "w", "w^2", "w^3"]
    assert res.basis[3] == w ** 3


def test_center_of_torus(A):
    res = center_scan(QuantumTorus(torus_matrix(A)), 3)
    assert res.summary() == {"dimension": 1, "max_degree": 3}


@pytest.mark.parametrize("kind,dims", [("A", [1, 1, 1, 1]), ("A-w", [2, 3, 4, 5])])
def test_center_dimension_monotone(kind, dims):
    alg = Algebra(kind=kind)
    got = [center_scan(alg, D).dimension for D in range(1, 5)]
    assert got == dims


def test_root_of_unity_center_grows():
    """at p = q = -1 with l = u = 1, x^2 and s^2 are central"""
    alg = Algebra(ParamConfig.specialized(-1, -1, 1, 1))
    res = center_scan(alg, 2)
    assert res.dimension > 1


def test_center_scan_bad_inputs(A):
    with pytest.raises(ValueError):
        center_scan(A, 0)
    with pytest.raises(AlgebraError):
        center_scan(A.with_kind("A-loc"), 2)


def test_normality(A):
    z, s, t, x = (A.gen(g) for g in "zstx")
    assert normality_check(z)
    assert normality_check(s)
    assert normality_check(t)
    assert not normality_check(x)
    assert normal_witness(z, x) == x / p
    # s x = l x s
    assert normal_witness(s, x) == x * ParamScalar.symbol("l")


def test_products_of_normals_are_normal(A):
    z, s, t = (A.gen(g) for g in "zst")
    for a in (z, s, t):
        for b in (z, s, t):
            assert normality_check(a * b)


def test_q_integer():
    assert q_integer(0) == 0
    assert q_integer(1) == 1
    assert q_integer(3) == 1 + p + p ** 2
    for d in range(12):
        assert q_integer(d + 1) == p * q_integer(d) + 1
