import random

import pytest
from hypothesis import settings, strategies as st

from qgwa.algebra import Algebra
from qgwa.poly import VARS
from qgwa.scalars import ParamConfig, ParamScalar

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def A():
    return Algebra(ParamConfig.generic())


@pytest.fixture
def Aw():
    return Algebra(ParamConfig.generic(), kind="A-w")


@pytest.fixture
def Aloc():
    return Algebra(ParamConfig.generic(), kind="A-loc")


@pytest.fixture
def B():
    """Localized algebra with l = u = 1 and p, q free."""
    return Algebra(ParamConfig({"l": 1, "u": 1}), kind="A-loc")


@pytest.fixture
def rng():
    return random.Random(1234)


# raw polynomial dicts: a few terms with small exponents and coefficients
exps = st.tuples(*[st.integers(0, 2)] * 4)
polys = st.dictionaries(exps, st.integers(-4, 4).filter(bool), max_size=4)
nonzero_polys = polys.filter(bool)


@st.composite
def scalars(draw, nonzero=False):
    num = draw(nonzero_polys if nonzero else polys)
    den = draw(nonzero_polys)
    return ParamScalar._make(num, den) if num else ParamScalar(0)


def to_sympy(poly):
    import sympy
    syms = sympy.symbols(" ".join(VARS))
    out = 0
    for e, c in poly.items():
        term = sympy.Integer(c)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return sympy.expand(out)
