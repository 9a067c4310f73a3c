"""Exact coefficients: Q and the rational function field Q(p, q, l, u).

``l`` and ``u`` stand for lambda and mu.  A :class:`ParamScalar` is a
fraction of two :mod:`qgwa.poly` polynomials kept in lowest terms with a
positive leading denominator coefficient.  Equality falls back to
cross-multiplication, so a missed common factor never breaks ``==``.

A :class:`ParamConfig` fixes some (or all) parameters to nonzero rationals.
With all four fixed the coefficient field is plain :class:`fractions.Fraction`;
otherwise coefficients are ParamScalars in the remaining free parameters.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from . import poly as P
from .poly import ONE, VARS, ZERO_EXP, ParamPoly, Poly


class ScalarError(ArithmeticError):
    pass


class ParamZeroDivisionError(ScalarError, ZeroDivisionError):
    pass


class SpecializationError(ScalarError):
    """The denominator vanishes at a parameter assignment."""

    def __init__(self, factor: str, assignment: Mapping[str, Fraction]):
        self.factor = factor
        self.assignment = dict(assignment)
        where = ", ".join(f"{k}={v}" for k, v in sorted(assignment.items()))
        super().__init__(f"denominator vanishes: ({factor}) at {where}")


def _canon(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if not den:
        raise ParamZeroDivisionError("zero denominator")
    if not num:
        return {}, ONE
    if P.is_one(den):
        return num, ONE
    g = P.pgcd(num, den)
    if not P.is_one(g):
        num = P.pdiv(num, g)
        den = P.pdiv(den, g)
    if P.lead(den)[1] < 0:
        num, den = P.pneg(num), P.pneg(den)
    return num, den


class ParamScalar:
    """An element of Q(p, q, l, u) in canonical reduced form."""

    __slots__ = ("_num", "_den")

    def __init__(self, num=0, den=1):
        n = _to_frac_parts(num)
        d = _to_frac_parts(den)
        if n is None or d is None:
            raise TypeError(f"cannot build a ParamScalar from {num!r}, {den!r}")
        if not d[0]:
            raise ParamZeroDivisionError("zero denominator")
        self._num, self._den = _canon(P.pmul(n[0], d[1]), P.pmul(n[1], d[0]))

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "ParamScalar":
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def _make(cls, num: Poly, den: Poly) -> "ParamScalar":
        return cls._raw(*_canon(num, den))

    @classmethod
    def symbol(cls, name: str) -> "ParamScalar":
        return cls._raw(ParamPoly.var(name).terms, ONE)

    @classmethod
    def parse(cls, text: str) -> "ParamScalar":
        from .parse import parse_scalar
        return parse_scalar(text)

    @property
    def numerator(self) -> ParamPoly:
        return ParamPoly._wrap(self._num)

    @property
    def denominator(self) -> ParamPoly:
        return ParamPoly._wrap(self._den)

    def is_constant(self) -> bool:
        return P.is_const(self._num) and P.is_const(self._den)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on parameters")
        return Fraction(self._num.get(ZERO_EXP, 0), self._den[ZERO_EXP])

    def free_symbols(self) -> set:
        return {VARS[i] for i in P.variables(self._num) | P.variables(self._den)}

    def is_monomial(self) -> bool:
        """True for c * (Laurent monomial in p, q, l, u)."""
        return len(self._num) == 1 and len(self._den) == 1

    # -- arithmetic ---------------------------------------------------------

    def __bool__(self):
        return bool(self._num)

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, -o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _add(o, -self)

    def __neg__(self):
        return ParamScalar._raw(P.pneg(self._num), self._den)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mul(self, o.inverse())

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mul(o, self.inverse())

    def inverse(self) -> "ParamScalar":
        if not self._num:
            raise ParamZeroDivisionError("division by zero")
        num, den = self._den, self._num
        if P.lead(den)[1] < 0:
            num, den = P.pneg(num), P.pneg(den)
        return ParamScalar._raw(num, den)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        # lowest terms are preserved by powers
        return ParamScalar._raw(P.ppow(base._num, n), P.ppow(base._den, n))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._num == o._num and self._den == o._den:
            return True
        if not self._num or not o._num:
            return False
        return P.pmul(self._num, o._den) == P.pmul(o._num, self._den)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((frozenset(self._num.items()), frozenset(self._den.items())))

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical serialization ``(num)/(den)``."""
        return f"({P.format_poly(self._num)})/({P.format_poly(self._den)})"

    def pretty(self) -> str:
        if P.is_one(self._den):
            return P.format_poly(self._num)
        return self.to_text()

    __str__ = to_text

    def __repr__(self):
        return f"ParamScalar('{self.to_text()}')"

    # -- substitution -------------------------------------------------------

    def subs(self, values: Mapping[str, Fraction]) -> "ParamScalar":
        """Substitute rational values for some parameters."""
        idx = {VARS.index(k): Fraction(v) for k, v in values.items()}
        if not idx:
            return self
        num = _clear(P.peval(self._num, idx))
        den = _clear(P.peval(self._den, idx))
        if not den[0]:
            raise SpecializationError(P.format_poly(self._den),
                                      {k: Fraction(v) for k, v in values.items()})
        return ParamScalar._make(P.pmul(num[0], den[1]), P.pmul(den[0], num[1]))

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        s = self.subs({k: v for k, v in values.items() if k in VARS})
        if not s.is_constant():
            raise ValueError(f"free parameters remain in {s}")
        return s.constant_value()


def _clear(d) -> Tuple[Poly, Poly]:
    """Rational-coefficient dict -> (integer poly, integer multiplier poly)."""
    den = 1
    for c in d.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // igcd(den, c.denominator)
    out = {e: int(c * den) for e, c in d.items() if c}
    return out, P.const(den)


def _to_frac_parts(x) -> Optional[Tuple[Poly, Poly]]:
    if isinstance(x, ParamScalar):
        return x._num, x._den
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return P.const(x), ONE
    if isinstance(x, Fraction):
        return P.const(x.numerator), P.const(x.denominator)
    if isinstance(x, ParamPoly):
        return x.terms, ONE
    if isinstance(x, str):
        s = ParamScalar.parse(x)
        return s._num, s._den
    return None


def _coerce(x) -> Optional[ParamScalar]:
    if isinstance(x, ParamScalar):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return ParamScalar._raw(P.const(x), ONE)
    if isinstance(x, Fraction):
        return ParamScalar._raw(P.const(x.numerator), P.const(x.denominator))
    if isinstance(x, ParamPoly):
        return ParamScalar._raw(x.terms, ONE)
    return None


def _add(a: ParamScalar, b: ParamScalar) -> ParamScalar:
    na, da, nb, db = a._num, a._den, b._num, b._den
    if not na:
        return b
    if not nb:
        return a
    if P.is_one(da) and P.is_one(db):
        return ParamScalar._raw(P.padd(na, nb), ONE)
    if da == db:
        return ParamScalar._make(P.padd(na, nb), da)
    g = P.pgcd(da, db)
    if P.is_one(g):
        return ParamScalar._raw(P.padd(P.pmul(na, db), P.pmul(nb, da)), P.pmul(da, db))
    s = P.pdiv(da, g)
    dbg = P.pdiv(db, g)
    t = P.padd(P.pmul(na, dbg), P.pmul(nb, s))
    if not t:
        return ParamScalar._raw({}, ONE)
    g2 = P.pgcd(t, g)
    if P.is_one(g2):
        return ParamScalar._raw(t, P.pmul(s, db))
    return ParamScalar._raw(P.pdiv(t, g2), P.pmul(s, P.pdiv(db, g2)))


def _mul(a: ParamScalar, b: ParamScalar) -> ParamScalar:
    na, da, nb, db = a._num, a._den, b._num, b._den
    if not na or not nb:
        return ParamScalar._raw({}, ONE)
    if P.is_one(da) and P.is_one(db):
        return ParamScalar._raw(P.pmul(na, nb), ONE)
    g1 = ONE if P.is_one(db) else P.pgcd(na, db)
    g2 = ONE if P.is_one(da) else P.pgcd(nb, da)
    if not P.is_one(g1):
        na, db = P.pdiv(na, g1), P.pdiv(db, g1)
    if not P.is_one(g2):
        nb, da = P.pdiv(nb, g2), P.pdiv(da, g2)
    return ParamScalar._raw(P.pmul(na, nb), P.pmul(da, db))


Scalar = Union[int, Fraction, ParamScalar]


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, ParamScalar)) and not isinstance(x, bool)


# -- high-level operations --------------------------------------------------

def field_arith(a, b, op: str):
    """Apply ``op`` in {add, sub, mul, div} to two scalars."""
    a, b = _coerce(a), _coerce(b)
    if a is None or b is None:
        raise TypeError("field_arith expects scalars")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ParamZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def canonicalize(a) -> ParamScalar:
    """Return the reduced representative (idempotent)."""
    if isinstance(a, tuple):
        num, den = a
        return ParamScalar(num, den)
    c = _coerce(a)
    if c is None:
        raise TypeError(f"not a scalar: {a!r}")
    return ParamScalar._make(c._num, c._den)


def specialize(a, cfg: "ParamConfig") -> ParamScalar:
    """Evaluate ``a`` at the config's fixed values (fully specialized config)."""
    if cfg.mode != "specialized":
        raise ValueError("specialize needs all four parameters fixed")
    c = _coerce(a)
    if c is None:
        raise TypeError(f"not a scalar: {a!r}")
    return c.subs(cfg.values)


# -- configuration ----------------------------------------------------------

class ParamConfig:
    """Which of p, q, l, u are fixed to rationals.

    ``mode`` is ``"specialized"`` when all four are fixed (coefficients are
    Fractions) and ``"generic"`` otherwise (coefficients are ParamScalars in
    the free parameters; fixed ones are substituted on coercion).
    """

    __slots__ = ("_values",)

    def __init__(self, values: Optional[Mapping[str, object]] = None, **kw):
        vals: Dict[str, Fraction] = {}
        for k, v in {**(values or {}), **kw}.items():
            if k not in VARS:
                raise ValueError(f"unknown parameter {k!r}")
            f = _rational(v)
            if f == 0:
                raise ValueError(f"parameter {k} must be nonzero")
            vals[k] = f
        self._values = vals

    @classmethod
    def generic(cls) -> "ParamConfig":
        return cls()

    @classmethod
    def specialized(cls, p, q, l, u) -> "ParamConfig":
        return cls(p=p, q=q, l=l, u=u)

    @classmethod
    def parse(cls, text: str) -> "ParamConfig":
        """``generic`` or ``k=v,...`` with k in p, q, l, u."""
        text = text.strip()
        if text in ("", "generic"):
            return cls()
        vals = {}
        for part in text.split(","):
            if "=" not in part:
                raise ValueError(f"bad parameter assignment {part!r}")
            k, v = part.split("=", 1)
            vals[k.strip()] = v.strip()
        return cls(vals)

    @property
    def values(self) -> Dict[str, Fraction]:
        return dict(self._values)

    @property
    def mode(self) -> str:
        return "specialized" if len(self._values) == 4 else "generic"

    def is_free(self, name: str) -> bool:
        return name not in self._values

    def _flag(self, name, target):
        v = self._values.get(name)
        return v is not None and v == target

    @property
    def p_is_one(self):
        return self._flag("p", 1)

    @property
    def q_is_one(self):
        return self._flag("q", 1)

    @property
    def p_is_minus_one(self):
        return self._flag("p", -1)

    @property
    def q_is_minus_one(self):
        return self._flag("q", -1)

    @property
    def p_root_of_unity(self):
        # +-1 are the only rational roots of unity
        return self._flag("p", 1) or self._flag("p", -1)

    @property
    def q_root_of_unity(self):
        return self._flag("q", 1) or self._flag("q", -1)

    def param(self, name: str):
        """The field element standing for parameter ``name``."""
        if self.mode == "specialized":
            return self._values[name]
        if name in self._values:
            return ParamScalar(self._values[name])
        return ParamScalar.symbol(name)

    def one(self):
        return Fraction(1) if self.mode == "specialized" else ParamScalar(1)

    def coerce(self, x):
        """Map a scalar into this config's coefficient field."""
        if isinstance(x, str):
            x = ParamScalar.parse(x)
        if self.mode == "specialized":
            if isinstance(x, ParamScalar):
                return x.subs(self._values).constant_value()
            if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
                return Fraction(x)
        else:
            c = _coerce(x)
            if c is not None:
                if self._values and not c.is_constant():
                    c = c.subs({k: v for k, v in self._values.items()
                                if k in c.free_symbols()})
                return c
        raise TypeError(f"not a scalar: {x!r}")

    def to_json(self) -> Dict[str, str]:
        return {k: str(v) for k, v in sorted(self._values.items())}

    def __eq__(self, other):
        return isinstance(other, ParamConfig) and self._values == other._values

    def __hash__(self):
        return hash(frozenset(self._values.items()))

    def __repr__(self):
        if not self._values:
            return "ParamConfig.generic()"
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self._values.items()))
        return f"ParamConfig({inner})"


def _rational(v) -> Fraction:
    if isinstance(v, ParamScalar):
        return v.constant_value()
    if isinstance(v, str):
        return ParamScalar.parse(v).constant_value()
    return Fraction(v)


# -- p^m q^r = 1 ------------------------------------------------------------

def _factor_int(n: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _atoms(x) -> Optional[Tuple[int, Dict[object, int]]]:
    """Sign and exponent vector over primes and free symbols, if monomial."""
    if isinstance(x, ParamScalar):
        if not x.is_monomial():
            return None
        (en, cn), = x._num.items()
        (ed, cd), = x._den.items()
        vec: Dict[object, int] = {}
        for i, name in enumerate(VARS):
            k = en[i] - ed[i]
            if k:
                vec[name] = k
        frac = Fraction(cn, cd)
    else:
        vec = {}
        frac = Fraction(x)
    sign = -1 if frac < 0 else 1
    for pr, k in _factor_int(abs(frac.numerator)).items():
        vec[pr] = vec.get(pr, 0) + k
    for pr, k in _factor_int(frac.denominator).items():
        vec[pr] = vec.get(pr, 0) - k
    return sign, vec


def _range(r) -> range:
    lo, hi = r
    if lo > hi:
        raise ValueError(f"empty range {r!r}")
    return range(lo, hi + 1)


def solve_power_identity(m_range: Tuple[int, int], r_range: Tuple[int, int],
                         cfg: ParamConfig, p=None, q=None) -> set:
    """All (m, r) in the ranges with p^m q^r = 1.

    ``p`` and ``q`` default to the config's parameters; free parameters are
    independent indeterminates.  Decided by comparing exponent vectors over
    primes and symbols, with an exact field check when a value is not a
    monomial.
    """
    ms, rs = _range(m_range), _range(r_range)
    p = cfg.param("p") if p is None else cfg.coerce(p)
    q = cfg.param("q") if q is None else cfg.coerce(q)
    ap, aq = _atoms(p), _atoms(q)
    out = set()
    if ap is None or aq is None:
        for m in ms:
            for r in rs:
                if p ** m * q ** r == 1:
                    out.add((m, r))
        return out
    (sp, vp), (sq, vq) = ap, aq
    keys = set(vp) | set(vq)
    for m in ms:
        for r in rs:
            if sp ** (m % 2) * sq ** (r % 2) != 1:
                continue
            if all(m * vp.get(k, 0) + r * vq.get(k, 0) == 0 for k in keys):
                out.add((m, r))
    return out


def power_identity_holds(m: int, r: int, cfg: ParamConfig, p=None, q=None) -> bool:
    return (m, r) in solve_power_identity((m, m), (r, r), cfg, p, q)


def as_fraction_if_constant(x):
    if isinstance(x, ParamScalar) and x.is_constant():
        return x.constant_value()
    return x


def scalar_text(x) -> str:
    """Canonical ``(num)/(den)`` text for any field element."""
    c = _coerce(x)
    if c is None:
        raise TypeError(f"not a scalar: {x!r}")
    return c.to_text()


def scalar_pretty(x) -> str:
    if isinstance(x, ParamScalar):
        return x.pretty()
    x = Fraction(x)
    return str(x)


def iter_scalars(xs: Iterable) -> Iterable[ParamScalar]:
    for x in xs:
        c = _coerce(x)
        if c is None:
            raise TypeError(f"not a scalar: {x!r}")
        yield c
