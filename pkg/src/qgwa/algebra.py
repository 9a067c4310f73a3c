"""Algebra descriptors and the shared sparse-element machinery.

An :class:`Algebra` names one of the rings

* ``A``     -- A_p(l, u, K_q[s, t]) on x, y, s, t,
* ``A-w``   -- its polynomial extension A[w] (w central),
* ``A-loc`` -- the localization at the multiplicative set of z^i s^j t^k,

together with its parameter 4-tuple (p, q, l, u), given as elements of the
coefficient field of a :class:`~qgwa.scalars.ParamConfig`.  The 4-tuple need
not be the bare symbols: an isomorphism target may have p' = 1/p, etc.
"""

from __future__ import annotations

from typing import Dict, Iterable, Tuple

from .scalars import ParamConfig, is_scalar, scalar_pretty, scalar_text

KINDS = ("A", "A-w", "A-loc")


class AlgebraError(ValueError):
    pass


class AlgebraMismatchError(AlgebraError):
    pass


class NotAUnitError(AlgebraError):
    pass


class Algebra:
    __slots__ = ("cfg", "p", "q", "lam", "mu", "kind")

    def __init__(self, cfg: ParamConfig = None, params=None, kind: str = "A"):
        if kind not in KINDS:
            raise AlgebraError(f"unknown algebra kind {kind!r}")
        cfg = cfg if cfg is not None else ParamConfig.generic()
        if params is None:
            params = tuple(cfg.param(n) for n in ("p", "q", "l", "u"))
        else:
            params = tuple(cfg.coerce(v) for v in params)
        if len(params) != 4:
            raise AlgebraError("need four parameters p, q, l, u")
        for name, v in zip("pqlu", params):
            if not v:
                raise AlgebraError(f"parameter {name} must be nonzero")
        self.cfg = cfg
        self.p, self.q, self.lam, self.mu = params
        self.kind = kind

    @property
    def params(self) -> Tuple:
        return (self.p, self.q, self.lam, self.mu)

    @property
    def with_w(self) -> bool:
        return self.kind == "A-w"

    def with_kind(self, kind: str) -> "Algebra":
        return Algebra(self.cfg, self.params, kind)

    def coerce(self, x):
        return self.cfg.coerce(x)

    def one(self):
        return self.cfg.one()

    def zero(self):
        return self.cfg.one() * 0

    def require_p_not_one(self):
        if self.p == 1:
            raise AlgebraError("this operation needs p != 1 (division by p - 1)")

    def gens(self) -> Tuple[str, ...]:
        return ("x", "y", "s", "t", "w") if self.with_w else ("x", "y", "s", "t")

    def gen(self, name: str):
        """Generator (or z) in the natural basis of this algebra."""
        if self.kind == "A-loc":
            from .localization import LocElement
            return LocElement.gen(self, name)
        from .pbw import PbwElement
        return PbwElement.gen(self, name)

    def element(self, text: str):
        from .serialize import parse_element
        return parse_element(text, self)

    def scalar(self, c):
        if self.kind == "A-loc":
            from .localization import LocElement
            return LocElement.scalar(self, c)
        from .pbw import PbwElement
        return PbwElement.scalar(self, c)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.kind == other.kind and self.cfg == other.cfg
                and all(a == b for a, b in zip(self.params, other.params)))

    def __hash__(self):
        return hash((self.kind, self.cfg, self.params))

    def param_texts(self):
        return [scalar_pretty(v) for v in self.params]

    def __repr__(self):
        ps = ", ".join(scalar_pretty(v) for v in self.params)
        return f"Algebra({self.kind}, params=({ps}), {self.cfg!r})"


class Element:
    """Sparse linear combination of monomials with field coefficients.

    Subclasses fix the monomial shape and supply ``_mul_mono``.  Instances are
    treated as immutable.
    """

    __slots__ = ("_alg", "_terms")
    basis = ""
    nexp = 0
    letters: Tuple[str, ...] = ()

    def __init__(self, algebra, terms=None):
        self._check_algebra(algebra)
        self._alg = algebra
        out = {}
        for mono, c in dict(terms or {}).items():
            mono = tuple(int(k) for k in mono)
            self._check_mono(mono)
            c = algebra.coerce(c)
            if mono in out:
                c = out[mono] + c
            out[mono] = c
        self._terms = {m: c for m, c in out.items() if c}

    @classmethod
    def _raw(cls, algebra, terms: Dict):
        obj = cls.__new__(cls)
        obj._alg = algebra
        obj._terms = terms
        return obj

    # -- subclass hooks -----------------------------------------------------

    def _check_algebra(self, algebra):
        pass

    def _check_mono(self, mono):
        if len(mono) != self.nexp:
            raise AlgebraError(f"{self.basis} monomials have {self.nexp} exponents")

    def _mul_mono(self, m1, m2, memo):
        raise NotImplementedError

    @staticmethod
    def _mono_key(m):
        return (sum(abs(k) for k in m), m)

    def _inverse(self):
        raise NotAUnitError(f"{self.pretty()} is not a unit")

    # -- construction -------------------------------------------------------

    @classmethod
    def scalar(cls, algebra, c):
        c = algebra.coerce(c)
        return cls._raw(algebra, {(0,) * cls.nexp: c} if c else {})

    @classmethod
    def monomial(cls, algebra, mono, c=1):
        return cls(algebra, {tuple(mono): c})

    def _new(self, terms):
        return type(self)._raw(self._alg, terms)

    # -- accessors ----------------------------------------------------------

    @property
    def algebra(self):
        return self._alg

    @property
    def terms(self) -> Dict:
        return dict(self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: self._mono_key(mc[0]), reverse=True)

    def coefficient(self, mono):
        return self._terms.get(tuple(mono), self._alg.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_scalar(self) -> bool:
        zero = (0,) * self.nexp
        return all(m == zero for m in self._terms)

    def scalar_value(self):
        if not self.is_scalar():
            raise AlgebraError(f"{self.pretty()} is not a scalar")
        return self.coefficient((0,) * self.nexp)

    # -- arithmetic ---------------------------------------------------------

    def _same(self, other):
        if type(other) is not type(self):
            raise AlgebraMismatchError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other._alg is not self._alg and other._alg != self._alg:
            raise AlgebraMismatchError("elements live in different algebras")

    def _lift(self, other):
        if is_scalar(other):
            return type(self).scalar(self._alg, other)
        if isinstance(other, Element):
            self._same(other)
            return other
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in o._terms.items():
            if m in terms:
                v = terms[m] + c
                if v:
                    terms[m] = v
                else:
                    del terms[m]
            else:
                terms[m] = c
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = self._alg.coerce(c)
        if not c:
            return self._new({})
        return self._new({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        return self._mul(other)

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if is_scalar(other):
            c = self._alg.coerce(other)
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return self.scale(1 / c)
        return NotImplemented

    def _mul(self, other):
        acc: Dict = {}
        memo: Dict = {}
        mul_mono = self._mul_mono
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                c12 = c1 * c2
                for m, c in mul_mono(m1, m2, memo):
                    v = c12 * c
                    if m in acc:
                        acc[m] = acc[m] + v
                    else:
                        acc[m] = v
        return self._new({m: c for m, c in acc.items() if c})

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self._inverse() ** (-n)
        result = type(self).scalar(self._alg, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if is_scalar(other):
            other = type(self).scalar(self._alg, other)
        if type(other) is not type(self):
            return NotImplemented
        if other._alg != self._alg:
            return False
        return self._terms == other._terms

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # type: ignore[assignment]

    # -- text ---------------------------------------------------------------

    def _fmt_mono(self, mono) -> str:
        parts = []
        for name, k in zip(self.letters, mono):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = self._fmt_mono(m)
            if not mono:
                out.append(f"({scalar_pretty(c)})")
            elif c == 1:
                out.append(mono)
            else:
                out.append(f"({scalar_pretty(c)})*{mono}")
        return " + ".join(out)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"{type(self).__name__}({self.pretty()})"

    def json_terms(self) -> Iterable[dict]:
        for m, c in self.sorted_terms():
            yield {"coeff": scalar_text(c), "exp": list(m)}
