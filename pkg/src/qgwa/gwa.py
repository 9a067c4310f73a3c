"""The generalized Weyl algebra presentation R(sigma, a) of A.

R = K[z]_q[s, t] with z = xy - yx central in R, sigma(z) = p z,
sigma(s) = l^-1 s, sigma(t) = u^-1 t and a = yx = (z - 1)/(p - 1).
A monomial is (a, b, c, d) for z^a s^b t^c X^d, where X^d = x^d when d >= 0
and y^-d when d < 0.

The same multiplication serves the localization (Laurent a, b, c); the
subclass in :mod:`qgwa.localization` only relaxes the exponent check.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .algebra import Algebra, AlgebraError, Element


class _GwaBase(Element):
    nexp = 4
    letters = ("z", "s", "t", "X")

    def _fmt_mono(self, mono) -> str:
        a, b, c, d = mono
        parts = []
        for name, k in (("z", a), ("s", b), ("t", c), ("x" if d > 0 else "y", abs(d))):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    @staticmethod
    def _mono_key(m):
        return (abs(m[3]) + sum(abs(k) for k in m[:3]), m[3], m[:3])

    @property
    def degree_parts(self) -> Dict[int, "_GwaBase"]:
        """Split into homogeneous components by signed degree d."""
        out: Dict[int, Dict] = {}
        for m, c in self._terms.items():
            out.setdefault(m[3], {})[m] = c
        return {d: self._new(t) for d, t in out.items()}

    # -- multiplication -----------------------------------------------------

    def _sigma_scalar(self, k, a, b, c):
        """sigma^k(z^a s^b t^c) = factor * z^a s^b t^c."""
        alg = self._alg
        f = alg.one()
        if k and a:
            f = f * alg.p ** (k * a)
        if k and b:
            f = f * alg.lam ** (-k * b)
        if k and c:
            f = f * alg.mu ** (-k * c)
        return f

    def _mul_mono(self, m1, m2, memo):
        alg = self._alg
        a1, b1, c1, d1 = m1
        a2, b2, c2, d2 = m2
        # r1 * sigma^d1(r2): s^b1 t^c1 * s^b2 t^c2 = q^(-c1 b2) s^.. t^..
        f = self._sigma_scalar(d1, a2, b2, c2)
        if c1 and b2:
            f = f * alg.q ** (-c1 * b2)
        a, b, c, d = a1 + a2, b1 + b2, c1 + c2, d1 + d2
        if d1 * d2 >= 0:
            return [((a, b, c, d), f)]
        key = (d1, d2)
        rho = memo.get(key)
        if rho is None:
            rho = memo[key] = _rho(alg, d1, d2)
        return [((a + k, b, c, d), f * v) for k, v in rho]


def sigma_power_of_a(alg: Algebra, j: int) -> List[Tuple[int, object]]:
    """sigma^j(a) = (p^j z - 1)/(p - 1) as [(z exponent, coefficient)]."""
    alg.require_p_not_one()
    inv = 1 / (alg.p - 1)
    return [(1, alg.p ** j * inv), (0, -inv)]


def _zpoly_mul(f, g):
    out: Dict[int, object] = {}
    for i, a in f:
        for j, b in g:
            v = a * b
            out[i + j] = out[i + j] + v if i + j in out else v
    return [(k, v) for k, v in out.items() if v]


def _rho(alg: Algebra, d1: int, d2: int):
    """z-polynomial rho with X^d1 X^d2 = rho X^(d1+d2) for opposite signs."""
    if d1 > 0 > d2:
        e = -d2
        k = min(d1, e)
        shifts = [d1 - k + i for i in range(1, k + 1)]
    else:
        e = -d1
        k = min(e, d2)
        shifts = [-(e - k) - i for i in range(k)]
    out = [(0, alg.one())]
    for j in shifts:
        out = _zpoly_mul(out, sigma_power_of_a(alg, j))
    return out


class GwaElement(_GwaBase):
    """Element of A written in the basis z^a s^b t^c X^d (a, b, c >= 0)."""

    basis = "GWA"

    def _check_algebra(self, algebra):
        if algebra.kind != "A":
            raise AlgebraError("GWA elements live in A")
        algebra.require_p_not_one()

    def _check_mono(self, mono):
        super()._check_mono(mono)
        if min(mono[:3]) < 0:
            raise AlgebraError("z, s, t exponents are nonnegative in A")

    @classmethod
    def gen(cls, algebra: Algebra, name: str) -> "GwaElement":
        return cls(algebra, {_GEN_MONO[name]: 1})


_GEN_MONO = {
    "z": (1, 0, 0, 0), "s": (0, 1, 0, 0), "t": (0, 0, 1, 0),
    "x": (0, 0, 0, 1), "y": (0, 0, 0, -1),
}


def sigma_apply(e: _GwaBase, k: int) -> _GwaBase:
    """Apply sigma^k to the base-ring coefficients of each term.

    On a base-ring element this is the automorphism sigma^k of R; for terms
    with d != 0 it acts on the coefficient z^a s^b t^c and keeps X^d.
    """
    return e._new({m: c * e._sigma_scalar(k, *m[:3]) for m, c in e._terms.items()})


def gwa_multiply(e1: _GwaBase, e2: _GwaBase) -> _GwaBase:
    return e1 * e2


def to_gwa(e) -> GwaElement:
    """Change of basis from PBW x^l y^m s^n t^o to z^a s^b t^c X^d."""
    from .pbw import PbwElement

    if not isinstance(e, PbwElement):
        raise TypeError("to_gwa expects a PbwElement")
    alg = e.algebra
    if alg.kind != "A":
        if any(m[4] for m in e._terms):
            raise AlgebraError("elements involving w have no GWA form")
        alg = alg.with_kind("A")
    alg.require_p_not_one()
    memo: Dict = {}
    acc: Dict = {}
    for (l, m, n, o, _), c in e._terms.items():
        xl = GwaElement._raw(alg, {(0, 0, 0, l): alg.one()})
        # x^l y^m = rho X^(l-m); then move s^n t^o to the left past X^(l-m)
        part = xl._mul_mono((0, 0, 0, l), (0, 0, 0, -m), memo)
        for (a, _b, _c, d), v in part:
            f = xl._sigma_scalar(d, 0, n, o)
            key = (a, n, o, d)
            v = c * v * f
            acc[key] = acc[key] + v if key in acc else v
    return GwaElement._raw(alg, {k: v for k, v in acc.items() if v})


def from_gwa(e: _GwaBase):
    """Substitute z = (1 - p^-1) xy + p^-1 and expand in the PBW basis."""
    from .pbw import PbwElement

    if not isinstance(e, GwaElement):
        raise TypeError("from_gwa expects a GwaElement")
    alg = e.algebra
    z = PbwElement.gen(alg, "z")
    zpow = {0: PbwElement.scalar(alg, 1)}
    out = PbwElement.scalar(alg, 0)
    for (a, b, c, d), v in e._terms.items():
        if a not in zpow:
            zpow[a] = z ** a
        tail = PbwElement._raw(alg, {(max(d, 0), max(-d, 0), 0, 0, 0): alg.one()})
        st = PbwElement._raw(alg, {(0, 0, b, c, 0): v})
        out = out + zpow[a] * st * tail
    return out
