"""Sparse integer polynomials in the four parameters p, q, l, u.

A polynomial is a ``dict`` mapping exponent 4-tuples ``(e_p, e_q, e_l, e_u)``
to nonzero Python ints.  The module-level functions work on raw dicts (that
is what :mod:`qgwa.scalars` uses on its hot paths); :class:`ParamPoly` is the
immutable public wrapper.

GCDs are computed by recursive content / primitive-part extraction with a
subresultant polynomial remainder sequence in one chosen main variable.
"""

from __future__ import annotations

from math import gcd as igcd
from typing import Dict, Optional, Tuple

Exp = Tuple[int, int, int, int]
Poly = Dict[Exp, int]

VARS = ("p", "q", "l", "u")
NVARS = 4
ZERO_EXP: Exp = (0, 0, 0, 0)
ONE: Poly = {ZERO_EXP: 1}


def term_key(e: Exp):
    """Graded lex key with p < q < l < u; larger key = leading term."""
    return (e[0] + e[1] + e[2] + e[3], e[3], e[2], e[1], e[0])


def is_one(a: Poly) -> bool:
    return len(a) == 1 and a.get(ZERO_EXP) == 1


def is_const(a: Poly) -> bool:
    return not a or (len(a) == 1 and ZERO_EXP in a)


def const(c: int) -> Poly:
    return {ZERO_EXP: c} if c else {}


def lead(a: Poly) -> Tuple[Exp, int]:
    e = max(a, key=term_key)
    return e, a[e]


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    r = dict(a)
    for e, c in b.items():
        v = r.get(e, 0) + c
        if v:
            r[e] = v
        else:
            del r[e]
    return r


def psub(a: Poly, b: Poly) -> Poly:
    r = dict(a)
    for e, c in b.items():
        v = r.get(e, 0) - c
        if v:
            r[e] = v
        else:
            del r[e]
    return r


def pneg(a: Poly) -> Poly:
    return {e: -c for e, c in a.items()}


def pscale(a: Poly, c: int) -> Poly:
    if not c:
        return {}
    if c == 1:
        return a
    return {e: c * v for e, v in a.items()}


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    if len(a) == 1:
        (e1, c1), = a.items()
        if e1 == ZERO_EXP:
            return pscale(b, c1)
        return {(e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]): c1 * c2
                for e2, c2 in b.items()}
    r: Poly = {}
    get = r.get
    for e1, c1 in a.items():
        p0, p1, p2, p3 = e1
        for e2, c2 in b.items():
            e = (p0 + e2[0], p1 + e2[1], p2 + e2[2], p3 + e2[3])
            r[e] = get(e, 0) + c1 * c2
    return {e: c for e, c in r.items() if c}


def ppow(a: Poly, n: int) -> Poly:
    if n < 0:
        raise ValueError("negative exponent for a polynomial")
    if n == 0:
        return dict(ONE)
    if len(a) == 1:
        (e, c), = a.items()
        return {(e[0] * n, e[1] * n, e[2] * n, e[3] * n): c ** n}
    result = dict(ONE)
    base = a
    while n:
        if n & 1:
            result = pmul(result, base)
        n >>= 1
        if n:
            base = pmul(base, base)
    return result


def pdivexact(a: Poly, b: Poly) -> Optional[Poly]:
    """Return ``a / b`` if ``b`` divides ``a`` exactly over Z, else None."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    if len(b) == 1:
        (eb, cb), = b.items()
        out = {}
        for e, c in a.items():
            d = (e[0] - eb[0], e[1] - eb[1], e[2] - eb[2], e[3] - eb[3])
            if min(d) < 0 or c % cb:
                return None
            out[d] = c // cb
        return out
    eb, cb = lead(b)
    kb = term_key(eb)
    q: Poly = {}
    r = dict(a)
    while r:
        e, c = lead(r)
        if term_key(e) < kb:
            return None
        d = (e[0] - eb[0], e[1] - eb[1], e[2] - eb[2], e[3] - eb[3])
        if min(d) < 0 or c % cb:
            return None
        f = c // cb
        q[d] = f
        for e2, c2 in b.items():
            k = (d[0] + e2[0], d[1] + e2[1], d[2] + e2[2], d[3] + e2[3])
            v = r.get(k, 0) - f * c2
            if v:
                r[k] = v
            else:
                r.pop(k, None)
    return q


def pdiv(a: Poly, b: Poly) -> Poly:
    q = pdivexact(a, b)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


def int_content(a: Poly) -> int:
    g = 0
    for c in a.values():
        g = igcd(g, c)
        if g == 1:
            break
    return g


def min_exp(a: Poly) -> Exp:
    it = iter(a)
    m = list(next(it))
    for e in it:
        for i in range(NVARS):
            if e[i] < m[i]:
                m[i] = e[i]
    return tuple(m)  # type: ignore[return-value]


def variables(a: Poly) -> set:
    out = set()
    for e in a:
        for i in range(NVARS):
            if e[i]:
                out.add(i)
    return out


def degree_in(a: Poly, v: int) -> int:
    return max(e[v] for e in a)


def _normalize_sign(a: Poly) -> Poly:
    if a and lead(a)[1] < 0:
        return pneg(a)
    return a


def _shift_down(a: Poly, m: Exp) -> Poly:
    if m == ZERO_EXP:
        return a
    return {(e[0] - m[0], e[1] - m[1], e[2] - m[2], e[3] - m[3]): c for e, c in a.items()}


# -- recursive representation: main variable v, coefficients in the others --

def _split(a: Poly, v: int) -> Dict[int, Poly]:
    out: Dict[int, Poly] = {}
    for e, c in a.items():
        k = e[v]
        ee = e[:v] + (0,) + e[v + 1:]
        out.setdefault(k, {})[ee] = c
    return out


def _join(u: Dict[int, Poly], v: int) -> Poly:
    r: Poly = {}
    for k, coeff in u.items():
        for e, c in coeff.items():
            r[e[:v] + (k,) + e[v + 1:]] = c
    return r


def _prem(A: Dict[int, Poly], B: Dict[int, Poly]) -> Dict[int, Poly]:
    dB = max(B)
    lcB = B[dB]
    R = dict(A)
    e = max(A) - dB + 1
    while R:
        dR = max(R)
        if dR < dB:
            break
        lcR = R[dR]
        shift = dR - dB
        new = {k: pmul(c, lcB) for k, c in R.items()}
        for k, c in B.items():
            kk = k + shift
            val = psub(new.get(kk, {}), pmul(c, lcR))
            if val:
                new[kk] = val
            else:
                new.pop(kk, None)
        R = new
        e -= 1
    if e > 0 and R:
        f = ppow(lcB, e)
        R = {k: pmul(c, f) for k, c in R.items()}
    return R


def _univ_content(A: Dict[int, Poly]) -> Poly:
    g: Poly = {}
    for c in sorted(A.values(), key=len):
        g = pgcd(g, c)
        if is_one(g):
            break
    return g


def _subresultant_gcd(A: Dict[int, Poly], B: Dict[int, Poly]) -> Dict[int, Poly]:
    """Primitive gcd (up to sign) of primitive univariate A, B."""
    if max(A) < max(B):
        A, B = B, A
    g: Poly = dict(ONE)
    h: Poly = dict(ONE)
    while True:
        delta = max(A) - max(B)
        R = _prem(A, B)
        if not R:
            break
        if max(R) == 0:
            return {0: dict(ONE)}
        A = B
        den = pmul(g, ppow(h, delta))
        B = {k: pdiv(c, den) for k, c in R.items()}
        g = A[max(A)]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = pdiv(ppow(g, delta), ppow(h, delta - 1))
    cont = _univ_content(B)
    return {k: pdiv(c, cont) for k, c in B.items()}


def pgcd(a: Poly, b: Poly) -> Poly:
    """GCD over Z[p, q, l, u], normalized to a positive leading coefficient."""
    if not a:
        return _normalize_sign(dict(b))
    if not b:
        return _normalize_sign(dict(a))
    if a is b or a == b:
        return _normalize_sign(dict(a))
    if len(a) == 1 or len(b) == 1:
        g = igcd(int_content(a), int_content(b))
        ma, mb = min_exp(a), min_exp(b)
        return {tuple(min(x, y) for x, y in zip(ma, mb)): g}  # type: ignore[dict-item]
    ma, mb = min_exp(a), min_exp(b)
    m = tuple(min(x, y) for x, y in zip(ma, mb))
    ca, cb = int_content(a), int_content(b)
    a = _shift_down(a, ma)
    b = _shift_down(b, mb)
    if ca != 1:
        a = {e: c // ca for e, c in a.items()}
    if cb != 1:
        b = {e: c // cb for e, c in b.items()}
    g = _gcd_primitive(a, b)
    return _normalize_sign(pmul(g, {m: igcd(ca, cb)}))  # type: ignore[dict-item]


def _gcd_primitive(a: Poly, b: Poly) -> Poly:
    # a, b: integer-content 1, no monomial factor
    if a == b:
        return a
    if a == pneg(b):
        return _normalize_sign(a)
    va, vb = variables(a), variables(b)
    if not va or not vb:
        return dict(ONE)
    only_a = va - vb
    only_b = vb - va
    if only_a or only_b:
        if only_a:
            src, other, v = a, b, min(only_a)
        else:
            src, other, v = b, a, min(only_b)
        g = other
        for c in sorted(_split(src, v).values(), key=len):
            g = pgcd(g, c)
            if is_one(g):
                break
        return g
    shared = va & vb
    v = min(shared, key=lambda i: (min(degree_in(a, i), degree_in(b, i)), i))
    A, B = _split(a, v), _split(b, v)
    contA, contB = _univ_content(A), _univ_content(B)
    cont = pgcd(contA, contB)
    if not is_one(contA):
        A = {k: pdiv(c, contA) for k, c in A.items()}
    if not is_one(contB):
        B = {k: pdiv(c, contB) for k, c in B.items()}
    G = _subresultant_gcd(A, B)
    return pmul(cont, _join(G, v))


def peval(a: Poly, values: Dict[int, object]) -> Dict[Exp, object]:
    """Substitute ``values`` (index -> number) into ``a``.

    Returns a dict whose coefficients may be Fractions; substituted variables
    get exponent 0.
    """
    out: Dict[Exp, object] = {}
    for e, c in a.items():
        coeff: object = c
        ee = list(e)
        for i, val in values.items():
            if e[i]:
                coeff = coeff * val ** e[i]  # type: ignore[operator]
                ee[i] = 0
        k = tuple(ee)
        out[k] = out.get(k, 0) + coeff  # type: ignore[operator]
    return {k: c for k, c in out.items() if c}  # type: ignore[misc]


def _fmt_mono(e: Exp) -> str:
    parts = []
    for name, k in zip(VARS, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(a: Poly) -> str:
    """Deterministic text, terms in descending graded-lex order."""
    if not a:
        return "0"
    out = []
    for e in sorted(a, key=term_key, reverse=True):
        c = a[e]
        mono = _fmt_mono(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class ParamPoly:
    """Immutable integer polynomial in p, q, l, u."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = const(terms)
        elif isinstance(terms, ParamPoly):
            terms = terms._terms
        else:
            terms = {tuple(e): int(c) for e, c in dict(terms).items() if c}
            for e in terms:
                if len(e) != NVARS or min(e) < 0:
                    raise ValueError(f"bad exponent vector {e!r}")
        self._terms = terms

    @classmethod
    def _wrap(cls, terms: Poly) -> "ParamPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def var(cls, name: str) -> "ParamPoly":
        i = VARS.index(name)
        e = [0] * NVARS
        e[i] = 1
        return cls._wrap({tuple(e): 1})  # type: ignore[dict-item]

    @property
    def terms(self) -> Poly:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ParamPoly(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return ParamPoly._wrap(padd(self._terms, other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return ParamPoly._wrap(psub(self._terms, other._terms))

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return ParamPoly._wrap(pneg(self._terms))

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return ParamPoly._wrap(pmul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return ParamPoly._wrap(ppow(self._terms, n))

    def exact_div(self, other: "ParamPoly") -> "ParamPoly":
        return ParamPoly._wrap(pdiv(self._terms, _as_poly(other)._terms))

    def divides(self, other: "ParamPoly") -> bool:
        return pdivexact(_as_poly(other)._terms, self._terms) is not None

    def gcd(self, other: "ParamPoly") -> "ParamPoly":
        return ParamPoly._wrap(pgcd(self._terms, _as_poly(other)._terms))

    def lead(self):
        return lead(self._terms)

    def __str__(self):
        return format_poly(self._terms)

    def __repr__(self):
        return f"ParamPoly('{self}')"


def _as_poly(x) -> Optional[ParamPoly]:
    if isinstance(x, ParamPoly):
        return x
    if isinstance(x, int):
        return ParamPoly(x)
    return None
