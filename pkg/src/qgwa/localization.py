"""The localization A_S (z, s, t inverted) and the quantum torus C.

Elements of A_S are stored in the GWA basis with Laurent exponents in z, s, t;
since z, s, t are normal this is a unique normal form.  The torus is a generic
McConnell-Pettit algebra over any commutation matrix; :func:`torus_matrix`
gives the one on z, y, s, t that appears for A.
"""

from __future__ import annotations

import itertools
from typing import List, Sequence, Tuple

from .algebra import Algebra, AlgebraError, Element, NotAUnitError
from .gwa import GwaElement, _GwaBase, _GEN_MONO
from .scalars import ParamConfig, scalar_text


class LocElement(_GwaBase):
    """Element of A_S in the basis z^a s^b t^c X^d, a, b, c in Z."""

    basis = "LOC"

    def _check_algebra(self, algebra):
        if algebra.kind != "A-loc":
            raise AlgebraError("localized elements live in A-loc")
        algebra.require_p_not_one()

    @classmethod
    def gen(cls, algebra: Algebra, name: str) -> "LocElement":
        if name not in _GEN_MONO:
            raise AlgebraError(f"no generator {name!r} in A-loc")
        return cls(algebra, {_GEN_MONO[name]: 1})

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms))[3] == 0

    def _inverse(self):
        return invert_unit(self)

    def _fmt_mono(self, mono) -> str:
        return _fmt_laurent(mono)


def _fmt_laurent(mono) -> str:
    a, b, c, d = mono
    parts = []
    for name, k in (("z", a), ("s", b), ("t", c), ("x" if d > 0 else "y", abs(d))):
        if k == 1:
            parts.append(name)
        elif k < 0:
            parts.append(f"{name}^({k})")
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def loc_multiply(e1: LocElement, e2: LocElement) -> LocElement:
    return e1 * e2


def localize(e: GwaElement, alg: Algebra = None) -> LocElement:
    """Embed an element of A (GWA basis) into A_S."""
    alg = alg or e.algebra.with_kind("A-loc")
    return LocElement._raw(alg, dict(e._terms))


def invert_unit(e: LocElement) -> LocElement:
    """Two-sided inverse of alpha z^l s^m t^n.

    (alpha z^l s^m t^n)^-1 = alpha^-1 q^(-mn) z^-l s^-m t^-n.
    """
    if not isinstance(e, LocElement) or not e.is_unit():
        raise NotAUnitError(f"{e.pretty() if isinstance(e, Element) else e!r} is not a unit")
    (a, b, c, _), alpha = next(iter(e._terms.items()))
    alg = e.algebra
    coeff = 1 / alpha
    if b and c:
        coeff = coeff * alg.q ** (-b * c)
    return LocElement._raw(alg, {(-a, -b, -c, 0): coeff})


def ideal_membership(e, gen: str) -> bool:
    """Whether ``e`` lies in the two-sided ideal generated by z, s or t.

    Accepts GWA elements, or PBW elements which are first converted.
    """
    from .pbw import PbwElement
    from .gwa import to_gwa

    idx = {"z": 0, "s": 1, "t": 2}
    if gen not in idx:
        raise ValueError("generator must be one of z, s, t")
    if isinstance(e, PbwElement):
        e = to_gwa(e)
    if not isinstance(e, GwaElement):
        raise TypeError("ideal_membership expects an element of A")
    i = idx[gen]
    return all(m[i] >= 1 for m in e._terms)


# -- quantum torus ------------------------------------------------------------

class CommutationMatrix:
    """Table M with g_i g_j = M[i][j] g_j g_i."""

    __slots__ = ("cfg", "names", "rows")

    def __init__(self, rows, names: Sequence[str] = None, cfg: ParamConfig = None):
        cfg = cfg or ParamConfig.generic()
        rows = [[cfg.coerce(v) for v in row] for row in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise AlgebraError("commutation matrix must be square")
        names = tuple(names) if names is not None else tuple(f"g{i}" for i in range(n))
        if len(names) != n:
            raise AlgebraError("need one name per row")
        for i in range(n):
            if rows[i][i] != 1:
                raise AlgebraError(f"M[{i}][{i}] must be 1")
            for j in range(i + 1, n):
                if not rows[i][j] or rows[i][j] * rows[j][i] != 1:
                    raise AlgebraError(f"M[{j}][{i}] must be the inverse of M[{i}][{j}]")
        self.cfg = cfg
        self.names = names
        self.rows = rows

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        if not isinstance(other, CommutationMatrix):
            return NotImplemented
        return self.names == other.names and self.rows == other.rows

    def __hash__(self):
        return hash(self.names)

    def to_json(self):
        return [[scalar_text(v) for v in row] for row in self.rows]


def torus_matrix(alg: Algebra) -> CommutationMatrix:
    """Commutation data of z, y, s, t: yz = p^-1 zy, sy = l^-1 ys, ty = u^-1 yt, st = q ts."""
    p, q, lam, mu = alg.params
    one = alg.one()
    rows = [
        [one, p, one, one],
        [1 / p, one, lam, mu],
        [one, 1 / lam, one, q],
        [one, 1 / mu, 1 / q, one],
    ]
    return CommutationMatrix(rows, ("z", "y", "s", "t"), alg.cfg)


class QuantumTorus:
    """K<g_1^{+-1}, ..., g_n^{+-1}> with relations from a commutation matrix."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: CommutationMatrix):
        self.matrix = matrix

    @property
    def cfg(self):
        return self.matrix.cfg

    @property
    def rank(self):
        return len(self.matrix)

    def coerce(self, x):
        return self.cfg.coerce(x)

    def one(self):
        return self.cfg.one()

    def zero(self):
        return self.cfg.one() * 0

    def gen(self, name) -> "TorusElement":
        i = self.matrix.names.index(name) if isinstance(name, str) else name
        e = [0] * self.rank
        e[i] = 1
        return TorusElement(self, {tuple(e): 1})

    def monomial(self, exps, c=1) -> "TorusElement":
        return TorusElement(self, {tuple(exps): c})

    def __eq__(self, other):
        if not isinstance(other, QuantumTorus):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


class TorusElement(Element):
    basis = "TORUS"

    @property
    def nexp(self):  # type: ignore[override]
        return self._alg.rank

    @property
    def letters(self):  # type: ignore[override]
        return self._alg.matrix.names

    @classmethod
    def scalar(cls, algebra, c):
        c = algebra.coerce(c)
        return cls._raw(algebra, {(0,) * algebra.rank: c} if c else {})

    def is_scalar(self) -> bool:
        return all(not any(m) for m in self._terms)

    def scalar_value(self):
        if not self.is_scalar():
            raise AlgebraError(f"{self.pretty()} is not a scalar")
        return self.coefficient((0,) * self.nexp)

    def _check_algebra(self, algebra):
        if not isinstance(algebra, QuantumTorus):
            raise AlgebraError("torus elements need a QuantumTorus")

    def _mul_mono(self, m1, m2, memo):
        return [(tuple(a + b for a, b in zip(m1, m2)), reorder_scalar(self._alg.matrix, m1, m2))]

    def _inverse(self):
        if len(self._terms) != 1:
            raise NotAUnitError(f"{self.pretty()} is not a unit")
        (m, c), = self._terms.items()
        inv = TorusElement._raw(self._alg, {tuple(-k for k in m): 1 / c})
        # g^m g^-m is a scalar; divide it out
        return inv / (self * inv).scalar_value()

    def _fmt_mono(self, mono) -> str:
        parts = []
        for name, k in zip(self.letters, mono):
            if k == 1:
                parts.append(name)
            elif k < 0:
                parts.append(f"{name}^({k})")
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)


def reorder_scalar(M: CommutationMatrix, u, v):
    """g^u g^v = c g^(u+v) with c = prod_{i>j} M[i][j]^(u_i v_j)."""
    c = M.cfg.one()
    n = len(M)
    for i in range(n):
        if not u[i]:
            continue
        for j in range(i):
            if v[j]:
                c = c * M[i][j] ** (u[i] * v[j])
    return c


def torus_multiply(e1: TorusElement, e2: TorusElement, M: CommutationMatrix = None) -> TorusElement:
    if M is not None and M != e1.algebra.matrix:
        raise AlgebraError("matrix does not match the torus of the operands")
    return e1 * e2


def brute_force_reorder(M: CommutationMatrix, word: Sequence[Tuple[int, int]]):
    """Sort a word of (generator, +-1) letters by adjacent swaps.

    Returns (scalar, exponent vector).  Used to check :func:`reorder_scalar`.
    """
    word = list(word)
    c = M.cfg.one()
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            (i, a), (j, b) = word[k], word[k + 1]
            if i > j:
                # g_i^a g_j^b = M[i][j]^(ab) g_j^b g_i^a
                c = c * M[i][j] ** (a * b)
                word[k], word[k + 1] = word[k + 1], word[k]
                changed = True
    exps = [0] * len(M)
    for i, a in word:
        exps[i] += a
    return c, tuple(exps)


def word_of(exps) -> List[Tuple[int, int]]:
    return [(i, 1 if k > 0 else -1) for i, k in enumerate(exps) for _ in range(abs(k))]


def all_units(alg: Algebra, radius: int):
    """Every monomial z^l s^m t^n with |l|,|m|,|n| <= radius (coefficient 1)."""
    rng = range(-radius, radius + 1)
    for a, b, c in itertools.product(rng, rng, rng):
        yield LocElement._raw(alg, {(a, b, c, 0): alg.one()})
