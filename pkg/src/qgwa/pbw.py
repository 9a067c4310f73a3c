"""Normal-form arithmetic in A and A[w] over the basis x^l y^m s^n t^o w^r.

Two independent multiplication routes live here:

* :func:`normalize_word` -- the rewriting system oriented by the defining
  relations (yx -> p^-1 xy - p^-1, sx -> l xs, sy -> l^-1 ys, tx -> u xt,
  ty -> u^-1 yt, ts -> q^-1 st, w central), applied until no out-of-order
  adjacent pair remains;
* :meth:`PbwElement._mul_mono` -- closed-form exponent arithmetic used by
  ``*``.  The rewriter is its test oracle.
"""

from __future__ import annotations

import random
from typing import Dict, List, Sequence, Tuple

from .algebra import Algebra, AlgebraError, Element

LETTERS = ("x", "y", "s", "t", "w")
RANK = {g: i for i, g in enumerate(LETTERS)}


class PbwElement(Element):
    basis = "PBW"
    nexp = 5
    letters = LETTERS

    def _check_algebra(self, algebra):
        if algebra.kind not in ("A", "A-w"):
            raise AlgebraError("PBW elements live in A or A-w")

    def _check_mono(self, mono):
        super()._check_mono(mono)
        if min(mono) < 0:
            raise AlgebraError("PBW exponents are nonnegative")
        if mono[4] and not self._alg.with_w:
            raise AlgebraError("w only exists in A-w")

    @staticmethod
    def _mono_key(m):
        return (sum(m), m)

    @classmethod
    def gen(cls, algebra: Algebra, name: str) -> "PbwElement":
        if name == "z":
            return commutator(cls.gen(algebra, "x"), cls.gen(algebra, "y"))
        if name not in LETTERS or (name == "w" and not algebra.with_w):
            raise AlgebraError(f"no generator {name!r} in {algebra.kind}")
        e = [0] * 5
        e[RANK[name]] = 1
        return cls._raw(algebra, {tuple(e): algebra.one()})

    @classmethod
    def from_word(cls, algebra: Algebra, word) -> "PbwElement":
        return normalize_word(word, algebra)

    def _mul_mono(self, m1, m2, memo):
        alg = self._alg
        l1, m1y, n1, o1, r1 = m1
        l2, m2y, n2, o2, r2 = m2
        # move s^n1 t^o1 right past x^l2 y^m2, then t^o1 past s^n2
        twist = alg.one()
        dx = l2 - m2y
        if n1 and dx:
            twist = twist * alg.lam ** (n1 * dx)
        if o1 and dx:
            twist = twist * alg.mu ** (o1 * dx)
        if o1 and n2:
            twist = twist * alg.q ** (-o1 * n2)
        n, o, r = n1 + n2, o1 + o2, r1 + r2
        if not m1y or not l2:
            return [((l1 + l2, m1y + m2y, n, o, r), twist)]
        key = (m1y, l2)
        expansion = memo.get(key)
        if expansion is None:
            expansion = memo[key] = _reorder_y_x(alg, m1y, l2)
        return [((l1 + l2 - k, m1y + m2y - k, n, o, r), twist * c) for k, c in expansion]


def _reorder_y_x(alg: Algebra, m: int, l: int) -> List[Tuple[int, object]]:
    """y^m x^l = sum_k c_k x^(l-k) y^(m-k); returns [(k, c_k)]."""
    pinv = 1 / alg.p
    pinv_pow = [alg.one()]
    for _ in range(l):
        pinv_pow.append(pinv_pow[-1] * pinv)
    # y x^a = p^-a x^a y - (p^-1 + ... + p^-a) x^(a-1)
    partial = [alg.zero()]
    for a in range(1, l + 1):
        partial.append(partial[-1] + pinv_pow[a])
    cur: Dict[Tuple[int, int], object] = {(l, 0): alg.one()}
    for _ in range(m):
        nxt: Dict[Tuple[int, int], object] = {}
        for (a, b), c in cur.items():
            key = (a, b + 1)
            v = c * pinv_pow[a]
            nxt[key] = nxt[key] + v if key in nxt else v
            if a:
                key = (a - 1, b)
                v = -c * partial[a]
                nxt[key] = nxt[key] + v if key in nxt else v
        cur = {k: v for k, v in nxt.items() if v}
    return [(l - a, c) for (a, b), c in cur.items()]


# -- rewriting oracle ---------------------------------------------------------

def _check_config(alg: Algebra):
    for name, v in zip("pqlu", alg.params):
        if not v:
            raise AlgebraError(f"parameter {name} must be nonzero")


def rule(alg: Algebra, a: str, b: str) -> List[Tuple[object, Tuple[str, ...]]]:
    """Right-hand side for the out-of-order pair ``a b``."""
    one = alg.one()
    if a == "w":
        return [(one, (b, "w"))]
    if (a, b) == ("y", "x"):
        pinv = one / alg.p
        return [(pinv, ("x", "y")), (-pinv, ())]
    if (a, b) == ("s", "x"):
        return [(alg.lam, ("x", "s"))]
    if (a, b) == ("s", "y"):
        return [(one / alg.lam, ("y", "s"))]
    if (a, b) == ("t", "x"):
        return [(alg.mu, ("x", "t"))]
    if (a, b) == ("t", "y"):
        return [(one / alg.mu, ("y", "t"))]
    if (a, b) == ("t", "s"):
        return [(one / alg.q, ("s", "t"))]
    raise AlgebraError(f"no rule for {a}{b}")


def redexes(word: Sequence[str]) -> List[int]:
    return [i for i in range(len(word) - 1) if RANK[word[i]] > RANK[word[i + 1]]]


def rewrite_step(alg: Algebra, word: Sequence[str], pos: int):
    """Apply the rule at ``pos``; returns [(coeff, new_word)]."""
    word = tuple(word)
    return [(c, word[:pos] + rep + word[pos + 2:])
            for c, rep in rule(alg, word[pos], word[pos + 1])]


def inversions(word: Sequence[str]) -> int:
    r = [RANK[g] for g in word]
    return sum(1 for i in range(len(r)) for j in range(i + 1, len(r)) if r[i] > r[j])


def normalize_word(word, algebra: Algebra, strategy="leftmost") -> PbwElement:
    """Rewrite a word in x, y, s, t, w to PBW normal form.

    ``strategy`` picks the redex: ``"leftmost"``, ``"rightmost"`` or a
    :class:`random.Random` instance.  All choices give the same result.
    """
    _check_config(algebra)
    word = tuple(word)
    for g in word:
        if g not in RANK or (g == "w" and not algebra.with_w):
            raise AlgebraError(f"letter {g!r} not in {algebra.kind}")
    work: Dict[Tuple[str, ...], object] = {word: algebra.one()}
    out: Dict[Tuple[int, ...], object] = {}
    while work:
        w, c = work.popitem()
        red = redexes(w)
        if not red:
            mono = tuple(w.count(g) for g in LETTERS)
            v = out[mono] + c if mono in out else c
            out[mono] = v
            continue
        if strategy == "leftmost":
            pos = red[0]
        elif strategy == "rightmost":
            pos = red[-1]
        elif isinstance(strategy, random.Random):
            pos = strategy.choice(red)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        for k, nw in rewrite_step(algebra, w, pos):
            v = c * k
            work[nw] = work[nw] + v if nw in work else v
    return PbwElement._raw(algebra, {m: c for m, c in out.items() if c})


def multiply(a: PbwElement, b: PbwElement) -> PbwElement:
    return a * b


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def monomial_word(mono) -> Tuple[str, ...]:
    return tuple(g for g, k in zip(LETTERS, mono) for _ in range(k))


def q_identity_check(d: int, algebra: Algebra) -> PbwElement:
    """x y^d - p^d y^d x - ((p^d - 1)/(p - 1)) y^(d-1); zero when correct."""
    if d < 1:
        raise ValueError("d must be >= 1")
    algebra.require_p_not_one()
    x = PbwElement.gen(algebra, "x")
    y = PbwElement.gen(algebra, "y")
    yd = y ** d
    p = algebra.p
    qint = (p ** d - 1) / (p - 1)
    return x * yd - p ** d * (yd * x) - qint * y ** (d - 1)


def relation_residuals(algebra: Algebra, images=None):
    """Left minus right of each defining relation, evaluated on ``images``.

    With ``images=None`` the generators themselves are used, so every residual
    must vanish.  Returns an ordered list of (name, element).
    """
    if images is None:
        images = {g: algebra.gen(g) for g in algebra.gens()}
    return defining_residuals(algebra, images)


def defining_residuals(src: Algebra, im):
    """Residuals of the defining relations of ``src`` on the images ``im``.

    The images may live in any ring; the parameters of ``src`` act as scalars.
    """
    x, y, s, t = im["x"], im["y"], im["s"], im["t"]
    p, q, lam, mu = src.params
    out = [
        ("xy - p*yx - 1", x * y - (y * x) * p - 1),
        ("st - q*ts", s * t - (t * s) * q),
        ("sx - l*xs", s * x - (x * s) * lam),
        ("sy - l^-1*ys", s * y - (y * s) * (1 / lam)),
        ("tx - u*xt", t * x - (x * t) * mu),
        ("ty - u^-1*yt", t * y - (y * t) * (1 / mu)),
    ]
    if "w" in im and src.with_w:
        w = im["w"]
        for g in ("x", "y", "s", "t"):
            out.append((f"w{g} - {g}w", w * im[g] - im[g] * w))
    return out
