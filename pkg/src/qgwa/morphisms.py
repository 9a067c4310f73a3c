"""Algebra maps given on generators: verification, composition, families.

A :class:`GenMap` records the image of each generator.  Only
:func:`verify_relations` hands out maps with ``verified=True``, and only such
maps may be applied or composed.

Families built here:

* scalar automorphisms x -> a x, y -> a^-1 y, s -> b s, t -> c t of A;
* triangular automorphisms of A[w] (w -> a w + b);
* the four isomorphism shapes between A's with related parameters;
* positive-type endomorphisms of A_S (l = u = 1) and their inversion through
  an auxiliary map psi that cancels the s, t mixing;
* the negative automorphism psi_- (x -> y, y -> -p^-1 z^-1 x) and its inverse;
* affine maps of A_p(1, 1, K_q[s, t]) at numeric p, q, with the family they
  fall into.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra, AlgebraError, AlgebraMismatchError, Element
from .gwa import GwaElement, from_gwa
from .localization import LocElement, invert_unit
from .pbw import PbwElement, defining_residuals
from .scalars import ParamConfig, power_identity_holds


class MorphismError(AlgebraError):
    pass


class UnverifiedMapError(MorphismError):
    pass


class GenMap:
    """Candidate algebra map ``domain -> codomain`` given on generators."""

    __slots__ = ("domain", "codomain", "images", "verified")

    def __init__(self, domain: Algebra, codomain: Algebra, images: Dict[str, Element],
                 verified: bool = False):
        gens = domain.gens()
        missing = [g for g in gens if g not in images]
        extra = [g for g in images if g not in gens]
        if missing or extra:
            raise MorphismError(f"images must be given exactly for {', '.join(gens)}")
        imgs = {}
        for g in gens:
            v = images[g]
            if not isinstance(v, Element):
                v = codomain.scalar(v)
            if v.algebra != codomain:
                raise AlgebraMismatchError(f"image of {g} is not in the codomain")
            imgs[g] = v
        self.domain = domain
        self.codomain = codomain
        self.images = imgs
        self.verified = verified

    def unverified(self) -> "GenMap":
        return GenMap(self.domain, self.codomain, self.images, False)

    def __getitem__(self, g) -> Element:
        return self.images[g]

    def z_image(self) -> Element:
        x, y = self.images["x"], self.images["y"]
        return x * y - y * x

    def __eq__(self, other):
        if not isinstance(other, GenMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and all(self.images[g] == other.images[g] for g in self.domain.gens()))

    __hash__ = None  # type: ignore[assignment]

    def pretty(self) -> str:
        return ", ".join(f"{g} -> {self.images[g].pretty()}" for g in self.domain.gens())

    def __repr__(self):
        tag = "verified" if self.verified else "unverified"
        return f"GenMap({tag}: {self.pretty()})"


@dataclass
class VerificationReport:
    ok: bool
    residuals: List[Tuple[str, Element]]
    problems: List[str] = field(default_factory=list)
    genmap: Optional[GenMap] = None

    @property
    def failures(self) -> List[Tuple[str, Element]]:
        return [(n, r) for n, r in self.residuals if r]

    def lines(self) -> List[str]:
        out = [f"{n}: {r.pretty()}" for n, r in self.residuals]
        out += self.problems
        out.append("verified" if self.ok else "FAILED")
        return out


def _is_unit(e: Element) -> bool:
    return isinstance(e, LocElement) and e.is_unit()


def verify_relations(f: GenMap) -> VerificationReport:
    """Evaluate every defining relation of the domain on the images.

    For a localized domain the images of z, s, t must also be units.
    """
    residuals = defining_residuals(f.domain, f.images)
    problems = []
    if f.domain.kind == "A-loc":
        for name, img in (("z", f.z_image()), ("s", f.images["s"]), ("t", f.images["t"])):
            if not _is_unit(img):
                problems.append(f"image of {name} is not a unit: {img.pretty()}")
    ok = not problems and not any(r for _, r in residuals)
    gm = GenMap(f.domain, f.codomain, f.images, True) if ok else None
    return VerificationReport(ok, residuals, problems, gm)


def require_verified(f: GenMap) -> GenMap:
    rep = verify_relations(f)
    if not rep.ok:
        bad = "; ".join(rep.lines()[:-1])
        raise MorphismError(f"map does not respect the relations: {bad}")
    return rep.genmap


def identity(alg: Algebra) -> GenMap:
    return GenMap(alg, alg, {g: alg.gen(g) for g in alg.gens()}, True)


# -- applying and composing -----------------------------------------------------

class _Evaluator:
    """Caches powers of generator images for repeated substitution."""

    def __init__(self, f: GenMap):
        self.f = f
        self.cod = f.codomain
        self.base = dict(f.images)
        self.cache: Dict[Tuple[str, int], Element] = {}

    def _gen(self, name):
        if name == "z" and "z" not in self.base:
            self.base["z"] = self.f.z_image()
        return self.base[name]

    def power(self, name: str, k: int) -> Element:
        if k == 0:
            return self.cod.scalar(1)
        key = (name, k)
        if key not in self.cache:
            g = self._gen(name)
            if k < 0:
                self.cache[key] = invert_unit(g) ** (-k)
            else:
                self.cache[key] = g ** k
        return self.cache[key]

    def __call__(self, e: Element) -> Element:
        acc = self.cod.scalar(0)
        if isinstance(e, PbwElement):
            for (l, m, n, o, r), c in e.terms.items():
                term = self.cod.scalar(c)
                for name, k in (("x", l), ("y", m), ("s", n), ("t", o), ("w", r)):
                    if k:
                        term = term * self.power(name, k)
                acc = acc + term
            return acc
        if isinstance(e, LocElement):
            for (a, b, c, d), v in e.terms.items():
                term = self.cod.scalar(v)
                for name, k in (("z", a), ("s", b), ("t", c)):
                    if k:
                        term = term * self.power(name, k)
                if d > 0:
                    term = term * self.power("x", d)
                elif d < 0:
                    term = term * self.power("y", -d)
                acc = acc + term
            return acc
        raise TypeError(f"cannot apply a map to {type(e).__name__}")


def apply_morphism(f: GenMap, e) -> Element:
    """f(e) by substituting images into e's normal form."""
    if not f.verified:
        raise UnverifiedMapError("map is not verified; run verify_relations first")
    if isinstance(e, GwaElement):
        e = from_gwa(e)
    if not isinstance(e, Element):
        return f.codomain.scalar(e)
    if e.algebra != f.domain:
        raise AlgebraMismatchError("element is not in the domain of the map")
    return _Evaluator(f)(e)


def compose(f: GenMap, g: GenMap, check: bool = False) -> GenMap:
    """f o g (apply g first)."""
    if not (f.verified and g.verified):
        raise UnverifiedMapError("only verified maps can be composed")
    if g.codomain != f.domain:
        raise AlgebraMismatchError("codomain of the inner map is not the domain of the outer")
    ev = _Evaluator(f)
    images = {name: ev(img) for name, img in g.images.items()}
    out = GenMap(g.domain, f.codomain, images, True)
    if check:
        out = require_verified(out.unverified())
    return out


# -- scalar and triangular families -------------------------------------------

def _nonzero(alg: Algebra, *vals):
    out = []
    for v in vals:
        v = alg.coerce(v)
        if not v:
            raise MorphismError("scalars must be nonzero")
        out.append(v)
    return out


def make_scalar_aut(alg: Algebra, alpha, beta, gamma) -> GenMap:
    """x -> alpha x, y -> alpha^-1 y, s -> beta s, t -> gamma t (w fixed)."""
    alpha, beta, gamma = _nonzero(alg, alpha, beta, gamma)
    images = {
        "x": alg.gen("x") * alpha,
        "y": alg.gen("y") * (1 / alpha),
        "s": alg.gen("s") * beta,
        "t": alg.gen("t") * gamma,
    }
    if alg.with_w:
        images["w"] = alg.gen("w")
    return require_verified(GenMap(alg, alg, images))


def scalar_aut_params(f: GenMap) -> Optional[Tuple]:
    """(alpha, beta, gamma) if f has the scalar shape, else None."""
    alg = f.domain
    out = []
    for g in ("x", "s", "t"):
        img = f.images[g]
        base = alg.gen(g)
        if len(img) != 1 or len(base) != 1:
            return None
        (m, c), = img.terms.items()
        (mb, _), = base.terms.items()
        if m != mb:
            return None
        out.append(c)
    if f.images["y"] != alg.gen("y") * (1 / out[0]):
        return None
    return tuple(out)


def make_triangular_aut(alg: Algebra, alpha, beta, gamma, a, b=0) -> GenMap:
    """Scalar automorphism of A extended by w -> a w + b."""
    if not alg.with_w:
        raise AlgebraError("triangular automorphisms live on A-w")
    a = alg.coerce(a)
    if not a:
        raise MorphismError("a must be nonzero")
    w = alg.gen("w")
    if isinstance(b, Element):
        if b.algebra != alg:
            raise AlgebraMismatchError("b must lie in A-w")
        for g in alg.gens():
            if b * alg.gen(g) - alg.gen(g) * b:
                raise MorphismError(f"b is not central: {b.pretty()}")
        if not b.is_scalar():
            raise MorphismError("b must be a scalar")
        b = b.scalar_value()
    b = alg.coerce(b)
    base = make_scalar_aut(alg, alpha, beta, gamma)
    images = dict(base.images)
    images["w"] = w * a + b
    return require_verified(GenMap(alg, alg, images))


# -- isomorphisms between related parameter tuples -----------------------------

@dataclass(frozen=True)
class IsoCase:
    case: int
    alpha: object = 1
    beta: object = 1
    gamma: object = 1


def iso_case_holds(case: int, src: Sequence, tgt: Sequence) -> bool:
    p1, q1, l1, u1 = src
    p2, q2, l2, u2 = tgt
    if case == 1:
        return p1 == p2 and q1 == q2 and l1 == l2 and u1 == u2
    if case == 2:
        return p1 * p2 == 1 and q1 == q2 and l1 * l2 == 1 and u1 * u2 == 1
    if case == 3:
        return p1 == p2 and q1 * q2 == 1 and l1 == u2 and l2 == u1
    if case == 4:
        return p1 * p2 == 1 and q1 * q2 == 1 and l1 * u2 == 1 and l2 * u1 == 1
    raise ValueError(f"unknown case {case}")


def iso_candidate(case: IsoCase, src: Algebra, tgt: Algebra) -> GenMap:
    """The generator images of ``case`` without checking its equations."""
    alpha, beta, gamma = _nonzero(tgt, case.alpha, case.beta, case.gamma)
    x, y, s, t = (tgt.gen(g) for g in "xyst")
    swap_xy = case.case in (2, 4)
    swap_st = case.case in (3, 4)
    images = {}
    if swap_xy:
        images["x"] = y * alpha
        images["y"] = x * (-1 / (alpha * tgt.coerce(src.p)))
    else:
        images["x"] = x * alpha
        images["y"] = y * (1 / alpha)
    images["s"] = (t if swap_st else s) * beta
    images["t"] = (s if swap_st else t) * gamma
    return GenMap(src, tgt, images)


def make_isomorphism(case: IsoCase, src: Algebra, tgt: Algebra) -> GenMap:
    if src.kind != "A" or tgt.kind != "A":
        raise AlgebraError("isomorphisms are built between algebras of kind A")
    if not iso_case_holds(case.case, src.params, tgt.params):
        raise MorphismError(f"parameter equations of case {case.case} do not hold")
    return require_verified(iso_candidate(case, src, tgt))


# -- the localized algebra with l = u = 1 ---------------------------------------

def _require_trivial_twist(alg: Algebra):
    if alg.kind != "A-loc":
        raise AlgebraError("this construction lives on A-loc")
    if alg.lam != 1 or alg.mu != 1:
        raise AlgebraError("this construction needs l = u = 1")


@dataclass(frozen=True)
class EndoData:
    """Parameters of x -> alpha z^i s^j t^k x, s -> beta z^m s^c t^d, t -> gamma z^n s^e t^f."""

    alpha: object
    beta: object
    gamma: object
    i: int = 0
    j: int = 0
    k: int = 0
    m: int = 0
    n: int = 0
    c: int = 1
    d: int = 0
    e: int = 0
    f: int = 1


def endo_violations(data: EndoData, alg: Algebra) -> List[str]:
    out = []
    if data.c * data.f - data.d * data.e != 1:
        out.append(f"cf - de = {data.c * data.f - data.d * data.e} != 1")
    r1 = data.d * data.j - data.c * data.k
    r2 = data.f * data.j - data.e * data.k
    if not power_identity_holds(data.m, r1, alg.cfg, alg.p, alg.q):
        out.append(f"p^{data.m} q^{r1} != 1")
    if not power_identity_holds(data.n, r2, alg.cfg, alg.p, alg.q):
        out.append(f"p^{data.n} q^{r2} != 1")
    for name in ("alpha", "beta", "gamma"):
        if not alg.coerce(getattr(data, name)):
            out.append(f"{name} = 0")
    return out


def _mono(alg, exps, c) -> LocElement:
    return LocElement._raw(alg, {tuple(exps): alg.coerce(c)})


def positive_endo_images(alg: Algebra, data: EndoData) -> Dict[str, LocElement]:
    p, q = alg.p, alg.q
    alpha = alg.coerce(data.alpha)
    i, j, k = data.i, data.j, data.k
    return {
        "x": _mono(alg, (i, j, k, 1), alpha),
        "y": _mono(alg, (-i, -j, -k, -1), p ** i * q ** (-j * k) / alpha),
        "s": _mono(alg, (data.m, data.c, data.d, 0), data.beta),
        "t": _mono(alg, (data.n, data.e, data.f, 0), data.gamma),
    }


def make_positive_endo(alg: Algebra, data: EndoData) -> GenMap:
    _require_trivial_twist(alg)
    bad = endo_violations(data, alg)
    if bad:
        raise MorphismError("constraint violated: " + "; ".join(bad))
    f = require_verified(GenMap(alg, alg, positive_endo_images(alg, data)))
    if f.z_image() != alg.gen("z"):
        raise MorphismError("positive endomorphism does not fix z")
    return f


def _single(e: Element):
    if len(e) != 1:
        return None
    return next(iter(e.terms.items()))


def endo_data_from_map(f: GenMap) -> Optional[EndoData]:
    """Read back EndoData from a map of positive shape, or None."""
    alg = f.domain
    parts = {g: _single(f.images[g]) for g in "xyst"}
    if any(v is None for v in parts.values()):
        return None
    (i, j, k, dx), alpha = parts["x"]
    (m, c, d, ds), beta = parts["s"]
    (n, e, ff, dt), gamma = parts["t"]
    if dx != 1 or ds or dt:
        return None
    data = EndoData(alpha, beta, gamma, i, j, k, m, n, c, d, e, ff)
    if positive_endo_images(alg, data)["y"] != f.images["y"]:
        return None
    return data


def psi_data(data: EndoData) -> EndoData:
    """The auxiliary map that undoes the s, t mixing of ``data``."""
    c, d, e, f, j, k, m, n = data.c, data.d, data.e, data.f, data.j, data.k, data.m, data.n
    return EndoData(1, 1, 1, 0, e * k - f * j, d * j - c * k,
                    d * n - f * m, e * m - c * n, f, -d, -e, c)


@dataclass
class DixmierResult:
    psi: GenMap
    residual: GenMap
    reduced: EndoData
    inverse: GenMap


def reduced_shape(f: GenMap) -> Optional[EndoData]:
    """EndoData of x -> a z^i x, s -> b s, t -> c t, if f has that shape."""
    data = endo_data_from_map(f)
    if data is None:
        return None
    if (data.j, data.k, data.m, data.n, data.c, data.d, data.e, data.f) != (0, 0, 0, 0, 1, 0, 0, 1):
        return None
    return data


def dixmier_invert(f) -> DixmierResult:
    """Invert a positive-type endomorphism constructively.

    Composing f with psi leaves a map of reduced shape whose inverse is
    written down directly; then f^-1 = psi o reduced^-1.
    """
    if isinstance(f, EndoData):
        raise TypeError("pass the GenMap built by make_positive_endo")
    if not f.verified:
        raise UnverifiedMapError("map is not verified")
    alg = f.domain
    data = endo_data_from_map(f)
    if data is None:
        raise MorphismError("map is not of positive shape")
    psi = make_positive_endo(alg, psi_data(data))
    residual = compose(f, psi)
    red = reduced_shape(residual)
    if red is None:
        raise MorphismError(f"residual is not of reduced shape: {residual.pretty()}")
    red_inv = make_positive_endo(alg, EndoData(1 / alg.coerce(red.alpha), 1 / alg.coerce(red.beta),
                                               1 / alg.coerce(red.gamma), -red.i))
    inverse = compose(psi, red_inv)
    ident = identity(alg)
    if compose(f, inverse) != ident or compose(inverse, f) != ident:
        raise MorphismError("constructed inverse is not two-sided")
    return DixmierResult(psi, residual, red, inverse)


def psi_minus(alg: Algebra) -> GenMap:
    """x -> y, y -> -p^-1 z^-1 x, s -> s, t -> t."""
    _require_trivial_twist(alg)
    z_inv = invert_unit(alg.gen("z"))
    images = {"x": alg.gen("y"), "y": z_inv * alg.gen("x") * (-1 / alg.p),
              "s": alg.gen("s"), "t": alg.gen("t")}
    return require_verified(GenMap(alg, alg, images))


def psi_minus_inverse(alg: Algebra) -> GenMap:
    """x -> -z^-1 y, y -> x, s -> s, t -> t."""
    _require_trivial_twist(alg)
    z_inv = invert_unit(alg.gen("z"))
    images = {"x": -(z_inv * alg.gen("y")), "y": alg.gen("x"),
              "s": alg.gen("s"), "t": alg.gen("t")}
    return require_verified(GenMap(alg, alg, images))


def make_negative_aut(g: GenMap) -> GenMap:
    """psi_-^-1 o g for g of positive type."""
    if z_type(g) != "positive":
        raise MorphismError("expected a positive-type map")
    return compose(psi_minus_inverse(g.domain), g)


def z_type(f: GenMap) -> Optional[str]:
    """'positive' if z -> c z, 'negative' if z -> c z^-1, else None."""
    one = _single(f.z_image())
    if one is None:
        return None
    (a, b, c, d), _ = one
    if (b, c, d) != (0, 0, 0):
        return None
    return {1: "positive", -1: "negative"}.get(a)


@dataclass(frozen=True)
class NegativeShape:
    alpha: object
    beta: object
    gamma: object
    i: int
    j: int
    k: int
    m: int
    n: int
    c: int
    d: int
    e: int
    f: int


def match_negative_shape(f: GenMap, literal_sign: bool = False) -> Optional[NegativeShape]:
    """Match x -> a p^-i z^(-i-1) s^j t^k y, y -> -a^-1 p^(2i) q^(-jk) z^i s^-j t^-k x.

    s -> b z^m s^c t^d and t -> g z^n s^e t^f with cf - de = 1,
    p^-m q^(dj-ck) = 1 and p^-n q^(fj-ek) = 1.  ``literal_sign=True`` drops the
    leading minus of the y-image, to show that form is not attained.
    """
    alg = f.domain
    p, q = alg.p, alg.q
    parts = {g: _single(f.images[g]) for g in "xyst"}
    if any(v is None for v in parts.values()):
        return None
    (zx, j, k, dx), cx = parts["x"]
    if dx != -1:
        return None
    i = -zx - 1
    alpha = cx * p ** i
    sign = 1 if literal_sign else -1
    want_y = _mono(alg, (i, -j, -k, 1), sign * p ** (2 * i) * q ** (-j * k) / alpha)
    if f.images["y"] != want_y:
        return None
    (m, c, d, ds), beta = parts["s"]
    (n, e, ff, dt), gamma = parts["t"]
    if ds or dt or c * ff - d * e != 1:
        return None
    if not power_identity_holds(-m, d * j - c * k, alg.cfg, p, q):
        return None
    if not power_identity_holds(-n, ff * j - e * k, alg.cfg, p, q):
        return None
    return NegativeShape(alpha, beta, gamma, i, j, k, m, n, c, d, e, ff)


# -- affine maps of A_p(1, 1, K_q[s, t]) at numeric parameters -------------------

@dataclass
class AffineResult:
    verified: bool
    family: Optional[str]
    report: VerificationReport


def affine_map(alg: Algebra, matrix, constant=None) -> GenMap:
    """x_i -> sum_j matrix[i][j] g_j + constant[i] over g = (x, y, s, t)."""
    gens = [alg.gen(g) for g in "xyst"]
    if len(matrix) != 4 or any(len(r) != 4 for r in matrix):
        raise MorphismError("affine matrix must be 4x4")
    constant = constant or [0, 0, 0, 0]
    images = {}
    for name, row, c0 in zip("xyst", matrix, constant):
        img = alg.scalar(c0)
        for a, g in zip(row, gens):
            img = img + g * a
        images[name] = img
    return GenMap(alg, alg, images)


def _pattern(matrix):
    return tuple(tuple(bool(v) for v in row) for row in matrix)


_FAMILIES = {
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)): "diagonal",
    ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)): "xy-swap",
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)): "st-swap",
    ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)): "both-swaps",
}


def classify_affine(cfg: ParamConfig, matrix, constant=None) -> AffineResult:
    """Verify an affine map of A_p(1, 1, K_q[s, t]) and name its family."""
    if cfg.mode != "specialized":
        raise AlgebraError("classify_affine needs numeric parameters")
    if cfg.values["l"] != 1 or cfg.values["u"] != 1:
        raise AlgebraError("classify_affine needs l = u = 1")
    if cfg.p_is_one or cfg.q_is_one:
        raise AlgebraError("classify_affine needs p != 1 and q != 1")
    alg = Algebra(cfg)
    matrix = [[cfg.coerce(v) for v in row] for row in matrix]
    constant = [cfg.coerce(v) for v in (constant or [0, 0, 0, 0])]
    report = verify_relations(affine_map(alg, matrix, constant))
    if not report.ok:
        return AffineResult(False, None, report)
    family = None
    if not any(constant):
        pat = tuple(tuple(int(b) for b in row) for row in _pattern(matrix))
        family = _FAMILIES.get(pat)
    return AffineResult(True, family or "unclassified", report)


def swap_matrix(kind: str, alpha=1, beta=1, gamma=1, p=None):
    """Matrices for the four affine families (scalars alpha, beta, gamma).

    For the x <-> y swap the y-image coefficient is alpha^-1 (so x y + y x = 1
    is preserved when p = -1).
    """
    a, b, g = alpha, beta, gamma
    ainv = 1 / Fraction(a) if isinstance(a, int) else 1 / a
    if kind == "diagonal":
        return [[a, 0, 0, 0], [0, ainv, 0, 0], [0, 0, b, 0], [0, 0, 0, g]]
    if kind == "xy-swap":
        return [[0, a, 0, 0], [ainv, 0, 0, 0], [0, 0, b, 0], [0, 0, 0, g]]
    if kind == "st-swap":
        return [[a, 0, 0, 0], [0, ainv, 0, 0], [0, 0, 0, b], [0, 0, g, 0]]
    if kind == "both-swaps":
        return [[0, a, 0, 0], [ainv, 0, 0, 0], [0, 0, 0, b], [0, 0, g, 0]]
    raise ValueError(kind)
