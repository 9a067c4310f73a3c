"""The acceptance battery: thirteen exact checks, each returning pass/fail.

Randomized criteria draw from one ``random.Random`` per criterion, seeded
from ``GWA_SEED`` (see :func:`qgwa.randgen.seed_from_env`) plus the criterion
number, so a single criterion can be rerun in isolation.
"""

from __future__ import annotations

import time
import traceback
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional

from . import randgen as R
from .algebra import Algebra, NotAUnitError
from .gwa import GwaElement, from_gwa, to_gwa
from .localization import QuantumTorus, invert_unit, ideal_membership, torus_matrix
from .morphisms import (EndoData, IsoCase, MorphismError, classify_affine, compose,
                        dixmier_invert, identity, iso_candidate, iso_case_holds, make_isomorphism,
                        make_negative_aut, make_positive_endo, make_scalar_aut,
                        match_negative_shape, psi_minus, psi_minus_inverse, reduced_shape,
                        swap_matrix, verify_relations, z_type)
from .pbw import normalize_word, q_identity_check
from .probes import center_scan
from .scalars import ParamConfig, solve_power_identity


class CriterionFailure(AssertionError):
    pass


def check(cond, msg):
    if not cond:
        raise CriterionFailure(msg)


@dataclass
class Criterion:
    number: int
    name: str
    tags: tuple
    run: Callable[[int], str]


@dataclass
class CriterionResult:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name} ({self.seconds:.2f}s) {self.detail}"


def _generic(kind="A"):
    return Algebra(ParamConfig.generic(), kind=kind)


def _twistless(kind="A-loc"):
    return Algebra(ParamConfig({"l": 1, "u": 1}), kind=kind)


# -- 1 ---------------------------------------------------------------------------

RELATION_WORDS = [
    # (lhs word, coefficient name, rhs word, constant)
    ("xy", "p", "yx", 1),
    ("st", "q", "ts", 0),
    ("sx", "l", "xs", 0),
    ("sy", "1/l", "ys", 0),
    ("tx", "u", "xt", 0),
    ("ty", "1/u", "yt", 0),
]


def _relations_vanish(alg: Algebra):
    names = {"p": alg.p, "q": alg.q, "l": alg.lam, "u": alg.mu,
             "1/l": 1 / alg.lam, "1/u": 1 / alg.mu}
    for lhs, cname, rhs, const in RELATION_WORDS:
        by_words = normalize_word(lhs, alg) - normalize_word(rhs, alg) * names[cname] - const
        check(by_words.is_zero(), f"{lhs} relation does not vanish: {by_words}")
        by_mul = (alg.gen(lhs[0]) * alg.gen(lhs[1]) - alg.gen(rhs[0]) * alg.gen(rhs[1]) * names[cname]
                  - const)
        check(by_mul.is_zero(), f"{lhs} relation does not vanish under *: {by_mul}")


def crit_relations(seed: int) -> str:
    r = R.rng(seed)
    _relations_vanish(_generic())
    _relations_vanish(_generic("A-w"))
    for _ in range(10):
        _relations_vanish(Algebra(R.random_specialization(r, avoid_one=False)))
    return "6 relations: generic + 10 specializations"


# -- 2 ---------------------------------------------------------------------------

def crit_q_identity(seed: int) -> str:
    alg = _generic()
    for d in range(1, 11):
        res = q_identity_check(d, alg)
        check(res.is_zero(), f"d={d}: residual {res}")
    return "d = 1..10"


# -- 3 ---------------------------------------------------------------------------

def crit_gwa_data(seed: int) -> str:
    alg = _generic()
    p = alg.p
    x, y = GwaElement.gen(alg, "x"), GwaElement.gen(alg, "y")
    z = GwaElement.gen(alg, "z")
    check(y * x == (z - 1) / (p - 1), f"yx = {y * x}")
    check(x * y == (z * p - 1) / (p - 1), f"xy = {x * y}")
    return "yx = (z-1)/(p-1), xy = (pz-1)/(p-1)"


# -- 4 ---------------------------------------------------------------------------

def crit_oracle(seed: int) -> str:
    r = R.rng(seed)
    alg = _generic()
    for _ in range(200):
        e = R.random_pbw(r, alg, 6)
        g = to_gwa(e)
        check(from_gwa(g) == e, f"round trip failed for {e}")
        check(to_gwa(from_gwa(g)) == g, f"reverse round trip failed for {g}")
    for _ in range(100):
        a = R.random_pbw(r, alg, 6)
        b = R.random_pbw(r, alg, 6)
        check(to_gwa(a * b) == to_gwa(a) * to_gwa(b), f"engines disagree on {a} * {b}")
    return "200 round trips, 100 products"


# -- 5 ---------------------------------------------------------------------------

def crit_associativity(seed: int) -> str:
    r = R.rng(seed)
    alg = _generic()
    for _ in range(200):
        a, b, c = (R.random_pbw(r, alg, 4) for _ in range(3))
        check((a * b) * c == a * (b * c), f"PBW associativity fails on {a}, {b}, {c}")
    torus = QuantumTorus(torus_matrix(alg))
    for _ in range(200):
        a, b, c = (R.random_torus(r, torus) for _ in range(3))
        check((a * b) * c == a * (b * c), f"torus associativity fails on {a}, {b}, {c}")
    return "200 PBW + 200 torus triples"


# -- 6 ---------------------------------------------------------------------------

def crit_center(seed: int) -> str:
    alg = _generic()
    res = center_scan(alg, 4)
    check(res.dimension == 1 and res.basis[0] == 1, f"A: {res.summary()}")
    algw = _generic("A-w")
    res = center_scan(algw, 3)
    w = algw.gen("w")
    want = [algw.scalar(1), w, w ** 2, w ** 3]
    check(res.dimension == 4 and all(b == v for b, v in zip(res.basis, want)),
          f"A[w]: {[b.pretty() for b in res.basis]}")
    torus = QuantumTorus(torus_matrix(alg))
    res = center_scan(torus, 3)
    check(res.dimension == 1 and res.basis[0] == 1, f"torus: {res.summary()}")
    return "dims 1 / 4 / 1"


# -- 7 ---------------------------------------------------------------------------

def crit_group_law(seed: int) -> str:
    r = R.rng(seed)
    alg = _generic()
    ident = identity(alg)
    for _ in range(50):
        a, b, c, a2, b2, c2 = (R.random_scalar(r, alg) for _ in range(6))
        f = make_scalar_aut(alg, a, b, c)
        g = make_scalar_aut(alg, a2, b2, c2)
        check(compose(f, g) == make_scalar_aut(alg, a * a2, b * b2, c * c2), "composition law")
        inv = make_scalar_aut(alg, 1 / a, 1 / b, 1 / c)
        check(compose(f, inv) == ident and compose(inv, f) == ident, "inverse law")
    return "50 random triples"


# -- 8 ---------------------------------------------------------------------------

def iso_targets(params):
    p, q, l, u = params
    return {
        1: (p, q, l, u),
        2: (1 / p, q, 1 / l, 1 / u),
        3: (p, 1 / q, u, l),
        4: (1 / p, 1 / q, 1 / u, 1 / l),
    }


def crit_isomorphisms(seed: int) -> str:
    r = R.rng(seed)
    cfg = ParamConfig.generic()
    src = Algebra(cfg)
    for case, tgt_params in iso_targets(src.params).items():
        tgt = Algebra(cfg, tgt_params)
        scalars = [R.random_scalar(r, src) for _ in range(3)]
        f = make_isomorphism(IsoCase(case, *scalars), src, tgt)
        check(f.verified, f"case {case} did not verify")
    rejected = 0
    while rejected < 50:
        s = [R.random_rational(r, 9) for _ in range(4)]
        t = [R.random_rational(r, 9) for _ in range(4)]
        if any(iso_case_holds(k, s, t) for k in range(1, 5)):
            continue
        a, b = Algebra(cfg, s), Algebra(cfg, t)
        for case in range(1, 5):
            try:
                make_isomorphism(IsoCase(case), a, b)
            except MorphismError:
                pass
            else:
                raise CriterionFailure(f"case {case} accepted {s} -> {t}")
            check(not verify_relations(iso_candidate(IsoCase(case), a, b)).ok,
                  f"case {case} shape verified for {s} -> {t}")
        rejected += 1
    return "4 cases verified, 50 non-cases rejected"


# -- 9 ---------------------------------------------------------------------------

def random_generic_endo(r, alg) -> EndoData:
    c, d, e, f = R.random_sl2(r)
    return EndoData(R.random_scalar(r, alg), R.random_scalar(r, alg), R.random_scalar(r, alg),
                    i=r.randint(-3, 3), c=c, d=d, e=e, f=f)


def random_p2q4_endo(r, alg) -> EndoData:
    c, d, e, f = R.random_sl2(r, 2)
    j, k = r.randint(-2, 2), r.randint(-2, 2)
    r1, r2 = d * j - c * k, f * j - e * k
    bound = 2 * max(abs(r1), abs(r2)) + 2
    m = [m for m, _ in solve_power_identity((-bound, bound), (r1, r1), alg.cfg)]
    n = [n for n, _ in solve_power_identity((-bound, bound), (r2, r2), alg.cfg)]
    return EndoData(R.random_scalar(r, alg), R.random_scalar(r, alg), R.random_scalar(r, alg),
                    i=r.randint(-2, 2), j=j, k=k, m=m[0], n=n[0], c=c, d=d, e=e, f=f)


def _dixmier_ok(alg, data):
    f = make_positive_endo(alg, data)
    res = dixmier_invert(f)
    check(reduced_shape(res.residual) is not None, f"residual not reduced for {data}")
    ident = identity(alg)
    check(compose(f, res.inverse) == ident, f"f o f^-1 != id for {data}")
    check(compose(res.inverse, f) == ident, f"f^-1 o f != id for {data}")


def crit_dixmier(seed: int) -> str:
    r = R.rng(seed)
    alg = _twistless()
    for _ in range(50):
        _dixmier_ok(alg, random_generic_endo(r, alg))
    spec = Algebra(ParamConfig.specialized(2, 4, 1, 1), kind="A-loc")
    nontrivial = 0
    for _ in range(20):
        data = random_p2q4_endo(r, spec)
        nontrivial += bool(data.m or data.n)
        _dixmier_ok(spec, data)
    return f"50 generic + 20 at p=2,q=4 ({nontrivial} with m or n != 0)"


# -- 10 --------------------------------------------------------------------------

def crit_negative(seed: int) -> str:
    r = R.rng(seed)
    alg = _twistless()
    pm, pmi = psi_minus(alg), psi_minus_inverse(alg)
    ident = identity(alg)
    check(compose(pm, pmi) == ident and compose(pmi, pm) == ident, "psi_- inverse pair")
    z = alg.gen("z")
    check(pm.z_image() == invert_unit(z) / alg.p, "psi_-(z) != p^-1 z^-1")
    check(z_type(pm) == "negative" and z_type(pmi) == "negative", "psi_- parity")
    check(match_negative_shape(pmi) is not None, "psi_-^-1 shape")
    literal = 0
    for _ in range(20):
        f = make_positive_endo(alg, random_generic_endo(r, alg))
        check(z_type(f) == "positive", "positive map has wrong parity")
        conj = compose(pm, compose(f, pm))
        check(z_type(conj) == "positive", "psi_- f psi_- is not positive")
        check(z_type(compose(pm, f)) == "negative", "psi_- f is not negative")
        neg = make_negative_aut(f)
        check(z_type(neg) == "negative", "negative map has wrong parity")
        check(match_negative_shape(neg) is not None, f"negative map has unexpected shape: {neg}")
        literal += match_negative_shape(neg, literal_sign=True) is not None
        check(z_type(compose(neg, neg)) == "positive", "negative o negative is not positive")
    return f"psi_- pair + 20 random positive maps (y-image sign -1; unsigned form matched {literal})"


# -- 11 --------------------------------------------------------------------------

def crit_boundary(seed: int) -> str:
    r = R.rng(seed)
    for p in (-1, 2, 3, -2):
        for q in (-1, 2, 5):
            cfg = ParamConfig.specialized(p, q, 1, 1)
            a, b, c = (R.random_rational(r) for _ in range(3))
            for kind, expect in (("diagonal", True), ("xy-swap", p == -1),
                                 ("st-swap", q == -1), ("both-swaps", p == -1 and q == -1)):
                res = classify_affine(cfg, swap_matrix(kind, a, b, c))
                check(res.verified == expect, f"{kind} at p={p}, q={q}: verified={res.verified}")
                if expect:
                    check(res.family == kind, f"{kind} classified as {res.family}")
    return "grid p in {-1,2,3,-2}, q in {-1,2,5}"


# -- 12 --------------------------------------------------------------------------

def crit_ideals(seed: int) -> str:
    r = R.rng(seed)
    alg = _generic()
    gens = {g: GwaElement.gen(alg, g) for g in ("z", "s", "t", "x")}
    for _ in range(50):
        e = to_gwa(R.random_pbw(r, alg, 4))
        for g in ("z", "s", "t"):
            m = gens[g] * e
            check(ideal_membership(m, g), f"{g}*e not in ({g})")
    check(not ideal_membership(gens["x"], "z"), "x in (z)")
    check(not ideal_membership(to_gwa(alg.gen("x") * alg.gen("y")), "z"), "xy in (z)")
    for g in ("z", "s", "t"):
        e = gens[g] * to_gwa(R.random_pbw(r, alg, 3))
        for _ in range(20):
            u = to_gwa(R.random_pbw(r, alg, 3))
            check(ideal_membership(u * e, g) and ideal_membership(e * u, g),
                  f"({g}) not stable under multiplication")
    return "50 elements x 3 ideals, 2 non-members, 60 stability checks"


# -- 13 --------------------------------------------------------------------------

def crit_units(seed: int) -> str:
    r = R.rng(seed)
    alg = _generic("A-loc")
    for _ in range(100):
        u = R.random_unit(r, alg)
        v = invert_unit(u)
        check(u * v == 1 and v * u == 1, f"inverse of {u} failed")
    x, y, z, s = (alg.gen(g) for g in "xyzs")
    for bad in (x, y, z * x, z + s, s + 1, z * s * y):
        try:
            invert_unit(bad)
        except NotAUnitError:
            continue
        raise CriterionFailure(f"{bad} accepted as a unit")
    return "100 units, 6 non-units"


CRITERIA: List[Criterion] = [
    Criterion(1, "relation suite", ("relations", "pbw"), crit_relations),
    Criterion(2, "q-identity", ("pbw", "identity"), crit_q_identity),
    Criterion(3, "GWA defining data", ("gwa",), crit_gwa_data),
    Criterion(4, "oracle equivalence", ("gwa", "oracle", "pbw"), crit_oracle),
    Criterion(5, "associativity", ("pbw", "torus", "associativity"), crit_associativity),
    Criterion(6, "center scans", ("center", "probes"), crit_center),
    Criterion(7, "automorphism group law", ("automorphism", "morphisms"), crit_group_law),
    Criterion(8, "isomorphism cases", ("isomorphism", "morphisms"), crit_isomorphisms),
    Criterion(9, "quantum Dixmier battery", ("dixmier", "morphisms"), crit_dixmier),
    Criterion(10, "negative-type structure", ("negative", "morphisms"), crit_negative),
    Criterion(11, "affine boundary grid", ("boundary", "affine", "morphisms"), crit_boundary),
    Criterion(12, "ideal membership", ("ideal", "localization"), crit_ideals),
    Criterion(13, "unit arithmetic", ("unit", "localization"), crit_units),
]


def select(tag: Optional[str] = None) -> List[Criterion]:
    if not tag:
        return list(CRITERIA)
    tag = tag.lower()
    return [c for c in CRITERIA if tag in c.tags or tag == str(c.number)]


def run_one(c: Criterion, seed: Optional[int] = None) -> CriterionResult:
    base = R.seed_from_env() if seed is None else seed
    t0 = time.perf_counter()
    try:
        detail = c.run(base + c.number)
        ok = True
    except CriterionFailure as exc:
        ok, detail = False, str(exc)
    except Exception:  # reported, never fatal for the suite
        ok, detail = False, traceback.format_exc(limit=3).strip().splitlines()[-1]
    return CriterionResult(c.number, c.name, ok, detail, time.perf_counter() - t0)


def run(tag: Optional[str] = None, seed: Optional[int] = None) -> Iterable[CriterionResult]:
    for c in select(tag):
        yield run_one(c, seed)
