"""Seeded random elements, scalars and map data for property checks."""

from __future__ import annotations

import os
import random
from fractions import Fraction
from typing import List

from .algebra import Algebra
from .localization import LocElement, QuantumTorus, TorusElement
from .pbw import PbwElement
from .scalars import ParamConfig


def seed_from_env(default: int = 20240) -> int:
    v = os.environ.get("GWA_SEED")
    return int(v) if v not in (None, "") else default


def rng(seed=None) -> random.Random:
    return random.Random(seed_from_env() if seed is None else seed)


def random_rational(r: random.Random, size: int = 5, nonzero: bool = True) -> Fraction:
    while True:
        v = Fraction(r.randint(-size, size), r.randint(1, size))
        if v or not nonzero:
            return v


def random_scalar(r: random.Random, alg, symbolic: bool = True):
    """A nonzero field element; in generic mode sometimes a parameter monomial."""
    c = random_rational(r)
    free = [n for n in "pqlu" if alg.cfg.is_free(n)]
    if symbolic and free and r.random() < 0.4:
        name = r.choice(free)
        return alg.coerce(c) * alg.cfg.param(name) ** r.choice([-1, 1, 2])
    return alg.coerce(c)


def random_pbw(r: random.Random, alg: Algebra, max_degree: int = 6, nterms: int = 3,
               symbolic: bool = True) -> PbwElement:
    n = 5 if alg.with_w else 4
    terms = {}
    for _ in range(r.randint(1, nterms)):
        deg = r.randint(0, max_degree)
        e = [0] * 5
        for _ in range(deg):
            e[r.randrange(n)] += 1
        terms[tuple(e)] = random_scalar(r, alg, symbolic)
    return PbwElement(alg, terms)


def random_specialization(r: random.Random, avoid_one: bool = True) -> ParamConfig:
    vals = []
    for _ in range(4):
        while True:
            v = random_rational(r, 7)
            if not (avoid_one and abs(v) == 1):
                break
        vals.append(v)
    return ParamConfig.specialized(*vals)


def random_unit(r: random.Random, alg: Algebra, radius: int = 4) -> LocElement:
    exps = tuple(r.randint(-radius, radius) for _ in range(3)) + (0,)
    return LocElement(alg, {exps: random_scalar(r, alg)})


def random_loc(r: random.Random, alg: Algebra, radius: int = 3, nterms: int = 3) -> LocElement:
    terms = {}
    for _ in range(r.randint(1, nterms)):
        exps = tuple(r.randint(-radius, radius) for _ in range(4))
        terms[exps] = random_scalar(r, alg)
    return LocElement(alg, terms)


def random_torus(r: random.Random, torus: QuantumTorus, radius: int = 3,
                 nterms: int = 3) -> TorusElement:
    terms = {}
    for _ in range(r.randint(1, nterms)):
        exps = tuple(r.randint(-radius, radius) for _ in range(torus.rank))
        terms[exps] = torus.coerce(random_rational(r))
    return TorusElement(torus, terms)


def random_sl2(r: random.Random, size: int = 3) -> List[int]:
    """(c, d, e, f) with cf - de = 1, built from elementary moves."""
    c, d, e, f = 1, 0, 0, 1
    for _ in range(r.randint(0, 3)):
        k = r.randint(-size, size)
        if r.random() < 0.5:
            c, d = c + k * e, d + k * f
        else:
            e, f = e + k * c, f + k * d
    if r.random() < 0.3:
        c, d, e, f = e, f, -c, -d
    return [c, d, e, f]
