"""Structural probes: bounded-degree center scans, normality, q-integers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .algebra import Algebra, AlgebraError, Element
from .linalg import nullspace, solve
from .localization import QuantumTorus, TorusElement
from .pbw import PbwElement
from .gwa import GwaElement, from_gwa


@dataclass
class CenterScanResult:
    max_degree: int
    basis: List[Element] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def summary(self) -> Dict[str, int]:
        return {"dimension": self.dimension, "max_degree": self.max_degree}


def pbw_monomials(alg: Algebra, max_degree: int):
    """All PBW exponent vectors of total degree <= max_degree."""
    n = 5 if alg.with_w else 4
    out = []
    for deg in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(n), deg):
            e = [0] * 5
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return sorted(set(out), key=lambda e: (sum(e), e))


def laurent_ball(rank: int, radius: int):
    rng = range(-radius, radius + 1)
    return [e for e in itertools.product(rng, repeat=rank) if sum(map(abs, e)) <= radius]


def center_scan(algebra, max_degree: int) -> CenterScanResult:
    """Central elements among combinations of monomials of degree <= D.

    ``algebra`` is an :class:`Algebra` of kind A or A-w (PBW total degree),
    or a :class:`QuantumTorus` (L1 ball of Laurent exponents).
    """
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    if isinstance(algebra, QuantumTorus):
        monos = laurent_ball(algebra.rank, max_degree)
        make = lambda m: TorusElement._raw(algebra, {m: algebra.one()})
        gens = []
        for i in range(algebra.rank):
            g = algebra.gen(i)
            gens += [g, g ** -1]
    else:
        if algebra.kind not in ("A", "A-w"):
            raise AlgebraError("center_scan supports A, A-w and tori")
        monos = pbw_monomials(algebra, max_degree)
        make = lambda m: PbwElement._raw(algebra, {m: algebra.one()})
        gens = [algebra.gen(g) for g in algebra.gens()]
    elems = [make(m) for m in monos]
    rows: Dict[tuple, Dict[int, object]] = {}
    for col, e in enumerate(elems):
        for gi, g in enumerate(gens):
            for m, c in (e * g - g * e)._terms.items():
                rows.setdefault((gi, m), {})[col] = c
    basis_vecs = nullspace(list(rows.values()), len(elems), algebra.one())
    basis = []
    for vec in basis_vecs:
        terms = {monos[j]: v for j, v in vec.items()}
        cls = TorusElement if isinstance(algebra, QuantumTorus) else PbwElement
        b = cls._raw(algebra, terms)
        # normalize so the leading coefficient is 1
        lead = b.sorted_terms()[0][1]
        b = b / lead
        for g in gens:
            if (b * g - g * b):
                raise AssertionError("center_scan produced a non-central element")
        basis.append(b)
    basis.sort(key=lambda b: [b._mono_key(m) for m, _ in b.sorted_terms()])
    return CenterScanResult(max_degree, basis)


def normal_witness(u: Element, g: Element, max_degree: int = 1) -> Optional[Element]:
    """Some v of PBW degree <= max_degree with u*g = v*u, else None."""
    alg = u.algebra
    monos = pbw_monomials(alg, max_degree)
    cols = [PbwElement._raw(alg, {m: alg.one()}) * u for m in monos]
    target = u * g
    rows: Dict[tuple, Dict[int, object]] = {}
    for j, e in enumerate(cols):
        for m, c in e._terms.items():
            rows.setdefault(m, {})[j] = c
    for m in target._terms:
        rows.setdefault(m, {})
    keys = list(rows)
    sol = solve([rows[k] for k in keys], [target.coefficient(k) for k in keys], len(monos))
    if sol is None:
        return None
    return PbwElement._raw(alg, {monos[j]: v for j, v in sol.items()})


def normality_check(u: Element, algebra: Algebra = None, max_degree: int = 1) -> bool:
    """Whether u g lies in A u for every generator g (degree-matched search)."""
    if isinstance(u, GwaElement):
        u = from_gwa(u)
    if not isinstance(u, PbwElement):
        raise TypeError("normality_check expects an element of A or A-w")
    if not u:
        raise ValueError("u must be nonzero")
    if algebra is not None and algebra != u.algebra:
        raise AlgebraError("element does not live in the given algebra")
    alg = u.algebra
    return all(normal_witness(u, alg.gen(g), max_degree) is not None for g in alg.gens())


def q_integer(d: int, algebra=None):
    """[d]_p = (p^d - 1)/(p - 1) = 1 + p + ... + p^(d-1)."""
    if d < 0:
        raise ValueError("d must be >= 0")
    alg = algebra if algebra is not None else Algebra()
    alg.require_p_not_one()
    return (alg.p ** d - 1) / (alg.p - 1)
