"""Text and JSON front end for elements, maps and configs."""

from __future__ import annotations

import json
from typing import Dict, Optional

from .algebra import KINDS, Algebra, AlgebraError, Element, NotAUnitError
from .gwa import GwaElement, to_gwa
from .localization import CommutationMatrix, LocElement, QuantumTorus, TorusElement
from .morphisms import GenMap
from .parse import ParseError, evaluate, parse
from .pbw import PbwElement
from .scalars import ParamConfig, ParamScalar

BASES = {"PBW": PbwElement, "GWA": GwaElement, "LOC": LocElement}


# -- elements from text ---------------------------------------------------------

def _names(algebra) -> Dict[str, object]:
    cfg = algebra.cfg
    names = {n: cfg.param(n) for n in ("p", "q", "l", "u")}
    if isinstance(algebra, QuantumTorus):
        for i, n in enumerate(algebra.matrix.names):
            names[n] = algebra.gen(i)
        return names
    gens = list(algebra.gens()) + ["z"]
    for g in gens:
        names[g] = algebra.gen(g)
    return names


def _power(base, n, tok):
    try:
        return base ** n
    except NotAUnitError:
        raise ParseError("negative power of a non-unit", tok.line, tok.col, tok.text)
    except ZeroDivisionError:
        raise ParseError("division by zero", tok.line, tok.col, tok.text)


def parse_element(text: str, algebra, basis: Optional[str] = None) -> Element:
    """Evaluate an expression in the generators (and p, q, l, u).

    ``basis="GWA"`` converts a PBW result of A to the z-basis.
    """
    node = parse(text)
    value = evaluate(node, _names(algebra), algebra.coerce, _power)
    if isinstance(algebra, QuantumTorus):
        if not isinstance(value, Element):
            value = TorusElement.scalar(algebra, value)
        return value
    if not isinstance(value, Element):
        value = algebra.scalar(value)
    if basis == "GWA":
        value = to_gwa(value)
    elif basis not in (None, value.basis):
        raise AlgebraError(f"basis {basis} not available for {algebra.kind}")
    return value


def parse_gwa(text: str, algebra: Algebra) -> GwaElement:
    """Evaluate an expression directly with z-basis arithmetic in A."""
    names = {n: algebra.cfg.param(n) for n in ("p", "q", "l", "u")}
    for g in ("x", "y", "z", "s", "t"):
        names[g] = GwaElement.gen(algebra, g)
    value = evaluate(parse(text), names, algebra.coerce, _power)
    if not isinstance(value, Element):
        value = GwaElement.scalar(algebra, value)
    return value


# -- configs and algebras ---------------------------------------------------------

def config_json(cfg: ParamConfig) -> Dict[str, str]:
    return cfg.to_json()


def algebra_json(alg: Algebra) -> dict:
    return {"kind": alg.kind, "params": alg.param_texts()}


def algebra_from_json(obj: dict, cfg: ParamConfig) -> Algebra:
    kind = obj.get("kind", "A")
    if kind not in KINDS:
        raise AlgebraError(f"unknown algebra kind {kind!r}")
    params = obj.get("params", ["p", "q", "l", "u"])
    if len(params) != 4:
        raise AlgebraError("params must list p, q, l, u")
    return Algebra(cfg, [cfg.coerce(str(v)) for v in params], kind)


def config_from_json(obj) -> ParamConfig:
    if obj is None:
        return ParamConfig.generic()
    if isinstance(obj, str):
        return ParamConfig.parse(obj)
    return ParamConfig({k: str(v) for k, v in obj.items()})


# -- elements as JSON --------------------------------------------------------------

def element_to_json(e: Element) -> dict:
    out = {"basis": e.basis}
    if isinstance(e, TorusElement):
        t = e.algebra
        out["names"] = list(t.matrix.names)
        out["matrix"] = t.matrix.to_json()
        out["config"] = {"fixed": config_json(t.cfg)}
    else:
        alg = e.algebra
        out["config"] = {"kind": alg.kind, "params": alg.param_texts(),
                         "fixed": config_json(alg.cfg)}
    out["terms"] = list(e.json_terms())
    return out


def element_from_json(obj: dict, algebra=None) -> Element:
    basis = obj.get("basis")
    conf = obj.get("config", {})
    if basis == "TORUS":
        if algebra is None:
            cfg = config_from_json(conf.get("fixed"))
            algebra = QuantumTorus(CommutationMatrix(obj["matrix"], obj.get("names"), cfg))
        cls = TorusElement
    else:
        if basis not in BASES:
            raise AlgebraError(f"unknown basis {basis!r}")
        cls = BASES[basis]
        if algebra is None:
            cfg = config_from_json(conf.get("fixed"))
            default_kind = {"PBW": "A", "GWA": "A", "LOC": "A-loc"}[basis]
            algebra = algebra_from_json({"kind": conf.get("kind", default_kind),
                                         "params": conf.get("params", ["p", "q", "l", "u"])}, cfg)
    terms = {}
    for t in obj.get("terms", []):
        mono = tuple(int(k) for k in t["exp"])
        c = algebra.coerce(str(t["coeff"]))
        terms[mono] = terms[mono] + c if mono in terms else c
    return cls(algebra, terms)


def element_to_text(e: Element) -> str:
    return e.pretty()


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


# -- maps --------------------------------------------------------------------------

def _infer_config(obj: dict) -> ParamConfig:
    if "config" in obj:
        return config_from_json(obj["config"])
    dom = obj.get("domain", {}).get("params", ["p", "q", "l", "u"])
    try:
        vals = [ParamScalar.parse(str(v)) for v in dom]
    except (ParseError, TypeError):
        return ParamConfig.generic()
    if all(v.is_constant() for v in vals):
        return ParamConfig.specialized(*(v.constant_value() for v in vals))
    return ParamConfig.generic()


def genmap_to_json(f: GenMap) -> dict:
    return {
        "domain": algebra_json(f.domain),
        "codomain": algebra_json(f.codomain),
        "config": config_json(f.domain.cfg),
        "images": {g: element_to_json(v) for g, v in f.images.items()},
        "verified": f.verified,
    }


def genmap_from_json(obj: dict) -> GenMap:
    """Load a map; the stored ``verified`` flag is ignored (always False)."""
    cfg = _infer_config(obj)
    dom = algebra_from_json(obj.get("domain", {}), cfg)
    cod = algebra_from_json(obj.get("codomain", obj.get("domain", {})), cfg)
    images = {}
    for g, v in obj.get("images", {}).items():
        if isinstance(v, str):
            images[g] = parse_element(v, cod)
        else:
            images[g] = element_from_json(v, cod)
    return GenMap(dom, cod, images, False)


def load_genmap(path: str) -> GenMap:
    with open(path) as fh:
        return genmap_from_json(json.load(fh))
