"""Serialized formats for every artifact the CLI consumes.

Every top-level file carries `"format": 1`; loaders reject unknown keys
and validate what they load, so a loaded value is ready to use.
"""

import json

from .errors import DanglingBoundary, WorkbenchError
from .fincat import CatFunctor, CatNat, fincat_from_json, fincat_to_json
from .pro import make_pro
from .transforms import CatValuedFunctor, Modification, PseudoNat, TwoFunctor
from .twocat import dualize, two_cat_from_json, two_cat_to_json, validate_two_category


class IoError(WorkbenchError):
    code = "IoError"


class ParseError(WorkbenchError):
    code = "ParseError"


def load_document(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except ValueError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != 1:
        raise ParseError(f"{path}: missing or unsupported format field")
    return doc


def _check_keys(doc, allowed, what):
    extra = sorted(set(doc) - allowed - {"format"})
    if extra:
        raise ParseError(f"{what}: unknown key {extra[0]!r}")


def load_two_category(path):
    doc = load_document(path)
    try:
        return validate_two_category(two_cat_from_json(doc))
    except DanglingBoundary:
        raise
    except KeyError as exc:
        raise ParseError(f"{path}: missing key {exc}") from exc


def fincat_doc(cat):
    return fincat_to_json(cat)


def catvalued_to_json(F):
    return {
        "format": 1,
        "source": two_cat_to_json(F.source),
        "fibers": {o: fincat_to_json(c) for o, c in sorted(F.fibers.items())},
        "map_1": {f: {"ob": dict(sorted(fn.ob.items())),
                      "mor": dict(sorted(fn.mor.items()))}
                  for f, fn in sorted(F.on1.items())},
        "map_2": {a: dict(sorted(n.comp.items())) for a, n in sorted(F.on2.items())},
    }


def catvalued_from_json(doc, what="category-valued functor"):
    _check_keys(doc, {"source", "fibers", "map_1", "map_2"}, what)
    source = validate_two_category(two_cat_from_json(doc["source"]))
    fibers = {o: fincat_from_json(d) for o, d in doc["fibers"].items()}
    on1 = {}
    for f, table in doc["map_1"].items():
        s, t = source.one_cells[f]
        on1[f] = CatFunctor(fibers[s], fibers[t],
                            dict(table["ob"]), dict(table["mor"]))
    on2 = {}
    for a, comp in doc["map_2"].items():
        on2[a] = CatNat(on1[source.two_src(a)], on1[source.two_tgt(a)], dict(comp))
    return CatValuedFunctor(source, fibers, on1, on2).validate()


def load_catvalued(path):
    return catvalued_from_json(load_document(path), path)


def two_functor_to_json(F):
    return {
        "format": 1,
        "source": two_cat_to_json(F.source),
        "target": two_cat_to_json(F.target),
        "map_obj": dict(sorted(F.ob.items())),
        "map_1": dict(sorted(F.on1.items())),
        "map_2": dict(sorted(F.on2.items())),
    }


def two_functor_from_json(doc, what="functor"):
    _check_keys(doc, {"source", "target", "map_obj", "map_1", "map_2"}, what)
    source = validate_two_category(two_cat_from_json(doc["source"]))
    target = validate_two_category(two_cat_from_json(doc["target"]))
    return TwoFunctor(source, target, dict(doc["map_obj"]),
                      dict(doc["map_1"]), dict(doc["map_2"])).validate()


def pseudonat_to_json(theta):
    return {
        "format": 1,
        "F": catvalued_to_json(theta.F),
        "G": catvalued_to_json(theta.G),
        "components": {o: {"ob": dict(sorted(f.ob.items())),
                           "mor": dict(sorted(f.mor.items()))}
                       for o, f in sorted(theta.comp.items())},
        "coherences": {f: dict(sorted(n.comp.items()))
                       for f, n in sorted(theta.coh.items())},
    }


def pseudonat_from_json(doc, what="transformation"):
    from .fincat import compose_functors

    _check_keys(doc, {"F", "G", "components", "coherences"}, what)
    F = catvalued_from_json(doc["F"], what)
    G = catvalued_from_json(doc["G"], what)
    comp = {}
    for o, table in doc["components"].items():
        comp[o] = CatFunctor(F.fiber(o), G.fiber(o),
                             dict(table["ob"]), dict(table["mor"]))
    coh = {}
    for f, comps in doc["coherences"].items():
        s, t = F.source.one_cells[f]
        coh[f] = CatNat(compose_functors(G.on1[f], comp[s]),
                        compose_functors(comp[t], F.on1[f]), dict(comps))
    return PseudoNat(F, G, comp, coh).validate()


def modification_to_json(rho):
    return {
        "format": 1,
        "theta": pseudonat_to_json(rho.theta),
        "eta": pseudonat_to_json(rho.eta),
        "components": {o: dict(sorted(n.comp.items()))
                       for o, n in sorted(rho.comp.items())},
    }


def modification_from_json(doc, what="modification"):
    _check_keys(doc, {"theta", "eta", "components"}, what)
    theta = pseudonat_from_json(doc["theta"], what)
    eta = pseudonat_from_json(doc["eta"], what)
    comp = {}
    for o, comps in doc["components"].items():
        comp[o] = CatNat(theta.comp[o], eta.comp[o], dict(comps))
    return Modification(theta, eta, comp).validate()


def pro_object_to_json(X):
    return {
        "format": 1,
        "index": two_cat_to_json(X.index),
        "host": two_cat_to_json(X.host),
        "diagram": {
            "map_obj": dict(sorted(X.diagram.ob.items())),
            "map_1": dict(sorted(X.diagram.on1.items())),
            "map_2": dict(sorted(X.diagram.on2.items())),
        },
    }


def pro_object_from_json(doc, what="pro-object"):
    _check_keys(doc, {"index", "host", "diagram"}, what)
    index = validate_two_category(two_cat_from_json(doc["index"]))
    host = validate_two_category(two_cat_from_json(doc["host"]))
    d = doc["diagram"]
    diagram = TwoFunctor(dualize(index), host, dict(d["map_obj"]),
                         dict(d["map_1"]), dict(d["map_2"]))
    return make_pro(index, diagram, host)


def load_pro_object(path):
    return pro_object_from_json(load_document(path), path)


def write_document(path, doc):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
