"""Definition files: a JSON wire format for the objects the command-line
tool works on.

A file holds a field descriptor plus named tensors with all scalars
written as exact strings ("3/2" over the rationals, "2 mod 5" over a
prime field), nested arrays indexed exactly like the in-memory tensors.
The structured sections are

* "hopf": mult/comult/counit/antipode (+ optional labels),
* "algebra": mult/unit (+ optional labels),
* "global": an algebra plus an everywhere-defined action and twist
  ("global_action" is accepted as an alias; the twist may also sit at
  the top level under "twist"),

and the flat sections are plain tensors: "action", "cocycle",
"idempotent", "theta", "gauge", "gamma", "gamma_prime", "integral_t",
"center_c".  Parse failures name the JSON path of the offending entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields as dc_fields

import numpy as np

from .errors import SpecFileError
from .fields import Field
from .hopf import AlgebraData, CoalgebraData, HopfAlgebraData
from .linalg import eqarr
from .partial import GlobalTwistedAction, TwistedPartialAction

_FLAT_SECTIONS = ("action", "cocycle", "idempotent", "theta", "gauge",
                  "gamma", "gamma_prime", "integral_t", "center_c")


@dataclass(frozen=True, eq=False)
class SpecFile:
    fld: Field
    hopf: HopfAlgebraData | None = None
    algebra: AlgebraData | None = None
    action: np.ndarray | None = None
    cocycle: np.ndarray | None = None
    glob: GlobalTwistedAction | None = None
    idempotent: np.ndarray | None = None
    theta: np.ndarray | None = None
    gauge: np.ndarray | None = None
    gamma: np.ndarray | None = None
    gamma_prime: np.ndarray | None = None
    integral_t: np.ndarray | None = None
    center_c: np.ndarray | None = None

    def __eq__(self, other):
        if not isinstance(other, SpecFile):
            return NotImplemented
        if self.fld != other.fld:
            return False
        for f in dc_fields(self):
            if f.name == "fld":
                continue
            a, b = getattr(self, f.name), getattr(other, f.name)
            if (a is None) != (b is None):
                return False
            if a is None:
                continue
            if f.name in ("hopf", "algebra", "glob"):
                if not _data_equal(a, b):
                    return False
            elif a.shape != b.shape or not eqarr(a, b):
                return False
        return True

    def partial_action(self) -> TwistedPartialAction:
        """The twisted partial action the file describes, or a
        SpecFileError naming what is missing."""
        for name in ("hopf", "algebra", "action", "cocycle"):
            if getattr(self, name) is None:
                raise SpecFileError(f"missing object {name!r}")
        return TwistedPartialAction(self.hopf, self.algebra, self.action,
                                    self.cocycle)


def _data_equal(a, b):
    if isinstance(a, HopfAlgebraData):
        return (a.dim == b.dim and eqarr(a.mult, b.mult)
                and eqarr(a.unit, b.unit) and eqarr(a.comult, b.comult)
                and eqarr(a.counit, b.counit) and eqarr(a.antipode, b.antipode)
                and a.labels == b.labels)
    if isinstance(a, AlgebraData):
        return (a.dim == b.dim and eqarr(a.mult, b.mult)
                and eqarr(a.unit, b.unit) and a.labels == b.labels)
    if isinstance(a, GlobalTwistedAction):
        return (_data_equal(a.alg, b.alg) and eqarr(a.action, b.action)
                and eqarr(a.twist, b.twist))
    raise TypeError(type(a).__name__)


def _tensor(fld, node, shape, path):
    """Parse a nested list of scalar strings into an object array of the
    given shape; any None in the shape accepts whatever length appears
    at that level (reported back through the result)."""
    if not shape:
        try:
            return fld.parse(node)
        except (TypeError, ValueError) as exc:
            raise SpecFileError(f"{path}: {exc}") from None
    if not isinstance(node, list):
        raise SpecFileError(f"{path}: expected a list, got "
                            f"{type(node).__name__}")
    want = shape[0]
    if want is not None and len(node) != want:
        raise SpecFileError(f"{path}: expected length {want}, got {len(node)}")
    if want is None and not node:
        raise SpecFileError(f"{path}: empty dimension")
    sub = [
        _tensor(fld, item, shape[1:], f"{path}[{i}]")
        for i, item in enumerate(node)
    ]
    first = np.asarray(sub[0], dtype=object) if shape[1:] else None
    out = np.empty((len(node),) + (first.shape if first is not None else ()),
                   dtype=object)
    for i, item in enumerate(sub):
        if shape[1:]:
            if np.asarray(item, dtype=object).shape != first.shape:
                raise SpecFileError(f"{path}[{i}]: ragged nesting")
        out[i] = item
    return out


def _require(obj, key, path):
    if key not in obj:
        raise SpecFileError(f"{path}: missing {key!r}")
    return obj[key]


def _labels(obj, n, path):
    labels = obj.get("labels")
    if labels is None:
        return None
    if (not isinstance(labels, list) or len(labels) != n
            or not all(isinstance(x, str) for x in labels)):
        raise SpecFileError(f"{path}.labels: expected {n} strings")
    return tuple(labels)


def _parse_algebra(fld, obj, path) -> AlgebraData:
    if not isinstance(obj, dict):
        raise SpecFileError(f"{path}: expected an object")
    mult_node = _require(obj, "mult", path)
    if not isinstance(mult_node, list) or not mult_node:
        raise SpecFileError(f"{path}.mult: expected a nonempty list")
    n = len(mult_node)
    mult = _tensor(fld, mult_node, (n, n, n), f"{path}.mult")
    unit = _tensor(fld, _require(obj, "unit", path), (n,), f"{path}.unit")
    return AlgebraData(fld, n, mult, unit, _labels(obj, n, path))


def _parse_hopf(fld, obj, path) -> HopfAlgebraData:
    alg = _parse_algebra(fld, obj, path)
    n = alg.dim
    comult = _tensor(fld, _require(obj, "comult", path), (n, n, n),
                     f"{path}.comult")
    counit = _tensor(fld, _require(obj, "counit", path), (n,),
                     f"{path}.counit")
    antipode = _tensor(fld, _require(obj, "antipode", path), (n, n),
                       f"{path}.antipode")
    coalg = CoalgebraData(fld, n, comult, counit)
    return HopfAlgebraData(alg, coalg, antipode)


def parse_spec(text: str, field: Field | None = None) -> SpecFile:
    """Parse a definition file.  ``field`` overrides the file's own
    descriptor when given."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from None
    if not isinstance(doc, dict):
        raise SpecFileError("top level: expected an object")
    if field is not None:
        fld = field
    else:
        if "field" not in doc:
            raise SpecFileError("missing field descriptor")
        try:
            fld = Field.from_name(doc["field"])
        except (TypeError, ValueError) as exc:
            raise SpecFileError(f"field: {exc}") from None

    known = {"field", "hopf", "algebra", "global", "global_action",
             "twist", *_FLAT_SECTIONS}
    for key in doc:
        if key not in known:
            raise SpecFileError(f"unknown section {key!r}")

    hopf = _parse_hopf(fld, doc["hopf"], "hopf") if "hopf" in doc else None
    algebra = (_parse_algebra(fld, doc["algebra"], "algebra")
               if "algebra" in doc else None)

    nh = hopf.dim if hopf else None
    na = algebra.dim if algebra else None
    out = {}
    shapes = {
        "action": (nh, na, na),
        "cocycle": (nh, nh, na),
        "gauge": (nh, na),
        "integral_t": (nh,),
        "center_c": (na,),
        "theta": (na, None),
        "gamma": (nh, None),
        "gamma_prime": (nh, None),
        "idempotent": (None,),
    }
    for name in _FLAT_SECTIONS:
        if name not in doc:
            continue
        shape = shapes[name]
        if (name in ("action", "cocycle", "gauge", "integral_t")
                and nh is None):
            raise SpecFileError(f"{name}: requires a 'hopf' section")
        if (name in ("action", "cocycle", "gauge", "center_c", "theta")
                and na is None):
            raise SpecFileError(f"{name}: requires an 'algebra' section")
        out[name] = _tensor(fld, doc[name], shape, name)

    glob = None
    gkey = "global" if "global" in doc else (
        "global_action" if "global_action" in doc else None)
    if gkey is not None:
        gobj = doc[gkey]
        if not isinstance(gobj, dict):
            raise SpecFileError(f"{gkey}: expected an object")
        if hopf is None:
            raise SpecFileError(f"{gkey}: requires a 'hopf' section")
        galg = _parse_algebra(fld, _require(gobj, "algebra", gkey),
                              f"{gkey}.algebra")
        nb = galg.dim
        gact = _tensor(fld, _require(gobj, "action", gkey), (nh, nb, nb),
                       f"{gkey}.action")
        if "twist" in gobj:
            twist_node, tpath = gobj["twist"], f"{gkey}.twist"
        elif "twist" in doc:
            twist_node, tpath = doc["twist"], "twist"
        else:
            raise SpecFileError(f"{gkey}: missing 'twist'")
        twist = _tensor(fld, twist_node, (nh, nh, nb), tpath)
        glob = GlobalTwistedAction(hopf, galg, gact, twist)
        if "idempotent" in out and out["idempotent"].shape != (nb,):
            raise SpecFileError(
                f"idempotent: expected length {nb}, got "
                f"{out['idempotent'].shape[0]}")
    elif "twist" in doc:
        raise SpecFileError("twist: requires a 'global' section")

    return SpecFile(fld=fld, hopf=hopf, algebra=algebra, glob=glob,
                    **{k: out.get(k) for k in _FLAT_SECTIONS})


def _emit(fld, arr):
    arr = np.asarray(arr)
    if arr.ndim == 0:
        return fld.format(arr.item())
    return [_emit(fld, row) for row in arr]


def _emit_algebra(fld, a: AlgebraData) -> dict:
    out = {"mult": _emit(fld, a.mult), "unit": _emit(fld, a.unit)}
    if a.labels is not None:
        out["labels"] = list(a.labels)
    return out


def serialize_spec(spec: SpecFile) -> str:
    """Canonical JSON text; parsing it back gives an equal SpecFile."""
    fld = spec.fld
    doc = {"field": fld.name}
    if spec.hopf is not None:
        h = spec.hopf
        doc["hopf"] = _emit_algebra(fld, h.algebra)
        doc["hopf"].update({
            "comult": _emit(fld, h.comult),
            "counit": _emit(fld, h.counit),
            "antipode": _emit(fld, h.antipode),
        })
    if spec.algebra is not None:
        doc["algebra"] = _emit_algebra(fld, spec.algebra)
    if spec.glob is not None:
        doc["global"] = {
            "algebra": _emit_algebra(fld, spec.glob.alg),
            "action": _emit(fld, spec.glob.action),
            "twist": _emit(fld, spec.glob.twist),
        }
    for name in _FLAT_SECTIONS:
        val = getattr(spec, name)
        if val is not None:
            doc[name] = _emit(fld, val)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_spec(path, field: Field | None = None) -> SpecFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec(fh.read(), field)


def save_spec(spec: SpecFile, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_spec(spec))
