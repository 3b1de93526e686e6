"""JSON model files.

Schema (all integers exact; no floats)::

    {
      "label": "k3-fermat-z3",
      "p": 3,
      "a": [3, 1, 1], "b": [1, 1, 1],
      "h0": 3, "h": [0, 0, 0],
      "r0": 0, "r": [0, 0, 0],
      "sw": {"total": 1, "lifts": [1, null, null], "chamber": null}
    }

``h``, ``r``, ``r0``, ``label`` and ``sw`` are optional.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from equivariant_sw.errors import EquivariantSWError, StructuralError
from equivariant_sw.reps import ModelSpec

REQUIRED = ("p", "a", "b", "h0")
KNOWN = {"label", "p", "a", "b", "h0", "h", "r0", "r", "sw"}


class SchemaError(EquivariantSWError, ValueError):
    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.field = field
        self.line = line


def _int(doc: dict, key: str, *, optional=False, default=None) -> Any:
    if key not in doc:
        if optional:
            return default
        raise SchemaError("missing required key", key)
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(f"expected an integer, got {v!r}", key)
    return v


def _int_array(doc: dict, key: str, p: int, *, optional=False, allow_null=False, prefix=""):
    name = prefix + key
    if key not in doc or doc[key] is None:
        if optional:
            return None
        raise SchemaError("missing required key", name)
    v = doc[key]
    if not isinstance(v, list):
        raise SchemaError(f"expected an array of {p} integers", name)
    if len(v) != p:
        raise SchemaError(f"expected exactly p = {p} entries, got {len(v)}", name)
    for i, x in enumerate(v):
        if x is None and allow_null:
            continue
        if isinstance(x, bool) or not isinstance(x, int):
            raise SchemaError(f"entry {i} must be an integer, got {x!r}", name)
    return v


def model_from_dict(doc: Any) -> ModelSpec:
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    unknown = set(doc) - KNOWN
    if unknown:
        raise SchemaError(f"unknown keys {sorted(unknown)}", sorted(unknown)[0])
    p = _int(doc, "p")
    a = _int_array(doc, "a", p)
    b = _int_array(doc, "b", p)
    h0 = _int(doc, "h0")
    h = _int_array(doc, "h", p, optional=True)
    r0 = _int(doc, "r0", optional=True, default=0)
    r = _int_array(doc, "r", p, optional=True)
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise SchemaError("expected a string", "label")

    sw_total = sw_lift = chamber = None
    sw = doc.get("sw")
    if sw is not None:
        if not isinstance(sw, dict):
            raise SchemaError("expected an object", "sw")
        extra = set(sw) - {"total", "lifts", "chamber"}
        if extra:
            raise SchemaError(f"unknown keys {sorted(extra)}", "sw")
        if sw.get("total") is not None:
            sw_total = _int(sw, "total")
        sw_lift = _int_array(sw, "lifts", p, optional=True, allow_null=True, prefix="sw.")
        chamber = sw.get("chamber")
        if chamber is not None and not isinstance(chamber, str):
            raise SchemaError("expected a string", "sw.chamber")

    try:
        return ModelSpec.build(
            p, a, b, h0, h, r0, r,
            label=label, sw_total=sw_total, sw_lift=sw_lift, chamber=chamber,
        )
    except StructuralError as exc:
        raise SchemaError(str(exc), exc.field) from exc
    except (ValueError, TypeError) as exc:
        raise SchemaError(str(exc), "p") from exc


def model_to_dict(model: ModelSpec) -> dict:
    doc = {
        "label": model.label,
        "p": model.order,
        "a": model.a.to_list(),
        "b": model.b.to_list(),
        "h0": model.h0,
        "h": model.h.to_list(),
        "r0": model.r0,
        "r": model.r.to_list(),
    }
    if model.sw_total is not None or model.sw_lift is not None or model.chamber is not None:
        doc["sw"] = {
            "total": model.sw_total,
            "lifts": list(model.sw_lift) if model.sw_lift is not None else None,
            "chamber": model.chamber,
        }
    return doc


def loads(text: str) -> ModelSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(exc.msg, line=exc.lineno) from exc
    return model_from_dict(doc)


def load(path: str | Path) -> ModelSpec:
    return loads(Path(path).read_text())


def dumps_doc(doc: dict) -> str:
    """One key per line with compact values, so weight arrays stay readable."""
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items())
    return "{\n" + body + "\n}"


def dumps(model: ModelSpec) -> str:
    return dumps_doc(model_to_dict(model))


# Oracle system files carry floats (coefficients, targets); complex numbers are
# written as [re, im] pairs:
#
#   {"p": 3, "in_weights": [1], "out_weights": [2],
#    "terms": [[{"coef": [1, 0], "alpha": [2], "beta": [0]},
#               {"coef": [-1, 0], "alpha": [0], "beta": [1]}]],
#    "target": [[0, 0]]}


def _complex(v, field: str) -> complex:
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    if (
        isinstance(v, list)
        and len(v) == 2
        and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v)
    ):
        return complex(v[0], v[1])
    raise SchemaError(f"expected a number or [re, im], got {v!r}", field)


def system_from_dict(doc: Any):
    from equivariant_sw.oracle import EquivariantSystem, Monomial

    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    for key in ("p", "in_weights", "out_weights", "terms"):
        if key not in doc:
            raise SchemaError("missing required key", key)
    p = _int(doc, "p")
    ins, outs = doc["in_weights"], doc["out_weights"]
    for name, arr in (("in_weights", ins), ("out_weights", outs)):
        if not isinstance(arr, list) or any(
            isinstance(x, bool) or not isinstance(x, int) for x in arr
        ):
            raise SchemaError("expected an array of integers", name)
    terms = doc["terms"]
    if not isinstance(terms, list) or len(terms) != len(outs):
        raise SchemaError("expected one list of monomials per output", "terms")
    packed = []
    for c, mons in enumerate(terms):
        row = []
        if not isinstance(mons, list):
            raise SchemaError("expected a list of monomials", f"terms[{c}]")
        for k, mon in enumerate(mons):
            name = f"terms[{c}][{k}]"
            if not isinstance(mon, dict) or not {"coef", "alpha", "beta"} <= set(mon):
                raise SchemaError("monomial needs coef, alpha, beta", name)
            alpha, beta = mon["alpha"], mon["beta"]
            for nm, arr in (("alpha", alpha), ("beta", beta)):
                if not isinstance(arr, list) or len(arr) != len(ins) or any(
                    isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in arr
                ):
                    raise SchemaError(
                        f"{nm} must be {len(ins)} non-negative integers", name
                    )
            row.append(Monomial(_complex(mon["coef"], name + ".coef"), tuple(alpha), tuple(beta)))
        packed.append(tuple(row))
    target = None
    if doc.get("target") is not None:
        target = tuple(_complex(t, f"target[{i}]") for i, t in enumerate(doc["target"]))
    try:
        return EquivariantSystem(p, tuple(ins), tuple(outs), tuple(packed), target)
    except (ValueError, TypeError) as exc:
        raise SchemaError(str(exc)) from exc


def system_to_dict(system) -> dict:
    return {
        "p": system.p,
        "in_weights": list(system.in_weights),
        "out_weights": list(system.out_weights),
        "terms": [
            [
                {
                    "coef": [m.coefficient.real, m.coefficient.imag],
                    "alpha": list(m.alpha),
                    "beta": list(m.beta),
                }
                for m in mons
            ]
            for mons in system.terms
        ],
        "target": [[t.real, t.imag] for t in system.target],
    }


def load_system(path: str | Path):
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(exc.msg, line=exc.lineno) from exc
    return system_from_dict(doc)
