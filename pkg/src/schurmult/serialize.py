"""JSON structure-constant format.

    {"dim": n, "basis": ["x", "z", ...],
     "products": [{"i": 0, "j": 0, "k": 1, "c": "1"}, ...]}

Absent triples have coefficient 0. Coefficients are strings ``"p"`` or
``"p/q"``.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .algebra import Algebra
from .errors import AlgebraError
from .linalg import format_scalar

SCALAR_PATTERN = r"^-?[0-9]+(/[0-9]*[1-9][0-9]*)?$"

ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["dim", "basis", "products"],
    "properties": {
        "dim": {"type": "integer", "minimum": 0},
        "basis": {"type": "array", "items": {"type": "string"}},
        "products": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "j", "k", "c"],
                "properties": {
                    "i": {"type": "integer", "minimum": 0},
                    "j": {"type": "integer", "minimum": 0},
                    "k": {"type": "integer", "minimum": 0},
                    "c": {"type": "string", "pattern": SCALAR_PATTERN},
                },
            },
        },
        "nilpotent": {"type": "boolean"},
    },
}


def algebra_to_json(a: Algebra) -> dict:
    return {
        "dim": a.dim,
        "basis": list(a.basis),
        "products": [
            {"i": i, "j": j, "k": k, "c": format_scalar(c)}
            for i, j, w in a.products
            for k, c in enumerate(w)
            if c
        ],
        "nilpotent": a.nilpotent,
    }


def algebra_from_json(data: dict) -> Algebra:
    """Validate, build and associativity-check an algebra."""
    try:
        jsonschema.validate(data, ALGEBRA_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise AlgebraError(f"invalid algebra file: {exc.message}") from None
    n = data["dim"]
    if len(data["basis"]) != n:
        raise AlgebraError(f"basis has {len(data['basis'])} names for dim {n}")
    products: dict[tuple[int, int], dict[int, str]] = {}
    for entry in data["products"]:
        i, j, k = entry["i"], entry["j"], entry["k"]
        if max(i, j, k) >= n:
            raise AlgebraError(f"index out of range in product {entry}")
        terms = products.setdefault((i, j), {})
        if k in terms:
            raise AlgebraError(f"duplicate product entry {entry}")
        terms[k] = entry["c"]
    a = Algebra.from_products(data["basis"], products)
    # touch the cached flag so nilpotency is recorded on load
    a.nilpotent
    return a


def load_algebra(path) -> Algebra:
    with open(path) as fh:
        return algebra_from_json(json.load(fh))


def dump_algebra(a: Algebra, path) -> None:
    Path(path).write_text(json.dumps(algebra_to_json(a), indent=2) + "\n")
