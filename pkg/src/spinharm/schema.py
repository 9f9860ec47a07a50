"""JSON Schemas for the machine-readable CLI outputs.

Plain dictionaries; validate with any JSON Schema (draft 2020-12) validator.
"""

_PARAMS = {"type": "object", "additionalProperties": {"type": ["integer", "number"]}}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "verification report",
    "type": "object",
    "required": ["meta", "cases", "summary"],
    "properties": {
        "meta": {
            "type": "object",
            "required": ["seed", "l_max", "pairs", "tol", "version"],
            "properties": {
                "seed": {"type": "integer", "minimum": 0},
                "l_max": {"type": "integer", "minimum": 0},
                "pairs": {"type": "integer", "minimum": 1},
                "tol": {"type": "number", "exclusiveMinimum": 0},
                "version": {"type": "string"},
                "filter": {"type": "string"},
                "prng": {"type": "string"},
            },
        },
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "params", "residual", "verdict"],
                "properties": {
                    "id": {"type": "string"},
                    "params": _PARAMS,
                    "residual": {"type": ["number", "null"], "minimum": 0},
                    "verdict": {"enum": ["pass", "fail"]},
                    "kind": {"enum": ["identity", "vanishing", "extraction"]},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["total", "passed", "failed"],
            "properties": {k: {"type": "integer", "minimum": 0} for k in ("total", "passed", "failed")},
        },
        "timestamp": {"type": "string"},
    },
}

LIST_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "theorem index",
    "type": "object",
    "required": ["meta", "theorems", "summary"],
    "properties": {
        "meta": {"type": "object", "required": ["version"]},
        "theorems": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "family", "citation", "domain", "mode"],
                "properties": {
                    "id": {"type": "string"},
                    "family": {"enum": ["scalar-bilocal", "scalar-tensor", "spin-spin", "local", "appendix"]},
                    "citation": {"type": "string", "pattern": "^eq:"},
                    "domain": {"type": "string"},
                    "mode": {"enum": ["explicit", "extraction"]},
                    "local": {"type": "boolean"},
                    "parent": {"type": ["string", "null"]},
                    "derived": {"type": ["string", "null"]},
                    "notes": {"type": ["string", "null"]},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["total", "explicit", "extraction"],
            "properties": {k: {"type": "integer", "minimum": 0} for k in ("total", "explicit", "extraction")},
        },
    },
}
