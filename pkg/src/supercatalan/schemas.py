"""JSON Schemas for everything the CLI writes as JSON."""

from __future__ import annotations

QPOLY = {
    "type": "object",
    "required": ["min_deg", "coeffs"],
    "properties": {
        "min_deg": {"type": "integer"},
        "coeffs": {"type": "array", "items": {"type": "string", "pattern": "^-?[0-9]+$"}},
    },
}

_VALUE = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["qpoly", "fraction", "int", "bool", "text"]},
    },
}

_CHECK = {
    "type": "object",
    "required": ["params", "holds"],
    "properties": {
        "params": {"type": "object"},
        "holds": {"type": "boolean"},
        "lhs": _VALUE,
        "rhs": _VALUE,
    },
}

REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "VerificationReport",
    "type": "object",
    "required": ["identity", "params", "status", "witness", "elapsed_ms"],
    "properties": {
        "identity": {"type": "string"},
        "description": {"type": "string"},
        "params": {"type": "object"},
        "status": {"enum": ["pass", "fail", "reported"]},
        "witness": {"oneOf": [{"type": "null"}, _CHECK]},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "checks": {"type": "array", "items": _CHECK},
    },
}

REPORT_LIST = {"type": "array", "items": REPORT}

PATH_STATS = {
    "type": "object",
    "required": ["maj", "des", "height", "end_level", "min_level", "h_minus", "h_plus"],
    "properties": {
        k: {"type": ["integer", "null"] if k.startswith("h_") else "integer"}
        for k in ("maj", "des", "height", "end_level", "min_level", "h_minus", "h_plus")
    },
}

ENUMERATION = {
    "type": "object",
    "required": ["family", "count", "paths"],
    "properties": {
        "family": {"type": "string"},
        "count": {"type": "integer", "minimum": 0},
        "paths": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["path"],
                "properties": {"path": {"type": "string", "pattern": "^[01]*$"}, "stats": PATH_STATS},
            },
        },
    },
}

GENFUN = {
    "type": "object",
    "required": ["family", "statistic", "polynomial", "text"],
    "properties": {
        "family": {"type": "string"},
        "statistic": {"enum": ["maj", "maj_minus_des"]},
        "polynomial": QPOLY,
        "text": {"type": "string"},
    },
}

BIJECTION_TRACE = {
    "type": "object",
    "required": ["name", "input", "output", "case", "landmarks", "stat_delta"],
    "properties": {
        "name": {"type": "string"},
        "input": {"type": "string", "pattern": "^[01]*$"},
        "output": {"type": "string", "pattern": "^[01]*$"},
        "case": {"enum": [None, "Case1", "Case2"]},
        "landmarks": {
            "type": "object",
            "additionalProperties": {
                "oneOf": [
                    {"type": "integer"},
                    {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                ]
            },
        },
        "stat_delta": {
            "type": "object",
            "required": ["maj", "des"],
            "properties": {"maj": {"type": "integer"}, "des": {"type": "integer"}},
        },
    },
}

TABLE = {
    "type": "object",
    "required": ["kind", "entries"],
    "properties": {
        "kind": {"enum": ["S", "T", "Sq", "Tq", "Bq"]},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["value"],
                "properties": {
                    "m": {"type": "integer"},
                    "n": {"type": "integer"},
                    "r": {"type": "integer"},
                    "value": {"oneOf": [{"type": "string"}, QPOLY]},
                    "text": {"type": "string"},
                },
            },
        },
    },
}
