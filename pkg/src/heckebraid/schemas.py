"""JSON schemas for every machine-readable output."""
from __future__ import annotations

import jsonschema

WORD = {"type": "string", "pattern": r"^([0-9]+([ ,]+[0-9]+)*)?$"}

LAURENT = {
    "type": "object",
    "required": ["terms"],
    "additionalProperties": False,
    "properties": {
        "terms": {
            "type": "array",
            "items": {
                "type": "array",
                "minItems": 2,
                "maxItems": 2,
                "items": {"type": "integer"},
            },
        }
    },
}

HECKE = {
    "type": "object",
    "required": ["cartan", "terms"],
    "additionalProperties": False,
    "properties": {
        "cartan": {"type": "string"},
        "basis": {"enum": ["T", "C"]},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["w", "poly"],
                "additionalProperties": False,
                "properties": {"w": WORD, "poly": LAURENT},
            },
        },
    },
}

WEIGHT_LAURENT = {
    "type": "object",
    "required": ["cartan", "terms"],
    "additionalProperties": False,
    "properties": {
        "cartan": {"type": "string"},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["exp", "poly"],
                "additionalProperties": False,
                "properties": {"exp": {"type": "array", "items": {"type": "integer"}}, "poly": LAURENT},
            },
        },
    },
}

RUN_REPORT = {
    "type": "object",
    "required": ["command", "cartan", "status", "checks", "timing_ms"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "cartan": {"type": "string"},
        "status": {"enum": ["pass", "fail"]},
        "seed": {"type": ["integer", "null"]},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "detail"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": ["pass", "fail"]},
                    "detail": {"type": "string"},
                },
            },
        },
        "timing_ms": {"type": "number", "minimum": 0},
    },
}

KL_OUTPUT = {
    "type": "object",
    "required": ["report", "table"],
    "additionalProperties": False,
    "properties": {
        "report": RUN_REPORT,
        "table": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["y", "w", "poly"],
                "additionalProperties": False,
                "properties": {"y": WORD, "w": WORD, "poly": LAURENT},
            },
        },
    },
}

CACHE_RECORD = {
    "type": "object",
    "required": ["cartan", "y", "w", "poly"],
    "additionalProperties": False,
    "properties": {"cartan": {"type": "string"}, "y": WORD, "w": WORD, "poly": LAURENT},
}

ROOTS = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}

STEINBERG = {
    "type": "object",
    "required": ["cartan", "num_components", "component_dim", "flag_dim", "orbit_dims"],
    "additionalProperties": False,
    "properties": {
        "cartan": {"type": "string"},
        "num_components": {"type": "integer", "minimum": 1},
        "component_dim": {"type": "integer", "minimum": 0},
        "flag_dim": {"type": "integer", "minimum": 0},
        "orbit_dims": {"type": "object", "additionalProperties": {"type": "integer"}},
    },
}


def validate(instance, schema) -> None:
    jsonschema.validate(instance, schema)
