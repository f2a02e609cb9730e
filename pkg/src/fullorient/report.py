"""JSON reports printed by the command-line tool, and their schemas."""

from __future__ import annotations

import json
from typing import Any

from .graph import Graph, components

REPORT_VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_CYCLIC = 2
EXIT_NEGATIVE = 3
EXIT_CAP = 4
EXIT_INFEASIBLE = 5

_vertex_list = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_arc_list = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}}

_not_chordal = {
    "type": "object",
    "required": ["chordal", "witness"],
    "properties": {"chordal": {"const": False}, "witness": {**_vertex_list, "minItems": 4}},
    "additionalProperties": False,
}

RESULT_SCHEMAS: dict[str, dict] = {
    "analyze": {
        "type": "object",
        "required": ["d", "dependent", "topological_order", "d_max"],
        "properties": {
            "d": {"type": "integer", "minimum": 0},
            "dependent": _arc_list,
            "topological_order": _vertex_list,
            "d_max": {"type": "integer"},
        },
        "additionalProperties": False,
    },
    "spectrum": {
        "type": "object",
        "required": ["d_min", "d_max", "histogram", "fully_orientable", "total_acyclic"],
        "properties": {
            "d_min": {"type": "integer", "minimum": 0},
            "d_max": {"type": "integer", "minimum": 0},
            "histogram": {
                "type": "object",
                "patternProperties": {"^[0-9]+$": {"type": "integer", "minimum": 1}},
                "additionalProperties": False,
            },
            "fully_orientable": {"type": "boolean"},
            "total_acyclic": {"type": "integer", "minimum": 1},
        },
        "additionalProperties": False,
    },
    "chordal": {
        "oneOf": [
            {
                "type": "object",
                "required": ["chordal", "peo"],
                "properties": {"chordal": {"const": True}, "peo": _vertex_list},
                "additionalProperties": False,
            },
            _not_chordal,
        ]
    },
    "synthesize": {
        "oneOf": [
            {
                "type": "object",
                "required": ["target", "d", "orientation"],
                "properties": {
                    "target": {"type": "integer"},
                    "d": {"type": "integer"},
                    "orientation": _arc_list,
                    "trace": {"type": "array", "items": {"type": "string"}},
                },
                "additionalProperties": False,
            },
            _not_chordal,
        ]
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["version", "command", "graph", "result", "exit_code"],
    "properties": {
        "version": {"const": REPORT_VERSION},
        "command": {"enum": sorted(RESULT_SCHEMAS)},
        "graph": {
            "type": "object",
            "required": ["n", "m", "c"],
            "properties": {k: {"type": "integer", "minimum": 0} for k in ("n", "m", "c")},
            "additionalProperties": False,
        },
        "result": {"type": "object"},
        "exit_code": {"enum": [EXIT_OK, EXIT_NEGATIVE]},
    },
    "additionalProperties": False,
}


def schema_for(command: str) -> dict:
    """Full schema of a report for ``command``."""
    schema = json.loads(json.dumps(REPORT_SCHEMA))
    schema["properties"]["command"] = {"const": command}
    schema["properties"]["result"] = RESULT_SCHEMAS[command]
    return schema


def make_report(command: str, g: Graph, result: dict[str, Any], exit_code: int) -> dict[str, Any]:
    c, _ = components(g)
    return {
        "version": REPORT_VERSION,
        "command": command,
        "graph": {"n": g.order, "m": g.size, "c": c},
        "result": result,
        "exit_code": exit_code,
    }


def dumps(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2)
