"""Versioned JSON formats for graphs, drawings, and reports.

Every payload carries a `format` field.  Writers emit canonical bytes:
keys sorted, two-space indent, vertex and edge arrays in label order,
one trailing newline.  Reading a canonically written file and writing
it again reproduces the bytes exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .drawing import CombinatorialDrawing, CrossingSpec
from .errors import UsageError
from .graph import Graph, VertexLabel
from .planarity import RotationSystem

GRAPH_FORMAT = "graph/v1"
DRAWING_FORMAT = "drawing/v1"
SWEEP_FORMAT = "sweep/v1"
ANALYSIS_FORMAT = "analysis/v1"


def dumps_canonical(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_json(path: str, payload: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(payload))


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _require_format(obj: Any, expected: str) -> dict:
    if not isinstance(obj, dict):
        raise UsageError(
            f"expected a JSON object, got {type(obj).__name__}")
    got = obj.get("format")
    if got != expected:
        raise UsageError(f"expected format {expected!r}, got {got!r}")
    return obj


def graph_to_payload(g: Graph) -> dict:
    return {
        "format": GRAPH_FORMAT,
        "vertices": [v.key for v in g.vertices],
        "edges": [[u.key, v.key] for u, v in g.edges],
    }


def graph_from_payload(obj: Any) -> Graph:
    obj = _require_format(obj, GRAPH_FORMAT)
    try:
        vertices = [VertexLabel.parse(s) for s in obj["vertices"]]
        edges = [(VertexLabel.parse(u), VertexLabel.parse(v))
                 for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise UsageError(f"malformed graph payload: {exc}") from None
    return Graph(vertices, edges)


def drawing_to_payload(d: CombinatorialDrawing) -> dict:
    crossings = []
    for c in d.crossings:
        (a, b), (x, y) = c.edges
        crossings.append({"id": c.id,
                          "edges": [[a.key, b.key], [x.key, y.key]]})
    orders = {f"{u.key}|{v.key}": list(order)
              for (u, v), order in sorted(d.edge_orders.items()) if order}
    rotations = {v.key: [w.key for w in ring]
                 for v, ring in d.rotations.items()}
    return {
        "format": DRAWING_FORMAT,
        "graph": graph_to_payload(d.base),
        "crossings": crossings,
        "edge_orders": orders,
        "rotations": rotations,
    }


def drawing_from_payload(obj: Any) -> CombinatorialDrawing:
    obj = _require_format(obj, DRAWING_FORMAT)
    try:
        base = graph_from_payload(obj["graph"])
        crossings = []
        for entry in obj["crossings"]:
            (a, b), (x, y) = entry["edges"]
            crossings.append(CrossingSpec.make(
                int(entry["id"]),
                (VertexLabel.parse(a), VertexLabel.parse(b)),
                (VertexLabel.parse(x), VertexLabel.parse(y))))
        orders = {}
        for key, ids in obj["edge_orders"].items():
            u, sep, v = key.partition("|")
            if not sep:
                raise UsageError(f"edge order key {key!r} lacks a '|'")
            orders[(VertexLabel.parse(u), VertexLabel.parse(v))] = [
                int(t) for t in ids]
        rotations = RotationSystem({
            VertexLabel.parse(v): [VertexLabel.parse(w) for w in ring]
            for v, ring in obj["rotations"].items()})
    except UsageError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise UsageError(f"malformed drawing payload: {exc}") from None
    return CombinatorialDrawing(base, crossings, orders, rotations)


def sweep_cell_payload(cell: Any, witness_path: str | None = None) -> dict:
    out = {
        "n": cell.n,
        "m": cell.m,
        "best": cell.best,
        "upper_bound": cell.upper_bound,
        "match": cell.match,
        "budget_exhausted": cell.budget_exhausted,
    }
    if witness_path is not None:
        out["witness_path"] = witness_path
    return out


def sweep_report_payload(n_max: int, m_max: int, rng_seed: int,
                         budget_seconds: float | None,
                         cells: list[dict]) -> dict:
    return {
        "format": SWEEP_FORMAT,
        "n_max": n_max,
        "m_max": m_max,
        "rng_seed": rng_seed,
        "budget_seconds": budget_seconds,
        "cells": sorted(cells, key=lambda c: (c["n"], c["m"])),
    }


def _terms_payload(terms: Any) -> list[dict]:
    return [{"left": t.left, "right": t.right, "value": t.value}
            for t in terms]


def ledger_payload(result: Any) -> dict:
    return {
        "section": result.section,
        "terms": _terms_payload(result.terms),
        "total": result.total,
        "required": result.required,
        "holds": result.holds,
        "variants": {name: _terms_payload(ts)
                     for name, ts in result.variants},
        "notes": dict(result.notes),
    }


def analysis_report_payload(n: int, m: int, crossings: int,
                            sections: list[Any],
                            f_load: Any = None) -> dict:
    out = {
        "format": ANALYSIS_FORMAT,
        "n": n,
        "m": m,
        "crossings": crossings,
        "sections": [ledger_payload(s) for s in sections],
        "all_hold": all(s.holds for s in sections),
    }
    if f_load is not None:
        out["f_load"] = {
            "per_section": [[i, count] for i, count in f_load.per_section],
            "hypothesis_holds": f_load.hypothesis_holds,
            "bound_checked": f_load.bound_checked,
        }
    return out
