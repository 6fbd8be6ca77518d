"""JSON document format for instances and results.

One field parameter per document: a top-level ``"p"``.  Scalars are either
the object form ``{"a": "<rat>", "b": "<rat>"}`` or the string grammar
``<rat> [ (+|-) <rat>*sqrt ]``; output always uses the object form with
canonical rational strings, so load(save(x)) == x.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .completion import Completion
from .decision import SquareWithHoleDecision, Verdict
from .exactfield import FieldParam, Quad, format_rat, parse_quad, parse_rat
from .geometry import Dissection, Point, Polygon, Rect, VerifyReport
from .invariants import SeparationCertificate

__all__ = [
    "Instance",
    "quad_to_json",
    "quad_from_json",
    "instance_to_json",
    "instance_from_json",
    "load_instance",
    "save_instance",
    "verdict_to_json",
    "report_to_json",
    "completion_to_json",
    "hole_decision_to_json",
    "dissection_to_instance",
]


@dataclass(frozen=True)
class Instance:
    field: FieldParam
    region: Polygon
    tiles: tuple[Rect, ...]

    def dissection(self) -> Dissection:
        return Dissection(self.region, self.tiles)


def quad_to_json(x: Quad) -> dict[str, str]:
    return {"a": format_rat(x.a), "b": format_rat(x.b)}


def quad_from_json(obj: Any, field: FieldParam) -> Quad:
    if isinstance(obj, str):
        return parse_quad(obj, field)
    if isinstance(obj, dict):
        return field.quad(parse_rat(obj.get("a", "0")), parse_rat(obj.get("b", "0")))
    raise ValueError(f"cannot read field element from {obj!r}")


def _rect_to_json(r: Rect) -> dict[str, Any]:
    return {
        "x": quad_to_json(r.x),
        "y": quad_to_json(r.y),
        "w": quad_to_json(r.width),
        "h": quad_to_json(r.height),
    }


def _rect_from_json(obj: Any, field: FieldParam) -> Rect:
    return Rect(
        Point(quad_from_json(obj["x"], field), quad_from_json(obj["y"], field)),
        quad_from_json(obj["w"], field),
        quad_from_json(obj["h"], field),
    )


def instance_to_json(inst: Instance) -> dict[str, Any]:
    return {
        "p": format_rat(inst.field.p),
        "region": {
            "loops": [
                [[quad_to_json(pt.x), quad_to_json(pt.y)] for pt in loop]
                for loop in inst.region.loops
            ]
        },
        "tiles": [_rect_to_json(t) for t in inst.tiles],
    }


def instance_from_json(doc: Any) -> Instance:
    if not isinstance(doc, dict) or "p" not in doc:
        raise ValueError("instance document needs a top-level 'p'")
    field = FieldParam(parse_rat(doc["p"]))
    region_doc = doc.get("region")
    if not isinstance(region_doc, dict) or "loops" not in region_doc:
        raise ValueError("instance document needs region.loops")
    loops = tuple(
        tuple(
            Point(quad_from_json(xy[0], field), quad_from_json(xy[1], field))
            for xy in loop
        )
        for loop in region_doc["loops"]
    )
    tiles = tuple(_rect_from_json(t, field) for t in doc.get("tiles", []))
    return Instance(field, Polygon(loops), tiles)


def load_instance(path: str | Path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return instance_from_json(json.load(fh))


def save_instance(inst: Instance, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_json(inst), fh, indent=2, sort_keys=True)
        fh.write("\n")


def dissection_to_instance(d: Dissection) -> Instance:
    return Instance(d.region.field, d.region, d.tiles)


def _certificate_to_json(cert: SeparationCertificate) -> dict[str, Any]:
    return {
        "A": format_rat(cert.params.A),
        "B": format_rat(cert.params.B),
        "C": format_rat(cert.params.C),
        "discriminant_quarter": format_rat(cert.discriminant_quarter),
        "sign": cert.sign,
    }


def verdict_to_json(v: Verdict) -> dict[str, Any]:
    return {
        "tileable": v.tileable,
        "case": v.case_tag,
        "witness_params": (
            None
            if v.witness_params is None
            else {
                "e": format_rat(v.witness_params[0]),
                "f": format_rat(v.witness_params[1]),
            }
        ),
        "certificate": (
            None if v.certificate is None else _certificate_to_json(v.certificate)
        ),
    }


def hole_decision_to_json(res: SquareWithHoleDecision) -> dict[str, Any]:
    out = verdict_to_json(res.verdict)
    out["ratio"] = quad_to_json(res.ratio)
    out["pinwheel"] = instance_to_json(dissection_to_instance(res.pinwheel))
    return out


def report_to_json(report: VerifyReport) -> dict[str, Any]:
    return {
        "valid": report.valid,
        "cells": {
            "nx": report.grid.nx,
            "ny": report.grid.ny,
            "inside": report.grid.inside_count,
        },
        "issues": [
            {
                "kind": issue.kind,
                "cell": [issue.i, issue.j],
                "midpoint": {
                    "x": quad_to_json(issue.midpoint.x),
                    "y": quad_to_json(issue.midpoint.y),
                },
                "cover": issue.cover,
            }
            for issue in report.issues
        ],
    }


def completion_to_json(comp: Completion) -> dict[str, Any]:
    return {
        "R": _rect_to_json(comp.bounding),
        "added": [_rect_to_json(r) for r in comp.added],
    }
