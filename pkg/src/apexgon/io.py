"""Polygon JSON files: ``{"vertices": [[x, y], ...]}``.

Floats are written with Python's shortest round-trip ``repr`` so a
canonical file survives read -> validate -> write byte for byte.
"""
from __future__ import annotations

import json
from pathlib import Path

from .geometry import ConvexPolygon, validate_polygon


def polygon_to_dict(P: ConvexPolygon) -> dict:
    return {"vertices": [[x, y] for x, y in P.vertices]}


def polygon_from_dict(obj: dict) -> ConvexPolygon:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ValueError('polygon JSON needs a "vertices" key')
    return validate_polygon(obj["vertices"])


def dumps_polygon(P: ConvexPolygon) -> str:
    return json.dumps(polygon_to_dict(P)) + "\n"


def loads_polygon(text: str) -> ConvexPolygon:
    return polygon_from_dict(json.loads(text))


def load_polygon(path) -> ConvexPolygon:
    return loads_polygon(Path(path).read_text())


def save_polygon(P: ConvexPolygon, path) -> None:
    Path(path).write_text(dumps_polygon(P))
