"""Minimal SVG scenes for polygons, chords, disks and labels.

Geometry is drawn inside a ``scale(1, -1)`` group so counter-clockwise
vertex order renders counter-clockwise on screen.  Labels are placed
outside that group so text stays upright.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape


@dataclass
class SvgScene:
    polygons: list[tuple[list, dict]] = field(default_factory=list)
    points: list[tuple[tuple, dict]] = field(default_factory=list)
    disks: list[tuple[tuple, float, dict]] = field(default_factory=list)
    chords: list[tuple[tuple, tuple, dict]] = field(default_factory=list)
    labels: list[tuple[tuple, str]] = field(default_factory=list)
    width: int = 600

    def add_polygon(self, pts, **style):
        self.polygons.append(([tuple(map(float, p)) for p in pts], style))

    def add_point(self, p, **style):
        self.points.append((tuple(map(float, p)), style))

    def add_disk(self, center, radius, **style):
        self.disks.append((tuple(map(float, center)), float(radius), style))

    def add_chord(self, a, b, **style):
        self.chords.append((tuple(map(float, a)), tuple(map(float, b)), style))

    def add_label(self, p, text):
        self.labels.append((tuple(map(float, p)), str(text)))

    def _bounds(self):
        xs, ys = [], []
        for pts, _ in self.polygons:
            xs += [p[0] for p in pts]
            ys += [p[1] for p in pts]
        for p, _ in self.points:
            xs.append(p[0]); ys.append(p[1])
        for c, r, _ in self.disks:
            xs += [c[0] - r, c[0] + r]
            ys += [c[1] - r, c[1] + r]
        for a, b, _ in self.chords:
            xs += [a[0], b[0]]; ys += [a[1], b[1]]
        for p, _ in self.labels:
            xs.append(p[0]); ys.append(p[1])
        coords = xs + ys
        if not coords:
            return -1.0, -1.0, 1.0, 1.0
        if not all(math.isfinite(v) for v in coords):
            raise ValueError("scene contains non-finite geometry")
        return min(xs), min(ys), max(xs), max(ys)

    def render(self) -> str:
        x0, y0, x1, y1 = self._bounds()
        size = max(x1 - x0, y1 - y0, 1e-9)
        m = 0.05 * size
        x0, y0, x1, y1 = x0 - m, y0 - m, x1 + m, y1 + m
        w, h = x1 - x0, y1 - y0
        sw = 0.004 * size
        height = int(round(self.width * h / w))
        out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" height="{height}" '
               f'viewBox="{x0!r} {-y1!r} {w!r} {h!r}">',
               '<g transform="scale(1,-1)">']
        eid = 0

        def attrs(style, default):
            d = dict(default)
            d.update({k.replace("_", "-"): v for k, v in style.items()})
            return " ".join(f'{k}="{escape(str(v))}"' for k, v in d.items())

        for c, r, style in self.disks:
            out.append(f'<circle id="e{eid}" cx="{c[0]!r}" cy="{c[1]!r}" r="{r!r}" '
                       + attrs(style, {"fill": "none", "stroke": "#999", "stroke-width": sw}) + "/>")
            eid += 1
        for pts, style in self.polygons:
            ps = " ".join(f"{x!r},{y!r}" for x, y in pts)
            out.append(f'<polygon id="e{eid}" points="{ps}" '
                       + attrs(style, {"fill": "none", "stroke": "black", "stroke-width": sw}) + "/>")
            eid += 1
        for a, b, style in self.chords:
            out.append(f'<line id="e{eid}" x1="{a[0]!r}" y1="{a[1]!r}" x2="{b[0]!r}" y2="{b[1]!r}" '
                       + attrs(style, {"stroke": "#c33", "stroke-width": sw}) + "/>")
            eid += 1
        for p, style in self.points:
            out.append(f'<circle id="e{eid}" cx="{p[0]!r}" cy="{p[1]!r}" r="{2.5 * sw!r}" '
                       + attrs(style, {"fill": "black"}) + "/>")
            eid += 1
        out.append("</g>")
        for p, text in self.labels:
            out.append(f'<text id="e{eid}" x="{p[0]!r}" y="{-p[1]!r}" font-size="{0.04 * size!r}">'
                       f"{escape(text)}</text>")
            eid += 1
        out.append("</svg>")
        return "\n".join(out) + "\n"

    @property
    def element_count(self) -> int:
        return (len(self.polygons) + len(self.points) + len(self.disks)
                + len(self.chords) + len(self.labels))
