"""Minimal native SVG emission (polylines and segment fields, no dependencies)."""

from __future__ import annotations

import numpy as np


class SvgCanvas:
    """Fixed-viewport canvas mapping data coordinates to pixels."""

    def __init__(self, width=640, height=480, margin=56, title=""):
        self.width = width
        self.height = height
        self.margin = margin
        self.title = title
        self._items = []
        self._xlim = None
        self._ylim = None

    def set_limits(self, xlim, ylim):
        self._xlim = tuple(map(float, xlim))
        self._ylim = tuple(map(float, ylim))

    def _expand(self, xs, ys):
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        xlim = (float(xs.min()), float(xs.max()))
        ylim = (float(ys.min()), float(ys.max()))
        if self._xlim is None:
            self._xlim = xlim
        else:
            self._xlim = (min(self._xlim[0], xlim[0]), max(self._xlim[1], xlim[1]))
        if self._ylim is None:
            self._ylim = ylim
        else:
            self._ylim = (min(self._ylim[0], ylim[0]), max(self._ylim[1], ylim[1]))

    def polyline(self, xs, ys, color="#d62728", width=1.5):
        self._expand(xs, ys)
        self._items.append(("polyline", np.asarray(xs, float), np.asarray(ys, float), color, width))

    def segments(self, segs, color="#9ecae1", width=0.8):
        segs = np.asarray(segs, dtype=float)
        if segs.size:
            self._expand(segs[:, [0, 2]].ravel(), segs[:, [1, 3]].ravel())
        self._items.append(("segments", segs, None, color, width))

    def _tx(self, x):
        x0, x1 = self._xlim
        span = (x1 - x0) or 1.0
        return self.margin + (x - x0) / span * (self.width - 2 * self.margin)

    def _ty(self, y):
        y0, y1 = self._ylim
        span = (y1 - y0) or 1.0
        return self.height - self.margin - (y - y0) / span * (self.height - 2 * self.margin)

    def write(self, path, xlabel="", ylabel=""):
        if self._xlim is None:
            self._xlim = (0.0, 1.0)
            self._ylim = (0.0, 1.0)
        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" '
            f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">',
            f'<rect width="{self.width}" height="{self.height}" fill="white"/>',
        ]
        m = self.margin
        out.append(
            f'<rect x="{m}" y="{m}" width="{self.width - 2 * m}" '
            f'height="{self.height - 2 * m}" fill="none" stroke="#444" stroke-width="1"/>'
        )
        for kind, a, b, color, width in self._items:
            if kind == "polyline":
                pts = " ".join(
                    f"{self._tx(x):.2f},{self._ty(y):.2f}" for x, y in zip(a, b)
                )
                out.append(
                    f'<polyline points="{pts}" fill="none" stroke="{color}" '
                    f'stroke-width="{width}"/>'
                )
            else:
                for x0, y0, x1, y1 in a:
                    out.append(
                        f'<line x1="{self._tx(x0):.2f}" y1="{self._ty(y0):.2f}" '
                        f'x2="{self._tx(x1):.2f}" y2="{self._ty(y1):.2f}" '
                        f'stroke="{color}" stroke-width="{width}"/>'
                    )
        style = 'font-family="monospace" font-size="12" fill="#222"'
        if self.title:
            out.append(f'<text x="{m}" y="{m - 16}" {style}>{self.title}</text>')
        x0, x1 = self._xlim
        y0, y1 = self._ylim
        out.append(f'<text x="{m}" y="{self.height - m + 16}" {style}>{x0:.4g}</text>')
        out.append(
            f'<text x="{self.width - m - 40}" y="{self.height - m + 16}" {style}>{x1:.4g}</text>'
        )
        out.append(f'<text x="4" y="{self.height - m}" {style}>{y0:.4g}</text>')
        out.append(f'<text x="4" y="{m + 4}" {style}>{y1:.4g}</text>')
        if xlabel:
            out.append(
                f'<text x="{self.width // 2}" y="{self.height - m + 32}" {style}>{xlabel}</text>'
            )
        if ylabel:
            out.append(f'<text x="4" y="{m - 16}" {style}>{ylabel}</text>')
        out.append("</svg>")
        with open(path, "w", newline="\n") as fh:
            fh.write("\n".join(out) + "\n")


def flow_field_segments(rhs, xlim, ylim, nx=24, ny=18, scale=0.35):
    """Short normalized direction segments of a planar field on a grid."""
    xs = np.linspace(xlim[0], xlim[1], nx)
    ys = np.linspace(ylim[0], ylim[1], ny)
    dx = (xlim[1] - xlim[0]) / nx * scale
    dy = (ylim[1] - ylim[0]) / ny * scale
    segs = []
    for x in xs:
        for y in ys:
            try:
                u, w = rhs(x, y)
            except Exception:
                continue
            norm = float(np.hypot(u, w))
            if norm == 0.0:
                continue
            u, w = u / norm, w / norm
            segs.append((x - 0.5 * u * dx, y - 0.5 * w * dy, x + 0.5 * u * dx, y + 0.5 * w * dy))
    return segs
