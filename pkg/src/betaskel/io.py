"""File formats: point/edge/curve CSV, fit and verdict reports, SVG, config.

Points round-trip exactly: coordinates are written with repr, which Python
guarantees to parse back to the identical float.  All writers are
deterministic byte for byte for identical inputs.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .analysis import Curve, PowerFit
from .errors import ParseError
from .skeleton import PointSet, Skeleton


def read_points(path, label: str | None = None) -> PointSet:
    """Parse a point CSV: one `x,y` pair per line, optional header line."""
    path = Path(path)
    pts = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            fields = line.split(",")
            if len(fields) != 2:
                raise ParseError(
                    f"expected two comma-separated fields, got {line!r}", line=lineno
                )
            try:
                xy = (float(fields[0]), float(fields[1]))
            except ValueError:
                if lineno == 1:
                    continue  # header
                raise ParseError(f"could not parse coordinates {line!r}", line=lineno)
            if not (math.isfinite(xy[0]) and math.isfinite(xy[1])):
                raise ParseError(f"non-finite coordinates {line!r}", line=lineno)
            pts.append(xy)
    if not pts:
        raise ParseError(f"no points found in {path}", line=None)
    return PointSet(np.array(pts), label=label if label is not None else path.stem)


def write_points(ps: PointSet, path) -> None:
    lines = ["x,y"]
    lines += [f"{repr(float(x))},{repr(float(y))}" for x, y in ps.points]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _format_beta(beta: float) -> str:
    return f"{beta:.1f}" if abs(beta - round(beta, 1)) <= 1e-9 else repr(float(beta))


def write_curve(curve: Curve, path) -> None:
    lines = ["beta,edges"]
    lines += [f"{_format_beta(float(b))},{int(e)}" for b, e in zip(curve.betas, curve.edges)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_curve(path, n: int = 0, label: str | None = None) -> Curve:
    path = Path(path)
    betas = []
    edges = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            fields = line.split(",")
            if len(fields) != 2:
                raise ParseError(f"expected `beta,edges`, got {line!r}", line=lineno)
            try:
                betas.append(float(fields[0]))
                edges.append(int(fields[1]))
            except ValueError:
                if lineno == 1:
                    continue  # header
                raise ParseError(f"could not parse row {line!r}", line=lineno)
    if not betas:
        raise ParseError(f"no samples found in {path}", line=None)
    return Curve(
        n=n,
        betas=np.array(betas),
        edges=np.array(edges),
        label=label if label is not None else path.stem,
    )


def write_edges(skeleton: Skeleton, path) -> None:
    lines = ["i,j"]
    lines += [f"{i},{j}" for i, j in sorted(skeleton.edges)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def excluded_range(curve: Curve) -> str:
    """Beta range of zero-edge samples dropped from a fit, or 'none'."""
    zero = np.flatnonzero(curve.edges == 0)
    if zero.size == 0:
        return "none"
    return f"{_format_beta(float(curve.betas[zero[0]]))}:{_format_beta(float(curve.betas[zero[-1]]))}"


def write_fit_report(fit: PowerFit, path, excluded: str = "none") -> None:
    lines = [
        f"c={fit.c!r}",
        f"alpha={fit.alpha!r}",
        f"r={fit.r!r}",
        f"iterations={fit.iterations}",
        f"converged={str(fit.converged).lower()}",
        f"excluded_samples={fit.excluded}",
        f"excluded_range={excluded}",
    ]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_skeleton_svg(ps: PointSet, skeleton: Skeleton, path) -> None:
    """Render points as small circles and edges as line segments.

    The viewport is the bounding box of the set grown by a 5% margin; the
    only circle/line elements in the file are the data themselves.
    """
    pts = ps.points
    xmin, ymin = pts.min(axis=0)
    xmax, ymax = pts.max(axis=0)
    span = max(xmax - xmin, ymax - ymin)
    pad = 0.05 * span if span > 0 else 1.0
    vx, vy = xmin - pad, ymin - pad
    vw, vh = (xmax - xmin) + 2 * pad, (ymax - ymin) + 2 * pad
    dim = max(vw, vh)
    dot = 0.006 * dim
    stroke = 0.002 * dim

    def fmt(v: float) -> str:
        return f"{v:.6g}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" '
        f'viewBox="{fmt(vx)} {fmt(vy)} {fmt(vw)} {fmt(vh)}">',
        f'<g stroke="#333" stroke-width="{fmt(stroke)}">',
    ]
    for i, j in sorted(skeleton.edges):
        a = pts[i]
        b = pts[j]
        lines.append(
            f'<line x1="{fmt(a[0])}" y1="{fmt(a[1])}" '
            f'x2="{fmt(b[0])}" y2="{fmt(b[1])}"/>'
        )
    lines.append("</g>")
    lines.append('<g fill="#c22" stroke="none">')
    for x, y in pts:
        lines.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(dot)}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_config(path) -> dict[str, str]:
    """Key/value config file: `key = value` lines, '#' comments, blank lines."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected `key = value`, got {line!r}", line=lineno)
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out
