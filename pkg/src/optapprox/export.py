"""CSV, JSON and SVG writers. Output is deterministic for identical input."""

from __future__ import annotations

import io
import json
import os
import tempfile

import numpy as np

# Plot window is [-VIEW, VIEW]^2.
VIEW = 2.2
SVG_SIZE = 480
MARKER_RADIUS = 1.5


def fmt(x) -> str:
    """17 significant digits, round-trip safe."""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    if isinstance(x, str):
        return x
    return format(float(x) + 0.0, ".17g")


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(fmt(v) for v in row) + "\n")
    return buf.getvalue()


def json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=True) + "\n"


def write_atomic(path, text: str) -> None:
    """Write through a temporary file in the target directory, then rename."""
    path = os.fspath(path)
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def complex_parts(values) -> dict:
    v = np.asarray(values, dtype=complex)
    return {"re": [float(x) for x in v.real], "im": [float(x) for x in v.imag]}


def _px(x: float) -> float:
    return (x + VIEW) / (2 * VIEW) * SVG_SIZE


def _py(y: float) -> float:
    return (VIEW - y) / (2 * VIEW) * SVG_SIZE


def svg_zero_plot(root_sets, title: str = "") -> str:
    """Scatter of successive zero sets with a unit-circle guide.

    Markers are shaded from light grey (first order) to black (last order).
    """
    S = SVG_SIZE
    c = _px(0.0)
    r = S / (2 * VIEW)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{S}" height="{S}" '
        f'viewBox="0 0 {S} {S}">',
        f"<title>{title}</title>",
        f'<rect x="0" y="0" width="{S}" height="{S}" fill="white"/>',
        f'<line x1="0" y1="{c:.3f}" x2="{S}" y2="{c:.3f}" stroke="#dddddd" stroke-width="1"/>',
        f'<line x1="{c:.3f}" y1="0" x2="{c:.3f}" y2="{S}" stroke="#dddddd" stroke-width="1"/>',
        f'<circle cx="{c:.3f}" cy="{c:.3f}" r="{r:.3f}" fill="none" '
        f'stroke="#888888" stroke-width="1" stroke-dasharray="4 3"/>',
    ]
    sets = list(root_sets)
    m = max(len(sets) - 1, 1)
    for i, rs in enumerate(sets):
        g = int(round(200 * (1 - i / m)))
        colour = f"rgb({g},{g},{g})"
        for z in rs.roots:
            out.append(f'<circle cx="{_px(z.real):.3f}" cy="{_py(z.imag):.3f}" '
                       f'r="{MARKER_RADIUS}" fill="{colour}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
