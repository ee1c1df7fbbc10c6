"""CSV / JSON / SVG emission.

Floats are written with ``repr`` (shortest round-trip form), CSV uses LF
line endings, and nothing time- or host-dependent is ever embedded, so
identical inputs give byte-identical files.
"""
from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import Iterable, Sequence

from .carnot import leg_names
from .state import CycleReport, ProcessPath


def fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return v
    return repr(float(v))


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, allow_nan=False) + "\n"


def write_text(path: Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path


def path_csv(path: ProcessPath) -> str:
    """``Q,P,I,E,G`` rows, one per sample."""
    return csv_text(("Q", "P", "I", "E", "G"),
                    zip(path.Q.tolist(), path.P.tolist(), path.I.tolist(),
                        path.E.tolist(), path.G.tolist()))


def path_json(path: ProcessPath) -> str:
    return json_text([s.to_dict() for s in path.samples])


def isotherm_csv(path: ProcessPath) -> str:
    return csv_text(("Q", "P", "I"), zip(path.Q.tolist(), path.P.tolist(), path.I.tolist()))


def cycle_rows(report: CycleReport):
    for name, leg in zip(leg_names(report), report.legs):
        for row in zip(leg.Q.tolist(), leg.P.tolist(), leg.I.tolist(), leg.E.tolist(), leg.G.tolist()):
            yield (name, *row)


def cycle_qp_csv(report: CycleReport) -> str:
    return csv_text(("leg", "Q", "P", "I", "E", "G"), cycle_rows(report))


def cycle_ei_csv(report: CycleReport) -> str:
    return csv_text(("leg", "E", "I"), ((r[0], r[4], r[3]) for r in cycle_rows(report)))


# --- SVG -----------------------------------------------------------------

_W, _H, _PAD = 640, 480, 60
_COLOURS = ("#c0392b", "#2c3e50", "#2471a3", "#7f8c8d")


def _scale(lo, hi, a, b, log):
    if log:
        lo, hi = math.log(lo), math.log(hi)
    span = (hi - lo) or 1.0

    def f(v):
        v = math.log(v) if log else v
        return a + (v - lo) / span * (b - a)
    return f


def _n(v: float) -> str:
    return f"{v:.2f}"


def cycle_svg(report: CycleReport, xcol: str, ycol: str, title: str,
              xlog: bool = False, ylog: bool = False) -> str:
    """Static plot of the four legs with numbered vertices and direction arrows."""
    legs = report.legs
    xs = [v for leg in legs for v in getattr(leg, xcol).tolist()]
    ys = [v for leg in legs for v in getattr(leg, ycol).tolist()]
    fx = _scale(min(xs), max(xs), _PAD, _W - _PAD, xlog)
    fy = _scale(min(ys), max(ys), _H - _PAD, _PAD, ylog)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="8" '
        'markerHeight="8" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<text x="{_W // 2}" y="30" text-anchor="middle" font-family="sans-serif" font-size="16">{title}</text>',
        f'<line x1="{_PAD}" y1="{_H - _PAD}" x2="{_W - _PAD}" y2="{_H - _PAD}" stroke="black"/>',
        f'<line x1="{_PAD}" y1="{_H - _PAD}" x2="{_PAD}" y2="{_PAD}" stroke="black"/>',
        f'<text x="{_W - _PAD}" y="{_H - _PAD + 30}" text-anchor="end" font-family="sans-serif">{xcol}</text>',
        f'<text x="{_PAD - 30}" y="{_PAD}" font-family="sans-serif">{ycol}</text>',
    ]
    for i, (name, leg) in enumerate(zip(leg_names(report), legs)):
        px = [fx(v) for v in getattr(leg, xcol).tolist()]
        py = [fy(v) for v in getattr(leg, ycol).tolist()]
        # thin long legs so the file stays small
        step = max(1, len(px) // 200)
        idx = list(range(0, len(px), step))
        if idx[-1] != len(px) - 1:
            idx.append(len(px) - 1)
        pts = " ".join(f"{_n(px[k])},{_n(py[k])}" for k in idx)
        out.append(f'<polyline points="{pts}" fill="none" stroke="{_COLOURS[i]}" stroke-width="2">'
                   f'<title>{name}</title></polyline>')
        mid = len(px) // 2
        nxt = min(mid + 1, len(px) - 1)
        out.append(f'<line x1="{_n(px[mid - 1 if mid else 0])}" y1="{_n(py[mid - 1 if mid else 0])}" '
                   f'x2="{_n(px[nxt])}" y2="{_n(py[nxt])}" stroke="{_COLOURS[i]}" marker-end="url(#arrow)"/>')
    for k, v in enumerate(report.vertices, start=1):
        x = fx(getattr(v.point, xcol) if xcol in ("P", "Q", "I") else getattr(v, xcol))
        y = fy(getattr(v.point, ycol) if ycol in ("P", "Q", "I") else getattr(v, ycol))
        out.append(f'<circle cx="{_n(x)}" cy="{_n(y)}" r="4"/>')
        out.append(f'<text x="{_n(x + 8)}" y="{_n(y - 8)}" font-family="sans-serif">{k}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
