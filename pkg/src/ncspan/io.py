"""JSON instance/solution files and SVG drawings."""
from __future__ import annotations

import json
import math
from decimal import Decimal, InvalidOperation
from pathlib import Path

from .instance import Instance
from .trees import GeoTree

SCALE = 10**6
MAX_FRACTION_DIGITS = 6

RED = "#d62728"
BLUE = "#1f77b4"
CANVAS = 800.0


class ParseError(ValueError):
    pass


def _decimal(value, where: str) -> Decimal:
    if isinstance(value, bool) or not isinstance(value, (int, str, Decimal, float)):
        raise ParseError(f"{where}: expected a number or decimal string, got {value!r}")
    try:
        d = Decimal(str(value).strip())
    except InvalidOperation:
        raise ParseError(f"{where}: not a decimal number: {value!r}") from None
    if not d.is_finite():
        raise ParseError(f"{where}: not finite: {value!r}")
    if d != d.to_integral_value() and -d.as_tuple().exponent > MAX_FRACTION_DIGITS:
        raise ParseError(f"{where}: more than {MAX_FRACTION_DIGITS} fractional digits: {value!r}")
    return d


def parse_instance(data, *, allow_missing_f: bool = False) -> tuple[Instance, int]:
    """Build an :class:`Instance` from decoded InstanceFile JSON.

    Returns the instance and the factor the coordinates were multiplied by:
    1 when every coordinate is integral, otherwise ``10**6`` applied to all
    points alike.  Raises ParseError, GeneralPositionViolation or ValueError.
    """
    if not isinstance(data, dict) or not isinstance(data.get("points"), list):
        raise ParseError("instance file must be an object with a 'points' list")
    red, blue, budget, coords = [], [], [], []
    for i, p in enumerate(data["points"]):
        if not isinstance(p, dict):
            raise ParseError(f"points[{i}]: expected an object")
        x = _decimal(p.get("x"), f"points[{i}].x")
        y = _decimal(p.get("y"), f"points[{i}].y")
        color = p.get("color")
        if color == "R":
            f = p.get("f")
            if f is None and allow_missing_f:
                f = 2
            if isinstance(f, bool) or not isinstance(f, int):
                raise ParseError(f"points[{i}]: red point needs an integer 'f', got {f!r}")
            budget.append(f)
        elif color == "B":
            if "f" in p:
                raise ParseError(f"points[{i}]: blue point must not carry 'f'")
        else:
            raise ParseError(f"points[{i}]: color must be 'R' or 'B', got {color!r}")
        coords.append((x, y, color))
    integral = all(x == x.to_integral_value() and y == y.to_integral_value()
                   for x, y, _ in coords)
    scale = 1 if integral else SCALE
    for x, y, color in coords:
        pt = (int(x * scale), int(y * scale))
        (red if color == "R" else blue).append(pt)
    try:
        inst = Instance(red, blue, budget)
    except (TypeError,) as exc:
        raise ParseError(str(exc)) from None
    return inst, scale


def load_instance(path, **kw) -> tuple[Instance, int]:
    try:
        data = json.loads(Path(path).read_text(), parse_float=Decimal)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_instance(data, **kw)


def instance_to_json(inst: Instance) -> dict:
    pts = [{"x": x, "y": y, "color": "R", "f": f} for (x, y), f in zip(inst.red, inst.budget)]
    pts += [{"x": x, "y": y, "color": "B"} for x, y in inst.blue]
    return {"points": pts}


def solution_to_json(tree: GeoTree, total_length: float, swap_count: int, f_prime) -> dict:
    return {
        "edges": [list(e) for e in tree.edge_list()],
        "total_length": total_length,
        "swap_count": swap_count,
        "f_prime": list(f_prime),
    }


def load_solution(path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    edges = data.get("edges") if isinstance(data, dict) else None
    if not isinstance(edges, list) or not all(
            isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e)
            for e in edges):
        raise ParseError("solution file needs 'edges' as a list of [i, j] integer pairs")
    return data


def trace_to_json(trace, scale: int = 1) -> dict:
    return {
        "initial_length": trace.initial_length / scale,
        "final_length": trace.final_length / scale,
        "swaps": [
            {
                "case": rec.case_class.value,
                "removed": [list(s.key()) for s in rec.removed],
                "added": [list(s.key()) for s in rec.added],
                "length_delta": rec.length_delta / scale,
            }
            for rec in trace.swaps
        ],
    }


def render_svg(inst: Instance, edges) -> str:
    """SVG drawing of a tree on the instance points.

    The viewBox is the point bounding box plus a 5% margin, in input units
    with y pointing up.  Radii and stroke widths are sized for an 800 px
    wide rendering: red points are filled disks, blue points open circles.
    """
    xs = [p[0] for p in inst.points]
    ys = [-p[1] for p in inst.points]
    w = max(xs) - min(xs)
    h = max(ys) - min(ys)
    span = max(w, h, 1)
    mx, my = 0.05 * max(w, span * 0.05), 0.05 * max(h, span * 0.05)
    x0, y0 = min(xs) - mx, min(ys) - my
    vw, vh = w + 2 * mx, h + 2 * my
    px = max(vw, vh) / CANVAS  # one display pixel in user units
    height = CANVAS * vh / max(vw, vh)
    width = CANVAS * vw / max(vw, vh)

    def g(v):
        return f"{v:.6g}" if abs(v) < 1e6 else f"{v:.10g}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="{g(x0)} {g(y0)} {g(vw)} {g(vh)}">',
        f'<g stroke="#333333" stroke-width="{g(1.5 * px)}">',
    ]
    for a, b in edges:
        out.append(f'<line x1="{xs[a]}" y1="{ys[a]}" x2="{xs[b]}" y2="{ys[b]}"/>')
    out.append("</g>")
    r = g(4 * px)
    for v in range(inst.n):
        if inst.is_red(v):
            out.append(f'<circle cx="{xs[v]}" cy="{ys[v]}" r="{r}" fill="{RED}"/>')
        else:
            out.append(f'<circle cx="{xs[v]}" cy="{ys[v]}" r="{r}" fill="white" '
                       f'stroke="{BLUE}" stroke-width="{g(1.5 * px)}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def total_length_scaled(inst: Instance, edges, scale: int) -> float:
    pts = inst.points
    return math.fsum(math.dist(pts[a], pts[b]) for a, b in edges) / scale
