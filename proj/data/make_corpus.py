#!/usr/bin/env python3
"""Regenerates the shape corpus in data/corpus (deterministic)."""
import json
import math
from pathlib import Path

OUT = Path(__file__).resolve().parent / "corpus"
K = 4.0 / 3.0 * math.tan(math.pi / 8.0)  # cubic quarter-circle handle length


def fmt(v):
    return f"{v:.6f}".rstrip("0").rstrip(".")


def poly_json(loops):
    return json.dumps({"loops": [{"hole": h, "points": [[round(x, 9), round(y, 9)] for x, y in pts]}
                                 for h, pts in loops]}, indent=1) + "\n"


def circle_path(cx, cy, r):
    d = f"M{fmt(cx + r)},{fmt(cy)}"
    pts = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 0)]
    for (ax, ay), (bx, by) in zip(pts, pts[1:]):
        c1 = (cx + r * (ax - K * ay), cy + r * (ay + K * ax))
        c2 = (cx + r * (bx + K * by), cy + r * (by - K * bx))
        d += f" C{fmt(c1[0])},{fmt(c1[1])} {fmt(c2[0])},{fmt(c2[1])} {fmt(cx + r * bx)},{fmt(cy + r * by)}"
    return d + " Z"


def svg(paths, title):
    body = "\n".join(f'  <path d="{d}"/>' for d in paths)
    return f'<svg xmlns="http://www.w3.org/2000/svg">\n  <title>{title}</title>\n{body}\n</svg>\n'


def arc(cx, cy, r, a0, a1, steps):
    return [(cx + r * math.cos(a0 + (a1 - a0) * i / steps), cy + r * math.sin(a0 + (a1 - a0) * i / steps))
            for i in range(steps + 1)]


def ellipse_arc_cubic(rx, ry, t0, t1):
    # One cubic for the elliptical arc t0..t1 (|t1 - t0| <= 90 degrees).
    k = 4.0 / 3.0 * math.tan((t1 - t0) / 4.0)
    p0 = (rx * math.cos(t0), ry * math.sin(t0))
    p3 = (rx * math.cos(t1), ry * math.sin(t1))
    c1 = (p0[0] - k * rx * math.sin(t0), p0[1] + k * ry * math.cos(t0))
    c2 = (p3[0] + k * rx * math.sin(t1), p3[1] - k * ry * math.cos(t1))
    return f" C{fmt(c1[0])},{fmt(c1[1])} {fmt(c2[0])},{fmt(c2[1])} {fmt(p3[0])},{fmt(p3[1])}"


def main():
    OUT.mkdir(exist_ok=True)
    files = {}

    files["disk.svg"] = svg([circle_path(0, 0, 1)], "disk")
    files["ring.svg"] = svg([circle_path(0, 0, 1) + " " + circle_path(0, 0, 0.5)], "ring")
    files["rect4x1.json"] = poly_json([(False, [(0, 0), (4, 0), (4, 1), (0, 1)])])
    files["L.json"] = poly_json([(False, [(0, 0), (3, 0), (3, 1), (1, 1), (1, 4), (0, 4)])])
    files["U.json"] = poly_json([(False, [(0, 0), (3, 0), (3, 3), (2.2, 3), (2.2, 0.8), (0.8, 0.8), (0.8, 3), (0, 3)])])
    files["T.json"] = poly_json([(False, [(1.2, 0), (1.8, 0), (1.8, 2.4), (3, 2.4), (3, 3), (0, 3), (0, 2.4), (1.2, 2.4)])])
    files["plus.json"] = poly_json([(False, [(1, 0), (2, 0), (2, 1), (3, 1), (3, 2), (2, 2), (2, 3), (1, 3),
                                             (1, 2), (0, 2), (0, 1), (1, 1)])])
    files["annulus.json"] = poly_json([(False, [(0, 0), (3, 0), (3, 3), (0, 3)]),
                                       (True, [(1, 1), (2, 1), (2, 2), (1, 2)])])

    a = math.asin(0.1)
    right = arc(2, 0, 1, math.pi + a, 3 * math.pi - a, 96)
    left = arc(-2, 0, 1, a, 2 * math.pi - a, 96)
    files["dumbbell.json"] = poly_json([(False, right + left)])

    star = []
    for i in range(10):
        r = 1.0 if i % 2 == 0 else 0.45
        t = math.pi / 2 + i * math.pi / 5
        star.append((r * math.cos(t), r * math.sin(t)))
    files["star.json"] = poly_json([(False, star)])

    files["leaf.svg"] = svg(["M0,0 C0.6,-0.9 2.2,-1.0 3,0 C2.2,1.0 0.6,0.9 0,0 Z"], "leaf")

    # Music note: elliptical head (cubics), stem and a curved flag.
    rx, ry = 1.2, 0.85
    t_stem = -math.asin(math.sqrt(1 - (0.95 / rx) ** 2))
    head = f"M{fmt(rx)},0"
    for t0, t1 in [(0, math.pi / 2), (math.pi / 2, math.pi), (math.pi, 1.5 * math.pi),
                   (1.5 * math.pi, 2 * math.pi + t_stem)]:
        head += ellipse_arc_cubic(rx, ry, t0, t1)
    note = head + " L0.95,-5 L1.2,-5 C1.5,-4 2.2,-3.5 1.8,-2.2 C1.9,-3.2 1.5,-3.8 1.2,-3.9 Z"
    files["note.svg"] = svg([note], "note")

    s = []
    s += arc(0, 1, 0.95, 0, 1.5 * math.pi, 48)
    s += arc(0, -0.6, 0.65, 0.5 * math.pi, -math.pi, 48)[1:]
    s += arc(0, -0.6, 0.95, -math.pi, 0.5 * math.pi, 48)
    s += arc(0, 1, 0.65, 1.5 * math.pi, 0, 48)[1:]
    files["S.json"] = poly_json([(False, s)])

    for name, text in files.items():
        (OUT / name).write_text(text)


if __name__ == "__main__":
    main()
