"""SVG plots of implicit plane curves by marching squares.

Grid values are exact rationals, so edge crossings are exact too; the
only rounding happens when coordinates are written out with six decimals.
Saddle cells are resolved by the sign at the cell centre.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import WindowError

DEFAULT_STYLES = ("red", "black", "blue", "green", "purple", "orange")
MIN_RESOLUTION = 8
CANVAS = 512

# corner order: 0 = (i, j), 1 = (i+1, j), 2 = (i+1, j+1), 3 = (i, j+1)
_EDGES = ((0, 1), (1, 2), (3, 2), (0, 3))
# edge pairs to join, per case index (bit k set when corner k is positive)
_CASES = {
    0: (), 15: (),
    1: ((3, 0),), 14: ((3, 0),),
    2: ((0, 1),), 13: ((0, 1),),
    3: ((3, 1),), 12: ((3, 1),),
    4: ((1, 2),), 11: ((1, 2),),
    6: ((0, 2),), 9: ((0, 2),),
    7: ((3, 2),), 8: ((3, 2),),
}


@dataclass(frozen=True)
class PlotSpec:
    xmin: Fraction
    xmax: Fraction
    ymin: Fraction
    ymax: Fraction
    resolution: int = 64
    styles: tuple = DEFAULT_STYLES

    def __post_init__(self):
        for name in ("xmin", "xmax", "ymin", "ymax"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise WindowError(f"empty window [{self.xmin}, {self.xmax}] x [{self.ymin}, {self.ymax}]")
        if not isinstance(self.resolution, int) or self.resolution < MIN_RESOLUTION:
            raise WindowError(f"resolution must be an integer >= {MIN_RESOLUTION}, got {self.resolution!r}")
        if not self.styles:
            raise WindowError("at least one stroke style is needed")

    @classmethod
    def from_string(cls, window, resolution=64, styles=DEFAULT_STYLES):
        """Build from ``"XMIN,XMAX,YMIN,YMAX"`` with rational entries."""
        parts = window.split(",")
        if len(parts) != 4:
            raise WindowError(f"window needs four comma-separated values, got {window!r}")
        try:
            vals = [Fraction(p.strip()) for p in parts]
        except (ValueError, ZeroDivisionError) as exc:
            raise WindowError(f"bad window value in {window!r}") from exc
        return cls(*vals, resolution=resolution, styles=styles)

    @property
    def dx(self):
        return (self.xmax - self.xmin) / self.resolution

    @property
    def dy(self):
        return (self.ymax - self.ymin) / self.resolution

    def node(self, i, j):
        return (self.xmin + i * self.dx, self.ymin + j * self.dy)

    def style(self, k):
        return self.styles[k % len(self.styles)]


@dataclass(frozen=True)
class Segment:
    cell: tuple  # (i, j) of the lower-left grid node
    start: tuple  # exact (x, y)
    end: tuple


def grid_values(f, spec):
    """``vals[i][j] = f(node(i, j))`` for the (res+1)^2 grid nodes."""
    n = spec.resolution
    xs = [spec.xmin + i * spec.dx for i in range(n + 1)]
    ys = [spec.ymin + j * spec.dy for j in range(n + 1)]
    # evaluate through a univariate polynomial in y per column
    by_x = {}
    for (a, b), c in f.items():
        by_x.setdefault(b, []).append((a, c))
    vals = []
    for x in xs:
        pows = {}
        coeffs = {}
        for b, terms in by_x.items():
            s = 0
            for a, c in terms:
                if a not in pows:
                    pows[a] = x**a
                s += c * pows[a]
            coeffs[b] = s
        top = max(coeffs) if coeffs else 0
        col = []
        for y in ys:
            acc = Fraction(0)
            for b in range(top, -1, -1):
                acc = acc * y + coeffs.get(b, 0)
            col.append(acc)
        vals.append(col)
    return vals


def _crossing(p, q, vp, vq):
    t = vp / (vp - vq)
    return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))


def contour_segments(f, spec):
    """Marching-squares segments of ``f = 0``, in grid order."""
    vals = grid_values(f, spec)
    n = spec.resolution
    out = []
    for i in range(n):
        for j in range(n):
            corners = ((i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1))
            v = [vals[a][b] for a, b in corners]
            case = sum(1 << k for k in range(4) if v[k] > 0)
            if case in (5, 10):
                cx, cy = spec.node(i, j)
                centre = f.evaluate((cx + spec.dx / 2, cy + spec.dy / 2))
                pairs = _saddle_pairs(case, centre > 0)
            else:
                pairs = _CASES[case]
            if not pairs:
                continue
            pts = [spec.node(a, b) for a, b in corners]
            for e1, e2 in pairs:
                a1, b1 = _EDGES[e1]
                a2, b2 = _EDGES[e2]
                s = _crossing(pts[a1], pts[b1], v[a1], v[b1])
                t = _crossing(pts[a2], pts[b2], v[a2], v[b2])
                if s != t:
                    out.append(Segment((i, j), s, t))
    return out


def _saddle_pairs(case, centre_pos):
    # Edges: 0 bottom, 1 right, 2 top, 3 left.  In case 5 corners 0 and 2
    # are positive.  A positive centre connects the positive corners, so
    # the contour cuts off the negative corners 1 and 3.
    if case == 5:
        return ((0, 1), (3, 2)) if centre_pos else ((3, 0), (1, 2))
    return ((3, 0), (1, 2)) if centre_pos else ((0, 1), (3, 2))


def chain_segments(segments):
    """Join segments sharing exact endpoints into polylines.

    Returns a list of ``(points, closed)`` pairs in a deterministic order.
    """
    adj = {}
    for k, s in enumerate(segments):
        adj.setdefault(s.start, []).append(k)
        adj.setdefault(s.end, []).append(k)
    used = [False] * len(segments)

    def walk(point, first):
        pts = []
        k = first
        while k is not None:
            used[k] = True
            s = segments[k]
            point = s.end if s.start == point else s.start
            pts.append(point)
            k = next((m for m in adj[point] if not used[m]), None)
        return pts

    lines = []
    # open chains start at endpoints of degree 1
    for k, s in enumerate(segments):
        if used[k]:
            continue
        for p in (s.start, s.end):
            if len(adj[p]) == 1:
                lines.append(([p] + walk(p, k), False))
                break
    for k, s in enumerate(segments):
        if used[k]:
            continue
        pts = [s.start] + walk(s.start, k)
        lines.append((pts, pts[0] == pts[-1]))
    return lines


def _num(v):
    s = f"{float(v):.6f}"
    return "0.000000" if s == "-0.000000" else s


def _path_data(lines):
    parts = []
    for pts, closed in lines:
        if closed:
            pts = pts[:-1]
        cmd = [f"M{_num(pts[0][0])} {_num(pts[0][1])}"]
        cmd += [f"L{_num(x)} {_num(y)}" for x, y in pts[1:]]
        if closed:
            cmd.append("Z")
        parts.append(" ".join(cmd))
    return " ".join(parts)


def plot_implicit(curves, spec):
    """Render the zero sets of ``curves`` into an SVG 1.1 document.

    Coordinates in the output are world coordinates; a viewBox plus a
    vertical flip maps them to the canvas.  The first curve is drawn wider.
    """
    if not curves:
        raise ValueError("nothing to plot")
    ring = curves[0].ring
    if any(c.ring != ring for c in curves):
        raise ValueError("curves must share one ring")
    w = spec.xmax - spec.xmin
    h = spec.ymax - spec.ymin
    height = max(1, round(CANVAS * h / w))
    unit = w / CANVAS
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{height}" '
        f'viewBox="{_num(spec.xmin)} {_num(-spec.ymax)} {_num(w)} {_num(h)}">',
        f'<rect x="{_num(spec.xmin)}" y="{_num(-spec.ymax)}" width="{_num(w)}" height="{_num(h)}" fill="white"/>',
        '<g transform="scale(1,-1)">',
    ]
    for k, c in enumerate(curves):
        d = _path_data(chain_segments(contour_segments(c.f, spec)))
        width = _num(unit * (3 if k == 0 else 1.5))
        lines.append(
            f'<path id="curve{k}" d="{d}" fill="none" stroke="{spec.style(k)}" '
            f'stroke-width="{width}" stroke-linejoin="round"/>'
        )
    lines += ["</g>", "</svg>", ""]
    return "\n".join(lines)
