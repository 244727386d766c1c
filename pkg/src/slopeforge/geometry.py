"""Drawing representation and the measurement / verification kernel.

A drawing assigns a point to every vertex (optionally one bend point per
edge) and is either exact, with Fraction coordinates and equality-based
measurements, or numeric, with float coordinates and tolerance clustering.
Numeric clustering refuses to guess near its tolerance: gaps inside the
ambiguity band raise PrecisionError instead of silently merging.
"""

from __future__ import annotations

import colorsys
import json
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import Graph

EPS_ANGLE = 1e-9
EPS_LENGTH = 1e-9          # applied to log lengths, i.e. relative
AMBIGUITY_FACTOR = 10.0
_EPS_DUP = 1e-14           # times bounding-box diameter
_EPS_ONSEG = 1e-9          # times segment length


class GeometryError(ValueError):
    """Ill-formed drawing or an impossible geometric query."""


class PrecisionError(GeometryError):
    """Numeric measurement fell inside the ambiguity band: the answer would
    depend on the tolerance, so there is no trustworthy count."""


def _as_fraction_point(p):
    x, y = p
    return (Fraction(x), Fraction(y))


@dataclass(frozen=True)
class Drawing:
    """Geometric realization of a graph.

    mode is "exact" (Fraction coordinates) or "numeric" (floats). points[v]
    is the location of vertex v; bends maps edge indices to a single bend
    point. slope_class / length_class optionally record the intended class
    of each edge index; they are advisory labels, never used by measurement.
    """

    mode: str
    points: tuple
    edges: tuple
    bends: dict | None = None
    slope_class: dict | None = None
    length_class: dict | None = None

    def __post_init__(self):
        if self.mode not in ("exact", "numeric"):
            raise GeometryError(f"unknown mode {self.mode!r}")
        if self.mode == "exact":
            pts = tuple(_as_fraction_point(p) for p in self.points)
            bends = None
            if self.bends is not None:
                bends = {int(k): _as_fraction_point(v) for k, v in self.bends.items()}
        else:
            pts = tuple((float(x), float(y)) for x, y in self.points)
            bends = None
            if self.bends is not None:
                bends = {int(k): (float(v[0]), float(v[1])) for k, v in self.bends.items()}
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "bends", bends)
        if self.bends is not None:
            for k in self.bends:
                if not (0 <= k < len(self.edges)):
                    raise GeometryError(f"bend index {k} out of range")

    @property
    def has_bends(self) -> bool:
        return bool(self.bends)

    def segments(self):
        """Yield (edge_index, p, q) pieces; a bent edge contributes its two
        halves, a straight edge itself."""
        for i, (u, v) in enumerate(self.edges):
            pu, pv = self.points[u], self.points[v]
            if self.bends and i in self.bends:
                b = self.bends[i]
                yield i, pu, b
                yield i, b, pv
            else:
                yield i, pu, pv

    def all_points(self):
        """Vertex points then bend points, each with a label: an int vertex
        id or ("bend", edge_index)."""
        for v, p in enumerate(self.points):
            yield v, p
        if self.bends:
            for i in sorted(self.bends):
                yield ("bend", i), self.bends[i]


# ---- slope and length primitives ----


def _exact_direction(p, q):
    """Canonical integer direction of the line through two Fraction points:
    gcd-reduced (dx, dy) with dy > 0, or (1, 0) for horizontal."""
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    if dx == 0 and dy == 0:
        raise GeometryError("coincident points have no direction")
    den = math.lcm(dx.denominator, dy.denominator)
    ix = int(dx * den)
    iy = int(dy * den)
    g = math.gcd(ix, iy)
    ix //= g
    iy //= g
    if iy < 0 or (iy == 0 and ix < 0):
        ix, iy = -ix, -iy
    return (ix, iy)


def slope_of(p, q, mode: str):
    """Slope identifier of segment pq: canonical integer direction pair in
    exact mode, angle in [0, pi) in numeric mode."""
    if mode == "exact":
        return _exact_direction(_as_fraction_point(p), _as_fraction_point(q))
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    if dx == 0.0 and dy == 0.0:
        raise GeometryError("coincident points have no direction")
    return math.atan2(dy, dx) % math.pi


def _squared_length(p, q):
    return (q[0] - p[0]) ** 2 + (q[1] - p[1]) ** 2


def cluster_values(values, eps: float, period: float | None = None):
    """Group floats whose neighbors lie within eps; gaps in (eps, 10*eps)
    are ambiguous and raise PrecisionError. With a period the values live on
    a circle and the split starts after the largest gap.

    Returns (class_count, class_id_per_input).
    """
    if not values:
        return 0, []
    idx = sorted(range(len(values)), key=lambda i: values[i])
    vs = [values[i] for i in idx]
    if period is not None:
        gaps = [vs[i + 1] - vs[i] for i in range(len(vs) - 1)]
        gaps.append(vs[0] + period - vs[-1])
        cut = max(range(len(gaps)), key=lambda i: gaps[i])
        if cut != len(vs) - 1:
            # start the linear sweep just past the widest circular gap
            idx = idx[cut + 1:] + idx[:cut + 1]
            vs = []
            for j, i in enumerate(idx):
                val = values[i]
                if j >= len(idx) - cut - 1:
                    val += period
                vs.append(val)
    classes = [0] * len(vs)
    cls = 0
    for j in range(1, len(vs)):
        gap = vs[j] - vs[j - 1]
        if gap <= eps:
            pass
        elif gap < AMBIGUITY_FACTOR * eps:
            raise PrecisionError(
                f"gap {gap:.3e} falls in the ambiguity band "
                f"({eps:.1e}, {AMBIGUITY_FACTOR * eps:.1e})")
        else:
            cls += 1
        classes[j] = cls
    count = cls + 1
    # spread inside a class must stay below eps, circular wrap included
    starts = {}
    for j, c in enumerate(classes):
        if c not in starts:
            starts[c] = j
        if vs[j] - vs[starts[c]] > eps:
            raise PrecisionError(
                f"cluster spread {vs[j] - vs[starts[c]]:.3e} exceeds eps {eps:.1e}")
    if period is not None and count > 1:
        wrap = vs[0] + period - vs[-1]
        if wrap < AMBIGUITY_FACTOR * eps:
            if wrap <= eps:
                raise PrecisionError("circular classes merge across the period")
            raise PrecisionError(
                f"circular gap {wrap:.3e} falls in the ambiguity band")
    out = [0] * len(values)
    for j, i in enumerate(idx):
        out[i] = classes[j]
    return count, out


def _segment_slopes(d: Drawing):
    return [(i, slope_of(p, q, d.mode)) for i, p, q in d.segments()]


def count_slopes(d: Drawing) -> int:
    """Number of distinct slopes over all segments (both halves of a bent
    edge count as segments)."""
    slopes = [s for _, s in _segment_slopes(d)]
    if not slopes:
        return 0
    if d.mode == "exact":
        return len(set(slopes))
    count, _ = cluster_values(slopes, EPS_ANGLE, period=math.pi)
    return count


def count_lengths(d: Drawing) -> int:
    """Number of distinct segment lengths. Numeric lengths cluster in the
    log domain, so the tolerance is relative."""
    segs = list(d.segments())
    if not segs:
        return 0
    if d.mode == "exact":
        return len({_squared_length(p, q) for _, p, q in segs})
    logs = [0.5 * math.log(_squared_length(p, q)) for _, p, q in segs]
    count, _ = cluster_values(logs, EPS_LENGTH)
    return count


def edge_slope_classes(d: Drawing) -> dict:
    """Measured slope class id per edge index; straight drawings only."""
    if d.has_bends:
        raise GeometryError("per-edge slope classes need a straight drawing")
    pairs = _segment_slopes(d)
    if d.mode == "exact":
        ids = {}
        out = {}
        for i, s in pairs:
            out[i] = ids.setdefault(s, len(ids))
        return out
    _, classes = cluster_values([s for _, s in pairs], EPS_ANGLE, period=math.pi)
    return {i: classes[j] for j, (i, _) in enumerate(pairs)}


def edge_length_classes(d: Drawing) -> dict:
    if d.has_bends:
        raise GeometryError("per-edge length classes need a straight drawing")
    segs = list(d.segments())
    if d.mode == "exact":
        ids = {}
        out = {}
        for i, p, q in segs:
            out[i] = ids.setdefault(_squared_length(p, q), len(ids))
        return out
    logs = [0.5 * math.log(_squared_length(p, q)) for _, p, q in segs]
    _, classes = cluster_values(logs, EPS_LENGTH)
    return {i: classes[j] for j, (i, _, _) in enumerate(segs)}


# ---- validity ----


@dataclass
class ValidityReport:
    duplicate_points: list = field(default_factory=list)
    vertex_on_edge: list = field(default_factory=list)
    structure_problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.duplicate_points or self.vertex_on_edge
                    or self.structure_problems)

    def summary(self) -> str:
        if self.ok:
            return "valid"
        bits = []
        if self.structure_problems:
            bits.append("; ".join(self.structure_problems))
        if self.duplicate_points:
            bits.append(f"{len(self.duplicate_points)} coincident point pair(s)")
        if self.vertex_on_edge:
            bits.append(f"{len(self.vertex_on_edge)} point-on-edge violation(s)")
        return "; ".join(bits)


def _bbox_diameter(pts):
    xs = [float(x) for x, _ in pts]
    ys = [float(y) for _, y in pts]
    if not xs:
        return 0.0
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def _orient(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _point_strictly_inside_exact(p, a, b) -> bool:
    if _orient(a, b, p) != 0:
        return False
    dot = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])
    if dot <= 0:
        return False
    return dot < _squared_length(a, b)


def _point_strictly_inside_numeric(p, a, b, tol) -> bool:
    ab2 = _squared_length(a, b)
    if ab2 == 0.0:
        return False
    t = ((p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])) / ab2
    if t <= 0.0 or t >= 1.0:
        return False
    cx = a[0] + t * (b[0] - a[0])
    cy = a[1] + t * (b[1] - a[1])
    return math.hypot(p[0] - cx, p[1] - cy) <= tol * math.sqrt(ab2)


def validate_drawing(g: Graph, d: Drawing) -> ValidityReport:
    """Structural and geometric validity: the drawing matches the graph, no
    two points coincide, and no vertex or bend sits in the interior of a
    segment it does not belong to."""
    rep = ValidityReport()
    if len(d.points) != g.n:
        rep.structure_problems.append(
            f"drawing has {len(d.points)} points for a {g.n}-vertex graph")
        return rep
    if d.edges != g.edges:
        rep.structure_problems.append("drawing edge list differs from the graph")
        return rep

    labeled = list(d.all_points())
    pts = [p for _, p in labeled]
    exact = d.mode == "exact"
    all_int = exact and all(
        x.denominator == 1 and y.denominator == 1 for x, y in pts)
    if all_int:
        pts = [(int(x), int(y)) for x, y in pts]
    diam = _bbox_diameter(pts)
    dup_tol = _EPS_DUP * diam

    # coincident points: sort by x and only compare nearby entries
    order = sorted(range(len(pts)), key=lambda i: (float(pts[i][0]), float(pts[i][1])))
    xs = [float(pts[i][0]) for i in order]
    for a_pos, i in enumerate(order):
        hi = bisect_right(xs, xs[a_pos] + max(dup_tol, 0.0))
        for b_pos in range(a_pos + 1, hi):
            j = order[b_pos]
            pi, pj = pts[i], pts[j]
            if exact:
                same = pi[0] == pj[0] and pi[1] == pj[1]
            else:
                same = math.hypot(pi[0] - pj[0], pi[1] - pj[1]) <= dup_tol
            if same:
                rep.duplicate_points.append((labeled[i][0], labeled[j][0]))

    # points lying inside foreign segments
    segs = []
    for i, p, q in d.segments():
        if all_int:
            p = (int(p[0]), int(p[1]))
            q = (int(q[0]), int(q[1]))
        segs.append((i, p, q))
    seg_sorted = sorted(range(len(segs)),
                        key=lambda k: min(float(segs[k][1][0]), float(segs[k][2][0])))
    seg_minx = [min(float(segs[k][1][0]), float(segs[k][2][0])) for k in seg_sorted]
    seg_maxx = [max(float(segs[k][1][0]), float(segs[k][2][0])) for k in seg_sorted]
    slack = 0.0 if exact else _EPS_ONSEG * max(diam, 1.0)
    for k, (label, _) in enumerate(labeled):
        p = pts[k]
        px = float(p[0])
        hi = bisect_right(seg_minx, px + slack)
        for k_pos in range(hi):
            if seg_maxx[k_pos] < px - slack:
                continue
            k = seg_sorted[k_pos]
            ei, a, b = segs[k]
            if p == a or p == b:
                continue
            if exact:
                inside = _point_strictly_inside_exact(p, a, b)
            else:
                inside = _point_strictly_inside_numeric(p, a, b, _EPS_ONSEG)
            if inside:
                rep.vertex_on_edge.append((label, ei))
    return rep


# ---- crossings ----


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _segments_cross(a, b, c, d, shared) -> bool:
    """True when segments ab and cd intersect anywhere other than a shared
    endpoint. 'shared' is the common endpoint or None."""
    if shared is not None:
        # relabel so both segments leave from the shared point
        p = shared
        q = b if a == p else a
        r = d if c == p else c
        if _orient(p, q, r) != 0:
            return False
        dot = (q[0] - p[0]) * (r[0] - p[0]) + (q[1] - p[1]) * (r[1] - p[1])
        return dot > 0
    o1 = _sign(_orient(a, b, c))
    o2 = _sign(_orient(a, b, d))
    o3 = _sign(_orient(c, d, a))
    o4 = _sign(_orient(c, d, b))
    if o1 != o2 and o3 != o4 and o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        return True
    # collinear or touching cases
    for p, (x, y) in ((c, (a, b)), (d, (a, b)), (a, (c, d)), (b, (c, d))):
        if p == x or p == y:
            return True
        if _orient(x, y, p) == 0:
            dot = (p[0] - x[0]) * (y[0] - x[0]) + (p[1] - x[1]) * (y[1] - x[1])
            if 0 <= dot <= _squared_length(x, y):
                return True
    if o1 != o2 and o3 != o4:
        return True
    return False


def count_crossings(g: Graph, d: Drawing) -> int:
    """Pairs of segments that intersect improperly. Bent edges are treated
    as their two straight halves; segments of the same edge share the bend
    and only count when they overlap beyond it."""
    segs = list(d.segments())
    crossings = 0
    for i in range(len(segs)):
        ei, a, b = segs[i]
        for j in range(i + 1, len(segs)):
            ej, c, dd = segs[j]
            shared = None
            if a == c or a == dd:
                shared = a
            elif b == c or b == dd:
                shared = b
            if _segments_cross(a, b, c, dd, shared):
                crossings += 1
    return crossings


# ---- convexity ----


def is_convex_drawing(g: Graph, d: Drawing) -> bool:
    """True when all vertices are in strictly convex position (every vertex
    is a corner of the hull, no three collinear). Trivially true for n <= 2."""
    if g.n <= 2:
        return True
    pts = list(d.points)
    if d.mode == "numeric":
        diam = _bbox_diameter(pts)
        tol = 1e-12 * max(diam, 1.0) ** 2
    else:
        tol = 0
    uniq = sorted(set(pts))
    if len(uniq) < len(pts):
        return False

    def half_hull(points):
        hull = []
        for p in points:
            while len(hull) >= 2 and _orient(hull[-2], hull[-1], p) <= tol:
                hull.pop()
            hull.append(p)
        return hull

    lower = half_hull(uniq)
    upper = half_hull(uniq[::-1])
    hull = lower[:-1] + upper[:-1]
    return len(hull) == len(pts)


# ---- polygon placements ----


@dataclass(frozen=True)
class PolygonAssignment:
    """Injective placement of vertices onto corners of a regular n-gon;
    index[v] is the corner of vertex v."""

    n: int
    index: tuple

    def __post_init__(self):
        if self.n < 1:
            raise GeometryError("polygon needs at least one corner")
        idx = tuple(int(i) for i in self.index)
        object.__setattr__(self, "index", idx)
        if any(not (0 <= i < self.n) for i in idx):
            raise GeometryError("corner index out of range")
        if len(set(idx)) != len(idx):
            raise GeometryError("two vertices share a corner")


def ngon_slope_count(g: Graph, a: PolygonAssignment) -> int:
    """Distinct slopes a polygon placement will produce, computed purely
    combinatorially: corners i and j span the same direction exactly when
    i + j matches modulo the corner count."""
    if len(a.index) != g.n:
        raise GeometryError("assignment length differs from vertex count")
    return len({(a.index[u] + a.index[v]) % a.n for u, v in g.edges})


def realize_ngon(g: Graph, a: PolygonAssignment) -> Drawing:
    """Place the vertices on the unit circle at their assigned corners."""
    if len(a.index) != g.n:
        raise GeometryError("assignment length differs from vertex count")
    if g.n < 1:
        raise GeometryError("nothing to draw")
    pts = []
    for v in range(g.n):
        ang = 2.0 * math.pi * a.index[v] / a.n
        pts.append((math.cos(ang), math.sin(ang)))
    slope_class = {i: (a.index[u] + a.index[v]) % a.n
                   for i, (u, v) in enumerate(g.edges)}
    return Drawing("numeric", tuple(pts), g.edges, slope_class=slope_class)


# ---- serialization ----


def _num_to_json(x, mode):
    if mode == "exact":
        f = Fraction(x)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return float(x)


def _num_from_json(x, mode):
    if mode == "exact":
        return Fraction(str(x))
    return float(x)


def drawing_to_json(d: Drawing, certificate: dict | None = None) -> str:
    obj = {
        "mode": d.mode,
        "vertices": [[_num_to_json(x, d.mode), _num_to_json(y, d.mode)]
                     for x, y in d.points],
        "edges": [[u, v] for u, v in d.edges],
    }
    if d.bends:
        obj["bends"] = {str(i): [_num_to_json(p[0], d.mode), _num_to_json(p[1], d.mode)]
                        for i, p in sorted(d.bends.items())}
    if d.slope_class is not None:
        obj["slope_class"] = {str(i): c for i, c in sorted(d.slope_class.items())}
    if d.length_class is not None:
        obj["length_class"] = {str(i): c for i, c in sorted(d.length_class.items())}
    if certificate is not None:
        obj["certificate"] = certificate
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def drawing_from_json(text: str):
    """Parse a drawing; returns (Drawing, certificate_dict_or_None)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise GeometryError(f"bad drawing JSON: {e}") from None
    try:
        mode = obj["mode"]
        pts = tuple((_num_from_json(x, mode), _num_from_json(y, mode))
                    for x, y in obj["vertices"])
        edges = tuple((int(u), int(v)) for u, v in obj["edges"])
        bends = None
        if "bends" in obj:
            bends = {int(k): (_num_from_json(v[0], mode), _num_from_json(v[1], mode))
                     for k, v in obj["bends"].items()}
        slope_class = None
        if "slope_class" in obj:
            slope_class = {int(k): int(v) for k, v in obj["slope_class"].items()}
        length_class = None
        if "length_class" in obj:
            length_class = {int(k): int(v) for k, v in obj["length_class"].items()}
    except (KeyError, TypeError, ValueError) as e:
        raise GeometryError(f"bad drawing JSON structure: {e}") from None
    d = Drawing(mode, pts, edges, bends=bends,
                slope_class=slope_class, length_class=length_class)
    return d, obj.get("certificate")


# ---- rendering ----


def _svg_color(class_id: int) -> str:
    hue = (class_id * 137.508) % 360.0
    r, g, b = colorsys.hls_to_rgb(hue / 360.0, 0.45, 0.75)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def drawing_to_svg(d: Drawing) -> str:
    """Deterministic standalone SVG; edges colored by slope class."""
    pts = [(float(x), float(y)) for x, y in d.points]
    extra = [(float(p[0]), float(p[1])) for p in (d.bends or {}).values()]
    allp = pts + extra
    if not allp:
        raise GeometryError("nothing to render")
    xs = [p[0] for p in allp]
    ys = [p[1] for p in allp]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    w = max(maxx - minx, 1e-9)
    h = max(maxy - miny, 1e-9)
    pad = 0.05 * max(w, h)

    def fx(x):
        return x - minx + pad

    def fy(y):
        return (maxy - y) + pad  # svg y grows downward

    if d.slope_class is not None and all(
            i in d.slope_class for i in range(len(d.edges))):
        classes = dict(d.slope_class)
    else:
        classes = edge_slope_classes(d) if not d.has_bends else {
            i: 0 for i in range(len(d.edges))}
    ids = {c: k for k, c in enumerate(sorted(set(classes.values()), key=str))}

    stroke = max(w, h) / 300.0
    rad = 2.0 * stroke
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {w + 2 * pad:.6f} {h + 2 * pad:.6f}">'
    ]
    for i, (u, v) in enumerate(d.edges):
        color = _svg_color(ids[classes[i]])
        pu, pv = pts[u], pts[v]
        if d.bends and i in d.bends:
            b = d.bends[i]
            path = (f"{fx(pu[0]):.6f},{fy(pu[1]):.6f} "
                    f"{fx(float(b[0])):.6f},{fy(float(b[1])):.6f} "
                    f"{fx(pv[0]):.6f},{fy(pv[1]):.6f}")
            lines.append(f'<polyline points="{path}" fill="none" '
                         f'stroke="{color}" stroke-width="{stroke:.6f}"/>')
        else:
            lines.append(
                f'<line x1="{fx(pu[0]):.6f}" y1="{fy(pu[1]):.6f}" '
                f'x2="{fx(pv[0]):.6f}" y2="{fy(pv[1]):.6f}" '
                f'stroke="{color}" stroke-width="{stroke:.6f}"/>')
    for x, y in pts:
        lines.append(f'<circle cx="{fx(x):.6f}" cy="{fy(y):.6f}" '
                     f'r="{rad:.6f}" fill="#222222"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
