"""Drawing constructions with certified slope budgets.

Every construction returns a drawing together with a Certificate recording
the bounds it promises (slope count, length count, planarity). Nothing here
is trusted: verify_certificate re-measures the drawing geometrically and
checks each promise, and the test suite runs that verification on every
drawing the constructions produce.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import elementary_lower_bounds
from .geometry import (
    Drawing,
    GeometryError,
    PolygonAssignment,
    PrecisionError,
    ValidityReport,
    count_crossings,
    count_lengths,
    count_slopes,
    edge_length_classes,
    edge_slope_classes,
    realize_ngon,
    validate_drawing,
)
from .graphs import (
    Graph,
    GraphError,
    VertexOrdering,
    _TreeScan,
    connected_components,
    is_forest,
    is_tree,
    make_complete,
    make_complete_multipartite,
    make_path,
    tree_pathwidth,
)


class ConstructionError(ValueError):
    """A construction cannot handle the given input."""


@dataclass(frozen=True)
class Certificate:
    """Promises attached to a drawing: at most slope_bound distinct slopes,
    at most length_bound distinct segment lengths (None = no promise), and
    no crossings when plane is set. alt_length_bound records a secondary
    length promise that is tracked but not enforced."""

    slope_bound: int
    length_bound: int | None = None
    plane: bool = False
    method: str = ""
    alt_length_bound: int | None = None

    def to_dict(self) -> dict:
        out = {"slope_bound": self.slope_bound, "plane": self.plane,
               "method": self.method}
        if self.length_bound is not None:
            out["length_bound"] = self.length_bound
        if self.alt_length_bound is not None:
            out["alt_length_bound"] = self.alt_length_bound
        return out

    @classmethod
    def from_dict(cls, obj: dict) -> "Certificate":
        try:
            return cls(
                slope_bound=int(obj["slope_bound"]),
                length_bound=(int(obj["length_bound"])
                              if obj.get("length_bound") is not None else None),
                plane=bool(obj.get("plane", False)),
                method=str(obj.get("method", "")),
                alt_length_bound=(int(obj["alt_length_bound"])
                                  if obj.get("alt_length_bound") is not None else None),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ConstructionError(f"bad certificate: {e}") from None


# ---- certificate verification ----


@dataclass
class CertificateReport:
    measured_slopes: int
    measured_lengths: int
    crossings: int | None
    validity: ValidityReport
    lower_bound: int
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def subdivide_bends(g: Graph, d: Drawing):
    """Replace each bend by a real degree-2 vertex; measurements on the
    result match the segment-level measurements of the bent drawing."""
    if not d.has_bends:
        return g, d
    pts = list(d.points)
    edges = []
    for i, (u, v) in enumerate(d.edges):
        if i in d.bends:
            w = len(pts)
            pts.append(d.bends[i])
            edges.append((u, w))
            edges.append((w, v))
        else:
            edges.append((u, v))
    g2 = Graph(len(pts), tuple(edges))
    d2 = Drawing(d.mode, tuple(pts), g2.edges)
    return g2, d2


def verify_certificate(g: Graph, d: Drawing, cert: Certificate) -> CertificateReport:
    """Re-measure the drawing and check every promise in the certificate.

    Bent drawings are measured on their subdivision, so both halves of each
    edge count. May raise PrecisionError if a numeric drawing is ambiguous.
    """
    g2, d2 = subdivide_bends(g, d)
    validity = validate_drawing(g2, d2)
    try:
        slopes = count_slopes(d2)
        lengths = count_lengths(d2)
        crossings = count_crossings(g2, d2) if cert.plane else None
    except PrecisionError:
        raise
    except GeometryError as e:
        # an edge of zero extent has no slope; fail instead of crashing
        problems = []
        if not validity.ok:
            problems.append(f"invalid drawing: {validity.summary()}")
        problems.append(f"unmeasurable drawing: {e}")
        return CertificateReport(0, 0, None, validity, 0, problems)
    lb, _ = elementary_lower_bounds(g2)

    problems = []
    if not validity.ok:
        problems.append(f"invalid drawing: {validity.summary()}")
    if slopes > cert.slope_bound:
        problems.append(
            f"measured {slopes} slopes, certificate promises at most "
            f"{cert.slope_bound}")
    if cert.length_bound is not None and lengths > cert.length_bound:
        problems.append(
            f"measured {lengths} lengths, certificate promises at most "
            f"{cert.length_bound}")
    if cert.plane and crossings:
        problems.append(f"certificate promises a plane drawing, "
                        f"found {crossings} crossing(s)")
    if g2.m > 0 and slopes < lb:
        problems.append(
            f"measured {slopes} slopes below the degree lower bound {lb}; "
            f"measurement or drawing is broken")
    return CertificateReport(slopes, lengths, crossings, validity, lb, problems)


# ---- polygon constructions ----


def draw_complete_ngon(n: int):
    """Complete graph on the corners of a regular polygon. Corners i and j
    span the direction determined by i + j modulo n, and all n residues are
    hit, so the drawing uses exactly n slopes and floor(n/2) edge lengths."""
    if n < 3:
        raise ConstructionError("need n >= 3")
    g = make_complete(n)
    a = PolygonAssignment(n, tuple(range(n)))
    d = realize_ngon(g, a)
    cert = Certificate(n, n // 2, plane=(n == 3), method="complete-ngon")
    return g, d, cert


def draw_balanced_bipartite(n: int):
    """Complete bipartite graph with equal sides, one side on even corners
    of a 2n-gon and the other on odd corners. Corner sums over the edges are
    exactly the odd residues, so n slopes suffice."""
    if n < 1:
        raise ConstructionError("need n >= 1")
    g = make_complete_multipartite((n, n))
    index = [0] * (2 * n)
    for v in range(n):
        index[v] = 2 * v
    for v in range(n, 2 * n):
        index[v] = 2 * (v - n) + 1
    a = PolygonAssignment(2 * n, tuple(index))
    d = realize_ngon(g, a)
    cert = Certificate(n, (n + 1) // 2, plane=(n == 1),
                       method="balanced-bipartite")
    return g, d, cert


def bipartite_slope_bounds(a: int, b: int):
    """(lower, upper) bounds for the slopes needed by the complete bipartite
    graph with part sizes a and b, drawn straight-line."""
    if a < 1 or b < 1:
        raise ConstructionError("part sizes must be positive")
    small, big = min(a, b), max(a, b)
    lower = (a + b) // 2
    upper = min(big, (big + 1) // 2 + small - 1)
    return lower, upper


def draw_bipartite(a: int, b: int):
    """Complete bipartite graph on parts of sizes a <= b.

    Two layouts, picked by whichever promises fewer slopes: a three-row
    layout using ceil(b/2) + a - 1 directions of the form (dx, -1), or the
    2b-gon layout from draw_balanced_bipartite generalized to unequal parts,
    which uses b slopes.
    """
    if not (1 <= a <= b):
        raise ConstructionError("need 1 <= a <= b (swap the arguments)")
    g = make_complete_multipartite((a, b))
    rows_bound = (b + 1) // 2 + a - 1
    if rows_bound <= b:
        half = (b + 1) // 2
        pts = [None] * (a + b)
        for i in range(a):
            pts[i] = (Fraction(half + i + 1), Fraction(0))
        for j in range(half):
            pts[a + j] = (Fraction(j + 1), Fraction(1))
        for j in range(b - half):
            pts[a + half + j] = (Fraction(half + a + j + 1), Fraction(-1))
        d = Drawing("exact", tuple(pts), g.edges)
        cert = Certificate(rows_bound, None, plane=(a == 1 and b <= 2),
                           method="bipartite-rows")
        return g, d, cert
    index = [0] * (a + b)
    for v in range(a):
        index[v] = 2 * v
    for v in range(a, a + b):
        index[v] = 2 * (v - a) + 1
    poly = PolygonAssignment(2 * b, tuple(index))
    d = realize_ngon(g, poly)
    cert = Certificate(b, (b + 1) // 2, plane=False, method="bipartite-polygon")
    return g, d, cert


def power2_parts(p: int, k: int):
    """Part structure for the power-of-two multipartite family: vertices
    0..n-1 with n = (k-1) * 2^(p+1); part i holds the vertices congruent to
    +-i modulo 2(k-1). End parts have 2^p vertices, middle parts 2^(p+1)."""
    if p < 0:
        raise ConstructionError("need p >= 0")
    if k < 2 or (k - 1) & (k - 2):
        raise ConstructionError("need k >= 2 with k - 1 a power of two")
    n = (k - 1) * 2 ** (p + 1)
    mod = 2 * (k - 1)
    parts = []
    for i in range(k):
        members = [j for j in range(n)
                   if j % mod == i % mod or j % mod == (-i) % mod]
        parts.append(members)
    return parts


def draw_power2_multipartite(p: int, k: int):
    """Complete multipartite graph whose parts interleave around a polygon
    so that the missing corner sums are exactly the multiples of 2(k-1).
    The polygon placement then realizes max-degree many slopes: n - 2^p."""
    parts = power2_parts(p, k)
    n = (k - 1) * 2 ** (p + 1)
    part_of = [0] * n
    for i, members in enumerate(parts):
        for v in members:
            part_of[v] = i
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n)
                  if part_of[u] != part_of[v])
    g = Graph(n, edges)
    a = PolygonAssignment(n, tuple(range(n)))
    d = realize_ngon(g, a)
    cert = Certificate(n - 2 ** p, None, plane=(g.m <= 1),
                       method="power2-multipartite")
    return g, d, cert


# ---- graph partitions over a host graph ----


@dataclass(frozen=True)
class HPartition:
    """Partition of a graph's vertices indexed by the nodes of a host graph:
    every edge stays inside one class or joins classes that are adjacent in
    the host. Width is the largest class."""

    graph: Graph
    host: Graph
    assign: tuple

    def __post_init__(self):
        assign = tuple(int(x) for x in self.assign)
        object.__setattr__(self, "assign", assign)
        if len(assign) != self.graph.n:
            raise GraphError("assignment length differs from vertex count")
        if any(not (0 <= x < self.host.n) for x in assign):
            raise GraphError("assignment targets a missing host node")
        host_edges = set(self.host.edges)
        for u, v in self.graph.edges:
            a, b = assign[u], assign[v]
            if a == b:
                continue
            key = (a, b) if a < b else (b, a)
            if key not in host_edges:
                raise GraphError(
                    f"edge ({u}, {v}) maps to non-adjacent host nodes {a}, {b}")

    @property
    def width(self) -> int:
        counts = [0] * self.host.n
        for x in self.assign:
            counts[x] += 1
        return max(counts, default=0)

    def blocks(self) -> list:
        out = [[] for _ in range(self.host.n)]
        for v, x in enumerate(self.assign):
            out[x].append(v)
        return out


def partition_to_json(part: HPartition) -> str:
    import json
    return json.dumps({
        "host": {"n": part.host.n, "edges": [[u, v] for u, v in part.host.edges]},
        "assign": list(part.assign),
    }, indent=2) + "\n"


def partition_from_json(g: Graph, text: str) -> HPartition:
    import json
    try:
        obj = json.loads(text)
        host = Graph(int(obj["host"]["n"]),
                     tuple((int(u), int(v)) for u, v in obj["host"]["edges"]))
        assign = tuple(int(x) for x in obj["assign"])
    except (KeyError, TypeError, ValueError) as e:
        raise ConstructionError(f"bad partition JSON: {e}") from None
    return HPartition(g, host, assign)


@dataclass(frozen=True)
class HostDrawingStats:
    """Distinct slope classes, length classes, and (slope, length) pairs
    over the edges of a straight-line host drawing."""

    slope_count: int
    length_count: int
    pair_count: int


def host_stats(d: Drawing) -> HostDrawingStats:
    if d.has_bends:
        raise GeometryError("host drawings must be straight-line")
    if not d.edges:
        return HostDrawingStats(0, 0, 0)
    sc = edge_slope_classes(d)
    lc = edge_length_classes(d)
    pairs = {(sc[i], lc[i]) for i in range(len(d.edges))}
    stats = HostDrawingStats(len(set(sc.values())), len(set(lc.values())),
                             len(pairs))
    assert stats.pair_count <= stats.slope_count * stats.length_count
    assert stats.pair_count <= len(d.edges)
    return stats


# ---- block blow-up over a drawn host ----


def _pick_rotation(host_angles, k: int):
    """Rotation for the block polygons that keeps their chord directions
    as far as possible from every host edge direction. Returns (rotation,
    achieved separation)."""
    if k < 2 or not host_angles:
        return 0.0, math.pi

    def separation(rho):
        best = math.inf
        for q in range(k):
            chord = (rho + math.pi / 2 + math.pi * q / k) % math.pi
            for a in host_angles:
                gap = abs(chord - a) % math.pi
                gap = min(gap, math.pi - gap)
                if gap < best:
                    best = gap
        return best

    # chord directions repeat with period pi/k in the rotation
    step = math.pi / k / 1024
    best_rho, best_sep = 0.0, separation(0.0)
    for i in range(1, 1024):
        rho = i * step
        sep = separation(rho)
        if sep > best_sep:
            best_rho, best_sep = rho, sep
    span = step
    for _ in range(24):
        for cand in (best_rho - span / 2, best_rho + span / 2):
            sep = separation(cand % math.pi)
            if sep > best_sep:
                best_rho, best_sep = cand % math.pi, sep
        span /= 2
    return best_rho, best_sep


def _point_segment_distance(p, a, b) -> float:
    ab2 = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2
    if ab2 == 0.0:
        return math.hypot(p[0] - a[0], p[1] - a[1])
    t = ((p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])) / ab2
    t = min(1.0, max(0.0, t))
    cx = a[0] + t * (b[0] - a[0])
    cy = a[1] + t * (b[1] - a[1])
    return math.hypot(p[0] - cx, p[1] - cy)


def blow_up(host_drawing: Drawing, part: HPartition, block_order=None):
    """Replace each drawn host node by a tiny regular polygon and each class
    by its members on the polygon corners.

    Edge directions then fall into three families: polygon chords (at most
    width many), exact copies of host edges (one per host slope class), and
    near-copies shifted by a corner difference, of which there are at most
    (slope, length)-pair-count * width * (width - 1). The polygons are kept
    small enough and rotated so the families never blur together.
    """
    host = part.host
    g = part.graph
    if len(host_drawing.points) != host.n:
        raise ConstructionError("host drawing does not match the host graph")
    base_validity = validate_drawing(host, host_drawing)
    if not base_validity.ok:
        raise ConstructionError(f"host drawing is invalid: {base_validity.summary()}")
    if host_drawing.has_bends:
        raise ConstructionError("host drawings must be straight-line")

    stats = host_stats(host_drawing)
    if host.m:
        sc = edge_slope_classes(host_drawing)
        lc = edge_length_classes(host_drawing)
    else:
        sc, lc = {}, {}
    host_edge_idx = host.edge_index()
    k = part.width

    blocks = part.blocks()
    if block_order is not None:
        ordered = [list(b) for b in block_order]
        if [sorted(b) for b in ordered] != [sorted(b) for b in blocks]:
            raise ConstructionError("block_order disagrees with the partition")
        blocks = ordered
    corner_of = {}
    for members in blocks:
        for c, v in enumerate(members):
            corner_of[v] = c

    npts = [(float(x), float(y)) for x, y in host_drawing.points]

    # canonical orientation per host edge so parallel classes stay aligned
    orient = {}
    for (x, y) in host.edges:
        ex = npts[y][0] - npts[x][0]
        ey = npts[y][1] - npts[x][1]
        fuzz = 1e-12 * math.hypot(ex, ey)
        if ey < -fuzz or (abs(ey) <= fuzz and ex < 0):
            orient[(x, y)] = (y, x)
        else:
            orient[(x, y)] = (x, y)

    host_angles = []
    if host.m:
        reps = {}
        for i, (x, y) in enumerate(host.edges):
            ang = math.atan2(npts[y][1] - npts[x][1],
                             npts[y][0] - npts[x][0]) % math.pi
            reps.setdefault(sc[i], ang)
        host_angles = sorted(reps.values())

    rho, eps_sep = _pick_rotation(host_angles, k)

    # initial polygon radius from the host geometry
    if host.n == 1:
        r = 1.0
    else:
        min_pair = min(math.hypot(npts[i][0] - npts[j][0], npts[i][1] - npts[j][1])
                       for i in range(host.n) for j in range(i + 1, host.n))
        r = min_pair / 3.0
    for i, (x, y) in enumerate(host.edges):
        elen = math.hypot(npts[y][0] - npts[x][0], npts[y][1] - npts[x][1])
        if k >= 2:
            r = min(r, elen * math.sin(eps_sep / 2.0) / 2.0)
        for z in range(host.n):
            if z != x and z != y:
                r = min(r, _point_segment_distance(npts[z], npts[x], npts[y]) / 3.0)

    last_error = None
    for _ in range(64):
        d = _build_blowup(g, npts, blocks, corner_of, part, orient, sc, lc,
                          host_edge_idx, k, rho, r)
        try:
            if validate_drawing(g, d).ok:
                count_slopes(d)
                count_lengths(d)
                break
            last_error = "drawing degenerate at this polygon radius"
        except PrecisionError as e:
            last_error = str(e)
        r /= 2.0
    else:
        raise ConstructionError(f"could not stabilize the blow-up: {last_error}")

    t = stats.pair_count
    cert = Certificate(
        slope_bound=k + stats.slope_count + t * (k * k - k),
        length_bound=k // 2 + stats.length_count + t * (k * k - k),
        plane=False,
        method="blow-up",
        alt_length_bound=(k + 1) // 2 + stats.length_count + t * (k * k - k),
    )
    return d, cert


def _build_blowup(g, npts, blocks, corner_of, part, orient, sc, lc,
                  host_edge_idx, k, rho, r):
    corners = [(r * math.cos(rho + 2.0 * math.pi * i / k),
                r * math.sin(rho + 2.0 * math.pi * i / k))
               for i in range(max(k, 1))]
    pts = [None] * g.n
    for x, members in enumerate(blocks):
        bx, by = npts[x]
        for v in members:
            if k == 1:
                pts[v] = (bx, by)
            else:
                cx, cy = corners[corner_of[v]]
                pts[v] = (bx + cx, by + cy)

    slope_keys = {}
    length_keys = {}
    for i, (u, v) in enumerate(g.edges):
        a, b = part.assign[u], part.assign[v]
        if a == b:
            ci, cj = corner_of[u], corner_of[v]
            slope_keys[i] = ("gon", (ci + cj) % k)
            sep = abs(ci - cj)
            length_keys[i] = ("gon", min(sep, k - sep))
        else:
            key = (a, b) if a < b else (b, a)
            first, _second = orient[key]
            ei = host_edge_idx[key]
            cu, cv = corner_of[u], corner_of[v]
            cfirst, csecond = (cu, cv) if part.assign[u] == first else (cv, cu)
            if cfirst == csecond:
                slope_keys[i] = ("host", sc[ei])
                length_keys[i] = ("host", lc[ei])
            else:
                slope_keys[i] = ("pair", sc[ei], lc[ei], cfirst, csecond)
                length_keys[i] = ("pair", sc[ei], lc[ei], cfirst, csecond)

    def as_ids(keys):
        ids = {}
        out = {}
        for i in range(len(g.edges)):
            out[i] = ids.setdefault(keys[i], len(ids))
        return out

    return Drawing("numeric", tuple(pts), g.edges,
                   slope_class=as_ids(slope_keys) if g.edges else None,
                   length_class=as_ids(length_keys) if g.edges else None)


# ---- bounded-bandwidth layout ----


def draw_bandwidth(g: Graph, ordering: VertexOrdering):
    """Chop a width-b ordering into consecutive blocks of b and blow the
    blocks up along a straight path of block centers.

    Edges then join positions at most b apart, so between consecutive blocks
    the corner pairs (j, l) always satisfy l <= j: only b(b-1)/2 shifted
    directions appear next to one path direction and at most b chord
    directions, giving the b(b+1)/2 + 1 slope promise.
    """
    if tuple(sorted(ordering.order)) != tuple(range(g.n)):
        raise ConstructionError("ordering does not cover the graph")
    if g.n == 0:
        raise ConstructionError("nothing to draw")
    b = max(ordering.width, 1)
    blocks = [list(ordering.order[i:i + b]) for i in range(0, g.n, b)]
    host = make_path(len(blocks))
    assign = [0] * g.n
    for x, members in enumerate(blocks):
        for v in members:
            assign[v] = x
    part = HPartition(g, host, tuple(assign))
    host_drawing = Drawing("numeric",
                           tuple((float(i), 0.0) for i in range(host.n)),
                           host.edges)
    d, _ = blow_up(host_drawing, part, block_order=blocks)
    cert = Certificate(
        slope_bound=b * (b + 1) // 2 + 1,
        length_bound=b // 2 + 1 + b * (b - 1) // 2,
        plane=False,
        method="bandwidth",
        alt_length_bound=(b + 1) // 2 + 1 + b * (b - 1) // 2,
    )
    return d, cert


# ---- forest layout ----


def _pick_spine(scan: _TreeScan, sub_root: int, comp: frozenset):
    """Path to straighten at this recursion level: the least backbone of the
    component through sub_root if one exists, else the path from sub_root to
    the nearer endpoint of the least backbone."""
    cands = scan.backbone_candidates(comp)
    for cand in cands:
        if sub_root in cand:
            return cand
    backbone = cands[0]
    pa = scan.path_between(sub_root, backbone[0], comp)
    pb = scan.path_between(sub_root, backbone[-1], comp)
    return pa if len(pa) <= len(pb) else pb


def _tree_component_positions(g, scan, root, comp, scale, slot_angles):
    """Positions and per-edge classes for one tree component, rooted at a
    leaf endpoint of its least backbone. Path edges at recursion level t have
    length scale^t and run horizontally; subtree edges hang below-right on
    the slot directions and recurse one level deeper."""
    horiz = len(slot_angles) - 1
    pos = {}
    slope_cls = {}
    length_cls = {}

    def place(sub_root, piece, origin, level):
        if len(piece) == 1:
            pos[sub_root] = origin
            return
        path = _pick_spine(scan, sub_root, piece)
        step = scale ** level
        i0 = path.index(sub_root)
        for i, x in enumerate(path):
            pos[x] = (origin[0] + (i - i0) * step, origin[1])
        offpath = piece - set(path)
        for i in range(len(path) - 1):
            e = (path[i], path[i + 1]) if path[i] < path[i + 1] else (path[i + 1], path[i])
            slope_cls[e] = horiz
            length_cls[e] = level
        for x in path:
            kids = sorted(c for c in scan.adj[x] if c in offpath)
            # interior path vertices and the sub_root have a spare neighbor
            # slot, so kids never claim the horizontal direction
            assert len(kids) <= horiz, "slot budget exceeded"
            for j, c in enumerate(kids):
                ang = slot_angles[j]
                cpos = (pos[x][0] - step * math.cos(ang),
                        pos[x][1] - step * math.sin(ang))
                e = (x, c) if x < c else (c, x)
                slope_cls[e] = j
                length_cls[e] = level
                place(c, scan.component_of(c, offpath), cpos, level + 1)

    place(root, comp, (0.0, 0.0), 0)
    return pos, slope_cls, length_cls


def draw_forest(g: Graph):
    """Straight-line plane drawing of a forest using at most
    max(max_degree - 1, 1) slopes and 2 * pathwidth - 1 edge lengths."""
    if not is_forest(g):
        raise ConstructionError("input must be a forest")
    if g.n == 0:
        raise ConstructionError("nothing to draw")
    n0 = g.n
    deg = g.max_degree
    pw = tree_pathwidth(g)
    if deg >= 3:
        slot_angles = [math.pi / 2 * (1 + i / (deg - 2)) for i in range(deg - 1)]
    else:
        slot_angles = [math.pi]
    scan = _TreeScan(g)
    comps = [frozenset(comp) for comp in connected_components(g)]
    roots = [scan.backbone_candidates(comp)[0][0] for comp in comps]

    edge_idx = g.edge_index()
    scale = 1.0 / (2.0 * n0)
    for _ in range(64):
        placed = []
        for root, comp in zip(roots, comps):
            placed.append(_tree_component_positions(g, scan, root, comp,
                                                    scale, slot_angles))
        pts = [None] * g.n
        slope_class = {}
        length_class = {}
        cursor = 0.0
        for pos, s_cls, l_cls in placed:
            minx = min(p[0] for p in pos.values())
            maxx = max(p[0] for p in pos.values())
            shift = cursor - minx
            for v, p in pos.items():
                pts[v] = (p[0] + shift, p[1])
            for e, c in s_cls.items():
                slope_class[edge_idx[e]] = c
            for e, c in l_cls.items():
                length_class[edge_idx[e]] = c
            cursor += (maxx - minx) + 1.0
        d = Drawing("numeric", tuple(pts), g.edges,
                    slope_class=slope_class if g.edges else None,
                    length_class=length_class if g.edges else None)
        if validate_drawing(g, d).ok and count_crossings(g, d) == 0:
            break
        scale /= 2.0
    else:
        raise ConstructionError("could not stabilize the forest drawing")

    cert = Certificate(
        slope_bound=max(deg - 1, 1),
        length_bound=max(2 * pw - 1, 0),
        plane=True,
        method="tree",
    )
    return d, cert


def draw_tree(g: Graph):
    if not is_tree(g):
        raise ConstructionError("input must be a tree")
    return draw_forest(g)


def draw_tree_partitioned(g: Graph, part: HPartition):
    """Blow-up over a drawn forest host: combines the forest drawing's slope
    and length frugality with the partition's width."""
    if part.graph != g:
        raise ConstructionError("partition belongs to a different graph")
    if not is_forest(part.host):
        raise ConstructionError("host must be a forest")
    host_drawing, _ = draw_forest(part.host)
    d, cert = blow_up(host_drawing, part)
    cert = Certificate(cert.slope_bound, cert.length_bound, plane=False,
                       method="tree-partition",
                       alt_length_bound=cert.alt_length_bound)
    return d, cert


# ---- one bend per edge ----


def draw_one_bend(g: Graph):
    """Drawing with one bend per edge on max_degree + 1 slopes.

    Every vertex carries one line of each slope s in 0..max_degree (direction
    (1, s)); vertices are placed greedily so that no line holds two vertices
    and no three lines meet outside a vertex. Each edge is routed along one
    spare line of each endpoint, bending where they cross. Both guarantees
    together make the result valid with no further checking; coordinates are
    scaled to integers at the end.
    """
    delta = g.max_degree
    slopes = list(range(delta + 1))
    line_c = {s: set() for s in slopes}   # offsets already holding a vertex
    forb = {s: set() for s in slopes}     # offsets through a 2-line crossing
    spread = g.n * (delta + 2) + 1
    placed = []

    for v in range(g.n):
        x = v * spread
        y = 0
        while True:
            if all((y - s * x) not in line_c[s] and (y - s * x) not in forb[s]
                   for s in slopes):
                break
            y += 1
            if y > 10_000_000:
                raise ConstructionError("vertex placement ran away")
        new_lines = [(s, y - s * x) for s in slopes]
        # a new line through an old 2-line crossing would concur 3 lines
        # outside a vertex; extend the forbidden offsets before registering
        for s1, c1 in new_lines:
            for s2 in slopes:
                if s2 == s1:
                    continue
                bdiff = s1 - s2
                for c2 in line_c[s2]:
                    dc = c2 - c1
                    step = abs(bdiff) // math.gcd(abs(bdiff), abs(dc))
                    for s3 in range(s1 % step, delta + 1, step):
                        if s3 == s1 or s3 == s2:
                            continue
                        forb[s3].add(c1 + ((s1 - s3) * dc) // bdiff)
        for s, c in new_lines:
            line_c[s].add(c)
        placed.append((x, y))

    unused = [set(slopes) for _ in range(g.n)]
    bends = {}
    for i, (u, v) in enumerate(g.edges):
        assert len(unused[u]) >= 2 and len(unused[v]) >= 2, \
            "ran out of spare lines"
        xu, yu = placed[u]
        xv, yv = placed[v]
        mx = Fraction(xu + xv, 2)
        my = Fraction(yu + yv, 2)
        best = None
        for a in sorted(unused[u]):
            ca = yu - a * xu
            for bslope in sorted(unused[v]):
                if bslope == a:
                    continue
                cb = yv - bslope * xv
                qx = Fraction(cb - ca, a - bslope)
                qy = a * qx + ca
                d2 = (qx - mx) ** 2 + (qy - my) ** 2
                cand = (d2, a, bslope, qx, qy)
                if best is None or cand < best:
                    best = cand
        _, a, bslope, qx, qy = best
        unused[u].discard(a)
        unused[v].discard(bslope)
        bends[i] = (qx, qy)

    unit = math.lcm(*range(1, max(delta, 1) + 1))
    pts = tuple((Fraction(x * unit), Fraction(y * unit)) for x, y in placed)
    bends = {i: (p[0] * unit, p[1] * unit) for i, p in bends.items()}
    for p in bends.values():
        assert p[0].denominator == 1 and p[1].denominator == 1
    d = Drawing("exact", pts, g.edges, bends=bends)
    cert = Certificate(delta + 1, None, plane=False, method="one-bend")
    return d, cert
