"""Shared brute-force oracles and graph builders for the test suite.

Everything here is deliberately naive: permutation sweeps, bitmask dynamic
programs, pairwise exact segment checks. The oracles exist so the fast
implementations in the package have something independent to disagree with.
"""

from fractions import Fraction
from itertools import permutations

import pytest

from slopeforge import Graph


# ---- graph builders ----


def complete_binary_tree(height: int) -> Graph:
    """Complete binary tree with 2**(height+1) - 1 vertices, root 0."""
    n = 2 ** (height + 1) - 1
    edges = [((v - 1) // 2, v) for v in range(1, n)]
    return Graph(n, tuple(edges))


def spider(legs: int, length: int) -> Graph:
    """Star of `legs` paths of `length` edges glued at vertex 0."""
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, tuple(edges))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, v) for v in range(1, leaves + 1)))


def random_graph_bounded(n: int, max_degree: int, rng) -> Graph:
    """Random simple graph with every degree <= max_degree."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    target = rng.randrange(0, len(pairs) + 1)
    for u, v in pairs:
        if len(edges) >= target:
            break
        if deg[u] < max_degree and deg[v] < max_degree:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, tuple(edges))


# ---- bandwidth oracle: try every ordering ----


def brute_bandwidth(g: Graph) -> int:
    if g.m == 0:
        return 0
    best = g.n
    for perm in permutations(range(g.n)):
        pos = [0] * g.n
        for i, v in enumerate(perm):
            pos[v] = i
        width = max(abs(pos[u] - pos[v]) for u, v in g.edges)
        best = min(best, width)
        if best == 1:
            break
    return best


# ---- pathwidth oracle: vertex separation over bitmask subsets ----


def brute_pathwidth(g: Graph) -> int:
    """Vertex separation number, equal to pathwidth. Exponential in n."""
    n = g.n
    if n == 0:
        return 0
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    full = (1 << n) - 1

    def boundary(s: int) -> int:
        out = ~s
        return sum(1 for v in range(n) if s >> v & 1 and nbr[v] & out & full)

    hs = [0] * (1 << n)
    by_bits = sorted(range(1 << n), key=int.bit_count)
    for s in by_bits:
        if s == 0:
            continue
        b = boundary(s)
        best = n
        t = s
        while t:
            v = (t & -t).bit_length() - 1
            t &= t - 1
            best = min(best, max(hs[s ^ (1 << v)], b))
        hs[s] = best
    return hs[full]


# ---- crossing oracle: solve each segment pair exactly ----


def _interval_overlap(a, b, c, d) -> bool:
    lo1, hi1 = min(a, b), max(a, b)
    lo2, hi2 = min(c, d), max(c, d)
    return max(lo1, lo2) <= min(hi1, hi2)


def _pair_touches(p1, p2, p3, p4) -> bool:
    """Closed segments p1p2 and p3p4 share at least one point. All exact."""
    x1, y1 = p1
    x2, y2 = p2
    x3, y3 = p3
    x4, y4 = p4
    dx1, dy1 = x2 - x1, y2 - y1
    dx2, dy2 = x4 - x3, y4 - y3
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        # parallel; intersect only if collinear with overlapping boxes
        if dx1 * (y3 - y1) - dy1 * (x3 - x1) != 0:
            return False
        return _interval_overlap(x1, x2, x3, x4) and _interval_overlap(y1, y2, y3, y4)
    s = Fraction((x3 - x1) * dy2 - (y3 - y1) * dx2, den)
    t = Fraction((x3 - x1) * dy1 - (y3 - y1) * dx1, den)
    return 0 <= s <= 1 and 0 <= t <= 1


def brute_crossings(g: Graph, d) -> int:
    """Count edge pairs of a straight-line exact drawing that meet outside
    a shared endpoint. Independent of the geometry module's predicates."""
    assert d.mode == "exact" and not d.has_bends
    count = 0
    edges = list(d.edges)
    for i in range(len(edges)):
        u1, v1 = edges[i]
        a, b = d.points[u1], d.points[v1]
        for j in range(i + 1, len(edges)):
            u2, v2 = edges[j]
            c, e = d.points[u2], d.points[v2]
            shared = {u1, v1} & {u2, v2}
            if shared:
                (w,) = shared
                p = d.points[w]
                q = b if a == p else a
                r = e if c == p else c
                cross = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
                dot = (q[0] - p[0]) * (r[0] - p[0]) + (q[1] - p[1]) * (r[1] - p[1])
                if cross == 0 and dot > 0:
                    count += 1
                continue
            if _pair_touches(a, b, c, e):
                count += 1
    return count


# ---- acceptance report plumbing ----


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_record():
    def record(line: str):
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
