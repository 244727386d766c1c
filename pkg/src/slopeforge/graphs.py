"""Graph structures, family generators, and ordering combinatorics.

Everything in here is purely combinatorial: simple undirected graphs on
vertices 0..n-1, linear orderings and their bandwidth, path partitions,
and the pathwidth machinery for trees that the layout engines build on.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Invalid graph structure or an operation on an unsupported graph."""


class GraphParseError(GraphError):
    """Malformed edge-list text; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertex set {0, ..., n-1}.

    Edges are canonicalized to sorted (u, v) tuples with u < v, stored in
    lexicographic order. Loops and duplicate edges are rejected.
    """

    n: int
    edges: tuple
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        canon = []
        for e in self.edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphError(f"edge {e!r} is not a pair") from None
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            canon.append(key)
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))
        adj = [[] for _ in range(self.n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def edge_index(self) -> dict:
        """Map each canonical edge tuple to its position in self.edges."""
        return {e: i for i, e in enumerate(self.edges)}


# ---- generators ----


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def make_complete_multipartite(part_sizes) -> Graph:
    """Complete multipartite graph with contiguous parts, first part first."""
    sizes = list(part_sizes)
    if len(sizes) < 2:
        raise GraphError("need at least 2 parts")
    if any(s < 1 for s in sizes):
        raise GraphError("every part needs at least one vertex")
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    part_of = [0] * n
    for i in range(len(sizes)):
        for v in range(bounds[i], bounds[i + 1]):
            part_of[v] = i
    edges = tuple(
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    )
    return Graph(n, edges)


def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def make_grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise GraphError("grid needs rows, cols >= 1")
    def vid(r, c):
        return r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph(rows * cols, tuple(edges))


def random_tree(n: int, max_degree: int | None = None, seed: int = 0) -> Graph:
    """Random labelled tree; each new vertex attaches to a uniformly chosen
    earlier vertex whose degree is still below max_degree."""
    if n < 1:
        raise GraphError("tree needs n >= 1")
    if max_degree is not None and n > 2 and max_degree < 2:
        raise GraphError("max_degree < 2 only allows trees on at most 2 vertices")
    rng = random.Random(seed)
    deg = [0] * n
    edges = []
    for v in range(1, n):
        candidates = [u for u in range(v) if max_degree is None or deg[u] < max_degree]
        if not candidates:
            raise GraphError("degree bound too tight to grow the tree")
        u = candidates[rng.randrange(len(candidates))]
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return Graph(n, tuple(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, tuple(outer + inner + spokes))


# ---- edge-list text format ----


def parse_graph(text: str) -> Graph:
    """Parse the plain edge-list format: a "n m" header line followed by
    m lines "u v". Raises GraphParseError with the offending line number."""
    lines = text.splitlines()
    header_idx = None
    for i, raw in enumerate(lines):
        if raw.strip():
            header_idx = i
            break
    if header_idx is None:
        raise GraphParseError("empty input, expected a 'n m' header")
    parts = lines[header_idx].split()
    if len(parts) != 2:
        raise GraphParseError("header must be 'n m'", header_idx + 1)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError("header values must be integers", header_idx + 1) from None
    if n < 0 or m < 0:
        raise GraphParseError("header values must be non-negative", header_idx + 1)
    edges = []
    lineno = header_idx + 1
    for raw in lines[header_idx + 1:]:
        lineno += 1
        if not raw.strip():
            continue
        toks = raw.split()
        if len(toks) != 2:
            raise GraphParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphParseError(f"non-integer endpoint in {raw.strip()!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint out of range in edge ({u}, {v})", lineno)
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in set(edges):
            raise GraphParseError(f"duplicate edge {key}", lineno)
        edges.append(key)
    if len(edges) != m:
        raise GraphParseError(f"header promised {m} edges, found {len(edges)}")
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list text; parse_graph(serialize_graph(g)) == g."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


# ---- connectivity helpers ----


def connected_components(g: Graph) -> list:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def induced_subgraph(g: Graph, vertices) -> tuple:
    """Induced subgraph plus the old-id list (new id i  ->  old id list[i])."""
    old = sorted(vertices)
    pos = {v: i for i, v in enumerate(old)}
    edges = tuple(
        (pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos
    )
    return Graph(len(old), edges), old


def detect_complete_multipartite(g: Graph) -> list | None:
    """Return the parts of g if it is complete multipartite, else None.

    Vertices with identical closed non-neighborhoods form the parts; the
    result is sorted by (size, smallest member) for determinism.
    """
    if g.n == 0:
        return None
    groups = {}
    for v in range(g.n):
        groups.setdefault(frozenset(g.adjacency[v]), []).append(v)
    parts = [sorted(vs) for vs in groups.values()]
    part_of = {}
    for i, p in enumerate(parts):
        for v in p:
            part_of[v] = i
    for v in range(g.n):
        if len(g.adjacency[v]) != g.n - len(parts[part_of[v]]):
            return None
        for u in g.adjacency[v]:
            if part_of[u] == part_of[v]:
                return None
    if len(parts) < 2:
        return None
    parts.sort(key=lambda p: (len(p), p[0]))
    return parts


# ---- vertex orderings and bandwidth ----


@dataclass(frozen=True)
class VertexOrdering:
    """A linear ordering of all vertices together with its width, the
    largest |pos(u) - pos(v)| over edges uv."""

    order: tuple
    width: int

    @classmethod
    def from_order(cls, g: Graph, order) -> "VertexOrdering":
        order = tuple(order)
        if sorted(order) != list(range(g.n)):
            raise GraphError("ordering is not a permutation of the vertices")
        return cls(order, ordering_width(g, order))

    def positions(self) -> dict:
        return {v: i for i, v in enumerate(self.order)}


def ordering_width(g: Graph, order) -> int:
    pos = {v: i for i, v in enumerate(order)}
    return max((abs(pos[u] - pos[v]) for u, v in g.edges), default=0)


def bandwidth_heuristic(g: Graph) -> VertexOrdering:
    """Breadth-first (Cuthill-McKee style) ordering from a pseudo-peripheral
    start vertex. Disconnected graphs are handled component by component and
    the component orderings concatenated."""
    order = []
    for comp in connected_components(g):
        order.extend(_cuthill_mckee(g, comp))
    return VertexOrdering.from_order(g, order)


def _bfs_levels(g: Graph, start, allowed):
    level = {start: 0}
    q = deque([start])
    while q:
        v = q.popleft()
        for u in g.adjacency[v]:
            if u in allowed and u not in level:
                level[u] = level[v] + 1
                q.append(u)
    return level


def _cuthill_mckee(g: Graph, comp):
    allowed = set(comp)
    start = min(comp, key=lambda v: (g.degree(v), v))
    # double sweep to land on a pseudo-peripheral vertex
    for _ in range(2):
        level = _bfs_levels(g, start, allowed)
        far = max(level.values())
        start = min((v for v, l in level.items() if l == far),
                    key=lambda v: (g.degree(v), v))
    out = [start]
    seen = {start}
    q = deque([start])
    while q:
        v = q.popleft()
        nbrs = sorted((u for u in g.adjacency[v] if u not in seen),
                      key=lambda u: (g.degree(u), u))
        for u in nbrs:
            seen.add(u)
            out.append(u)
            q.append(u)
    return out


def bandwidth_exact(g: Graph, node_limit: int = 20) -> VertexOrdering:
    """Minimum-width ordering via branch and bound over partial orderings.

    Exponential in the worst case; refuses graphs larger than node_limit.
    """
    if g.n > node_limit:
        raise GraphError(
            f"graph too large for exact bandwidth search (n={g.n} > node_limit={node_limit})")
    if g.n == 0:
        return VertexOrdering((), 0)
    best_order = []
    best_width = 0
    for comp in connected_components(g):
        sub, old = induced_subgraph(g, comp)
        sub_ord, sub_w = _bandwidth_component(sub)
        best_order.extend(old[v] for v in sub_ord)
        best_width = max(best_width, sub_w)
    return VertexOrdering(tuple(best_order), best_width)


def _bandwidth_lower_bound(g: Graph) -> int:
    lb = max(((g.degree(v) + 1) // 2 for v in range(g.n)), default=0)
    if g.n > 1:
        # distance bound: n-1 positions must span the diameter
        ecc = 0
        for s in range(g.n):
            level = _bfs_levels(g, s, set(range(g.n)))
            ecc = max(ecc, max(level.values()))
        if ecc:
            lb = max(lb, -((g.n - 1) // -ecc))
    return lb


def _bandwidth_component(g: Graph):
    heur = _cuthill_mckee(g, list(range(g.n))) if g.n else []
    best = list(heur)
    best_w = ordering_width(g, best)
    lb = _bandwidth_lower_bound(g)
    if best_w <= lb:
        return best, best_w

    n = g.n
    pos = [-1] * n
    unplaced_nbrs = [g.degree(v) for v in range(n)]
    order = []

    def dfs(cur_w):
        nonlocal best, best_w
        i = len(order)
        if i == n:
            best, best_w = order.copy(), cur_w
            return best_w <= lb
        for v in range(n):
            if pos[v] >= 0:
                continue
            w2 = cur_w
            ok = True
            for u in g.adjacency[v]:
                if pos[u] >= 0:
                    d = i - pos[u]
                    if d >= best_w:
                        ok = False
                        break
                    if d > w2:
                        w2 = d
            if not ok:
                continue
            pos[v] = i
            order.append(v)
            for u in g.adjacency[v]:
                unplaced_nbrs[u] -= 1
            # every placed vertex still needs room for its unplaced neighbors
            feasible = True
            for u in range(n):
                if pos[u] >= 0 and unplaced_nbrs[u] > 0:
                    if i + unplaced_nbrs[u] - pos[u] >= best_w:
                        feasible = False
                        break
            if feasible and dfs(w2):
                return True
            for u in g.adjacency[v]:
                unplaced_nbrs[u] += 1
            order.pop()
            pos[v] = -1
        return False

    dfs(0)
    return best, best_w


# ---- path partitions ----


@dataclass(frozen=True)
class PathPartition:
    """Ordered partition of the vertices such that every edge stays inside
    a block or joins two consecutive blocks. Width is the largest block."""

    blocks: tuple
    width: int

    @classmethod
    def from_blocks(cls, g: Graph, blocks) -> "PathPartition":
        blocks = tuple(tuple(b) for b in blocks)
        flat = [v for b in blocks for v in b]
        if sorted(flat) != list(range(g.n)):
            raise GraphError("blocks do not partition the vertex set")
        if any(len(b) == 0 for b in blocks):
            raise GraphError("empty block")
        block_of = {}
        for i, b in enumerate(blocks):
            for v in b:
                block_of[v] = i
        for u, v in g.edges:
            if abs(block_of[u] - block_of[v]) > 1:
                raise GraphError(
                    f"edge ({u}, {v}) spans non-consecutive blocks "
                    f"{block_of[u]} and {block_of[v]}")
        return cls(blocks, max((len(b) for b in blocks), default=0))


def path_partition_from_ordering(g: Graph, o: VertexOrdering) -> PathPartition:
    """Chop the ordering into consecutive blocks of size width (last block
    possibly smaller). Valid because no edge spans more than width positions."""
    b = max(o.width, 1)
    blocks = [o.order[i:i + b] for i in range(0, g.n, b)]
    return PathPartition.from_blocks(g, blocks)


def ordering_from_path_partition(g: Graph, p: PathPartition) -> VertexOrdering:
    """Concatenate the blocks (ascending ids inside each block). The result
    has width at most 2*p.width - 1."""
    order = [v for b in p.blocks for v in sorted(b)]
    return VertexOrdering.from_order(g, order)


# ---- tree pathwidth and backbones ----


class _TreeScan:
    """Pathwidth queries over one fixed forest.

    Works on connected vertex sets (frozensets) of the forest, memoizing the
    pathwidth per set. The recursion follows the path characterization: a
    tree has pathwidth at most k exactly when some leaf-to-leaf path can be
    removed to leave components of pathwidth at most k - 1. Sets of
    pathwidth 0 or 1 are recognized directly (no edges / caterpillar), which
    keeps the recursion shallow.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adjacency
        self._pw = {}
        self._dec = {}

    def component_of(self, start: int, allowed) -> frozenset:
        """Connected component of start inside the allowed vertex set."""
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in self.adj[v]:
                if u in allowed and u not in seen:
                    seen.add(u)
                    stack.append(u)
        return frozenset(seen)

    def path_between(self, a: int, b: int, allowed):
        """Unique tree path from a to b inside the allowed vertex set."""
        parent = {a: None}
        stack = [a]
        while stack:
            v = stack.pop()
            if v == b:
                break
            for u in self.adj[v]:
                if u in allowed and u not in parent:
                    parent[u] = v
                    stack.append(u)
        if b not in parent:
            raise GraphError(f"no path between {a} and {b}")
        path = [b]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        return tuple(path)

    def leaves_of(self, comp):
        out = []
        for v in comp:
            deg_in = sum(1 for u in self.adj[v] if u in comp)
            if deg_in <= 1:
                out.append(v)
        return sorted(out)

    def _edge_count(self, comp) -> int:
        return sum(1 for v in comp for u in self.adj[v] if u in comp) // 2

    def _is_caterpillar(self, comp) -> bool:
        """True when removing all leaves leaves a (possibly empty) path."""
        spine = {v for v in comp
                 if sum(1 for u in self.adj[v] if u in comp) >= 2}
        return all(sum(1 for u in self.adj[v] if u in spine) <= 2
                   for v in spine)

    def _hanging(self, comp, path):
        """Components of comp minus the path."""
        remaining = set(comp) - set(path)
        out = []
        while remaining:
            c = next(iter(remaining))
            piece = self.component_of(c, remaining)
            remaining -= piece
            out.append(piece)
        return out

    def _decide(self, comp: frozenset, t: int) -> bool:
        """Is the pathwidth of the connected set at most t?

        The minimum over leaf-to-leaf paths of 1 + the worst leftover
        component exceeds t exactly when some vertex keeps a branch of
        pathwidth at least t no matter which two branches the path enters,
        i.e. when it has three such branches. Recursing on that test keeps
        the depth bounded by t instead of expanding every piece fully."""
        key = (comp, t)
        got = self._dec.get(key)
        if got is not None:
            return got
        if self._edge_count(comp) == 0:
            out = True
        elif t == 0:
            out = False
        elif self._is_caterpillar(comp):
            out = True
        elif t == 1:
            out = False
        else:
            out = True
            for y in comp:
                nbrs = [c for c in self.adj[y] if c in comp]
                if len(nbrs) < 3:
                    continue
                rest = comp - {y}
                heavy = 0
                for c in nbrs:
                    if not self._decide(self.component_of(c, rest), t - 1):
                        heavy += 1
                        if heavy == 3:
                            break
                if heavy == 3:
                    out = False
                    break
        self._dec[key] = out
        return out

    def pathwidth(self, comp: frozenset) -> int:
        """Pathwidth of a connected vertex set of the forest."""
        got = self._pw.get(comp)
        if got is not None:
            return got
        t = 0
        while not self._decide(comp, t):
            t += 1
        self._pw[comp] = t
        return t

    def backbone_candidates(self, comp: frozenset):
        """Leaf-to-leaf paths of the component whose removal strictly lowers
        its pathwidth, each in canonical (lexicographically least)
        orientation, sorted. A single vertex is its own backbone."""
        if len(comp) == 1:
            return [(next(iter(comp)),)]
        pw = self.pathwidth(comp)
        leaves = self.leaves_of(comp)
        found = []
        for ai in range(len(leaves)):
            for bi in range(ai + 1, len(leaves)):
                path = self.path_between(leaves[ai], leaves[bi], comp)
                if all(self._decide(piece, pw - 1)
                       for piece in self._hanging(comp, path)):
                    found.append(min(path, path[::-1]))
        found.sort()
        return found


def tree_pathwidth(g: Graph) -> int:
    """Pathwidth of a forest: a single vertex has pathwidth 0, a forest takes
    the maximum over its components, and a tree has pathwidth k exactly when
    some path can be removed to leave a forest of pathwidth at most k - 1."""
    if not is_forest(g):
        raise GraphError("pathwidth recursion requires a forest")
    if g.n == 0:
        return 0
    scan = _TreeScan(g)
    return max(scan.pathwidth(frozenset(comp))
               for comp in connected_components(g))


def find_backbone(g: Graph) -> tuple:
    """A leaf-to-leaf path whose removal strictly decreases the pathwidth,
    as a vertex tuple. Ties break toward the lexicographically least
    canonical sequence. A single vertex is its own backbone."""
    if not is_tree(g):
        raise GraphError("backbones are defined for trees")
    scan = _TreeScan(g)
    cands = scan.backbone_candidates(frozenset(range(g.n)))
    if not cands:
        raise GraphError("no backbone found; pathwidth recursion is broken")
    return cands[0]
