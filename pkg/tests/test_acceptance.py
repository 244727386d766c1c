"""Acceptance gate: the headline guarantees of the package, one test per
criterion, each emitting a single PASS/FAIL line into the terminal summary.

Later criteria re-measure every drawing produced by the earlier ones, so this
module keeps a registry of (graph, straight-line drawing) pairs.
"""

import math
import random
import time

from conftest import complete_binary_tree, random_graph_bounded, spider, star
from slopeforge import (
    HPartition,
    PolygonAssignment,
    bandwidth_exact,
    bandwidth_heuristic,
    bipartite_slope_bounds,
    blow_up,
    count_crossings,
    count_lengths,
    count_slopes,
    draw_balanced_bipartite,
    draw_bipartite,
    draw_complete_ngon,
    draw_forest,
    draw_one_bend,
    draw_power2_multipartite,
    draw_tree,
    elementary_lower_bounds,
    gap_scan,
    Graph,
    host_stats,
    is_convex_drawing,
    log_count_slopeable,
    log_count_slopeable_exact,
    make_complete,
    make_cycle,
    make_grid,
    make_path,
    ngon_slope_count,
    path_partition_from_ordering,
    petersen,
    power2_parts,
    random_tree,
    realize_ngon,
    subdivide_bends,
    tree_pathwidth,
    validate_drawing,
    verify_certificate,
)

DRAWINGS = []


def register(g, d):
    DRAWINGS.append((g, d))


def report(record, idx, label, failures, detail, elapsed, budget):
    if elapsed >= budget:
        failures = failures + [f"took {elapsed:.1f}s, budget {budget}s"]
    status = "PASS" if not failures else "FAIL"
    line = (f"criterion {idx:02d} {status}  {label}: {detail} "
            f"({elapsed:.1f}s / {budget}s)")
    record(line)
    assert not failures, f"{line}\n" + "\n".join(failures[:5])


def test_criterion_01_complete_graphs(acceptance_record):
    t0 = time.monotonic()
    failures = []
    for n in range(3, 31):
        g, d, cert = draw_complete_ngon(n)
        register(g, d)
        measured = count_slopes(d)
        combinatorial = ngon_slope_count(g, PolygonAssignment(n, tuple(range(n))))
        if not (measured == combinatorial == n):
            failures.append(f"K_{n}: measured {measured}, identity {combinatorial}")
        if not is_convex_drawing(g, d):
            failures.append(f"K_{n}: not in convex position")
    report(acceptance_record, 1, "complete graphs on polygons", failures,
           "n slopes and convex position for n = 3..30", time.monotonic() - t0, 5)


def test_criterion_02_balanced_bipartite(acceptance_record):
    t0 = time.monotonic()
    failures = []
    for n in range(1, 16):
        g, d, cert = draw_balanced_bipartite(n)
        register(g, d)
        measured = count_slopes(d)
        if measured != n:
            failures.append(f"n={n}: measured {measured}")
    report(acceptance_record, 2, "balanced complete bipartite", failures,
           "exactly n slopes for n = 1..15", time.monotonic() - t0, 5)


def test_criterion_03_bipartite_3_12(acceptance_record):
    t0 = time.monotonic()
    g, d, cert = draw_bipartite(3, 12)
    register(g, d)
    measured = count_slopes(d)
    failures = [] if measured == 8 else [f"measured {measured} slopes"]
    report(acceptance_record, 3, "two rows of three against twelve", failures,
           f"parts 3 and 12 drawn with {measured} slopes", time.monotonic() - t0, 5)


def test_criterion_04_bipartite_sandwich(acceptance_record):
    t0 = time.monotonic()
    failures = []
    for a in range(1, 13):
        for b in range(a, 13):
            g, d, cert = draw_bipartite(a, b)
            register(g, d)
            measured = count_slopes(d)
            lo, hi = bipartite_slope_bounds(a, b)
            if not (lo <= measured <= hi):
                failures.append(f"({a},{b}): {measured} outside [{lo},{hi}]")
    report(acceptance_record, 4, "bipartite bound sandwich", failures,
           "lower <= measured <= upper for all part sizes up to 12",
           time.monotonic() - t0, 10)


def test_criterion_05_power2_multipartite(acceptance_record):
    t0 = time.monotonic()
    failures = []
    for p in (0, 1, 2):
        for k in (2, 3, 5, 9):
            g, d, cert = draw_power2_multipartite(p, k)
            register(g, d)
            parts = power2_parts(p, k)
            expect = g.n - 2**p
            measured = count_slopes(d)
            if measured != expect or expect != g.max_degree:
                failures.append(f"(p={p},k={k}): {measured} != {expect}")
            if len(parts[0]) != 2**p or len(parts[-1]) != 2**p:
                failures.append(f"(p={p},k={k}): outer part sizes off")
            if g.n > 256:
                failures.append(f"(p={p},k={k}): n={g.n} too large")
            if not is_convex_drawing(g, d):
                failures.append(f"(p={p},k={k}): not convex")
    report(acceptance_record, 5, "power-of-two multipartite", failures,
           "slope count hits the maximum degree for 12 (p, k) pairs",
           time.monotonic() - t0, 10)


def blowup_cases():
    """(label, host graph, host drawing, widest class graph, assignment)."""
    cases = []
    for m, b in [(3, 2), (3, 3), (4, 2), (4, 4), (4, 3), (5, 2), (5, 3),
                 (2, 3), (2, 5), (1, 4), (1, 6)]:
        host = make_complete(m)
        if m >= 3:
            _, hd, _ = draw_complete_ngon(m)
        else:
            hd, _ = draw_forest(host)
        g = make_complete(m * b)
        assign = tuple(v // b for v in range(m * b))
        cases.append((f"K{m * b} over K{m}", host, hd, g, assign))

    for label, g in [("grid3x4", make_grid(3, 4)), ("grid4x4", make_grid(4, 4)),
                     ("cycle8", make_cycle(8)), ("cycle12", make_cycle(12)),
                     ("grid2x6", make_grid(2, 6)), ("path10", make_path(10))]:
        part = path_partition_from_ordering(g, bandwidth_heuristic(g))
        host = make_path(len(part.blocks))
        hd, _ = draw_forest(host)
        assign = [0] * g.n
        for i, blk in enumerate(part.blocks):
            for v in blk:
                assign[v] = i
        cases.append((f"{label} over P{host.n}", host, hd, g, tuple(assign)))

    g = make_cycle(6)
    hd, _ = draw_forest(make_path(3))
    cases.append(("C6 over P3", make_path(3), hd, g, (0, 0, 1, 2, 2, 1)))

    g = Graph(6, tuple((u, v) for u in range(6) for v in range(u + 1, 6)
                       if u // 2 != v // 2))  # three parts of two
    _, hd, _ = draw_complete_ngon(3)
    cases.append(("tripartite over K3", make_complete(3), hd, g,
                  tuple(v // 2 for v in range(6))))

    g = make_complete(4)
    hd, _ = draw_forest(make_path(2))
    cases.append(("K4 over edge", make_path(2), hd, g, (0, 0, 1, 1)))
    return cases


def test_criterion_06_blowup_matrix(acceptance_record):
    t0 = time.monotonic()
    failures = []
    cases = blowup_cases()
    if len(cases) < 20:
        failures.append(f"only {len(cases)} cases")
    for label, host, hd, g, assign in cases:
        part = HPartition(g, host, assign)
        d, cert = blow_up(hd, part)
        register(g, d)
        rep = verify_certificate(g, d, cert)
        if not rep.ok:
            failures.append(f"{label}: {rep.problems[:2]}")
        k = part.width
        stats = host_stats(hd)
        want_slope = k + stats.slope_count + stats.pair_count * (k * k - k)
        want_length = k // 2 + stats.length_count + stats.pair_count * (k * k - k)
        if cert.slope_bound != want_slope or cert.length_bound != want_length:
            failures.append(f"{label}: certificate bounds drifted")
        if label == "K16 over K4" and (stats.slope_count, stats.length_count) != (4, 2):
            failures.append(f"{label}: host stats {stats}")
    report(acceptance_record, 6, "blow-up matrix", failures,
           f"{len(cases)} host/partition cases verified", time.monotonic() - t0, 30)


def test_criterion_07_bandwidth(acceptance_record):
    t0 = time.monotonic()
    failures = []
    cases = [(make_path(10), 1), (make_cycle(8), 2), (make_cycle(14), 2),
             (make_grid(3, 5), 3), (make_grid(4, 4), 4), (make_complete(5), 4)]
    for g, b in cases:
        o = bandwidth_exact(g)
        if o.width != b:
            failures.append(f"n={g.n}: exact width {o.width}, expected {b}")
            continue
        from slopeforge import draw_bandwidth

        d, cert = draw_bandwidth(g, o)
        register(g, d)
        measured = count_slopes(d)
        cap = b * (b + 1) // 2 + 1
        if measured > cap:
            failures.append(f"width {b}: measured {measured} > {cap}")
        if g.n == 5 and g.m == 10 and measured > 11:
            failures.append(f"complete five-vertex case used {measured} > 11")
    report(acceptance_record, 7, "bandwidth layouts", failures,
           "slopes within b(b+1)/2 + 1 for exact widths up to 4",
           time.monotonic() - t0, 30)


def test_criterion_08_trees(acceptance_record):
    t0 = time.monotonic()
    failures = []
    forests = []
    for seed in range(200):
        n = 10 + (seed * 7) % 51
        md = 3 + seed % 6
        forests.append(random_tree(n, max_degree=md, seed=seed))
    forests += [make_path(2), make_path(10), make_path(40), star(3), star(7),
                spider(3, 3), spider(5, 2), spider(7, 1),
                complete_binary_tree(1), complete_binary_tree(3),
                complete_binary_tree(5)]
    for i, g in enumerate(forests):
        d, cert = draw_tree(g)
        register(g, d)
        slopes = count_slopes(d)
        lengths = count_lengths(d)
        crossings = count_crossings(g, d)
        pw = tree_pathwidth(g)
        bad = []
        if slopes > max(g.max_degree - 1, 1):
            bad.append(f"slopes {slopes}")
        if lengths > max(2 * pw - 1, 0):
            bad.append(f"lengths {lengths} vs pathwidth {pw}")
        if crossings:
            bad.append(f"{crossings} crossings")
        if bad:
            failures.append(f"tree #{i} (n={g.n}): " + ", ".join(bad))
    report(acceptance_record, 8, "tree drawings", failures,
           f"{len(forests)} trees within degree and pathwidth budgets, plane",
           time.monotonic() - t0, 60)


def test_criterion_09_one_bend(acceptance_record):
    t0 = time.monotonic()
    failures = []
    graphs = [random_graph_bounded(5 + (s * 3) % 36, 8, random.Random(s))
              for s in range(100)]
    graphs += [petersen(), make_complete(7)]
    for i, g in enumerate(graphs):
        d, cert = draw_one_bend(g)
        if d.mode != "exact":
            failures.append(f"graph #{i}: mode {d.mode}")
        g2, d2 = subdivide_bends(g, d)
        register(g2, d2)
        slopes = count_slopes(d2)
        if slopes > max(g.max_degree, 1) + 1:
            failures.append(f"graph #{i}: {slopes} slopes, degree {g.max_degree}")
        if not validate_drawing(g2, d2).ok:
            failures.append(f"graph #{i}: invalid subdivision")
    report(acceptance_record, 9, "one-bend drawings", failures,
           f"{len(graphs)} graphs at degree + 1 slopes in exact arithmetic",
           time.monotonic() - t0, 60)


def test_criterion_10_counting(acceptance_record):
    t0 = time.monotonic()
    failures = []
    for n in (2, 3, 5, 8, 13, 21, 34, 50):
        for k in range(1, 11):
            cap = k * (n - 1)
            for m in sorted({0, 1, cap // 3, cap // 2, max(cap - 1, 0), cap}):
                fast = log_count_slopeable(n, m, k)
                exact = log_count_slopeable_exact(n, m, k)
                err = abs(fast - exact) / max(abs(exact), 1.0)
                if err >= 1e-9:
                    failures.append(f"(n={n},k={k},m={m}): rel err {err:.2e}")
    scan = gap_scan(5, 1.0, [10**e for e in range(3, 9)])
    if scan["first_positive_n"] is None:
        failures.append("no positive gap on the decade grid")
    report(acceptance_record, 10, "counting evaluator", failures,
           f"lgamma matches exact arithmetic; positive gap at "
           f"n={scan['first_positive_n']}", time.monotonic() - t0, 30)


def test_criterion_11_cross_cutting(acceptance_record):
    t0 = time.monotonic()
    failures = []
    if not DRAWINGS:  # standalone run; produce a few drawings to audit
        for n in (3, 6, 9):
            g, d, _ = draw_complete_ngon(n)
            register(g, d)
    for i, (g, d) in enumerate(DRAWINGS):
        if g.m == 0:
            continue
        slopes = count_slopes(d)
        general, convex = elementary_lower_bounds(g)
        if slopes < general:
            failures.append(f"drawing #{i}: {slopes} slopes under floor {general}")
        if is_convex_drawing(g, d) and slopes < convex:
            failures.append(f"drawing #{i}: convex with {slopes} < {convex}")

    rng = random.Random(11)
    for _ in range(500):
        n = rng.randrange(3, 17)
        k = rng.randrange(2, n + 1)
        corners = tuple(rng.sample(range(n), k))
        pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
        rng.shuffle(pairs)
        edges = tuple(sorted(pairs[: rng.randrange(1, len(pairs) + 1)]))
        g = Graph(k, edges)
        a = PolygonAssignment(n, corners)
        combinatorial = ngon_slope_count(g, a)
        numeric = count_slopes(realize_ngon(g, a))
        if combinatorial != numeric:
            failures.append(f"polygon pair n={n}: {combinatorial} != {numeric}")
    report(acceptance_record, 11, "cross-cutting invariants", failures,
           f"{len(DRAWINGS)} drawings over the degree floor; "
           f"500 polygon identities agree", time.monotonic() - t0, 60)
