"""Lower bounds on slope counts, including the counting argument that pits
the number of regular graphs against the number of graphs drawable with a
limited slope budget."""

from __future__ import annotations

import math
from fractions import Fraction

from .graphs import Graph


def elementary_lower_bounds(g: Graph):
    """(general, convex) slope lower bounds for any straight-line drawing:
    every vertex sees at most two edges per slope, so ceil(max_degree / 2)
    slopes are forced, and min_degree is forced as well; drawings in convex
    position see at most one edge per slope per vertex, forcing max_degree."""
    if g.m == 0:
        return 0, 0
    general = max((g.max_degree + 1) // 2, g.min_degree)
    return general, g.max_degree


# ---- counting argument ----
#
# A graph drawable with k slopes embeds in a structure of n points on
# k * (n - 1) candidate lines; counting those structures and comparing with
# the number of regular graphs shows that for fixed degree almost every
# regular graph needs many slopes.  Everything below works with logarithms
# of the two counts; the gap is their difference.


def log_count_regular(n: int, delta: int) -> float:
    """Log of (a lower bound on) the number of delta-regular graphs on n
    labelled vertices: (n / 3 delta) ** (delta n / 2)."""
    if n < 1 or delta < 1:
        raise ValueError("need n >= 1 and delta >= 1")
    return (delta * n / 2.0) * (math.log(n) - math.log(3.0 * delta))


def log_count_slopeable(n: int, m: int, k: int, c: float = 50.0) -> float:
    """Log of (an upper bound on) the number of n-vertex m-edge graphs that
    admit a straight-line drawing with at most k slopes. -inf when m edges
    cannot even fit on k slopes (each slope carries at most n - 1 edges)."""
    if n < 1 or k < 1 or m < 0:
        raise ValueError("need n >= 1, k >= 1, m >= 0")
    if m > k * (n - 1):
        return -math.inf
    t = 2 * n + k
    arrangements = t * math.log(c * n * n * (k + 1) / t)
    choices = (math.lgamma(k * (n - 1) + 1) - math.lgamma(m + 1)
               - math.lgamma(k * (n - 1) - m + 1))
    return arrangements + choices


def _ln_big(x: int) -> float:
    """Natural log of a positive integer of any size."""
    if x <= 0:
        raise ValueError("need a positive integer")
    b = x.bit_length()
    if b <= 900:
        return math.log(x)
    shift = b - 64
    return math.log(x >> shift) + shift * math.log(2.0)


def _ln_fraction(f: Fraction) -> float:
    return _ln_big(f.numerator) - _ln_big(f.denominator)


def log_count_slopeable_exact(n: int, m: int, k: int, c: int = 50) -> float:
    """Same quantity as log_count_slopeable, but evaluated through exact
    big-integer arithmetic (requires an integer c). Intended as a slow
    reference for small inputs."""
    if n < 1 or k < 1 or m < 0:
        raise ValueError("need n >= 1, k >= 1, m >= 0")
    if int(c) != c:
        raise ValueError("exact evaluation needs an integer c")
    if m > k * (n - 1):
        return -math.inf
    t = 2 * n + k
    base = Fraction(int(c) * n * n * (k + 1), t)
    total = base ** t * math.comb(k * (n - 1), m)
    return _ln_fraction(total)


def slope_budget(n: int, delta: int, epsilon: float) -> int:
    """Slope budget k = ceil(n ** (1 - (8 + epsilon) / (delta + 4))) tested
    against the regular-graph count, floored at 1."""
    expo = 1.0 - (8.0 + epsilon) / (delta + 4.0)
    return max(1, math.ceil(n ** expo))


def counting_gap(n: int, delta: int, epsilon: float, c: float = 50.0) -> dict:
    """Counting comparison at one size: log of the regular-graph count minus
    log of the k-slope-drawable count, with k from slope_budget. A positive
    gap certifies delta-regular graphs that need more than k slopes."""
    if delta < 1:
        raise ValueError("need delta >= 1")
    if n < 2:
        raise ValueError("need n >= 2")
    if (n * delta) % 2 != 0:
        raise ValueError(f"no {delta}-regular graph on {n} vertices: "
                         f"n * delta must be even")
    k = slope_budget(n, delta, epsilon)
    m = delta * n // 2
    reg = log_count_regular(n, delta)
    drawable = log_count_slopeable(n, m, k, c)
    gap = math.inf if drawable == -math.inf else reg - drawable
    return {"n": n, "k": k, "log_regular": reg, "log_slopeable": drawable,
            "gap": gap}


def gap_scan(delta: int, epsilon: float, ns, c: float = 50.0) -> dict:
    """Evaluate counting_gap over a list of sizes (bumped by one where
    parity forbids a regular graph) and report the first positive gap."""
    rows = []
    first_positive = None
    for n in ns:
        if (n * delta) % 2 != 0:
            n += 1
        row = counting_gap(n, delta, epsilon, c)
        rows.append(row)
        if first_positive is None and row["gap"] > 0:
            first_positive = row["n"]
    return {"rows": rows, "first_positive_n": first_positive}
