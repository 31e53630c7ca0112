"""Connected-matching predicates, enumeration, and the brute-force oracle."""

from __future__ import annotations

from fractions import Fraction

from .graph_core import GraphError, is_connected_induced

DEFAULT_ENUM_LIMIT = 200_000


class SizeLimitExceeded(GraphError):
    """Enumeration produced more objects than the configured cap."""


def covered_vertices(g, M):
    verts = set()
    for e in M:
        verts.update(g.endpoints(e))
    return verts


def is_matching(g, M):
    verts = []
    for e in M:
        verts.extend(g.endpoints(e))
    return len(verts) == len(set(verts))


def is_connected_matching(g, M):
    """True iff M is a matching whose covered vertices induce a connected subgraph."""
    if not is_matching(g, M):
        return False
    return is_connected_induced(g, covered_vertices(g, M))


def incidence_vector(g, M):
    x = [0] * g.m
    for e in M:
        x[e - 1] = 1
    return tuple(x)


def enumerate_cm_sets(g, limit=DEFAULT_ENUM_LIMIT):
    """All connected matchings as sorted edge-id tuples, lexicographic order.

    Backtracks over edge ids in increasing order, pruning only on matching
    violations; connectivity is tested at emission (it is not monotone under
    edge addition, so it cannot prune).
    """
    cover = [set(g.endpoints(e)) for e in range(1, g.m + 1)]
    out = []

    def rec(current, covered, start):
        if is_connected_induced(g, covered):
            if len(out) >= limit:
                raise SizeLimitExceeded(
                    f"more than {limit} connected matchings; raise the limit")
            out.append(tuple(current))
        for e in range(start, g.m + 1):
            ends = cover[e - 1]
            if covered & ends:
                continue
            current.append(e)
            rec(current, covered | ends, e + 1)
            current.pop()

    rec([], set(), 1)
    return out


def enumerate_connected_matchings(g, limit=DEFAULT_ENUM_LIMIT):
    """Incidence vectors of all connected matchings, in canonical order."""
    return [incidence_vector(g, M) for M in enumerate_cm_sets(g, limit)]


def exists_cm_superset(g, R, forbidden=()):
    """True iff some connected matching of g contains all edges of R.

    Edges in forbidden may not be picked as matching edges, but they still
    belong to g and count toward the connectivity of the covered set.
    """
    R = sorted(set(R))
    if not is_matching(g, R):
        raise GraphError("R is not a matching")
    base_cover = covered_vertices(g, R)
    cover = [set(g.endpoints(e)) for e in range(1, g.m + 1)]
    banned = set(R) | set(forbidden)
    free = [e for e in range(1, g.m + 1)
            if e not in banned and not (cover[e - 1] & base_cover)]

    def rec(covered, idx):
        if is_connected_induced(g, covered):
            return True
        for k in range(idx, len(free)):
            ends = cover[free[k] - 1]
            if covered & ends:
                continue
            if rec(covered | ends, k + 1):
                return True
        return False

    return rec(base_cover, 0)


def brute_force_max_weight_cm(g, w, limit=DEFAULT_ENUM_LIMIT):
    """Exhaustive maximum-weight connected matching.

    Ties broken by lexicographically smallest sorted edge-id set, which is
    the enumeration order, so the first maximizer encountered wins.
    Returns (value, edge-id tuple); the empty matching keeps the value >= 0.
    """
    w = [Fraction(x) for x in w]
    if len(w) != g.m:
        raise GraphError(f"expected {g.m} weights, got {len(w)}")
    best_val = None
    best_set = None
    for M in enumerate_cm_sets(g, limit):
        val = sum((w[e - 1] for e in M), Fraction(0))
        if best_val is None or val > best_val:
            best_val, best_set = val, M
    return best_val, best_set


def format_vrep(vectors, m):
    """V-description text: `m <m> k <count>` then one 0/1 row per vector."""
    lines = [f"m {m} k {len(vectors)}"]
    for x in vectors:
        lines.append(" ".join(str(int(v)) for v in x))
    return "\n".join(lines) + "\n"
