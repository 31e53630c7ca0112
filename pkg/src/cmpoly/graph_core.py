"""Graph representation, parsing, generators, and structural predicates."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


class GraphError(ValueError):
    """Base class for graph-domain errors."""


class ParseError(GraphError):
    """Malformed graph file; message names the offending line."""


class DegenerateInput(GraphError):
    """Predicate applied outside its meaningful domain (e.g. |S| < 3)."""


@dataclass
class Graph:
    """Simple undirected graph with 1-based vertices and stable 1-based edge ids.

    Edge id i refers to edges[i-1]; ids follow input order.  Optional
    rational edge weights default to 1.
    """

    n: int
    edges: tuple
    weights: tuple | None = None
    _adj: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        norm = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"vertex out of range in edge ({u},{v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge ({u},{v})")
            seen.add(key)
            norm.append(key)
        self.edges = tuple(norm)
        if self.weights is not None:
            self.weights = tuple(Fraction(w) for w in self.weights)
            if len(self.weights) != len(self.edges):
                raise GraphError("weight count does not match edge count")

    @property
    def m(self):
        return len(self.edges)

    def endpoints(self, e):
        """Endpoints of edge id e (1-based)."""
        if not (1 <= e <= self.m):
            raise GraphError(f"edge id {e} out of range 1..{self.m}")
        return self.edges[e - 1]

    def weight(self, e):
        if self.weights is None:
            return Fraction(1)
        return self.weights[e - 1]

    def adjacency(self):
        """vertex -> sorted list of (neighbor, edge id)."""
        if self._adj is None:
            adj = {v: [] for v in range(1, self.n + 1)}
            for i, (u, v) in enumerate(self.edges, start=1):
                adj[u].append((v, i))
                adj[v].append((u, i))
            for v in adj:
                adj[v].sort()
            self._adj = adj
        return self._adj

    def neighbors(self, v):
        return [u for u, _ in self.adjacency()[v]]

    def incident_edges(self, v):
        """Edge ids of delta(v), sorted."""
        return sorted(i for _, i in self.adjacency()[v])

    def edge_id(self, u, v):
        """Edge id of {u,v}, or None."""
        key = (min(u, v), max(u, v))
        for i, e in enumerate(self.edges, start=1):
            if e == key:
                return i
        return None

    def without_edges(self, edge_ids):
        """Copy of the graph with the given edge ids deleted (vertices kept).

        Returns (graph, idmap) where idmap maps surviving old ids to new ids.
        """
        drop = set(edge_ids)
        kept = [i for i in range(1, self.m + 1) if i not in drop]
        idmap = {old: new for new, old in enumerate(kept, start=1)}
        edges = tuple(self.edges[i - 1] for i in kept)
        weights = None
        if self.weights is not None:
            weights = tuple(self.weights[i - 1] for i in kept)
        return Graph(self.n, edges, weights), idmap


def parse_graph(text):
    """Parse the graph file format: `p <n> <m>`, `e <u> <v> [w <num>/<den>]`."""
    n = None
    declared_m = None
    edges = []
    weights = []
    any_weight = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            if len(tok) != 3:
                raise ParseError(f"line {lineno}: header must be 'p <n> <m>'")
            try:
                n, declared_m = int(tok[1]), int(tok[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer header field")
            if n < 0 or declared_m < 0:
                raise ParseError(f"line {lineno}: negative header field")
        elif tok[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(tok) not in (3, 5) or (len(tok) == 5 and tok[3] != "w"):
                raise ParseError(f"line {lineno}: bad edge record")
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer endpoint")
            if u == v:
                raise ParseError(f"line {lineno}: loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex out of range")
            key = (min(u, v), max(u, v))
            if key in {(min(a, b), max(a, b)) for a, b in edges}:
                raise ParseError(f"line {lineno}: duplicate edge ({u},{v})")
            edges.append((u, v))
            if len(tok) == 5:
                any_weight = True
                try:
                    weights.append(Fraction(tok[4]))
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"line {lineno}: bad weight '{tok[4]}'")
            else:
                weights.append(Fraction(1))
        else:
            raise ParseError(f"line {lineno}: unknown record '{tok[0]}'")
    if n is None:
        raise ParseError("missing 'p' header")
    if declared_m != len(edges):
        raise ParseError(f"header declares {declared_m} edges, found {len(edges)}")
    return Graph(n, tuple(edges), tuple(weights) if any_weight else None)


def format_graph(g):
    """Inverse of parse_graph."""
    lines = [f"p {g.n} {g.m}"]
    for i, (u, v) in enumerate(g.edges, start=1):
        if g.weights is not None:
            w = g.weights[i - 1]
            lines.append(f"e {u} {v} w {w.numerator}/{w.denominator}")
        else:
            lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


# Gyrobifastigium skeleton: central 4-cycle, a top ridge and a bottom ridge
# rotated 90 degrees.
_J26_EDGES = (
    (1, 2), (2, 3), (3, 4), (1, 4),
    (1, 5), (2, 5), (3, 6), (4, 6), (5, 6),
    (2, 7), (3, 7), (4, 8), (1, 8), (7, 8),
)


def generate(name):
    """Deterministic labeled graph from a generator spec.

    Supported: path:k (k>=2), cycle:k (k>=3), complete:k (k>=1),
    cube:d (d>=1), petersen, j26.
    """
    base, _, arg = name.partition(":")
    if base == "path":
        k = _gen_arg(name, arg, 2)
        return Graph(k, tuple((i, i + 1) for i in range(1, k)))
    if base == "cycle":
        k = _gen_arg(name, arg, 3)
        edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
        return Graph(k, tuple(edges))
    if base == "complete":
        k = _gen_arg(name, arg, 1)
        edges = [(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)]
        return Graph(k, tuple(edges))
    if base == "cube":
        d = _gen_arg(name, arg, 1)
        edges = []
        for i in range(1 << d):
            for j in range(d):
                if not i & (1 << j):
                    edges.append((i + 1, (i | (1 << j)) + 1))
        return Graph(1 << d, tuple(edges))
    if name == "petersen":
        outer = [(i, i + 1) for i in range(1, 5)] + [(1, 5)]
        spokes = [(i, i + 5) for i in range(1, 6)]
        inner = [(6, 8), (7, 9), (8, 10), (6, 9), (7, 10)]
        return Graph(10, tuple(outer + spokes + inner))
    if name == "j26":
        return Graph(8, _J26_EDGES)
    raise GraphError(f"unknown generator '{name}'")


def _gen_arg(name, arg, minimum):
    try:
        k = int(arg)
    except ValueError:
        raise GraphError(f"generator '{name}' needs an integer argument")
    if k < minimum:
        raise GraphError(f"generator '{name}' needs argument >= {minimum}")
    return k


def line_distance(g, e, f):
    """Shortest-path distance between edges e and f in the line graph.

    Returns math.inf when e and f lie in different components.
    """
    g.endpoints(e)
    g.endpoints(f)
    if e == f:
        return 0
    adj = g.adjacency()
    dist = {e: 0}
    frontier = [e]
    while frontier:
        nxt = []
        for cur in frontier:
            u, v = g.endpoints(cur)
            for w in (u, v):
                for _, i in adj[w]:
                    if i not in dist:
                        dist[i] = dist[cur] + 1
                        if i == f:
                            return dist[i]
                        nxt.append(i)
        frontier = nxt
    return math.inf


def _components_within(g, S):
    """Connected components of G[S] as a list of sets."""
    S = set(S)
    adj = g.adjacency()
    comps = []
    unseen = set(S)
    while unseen:
        start = min(unseen)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u, _ in adj[v]:
                if u in S and u not in comp:
                    comp.add(u)
                    stack.append(u)
        comps.append(comp)
        unseen -= comp
    return comps


def is_connected_induced(g, S):
    """True iff G[S] is connected; empty and singleton sets count as connected."""
    S = set(S)
    for v in S:
        if not (1 <= v <= g.n):
            raise GraphError(f"vertex {v} out of range")
    if len(S) <= 1:
        return True
    return len(_components_within(g, S)) == 1


def is_biconnected_induced(g, S):
    """True iff G[S] is connected with no articulation vertex.

    Raises DegenerateInput for |S| < 3; the predicate is only meaningful
    on larger vertex sets.
    """
    S = set(S)
    if len(S) < 3:
        raise DegenerateInput(f"biconnectivity needs |S| >= 3, got {len(S)}")
    if not is_connected_induced(g, S):
        return False
    for v in S:
        if len(_components_within(g, S - {v})) > 1:
            return False
    return True


def is_separator(g, a, b, C):
    """True iff removing C disconnects a from b.

    Preconditions (violations raise distinct messages): a != b, neither in C,
    and {a,b} not an edge (an adjacent pair is not separable).
    """
    C = set(C)
    if a == b:
        raise GraphError("separator endpoints must differ")
    if a in C or b in C:
        raise GraphError("separator must not contain its endpoints")
    if g.edge_id(a, b) is not None:
        raise GraphError(f"vertices {a} and {b} are adjacent, not separable")
    remaining = set(range(1, g.n + 1)) - C
    for comp in _components_within(g, remaining):
        if a in comp:
            return b not in comp
    raise GraphError(f"vertex {a} out of range")
