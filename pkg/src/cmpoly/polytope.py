"""V/H pipeline: dimension, exact facet enumeration by double description,
facet verification and classification, and interop export."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .facet_family import is_disconnected_pair, lambda_set
from .graph_core import GraphError
from .inequality import Inequality
from .matchings import DEFAULT_ENUM_LIMIT, covered_vertices, enumerate_connected_matchings
from .rational_la import affine_dimension


@dataclass(frozen=True)
class VRep:
    m: int
    points: tuple

    def __post_init__(self):
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        if len(set(pts)) != len(pts):
            raise ValueError("V-description points must be distinct")
        for p in pts:
            if len(p) != self.m:
                raise ValueError("point dimension mismatch")
        object.__setattr__(self, "points", pts)


@dataclass(frozen=True)
class HRep:
    facets: tuple


@dataclass(frozen=True)
class FacetClass:
    """Exclusive facet label: nonnegativity(e) | degree(v) | blossom(H) |
    family(pair, lambda) | other."""

    kind: str
    data: tuple = ()


def vrep(g, limit=DEFAULT_ENUM_LIMIT):
    """V-description of the connected matching polytope of g."""
    return VRep(g.m, tuple(enumerate_connected_matchings(g, limit)))


def polytope_dimension(V):
    return affine_dimension(V.points)


def _primitive(vec):
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g > 1:
        return tuple(v // g for v in vec)
    return tuple(vec)


def _integer_row(fracs):
    scale = 1
    for x in fracs:
        d = x.denominator
        scale = scale // gcd(scale, d) * d
    return _primitive([int(x * scale) for x in fracs])


def hrep(V):
    """Minimal facet description of a full-dimensional polytope given by its
    vertices, via the double description method on the polar of the
    homogenization cone.

    Rays of the polar cone {y : y.(1,p) >= 0 for all points p} are exactly the
    facet normals; the run starts from a simplicial subcone and inserts the
    remaining point constraints in input order.  The input order follows the
    lexicographic matching enumeration, which keeps intermediate ray counts
    small; aggressive reorderings (for example most-violated-first) were
    observed to inflate intermediates by two orders of magnitude on dense
    inputs.  Adjacency of rays is decided by the tight-set containment test.
    """
    m = V.m
    if polytope_dimension(V) != m:
        raise GraphError("hrep requires a full-dimensional V-description")
    cons = [_integer_row([Fraction(1)] + list(p)) for p in V.points]
    dim = m + 1

    basis_idx = _greedy_basis(cons, dim)
    rays = _initial_rays([cons[i] for i in basis_idx])
    done = [cons[i] for i in basis_idx]
    tight = [(1 << dim) - 1 - (1 << i) for i in range(dim)]

    rest = [i for i in range(len(cons)) if i not in set(basis_idx)]

    for ci in rest:
        a = cons[ci]
        s = [_dot(a, r) for r in rays]
        if all(v >= 0 for v in s):
            tight = [t | ((1 << len(done)) if v == 0 else 0)
                     for t, v in zip(tight, s)]
            done.append(a)
            continue
        keep_r, keep_t = [], []
        pos, neg = [], []
        for k, v in enumerate(s):
            if v >= 0:
                keep_r.append(rays[k])
                keep_t.append(tight[k] | ((1 << len(done)) if v == 0 else 0))
            if v > 0:
                pos.append(k)
            elif v < 0:
                neg.append(k)
        new_rays = []
        for kp in pos:
            for kn in neg:
                common = tight[kp] & tight[kn]
                if bin(common).count("1") < m - 1:
                    continue
                if any(k != kp and k != kn and common & tight[k] == common
                       for k in range(len(rays))):
                    continue
                vec = _primitive([s[kp] * rays[kn][j] - s[kn] * rays[kp][j]
                                  for j in range(dim)])
                new_rays.append(vec)
        done.append(a)
        for vec in new_rays:
            mask = 0
            for bit, row in enumerate(done):
                if _dot(row, vec) == 0:
                    mask |= 1 << bit
            keep_r.append(vec)
            keep_t.append(mask)
        rays, tight = keep_r, keep_t

    facets = []
    for y in rays:
        coeffs = [-v for v in y[1:]]
        facets.append(Inequality(coeffs, Fraction(y[0])))
    facets.sort(key=lambda q: (q.coeffs, q.rhs))
    return HRep(tuple(facets))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _greedy_basis(cons, dim):
    """Indices of dim linearly independent constraint rows, first-fit."""
    echelon = []
    chosen = []
    for i, row in enumerate(cons):
        v = [Fraction(x) for x in row]
        for piv_col, piv_row in echelon:
            if v[piv_col] != 0:
                f = v[piv_col]
                v = [x - f * y for x, y in zip(v, piv_row)]
        lead = next((j for j, x in enumerate(v) if x != 0), None)
        if lead is None:
            continue
        inv = v[lead]
        v = [x / inv for x in v]
        echelon.append((lead, v))
        chosen.append(i)
        if len(chosen) == dim:
            return chosen
    raise GraphError("constraint rows do not span; polytope not full-dimensional")


def _initial_rays(B):
    """Extreme rays of the simplicial cone {y : B y >= 0}: columns of B^-1."""
    dim = len(B)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(dim)]
         for i, row in enumerate(B)]
    for c in range(dim):
        piv = next(i for i in range(c, dim) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = a[c][c]
        a[c] = [x / inv for x in a[c]]
        for i in range(dim):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    cols = []
    for j in range(dim):
        cols.append(_integer_row([a[i][dim + j] for i in range(dim)]))
    return cols


def verify_valid(q, V):
    """Points of V violating q (empty list means q is valid)."""
    return [p for p in V.points if q.evaluate(p) > q.rhs]


def face_dimension(q, V):
    """Affine dimension of the tight vertex set; -1 for an empty face."""
    if verify_valid(q, V):
        raise GraphError("inequality is not valid on the V-description")
    tight = [p for p in V.points if q.evaluate(p) == q.rhs]
    if not tight:
        return -1
    return affine_dimension(tight)


def is_facet(q, V):
    return face_dimension(q, V) == polytope_dimension(V) - 1


def classify(q, g):
    """Exclusive classification of a canonical facet row against its graph.

    Precedence: nonnegativity, degree, blossom, family, other.
    """
    ints, rhs = q.canonical()
    support = [i + 1 for i, c in enumerate(ints) if c != 0]

    if rhs == 0 and len(support) == 1 and ints[support[0] - 1] == -1:
        return FacetClass("nonnegativity", (support[0],))

    if rhs == 1 and all(c in (0, 1) for c in ints):
        sup = set(support)
        for v in range(1, g.n + 1):
            if sup == set(g.incident_edges(v)):
                return FacetClass("degree", (v,))

    if all(c in (0, 1) for c in ints):
        H = tuple(sorted(covered_vertices(g, support)))
        if len(H) >= 3 and len(H) % 2 == 1 and rhs == (len(H) - 1) // 2:
            if set(support) == _induced_edges(g, H):
                return FacetClass("blossom", (H,))

    if rhs == 1 and all(c in (-1, 0, 1) for c in ints):
        plus = [i + 1 for i, c in enumerate(ints) if c == 1]
        minus = tuple(sorted(i + 1 for i, c in enumerate(ints) if c == -1))
        if len(plus) == 2 and is_disconnected_pair(g, plus[0], plus[1]):
            if minus == lambda_set(g, plus[0], plus[1]):
                return FacetClass("family", (tuple(plus), minus))

    return FacetClass("other")


def _induced_edges(g, H):
    Hs = set(H)
    return {i for i, (u, v) in enumerate(g.edges, start=1) if u in Hs and v in Hs}


def class_histogram(H, g):
    """Count facets by class kind; blossom rows split by handle size."""
    counts = {}
    for q in H.facets:
        fc = classify(q, g)
        key = fc.kind
        if fc.kind == "blossom":
            key = f"blossom[{len(fc.data[0])}]"
        counts[key] = counts.get(key, 0) + 1
    return counts


def export_vrep_interop(V):
    """POINTS-section text with a homogenizing leading 1 per row."""
    if not V.points:
        raise ValueError("empty V-description")
    lines = ["POINTS"]
    for p in V.points:
        row = "1"
        if p:
            row += " " + " ".join(str(x) for x in p)
        lines.append(row)
    return "\n".join(lines) + "\n"
