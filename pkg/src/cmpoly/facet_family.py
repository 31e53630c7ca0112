"""The two-positive-coefficient inequality family over disconnected edge pairs.

For a disconnected matching {e1,e2} and the set L of edges at line-graph
distance exactly 2 from both, the row  x_e1 + x_e2 - sum_{f in L} x_f <= 1
is valid whenever no connected matching contains both e1 and e2 while
avoiding the edges of L.  It is facet-defining when additionally L is
nonempty, L induces a clique in the line graph, and each triple
{e1, e2, f} induces a 2-connected subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph_core import GraphError, is_biconnected_induced, is_connected_induced, line_distance
from .inequality import Inequality
from .matchings import covered_vertices, exists_cm_superset


@dataclass(frozen=True)
class FamilyCertificate:
    pair: tuple
    lam: tuple
    disconnected_pair: bool
    valid: bool
    path_precheck: bool
    facet_certified: bool
    empty_lambda: bool


def lambda_set(g, e1, e2):
    """Edge ids at line-graph distance exactly 2 from both e1 and e2."""
    if e1 == e2:
        raise GraphError("lambda set needs two distinct edges")
    return tuple(sorted(
        f for f in range(1, g.m + 1)
        if line_distance(g, f, e1) == 2 and line_distance(g, f, e2) == 2))


def is_disconnected_pair(g, e1, e2):
    """True iff e1,e2 are vertex-disjoint and their four endpoints induce a
    disconnected subgraph."""
    if e1 == e2:
        raise GraphError("pair needs two distinct edges")
    a = set(g.endpoints(e1))
    b = set(g.endpoints(e2))
    if a & b:
        return False
    return not is_connected_induced(g, a | b)


def family_inequality(g, e1, e2):
    """Row +1 on e1,e2, -1 on each lambda edge, rhs 1."""
    if not is_disconnected_pair(g, e1, e2):
        raise GraphError(f"edges {e1},{e2} are not a disconnected pair")
    lam = lambda_set(g, e1, e2)
    coeffs = [Fraction(0)] * g.m
    coeffs[e1 - 1] = Fraction(1)
    coeffs[e2 - 1] = Fraction(1)
    for f in lam:
        coeffs[f - 1] = Fraction(-1)
    lo, hi = min(e1, e2), max(e1, e2)
    prov = f"pair=({lo},{hi}) lambda={{{','.join(map(str, lam))}}}"
    return Inequality(coeffs, Fraction(1), tag="family", provenance=prov)


def check_validity_hypothesis(g, e1, e2):
    """True iff no connected matching of g contains both e1 and e2 while
    avoiding every lambda edge.

    The lambda edges are excluded only as matching edges; they still count
    toward connectivity of the covered set.  Judging connectivity with the
    lambda edges deleted would be too weak: a lambda edge can connect the
    covered vertices without being picked, and the resulting incidence
    vector would violate the row.  This check is exact -- the row is valid
    if and only if it returns true.
    """
    if not is_disconnected_pair(g, e1, e2):
        raise GraphError(f"edges {e1},{e2} are not a disconnected pair")
    lam = lambda_set(g, e1, e2)
    return not exists_cm_superset(g, [e1, e2], forbidden=lam)


def path_precheck(g, e1, e2):
    """Fast filter: e1 and e2 lie in different components of G minus the
    lambda edges.  Usually implies the validity hypothesis, but not always:
    a matching avoiding the lambda edges can still be connected through one
    of them, so a positive precheck is no substitute for the exact test."""
    lam = lambda_set(g, e1, e2)
    h, idmap = g.without_edges(lam)
    return line_distance(h, idmap[e1], idmap[e2]) == float("inf")


def check_facet_hypothesis(g, e1, e2, L):
    """Facet conditions: L nonempty, L a clique in the line graph, and each
    triple {e1,e2,f} inducing a 2-connected subgraph."""
    L = tuple(sorted(L))
    if L != lambda_set(g, e1, e2):
        raise GraphError("L must equal the lambda set of the pair")
    if not L:
        return False
    for i, f in enumerate(L):
        for f2 in L[i + 1:]:
            if not set(g.endpoints(f)) & set(g.endpoints(f2)):
                return False
    pair_cover = covered_vertices(g, [e1, e2])
    for f in L:
        S = pair_cover | set(g.endpoints(f))
        if not is_biconnected_induced(g, S):
            return False
    return True


def generate_family(g):
    """One (Inequality, FamilyCertificate) per unordered disconnected pair that
    passes the validity hypothesis, ordered by (min id, max id)."""
    out = []
    for e1 in range(1, g.m + 1):
        for e2 in range(e1 + 1, g.m + 1):
            if not is_disconnected_pair(g, e1, e2):
                continue
            if not check_validity_hypothesis(g, e1, e2):
                continue
            lam = lambda_set(g, e1, e2)
            cert = FamilyCertificate(
                pair=(e1, e2),
                lam=lam,
                disconnected_pair=True,
                valid=True,
                path_precheck=path_precheck(g, e1, e2),
                facet_certified=check_facet_hypothesis(g, e1, e2, lam),
                empty_lambda=not lam,
            )
            out.append((family_inequality(g, e1, e2), cert))
    return out
