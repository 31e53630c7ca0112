"""Exact rational linear algebra: rank, affine dimension, rref.

Rank uses fraction-free (Bareiss) elimination over integer-scaled rows so
intermediate entries stay integral; rref works directly in Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _integer_rows(rows):
    """Scale each row by the lcm of its denominators; preserves rank."""
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        scale = 1
        for x in fr:
            d = x.denominator
            scale = scale // gcd(scale, d) * d
        out.append([int(x * scale) for x in fr])
    return out


def rank(rows):
    """Exact rank over the rationals via Bareiss elimination."""
    a = _integer_rows(rows)
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == nrows:
            break
    return r


def affine_dimension(points):
    """Dimension of the affine hull of a nonempty point set."""
    pts = [list(map(Fraction, p)) for p in points]
    if not pts:
        raise ValueError("affine dimension of an empty point set")
    p0 = pts[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in pts[1:]]
    if not diffs:
        return 0
    return rank(diffs)


def rref(rows):
    """Reduced row-echelon form; returns (matrix, pivot column indices)."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return [], []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots
