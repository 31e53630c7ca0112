"""Exact-rational inequality rows (sense <=) with a canonical integer form."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class Inequality:
    """A row `coeffs . x <= rhs` with a classification tag and provenance note."""

    coeffs: tuple
    rhs: Fraction
    tag: str = ""
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    @property
    def m(self):
        return len(self.coeffs)

    def evaluate(self, x):
        return sum((c * Fraction(v) for c, v in zip(self.coeffs, x)), Fraction(0))

    def is_satisfied(self, x):
        return self.evaluate(x) <= self.rhs

    def canonical(self):
        """Integer form (coeff tuple, rhs) scaled so the overall gcd is 1."""
        scale = 1
        for c in list(self.coeffs) + [self.rhs]:
            d = c.denominator
            scale = scale // gcd(scale, d) * d
        ints = [int(c * scale) for c in self.coeffs]
        r = int(self.rhs * scale)
        g = 0
        for v in ints + [r]:
            g = gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
            r //= g
        return tuple(ints), r

    def canonicalized(self):
        ints, r = self.canonical()
        return Inequality(ints, r, self.tag, self.provenance)

    def format_line(self):
        """`<c1> ... <cm> <= <rhs>` in canonical form, plus provenance comment."""
        ints, r = self.canonical()
        line = " ".join(str(v) for v in ints) + f" <= {r}"
        comment = []
        if self.tag:
            comment.append(f"tag={self.tag}")
        if self.provenance:
            comment.append(self.provenance)
        if comment:
            line += "  # " + " ".join(comment)
        return line


def parse_inequality_line(line):
    """Parse one `<c1> ... <cm> <= <rhs>` row; comments after # are kept as tag."""
    body, _, comment = line.partition("#")
    body = body.strip()
    mt = re.match(r"^(.*)<=\s*(-?\d+(?:/\d+)?)\s*$", body)
    if not mt:
        raise ValueError(f"bad inequality line: {line!r}")
    coeffs = [Fraction(t) for t in mt.group(1).split()]
    rhs = Fraction(mt.group(2))
    tag = ""
    tm = re.search(r"tag=(\S+)", comment)
    if tm:
        tag = tm.group(1)
    return Inequality(coeffs, rhs, tag=tag, provenance=comment.strip())


def parse_hrep_file(text):
    """H-description file: `h <m> <count>` header then inequality rows."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("h "):
        raise ValueError("missing 'h <m> <count>' header")
    _, m_s, k_s = lines[0].split()
    m, k = int(m_s), int(k_s)
    rows = [parse_inequality_line(ln) for ln in lines[1:]]
    if len(rows) != k:
        raise ValueError(f"header declares {k} rows, found {len(rows)}")
    for q in rows:
        if q.m != m:
            raise ValueError(f"row has {q.m} coefficients, expected {m}")
    return rows


def format_hrep_file(rows, m):
    lines = [f"h {m} {len(rows)}"]
    lines.extend(q.format_line() for q in rows)
    return "\n".join(lines) + "\n"
