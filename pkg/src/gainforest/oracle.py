"""Finite-field ground truth for region counts of gainic arrangements.

The complement of the arrangement x_j - x_i = g over (Z/q)^n is counted for
several primes q and the characteristic polynomial is interpolated exactly.
Nothing here touches NBC sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .gaingraph import GainGraph


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def admissible_bound(g: GainGraph) -> int:
    """Primes must exceed this so distinct integer gains stay distinct mod q."""
    return (g.n - 1) * (g.max_abs_gain() + 1)


def admissible_primes(g: GainGraph, count: int, skip: int = 0) -> list[int]:
    out = []
    q = admissible_bound(g) + 1
    while len(out) < count + skip:
        if _is_prime(q):
            out.append(q)
        q += 1
    return out[skip:]


def count_points_mod_q(g: GainGraph, q: int) -> int:
    """#{x in (Z/q)^n : x_j - x_i != g (mod q) for every edge g(i,j)}."""
    if not _is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q <= admissible_bound(g):
        raise ValueError(f"q={q} is too small; need q > {admissible_bound(g)}")
    vs = sorted(g.vertices)
    n = len(vs)
    pos = {v: x for x, v in enumerate(vs)}
    # forbidden[j] lists (i, gain) with x_j != x_i + gain, for i < j in vertex order
    forbidden: list[list[tuple[int, int]]] = [[] for _ in vs]
    for e in g.edges:
        i, j = pos[e.tail], pos[e.head]
        if i < j:
            forbidden[j].append((i, e.gain))
        else:
            forbidden[i].append((j, -e.gain))
    if n == 1:
        return q

    xs = [0] * n

    def count_from(j: int) -> int:
        bad = {(xs[i] + gain) % q for i, gain in forbidden[j]}
        if j == n - 1:
            return q - len(bad)
        total = 0
        for val in range(q):
            if val in bad:
                continue
            xs[j] = val
            total += count_from(j + 1)
        return total

    # translation invariance: fix the first coordinate at 0
    return q * count_from(1)


@dataclass(frozen=True)
class CharPoly:
    """Integer coefficients, constant term first."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def descending(self) -> list[int]:
        return list(reversed(self.coefficients))

    def __str__(self) -> str:
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coefficients[d]
            if c == 0:
                continue
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            mag = abs(c)
            body = mono if mag == 1 and d > 0 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])


def lagrange_coefficients(points: Sequence[tuple[int, int]]) -> list[Fraction]:
    """Exact coefficients (constant first) of the polynomial through ``points``."""
    m = len(points)
    out = [Fraction(0)] * m
    for k, (xk, yk) in enumerate(points):
        basis = [Fraction(1)]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == k:
                continue
            # multiply basis by (x - xj)
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xk - xj
        for d, c in enumerate(basis):
            out[d] += c * yk / denom
    return out


def char_poly(g: GainGraph, primes: Sequence[int] | None = None) -> CharPoly:
    ps = list(primes) if primes is not None else admissible_primes(g, g.n + 1)
    if len(ps) != g.n + 1:
        raise ValueError(f"need {g.n + 1} primes, got {len(ps)}")
    coeffs = lagrange_coefficients([(q, count_points_mod_q(g, q)) for q in ps])
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError(f"non-integral interpolation {coeffs}")
    poly = CharPoly(tuple(int(c) for c in coeffs))
    if poly.coefficients[-1] != 1:
        raise ValueError(f"interpolated polynomial is not monic of degree {g.n}: {poly}")
    return poly


def validate_char_poly(g: GainGraph, poly: CharPoly | None = None, held_out: int = 2) -> bool:
    """Check the polynomial against point counts at primes not used to fit it."""
    poly = poly or char_poly(g)
    return all(poly(q) == count_points_mod_q(g, q) for q in admissible_primes(g, held_out, skip=g.n + 1))


def region_count(g: GainGraph, poly: CharPoly | None = None) -> int:
    poly = poly or char_poly(g)
    return (-1) ** g.n * poly(-1)


def linial_formula(n: int) -> Fraction:
    """The closed form (1 / (n 2^(n-1))) * sum_k C(n,k) k^(n-1), evaluated as written."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(sum(comb(n, k) * k ** (n - 1) for k in range(1, n + 1)), n * 2 ** (n - 1))

