"""Shared random generators and independent oracles for the test suite.

The oracles here deliberately avoid the library's own code paths: the
series inverse uses Newton iteration on plain coefficient lists, Stirling
numbers come from brute-force set-partition enumeration, and the classical
expansion coefficients come straight from derivative/integral formulas.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial

from degbern.core import LambdaPoly, XPoly
from degbern.umbral import integral_I

BOUND = 10**6


def random_fraction(rng: random.Random, bound: int = BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_lambda_poly(rng: random.Random, max_lam_deg: int = 3, bound: int = BOUND) -> LambdaPoly:
    terms = {}
    for e in range(rng.randint(0, max_lam_deg) + 1):
        if rng.random() < 0.7:
            terms[e] = random_fraction(rng, bound)
    return LambdaPoly(terms)


def random_xpoly(
    rng: random.Random,
    max_degree: int = 10,
    lam_bearing: bool = True,
    bound: int = BOUND,
) -> XPoly:
    degree = rng.randint(0, max_degree)
    coeffs = []
    for _ in range(degree + 1):
        if lam_bearing:
            coeffs.append(random_lambda_poly(rng, 3, bound))
        else:
            coeffs.append(LambdaPoly.const(random_fraction(rng, bound)))
    p = XPoly(coeffs)
    return p if not p.is_zero else XPoly.monomial(degree)


def corpus(count: int = 200, seed: int = 20260810, max_degree: int = 10) -> list[XPoly]:
    """Deterministic mixed corpus: odd indices carry l, even ones are l-free."""
    rng = random.Random(seed)
    return [random_xpoly(rng, max_degree, lam_bearing=(i % 2 == 1)) for i in range(count)]


# -- independent oracles -------------------------------------------------------


def list_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai:
            for j in range(order + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
    return out


def newton_inverse(coeffs: list[Fraction], order: int) -> list[Fraction]:
    """Series inverse by Newton iteration g -> g(2 - f g) on plain lists."""
    f = [Fraction(c) for c in coeffs] + [Fraction(0)] * (order + 1 - len(coeffs))
    g = [1 / f[0]] + [Fraction(0)] * order
    precision = 1
    while precision <= order:
        precision *= 2
        fg = list_mul(f, g, order)
        two_minus = [-c for c in fg]
        two_minus[0] += 2
        g = list_mul(g, two_minus, order)
    return g


def partition_count(n: int, k: int) -> int:
    """Number of set partitions of {0..n-1} into exactly k nonempty blocks."""
    if n == 0:
        return 1 if k == 0 else 0
    count = 0
    blocks: list[list[int]] = []

    def rec(i: int) -> None:
        nonlocal count
        if i == n:
            count += len(blocks) == k
            return
        for b in blocks:
            b.append(i)
            rec(i + 1)
            b.pop()
        if len(blocks) < k:
            blocks.append([i])
            rec(i + 1)
            blocks.pop()

    rec(0)
    return count


def classical_coeffs_order1(p: XPoly) -> list[Fraction]:
    """a_0 = integral_0^1 p, a_k = (p^(k-1)(1) - p^(k-1)(0))/k! for l-free p."""
    anti = p.antiderivative()
    out = [(anti.eval_x(1) - anti.eval_x(0)).as_rational()]
    d = p
    for k in range(1, p.degree + 1):
        out.append((d.eval_x(1) - d.eval_x(0)).as_rational() / factorial(k))
        d = d.derivative()
    return out


def classical_coeffs_higher(p: XPoly, r: int) -> list[Fraction]:
    """Two-case classical coefficients for the order-r Bernoulli basis."""
    out = []
    for k in range(p.degree + 1):
        if k < r:
            w = p
            for _ in range(r - k):
                w = integral_I(w)
            acc = Fraction(0)
            for j in range(k + 1):
                acc += Fraction((-1) ** (k - j) * comb(k, j)) * w.eval_x(j).as_rational()
            out.append(acc / factorial(k))
        else:
            d = p.derivative(k - r)
            acc = Fraction(0)
            for j in range(r + 1):
                acc += Fraction((-1) ** (r - j) * comb(r, j)) * d.eval_x(j).as_rational()
            out.append(acc / factorial(k))
    return out
