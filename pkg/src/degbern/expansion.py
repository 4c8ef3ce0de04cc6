"""Expansion of polynomials in the degenerate Bernoulli bases.

Any p(x) of degree n has a unique exact expansion
p(x) = sum_{k=0}^{n} a_k beta_k(x) in the degenerate Bernoulli basis, and
more generally in the order-r basis. With f(t) = (e^{lt}-1)/l and
g(t) = l(e^t-1)/(e^{lt}-1), the order-1 coefficients are computable by
four equivalent routes for k >= 1

    functional     a_k = <f^{k-1} | p(x+1)-p(x)> / k!
    delta_lambda   a_k = D_l^{k-1} (p(x+1)-p(x)) |_{x=0} / (k! l^{k-1})
    binomial_sum   a_k = sum_j C(k-1,j)(-1)^{k-1-j}(p(1+jl)-p(jl)) / (k! l^{k-1})
    stirling_sum   a_k = (1/k) sum_l S2(l,k-1) l^{l-k+1}/l! (p^(l)(1)-p^(l)(0))

and three for the constant coefficient

    umbral_integral      a_0 = integral_0^1 of p with x^i replaced by l^i B_i(u/l)
    operator_functional  a_0 = <g(t) | p(x)>
    residual             a_0 = p(0) - sum_{k>=1} a_k beta_k(0)

For order r, coefficients with k < r come from an alternating sum over
g(t)^{r-k} p(j) (computed either through repeated unit-interval integrals
of an umbral composition, route ``umbral_integral_op``, or through a
Stirling-weighted derivative sum, route ``stirling_op``); coefficients
with k >= r come from an alternating sum over f(t)^{k-r} p(j) (either a
forward difference with symbolic step divided exactly by l^{k-r}, route
``delta_lambda``, or a Stirling sum, route ``stirling_sum``).

All divisions by powers of l are exact divisions; a failure raises
ExactDivisionError and signals a formula-implementation bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .core import LAMBDA, LambdaPoly, XPoly
from .families import deg_bernoulli, deg_bernoulli_order, scaled_bernoulli, stirling2
from .umbral import (
    delta_op,
    functional,
    integral_01,
    integral_I,
    scaled_bernoulli_op,
    umbral_compose,
    unit_integral_op,
)

__all__ = [
    "A0_ROUTES",
    "AK_ROUTES",
    "BasisExpansion",
    "F_ROUTES",
    "G_ROUTES",
    "RouteMismatchError",
    "classical_limit",
    "crosscheck",
    "expand",
    "expand_higher",
    "expand_order1",
    "reconstruct",
]

AK_ROUTES = ("binomial_sum", "delta_lambda", "functional", "stirling_sum")
A0_ROUTES = ("umbral_integral", "operator_functional", "residual")
G_ROUTES = ("umbral_integral_op", "stirling_op")
F_ROUTES = ("delta_lambda", "stirling_sum")


class RouteMismatchError(Exception):
    """Two supposedly equivalent coefficient routes disagreed."""

    def __init__(self, k: int, route_a: str, value_a, route_b: str, value_b):
        self.k = k
        self.route_a = route_a
        self.value_a = value_a
        self.route_b = route_b
        self.value_b = value_b
        super().__init__(
            f"coefficient a_{k} differs between routes: "
            f"{route_a} -> {value_a}, {route_b} -> {value_b}"
        )


@dataclass(frozen=True)
class BasisExpansion:
    """p(x) = sum_k coeffs[k] * beta_k^(order)(x), with per-coefficient provenance."""

    order: int
    degree: int
    coeffs: tuple[LambdaPoly, ...]
    routes: tuple[str, ...]
    source: XPoly | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient count does not match degree")

    def coeff(self, k: int) -> LambdaPoly:
        if 0 <= k <= self.degree:
            return self.coeffs[k]
        return LambdaPoly.zero()


def _validated(p: XPoly) -> int:
    if not isinstance(p, XPoly):
        raise TypeError("expected an XPoly")
    if p.is_zero:
        raise ValueError("cannot expand the zero polynomial")
    return p.degree


def _derivative_chain(p: XPoly) -> list[XPoly]:
    out = [p]
    for _ in range(p.degree):
        out.append(out[-1].derivative())
    return out


def _ak_binomial_sum(p: XPoly, n: int) -> list[LambdaPoly]:
    # h(jl) values shared across k; one exact division per coefficient.
    hvals = []
    for j in range(n):
        point = LambdaPoly({0: 1, 1: j}) if j else LambdaPoly.one()
        hvals.append(p.eval_x(point) - p.eval_x(LAMBDA * j))
    aks = []
    for k in range(1, n + 1):
        acc = LambdaPoly.zero()
        for j in range(k):
            acc = acc + hvals[j] * Fraction((-1) ** (k - 1 - j) * comb(k - 1, j))
        aks.append(acc.divexact(k - 1) / factorial(k))
    return aks


def _ak_delta_lambda(h: XPoly, n: int) -> list[LambdaPoly]:
    aks = []
    d = h
    for k in range(1, n + 1):
        aks.append(d.eval_x(0).divexact(k - 1) / factorial(k))
        if k < n:
            d = d.shift(LAMBDA) - d
    return aks


def _ak_functional(h: XPoly, n: int) -> list[LambdaPoly]:
    f = delta_op(LAMBDA)
    power = f**0
    aks = []
    for k in range(1, n + 1):
        aks.append(functional(power, h) / factorial(k))
        if k < n:
            power = power * f
    return aks


def _ak_stirling_sum(p: XPoly, n: int) -> list[LambdaPoly]:
    derivs = _derivative_chain(p)
    jumps = [d.eval_x(1) - d.eval_x(0) for d in derivs]
    aks = []
    for k in range(1, n + 1):
        acc = LambdaPoly.zero()
        for l in range(k - 1, n + 1):
            s2 = stirling2(l, k - 1)
            if s2:
                weight = LambdaPoly.monomial(l - k + 1, s2 / factorial(l))
                acc = acc + jumps[l] * weight
        aks.append(acc / k)
    return aks


def _a0_umbral_integral(p: XPoly) -> LambdaPoly:
    composed = umbral_compose(p, lambda i: scaled_bernoulli(i, 1))
    return integral_01(composed)


def _a0_operator_functional(p: XPoly) -> LambdaPoly:
    g = unit_integral_op() * scaled_bernoulli_op(LAMBDA)
    return functional(g, p)


def _a0_residual(p: XPoly, aks: list[LambdaPoly]) -> LambdaPoly:
    a0 = p.eval_x(0)
    for k, ak in enumerate(aks, start=1):
        a0 = a0 - ak * deg_bernoulli(k).eval_x(0)
    return a0


def expand_order1(
    p: XPoly,
    ak_route: str = "binomial_sum",
    a0_route: str = "umbral_integral",
) -> BasisExpansion:
    """Expand p in the degenerate Bernoulli basis (order 1)."""
    n = _validated(p)
    if ak_route not in AK_ROUTES:
        raise ValueError(f"unknown ak_route {ak_route!r}; options: {AK_ROUTES}")
    if a0_route not in A0_ROUTES:
        raise ValueError(f"unknown a0_route {a0_route!r}; options: {A0_ROUTES}")

    if ak_route == "binomial_sum":
        aks = _ak_binomial_sum(p, n)
    elif ak_route == "delta_lambda":
        aks = _ak_delta_lambda(p.shift(1) - p, n)
    elif ak_route == "functional":
        aks = _ak_functional(p.shift(1) - p, n)
    else:
        aks = _ak_stirling_sum(p, n)

    if a0_route == "umbral_integral":
        a0 = _a0_umbral_integral(p)
    elif a0_route == "operator_functional":
        a0 = _a0_operator_functional(p)
    else:
        a0 = _a0_residual(p, aks)

    return BasisExpansion(
        order=1,
        degree=n,
        coeffs=(a0, *aks),
        routes=(a0_route, *(ak_route,) * n),
        source=p,
    )


def _g_branch_poly(p: XPoly, m: int, route: str, derivs_len: int) -> XPoly:
    """g(t)^m p as a polynomial (m >= 1), by either realization."""
    composed = umbral_compose(p, lambda i: scaled_bernoulli(i, m))
    if route == "umbral_integral_op":
        w = composed
        for _ in range(m):
            w = integral_I(w)
        return w
    # stirling_op: ((e^t-1)/t)^m = sum_l S2(l+m,m) m!/(l+m)! t^l acting on the composition
    w = XPoly.zero()
    d = composed
    for l in range(derivs_len):
        coeff = stirling2(l + m, m) * Fraction(factorial(m), factorial(l + m))
        if coeff:
            w = w + d * coeff
        if l + 1 < derivs_len:
            d = d.derivative()
    return w


def expand_higher(
    p: XPoly,
    r: int,
    g_route: str = "umbral_integral_op",
    f_route: str = "delta_lambda",
) -> BasisExpansion:
    """Expand p in the order-r degenerate Bernoulli basis (r >= 1).

    Coefficients with k < r use the g-branch, coefficients with k >= r the
    f-branch; for r = 1 the result coincides with expand_order1 on every
    coefficient.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"order r must be a positive integer, got {r!r}")
    if g_route not in G_ROUTES:
        raise ValueError(f"unknown g_route {g_route!r}; options: {G_ROUTES}")
    if f_route not in F_ROUTES:
        raise ValueError(f"unknown f_route {f_route!r}; options: {F_ROUTES}")
    n = _validated(p)

    coeffs: list[LambdaPoly] = []
    routes: list[str] = []
    if f_route == "stirling_sum":
        derivs = _derivative_chain(p)
    diff = p  # running forward difference D_l^{k-r} p for the delta_lambda route

    for k in range(n + 1):
        if k < r:
            m = r - k
            w = _g_branch_poly(p, m, g_route, n + 1)
            acc = LambdaPoly.zero()
            for j in range(k + 1):
                acc = acc + w.eval_x(j) * Fraction((-1) ** (k - j) * comb(k, j))
            coeffs.append(acc / factorial(k))
            routes.append(g_route)
            continue
        m = k - r
        if f_route == "delta_lambda":
            if m > 0:
                diff = diff.shift(LAMBDA) - diff
            w = diff.divexact(m)
            acc = LambdaPoly.zero()
            for j in range(r + 1):
                acc = acc + w.eval_x(j) * Fraction((-1) ** (r - j) * comb(r, j))
            coeffs.append(acc / factorial(k))
        else:
            acc = LambdaPoly.zero()
            for j in range(r + 1):
                sign = Fraction((-1) ** (r - j) * comb(r, j))
                inner = LambdaPoly.zero()
                for l in range(m, n + 1):
                    s2 = stirling2(l, m)
                    if s2:
                        weight = LambdaPoly.monomial(l - m, s2 * factorial(m) / factorial(l))
                        inner = inner + derivs[l].eval_x(j) * weight
                acc = acc + inner * sign
            coeffs.append(acc / factorial(k))
        routes.append(f_route)

    return BasisExpansion(order=r, degree=n, coeffs=tuple(coeffs), routes=tuple(routes), source=p)


def expand(p: XPoly, r: int = 1, **route_options) -> BasisExpansion:
    """Expand p in the order-r basis with each route's default choices."""
    if r == 1 and not (set(route_options) & {"g_route", "f_route"}):
        return expand_order1(p, **route_options)
    return expand_higher(p, r, **route_options)


def reconstruct(e: BasisExpansion) -> XPoly:
    """Rebuild the polynomial sum_k a_k beta_k^(order)(x)."""
    out = XPoly.zero()
    for k, ak in enumerate(e.coeffs):
        if not ak.is_zero:
            out = out + deg_bernoulli_order(k, e.order) * ak
    return out


def classical_limit(e: BasisExpansion) -> list[Fraction]:
    """Coefficients at l = 0; defined only for expansions of l-free polynomials."""
    if e.source is None:
        raise ValueError("expansion carries no source polynomial")
    if e.source.has_lambda:
        raise ValueError("classical limit requires an l-free source polynomial")
    return [c.at_zero() for c in e.coeffs]


def _all_expansions(p: XPoly, r: int) -> list[BasisExpansion]:
    if r == 1:
        out = [expand_order1(p, ak, "umbral_integral") for ak in AK_ROUTES]
        out.extend(
            expand_order1(p, "binomial_sum", a0)
            for a0 in A0_ROUTES
            if a0 != "umbral_integral"
        )
        out.extend(expand_higher(p, 1, g, f) for g in G_ROUTES for f in F_ROUTES)
        return out
    return [expand_higher(p, r, g, f) for g in G_ROUTES for f in F_ROUTES]


def crosscheck(p: XPoly, r: int = 1) -> BasisExpansion:
    """Compute the expansion by every route and fail loudly on any mismatch."""
    expansions = _all_expansions(p, r)
    base = expansions[0]
    for other in expansions[1:]:
        for k in range(base.degree + 1):
            if base.coeffs[k] != other.coeffs[k]:
                raise RouteMismatchError(
                    k, base.routes[k], base.coeffs[k], other.routes[k], other.coeffs[k]
                )
    return base
