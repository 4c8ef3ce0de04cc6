"""Executable corpus of exact special-function identities.

Each case constructs its left and right hand sides independently from the
family and expansion machinery and passes only when the discrepancy
lhs - rhs is the zero polynomial, never merely "numerically small".

Corpus (ids):

    miki_poly     quadratic Bernoulli-polynomial convolution identity
    miki          Miki's Bernoulli-number convolution identity
    fpz           Faber-Pandharipande-Zagier identity (half-integer values)
    ex_a_polyid   one-variable polynomial identity behind the a_0 of B_n(x)
    ex_a          B_n(x) expanded in the degenerate Bernoulli basis
    ex_b_classical / ex_b   sum B_k(x)B_{n-k}(x)/(k(n-k)) in Bernoulli /
                            degenerate Bernoulli form
    ex_c_classical / ex_c   same for Euler-polynomial products
    ex_d_classical / ex_d   same for Genocchi-polynomial products
    ex_e_classical / ex_e   Nielsen's product of two Bernoulli polynomials
    ex_f_classical / ex_f   Nielsen's product of two Euler polynomials
    ex_g_iop      iterated unit-interval integral of l^n B_n^(r)(x/l)
    ex_g          Genocchi products in the order-r degenerate basis

Every verifier validates its parameter range first (e.g. miki needs
n >= 2, ex_g needs n >= 3 and n >= r) and raises ValueError naming the
constraint when violated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterator, Mapping

from .core import LAMBDA, LambdaPoly, XPoly
from .families import (
    bernoulli_number,
    bernoulli_poly,
    deg_bernoulli_order,
    euler_number,
    euler_poly,
    genocchi_number,
    genocchi_poly,
    harmonic,
    scaled_bernoulli,
)
from .umbral import forward_diff

__all__ = [
    "DEFAULT_BOUNDS",
    "IdentityCase",
    "closed_form_coeffs",
    "identity_ids",
    "verify",
    "verify_all",
]


@dataclass(frozen=True)
class IdentityCase:
    """One verified identity instance; passes iff the discrepancy is zero."""

    id: str
    params: tuple[tuple[str, int], ...]
    lhs: XPoly
    rhs: XPoly
    discrepancy: XPoly

    @property
    def passed(self) -> bool:
        return self.discrepancy.is_zero

    def offending_term(self) -> str | None:
        """Leading monomial of a nonzero discrepancy, for failure reports."""
        if self.discrepancy.is_zero:
            return None
        k = self.discrepancy.degree
        c = self.discrepancy.leading()
        xpart = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        return f"({c})*{xpart}" if xpart else f"({c})"

    def param_str(self) -> str:
        return ", ".join(f"{name}={value}" for name, value in self.params)


def _H(m: int) -> Fraction:
    return harmonic(m) if m >= 1 else Fraction(0)


def _rising(a: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= a + i
    return out


@lru_cache(maxsize=None)
def _dl0(k: int, e: int) -> LambdaPoly:
    """k-th forward difference with step l of x^e, evaluated at 0 (0^0 = 1)."""
    return forward_diff(XPoly.monomial(e), LAMBDA, k).eval_x(0)


def _lam_bernoulli(l: int) -> LambdaPoly:
    """l^j B_j as an element of Q[l]."""
    return LambdaPoly.monomial(l, bernoulli_number(l))


def _in_degenerate_basis(coeffs: list[LambdaPoly], order: int) -> XPoly:
    out = XPoly.zero()
    for k, ak in enumerate(coeffs):
        if not ak.is_zero:
            out = out + deg_bernoulli_order(k, order) * ak
    return out


# -- quadratic Bernoulli convolution and its specializations ------------------


def _miki_poly(n: int) -> tuple[XPoly, XPoly]:
    # The left side needs every product B_j(x)B_{2n-j}(x)/(j(2n-j)); the
    # interior odd-index products (3 <= j <= 2n-3) vanish at x = 0 and
    # x = 1/2, which is why the number specializations keep only the even
    # part and the boundary B_1 B_{2n-1} term.
    lhs = XPoly.zero()
    for k in range(1, n):
        lhs = lhs + bernoulli_poly(2 * k) * bernoulli_poly(2 * n - 2 * k) * Fraction(
            1, 2 * k * (2 * n - 2 * k)
        )
    lhs = lhs + bernoulli_poly(1) * bernoulli_poly(2 * n - 1) * Fraction(2, 2 * n - 1)
    for j in range(3, 2 * n - 2, 2):
        lhs = lhs + bernoulli_poly(j) * bernoulli_poly(2 * n - j) * Fraction(1, j * (2 * n - j))
    rhs = XPoly.zero()
    for k in range(1, n + 1):
        rhs = rhs + bernoulli_poly(2 * n - 2 * k) * (
            Fraction(comb(2 * n, 2 * k), 2 * k) * bernoulli_number(2 * k) / n
        )
    rhs = rhs + bernoulli_poly(2 * n) * (harmonic(2 * n - 1) / n)
    rhs = rhs + bernoulli_poly(1) * (bernoulli_number(2 * n - 1) * Fraction(2, 2 * n - 1))
    return lhs, rhs


def _miki(n: int) -> tuple[XPoly, XPoly]:
    lhs = Fraction(0)
    for k in range(1, n):
        lhs += bernoulli_number(2 * k) * bernoulli_number(2 * n - 2 * k) / Fraction(
            2 * k * (2 * n - 2 * k)
        )
    rhs = Fraction(0)
    for k in range(1, n + 1):
        rhs += Fraction(comb(2 * n, 2 * k), 2 * k) * bernoulli_number(2 * k) * bernoulli_number(
            2 * n - 2 * k
        )
    rhs = rhs / n + harmonic(2 * n - 1) * bernoulli_number(2 * n) / n
    return XPoly.const(lhs), XPoly.const(rhs)


def _bbar(j: int) -> Fraction:
    # B_j at 1/2, via the closed form (2^{1-j} - 1) B_j
    return (Fraction(2) ** (1 - j) - 1) * bernoulli_number(j)


def _fpz(n: int) -> tuple[XPoly, XPoly]:
    lhs = Fraction(0)
    for k in range(1, n):
        lhs += _bbar(2 * k) * _bbar(2 * n - 2 * k) / Fraction(2 * k * (2 * n - 2 * k))
    rhs = Fraction(0)
    for k in range(1, n + 1):
        rhs += Fraction(comb(2 * n, 2 * k), 2 * k) * bernoulli_number(2 * k) * _bbar(
            2 * n - 2 * k
        )
    rhs = rhs / n + harmonic(2 * n - 1) * _bbar(2 * n) / n
    return XPoly.const(lhs), XPoly.const(rhs)


# -- Bernoulli polynomials in the degenerate basis ---------------------------


def _ex_a_polyid(n: int) -> tuple[XPoly, XPoly]:
    # sum_j C(n,j) B_{n-j} y^{j+1}/(j+1) (B_{j+1}(1/y) - B_{j+1}) = y^n B_n,
    # an identity in Q[y]; y is modelled by the coefficient-ring generator.
    lhs = LambdaPoly.zero()
    for j in range(n + 1):
        scaled_at_one = scaled_bernoulli(j + 1, 1).eval_x(1)
        tail = scaled_at_one - LambdaPoly.monomial(j + 1, bernoulli_number(j + 1))
        lhs = lhs + tail * (Fraction(comb(n, j), j + 1) * bernoulli_number(n - j))
    rhs = _lam_bernoulli(n)
    return XPoly.const(lhs), XPoly.const(rhs)


def _ex_a_coeffs(n: int) -> list[LambdaPoly]:
    coeffs = [_lam_bernoulli(n)]
    for k in range(1, n + 1):
        coeffs.append(_dl0(k - 1, n - 1).divexact(k - 1) * Fraction(n, factorial(k)))
    return coeffs


def _ex_a(n: int) -> tuple[XPoly, XPoly]:
    return bernoulli_poly(n), _in_degenerate_basis(_ex_a_coeffs(n), 1)


# -- products of two Bernoulli polynomials, weighted by 1/(k(n-k)) -----------


def _b_product_sum(n: int) -> XPoly:
    out = XPoly.zero()
    for k in range(1, n):
        out = out + bernoulli_poly(k) * bernoulli_poly(n - k) * Fraction(1, k * (n - k))
    return out


def _ex_b_classical(n: int) -> tuple[XPoly, XPoly]:
    rhs = XPoly.zero()
    for l in range(n - 1):
        rhs = rhs + bernoulli_poly(l) * (
            Fraction(2 * comb(n, l), n * (n - l)) * bernoulli_number(n - l)
        )
    rhs = rhs + bernoulli_poly(n) * (Fraction(2, n) * harmonic(n - 1))
    return _b_product_sum(n), rhs


def _ex_b_coeffs(n: int) -> list[LambdaPoly]:
    a0 = LambdaPoly.zero()
    for l in range(n - 1):
        a0 = a0 + _lam_bernoulli(l) * (Fraction(comb(n, l), n - l) * bernoulli_number(n - l))
    a0 = a0 + _lam_bernoulli(n) * harmonic(n - 1)
    coeffs = [a0 * Fraction(2, n)]
    for k in range(1, n + 1):
        acc = LambdaPoly.zero()
        for l in range(1, n - 1):
            acc = acc + _dl0(k - 1, l - 1) * (
                Fraction(l * comb(n, l), n - l) * bernoulli_number(n - l)
            )
        acc = acc + _dl0(k - 1, n - 1) * (n * harmonic(n - 1))
        coeffs.append(acc.divexact(k - 1) * Fraction(2, n * factorial(k)))
    return coeffs


def _ex_b(n: int) -> tuple[XPoly, XPoly]:
    return _b_product_sum(n), _in_degenerate_basis(_ex_b_coeffs(n), 1)


# -- products of two Euler polynomials, weighted by 1/(k(n-k)) ----------------


def _e_product_sum(n: int) -> XPoly:
    out = XPoly.zero()
    for k in range(1, n):
        out = out + euler_poly(k) * euler_poly(n - k) * Fraction(1, k * (n - k))
    return out


def _ex_c_weight(n: int, l: int) -> Fraction:
    return Fraction(comb(n, l)) * (_H(n - 1) - _H(n - l)) / (n - l + 1)


def _ex_c_classical(n: int) -> tuple[XPoly, XPoly]:
    rhs = XPoly.const(Fraction(4) * euler_number(n + 1) / (n * n * (n + 1)))
    for l in range(1, n + 1):
        rhs = rhs - bernoulli_poly(l) * (
            Fraction(4, n) * _ex_c_weight(n, l) * euler_number(n - l + 1)
        )
    return _e_product_sum(n), rhs


def _ex_c_coeffs(n: int) -> list[LambdaPoly]:
    a0 = LambdaPoly.const(euler_number(n + 1) / Fraction(n * (n + 1)))
    for l in range(1, n + 1):
        a0 = a0 - _lam_bernoulli(l) * (_ex_c_weight(n, l) * euler_number(n - l + 1))
    coeffs = [a0 * Fraction(4, n)]
    for k in range(1, n + 1):
        acc = LambdaPoly.zero()
        for l in range(1, n + 1):
            acc = acc + _dl0(k - 1, l - 1) * (l * _ex_c_weight(n, l) * euler_number(n - l + 1))
        coeffs.append(acc.divexact(k - 1) * Fraction(-4, n * factorial(k)))
    return coeffs


def _ex_c(n: int) -> tuple[XPoly, XPoly]:
    return _e_product_sum(n), _in_degenerate_basis(_ex_c_coeffs(n), 1)


# -- products of two Genocchi polynomials, weighted by 1/(k(n-k)) -------------


def _g_product_sum(n: int) -> XPoly:
    out = XPoly.zero()
    for k in range(1, n):
        out = out + genocchi_poly(k) * genocchi_poly(n - k) * Fraction(1, k * (n - k))
    return out


def _ex_d_classical(n: int) -> tuple[XPoly, XPoly]:
    rhs = XPoly.zero()
    for k in range(n - 1):
        rhs = rhs - bernoulli_poly(k) * (
            Fraction(4 * comb(n, k), n * (n - k)) * genocchi_number(n - k)
        )
    return _g_product_sum(n), rhs


def _ex_d_coeffs(n: int) -> list[LambdaPoly]:
    a0 = LambdaPoly.zero()
    for l in range(n - 1):
        a0 = a0 + _lam_bernoulli(l) * (Fraction(comb(n, l), n - l) * genocchi_number(n - l))
    coeffs = [a0 * Fraction(-4, n)]
    for k in range(1, n - 1):
        acc = LambdaPoly.zero()
        for l in range(1, n - 1):
            acc = acc + _dl0(k - 1, l - 1) * (
                Fraction(l * comb(n, l), n - l) * genocchi_number(n - l)
            )
        coeffs.append(acc.divexact(k - 1) * Fraction(-4, n * factorial(k)))
    return coeffs


def _ex_d(n: int) -> tuple[XPoly, XPoly]:
    return _g_product_sum(n), _in_degenerate_basis(_ex_d_coeffs(n), 1)


# -- Nielsen products ---------------------------------------------------------


def _nielsen_weight(m: int, n: int, r: int) -> int:
    return comb(m, 2 * r) * n + comb(n, 2 * r) * m


def _ex_e_classical(m: int, n: int) -> tuple[XPoly, XPoly]:
    lhs = bernoulli_poly(m) * bernoulli_poly(n)
    rhs = XPoly.const(Fraction((-1) ** (m + 1)) * bernoulli_number(m + n) / comb(m + n, m))
    r = 0
    while m + n - 2 * r >= 1:
        rhs = rhs + bernoulli_poly(m + n - 2 * r) * (
            Fraction(_nielsen_weight(m, n, r), m + n - 2 * r) * bernoulli_number(2 * r)
        )
        r += 1
    return lhs, rhs


def _ex_e_coeffs(m: int, n: int) -> list[LambdaPoly]:
    total = m + n
    a0 = LambdaPoly.const(Fraction((-1) ** (m + 1)) * bernoulli_number(total) / comb(total, m))
    r = 0
    while total - 2 * r >= 1:
        a0 = a0 + _lam_bernoulli(total - 2 * r) * (
            Fraction(_nielsen_weight(m, n, r), total - 2 * r) * bernoulli_number(2 * r)
        )
        r += 1
    coeffs = [a0]
    for k in range(1, total + 1):
        acc = LambdaPoly.zero()
        r = 0
        while total - 2 * r >= 1:
            acc = acc + _dl0(k - 1, total - 2 * r - 1) * (
                _nielsen_weight(m, n, r) * bernoulli_number(2 * r)
            )
            r += 1
        coeffs.append(acc.divexact(k - 1) / factorial(k))
    return coeffs


def _ex_e(m: int, n: int) -> tuple[XPoly, XPoly]:
    return bernoulli_poly(m) * bernoulli_poly(n), _in_degenerate_basis(_ex_e_coeffs(m, n), 1)


def _ex_f_classical(m: int, n: int) -> tuple[XPoly, XPoly]:
    lhs = euler_poly(m) * euler_poly(n)
    rhs = XPoly.const(
        Fraction(2 * (-1) ** (n + 1) * factorial(m) * factorial(n), factorial(m + n + 1))
        * euler_number(m + n + 1)
    )
    for r in range(1, m + 1):
        rhs = rhs - bernoulli_poly(m + n - r + 1) * (
            Fraction(2 * comb(m, r), m + n - r + 1) * euler_number(r)
        )
    for s in range(1, n + 1):
        rhs = rhs - bernoulli_poly(m + n - s + 1) * (
            Fraction(2 * comb(n, s), m + n - s + 1) * euler_number(s)
        )
    return lhs, rhs


def _ex_f_coeffs(m: int, n: int) -> list[LambdaPoly]:
    a0 = LambdaPoly.const(
        Fraction((-1) ** n * factorial(m) * factorial(n), factorial(m + n + 1))
        * euler_number(m + n + 1)
    )
    for r in range(1, m + 1):
        a0 = a0 + _lam_bernoulli(m + n - r + 1) * (
            Fraction(comb(m, r), m + n - r + 1) * euler_number(r)
        )
    for s in range(1, n + 1):
        a0 = a0 + _lam_bernoulli(m + n - s + 1) * (
            Fraction(comb(n, s), m + n - s + 1) * euler_number(s)
        )
    coeffs = [a0 * Fraction(-2)]
    for k in range(1, m + n + 1):
        acc = LambdaPoly.zero()
        for r in range(1, m + 1):
            acc = acc + _dl0(k - 1, m + n - r) * (comb(m, r) * euler_number(r))
        for s in range(1, n + 1):
            acc = acc + _dl0(k - 1, m + n - s) * (comb(n, s) * euler_number(s))
        coeffs.append(acc.divexact(k - 1) * Fraction(-2, factorial(k)))
    return coeffs


def _ex_f(m: int, n: int) -> tuple[XPoly, XPoly]:
    return euler_poly(m) * euler_poly(n), _in_degenerate_basis(_ex_f_coeffs(m, n), 1)


# -- order-r machinery --------------------------------------------------------


def _ex_g_iop(n: int, r: int, a: int) -> tuple[XPoly, XPoly]:
    # <n+1>_a I^a [l^n B_n^(r)(x/l)] = sum_m (-1)^{a-m} C(a,m) l^{n+a} B_{n+a}^(r)((x+m)/l)
    from .umbral import integral_I

    lhs = scaled_bernoulli(n, r)
    for _ in range(a):
        lhs = integral_I(lhs)
    lhs = lhs * _rising(n + 1, a)
    rhs = XPoly.zero()
    for m in range(a + 1):
        rhs = rhs + scaled_bernoulli(n + a, r).shift(m) * Fraction((-1) ** (a - m) * comb(a, m))
    return lhs, rhs


def _ex_g_coeffs(n: int, r: int) -> list[LambdaPoly]:
    coeffs: list[LambdaPoly] = []
    for k in range(max(r, n - 1)):
        if k < r:
            mm = r - k - 1
            acc = LambdaPoly.zero()
            for j in range(k + 1):
                for l in range(n - 1):
                    g_coef = Fraction(comb(n, l)) * genocchi_number(n - l) / (n - l)
                    if not g_coef:
                        continue
                    base = g_coef / _rising(l + 1, mm)
                    for m2 in range(mm + 1):
                        sign = (-1) ** (r - j - m2 - 1)
                        weight = Fraction(sign * comb(k, j) * comb(mm, m2)) * base
                        acc = acc + scaled_bernoulli(l + mm, r - k).eval_x(j + m2) * weight
            coeffs.append(acc * Fraction(-4, n * factorial(k)))
        else:
            m = k - r
            acc = LambdaPoly.zero()
            for j in range(r + 1):
                for l in range(m + 1):
                    point = LambdaPoly({0: j, 1: l})
                    value = LambdaPoly.zero()
                    for mu in range(1, n):
                        value = value + genocchi_poly(mu).eval_x(point) * genocchi_poly(
                            n - mu
                        ).eval_x(point) * Fraction(1, mu * (n - mu))
                    acc = acc + value * Fraction((-1) ** (k - j - l) * comb(r, j) * comb(k - r, l))
            coeffs.append(acc.divexact(m) / factorial(k))
    return coeffs


def _ex_g(n: int, r: int) -> tuple[XPoly, XPoly]:
    return _g_product_sum(n), _in_degenerate_basis(_ex_g_coeffs(n, r), r)


# -- registry -----------------------------------------------------------------


@dataclass(frozen=True)
class _IdentityDef:
    params: tuple[str, ...]
    summary: str
    build: Callable[..., tuple[XPoly, XPoly]]
    validate: Callable[..., None]
    sweep: Callable[[Mapping[str, int]], Iterator[dict[str, int]]]


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _n_sweep(lo: int) -> Callable[[Mapping[str, int]], Iterator[dict[str, int]]]:
    def sweep(bounds: Mapping[str, int]) -> Iterator[dict[str, int]]:
        for n in range(lo, bounds["n_max"] + 1):
            yield {"n": n}

    return sweep


def _mn_sweep(bounds: Mapping[str, int]) -> Iterator[dict[str, int]]:
    # n_max bounds the total degree m + n
    for m in range(1, bounds["n_max"]):
        for n in range(1, bounds["n_max"] - m + 1):
            yield {"m": m, "n": n}


def _iop_sweep(bounds: Mapping[str, int]) -> Iterator[dict[str, int]]:
    for n in range(bounds["n_max"] + 1):
        for r in range(bounds["r_max"] + 1):
            for a in range(1, bounds["a_max"] + 1):
                yield {"n": n, "r": r, "a": a}


def _g_sweep(bounds: Mapping[str, int]) -> Iterator[dict[str, int]]:
    for n in range(3, bounds["n_max"] + 1):
        for r in range(1, min(n, bounds["r_max"]) + 1):
            yield {"n": n, "r": r}


_REGISTRY: dict[str, _IdentityDef] = {
    "miki_poly": _IdentityDef(
        ("n",),
        "quadratic Bernoulli-polynomial convolution",
        _miki_poly,
        lambda n: _need(n >= 2, "miki_poly requires n >= 2"),
        _n_sweep(2),
    ),
    "miki": _IdentityDef(
        ("n",),
        "Miki's Bernoulli-number identity",
        _miki,
        lambda n: _need(n >= 2, "miki requires n >= 2"),
        _n_sweep(2),
    ),
    "fpz": _IdentityDef(
        ("n",),
        "Faber-Pandharipande-Zagier identity",
        _fpz,
        lambda n: _need(n >= 2, "fpz requires n >= 2"),
        _n_sweep(2),
    ),
    "ex_a_polyid": _IdentityDef(
        ("n",),
        "one-variable identity behind the constant coefficient of B_n(x)",
        _ex_a_polyid,
        lambda n: _need(n >= 1, "ex_a_polyid requires n >= 1"),
        _n_sweep(1),
    ),
    "ex_a": _IdentityDef(
        ("n",),
        "B_n(x) in the degenerate Bernoulli basis",
        _ex_a,
        lambda n: _need(n >= 1, "ex_a requires n >= 1"),
        _n_sweep(1),
    ),
    "ex_b_classical": _IdentityDef(
        ("n",),
        "Bernoulli-product sum in the Bernoulli basis",
        _ex_b_classical,
        lambda n: _need(n >= 2, "ex_b_classical requires n >= 2"),
        _n_sweep(2),
    ),
    "ex_b": _IdentityDef(
        ("n",),
        "Bernoulli-product sum in the degenerate Bernoulli basis",
        _ex_b,
        lambda n: _need(n >= 2, "ex_b requires n >= 2"),
        _n_sweep(2),
    ),
    "ex_c_classical": _IdentityDef(
        ("n",),
        "Euler-product sum in the Bernoulli basis",
        _ex_c_classical,
        lambda n: _need(n >= 2, "ex_c_classical requires n >= 2"),
        _n_sweep(2),
    ),
    "ex_c": _IdentityDef(
        ("n",),
        "Euler-product sum in the degenerate Bernoulli basis",
        _ex_c,
        lambda n: _need(n >= 2, "ex_c requires n >= 2"),
        _n_sweep(2),
    ),
    "ex_d_classical": _IdentityDef(
        ("n",),
        "Genocchi-product sum in the Bernoulli basis",
        _ex_d_classical,
        lambda n: _need(n >= 3, "ex_d_classical requires n >= 3"),
        _n_sweep(3),
    ),
    "ex_d": _IdentityDef(
        ("n",),
        "Genocchi-product sum in the degenerate Bernoulli basis",
        _ex_d,
        lambda n: _need(n >= 3, "ex_d requires n >= 3"),
        _n_sweep(3),
    ),
    "ex_e_classical": _IdentityDef(
        ("m", "n"),
        "Nielsen's Bernoulli-polynomial product formula",
        _ex_e_classical,
        lambda m, n: _need(m >= 1 and n >= 1 and m + n >= 2, "ex_e_classical requires m, n >= 1"),
        _mn_sweep,
    ),
    "ex_e": _IdentityDef(
        ("m", "n"),
        "Nielsen's Bernoulli product in the degenerate basis",
        _ex_e,
        lambda m, n: _need(m >= 1 and n >= 1 and m + n >= 2, "ex_e requires m, n >= 1"),
        _mn_sweep,
    ),
    "ex_f_classical": _IdentityDef(
        ("m", "n"),
        "Nielsen's Euler-polynomial product formula",
        _ex_f_classical,
        lambda m, n: _need(m >= 1 and n >= 1, "ex_f_classical requires m, n >= 1"),
        _mn_sweep,
    ),
    "ex_f": _IdentityDef(
        ("m", "n"),
        "Nielsen's Euler product in the degenerate basis",
        _ex_f,
        lambda m, n: _need(m >= 1 and n >= 1, "ex_f requires m, n >= 1"),
        _mn_sweep,
    ),
    "ex_g_iop": _IdentityDef(
        ("n", "r", "a"),
        "iterated unit-interval integral of l^n B_n^(r)(x/l)",
        _ex_g_iop,
        lambda n, r, a: _need(
            n >= 0 and r >= 0 and a >= 1, "ex_g_iop requires n >= 0, r >= 0, a >= 1"
        ),
        _iop_sweep,
    ),
    "ex_g": _IdentityDef(
        ("n", "r"),
        "Genocchi-product sum in the order-r degenerate basis",
        _ex_g,
        lambda n, r: _need(
            n >= 3 and r >= 1 and n >= r, "ex_g requires n >= 3, r >= 1 and n >= r"
        ),
        _g_sweep,
    ),
}

_CLOSED_FORMS: dict[str, Callable[..., list[LambdaPoly]]] = {
    "ex_a": _ex_a_coeffs,
    "ex_b": _ex_b_coeffs,
    "ex_c": _ex_c_coeffs,
    "ex_d": _ex_d_coeffs,
    "ex_e": _ex_e_coeffs,
    "ex_f": _ex_f_coeffs,
    "ex_g": _ex_g_coeffs,
}

DEFAULT_BOUNDS: dict[str, dict[str, int]] = {
    "miki_poly": {"n_max": 8},
    "miki": {"n_max": 8},
    "fpz": {"n_max": 8},
    "ex_a_polyid": {"n_max": 8},
    "ex_a": {"n_max": 8},
    "ex_b_classical": {"n_max": 10},
    "ex_b": {"n_max": 8},
    "ex_c_classical": {"n_max": 8},
    "ex_c": {"n_max": 8},
    "ex_d_classical": {"n_max": 10},
    "ex_d": {"n_max": 10},
    "ex_e_classical": {"n_max": 10},
    "ex_e": {"n_max": 10},
    "ex_f_classical": {"n_max": 10},
    "ex_f": {"n_max": 10},
    "ex_g_iop": {"n_max": 6, "r_max": 3, "a_max": 3},
    "ex_g": {"n_max": 6, "r_max": 4},
}


def identity_ids() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def identity_summary(identity_id: str) -> str:
    return _lookup(identity_id).summary


def identity_params(identity_id: str) -> tuple[str, ...]:
    """Parameter names an identity takes, e.g. ("n",) or ("m", "n")."""
    return _lookup(identity_id).params


def _lookup(identity_id: str) -> _IdentityDef:
    entry = _REGISTRY.get(identity_id)
    if entry is None:
        raise ValueError(f"unknown identity {identity_id!r}; known: {', '.join(identity_ids())}")
    return entry


def closed_form_coeffs(identity_id: str, **params: int) -> list[LambdaPoly]:
    """Coefficient list stated by the closed-form expansion of an identity."""
    fn = _CLOSED_FORMS.get(identity_id)
    if fn is None:
        raise ValueError(f"{identity_id!r} has no closed-form coefficient list")
    _lookup(identity_id).validate(**params)
    return fn(**params)


def verify(
    identity_id: str,
    params: Mapping[str, int] | None = None,
    *,
    perturb: bool = False,
    **kw: int,
) -> IdentityCase:
    """Verify one identity instance exactly; ValueError on bad id or range."""
    entry = _lookup(identity_id)
    merged = dict(params or {})
    merged.update(kw)
    unknown = set(merged) - set(entry.params)
    if unknown:
        raise ValueError(f"{identity_id} takes parameters {entry.params}, not {sorted(unknown)}")
    missing = set(entry.params) - set(merged)
    if missing:
        raise ValueError(f"{identity_id} is missing parameters {sorted(missing)}")
    entry.validate(**merged)
    lhs, rhs = entry.build(**merged)
    if perturb:
        rhs = rhs + XPoly.one()
    return IdentityCase(
        id=identity_id,
        params=tuple(sorted(merged.items())),
        lhs=lhs,
        rhs=rhs,
        discrepancy=lhs - rhs,
    )


def verify_all(
    bounds: Mapping[str, Mapping[str, int]] | None = None,
    ids: tuple[str, ...] | list[str] | None = None,
    *,
    perturb: bool = False,
) -> list[IdentityCase]:
    """Sweep identities over their parameter ranges; deterministic order."""
    cases: list[IdentityCase] = []
    for identity_id in sorted(ids) if ids is not None else identity_ids():
        entry = _lookup(identity_id)
        eff = dict(DEFAULT_BOUNDS[identity_id])
        if bounds and identity_id in bounds:
            eff.update(bounds[identity_id])
        for params in entry.sweep(eff):
            cases.append(verify(identity_id, params, perturb=perturb))
    return cases
