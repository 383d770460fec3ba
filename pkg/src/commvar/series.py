"""Zeta-type generating series and product-formula verification.

Three generating series are computed by two independent routes each and
compared coefficient by coefficient, exactly:

* the Betti zeta series of symmetric powers (finite product of
  geometric factors, one per Betti number);
* the sheaf-counting series whose coefficients are the stack Poincare
  values, against the doubly-indexed product of Betti zeta factors;
* the groupoid point-count series over a finite field, against the
  product of Weil zeta factors at geometrically shrinking arguments.

The last product has infinitely many non-unit factors, so its
coefficients are evaluated in closed form: the logarithm of the product
is a geometric series in the field size, summed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import Poly, RatFunc, TSeries
from .charmodel import GradedSpace, poincare, point_count
from .oracle import gl_order, prime_power_base


@dataclass(frozen=True)
class SeriesReport:
    """Two series compared coefficientwise, with an exact verdict.

    When ``u_order`` is set, both sides are reduced modulo
    u^(u_order+1) before comparison; otherwise comparison is exact.
    """

    lhs: TSeries
    rhs: TSeries
    t_order: int
    u_order: int | None
    equal: bool
    first_mismatch: int | None

    def rows(self):
        for n in range(self.t_order + 1):
            a = self.lhs.coeff(n)
            b = self.rhs.coeff(n)
            if self.u_order is None:
                yield n, a.render(), b.render()
            else:
                ap = Poly(a.series(self.u_order))
                bp = Poly(b.series(self.u_order))
                yield n, ap.render(), bp.render()

    def verdict(self) -> str:
        if self.equal:
            return "equal"
        return f"mismatch at t^{self.first_mismatch}"


def _compare(lhs: TSeries, rhs: TSeries, t_order: int, u_order: int | None) -> SeriesReport:
    equal = True
    first = None
    for n in range(t_order + 1):
        a, b = lhs.coeff(n), rhs.coeff(n)
        same = a.series(u_order) == b.series(u_order) if u_order is not None else a == b
        if not same:
            equal = False
            first = n
            break
    return SeriesReport(lhs, rhs, t_order, u_order, equal, first)


# -- Betti zeta ------------------------------------------------------------


def betti_zeta(space: GradedSpace, order: int) -> TSeries:
    """Generating series of signed Poincare polynomials of symmetric powers.

    Computed as the finite product over cohomological degrees i of
    (1 - u^i t)^(-(-1)^i b_i); the t-coefficients are polynomials in u.
    """
    if order < 0:
        raise ValueError("series order must be >= 0")
    acc = TSeries.one(order)
    for deg, b in sorted(space.betti().items()):
        e = -b if deg % 2 == 0 else b
        acc = acc * TSeries.binomial_factor(RatFunc(Poly.monomial(deg)), e, order)
    return acc


# -- sheaf-counting product formula ------------------------------------------


def coh_series(space: GradedSpace, t_order: int, u_order: int) -> SeriesReport:
    """Stack Poincare series against the product of Betti zeta factors.

    The left side is assembled degree by degree from the stack Poincare
    values; the right side multiplies the factors at t, u^2 t, u^4 t,
    ... and is cut off once an omitted factor would be congruent to 1
    modulo u^(u_order+1).  Both sides are compared modulo
    (t^(t_order+1), u^(u_order+1)).
    """
    if t_order < 0 or u_order < 0:
        raise ValueError("orders must be >= 0")
    betti_data = space.with_unit_eigenvalues()
    lhs = TSeries([poincare(betti_data, n, "coh") for n in range(t_order + 1)])
    base = betti_zeta(space, t_order)
    rhs = TSeries.one(t_order)
    i = 0
    while 2 * i <= u_order:
        factor = base if i == 0 else base.scale_t(RatFunc(Poly.monomial(2 * i)))
        rhs = rhs * factor
        i += 1
    return _compare(lhs, rhs, t_order, u_order)


# -- Weil zeta and the groupoid series -----------------------------------------


def weil_zeta_from_eigendata(space: GradedSpace, q: int) -> RatFunc:
    """Weil zeta function as a rational function in t.

    One factor (1 - eig*q*t) per eigenvalue, with multiplicity the
    signed dimension of its stratum: odd-degree strata contribute to
    the numerator, even-degree strata to the denominator.  Eigenvalue
    data is the arithmetic-Frobenius eigenvalue; an affine line is
    (deg 0, eig 1) -> 1/(1 - q t), while a torus adds (deg 1, eig 1/q)
    -> (1 - t)/(1 - q t).
    """
    prime_power_base(q)
    resolved = space.resolve(q)
    exponents: dict[Fraction, int] = {}
    for s in resolved.strata:
        exponents[s.eig] = exponents.get(s.eig, 0) + (-1) ** s.deg * s.dim
    num = Poly.constant(1)
    den = Poly.constant(1)
    for eig in sorted(exponents, key=lambda e: (e.numerator, e.denominator)):
        e = exponents[eig]
        if e == 0:
            continue
        factor = Poly([1, -eig * q]) ** abs(e)
        if e > 0:
            den = den * factor
        else:
            num = num * factor
    return RatFunc(num, den)


def _series_log(coeffs: list[Fraction]) -> list[Fraction]:
    """a_n with log(sum z_n t^n) = sum a_n t^n / n; requires z_0 = 1."""
    if not coeffs or coeffs[0] != 1:
        raise ValueError("series logarithm needs constant term 1")
    a: list[Fraction] = [Fraction(0)]
    for n in range(1, len(coeffs)):
        acc = n * coeffs[n]
        for m in range(1, n):
            acc -= a[m] * coeffs[n - m]
        a.append(acc)
    return a


def groupoid_series(space: GradedSpace, q: int, order: int) -> SeriesReport:
    """Point-count series against the infinite product of shrunk zeta factors.

    Left side: formula point counts normalized by the group order.
    Right side: the product over i >= 1 of the Weil zeta at t/q^i.  The
    factors never become trivial at any finite cutoff, so the product
    is evaluated in closed form instead: its logarithm turns the i-sum
    into geometric series 1/(q^m - 1), which is exact.
    """
    prime_power_base(q)
    if order < 0:
        raise ValueError("series order must be >= 0")
    lhs_coeffs = [RatFunc(1)] + [
        RatFunc(point_count(space, n, q) / gl_order(n, q)) for n in range(1, order + 1)
    ]
    lhs = TSeries(lhs_coeffs)

    zeta = weil_zeta_from_eigendata(space, q)
    z_coeffs = zeta.series(order)
    a = _series_log(z_coeffs)
    rhs_coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for m in range(1, n + 1):
            acc += a[m] / (q**m - 1) * rhs_coeffs[n - m]
        rhs_coeffs.append(acc / n)
    rhs = TSeries([RatFunc(c) for c in rhs_coeffs])
    return _compare(lhs, rhs, order, None)


# -- stabilization -------------------------------------------------------------


def _one_minus_power(a: int, e: int, order: int) -> Poly:
    """(1 - u^a)^e as a polynomial modulo u^(order+1); a >= 1."""
    if a < 1:
        raise ValueError("exponent gap must be >= 1")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    kmax = order // a
    if e >= 0:
        for k in range(1, min(e, kmax) + 1):
            coeffs[a * k] = Fraction((-1) ** k * comb(e, k))
    else:
        for k in range(1, kmax + 1):
            coeffs[a * k] = Fraction(comb(k - e - 1, k))
    return Poly(coeffs)


def stable_betti(space: GradedSpace, u_order: int) -> Poly:
    """Limit of the commuting-space Poincare polynomials, mod u^(u_order+1).

    Requires connected input (b_0 = 1).  Computed from the residue of
    the sheaf-counting product at t = 1: the simple pole of the i = 0
    factor is cancelled by (1 - t), every remaining factor is evaluated
    at t = 1, and the whole product is multiplied by the infinite
    Pochhammer at u^2, all truncated.
    """
    betti = space.betti()
    if betti.get(0, 0) != 1:
        raise ValueError(
            f"stabilization needs connected input (b_0 = 1), got b_0 = {betti.get(0, 0)}"
        )
    if u_order < 0:
        raise ValueError("u order must be >= 0")
    M = u_order
    acc = Poly.constant(1)
    # residue of the i = 0 factor: drop the b_0 pole, keep degrees >= 1
    for deg, b in sorted(betti.items()):
        if deg == 0:
            continue
        e = b if deg % 2 else -b
        acc = acc.mul_trunc(_one_minus_power(deg, e, M), M)
    # factors at u^2, u^4, ... evaluated at t = 1
    i = 1
    while 2 * i <= M:
        for deg, b in sorted(betti.items()):
            e = b if deg % 2 else -b
            acc = acc.mul_trunc(_one_minus_power(deg + 2 * i, e, M), M)
        i += 1
    # infinite Pochhammer at u^2, truncated
    i = 1
    while 2 * i <= M:
        acc = acc.mul_trunc(_one_minus_power(2 * i, 1, M), M)
        i += 1
    return acc.truncate(M)


@dataclass(frozen=True)
class StabilizationReport:
    """Residue-route limit against two consecutive finite-rank values."""

    stable: Poly
    n: int
    at_n: Poly
    at_next: Poly

    @property
    def ok(self) -> bool:
        return self.stable == self.at_n and self.stable == self.at_next


def stable_betti_verified(space: GradedSpace, u_order: int) -> StabilizationReport:
    """Certify the residue-route limit against finite ranks n and n+1.

    Stabilization is detected, never assumed: the truncated Poincare
    polynomials at n = u_order and n = u_order + 1 must both equal the
    residue value.
    """
    n = max(u_order, 1)
    stable = stable_betti(space, u_order)
    at_n = poincare(space, n, "cn").as_poly().truncate(u_order)
    at_next = poincare(space, n + 1, "cn").as_poly().truncate(u_order)
    return StabilizationReport(stable, n, at_n, at_next)
