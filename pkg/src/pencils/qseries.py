"""Truncated power series in q with exact rational coefficients.

Hosts the half-integer-power expansions, the two-variable Schur
polynomials specialized at root sum 1 and root product q, and the
series-coefficient count pipeline.  Nothing here ever touches floating
point: half powers are built from the integer-coefficient square-root
series.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .exactmath import as_integer, catalan

__all__ = [
    "TruncatedSeries",
    "sqrt_one_minus_4q",
    "power_3_2",
    "schur_q",
    "catalan_power_series",
    "n_via_series",
]


class TruncatedSeries:
    """Power series modulo q^(T+1): exactly T+1 rational coefficients.

    Arithmetic never reads beyond the truncation order; mixing orders
    truncates to the smaller one.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise DomainError(f"truncation order must be >= 0, got {order}")
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise DomainError("a truncated series needs at least the q^0 coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise DomainError(
                f"coefficient q^{n} outside truncation order {self.order}"
            )
        return self.coeffs[n]

    @staticmethod
    def constant(value, order: int) -> "TruncatedSeries":
        return TruncatedSeries([Fraction(value)], order=order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[n] + other.coeffs[n] for n in range(t + 1)]
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            t = min(self.order, other.order)
            out = [Fraction(0)] * (t + 1)
            for i in range(t + 1):
                a = self.coeffs[i]
                if a == 0:
                    continue
                for j in range(t + 1 - i):
                    out[i + j] += a * other.coeffs[j]
            return TruncatedSeries(out)
        return TruncatedSeries([c * Fraction(other) for c in self.coeffs])

    def __rmul__(self, other) -> "TruncatedSeries":
        return self.__mul__(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "TruncatedSeries(%s)" % (list(self.coeffs),)


def sqrt_one_minus_4q(order: int) -> TruncatedSeries:
    """(1 - 4q)^(1/2) to the given order: 1, then -2*catalan(n-1) at q^n."""
    if order < 0:
        raise DomainError(f"truncation order must be >= 0, got {order}")
    coeffs = [Fraction(1)]
    coeffs += [Fraction(-2 * catalan(n - 1)) for n in range(1, order + 1)]
    return TruncatedSeries(coeffs)


def power_3_2(order: int) -> TruncatedSeries:
    """(1 - 4q)^(3/2) as (1 - 4q) times the square-root series."""
    linear = [Fraction(1)] + ([Fraction(-4)] if order >= 1 else [])
    return TruncatedSeries(linear, order=order) * sqrt_one_minus_4q(order)


@lru_cache(maxsize=None)
def _schur_coeffs(j: int) -> tuple[int, ...]:
    # s_{-1} = 0, s_0 = 1, s_j = s_{j-1} - q * s_{j-2}
    if j < 0:
        return ()
    if j == 0:
        return (1,)
    prev = _schur_coeffs(j - 1)
    bumped = (0,) + _schur_coeffs(j - 2)
    n = max(len(prev), len(bumped))
    prev += (0,) * (n - len(prev))
    bumped += (0,) * (n - len(bumped))
    return tuple(p - b for p, b in zip(prev, bumped))


def schur_q(j: int, order: int) -> TruncatedSeries:
    """Two-variable Schur polynomial s_j at root sum 1, root product q.

    A polynomial of degree floor(j/2) in q, delivered at the requested
    truncation order.  s_{-1} = 0 by convention.
    """
    if j < -1:
        raise DomainError(f"schur_q: index must be >= -1, got {j}")
    return TruncatedSeries([Fraction(c) for c in _schur_coeffs(j)] or [0], order=order)


def catalan_power_series(t: int, order: int) -> TruncatedSeries:
    """t-th power of the Catalan generating function (1 - sqrt(1-4q))/(2q)."""
    if t < 1:
        raise DomainError(f"catalan_power_series: power must be >= 1, got {t}")
    s = sqrt_one_minus_4q(order + 1)
    base = TruncatedSeries(
        [-s.coefficient(n + 1) / 2 for n in range(order + 1)]
    )
    out = base
    for _ in range(t - 1):
        out = out * base
    return out


def n_via_series(d1: int, d2: int, d3: int, d4: int) -> int:
    """Count via coefficient extraction from a q-series product.

    Multiplies (1-4q)^(3/2) by, for each order d_i, the convolution
    sum_{j=0}^{d_i-2} s_j * s_{d_i-2-j}, and reads off the coefficient of
    q^degree.  Orders must be >= 1 and sum to twice an integer degree
    plus four, with degree >= 2.
    """
    orders = (d1, d2, d3, d4)
    for di in orders:
        if di < 1:
            raise DomainError(f"off-shell: order {di} < 1")
    total = sum(orders)
    if total % 2 != 0 or total < 8:
        raise DomainError(
            f"off-shell: d1+d2+d3+d4 = {total} must be even and >= 8"
        )
    degree = (total - 4) // 2
    acc = power_3_2(degree)
    for di in orders:
        factor = TruncatedSeries.constant(0, degree)
        for j in range(di - 1):
            factor = factor + schur_q(j, degree) * schur_q(di - 2 - j, degree)
        acc = acc * factor
    return as_integer(acc.coefficient(degree), "n_via_series")
