"""Truncated univariate integer power series and the closed-form
generating functions for the one-even-variable and one-odd-variable
Poincare series, plus the two partition limit identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .partitions import as_hook, enumerate_partitions

Factor = tuple  # (sign: +-1, exponent_a: int, power: +-1) meaning (1 + sign*u^a)^power


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer power series modulo degree order+1; coefficients exact."""

    var: str
    order: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient list length must be order + 1")

    @classmethod
    def zero(cls, var: str, order: int) -> "TruncatedSeries":
        return cls(var, order, (0,) * (order + 1))

    @classmethod
    def one(cls, var: str, order: int) -> "TruncatedSeries":
        return cls(var, order, (1,) + (0,) * order)

    @classmethod
    def monomial(cls, var: str, order: int, degree: int, coeff: int = 1) -> "TruncatedSeries":
        c = [0] * (order + 1)
        if 0 <= degree <= order:
            c[degree] = coeff
        return cls(var, order, tuple(c))

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def _check(self, other: "TruncatedSeries"):
        if self.var != other.var or self.order != other.order:
            raise ValueError("series variable/order mismatch")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.var, self.order,
                               tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.var, self.order,
                               tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries(self.var, self.order,
                                   tuple(other * a for a in self.coeffs))
        self._check(other)
        out = [0] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(self.var, self.order, tuple(out))

    __rmul__ = __mul__

    def shift(self, degree: int) -> "TruncatedSeries":
        """Multiply by var^degree."""
        out = [0] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if 0 <= i + degree <= self.order:
                out[i + degree] = a
        return TruncatedSeries(self.var, self.order, tuple(out))

    def __str__(self) -> str:
        return " + ".join(f"{c}*{self.var}^{i}" for i, c in enumerate(self.coeffs) if c) or "0"


def _apply_factor(series: TruncatedSeries, factor: Factor) -> TruncatedSeries:
    sign, a, power = factor
    if sign not in (1, -1) or power not in (1, -1) or a < 0:
        raise ValueError(f"bad factor {factor}")
    D = series.order
    if power == 1:
        return series + (series.shift(a) * sign)
    if a == 0:
        raise ValueError("factor (1 +- u^0) is not invertible as a series")
    # (1 + sign*u^a)^-1 = sum (-sign)^m u^(am)
    inv = [0] * (D + 1)
    s = 1
    m = 0
    while a * m <= D:
        inv[a * m] = s
        s *= -sign
        m += 1
    return series * TruncatedSeries(series.var, D, tuple(inv))


def expand_product(factors: Sequence[Factor], shift: int, D: int,
                   var: str = "u") -> TruncatedSeries:
    """u^shift * prod (1 + sign*u^a)^power through degree D."""
    series = TruncatedSeries.one(var, D)
    for factor in factors:
        series = _apply_factor(series, factor)
    return series.shift(shift)


def u2_factorial_factors(j: int) -> list[Factor]:
    """[u^2]_j = prod_{i=1}^j (1 - u^{2i}) as a factor list."""
    return [(-1, 2 * i, 1) for i in range(1, j + 1)]


def gf_partitions(D: int, max_height: Optional[int] = None, in_hook=None,
                  typical=None, self_conjugate: bool = False,
                  var: str = "u") -> TruncatedSeries:
    """Coefficient of u^n = number of partitions of n meeting the
    constraints, by direct enumeration."""
    coeffs = tuple(len(enumerate_partitions(n, max_height=max_height,
                                            in_hook=in_hook, typical=typical,
                                            self_conjugate=self_conjugate))
                   for n in range(D + 1))
    return TruncatedSeries(var, D, coeffs)


def closed_form_series(kind: str, h, D: int) -> TruncatedSeries:
    """Closed forms for the one-variable Poincare series.

    traces_n1:      t^{kl} / (prod_{i<=k}(1-t^i) prod_{j<=l}(1-t^j))
    supertraces_01: u^{2kl-l^2} prod_{i<=k-l}(1+u^{2i-1}) / [u^2]_l,
                    valid for k >= l.
    """
    h = as_hook(h)
    k, ell = h.k, h.l
    if kind == "traces_n1":
        factors = [(-1, i, -1) for i in range(1, k + 1)]
        factors += [(-1, j, -1) for j in range(1, ell + 1)]
        return expand_product(factors, k * ell, D, var="t")
    if kind == "supertraces_01":
        if k < ell:
            raise ValueError("supertraces_01 requires k >= l; swap the hook first")
        factors = [(1, 2 * i - 1, 1) for i in range(1, k - ell + 1)]
        factors += [(-1, 2 * i, -1) for i in range(1, ell + 1)]
        return expand_product(factors, 2 * k * ell - ell * ell, D, var="u")
    raise ValueError(f"unknown closed form kind {kind!r}")


def _odd_product(D: int) -> TruncatedSeries:
    """prod_{n>=1} (1 + u^{2n-1}) through degree D (exact truncation)."""
    factors = [(1, a, 1) for a in range(1, D + 1, 2)]
    return expand_product(factors, 0, D)


def check_limit_identity(which: str, D: int, n: Optional[int] = None):
    """Compare the odd-part product against the stated basic-hypergeometric
    sum through degree D.  Returns (ok, report); the report carries both
    coefficient lists and the first discrepancy degree, if any."""
    lhs = _odd_product(D)
    rhs = TruncatedSeries.zero("u", D)
    if which == "selfconjugate_sum":
        q = 0
        while q * q <= D:
            rhs = rhs + expand_product([(-1, 2 * i, -1) for i in range(1, q + 1)],
                                       q * q, D)
            q += 1
    elif which == "shifted_sum":
        if n is None:
            raise ValueError("shifted_sum needs the shift parameter n")
        # summand = u^{i(2n+i)} * prod_{t<=n}(1+u^{2t-1}) / [u^2]_i; the
        # odd-part product runs to n, the closed form of the (n+i, i) hook
        i = 0
        while i * (2 * n + i) <= D:
            factors = [(1, 2 * t - 1, 1) for t in range(1, n + 1)]
            factors += [(-1, 2 * t, -1) for t in range(1, i + 1)]
            rhs = rhs + expand_product(factors, i * (2 * n + i), D)
            i += 1
    else:
        raise ValueError(f"unknown identity {which!r}")
    first_bad = next((d for d in range(D + 1) if lhs[d] != rhs[d]), None)
    report = {"which": which, "degree": D, "n": n,
              "lhs": list(lhs.coeffs), "rhs": list(rhs.coeffs),
              "first_discrepancy": first_bad}
    return first_bad is None, report
