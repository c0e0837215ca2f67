"""High-precision standard-normal oracle on decimal arithmetic.

erf comes from its alternating Maclaurin series with enough guard digits that
truncation and cancellation are negligible at double precision; pi comes from
a Machin arctan formula. Deliberately independent of the package under test
and of libm: no math.erf, no numpy.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from functools import lru_cache


@lru_cache(maxsize=None)
def pi_dec(prec: int) -> Decimal:
    """pi to about `prec` digits via 16*atan(1/5) - 4*atan(1/239)."""
    with localcontext() as ctx:
        ctx.prec = prec + 10

        def atan_recip(k: int) -> Decimal:
            kk = Decimal(k * k)
            term = Decimal(1) / k
            total = Decimal(0)
            n = 0
            while term != 0 and term.adjusted() >= -(ctx.prec + 3):
                contrib = term / (2 * n + 1)
                total += contrib if n % 2 == 0 else -contrib
                term /= kk
                n += 1
            return total

        return +(16 * atan_recip(5) - 4 * atan_recip(239))


def erf_dec(x: Decimal, prec: int = 60) -> Decimal:
    """erf(x) by the Maclaurin series sum (-1)^n x^(2n+1) / (n! (2n+1)).

    The series alternates with early terms as large as exp(x^2), so about
    0.44*x^2 extra digits are carried to survive the cancellation.
    """
    if x < 0:
        return -erf_dec(-x, prec)
    with localcontext() as ctx:
        ctx.prec = prec + int(Decimal("0.44") * x * x) + 15
        x2 = x * x
        term = +x  # x^(2n+1) / n!
        total = Decimal(0)
        n = 0
        cutoff = Decimal(10) ** -(ctx.prec - 5)
        while True:
            contrib = term / (2 * n + 1)
            total += contrib if n % 2 == 0 else -contrib
            n += 1
            term = term * x2 / n
            if contrib.copy_abs() < cutoff and n > int(x2) + 2:
                break
        return +(2 * total / pi_dec(ctx.prec).sqrt())


def cdf_oracle(z: float | Decimal, prec: int = 60) -> Decimal:
    """Standard normal CDF at z, i.e. (1 + erf(z/sqrt(2)))/2.

    Floats convert exactly (binary to decimal is lossless), so the oracle
    evaluates at precisely the double the implementation saw.
    """
    zd = z if isinstance(z, Decimal) else Decimal(z)
    with localcontext() as ctx:
        ctx.prec = prec + 20
        return +((1 + erf_dec(zd / Decimal(2).sqrt(), prec + 10)) / 2)


def phi_oracle(z: float | Decimal, prec: int = 60) -> Decimal:
    """Standard normal density at z, i.e. exp(-z^2/2)/sqrt(2 pi)."""
    zd = z if isinstance(z, Decimal) else Decimal(z)
    with localcontext() as ctx:
        ctx.prec = prec + 10
        return +((-zd * zd / 2).exp() / (2 * pi_dec(ctx.prec)).sqrt())
