"""Polynomial arithmetic over Z4[x].

QuatPoly supplies ring operations via the shared dense base; this module
adds reduction to Z2, multiplication mod x^beta - 1, exact division of
x^beta - 1, and the Hensel lift taking a binary divisor of x^beta + 1 to
the unique monic quaternary divisor of x^beta - 1 above it (computed by
the Graeffe square-root trick).  Quaternary block lengths must be odd.
"""

from __future__ import annotations

from . import gf2poly
from .errors import EvenLengthUnsupported, InvalidParameter, NotADivisor, NotMonic
from .gf2poly import BinPoly
from .poly import DensePoly


class QuatPoly(DensePoly):
    MOD = 4

    def reduce_mod2(self) -> BinPoly:
        """Image in Z2[x]."""
        return BinPoly._make(self.coeffs)


def check_beta(beta: int) -> None:
    if not isinstance(beta, int) or beta < 1:
        raise InvalidParameter("beta must be a positive integer")
    if beta % 2 == 0:
        raise EvenLengthUnsupported(f"beta = {beta} is even; quaternary lengths must be odd")


def xn1(n: int) -> QuatPoly:
    """x^n - 1 over Z4."""
    if n < 1:
        raise InvalidParameter("n must be a positive integer")
    return QuatPoly._make([3] + [0] * (n - 1) + [1])


def lift_binary(p: BinPoly) -> QuatPoly:
    """Reinterpret a binary polynomial over Z4 with 0/1 coefficients."""
    return QuatPoly._make(p.coeffs)


def make_monic(p: QuatPoly) -> QuatPoly:
    """Scale by the leading unit so the result is monic."""
    if p.is_zero or p.coeffs[-1] == 2:
        raise NotMonic(f"({p}) cannot be normalised to a monic polynomial")
    return p if p.coeffs[-1] == 1 else 3 * p


def mul_mod(a: QuatPoly, b: QuatPoly, beta: int) -> QuatPoly:
    """Product in Z4[x]/(x^beta - 1)."""
    check_beta(beta)
    return (a * b).fold(beta)


def exact_divide_xn1(d: QuatPoly, beta: int) -> QuatPoly:
    """(x^beta - 1) / d for a monic divisor d; NotADivisor otherwise."""
    check_beta(beta)
    if not d.is_monic:
        raise NotMonic(f"({d}) is not monic")
    q, r = divmod(xn1(beta), d)
    if r:
        raise NotADivisor(f"({d}) does not divide x^{beta}-1 over Z4")
    return q


def hensel_lift(d: BinPoly, beta: int) -> QuatPoly:
    """The monic divisor of x^beta - 1 over Z4 whose mod-2 reduction is d.

    Uses the Graeffe trick: for D a 0/1 lift of d, D(x)*D(-x) has only
    even powers and equals +-P(x^2); the sign making P monic gives the lift.
    """
    check_beta(beta)
    if d.is_zero or gf2poly.xn1(beta) % d:
        raise NotADivisor(f"({d}) does not divide x^{beta}-1 over Z2")
    big = lift_binary(d)
    neg = QuatPoly._make(-v if i % 2 else v for i, v in enumerate(big.coeffs))
    prod = big * neg
    if any(prod.coeffs[i] for i in range(1, len(prod.coeffs), 2)):
        raise ArithmeticError("internal error: Graeffe product has odd-degree terms")
    lifted = QuatPoly._make(prod.coeffs[::2])
    return make_monic(lifted)
