"""Lifting binary factorizations of x^n - 1 to Z4.

Over Z2, x^7 - 1 splits into three irreducible factors; each binary
divisor lifts to a unique monic divisor of x^7 - 1 over Z4 (computed by
the Graeffe square-root trick), and reducing the lift mod 2 gives back
the divisor we started from.
"""

from z2z4cyclic import divisors_xn1, factor_xn1, hensel_lift
from z2z4cyclic import z4poly as z4

beta = 7

print(f"irreducible factors of x^{beta}-1 over Z2:")
for p in factor_xn1(beta):
    print(f"  {p}  ->  lifts to  {hensel_lift(p, beta)}")

print(f"\nall {len(divisors_xn1(beta))} binary divisors, with their lifts:")
for d in divisors_xn1(beta):
    lift = hensel_lift(d, beta)
    assert lift.reduce_mod2() == d
    assert (z4.xn1(beta) % lift).is_zero
    print(f"  {str(d):22s}  ->  {lift}")

print("\nevery lift is monic, divides x^7-1 over Z4, and reduces back mod 2")
