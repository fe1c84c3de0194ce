"""Self-dual codes: one infinite family and one sporadic example.

The family b = x^(alpha/2) - 1, ell = 0, f = 1, h = x^beta - 1 is
self-dual for every even alpha and odd beta, with type
(alpha, beta; beta + alpha/2, 0; alpha/2).  The sporadic (14,7) code
below is self-dual without being separable.
"""

from z2z4cyclic import (
    BinPoly,
    QuatPoly,
    code_report,
    construct_self_dual_family,
    report_line,
    validate_spec,
)

print("family members:")
for alpha in (2, 4, 6, 8, 10):
    for beta in (1, 3, 5):
        spec = construct_self_dual_family(alpha, beta)
        report = code_report(spec)
        assert report.is_self_dual
        print(" ", report_line(spec, report))

sporadic = validate_spec(
    14,
    7,
    BinPoly.parse("x^10+x^8+x^7+x^3+x+1"),
    BinPoly.parse("x^6+x^4+x+1"),
    QuatPoly.parse("1"),
    QuatPoly.parse("x^4+2x^3+3x^2+x+1"),
)
report = code_report(sporadic)
print("\nsporadic (14,7) code:")
print(" ", report_line(sporadic, report))
assert report.is_self_dual and not report.is_separable
print("  self-dual but not separable: the binary and quaternary blocks interact")
