"""Exact identity sweeps that floats could not certify.

Every check here runs in exact arithmetic: coprimality of neighbours, the
perfect-square witness 5 f(n)^2 +/- 4, the rounding identity against phi
decided by field comparison, and the index-doubling pair.  The ratio
f(n+1)/f(n) closes in on phi like phi^-2n, so tight tolerances are reached
at small indices and absurd ones are provably out of range.
"""
from fractions import Fraction

from fiblti import appendix_forms_equal, check_identities, ratio_convergence

report = check_identities(500)
print(f"identity sweep up to n = {report.n_max}")
for check in report.checks:
    status = "ok" if check.first_failure is None else f"first failure at {check.first_failure}"
    print(f"  {check.name:<22} {check.passed}/{check.checked}  {status}")

print("\nratio convergence |f(n+1)/f(n) - phi| < tol")
for tol in (Fraction(1), Fraction(1, 1000), Fraction(1, 10**6), Fraction(1, 10**15)):
    index = ratio_convergence(40, tol)
    where = f"first index {index}" if index is not None else "not reached by n = 40"
    print(f"  tol = {float(tol):8.0e}: {where}")

forms = appendix_forms_equal(50)
print(f"\nclosed forms vs the recursion, 0..{forms.n_max}")
for name, agree in forms.agreements:
    print(f"  {name:<20} {'exact match' if agree else 'MISMATCH'}")
