"""Tau-function identities at desk scale.

Assembles the hypergeometric tau series for several weight functions and
mechanically verifies the Cauchy kernel, the square identity, and the
swap/scaling invariance, printing one verdict per check.
"""

from fractions import Fraction

from bkpq import Cutoff, Ones, RationalPS, SymmetricRational
from bkpq.tau import (
    check_cauchy,
    check_square,
    check_symmetry_scaling,
    hyper_one_var,
    tau_bkp,
)

W = 6
SPECS = [Ones(), Cutoff(2), Cutoff(3), RationalPS([1], [2]),
         SymmetricRational([Fraction(1, 3)], [])]

t = tau_bkp(Ones(), W, W)
print("tau for the trivial weight function, a few coefficients:")
print("  [t_1 t*_1] =", t.coefficient(((1, 1),), ((1, 1),)))
print("  [t_3 t*_3] =", t.coefficient(((3, 1),), ((3, 1),)))
print("  [t_1^3 t*_3] =", t.coefficient(((1, 3),), ((3, 1),)), "(cancels exactly)")
print()

for rep in [check_cauchy(8)] + [check_square(s, W) for s in SPECS] + [
    check_symmetry_scaling(s, 2, W) for s in SPECS
]:
    print("%-18s %-45s %s" % (rep.name, rep.params.get("r", ""),
                              "pass" if rep.passed else "FAIL"))

print()
print("One-variable reduction: with trivial weights the series is e^x,")
print("with a=(1), b=(2) it is (e^x - 1)/x:")
print("  ", [str(c) for c in hyper_one_var([], [], 6)])
print("  ", [str(c) for c in hyper_one_var([Fraction(1)], [Fraction(2)], 6)])
