#!/usr/bin/env python3
"""Reproduce the n=5 cubic betti table from the explicit generator and
compare it with the closed form and with freshly sampled random generators.
"""

import sys

from psilab.homology import closed_form_betti, koszul_betti
from psilab.inverse import QuotientAlgebra, module_of_quotient
from psilab.poly import parse_element
from psilab.psi import PsiIdeal, sample_general_f

N = 5

explicit = parse_element("x1^3 - x2^3 + x1^2*x3 + x2*x3*x4 - x2*x3*x5", n=N)
Q = QuotientAlgebra.from_psi(PsiIdeal.from_polynomial(explicit))
table = koszul_betti(module_of_quotient(Q))
print("explicit cubic generator, n = 5:")
print(table.render())

formula = closed_form_betti(N, 3)
print("\nclosed form:")
print(formula.render())
print("\nexplicit == closed form:", table == formula)

for seed in (1, 2, 3):
    f = sample_general_f(N, 3, seed)
    t = koszul_betti(module_of_quotient(QuotientAlgebra.from_psi(PsiIdeal.from_polynomial(f))))
    print(f"random seed {seed}: oracle == closed form: {t == formula}")

sys.exit(0 if table == formula else 1)
