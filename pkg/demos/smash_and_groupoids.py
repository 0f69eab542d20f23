"""Smash products and groupoid bialgebroids.

Run:  python demos/smash_and_groupoids.py
"""

from hopfhom.smash import sign_action, smash_product, phi_psi_isomorphism, ez_dimension_compare, spectral_sequence
from hopfhom.extalg import pair_groupoid, groupoid_extended_hopf, haar_system_report, hc_parity_check

act = sign_action()
print("A#H for Z/2 acting on k[x]/(x^2) by x -> -x, dim", smash_product(act).dim)
print("diagonal of the cylindrical module vs (A#H)-natural:", phi_psi_isomorphism(act, 3).ok)
ez = ez_dimension_compare(act, 3)
print("HC of Tot:", ez.details["tot"], " HC of A#H:", ez.details["smash"])
ss = spectral_sequence(act, 2)
print("E2 totals:", ss.details["E2_total"], " E-infinity totals:", ss.details["Einf_total"])

print()
B = groupoid_extended_hopf(pair_groupoid(2))
h = haar_system_report(B)
print("pair groupoid: Haar system", h.details["tau"], "indicator of identities:", h.details["indicator_of_identities"])
p = hc_parity_check(B, 3)
print("HC:", p.details["HC"], " dim ker(alpha - beta):", p.details["ker_alpha_minus_beta"])
