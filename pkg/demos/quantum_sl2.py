"""U_q(sl2) at rational q: the resolution, its homotopy and the collapsed Tor.

Run:  python demos/quantum_sl2.py
"""

from hopfhom.qpbw import UqSl2, dd_check, homotopy_check, collapsed_tor, euler_characteristic

U = UqSl2(2)
print("y x =", U.normal_form("yx"))
print("x sigma =", U.normal_form("xs"))

for variant in ("verbatim", "corrected"):
    v = dd_check(2, variant)
    print("%-9s d o d = 0: %s %s" % (variant, v.ok, v.witness or ""))

for q in (2, 3):
    v = homotopy_check(q)
    print("q = %d  sd + ds = id on %d basis elements: %s" % (q, v.details["checked"], v.ok))

print("Euler characteristic of the free ranks:", euler_characteristic())
for variant in ("corrected", "verbatim"):
    print("%-9s collapsed Tor:" % variant, collapsed_tor(2, 4, variant).as_list())
