"""Group algebras: Haar triviality and the decomposition of the KR theory.

Run:  python demos/haar_and_groups.py
"""

from hopfhom.hopfcore import group_algebra, cyclic_group, symmetric_group, counit_character, unit_grouplike
from hopfhom.specfile import named_characters
from hopfhom.homengine import cyclic_homology, periodic_estimate
from hopfhom.hopfcyc import cm_cocyclic, cocommutative_decomposition_check


for G in (cyclic_group(2), cyclic_group(3), symmetric_group(3)):
    H = group_algebra(G)
    hc = cyclic_homology(cm_cocyclic(H, counit_character(H), unit_grouplike(H)), 4)
    print("%-4s CM with (eps, 1): HC = %s  HP = %s" % (G.name, hc.as_list(), periodic_estimate(hc).dims))

print()
print("KR theory against group homology, n <= 4")
for G in (cyclic_group(2), symmetric_group(3)):
    H = group_algebra(G)
    for name, chi in named_characters(H):
        if name.startswith("chi"):
            continue
        v = cocommutative_decomposition_check(H, chi, 4 if G.order < 6 else 3)
        print("  %-4s %-5s KR: %s  sum of H_(n-2i): %s  %s"
              % (G.name, name, v.details["left"], v.details["right"], "agree" if v else "DIFFER"))
