"""Finite subset spaces Sub_n(X) and their filtration.

Sub_n(X) identifies configurations of SP^n(X) with equal coordinate
supports.  Two famous facts about the circle drop out by direct
computation: Sub_3(S^1) is a 3-sphere (including a trivial fundamental
group), and Sub_4(S^1) still has the homology of S^3.  Collapsing the
filtration Sub_1 in Sub_2 exhibits a projective plane.
"""

from finsub import (abelianization, builtin_space, euler_characteristic,
                    fat_diagonal, finite_subset_space, fundamental_presentation,
                    homology_of_sset, normalized_chains, reduced,
                    tietze_simplify)

circle = builtin_space("circle3")

for n in (2, 3, 4):
    sub = finite_subset_space(circle, n, with_filtration=False)
    h = homology_of_sset(sub.space)
    chi = euler_characteristic(normalized_chains(sub.space))
    print(f"Sub_{n}(S^1):  chi={chi:+d}  "
          + "  ".join(f"H_{g.degree}={g}" for g in h.groups))

# the three-fold subset space of the circle is simply connected
sub3 = finite_subset_space(circle, 3, with_filtration=False)
pres = fundamental_presentation(sub3.space)
simplified = tietze_simplify(pres)
print(f"pi_1(Sub_3 S^1): {pres.generator_count} generators -> "
      f"{simplified.generator_count} after simplification "
      f"(abelianization {abelianization(pres)})")

# reduced constructions: Sub_2/Sub_1 of the circle is a projective plane,
# while SP^2/SP^1 is contractible -- the two collapses differ
for kind in ("sub", "sp"):
    red = reduced(circle, 2, kind)
    h = homology_of_sset(red.space)
    print(f"{kind}-reduced 2-fold of the circle: "
          + "  ".join(f"H_{g.degree}={g}" for g in h.groups))

# the fat diagonal of SP^3(S^1) is a torus: pairs (doubled point, free point)
fat = fat_diagonal(circle, 3)
h = homology_of_sset(fat.space)
print("fat diagonal in SP^3(S^1): "
      + "  ".join(f"H_{g.degree}={g}" for g in h.groups))
