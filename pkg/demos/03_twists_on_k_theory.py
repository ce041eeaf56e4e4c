"""Spherical twists as integer matrices on (rank, c_1, chi).

On the A_3 chain of the 8-ray example the twists by O_C(-1) satisfy the braid
relations, twists along far-apart curves commute, and each twist is an
involution on classes.  The last part presents O_C(a) through a special
exceptional pair of line bundles and checks the Ext groups directly.
"""

from toricauto import paper_example, picard
from toricauto.knum import (
    KAutomorphism,
    braid_identity_holds,
    curve_sheaf_class,
    euler,
    exceptional_presentation,
    twist_matrix,
    twists_commute,
)

f = paper_example()
S = curve_sheaf_class(f, 6, -1)
print("S = O_C(-1) for C = D_6:", S.to_vector(), " chi(S,S) =", euler(f, S, S))
T = twist_matrix(f, S)
for row in T.matrix.tolist():
    print("   ", row)
print("T^2 = 1:", T @ T == KAutomorphism.identity(picard(f).rank))

print("braid D_5, D_6:", braid_identity_holds(f, 5, 6))
print("braid D_6, D_7:", braid_identity_holds(f, 6, 7))
print("commute D_5, D_7:", twists_commute(f, 5, 7))
print("commute D_1, D_3:", twists_commute(f, 1, 3))

pic = picard(f)
for a in (-1, 0, 1):
    p = exceptional_presentation(f, 6, a)
    print(
        f"a={a:+d}: E = {pic.format_class(p.E)}, E' = {pic.format_class(p.E_prime)}; "
        f"Ext(E',E) = {p.hom_prime_to_E}, Ext(E,E') = {p.hom_E_to_prime}"
    )
