"""The 8-ray surface where Pic_Delta is not a direct summand.

Walks through the invariants in the order one would compute them by hand:
self-intersections, the -2-chains, the Picard group, and finally the torsion
that blocks the semidirect decomposition.
"""

from toricauto import analyze, paper_example, picard, render
from toricauto.lattice import IntMatrix, cokernel
from toricauto.neg2 import chain_decomposition, minus_two_set

f = paper_example()
print("rays:", f.rays)
print("self-intersections:", f.profile)

dec = chain_decomposition(f)
print("chains:", dec.chains, dec.types)

pic = picard(f)
for lab in (1, 2):
    print(f"D_{lab} ~ {pic.format_class(pic.ray_class(lab))}")

# the -2-classes span a sublattice of index 2 in its saturation
cols = [pic.ray_classes[i - 1] for i in minus_two_set(f)]
print("Pic / Pic_Delta =", cokernel(IntMatrix.from_columns(cols, pic.rank)))

print()
print(render(analyze(f)))
