"""Blowing up and down, and the smooth toric Fano surfaces.

Random blow-up sequences keep every structural condition; the minimal model
undoes them.  The census lists fans up to lattice equivalence.
"""

import random

from toricauto import census, check_conditions, minimal_model
from toricauto.fan import random_blowup_fan

rng = random.Random(1)
for _ in range(5):
    f = random_blowup_fan(rng, max_rays=14)
    base, trace = minimal_model(f)
    cond = check_conditions(f)
    print(
        f"{len(f):2d} rays, chains {[len(c) for c in cond.chains]}, "
        f"torsion {list(cond.c5.torsion)}, base {base.profile} after {len(trace.steps)} blow-ups, "
        f"replay ok: {trace.replay() == f}"
    )

for max_rays in (5, 6):
    classes = census(max_rays, 2, "fano")
    print(f"Fano classes with at most {max_rays} rays: {len(classes)}")
    for cf in classes:
        print("   ", cf.profile)
