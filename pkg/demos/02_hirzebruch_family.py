"""Hirzebruch surfaces: where the conclusion changes with n.

F_0 and F_1 have no -2-curves, F_2 has one and the complement P exists,
F_n for n > 2 has a single -n-curve and nothing but standard
autoequivalences.
"""

from toricauto import analyze, hirzebruch

for n in range(7):
    r = analyze(hirzebruch(n))
    extra = f" P = <{', '.join(r.complement_text)}>" if r.complement_text else ""
    print(f"F_{n}: profile {r.profile}, {len(r.chains)} chain(s), {r.conclusion.value}{extra}")
