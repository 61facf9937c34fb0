"""One transfer function, three sequences.

H(z) = 1/(1 - z^-1 - z^-2) has poles at phi and its conjugate, so the z-plane
splits into three annuli.  Each annulus is a different inverse transform: the
causal one grows like the sequence itself, the anticausal one alternates into
the past, and the two-sided one decays in both directions but is not causal.
"""
from fiblti import (
    enumerate_rocs,
    fibonacci_system,
    inverse_z,
    partial_fractions,
)

system = fibonacci_system()
print("system:", system)

print("\npoles")
for pole in system.poles():
    print(f"  z = {pole.value}  (~ {float(pole.value):+.6f}), multiplicity {pole.multiplicity}")

expansion = partial_fractions(system)
print("\npartial fractions (exact residues)")
for term in expansion.terms:
    print(f"  {term.coefficient}  /  (1 - ({term.pole.value}) z^-1)")

rocs = enumerate_rocs(system.poles())
print("\nregions of convergence")
for i, roc in enumerate(rocs):
    outer = "inf" if roc.r_out is None else str(roc.r_out)
    print(f"  [{i}] {roc.r_in} < |z| < {outer}   causal={roc.causal} stable={roc.stable}")

print("\ncausal window [0, 10] (the sequence, shifted by one)")
print(" ", inverse_z(expansion, rocs[2], 0, 10).to_ints())

print("\nanticausal window [-11, 0] (alternating, zero for n >= 0)")
print(" ", inverse_z(expansion, rocs[0], -11, 0).to_ints())

print("\ntwo-sided window [-4, 4] (exact field elements, decaying both ways)")
for n, v in inverse_z(expansion, rocs[1], -4, 4).items():
    print(f"  n={n:+d}: {str(v):>22}   ~ {float(v):+.6f}")
