"""Two relatives of the same magnitude curve.

Replacing z by 1/z flips the poles to their reciprocals and flips the causal
impulse response into an alternating copy of the sequence; on the unit circle
the magnitude is untouched.  The minimum-phase relative moves both poles
inside the unit circle: it keeps the magnitude *shape* only up to a ratio
that swings between phi^-3 and phi^3, but its impulse response finally decays.
"""
from fiblti import (
    compare_magnitudes,
    enumerate_rocs,
    fibonacci_system,
    inverse_z,
    min_phase_impulse,
    min_phase_system,
    partial_fractions,
    reciprocal_system,
)

fs = fibonacci_system()
flipped = reciprocal_system(fs)
print("original :", fs)
print("reciprocal:", flipped)

print("\nreciprocal poles (the inverses of phi and its conjugate)")
for pole in flipped.poles():
    print(f"  z = {pole.value}  ~ {float(pole.value):+.6f}")

window = inverse_z(
    partial_fractions(flipped), enumerate_rocs(flipped.poles())[-1], 0, 9
)
print("\nreciprocal causal window [0, 9]:", window.to_ints())

match = compare_magnitudes(fs, flipped)
print(f"unit-circle magnitude difference: max {match.max_abs_diff:.3e} over {match.points} points")

mp = min_phase_system()
print("\nminimum-phase relative:", mp)
print("double pole:", [(str(p.value), p.multiplicity) for p in mp.poles()])

print("\nminimum-phase impulse response -n phi^-n (exact, then float)")
for n, v in min_phase_impulse(8).items():
    print(f"  n={n}: {str(v):>18}   ~ {float(v):+.6f}")
tail = min_phase_impulse(50).value_at(50)
print(f"  ... |h(50)| ~ {abs(float(tail)):.3e}  (finally, a decaying response)")

span = compare_magnitudes(mp, fs, points=513)
print("\nmagnitude ratio |H_min|/|H| across the grid:"
      f" {span.ratio_min:.6f} .. {span.ratio_max:.6f}")
print("  (= phi^-3 .. phi^3; the shapes agree only up to this swing)")
