"""The magnitude response and its landmarks.

On the unit circle the denominator satisfies |1 - e^-jw - e^-2jw|^2
= 1 + 4 sin^2 w, so the magnitude is 1/sqrt(1 + 4 sin^2 w): value 1 at both
band edges, unique minimum 1/sqrt(5) at pi/2, half-power points at pi/6 and
5 pi/6.  Frequencies 0.2 pi and 0.8 pi, sometimes quoted as the landmarks,
do not satisfy the half-power condition; the demo shows the gap.
"""
import math

import numpy as np

from fiblti import (
    fibonacci_band_features,
    fibonacci_magnitude_law,
    fibonacci_system,
    freq_response,
)

grid = freq_response(fibonacci_system(), points=513)
law = fibonacci_magnitude_law(grid.omegas)
print(f"grid: {grid.points} points on [0, pi]  ({grid.note})")
print(f"max |grid - law| = {np.max(np.abs(grid.magnitude - law)):.3e}")

idx = int(np.argmin(grid.magnitude))
print(f"\nminimum on the grid: omega = {grid.omegas[idx]:.10f} (pi/2 = {math.pi / 2:.10f})")
print(f"value = {grid.magnitude[idx]:.12f} (1/sqrt(5) = {1 / math.sqrt(5):.12f})")

features = fibonacci_band_features()
lo, hi = features.half_power_omegas
print(f"\nhalf-power points: {lo:.10f} and {hi:.10f}  (= pi/6 and 5 pi/6)")
for w in (lo, hi):
    print(f"  |H({w:.4f})|^2 = {float(fibonacci_magnitude_law([w])[0] ** 2):.12f}")

print("\nthe often-quoted 0.2 pi and 0.8 pi are not half-power points:")
for w in (0.2 * math.pi, 0.8 * math.pi):
    value = float(fibonacci_magnitude_law([w])[0] ** 2)
    print(f"  |H({w:.4f})|^2 = {value:.6f}  (off the 0.5 mark by {abs(value - 0.5):.6f})")

print("\nselected grid rows (omega, magnitude, phase)")
for i in (0, 128, 256, 384, 512):
    print(f"  {grid.omegas[i]:.6f}  {grid.magnitude[i]:.10f}  {grid.phase[i]:+.10f}")
