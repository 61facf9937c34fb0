"""Cascading the system with itself.

A series connection multiplies transfer functions, so the pole multiset
doubles in multiplicity and stays exact.  The causal impulse response of the
cascade is the self-convolution of the original one; both routes produce the
same integers, and a third route through the exact recursion confirms them.
"""
from fiblti import (
    cascade,
    convolve,
    enumerate_rocs,
    fibonacci_system,
    inverse_z,
    make_impulse,
    partial_fractions,
    simulate_difference_equation,
)

fs = fibonacci_system()
doubled = cascade(fs, fs)
print("cascade:", doubled)
print("pole multiset:", [(str(p.value), p.multiplicity) for p in doubled.poles()])

window = inverse_z(
    partial_fractions(doubled), enumerate_rocs(doubled.poles())[-1], 0, 9
)
print("\ncascade impulse response [0, 9] :", window.to_ints())

h = simulate_difference_equation(fs, make_impulse(), 9)
self_conv = convolve(h, h)
print("direct self-convolution [0, 9]  :", self_conv.to_ints()[:10])

sim = simulate_difference_equation(doubled, make_impulse(), 9)
print("order-4 recursion [0, 9]        :", sim.to_ints())

print("\nresidues of the cascade (double poles need two terms each)")
for term in partial_fractions(doubled).terms:
    print(f"  order {term.order} at z = {term.pole.value}:  {term.coefficient}")
