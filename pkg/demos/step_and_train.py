"""Driving the system with steps and impulse trains.

The step response has the closed form f(n+3) - 1: the sequence again, shifted
and lowered by one.  A finite train of impulses is the same input truncated,
so its response peels away from the step response once the train ends.
"""
from fiblti import (
    fibonacci_system,
    make_step,
    make_train,
    respond_closed_form,
    simulate_difference_equation,
    step_response_closed_form,
)

step = step_response_closed_form(8)
print("step response [0, 8]:", step.to_ints())
print("  (equals f(n+3) - 1 at every index; the sum meanders upward)")

sim = simulate_difference_equation(fibonacci_system(), make_step(9), 8)
print("recursion agrees    :", sim.to_ints())

print("\nweighted-sum closed form agrees too:",
      respond_closed_form(make_step(9), 8).to_ints())

print("\ntrains of 1, 2, 3 impulses vs the step")
for count in (1, 2, 3):
    train = make_train(count)
    response = simulate_difference_equation(fibonacci_system(), train, 8)
    print(f"  train({count}): {response.to_ints()}")
print("  step    :", step.to_ints())
print("  (each train matches the step until its last impulse, then lags)")
