"""Three routes to the same integers.

The recursion, the exact closed form over Q(sqrt(5)) and the index-doubling
engine all produce identical big integers; the closed form also reaches
negative indices.  The famous index 1729 gets special attention because the
sequence element there and the impulse-response element there differ by one
position, and their digit counts differ by one.
"""
from fiblti import (
    GOLDEN_RATIO,
    fib_binet_exact,
    fib_extended,
    fib_fast_doubling,
    fib_recursive,
)

print("opening listing, three engines")
print("  recursive:", [v.value for v in fib_recursive(0, 11)])
print("  closed   :", [fib_binet_exact(n) for n in range(11)])
print("  doubling :", [fib_fast_doubling(n) for n in range(11)])

print("\nnegative indices from the closed form (sign alternates)")
print(" ", {n: fib_binet_exact(n) for n in range(-6, 1)})

print("\ngolden-ratio powers decompose over consecutive elements")
for n in (10, -7):
    power = GOLDEN_RATIO**n
    print(f"  phi^{n} = {power}  =  f({n})*phi + f({n - 1})"
          f"  with f({n}) = {fib_extended(n)}, f({n - 1}) = {fib_extended(n - 1)}")

print("\nindex 1729: sequence element vs impulse-response element")
f_1729 = fib_fast_doubling(1729)
f_1730 = fib_fast_doubling(1730)
print(f"  f(1729) has {len(str(f_1729))} digits, leading {str(f_1729)[:10]}...")
print(f"  h(1729) = f(1730) has {len(str(f_1730))} digits, leading {str(f_1730)[:10]}...")
print("  (accounts quoting 362 digits for index 1729 mean the latter)")

print("\nindex 1789 appears in the same role in some accounts; both values:")
f_1789 = fib_fast_doubling(1789)
f_1790 = fib_fast_doubling(1790)
print(f"  f(1789) has {len(str(f_1789))} digits, leading {str(f_1789)[:10]}...")
print(f"  h(1789) = f(1790) has {len(str(f_1790))} digits, leading {str(f_1790)[:10]}...")
