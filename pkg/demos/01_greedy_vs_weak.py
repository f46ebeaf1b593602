"""Greedy expansion versus its weak relatives, side by side.

The greedy rule picks the largest unit fraction strictly under the
residual.  A weak expansion may pick a smaller one, as long as it never
exceeds the greedy choice, and with a weakness level t the shortfall is
capped at the factor t.  Slowing down costs accuracy per term but keeps
the denominators from exploding.
"""
from fractions import Fraction

from unitfrac import WgaaPolicy, format_rational, greedy_expand, wgaa_expand

theta = Fraction(19, 48)
print(f"target theta = {format_rational(theta)}\n")

greedy = greedy_expand(theta, 6)
print("pure greedy:")
print("  b =", list(greedy.b))
print("  residual after 2 terms =", format_rational(greedy.residuals[1]))

weak = wgaa_expand(theta, WgaaPolicy.scaled(Fraction(4, 3)), 2,
                   last_greedy=True)
print("\nweakness 4/3, two terms, final term greedy:")
print("  b =", list(weak.b))
print("  residual =", format_rational(weak.residuals[-1]))

two_greedy = sum(Fraction(1, d) for d in greedy.b[:2])
two_weak = sum(Fraction(1, d) for d in weak.b)
print("\ntwo-term sums:")
print(f"  greedy {format_rational(two_greedy)} "
      f"= {float(two_greedy):.6f}")
print(f"  weak   {format_rational(two_weak)} "
      f"= {float(two_weak):.6f}")
assert two_greedy < two_weak < theta
print("  the weak pair lands closer to theta, from below")

print("\ndenominator growth over 10 terms:")
for t in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)):
    policy = WgaaPolicy.greedy() if t == 1 else WgaaPolicy.scaled(t)
    run = wgaa_expand(Fraction(7, 13), policy, 10)
    label = "greedy" if t == 1 else f"t = {format_rational(t)}"
    digits = len(str(run.b[-1]))
    print(f"  {label:8s} b_10 has {digits:4d} digits")
print("\ngreedy squares the denominators each step; any t > 1 tames the")
print("growth to a geometric ratio near t/(t-1).")
