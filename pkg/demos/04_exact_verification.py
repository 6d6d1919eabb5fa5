"""Cross-check the floating pipeline against exact rational arithmetic.

Newton-Cotes nodes are rational, so the whole analysis can be repeated in
exact Fractions and compared: weights, moments, principal moment, degree.
The same oracle shows the first negative Newton-Cotes weight (9 points)
and the exact principal moment at 17 points.
"""

import math
from fractions import Fraction

import quadlsq as q

print("exact Simpson analysis:")
rr = q.rational_pipeline([-1, 0, 1])
print("  weights:", rr.weights, " mu_Q:", rr.mu_Q, " degree:", rr.degree)

print("\nexact 4-node Clenshaw-Curtis set {-1, -1/2, 1/2, 1}:")
rr = q.rational_pipeline(["-1", "-1/2", "1/2", "1"])
print("  A rows:", *rr.A, sep="\n    ")
print("  c:", rr.c)
print("  weights:", rr.weights, " mu_Q:", rr.mu_Q)

print("\nfloat pipeline vs exact pipeline on Newton-Cotes, n = 2..17:")
for n in (2, 5, 9, 13, 17):
    ns = q.generate(q.FamilySpec(q.Family.NEWTON_COTES, n))
    fs = q.build_system(ns)
    sol = q.solve_rule(fs)
    exact = q.rational_pipeline(ns)  # float nodes taken as exact rationals
    worst = max(
        abs(w - float(e)) / abs(float(e)) for w, e in zip(sol.omega, exact.weights)
    )
    print(f"  n={n:2d}: degree {fs.degree} (exact {exact.degree}), "
          f"worst weight error {worst:.2e}, "
          f"mu_Q rel error {abs(fs.mu_Q - float(exact.mu_Q)) / abs(float(exact.mu_Q)):.2e}")

print("\nnegative weights enter at 9 points:")
for n in (8, 9, 10, 11):
    nodes = [Fraction(2 * (k - 1), n - 1) - 1 for k in range(1, n + 1)]
    rr = q.rational_pipeline(nodes)
    print(f"  n={n:2d}: min weight {float(min(rr.weights)):+.6f}")

nodes17 = [Fraction(k - 9, 8) for k in range(1, 18)]
rr = q.rational_pipeline(nodes17)
print("\nexact 17-point Newton-Cotes principal moment:")
print("  mu_Q =", rr.mu_Q, f"~ {float(rr.mu_Q):.6e}")
print("  alpha = mu_Q/18! =", float(rr.mu_Q / math.factorial(18)))
