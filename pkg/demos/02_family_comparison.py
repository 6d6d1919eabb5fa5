"""Compare the four classical families at 17 nodes.

The principal moment measures the residual size of both the least-squares
and minimax solutions, so it ranks rules with equal node counts; the rule
angle measures how aligned the two solutions are, which tracks convergence
quality.  Gauss-Legendre wins on both, but the cosine-spaced families stay
remarkably close -- unlike Newton-Cotes, whose norms and angle blow up.
"""

import quadlsq as q

print(f"{'family':>14} {'d':>3} {'mu_Q':>12} {'angle':>12} "
      f"{'alpha':>12} {'N_omega':>10} {'tau_inf':>10}")
for family in (q.Family.NEWTON_COTES, q.Family.FEJER1,
               q.Family.CLENSHAW_CURTIS, q.Family.GAUSS_LEGENDRE):
    ns = q.generate(q.FamilySpec(family, 17))
    rep = q.build_report(ns, family=family.value)
    print(f"{rep.family:>14} {rep.degree:>3} {rep.mu_Q:>12.3e} "
          f"{rep.angle_deg:>12.4e} {rep.alpha:>12.3e} "
          f"{rep.N_omega:>10.4f} {rep.tau_inf:>10.3e}")

print("""
Reading the table:
 * Gauss-Legendre reaches degree 33 = 2n-1; the others stop at 17.
 * |mu_Q| spans six orders of magnitude between Newton-Cotes and
   Gauss-Legendre at the same node count.
 * The Newton-Cotes angle is ~4.6 degrees and its weight norm is ~117
   (negative weights!), while the three convergent families keep
   N_omega = 2 and angles well under a tenth of a degree.
""")
