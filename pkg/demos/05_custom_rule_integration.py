"""Analyze a custom rule from a node file and apply rules to integrands.

Shows the two remaining command-line entry points: `analyze` on a node
file (one decimal or num/den rational per line, # comments allowed), and
`integrate`, which evaluates Q_n(f) = sum w_i f(t_i) and reports the error
constant c_n = mu_Q/(d+1)! of the smooth-integrand error formula
E = c_n f^(d+1)(xi).
"""

import math
import pathlib
import tempfile

from quadlsq.cli import main

node_file = pathlib.Path(tempfile.mkdtemp()) / "simpson.txt"
node_file.write_text(
    "# Simpson's nodes\n"
    "-1\n"
    "0.0\n"
    "1/1   # rationals work too\n",
    encoding="utf-8",
)

print("== analyze a rule given only its nodes ==")
main(["analyze", "--family", "custom", "--nodes-file", str(node_file)])

print("\n== integrate polynomials: x^3 is exact (degree 3), x^4 is not ==")
main(["integrate", "--family", "custom", "--nodes-file", str(node_file),
      "--integrand", "poly:0,0,0,1"])
main(["integrate", "--family", "custom", "--nodes-file", str(node_file),
      "--integrand", "poly:0,0,0,0,1"])
print("   (true integral of x^4 is 2/5; the defect 2/3 - 2/5 = |mu_Q| = 4/15)")

print("\n== a smooth integrand with nearby poles: 1/(1+25x^2) ==")
truth = 0.4 * math.atan(5.0)
print(f"true value: {truth!r}")
for n in (10, 18, 26):
    print(f"gauss-legendre n={n}:")
    main(["integrate", "--family", "gl", "--n", str(n), "--integrand", "runge"])

print("\n== same rule on a shifted interval ==")
main(["integrate", "--family", "gl", "--n", "8", "--integrand", "expx",
      "--interval", "0", "1"])
print(f"   (true value e - 1 = {math.e - 1!r})")
