"""Independent verification paths for the floating pipeline.

Four deliberately different routes to the same quantities:

* ``lsq_normal_equations`` -- least squares through the explicit normal
  system F^T F y = F^T c, solved by dense elimination.  Verification only:
  it squares the conditioning of A, which is exactly why the triangular
  route is the production path.
* ``degree_by_monomials`` -- degree of exactness straight from the
  definition, testing the rule against 1, x, x^2, ... monomial by monomial.
* ``rational_pipeline`` -- the entire basis/system/weights/degree pipeline
  re-run in exact arbitrary-precision rational arithmetic.
* ``direct_sis4_minimax`` -- the minimax solution from eliminating the full
  (n+1) x (n+1) system with the residual magnitude as an extra unknown,
  instead of the correction-vector route.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .basis import NodeSet
from .ddouble import ZERO
from .errors import SingularSystemError
from .system import _default_eps_deg

_MAGNITUDE_LIMIT = 2 ** 63


# ---------------------------------------------------------------------------
# exact rational pipeline
# ---------------------------------------------------------------------------

def _as_fraction(value):
    """Exact Fraction from an int, Fraction, string, (num, den) pair or float.

    Floats are converted exactly (every finite double is a binary rational);
    the resulting numerator/denominator must stay below 2**63 in magnitude,
    which every node family in scope satisfies.
    """
    if isinstance(value, Fraction):
        f = value
    elif isinstance(value, int):
        f = Fraction(value)
    elif isinstance(value, str):
        try:
            f = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"irrational nodes: cannot parse {value!r}") from None
    elif isinstance(value, tuple) and len(value) == 2:
        f = Fraction(value[0], value[1])
    elif isinstance(value, float):
        f = Fraction(value)
    else:
        raise ValueError(f"irrational nodes: unsupported node spec {value!r}")
    if abs(f.numerator) >= _MAGNITUDE_LIMIT or f.denominator >= _MAGNITUDE_LIMIT:
        raise ValueError(f"irrational nodes: {value!r} needs integers >= 2**63")
    return f


def _rat_mul_linear(coeffs, root):
    out = [Fraction(0)] * (len(coeffs) + 1)
    for k, c in enumerate(coeffs):
        out[k] -= root * c
        out[k + 1] += c
    return out


def _rat_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _rat_integrate(coeffs, a, b):
    total = Fraction(0)
    pa, pb = Fraction(1), Fraction(1)
    for k, c in enumerate(coeffs):
        pa *= a
        pb *= b
        if c:
            total += c * (pb - pa) / (k + 1)
    return total


@dataclass(frozen=True, eq=False)
class RationalRule:
    """Exact analysis of a rule with rational nodes; all entries Fractions."""

    nodes: tuple
    A: tuple
    c: tuple
    moments: tuple       # mu_0 .. mu_{2n}
    mu_Q: Fraction
    degree: int
    weights: tuple


def rational_pipeline(nodes, interval=(Fraction(-1), Fraction(1))):
    """Run basis construction, degree detection and the weight solve exactly.

    ``nodes`` may be a :class:`NodeSet` (its doubles are interpreted as the
    exact binary rationals they are) or a sequence of ints, Fractions,
    ``num/den`` / decimal strings, ``(num, den)`` pairs or floats.  Degree
    detection uses exact zero tests, so feeding rounded nodes of an
    irrational family verifies the floating pipeline on those exact inputs,
    not the ideal rule.
    """
    if isinstance(nodes, NodeSet):
        interval = (Fraction(nodes.interval.a), Fraction(nodes.interval.b))
        nodes = nodes.nodes
    ts = [_as_fraction(t) for t in nodes]
    for x, y in zip(ts, ts[1:]):
        if not x < y:
            raise ValueError(f"unordered nodes: {x} !< {y}")
    a, b = _as_fraction(interval[0]), _as_fraction(interval[1])
    n = len(ts)

    phis = [[Fraction(1)]]
    for j in range(1, n):
        phis.append(_rat_mul_linear(phis[-1], ts[j - 1]))
    qs = [_rat_mul_linear(phis[-1], ts[n - 1])]
    for j in range(n + 1, 2 * n + 1):
        r = j % n or n
        qs.append(_rat_mul_linear(qs[-1], ts[r - 1]))

    mom = [_rat_integrate(p, a, b) for p in phis]
    ext = [_rat_integrate(q, a, b) for q in qs]
    degree = mu_q = None
    for i, m in enumerate(ext):
        if m != 0:
            degree, mu_q = n + i - 1, m
            break

    A = [[_rat_eval(phis[i], ts[j]) if j >= i else Fraction(0) for j in range(n)]
         for i in range(n)]
    w = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = mom[i]
        for j in range(i + 1, n):
            s -= A[i][j] * w[j]
        w[i] = s / A[i][i]

    return RationalRule(
        nodes=tuple(ts),
        A=tuple(tuple(row) for row in A),
        c=tuple(mom),
        moments=tuple(mom) + tuple(ext),
        mu_Q=mu_q,
        degree=degree,
        weights=tuple(w),
    )


# ---------------------------------------------------------------------------
# dense eliminations
# ---------------------------------------------------------------------------

_PIVOT_FLOOR = 1e-30


def _lu_factor(M):
    """In-place LU with partial pivoting; returns (LU, pivot indices)."""
    M = np.array(M, dtype=float)
    n = M.shape[0]
    piv = np.arange(n)
    for k in range(n):
        p = k + int(np.argmax(np.abs(M[k:, k])))
        if abs(M[p, k]) < _PIVOT_FLOOR:
            raise SingularSystemError(f"numerically singular: pivot {M[p, k]!r}")
        if p != k:
            M[[k, p]] = M[[p, k]]
            piv[[k, p]] = piv[[p, k]]
        M[k + 1:, k] /= M[k, k]
        M[k + 1:, k + 1:] -= np.outer(M[k + 1:, k], M[k, k + 1:])
    return M, piv


def _lu_solve(lu, piv, b):
    n = lu.shape[0]
    x = np.asarray(b, dtype=float)[piv].copy()
    for i in range(1, n):
        x[i] -= lu[i, :i] @ x[:i]
    for i in range(n - 1, -1, -1):
        x[i] = (x[i] - lu[i, i + 1:] @ x[i + 1:]) / lu[i, i]
    return x


def _solve_dense(M, rhs):
    """Gaussian elimination with partial pivoting on a copy of (M, rhs)."""
    lu, piv = _lu_factor(M)
    return _lu_solve(lu, piv, rhs)


def lsq_normal_equations(fs):
    """Least-squares weights through the normal system F^T F y = F^T c.

    The Gram system is formed in double-double, eliminated with partial
    pivoting in doubles, then polished by iterative refinement against the
    extended-precision system.  Refinement is what keeps the squared
    conditioning of the normal equations from eating the whole double
    mantissa near n = 12 (plain elimination lands around 1e-7 there).
    """
    n = fs.n
    cols = list(zip(*fs._F_dd))
    gram_dd = [[_dd_dot(cols[i], cols[j]) for j in range(n)] for i in range(n)]
    rhs_dd = [_dd_dot(cols[i], fs._c_tilde_dd) for i in range(n)]
    gram = np.array([[float(e) for e in row] for row in gram_dd])
    rhs = np.array([float(e) for e in rhs_dd])

    lu, piv = _lu_factor(gram)
    y = _lu_solve(lu, piv, rhs)
    for _ in range(3):
        resid = np.array([
            float(rhs_dd[i] - _dd_dot(gram_dd[i], [float(v) for v in y]))
            for i in range(n)
        ])
        if not np.any(resid):
            break
        y = y + _lu_solve(lu, piv, resid)
    return y


def _dd_dot(xs, ys):
    acc = ZERO
    for x, v in zip(xs, ys):
        acc = acc + x * v
    return acc


def direct_sis4_minimax(fs):
    """Minimax solution by eliminating the system with eps as an unknown.

    Unknowns (z_1..z_n, eps); rows 1..n read  A_i z - eps = mu_{i-1}  and
    the last row  sign(mu_Q) eps = mu_Q, so eps comes out as |mu_Q| > 0.
    """
    n = fs.n
    M = np.zeros((n + 1, n + 1))
    M[:n, :n] = fs.A
    M[:n, n] = -1.0
    M[n, n] = 1.0 if fs.mu_Q >= 0 else -1.0
    x = _solve_dense(M, fs.c_tilde)
    return x[:n], float(x[n])


# ---------------------------------------------------------------------------
# degree straight from the definition
# ---------------------------------------------------------------------------

def degree_by_monomials(ns, weights, eps_deg=None):
    """Largest d <= 2n with Q(x^k) matching the exact moment for all k <= d.

    The exact monomial moments are computed from the interval endpoints as
    exact rationals, so on (-1, 1) odd k compares against 0 and even k
    against 2/(k+1).
    """
    ts = np.asarray(ns.nodes, dtype=float)
    w = np.asarray(weights, dtype=float)
    n = len(ts)
    a = Fraction(ns.interval.a)
    b = Fraction(ns.interval.b)
    eps = _default_eps_deg(float(b - a)) if eps_deg is None else float(eps_deg)
    powers = np.ones_like(ts)
    for k in range(2 * n + 1):
        if k > 0:
            powers = powers * ts
        approx = math.fsum(w * powers)
        exact = float((b ** (k + 1) - a ** (k + 1)) / (k + 1))
        if abs(approx - exact) > eps:
            return k - 1
    return 2 * n
