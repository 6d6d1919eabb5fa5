"""The fundamental system of a rule and its least-squares solution.

Applying undetermined coefficients to the canonical basis gives an
overdetermined system F w = c of n+1 equations in the n weights:

    row i+1 (0 <= i <= n-1):  sum_j phi_i(t_j) w_j = mu_i,
    row n+1:                  0 = mu_Q,

where mu_i = integral of phi_i and mu_Q is the principal moment, the first
nonzero integral among the extended polynomials q_n..q_2n.  The top n rows
form an upper-triangular block A with nonzero diagonal, so the weights come
from plain backward substitution; that unique solution of A w = c is also
the least-squares solution of the full system, whose residual then has the
same norm |mu_Q| in every p-norm.

All matrix entries, moments and solves are carried in double-double and
rounded to doubles only at the public surface.  Residual norms, by contrast,
are plain-double reductions of the extended-precision residual components.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .basis import NodeSet, build_basis
from .ddouble import DD, ZERO, as_dd
from .errors import DegreeOverflowError, SingularDiagonalError

#: Relative zero threshold for degree detection, scaled by max(1, |mu_0|).
#: It must sit below the smallest genuine principal moment in scope
#: (Gauss-Legendre at 17 nodes: ~1.8e-10) and far above the double-double
#: noise floor of the moment accumulation (~1e-30).
DEFAULT_EPS_DEG = 1e-12


def _default_eps_deg(mu0):
    return DEFAULT_EPS_DEG * max(1.0, abs(mu0))


@dataclass(frozen=True, eq=False)
class FundamentalSystem:
    """F w = c_tilde for one node set, with the triangular block split out.

    ``moments`` holds mu_0..mu_{2n}: the canonical moments followed by all
    extended moments, kept so reports can show the full moment profile.
    """

    F: np.ndarray
    c_tilde: np.ndarray
    A: np.ndarray
    c: np.ndarray
    moments: np.ndarray
    mu_Q: float
    degree: int
    nodes: NodeSet
    eps_deg: float
    _F_dd: tuple = field(repr=False, default=())
    _c_tilde_dd: tuple = field(repr=False, default=())

    @property
    def n(self):
        return self.A.shape[0]


@dataclass(frozen=True, eq=False)
class RuleSolution:
    """Least-squares weights, minimax vector and the correction between them.

    ``z_star == omega + tau`` holds exactly at the double level by
    construction; the private double-double copies preserve the solves'
    full accuracy for residual formation.
    """

    omega: np.ndarray
    z_star: np.ndarray
    tau: np.ndarray
    _omega_dd: tuple = field(repr=False, default=())
    _tau_dd: tuple = field(repr=False, default=())
    _z_dd: tuple = field(repr=False, default=())


def _freeze(a):
    a = np.asarray(a, dtype=float)
    a.setflags(write=False)
    return a


def _extended_moments(ns, cb):
    """Double-double moments of q_n..q_{2n}."""
    return [q._integrate_dd(ns.interval) for q in cb.qs]


def _detect(ext_dd, n, eps):
    """First index j >= n with |mu_j| above the threshold."""
    for i, m in enumerate(ext_dd):
        if abs(float(m)) > eps:
            return n + i - 1, m
    raise DegreeOverflowError(
        f"degree overflow: no extended moment above {eps:g} through index {2 * n}; "
        "the zero threshold is misconfigured (degree <= 2n-1 is guaranteed)"
    )


def detect_degree(ns, cb, eps_deg=None):
    """Degree of exactness and principal moment of the rule on ``ns``.

    Scans mu_j = I(q_j) for j = n..2n and returns (j-1, mu_j) at the first
    moment whose magnitude exceeds the zero threshold.
    """
    n = ns.n
    mu0 = cb.phis[0].integrate(ns.interval)
    eps = _default_eps_deg(mu0) if eps_deg is None else float(eps_deg)
    degree, mu_dd = _detect(_extended_moments(ns, cb), n, eps)
    return degree, float(mu_dd)


def build_system(ns, cb=None, eps_deg=None):
    """Assemble the fundamental system for a node set.

    The basis is built on demand when ``cb`` is not supplied.  Raises
    :class:`DegreeOverflowError` if degree detection fails (only possible
    with a misconfigured ``eps_deg``).
    """
    if cb is None:
        cb = build_basis(ns)
    n = ns.n
    iv = ns.interval

    mom_dd = [phi._integrate_dd(iv) for phi in cb.phis]
    ext_dd = _extended_moments(ns, cb)
    eps = _default_eps_deg(float(mom_dd[0])) if eps_deg is None else float(eps_deg)
    degree, mu_q_dd = _detect(ext_dd, n, eps)

    F_dd = []
    F_dd.append(tuple(DD(1.0) for _ in range(n)))
    for i in range(1, n):
        phi = cb.phis[i]
        F_dd.append(tuple(
            phi._eval_dd(ns.nodes[j]) if j >= i else ZERO for j in range(n)
        ))
    F_dd.append(tuple(ZERO for _ in range(n)))
    c_tilde_dd = tuple(mom_dd) + (mu_q_dd,)

    F = _freeze([[float(e) for e in row] for row in F_dd])
    c_tilde = _freeze([float(m) for m in c_tilde_dd])
    moments = _freeze([float(m) for m in mom_dd] + [float(m) for m in ext_dd])

    return FundamentalSystem(
        F=F,
        c_tilde=c_tilde,
        A=_freeze(F[:n]),
        c=_freeze(c_tilde[:n]),
        moments=moments,
        mu_Q=float(mu_q_dd),
        degree=degree,
        nodes=ns,
        eps_deg=eps,
        _F_dd=tuple(F_dd),
        _c_tilde_dd=c_tilde_dd,
    )


def _solve_upper_dd(rows, rhs):
    """Backward substitution on an upper-triangular double-double system."""
    n = len(rhs)
    x = [ZERO] * n
    for i in range(n - 1, -1, -1):
        s = rhs[i]
        for j in range(i + 1, n):
            s = s - rows[i][j] * x[j]
        d = rows[i][i]
        if float(d) == 0.0:
            raise SingularDiagonalError(f"singular diagonal at row {i + 1}")
        x[i] = s / d
    return x


def _weights_dd(fs):
    n = fs.n
    return _solve_upper_dd(fs._F_dd[:n], list(fs._c_tilde_dd[:n]))


def solve_weights(fs):
    """Weights of the rule: backward substitution on A w = c.

    By construction this unique solution is also the least-squares solution
    of the full (n+1)-row system.
    """
    return _freeze([float(w) for w in _weights_dd(fs)])


def _as_dd_vector(x, n):
    """Coerce a vector (doubles or DD entries) to a DD list of length n."""
    if isinstance(x, RuleSolution):
        raise TypeError("pass solution.omega / solution.z_star, not the solution")
    xs = list(x)
    if len(xs) != n:
        raise ValueError(f"expected a vector of length {n}, got {len(xs)}")
    return [as_dd(v) for v in xs]


def _residual_dd(fs, x_dd):
    """r(x) = F x - c_tilde, formed in double-double."""
    n = fs.n
    r = []
    for i in range(n + 1):
        s = ZERO
        row = fs._F_dd[i]
        for j in range(min(i, n), n):  # row i has zeros left of column i
            s = s + row[j] * x_dd[j]
        r.append(s - fs._c_tilde_dd[i])
    return r


def residual(fs, x):
    """Residual vector F x - c_tilde (length n+1) for any candidate x.

    When ``x`` is a plain double vector the residual is exact for those
    doubles; the solver-side callers pass the internal double-double
    solutions so that the components that should vanish actually do, far
    below |mu_Q|.
    """
    if isinstance(x, (list, tuple)) and x and isinstance(x[0], DD):
        x_dd = list(x)
    else:
        x_dd = _as_dd_vector(x, fs.n)
    return _freeze([float(v) for v in _residual_dd(fs, x_dd)])


def residual_norms(r, p_list=(1, 2, 3, math.inf)):
    """p-norms of a residual vector, plain-double reductions.

    Returns a dict keyed by the requested p (use ``math.inf`` for the max
    norm).
    """
    r = np.asarray(r, dtype=float)
    out = {}
    for p in p_list:
        if p == math.inf:
            out[p] = float(np.max(np.abs(r))) if r.size else 0.0
        else:
            out[p] = float(np.sum(np.abs(r) ** p) ** (1.0 / p))
    return out
