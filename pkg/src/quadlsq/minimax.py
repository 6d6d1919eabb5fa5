"""Minimax (Chebyshev) solution of the fundamental system.

For a full-rank system of n+1 equations in n unknowns the minimax solution
follows from the least-squares one: the residual at the least-squares
weights is zero except for the last component -mu_Q, so with the convention
sign(0) = 1 the minimax solution z* solves A z - |mu_Q| v = c, i.e.

    z* = omega + tau,     A tau = |mu_Q| v,     v = [1, ..., 1]^T.

At z* every residual component has the same magnitude |mu_Q|: components
1..n equal +|mu_Q| and component n+1 equals -mu_Q.  The quantity

    eps = ||r(omega)||_2^2 / ||r(omega)||_1

must equal |mu_Q| as well; ``epsilon_check`` computes it from the actual
residual and faults if the identity is violated, since that would mean the
residual computation itself is broken.

z* is always derived through tau rather than by eliminating the (n+1)x(n+1)
system with eps unknown; the two are algebraically identical and the tau
route reuses the triangular solver.  The direct elimination lives in
:mod:`quadlsq.oracle` as an independent check.
"""

import numpy as np

from .ddouble import DD, as_dd
from .errors import SelfCheckError
from .system import (
    RuleSolution,
    _as_dd_vector,
    _freeze,
    _residual_dd,
    _solve_upper_dd,
    _weights_dd,
    residual_norms,
)

#: Relative tolerance of the eps = |mu_Q| self-check.
EPS_CHECK_RTOL = 1e-10


def _tau_dd(fs):
    n = fs.n
    rhs = [abs(as_dd(fs._c_tilde_dd[n]))] * n
    return _solve_upper_dd(fs._F_dd[:n], rhs)


def solve_tau(fs):
    """Correction vector: backward substitution on A tau = |mu_Q| v."""
    return _freeze([float(t) for t in _tau_dd(fs)])


def minimax_solution(fs, omega):
    """Minimax solution z* = omega + tau of the fundamental system."""
    omega = np.asarray(omega, dtype=float)
    return _freeze(omega + solve_tau(fs))


def solve_rule(fs):
    """Solve one rule end to end, keeping extended precision internally.

    Returns a :class:`RuleSolution` whose public vectors are doubles while
    the attached double-double copies feed residual formation, so the
    equioscillation structure survives down to |mu_Q| values near 1e-10.
    """
    w_dd = _weights_dd(fs)
    t_dd = _tau_dd(fs)
    z_dd = [w + t for w, t in zip(w_dd, t_dd)]
    omega = _freeze([float(w) for w in w_dd])
    tau = _freeze([float(t) for t in t_dd])
    return RuleSolution(
        omega=omega,
        z_star=_freeze(omega + tau),
        tau=tau,
        _omega_dd=tuple(w_dd),
        _tau_dd=tuple(t_dd),
        _z_dd=tuple(z_dd),
    )


def _vector_of(fs, x, attr):
    if isinstance(x, RuleSolution):
        return list(getattr(x, attr))
    if isinstance(x, (list, tuple)) and x and isinstance(x[0], DD):
        return list(x)
    return _as_dd_vector(x, fs.n)


def epsilon_check(fs, omega):
    """Minimax residual magnitude from the least-squares residual.

    Computes eps = ||r(omega)||_2^2 / ||r(omega)||_1 and cross-checks it
    against |mu_Q|; a relative mismatch beyond ``EPS_CHECK_RTOL`` raises
    :class:`SelfCheckError`.  ``omega`` may be a plain vector or a
    :class:`RuleSolution`.
    """
    w_dd = _vector_of(fs, omega, "_omega_dd")
    r = [float(v) for v in _residual_dd(fs, w_dd)]
    norms = residual_norms(r, (1, 2))
    eps = norms[2] ** 2 / norms[1]
    ref = abs(fs.mu_Q)
    if abs(eps - ref) > EPS_CHECK_RTOL * ref:
        raise SelfCheckError(
            f"epsilon self-check failed: ||r||_2^2/||r||_1 = {eps!r} "
            f"but |mu_Q| = {ref!r}; the residual computation is broken"
        )
    return eps


def equioscillation_residual(fs, z_star):
    """Residual at the minimax solution; every component has size |mu_Q|.

    ``z_star`` may be a plain vector or a :class:`RuleSolution` (preferred:
    its double-double copy keeps the components equal to |mu_Q| at full
    accuracy).  Components 1..n come out as +|mu_Q|, component n+1 as
    -mu_Q.
    """
    z_dd = _vector_of(fs, z_star, "_z_dd")
    return _freeze([float(v) for v in _residual_dd(fs, z_dd)])
