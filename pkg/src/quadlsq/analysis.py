"""Diagnostic parameters of a solved rule.

For each rule we report, alongside degree and principal moment:

* norm parameters N_omega = ||omega||_1 and N_z = ||z*||_1 -- boundedness of
  N_omega across n is necessary and sufficient for convergence of a family;
* the angle of the rule, arccos(|<z*, omega>| / (||z*||_2 ||omega||_2)),
  in degrees -- a convergent family has its least-squares and minimax
  solutions asymptotically aligned;
* the error coefficient alpha = c_n = mu_Q / (d+1)!, the constant in the
  smooth-integrand error formula E = alpha * f^(d+1)(xi);
* the conditioning-flavoured bounds
      Omega = ||A||_1 ||omega - z*||_1 / sqrt(n)      (|mu_Q| <= Omega)
      Gamma = ||z* - omega||_inf ||A||_inf / |mu_Q|   (1 <= Gamma <= cond_inf(A))
  with cond_inf(A) computed exactly from the explicit inverse (n stays
  small enough that O(n^3) is negligible, and an estimator would blur the
  ill-conditioning signal these bounds exist to expose).
"""

import math
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from .minimax import epsilon_check, equioscillation_residual, solve_rule
from .system import build_system, residual, residual_norms


@dataclass(frozen=True, eq=False)
class RuleReport:
    """All scalar diagnostics for one (family, n) pair."""

    family: str
    n: int
    degree: int
    mu_Q: float
    N_omega: float
    N_z: float
    angle_deg: float
    tau_inf: float
    alpha: float
    c_n: float
    Omega: float
    Gamma: float
    cond_inf_A: float
    residual_norms: MappingProxyType


def rule_angle(omega, z_star, degrees=True):
    """Angle between the weight vector and the minimax solution.

    The cosine |<z*, omega>| / (||z*||_2 ||omega||_2) is clamped to [-1, 1]
    before arccos.  Reported in degrees by convention; pass
    ``degrees=False`` for radians.
    """
    omega = np.asarray(omega, dtype=float)
    z_star = np.asarray(z_star, dtype=float)
    nw = np.linalg.norm(omega)
    nz = np.linalg.norm(z_star)
    if nw == 0.0 or nz == 0.0:
        raise ValueError("zero vector: the rule angle is undefined")
    cos = min(1.0, max(-1.0, abs(float(np.dot(omega, z_star))) / (nw * nz)))
    ang = math.acos(cos)
    return math.degrees(ang) if degrees else ang


def norm_params(omega, z_star):
    """1-norms (N_omega, N_z) of the two solutions."""
    return (
        float(np.sum(np.abs(np.asarray(omega, dtype=float)))),
        float(np.sum(np.abs(np.asarray(z_star, dtype=float)))),
    )


def error_coefficient(mu_Q, degree):
    """Error-formula constant alpha = c_n = mu_Q / (degree+1)!.

    For degree+1 > 20 the factorial goes through log-gamma with the sign
    carried separately, since (d+1)! overflows doubles at d >= 170 and the
    Gauss-Legendre rules in scope already need 34!.
    Returns the pair (alpha, c_n); the two names denote the same value.
    """
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if mu_Q == 0.0:
        return 0.0, 0.0
    if degree + 1 <= 20:
        value = mu_Q / math.factorial(degree + 1)
    else:
        value = math.copysign(
            math.exp(math.log(abs(mu_Q)) - math.lgamma(degree + 2)), mu_Q
        )
    return value, value


def _solve_upper_float(A, b):
    n = len(b)
    x = np.zeros(n)
    for i in range(n - 1, -1, -1):
        x[i] = (b[i] - A[i, i + 1:] @ x[i + 1:]) / A[i, i]
    return x


def cond_inf_upper(A):
    """cond_inf of an upper-triangular matrix via its explicit inverse."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    inv = np.empty((n, n))
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        inv[:, j] = _solve_upper_float(A, e)
    norm_a = float(np.max(np.sum(np.abs(A), axis=1)))
    norm_inv = float(np.max(np.sum(np.abs(inv), axis=1)))
    return norm_a * norm_inv


def bounds_omega_gamma(fs, omega, z_star):
    """The bounds (Omega, Gamma, cond_inf_A) for a solved rule."""
    omega = np.asarray(omega, dtype=float)
    z_star = np.asarray(z_star, dtype=float)
    diff = omega - z_star
    norm_a1 = float(np.max(np.sum(np.abs(fs.A), axis=0)))
    norm_ainf = float(np.max(np.sum(np.abs(fs.A), axis=1)))
    omega_bound = norm_a1 * float(np.sum(np.abs(diff))) / math.sqrt(fs.n)
    gamma = float(np.max(np.abs(diff))) * norm_ainf / abs(fs.mu_Q)
    return omega_bound, gamma, cond_inf_upper(fs.A)


def build_report(ns, family="custom", eps_deg=None, fs=None, solution=None):
    """Run the full pipeline on a node set and collect every diagnostic.

    ``fs`` and ``solution`` may be passed in when already computed (the
    command-line front end prints the vectors and reuses them here).
    """
    if fs is None:
        fs = build_system(ns, eps_deg=eps_deg)
    if solution is None:
        solution = solve_rule(fs)

    r_omega = residual(fs, list(solution._omega_dd))
    r_z = equioscillation_residual(fs, solution)
    norms_w = residual_norms(r_omega, (1, 2, 3, math.inf))
    norms = {
        "r_omega_1": norms_w[1],
        "r_omega_2": norms_w[2],
        "r_omega_3": norms_w[3],
        "r_omega_inf": norms_w[math.inf],
        "r_z_inf": residual_norms(r_z, (math.inf,))[math.inf],
        "epsilon": epsilon_check(fs, solution),
    }
    n_omega, n_z = norm_params(solution.omega, solution.z_star)
    alpha, c_n = error_coefficient(fs.mu_Q, fs.degree)
    omega_bound, gamma, cond = bounds_omega_gamma(fs, solution.omega, solution.z_star)

    return RuleReport(
        family=str(family),
        n=fs.n,
        degree=fs.degree,
        mu_Q=fs.mu_Q,
        N_omega=n_omega,
        N_z=n_z,
        angle_deg=rule_angle(solution.omega, solution.z_star),
        tau_inf=float(np.max(np.abs(solution.tau))),
        alpha=alpha,
        c_n=c_n,
        Omega=omega_bound,
        Gamma=gamma,
        cond_inf_A=cond,
        residual_norms=MappingProxyType(norms),
    )
