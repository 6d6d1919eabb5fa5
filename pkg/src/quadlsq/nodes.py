"""Node families on [-1, 1]: Newton-Cotes, Fejer (first rule),
Clenshaw-Curtis practical abscissas, Gauss-Legendre.

Every generator returns strictly increasing nodes whose multiset is exactly
invariant under x -> -x: the positive half is computed and mirrored, so the
odd extended-basis moments that vanish by symmetry are computed from data
that is symmetric to the last bit.

Clenshaw-Curtis is parameterized by the *total* node count so that all four
families share one "number of nodes" axis (the classical practical-abscissa
formula cos(k pi / m), k = 0..m, yields m+1 points).
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .basis import NodeSet
from .ddouble import DD
from .errors import ConvergenceError
from .poly import Interval

_NEWTON_MAX_ITER = 100
_NEWTON_XTOL = 1e-15
_NEWTON_PTOL = 1e-14


class Family(str, Enum):
    NEWTON_COTES = "newton_cotes"
    FEJER1 = "fejer1"
    CLENSHAW_CURTIS = "clenshaw_curtis"
    GAUSS_LEGENDRE = "gauss_legendre"
    CUSTOM = "custom"

    @classmethod
    def parse(cls, text):
        """Accept the usual short names (nc, f, cc, gl) as well."""
        key = str(text).strip().lower().replace("-", "_")
        aliases = {
            "nc": cls.NEWTON_COTES,
            "newton_cotes": cls.NEWTON_COTES,
            "f": cls.FEJER1,
            "fejer": cls.FEJER1,
            "fejer1": cls.FEJER1,
            "cc": cls.CLENSHAW_CURTIS,
            "clenshaw_curtis": cls.CLENSHAW_CURTIS,
            "gl": cls.GAUSS_LEGENDRE,
            "gauss": cls.GAUSS_LEGENDRE,
            "gauss_legendre": cls.GAUSS_LEGENDRE,
            "custom": cls.CUSTOM,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown family: {text!r}") from None


@dataclass(frozen=True)
class FamilySpec:
    """Which rule family to generate and how many nodes in total."""

    family: Family
    n: int = 0
    custom_nodes: tuple = None


def _mirrored(positive_desc, n):
    """Assemble an ascending, exactly symmetric node list.

    ``positive_desc`` holds the n//2 positive nodes in decreasing order.
    """
    out = [-v for v in positive_desc]
    if n % 2 == 1:
        out.append(0.0)
    out.extend(reversed(positive_desc))
    return out


def newton_cotes_nodes(n):
    """n equispaced nodes on [-1, 1] including both endpoints."""
    if n < 2:
        raise ValueError(f"unsupported count: closed Newton-Cotes needs n >= 2, got {n}")
    m = n - 1
    half = [(m - 2 * k) / m for k in range(n // 2)]
    return _mirrored(half, n)


def fejer1_nodes(n):
    """Zeros of the degree-n Chebyshev polynomial, sorted ascending."""
    if n < 1:
        raise ValueError(f"unsupported count: need n >= 1, got {n}")
    half = [math.cos((2 * k - 1) * math.pi / (2 * n)) for k in range(1, n // 2 + 1)]
    return _mirrored(half, n)


def clenshaw_curtis_nodes(n):
    """n practical abscissas cos(k pi / (n-1)), k = 0..n-1, sorted ascending."""
    if n < 2:
        raise ValueError(f"unsupported count: Clenshaw-Curtis needs n >= 2, got {n}")
    m = n - 1
    half = [1.0] + [math.cos(k * math.pi / m) for k in range(1, n // 2)]
    return _mirrored(half, n)


def _legendre_pair(k, x):
    """(P_k(x), P'_k(x)) by the three-term recurrence, plain doubles."""
    p0, p1 = 1.0, x
    for j in range(2, k + 1):
        p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
    if k == 0:
        return 1.0, 0.0
    dp = k * (p0 - x * p1) / (1.0 - x * x)
    return p1, dp


def _legendre_pair_dd(k, x):
    """Same recurrence carried in double-double; x is a DD."""
    p0, p1 = DD(1.0), x
    for j in range(2, k + 1):
        p0, p1 = p1, (p1 * x * (2 * j - 1) - p0 * (j - 1)) / j
    dp = (p0 - p1 * x) * k / (DD(1.0) - x * x)
    return p1, dp


def legendre_nodes(n):
    """Zeros of the Legendre polynomial P_n, sorted ascending.

    Newton iteration on the three-term recurrence from the asymptotic
    guesses cos(pi (4k-1) / (4n+2)), polished with two double-double steps
    so every root is correctly rounded, then mirrored for exact symmetry.
    Raises :class:`ConvergenceError` after 100 iterations on any root.
    """
    if n < 1:
        raise ValueError(f"unsupported count: need n >= 1, got {n}")
    half = []
    for k in range(1, n // 2 + 1):
        x = math.cos(math.pi * (4 * k - 1) / (4 * n + 2))
        dx = math.inf
        for _ in range(_NEWTON_MAX_ITER):
            p, dp = _legendre_pair(n, x)
            dx = p / dp
            x -= dx
            if abs(dx) < _NEWTON_XTOL:
                break
        else:
            raise ConvergenceError(f"no convergence for root {k} of P_{n}")
        x_dd = DD(x)
        for _ in range(2):
            p_dd, dp_dd = _legendre_pair_dd(n, x_dd)
            x_dd = x_dd - p_dd / dp_dd
        p_dd, _ = _legendre_pair_dd(n, x_dd)
        if not (abs(float(p_dd)) < _NEWTON_PTOL and abs(dx) < _NEWTON_XTOL):
            raise ConvergenceError(f"no convergence for root {k} of P_{n}")
        half.append(float(x_dd))
    half.sort(reverse=True)
    return _mirrored(half, n)


_GENERATORS = {
    Family.NEWTON_COTES: newton_cotes_nodes,
    Family.FEJER1: fejer1_nodes,
    Family.CLENSHAW_CURTIS: clenshaw_curtis_nodes,
    Family.GAUSS_LEGENDRE: legendre_nodes,
}


def generate(spec, interval=None):
    """NodeSet for a family spec, optionally mapped onto another interval.

    The families are defined on [-1, 1]; for a different interval the nodes
    are mapped affinely.  Custom nodes are taken verbatim.
    """
    interval = interval or Interval()
    if spec.family == Family.CUSTOM:
        if not spec.custom_nodes:
            raise ValueError("custom family needs custom_nodes")
        return NodeSet(tuple(float(t) for t in spec.custom_nodes), interval)
    nodes = _GENERATORS[spec.family](spec.n)
    if (interval.a, interval.b) != (-1.0, 1.0):
        mid = (interval.a + interval.b) / 2.0
        rad = (interval.b - interval.a) / 2.0
        nodes = [mid + rad * t for t in nodes]
    return NodeSet(tuple(nodes), interval)


def read_nodes_file(path):
    """Exact node values from a text file, one per line.

    Each line holds one decimal number or a ``num/den`` rational; ``#``
    starts a comment.  Values are returned as Fractions (exact) and must be
    strictly increasing.
    """
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                values.append(Fraction(text))
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"{path}:{lineno}: cannot parse node {text!r}") from None
    if not values:
        raise ValueError(f"{path}: no nodes found")
    for a, b in zip(values, values[1:]):
        if not a < b:
            raise ValueError(f"{path}: unordered nodes: {a} !< {b}")
    return values
