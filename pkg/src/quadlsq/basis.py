"""Node-dependent canonical basis and its extension past degree n-1.

Given ordered nodes t_1 < ... < t_n, the canonical basis is

    phi_0 = 1,            phi_j = phi_{j-1}(x) * (x - t_j),   1 <= j <= n-1,

so the zeros of phi_j are exactly t_1..t_j.  The basis is extended with

    q_n = phi_{n-1}(x) * (x - t_n),
    q_j = q_{j-1}(x) * (x - t_r),     r = j (mod n), residue taken in 1..n,

through degree 2n.  Every q_j vanishes at all n nodes, and since the degree
of exactness of an interpolatory rule is at most 2n-1, the first nonzero
moment among I(q_n)..I(q_2n) always exists, so carrying the extension one
index past 2n-1 guarantees degree detection terminates.
"""

from dataclasses import dataclass, field

from .poly import Interval, Polynomial


@dataclass(frozen=True)
class NodeSet:
    """Strictly increasing abscissas plus the integration interval.

    Nodes may lie outside the interval; only the ordering is required.
    """

    nodes: tuple
    interval: Interval = field(default_factory=Interval)

    def __post_init__(self):
        nodes = tuple(float(t) for t in self.nodes)
        if len(nodes) < 1:
            raise ValueError("a rule needs at least one node")
        for a, b in zip(nodes, nodes[1:]):
            if not a < b:
                raise ValueError(f"unordered nodes: {a!r} !< {b!r}")
        object.__setattr__(self, "nodes", nodes)

    @property
    def n(self):
        return len(self.nodes)


@dataclass(frozen=True)
class CanonicalBasis:
    """phis holds phi_0..phi_{n-1}; qs holds q_n..q_{2n}."""

    phis: tuple
    qs: tuple

    @property
    def n(self):
        return len(self.phis)

    def q(self, j):
        """The extended polynomial q_j, n <= j <= 2n."""
        return self.qs[j - self.n]


def _cyclic_node(nodes, j):
    """Node index r = j (mod n) mapped into 1..n, then the node t_r."""
    n = len(nodes)
    r = j % n
    if r == 0:
        r = n
    return nodes[r - 1]


def build_basis(ns):
    """Construct the canonical basis and its extension for a node set."""
    nodes = ns.nodes
    n = len(nodes)
    phis = [Polynomial([1.0])]
    for j in range(1, n):
        phis.append(phis[-1].mul_linear(nodes[j - 1]))
    qs = [phis[-1].mul_linear(nodes[n - 1])]
    for j in range(n + 1, 2 * n + 1):
        qs.append(qs[-1].mul_linear(_cyclic_node(nodes, j)))
    return CanonicalBasis(phis=tuple(phis), qs=tuple(qs))
