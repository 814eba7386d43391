"""The exact inner vertex-isoperimetric profile of T_d.

All arithmetic is exact: ceilings are computed with integer division and
ratios are fractions.Fraction.  No floating point enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domain import Domain, boundary_report
from .errors import BadParameter
from .trees import FiniteTree


def profile_value(d, k):
    """Minimum boundary size of a k-vertex domain of T_d.

    Equals 1 for k = 1 and ceil(((d-2)k + 2) / (d-1)) for k >= 2.
    """
    if not isinstance(d, int) or d < 2:
        raise BadParameter(f"d must be an integer >= 2, got {d!r}")
    if not isinstance(k, int) or k < 1:
        raise BadParameter(f"k must be a positive integer, got {k!r}")
    if k == 1:
        return 1
    num = (d - 2) * k + 2
    return (num + (d - 2)) // (d - 1)


def is_optimal(dom):
    """True iff the domain attains the profile: |boundary| minimal for its size.

    Certified through the branching excess: a domain with at least two
    vertices is optimal iff tau <= d - 2; one-vertex domains are always
    optimal.
    """
    if dom.size == 1:
        return True
    return boundary_report(dom).tau <= dom.d - 2


@dataclass(frozen=True)
class EuclidSplit:
    """Parameters of the witness construction: k - 2 = (d-1)s - q."""

    s: int
    q: int


def euclid_split(d, k):
    """The (s, q) pair with s = ceil((k-2)/(d-1)) and q = (d-1)s - (k-2)."""
    if not isinstance(d, int) or d < 3:
        raise BadParameter(f"d must be an integer >= 3, got {d!r}")
    if not isinstance(k, int) or k < d + 1:
        raise BadParameter(f"k must be at least d + 1 = {d + 1}, got {k!r}")
    s = -((k - 2) // -(d - 1))
    q = (d - 1) * s - (k - 2)
    assert s >= 1 and 0 <= q < d - 1
    return EuclidSplit(s=s, q=q)


def witness(d, k):
    """A k-vertex domain of T_d attaining the profile value.

    For k <= d this is the path P_k.  Otherwise take a spine path of s
    vertices together with all its outer neighbors, then delete q of the
    last spine vertex's outer neighbors, where k - 2 = (d-1)s - q.  The
    trimmed neighbors are the highest-indexed ones, so the output is
    deterministic.
    """
    if not isinstance(d, int) or d < 2:
        raise BadParameter(f"d must be an integer >= 2, got {d!r}")
    if not isinstance(k, int) or k < 1:
        raise BadParameter(f"k must be a positive integer, got {k!r}")
    if k <= d:
        edges = [(i, i + 1) for i in range(k - 1)]
        return Domain(FiniteTree(k, edges), d)
    s = -((k - 2) // -(d - 1))
    q = (d - 1) * s - (k - 2)
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i in range(s):
        if s == 1:
            outer = d
        elif i in (0, s - 1):
            outer = d - 1
        else:
            outer = d - 2
        if i == s - 1:
            outer -= q  # trim the q highest-indexed outer neighbors
        for _ in range(outer):
            edges.append((i, nxt))
            nxt += 1
    assert nxt == k
    return Domain(FiniteTree(k, edges), d)


def ball(d, r):
    """The radius-r ball of T_d as a domain (r = 0 is a single vertex)."""
    if not isinstance(d, int) or d < 3:
        raise BadParameter(f"d must be an integer >= 3, got {d!r}")
    if not isinstance(r, int) or r < 0:
        raise BadParameter(f"r must be a nonnegative integer, got {r!r}")
    edges = []
    frontier = [0]
    nxt = 1
    for depth in range(r):
        new_frontier = []
        for v in frontier:
            children = d if depth == 0 else d - 1
            for _ in range(children):
                edges.append((v, nxt))
                new_frontier.append(nxt)
                nxt += 1
        frontier = new_frontier
    return Domain(FiniteTree(nxt, edges), d)


@dataclass(frozen=True)
class CheegerValues:
    """The three Cheeger constants of T_d; h_in is an exact rational."""

    h_in: Fraction
    h_out: int
    h_edge: int


def cheeger(d):
    """Inner, outer, and edge Cheeger constants of T_d."""
    if not isinstance(d, int) or d < 2:
        raise BadParameter(f"d must be an integer >= 2, got {d!r}")
    return CheegerValues(h_in=Fraction(d - 2, d - 1), h_out=d - 2, h_edge=d - 2)
