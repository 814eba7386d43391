"""Domains of the d-regular tree T_d, stored intrinsically.

A domain is a finite subtree of T_d; up to isomorphism it is just an
abstract tree of maximum degree <= d, so we store (tree, d) rather than a
set of T_d vertices.  An explicit embedding into T_d addresses is provided
for verification and export.

Boundary notions for a domain D (vertex degrees are taken inside D):
  inner boundary     deg < d
  leaf boundary      deg == 1
  residual boundary  2 <= deg <= d-1
  outer boundary     the (d - deg) free slots of each boundary vertex;
                     its size always equals (d-2)|D| + 2
  branching excess   tau = sum over boundary vertices of (deg - 1),
                     defined for |D| >= 2 only
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadParameter,
    DegreeExceedsAmbient,
    DomainTooSmall,
    NotALeaf,
    SingletonDomain,
)
from .trees import FiniteTree, _ahu_codes, canonical_form, components, tree_centroids


class Domain:
    """A finite subtree of T_d: an abstract tree plus the ambient degree."""

    __slots__ = ("tree", "d", "_report")

    def __init__(self, tree, d):
        if not isinstance(d, int) or d < 2:
            raise BadParameter(f"ambient degree must be an integer >= 2, got {d!r}")
        if tree.max_degree > d:
            raise DegreeExceedsAmbient(
                f"tree has a vertex of degree {tree.max_degree} > d = {d}"
            )
        self.tree = tree
        self.d = d
        self._report = None

    @property
    def size(self):
        return self.tree.n

    def degree(self, v):
        return self.tree.degree(v)

    def canonical_key(self):
        """(d, canonical code): equal keys iff isomorphic domains of T_d."""
        return (self.d, canonical_form(self.tree))

    def __eq__(self, other):
        return (
            isinstance(other, Domain)
            and self.d == other.d
            and self.tree == other.tree
        )

    def __hash__(self):
        return hash((self.d, self.tree))

    def __repr__(self):
        return f"Domain(d={self.d}, n={self.tree.n})"


@dataclass(frozen=True)
class BoundaryReport:
    """All boundary data of a domain.

    tau is None for one-vertex domains (the invariant is undefined there,
    never reported as 0).  leaves/residual partition the boundary only for
    |D| >= 2; both are empty for the singleton.
    """

    boundary: frozenset
    leaves: frozenset
    residual: frozenset
    outer_size: int
    edge_boundary_size: int
    tau: int | None
    full: bool


def boundary_report(dom):
    """Compute the BoundaryReport of a domain (cached on the domain)."""
    if dom._report is not None:
        return dom._report
    t, d = dom.tree, dom.d
    boundary = frozenset(v for v in range(t.n) if t.degree(v) < d)
    if t.n >= 2:
        leaves = frozenset(v for v in boundary if t.degree(v) == 1)
        residual = boundary - leaves
        tau = sum(t.degree(v) - 1 for v in boundary)
    else:
        leaves = frozenset()
        residual = frozenset()
        tau = None
    outer_size = (d - 2) * t.n + 2
    by_degrees = sum(d - t.degree(v) for v in boundary)
    assert outer_size == by_degrees, "outer boundary identity violated"
    report = BoundaryReport(
        boundary=boundary,
        leaves=leaves,
        residual=residual,
        outer_size=outer_size,
        edge_boundary_size=by_degrees,
        tau=tau,
        full=(t.n >= 2 and not residual),
    )
    dom._report = report
    return report


def tau_closed(dom):
    """(d-1)|boundary| - (d-2)|D| - 2, the closed form of the excess."""
    if dom.size < 2:
        raise SingletonDomain("tau is undefined for one-vertex domains")
    rep = boundary_report(dom)
    value = (dom.d - 1) * len(rep.boundary) - (dom.d - 2) * dom.size - 2
    assert value == rep.tau
    return value


def is_full(dom):
    """True iff every boundary vertex is a leaf (|D| >= 2 required)."""
    if dom.size < 2:
        raise SingletonDomain("fullness is undefined for one-vertex domains")
    return boundary_report(dom).full


def full_condition_values(dom):
    """The seven equivalent fullness conditions, evaluated independently.

    Order: (a) boundary == leaves; (b) residual empty; (c) tau == 0;
    (d) (d-1)|boundary| == (d-2)|D| + 2 exactly; (e) optimal and
    |D| == 2 mod (d-1); (f) D minus its boundary is one nonempty component;
    (g) D == D1 union of outer boundary of D1, witnessed by D1 = D minus
    its boundary.
    """
    if dom.size <= 2:
        raise DomainTooSmall("the equivalence requires |D| >= 3")
    t, d = dom.tree, dom.d
    rep = boundary_report(dom)
    cond_a = rep.boundary == rep.leaves
    cond_b = not rep.residual
    cond_c = rep.tau == 0
    cond_d = (d - 1) * len(rep.boundary) == (d - 2) * dom.size + 2
    from .profile import is_optimal  # local import to avoid a module cycle

    cond_e = is_optimal(dom) and dom.size % (d - 1) == 2 % (d - 1)
    core_components = components(t, remove=rep.boundary)
    cond_f = len(core_components) == 1
    if cond_f:
        core = core_components[0]
        # every boundary vertex must be an outer neighbor of the core
        cond_g = all(
            any(w in core for w in t.adj[v]) for v in rep.boundary
        )
    else:
        cond_g = False
    return (cond_a, cond_b, cond_c, cond_d, cond_e, cond_f, cond_g)


def check_full_equivalences(dom):
    """True iff all seven fullness conditions agree (all hold or all fail)."""
    values = full_condition_values(dom)
    return all(values) or not any(values)


def remove_leaf(dom, v):
    """The domain with leaf v removed; ids above v shift down by one."""
    if dom.size < 2:
        raise SingletonDomain("cannot remove a vertex from a one-vertex domain")
    if dom.tree.degree(v) != 1:
        raise NotALeaf(f"vertex {v} has degree {dom.tree.degree(v)}")
    edges = [
        (u - (u > v), w - (w > v))
        for u, w in dom.tree.edges
        if v not in (u, w)
    ]
    return Domain(FiniteTree(dom.size - 1, edges), dom.d)


@dataclass(frozen=True)
class TdAddress:
    """A vertex of T_d as a digit path from a fixed root.

    The root is the empty path; its d neighbors carry first digits
    0..d-1, and every other vertex has d-1 children with digits 0..d-2
    plus its parent.
    """

    path: tuple

    def parent(self):
        if not self.path:
            raise BadParameter("the root address has no parent")
        return TdAddress(self.path[:-1])

    def child(self, digit):
        return TdAddress(self.path + (digit,))

    def neighbors(self, d):
        """All d adjacent addresses in T_d."""
        out = []
        if self.path:
            out.append(self.parent())
            out.extend(self.child(i) for i in range(d - 1))
        else:
            out.extend(self.child(i) for i in range(d))
        return out

    def __str__(self):
        return ".".join(str(x) for x in self.path)


def embed_in_Td(dom):
    """Adjacency-preserving injection of the domain into T_d addresses.

    Deterministic: the minimum-id centroid becomes the root (empty
    address); at every vertex, children receive digits in ascending order
    of their rooted subtree canonical code (ties by vertex id).
    """
    t = dom.tree
    root = min(tree_centroids(t.adj))
    parent, sub = _ahu_codes(t.adj, root)
    addresses = {root: TdAddress(())}
    queue = [root]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        kids = sorted(
            (c for c in t.adj[u] if c != parent[u]), key=lambda c: (sub[c], c)
        )
        base = addresses[u]
        for digit, c in enumerate(kids):
            addresses[c] = base.child(digit)
        queue.extend(kids)
    return addresses
