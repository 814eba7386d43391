"""Abstract finite trees on integer vertex ids.

Provides validated tree construction, AHU-style canonical codes (with
optional vertex colors), isomorphism testing, connected components after
vertex removal, Euler characteristics of induced sub-forests, and
exhaustive generation of unlabeled degree-bounded trees.

Vertex ids are always the contiguous range 0..n-1.  All structures are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParameter, NotATree

VertexSubset = frozenset  # members are vertex ids of a host tree


class FiniteTree:
    """An unrooted tree on vertices 0..n-1, validated at construction."""

    __slots__ = ("n", "edges", "adj", "_code")

    def __init__(self, n, edges):
        if not isinstance(n, int) or n < 1:
            raise NotATree(f"vertex count must be a positive integer, got {n!r}")
        edge_set = set()
        adj = [[] for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise NotATree(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise NotATree(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in edge_set:
                raise NotATree(f"duplicate edge ({u}, {v})")
            edge_set.add((u, v))
            adj[u].append(v)
            adj[v].append(u)
        if len(edge_set) != n - 1:
            raise NotATree(f"a tree on {n} vertices needs {n - 1} edges, got {len(edge_set)}")
        # connectivity (n-1 edges + connected => acyclic)
        seen = bytearray(n)
        stack = [0]
        seen[0] = 1
        count = 1
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        if count != n:
            raise NotATree("graph is not connected")
        self.n = n
        self.edges = tuple(sorted(edge_set))
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self._code = None

    def degree(self, v):
        return len(self.adj[v])

    def neighbors(self, v):
        return self.adj[v]

    @property
    def max_degree(self):
        return max(len(a) for a in self.adj)

    def leaves(self):
        """Vertices of degree 1 (empty for the one-vertex tree)."""
        return tuple(v for v in range(self.n) if len(self.adj[v]) == 1)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteTree)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"FiniteTree(n={self.n}, edges={list(self.edges)})"


def new_tree(n, edges):
    """Validate and build a FiniteTree; raises NotATree on bad input."""
    return FiniteTree(n, edges)


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Total-order key identifying a (colored) tree up to isomorphism."""

    code: bytes


def tree_centers(adj):
    """The 1 or 2 middle vertices of the tree, by iterated leaf removal."""
    n = len(adj)
    if n == 1:
        return (0,)
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    removed = len(layer)
    while removed < n:
        nxt = []
        for u in layer:
            deg[u] = 0
            for v in adj[u]:
                if deg[v] > 0:
                    deg[v] -= 1
                    if deg[v] == 1:
                        nxt.append(v)
        removed += len(nxt)
        layer = nxt
    return tuple(sorted(layer))


def tree_centroids(adj):
    """The 1 or 2 vertices minimizing the largest component after removal."""
    n = len(adj)
    if n == 1:
        return (0,)
    size = [1] * n
    order = []
    parent = [-1] * n
    stack = [0]
    seen = bytearray(n)
    seen[0] = 1
    while stack:
        u = stack.pop()
        order.append(u)
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                parent[v] = u
                stack.append(v)
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    best = None
    out = []
    for v in range(n):
        heaviest = n - size[v]
        for c in adj[v]:
            if c != parent[v]:
                heaviest = max(heaviest, size[c])
        if best is None or heaviest < best:
            best = heaviest
            out = [v]
        elif heaviest == best:
            out.append(v)
    return tuple(sorted(out))


def _ahu_codes(adj, root, colors=None):
    """Per-vertex AHU codes for the tree rooted at `root`.

    Returns (parent, code) dicts.  With `colors` (sequence of small ints per
    vertex) the code respects the coloring, so equal codes mean
    color-preserving rooted isomorphism.
    """
    order = []
    parent = {root: -1}
    stack = [root]
    while stack:
        u = stack.pop()
        order.append(u)
        for v in adj[u]:
            if v != parent[u]:
                parent[v] = u
                stack.append(v)
    code = {}
    for u in reversed(order):
        kids = sorted(code[c] for c in adj[u] if c != parent[u])
        if colors is None:
            code[u] = b"(" + b"".join(kids) + b")"
        else:
            code[u] = bytes([colors[u]]) + b"(" + b"".join(kids) + b")"
    return parent, code


def rooted_code(adj, root, colors=None):
    """AHU code of the tree rooted at `root`; children sorted by code."""
    _, code = _ahu_codes(adj, root, colors)
    return code[root]


def _free_code(adj, colors=None):
    return min(rooted_code(adj, c, colors) for c in tree_centers(adj))


def canonical_form(t):
    """Canonical code of a FiniteTree, invariant under relabeling."""
    if t._code is None:
        t._code = _free_code(t.adj)
    return CanonicalCode(t._code)


def is_isomorphic(t1, t2):
    """True iff the two trees are isomorphic."""
    if t1.n != t2.n:
        return False
    return canonical_form(t1) == canonical_form(t2)


def canonical_relabeling(adj, colors=None):
    """Permutation old->position giving the canonical labeled form.

    Returns a list `order` where `order[new_id] = old_id`: BFS from the best
    center, visiting children in ascending subtree-code order.  Two
    isomorphic trees produce identical relabeled edge lists.
    """
    best_root = None
    best = None
    for c in tree_centers(adj):
        parent_c, code_c = _ahu_codes(adj, c, colors)
        if best is None or code_c[c] < best:
            best = code_c[c]
            best_root = c
            parent, code = parent_c, code_c
    out = []
    queue = [best_root]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        out.append(u)
        kids = sorted((c for c in adj[u] if c != parent[u]), key=lambda c: (code[c], c))
        queue.extend(kids)
    return out


def relabeled_tree(adj, colors=None):
    """FiniteTree in canonical labeling (plus relabeled colors if given)."""
    order = canonical_relabeling(adj, colors)
    pos = {old: new for new, old in enumerate(order)}
    edges = []
    for old_u, nbrs in enumerate(adj):
        for old_v in nbrs:
            if old_u < old_v:
                edges.append((pos[old_u], pos[old_v]))
    t = FiniteTree(len(adj), edges)
    if colors is None:
        return t
    return t, tuple(colors[old] for old in order)


def _rooted_level_sequences(n):
    """All canonical level sequences of rooted trees on n vertices.

    Successor rule: find the rightmost entry above 2, locate its parent's
    position, and repeat that block to the end.  Sequences appear in
    reverse lexicographic order, starting from the path.
    """
    if n == 1:
        yield (1,)
        return
    L = list(range(1, n + 1))
    while True:
        yield tuple(L)
        p = None
        for i in range(n - 1, -1, -1):
            if L[i] > 2:
                p = i
                break
        if p is None:
            return
        q = p - 1
        while L[q] != L[p] - 1:
            q -= 1
        for i in range(p, n):
            L[i] = L[i - (p - q)]


def _parents_from_levels(L):
    par = [-1] * len(L)
    last_at = {}
    for i, lv in enumerate(L):
        if lv > 1:
            par[i] = last_at[lv - 1]
        last_at[lv] = i
    return par


@lru_cache(maxsize=None)
def enumerate_trees(n, max_deg):
    """One representative per isomorphism class of trees on n vertices with
    maximum degree <= max_deg, in ascending canonical-code order.

    Representatives carry their canonical labeling, so repeated calls and
    different processes produce bit-identical output.
    """
    if not isinstance(n, int) or n < 1:
        raise BadParameter(f"n must be a positive integer, got {n!r}")
    if not isinstance(max_deg, int) or max_deg < 1:
        raise BadParameter(f"max_deg must be a positive integer, got {max_deg!r}")
    found = {}
    for L in _rooted_level_sequences(n):
        par = _parents_from_levels(L)
        deg = [0] * n
        ok = True
        for i, p in enumerate(par):
            if p >= 0:
                deg[i] += 1
                deg[p] += 1
                if deg[p] > max_deg:
                    ok = False
                    break
        if not ok:
            continue
        adj = [[] for _ in range(n)]
        for i, p in enumerate(par):
            if p >= 0:
                adj[i].append(p)
                adj[p].append(i)
        free = _free_code(adj)
        if free not in found:
            found[free] = relabeled_tree(adj)
    return tuple(found[free] for free in sorted(found))


def components(t, remove=frozenset()):
    """Connected components of t minus `remove`, ordered by minimum id."""
    remove = frozenset(remove)
    seen = set(remove)
    out = []
    for start in range(t.n):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for v in t.adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.add(v)
                    stack.append(v)
        out.append(frozenset(comp))
    return tuple(sorted(out, key=min))


def euler_char(t, subset):
    """|subset| minus induced edges: the component count of the sub-forest."""
    subset = frozenset(subset)
    induced = sum(1 for u, v in t.edges if u in subset and v in subset)
    return len(subset) - induced


def induced_subtree(t, vertices):
    """The induced subgraph on `vertices` as a FiniteTree plus the id map.

    Vertices are relabeled 0..k-1 in ascending original order; returns
    (tree, vertex_map) with vertex_map[new_id] = old_id.  Raises NotATree
    if the induced subgraph is not connected.
    """
    vmap = tuple(sorted(vertices))
    pos = {old: new for new, old in enumerate(vmap)}
    edges = [
        (pos[u], pos[v]) for u, v in t.edges if u in pos and v in pos
    ]
    return FiniteTree(len(vmap), edges), vmap
