"""Red/blue stem diagrams.

A stem diagram is a finite tree whose vertices are partitioned into red
and blue so that no two blues are adjacent and every leaf is blue.  The
trivial diagram is a single blue vertex.  Its branching excess tau* is the
sum of (degree - 1) over red vertices; a domain's excess tau equals the
tau* of its stem.

Key counting identities, asserted throughout:
    m + l = tau* + 1          (m blues, l red-red edges)
    tau*  = |G*| - 1 - chi(R) (chi(R) = #red components = r - l)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BadParameter,
    BlueBlueEdge,
    DegenerateColoring,
    NotARedRedEdge,
    RedDegreeOutOfRange,
    RedLeaf,
    TreeTooSmall,
)
from .trees import CanonicalCode, FiniteTree, _free_code, enumerate_trees, relabeled_tree

_RED, _BLUE = 114, 98  # color bytes in canonical codes ('r', 'b')


class StemDiagram:
    """A red/blue-colored tree satisfying the stem conditions."""

    __slots__ = ("tree", "red", "blue", "_code")

    def __init__(self, tree, red):
        red = frozenset(red)
        if not red <= set(range(tree.n)):
            raise BadParameter("red vertices out of range")
        blue = frozenset(range(tree.n)) - red
        for u, v in tree.edges:
            if u not in red and v not in red:
                raise BlueBlueEdge(f"blue vertices {u} and {v} are adjacent")
        for v in red:
            if tree.degree(v) <= 1:
                raise RedLeaf(f"red vertex {v} is a leaf")
        self.tree = tree
        self.red = red
        self.blue = blue
        self._code = None

    @property
    def trivial(self):
        return not self.red

    def color(self, v):
        return "red" if v in self.red else "blue"

    def canonical_key(self):
        """Code equal iff color-respecting isomorphic."""
        if self._code is None:
            colors = tuple(
                _RED if v in self.red else _BLUE for v in range(self.tree.n)
            )
            self._code = _free_code(self.tree.adj, colors)
        return CanonicalCode(self._code)

    def __eq__(self, other):
        return (
            isinstance(other, StemDiagram)
            and self.tree == other.tree
            and self.red == other.red
        )

    def __hash__(self):
        return hash((self.tree, self.red))

    def __repr__(self):
        return f"StemDiagram(n={self.tree.n}, r={len(self.red)}, m={len(self.blue)})"


def trivial_stem():
    """The single-blue-vertex diagram."""
    return StemDiagram(FiniteTree(1, []), red=())


@dataclass(frozen=True)
class StemCounts:
    r: int
    m: int
    l: int
    tau_star: int
    chi_red: int


def tau_star(sd):
    """Sum of (degree - 1) over red vertices; 0 for the trivial diagram."""
    return sum(sd.tree.degree(v) - 1 for v in sd.red)


def validate_stem(sd, d=None):
    """Re-check the diagram conditions and return its counts.

    With `d`, additionally require every red degree to lie in [2, d-1]
    (the admissibility bound for reconstruction data).
    """
    t = sd.tree
    for u, v in t.edges:
        if u in sd.blue and v in sd.blue:
            raise BlueBlueEdge(f"blue vertices {u} and {v} are adjacent")
    for v in sd.red:
        if t.degree(v) <= 1:
            raise RedLeaf(f"red vertex {v} is a leaf")
        if d is not None and not 2 <= t.degree(v) <= d - 1:
            raise RedDegreeOutOfRange(
                f"red vertex {v} has degree {t.degree(v)}, outside [2, {d - 1}]"
            )
    r = len(sd.red)
    m = len(sd.blue)
    l = sum(1 for u, v in t.edges if u in sd.red and v in sd.red)
    ts = tau_star(sd)
    chi_red = r - l
    assert m + l == ts + 1
    assert ts == t.n - 1 - chi_red
    return StemCounts(r=r, m=m, l=l, tau_star=ts, chi_red=chi_red)


def stem_from_tree(t):
    """Color a tree into a stem: leaves blue, everything else red.

    The red subgraph is connected, so the result has tau* = n - 2.
    Requires at least 3 vertices; on 2 both endpoints are leaves and the
    forced coloring has a blue-blue edge.
    """
    if t.n < 2:
        raise TreeTooSmall("need at least 2 vertices")
    if t.n == 2:
        raise DegenerateColoring(
            "both vertices of a 2-vertex tree are leaves; all-blue coloring is invalid"
        )
    red = tuple(v for v in range(t.n) if t.degree(v) >= 2)
    return StemDiagram(t, red)


def insert_blue(sd, red_edge):
    """Subdivide a red-red edge with a new blue vertex (id n).

    Preserves tau*: the blue count rises by one and the red-red edge count
    drops by one.
    """
    u, v = red_edge
    if u > v:
        u, v = v, u
    if u not in sd.red or v not in sd.red or (u, v) not in sd.tree.edges:
        raise NotARedRedEdge(f"({u}, {v}) is not a red-red edge of the diagram")
    n = sd.tree.n
    edges = [e for e in sd.tree.edges if e != (u, v)]
    edges.extend([(u, n), (v, n)])
    return StemDiagram(FiniteTree(n + 1, edges), sd.red)


@lru_cache(maxsize=None)
def enumerate_stems(tau_max, d=None):
    """One representative per color-respecting isomorphism class with
    tau* <= tau_max; with `d`, only diagrams whose red degrees fit [2, d-1].

    A nontrivial diagram with excess t has r <= t and m <= t + 1 vertices,
    so |G*| <= 2 tau_max + 1 and the search is finite: enumerate trees up
    to that size and try every coloring with leaves forced blue and blues
    pairwise non-adjacent.  Output is sorted by (tau*, size, code).
    """
    if not isinstance(tau_max, int) or tau_max < 0:
        raise BadParameter(f"tau_max must be a nonnegative integer, got {tau_max!r}")
    if d is not None and (not isinstance(d, int) or d < 2):
        raise BadParameter(f"d must be an integer >= 2, got {d!r}")
    found = {}

    def consider(tree, red):
        try:
            sd = StemDiagram(tree, red)
        except (BlueBlueEdge, RedLeaf):
            return
        ts = tau_star(sd)
        if ts > tau_max:
            return
        if d is not None and any(tree.degree(v) > d - 1 for v in red):
            return
        key = sd.canonical_key()
        if key not in found:
            found[key] = (ts, tree.n, canonical_stem(sd))

    consider(FiniteTree(1, []), ())
    for n in range(3, 2 * tau_max + 2):
        for tree in enumerate_trees(n, max_deg=n - 1):
            internal = [v for v in range(n) if tree.degree(v) >= 2]
            # leaves are forced blue; choose red subsets of the internals
            for mask in range(1 << len(internal)):
                red = tuple(
                    internal[i] for i in range(len(internal)) if mask >> i & 1
                )
                consider(tree, red)
    ordered = sorted(found.items(), key=lambda kv: (kv[1][0], kv[1][1], kv[0]))
    return tuple(sd for _, (_, _, sd) in ordered)


def stem_counts_by_tau(tau_max, d=None):
    """Mapping tau* -> number of isomorphism classes, for tau* <= tau_max."""
    out = {t: 0 for t in range(tau_max + 1)}
    for sd in enumerate_stems(tau_max, d):
        out[tau_star(sd)] += 1
    return out


def canonical_stem(sd):
    """The diagram relabeled into canonical form (stable across runs)."""
    colors = tuple(_RED if v in sd.red else _BLUE for v in range(sd.tree.n))
    tree, new_colors = relabeled_tree(sd.tree.adj, colors)
    red = tuple(v for v, c in enumerate(new_colors) if c == _RED)
    return StemDiagram(tree, red)
