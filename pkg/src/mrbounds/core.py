"""Immutable labeled graphs with bitmask adjacency, graph6 io, named families.

Vertices are always 0..n-1.  Adjacency lives in a tuple of int bitmasks so that
deletion searches, traversals, and subgraph tests stay in plain integer land.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "CycleBasis",
    "FamilyError",
    "ForestDecomposition",
    "Graph",
    "Graph6Error",
    "classify",
    "complete_graph",
    "cycle_basis",
    "cycle_graph",
    "delete_vertices",
    "emit_graph6",
    "generalized_star",
    "generate_family",
    "parse_graph6",
    "path_graph",
    "star_graph",
    "sun_graph",
    "unicyclic_family",
    "wheel_graph",
]

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 input or unsupported size.

    ``offset`` is the position of the offending byte in the input record,
    counting from the start of the text as given (header included).
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class FamilyError(ValueError):
    """Unknown family kind or out-of-range family parameter."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``edges`` holds sorted pairs (i, j) with i < j; no loops, no multi-edges.
    Construct through :meth:`from_edges`, which normalizes and validates.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge ({u}, {v}) is not a sorted in-range pair")

    @staticmethod
    def from_edges(n: int, edges=()) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        return Graph(n, frozenset(norm))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Bitmask neighborhoods: bit v of adj[u] is set iff {u, v} is an edge."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def graph6(self) -> str:
        return emit_graph6(self).decode("ascii")


# ---------------------------------------------------------------------------
# bitmask helpers (shared by the other modules; masks index vertices 0..n-1)

def _bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _component_masks(adj, mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as masks."""
    comps = []
    rest = mask
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= adj[v] & rest
            frontier = grown & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _edge_count(adj, mask: int) -> int:
    total = 0
    for v in _bits(mask):
        total += (adj[v] & mask).bit_count()
    return total // 2


def _is_forest_mask(adj, mask: int) -> bool:
    # acyclic iff edges = vertices - components
    return _edge_count(adj, mask) == mask.bit_count() - len(_component_masks(adj, mask))


# ---------------------------------------------------------------------------
# structure classification

@dataclass(frozen=True)
class ForestDecomposition:
    """Connected components of a graph with a per-component shape tag.

    ``kinds[i]`` is "path" (connected, acyclic, max degree <= 2), "tree"
    (acyclic but not a path), or "cyclic".  Components keep original labels.
    """

    components: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]

    @property
    def is_forest(self) -> bool:
        return "cyclic" not in self.kinds

    @property
    def is_linear_forest(self) -> bool:
        return all(k == "path" for k in self.kinds)

    @property
    def p(self) -> int:
        return len(self.components)


def _decomposition_of_mask(adj, mask: int) -> ForestDecomposition:
    comps = []
    kinds = []
    for cm in _component_masks(adj, mask):
        vs = tuple(_bits(cm))
        e = _edge_count(adj, cm)
        if e >= len(vs):
            kind = "cyclic"
        elif all((adj[v] & cm).bit_count() <= 2 for v in vs):
            kind = "path"
        else:
            kind = "tree"
        comps.append(vs)
        kinds.append(kind)
    return ForestDecomposition(tuple(comps), tuple(kinds))


def classify(g: Graph) -> ForestDecomposition:
    """Split ``g`` into connected components tagged path / tree / cyclic."""
    return _decomposition_of_mask(g.adj, (1 << g.n) - 1)


def delete_vertices(g: Graph, s) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on V minus ``s``, plus the label map back to ``g``.

    Returns (subgraph, labels) where labels[i] is the original name of the
    subgraph's vertex i; the map is the order-preserving bijection.
    """
    s = frozenset(s)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    labels = tuple(v for v in range(g.n) if v not in s)
    index = {v: i for i, v in enumerate(labels)}
    edges = [(index[u], index[v]) for u, v in g.edges if u not in s and v not in s]
    return Graph.from_edges(len(labels), edges), labels


# ---------------------------------------------------------------------------
# cycle space

@dataclass(frozen=True)
class CycleBasis:
    """A fundamental cycle basis from a spanning forest.

    Each cycle is a vertex tuple tracing the tree path between the endpoints
    of one non-tree edge, so it contains exactly that non-tree edge; the
    basis has dimension m - n + k cycles (k = number of components).
    """

    forest_edges: frozenset[tuple[int, int]]
    nontree_edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]
    dimension: int


def cycle_basis(g: Graph) -> CycleBasis:
    adj = g.adj
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    tree_edges = set()
    for root in range(g.n):
        if root in parent:
            continue
        parent[root] = -1
        depth[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in _bits(adj[v]):
                if w not in parent:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    tree_edges.add((v, w) if v < w else (w, v))
                    stack.append(w)
    nontree = tuple(sorted(g.edges - tree_edges))
    cycles = []
    for u, v in nontree:
        # walk both endpoints up to their lowest common ancestor
        left, right = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            left.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            right.append(b)
        while a != b:
            a = parent[a]
            b = parent[b]
            left.append(a)
            right.append(b)
        cycles.append(tuple(left + right[-2::-1]))
    dim = g.m - g.n + len(_component_masks(adj, (1 << g.n) - 1))
    assert dim == len(cycles)
    return CycleBasis(frozenset(tree_edges), nontree, tuple(cycles), dim)


# ---------------------------------------------------------------------------
# graph6 interchange format
#
# Layout: byte n+63 for n <= 62, then the upper triangle of the adjacency
# matrix read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed
# big-endian into 6-bit groups, zero padded, each group emitted as group+63.

def emit_graph6(g: Graph) -> bytes:
    """Canonical graph6 encoding (no header, zero padding)."""
    if g.n > GRAPH6_MAX_N:
        raise Graph6Error(f"n={g.n} exceeds the supported graph6 size {GRAPH6_MAX_N}")
    out = [g.n + 63]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record, optionally prefixed by ">>graph6<<".

    Raises :class:`Graph6Error` naming the byte offset for malformed length,
    bytes outside 63..126, and nonzero padding bits.  Trailing newlines are
    tolerated.
    """
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    base = 0
    if data.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        data = data[base:]
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty graph6 record", offset=base)
    first = data[0]
    if first == 126:
        raise Graph6Error("multi-byte vertex counts (n > 62) are not supported", offset=base)
    if not 63 <= first <= 125:
        raise Graph6Error(f"vertex-count byte {first} outside 63..125", offset=base)
    n = first - 63
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[1:]
    if len(body) != expected:
        raise Graph6Error(
            f"expected {expected} adjacency bytes for n={n}, got {len(body)}",
            offset=base + 1 + min(len(body), expected),
        )
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    edges = []
    pos = 0
    for k, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"adjacency byte {byte} outside 63..126", offset=base + 1 + k)
        group = byte - 63
        for shift in range(5, -1, -1):
            bit = group >> shift & 1
            if pos < nbits:
                if bit:
                    edges.append(pairs[pos])
            elif bit:
                raise Graph6Error("nonzero padding bit", offset=base + 1 + k)
            pos += 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# named families
#
# Vertex numbering conventions are fixed so witness sets are reproducible:
# stars have center 0; wheels have the hub last; suns put the pendant of
# cycle vertex i at n+i; generalized stars chain each leg consecutively.

def path_graph(n: int) -> Graph:
    if n < 0:
        raise FamilyError("path needs n >= 0")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    if n < 2:
        raise FamilyError("star needs n >= 2")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise FamilyError("complete graph needs n >= 0")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def wheel_graph(n: int) -> Graph:
    """Cycle on 0..n-2 plus a dominating hub n-1."""
    if n < 4:
        raise FamilyError("wheel needs n >= 4")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph.from_edges(n, edges)

def sun_graph(n: int) -> Graph:
    """The n-sun: cycle 0..n-1 with pendant n+i attached to i (2n vertices)."""
    if n < 3:
        raise FamilyError("sun needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def generalized_star(legs: int = 3, leg_length: int = 2) -> Graph:
    """Center 0 with ``legs`` paths of ``leg_length`` edges chained off it."""
    if legs < 1 or leg_length < 1:
        raise FamilyError("generalized star needs legs >= 1 and leg_length >= 1")
    edges = []
    v = 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_length):
            edges.append((prev, v))
            prev = v
            v += 1
    return Graph.from_edges(v, edges)


def unicyclic_family(path_length: int = 5, chord_path_length: int = 2) -> Graph:
    """Path 0..p-1 with an extra path of given edge length joining vertices 1 and 3.

    The smallest member (p=5, chord 2) is the 6-vertex unicyclic graph used
    throughout the test corpus.
    """
    p, c = path_length, chord_path_length
    if p < 5:
        raise FamilyError("unicyclic family needs path_length >= 5")
    if c < 2:
        raise FamilyError("unicyclic family needs chord_path_length >= 2")
    edges = [(i, i + 1) for i in range(p - 1)]
    prev = 1
    for k in range(c - 1):
        edges.append((prev, p + k))
        prev = p + k
    edges.append((prev, 3))
    return Graph.from_edges(p + c - 1, edges)


# Fixed example graphs addressable through generate_family by their CLI kind.
_FIXED_EXAMPLES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    # 6-vertex unicyclic reference graph: P_5 plus a 2-edge chord path over
    # the second and fourth vertices (= unicyclic_family(5, 2))
    "fig1": (6, ((0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 5))),
    # 6-vertex H-shaped tree: two P_3 centers joined by an edge
    "fig3": (6, ((0, 1), (1, 2), (1, 4), (3, 4), (4, 5))),
    # 8 vertices, single 4-cycle 1-2-5-4 with a pendant path and pendants
    "fig4": (8, ((0, 1), (1, 2), (2, 6), (1, 4), (2, 5), (3, 4), (4, 5), (5, 7))),
}

_PARAMETRIC_KINDS = {
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "wheel": wheel_graph,
    "sun": sun_graph,
    "complete": complete_graph,
}


def generate_family(kind: str, n: int | None = None, **extra) -> Graph:
    """Build a member of a named family.

    Kinds: path, cycle, star, wheel, sun, complete (all take ``n``);
    genstar / generalized_star (extras: legs, leg_length; ``n`` ignored);
    unicyclic / unicyclic_family (extras: path_length defaulting to ``n``,
    chord_path_length defaulting to 2); fig1, fig3, fig4 (fixed graphs).
    """
    if kind in _PARAMETRIC_KINDS:
        if extra:
            raise FamilyError(f"kind {kind!r} takes no extra parameters")
        if n is None:
            raise FamilyError(f"kind {kind!r} needs n")
        return _PARAMETRIC_KINDS[kind](n)
    if kind in ("genstar", "generalized_star"):
        legs = extra.pop("legs", 3)
        leg_length = extra.pop("leg_length", 2)
        if extra:
            raise FamilyError(f"unknown parameters {sorted(extra)} for {kind!r}")
        return generalized_star(legs, leg_length)
    if kind in ("unicyclic", "unicyclic_family"):
        path_length = extra.pop("path_length", n if n is not None else 5)
        chord = extra.pop("chord_path_length", 2)
        if extra:
            raise FamilyError(f"unknown parameters {sorted(extra)} for {kind!r}")
        return unicyclic_family(path_length, chord)
    if kind in _FIXED_EXAMPLES:
        size, edges = _FIXED_EXAMPLES[kind]
        return Graph.from_edges(size, edges)
    raise FamilyError(f"unknown family kind {kind!r}")
