"""Bitmask graphs on up to 32 vertices.

A graph is stored as one adjacency bitmask per vertex, so every
neighborhood query is a couple of machine-word operations.  The edge list
is frozen at construction in (min endpoint, max endpoint) lexicographic
order; every certificate in this package refers to edges by index into
that list.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

MAX_VERTICES = 32

# vertex counts up to which the canonical labeling is cheap enough for bulk use
CANONICAL_SAFE_N = 12


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the first bad byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph; vertices are 0..n-1."""

    __slots__ = ("n", "adj", "edges", "_edge_index")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for {n} vertices")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj
        self.edges = tuple(
            (u, v) for u in range(n) for v in iter_bits(adj[u] >> (u + 1) << (u + 1))
        )
        self._edge_index = {e: i for i, e in enumerate(self.edges)}

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._edge_index[(u, v)]

    def spanning_subgraph(self, edge_indices: Iterable[int]) -> Graph:
        """Subgraph on the same vertex set keeping only the given edges."""
        return Graph.from_edges(self.n, [self.edges[i] for i in edge_indices])

    def induced(self, mask: int) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on the masked vertices, plus the old labels in order."""
        keep = tuple(iter_bits(mask))
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for v in keep:
            for u in iter_bits(self.adj[v] & mask):
                adj[pos[v]] |= 1 << pos[u]
        return Graph(len(keep), adj), keep

    def relabel(self, perm: Iterable[int]) -> Graph:
        """New graph where old vertex v becomes perm[v]."""
        perm = tuple(perm)
        adj = [0] * self.n
        for v in range(self.n):
            for u in iter_bits(self.adj[v]):
                adj[perm[v]] |= 1 << perm[u]
        return Graph(self.n, adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def degree_stats(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """(min degree, max degree, sorted degree sequence)."""
    degs = tuple(sorted(g.degree(v) for v in range(g.n)))
    return degs[0], degs[-1], degs


def _as_mask(g: Graph, vertices: int | Iterable[int]) -> int:
    m = vertices if isinstance(vertices, int) else mask_of(vertices)
    if m & ~g.vertex_mask:
        raise ValueError("vertex set references vertices outside the graph")
    return m


def cut_edges(g: Graph, side_a: int | Iterable[int], side_b: int | Iterable[int]) -> int:
    """Number of edges with one endpoint in each side; the sides must be disjoint."""
    a = _as_mask(g, side_a)
    b = _as_mask(g, side_b)
    if a & b:
        raise ValueError("cut sides overlap")
    return sum((g.adj[v] & b).bit_count() for v in iter_bits(a))


@dataclass(frozen=True)
class Bipartition:
    """Proper 2-coloring with the smaller side first (|X| <= |Y|)."""

    x_mask: int
    y_mask: int

    @property
    def sizes(self) -> tuple[int, int]:
        return self.x_mask.bit_count(), self.y_mask.bit_count()


def bipartition_of(g: Graph) -> Bipartition | None:
    """Two-color g if bipartite, else None.

    Sides are chosen per component so that |X| is as small as possible;
    the per-component choices are independent, so putting each
    component's smaller color class into X is exactly optimal.  Isolated
    vertices therefore land in Y.
    """
    color = [-1] * g.n
    x_mask = 0
    y_mask = 0
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        side = [1 << root, 0]
        while queue:
            v = queue.pop()
            for u in iter_bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    side[color[u]] |= 1 << u
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
        if side[1].bit_count() < side[0].bit_count():
            x_mask |= side[1]
            y_mask |= side[0]
        else:
            x_mask |= side[0]
            y_mask |= side[1]
    if x_mask.bit_count() > y_mask.bit_count():
        x_mask, y_mask = y_mask, x_mask
    return Bipartition(x_mask, y_mask)


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Relabeling permutation (old -> new) and the canonical graph6 string."""

    permutation: tuple[int, ...]
    graph6: str


def _refine(n: int, adj: tuple[int, ...], colors: tuple[int, ...]) -> tuple[int, ...]:
    # iterated degree refinement: split color classes by the multiset of
    # neighbor colors until the partition is equitable
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v]))))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(rank[sigs[v]] for v in range(n))
        if new == colors:
            return colors
        colors = new


def _labeling_key(n: int, adj: tuple[int, ...], order: list[int]) -> int:
    # upper-triangle adjacency bits of the relabeled graph, packed into an
    # int in graph6 column order; smaller key = smaller canonical string
    key = 0
    for j in range(1, n):
        vj = order[j]
        row = adj[vj]
        for i in range(j):
            key = key << 1 | (row >> order[i] & 1)
    return key


def canonical_form(g: Graph) -> CanonicalForm:
    """Isomorphism-invariant relabeling via individualization-refinement.

    Exhaustive over refinement-compatible labelings, with discovered
    automorphisms used to prune symmetric branches.  Exact at any size;
    intended for n <= CANONICAL_SAFE_N where it is uniformly fast.
    """
    n, adj = g.n, g.adj
    if n == 1:
        return CanonicalForm((0,), graph6_encode(g))

    init = _refine(n, adj, tuple(g.degree(v) for v in range(n)))

    best_key: int | None = None
    best_order: list[int] | None = None
    automorphisms: list[tuple[int, ...]] = []
    base: list[int] = []

    def same_orbit(v: int, tried: list[int]) -> bool:
        # is v equivalent to an already-tried candidate under some product of
        # discovered automorphisms that fix the current base pointwise?
        fixing = [a for a in automorphisms if all(a[b] == b for b in base)]
        if not fixing:
            return False
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in fixing:
            for w in range(n):
                rw, ra = find(w), find(a[w])
                if rw != ra:
                    parent[ra] = rw
        rv = find(v)
        return any(find(u) == rv for u in tried)

    def search(colors: tuple[int, ...]) -> None:
        nonlocal best_key, best_order
        cell: list[int] = []
        for c in sorted(set(colors)):
            members = [v for v in range(n) if colors[v] == c]
            if len(members) > 1:
                cell = members
                break
        if not cell:
            order = sorted(range(n), key=colors.__getitem__)
            key = _labeling_key(n, adj, order)
            if best_key is None or key < best_key:
                best_key = key
                best_order = order
            elif key == best_key:
                # equal keys expose an automorphism: the map sending the best
                # labeling's vertex at each position to this labeling's vertex
                assert best_order is not None
                phi = [0] * n
                for i, v in enumerate(best_order):
                    phi[v] = order[i]
                automorphisms.append(tuple(phi))
            return

        tried: list[int] = []
        for v in cell:
            # orbits must be recomputed per candidate: the previous child's
            # subtree may have discovered new automorphisms
            if same_orbit(v, tried):
                continue
            tried.append(v)
            base.append(v)
            individualized = tuple(
                (colors[u], 0 if u == v else 1) for u in range(n)
            )
            rank = {s: i for i, s in enumerate(sorted(set(individualized)))}
            search(_refine(n, adj, tuple(rank[s] for s in individualized)))
            base.pop()

    search(init)
    assert best_order is not None
    perm = [0] * n
    for new_label, v in enumerate(best_order):
        perm[v] = new_label
    canon = g.relabel(perm)
    return CanonicalForm(tuple(perm), graph6_encode(canon))


def brute_force_isomorphic(a: Graph, b: Graph) -> bool:
    """Isomorphism by trying every permutation; test oracle for tiny graphs."""
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    target = b.adj
    for perm in permutations(range(a.n)):
        ok = True
        for v in range(a.n):
            img = 0
            for u in iter_bits(a.adj[v]):
                img |= 1 << perm[u]
            if img != target[perm[v]]:
                ok = False
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    """Standard graph6 encoding (single-byte order; n <= 62 always holds here)."""
    out = [chr(g.n + 63)]
    buf = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            buf = buf << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(buf + 63))
                buf = 0
                nbits = 0
    if nbits:
        out.append(chr((buf << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode one graph6 line; raises Graph6Error with the offending byte offset."""
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    if text[0] == "~":
        raise Graph6Error("multi-byte vertex counts not supported (n <= 32)", 0)
    n = ord(text[0]) - 63
    if not 1 <= n <= 62:
        raise Graph6Error(f"bad vertex count byte {text[0]!r}", 0)
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds the {MAX_VERTICES} limit", 0)
    nbits = n * (n - 1) // 2
    body_len = (nbits + 5) // 6
    if len(text) != 1 + body_len:
        raise Graph6Error(
            f"expected {1 + body_len} bytes for n={n}, got {len(text)}",
            min(len(text), 1 + body_len),
        )
    adj = [0] * n
    bit = 0
    for pos, ch in enumerate(text[1:], start=1):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"byte {ch!r} outside graph6 alphabet", pos)
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if val >> shift & 1:
                    raise Graph6Error("nonzero padding bits", pos)
                continue
            if val >> shift & 1:
                # column-major upper triangle: recover (i, j) from bit rank
                i, j = _bit_to_pair(bit)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph(n, adj)


def _bit_to_pair(rank: int) -> tuple[int, int]:
    j = 1
    while j * (j + 1) // 2 <= rank:
        j += 1
    i = rank - j * (j - 1) // 2
    return i, j
