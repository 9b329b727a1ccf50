"""Maximal outerplanar graphs as polygon triangulations.

A maximal outerplanar graph (MOP) of order n >= 3 is a triangulation of
the convex n-gon, so labeled enumeration is the Catalan recursion and
isomorphism collapses to the dihedral action on diagonal sets (the outer
Hamiltonian cycle is unique for n >= 4).  Outerplanarity of arbitrary
graphs is decided exactly through the forbidden minors K_4 and K_{2,3}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .graphs import Graph, canonical_form, bipartition_of, iter_bits

MAX_ENUM_N = 16
MAX_CORPUS_N = 9

K4 = "K4"
K23 = "K2,3"

TRIANGULATION_FORMAT_HEADER = "# polygon-triangulation-format 1"


@dataclass(frozen=True)
class Triangulation:
    """Triangulation of the convex polygon 0..n-1, stored as its diagonal set."""

    n: int
    diagonals: tuple[tuple[int, int], ...]

    def graph(self) -> Graph:
        cycle = [(i, (i + 1) % self.n) for i in range(self.n)]
        return Graph.from_edges(self.n, cycle + list(self.diagonals))

    def text(self) -> str:
        """One-line text form "n: i-j,i-j,..." (no diagonals for n=3)."""
        body = ",".join(f"{a}-{b}" for a, b in self.diagonals)
        return f"{self.n}: {body}" if body else f"{self.n}:"


def enumerate_triangulations(n: int) -> Iterator[Triangulation]:
    """Every triangulation of the convex n-gon exactly once (Catalan(n-2) total).

    Recursion roots at polygon edge {0,1}: choose the apex of the triangle
    on that edge, then triangulate the two sub-chains.  No deduplication is
    needed; distinct apex choices give distinct diagonal sets.
    """
    if not 3 <= n <= MAX_ENUM_N:
        raise ValueError(f"polygon size {n} outside 3..{MAX_ENUM_N}")

    def chords(chain: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        # chain is a run of polygon vertices; its first-last pair is the base
        # edge, already present.  Adjacent chain entries are polygon edges.
        m = len(chain)
        if m == 2:
            yield ()
            return
        for t in range(1, m - 1):
            new = []
            if t > 1:
                a, b = chain[0], chain[t]
                new.append((a, b) if a < b else (b, a))
            if t < m - 2:
                a, b = chain[t], chain[-1]
                new.append((a, b) if a < b else (b, a))
            for left in chords(chain[: t + 1]):
                for right in chords(chain[t:]):
                    yield tuple(new) + left + right

    base_chain = tuple(range(1, n)) + (0,)
    for diag in chords(base_chain):
        yield Triangulation(n, tuple(sorted(diag)))


def _dihedral_key(n: int, diagonals: Iterable[tuple[int, int]]) -> tuple:
    """Least image of the diagonal set under the 2n rotations/reflections."""
    diag = list(diagonals)
    best = None
    for r in range(n):
        for flip in (False, True):
            img = []
            for a, b in diag:
                x = (n - a + r) % n if flip else (a + r) % n
                y = (n - b + r) % n if flip else (b + r) % n
                img.append((x, y) if x < y else (y, x))
            img = tuple(sorted(img))
            if best is None or img < best:
                best = img
    return best


def enumerate_mops(n: int) -> list[Graph]:
    """One representative per isomorphism class of maximal outerplanar graphs.

    Representatives keep the polygon labeling (vertices 0..n-1 in outer-cycle
    order), taken from the first triangulation found in each dihedral class.
    """
    seen = set()
    out = []
    for tri in enumerate_triangulations(n):
        key = _dihedral_key(n, tri.diagonals)
        if key not in seen:
            seen.add(key)
            out.append(tri.graph())
    return out


def mop_count(n: int) -> int:
    return len(enumerate_mops(n))


# ---------------------------------------------------------------------------
# minors
# ---------------------------------------------------------------------------
#
# Both forbidden patterns have maximum degree 3, so a minor is present  iff a
# subdivision is: K_{2,3} reduces to two vertices joined by three internally
# disjoint paths of length >= 2, and K_4 to four branch vertices joined by six
# internally disjoint paths.  Witnesses are reassembled into disjoint
# connected branch sets (vertex bitmasks).


def _three_disjoint_paths(g: Graph, s: int, t: int) -> list[list[int]] | None:
    # unit vertex capacities via standard vertex splitting; the direct edge
    # s-t is ignored so every returned path has length >= 2
    n = g.n
    cap: dict[tuple[int, int], int] = {}

    def nodes_out(v: int) -> int:
        return 2 * v + 1

    def nodes_in(v: int) -> int:
        return 2 * v

    for v in range(n):
        cap[(nodes_in(v), nodes_out(v))] = 1 if v not in (s, t) else 3
    for u, v in g.edges:
        if {u, v} == {s, t}:
            continue
        cap[(nodes_out(u), nodes_in(v))] = 1
        cap[(nodes_out(v), nodes_in(u))] = 1

    flow: dict[tuple[int, int], int] = {}
    source, sink = nodes_out(s), nodes_in(t)

    def residual(a: int, b: int) -> int:
        return cap.get((a, b), 0) - flow.get((a, b), 0) + flow.get((b, a), 0)

    def augment() -> bool:
        prev = {source: source}
        queue = [source]
        while queue:
            a = queue.pop(0)
            if a == sink:
                break
            for b in range(2 * n):
                if b not in prev and residual(a, b) > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return False
        b = sink
        while b != source:
            a = prev[b]
            if flow.get((b, a), 0) > 0:
                flow[(b, a)] -= 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a
        return True

    found = 0
    while found < 3 and augment():
        found += 1
    if found < 3:
        return None

    # decompose the flow into three vertex-disjoint paths
    paths = []
    succ: dict[int, list[int]] = {}
    for (a, b), f in flow.items():
        if f > 0:
            succ.setdefault(a, []).append(b)
    for _ in range(3):
        path = [s]
        node = source
        while node != sink:
            node = succ[node].pop()
            if node % 2 == 0 and node != sink:
                path.append(node // 2)
        path.append(t)
        paths.append(path)
    return paths


def _find_k23(g: Graph) -> list[int] | None:
    for s, t in combinations(range(g.n), 2):
        paths = _three_disjoint_paths(g, s, t)
        if paths is not None:
            interiors = [sum(1 << v for v in p[1:-1]) for p in paths]
            return [1 << s, 1 << t] + interiors
    return None


def _enumerate_paths(g: Graph, s: int, t: int, banned: int) -> Iterator[int]:
    """Masks of simple s-t paths whose interior avoids `banned`."""
    t_bit = 1 << t

    def walk(v: int, used: int) -> Iterator[int]:
        if g.adj[v] >> t & 1:
            yield used | t_bit
        for u in iter_bits(g.adj[v] & ~banned & ~used & ~t_bit):
            yield from walk(u, used | 1 << u)

    yield from walk(s, 1 << s)


def _find_k4(g: Graph) -> list[int] | None:
    n = g.n
    pair_order = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    for quad in combinations(range(n), 4):
        qmask = sum(1 << v for v in quad)

        def connect(idx: int, used: int, interiors: dict[tuple[int, int], int]):
            if idx == 6:
                return dict(interiors)
            a, b = pair_order[idx]
            s, t = quad[a], quad[b]
            banned = (qmask & ~(1 << s) & ~(1 << t)) | (used & ~(1 << s) & ~(1 << t))
            for pmask in _enumerate_paths(g, s, t, banned):
                interior = pmask & ~(1 << s) & ~(1 << t)
                interiors[pair_order[idx]] = interior
                res = connect(idx + 1, used | pmask, interiors)
                if res is not None:
                    return res
                del interiors[pair_order[idx]]
            return None

        model = connect(0, qmask, {})
        if model is not None:
            # fold path interiors into branch sets: each path's interior is
            # absorbed by its lexicographically first endpoint's branch set
            sets = [1 << v for v in quad]
            for (a, _b), interior in model.items():
                sets[a] |= interior
            return sets
    return None


def find_minor(g: Graph, pattern: str) -> list[int] | None:
    """Branch-set witness (disjoint connected vertex masks) or None.

    For K_{2,3} the first two masks are the degree-3 side; for K_4 all four
    masks are pairwise adjacent.
    """
    if pattern == K4:
        return _find_k4(g)
    if pattern == K23:
        return _find_k23(g)
    raise ValueError(f"unsupported minor pattern {pattern!r}")


def has_minor(g: Graph, pattern: str) -> bool:
    return find_minor(g, pattern) is not None


def is_outerplanar(g: Graph) -> bool:
    """True iff g has neither a K_4 minor nor a K_{2,3} minor."""
    return not has_minor(g, K4) and not has_minor(g, K23)


# ---------------------------------------------------------------------------
# bipartite outerplanar corpus
# ---------------------------------------------------------------------------

def bipartite_outerplanar_corpus(n_max: int) -> Iterator[Graph]:
    """Every bipartite outerplanar graph of order 2..n_max, once per iso class.

    Every outerplanar graph of order n is a spanning subgraph of some MOP of
    order n, so the corpus is the bipartite edge subsets of all MOPs,
    deduplicated by canonical form.  Disconnected graphs and isolated
    vertices are included.
    """
    if not 2 <= n_max <= MAX_CORPUS_N:
        raise ValueError(f"corpus bound {n_max} outside 2..{MAX_CORPUS_N}")
    for n in range(2, n_max + 1):
        if n == 2:
            hosts = [Graph.from_edges(2, [(0, 1)])]
        else:
            hosts = enumerate_mops(n)
        seen: set[str] = set()
        for host in hosts:
            m = host.edge_count
            for subset in range(1 << m):
                sub = host.spanning_subgraph(
                    [i for i in range(m) if subset >> i & 1]
                )
                if bipartition_of(sub) is None:
                    continue
                key = canonical_form(sub).graph6
                if key not in seen:
                    seen.add(key)
                    yield sub
