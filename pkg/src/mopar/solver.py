"""Exact anti-Ramsey values ar(G, M_k) for matchings, with witness colorings.

A surjective c-coloring of E(G) without a rainbow k-matching is the same
thing as a partition of the edge set into c classes in which every
k-matching has two edges in one class.  The solver starts from the
all-singleton partition and branches on a violated k-matching (one whose
edges lie in k distinct classes), merging one of its class pairs per
child; the class count only decreases, giving the bound.  A transposition
table on the partition normal form removes merge-order symmetry.

An independent oracle enumerates every set partition of the edge list
(restricted-growth strings with rainbow pruning) for graphs with few
edges.
"""

from __future__ import annotations

import heapq
import json
import time
from collections import Counter, OrderedDict
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, graph6_encode, iter_bits
from .matchings import iterate_k_matchings, matching_number
from .rainbow import EdgeColoring

EXACT = "EXACT"
LOWER_BOUND = "LOWER_BOUND"

MAX_K = 8
BRUTE_FORCE_MAX_EDGES = 10

# deterministic cap on how many violated matchings the branching heuristic
# scores per node; the full set is still tracked for correctness
SELECT_SCAN = 16
# deterministic cap on how many violated matchings the greedy seed samples
# when counting class-pair frequencies
SEED_SAMPLE = 512


@dataclass
class ArResult:
    """Solver output: the witness always verifies at exactly `value` colors.

    mode EXACT means the value is proved optimal; LOWER_BOUND means a budget
    (or an explicit stop threshold) ended the search early and `value` is the
    best witnessed coloring so far.  For k = 1 no rainbow-free coloring
    exists at all, so value is 0 and the witness is None.
    """

    graph6: str
    k: int
    value: int
    mode: str
    witness: EdgeColoring | None
    nodes: int
    elapsed_ms: float

    def to_json(self) -> dict:
        data = {
            "graph": self.graph6,
            "k": self.k,
            "value": self.value,
            "mode": self.mode,
            "witness": None,
            "nodes": self.nodes,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.witness is not None:
            data["witness"] = {
                "graph": self.graph6,
                "k": self.k,
                "colors": list(self.witness.colors),
                "num_colors": self.witness.num_colors,
            }
        return data

    @staticmethod
    def from_json(data: dict) -> ArResult:
        witness = None
        if data["witness"] is not None:
            witness = EdgeColoring(
                tuple(data["witness"]["colors"]), data["witness"]["num_colors"]
            )
        return ArResult(
            data["graph"], data["k"], data["value"], data["mode"],
            witness, data["nodes"], data["elapsed_ms"],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _ms(start: float) -> float:
    # rounded at creation so serialized and in-memory results agree exactly
    return round((time.perf_counter() - start) * 1000.0, 3)


class _Budget(Exception):
    pass


class _Stop(Exception):
    pass


def _validate(g: Graph, k: int) -> None:
    if not 1 <= k <= MAX_K:
        raise ValueError(f"matching size {k} outside 1..{MAX_K}")
    if g.edge_count < 1:
        raise ValueError("graph has no edges")


def _all_distinct(m: int) -> EdgeColoring:
    return EdgeColoring(tuple(range(m)), m)


def ar_brute_force(g: Graph, k: int) -> int:
    """Maximum class count over all edge-set partitions in which every
    k-matching repeats a class; full enumeration, so e(G) must be small."""
    _validate(g, k)
    m = g.edge_count
    if m > BRUTE_FORCE_MAX_EDGES:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_MAX_EDGES} edges")
    matchings = list(iterate_k_matchings(g, k))
    if not matchings:
        return m
    if k == 1:
        return 0

    ending_at: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    for matching in matchings:
        ending_at[matching[-1]].append(matching)

    colors = [0] * m
    best = 1

    def assign(i: int, used: int) -> None:
        nonlocal best
        if used + (m - i) <= best:
            return
        if i == m:
            best = used
            return
        for c in range(used + 1):
            colors[i] = c
            if any(
                len({colors[e] for e in matching}) == k
                for matching in ending_at[i]
            ):
                continue
            assign(i + 1, used + (1 if c == used else 0))

    assign(0, 0)
    return best


def seed_incumbent(g: Graph, k: int) -> EdgeColoring:
    """Greedy rainbow-free coloring: repeatedly merge the class pair occurring
    in the most violated k-matchings (sampled deterministically)."""
    _validate(g, k)
    if k == 1:
        raise ValueError("every coloring has a rainbow 1-matching")
    m = g.edge_count
    matchings = list(iterate_k_matchings(g, k))
    cls = list(range(m))
    if not matchings:
        return _all_distinct(m)

    touch: dict[int, set[int]] = {e: set() for e in range(m)}
    for mid, matching in enumerate(matchings):
        for e in matching:
            touch[e].add(mid)
    msets = {e: frozenset(touch[e]) for e in range(m)}
    violated = set(range(len(matchings)))

    while violated:
        sample = heapq.nsmallest(SEED_SAMPLE, violated)
        freq: Counter[tuple[int, int]] = Counter()
        for mid in sample:
            roots = sorted({cls[e] for e in matchings[mid]})
            for pair in combinations(roots, 2):
                freq[pair] += 1
        (a, b), _ = min(freq.items(), key=lambda item: (-item[1], item[0]))
        satisfied = msets[a] & msets[b]
        violated -= satisfied
        msets[a] = msets[a] | msets[b]
        del msets[b]
        for e in range(m):
            if cls[e] == b:
                cls[e] = a
    return EdgeColoring.from_sequence(cls)


class _Search:
    def __init__(
        self,
        g: Graph,
        k: int,
        max_nodes: int | None,
        max_millis: float | None,
        floor: int,
        stop_at: int | None,
        tt_capacity: int,
    ):
        self.g = g
        self.k = k
        self.matchings = list(iterate_k_matchings(g, k))
        self.m = g.edge_count
        self.max_nodes = max_nodes
        self.max_millis = max_millis
        self.floor = floor
        self.stop_at = stop_at
        self.tt: OrderedDict[tuple[int, ...], None] = OrderedDict()
        self.tt_capacity = tt_capacity
        self.nodes = 0
        self.start = time.perf_counter()
        self.best_value = 0
        self.best_coloring: tuple[int, ...] | None = None
        self.tried: list[tuple[int, int]] = []

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.start) * 1000.0

    def _tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _Budget
        if (
            self.max_millis is not None
            and self.nodes % 128 == 0
            and self.elapsed_ms() > self.max_millis
        ):
            raise _Budget

    def _record(self, cls: list[int], count: int) -> None:
        if count > self.best_value:
            self.best_value = count
            self.best_coloring = tuple(cls)
            if self.stop_at is not None and count >= self.stop_at:
                raise _Stop

    def _select(self, cls: list[int], violated: set[int]) -> int:
        """Violated matching to branch on: fewest class pairs not yet tried
        on this path, ties by lexicographic matching order."""
        mapped = set()
        for x, y in self.tried:
            cx, cy = cls[x], cls[y]
            if cx != cy:
                mapped.add((cx, cy) if cx < cy else (cy, cx))
        if not mapped:
            return min(violated)  # every score ties; lexicographic first wins
        matchings = self.matchings
        best_mid = -1
        best_hits = -1
        for mid in heapq.nsmallest(SELECT_SCAN, violated):
            rset = {cls[e] for e in matchings[mid]}
            hits = 0
            for pa, pb in mapped:
                if pa in rset and pb in rset:
                    hits += 1
            if hits > best_hits:
                best_hits = hits
                best_mid = mid
        return best_mid

    def _prunable(self, cls: list[int], violated: set[int], need: int) -> bool:
        """True when at least `need` more merges are provably required.

        Greedy packing of violated matchings with pairwise disjoint class
        sets: a partition block resolving t of them holds >= 2t classes and
        so spends >= t merges, hence any feasible coarsening loses at least
        one class per packed matching.
        """
        matchings = self.matchings
        packed = 0
        used: set[int] = set()
        for mid in violated:
            mt = matchings[mid]
            for e in mt:
                if cls[e] in used:
                    break
            else:
                for e in mt:
                    used.add(cls[e])
                packed += 1
                if packed >= need:
                    return True
        return False

    def run(
        self,
        cls: list[int],
        members: list[int],
        msets: list[frozenset[int] | None],
        violated: set[int],
        count: int,
    ) -> None:
        # class labels are canonical (each class is named by its least edge),
        # so cls itself is the transposition-table key
        self._tick()
        key = tuple(cls)
        tt = self.tt
        if key in tt:
            tt.move_to_end(key)
            return
        tt[key] = None
        if len(tt) > self.tt_capacity:
            tt.popitem(last=False)

        if not violated:
            self._record(cls, count)
            return
        bound = max(self.best_value, self.floor)
        if count - 1 <= bound:
            return
        if self._prunable(cls, violated, count - bound):
            return

        mid = self._select(cls, violated)
        roots = sorted({cls[e] for e in self.matchings[mid]})
        mark = len(self.tried)
        for a, b in combinations(roots, 2):
            msa, msb = msets[a], msets[b]
            child_violated = violated - (msa & msb)
            if not child_violated:
                # feasible one merge away: record without building the child
                child_cls = list(cls)
                for e in iter_bits(members[b]):
                    child_cls[e] = a
                self._record(child_cls, count - 1)
                self.tried.append((a, b))
                continue
            if count - 2 <= max(self.best_value, self.floor):
                # the child could neither branch nor be a leaf
                self.tried.append((a, b))
                continue
            child_cls = list(cls)
            for e in iter_bits(members[b]):
                child_cls[e] = a
            child_members = list(members)
            child_members[a] = members[a] | members[b]
            child_members[b] = 0
            child_msets = list(msets)
            child_msets[a] = msa | msb
            child_msets[b] = None
            self.run(child_cls, child_members, child_msets, child_violated, count - 1)
            self.tried.append((a, b))
        del self.tried[mark:]


def ar_exact(
    g: Graph,
    k: int,
    *,
    max_nodes: int | None = None,
    max_millis: float | None = None,
    floor: int = 0,
    stop_at: int | None = None,
    tt_capacity: int = 1 << 17,
) -> ArResult:
    """Exact ar(G, M_k) with a verifying witness coloring.

    `floor` prunes the search below a known lower bound: the result is only
    EXACT if a witness at or above the floor was found (otherwise the best
    witnessed coloring is returned as LOWER_BOUND).  `stop_at` ends the
    search as soon as a coloring with that many classes is witnessed.
    Budgets degrade the mode to LOWER_BOUND, never to a wrong answer.
    """
    _validate(g, k)
    start = time.perf_counter()
    g6 = graph6_encode(g)
    m = g.edge_count

    if k == 1:
        return ArResult(g6, k, 0, EXACT, None, 0, _ms(start))
    if matching_number(g) < k:
        return ArResult(g6, k, m, EXACT, _all_distinct(m), 0, _ms(start))

    seed = seed_incumbent(g, k)
    if stop_at is not None and seed.num_colors >= stop_at:
        return ArResult(g6, k, seed.num_colors, LOWER_BOUND, seed, 0, _ms(start))
    search = _Search(g, k, max_nodes, max_millis, floor, stop_at, tt_capacity)
    search.best_value = seed.num_colors
    search.best_coloring = seed.colors
    search.start = start

    matchings = search.matchings
    touch: dict[int, set[int]] = {e: set() for e in range(m)}
    for mid, matching in enumerate(matchings):
        for e in matching:
            touch[e].add(mid)

    completed = False
    try:
        search.run(
            list(range(m)),
            [1 << e for e in range(m)],
            [frozenset(touch[e]) for e in range(m)],
            set(range(len(matchings))),
            m,
        )
        completed = True
    except (_Budget, _Stop):
        pass

    assert search.best_coloring is not None
    witness = EdgeColoring.from_sequence(search.best_coloring)
    exact = completed and search.best_value >= floor
    return ArResult(
        g6, k, search.best_value, EXACT if exact else LOWER_BOUND,
        witness, search.nodes, _ms(start),
    )
