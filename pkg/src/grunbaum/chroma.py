"""Exact chromatic numbers and detection of the critical six-chromatic
subgraphs that drive the torus dispatch."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .catalog import catalog_embedding
from .errors import ClassificationAnomaly
from .solver import Budget, _greedy_clique, color_vertices_k


def chromatic_number(adj: Sequence[set[int]], budget: Budget | None = None) -> int:
    """Exact chromatic number by iterative deepening.

    A greedy clique provides the starting point; each k is settled by an
    exhaustive DSATUR-ordered search, so the first feasible k is exact.
    """
    n = len(adj)
    if n == 0:
        return 0
    if not any(adj):
        return 1
    budget = budget or Budget()
    k = max(2, len(_greedy_clique(adj)))
    while True:
        if color_vertices_k(adj, k, budget=budget) is not None:
            return k
        k += 1


def complete_graph(n: int) -> list[set[int]]:
    return [set(range(n)) - {v} for v in range(n)]


def circulant(n: int, steps: Sequence[int]) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for v in range(n):
        for s in steps:
            adj[v].add((v + s) % n)
            adj[v].add((v - s) % n)
    return adj


def pattern_graph(name: str) -> list[set[int]]:
    """The five fixed patterns used by the dispatch."""
    key = name.upper().replace(" ", "")
    if key == "K6":
        return complete_graph(6)
    if key == "K7":
        return complete_graph(7)
    if key in ("C11^3", "C11CUBED", "C11_3"):
        return circulant(11, (1, 2, 3))
    if key in ("H7+K2", "H7K2"):
        return catalog_embedding("h7k2").adjacency()
    if key in ("C3+C5", "C3C5"):
        return catalog_embedding("c3c5").adjacency()
    raise ValueError(f"unknown pattern {name!r}")


@dataclass(frozen=True)
class SubgraphMatch:
    pattern: str
    mapping: tuple[int, ...]  # pattern vertex -> host vertex

    def to_json_dict(self) -> dict:
        return {"pattern": self.pattern, "mapping": list(self.mapping)}


def find_subgraph(
    host_adj: Sequence[set[int]],
    pattern,
    budget: Budget | None = None,
) -> SubgraphMatch | None:
    """First subgraph embedding of the pattern into the host, or None.

    Subgraph means every pattern edge maps to a host edge; extra host edges
    between images are allowed.  Backtracking with degree pruning; pattern
    vertices are matched most-constrained-first and host candidates tried in
    id order, so the first match is deterministic.
    """
    if isinstance(pattern, str):
        name, pat = pattern, pattern_graph(pattern)
    else:
        name, pat = "custom", [set(a) for a in pattern]
    np_, nh = len(pat), len(host_adj)
    if np_ > nh:
        return None
    budget = budget or Budget()

    pat_deg = [len(a) for a in pat]
    host_deg = [len(a) for a in host_adj]
    # order: start at max degree, then most-mapped-neighbours first
    order: list[int] = []
    placed = [False] * np_
    for _ in range(np_):
        best, best_key = -1, None
        for v in range(np_):
            if placed[v]:
                continue
            mapped_nbrs = sum(1 for w in pat[v] if placed[w])
            key = (mapped_nbrs, pat_deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed[best] = True

    mapping = [-1] * np_
    used = [False] * nh

    def candidates(pv: int):
        anchors = [w for w in pat[pv] if mapping[w] >= 0]
        if anchors:
            base = sorted(host_adj[mapping[anchors[0]]])
        else:
            base = range(nh)
        for hv in base:
            if used[hv] or host_deg[hv] < pat_deg[pv]:
                continue
            if all(mapping[w] in host_adj[hv] for w in pat[pv] if mapping[w] >= 0):
                yield hv

    def dfs(i: int) -> bool:
        if i == np_:
            return True
        budget.tick()
        pv = order[i]
        for hv in candidates(pv):
            mapping[pv] = hv
            used[hv] = True
            if dfs(i + 1):
                return True
            mapping[pv] = -1
            used[hv] = False
        return False

    if dfs(0):
        return SubgraphMatch(name, tuple(mapping))
    return None


# searched densest first: an early hit short-circuits the rest
PATTERN_ORDER = ("K7", "K6", "C11^3", "H7+K2", "C3+C5")
CRITICAL_PATTERNS = ("K6", "C3+C5", "H7+K2", "C11^3")


def classify_six_chromatic(
    host_adj: Sequence[set[int]], budget: Budget | None = None
) -> SubgraphMatch:
    """Which of the four critical six-chromatic graphs is contained.

    Exactly one must match on a six-chromatic torus graph; zero or several
    matches falsify the classification this package relies on and raise
    ClassificationAnomaly with the full evidence.  A host containing K7 is
    not six-chromatic and is rejected as a precondition violation.
    """
    budget = budget or Budget()
    if find_subgraph(host_adj, "K7", budget=budget) is not None:
        raise ValueError("host contains K7, so it is not six-chromatic")
    matches = [
        m
        for p in CRITICAL_PATTERNS
        if (m := find_subgraph(host_adj, p, budget=budget)) is not None
    ]
    if len(matches) != 1:
        raise ClassificationAnomaly(
            f"expected exactly one critical subgraph, found "
            f"{[m.pattern for m in matches]}"
        )
    return matches[0]
