"""Search engines: exact edge-coloring backtracking and vertex coloring.

The backtracker in :func:`solve_exact` doubles as the brute-force oracle for
everything else in the package, so it stays deliberately simple: static edge
order (faces in breadth-first order over the dual from face 0, edge ids
inside a face), forced-move propagation on triangles, node/time budgets.
"""
from __future__ import annotations

import json
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .coloring import COLORS, EdgeColoring, PartialColoring
from .embedding import Embedding, dual_graph, trace_faces
from .errors import BudgetExceeded

FOUND = "FOUND"
UNSAT = "UNSAT"
UNKNOWN = "UNKNOWN"

DEFAULT_NODE_BUDGET = 10_000_000
DEFAULT_TIME_BUDGET = 30.0


@dataclass
class Budget:
    """Node and wall-clock limits shared by one solve."""

    nodes: int = DEFAULT_NODE_BUDGET
    seconds: float = DEFAULT_TIME_BUDGET
    used_nodes: int = 0
    started: float = field(default_factory=time.monotonic)

    def tick(self):
        self.used_nodes += 1
        if self.used_nodes > self.nodes:
            raise BudgetExceeded(f"node budget {self.nodes} exhausted")
        if self.used_nodes % 1024 == 0 and time.monotonic() - self.started > self.seconds:
            raise BudgetExceeded(f"time budget {self.seconds}s exhausted")

    def spawn(self) -> "Budget":
        return Budget(self.nodes, self.seconds)


@dataclass
class SolveReport:
    """Outcome of one solve: status, optional coloring, and a method trace."""

    status: str
    coloring: EdgeColoring | None = None
    method: str = "EXACT"
    trace: tuple[str, ...] = ()
    nodes: int = 0
    millis: float = 0.0

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_json(self, emb: Embedding | None = None) -> str:
        doc: dict = {
            "status": self.status,
            "method": self.method,
            "trace": list(self.trace),
            "stats": {"nodes": self.nodes, "millis": round(self.millis, 3)},
        }
        if self.coloring is not None and emb is not None:
            doc["coloring"] = [
                [u, v, self.coloring[e]] for e, (u, v) in enumerate(emb.edges)
            ]
        return json.dumps(doc)


def _edge_order(emb: Embedding, exempt: frozenset[int]) -> tuple[list[int], list[list[int]]]:
    """Static branching order plus, per edge, the constrained triangles on it."""
    fs = trace_faces(emb)
    dual = dual_graph(emb)
    active = [
        f for f in range(fs.num_faces) if fs.size(f) == 3 and f not in exempt
    ]
    # BFS over the dual from face 0
    order_faces: list[int] = []
    seen = {0} if fs.num_faces else set()
    queue = deque(seen)
    while queue:
        f = queue.popleft()
        order_faces.append(f)
        for g, _ in sorted(dual.adjacency[f], key=lambda t: t[1]):
            if g not in seen:
                seen.add(g)
                queue.append(g)

    edge_order: list[int] = []
    placed = set()
    for f in order_faces:
        for e in sorted(fs.face_edges(f)):
            if e not in placed:
                placed.add(e)
                edge_order.append(e)
    for e in range(emb.num_edges):
        if e not in placed:
            edge_order.append(e)

    faces_of_edge: list[list[int]] = [[] for _ in range(emb.num_edges)]
    for f in active:
        for e in fs.face_edges(f):
            faces_of_edge[e].append(f)
    return edge_order, faces_of_edge


def solve_exact(
    emb: Embedding,
    fixed: PartialColoring | None = None,
    mode: str = "find",
    exempt_faces: Iterable[int] = (),
    budget: Budget | None = None,
    on_solution: Callable[[EdgeColoring], None] | None = None,
):
    """Exhaustive backtracking over edge colors.

    Only triangular faces outside ``exempt_faces`` are constrained, which is
    exactly the partial-coloring rule: a disk is solved by exempting its
    outer face, an embedding with larger faces constrains just its triangles.

    mode "find" returns a SolveReport; "count" returns the number of total
    colorings; "enumerate" returns an iterator of EdgeColoring.
    """
    if mode not in ("find", "count", "enumerate"):
        raise ValueError(f"unknown mode {mode!r}")
    budget = budget or Budget()
    exempt = frozenset(exempt_faces)
    fs = trace_faces(emb)
    ne = emb.num_edges
    fixed = fixed or PartialColoring.empty(ne)
    if len(fixed) != ne:
        raise ValueError("fixed coloring has wrong edge count")

    edge_order, faces_of_edge = _edge_order(emb, exempt)
    face_edges = {f: tuple(fs.face_edges(f)) for f in range(fs.num_faces)}
    colors: list[int | None] = list(fixed.colors)

    def face_ok(f: int) -> bool:
        cs = [colors[e] for e in face_edges[f]]
        known = [c for c in cs if c is not None]
        return len(set(known)) == len(known)

    for f in range(fs.num_faces):
        if fs.size(f) == 3 and f not in exempt and not face_ok(f):
            # fixed colors already clash; UNSAT regardless of search
            if mode == "count":
                return 0
            if mode == "enumerate":
                return iter(())
            return SolveReport(UNSAT, nodes=0, millis=0.0)

    def propagate(e: int, trail: list[int]) -> bool:
        """Forced moves: a triangle with two colored edges forces the third."""
        stack = [e]
        while stack:
            cur = stack.pop()
            for f in faces_of_edge[cur]:
                es = face_edges[f]
                cs = [colors[x] for x in es]
                known = [c for c in cs if c is not None]
                if len(set(known)) != len(known):
                    return False
                if len(known) == 2:
                    missing = (0 + 1 + 2) - sum(known)  # type: ignore[arg-type]
                    idx = cs.index(None)
                    target = es[idx]
                    colors[target] = missing
                    trail.append(target)
                    stack.append(target)
        return True

    def search() -> Iterator[EdgeColoring]:
        pos = 0
        n_order = len(edge_order)
        stack: list[tuple[int, list[int], Iterator[int]]] = []

        def next_unassigned(p: int) -> int:
            while p < n_order and colors[edge_order[p]] is not None:
                p += 1
            return p

        # seed trail: propagate all fixed edges once
        seed_trail: list[int] = []
        for e in range(ne):
            if colors[e] is not None:
                if not propagate(e, seed_trail):
                    return
        pos = next_unassigned(0)
        if pos >= n_order:
            yield EdgeColoring(tuple(colors))  # type: ignore[arg-type]
            return
        stack.append((edge_order[pos], [], iter(COLORS)))
        while stack:
            e, trail, options = stack[-1]
            for t in trail:
                colors[t] = None
            trail.clear()
            chosen = None
            for c in options:
                budget.tick()
                colors[e] = c
                trail.append(e)
                if propagate(e, trail):
                    chosen = c
                    break
                for t in trail:
                    colors[t] = None
                trail.clear()
            if chosen is None:
                stack.pop()
                continue
            p2 = next_unassigned(0)
            if p2 >= n_order:
                yield EdgeColoring(tuple(colors))  # type: ignore[arg-type]
                # keep trail for undo, try next option of this frame
                continue
            stack.append((edge_order[p2], [], iter(COLORS)))
        return

    if mode == "enumerate":
        return search()
    t0 = time.monotonic()
    if mode == "count":
        n = 0
        for _ in search():
            n += 1
        return n
    try:
        for sol in search():
            report = SolveReport(
                FOUND,
                sol,
                nodes=budget.used_nodes,
                millis=1000 * (time.monotonic() - t0),
            )
            if on_solution:
                on_solution(sol)
            return report
        return SolveReport(
            UNSAT, nodes=budget.used_nodes, millis=1000 * (time.monotonic() - t0)
        )
    except BudgetExceeded as exc:
        return SolveReport(
            UNKNOWN,
            trace=(str(exc),),
            nodes=budget.used_nodes,
            millis=1000 * (time.monotonic() - t0),
        )


def count_grunbaum_colorings(emb: Embedding, budget: Budget | None = None) -> int:
    return solve_exact(emb, mode="count", budget=budget)  # type: ignore[return-value]


def solve_exact_split(
    emb: Embedding,
    fixed: PartialColoring | None = None,
    mode: str = "find",
    threads: int = 1,
    budget: Budget | None = None,
    exempt_faces: Iterable[int] = (),
):
    """Run solve_exact with the root branches split across worker threads.

    The first uncolored edge is pinned to each color and the three subtrees
    are explored independently; for "find" the lowest-color branch that
    succeeds wins, so results match the sequential order, and for "count"
    the subtree counts add up exactly.
    """
    budget = budget or Budget()
    if threads <= 1 or mode == "enumerate":
        return solve_exact(emb, fixed, mode, exempt_faces, budget)
    fixed = fixed or PartialColoring.empty(emb.num_edges)
    try:
        pivot = next(e for e in range(emb.num_edges) if fixed[e] is None)
    except StopIteration:
        return solve_exact(emb, fixed, mode, exempt_faces, budget)

    from concurrent.futures import ThreadPoolExecutor

    def run(color: int):
        return solve_exact(
            emb, fixed.recolored({pivot: color}), mode, exempt_faces, budget.spawn()
        )

    with ThreadPoolExecutor(max_workers=min(threads, len(COLORS))) as pool:
        results = list(pool.map(run, COLORS))
    if mode == "count":
        return sum(results)
    for report in results:
        if report.found:
            return report
    if any(r.status == UNKNOWN for r in results):
        unknown = next(r for r in results if r.status == UNKNOWN)
        return unknown
    return results[0]


# -- vertex coloring --------------------------------------------------------------


def _greedy_clique(adj: Sequence[set[int]]) -> list[int]:
    """Greedy clique seeded at the highest-degree vertex; lower bound only."""
    if not adj:
        return []
    order = sorted(range(len(adj)), key=lambda v: (-len(adj[v]), v))
    best: list[int] = []
    for start in order[: min(8, len(order))]:
        clique = [start]
        cands = set(adj[start])
        while cands:
            v = max(cands, key=lambda x: (len(adj[x] & cands), -x))
            clique.append(v)
            cands &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def color_vertices_k(
    adj: Sequence[set[int]],
    k: int,
    budget: Budget | None = None,
    seed_clique: Sequence[int] | None = None,
) -> list[int] | None:
    """Proper k-coloring by DSATUR-ordered backtracking, or None if impossible.

    Exhaustive: a None return is a proof that no k-coloring exists (within
    budget; BudgetExceeded propagates).  Ties break to higher degree, then
    lower id.  A clique may be pre-colored to cut color symmetry.
    """
    n = len(adj)
    budget = budget or Budget()
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    clique = list(seed_clique) if seed_clique is not None else _greedy_clique(adj)
    if len(clique) > k:
        return None

    assigned: list[int] = []

    def assign(v: int, c: int):
        colors[v] = c
        assigned.append(v)
        for w in adj[v]:
            neighbor_colors[w].add(c)

    def unassign(v: int):
        c = colors[v]
        colors[v] = -1
        assigned.pop()
        for w in adj[v]:
            if all(colors[x] != c for x in adj[w]):
                neighbor_colors[w].discard(c)

    for i, v in enumerate(clique):
        assign(v, i)

    def choose() -> int | None:
        best_v, best_key = None, None
        for v in range(n):
            if colors[v] != -1:
                continue
            key = (len(neighbor_colors[v]), len(adj[v]), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def backtrack() -> bool:
        budget.tick()
        v = choose()
        if v is None:
            return True
        used = neighbor_colors[v]
        used_count = len([c for c in range(k) if c in used])
        if used_count == k:
            return False
        max_new = min(k, (max(colors) if assigned else -1) + 2)
        for c in range(max_new):
            if c in used:
                continue
            assign(v, c)
            if backtrack():
                return True
            unassign(v)
        return False

    ok = backtrack()
    return list(colors) if ok else None


def four_color_vertices(
    adj: Sequence[set[int]], budget: Budget | None = None
) -> list[int] | None:
    """Proper coloring with at most four colors, or None when the chromatic
    number exceeds four (always succeeds on planar graphs)."""
    return color_vertices_k(adj, 4, budget=budget)
