"""End-to-end production of face-proper edge 3-colorings.

The torus dispatch mirrors the structure theory it implements: grids are
colored by their edge roles; 4-colorable graphs lift a vertex coloring;
hosts of K7 or of one of the four critical six-chromatic graphs are colored
by coloring the embedded subgraph compatibly with the triangulated disks in
its non-triangular faces and extending into the triangular ones; everything
else (the open five-chromatic territory) falls back to exhaustive search,
reported honestly as FOUND or UNKNOWN, never as a theory claim.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import catalog as cat
from .chroma import CRITICAL_PATTERNS, find_subgraph
from .coloring import (
    COLORS,
    EdgeColoring,
    PartialColoring,
    classify_hexagon,
    classify_pentagon,
    classify_square,
    kempe_change,
    tait_lift,
    verify_grunbaum,
)
from .embedding import (
    Disk,
    Embedding,
    FaceCycle,
    cap_with_apex,
    extract_disk,
    genus,
    is_triangulation,
    trace_faces,
)
from .errors import (
    BadParity,
    BudgetExceeded,
    ClassificationAnomaly,
    MixedTriple,
    NoTableEntry,
    NotAGridLabeling,
    NotARefinement,
    NotSimple,
    NotTriangulation,
    SideNotADisk,
)
from .isomorphism import embedding_isomorphisms
from .solver import FOUND, UNKNOWN, UNSAT, Budget, SolveReport, four_color_vertices, solve_exact

# -- grid coloring -----------------------------------------------------------------

_ROLE_COLOR = {"V": 0, "H": 1, "D": 2}


def altshuler_coloring(grid) -> EdgeColoring:
    """Color a labeled grid by edge role: vertical, horizontal, diagonal.

    Every triangular face of a grid has one edge of each role, so the role
    assignment is itself a valid coloring.
    """
    if not isinstance(grid, cat.GridTriangulation):
        raise NotAGridLabeling("input does not carry grid edge roles")
    coloring = EdgeColoring(tuple(_ROLE_COLOR[r] for r in grid.roles))
    report = verify_grunbaum(grid.embedding, coloring)
    if not report.ok:  # pragma: no cover - generator guarantees this
        raise NotAGridLabeling("edge roles are inconsistent with the faces")
    return coloring


# -- planar pipeline -----------------------------------------------------------------


def recognize_grid_coloring(emb: Embedding) -> tuple[EdgeColoring, str] | None:
    """Try to match a six-regular embedding with a generated grid.

    Grid parameters (rows, cols, twist) with rows*cols equal to the vertex
    count are tried in order; an embedding isomorphism transports the role
    coloring back.  Returns None when nothing matches, which for a genus-1
    triangulation means the input was not six-regular.
    """
    n = emb.num_vertices
    if any(emb.degree(v) != 6 for v in range(n)):
        return None
    for rows in range(1, n + 1):
        if n % rows:
            continue
        cols = n // rows
        for twist in range(cols):
            try:
                grid = cat.gen_altshuler(rows, cols, twist)
            except NotSimple:
                continue
            pair = next(embedding_isomorphisms(grid.embedding, emb), None)
            if pair is None:
                continue
            vmap, _rev = pair
            role_coloring = altshuler_coloring(grid)
            colors = [0] * emb.num_edges
            for e in range(grid.embedding.num_edges):
                u, v = grid.embedding.edge_ends(e)
                colors[emb.edge_id(vmap[u], vmap[v])] = role_coloring[e]
            coloring = EdgeColoring(tuple(colors))
            if verify_grunbaum(emb, coloring).ok:
                return coloring, f"T({rows},{cols},{twist})"
    return None


def solve_planar(emb: Embedding, budget: Budget | None = None) -> SolveReport:
    """Four-color the vertices, then lift to the edges."""
    if genus(emb) != 0:
        raise ValueError("solve_planar expects a genus-0 embedding")
    if not is_triangulation(emb):
        raise NotTriangulation("solve_planar expects a triangulation")
    budget = budget or Budget()
    try:
        vc = four_color_vertices(emb.adjacency(), budget=budget)
    except BudgetExceeded as exc:
        return SolveReport(UNKNOWN, trace=(str(exc),), nodes=budget.used_nodes)
    if vc is None:  # impossible for planar inputs; kept for honesty
        return SolveReport(UNSAT, trace=("chromatic number exceeds four",))
    coloring = tait_lift(emb, vc)
    assert verify_grunbaum(emb, coloring).ok
    return SolveReport(FOUND, coloring, method="TAIT", nodes=budget.used_nodes)


# -- disks ---------------------------------------------------------------------------


def extract_region(emb: Embedding, cycle: FaceCycle) -> Disk:
    """The disk bounded by the cycle, whichever side it lies on."""
    try:
        return extract_disk(emb, cycle, "interior")
    except SideNotADisk:
        return extract_disk(emb, cycle, "exterior")


def disk_edge_of_host(disk: Disk, host: Embedding, host_edge: int) -> int:
    u, v = host.edge_ends(host_edge)
    back = {h: i for i, h in enumerate(disk.to_host)}
    return disk.embedding.edge_id(back[u], back[v])


def _host_positions(disk: Disk, host: Embedding, cycle: FaceCycle) -> tuple[int, ...]:
    """Disk edge ids of the labeling cycle's edges, in labeling order."""
    back = {h: i for i, h in enumerate(disk.to_host)}
    out = []
    for d in cycle.darts:
        u, v = host.tail(d), host.head(d)
        out.append(disk.embedding.edge_id(back[u], back[v]))
    return tuple(out)


def apex_solve(disk: Disk, budget: Budget | None = None) -> PartialColoring:
    """Color a disk by capping it with an apex and solving the sphere.

    The restriction to the disk's own edges is returned; its boundary colors
    obey the parity forced by a separating cycle in the capped sphere.
    """
    capped = cap_with_apex(disk)
    report = solve_planar(capped, budget=budget)
    if not report.found:
        raise NoTableEntry(f"capped disk not solvable: {report.status}")
    emb = disk.embedding
    colors = []
    for u, v in emb.edges:
        colors.append(report.coloring[capped.edge_id(u, v)])
    return PartialColoring(tuple(colors))


@dataclass(frozen=True)
class BoundaryConstraint:
    """What a disk's boundary must look like, relative to a labeling cycle.

    ``positions`` are disk edge ids in labeling order.  Either ``fixed``
    pins exact colors or ``kinds`` names acceptable square signatures.
    """

    positions: tuple[int, ...]
    fixed: tuple[int, ...] | None = None
    kinds: frozenset[str] | None = None


_KIND_REPRESENTATIVE = {
    "A": (0, 1, 0, 1),
    "B1": (0, 0, 1, 1),
    "B2": (0, 1, 1, 0),
    "C": (0, 0, 0, 0),
}


def solve_disk(disk: Disk, constraint: BoundaryConstraint, budget: Budget | None = None):
    """Find an interior coloring meeting the boundary constraint.

    Exact solves with pinned boundary colorings are tried first (a square
    signature is determined by its exact colors up to one global color
    permutation, so one representative per kind decides achievability); if a
    kind set was given and no pin succeeds, a short walk over Kempe changes
    of an unconstrained coloring is tried before reporting UNSAT.

    Returns (SolveReport, achieved signature name or None).
    """
    budget = budget or Budget()
    emb = disk.embedding
    pins: list[tuple[str | None, tuple[int, ...]]] = []
    if constraint.fixed is not None:
        pins.append((None, constraint.fixed))
    if constraint.kinds is not None:
        for kind in sorted(constraint.kinds):
            pins.append((kind, _KIND_REPRESENTATIVE[kind]))
    last = SolveReport(UNSAT)
    for kind, pattern in pins:
        fixed = PartialColoring.from_dict(
            emb.num_edges, dict(zip(constraint.positions, pattern))
        )
        report = solve_exact(
            emb, fixed=fixed, exempt_faces=(disk.outer_face,), budget=budget.spawn()
        )
        if report.found:
            got = classify_square(
                [report.coloring[e] for e in constraint.positions]
            ).kind if len(constraint.positions) == 4 else None
            return report, got if kind is None else kind
        last = report
    if constraint.kinds is not None:
        base = solve_exact(emb, exempt_faces=(disk.outer_face,), budget=budget.spawn())
        if base.found:
            seen = set()
            frontier = [base.coloring]
            for _ in range(64):
                if not frontier:
                    break
                coloring = frontier.pop()
                key = coloring.colors
                if key in seen:
                    continue
                seen.add(key)
                try:
                    kind = classify_square(
                        [coloring[e] for e in constraint.positions]
                    ).kind
                except (MixedTriple, BadParity):
                    kind = None
                if kind in constraint.kinds:
                    return (
                        SolveReport(FOUND, coloring, method="EXACT",
                                    trace=("reached via Kempe changes",)),
                        kind,
                    )
                for e in range(emb.num_edges):
                    c = coloring[e]
                    for other in COLORS:
                        if other != c:
                            frontier.append(
                                kempe_change(emb, coloring, e, (c, other),
                                             exclude_faces=(disk.outer_face,))
                            )
    return last, None


def achievable_square_kinds(
    disk: Disk, positions: tuple[int, ...], budget: Budget | None = None
) -> frozenset[str]:
    """Which of A, B1, B2, C the disk can show on its boundary."""
    budget = budget or Budget()
    out = set()
    for kind, pattern in _KIND_REPRESENTATIVE.items():
        fixed = PartialColoring.from_dict(
            disk.embedding.num_edges, dict(zip(positions, pattern))
        )
        report = solve_exact(
            disk.embedding, fixed=fixed, exempt_faces=(disk.outer_face,),
            budget=budget.spawn(),
        )
        if report.found:
            out.add(kind)
    return frozenset(out)


def square_disk_type(kinds: frozenset[str]) -> int:
    """Coloring type of a triangulated square: 1 = A and B1, 2 = A and B2,
    3 = C and B1 and B2.  Every triangulated square has one."""
    if {"A", "B1"} <= kinds:
        return 1
    if {"A", "B2"} <= kinds:
        return 2
    if {"C", "B1", "B2"} <= kinds:
        return 3
    raise NoTableEntry(f"square disk achieves {sorted(kinds)}, which has no type")


# -- documented reduction tables ---------------------------------------------------

# pentagon: (sorted signature pair) -> (edge to change, allowed outcomes); the
# move swaps the singleton color at that edge with the majority color
PENTAGON_REDUCTIONS_TYPE12 = {
    (1, 4): (1, ((4, 5), (2, 4))),
    (3, 4): (3, ((4, 5), (2, 4))),
    (1, 3): (3, ((1, 2), (1, 4))),
    (1, 5): (5, ((1, 2), (1, 4))),
    (2, 3): (3, ((2, 4), (1, 2))),
    (2, 5): (5, ((2, 4), (1, 2))),
    (3, 5): (5, ((3, 4), (1, 3))),
}
PENTAGON_DIRECT_TYPE12 = frozenset({(2, 4), (1, 2), (4, 5)})

PENTAGON_REDUCTIONS_TYPE3 = {
    (2, 4): (4, ((2, 3), (2, 5))),
    (1, 2): (1, ((2, 3), (2, 5))),
    (1, 5): (1, ((2, 5), (4, 5))),
    (3, 5): (3, ((2, 5), (4, 5))),
    (1, 4): (1, ((4, 5), (2, 4))),
    (3, 4): (3, ((4, 5), (2, 4))),
    (1, 3): (3, ((1, 2), (1, 4))),
}
PENTAGON_DIRECT_TYPE3 = frozenset({(2, 5), (2, 3), (4, 5)})

# hexagon: class -> (chain colors as canonical letters, allowed outcome classes);
# the move is applied at the first canonical 'p' edge
HEXAGON_REDUCTIONS = {
    "tpgtgp": (("p", "g"), ("tpgtpg", "tpptpp")),
    "tpptgg": (("p", "g"), ("tpptpp", "tpgtpg")),
    "ttpgpg": (("p", "g"), ("tpptgg", "ttppgg")),
    "tptppp": (("p", "g"), ("ttpgpg",)),
    "pppppp": (("p", "t"), ("ttpppp", "tptppp", "tpptpp")),
}
HEXAGON_DIRECT = frozenset({"ttpppp", "ttppgg", "tpptpp", "tpgtpg"})


def pentagon_reduction(sig: tuple[int, int], square_type: int):
    table = PENTAGON_REDUCTIONS_TYPE3 if square_type == 3 else PENTAGON_REDUCTIONS_TYPE12
    return table.get(tuple(sorted(sig)))


def pentagon_direct_set(square_type: int) -> frozenset[tuple[int, int]]:
    return PENTAGON_DIRECT_TYPE3 if square_type == 3 else PENTAGON_DIRECT_TYPE12


@dataclass(frozen=True)
class CaseEntry:
    """A shipped coloring resolved from a case table."""

    figure_id: str
    host: str
    coloring: PartialColoring
    info: dict


def apply_case_table(variant: str, observed) -> CaseEntry:
    """Resolve an observed signature combination to a shipped coloring.

    ``observed`` is a type triple for the two square-triple tables (the
    symmetric one is matched up to rotation), a (pentagon signature, square
    kind) pair after the documented reductions, a hexagon class name after
    reductions, or a quadrilateral kind.  NoTableEntry flags combinations
    the tables do not cover, which the reduction machinery is supposed to
    rule out, so hitting one is a falsification-grade event.
    """
    table = cat.case_table(variant)
    if variant in ("444A", "444B"):
        types = tuple(observed)
        keys = [types]
        if variant == "444A":
            keys = [types, types[1:] + types[:1], types[2:] + types[:2]]
        for key in keys:
            name = "".join(map(str, key))
            if name in table:
                fig = table[name]
                host, coloring = cat.figure_colorings(fig)
                return CaseEntry(fig, host, coloring, cat.figure_info(fig))
        raise NoTableEntry(f"{variant} has no entry for type triple {types}")
    if variant == "54":
        sig, kind = observed
        j, k = sorted(sig)
        name = f"{j};{k}|{kind}"
    elif variant == "6":
        name = observed
    elif variant in ("H7K2", "C3C5"):
        name = observed
    else:
        raise NoTableEntry(f"unknown case table {variant!r}")
    if name not in table:
        raise NoTableEntry(f"{variant} has no entry for {name!r}")
    fig = table[name]
    host, coloring = cat.figure_colorings(fig)
    return CaseEntry(fig, host, coloring, cat.figure_info(fig))


# -- frames: a catalog embedding matched inside a host ------------------------------


@dataclass(frozen=True)
class Frame:
    name: str                      # catalog embedding id
    cat_emb: Embedding
    vmap: tuple[int, ...]          # catalog vertex -> host vertex
    reversed_orientation: bool

    def host_dart(self, host: Embedding, cat_dart: int) -> int:
        u, v = self.cat_emb.tail(cat_dart), self.cat_emb.head(cat_dart)
        return host.dart(self.vmap[u], self.vmap[v])

    def host_cycle(self, host: Embedding, cycle: FaceCycle) -> FaceCycle:
        return FaceCycle.from_darts(
            host, [self.host_dart(host, d) for d in cycle.darts]
        )

    def host_edge(self, host: Embedding, cat_edge: int) -> int:
        u, v = self.cat_emb.edge_ends(cat_edge)
        return host.edge_id(self.vmap[u], self.vmap[v])

    def transport(self, host: Embedding, coloring: PartialColoring) -> dict[int, int]:
        out = {}
        for e in range(self.cat_emb.num_edges):
            c = coloring[e]
            if c is not None:
                out[self.host_edge(host, e)] = c
        return out


def _restrict_rotations(host: Embedding, vmap: Sequence[int]) -> Embedding:
    """Host rotations filtered to the matched vertex set, relabeled along vmap."""
    back = {h: i for i, h in enumerate(vmap)}
    keep = set(vmap)
    rotations = []
    for h in vmap:
        rotations.append([back[w] for w in host.rotation(h) if w in keep])
    return Embedding(rotations)


def match_frame(host: Embedding, cat_name: str, mapping: Sequence[int]) -> Frame:
    """Align a catalog embedding with a matched subgraph of the host.

    ``mapping`` sends pattern vertices to host vertices.  The induced
    sub-embedding must be isomorphic to the catalog embedding (the graphs
    here are uniquely embeddable, possibly after a mirror flip); the
    composed map carries every catalog labeling onto host darts.
    """
    cat_emb = cat.catalog_embedding(cat_name)
    sub = _restrict_rotations(host, mapping)
    for vmap_cs, rev in embedding_isomorphisms(cat_emb, sub):
        composed = tuple(mapping[vmap_cs[v]] for v in range(cat_emb.num_vertices))
        return Frame(cat_name, cat_emb, composed, rev)
    raise NoTableEntry(
        f"subgraph matches {cat_name} but its induced embedding does not"
    )


def identify_k6_frame(host: Embedding, mapping: Sequence[int]) -> Frame:
    sub = _restrict_rotations(host, mapping)
    census = trace_faces(sub).census()
    if census == (5, 4, 3, 3, 3, 3, 3, 3, 3):
        return match_frame(host, "k6-54", mapping)
    if census == (6, 3, 3, 3, 3, 3, 3, 3, 3):
        return match_frame(host, "k6-6", mapping)
    if census == (4, 4, 4, 3, 3, 3, 3, 3, 3):
        try:
            return match_frame(host, "k6-444a", mapping)
        except NoTableEntry:
            return match_frame(host, "k6-444b", mapping)
    raise NoTableEntry(f"K6 sub-embedding has unexpected faces {census}")


# -- assembling and extending -------------------------------------------------------


def _merge_disk(
    host: Embedding, disk: Disk, coloring: PartialColoring, out: dict[int, int]
):
    for e in range(disk.embedding.num_edges):
        c = coloring[e]
        if c is None:
            continue
        he = disk.host_edge(host, e)
        if out.setdefault(he, c) != c:
            raise NoTableEntry(f"conflicting colors for host edge {he}")


def _color_perm(src: Sequence[int], dst: Sequence[int]) -> tuple[int, ...]:
    """The color permutation carrying src onto dst, completed to a bijection."""
    perm: dict[int, int] = {}
    for a, b in zip(src, dst):
        if perm.setdefault(a, b) != b:
            raise NoTableEntry("boundary patterns differ by more than recoloring")
    free_src = [c for c in COLORS if c not in perm]
    free_dst = [c for c in COLORS if c not in perm.values()]
    if len(set(perm.values())) != len(perm) or len(free_src) != len(free_dst):
        raise NoTableEntry("boundary patterns are not color-bijective")
    perm.update(dict(zip(free_src, free_dst)))
    return tuple(perm[c] for c in COLORS)


def extend_over_face(
    host: Embedding,
    face_cycle: FaceCycle,
    out: dict[int, int],
    budget: Budget | None = None,
):
    """Fill the triangulated region behind a tricolored triangle of the frame.

    The region is cut out, capped, solved as a sphere, recolored to agree on
    the three boundary edges, and transplanted.
    """
    disk = extract_region(host, face_cycle)
    if disk.interior_vertex_count() == 0:
        return
    solved = apex_solve(disk, budget=budget)
    positions = [disk_edge_of_host(disk, host, e) for e in face_cycle.edges]
    src = [solved[p] for p in positions]
    dst = [out[e] for e in face_cycle.edges]
    perm = _color_perm(src, dst)
    _merge_disk(host, disk, solved.permuted(perm), out)


def extend_into_faces(
    host: Embedding,
    host_coloring: EdgeColoring,
    refined: Embedding,
    budget: Budget | None = None,
) -> EdgeColoring:
    """Extend a coloring of a triangulation to a refinement of it.

    The refinement must contain the host as a subgraph on the same vertex
    ids, with all extra structure inside the host's (triangular) faces.
    """
    if host.num_vertices > refined.num_vertices:
        raise NotARefinement("refinement has fewer vertices than host")
    for u, v in host.edges:
        if not refined.has_edge(u, v):
            raise NotARefinement(f"host edge {u}-{v} missing from refinement")
    if not is_triangulation(host):
        raise NotTriangulation("host must be a triangulation")
    budget = budget or Budget()
    out: dict[int, int] = {}
    for e, (u, v) in enumerate(host.edges):
        out[refined.edge_id(u, v)] = host_coloring[e]
    fs = trace_faces(host)
    for f in range(fs.num_faces):
        darts = [refined.dart(host.tail(d), host.head(d)) for d in fs.faces[f]]
        try:
            extend_over_face(refined, FaceCycle.from_darts(refined, darts), out, budget)
        except SideNotADisk as exc:
            raise NotARefinement(f"face {f} does not bound a disk region") from exc
    if len(out) != refined.num_edges:
        raise NotARefinement("refinement has edges outside every host face")
    coloring = EdgeColoring(tuple(out[e] for e in range(refined.num_edges)))
    assert verify_grunbaum(refined, coloring).ok
    return coloring


def _finish(
    host: Embedding,
    frame: Frame,
    out: dict[int, int],
    method: str,
    trace: list[str],
    budget: Budget,
) -> SolveReport:
    """Extend over the frame's triangular faces, assemble, verify."""
    sub_fs = trace_faces(frame.cat_emb)
    for f in range(sub_fs.num_faces):
        if sub_fs.size(f) != 3:
            continue
        cyc = frame.host_cycle(host, FaceCycle.from_darts(frame.cat_emb, sub_fs.faces[f]))
        extend_over_face(host, cyc, out, budget)
    if len(out) != host.num_edges:
        raise NoTableEntry("case machinery did not cover every edge")
    coloring = EdgeColoring(tuple(out[e] for e in range(host.num_edges)))
    assert verify_grunbaum(host, coloring).ok
    return SolveReport(FOUND, coloring, method=method, trace=tuple(trace),
                       nodes=budget.used_nodes)


# -- the K6 case machinery ------------------------------------------------------------


def _read_positions(disk: Disk, coloring: PartialColoring, positions) -> list[int]:
    return [coloring[p] for p in positions]


def _route_k6_squares(host, frame, budget, trace) -> SolveReport:
    """(4,4,4) machinery: type each square disk, look up the triple, pin."""
    variant = "444A" if frame.name == "k6-444a" else "444B"
    labeling = cat.labeling_cycles(frame.name)
    squares = labeling["squares"]
    disks, positions, kinds = [], [], []
    for cyc in squares:
        hcyc = frame.host_cycle(host, cyc)
        disk = extract_region(host, hcyc)
        pos = _host_positions(disk, host, hcyc)
        disks.append(disk)
        positions.append(pos)
        kinds.append(achievable_square_kinds(disk, pos, budget))
    types = tuple(square_disk_type(k) for k in kinds)
    trace.append(f"square types {types}")
    entry = apply_case_table(variant, types)
    trace.append(f"table entry {entry.figure_id}")

    coloring = entry.coloring
    if variant == "444A":
        # rotate the shipped coloring with the square-cycling symmetry until
        # its signatures line up with what each disk can actually achieve
        rho = labeling["rho"]
        allowed = {1: {"A", "B1"}, 2: {"A", "B2"}, 3: {"C", "B1", "B2"}}
        for _ in range(3):
            sigs = [
                classify_square([coloring[e] for e in cyc.edges]).kind
                for cyc in squares
            ]
            if all(s in allowed[t] for s, t in zip(sigs, types)):
                break
            coloring = _permute_vertices(frame.cat_emb, coloring, rho)
        else:
            raise NoTableEntry(f"no rotation of {entry.figure_id} fits types {types}")
    out = frame.transport(host, coloring)
    for disk, pos, cyc in zip(disks, positions, squares):
        want = [out[e] for e in frame.host_cycle(host, cyc).edges]
        report, _ = solve_disk(
            disk, BoundaryConstraint(pos, fixed=tuple(want)), budget
        )
        if not report.found:
            raise NoTableEntry("square disk cannot match the table entry")
        _merge_disk(host, disk, report.coloring.as_partial(), out)
    return _finish(host, frame, out, f"CRITICAL({variant})", trace, budget)


def _permute_vertices(emb: Embedding, coloring: PartialColoring, vperm) -> PartialColoring:
    """Transport a coloring forward along a vertex permutation."""
    out: list[int | None] = [None] * emb.num_edges
    for e in range(emb.num_edges):
        u, v = emb.edge_ends(e)
        out[emb.edge_id(vperm[u], vperm[v])] = coloring[e]
    return PartialColoring(tuple(out))


def reduce_pentagon_disk(
    disk: Disk,
    positions: Sequence[int],
    coloring: PartialColoring,
    square_type: int,
) -> tuple[PartialColoring, tuple[int, int], list[str]]:
    """Walk the documented pentagon reductions until a direct signature.

    Each step swaps the singleton color at the prescribed edge with the
    majority color along its chain; the outcome must be one of the two
    signatures the table allows, anything else is a falsification event.
    """
    steps: list[str] = []
    sig = tuple(sorted(classify_pentagon(_read_positions(disk, coloring, positions)).positions))
    direct = pentagon_direct_set(square_type)
    for _ in range(6):
        if sig in direct:
            return coloring, sig, steps
        step = pentagon_reduction(sig, square_type)
        if step is None:
            raise NoTableEntry(f"pentagon signature {sig} has no reduction")
        edge_label, outcomes = step
        seed = positions[edge_label - 1]
        majority = _majority_color(_read_positions(disk, coloring, positions))
        coloring = kempe_change(
            disk.embedding, coloring, seed,
            (coloring[seed], majority), exclude_faces=(disk.outer_face,),
        )
        new_sig = tuple(sorted(
            classify_pentagon(_read_positions(disk, coloring, positions)).positions
        ))
        if new_sig not in outcomes:
            raise NoTableEntry(
                f"documented change {sig}->{outcomes} produced {new_sig}"
            )
        steps.append(f"pentagon {sig} -> {new_sig}")
        sig = new_sig
    raise NoTableEntry("pentagon reductions did not terminate")


def _route_k6_54(host, frame, budget, trace) -> SolveReport:
    labeling = cat.labeling_cycles("k6-54")
    pent_cyc = frame.host_cycle(host, labeling["pentagon"])
    sq_cyc = frame.host_cycle(host, labeling["square"])
    pent_disk = extract_region(host, pent_cyc)
    sq_disk = extract_region(host, sq_cyc)
    pent_pos = _host_positions(pent_disk, host, pent_cyc)
    sq_pos = _host_positions(sq_disk, host, sq_cyc)

    sq_type = square_disk_type(achievable_square_kinds(sq_disk, sq_pos, budget))
    target_kind = "B1" if sq_type == 3 else "A"
    trace.append(f"square type {sq_type}, target {target_kind}")

    coloring = apex_solve(pent_disk, budget=budget)
    coloring, sig, steps = reduce_pentagon_disk(pent_disk, pent_pos, coloring, sq_type)
    trace.extend(steps)

    entry = apply_case_table("54", (sig, target_kind))
    trace.append(f"table entry {entry.figure_id}")
    # recolor the shipped entry so its pentagon agrees with the disk exactly
    cat_pent = labeling["pentagon"]
    src = [entry.coloring[e] for e in cat_pent.edges]
    dst = _read_positions(pent_disk, coloring, pent_pos)
    perm = _color_perm(src, dst)
    out = frame.transport(host, entry.coloring.permuted(perm))
    _merge_disk(host, pent_disk, coloring, out)

    want = [out[e] for e in sq_cyc.edges]
    report, _ = solve_disk(sq_disk, BoundaryConstraint(sq_pos, fixed=tuple(want)), budget)
    if not report.found:
        raise NoTableEntry("square disk cannot match the pentagon-aligned entry")
    _merge_disk(host, sq_disk, report.coloring.as_partial(), out)
    return _finish(host, frame, out, "CRITICAL(54)", trace, budget)


def _majority_color(colors: Sequence[int]) -> int:
    return max(set(colors), key=colors.count)


def reduce_hexagon_disk(
    disk: Disk, positions: Sequence[int], coloring: PartialColoring
) -> tuple[PartialColoring, "object", list[str]]:
    """Walk the documented hexagon reductions until a direct class.

    The move is a Kempe change at the edge playing the first canonical p,
    with the chain colors named by the class witness.
    """
    steps: list[str] = []
    cls = classify_hexagon(_read_positions(disk, coloring, positions))
    for _ in range(6):
        if cls.name in HEXAGON_DIRECT:
            return coloring, cls, steps
        letters, outcomes = HEXAGON_REDUCTIONS[cls.name]
        observed = _read_positions(disk, coloring, positions)
        letter_color = _letter_colors(observed, cls)
        first_p = cls.observed_position(cls.name.index("p"))
        seed = positions[first_p]
        coloring = kempe_change(
            disk.embedding, coloring, seed,
            (letter_color[letters[0]], letter_color[letters[1]]),
            exclude_faces=(disk.outer_face,),
        )
        new_cls = classify_hexagon(_read_positions(disk, coloring, positions))
        if new_cls.name not in outcomes:
            raise NoTableEntry(
                f"documented change {cls.name}->{outcomes} produced {new_cls.name}"
            )
        steps.append(f"hexagon {cls.name} -> {new_cls.name}")
        cls = new_cls
    raise NoTableEntry("hexagon reductions did not terminate")


def _route_k6_hex(host, frame, budget, trace) -> SolveReport:
    labeling = cat.labeling_cycles("k6-6")
    hex_cat = labeling["hexagon"]
    hex_cyc = frame.host_cycle(host, hex_cat)
    disk = extract_region(host, hex_cyc)
    pos = _host_positions(disk, host, hex_cyc)

    coloring = apex_solve(disk, budget=budget)
    coloring, cls, steps = reduce_hexagon_disk(disk, pos, coloring)
    trace.extend(steps)

    entry = apply_case_table("6", cls.name)
    trace.append(f"table entry {entry.figure_id}")
    # the hexagonal embedding realizes every exact coloring of each direct
    # class, so pin the disk's colors on the frame and re-solve it
    pinned = PartialColoring.from_dict(
        frame.cat_emb.num_edges,
        {ce: coloring[pe] for ce, pe in zip(hex_cat.edges, pos)},
    )
    rep = solve_exact(frame.cat_emb, fixed=pinned, budget=budget.spawn())
    if not rep.found:
        raise NoTableEntry(f"frame cannot match hexagon class {cls.name}")
    out = frame.transport(host, rep.coloring.as_partial())
    _merge_disk(host, disk, coloring, out)
    return _finish(host, frame, out, "CRITICAL(6)", trace, budget)


def _letter_colors(observed: Sequence[int], cls) -> dict[str, int]:
    """Map canonical letters t, p, g to the actual colors of this reading."""
    mapping: dict[str, int] = {}
    for canonical_pos, letter in enumerate(cls.name):
        color = observed[cls.observed_position(canonical_pos)]
        mapping.setdefault(letter, color)
    # letters absent from the class string keep any unused color
    for letter, color in zip("tpg", COLORS):
        if letter not in mapping:
            unused = [c for c in COLORS if c not in mapping.values()]
            mapping[letter] = unused[0] if unused else color
    return mapping


def _route_quadface(host, frame, budget, trace) -> SolveReport:
    """Hosts of the two non-K6 critical graphs with a quadrilateral face."""
    variant = "H7K2" if frame.name == "h7k2" else "C3C5"
    labeling = cat.labeling_cycles(frame.name)
    quad_cat = labeling["quad"]
    quad_cyc = frame.host_cycle(host, quad_cat)
    disk = extract_region(host, quad_cyc)
    pos = _host_positions(disk, host, quad_cyc)

    coloring = apex_solve(disk, budget=budget)
    kind = classify_square(_read_positions(disk, coloring, pos)).kind
    if kind == "A":
        raise NoTableEntry(
            "apex construction produced an alternating square, which the "
            "apex triangle argument rules out"
        )
    trace.append(f"quad class {kind}")
    entry = apply_case_table(variant, kind)
    trace.append(f"table entry {entry.figure_id}")
    src = [entry.coloring[e] for e in quad_cat.edges]
    dst = _read_positions(disk, coloring, pos)
    perm = _color_perm(src, dst)
    out = frame.transport(host, entry.coloring.permuted(perm))
    _merge_disk(host, disk, coloring, out)
    return _finish(host, frame, out, f"CRITICAL({variant})", trace, budget)


def _route_six_regular(host, frame_name, mapping, budget, trace, method) -> SolveReport:
    """K7 or C11^3 inside the host: the sub-embedding is a triangulation, so
    color it by its grid structure and extend."""
    grid = cat.gen_altshuler(1, 7, 2) if frame_name == "k7" else cat.gen_altshuler(1, 11, 2)
    sub = _restrict_rotations(host, mapping)
    if not is_triangulation(sub):
        raise NoTableEntry(f"{method}: sub-embedding is not a triangulation")
    pair = next(embedding_isomorphisms(grid.embedding, sub), None)
    if pair is not None:
        vmap_gs, _rev = pair
        role_coloring = altshuler_coloring(grid)
        out = {}
        for e in range(grid.embedding.num_edges):
            u, v = grid.embedding.edge_ends(e)
            he = host.edge_id(mapping[vmap_gs[u]], mapping[vmap_gs[v]])
            out[he] = role_coloring[e]
        trace.append("grid labeling recognized")
    else:  # pragma: no cover - the embeddings are unique, so this is dead
        rep = solve_exact(sub, budget=budget.spawn())
        if not rep.found:
            raise NoTableEntry(f"{method}: could not color sub-embedding")
        out = {}
        for e in range(sub.num_edges):
            u, v = sub.edge_ends(e)
            out[host.edge_id(mapping[u], mapping[v])] = rep.coloring[e]
        trace.append("sub-embedding colored by search")
    frame = Frame(frame_name, sub, tuple(mapping), False)
    return _finish(host, frame, out, method, trace, budget)


# -- the dispatch ---------------------------------------------------------------------


def solve_torus(emb, budget: Budget | None = None) -> SolveReport:
    """Produce a coloring of a torus triangulation, or report UNKNOWN.

    Dispatch: labeled grids are colored by role; 4-colorable inputs via the
    vertex-coloring lift; hosts of K7 via the grid coloring of K7 plus
    extension; hosts of a critical six-chromatic graph via its case
    machinery.  What remains is five-chromatic and goes to exhaustive
    search, which cannot claim anything beyond what it finds.
    """
    budget = budget or Budget()
    trace: list[str] = []

    if isinstance(emb, cat.GridTriangulation):
        coloring = altshuler_coloring(emb)
        return SolveReport(FOUND, coloring, method="ALTSHULER", trace=("grid roles",))

    if genus(emb) != 1:
        raise ValueError("solve_torus expects a genus-1 embedding")
    if not is_triangulation(emb):
        raise NotTriangulation("solve_torus expects a triangulation")

    recognized = recognize_grid_coloring(emb)
    if recognized is not None:
        coloring, grid_name = recognized
        return SolveReport(FOUND, coloring, method="ALTSHULER",
                           trace=(f"recognized {grid_name}",))

    adj = emb.adjacency()

    # a big clique rules out 4-colorability without an exhaustive proof
    from .solver import _greedy_clique

    clique = _greedy_clique(adj)
    if len(clique) <= 4:
        try:
            vc = four_color_vertices(adj, budget=budget)
        except BudgetExceeded:
            vc = None
            trace.append("4-coloring search hit the budget")
        if vc is not None:
            coloring = tait_lift(emb, vc)
            assert verify_grunbaum(emb, coloring).ok
            return SolveReport(FOUND, coloring, method="TAIT", trace=tuple(trace),
                               nodes=budget.used_nodes)
        trace.append("not 4-colorable")
    else:
        trace.append(f"clique of size {len(clique)}")

    try:
        k7 = find_subgraph(adj, "K7", budget=budget)
        if k7 is not None:
            trace.append("contains K7")
            return _route_six_regular(emb, "k7", k7.mapping, budget, trace, "K7")

        matches = [
            m
            for p in CRITICAL_PATTERNS
            if (m := find_subgraph(adj, p, budget=budget)) is not None
        ]
        if len(matches) > 1:
            raise ClassificationAnomaly(
                f"several critical subgraphs match: {[m.pattern for m in matches]}"
            )
        if matches:
            match = matches[0]
            trace.append(f"critical subgraph {match.pattern}")
            if match.pattern == "K6":
                frame = identify_k6_frame(emb, match.mapping)
                trace.append(f"embedding variant {frame.name}")
                if frame.name in ("k6-444a", "k6-444b"):
                    return _route_k6_squares(emb, frame, budget, trace)
                if frame.name == "k6-54":
                    return _route_k6_54(emb, frame, budget, trace)
                return _route_k6_hex(emb, frame, budget, trace)
            if match.pattern == "C11^3":
                return _route_six_regular(
                    emb, "c11cubed", match.mapping, budget, trace, "CRITICAL(C11CUBED)"
                )
            frame = match_frame(
                emb, "h7k2" if match.pattern == "H7+K2" else "c3c5", match.mapping
            )
            return _route_quadface(emb, frame, budget, trace)
    except BudgetExceeded as exc:
        return SolveReport(UNKNOWN, trace=tuple(trace) + (str(exc),),
                           nodes=budget.used_nodes)

    # five-chromatic territory: search, and say so
    trace.append("no critical subgraph: five-chromatic, exhaustive search")
    report = solve_exact(emb, budget=budget)
    if report.found:
        assert verify_grunbaum(emb, report.coloring).ok
    return SolveReport(report.status, report.coloring, method="EXACT",
                       trace=tuple(trace), nodes=budget.used_nodes,
                       millis=report.millis)


def solve(emb, budget: Budget | None = None) -> SolveReport:
    """Dispatch on genus: sphere and torus triangulations are supported."""
    if isinstance(emb, cat.GridTriangulation):
        return solve_torus(emb, budget)
    g = genus(emb)
    if g == 0:
        return solve_planar(emb, budget=budget)
    if g == 1:
        return solve_torus(emb, budget)
    raise ValueError(f"genus {g} is out of scope; only sphere and torus are handled")
