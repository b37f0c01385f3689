"""Orientable embedded graphs encoded as rotation systems over darts.

Every edge {u, v} owns two darts: dart ``2e`` runs min(u,v) -> max(u,v) and
dart ``2e + 1`` runs the other way, so ``twin(d) == d ^ 1``.  Edge ids index
the lexicographically sorted endpoint list, which keeps every derived id
(dart, face) reproducible across runs.

Face tracing convention, fixed once and used everywhere: the successor of a
dart d inside its face is the rotation successor of twin(d).  With rotations
listed counterclockwise this walks every face counterclockwise.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .errors import (
    AsymmetricAdjacency,
    Disconnected,
    FaceNotTriangle,
    LoopEdge,
    NotACycle,
    ParallelEdge,
    SideNotADisk,
)


class Embedding:
    """Immutable rotation system of a simple connected graph.

    ``rotations[v]`` is the cyclic sequence of v's neighbours in embedding
    order.  All validation happens here; helper constructors such as
    :func:`build_embedding` simply delegate.
    """

    __slots__ = ("_rot", "_edges", "_eindex", "_succ", "_faces")

    def __init__(self, rotations: Sequence[Sequence[int]]):
        rot = tuple(tuple(r) for r in rotations)
        n = len(rot)
        for v, nbrs in enumerate(rot):
            for w in nbrs:
                if not 0 <= w < n:
                    raise AsymmetricAdjacency(f"vertex {v} lists unknown vertex {w}")
                if w == v:
                    raise LoopEdge(f"vertex {v} lists itself")
            if len(set(nbrs)) != len(nbrs):
                raise ParallelEdge(f"vertex {v} lists a neighbour twice")
        nbr_sets = [set(nbrs) for nbrs in rot]
        for v, nbrs in enumerate(rot):
            for w in nbrs:
                if v not in nbr_sets[w]:
                    raise AsymmetricAdjacency(f"{w} in rotation of {v} but not conversely")

        edges = sorted((min(u, v), max(u, v)) for u in range(n) for v in rot[u] if u < v)
        self._rot = rot
        self._edges = tuple(edges)
        self._eindex = {uv: e for e, uv in enumerate(edges)}

        # rotation successor on darts: succ[dart(v, n_i)] = dart(v, n_{i+1})
        succ = [0] * (2 * len(edges))
        for v, nbrs in enumerate(rot):
            k = len(nbrs)
            for i, w in enumerate(nbrs):
                succ[self.dart(v, w)] = self.dart(v, nbrs[(i + 1) % k])
        self._succ = tuple(succ)
        self._faces = None

        if n and not self._connected():
            raise Disconnected("graph is not connected")

    def _connected(self) -> bool:
        seen = [False] * self.num_vertices
        seen[0] = True
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self._rot[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        return all(seen)

    # -- basic queries ------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self._rot)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def num_darts(self) -> int:
        return 2 * len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def rotation(self, v: int) -> tuple[int, ...]:
        return self._rot[v]

    @property
    def rotations(self) -> tuple[tuple[int, ...], ...]:
        return self._rot

    def degree(self, v: int) -> int:
        return len(self._rot[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._eindex

    def edge_id(self, u: int, v: int) -> int:
        return self._eindex[(min(u, v), max(u, v))]

    def edge_ends(self, e: int) -> tuple[int, int]:
        return self._edges[e]

    def dart(self, u: int, v: int) -> int:
        """Dart id of u -> v."""
        e = self._eindex[(min(u, v), max(u, v))]
        return 2 * e + (0 if u < v else 1)

    def tail(self, d: int) -> int:
        u, v = self._edges[d >> 1]
        return u if d & 1 == 0 else v

    def head(self, d: int) -> int:
        u, v = self._edges[d >> 1]
        return v if d & 1 == 0 else u

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    @staticmethod
    def dart_edge(d: int) -> int:
        return d >> 1

    def rotation_successor(self, d: int) -> int:
        return self._succ[d]

    def face_next(self, d: int) -> int:
        """Next dart of the face containing d."""
        return self._succ[d ^ 1]

    def adjacency(self) -> list[set[int]]:
        """Plain adjacency sets, for graph algorithms that ignore the embedding."""
        return [set(nbrs) for nbrs in self._rot]


def build_embedding(rotations: Sequence[Sequence[int]]) -> Embedding:
    """Validate per-vertex cyclic neighbour lists and build an Embedding."""
    return Embedding(rotations)


# -- faces -------------------------------------------------------------------


@dataclass(frozen=True)
class FaceSet:
    """Partition of all darts into face cycles.

    Faces are numbered in order of their minimal dart id and each face cycle
    is listed starting at that dart.
    """

    faces: tuple[tuple[int, ...], ...]
    face_of: tuple[int, ...]

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def size(self, f: int) -> int:
        return len(self.faces[f])

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.faces)

    def census(self) -> tuple[int, ...]:
        """Face-size multiset, largest first."""
        return tuple(sorted(self.sizes, reverse=True))

    def face_edges(self, f: int) -> tuple[int, ...]:
        return tuple(d >> 1 for d in self.faces[f])

    def face_vertices(self, emb: Embedding, f: int) -> tuple[int, ...]:
        return tuple(emb.tail(d) for d in self.faces[f])


def trace_faces(emb: Embedding) -> FaceSet:
    """Orbit decomposition of the face-successor permutation."""
    cached = emb._faces
    if cached is not None:
        return cached
    nd = emb.num_darts
    face_of = [-1] * nd
    faces = []
    for d0 in range(nd):
        if face_of[d0] >= 0:
            continue
        fid = len(faces)
        walk = []
        d = d0
        while face_of[d] < 0:
            face_of[d] = fid
            walk.append(d)
            d = emb.face_next(d)
        faces.append(tuple(walk))
    result = FaceSet(tuple(faces), tuple(face_of))
    emb._faces = result
    return result


def genus(emb: Embedding) -> int:
    """Genus from Euler's formula V - E + F = 2 - 2g."""
    f = trace_faces(emb).num_faces
    euler = emb.num_vertices - emb.num_edges + f
    g2 = 2 - euler
    if g2 < 0 or g2 % 2:
        raise ValueError(f"impossible Euler characteristic {euler}")
    return g2 // 2


def is_triangulation(emb: Embedding) -> bool:
    return all(len(f) == 3 for f in trace_faces(emb).faces)


# -- dual graph ---------------------------------------------------------------


@dataclass(frozen=True)
class DualGraph:
    """Face adjacency of an embedding; one dual edge per host edge.

    ``edge_sides[e]`` gives the faces on the two sides of host edge e,
    ordered (face of dart 2e, face of dart 2e+1).
    """

    num_nodes: int
    adjacency: tuple[tuple[tuple[int, int], ...], ...]  # per face: (nbr face, host edge)
    edge_sides: tuple[tuple[int, int], ...]

    def degree(self, f: int) -> int:
        return len(self.adjacency[f])

    def is_cubic(self) -> bool:
        return all(len(a) == 3 for a in self.adjacency)


def dual_graph(emb: Embedding) -> DualGraph:
    fs = trace_faces(emb)
    sides = []
    adj: list[list[tuple[int, int]]] = [[] for _ in range(fs.num_faces)]
    for e in range(emb.num_edges):
        fa, fb = fs.face_of[2 * e], fs.face_of[2 * e + 1]
        sides.append((fa, fb))
        adj[fa].append((fb, e))
        adj[fb].append((fa, e))
    return DualGraph(fs.num_faces, tuple(tuple(a) for a in adj), tuple(sides))


# -- cycles and separation ----------------------------------------------------


@dataclass(frozen=True)
class FaceCycle:
    """A directed closed walk of darts with pairwise distinct edges.

    The dart order fixes both the start edge and the orientation, which is
    what square/pentagon/hexagon signatures are measured against.
    """

    darts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(d >> 1 for d in self.darts)

    def vertices(self, emb: Embedding) -> tuple[int, ...]:
        return tuple(emb.tail(d) for d in self.darts)

    @staticmethod
    def from_darts(emb: Embedding, darts: Iterable[int]) -> "FaceCycle":
        ds = tuple(darts)
        if len(ds) < 3:
            raise NotACycle("cycle needs at least three darts")
        for i, d in enumerate(ds):
            if emb.head(d) != emb.tail(ds[(i + 1) % len(ds)]):
                raise NotACycle("darts do not chain into a closed walk")
        if len({d >> 1 for d in ds}) != len(ds):
            raise NotACycle("cycle repeats an edge")
        return FaceCycle(ds)

    @staticmethod
    def from_vertices(emb: Embedding, verts: Sequence[int]) -> "FaceCycle":
        k = len(verts)
        if k < 3:
            raise NotACycle("cycle needs at least three vertices")
        darts = []
        for i, u in enumerate(verts):
            v = verts[(i + 1) % k]
            if not emb.has_edge(u, v):
                raise NotACycle(f"no edge {u}-{v}")
            darts.append(emb.dart(u, v))
        return FaceCycle.from_darts(emb, darts)


@dataclass(frozen=True)
class SeparationReport:
    """Outcome of a separation test.

    ``side_faces[0]`` are the faces swept out from the cycle's own darts,
    ``side_faces[1]`` from their twins.  ``interior_vertices[i]`` lists the
    vertices all of whose incident faces lie on side i; a facial cycle
    separates with an empty side, which callers must check via
    :attr:`has_empty_side`.
    """

    separating: bool
    side_faces: tuple[tuple[int, ...], tuple[int, ...]]
    interior_vertices: tuple[tuple[int, ...], tuple[int, ...]]

    @property
    def has_empty_side(self) -> bool:
        return not self.interior_vertices[0] or not self.interior_vertices[1]


def _flood(dual: DualGraph, seeds: Iterable[int], blocked_edges: set[int]) -> set[int]:
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        f = queue.popleft()
        for g, e in dual.adjacency[f]:
            if e in blocked_edges or g in seen:
                continue
            seen.add(g)
            queue.append(g)
    return seen


def is_separating(emb: Embedding, cycle: FaceCycle) -> SeparationReport:
    """Does the cycle split the surface graph into two sides?

    Computed by dual reachability with the dual edges crossing the cycle
    removed.  On the torus a non-contractible cycle leaves one component.
    """
    fs = trace_faces(emb)
    dual = dual_graph(emb)
    blocked = set(cycle.edges)
    side_a = _flood(dual, (fs.face_of[d] for d in cycle.darts), blocked)
    side_b_seeds = {fs.face_of[d ^ 1] for d in cycle.darts}
    separating = side_a.isdisjoint(side_b_seeds)
    if separating:
        side_b = _flood(dual, side_b_seeds, blocked)
    else:
        side_b = side_a
    cyc_verts = set(cycle.vertices(emb))
    interior: list[list[int]] = [[], []]
    for v in range(emb.num_vertices):
        if v in cyc_verts:
            continue
        vfaces = {fs.face_of[emb.dart(v, w)] for w in emb.rotation(v)}
        if vfaces <= side_a:
            interior[0].append(v)
        if vfaces <= side_b and separating:
            interior[1].append(v)
    return SeparationReport(
        separating,
        (tuple(sorted(side_a)), tuple(sorted(side_b))),
        (tuple(interior[0]), tuple(interior[1])),
    )


# -- disks ---------------------------------------------------------------------


@dataclass(frozen=True)
class Disk:
    """A planar triangulated region cut out of a host embedding.

    ``boundary_darts`` follow the extraction cycle, in disk-local ids;
    ``to_host`` maps disk vertex ids back to host vertex ids.
    """

    embedding: Embedding
    boundary_darts: tuple[int, ...]
    to_host: tuple[int, ...]
    outer_face: int

    @property
    def boundary_edges(self) -> tuple[int, ...]:
        return tuple(d >> 1 for d in self.boundary_darts)

    def boundary_vertices(self) -> tuple[int, ...]:
        return tuple(self.embedding.tail(d) for d in self.boundary_darts)

    def interior_vertex_count(self) -> int:
        return self.embedding.num_vertices - len(self.boundary_darts)

    def host_edge(self, host: Embedding, e: int) -> int:
        u, v = self.embedding.edge_ends(e)
        return host.edge_id(self.to_host[u], self.to_host[v])


def extract_disk(
    emb: Embedding, cycle: FaceCycle, side: Literal["interior", "exterior"] = "interior"
) -> Disk:
    """Cut out one side of a separating (or facial) cycle as a planar disk.

    "interior" is the side the cycle's darts face; "exterior" the twins'.
    The returned embedding has the cycle as its outer face and inherits the
    host's cyclic orders, with vertices relabeled to 0..k-1 in ascending
    host order.  The disk's boundary walk always keeps the region on its
    dart side, so an exterior extraction reverses the walk.
    """
    fs = trace_faces(emb)
    dual = dual_graph(emb)
    blocked = set(cycle.edges)
    if side == "interior":
        darts = cycle.darts
    else:
        darts = tuple(d ^ 1 for d in reversed(cycle.darts))
    region = _flood(dual, (fs.face_of[d] for d in darts), blocked)
    if not region.isdisjoint(fs.face_of[d ^ 1] for d in darts):
        raise SideNotADisk("cycle does not separate; no disk on that side")

    keep_edges = set()
    for e in range(emb.num_edges):
        fa, fb = fs.face_of[2 * e], fs.face_of[2 * e + 1]
        ina, inb = fa in region, fb in region
        if ina and inb:
            if e in blocked:
                raise SideNotADisk("cycle edge has both sides in the region")
            keep_edges.add(e)
        elif ina or inb:
            if e not in blocked:
                raise SideNotADisk("region leaks across a non-cycle edge")
            keep_edges.add(e)

    verts = sorted({v for e in keep_edges for v in emb.edge_ends(e)})
    relabel = {v: i for i, v in enumerate(verts)}
    rotations = []
    for v in verts:
        rotations.append(
            [relabel[w] for w in emb.rotation(v) if emb.edge_id(v, w) in keep_edges]
        )
    sub = Embedding(rotations)
    if genus(sub) != 0:
        raise SideNotADisk("region side is not planar")

    boundary = tuple(
        sub.dart(relabel[emb.tail(d)], relabel[emb.head(d)]) for d in darts
    )
    sub_faces = trace_faces(sub)
    outer = sub_faces.face_of[boundary[0] ^ 1]
    outer_edges = {d >> 1 for d in sub_faces.faces[outer]}
    if outer_edges != {d >> 1 for d in boundary} or sub_faces.size(outer) != len(boundary):
        raise SideNotADisk("outer face is not the extraction cycle")
    return Disk(sub, boundary, tuple(verts), outer)


def cap_with_apex(disk: Disk) -> Embedding:
    """Close a disk into a sphere by joining a new apex to every boundary vertex."""
    emb = disk.embedding
    bverts = disk.boundary_vertices()
    apex = emb.num_vertices
    rotations = [list(emb.rotation(v)) for v in range(emb.num_vertices)]
    k = len(bverts)
    for i, v in enumerate(bverts):
        nxt = bverts[(i + 1) % k]
        rot = rotations[v]
        # the outer gap at v sits between its boundary successor and
        # predecessor; the apex spoke fills it, right after the successor
        rot.insert(rot.index(nxt) + 1, apex)
    rotations.append(list(bverts))
    capped = Embedding(rotations)
    if genus(capped) != 0 or not is_triangulation(capped):
        raise SideNotADisk("capping did not produce a sphere triangulation")
    return capped


def cone_face(emb: Embedding, face: int) -> Embedding:
    """Insert a new vertex inside any face, joined to its corners in order.

    The face walk must visit distinct vertices, else the cone would create
    parallel edges.  V grows by 1, E by the face size, F by size - 1, so the
    genus is unchanged.
    """
    fs = trace_faces(emb)
    walk = fs.face_vertices(emb, face)
    if len(set(walk)) != len(walk):
        raise FaceNotTriangle(f"face {face} revisits a vertex; cannot cone")
    w = emb.num_vertices
    rotations = [list(emb.rotation(v)) for v in range(w)]
    k = len(walk)
    # at each corner the spoke to the new vertex splits the face corner:
    # sigma(corner -> prev) was corner -> next, now it goes via w
    for i, corner in enumerate(walk):
        prev_v = walk[(i - 1) % k]
        rot = rotations[corner]
        rot.insert(rot.index(prev_v) + 1, w)
    rotations.append(list(reversed(walk)))
    return Embedding(rotations)


def stellate_face(emb: Embedding, face: int) -> Embedding:
    """Insert a new vertex inside a triangular face, joined to its corners."""
    fs = trace_faces(emb)
    if fs.size(face) != 3:
        raise FaceNotTriangle(f"face {face} has size {fs.size(face)}")
    return cone_face(emb, face)


def splice_disk(emb: Embedding, face: int, disk: Disk) -> Embedding:
    """Replace a face with the interior of a triangulated disk.

    The i-th boundary vertex of the disk lands on the i-th vertex of the
    face walk.  Chords of the disk (edges joining two boundary vertices
    outside the boundary cycle) would double existing host edges and are
    rejected, as are faces revisiting a vertex.
    """
    fs = trace_faces(emb)
    walk = fs.face_vertices(emb, face)
    d_emb = disk.embedding
    bverts = disk.boundary_vertices()
    if len(walk) != len(bverts):
        raise SideNotADisk("disk boundary and face have different lengths")
    if len(set(walk)) != len(walk):
        raise SideNotADisk("face revisits a vertex; cannot splice")
    bset = set(bverts)
    boundary_cycle_edges = {d >> 1 for d in disk.boundary_darts}
    for e in range(d_emb.num_edges):
        u, v = d_emb.edge_ends(e)
        if u in bset and v in bset and e not in boundary_cycle_edges:
            raise SideNotADisk("disk has a chord; splicing would double an edge")

    interior = [v for v in range(d_emb.num_vertices) if v not in bset]
    vmap = {b: walk[i] for i, b in enumerate(bverts)}
    for j, v in enumerate(interior):
        vmap[v] = emb.num_vertices + j

    rotations = [list(emb.rotation(v)) for v in range(emb.num_vertices)]
    k = len(walk)
    for i, b in enumerate(bverts):
        rot_d = list(d_emb.rotation(b))
        nxt, prv = bverts[(i + 1) % k], bverts[(i - 1) % k]
        j = rot_d.index(nxt)
        rot_d = rot_d[j:] + rot_d[:j]
        # the outer corner makes prv follow nxt; interiors run prv -> nxt
        if rot_d[1] != prv:
            raise SideNotADisk("disk boundary walk does not match its rotations")
        arc = rot_d[2:]
        host_rot = rotations[walk[i]]
        at = host_rot.index(walk[(i - 1) % k]) + 1
        host_rot[at:at] = [vmap[x] for x in arc]
    for v in interior:
        rotations.append([vmap[x] for x in d_emb.rotation(v)])
    return Embedding(rotations)
