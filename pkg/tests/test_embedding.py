import pytest

from grunbaum.catalog import gen_k6, random_refinement
from grunbaum.embedding import (
    Embedding,
    FaceCycle,
    build_embedding,
    cap_with_apex,
    cone_face,
    dual_graph,
    extract_disk,
    genus,
    is_separating,
    is_triangulation,
    splice_disk,
    stellate_face,
    trace_faces,
)
from grunbaum.errors import (
    AsymmetricAdjacency,
    Disconnected,
    FaceNotTriangle,
    LoopEdge,
    NotACycle,
    ParallelEdge,
    SideNotADisk,
)

OCT = [[1, 5, 4, 2], [0, 2, 3, 5], [0, 4, 3, 1], [1, 2, 4, 5], [0, 5, 3, 2], [0, 1, 3, 4]]
K7 = [[(i + d) % 7 for d in (1, 3, 2, 6, 4, 5)] for i in range(7)]
K4 = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]


def test_build_octahedron_counts():
    emb = build_embedding(OCT)
    assert emb.num_vertices == 6
    assert emb.num_edges == 12


def test_build_k7_counts_any_rotation():
    # even a non-canonical cyclic rotation is a valid embedding of K7
    emb = build_embedding([[(i + d) % 7 for d in range(1, 7)] for i in range(7)])
    assert emb.num_vertices == 7
    assert emb.num_edges == 21


def test_build_rejects_asymmetric():
    # vertex 0 lists 3, but 3 lists only 2
    with pytest.raises(AsymmetricAdjacency):
        build_embedding([[1, 3], [0], [3], [2]])


def test_build_rejects_loop_parallel_disconnected():
    with pytest.raises(LoopEdge):
        build_embedding([[0, 1], [0]])
    with pytest.raises(ParallelEdge):
        build_embedding([[1, 1], [0, 0]])
    with pytest.raises(Disconnected):
        build_embedding([[1], [0], [3], [2]])


def test_dart_involution():
    emb = build_embedding(OCT)
    for d in range(emb.num_darts):
        assert emb.twin(emb.twin(d)) == d
        assert emb.twin(d) != d


def test_trace_faces_octahedron():
    emb = build_embedding(OCT)
    fs = trace_faces(emb)
    assert fs.census() == (3,) * 8
    assert sorted(fs.face_of) == sorted(list(range(8)) * 3)
    assert sum(fs.sizes) == emb.num_darts


def test_trace_faces_deterministic_min_dart():
    emb = build_embedding(OCT)
    fs = trace_faces(emb)
    starts = [f[0] for f in fs.faces]
    assert starts == sorted(starts)
    for face in fs.faces:
        assert face[0] == min(face)


def test_k6_54_face_census():
    fs = trace_faces(gen_k6("54"))
    assert fs.census() == (5, 4, 3, 3, 3, 3, 3, 3, 3)


def test_k7_canonical_is_toroidal_triangulation():
    emb = build_embedding(K7)
    fs = trace_faces(emb)
    assert fs.num_faces == 14
    assert all(s == 3 for s in fs.sizes)
    assert genus(emb) == 1


def test_genus_octahedron_and_444a():
    assert genus(build_embedding(OCT)) == 0
    e = gen_k6("444A")
    fs = trace_faces(e)
    assert genus(e) == 1
    assert fs.num_faces == 9
    assert fs.census() == (4, 4, 4, 3, 3, 3, 3, 3, 3)


def test_is_triangulation():
    assert is_triangulation(build_embedding(OCT))
    assert not is_triangulation(gen_k6("6"))


def test_dual_graph_shapes():
    k7 = build_embedding(K7)
    d = dual_graph(k7)
    assert d.num_nodes == 14
    assert d.is_cubic()

    oct_dual = dual_graph(build_embedding(OCT))
    assert oct_dual.num_nodes == 8
    assert all(oct_dual.degree(f) == 3 for f in range(8))

    d54 = dual_graph(gen_k6("54"))
    assert sorted(d54.degree(f) for f in range(d54.num_nodes)) == [3] * 7 + [4, 5]


def test_face_cycle_validation():
    emb = build_embedding(OCT)
    with pytest.raises(NotACycle):
        FaceCycle.from_vertices(emb, [0, 1])
    with pytest.raises(NotACycle):  # walks edge 1-4 twice
        FaceCycle.from_vertices(emb, [1, 4, 1, 4])
    with pytest.raises(NotACycle):  # 0-3 is not an edge of the octahedron
        FaceCycle.from_vertices(emb, [0, 3, 1])
    assert FaceCycle.from_vertices(emb, [0, 1, 2]).length == 3


def test_facial_triangle_separates_with_empty_side():
    emb = build_embedding(OCT)
    fs = trace_faces(emb)
    cyc = FaceCycle.from_darts(emb, fs.faces[0])
    rep = is_separating(emb, cyc)
    assert rep.separating
    assert rep.has_empty_side


def test_capped_square_separates():
    # square with both sides coned: a sphere with a marked separating square
    square = Embedding([[1, 3], [0, 2], [1, 3], [2, 0]])
    fs = trace_faces(square)
    emb = cone_face(square, 0)
    emb = cone_face(emb, [f for f in range(trace_faces(emb).num_faces)
                          if trace_faces(emb).size(f) == 4][0])
    cyc = FaceCycle.from_vertices(emb, [0, 1, 2, 3])
    rep = is_separating(emb, cyc)
    assert rep.separating
    assert not rep.has_empty_side
    assert genus(emb) == 0 and is_triangulation(emb)


def test_noncontractible_cycle_is_not_separating():
    from grunbaum.catalog import gen_altshuler

    grid = gen_altshuler(3, 3, 0).embedding
    # a horizontal row of the grid wraps around the torus
    cyc = FaceCycle.from_vertices(grid, [0, 1, 2])
    rep = is_separating(grid, cyc)
    assert not rep.separating


def test_extract_disk_and_cap():
    base = build_embedding(K7)
    refined = stellate_face(base, 0)
    base_faces = trace_faces(base)
    # the stellated face of K7, cut out of the refinement, is a disk with
    # one interior vertex
    darts = [refined.dart(base.tail(d), base.head(d)) for d in base_faces.faces[0]]
    disk = extract_disk(refined, FaceCycle.from_darts(refined, darts), "interior")
    assert disk.interior_vertex_count() == 1
    capped = cap_with_apex(disk)
    assert genus(capped) == 0
    assert is_triangulation(capped)


def test_extract_disk_empty_side_is_face():
    emb = build_embedding(OCT)
    fs = trace_faces(emb)
    cyc = FaceCycle.from_darts(emb, fs.faces[0])
    disk = extract_disk(emb, cyc, "interior")
    assert disk.interior_vertex_count() == 0
    assert disk.embedding.num_edges == 3


def test_extract_disk_rejects_noncycle_side():
    from grunbaum.catalog import gen_altshuler

    grid = gen_altshuler(3, 3, 0).embedding
    cyc = FaceCycle.from_vertices(grid, [0, 1, 2])
    with pytest.raises(SideNotADisk):
        extract_disk(grid, cyc, "interior")


def test_cap_single_triangle_gives_k4():
    emb = build_embedding(OCT)
    fs = trace_faces(emb)
    disk = extract_disk(emb, FaceCycle.from_darts(emb, fs.faces[0]), "interior")
    capped = cap_with_apex(disk)
    assert capped.num_vertices == 4
    assert capped.num_edges == 6
    assert is_triangulation(capped)


def test_cap_square_with_diagonal():
    from grunbaum.catalog import enumerate_disks

    disk = next(d for d in enumerate_disks(4, 0))
    capped = cap_with_apex(disk)
    assert capped.num_vertices == 5
    assert capped.degree(4) == 4
    assert is_triangulation(capped) and genus(capped) == 0


def test_cap_triangulated_pentagon_apex_degree():
    from grunbaum.catalog import enumerate_disks

    disk = next(d for d in enumerate_disks(5, 1) if d.interior_vertex_count() == 1)
    capped = cap_with_apex(disk)
    assert capped.degree(capped.num_vertices - 1) == 5
    assert is_triangulation(capped) and genus(capped) == 0


def test_dual_of_triangulation_cubic_and_connected():
    from collections import deque

    for emb in (build_embedding(OCT), build_embedding(K7)):
        d = dual_graph(emb)
        assert d.is_cubic()
        seen = {0}
        queue = deque([0])
        while queue:
            f = queue.popleft()
            for g, _ in d.adjacency[f]:
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
        assert len(seen) == d.num_nodes


def test_stellate_bookkeeping():
    oct_ = build_embedding(OCT)
    st = stellate_face(oct_, 0)
    assert (st.num_vertices, st.num_edges) == (7, 15)
    assert genus(st) == 0 and is_triangulation(st)

    k7 = build_embedding(K7)
    st7 = stellate_face(k7, 0)
    assert (st7.num_vertices, st7.num_edges) == (8, 24)
    assert genus(st7) == 1 and is_triangulation(st7)
    st7b = stellate_face(st7, 0)
    assert st7b.num_vertices == 9 and genus(st7b) == 1 and is_triangulation(st7b)


def test_stellate_requires_triangle():
    with pytest.raises(FaceNotTriangle):
        stellate_face(gen_k6("6"), trace_faces(gen_k6("6")).sizes.index(6))


def test_genus_invariant_under_refinement():
    emb = build_embedding(K7)
    refined = random_refinement(emb, 10, seed=3)
    assert genus(refined) == 1
    assert is_triangulation(refined)
    assert refined.num_vertices == 17
    assert refined.num_edges == emb.num_edges + 30


def test_splice_disk_round_trip():
    from grunbaum.catalog import enumerate_disks

    e6 = gen_k6("6")
    fs = trace_faces(e6)
    hexf = next(f for f in range(fs.num_faces) if fs.size(f) == 6)
    disk = next(
        d for d in enumerate_disks(6, 2)
        if d.interior_vertex_count() == 2
        and not any(set(d.embedding.edge_ends(x)) <= set(range(6))
                    and x not in set(d.boundary_edges)
                    for x in range(d.embedding.num_edges))
    )
    spliced = splice_disk(e6, hexf, disk)
    assert genus(spliced) == 1
    assert is_triangulation(spliced)
    assert spliced.num_vertices == 8
