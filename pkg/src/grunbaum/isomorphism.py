"""Isomorphisms of embeddings (rotation-preserving vertex bijections).

An embedding isomorphism maps rotations to rotations either all in the same
cyclic direction (orientation-preserving) or all reversed.  The search is
rooted: once the image of one dart is chosen, rotation alignment propagates
the rest deterministically, so the cost per anchor is linear.
"""
from __future__ import annotations

from collections import deque
from typing import Iterator

from .embedding import Embedding


def _try_anchor(
    e1: Embedding, e2: Embedding, d1: int, d2: int, reverse: bool
) -> list[int] | None:
    vmap = [-1] * e1.num_vertices
    used = [False] * e2.num_vertices
    u1, v1 = e1.tail(d1), e1.head(d1)
    u2, v2 = e2.tail(d2), e2.head(d2)

    def assign(a: int, b: int) -> bool:
        if vmap[a] == -1:
            if used[b]:
                return False
            vmap[a] = b
            used[b] = True
            return True
        return vmap[a] == b

    if not (assign(u1, u2) and assign(v1, v2)):
        return None
    # queue of (vertex, one neighbour whose image is already aligned)
    queue = deque([(u1, v1), (v1, u1)])
    processed = [False] * e1.num_vertices
    while queue:
        v, anchor = queue.popleft()
        if processed[v]:
            continue
        processed[v] = True
        r1 = e1.rotation(v)
        r2 = e2.rotation(vmap[v])
        if len(r1) != len(r2):
            return None
        if reverse:
            r2 = tuple(reversed(r2))
        i1 = r1.index(anchor)
        try:
            i2 = r2.index(vmap[anchor])
        except ValueError:
            return None
        k = len(r1)
        for off in range(k):
            a, b = r1[(i1 + off) % k], r2[(i2 + off) % k]
            if not assign(a, b):
                return None
            if not processed[a]:
                queue.append((a, v))
    if -1 in vmap:
        return None
    # confirm every rotation maps exactly (guards disconnected corner cases)
    for v in range(e1.num_vertices):
        r1 = [vmap[w] for w in e1.rotation(v)]
        r2 = list(e2.rotation(vmap[v]))
        if reverse:
            r2.reverse()
        k = len(r2)
        if len(r1) != k or not any(r1 == r2[i:] + r2[:i] for i in range(k)):
            return None
    return vmap


def embedding_isomorphisms(
    e1: Embedding, e2: Embedding, orientation: str = "both"
) -> Iterator[tuple[list[int], bool]]:
    """Yield (vertex_map, reversed) pairs for every rooted match found.

    ``orientation`` is "preserve", "reverse", or "both".  Duplicate maps may
    be yielded when the embedding has symmetries; callers dedupe if needed.
    """
    if (
        e1.num_vertices != e2.num_vertices
        or e1.num_edges != e2.num_edges
        or sorted(map(len, e1.rotations)) != sorted(map(len, e2.rotations))
    ):
        return
    flags = {"preserve": (False,), "reverse": (True,), "both": (False, True)}[orientation]
    d1 = 0
    seen = set()
    for reverse in flags:
        for d2 in range(e2.num_darts):
            vmap = _try_anchor(e1, e2, d1, d2, reverse)
            if vmap is not None:
                key = (tuple(vmap), reverse)
                if key not in seen:
                    seen.add(key)
                    yield vmap, reverse


def embeddings_isomorphic(e1: Embedding, e2: Embedding) -> bool:
    """True if some vertex bijection carries one rotation system to the other,
    up to global orientation reversal."""
    return next(embedding_isomorphisms(e1, e2), None) is not None


def embedding_automorphisms(e: Embedding) -> list[tuple[list[int], bool]]:
    """All automorphisms (vertex map, orientation-reversed flag)."""
    return list(embedding_isomorphisms(e, e))
