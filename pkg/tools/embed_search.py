"""Search rotation systems of a given graph realizing a prescribed face census.

Backtracking over face walks: faces are built one dart at a time; the chosen
face successors induce, at each vertex, links "in-dart -> next out-dart"
which must close into a single rotation cycle per vertex.  Used offline to
derive the bundled catalog embeddings; not part of the installed package.
"""
from __future__ import annotations

from collections import Counter


class EmbedSearch:
    def __init__(self, adj: list[set[int]], census: list[int]):
        self.n = len(adj)
        self.adj = [sorted(a) for a in adj]
        edges = sorted((u, v) for u in range(self.n) for v in adj[u] if u < v)
        self.edges = edges
        self.eindex = {uv: i for i, uv in enumerate(edges)}
        self.nd = 2 * len(edges)
        self.census = Counter(census)
        assert sum(census) == self.nd, "census must cover all darts"
        self.tail = [0] * self.nd
        self.head = [0] * self.nd
        for e, (u, v) in enumerate(edges):
            self.tail[2 * e], self.head[2 * e] = u, v
            self.tail[2 * e + 1], self.head[2 * e + 1] = v, u
        self.degree = [len(a) for a in adj]

    def dart(self, u: int, v: int) -> int:
        e = self.eindex[(min(u, v), max(u, v))]
        return 2 * e + (0 if u < v else 1)

    def solutions(self, fixed_first_face: list[int] | None = None):
        """Yield rotation systems (neighbour lists) realizing the census."""
        nd = self.nd
        sigma = [-1] * nd      # sigma[t] = next out-dart after in-dart twin t
        sigma_in = [-1] * nd
        placed = [False] * nd
        remaining = Counter(self.census)

        def can_link(d_in: int, d_out: int) -> bool:
            t = d_in ^ 1  # out-dart at v = head(d_in) that precedes d_out
            if sigma[t] != -1 or sigma_in[d_out] != -1:
                return False
            deg = self.degree[self.tail[t]]
            if t == d_out:
                return deg == 1
            # reject closing a rotation cycle that misses some out-darts;
            # the cycle's darts are the sigma-path d_out .. t inclusive
            end, length = d_out, 1
            while sigma[end] != -1:
                end = sigma[end]
                length += 1
            if end == t:
                return length == deg
            return True

        def set_link(d_in: int, d_out: int):
            sigma[d_in ^ 1] = d_out
            sigma_in[d_out] = d_in ^ 1

        def unset_link(d_in: int, d_out: int):
            sigma[d_in ^ 1] = -1
            sigma_in[d_out] = -1

        def extract_rotations():
            rot = []
            for v in range(self.n):
                d0 = self.dart(v, self.adj[v][0])
                seq = [self.head[d0]]
                d = sigma[d0]
                while d != d0:
                    seq.append(self.head[d])
                    d = sigma[d]
                rot.append(seq)
            return rot

        def start_face():
            d0 = -1
            for d in range(nd):
                if not placed[d]:
                    d0 = d
                    break
            if d0 < 0:
                yield extract_rotations()
                return
            placed[d0] = True
            yield from grow_face(d0, d0, 1)
            placed[d0] = False

        def grow_face(d0: int, d_cur: int, size: int):
            if (
                remaining.get(size, 0) > 0
                and self.head[d_cur] == self.tail[d0]
                and can_link(d_cur, d0)
            ):
                set_link(d_cur, d0)
                remaining[size] -= 1
                yield from start_face()
                remaining[size] += 1
                unset_link(d_cur, d0)
            biggest = max((s for s, c in remaining.items() if c > 0), default=0)
            if size >= biggest:
                return
            v = self.head[d_cur]
            for w in self.adj[v]:
                d_nxt = self.dart(v, w)
                if placed[d_nxt] or not can_link(d_cur, d_nxt):
                    continue
                placed[d_nxt] = True
                set_link(d_cur, d_nxt)
                yield from grow_face(d0, d_nxt, size + 1)
                unset_link(d_cur, d_nxt)
                placed[d_nxt] = False

        if fixed_first_face is None:
            yield from start_face()
            return

        # pin the first face to cut relabeling symmetry
        verts = fixed_first_face
        k = len(verts)
        darts = [self.dart(verts[i], verts[(i + 1) % k]) for i in range(k)]
        linked = []
        ok = True
        for d in darts:
            placed[d] = True
        for i, d in enumerate(darts):
            nxt = darts[(i + 1) % k]
            if can_link(d, nxt):
                set_link(d, nxt)
                linked.append((d, nxt))
            else:
                ok = False
                break
        if ok:
            remaining[k] -= 1
            yield from start_face()
            remaining[k] += 1
        for d, nxt in linked:
            unset_link(d, nxt)
        for d in darts:
            placed[d] = False


def complete_graph(n: int) -> list[set[int]]:
    return [set(range(n)) - {v} for v in range(n)]


if __name__ == "__main__":
    adj = [set(range(6)) - {v, (v + 3) % 6} for v in range(6)]
    s = EmbedSearch(adj, [3] * 8)
    for rot in s.solutions():
        print(rot)
        break
