"""Small dense simple graphs stored as adjacency bit masks.

A :class:`Graph` holds ``n`` rows; bit ``j`` of ``adj[i]`` is set iff ``i``
and ``j`` are adjacent.  Vertex sets are plain ``int`` masks (or any iterable
of vertex indices where a function accepts a set).

Besides the structural queries this module provides a canonical form
(colour refinement + individualisation with automorphism pruning) and the
graph6 interchange format.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

MAX_ORDER = 62

VertexSet = Union[int, Iterable[int]]


class GraphError(ValueError):
    """Raised for malformed graph data."""


class Graph6Error(GraphError):
    """Raised when a graph6 string cannot be decoded."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: VertexSet) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count differs from n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond n")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def unchecked(cls, n: int, adj: Sequence[int]) -> "Graph":
        """Build without validation; for hot loops whose rows are symmetric by construction."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def adjacency_matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.adj]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Simple graph on ``0..n-1`` with the given edges (duplicates collapse)."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g`` (``order`` a permutation)."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << pos[u]
        adj[pos[v]] = row
    return Graph.unchecked(g.n, adj)


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """``G[S]`` with survivors relabelled ``0..|S|-1`` in index order."""
    m = mask_of(s) & g.full_mask
    keep = list(bits(m))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v] & m):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph.unchecked(len(keep), adj)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.full_mask & ~(1 << v))


def add_vertex(g: Graph, neighbor_mask: int) -> Graph:
    """Append vertex ``n`` adjacent to ``neighbor_mask``."""
    n = g.n
    adj = [row | ((neighbor_mask >> i & 1) << n) for i, row in enumerate(g.adj)]
    adj.append(neighbor_mask)
    return Graph.unchecked(n + 1, adj)


def edges_inside(g: Graph, s: VertexSet) -> int:
    m = mask_of(s)
    return sum((g.adj[v] & m).bit_count() for v in bits(m)) // 2


def edges_between(g: Graph, x: VertexSet, y: VertexSet) -> int:
    """``e(X, Y)`` for disjoint vertex sets."""
    xm, ym = mask_of(x), mask_of(y)
    if xm & ym:
        raise GraphError("edges_between needs disjoint vertex sets")
    return sum((g.adj[v] & ym).bit_count() for v in bits(xm))


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by smallest vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    # the null graph is treated as disconnected
    return g.n > 0 and len(components(g)) == 1


def is_connected_mask(g: Graph, m: int) -> bool:
    """Whether ``G[m]`` is connected (empty mask counts as disconnected)."""
    if not m:
        return False
    comp = frontier = m & -m
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & m & ~comp
        comp |= frontier
    return comp == m


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or ``None`` for forests."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for u in bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_triangle_free(g: Graph) -> bool:
    for v in range(g.n):
        for u in bits(g.adj[v] >> (v + 1) << (v + 1)):
            if g.adj[v] & g.adj[u]:
                return False
    return True


def is_independent(g: Graph, s: VertexSet) -> bool:
    m = mask_of(s)
    return all(not g.adj[v] & m for v in bits(m))


# ---------------------------------------------------------------------------
# canonical form


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable ordered partition.

    Colours are ranks of invariant signatures, so the result commutes with
    relabelling; old colour order is kept as the primary key.
    """
    n = g.n
    ncolors = len(set(colors))
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
            for v in range(n)
        ]
        ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [ranks[k] for k in keys]
        if len(ranks) == ncolors:
            return new
        colors, ncolors = new, len(ranks)


def _individualize(colors: list[int], v: int) -> list[int]:
    keys = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [ranks[k] for k in keys]


def _leaf_code(g: Graph, order: list[int]) -> int:
    """Upper-triangle adjacency string (graph6 bit order) of ``g`` relabelled by ``order``."""
    code = 0
    for j in range(1, g.n):
        row = g.adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _orbit_roots(n: int, gens: list[list[int]], fixed: Sequence[int]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        if any(perm[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _CanonSearch:
    def __init__(self, g: Graph):
        self.g = g
        self.best_code: Optional[int] = None
        self.best_order: Optional[list[int]] = None
        self.best_path: list[int] = []
        self.first_code: Optional[int] = None
        self.first_order: Optional[list[int]] = None
        self.first_path: list[int] = []
        self.gens: list[list[int]] = []

    def run(self) -> list[int]:
        g = self.g
        start = _refine(g, [g.adj[v].bit_count() for v in range(g.n)])
        self._search(start, [])
        assert self.best_order is not None
        return self.best_order

    def _automorphism(self, src: list[int], dst: list[int]) -> list[int]:
        perm = [0] * self.g.n
        for a, b in zip(src, dst):
            perm[a] = b
        return perm

    def _search(self, colors: list[int], path: list[int]) -> int:
        """DFS over individualisations; returns the depth to unwind to."""
        g = self.g
        n = g.n
        depth = len(path)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            order = sorted(range(n), key=colors.__getitem__)
            code = _leaf_code(g, order)
            if self.first_code is None:
                self.first_code, self.first_order, self.first_path = code, order, path
                self.best_code, self.best_order, self.best_path = code, order, path
                return depth
            for ref_code, ref_order, ref_path in (
                (self.first_code, self.first_order, self.first_path),
                (self.best_code, self.best_order, self.best_path),
            ):
                if code == ref_code:
                    self.gens.append(self._automorphism(ref_order, order))
                    common = 0
                    while common < depth and path[common] == ref_path[common]:
                        common += 1
                    return common
            if code < self.best_code:
                self.best_code, self.best_order, self.best_path = code, order, path
            return depth

        target = min(
            (cell for cell in cells.values() if len(cell) > 1),
            key=lambda cell: (len(cell), colors[cell[0]]),
        )
        tried: list[int] = []
        for v in target:
            if tried:
                # twins: the transposition is an automorphism fixing everything else
                if any((g.adj[v] & ~(1 << t)) == (g.adj[t] & ~(1 << v)) for t in tried):
                    continue
                roots = _orbit_roots(n, self.gens, path)
                if roots[v] in {roots[t] for t in tried}:
                    continue
            tried.append(v)
            back = self._search(_refine(g, _individualize(colors, v)), path + [v])
            if back < depth:
                return back
        return depth


def canonical_order(g: Graph) -> list[int]:
    """Vertex order giving the lexicographically least adjacency string found by the search."""
    if g.n <= 1:
        return list(range(g.n))
    return _CanonSearch(g).run()


def canonical_pair(g: Graph) -> tuple[bytes, Graph]:
    """Certificate together with the canonically relabelled graph."""
    canon = relabel(g, canonical_order(g))
    return encode_graph6(canon).encode("ascii"), canon


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_order(g))


def canonical_form(g: Graph) -> bytes:
    """Certificate: graph6 bytes of the canonically relabelled graph.

    The first byte encodes the order, so sorting certificates sorts by order
    first and then by canonical adjacency string.
    """
    return encode_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# graph6


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise GraphError("graph6 short form supports n <= 62")
    out = [chr(63 + g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} at position {pos} outside 63..126")
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise Graph6Error("extended graph6 size forms (n > 62) are not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = s[1:]
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: {len(payload)} of {need} characters")
    if len(payload) > need:
        raise Graph6Error(f"trailing data: {len(payload)} characters, expected {need}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            ch = ord(payload[k // 6]) - 63
            if ch >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield decode_graph6(line)


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(encode_graph6(g) + "\n" for g in graphs)
