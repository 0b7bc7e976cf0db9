"""Certified containment: induced embeddings, minors, planarity, F1 membership."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .graphcore import Graph, bits, girth, induced_subgraph, is_connected_mask, is_triangle_free
from .families import gen_complete, gen_complete_bipartite, gen_f1


@dataclass(frozen=True)
class EmbeddingWitness:
    """``map[i]`` is the host vertex carrying pattern vertex ``i``."""

    map: tuple[int, ...]

    def verify(self, pattern: Graph, host: Graph) -> bool:
        if len(self.map) != pattern.n or len(set(self.map)) != pattern.n:
            return False
        if any(not 0 <= h < host.n for h in self.map):
            return False
        for i in range(pattern.n):
            for j in range(i + 1, pattern.n):
                if pattern.has_edge(i, j) != host.has_edge(self.map[i], self.map[j]):
                    return False
        return True


@dataclass(frozen=True)
class MinorWitness:
    """``branch_sets[i]`` is the host vertex mask contracted onto target vertex ``i``."""

    branch_sets: tuple[int, ...]

    def verify(self, host: Graph, target: Graph) -> bool:
        if len(self.branch_sets) != target.n:
            return False
        seen = 0
        for bs in self.branch_sets:
            if bs & seen or bs & ~host.full_mask:
                return False
            if not is_connected_mask(host, bs):
                return False
            seen |= bs
        for i, j in target.edges():
            bi, bj = self.branch_sets[i], self.branch_sets[j]
            if not any(host.adj[v] & bj for v in bits(bi)):
                return False
        return True

    def as_lists(self) -> list[list[int]]:
        return [list(bits(bs)) for bs in self.branch_sets]


# ---------------------------------------------------------------------------
# induced embeddings


def _search_order(pattern: Graph) -> list[int]:
    """Pattern vertices ordered so each one (after the first of its component) touches an earlier one."""
    n = pattern.n
    deg = pattern.degrees()
    order: list[int] = []
    placed = 0
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if placed >> v & 1:
                continue
            key = ((pattern.adj[v] & placed).bit_count(), deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


def _degree_dominated(pattern: Graph, host: Graph) -> bool:
    pd = sorted(pattern.degrees(), reverse=True)
    hd = sorted(host.degrees(), reverse=True)
    return all(a <= b for a, b in zip(pd, hd))


def induced_embeds(pattern: Graph, host: Graph) -> Optional[EmbeddingWitness]:
    """First induced embedding of ``pattern`` into ``host`` (or ``None``).

    Backtracking over host candidates with bitset adjacency/non-adjacency
    constraints from already-mapped pattern vertices and a degree bound.
    """
    n, m = pattern.n, host.n
    if n > m:
        return None
    if n == 0:
        return EmbeddingWitness(())
    if pattern.num_edges() > host.num_edges() or not _degree_dominated(pattern, host):
        return None
    pg, hg = girth(pattern), girth(host)
    if pg is not None and (hg is None or pg < hg):
        return None

    order = _search_order(pattern)
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    by_degree = [0] * (max(pdeg) + 1)
    for d in range(len(by_degree)):
        by_degree[d] = sum(1 << h for h in range(m) if hdeg[h] >= d)
    # for each position, earlier positions that are adjacent / non-adjacent
    earlier_adj = []
    for pos, v in enumerate(order):
        earlier_adj.append([(k, pattern.has_edge(v, order[k])) for k in range(pos)])

    images = [0] * n
    full = host.full_mask

    def extend(pos: int, used: int) -> bool:
        if pos == n:
            return True
        cand = by_degree[pdeg[order[pos]]] & ~used
        for k, adjacent in earlier_adj[pos]:
            row = host.adj[images[k]]
            cand &= row if adjacent else full & ~row
            if not cand:
                return False
        while cand:
            low = cand & -cand
            h = low.bit_length() - 1
            images[pos] = h
            if extend(pos + 1, used | low):
                return True
            cand ^= low
        return False

    if not extend(0, 0):
        return None
    mapping = [0] * n
    for pos, v in enumerate(order):
        mapping[v] = images[pos]
    return EmbeddingWitness(tuple(mapping))


def induced_embeds_brute(pattern: Graph, host: Graph) -> bool:
    """Exhaustive check over all injections; test oracle for small hosts."""
    from itertools import permutations

    for image in permutations(range(host.n), pattern.n):
        if EmbeddingWitness(tuple(image)).verify(pattern, host):
            return True
    return False


# Connected induced subgraphs of F1(s), up to isomorphism, keyed by certificate.
# The gadgets {u_i, p_i} for i >= 3 are interchangeable, so a subgraph is fixed
# by its trace on the core {v1, v2, a, b, u1, u2} and by how many gadgets
# contribute both vertices or only u_i.  A lone p_i is isolated, which only
# matters for the one-vertex graph and that already arises from the core.
_F1_INDEX: dict[int, dict[bytes, tuple[int, tuple[int, ...]]]] = {}


def _f1_index(n: int) -> dict[bytes, tuple[int, tuple[int, ...]]]:
    """Certificate -> (least s, host vertices in canonical order) for order ``n``."""
    if n in _F1_INDEX:
        return _F1_INDEX[n]
    from .graphcore import canonical_order, encode_graph6, relabel

    table: dict[bytes, tuple[int, tuple[int, ...]]] = {}
    for core in range(64):
        c = core.bit_count()
        for both in range((n - c) // 2 + 1):
            only_u = n - c - 2 * both
            s = max(3, 2 + both + only_u)
            host = gen_f1(s)
            verts = list(bits(core))
            verts += [6 + j for j in range(both + only_u)]
            verts += [s + 4 + j for j in range(both)]
            mask = sum(1 << v for v in verts)
            if not is_connected_mask(host, mask):
                continue
            verts.sort()
            sub = induced_subgraph(host, mask)
            order = canonical_order(sub)
            cert = encode_graph6(relabel(sub, order)).encode("ascii")
            if cert not in table or s < table[cert][0]:
                table[cert] = (s, tuple(verts[k] for k in order))
    _F1_INDEX[n] = table
    return table


def is_f1_embeddable(g: Graph) -> Optional[tuple[int, EmbeddingWitness]]:
    """Least ``s >= 3`` with ``G`` an induced subgraph of ``F1(s)``, with a witness.

    Connected patterns are looked up in a table of the connected induced
    subgraphs of F1 (built once per order).  Disconnected patterns fall back
    to a direct search for ``s = 3..max(3, n)``, which suffices because F1(s)
    sits inside F1(s+1) and a pattern on ``n`` vertices meets at most ``n``
    gadgets.
    """
    n = g.n
    if n == 0:
        return 3, EmbeddingWitness(())
    if is_connected_mask(g, g.full_mask):
        from .graphcore import canonical_order, encode_graph6, relabel

        order = canonical_order(g)
        hit = _f1_index(n).get(encode_graph6(relabel(g, order)).encode("ascii"))
        if hit is None:
            return None
        s, host_vertices = hit
        mapping = [0] * n
        for i, v in enumerate(order):
            mapping[v] = host_vertices[i]
        return s, EmbeddingWitness(tuple(mapping))
    for s in range(3, max(3, n) + 1):
        w = induced_embeds(g, gen_f1(s))
        if w is not None:
            return s, w
    return None


def is_f1_embeddable_search(g: Graph) -> Optional[tuple[int, EmbeddingWitness]]:
    """Reference implementation by direct search for each ``s`` (test oracle)."""
    for s in range(3, max(3, g.n) + 1):
        w = induced_embeds(g, gen_f1(s))
        if w is not None:
            return s, w
    return None


# ---------------------------------------------------------------------------
# minors


class _Minor:
    """A contracted host: vertex k stands for host vertex mask ``groups[k]``."""

    __slots__ = ("adj", "groups")

    def __init__(self, adj: list[int], groups: list[int]):
        self.adj = adj
        self.groups = groups

    @property
    def n(self) -> int:
        return len(self.adj)

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def contract(self, u: int, v: int) -> "_Minor":
        """Merge ``v`` into ``u`` and drop ``v``."""
        keep = [k for k in range(self.n) if k != v]
        pos = {k: i for i, k in enumerate(keep)}
        merged = (self.adj[u] | self.adj[v]) & ~(1 << u) & ~(1 << v)
        adj = []
        groups = []
        for k in keep:
            row = merged if k == u else self.adj[k]
            if k != u and row >> v & 1:
                row |= 1 << u
            new = 0
            for x in bits(row & ~(1 << v)):
                new |= 1 << pos[x]
            adj.append(new)
            groups.append(self.groups[k] | self.groups[v] if k == u else self.groups[k])
        return _Minor(adj, groups)

    def delete(self, v: int) -> "_Minor":
        keep = [k for k in range(self.n) if k != v]
        pos = {k: i for i, k in enumerate(keep)}
        adj = []
        for k in keep:
            new = 0
            for x in bits(self.adj[k] & ~(1 << v)):
                new |= 1 << pos[x]
            adj.append(new)
        return _Minor(adj, [self.groups[k] for k in keep])

    def reduce(self, min_degree: int) -> "_Minor":
        """Drop vertices of degree < 2 and suppress degree-2 vertices.

        Valid for targets of minimum degree >= 3: such vertices cannot be
        singleton branch sets, and folding them into a neighbour keeps every
        model intact.
        """
        g = self
        if min_degree < 3:
            return g
        changed = True
        while changed:
            changed = False
            for v in range(g.n):
                d = g.adj[v].bit_count()
                if d < 2:
                    g = g.delete(v)
                    changed = True
                    break
                if d == 2:
                    u = (g.adj[v] & -g.adj[v]).bit_length() - 1
                    g = g.contract(u, v)
                    changed = True
                    break
        return g

    def key(self) -> tuple:
        return (tuple(self.adj),)


def _subgraph_model(adj: list[int], target: Graph) -> Optional[list[int]]:
    """Injective map target -> vertices with every target edge present (non-induced)."""
    n = len(adj)
    t = target.n
    tdeg = target.degrees()
    order = _search_order(target)
    earlier = [[k for k in range(pos) if target.has_edge(v, order[k])] for pos, v in enumerate(order)]
    deg = [r.bit_count() for r in adj]
    images = [0] * t

    def extend(pos: int, used: int) -> bool:
        if pos == t:
            return True
        d = tdeg[order[pos]]
        cand = sum(1 << h for h in range(n) if deg[h] >= d) & ~used
        for k in earlier[pos]:
            cand &= adj[images[k]]
        while cand:
            low = cand & -cand
            images[pos] = low.bit_length() - 1
            if extend(pos + 1, used | low):
                return True
            cand ^= low
        return False

    if not extend(0, 0):
        return None
    out = [0] * t
    for pos, v in enumerate(order):
        out[v] = images[pos]
    return out


def _find_minor(start: _Minor, target: Graph) -> Optional[MinorWitness]:
    tn, te = target.n, target.num_edges()
    tmin = min(target.degrees()) if tn else 0
    seen: set = set()
    stack = [start.reduce(tmin)]
    while stack:
        g = stack.pop()
        if g.n < tn or g.num_edges() < te:
            continue
        k = g.key()
        if k in seen:
            continue
        seen.add(k)
        model = _subgraph_model(g.adj, target)
        if model is not None:
            return MinorWitness(tuple(g.groups[v] for v in model))
        if g.n == tn:
            continue
        for u in range(g.n):
            for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
                stack.append(g.contract(u, v).reduce(tmin))
    return None


def has_minor(host: Graph, target: Graph) -> Optional[MinorWitness]:
    """Branch sets realising ``target`` as a minor of ``host``, if any.

    Depth-first search over edge contractions (a minor is a subgraph of a
    contraction), with degree-<=2 reduction when the target has minimum
    degree >= 3 and vertex/edge-count cut-offs.
    """
    if target.n > host.n or target.num_edges() > host.num_edges():
        return None
    if target.n == 0:
        return MinorWitness(())
    start = _Minor(list(host.adj), [1 << v for v in range(host.n)])
    return _find_minor(start, target)


@lru_cache(maxsize=None)
def _k5() -> Graph:
    return gen_complete(5)


@lru_cache(maxsize=None)
def _k33() -> Graph:
    return gen_complete_bipartite(3, 3)


def kuratowski_targets() -> tuple[Graph, Graph]:
    return _k5(), _k33()


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    witness: Optional[MinorWitness] = None
    obstruction: Optional[str] = None  # "K5", "K3,3", or "edge-bound"

    def __bool__(self) -> bool:
        return self.planar

    @property
    def target(self) -> Optional[Graph]:
        """The Kuratowski graph the witness contracts onto, if any."""
        return {"K5": _k5(), "K3,3": _k33()}.get(self.obstruction or "")


def is_planar(g: Graph, want_witness: bool = True) -> PlanarityResult:
    """Planarity as absence of K5 and K3,3 minors.

    Euler bounds (e <= 3n-6, and e <= 2n-4 without triangles) reject first;
    the minor witness is then searched only if ``want_witness``.
    """
    n, e = g.n, g.num_edges()
    if n >= 3:
        bound = 2 * n - 4 if is_triangle_free(g) else 3 * n - 6
        if e > bound:
            if not want_witness:
                return PlanarityResult(False, None, "edge-bound")
            for name, target in (("K5", _k5()), ("K3,3", _k33())):
                w = has_minor(g, target)
                if w is not None:
                    return PlanarityResult(False, w, name)
            raise AssertionError("edge bound violated but no Kuratowski minor found")
    for name, target in (("K3,3", _k33()), ("K5", _k5())):
        w = has_minor(g, target)
        if w is not None:
            return PlanarityResult(False, w, name)
    return PlanarityResult(True)


def has_minor_brute(host: Graph, target: Graph) -> bool:
    """Exhaustive branch-set enumeration; test oracle for hosts with n <= 7.

    Walks every labelling of host vertices by "unused" or a block number
    (blocks numbered in order of first appearance, so each family of blocks
    is visited once), keeps families of ``target.n`` connected blocks, and
    tries every bijection of blocks onto target vertices.
    """
    from itertools import permutations

    t = target.n
    if t == 0:
        return True
    tedges = target.edges()
    n = host.n
    blocks = [0] * t

    def quotient_has_target() -> bool:
        if not all(is_connected_mask(host, b) for b in blocks):
            return False
        touch = [[i != j and any(host.adj[v] & blocks[j] for v in bits(blocks[i])) for j in range(t)] for i in range(t)]
        if sum(map(sum, touch)) // 2 < len(tedges):
            return False
        return any(all(touch[p[i]][p[j]] for i, j in tedges) for p in permutations(range(t)))

    def assign(v: int, used: int) -> bool:
        if n - v < t - used:
            return False
        if v == n:
            return quotient_has_target()
        for lab in range(-1, min(used + 1, t)):
            if lab >= 0:
                blocks[lab] |= 1 << v
            found = assign(v + 1, max(used, lab + 1))
            if lab >= 0:
                blocks[lab] &= ~(1 << v)
            if found:
                return True
        return False

    return assign(0, 0)
