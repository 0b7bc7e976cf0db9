"""Generators for the named graphs and parametrised families.

Labelings are fixed and documented per generator so witnesses in reports
stay reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .graphcore import Graph, GraphError, new_graph


class FamilyError(ValueError):
    pass


def gen_f1(s: int) -> Graph:
    """K_{2,s} with v1u1, v1u2 subdivided and a pendant on each of u3..us.

    Vertex order: v1=0, v2=1, a=2, b=3, u1..us = 4..s+3, p3..ps = s+4..2s+1,
    where a subdivides v1u1 and b subdivides v1u2.
    """
    if s < 3:
        raise FamilyError("F1 needs s >= 3")
    v1, v2, a, b = 0, 1, 2, 3
    u = [None] + [3 + i for i in range(1, s + 1)]
    p = {i: s + 1 + i for i in range(3, s + 1)}
    edges = [(v1, a), (a, u[1]), (v1, b), (b, u[2])]
    edges += [(v2, u[i]) for i in range(1, s + 1)]
    edges += [(v1, u[i]) for i in range(3, s + 1)]
    edges += [(u[i], p[i]) for i in range(3, s + 1)]
    return new_graph(2 * s + 2, edges)


def gen_f2(t: int, k: int) -> Graph:
    """Star K_{1,t} (centre 0, leaves 1..t) with pendants on leaves 1..k (vertices t+1..t+k)."""
    if t < 1:
        raise FamilyError("F2 needs t >= 1")
    if not 0 <= k <= t:
        raise FamilyError("F2 needs 0 <= k <= t")
    edges = [(0, i) for i in range(1, t + 1)]
    edges += [(i, t + i) for i in range(1, k + 1)]
    return new_graph(1 + t + k, edges)


def gen_g0() -> Graph:
    """Centre 0, leaves 1..3, two pendants 4, 5 on leaf 1."""
    return new_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_star(t: int) -> Graph:
    if t < 0:
        raise FamilyError("star needs t >= 0")
    return new_graph(t + 1, [(0, i) for i in range(1, t + 1)])


def gen_complete(n: int) -> Graph:
    return new_graph(n, combinations(range(n), 2))


def gen_complete_bipartite(s: int, t: int) -> Graph:
    """Sides ``0..s-1`` and ``s..s+t-1``."""
    if s < 0 or t < 0:
        raise FamilyError("complete bipartite needs s, t >= 0")
    return new_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def gen_k3_pendants(s1: int, s2: int, s3: int) -> Graph:
    """Triangle 0,1,2 with ``s_i`` pendants on triangle vertex ``i-1`` (pendants numbered in order)."""
    if min(s1, s2, s3) < 0:
        raise FamilyError("pendant counts must be >= 0")
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for centre, count in enumerate((s1, s2, s3)):
        for _ in range(count):
            edges.append((centre, nxt))
            nxt += 1
    return new_graph(nxt, edges)


def gen_u_cal(t: int) -> Graph:
    """Triangle 0,1,2 with ``t`` pendant paths 0-(2i+3)-(2i+4) of length 2 on vertex 0."""
    if t < 0:
        raise FamilyError("t must be >= 0")
    edges = [(0, 1), (1, 2), (0, 2)]
    for i in range(t):
        mid, end = 3 + 2 * i, 4 + 2 * i
        edges += [(0, mid), (mid, end)]
    return new_graph(3 + 2 * t, edges)


# the four unicyclic graphs drawn alongside Xu's theorem; labels follow the drawing
def gen_u1() -> Graph:
    return new_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 5), (2, 6)])


def gen_u2() -> Graph:
    return new_graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (2, 5), (2, 6)])


def gen_u3() -> Graph:
    return new_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 5), (2, 6), (1, 7)])


def gen_u4() -> Graph:
    return new_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 5), (0, 6), (1, 7)])


def gen_petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {1..5} in lexicographic order, adjacent when disjoint."""
    subsets = list(combinations(range(1, 6), 2))
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return new_graph(10, edges)


def gen_clebsch() -> Graph:
    """Folded 5-cube: 4-bit words, adjacent when the XOR has weight 1 or is 1111."""
    edges = [
        (i, j)
        for i, j in combinations(range(16), 2)
        if bin(i ^ j).count("1") == 1 or i ^ j == 0b1111
    ]
    return new_graph(16, edges)


def gen_theta(lengths: Sequence[int]) -> Graph:
    """Poles 0 and 1 joined by internally disjoint paths with the given edge lengths.

    Internal vertices are numbered path by path, from the pole-0 end.
    """
    lengths = list(lengths)
    if len(lengths) < 2:
        raise FamilyError("theta graph needs at least two paths")
    if any(k < 1 for k in lengths):
        raise FamilyError("path lengths must be >= 1")
    if lengths.count(1) > 1:
        raise FamilyError("more than one length-1 path gives a multi-edge")
    edges = []
    nxt = 2
    for k in lengths:
        prev = 0
        for _ in range(k - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    try:
        return new_graph(nxt, edges)
    except GraphError as exc:
        raise FamilyError(str(exc)) from exc


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def build(self) -> Graph:
        try:
            fn, arity = FAMILIES[self.kind.upper()]
        except KeyError:
            raise FamilyError(f"unknown family {self.kind!r}") from None
        if self.kind.upper() == "THETA":
            return fn(self.params)
        if arity != len(self.params):
            raise FamilyError(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}")
        return fn(*self.params)


FAMILIES: dict[str, tuple[Callable[..., Graph], int]] = {
    "F1": (gen_f1, 1),
    "F2": (gen_f2, 2),
    "G0": (gen_g0, 0),
    "PATH": (gen_path, 1),
    "CYCLE": (gen_cycle, 1),
    "STAR": (gen_star, 1),
    "COMPLETE": (gen_complete, 1),
    "COMPLETE_BIPARTITE": (gen_complete_bipartite, 2),
    "K3_PENDANTS": (gen_k3_pendants, 3),
    "U_CAL": (gen_u_cal, 1),
    "U1": (gen_u1, 0),
    "U2": (gen_u2, 0),
    "U3": (gen_u3, 0),
    "U4": (gen_u4, 0),
    "PETERSEN": (gen_petersen, 0),
    "CLEBSCH": (gen_clebsch, 0),
    "THETA": (gen_theta, -1),
}


def xu_named_graphs() -> dict[str, Graph]:
    """The eight sporadic hosts of Xu's unicyclic theorem."""
    return {
        "C6": gen_cycle(6),
        "K3(3;1;1)": gen_k3_pendants(3, 1, 1),
        "K3(4;1;0)": gen_k3_pendants(4, 1, 0),
        "K3(2;2;2)": gen_k3_pendants(2, 2, 2),
        "U1": gen_u1(),
        "U2": gen_u2(),
        "U3": gen_u3(),
        "U4": gen_u4(),
    }
