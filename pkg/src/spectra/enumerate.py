"""Isomorph-free level-wise generation of connected graphs in hereditary classes.

Level ``n+1`` is built by attaching a new vertex to every member of level
``n`` through every admissible neighbour mask and keeping one representative
per canonical certificate.  Any connected graph has a non-cut vertex, and
the flags used for pruning are closed under deleting vertices, so every
member is reached from some member of the previous level.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator, Optional

from .embed import is_planar
from .graphcore import (
    Graph,
    add_vertex,
    canonical_pair,
    encode_graph6,
    is_connected,
    is_triangle_free,
    write_graph6_lines,
)
from .spectral import ExtensionSpectra, lambda2_at_most_one

LEVEL_LIMIT = 10**7


class EnumerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class ClassPredicate:
    require_triangle_free: bool = False
    require_planar: bool = False
    require_lambda2_le_one: bool = False
    require_tree: bool = False
    require_unicyclic: bool = False

    def edge_cap(self, n: int) -> Optional[int]:
        """Largest edge count allowed on ``n`` vertices while growing (hereditary bound)."""
        if self.require_tree:
            return n - 1
        if self.require_unicyclic:
            return n
        return None

    def final_ok(self, g: Graph) -> bool:
        """Filters that are not hereditary and only apply to reported graphs."""
        e = g.num_edges()
        if self.require_tree and e != g.n - 1:
            return False
        if self.require_unicyclic and e != g.n:
            return False
        return True

    def accepts(self, g: Graph) -> bool:
        """Independent post-hoc membership check (connectivity included)."""
        if not is_connected(g):
            return False
        if self.require_triangle_free and not is_triangle_free(g):
            return False
        if self.require_planar and not is_planar(g, want_witness=False).planar:
            return False
        if self.require_lambda2_le_one and not lambda2_at_most_one(g):
            return False
        if self.require_tree and g.num_edges() != g.n - 1:
            return False
        if self.require_unicyclic and g.num_edges() != g.n:
            return False
        return True

    @property
    def label(self) -> str:
        flags = [
            name
            for name, on in (
                ("triangle-free", self.require_triangle_free),
                ("planar", self.require_planar),
                ("lambda2<=1", self.require_lambda2_le_one),
                ("tree", self.require_tree),
                ("unicyclic", self.require_unicyclic),
            )
            if on
        ]
        return "connected" + "".join(" & " + f for f in flags)


#: connected triangle-free planar graphs with second eigenvalue at most 1
CLASS_G = ClassPredicate(require_triangle_free=True, require_planar=True, require_lambda2_le_one=True)
TRIANGLE_FREE_PLANAR = ClassPredicate(require_triangle_free=True, require_planar=True)
TRIANGLE_FREE_LAMBDA2 = ClassPredicate(require_triangle_free=True, require_lambda2_le_one=True)
TREES = ClassPredicate(require_tree=True)
UNICYCLIC = ClassPredicate(require_unicyclic=True)


@dataclass(frozen=True)
class EnumerationConfig:
    n_max: int
    predicate: ClassPredicate = CLASS_G
    worker_count: int = 1
    lambda2_pruning: bool = True  # False defers the spectral flag to the final filter (tests only)

    def __post_init__(self) -> None:
        if self.n_max > 62:
            raise EnumerationError("n_max beyond 62 is unsupported")


def default_workers() -> int:
    raw = os.environ.get("SPECTRA_WORKERS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _submasks_independent(g: Graph, limit: Optional[int], triangle_free: bool) -> Iterator[int]:
    """Non-empty neighbour masks of size <= limit, independent when ``triangle_free``."""
    n = g.n

    def rec(v: int, mask: int, size: int, banned: int) -> Iterator[int]:
        if v == n:
            if mask:
                yield mask
            return
        yield from rec(v + 1, mask, size, banned)
        if (limit is None or size < limit) and not banned >> v & 1:
            nb = banned | g.adj[v] if triangle_free else banned
            yield from rec(v + 1, mask | 1 << v, size + 1, nb)

    yield from rec(0, 0, 0, 0)


def _attachments(g: Graph, pred: ClassPredicate) -> list[int]:
    """Neighbour masks passing the cheap hereditary flags (triangle-free, edge cap, spectrum)."""
    cap = pred.edge_cap(g.n + 1)
    limit = None if cap is None else cap - g.num_edges()
    if limit is not None and limit <= 0:
        return []
    masks = list(_submasks_independent(g, limit, pred.require_triangle_free))
    if pred.require_planar and g.n + 1 >= 3:
        e = g.num_edges()
        bound = 2 * (g.n + 1) - 4 if pred.require_triangle_free else 3 * (g.n + 1) - 6
        masks = [m for m in masks if e + m.bit_count() <= bound]
    if pred.require_lambda2_le_one and g.n + 1 >= 2 and masks:
        counts = ExtensionSpectra(g).counts_above_one(masks)
        masks = [m for m, c in zip(masks, counts) if c <= 1]
    return masks


def _extend_raw(g: Graph, pred: ClassPredicate) -> dict[bytes, Graph]:
    out: dict[bytes, Graph] = {}
    for m in _attachments(g, pred):
        cert, canon = canonical_pair(add_vertex(g, m))
        if cert not in out:
            out[cert] = canon
    return out


def _extend_chunk(args: tuple[list[str], ClassPredicate]) -> dict[bytes, str]:
    from .graphcore import decode_graph6

    lines, pred = args
    merged: dict[bytes, str] = {}
    for line in lines:
        for cert, h in _extend_raw(decode_graph6(line), pred).items():
            merged.setdefault(cert, encode_graph6(h))
    return merged


def _expensive_ok(h: Graph, pred: ClassPredicate) -> bool:
    return not pred.require_planar or is_planar(h, want_witness=False).planar


def extend_by_one_vertex(g: Graph, predicate: ClassPredicate) -> list[Graph]:
    """Non-isomorphic one-vertex extensions of ``g`` satisfying the hereditary flags.

    Results are canonically labelled and sorted by certificate.
    """
    raw = _extend_raw(g, predicate)
    return [raw[c] for c in sorted(raw) if _expensive_ok(raw[c], predicate)]


def _next_level(
    parents: list[Graph], pred: ClassPredicate, workers: int
) -> list[Graph]:
    merged: dict[bytes, Graph] = {}
    if workers > 1 and len(parents) > 1:
        from .graphcore import decode_graph6

        lines = [encode_graph6(p) for p in parents]
        chunks = [lines[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_extend_chunk, [(c, pred) for c in chunks if c]):
                for cert, text in part.items():
                    if cert not in merged:
                        merged[cert] = decode_graph6(text)
    else:
        for p in parents:
            for cert, h in _extend_raw(p, pred).items():
                if cert not in merged:
                    merged[cert] = h
                    if len(merged) > LEVEL_LIMIT:
                        raise EnumerationError(f"level exceeds {LEVEL_LIMIT} graphs")
    return [merged[c] for c in sorted(merged) if _expensive_ok(merged[c], pred)]


@dataclass
class Levels:
    """Growth levels (hereditary closure) and the reported members per order."""

    grown: dict[int, list[Graph]] = field(default_factory=dict)
    members: dict[int, list[Graph]] = field(default_factory=dict)

    def counts(self) -> dict[int, int]:
        return {n: len(v) for n, v in self.members.items()}

    def all_members(self) -> Iterator[Graph]:
        for n in sorted(self.members):
            yield from self.members[n]


def grow_levels(config: EnumerationConfig, start: Optional[Levels] = None) -> Levels:
    """Build levels 1..n_max, optionally continuing from previously grown levels."""
    pred = config.predicate
    grow_pred = pred
    deferred = pred.require_lambda2_le_one and not config.lambda2_pruning
    if deferred:
        grow_pred = replace(pred, require_lambda2_le_one=False)

    def report(g: Graph) -> bool:
        return pred.final_ok(g) and (not deferred or lambda2_at_most_one(g))

    workers = max(1, config.worker_count)
    out = Levels(dict(start.grown), dict(start.members)) if start else Levels()
    if config.n_max >= 1 and 1 not in out.grown:
        k1 = Graph(1, (0,))
        out.grown[1] = [k1]
        out.members[1] = [k1] if report(k1) else []
    for n in range(2, config.n_max + 1):
        if n in out.grown:
            continue
        level = _next_level(out.grown[n - 1], grow_pred, workers)
        out.grown[n] = level
        out.members[n] = [g for g in level if report(g)]
    for n in list(out.grown):
        if n > config.n_max:
            del out.grown[n]
            del out.members[n]
    return out


def enumerate_connected(config: EnumerationConfig) -> dict[int, list[Graph]]:
    """One representative per isomorphism class for each order ``1..n_max``."""
    return grow_levels(config).members


def enumerate_trees(n_max: int, worker_count: int = 1) -> dict[int, list[Graph]]:
    return enumerate_connected(EnumerationConfig(n_max, TREES, worker_count))


def enumerate_unicyclic(n_max: int, worker_count: int = 1) -> dict[int, list[Graph]]:
    levels = enumerate_connected(EnumerationConfig(n_max, UNICYCLIC, worker_count))
    return {n: v for n, v in levels.items() if n >= 3}


def write_levels(levels: dict[int, list[Graph]], directory: Path, stem: str = "level") -> list[Path]:
    """One graph6 file per order, named ``<stem>_<nn>.g6``."""
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for n in sorted(levels):
        path = directory / f"{stem}_{n:02d}.g6"
        path.write_text(write_graph6_lines(levels[n]), encoding="utf-8", newline="\n")
        paths.append(path)
    return paths


def naive_class(n: int, predicate: ClassPredicate) -> list[Graph]:
    """All labelled graphs on ``n`` vertices filtered by ``predicate``, one per class (test oracle)."""
    from itertools import combinations

    pairs = list(combinations(range(n), 2))
    found: dict[bytes, Graph] = {}
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        g = Graph.unchecked(n, adj)
        if not predicate.accepts(g):
            continue
        cert, canon = canonical_pair(g)
        found.setdefault(cert, canon)
    return [found[c] for c in sorted(found)]
