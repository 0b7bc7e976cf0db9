"""Re-derivation of the sporadic catalog and bounded checks of the structure lemmas.

Every verification collects findings instead of stopping at the first
counterexample, so a report doubles as a falsification record.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

from .embed import EmbeddingWitness, induced_embeds, is_f1_embeddable
from .enumerate import (
    CLASS_G,
    TRIANGLE_FREE_PLANAR,
    ClassPredicate,
    EnumerationConfig,
    Levels,
    enumerate_trees,
    enumerate_unicyclic,
    extend_by_one_vertex,
    grow_levels,
)
from .families import gen_f1, gen_f2, gen_g0, gen_u_cal, xu_named_graphs
from .graphcore import (
    Graph,
    bits,
    canonical_form,
    delete_vertex,
    edges_between,
    encode_graph6,
    girth,
    induced_subgraph,
    is_connected_mask,
    is_independent,
)
from .spectral import count_eigenvalues_greater_than, lambda2_at_most_one

SCHEMA_VERSION = "1"
#: number of sporadic maximal graphs named in the main characterization
EXPECTED_SPORADIC_COUNT = 13


class CatalogError(ValueError):
    """Precondition violation (wrong class, wrong girth, acyclic input)."""


# ---------------------------------------------------------------------------
# base-cycle decomposition


def shortest_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All shortest cycles, each starting at its least vertex and heading to the smaller neighbour.

    Sorted by their vertex sets, so the first entry is the lexicographic tie-break.
    """
    k = girth(g)
    if k is None:
        return []
    found: set[tuple[int, ...]] = set()

    def walk(path: list[int], used: int) -> None:
        last = path[-1]
        if len(path) == k:
            if g.has_edge(last, path[0]):
                cyc = path if path[1] < path[-1] else [path[0]] + path[:0:-1]
                found.add(tuple(cyc))
            return
        for w in bits(g.adj[last] & ~used):
            if w > path[0]:
                walk(path + [w], used | 1 << w)

    for v in range(g.n):
        walk([v], 1 << v)
    return sorted(found, key=lambda c: (sorted(c), c))


@dataclass(frozen=True)
class BaseCycleDecomposition:
    """Outside vertices classified by their exact neighbourhood on a shortest cycle."""

    base: tuple[int, ...]
    t0: frozenset[int]
    t1: frozenset[int]
    t2: frozenset[int]
    higher: frozenset[int]
    ts_map: dict[frozenset[int], frozenset[int]]

    def ts(self, *base_vertices: int) -> frozenset[int]:
        return self.ts_map.get(frozenset(base_vertices), frozenset())

    def t_x(self, i: int) -> frozenset[int]:
        """T_{x_i} with cyclic index ``i`` (0-based)."""
        return self.ts(self.base[i % len(self.base)])

    def t_antipodal(self, i: int) -> frozenset[int]:
        """T_{x_i, x_{i+2}} with cyclic index ``i`` (0-based)."""
        k = len(self.base)
        return self.ts(self.base[i % k], self.base[(i + 2) % k])

    def to_dict(self) -> dict[str, Any]:
        return {
            "base": list(self.base),
            "t0": sorted(self.t0),
            "t1": sorted(self.t1),
            "t2": sorted(self.t2),
            "higher": sorted(self.higher),
            "ts": {",".join(map(str, sorted(s))): sorted(v) for s, v in sorted(
                self.ts_map.items(), key=lambda kv: sorted(kv[0]))},
        }


def c4_decomposition(g: Graph, base: Optional[Sequence[int]] = None) -> BaseCycleDecomposition:
    """Decompose around ``base`` (default: the lexicographically first shortest cycle).

    Works for any girth; the name reflects its main use on girth-4 graphs.
    """
    if base is None:
        cycles = shortest_cycles(g)
        if not cycles:
            raise CatalogError("graph is acyclic")
        base = cycles[0]
    base = tuple(base)
    on_cycle = sum(1 << v for v in base)
    ts_map: dict[frozenset[int], set[int]] = {}
    layers: dict[int, set[int]] = {0: set(), 1: set(), 2: set()}
    higher: set[int] = set()
    for v in range(g.n):
        if on_cycle >> v & 1:
            continue
        s = frozenset(bits(g.adj[v] & on_cycle))
        ts_map.setdefault(s, set()).add(v)
        (layers[len(s)] if len(s) <= 2 else higher).add(v)
    return BaseCycleDecomposition(
        base,
        frozenset(layers[0]),
        frozenset(layers[1]),
        frozenset(layers[2]),
        frozenset(higher),
        {s: frozenset(v) for s, v in ts_map.items()},
    )


# ---------------------------------------------------------------------------
# clause checks


@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _mask(vs: Iterable[int]) -> int:
    return sum(1 << v for v in vs)


def _deg_into(g: Graph, v: int, target: Iterable[int]) -> int:
    return (g.adj[v] & _mask(target)).bit_count()


def in_class_g(g: Graph) -> bool:
    """Independent membership test for the target class."""
    return CLASS_G.accepts(g)


def _require(g: Graph, want_girth: int) -> None:
    if not in_class_g(g):
        raise CatalogError("graph is not a connected triangle-free planar graph with lambda2 <= 1")
    if girth(g) != want_girth:
        raise CatalogError(f"girth is {girth(g)}, expected {want_girth}")


def check_lemma_c2(g: Graph, base: Optional[Sequence[int]] = None) -> list[ClauseResult]:
    """Evaluate the seven girth-4 structure clauses on the base-cycle decomposition."""
    _require(g, 4)
    d = c4_decomposition(g, base)
    tx = [d.t_x(i) for i in range(4)]
    anti = [d.t_antipodal(i) for i in range(4)]  # anti[i] == anti[i + 2]
    t2, t0, t1 = d.t2, d.t0, d.t1
    out = []

    problems = []
    if d.higher:
        problems.append(f"vertices with >= 3 base neighbours: {sorted(d.higher)}")
    if t2 != anti[0] | anti[1]:
        problems.append("T2 is not the union of the two antipodal classes")
    for i in range(4):
        if edges_between(g, anti[i], tx[i]):
            problems.append(f"edge between T(x{i + 1},x{i + 3}) and T(x{i + 1})")
        if not is_independent(g, tx[i]):
            problems.append(f"T(x{i + 1}) not independent")
        if not is_independent(g, anti[i]):
            problems.append(f"T(x{i + 1},x{i + 3}) not independent")
        if len(tx[i]) > 3:
            problems.append(f"|T(x{i + 1})| = {len(tx[i])} > 3")
    out.append(ClauseResult("(i)", not problems, "; ".join(problems)))

    out.append(ClauseResult("(ii)", is_independent(g, t2)))

    bad = [v for v in sorted(t2) if _deg_into(g, v, t0) > 1]
    out.append(ClauseResult("(iii)", not bad, f"T2 vertices with > 1 T0 neighbour: {bad}" if bad else ""))

    out.append(ClauseResult("(iv)", not edges_between(g, t0, t1)))

    problems = []
    for v in sorted(t0):
        d2 = _deg_into(g, v, t2)
        if d2 < 1:
            problems.append(f"{v} has no T2 neighbour")
        for i in range(2):
            da = _deg_into(g, v, anti[i])
            if da >= 1:
                if not d2 == da <= 2:
                    problems.append(f"{v}: degree into T2 {d2}, into T(x{i + 1},x{i + 3}) {da}")
                if da == 2 and not len(t2) == len(anti[i]) == 2:
                    problems.append(f"{v}: two antipodal neighbours but |T2| = {len(t2)}")
    out.append(ClauseResult("(v)", not problems, "; ".join(problems)))

    out.append(ClauseResult("(vi)", is_independent(g, t0)))

    problems = []
    for i in range(4):
        opposite = tx[(i + 2) % 4]
        for u in sorted(tx[i]):
            du = _deg_into(g, u, opposite)
            if not len(opposite) - 1 <= du <= 2:
                problems.append(f"{u} in T(x{i + 1}) has {du} neighbours in T(x{(i + 2) % 4 + 1})")
            for j in (i - 1, i + 1):
                side = tx[j % 4]
                ds = _deg_into(g, u, side)
                if not len(side) - 2 <= ds <= 1:
                    problems.append(f"{u} in T(x{i + 1}) has {ds} neighbours in T(x{j % 4 + 1})")
    out.append(ClauseResult("(vii)", not problems, "; ".join(problems)))
    return out


def check_claim_girth5(g: Graph, base: Optional[Sequence[int]] = None) -> list[ClauseResult]:
    """Girth-5 clauses on the C5 decomposition, preceded by the preliminary facts T0 = {} and T = T1."""
    _require(g, 5)
    d = c4_decomposition(g, base)
    out = [ClauseResult(
        "T=T1",
        not d.t0 and not d.t2 and not d.higher,
        "" if not (d.t0 or d.t2 or d.higher) else
        f"T0={sorted(d.t0)} T2={sorted(d.t2)} higher={sorted(d.higher)}",
    )]
    tx = [d.t_x(i) for i in range(5)]
    big = [i + 1 for i in range(5) if len(tx[i]) > 1]
    out.append(ClauseResult("(i)", not big, f"|T(x_i)| > 1 for i in {big}" if big else ""))
    problems = []
    for i in range(5):
        for j in range(i + 1, 5):
            base_adj = g.has_edge(d.base[i], d.base[j])
            for u in tx[i]:
                for v in tx[j]:
                    if g.has_edge(u, v) == base_adj:
                        problems.append(f"u={u} (x{i + 1}), v={v} (x{j + 1})")
    out.append(ClauseResult("(ii)", not problems, "; ".join(problems)))
    return out


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Finding:
    graph6: str
    kind: str
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"graph6": self.graph6, "kind": self.kind, "details": self.details}


@dataclass
class Report:
    """Outcome of a verification suite or catalog derivation (JSON schema version 1)."""

    suite: str
    n_max: int
    members: dict[int, int] = field(default_factory=dict)
    findings: list[Finding] = field(default_factory=list)
    sporadics: list[dict[str, Any]] = field(default_factory=list)
    stabilized: Optional[bool] = None
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.findings

    def add(self, g: Graph, kind: str, **details: Any) -> None:
        self.findings.append(Finding(encode_graph6(g), kind, details))

    def findings_of(self, kind: str) -> list[Finding]:
        return [f for f in self.findings if f.kind == kind]

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "n_max": self.n_max,
            "members": {str(n): c for n, c in sorted(self.members.items())},
            "findings": [f.to_dict() for f in self.findings],
            "sporadics": self.sporadics,
            "stabilized": self.stabilized,
            "notes": self.notes,
        }


# ---------------------------------------------------------------------------
# minimal obstructions


@dataclass(frozen=True)
class Obstruction:
    graph: Graph
    count_above_one: int
    deletions_ok: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph6": encode_graph6(self.graph),
            "n": self.graph.n,
            "edges": self.graph.num_edges(),
            "girth": girth(self.graph),
            "count_above_one": self.count_above_one,
            "minimal": self.deletions_ok,
        }


@dataclass
class ObstructionReport:
    n_max: int
    base: str
    obstructions: list[Obstruction] = field(default_factory=list)

    def graphs(self) -> list[Graph]:
        return [o.graph for o in self.obstructions]

    def by_order(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for o in self.obstructions:
            out[o.graph.n] = out.get(o.graph.n, 0) + 1
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "n_max": self.n_max,
            "base": self.base,
            "by_order": {str(k): v for k, v in sorted(self.by_order().items())},
            "obstructions": [o.to_dict() for o in self.obstructions],
        }


def minimal_obstructions(
    n_max: int, base: ClassPredicate = ClassPredicate(require_triangle_free=True), worker_count: int = 1
) -> ObstructionReport:
    """Connected graphs of the base class with lambda2 > 1 whose proper induced subgraphs all have lambda2 <= 1.

    Such a graph minus a non-cut vertex is a connected class member with
    lambda2 <= 1, so candidates are the one-vertex extensions of the
    lambda2-restricted class.  Minimality is re-checked on every vertex
    deletion (connected or not); by interlacing that covers all proper
    induced subgraphs.
    """
    from dataclasses import replace

    if base.require_lambda2_le_one:
        raise CatalogError("base class must not already impose lambda2 <= 1")
    report = ObstructionReport(n_max, base.label)
    if n_max < 2:
        return report
    restricted = replace(base, require_lambda2_le_one=True)
    levels = grow_levels(EnumerationConfig(n_max - 1, restricted, worker_count))
    for n in range(1, n_max):
        found: dict[bytes, Graph] = {}
        for g in levels.grown.get(n, []):
            for h in extend_by_one_vertex(g, base):
                if not lambda2_at_most_one(h):
                    found.setdefault(canonical_form(h), h)
        for cert in sorted(found):
            h = found[cert]
            ok = all(lambda2_at_most_one(delete_vertex(h, v)) for v in range(h.n))
            if ok:
                report.obstructions.append(
                    Obstruction(h, count_eigenvalues_greater_than(h, 1), ok)
                )
    return report


# ---------------------------------------------------------------------------
# sporadic catalog


@dataclass(frozen=True)
class Provenance:
    kind: str  # "F1_EMBEDDABLE" or "SPORADIC"
    value: Optional[int] = None  # s for F1, id for maximal sporadics

    def __str__(self) -> str:
        return self.kind if self.value is None else f"{self.kind}({self.value})"


@dataclass(frozen=True)
class CatalogEntry:
    graph: Graph
    provenance: Provenance
    maximal: bool
    witness: Optional[EmbeddingWitness] = None


@dataclass
class CatalogReport:
    n_cap: int
    levels: Levels
    entries: list[CatalogEntry]
    non_f1_counts: dict[int, int]
    stabilized: bool
    findings: list[Finding] = field(default_factory=list)

    @property
    def sporadics(self) -> list[CatalogEntry]:
        return [e for e in self.entries if e.maximal]

    def sporadic_graphs(self) -> list[Graph]:
        return [e.graph for e in self.sporadics]

    def to_report(self) -> Report:
        rep = Report("catalog", self.n_cap, self.levels.counts(), list(self.findings))
        rep.sporadics = [
            {"id": e.provenance.value, "graph6": encode_graph6(e.graph), "n": e.graph.n,
             "girth": girth(e.graph)}
            for e in self.sporadics
        ]
        rep.stabilized = self.stabilized
        rep.notes = {
            "non_f1_members": {str(n): c for n, c in sorted(self.non_f1_counts.items())},
            "sporadic_count": len(self.sporadics),
            "expected_sporadic_count": EXPECTED_SPORADIC_COUNT,
        }
        return rep


def derive_sporadic_maximal(n_cap: int = 14, worker_count: int = 1) -> CatalogReport:
    """Enumerate the class up to ``n_cap``, split off F1 subgraphs and keep the maximal rest.

    Stabilized means level ``n_cap`` has no member outside F1.  Every
    connected graph loses a vertex and stays connected, so a larger
    sporadic member would leave a sporadic member at ``n_cap``; hence
    stabilization rules out sporadic members of every order above the cap.
    """
    levels = grow_levels(EnumerationConfig(n_cap, CLASS_G, worker_count))
    entries: list[CatalogEntry] = []
    non_f1: dict[int, int] = {}
    next_id = 1
    for n in sorted(levels.members):
        non_f1[n] = 0
        for g in levels.members[n]:
            hit = is_f1_embeddable(g)
            if hit is not None:
                entries.append(CatalogEntry(g, Provenance("F1_EMBEDDABLE", hit[0]), False, hit[1]))
                continue
            non_f1[n] += 1
            maximal = not extend_by_one_vertex(g, CLASS_G)
            prov = Provenance("SPORADIC", next_id if maximal else None)
            if maximal:
                next_id += 1
            entries.append(CatalogEntry(g, prov, maximal))
    stabilized = non_f1.get(n_cap, 0) == 0
    report = CatalogReport(n_cap, levels, entries, non_f1, stabilized)
    _audit_catalog(report)
    return report


def _audit_catalog(report: CatalogReport) -> None:
    """Soundness, incomparability and count comparison, appended as findings."""
    spor = report.sporadic_graphs()
    if not report.stabilized:
        report.findings.append(Finding("", "unstable", {
            "n_cap": report.n_cap, "non_f1_at_cap": report.non_f1_counts.get(report.n_cap, 0)}))
    for e in report.entries:
        if e.witness is not None and not e.witness.verify(e.graph, gen_f1(e.provenance.value)):
            report.findings.append(Finding(encode_graph6(e.graph), "bad-f1-witness", {}))
    for i, a in enumerate(spor):
        if not in_class_g(a) or is_f1_embeddable(a) is not None:
            report.findings.append(Finding(encode_graph6(a), "unsound-sporadic", {"id": i + 1}))
        for j, b in enumerate(spor):
            if i != j and a.n <= b.n and induced_embeds(a, b) is not None:
                report.findings.append(Finding(
                    encode_graph6(a), "comparable-sporadics", {"inside": encode_graph6(b)}))
    # forward direction: every non-F1 member sits in some maximal sporadic
    for e in report.entries:
        if e.provenance.kind == "SPORADIC" and not e.maximal:
            if not any(b.n > e.graph.n and induced_embeds(e.graph, b) for b in spor):
                report.findings.append(Finding(encode_graph6(e.graph), "uncovered-member", {}))
    # backward direction: connected induced subgraphs of a sporadic are members
    known = {canonical_form(g) for g in report.levels.all_members()}
    for i, a in enumerate(spor):
        for m in range(1, 1 << a.n):
            if is_connected_mask(a, m) and canonical_form(induced_subgraph(a, m)) not in known:
                report.findings.append(Finding(encode_graph6(a), "subgraph-outside-class", {"id": i + 1}))
                break
    if report.stabilized and len(spor) != EXPECTED_SPORADIC_COUNT:
        report.findings.append(Finding("", "sporadic-count", {
            "derived": len(spor), "expected": EXPECTED_SPORADIC_COUNT}))


# ---------------------------------------------------------------------------
# theorem checks


def verify_tree_theorem(n_max: int, worker_count: int = 1) -> Report:
    """lambda2 <= 1 for a tree iff it is an induced subgraph of some F2(t, k) or of G0.

    F2(t, k) is induced in F2(n_max, n_max) whenever t, k <= n_max, so that one host covers the family.
    """
    rep = Report("trees", n_max)
    host = gen_f2(max(1, n_max), max(1, n_max))
    g0 = gen_g0()
    for n, trees in sorted(enumerate_trees(n_max, worker_count).items()):
        rep.members[n] = len(trees)
        for t in trees:
            spectral = lambda2_at_most_one(t)
            embeds = induced_embeds(t, host) is not None or induced_embeds(t, g0) is not None
            if spectral != embeds:
                rep.add(t, "tree-biconditional", lambda2_le_one=spectral, embeds=embeds)
    return rep


def verify_unicyclic_theorem(n_max: int, worker_count: int = 1) -> Report:
    """lambda2 <= 1 for a unicyclic graph iff it is induced in U(t) or one of the eight named hosts.

    U(t) is induced in U(t + 1), so U(n_max) stands in for the whole family.
    """
    rep = Report("unicyclic", n_max)
    hosts = [gen_u_cal(max(0, n_max))] + list(xu_named_graphs().values())
    for n, graphs in sorted(enumerate_unicyclic(n_max, worker_count).items()):
        rep.members[n] = len(graphs)
        for g in graphs:
            spectral = lambda2_at_most_one(g)
            embeds = any(h.n >= g.n and induced_embeds(g, h) is not None for h in hosts)
            if spectral != embeds:
                rep.add(g, "unicyclic-biconditional", lambda2_le_one=spectral, embeds=embeds)
    return rep


def _girth_lemma_findings(rep: Report, g: Graph, all_bases: bool) -> None:
    k = girth(g)
    if k == 6 and g.n != 6:
        rep.add(g, "girth6-census", n=g.n)
    if k is not None and k >= 7:
        rep.add(g, "girth-above-6", girth=k)
    if k == 5:
        failed = [r.to_dict() for r in check_claim_girth5(g) if not r.passed]
        if failed:
            rep.add(g, "claim-girth5", failed=failed)
    if k == 4:
        failed = [r.to_dict() for r in check_lemma_c2(g) if not r.passed]
        if failed:
            rep.add(g, "lemma-c2", failed=failed)
        elif all_bases:
            bad = [list(c) for c in shortest_cycles(g)
                   if not all(r.passed for r in check_lemma_c2(g, c))]
            if bad:
                rep.notes.setdefault("lemma-c2-some-bases", []).append(
                    {"graph6": encode_graph6(g), "failing_bases": bad})


ALL_BASES_LIMIT = 8


def verify_girth_lemmas(n_max: int, worker_count: int = 1, levels: Optional[Levels] = None) -> Report:
    """Girth-6 census and the girth-5 / girth-4 structure clauses over the class up to ``n_max``."""
    rep = Report("girth-lemmas", n_max)
    if levels is None:
        levels = grow_levels(EnumerationConfig(n_max, CLASS_G, worker_count))
    for n in sorted(levels.members):
        if n > n_max:
            continue
        rep.members[n] = len(levels.members[n])
        for g in levels.members[n]:
            _girth_lemma_findings(rep, g, n <= ALL_BASES_LIMIT)
    census = [encode_graph6(g) for g in levels.all_members() if g.n <= n_max and girth(g) == 6]
    rep.notes["girth6_members"] = census
    return rep


def verify_main_theorem(
    n_max: int, catalog: Optional[CatalogReport] = None, n_cap: int = 14, worker_count: int = 1
) -> Report:
    """Biconditional over all connected triangle-free planar graphs up to ``n_max`` plus the girth lemmas."""
    if catalog is None:
        catalog = derive_sporadic_maximal(max(n_cap, n_max + 1), worker_count)
    if catalog.n_cap < n_max + 1:
        raise CatalogError("catalog cap must exceed n_max")
    rep = Report("main", n_max)
    rep.stabilized = catalog.stabilized
    spor = catalog.sporadic_graphs()
    rep.sporadics = catalog.to_report().sporadics
    if not catalog.stabilized:
        rep.findings.append(Finding("", "unstable", {"n_cap": catalog.n_cap}))
    universe = grow_levels(EnumerationConfig(n_max, TRIANGLE_FREE_PLANAR, worker_count))
    class_counts: dict[int, int] = {}
    for n in sorted(universe.members):
        graphs = universe.members[n]
        rep.members[n] = 0
        for g in graphs:
            spectral = lambda2_at_most_one(g)
            rep.members[n] += spectral
            covered = is_f1_embeddable(g) is not None or any(
                s.n >= g.n and induced_embeds(g, s) is not None for s in spor)
            if spectral != covered:
                rep.add(g, "main-biconditional", lambda2_le_one=spectral, covered=covered)
            if spectral:
                _girth_lemma_findings(rep, g, n <= ALL_BASES_LIMIT)
        class_counts[n] = len(graphs)
    rep.notes["triangle_free_planar_counts"] = {str(n): c for n, c in sorted(class_counts.items())}
    rep.notes["girth6_members"] = [
        encode_graph6(g) for n in sorted(universe.members) for g in universe.members[n]
        if girth(g) == 6 and lambda2_at_most_one(g)]
    # cross-check the class members against the catalog levels
    for n in sorted(rep.members):
        if rep.members[n] != len(catalog.levels.members.get(n, [])):
            rep.findings.append(Finding("", "member-count-mismatch", {
                "n": n, "universe": rep.members[n], "catalog": len(catalog.levels.members.get(n, []))}))
    return rep

