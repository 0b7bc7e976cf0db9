from __future__ import annotations

import pytest

from spectra.enumerate import (
    CLASS_G,
    TREES,
    TRIANGLE_FREE_PLANAR,
    UNICYCLIC,
    ClassPredicate,
    EnumerationConfig,
    EnumerationError,
    enumerate_connected,
    enumerate_trees,
    enumerate_unicyclic,
    extend_by_one_vertex,
    grow_levels,
    naive_class,
    write_levels,
)
from spectra.families import gen_cycle
from spectra.graphcore import canonical_form, new_graph, read_graph6_lines


def certs(graphs):
    return [canonical_form(g) for g in graphs]


@pytest.mark.parametrize("pred", [CLASS_G, TRIANGLE_FREE_PLANAR, TREES, UNICYCLIC, ClassPredicate()],
                         ids=lambda p: p.label)
def test_matches_naive_enumeration(pred):
    levels = enumerate_connected(EnumerationConfig(6, pred))
    for n in range(1, 7):
        assert certs(levels[n]) == certs(naive_class(n, pred))


def test_lambda2_pruning_is_sound():
    pruned = enumerate_connected(EnumerationConfig(8, CLASS_G))
    deferred = enumerate_connected(EnumerationConfig(8, CLASS_G, lambda2_pruning=False))
    assert {n: certs(v) for n, v in pruned.items()} == {n: certs(v) for n, v in deferred.items()}


def test_known_counts():
    trees = enumerate_trees(10)
    assert [len(trees[n]) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    uni = enumerate_unicyclic(7)
    assert [len(uni[n]) for n in range(3, 8)] == [1, 2, 5, 13, 33]
    connected = enumerate_connected(EnumerationConfig(7, ClassPredicate()))
    assert [len(connected[n]) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    assert len(enumerate_connected(EnumerationConfig(4, CLASS_G))[4]) == 3


def test_members_satisfy_predicate():
    for g in grow_levels(EnumerationConfig(10, CLASS_G)).all_members():
        assert CLASS_G.accepts(g)


def test_worker_count_does_not_change_output():
    one = enumerate_connected(EnumerationConfig(8, CLASS_G, worker_count=1))
    two = enumerate_connected(EnumerationConfig(8, CLASS_G, worker_count=2))
    assert one == two


def test_continuation_from_previous_levels():
    base = grow_levels(EnumerationConfig(6))
    more = grow_levels(EnumerationConfig(8), start=base)
    assert more.members == grow_levels(EnumerationConfig(8)).members


def test_extend_by_one_vertex():
    ext = extend_by_one_vertex(gen_cycle(6), CLASS_G)
    assert ext and all(h.n == 7 and CLASS_G.accepts(h) for h in ext)
    assert len(set(certs(ext))) == len(ext)
    # the 3-cube is a class member with no class-preserving extension
    cube = new_graph(8, [(i, i ^ b) for i in range(8) for b in (1, 2, 4) if i < i ^ b])
    assert CLASS_G.accepts(cube) and extend_by_one_vertex(cube, CLASS_G) == []


def test_write_levels(tmp_path):
    levels = enumerate_trees(5)
    paths = write_levels(levels, tmp_path)
    assert [p.name for p in paths] == [f"level_{n:02d}.g6" for n in range(1, 6)]
    back = list(read_graph6_lines(paths[-1].read_text().splitlines()))
    assert back == levels[5]


def test_config_bounds():
    with pytest.raises(EnumerationError):
        EnumerationConfig(63)
