from __future__ import annotations

import pytest

from spectra.embed import induced_embeds
from spectra.families import (
    FAMILIES,
    FamilyError,
    FamilySpec,
    gen_clebsch,
    gen_complete_bipartite,
    gen_f1,
    gen_f2,
    gen_g0,
    gen_k3_pendants,
    gen_petersen,
    gen_theta,
    gen_u_cal,
    xu_named_graphs,
)
from spectra.graphcore import are_isomorphic, girth, is_connected, is_triangle_free


def srg_parameters(g):
    k = g.degree(0)
    lam = {(g.adj[u] & g.adj[v]).bit_count() for u, v in g.edges()}
    mu = {(g.adj[u] & g.adj[v]).bit_count()
          for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)}
    assert len(set(g.degrees())) == 1 and len(lam) == 1 and len(mu) == 1
    return g.n, k, lam.pop(), mu.pop()


@pytest.mark.parametrize("s", range(3, 9))
def test_f1_shape(s):
    g = gen_f1(s)
    assert (g.n, g.num_edges()) == (2 * s + 2, 3 * s)
    assert is_connected(g) and is_triangle_free(g) and girth(g) == (5 if s == 3 else 4)
    assert induced_embeds(g, gen_f1(s + 1)) is not None


def test_f2_and_g0():
    g = gen_f2(4, 2)
    assert (g.n, g.num_edges()) == (7, 6)
    assert induced_embeds(gen_f2(3, 1), gen_f2(5, 5)) is not None
    assert sorted(gen_g0().degrees()) == [1, 1, 1, 1, 3, 3]
    with pytest.raises(FamilyError):
        gen_f2(2, 3)


def test_strongly_regular_constructions():
    assert srg_parameters(gen_petersen()) == (10, 3, 0, 1)
    assert srg_parameters(gen_clebsch()) == (16, 5, 0, 2)


def test_theta_graphs():
    assert are_isomorphic(gen_theta([2, 2, 2]), gen_complete_bipartite(2, 3))
    assert gen_theta([1, 2]).num_edges() == 3
    for bad in ([3], [0, 2], [1, 1, 2]):
        with pytest.raises(FamilyError):
            gen_theta(bad)


def test_unicyclic_hosts():
    for name, g in xu_named_graphs().items():
        assert g.num_edges() == g.n and is_connected(g), name
    assert gen_k3_pendants(2, 2, 2).n == 9
    assert induced_embeds(gen_u_cal(2), gen_u_cal(3)) is not None
    assert gen_u_cal(0).n == 3


def test_family_spec_dispatch():
    assert FamilySpec("f1", (3,)).build() == gen_f1(3)
    assert FamilySpec("THETA", (2, 2, 2)).build() == gen_theta([2, 2, 2])
    with pytest.raises(FamilyError):
        FamilySpec("nope").build()
    with pytest.raises(FamilyError):
        FamilySpec("F2", (3,)).build()
    assert "CLEBSCH" in FAMILIES
