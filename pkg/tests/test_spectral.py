from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import numpy as np
import pytest

from spectra.families import gen_clebsch, gen_cycle, gen_f1, gen_path, gen_petersen, gen_star
from spectra.graphcore import Graph, add_vertex, new_graph
from spectra.spectral import (
    ExtensionSpectra,
    IntPoly,
    SpectralError,
    X,
    approx_spectrum,
    berkowitz,
    char_poly,
    count_eigenvalues_greater_than,
    count_eigenvalues_less_than,
    jacobi_eigenvalues,
    lambda2_at_most_one,
    lambda2_equals_one,
    multiplicity_of_integer_eigenvalue,
    positive_root_count_real_rooted,
    shift_poly,
    sign_changes,
    spectral_summary,
)


def rand_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    return new_graph(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


def cofactor_char_poly(g: Graph) -> IntPoly:
    """det(xI - A) by Laplace expansion along rows, memoised on the remaining column set."""
    n = g.n
    entry = [[(X if i == j else IntPoly((-1,)) if g.has_edge(i, j) else IntPoly())
              for j in range(n)] for i in range(n)]

    @lru_cache(maxsize=None)
    def det(row: int, cols: int) -> IntPoly:
        if row == n:
            return IntPoly((1,))
        total = IntPoly()
        sign = 1
        for c in range(n):
            if cols >> c & 1:
                e = entry[row][c]
                if not e.is_zero():
                    term = e * det(row + 1, cols & ~(1 << c))
                    total = total + term if sign > 0 else total - term
                sign = -sign
        return total

    return det(0, (1 << n) - 1)


def test_intpoly_arithmetic():
    p = (X - 1) * (X + 2)
    assert p.coeffs == (-2, 1, 1)
    assert p(1) == 0 and p(-2) == 0
    assert IntPoly.from_roots([1, -2]) == p
    assert 3 * X + 1 == IntPoly((1, 3)) and 1 - X == IntPoly((1, -1))
    assert str(X**2 - 2 * X + 1) == "x^2 - 2*x + 1"
    assert shift_poly(X**2, 1) == X**2 + 2 * X + 1


@pytest.mark.parametrize("n", range(1, 8))
def test_berkowitz_matches_cofactor_expansion(n):
    rng = random.Random(n)
    for _ in range(6):
        g = rand_graph(rng, n, rng.random())
        assert char_poly(g) == cofactor_char_poly(g)


def test_berkowitz_on_integer_matrix():
    # det(xI - M) for M = [[2,1],[1,2]] is x^2 - 4x + 3
    assert berkowitz([[2, 1], [1, 2]]) == [1, -4, 3]


def test_coefficient_sum_rules():
    rng = random.Random(11)
    for _ in range(60):
        g = rand_graph(rng, rng.randint(3, 10), rng.random())
        c = char_poly(g).coeffs
        n = g.n
        triangles = sum(1 for a, b, d in combinations(range(n), 3)
                        if g.has_edge(a, b) and g.has_edge(b, d) and g.has_edge(a, d))
        assert c[n] == 1 and c[n - 1] == 0
        assert c[n - 2] == -g.num_edges()
        assert c[n - 3] == -2 * triangles


def test_multiplicity_conservation():
    rng = random.Random(12)
    for _ in range(60):
        g = rand_graph(rng, rng.randint(1, 10), rng.random())
        for k in range(-3, 4):
            total = (count_eigenvalues_greater_than(g, k) + count_eigenvalues_less_than(g, k)
                     + multiplicity_of_integer_eigenvalue(g, k))
            assert total == g.n


def test_known_spectra():
    assert char_poly(gen_cycle(4)) == X**4 - 4 * X**2
    assert char_poly(gen_petersen()) == (X - 3) * (X - 1) ** 5 * (X + 2) ** 4
    assert char_poly(gen_clebsch()) == (X - 5) * (X - 1) ** 10 * (X + 3) ** 5
    assert lambda2_equals_one(gen_petersen()) and lambda2_equals_one(gen_clebsch())


@pytest.mark.parametrize("s", range(3, 11))
def test_f1_spectrum_identity(s):
    expected = (X + 2) * (X + 1) ** (s - 2) * (X - 1) ** s * (X**3 - (2 * s - 1) * X - 2)
    assert char_poly(gen_f1(s)) == expected
    assert lambda2_equals_one(gen_f1(s))


def test_lambda2_decisions():
    assert lambda2_at_most_one(gen_path(5))
    assert not lambda2_at_most_one(gen_path(6))
    assert lambda2_at_most_one(Graph(1, (0,))) and lambda2_at_most_one(Graph(0, ()))
    with pytest.raises(SpectralError):
        lambda2_equals_one(Graph(1, (0,)))
    assert lambda2_at_most_one(gen_star(7))
    assert not lambda2_equals_one(gen_star(7))
    summary = spectral_summary(gen_cycle(6))
    assert summary.count_above_one == 1 and summary.mult_of_one == 2 and summary.lambda2_eq_one


def test_descartes_helpers():
    assert sign_changes([1, 0, -3, 2]) == 2
    assert positive_root_count_real_rooted(IntPoly.from_roots([1, 2, -3])) == 2
    with pytest.raises(SpectralError):
        positive_root_count_real_rooted(IntPoly())


def test_jacobi_matches_numpy():
    rng = random.Random(13)
    for _ in range(40):
        g = rand_graph(rng, rng.randint(1, 12), rng.random())
        a = np.array(g.adjacency_matrix(), dtype=float)
        ours = sorted(jacobi_eigenvalues(a.tolist()))
        assert np.allclose(ours, np.linalg.eigvalsh(a), atol=1e-9)
        assert approx_spectrum(g) == sorted(approx_spectrum(g), reverse=True)


def test_extension_spectra_matches_direct():
    rng = random.Random(14)
    for _ in range(40):
        g = rand_graph(rng, rng.randint(1, 8), rng.random())
        masks = list(range(1 << g.n))
        ext = ExtensionSpectra(g)
        polys = ext.shifted_polys(masks)
        counts = ext.counts_above_one(masks)
        for m, desc, c in zip(masks, polys, counts):
            h = add_vertex(g, m)
            direct = shift_poly(char_poly(h), 1)
            assert list(desc) == list(reversed(direct.coeffs)) + [0] * (h.n + 1 - len(direct.coeffs))
            assert c == count_eigenvalues_greater_than(h, 1)
