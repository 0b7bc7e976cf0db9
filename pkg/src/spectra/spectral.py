"""Exact eigenvalue-threshold decisions for adjacency matrices.

Everything on the decision path is integer arithmetic: characteristic
polynomials come from Berkowitz's division-free algorithm, thresholds are
moved to the origin by an exact Taylor shift, and positive roots of the
(real-rooted) shifted polynomial are counted with Descartes' rule of signs.
A cyclic Jacobi eigenvalue routine is kept only as an independent float
oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .graphcore import Graph


class SpectralError(ValueError):
    pass


class JacobiNotConverged(ArithmeticError):
    pass


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial; ``coeffs[k]`` is the coefficient of ``x**k``."""

    coeffs: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "IntPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @staticmethod
    def _lift(other: "IntPoly | int") -> "IntPoly":
        return other if isinstance(other, IntPoly) else IntPoly((other,))

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        a, b = self.coeffs, self._lift(other).coeffs
        m = max(len(a), len(b))
        return IntPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)
        )

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    __radd__ = __add__

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return self._lift(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        a, b = self.coeffs, self._lift(other).coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


X = IntPoly((0, 1))


def berkowitz(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients (highest degree first) of ``det(xI - M)`` for an integer matrix."""
    n = len(matrix)
    poly = [1]
    for r in range(n):
        a = matrix[r][r]
        row = [matrix[r][j] for j in range(r)]
        vec = [matrix[i][r] for i in range(r)]
        col = [1, -a]
        for k in range(r):
            col.append(-sum(x * y for x, y in zip(row, vec)))
            if k < r - 1:
                vec = [sum(matrix[i][j] * vec[j] for j in range(r)) for i in range(r)]
        new = [0] * (r + 2)
        for i in range(r + 2):
            acc = 0
            for j in range(max(0, i - len(col) + 1), min(i, r) + 1):
                acc += col[i - j] * poly[j]
            new[i] = acc
        poly = new
    return poly


def char_poly_matrix(matrix: Sequence[Sequence[int]]) -> IntPoly:
    return IntPoly(reversed(berkowitz(matrix)))


def char_poly(g: Graph) -> IntPoly:
    """Exact monic ``det(xI - A(G))``."""
    if g.n == 0:
        return IntPoly((1,))
    return char_poly_matrix(g.adjacency_matrix())


def shift_poly(p: IntPoly, c: int) -> IntPoly:
    """``q(y) = p(y + c)`` by exact binomial expansion."""
    n = len(p.coeffs)
    out = [0] * n
    for k, a in enumerate(p.coeffs):
        if not a:
            continue
        # (y + c)^k = sum_j C(k, j) c^(k-j) y^j
        for j in range(k + 1):
            out[j] += a * math.comb(k, j) * c ** (k - j)
    return IntPoly(out)


def sign_changes(coeffs: Sequence[int]) -> int:
    changes = 0
    last = 0
    for c in coeffs:
        if c:
            if last and (c > 0) != (last > 0):
                changes += 1
            last = c
    return changes


def positive_root_count_real_rooted(p: IntPoly) -> int:
    """Positive roots with multiplicity of a real-rooted polynomial (Descartes, exact here)."""
    if p.is_zero():
        raise SpectralError("zero polynomial has no finite root count")
    return sign_changes(p.coeffs)


def trailing_zeros(p: IntPoly) -> int:
    k = 0
    for c in p.coeffs:
        if c:
            break
        k += 1
    return k


def reflect(p: IntPoly) -> IntPoly:
    """``p(-y)``; its positive roots are the negative roots of ``p``."""
    return IntPoly(c if k % 2 == 0 else -c for k, c in enumerate(p.coeffs))


def count_eigenvalues_greater_than(g: Graph, k: int) -> int:
    if g.n == 0:
        return 0
    return positive_root_count_real_rooted(shift_poly(char_poly(g), k))


def count_eigenvalues_less_than(g: Graph, k: int) -> int:
    if g.n == 0:
        return 0
    return positive_root_count_real_rooted(reflect(shift_poly(char_poly(g), k)))


def multiplicity_of_integer_eigenvalue(g: Graph, k: int) -> int:
    if g.n == 0:
        return 0
    return trailing_zeros(shift_poly(char_poly(g), k))


@dataclass(frozen=True)
class SpectralSummary:
    count_above_one: int
    mult_of_one: int
    lambda2_le_one: bool
    lambda2_eq_one: bool
    approx_lambda2: Optional[float]

    def to_dict(self) -> dict:
        return {
            "count_above_one": self.count_above_one,
            "mult_of_one": self.mult_of_one,
            "lambda2_le_one": self.lambda2_le_one,
            "lambda2_eq_one": self.lambda2_eq_one,
            "approx_lambda2": self.approx_lambda2,
        }


def spectral_summary(g: Graph) -> SpectralSummary:
    if g.n == 0:
        return SpectralSummary(0, 0, True, False, None)
    q = shift_poly(char_poly(g), 1)
    above = positive_root_count_real_rooted(q)
    mult = trailing_zeros(q)
    approx = None
    if g.n >= 2:
        approx = round(approx_spectrum(g)[1], 12)
    return SpectralSummary(
        count_above_one=above,
        mult_of_one=mult,
        lambda2_le_one=above <= 1,
        lambda2_eq_one=g.n >= 2 and above <= 1 and above + mult >= 2,
        approx_lambda2=approx,
    )


def lambda2_at_most_one(g: Graph) -> bool:
    """Exact test of the second largest eigenvalue against 1 (vacuously true for n <= 1)."""
    if g.n <= 1:
        return True
    return count_eigenvalues_greater_than(g, 1) <= 1


def lambda2_equals_one(g: Graph) -> bool:
    if g.n <= 1:
        raise SpectralError("second largest eigenvalue undefined for n <= 1")
    q = shift_poly(char_poly(g), 1)
    above = positive_root_count_real_rooted(q)
    return above <= 1 and above + trailing_zeros(q) >= 2


# ---------------------------------------------------------------------------
# float oracle


def jacobi_eigenvalues(
    matrix: Sequence[Sequence[float]], tol: float = 1e-12, max_sweeps: int = 100
) -> list[float]:
    """Cyclic Jacobi eigenvalues of a real symmetric matrix, descending.

    Raises :class:`JacobiNotConverged` if the off-diagonal norm is still
    above ``tol`` after ``max_sweeps`` sweeps.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n == 0:
        return []
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    else:
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off >= tol:
            raise JacobiNotConverged(f"off-diagonal norm {off:.3e} after {max_sweeps} sweeps")
    return sorted((float(x) for x in np.diag(a)), reverse=True)


def approx_spectrum(g: Graph) -> list[float]:
    return jacobi_eigenvalues(g.adjacency_matrix())


# ---------------------------------------------------------------------------
# batched one-vertex extensions


class ExtensionSpectra:
    """Exact eigenvalue-above-one counts for every one-vertex extension of ``G``.

    With ``B = A(G) - I`` and ``q_G(y) = det(yI - B) = p_G(y + 1)``, bordering by
    a new vertex with neighbour indicator ``b`` gives

        q_H(y) = (y + 1) q_G(y) - b^T adj(yI - B) b.

    The adjugate coefficients come from Faddeev-LeVerrier (exact integer
    divisions), so each candidate costs a quadratic form instead of a fresh
    determinant.
    """

    def __init__(self, g: Graph):
        n = g.n
        self.n = n
        b = np.array(g.adjacency_matrix(), dtype=object).reshape(n, n) - np.eye(n, dtype=object)
        ident = np.eye(n, dtype=object)
        coeffs = [1]
        layers = []
        nk = ident
        for k in range(1, n + 1):
            layers.append(nk)
            mk = b.dot(nk)
            c = -int(np.trace(mk))
            if c % k:
                raise ArithmeticError("Faddeev-LeVerrier division not exact")
            c //= k
            coeffs.append(c)
            nk = mk + c * ident
        # coeffs[k] multiplies y^(n-k); layers[k] multiplies y^(n-1-k)
        self.q_desc = coeffs
        big = max((abs(int(x)) for layer in layers for x in layer.flat), default=0)
        dtype = np.int64 if big * max(n, 1) ** 2 < 2**62 else object
        self.adj_layers = np.array(layers, dtype=dtype).reshape(n, n, n) if n else None

    def shifted_polys(self, masks: Sequence[int]) -> list[list[int]]:
        """Descending coefficients of ``q_H`` for each neighbour mask."""
        n = self.n
        if not masks:
            return []
        ind = np.array([[m >> i & 1 for i in range(n)] for m in masks], dtype=self.adj_layers.dtype)
        quad = np.einsum("mi,kij,mj->mk", ind, self.adj_layers, ind)
        base = list(self.q_desc) + [0]
        shifted = [0] + list(self.q_desc)
        lead = [x + y for x, y in zip(base, shifted)]
        out = []
        for row in quad:
            poly = list(lead)
            for k in range(n):
                poly[k + 2] -= int(row[k])
            out.append(poly)
        return out

    def counts_above_one(self, masks: Sequence[int]) -> list[int]:
        return [sign_changes(p) for p in self.shifted_polys(masks)]
