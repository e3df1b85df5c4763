"""Largest signless-Laplacian eigenvalue with a rigorous rational enclosure.

Each connected component is handled on its own and the results are combined
by taking maxima. Per component, a floating-point power iteration produces an
approximate Perron vector ``x``. The vector is rounded to positive integers
and then, in exact arithmetic,

    max(min_i (Qx)_i / x_i,  x'Qx / x'x)  <=  q  <=  max_i (Qx)_i / x_i.

The outer two are the Collatz-Wielandt bounds, valid for any positive vector
when ``Q`` is nonnegative and irreducible; the middle term is the Rayleigh
quotient. If the float vector is not accurate enough, the iteration
continues on the integer vector, which has no rounding-error floor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from stlab.graph import Graph, iter_bits

DEFAULT_TOL = Fraction(1, 10**10)
DEFAULT_MAX_ITER = 10**6
_SCALE_BITS = 60
_FLOAT_ROUNDS = 5000


@dataclass(frozen=True)
class SpectralEnclosure:
    lower: Fraction
    upper: Fraction
    iterations: int

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> float:
        return float((self.lower + self.upper) / 2)

    def contains(self, x) -> bool:
        return self.lower <= Fraction(x) <= self.upper


class ConvergenceError(RuntimeError):
    def __init__(self, best: SpectralEnclosure):
        super().__init__(f"enclosure width {float(best.width):.3g} after {best.iterations} iterations")
        self.best = best


def signless_laplacian(g: Graph) -> np.ndarray:
    n = g.n
    q = np.zeros((n, n), dtype=np.float64)
    for v, row in enumerate(g.rows):
        for u in iter_bits(row):
            q[v, u] = 1.0
        q[v, v] = row.bit_count()
    return q


def q_matrix(g: Graph) -> list[list[int]]:
    n = g.n
    out = [[0] * n for _ in range(n)]
    for v, row in enumerate(g.rows):
        for u in iter_bits(row):
            out[v][u] = 1
        out[v][v] = row.bit_count()
    return out


def _local_rows(g: Graph, comp: int) -> list[list[int]]:
    verts = list(iter_bits(comp))
    index = {v: i for i, v in enumerate(verts)}
    return [[index[u] for u in iter_bits(g.rows[v] & comp)] for v in verts]


def _exact_bounds(adj: list[list[int]], x: list[int]) -> tuple[Fraction, Fraction, list[int]]:
    y = [len(nb) * xi + sum(x[u] for u in nb) for nb, xi in zip(adj, x)]
    lo_i = min(range(len(x)), key=lambda i: Fraction(y[i], x[i]))
    hi_i = max(range(len(x)), key=lambda i: Fraction(y[i], x[i]))
    cw_lo = Fraction(y[lo_i], x[lo_i])
    cw_hi = Fraction(y[hi_i], x[hi_i])
    rayleigh = Fraction(sum(a * b for a, b in zip(x, y)), sum(a * a for a in x))
    return max(cw_lo, rayleigh), cw_hi, y


def _to_ints(v: np.ndarray) -> list[int]:
    top = float(np.max(v))
    scaled = np.maximum(v / top, 2.0**-40)
    return [max(1, int(round(float(t) * 2.0**_SCALE_BITS))) for t in scaled]


def _float_perron(q: np.ndarray, tol: float, max_iter: int) -> tuple[np.ndarray, int]:
    n = q.shape[0]
    x = q.diagonal() + 1.0
    x = x / np.linalg.norm(x)
    it = 0
    cap = min(max_iter, _FLOAT_ROUNDS)
    while it < cap:
        y = q @ x
        it += 1
        nrm = np.linalg.norm(y)
        y = y / nrm
        if it % 8 == 0:
            z = q @ y
            ratios = z / np.maximum(y, 1e-300)
            if np.all(y > 0) and ratios.max() - ratios.min() <= tol:
                return y, it
        x = y
    # Slow convergence (nearly equal top eigenvalues): take the vector from a
    # dense symmetric eigensolver instead; the exact bounds still certify it.
    _, vecs = np.linalg.eigh(q)
    v = vecs[:, -1]
    v = v * np.sign(v.sum() or 1.0)
    return np.abs(v) if n else v, it


def _component(g: Graph, comp: int, tol: Fraction, max_iter: int) -> tuple[SpectralEnclosure, np.ndarray]:
    size = comp.bit_count()
    if size == 1:
        return SpectralEnclosure(Fraction(0), Fraction(0), 0), np.ones(1)
    adj = _local_rows(g, comp)
    if all(len(nb) == len(adj[0]) for nb in adj):
        d = Fraction(2 * len(adj[0]))
        return SpectralEnclosure(d, d, 0), np.full(size, 1.0 / np.sqrt(size))
    q = np.zeros((size, size))
    for i, nb in enumerate(adj):
        q[i, nb] = 1.0
        q[i, i] = len(nb)
    vec, it = _float_perron(q, float(tol) / 4, max_iter)
    x = _to_ints(vec)
    lo, hi, y = _exact_bounds(adj, x)
    while hi - lo > tol:
        if it >= max_iter:
            raise ConvergenceError(SpectralEnclosure(lo, hi, it))
        # exact power steps on integers, rescaled to keep numbers small
        shift = max(0, max(y).bit_length() - _SCALE_BITS - 30)
        x = [max(1, v >> shift) for v in y]
        lo2, hi2, y = _exact_bounds(adj, x)
        lo, hi = max(lo, lo2), min(hi, hi2)
        it += 1
    return SpectralEnclosure(lo, hi, it), vec


def q_max(g: Graph, tol=DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralEnclosure:
    """Enclosure of the largest eigenvalue of ``D + A``, width at most ``tol``."""
    if g.n < 1:
        raise ValueError("q_max needs at least one vertex")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    best: SpectralEnclosure | None = None
    total = 0
    for comp in g.component_masks():
        enc, _ = _component(g, comp, tol, max_iter)
        total += enc.iterations
        if best is None:
            best = enc
        else:
            best = SpectralEnclosure(max(best.lower, enc.lower), max(best.upper, enc.upper), 0)
    assert best is not None
    return SpectralEnclosure(best.lower, best.upper, total)


def perron_vector(g: Graph, tol=DEFAULT_TOL) -> np.ndarray:
    """Unit Perron vector of a connected graph, as a float array."""
    if not g.is_connected():
        raise ValueError("Perron vector requested for a disconnected graph")
    _, vec = _component(g, (1 << g.n) - 1, Fraction(tol), DEFAULT_MAX_ITER)
    return vec / np.linalg.norm(vec)
