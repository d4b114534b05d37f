"""Hilbert series of the preprojective algebra and group-averaged versions.

Averaging the trace functions of a finite automorphism group gives the
Hilbert series of the fixed ring, in scalar, per-vertex (vector) and
per-vertex-pair (matrix) refinements.  The matrix refinement has no closed
form here; it is computed as an exact truncated series and reconstructed as
a rational function with denominator constrained by the known denominators
of the summands.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum, order_as_root_of_unity
from .ratfun import Poly, RatFun, RatMatrix, mat_inverse, poly_lcm, series_expand
from .quiver import AutGroup, DiagonalAut, graded_basis
from .trace import eigenvalue_table, total_trace_closed, vector_trace_closed_34


def hilbert_A(n: int) -> RatFun:
    """n/(1-t)^2 — the preprojective algebra on the n-cycle."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    return RatFun(Poly.constant(n), Poly([1, -1]) ** 2)


def hilbert_eA(n: int) -> RatFun:
    """1/(1-t)^2 — one vertex component; the dimensions are 1, 2, 3, ..."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    return RatFun(Poly.constant(1), Poly([1, -1]) ** 2)


def matrix_hilbert_A(n: int) -> RatMatrix:
    """(I - Ct + It^2)^{-1} with C the double-quiver adjacency matrix."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    t = RatFun(Poly.t_power(1))
    t2 = RatFun(Poly.t_power(2))
    rows = []
    for i in range(n):
        row = [RatFun.constant(0)] * n
        row[i] = RatFun.constant(1) + t2
        row[(i + 1) % n] = row[(i + 1) % n] - t
        row[(i - 1) % n] = row[(i - 1) % n] - t
        rows.append(row)
    return mat_inverse(RatMatrix(rows))


def molien_scalar(G: AutGroup) -> RatFun:
    """Hilbert series of the fixed ring: the average of the total traces."""
    acc = RatFun.constant(0)
    for g in G:
        acc = acc + total_trace_closed(g)[2]
    return acc * RatFun.constant(CycNum.from_rational(1) / len(G))


def molien_vector(G: AutGroup) -> list[RatFun]:
    """Per-vertex Hilbert series of the fixed ring."""
    n = G.n
    acc = [RatFun.constant(0)] * n
    for g in G:
        v = vector_trace_closed_34(g)
        acc = [a + b for a, b in zip(acc, v)]
    inv = RatFun.constant(CycNum.from_rational(1) / len(G))
    return [a * inv for a in acc]


def default_truncation(G: AutGroup) -> int:
    max_order = 1
    for g in G.generators:
        for x in g.c + g.t:
            o = order_as_root_of_unity(x)
            if o is not None:
                max_order = max(max_order, o)
    return max(4 * G.n, 6 * max_order)


def _matrix_series(G: AutGroup, D: int) -> list:
    """coeffs[i][j][s] = dim (e_{i+1} A^G e_{j+1})_s, exactly."""
    n = G.n
    inv = CycNum.from_rational(1) / len(G)
    coeffs = [[[CycNum.zero() for _ in range(D + 1)] for _ in range(n)] for _ in range(n)]
    for g in G:
        table = eigenvalue_table(g, D)
        for i in range(1, n + 1):
            for s in range(D + 1):
                for m in range(s + 1):
                    k = s - m
                    j = (i - 1 + m - k) % n + 1
                    cell = coeffs[i - 1][j - 1]
                    cell[s] = cell[s] + table[(i, m, k)]
    for i in range(n):
        for j in range(n):
            coeffs[i][j] = [x * inv for x in coeffs[i][j]]
    return coeffs


def _reconstruct(series: list, q: Poly, D: int):
    """Return RatFun with denominator q matching the series, or None."""
    dq = q.degree
    prod = []
    for k in range(D + 1):
        acc = CycNum.zero()
        for j in range(min(k, dq) + 1):
            acc = acc + q.coeff(j) * series[k - j]
        prod.append(acc)
    if any(not c.is_zero() for c in prod[dq:]):
        return None
    f = RatFun(Poly(prod[:dq]), q)
    if series_expand(f, D) != series:
        return None
    return f


@dataclass
class MatrixReconstruction:
    matrix: RatMatrix | None
    status: str  # "ok" or "truncated-only"
    series: list  # per-entry exact truncated coefficients
    truncation: int


def molien_matrix(G: AutGroup, D: int | None = None) -> MatrixReconstruction:
    """Per-vertex-pair Hilbert series of the fixed ring.

    The truncated series is always exact; the rational form is only returned
    when reconstruction against the pooled trace denominator succeeds and
    re-expands to the same series.
    """
    if D is None:
        D = default_truncation(G)
    if D < 4 * G.n:
        raise ValueError("truncation %d too small; need at least 4n = %d" % (D, 4 * G.n))
    series = _matrix_series(G, D)
    q = Poly.constant(1)
    for g in G:
        _, raw_q, _ = total_trace_closed(g)
        q = poly_lcm(q, raw_q)
    n = G.n
    entries = []
    ok = True
    for i in range(n):
        row = []
        for j in range(n):
            f = _reconstruct(series[i][j], q, D)
            if f is None:
                ok = False
                break
            row.append(f)
        if not ok:
            break
        entries.append(row)
    if not ok:
        return MatrixReconstruction(None, "truncated-only", series, D)
    return MatrixReconstruction(RatMatrix(entries), "ok", series, D)


@dataclass
class MolienReport:
    scalar: RatFun
    vector: list
    matrix: MatrixReconstruction


def molien_report(G: AutGroup, D: int | None = None) -> MolienReport:
    """Scalar, vector and matrix series with internal consistency checks."""
    scalar = molien_scalar(G)
    vector = molien_vector(G)
    assert sum(vector, RatFun.constant(0)) == scalar
    matrix = molien_matrix(G, D)
    if matrix.status == "ok":
        assert matrix.matrix.row_sums() == vector, (
            "matrix row sums disagree with the vector series"
        )
    return MolienReport(scalar=scalar, vector=vector, matrix=matrix)
