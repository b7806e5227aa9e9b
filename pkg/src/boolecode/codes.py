"""(N, K) MDS / Reed-Solomon coding with errors-and-erasures decoding,
Lagrange-coded computing, and a tolerance-based consensus decoder for
real-valued payload streams.

Received vectors are plain sequences with None marking an erased slot.
Decoding uses Berlekamp-Welch in linear-system form: with e erasures and
b errors it succeeds whenever 2b + e <= N - (d + 1) for payload degree d.
"""

from __future__ import annotations

import itertools
from functools import cached_property

from .exactfield import (
    Poly,
    lagrange_basis_row,
    lagrange_denominators,
    lagrange_interpolate,
    poly_divmod,
)


class DecodeFailure(Exception):
    """No polynomial of the declared degree is consistent with enough slots."""


class ConsensusAmbiguity(DecodeFailure):
    """Two inconsistent real interpolants both fit the received values."""


def erasure_count(received) -> int:
    return sum(1 for v in received if v is None)


class MdsCode:
    """Systematic (N, K) MDS code: data sits at the first K evaluation points."""

    def __init__(self, field, n: int, k: int, points=None):
        if not 1 <= k <= n:
            raise ValueError("need N >= K >= 1")
        pts = tuple(points) if points is not None else field.points(n)
        if len(pts) != n or len(set(pts)) != n:
            raise ValueError("evaluation points must be N distinct elements")
        self.field = field
        self.n = n
        self.k = k
        self.alpha = pts

    @property
    def data_points(self) -> tuple[int, ...]:
        return self.alpha[: self.k]

    @cached_property
    def _encode_rows(self) -> list[list[int]]:
        nodes = self.data_points
        denoms = lagrange_denominators(self.field, nodes)
        return [lagrange_basis_row(self.field, nodes, denoms, x) for x in self.alpha]


class LccCode:
    """Lagrange encoding: data at beta_1..beta_K, workers at alpha_1..alpha_N."""

    def __init__(self, field, n: int, k: int, beta=None, alpha=None):
        if not 1 <= k <= n:
            raise ValueError("need N >= K >= 1")
        if field.size <= n + k:
            raise ValueError("field size must exceed N + K")
        if beta is None and alpha is None:
            pts = field.points(n + k)
            beta, alpha = pts[:k], pts[k:]
        beta = tuple(beta)
        alpha = tuple(alpha)
        if len(beta) != k or len(alpha) != n or len(set(beta + alpha)) != n + k:
            raise ValueError("beta and alpha must be K + N distinct points")
        self.field = field
        self.n = n
        self.k = k
        self.beta = beta
        self.alpha = alpha

    @cached_property
    def _encode_rows(self) -> list[list[int]]:
        denoms = lagrange_denominators(self.field, self.beta)
        return [lagrange_basis_row(self.field, self.beta, denoms, x) for x in self.alpha]


def mds_encode(code: MdsCode, data) -> list[int]:
    """Evaluate the degree-(K-1) interpolant through the data at all N points."""
    if len(data) != code.k:
        raise ValueError(f"expected {code.k} data symbols, got {len(data)}")
    f = code.field
    out = []
    for row in code._encode_rows:
        acc = f.zero
        for g, d in zip(row, data):
            if g != f.zero and d != f.zero:
                acc = f.add(acc, f.mul(g, d))
        out.append(acc)
    return out


def rs_decode(code: MdsCode, received, payload_degree: int | None = None) -> list[int]:
    """Recover the data-point values of the degree-d payload polynomial.

    Callers treat corruption at or beyond the (2b + e <= N - d - 1) radius as
    undefined: the decoder may then raise DecodeFailure or return a different
    consistent codeword.
    """
    d = code.k - 1 if payload_degree is None else payload_degree
    poly, _ = recover_polynomial(code.field, code.alpha, received, d)
    return poly.evaluate_many(code.data_points)


def lcc_encode(code: LccCode, data_vectors) -> list[list[int]]:
    """Coordinate-wise Lagrange interpolation through (beta_k, X_k), at each alpha_n."""
    if len(data_vectors) != code.k:
        raise ValueError(f"expected {code.k} data vectors, got {len(data_vectors)}")
    width = len(data_vectors[0])
    if any(len(v) != width for v in data_vectors):
        raise ValueError("data vectors must share one length")
    f = code.field
    out = []
    for row in code._encode_rows:
        share = []
        for j in range(width):
            acc = f.zero
            for g, vec in zip(row, data_vectors):
                if g != f.zero and vec[j] != f.zero:
                    acc = f.add(acc, f.mul(g, vec[j]))
            share.append(acc)
        out.append(share)
    return out


def lcc_decode(code: LccCode, received, f_degree: int) -> list[int]:
    """Decode worker values of a degree-f composition and evaluate at the beta points."""
    poly, _ = recover_polynomial(code.field, code.alpha, received, (code.k - 1) * f_degree)
    return poly.evaluate_many(code.beta)


def recover_polynomial(field, xs, received, degree: int, suspects=()) -> tuple[Poly, tuple[int, ...]]:
    """Fit a degree <= `degree` polynomial to the non-erased slots, correcting up to
    floor((avail - degree - 1) / 2) errors.  Returns (polynomial, error positions).

    `suspects` are worker positions likely to be corrupted (e.g. errors located
    while decoding a sibling stream of the same trial).  Erasing them and
    verifying the remainder is sound: a degree-d fit that matches every
    non-suspect slot agrees with the true polynomial on at least d+1 points.
    """
    if len(received) != len(xs):
        raise ValueError("received length must match the point count")
    pairs = [(i, xs[i], v) for i, v in enumerate(received) if v is not None]
    avail = len(pairs)
    needed = degree + 1
    if avail < needed:
        raise DecodeFailure(f"only {avail} slots for degree {degree}")
    budget = (avail - needed) // 2

    def mismatches(poly):
        return tuple(i for i, x, y in pairs if poly.evaluate(x) != y)

    if suspects:
        sus = set(suspects)
        clean = [(x, y) for i, x, y in pairs if i not in sus]
        if avail - len(clean) <= budget and len(clean) >= needed:
            cand = lagrange_interpolate(clean[:needed], field)
            if all(cand.evaluate(x) == y for x, y in clean):
                errs = mismatches(cand)
                if len(errs) <= budget:
                    return cand, errs

    cand = lagrange_interpolate([(x, y) for _, x, y in pairs[:needed]], field)
    errs = mismatches(cand)
    if not errs:
        return cand, ()
    if budget == 0:
        raise DecodeFailure("errors present but error budget is zero")

    poly = _berlekamp_welch(field, pairs, degree, budget)
    errs = mismatches(poly)
    if len(errs) > budget:
        raise DecodeFailure("no polynomial consistent with enough slots")
    return poly, errs


def _berlekamp_welch(field, pairs, degree: int, budget: int) -> Poly:
    # Solve Q(x_i) = y_i * E(x_i) with deg Q <= d + b, deg E <= b, (Q, E) != 0.
    nq = degree + budget + 1
    ne = budget + 1
    rows = []
    top = max(nq, ne)
    for _, x, y in pairs:
        powers = [field.one]
        for _ in range(top - 1):
            powers.append(field.mul(powers[-1], x))
        row = powers[:nq] + [field.neg(field.mul(y, powers[j])) for j in range(ne)]
        rows.append(row)
    sol = _kernel_vector(field, rows, nq + ne)
    if sol is None:
        raise DecodeFailure("no consistent locator/payload pair")
    q, e = sol[:nq], sol[nq:]
    if all(c == field.zero for c in e):
        raise DecodeFailure("degenerate error locator")
    quot, rem = poly_divmod(field, q, e)
    if any(c != field.zero for c in rem):
        raise DecodeFailure("error locator does not divide the payload")
    poly = Poly.make(field, quot)
    if poly.degree > degree:
        raise DecodeFailure("recovered polynomial exceeds the declared degree")
    return poly


def _kernel_vector(field, rows, ncols: int) -> list[int] | None:
    """One nonzero kernel vector of a homogeneous system, or None if trivial."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != field.zero), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(v, inv) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != field.zero:
                factor = mat[i][c]
                mat[i] = [field.sub(v, field.mul(factor, w)) for v, w in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    pivot_set = set(pivots)
    free = next((c for c in range(ncols) if c not in pivot_set), None)
    if free is None:
        return None
    x = [field.zero] * ncols
    x[free] = field.one
    for row_idx, c in enumerate(pivots):
        x[c] = field.neg(mat[row_idx][free])
    return x


def _real_close(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def _real_lagrange_eval(points, t: float) -> float:
    total = 0.0
    for i, (xi, yi) in enumerate(points):
        num = 1.0
        den = 1.0
        for j, (xj, _) in enumerate(points):
            if j != i:
                num *= t - xj
                den *= xi - xj
        total += yi * num / den
    return total


def real_consensus_decode(values, k: int, b_max: int, tol: float = 1e-6,
                          points=None, data_points=None) -> list[float]:
    """Find the degree-(K-1) real interpolant consistent (within relative tol)
    with all but at most b_max of the non-erased slots; return its values at
    the data points.

    Exhaustive K-subset search, so N is capped at 24.  Raises DecodeFailure
    when no interpolant fits and ConsensusAmbiguity when two inconsistent
    interpolants both fit.
    """
    n = len(values)
    if n > 24:
        raise ValueError("subset enumeration decoder is limited to N <= 24")
    xs = tuple(points) if points is not None else tuple(float(i) for i in range(1, n + 1))
    data = tuple(data_points) if data_points is not None else xs[:k]
    avail = [(xs[i], v) for i, v in enumerate(values) if v is not None]
    if len(avail) < k:
        raise DecodeFailure("more erasures than the interpolation needs")
    required = len(avail) - b_max
    candidates: list[list[float]] = []
    for combo in itertools.combinations(avail, k):
        agree = sum(1 for x, v in avail if _real_close(v, _real_lagrange_eval(combo, x), tol))
        if agree < required:
            continue
        vals = [_real_lagrange_eval(combo, t) for t in data]
        if not any(all(_real_close(a, b, tol) for a, b in zip(c, vals)) for c in candidates):
            candidates.append(vals)
    if not candidates:
        raise DecodeFailure("no interpolant consistent with enough slots")
    if len(candidates) > 1:
        raise ConsensusAmbiguity(f"{len(candidates)} inconsistent interpolants fit")
    return candidates[0]
