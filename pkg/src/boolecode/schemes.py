"""End-to-end coded-computation pipelines and their closed-form security
thresholds.

Each pipeline implements encode -> worker payload -> decode for one scheme:

  anf      monomial LTF streams over a systematic MDS code
  dnf      clause LTF streams over a systematic MDS code
  ptf      single threshold-polynomial stream over a Lagrange code
  dptf     D partitioned threshold-polynomial streams over a Lagrange code
  lcc      the ANF evaluated directly over GF(2^s) with Lagrange coding
  datalog  log-domain linear streams over a real MDS code
  dataaug  monomial-augmented inputs with a degree-reduced polynomial

The security threshold beta of a scheme is the largest number of Byzantine
workers it tolerates while guaranteeing recovery.  Workers are deterministic
and side-effect free: payload computations may be fanned out in parallel and
joined before decode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .boolfn import BooleanFunction, anf_from_truth_table, dnf_from_truth_table
from .codes import LccCode, MdsCode, lcc_encode, mds_encode, real_consensus_decode, recover_polynomial
from .exactfield import binary_field_for_points, modulus_for_bound
from .threshold import floor_log2, ltf_for_clause, ltf_for_monomial, partition_dnf, ptf_for_function

SCHEMES = ("lcc", "anf", "dnf", "ptf", "dptf", "datalog", "dataaug")


class Threshold(NamedTuple):
    beta: int
    feasible: bool


def outer_bound(n: int, k: int) -> int:
    """Ceiling on the security threshold of any scheme for N workers, K samples."""
    if n < k:
        raise ValueError("need N >= K")
    return (n - k) // 2


def _interior_threshold(interior: int) -> Threshold:
    if interior < 0:
        return Threshold(0, False)
    return Threshold(interior // 2, True)


# ---------------------------------------------------------------------------
# multivariate polynomials (general-computation extension)


@dataclass(frozen=True)
class MultivariatePolynomial:
    """Exact-rational multivariate polynomial as (coefficient, exponent vector) terms."""

    nvars: int
    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def __post_init__(self):
        seen = set()
        for coef, exps in self.terms:
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise ValueError("exponent vector shape mismatch")
            if coef == 0:
                raise ValueError("zero coefficient term")
            if exps in seen:
                raise ValueError("duplicate exponent vector")
            seen.add(exps)

    @classmethod
    def from_terms(cls, nvars: int, pairs) -> "MultivariatePolynomial":
        acc: dict[tuple[int, ...], Fraction] = {}
        for coef, exps in pairs:
            exps = tuple(int(e) for e in exps)
            acc[exps] = acc.get(exps, Fraction(0)) + Fraction(coef)
        terms = tuple(
            (c, e) for e, c in sorted(acc.items(), key=lambda it: (sum(it[0]), it[0])) if c != 0
        )
        return cls(nvars, terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for _, e in self.terms), default=0)

    @property
    def sparsity(self) -> int:
        return len(self.terms)

    def evaluate(self, values) -> Fraction:
        if len(values) != self.nvars:
            raise ValueError("value vector length mismatch")
        total = Fraction(0)
        for coef, exps in self.terms:
            prod = coef
            for v, e in zip(values, exps):
                if e:
                    prod *= Fraction(v) ** e
            total += prod
        return total

    def evaluate_float(self, values) -> float:
        total = 0.0
        for coef, exps in self.terms:
            prod = float(coef)
            for v, e in zip(values, exps):
                if e:
                    prod *= float(v) ** e
            total += prod
        return total

    def abs_bound(self, values) -> Fraction:
        """sum |coef| * prod |v|^e, an upper bound on |f| at the given point."""
        total = Fraction(0)
        for coef, exps in self.terms:
            prod = abs(coef)
            for v, e in zip(values, exps):
                if e:
                    prod *= abs(Fraction(v)) ** e
            total += prod
        return total

    def to_json(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [{"coef": str(c), "exps": list(e)} for c, e in self.terms],
        }

    @classmethod
    def from_json(cls, obj) -> "MultivariatePolynomial":
        return cls.from_terms(
            int(obj["vars"]),
            [(Fraction(str(t["coef"])), tuple(t["exps"])) for t in obj["terms"]],
        )


def matrix_square_polynomials(size: int) -> tuple[MultivariatePolynomial, ...]:
    """Entry polynomials of X -> X^2 for a size x size matrix (row-major vars)."""
    nvars = size * size
    out = []
    for i in range(size):
        for j in range(size):
            pairs = []
            for t in range(size):
                exps = [0] * nvars
                exps[i * size + t] += 1
                exps[t * size + j] += 1
                pairs.append((Fraction(1), tuple(exps)))
            out.append(MultivariatePolynomial.from_terms(nvars, pairs))
    return tuple(out)


# ---------------------------------------------------------------------------
# data augmentation: monomial slots and the degree-reduced rewrite


def augmentation_slots(nvars: int, q: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of total degree 2..q, in (degree, lex) order."""
    if q < 1:
        raise ValueError("augmentation degree must be >= 1")
    slots = []

    def walk(prefix, remaining, pos):
        if pos == nvars:
            if sum(prefix) >= 2:
                slots.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            walk(prefix + [e], remaining - e, pos + 1)

    for total in range(2, q + 1):
        start = len(slots)
        walk([], total, 0)
        slots[start:] = [s for s in slots[start:] if sum(s) == total]
    return tuple(sorted(set(slots), key=lambda e: (sum(e), e)))


def chunk_exponents(exps, q: int) -> list[tuple[int, ...]]:
    """Greedy split of one exponent vector into factors of total degree <= q."""
    rem = list(exps)
    out = []
    while any(rem):
        take = [0] * len(rem)
        left = q
        for j in range(len(rem)):
            if left == 0:
                break
            t = min(rem[j], left)
            take[j] = t
            rem[j] -= t
            left -= t
        out.append(tuple(take))
    return out


def rewrite_with_augmentation(poly: MultivariatePolynomial, q: int):
    """Rewrite f over the augmented variable set; ceil(deg term / q) factors per
    term, so deg h = u + 1{r > 0} where deg f = q*u + r."""
    slots = augmentation_slots(poly.nvars, q)
    slot_index = {e: i for i, e in enumerate(slots)}
    width = poly.nvars + len(slots)
    pairs = []
    for coef, exps in poly.terms:
        h_exps = [0] * width
        for factor in chunk_exponents(exps, q):
            total = sum(factor)
            if total == 1:
                h_exps[factor.index(1)] += 1
            else:
                h_exps[poly.nvars + slot_index[factor]] += 1
        pairs.append((coef, tuple(h_exps)))
    return MultivariatePolynomial.from_terms(width, pairs), slots


@dataclass(frozen=True)
class AugmentedInput:
    """Original entries plus the values of every degree-2..q monomial."""

    original: tuple
    appended: tuple
    slots: tuple[tuple[int, ...], ...]

    @classmethod
    def from_values(cls, values, slots) -> "AugmentedInput":
        values = tuple(values)
        appended = []
        for exps in slots:
            prod = 1
            for v, e in zip(values, exps):
                if e:
                    prod *= v**e
            appended.append(prod)
        return cls(values, tuple(appended), tuple(slots))

    def vector(self) -> tuple:
        return self.original + self.appended


# ---------------------------------------------------------------------------
# logarithmic inputs


@dataclass(frozen=True)
class LogarithmicInput:
    """Entrywise log |x|, with the signs kept aside; zero entries are masked
    (their log slot holds 0.0) and their monomials forced to zero at decode."""

    logs: tuple[float, ...]
    signs: tuple[int, ...]

    @classmethod
    def from_values(cls, values) -> "LogarithmicInput":
        logs = []
        signs = []
        for v in values:
            v = float(v)
            if v == 0.0:
                logs.append(0.0)
                signs.append(0)
            else:
                logs.append(math.log(abs(v)))
                signs.append(1 if v > 0 else -1)
        return cls(tuple(logs), tuple(signs))


# ---------------------------------------------------------------------------
# scheme instances


@dataclass
class SchemeInstance:
    """One configured pipeline: scheme id, sizes, target function, derived beta."""

    scheme: str
    n: int
    k: int
    function: BooleanFunction | None = None
    polynomials: tuple[MultivariatePolynomial, ...] = ()
    d_parts: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if not 1 <= self.k <= self.n:
            raise ValueError("need N >= K >= 1")
        self.polynomials = tuple(self.polynomials)
        if self.scheme in ("anf", "dnf", "ptf", "dptf", "lcc"):
            if self.function is None:
                raise ValueError(f"scheme {self.scheme} needs a Boolean function")
        else:
            if not self.polynomials:
                raise ValueError(f"scheme {self.scheme} needs polynomial targets")
        if self.scheme == "dataaug":
            if len(self.polynomials) != 1:
                raise ValueError("dataaug takes a single polynomial")
            if self.q is None or self.q < 1:
                raise ValueError("dataaug needs augmentation degree q >= 1")
        if self.scheme == "dptf":
            if self.d_parts is None:
                raise ValueError("dptf needs the partition count D")

    def threshold(self) -> Threshold:
        return security_threshold(self)

    def build(self):
        return _PIPELINES[self.scheme](self)

    def to_json(self) -> dict:
        obj: dict = {"scheme": self.scheme, "n": self.n, "k": self.k}
        if self.function is not None:
            obj["function"] = {"m": self.function.m, "hex": self.function.to_hex()}
        if self.polynomials:
            obj["polys"] = [p.to_json() for p in self.polynomials]
        if self.d_parts is not None:
            obj["d"] = self.d_parts
        if self.q is not None:
            obj["q"] = self.q
        return obj

    @classmethod
    def from_json(cls, obj) -> "SchemeInstance":
        fn = None
        if "function" in obj:
            spec = obj["function"]
            if "hex" in spec:
                fn = BooleanFunction.from_hex(int(spec["m"]), spec["hex"])
            else:
                fn = BooleanFunction.from_anf_monomials(int(spec["m"]), spec["anf"])
        polys = tuple(MultivariatePolynomial.from_json(p) for p in obj.get("polys", ()))
        return cls(
            scheme=obj["scheme"],
            n=int(obj["n"]),
            k=int(obj["k"]),
            function=fn,
            polynomials=polys,
            d_parts=int(obj["d"]) if obj.get("d") is not None else None,
            q=int(obj["q"]) if obj.get("q") is not None else None,
        )


def security_threshold(instance: SchemeInstance) -> Threshold:
    """Closed-form security threshold of the configured scheme.

    Infeasible configurations (negative formula interior) clamp to beta = 0
    with feasible=False so sweeps can chart the feasibility boundary.
    """
    n, k = instance.n, instance.k
    s = instance.scheme
    if s in ("anf", "dnf", "datalog"):
        return Threshold((n - k) // 2, True)
    if s == "lcc":
        deg = anf_from_truth_table(instance.function).degree
        return _interior_threshold(n - (k - 1) * deg - 1)
    if s == "ptf":
        w = instance.function.weight()
        if w == 0:
            raise ValueError("threshold-polynomial schemes need w(f) >= 1")
        return _interior_threshold(n - (k - 1) * (floor_log2(w) + 1) - 1)
    if s == "dptf":
        w = instance.function.weight()
        d = instance.d_parts
        if w == 0 or not 1 <= d <= w:
            raise ValueError("partition count must satisfy 1 <= D <= w(f)")
        group = -(-w // d)
        return _interior_threshold(n - (k - 1) * (floor_log2(group) + 1) - 1)
    if s == "dataaug":
        deg = instance.polynomials[0].degree
        u, r = divmod(deg, instance.q)
        dh = u + (1 if r else 0)
        return _interior_threshold(n - (k - 1) * dh - 1)
    raise ValueError(f"unknown scheme {s!r}")


# ---------------------------------------------------------------------------
# pipelines


class _BasePipeline:
    scheme = "?"
    supports_targeted = False

    def __init__(self, instance: SchemeInstance):
        self.instance = instance
        self.n = instance.n
        self.k = instance.k

    def threshold(self) -> Threshold:
        return security_threshold(self.instance)

    def outputs_match(self, got, want) -> bool:
        return got == want

    def offset_payload(self, payload, ctx):
        raise NotImplementedError

    def targeted_payloads(self, honest, positions, rng, ctx):
        raise NotImplementedError(f"{self.scheme} has no codeword-targeted corruption")


def _decode_streams(field, xs, rows, stream_degrees):
    """Decode per-stream payload polynomials from per-worker rows (row None =
    全 erased worker).  Error positions located in one stream seed the fast path
    of the next, since an adversarial worker corrupts all its slots."""
    polys = []
    suspects: tuple[int, ...] = ()
    for s, degree in enumerate(stream_degrees):
        received = [None if row is None else row[s] for row in rows]
        poly, errs = recover_polynomial(field, xs, received, degree, suspects=suspects)
        if errs:
            suspects = errs
        polys.append(poly)
    return polys


class _BitStreamMdsPipeline(_BasePipeline):
    """Shared machinery for the monomial- and clause-stream schemes: every bit
    coordinate is MDS-encoded and each worker evaluates doubled linear forms."""

    supports_targeted = True

    def __init__(self, instance, ltfs):
        super().__init__(instance)
        self.fn = instance.function
        self.m = self.fn.m
        self.ltfs = tuple(ltfs)
        self.field = modulus_for_bound(max(2 * self.m + 1, self.n))
        self.code = MdsCode(self.field, self.n, self.k)

    def prepare(self, inputs):
        if len(inputs) != self.k:
            raise ValueError(f"expected {self.k} input samples")
        columns = []
        for j in range(self.m):
            columns.append(mds_encode(self.code, [x[j] for x in inputs]))
        shares = [tuple(columns[j][w] for j in range(self.m)) for w in range(self.n)]
        return shares, None

    def worker_payload(self, share, ctx):
        f = self.field
        out = []
        for ltf in self.ltfs:
            s = f.zero
            for zj, xj in zip(ltf.z, share):
                if zj == 1:
                    s = f.add(s, xj)
                elif zj == -1:
                    s = f.sub(s, xj)
            out.append(f.add(s, s))
        return tuple(out)

    def _stream_bits(self, received):
        if not self.ltfs:
            return [[] for _ in range(self.k)]
        polys = _decode_streams(self.field, self.code.alpha, received, [self.k - 1] * len(self.ltfs))
        bits = []
        for point in self.code.data_points:
            row = []
            for poly, ltf in zip(polys, self.ltfs):
                doubled = self.field.lift(poly.evaluate(point))
                row.append(1 if doubled + ltf.bias2 > 0 else 0)
            bits.append(row)
        return bits

    def evaluate_direct(self, inputs):
        return [self.fn.evaluate(x) for x in inputs]

    def random_inputs(self, rng):
        return [tuple(rng.randrange(2) for _ in range(self.m)) for _ in range(self.k)]

    def random_payload(self, rng, ctx):
        return tuple(self.field.random_element(rng) for _ in self.ltfs)

    def offset_payload(self, payload, ctx):
        return tuple(self.field.add(v, self.field.one) for v in payload)

    def targeted_payloads(self, honest, positions, rng, ctx):
        """Plant a second consistent codeword: shift every stream by a random
        multiple of a polynomial vanishing on K-1 honest points, then hand the
        corrupted workers the shifted values."""
        f = self.field
        alphas = self.code.alpha
        corrupt = set(positions)
        honest_idx = [i for i in range(self.n) if i not in corrupt]
        # prefer agreement points outside the data positions so that every
        # decoded data value moves
        preferred = [i for i in honest_idx if i >= self.k] + [i for i in honest_idx if i < self.k]
        agree = preferred[: self.k - 1]
        out = {}
        shift = {}
        for n_i in positions:
            prod = f.one
            for a in agree:
                prod = f.mul(prod, f.sub(alphas[n_i], alphas[a]))
            shift[n_i] = prod
        gammas = [rng.randrange(1, f.size) for _ in self.ltfs]
        for n_i in positions:
            row = honest[n_i]
            out[n_i] = tuple(
                f.add(v, f.mul(g, shift[n_i])) for v, g in zip(row, gammas)
            )
        return out


class AnfPipeline(_BitStreamMdsPipeline):
    """One doubled linear form per ANF monomial; the decoded monomial bits are
    XOR-combined into f."""

    scheme = "anf"

    def __init__(self, instance):
        anf = anf_from_truth_table(instance.function)
        ltfs = [ltf_for_monomial(s, instance.function.m) for s in anf.canonical_monomials()]
        super().__init__(instance, ltfs)

    def decode(self, received, ctx):
        bits = self._stream_bits(received)
        out = []
        for row in bits:
            acc = 0
            for b in row:
                acc ^= b
            out.append(acc)
        return out


class DnfPipeline(_BitStreamMdsPipeline):
    """One doubled linear form per support clause; f is 1 when any clause fires."""

    scheme = "dnf"

    def __init__(self, instance):
        supp = dnf_from_truth_table(instance.function)
        ltfs = [ltf_for_clause(y) for y in supp.support]
        super().__init__(instance, ltfs)

    def decode(self, received, ctx):
        bits = self._stream_bits(received)
        return [1 if any(row) else 0 for row in bits]


class _LccBitPipeline(_BasePipeline):
    """Shared Lagrange-coded machinery for bit-vector inputs."""

    def __init__(self, instance, field):
        super().__init__(instance)
        self.fn = instance.function
        self.m = self.fn.m
        self.field = field
        self.code = LccCode(field, self.n, self.k)

    def prepare(self, inputs):
        if len(inputs) != self.k:
            raise ValueError(f"expected {self.k} input samples")
        shares = lcc_encode(self.code, [tuple(x) for x in inputs])
        return [tuple(s) for s in shares], None

    def evaluate_direct(self, inputs):
        return [self.fn.evaluate(x) for x in inputs]

    def random_inputs(self, rng):
        return [tuple(rng.randrange(2) for _ in range(self.m)) for _ in range(self.k)]


class PtfPipeline(_LccBitPipeline):
    """Single stream carrying the doubled threshold polynomial of f."""

    scheme = "ptf"

    def __init__(self, instance):
        supp = dnf_from_truth_table(instance.function)
        if supp.weight == 0:
            raise ValueError("threshold-polynomial schemes need w(f) >= 1")
        self.ptf = ptf_for_function(supp)
        n, k = instance.n, instance.k
        bound = max(self.ptf.weight_bound(), n + k)
        super().__init__(instance, modulus_for_bound(bound))
        self.weights_mod = [self.field.element(a) for a in self.ptf.weights]
        self.payload_degree = (self.k - 1) * self.ptf.degree

    def worker_payload(self, share, ctx):
        return (self.ptf.evaluate_field(self.field, share, self.weights_mod),)

    def decode(self, received, ctx):
        stream = [None if row is None else row[0] for row in received]
        poly, _ = recover_polynomial(self.field, self.code.alpha, stream, self.payload_degree)
        return [1 if self.field.lift(poly.evaluate(b)) > 0 else 0 for b in self.code.beta]

    def random_payload(self, rng, ctx):
        return (self.field.random_element(rng),)

    def offset_payload(self, payload, ctx):
        return (self.field.add(payload[0], self.field.one),)


class DptfPipeline(_LccBitPipeline):
    """One threshold-polynomial stream per clause group; f is the OR of the
    decoded group signs."""

    scheme = "dptf"

    def __init__(self, instance):
        supp = dnf_from_truth_table(instance.function)
        if supp.weight == 0:
            raise ValueError("threshold-polynomial schemes need w(f) >= 1")
        groups = partition_dnf(supp, instance.d_parts)
        self.ptfs = [ptf_for_function(g) for g in groups]
        n, k = instance.n, instance.k
        bound = max(max(p.weight_bound() for p in self.ptfs), n + k)
        super().__init__(instance, modulus_for_bound(bound))
        self.weights_mod = [[self.field.element(a) for a in p.weights] for p in self.ptfs]
        self.stream_degrees = [(self.k - 1) * p.degree for p in self.ptfs]

    def worker_payload(self, share, ctx):
        return tuple(
            p.evaluate_field(self.field, share, wm) for p, wm in zip(self.ptfs, self.weights_mod)
        )

    def decode(self, received, ctx):
        polys = _decode_streams(self.field, self.code.alpha, received, self.stream_degrees)
        out = []
        for b in self.code.beta:
            fired = any(self.field.lift(poly.evaluate(b)) > 0 for poly in polys)
            out.append(1 if fired else 0)
        return out

    def random_payload(self, rng, ctx):
        return tuple(self.field.random_element(rng) for _ in self.ptfs)

    def offset_payload(self, payload, ctx):
        return tuple(self.field.add(v, self.field.one) for v in payload)


class LccDirectPipeline(_LccBitPipeline):
    """Baseline: evaluate the ANF itself over GF(2^s), where XOR is field addition."""

    scheme = "lcc"

    def __init__(self, instance):
        field = binary_field_for_points(instance.n + instance.k)
        super().__init__(instance, field)
        anf = anf_from_truth_table(instance.function)
        self.monomials = anf.canonical_monomials()
        self.payload_degree = (self.k - 1) * anf.degree

    def worker_payload(self, share, ctx):
        f = self.field
        acc = f.zero
        for mono in self.monomials:
            prod = f.one
            for j in mono:
                prod = f.mul(prod, share[j - 1])
                if prod == f.zero:
                    break
            acc = f.add(acc, prod)
        return (acc,)

    def decode(self, received, ctx):
        stream = [None if row is None else row[0] for row in received]
        poly, _ = recover_polynomial(self.field, self.code.alpha, stream, self.payload_degree)
        return [1 if poly.evaluate(b) == self.field.one else 0 for b in self.code.beta]

    def random_payload(self, rng, ctx):
        return (self.field.random_element(rng),)

    def offset_payload(self, payload, ctx):
        return (self.field.add(payload[0], self.field.one),)


class DatalogPipeline(_BasePipeline):
    """Log-domain scheme for real-valued polynomial targets: workers compute
    linear combinations of entrywise logs, one stream per distinct monomial."""

    scheme = "datalog"
    tolerance = 1e-6
    _EXP_LIMIT = 700.0

    def __init__(self, instance):
        super().__init__(instance)
        if self.n > 24:
            raise ValueError("consensus decoding caps the log-domain scheme at N <= 24")
        self.polys = instance.polynomials
        self.nvars = self.polys[0].nvars
        if any(p.nvars != self.nvars for p in self.polys):
            raise ValueError("all output polynomials must share one variable set")
        streams = {e for p in self.polys for _, e in p.terms if sum(e) > 0}
        self.streams = tuple(sorted(streams, key=lambda e: (sum(e), e)))
        self.points = tuple(float(i) for i in range(1, self.n + 1))
        self.data_points = self.points[: self.k]
        self.b_max = (self.n - self.k) // 2
        # real systematic MDS rows: row[n][k] = ell_k(alpha_n)
        rows = []
        for x in self.points:
            row = []
            for i in range(self.k):
                num = 1.0
                den = 1.0
                for j in range(self.k):
                    if j != i:
                        num *= x - self.data_points[j]
                        den *= self.data_points[i] - self.data_points[j]
                row.append(num / den)
            rows.append(row)
        self._rows = rows

    def prepare(self, inputs):
        if len(inputs) != self.k:
            raise ValueError(f"expected {self.k} input samples")
        logins = [LogarithmicInput.from_values(x) for x in inputs]
        for li in logins:
            for exps in self.streams:
                total = sum(e * abs(w) for e, w in zip(exps, li.logs))
                if total > self._EXP_LIMIT:
                    raise ValueError("log-domain magnitudes would overflow exp()")
        shares = []
        for row in self._rows:
            share = tuple(
                sum(g * li.logs[j] for g, li in zip(row, logins)) for j in range(self.nvars)
            )
            shares.append(share)
        return shares, logins

    def worker_payload(self, share, ctx):
        return tuple(
            sum(e * share[j] for j, e in enumerate(exps) if e) for exps in self.streams
        )

    def decode(self, received, ctx):
        logins = ctx
        mono_values = [[0.0] * len(self.streams) for _ in range(self.k)]
        for s, exps in enumerate(self.streams):
            stream = [None if row is None else row[s] for row in received]
            decoded = real_consensus_decode(
                stream, self.k, self.b_max, tol=self.tolerance,
                points=self.points, data_points=self.data_points,
            )
            for ki, v in enumerate(decoded):
                li = logins[ki]
                sign = 1
                for j, e in enumerate(exps):
                    if e:
                        sj = li.signs[j]
                        if sj == 0:
                            sign = 0
                            break
                        if sj < 0 and e % 2 == 1:
                            sign = -sign
                mono_values[ki][s] = 0.0 if sign == 0 else sign * math.exp(v)
        stream_index = {e: i for i, e in enumerate(self.streams)}
        out = []
        for ki in range(self.k):
            coords = []
            for p in self.polys:
                total = 0.0
                for coef, exps in p.terms:
                    if sum(exps) == 0:
                        total += float(coef)
                    else:
                        total += float(coef) * mono_values[ki][stream_index[exps]]
                coords.append(total)
            out.append(tuple(coords))
        return out

    def evaluate_direct(self, inputs):
        return [tuple(p.evaluate_float(x) for p in self.polys) for x in inputs]

    def outputs_match(self, got, want) -> bool:
        for g_row, w_row in zip(got, want):
            for g, w in zip(g_row, w_row):
                if abs(g - w) > self.tolerance * max(1.0, abs(g), abs(w)):
                    return False
        return True

    def random_inputs(self, rng):
        out = []
        for _ in range(self.k):
            vals = []
            for _ in range(self.nvars):
                mag = rng.uniform(0.5, 2.0)
                vals.append(mag if rng.random() < 0.5 else -mag)
            out.append(tuple(vals))
        return out

    def random_payload(self, rng, ctx):
        return tuple(rng.uniform(-10.0, 10.0) for _ in self.streams)

    def offset_payload(self, payload, ctx):
        return tuple(v + 1.0 for v in payload)


class DataaugPipeline(_BasePipeline):
    """Monomial augmentation for integer-valued polynomial targets: inputs gain
    all degree-2..q monomials and workers evaluate the degree-reduced rewrite.

    The prime modulus is chosen per batch from an absolute-value bound on the
    outputs; field arithmetic is closed, so only the final decoded values need
    to lift exactly."""

    scheme = "dataaug"

    def __init__(self, instance):
        super().__init__(instance)
        self.poly = instance.polynomials[0]
        self.q = instance.q
        self.h, self.slots = rewrite_with_augmentation(self.poly, self.q)
        self.denominator = math.lcm(*(c.denominator for c, _ in self.poly.terms)) if self.poly.terms else 1
        self.h_degree = self.h.degree
        self.payload_degree = (self.k - 1) * self.h_degree
        # integer coefficients of denominator * h, paired with exponent vectors
        self.h_int_terms = tuple(
            (int(c * self.denominator), e) for c, e in self.h.terms
        )

    def prepare(self, inputs):
        if len(inputs) != self.k:
            raise ValueError(f"expected {self.k} input samples")
        for x in inputs:
            if any(not isinstance(v, int) for v in x):
                raise ValueError("augmentation pipeline takes integer inputs")
        bound = max(
            (abs(self.denominator) * self.poly.abs_bound(x) for x in inputs),
            default=Fraction(1),
        )
        field = modulus_for_bound(max(int(bound) + 1, self.n + self.k))
        code = LccCode(field, self.n, self.k)
        vectors = [
            tuple(field.element(v) for v in AugmentedInput.from_values(x, self.slots).vector())
            for x in inputs
        ]
        shares = [tuple(s) for s in lcc_encode(code, vectors)]
        return shares, (field, code)

    def worker_payload(self, share, ctx):
        field, _ = ctx
        acc = field.zero
        for coef, exps in self.h_int_terms:
            prod = field.element(coef)
            for j, e in enumerate(exps):
                if e:
                    prod = field.mul(prod, field.pow(share[j], e))
            acc = field.add(acc, prod)
        return (acc,)

    def decode(self, received, ctx):
        field, code = ctx
        stream = [None if row is None else row[0] for row in received]
        poly, _ = recover_polynomial(field, code.alpha, stream, self.payload_degree)
        out = []
        for b in code.beta:
            lifted = field.lift(poly.evaluate(b))
            out.append(Fraction(lifted, self.denominator))
        return out

    def evaluate_direct(self, inputs):
        return [self.poly.evaluate(x) for x in inputs]

    def random_inputs(self, rng):
        return [
            tuple(rng.randint(-3, 3) for _ in range(self.poly.nvars)) for _ in range(self.k)
        ]

    def random_payload(self, rng, ctx):
        field, _ = ctx
        return (field.random_element(rng),)

    def offset_payload(self, payload, ctx):
        field, _ = ctx
        return (field.add(payload[0], field.one),)


_PIPELINES = {
    "anf": AnfPipeline,
    "dnf": DnfPipeline,
    "ptf": PtfPipeline,
    "dptf": DptfPipeline,
    "lcc": LccDirectPipeline,
    "datalog": DatalogPipeline,
    "dataaug": DataaugPipeline,
}
