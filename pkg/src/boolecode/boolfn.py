"""Truth-table backed Boolean functions with ANF and DNF views.

Functions of up to 20 variables are stored as explicit truth tables.
Variable X[1] is the least-significant bit of the table index, so the
table row for an input (x1, ..., xm) is x1 + 2*x2 + ... + 2^(m-1)*xm.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_VARS = 20


def input_index(x) -> int:
    """Table row of an input bit vector (X[1] is the low bit)."""
    idx = 0
    for j, bit in enumerate(x):
        if bit:
            idx |= 1 << j
    return idx


def index_input(m: int, idx: int) -> tuple[int, ...]:
    """Inverse of input_index for an m-variable function."""
    return tuple((idx >> j) & 1 for j in range(m))


def _mobius(bits: list[int], m: int) -> list[int]:
    # Butterfly Moebius transform over GF(2); it is its own inverse.
    out = list(bits)
    for j in range(m):
        step = 1 << j
        for i in range(1 << m):
            if i & step:
                out[i] ^= out[i ^ step]
    return out


@dataclass(frozen=True)
class BooleanFunction:
    """f: {0,1}^m -> {0,1} as a full truth table."""

    m: int
    table: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.m <= MAX_VARS:
            raise ValueError(f"variable count must be in 1..{MAX_VARS}, got {self.m}")
        if len(self.table) != 1 << self.m:
            raise ValueError(f"truth table must have 2^{self.m} entries")
        if any(b not in (0, 1) for b in self.table):
            raise ValueError("truth table entries must be bits")

    @classmethod
    def from_packed(cls, m: int, packed: int) -> "BooleanFunction":
        """Build from an integer whose bit i is the table entry for row i."""
        size = 1 << m
        if packed < 0 or packed >> size:
            raise ValueError("packed table out of range for m")
        return cls(m, tuple((packed >> i) & 1 for i in range(size)))

    @classmethod
    def from_hex(cls, m: int, text: str) -> "BooleanFunction":
        return cls.from_packed(m, int(text, 16))

    @classmethod
    def from_support(cls, m: int, vectors) -> "BooleanFunction":
        table = [0] * (1 << m)
        for v in vectors:
            if len(v) != m:
                raise ValueError("support vector length must be m")
            table[input_index(v)] = 1
        return cls(m, tuple(table))

    @classmethod
    def from_anf_monomials(cls, m: int, monomials) -> "BooleanFunction":
        """Build from ANF monomials given as iterables of 1-based variable indices."""
        mu = [0] * (1 << m)
        for s in monomials:
            s = frozenset(s)
            if any(not 1 <= j <= m for j in s):
                raise ValueError("monomial variable index out of range")
            idx = 0
            for j in s:
                idx |= 1 << (j - 1)
            mu[idx] ^= 1
        return cls(m, tuple(_mobius(mu, m)))

    @classmethod
    def random(cls, m: int, rng) -> "BooleanFunction":
        return cls.from_packed(m, rng.getrandbits(1 << m))

    def to_packed(self) -> int:
        packed = 0
        for i, b in enumerate(self.table):
            if b:
                packed |= 1 << i
        return packed

    def to_hex(self) -> str:
        width = ((1 << self.m) + 3) // 4
        return format(self.to_packed(), f"0{width}x")

    def evaluate(self, x) -> int:
        if len(x) != self.m:
            raise ValueError(f"expected {self.m} input bits, got {len(x)}")
        return self.table[input_index(x)]

    def weight(self) -> int:
        return sum(self.table)

    def support_vectors(self) -> tuple[tuple[int, ...], ...]:
        """Inputs mapped to 1, in ascending table-index order."""
        return tuple(index_input(self.m, i) for i, b in enumerate(self.table) if b)


@dataclass(frozen=True)
class AnfForm:
    """XOR-of-monomials view; each monomial is a set of 1-based variable indices."""

    m: int
    monomials: frozenset[frozenset[int]]

    @property
    def sparsity(self) -> int:
        return len(self.monomials)

    @property
    def degree(self) -> int:
        return max((len(s) for s in self.monomials), default=0)

    def canonical_monomials(self) -> tuple[tuple[int, ...], ...]:
        """Deterministic ordering: by size, then by sorted indices."""
        return tuple(sorted((tuple(sorted(s)) for s in self.monomials), key=lambda t: (len(t), t)))

    def evaluate(self, x) -> int:
        bit = 0
        for s in self.monomials:
            if all(x[j - 1] for j in s):
                bit ^= 1
        return bit

    def to_function(self) -> BooleanFunction:
        mu = [0] * (1 << self.m)
        for s in self.monomials:
            idx = 0
            for j in s:
                idx |= 1 << (j - 1)
            mu[idx] = 1
        return BooleanFunction(self.m, tuple(_mobius(mu, self.m)))


@dataclass(frozen=True)
class DnfSupport:
    """Canonical full-DNF view: one m-literal clause per support vector."""

    m: int
    support: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        for v in self.support:
            if len(v) != self.m or any(b not in (0, 1) for b in v):
                raise ValueError("support vectors must be m-bit vectors")
            if v in seen:
                raise ValueError("duplicate support vector")
            seen.add(v)

    @property
    def weight(self) -> int:
        return len(self.support)

    def evaluate(self, x) -> int:
        return 1 if tuple(x) in set(self.support) else 0

    def to_function(self) -> BooleanFunction:
        return BooleanFunction.from_support(self.m, self.support)


def anf_from_truth_table(fn: BooleanFunction) -> AnfForm:
    """Moebius transform of the truth table; empty set is the constant-1 monomial."""
    mu = _mobius(list(fn.table), fn.m)
    monomials = []
    for idx, coef in enumerate(mu):
        if coef:
            monomials.append(frozenset(j + 1 for j in range(fn.m) if idx & (1 << j)))
    return AnfForm(fn.m, frozenset(monomials))


def dnf_from_truth_table(fn: BooleanFunction) -> DnfSupport:
    return DnfSupport(fn.m, fn.support_vectors())


def evaluate(fn: BooleanFunction, x) -> int:
    return fn.evaluate(x)
