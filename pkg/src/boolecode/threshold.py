"""Sign-representations of Boolean functions: linear threshold functions for
monomials and clauses, and the decision tree -> decision list -> polynomial
threshold function construction.

Biases are half-integers, so every object stores the doubled value (bias2,
value2 = 2L(X) + bias2); all threshold arithmetic then stays in exact
integers and embeds losslessly into a prime field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolfn import DnfSupport


def floor_log2(n: int) -> int:
    if n < 1:
        raise ValueError("floor_log2 needs a positive argument")
    return n.bit_length() - 1


@dataclass(frozen=True)
class LinearThresholdFunction:
    """sgn(L(X) + B) with L = sum Z[j] X[j]; stores bias2 = 2B."""

    m: int
    z: tuple[int, ...]
    bias2: int

    def value2(self, x) -> int:
        s = 0
        for zj, xj in zip(self.z, x):
            if zj and xj:
                s += zj
        return 2 * s + self.bias2

    def fires(self, x) -> bool:
        return self.value2(x) > 0


def ltf_for_monomial(s, m: int) -> LinearThresholdFunction:
    """LTF whose sign is positive exactly when all variables of the monomial are set.

    value2 equals 1 when the monomial fires and is <= -1 otherwise; the empty
    monomial (constant 1) always fires.
    """
    s = frozenset(s)
    if any(not 1 <= j <= m for j in s):
        raise ValueError("monomial variable index out of range")
    z = tuple(1 if j in s else 0 for j in range(1, m + 1))
    return LinearThresholdFunction(m, z, -2 * len(s) + 1)


def ltf_for_clause(y) -> LinearThresholdFunction:
    """LTF whose sign is positive exactly at the support vector y."""
    y = tuple(y)
    if any(b not in (0, 1) for b in y):
        raise ValueError("clause vector must be bits")
    z = tuple(1 if b else -1 for b in y)
    return LinearThresholdFunction(len(y), z, -2 * sum(y) + 1)


class _Leaf:
    __slots__ = ("vector", "ltf", "leaves")

    def __init__(self, vector, ltf):
        self.vector = vector
        self.ltf = ltf
        self.leaves = 1


class _Node:
    __slots__ = ("var", "low", "high", "leaves")

    def __init__(self, var, low, high):
        self.var = var
        self.low = low
        self.high = high
        self.leaves = low.leaves + high.leaves


def build_decision_tree(supp: DnfSupport):
    """Binary tree routing every support vector to its own clause-labelled leaf.

    Greedy splitter: pick the unused variable minimizing the larger child's
    support count, lowest index on ties.  Distinct vectors always admit a
    separating variable, so both children stay nonempty and the tree has
    exactly w(f) leaves.
    """
    if supp.weight == 0:
        raise ValueError("constant-0 function has no support to route")
    m = supp.m

    def grow(vectors, used):
        if len(vectors) == 1:
            y = vectors[0]
            return _Leaf(y, ltf_for_clause(y))
        best_var = None
        best_score = None
        for j in range(1, m + 1):
            if j in used:
                continue
            ones = sum(1 for v in vectors if v[j - 1])
            zeros = len(vectors) - ones
            if ones == 0 or zeros == 0:
                continue
            score = max(ones, zeros)
            if best_score is None or score < best_score:
                best_score = score
                best_var = j
        if best_var is None:
            raise RuntimeError("no separating variable for distinct support vectors")
        low = [v for v in vectors if not v[best_var - 1]]
        high = [v for v in vectors if v[best_var - 1]]
        return _Node(best_var, grow(low, used | {best_var}), grow(high, used | {best_var}))

    return grow(list(supp.support), frozenset())


def _copy_tree(node):
    if isinstance(node, _Leaf):
        return _Leaf(node.vector, node.ltf)
    return _Node(node.var, _copy_tree(node.low), _copy_tree(node.high))


@dataclass(frozen=True)
class DecisionEntry:
    """One rule: if every (var, bit) literal matches, answer with the LTF sign."""

    literals: tuple[tuple[int, int], ...]
    ltf: LinearThresholdFunction
    vector: tuple[int, ...]

    def matches(self, x) -> bool:
        return all(x[var - 1] == bit for var, bit in self.literals)


@dataclass(frozen=True)
class DecisionList:
    m: int
    entries: tuple[DecisionEntry, ...]

    @property
    def max_literals(self) -> int:
        return max((len(e.literals) for e in self.entries), default=0)

    def evaluate(self, x) -> int:
        for e in self.entries:
            if e.matches(x):
                return 1 if e.ltf.value2(x) > 0 else 0
        return 0


def tree_to_decision_list(tree, m: int) -> DecisionList:
    """Peel off a shallow leaf at a time: with L leaves remaining, descending
    into the smaller child always reaches a leaf within floor(log2 L) steps,
    so every emitted monomial has at most floor(log2 w(f)) literals.
    """
    root = _copy_tree(tree)
    entries = []
    while True:
        bound = floor_log2(root.leaves)
        path = []
        node = root
        while isinstance(node, _Node):
            go_low = node.low.leaves <= node.high.leaves
            path.append((node, 0 if go_low else 1))
            node = node.low if go_low else node.high
        if len(path) > bound:
            raise RuntimeError(
                f"rank bound violated: leaf at depth {len(path)} with {root.leaves} leaves left"
            )
        literals = tuple((n.var, d) for n, d in path)
        entries.append(DecisionEntry(literals, node.ltf, node.vector))
        if not path:
            break
        parent, d = path[-1]
        sibling = parent.high if d == 0 else parent.low
        if len(path) == 1:
            root = sibling
        else:
            grand, gd = path[-2]
            if gd == 0:
                grand.low = sibling
            else:
                grand.high = sibling
        for n, _ in path[:-1]:
            n.leaves -= 1
    return DecisionList(m, tuple(entries))


@dataclass(frozen=True)
class PolynomialThresholdFunction:
    """P2(X) = sum_i A_i C_i(X) (2 L_i(X) + bias2_i), classified by P2 > 0.

    Weights fall geometrically with ratio 4m + 4: each term is bounded by
    2m + 1 in magnitude while a fired clause term contributes at least 1, so
    the first fired entry dominates the tail.  The stored degree is exact:
    clause coefficients are never zero and the weights are distinct powers,
    so top-degree terms cannot cancel.
    """

    m: int
    entries: tuple[DecisionEntry, ...]
    weights: tuple[int, ...]
    degree: int

    def value2(self, x) -> int:
        total = 0
        for e, a in zip(self.entries, self.weights):
            if e.matches(x):
                total += a * e.ltf.value2(x)
        return total

    def classify(self, x) -> int:
        return 1 if self.value2(x) > 0 else 0

    def weight_bound(self) -> int:
        """Upper bound on |value2| over the Boolean cube."""
        return (2 * self.m + 1) * sum(self.weights)

    def evaluate_field(self, field, xs, weights_mod=None) -> int:
        """Evaluate the same polynomial on field elements (factored form)."""
        if weights_mod is None:
            weights_mod = [field.element(a) for a in self.weights]
        two = field.element(2)
        total = field.zero
        for e, a in zip(self.entries, weights_mod):
            factor = a
            for var, bit in e.literals:
                v = xs[var - 1]
                lit = v if bit else field.sub(field.one, v)
                factor = field.mul(factor, lit)
                if factor == field.zero:
                    break
            if factor == field.zero:
                continue
            lin = field.element(e.ltf.bias2)
            for j, zj in enumerate(e.ltf.z):
                if zj == 1:
                    lin = field.add(lin, field.mul(two, xs[j]))
                elif zj == -1:
                    lin = field.sub(lin, field.mul(two, xs[j]))
            total = field.add(total, field.mul(factor, lin))
        return total

    def expand(self) -> dict[tuple[int, ...], int]:
        """Exponent-vector -> integer coefficient map of P2 (exponential in
        negated literals; intended for small instances and tests)."""
        acc: dict[tuple[int, ...], int] = {}
        zero_exp = (0,) * self.m
        for e, a in zip(self.entries, self.weights):
            part = {zero_exp: a}
            for var, bit in e.literals:
                nxt: dict[tuple[int, ...], int] = {}
                for exp, c in part.items():
                    bumped = list(exp)
                    bumped[var - 1] += 1
                    bumped = tuple(bumped)
                    if bit:
                        nxt[bumped] = nxt.get(bumped, 0) + c
                    else:
                        nxt[exp] = nxt.get(exp, 0) + c
                        nxt[bumped] = nxt.get(bumped, 0) - c
                part = nxt
            lin = [(e.ltf.bias2, zero_exp)]
            for j, zj in enumerate(e.ltf.z):
                if zj:
                    unit = list(zero_exp)
                    unit[j] = 1
                    lin.append((2 * zj, tuple(unit)))
            for exp, c in part.items():
                for lc, lexp in lin:
                    merged = tuple(a1 + b1 for a1, b1 in zip(exp, lexp))
                    acc[merged] = acc.get(merged, 0) + c * lc
        return {exp: c for exp, c in acc.items() if c}


def build_ptf(dlist: DecisionList) -> PolynomialThresholdFunction:
    m = dlist.m
    w = len(dlist.entries)
    if w == 0:
        raise ValueError("cannot build a threshold polynomial from an empty list")
    ratio = 4 * m + 4
    weights = [1] * w
    for i in range(w - 2, -1, -1):
        weights[i] = weights[i + 1] * ratio
    degree = max(len(e.literals) for e in dlist.entries) + 1
    return PolynomialThresholdFunction(m, dlist.entries, tuple(weights), degree)


def ptf_for_function(supp: DnfSupport) -> PolynomialThresholdFunction:
    """Full pipeline: decision tree, decision list, then weighted polynomial."""
    tree = build_decision_tree(supp)
    return build_ptf(tree_to_decision_list(tree, supp.m))


def partition_dnf(supp: DnfSupport, d: int) -> list[DnfSupport]:
    """Split the clause list into d balanced groups (sizes differ by at most 1,
    larger groups first), preserving support order."""
    w = supp.weight
    if not 1 <= d <= w:
        raise ValueError(f"partition count must be in 1..{w}, got {d}")
    base, extra = divmod(w, d)
    groups = []
    start = 0
    for g in range(d):
        size = base + (1 if g < extra else 0)
        groups.append(DnfSupport(supp.m, supp.support[start : start + size]))
        start += size
    return groups
