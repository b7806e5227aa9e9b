"""Exact arithmetic substrate: prime fields, GF(2^s), and univariate polynomials.

Field elements are plain Python ints (canonical residues for prime fields,
bit patterns of polynomials for binary extension fields); the field object
supplies the operations.  Python's arbitrary-precision ints make every
operation exact, which the threshold schemes rely on for sign recovery.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

# Primitive polynomials for GF(2^s), condensed as exponent tuples.
_PRIMITIVE_POLY_EXPS = {
    1: (1, 0),
    2: (2, 1, 0),
    3: (3, 1, 0),
    4: (4, 1, 0),
    5: (5, 2, 0),
    6: (6, 1, 0),
    7: (7, 1, 0),
    8: (8, 4, 3, 2, 0),
    9: (9, 4, 0),
    10: (10, 3, 0),
    11: (11, 2, 0),
    12: (12, 6, 4, 1, 0),
    13: (13, 4, 3, 1, 0),
    14: (14, 10, 6, 1, 0),
    15: (15, 1, 0),
    16: (16, 12, 3, 1, 0),
}


def is_probable_prime(n: int, rounds: int = 64) -> bool:
    """Miller-Rabin with `rounds` witnesses (bases seeded deterministically by n)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = random.Random(n)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    c = max(n + 1, 2)
    if c > 2 and c % 2 == 0:
        c += 1
    while not is_probable_prime(c):
        c += 1 if c == 2 else 2
    return c


def lift_signed(x: int, p: int) -> int:
    """Representative of x mod p in the signed range (-p/2, p/2]."""
    x %= p
    return x - p if x > (p - 1) // 2 else x


class PrimeField:
    """Z/pZ for an arbitrary-precision prime p."""

    kind = "prime"

    def __init__(self, p: int):
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1

    @property
    def size(self) -> int:
        return self.p

    def element(self, x: int) -> int:
        return x % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        return pow(a, e, self.p)

    def lift(self, x: int) -> int:
        return lift_signed(x, self.p)

    def random_element(self, rng) -> int:
        return rng.randrange(self.p)

    def points(self, count: int) -> tuple[int, ...]:
        """Distinct evaluation points 1..count."""
        if count >= self.p:
            raise ValueError(f"field of size {self.p} has fewer than {count} nonzero points")
        return tuple(range(1, count + 1))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class BinaryField:
    """GF(2^s) with log/exp multiplication tables (s <= 16)."""

    kind = "binary"

    def __init__(self, s: int):
        if s not in _PRIMITIVE_POLY_EXPS:
            raise ValueError(f"no reduction polynomial on file for s={s}")
        self.s = s
        poly = 0
        for e in _PRIMITIVE_POLY_EXPS[s]:
            poly |= 1 << e
        self.reduction_poly = poly
        order = (1 << s) - 1
        exp = [0] * (2 * order)
        log = [0] * (1 << s)
        x = 1
        for i in range(order):
            if i > 0 and x == 1:
                raise ValueError("reduction polynomial is not primitive")
            exp[i] = x
            log[x] = i
            x <<= 1
            if x >> s:
                x ^= poly
        if x != 1:
            raise ValueError("reduction polynomial is not primitive")
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log
        self._order = order
        self.zero = 0
        self.one = 1

    @property
    def size(self) -> int:
        return 1 << self.s

    def element(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise ValueError(f"element {x} out of range for GF(2^{self.s})")
        return x

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def neg(self, a: int) -> int:
        return a

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[self._order - self._log[a]]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return self._exp[self._log[a] * e % self._order]

    def random_element(self, rng) -> int:
        return rng.randrange(self.size)

    def points(self, count: int) -> tuple[int, ...]:
        """Distinct nonzero elements enumerated canonically (bit patterns 1..count)."""
        if count >= self.size:
            raise ValueError(f"GF(2^{self.s}) has fewer than {count} nonzero points")
        return tuple(range(1, count + 1))

    def __eq__(self, other):
        return isinstance(other, BinaryField) and other.s == self.s

    def __hash__(self):
        return hash(("binary", self.s))

    def __repr__(self):
        return f"BinaryField(2^{self.s})"


def modulus_for_bound(bound: int) -> PrimeField:
    """Smallest prime field with p > 2*bound, so |z| <= bound lifts exactly."""
    if bound < 1:
        raise ValueError("bound must be positive")
    return PrimeField(next_prime(2 * bound + 1))


def binary_field_for_points(n_points: int) -> BinaryField:
    """Smallest GF(2^s) with at least n_points distinct nonzero elements."""
    s = max(1, (n_points + 1 - 1).bit_length())
    while (1 << s) < n_points + 1:
        s += 1
    return BinaryField(s)


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial, lowest-degree coefficient first."""

    field: object
    coeffs: tuple[int, ...]

    @staticmethod
    def make(field, coeffs) -> "Poly":
        cs = list(coeffs)
        while cs and cs[-1] == field.zero:
            cs.pop()
        return Poly(field, tuple(cs))

    @staticmethod
    def constant(field, c) -> "Poly":
        return Poly.make(field, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, x: int) -> int:
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def evaluate_many(self, xs) -> list[int]:
        return [self.evaluate(x) for x in xs]


def poly_eval_batch(poly: Poly, xs) -> list[int]:
    """Horner evaluation of one polynomial at many points."""
    return poly.evaluate_many(xs)


def poly_divmod(field, num, den) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Long division of coefficient tuples (lowest degree first)."""
    den = list(den)
    while den and den[-1] == field.zero:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num)
    while rem and rem[-1] == field.zero:
        rem.pop()
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return (), tuple(rem)
    lead_inv = field.inv(den[-1])
    quot = [field.zero] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = field.mul(rem[i], lead_inv)
        quot[i - dd] = c
        if c != field.zero:
            for j in range(dd + 1):
                rem[i - dd + j] = field.sub(rem[i - dd + j], field.mul(c, den[j]))
    rem = rem[:dd]
    while rem and rem[-1] == field.zero:
        rem.pop()
    return tuple(quot), tuple(rem)


def lagrange_interpolate(points, field) -> Poly:
    """Unique polynomial of degree < len(points) through the given (x, y) pairs."""
    pts = list(points)
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation points")
    k = len(pts)
    if k == 0:
        return Poly.make(field, ())
    # master(x) = prod (x - x_i), built incrementally
    master = [field.one]
    for x, _ in pts:
        nxt = [field.zero] * (len(master) + 1)
        for i, c in enumerate(master):
            nxt[i + 1] = field.add(nxt[i + 1], c)
            nxt[i] = field.sub(nxt[i], field.mul(c, x))
        master = nxt
    acc = [field.zero] * k
    for x_i, y_i in pts:
        # basis_i = master / (x - x_i), by synthetic division
        basis = [field.zero] * k
        carry = master[k]
        for j in range(k - 1, -1, -1):
            basis[j] = carry
            carry = field.add(master[j], field.mul(carry, x_i))
        denom = field.zero
        xp = field.one
        for c in basis:
            denom = field.add(denom, field.mul(c, xp))
            xp = field.mul(xp, x_i)
        scale = field.mul(y_i, field.inv(denom))
        for j in range(k):
            acc[j] = field.add(acc[j], field.mul(basis[j], scale))
    return Poly.make(field, acc)


def lagrange_basis_row(field, nodes, denoms, x) -> list[int]:
    """Values of every Lagrange basis polynomial over `nodes` at the point x."""
    k = len(nodes)
    for i, nd in enumerate(nodes):
        if x == nd:
            row = [field.zero] * k
            row[i] = field.one
            return row
    prefix = [field.one] * (k + 1)
    for i in range(k):
        prefix[i + 1] = field.mul(prefix[i], field.sub(x, nodes[i]))
    suffix = [field.one] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = field.mul(suffix[i + 1], field.sub(x, nodes[i]))
    return [field.mul(field.mul(prefix[i], suffix[i + 1]), field.inv(denoms[i])) for i in range(k)]


def lagrange_denominators(field, nodes) -> list[int]:
    denoms = []
    for i, xi in enumerate(nodes):
        d = field.one
        for j, xj in enumerate(nodes):
            if j != i:
                d = field.mul(d, field.sub(xi, xj))
        denoms.append(d)
    return denoms
