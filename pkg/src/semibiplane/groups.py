"""Finite abelian groups as direct products of cyclic factors.

Elements are canonical integer indices in ``0..order-1`` under a mixed-radix
encoding where the first factor is least significant. Keeping elements as
plain ints keeps every table in the package flat and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import UnsupportedGroupError


@dataclass(frozen=True)
class GroupSpec:
    """Direct product of cyclic groups, written additively."""

    factors: tuple[int, ...]
    order: int

    @property
    def name(self) -> str:
        """Compact serialization, e.g. ``Z6`` or ``Z2xZ2``."""
        return "Z" + "xZ".join(str(n) for n in self.factors)

    @property
    def zero(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def check(self, x: int) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.order:
            raise ValueError(f"invalid element {x!r} for {self.name} (expected 0..{self.order - 1})")
        return x

    def decode(self, x: int) -> tuple[int, ...]:
        """Mixed-radix digits of ``x``, first factor least significant."""
        self.check(x)
        digits = []
        for n in self.factors:
            x, d = divmod(x, n)
            digits.append(d)
        return tuple(digits)

    def encode(self, digits: Sequence[int]) -> int:
        if len(digits) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} digits, got {len(digits)}")
        x = 0
        for n, d in zip(reversed(self.factors), reversed(list(digits))):
            if not 0 <= d < n:
                raise ValueError(f"digit {d} out of range for modulus {n}")
            x = x * n + d
        return x

    def add(self, x: int, y: int) -> int:
        dx, dy = self.decode(x), self.decode(y)
        return self.encode([(a + b) % n for a, b, n in zip(dx, dy, self.factors)])

    def neg(self, x: int) -> int:
        return self.encode([(-d) % n for d, n in zip(self.decode(x), self.factors)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))


def make_group(factors: Iterable[int]) -> GroupSpec:
    """Build a group spec from cyclic moduli; every modulus must be >= 2."""
    fs = tuple(int(n) for n in factors)
    if not fs:
        raise ValueError("invalid group: factor list is empty")
    for n in fs:
        if n < 2:
            raise ValueError(f"invalid group: modulus {n} < 2")
    order = 1
    for n in fs:
        order *= n
    return GroupSpec(fs, order)


@lru_cache(maxsize=None)
def add_table(G: GroupSpec) -> tuple[int, ...]:
    """Flat addition table: entry ``x * order + y`` is ``x + y``."""
    k = G.order
    out = [0] * (k * k)
    for x in range(k):
        for y in range(k):
            out[x * k + y] = G.add(x, y)
    return tuple(out)


@lru_cache(maxsize=None)
def neg_table(G: GroupSpec) -> tuple[int, ...]:
    return tuple(G.neg(x) for x in range(G.order))


@lru_cache(maxsize=None)
def sub_table(G: GroupSpec) -> tuple[int, ...]:
    """Flat subtraction table: entry ``x * order + y`` is ``x - y``."""
    k = G.order
    neg = neg_table(G)
    add = add_table(G)
    return tuple(add[x * k + neg[y]] for x in range(k) for y in range(k))


def index2_subgroups(G: GroupSpec) -> list[frozenset[int]]:
    """All subgroups of index 2, each as a set of element indices.

    Enumerated as kernels of the nonzero homomorphisms onto Z2: only digits
    with an even modulus can contribute their parity, so the subgroups are in
    bijection with the nonzero parity masks over the even factors.
    """
    even_pos = [i for i, n in enumerate(G.factors) if n % 2 == 0]
    if not even_pos:
        return []
    parities = []
    for x in G.elements():
        digits = G.decode(x)
        parities.append(tuple(digits[i] % 2 for i in even_pos))
    subgroups = []
    for mask in range(1, 1 << len(even_pos)):
        bits = [(mask >> j) & 1 for j in range(len(even_pos))]
        members = frozenset(
            x for x in G.elements()
            if sum(b * p for b, p in zip(bits, parities[x])) % 2 == 0
        )
        subgroups.append(members)
    return sorted(subgroups, key=lambda s: tuple(sorted(s)))


def is_subgroup(G: GroupSpec, S: Iterable[int]) -> bool:
    """True iff ``S`` contains zero and is closed under addition and negation."""
    members = frozenset(S)
    if not members:
        raise ValueError("invalid subgroup candidate: empty set")
    for x in members:
        G.check(x)
    if G.zero not in members:
        return False
    for x in members:
        if G.neg(x) not in members:
            return False
        for y in members:
            if G.add(x, y) not in members:
                return False
    return True


def coset(G: GroupSpec, S: Iterable[int], rep: int) -> frozenset[int]:
    G.check(rep)
    return frozenset(G.add(s, rep) for s in S)


def automorphisms(G: GroupSpec) -> list[tuple[int, ...]]:
    """Automorphisms of a cyclic group as index permutations x -> u*x.

    Only single-factor groups are supported; callers needing transforms of
    product groups supply their own permutations (see
    ``functions.equivalence_transform``).
    """
    if len(G.factors) != 1:
        raise UnsupportedGroupError(
            f"automorphism enumeration supports cyclic groups only, got {G.name}"
        )
    k = G.order
    return [
        tuple((u * x) % k for x in range(k))
        for u in range(1, k)
        if gcd(u, k) == 1
    ]
