"""Arithmetic in GF(2^e) for e = 1..8, in the polynomial basis.

Field elements are bitmasks (bit i is the coefficient of X^i). Each degree
uses the lexicographically least irreducible polynomial; element labels in
any output are canonical only relative to that choice of basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .functions import FuncTable
from .groups import GroupSpec, make_group

#: Least irreducible polynomial per degree, as a bitmask including the
#: leading term. Validated at import by ``_validate_moduli``.
LEAST_IRREDUCIBLE = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}


@dataclass(frozen=True)
class FieldSpec:
    e: int
    modulus: int

    @property
    def size(self) -> int:
        return 1 << self.e


def _poly_degree(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(a: int, m: int) -> int:
    dm = _poly_degree(m)
    while a and _poly_degree(a) >= dm:
        a ^= m << (_poly_degree(a) - dm)
    return a


def _poly_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _is_irreducible(p: int) -> bool:
    # trial division by every polynomial of degree 1..deg/2
    d = _poly_degree(p)
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if _poly_degree(q) >= 1 and _poly_mod(p, q) == 0:
            return False
    return True


def _validate_moduli() -> None:
    for e, m in LEAST_IRREDUCIBLE.items():
        if _poly_degree(m) != e:
            raise AssertionError(f"modulus table broken: degree({m:#b}) != {e}")
        if not _is_irreducible(m):
            raise AssertionError(f"modulus table broken: {m:#b} is reducible")


_validate_moduli()


def make_field(e: int) -> FieldSpec:
    if e not in LEAST_IRREDUCIBLE:
        raise ValueError(f"unsupported extension degree {e} (supported: 1..8)")
    return FieldSpec(e, LEAST_IRREDUCIBLE[e])


def _check_element(field: FieldSpec, a: int) -> int:
    if not 0 <= a < field.size:
        raise ValueError(f"invalid field element {a} for GF(2^{field.e})")
    return a


def field_mul(field: FieldSpec, a: int, b: int) -> int:
    _check_element(field, a)
    _check_element(field, b)
    return _poly_mod(_poly_mul(a, b), field.modulus)


def field_pow(field: FieldSpec, a: int, n: int) -> int:
    """``a**n`` by square-and-multiply; n must be >= 0 (``a**0 == 1``)."""
    _check_element(field, a)
    if n < 0:
        raise ValueError("negative exponent")
    r = 1
    while n:
        if n & 1:
            r = field_mul(field, r, a)
        a = field_mul(field, a, a)
        n >>= 1
    return r


def bit_group(e: int) -> GroupSpec:
    """The additive group of GF(2^e): Z2^e with element index == bitmask."""
    return make_group([2] * e)


def gold_table(e: int, alpha: int) -> FuncTable:
    """Value table of x -> x^(2^alpha + 1) over the additive group of GF(2^e)."""
    field = make_field(e)
    if not 1 <= alpha < e:
        raise ValueError(f"invalid parameter alpha={alpha} (expected 1 <= alpha < {e})")
    G = bit_group(e)
    exp = (1 << alpha) + 1
    return FuncTable(G, G, tuple(field_pow(field, x, exp) for x in range(field.size)))


def inverse_table(e: int) -> FuncTable:
    """Value table of x -> x^(2^e - 2) with 0 -> 0; a bijection of GF(2^e)."""
    field = make_field(e)
    G = bit_group(e)
    exp = (1 << e) - 2
    values = tuple(0 if x == 0 else field_pow(field, x, exp) for x in range(field.size))
    return FuncTable(G, G, values)
