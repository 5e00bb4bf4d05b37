"""Arithmetic in GF(2^m) using the polynomial basis.

Elements are plain Python ints in ``range(2**m)``: bit ``i`` is the
coefficient of ``x**i`` in the reduced representative.  A
:class:`FieldContext` owns the modulus and a primitive element and hands
out both scalar operations (any ``m <= 30``) and lazily built numpy lookup
tables (``m <= 24``) for the exhaustive loops in the other modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    NonDivisorOrder,
    NonDivisorSubfieldDegree,
    NotIrreducible,
    ZeroInput,
    check_cap,
)

__all__ = [
    "FieldContext",
    "make_field",
    "is_irreducible",
    "irreducible_polynomials",
    "trace",
    "chi",
    "power_residue_root",
    "prime_factors_of_order",
    "to_hex",
    "from_hex",
    "MAX_DEGREE",
    "TABLE_CAP",
]

MAX_DEGREE = 30
TABLE_CAP = 24

# Distinct prime factors of 2^m - 1.
_ORDER_PRIMES: dict[int, tuple[int, ...]] = {
    1: (),
    2: (3,),
    3: (7,),
    4: (3, 5),
    5: (31,),
    6: (3, 7),
    7: (127,),
    8: (3, 5, 17),
    9: (7, 73),
    10: (3, 11, 31),
    11: (23, 89),
    12: (3, 5, 7, 13),
    13: (8191,),
    14: (3, 43, 127),
    15: (7, 31, 151),
    16: (3, 5, 17, 257),
    17: (131071,),
    18: (3, 7, 19, 73),
    19: (524287,),
    20: (3, 5, 11, 31, 41),
    21: (7, 127, 337),
    22: (3, 23, 89, 683),
    23: (47, 178481),
    24: (3, 5, 7, 13, 17, 241),
    25: (31, 601, 1801),
    26: (3, 2731, 8191),
    27: (7, 73, 262657),
    28: (3, 5, 29, 43, 113, 127),
    29: (233, 1103, 2089),
    30: (3, 7, 11, 31, 151, 331),
}


def prime_factors_of_order(m: int) -> tuple[int, ...]:
    """Distinct primes dividing ``2**m - 1`` (hard-coded for ``m <= 30``)."""
    return _ORDER_PRIMES[m]


# --- polynomials over GF(2), encoded as ints -------------------------------


def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _pmod(a: int, f: int) -> int:
    df = f.bit_length() - 1
    while a.bit_length() - 1 >= df:
        a ^= f << (a.bit_length() - 1 - df)
    return a


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def is_irreducible(f: int) -> bool:
    """Irreducibility over GF(2) of the polynomial encoded by ``f``.

    Uses the Ben-Or criterion: ``gcd(f, x^(2^i) - x mod f) == 1`` for all
    ``1 <= i <= deg(f) // 2``.
    """
    d = f.bit_length() - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if not f & 1:
        return False
    h = 2  # x
    for _ in range(d // 2):
        h = _pmod(_clmul(h, h), f)
        if _pgcd(f, h ^ 2) != 1:
            return False
    return True


def irreducible_polynomials(m: int) -> Iterable[int]:
    """Degree-``m`` irreducible polynomials with constant term 1, by increasing encoding."""
    for f in range(1 << m | 1, 1 << (m + 1), 2):
        if is_irreducible(f):
            yield f


def to_hex(x: int) -> str:
    return format(x, "x")


def from_hex(text: str) -> int:
    text = text.strip().lower()
    if text.startswith("0x"):
        text = text[2:]
    return int(text, 16)


# --- the field ---------------------------------------------------------------


@dataclass(frozen=True)
class FieldContext:
    """GF(2^m) with a fixed irreducible modulus and primitive element.

    Build instances with :func:`make_field`; the constructor does not
    validate its arguments.
    """

    m: int
    modulus: int
    generator: int

    @property
    def q(self) -> int:
        return 1 << self.m

    @property
    def order(self) -> int:
        """Order ``q - 1`` of the multiplicative group."""
        return (1 << self.m) - 1

    def __repr__(self) -> str:
        return (
            f"FieldContext(m={self.m}, modulus=0x{to_hex(self.modulus)}, "
            f"generator=0x{to_hex(self.generator)})"
        )

    # element conversion

    def element(self, value: int | str | Sequence[int]) -> int:
        """Validate and convert an int, hex string or coordinate vector."""
        if isinstance(value, str):
            x = from_hex(value)
        elif isinstance(value, (int, np.integer)):
            x = int(value)
        else:
            coords = list(value)
            if len(coords) != self.m:
                raise ValueError(f"expected {self.m} coordinates, got {len(coords)}")
            x = self.from_coords(coords)
        if not 0 <= x < self.q:
            raise ValueError(f"{x:#x} is not an element of GF(2^{self.m})")
        return x

    def coords(self, x: int) -> tuple[int, ...]:
        return tuple((x >> i) & 1 for i in range(self.m))

    @staticmethod
    def from_coords(coords: Sequence[int]) -> int:
        x = 0
        for i, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError("coordinates must be bits")
            x |= c << i
        return x

    def elements(self) -> range:
        return range(self.q)

    # scalar arithmetic

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        top = self.q
        f = self.modulus
        r = 0
        while y:
            if y & 1:
                r ^= x
            y >>= 1
            x <<= 1
            if x & top:
                x ^= f
        return r

    def square(self, x: int) -> int:
        return self.mul(x, x)

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise DivisionByZero("0 has no inverse")
            return 0 if e > 0 else 1
        e %= self.order
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("0 has no inverse")
        return self.pow(x, self.order - 1)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    # traces and the canonical additive character

    def _check_subfield(self, s: int) -> None:
        if s < 1 or self.m % s:
            raise NonDivisorSubfieldDegree(f"s = {s} does not divide m = {self.m}")

    def trace_direct(self, x: int, s: int = 1) -> int:
        """``x + x^(2^s) + ... + x^(2^((m/s - 1)s))`` by repeated Frobenius."""
        self._check_subfield(s)
        total = 0
        y = x
        for _ in range(self.m // s):
            total ^= y
            for _ in range(s):
                y = self.mul(y, y)
        return total

    def _trace_images(self, s: int) -> tuple[int, ...]:
        cache = self.__dict__.setdefault("_trace_image_cache", {})
        if s not in cache:
            self._check_subfield(s)
            cache[s] = tuple(self.trace_direct(1 << i, s) for i in range(self.m))
        return cache[s]

    @cached_property
    def trace_mask(self) -> int:
        """Bit ``i`` set iff ``Tr(x^i) = 1``; then ``Tr(x) = parity(x & mask)``."""
        return sum(1 << i for i, t in enumerate(self._trace_images(1)) if t)

    def trace(self, x: int, s: int = 1) -> int:
        """Trace from GF(2^m) onto the subfield GF(2^s), via its F_2-linearity."""
        if s == 1:
            return (x & self.trace_mask).bit_count() & 1
        images = self._trace_images(s)
        r = 0
        i = 0
        while x:
            if x & 1:
                r ^= images[i]
            x >>= 1
            i += 1
        return r

    def chi(self, x: int) -> int:
        return -1 if (x & self.trace_mask).bit_count() & 1 else 1

    def subfield(self, s: int) -> list[int]:
        """Elements of the subfield GF(2^s) inside this field."""
        self._check_subfield(s)
        if s == self.m:
            return list(range(self.q))
        step = self.order // ((1 << s) - 1)
        g = self.pow(self.generator, step)
        out = [0]
        y = 1
        for _ in range((1 << s) - 1):
            out.append(y)
            y = self.mul(y, g)
        return sorted(out)

    # roots

    def is_power_residue(self, a: int, d: int) -> bool:
        if a == 0:
            raise ZeroInput("a must be nonzero")
        if d < 1 or self.order % d:
            raise NonDivisorOrder(f"d = {d} does not divide q - 1 = {self.order}")
        return self.pow(a, self.order // d) == 1

    def power_residue_root(self, a: int, d: int) -> int | None:
        """Some ``b`` with ``b**d == a``, or None when ``a`` is not a d-th power.

        Uses a single exponentiation when ``gcd(d, (q-1)/d) == 1`` and the
        discrete-log table otherwise.
        """
        if not self.is_power_residue(a, d):
            return None
        n_d = self.order // d
        if gcd(d, n_d) == 1:
            return self.pow(a, pow(d, -1, n_d) if n_d > 1 else 0)
        t = int(self.log_table[a])
        return int(self.exp_table[t // d])

    # lookup tables (m <= TABLE_CAP)

    def _mul_array_scalar(self, arr: np.ndarray, s: int) -> np.ndarray:
        """Elementwise ``arr * s`` by shift-and-add, no tables needed."""
        res = np.zeros_like(arr)
        a = arr.copy()
        top = self.q
        for i in range(self.m):
            if (s >> i) & 1:
                res ^= a
            a <<= 1
            a ^= np.where(a & top, self.modulus, 0).astype(a.dtype)
        return res

    @cached_property
    def exp_table(self) -> np.ndarray:
        """``exp_table[i] = generator**i`` for ``0 <= i < q - 1``."""
        check_cap(self.m, TABLE_CAP, "power tables")
        n = self.order
        block = 1 << ((self.m + 1) // 2)
        head = np.empty(min(block, n), dtype=np.int64)
        y = 1
        for i in range(len(head)):
            head[i] = y
            y = self.mul(y, self.generator)
        rows = -(-n // len(head))
        out = np.empty(rows * len(head), dtype=np.int64)
        step = y  # generator ** len(head)
        start = 1
        for r in range(rows):
            out[r * len(head):(r + 1) * len(head)] = self._mul_array_scalar(head, start)
            start = self.mul(start, step)
        out = out[:n]
        out.setflags(write=False)
        return out

    @cached_property
    def exp_table2(self) -> np.ndarray:
        """:attr:`exp_table` repeated twice, indexable by a sum of two logs."""
        out = np.concatenate([self.exp_table, self.exp_table])
        out.setflags(write=False)
        return out

    @cached_property
    def log_table(self) -> np.ndarray:
        """Inverse of :attr:`exp_table`; ``log_table[0] = -1``."""
        log = np.full(self.q, -1, dtype=np.int64)
        log[self.exp_table] = np.arange(self.order, dtype=np.int64)
        log.setflags(write=False)
        return log

    @cached_property
    def trace_table(self) -> np.ndarray:
        """``Tr(x)`` for every element, as uint8."""
        check_cap(self.m, TABLE_CAP, "trace table")
        out = self.trace_array(np.arange(self.q, dtype=np.int64)).astype(np.uint8)
        out.setflags(write=False)
        return out

    @cached_property
    def chi_table(self) -> np.ndarray:
        out = 1 - 2 * self.trace_table.astype(np.int64)
        out.setflags(write=False)
        return out

    # vectorised helpers

    def trace_array(self, arr: np.ndarray, s: int = 1) -> np.ndarray:
        arr = np.asarray(arr, dtype=np.int64)
        if s == 1:
            return (np.bitwise_count(arr & self.trace_mask) & 1).astype(np.int64)
        res = np.zeros_like(arr)
        for i, img in enumerate(self._trace_images(s)):
            if img:
                res ^= np.where((arr >> i) & 1, img, 0)
        return res

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = self.exp_table2[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def pow_array(self, a: np.ndarray, e: int) -> np.ndarray:
        """Elementwise ``a**e`` for ``e >= 1`` (so ``0**e = 0``)."""
        if e < 1:
            raise ValueError("pow_array needs a positive exponent")
        a = np.asarray(a, dtype=np.int64)
        if self.order == 1:
            return a.copy()
        la = self.log_table[a]
        return np.where(a == 0, 0, self.exp_table[(la * (e % self.order)) % self.order])

    def inv_array(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("0 has no inverse")
        return self.exp_table[(-self.log_table[a]) % self.order]


def _find_generator(m: int, modulus: int) -> int:
    ctx = FieldContext(m, modulus, 1)
    n = ctx.order
    primes = _ORDER_PRIMES[m]
    for g in range(1, ctx.q):
        if ctx.pow(g, n) == 1 and all(ctx.pow(g, n // p) != 1 for p in primes):
            return g
    raise AssertionError("no primitive element found")  # unreachable for irreducible moduli


def _parse_modulus(modulus: int | str | Sequence[int]) -> int:
    if isinstance(modulus, str):
        return from_hex(modulus)
    if isinstance(modulus, (int, np.integer)):
        return int(modulus)
    return sum(int(c) << i for i, c in enumerate(modulus))


_DEFAULT_MODULI: dict[int, int] = {}


def make_field(m: int, modulus: int | str | Sequence[int] | None = None) -> FieldContext:
    """Build GF(2^m).

    ``modulus`` may be an int encoding (bit ``i`` is the coefficient of
    ``x**i``), a hex string, or a coefficient vector of length ``m + 1``.
    Without one, the irreducible polynomial of smallest encoding is used.
    The generator is always the smallest-encoding primitive element.
    """
    if not isinstance(m, (int, np.integer)) or not 1 <= m <= MAX_DEGREE:
        raise DegreeOutOfRange(f"m must satisfy 1 <= m <= {MAX_DEGREE}, got {m!r}")
    m = int(m)
    if modulus is None:
        if m not in _DEFAULT_MODULI:
            _DEFAULT_MODULI[m] = next(iter(irreducible_polynomials(m)))
        f = _DEFAULT_MODULI[m]
    else:
        f = _parse_modulus(modulus)
        if f.bit_length() - 1 != m:
            raise DegreeOutOfRange(f"modulus {f:#x} does not have degree {m}")
        if not f & 1:
            raise NotIrreducible(f"modulus {f:#x} has zero constant term")
        if not is_irreducible(f):
            raise NotIrreducible(f"modulus {f:#x} is reducible over GF(2)")
    return FieldContext(m, f, _find_generator(m, f))


# functional aliases


def trace(ctx: FieldContext, x: int, s: int = 1) -> int:
    return ctx.trace(x, s)


def chi(ctx: FieldContext, x: int) -> int:
    return ctx.chi(x)


def power_residue_root(ctx: FieldContext, a: int, d: int) -> int | None:
    return ctx.power_residue_root(a, d)
