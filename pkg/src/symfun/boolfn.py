"""Truth tables and the symmetric/anti-symmetric function family.

A truth table on ``n`` variables is stored as a Python integer whose binary
expansion, read most-significant bit first, lists ``f(0), f(1), ...,
f(2**n - 1)``.  Input index ``x`` has ``x1`` as its most significant bit, so
for ``n = 2`` the rows count 00, 01, 10, 11 and ``p1`` is the pattern 0011.

Family members are exactly the affine parity functions
``f(x) = parity(mask & x) ^ constant``.  Members with ``constant = 0`` are
*positive*, their complements are *negative*.
"""

from __future__ import annotations

import enum
import math
import os
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import overload

import numpy as np

from .errors import NotInFamily, SizeCapExceeded, SizeMismatch

DEFAULT_MAX_N = 24
MAX_N_ENV = "SYMFUN_MAX_N"


def size_cap(max_n: int | None = None) -> int:
    """Effective cap on ``n``: explicit argument, then env var, then default."""
    if max_n is not None:
        return max_n
    env = os.environ.get(MAX_N_ENV)
    return int(env) if env else DEFAULT_MAX_N


def check_size(n: int, max_n: int | None = None) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    cap = size_cap(max_n)
    if n > cap:
        raise SizeCapExceeded(f"n={n} exceeds size cap {cap}")


def reverse_bits(value: int, width: int) -> int:
    out = 0
    for _ in range(width):
        out = (out << 1) | (value & 1)
        value >>= 1
    return out


def parity(value: int) -> int:
    return bin(value).count("1") & 1


@dataclass(frozen=True)
class TruthTable:
    n: int
    value: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.value < (1 << self.size):
            raise ValueError(f"value does not fit in {self.size} bits")

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def __getitem__(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise IndexError(x)
        return (self.value >> (self.size - 1 - x)) & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_array().tolist())

    def __len__(self) -> int:
        return self.size

    def __invert__(self) -> TruthTable:
        return complement(self)

    def __xor__(self, other: TruthTable) -> TruthTable:
        return xor(self, other)

    def __str__(self) -> str:
        return self.bin()

    def bin(self) -> str:
        return format(self.value, f"0{self.size}b")

    def hex(self) -> str:
        return format_table(self, "hex")

    @cached_property
    def _bits(self) -> np.ndarray:
        nbytes = max(1, self.size // 8)
        raw = np.frombuffer(self.value.to_bytes(nbytes, "big"), dtype=np.uint8)
        bits = np.unpackbits(raw)[-self.size:]
        bits.flags.writeable = False
        return bits

    def to_array(self) -> np.ndarray:
        """Read-only ``uint8`` array of ``f(x)`` indexed by ``x``."""
        return self._bits

    @classmethod
    def from_bin(cls, text: str) -> TruthTable:
        text = text.strip().replace("_", "").replace(",", "")
        size = len(text)
        n = size.bit_length() - 1
        if size < 2 or size != 1 << n or set(text) - {"0", "1"}:
            raise ValueError(f"not a truth table bit string: {text!r}")
        return cls(n, int(text, 2))

    @classmethod
    def from_hex(cls, text: str, n: int | None = None) -> TruthTable:
        """Parse hex digits (either case).  ``n`` defaults to the digit count."""
        text = text.strip().replace("_", "").removeprefix("$").removeprefix("0x")
        value = int(text, 16)
        if n is None:
            bits = 4 * len(text)
            n = bits.bit_length() - 1
            if bits != 1 << n:
                raise ValueError(f"cannot infer n from {len(text)} hex digits")
        return cls(n, value)

    @classmethod
    def from_array(cls, bits) -> TruthTable:
        bits = np.asarray(bits, dtype=np.uint8)
        return cls.from_bin("".join(map(str, bits.tolist())))

    @classmethod
    def from_function(cls, n: int, f) -> TruthTable:
        value = 0
        for x in range(1 << n):
            value = (value << 1) | (f(x) & 1)
        return cls(n, value)

    def to_json(self) -> dict:
        return {"n": self.n, "hex": format(self.value, "X")}

    @classmethod
    def from_json(cls, data: dict) -> TruthTable:
        return cls.from_hex(data["hex"], int(data["n"]))


class Classification(enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    NEITHER = "Neither"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class AffineForm:
    """``f(x) = parity(mask & x) ^ constant``; mask bit ``n - i`` selects ``p_i``."""

    n: int
    mask: int
    constant: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask} does not fit in {self.n} bits")
        if self.constant not in (0, 1):
            raise ValueError("constant must be 0 or 1")

    def __call__(self, x: int) -> int:
        return parity(self.mask & x) ^ self.constant

    @property
    def variables(self) -> tuple[int, ...]:
        """1-based indices of the participating variables."""
        return tuple(i for i in range(1, self.n + 1) if self.mask >> (self.n - i) & 1)

    def __str__(self) -> str:
        terms = " ^ ".join(f"p{i}" for i in self.variables) or "0"
        if self.constant:
            if terms == "0":
                return "1"
            return f"~{terms}" if len(self.variables) == 1 else f"~({terms})"
        return terms


def _require_same_n(a: TruthTable, b: TruthTable) -> None:
    if a.n != b.n:
        raise SizeMismatch(f"truth tables have n={a.n} and n={b.n}")


def complement(tt: TruthTable) -> TruthTable:
    return TruthTable(tt.n, tt.value ^ tt.full)


def mirror(tt: TruthTable) -> TruthTable:
    """Reverse the row order, ``f(x) -> f(2**n - 1 - x)``."""
    return TruthTable(tt.n, int(tt.bin()[::-1], 2))


def xor(a: TruthTable, b: TruthTable) -> TruthTable:
    _require_same_n(a, b)
    return TruthTable(a.n, a.value ^ b.value)


def classify(tt: TruthTable) -> Classification:
    """Recursive halving test.

    At every level the second half must equal the first half or its
    complement; only the first half is descended into since complementing
    preserves the property.  The leading bit gives the polarity.
    """
    v, width = tt.value, tt.size
    while width > 1:
        half = width >> 1
        low = (1 << half) - 1
        first, second = v >> half, v & low
        if second != first and second != first ^ low:
            return Classification.NEITHER
        v, width = first, half
    return Classification.NEGATIVE if v else Classification.POSITIVE


def is_member(tt: TruthTable) -> bool:
    return classify(tt) is not Classification.NEITHER


def from_affine(af: AffineForm) -> TruthTable:
    # Build from the innermost variable outward: T <- T || (T ^ a_i).
    v, width = af.constant, 1
    for j in range(af.n):
        ones = (1 << width) - 1
        v = (v << width) | (v ^ ones if af.mask >> j & 1 else v)
        width <<= 1
    return TruthTable(af.n, v)


def to_affine(tt: TruthTable) -> AffineForm:
    """Read the constant at ``x = 0`` and each mask bit at a unit input.

    Independent of :func:`classify`: membership is confirmed by rebuilding
    the table from the recovered form.
    """
    c = tt[0]
    mask = 0
    for i in range(tt.n):
        mask = (mask << 1) | (tt[1 << (tt.n - 1 - i)] ^ c)
    af = AffineForm(tt.n, mask, c)
    if from_affine(af) != tt:
        raise NotInFamily(f"{tt.bin() if tt.n <= 6 else tt.n} is not symmetric or anti-symmetric")
    return af


def family_affine(n: int, index: int) -> AffineForm:
    """Affine form of the ``index``-th member in canonical (ascending) order.

    The k-th positive in ascending order has mask ``reverse_bits(k, n)``;
    negatives in ascending order are complements of positives taken in
    descending order.
    """
    half = 1 << n
    if not 0 <= index < 2 * half:
        raise IndexError(index)
    if index < half:
        return AffineForm(n, reverse_bits(index, n), 0)
    return AffineForm(n, reverse_bits(2 * half - 1 - index, n), 1)


def positive_index(af: AffineForm) -> int:
    """Position of a positive mask in ascending numeric order."""
    return reverse_bits(af.mask, af.n)


def generation_affine(n: int, index: int) -> AffineForm:
    """Affine form of the ``index``-th member in construction order.

    Construction takes the previous family in numeric order and emits each
    member concatenated with itself, then with its complement (its mirror
    image in that list).
    """
    if not 0 <= index < 1 << (n + 1):
        raise IndexError(index)
    parent = family_affine(n - 1, index >> 1)
    flip = index & 1
    return AffineForm(n, parent.mask | (flip << (n - 1)), parent.constant)


class Family(Sequence):
    """Lazy ordered view of the ``2**(n+1)`` family members."""

    def __init__(self, n: int, order: str = "canonical", max_n: int | None = None):
        check_size(n, max_n)
        if order not in ("canonical", "generation"):
            raise ValueError(f"unknown order {order!r}")
        self.n = n
        self.order = order
        self._affine = family_affine if order == "canonical" else generation_affine

    def __len__(self) -> int:
        return 1 << (self.n + 1)

    def affine(self, index: int) -> AffineForm:
        if index < 0:
            index += len(self)
        return self._affine(self.n, index)

    @overload
    def __getitem__(self, index: int) -> TruthTable: ...
    @overload
    def __getitem__(self, index: slice) -> list[TruthTable]: ...

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(len(self)))]
        if not -len(self) <= index < len(self):
            raise IndexError(index)
        return from_affine(self.affine(index))

    def affines(self) -> Iterator[AffineForm]:
        return (self.affine(i) for i in range(len(self)))

    @property
    def positives(self) -> list[TruthTable]:
        return self[: len(self) // 2] if self.order == "canonical" else [
            t for t in self if t[0] == 0
        ]

    @property
    def negatives(self) -> list[TruthTable]:
        return self[len(self) // 2:] if self.order == "canonical" else [
            t for t in self if t[0] == 1
        ]

    def __repr__(self) -> str:
        return f"Family(n={self.n}, order={self.order!r})"


def construct_family(n: int, *, max_n: int | None = None) -> Family:
    """Positives ascending, then negatives ascending."""
    return Family(n, "canonical", max_n)


def generation_order(n: int, *, max_n: int | None = None) -> Family:
    """The same members in raw construction order."""
    return Family(n, "generation", max_n)


def capacity(n: int) -> int:
    """Number of distinct states storable with n qubits set to (1 0), (0 1) or (1 1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(math.comb(n, i) * 2 ** (n - i) for i in range(n + 1))


def format_table(tt: TruthTable, style: str = "bin") -> str:
    if style == "bin":
        return tt.bin()
    if style == "hex":
        if tt.n < 2:
            raise ValueError("hex style needs n >= 2")
        return format(tt.value, f"0{tt.size // 4}X")
    if style == "dec":
        return str(tt.value)
    raise ValueError(f"unknown style {style!r}")
