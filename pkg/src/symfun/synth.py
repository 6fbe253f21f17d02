"""Flip-network equivalents of sandwiched family oracles, and the id table.

Sandwiching ``U_f`` between Hadamard layers, for ``f = p_i ^ ... ^ p_j ^ c``,
is the same as inverting data lines ``i..j`` and multiplying the ancilla by
``(-1)^c``.  That network is what :class:`FlipNetwork` models.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field

import numpy as np

from .boolfn import (
    AffineForm,
    Classification,
    TruthTable,
    classify,
    from_affine,
    positive_index,
    reverse_bits,
    to_affine,
)
from .errors import NotInFamily, SizeCapExceeded, SizeMismatch
from .statesim import BasisKet

TABLE5_MAX_N = 8


@dataclass(frozen=True)
class FlipNetwork:
    n: int
    flips: frozenset[int] = field(default_factory=frozenset)
    phase: int = 0

    def __post_init__(self):
        object.__setattr__(self, "flips", frozenset(self.flips))
        if any(not 1 <= q <= self.n for q in self.flips):
            raise ValueError(f"flip lines must be in 1..{self.n}")
        if self.phase not in (0, 1):
            raise ValueError("phase must be 0 or 1")

    @property
    def mask(self) -> int:
        return sum(1 << (self.n - q) for q in self.flips)

    def apply(self, x: int, sign: int = 1) -> BasisKet:
        """Output ket on ``n + 1`` qubits for input ``sign * |x, 1>``."""
        if not 0 <= x < 1 << self.n:
            raise ValueError(f"input {x} out of range for n={self.n}")
        return BasisKet(self.n + 1, ((x ^ self.mask) << 1) | 1, sign * (-1) ** self.phase)

    def then(self, other: FlipNetwork) -> FlipNetwork:
        if other.n != self.n:
            raise SizeMismatch("networks act on different widths")
        return FlipNetwork(self.n, self.flips ^ other.flips, self.phase ^ other.phase)

    def to_text(self) -> str:
        lines = [f"X q{q}" for q in sorted(self.flips)]
        if self.phase:
            lines.append("Z-phase")
        return "\n".join(lines)


def synthesize(af: AffineForm) -> FlipNetwork:
    flips = frozenset(i for i in range(1, af.n + 1) if af.mask >> (af.n - i) & 1)
    return FlipNetwork(af.n, flips, af.constant)


def id_label(index: int) -> str:
    """Letters a..z for the first 26 positives, then ``#k``."""
    return string.ascii_lowercase[index] if index < 26 else f"#{index}"


def id_index(label: str) -> int:
    if label.startswith("#"):
        return int(label[1:])
    if len(label) == 1 and label in string.ascii_lowercase:
        return string.ascii_lowercase.index(label)
    raise ValueError(f"not a function id: {label!r}")


@dataclass(frozen=True)
class FunctionId:
    """Position of a positive function in ascending numeric order."""

    n: int
    index: int

    @property
    def letter(self) -> str:
        return id_label(self.index)

    def __str__(self) -> str:
        return self.letter

    def affine(self) -> AffineForm:
        return AffineForm(self.n, reverse_bits(self.index, self.n), 0)

    def table(self) -> TruthTable:
        return from_affine(self.affine())

    @classmethod
    def of(cls, af: AffineForm) -> FunctionId:
        if af.constant:
            raise ValueError("only positive functions carry an id")
        return cls(af.n, positive_index(af))

    @classmethod
    def parse(cls, label: str, n: int) -> FunctionId:
        index = id_index(label)
        if index >= 1 << n:
            raise ValueError(f"id {label!r} out of range for n={n}")
        return cls(n, index)


def _bits(v: int | str, n: int | None) -> tuple[int, int]:
    if isinstance(v, str):
        return int(v, 2), len(v)
    if n is None:
        raise ValueError("n is required for integer inputs")
    if not 0 <= v < 1 << n:
        raise ValueError(f"{v} does not fit in {n} bits")
    return v, n


def solve_function(
    x: int | str, y: int | str, n: int | None = None
) -> tuple[AffineForm, TruthTable, FunctionId]:
    """The positive function whose sandwich maps ``|x, 1>`` to ``|y, 1>``."""
    xv, xn = _bits(x, n)
    yv, yn = _bits(y, n)
    if xn != yn:
        raise SizeMismatch(f"input has {xn} bits, output has {yn}")
    af = AffineForm(xn, xv ^ yv, 0)
    return af, from_affine(af), FunctionId.of(af)


def solve_output(x: int | str, tt: TruthTable) -> int:
    """Output data bits of a positive function's sandwich on ``|x, 1>``."""
    xv, xn = _bits(x, tt.n)
    if xn != tt.n:
        raise SizeMismatch(f"input has {xn} bits, function has n={tt.n}")
    kind = classify(tt)
    if kind is not Classification.POSITIVE:
        raise NotInFamily(f"solve_output needs a positive function, got {kind}")
    return xv ^ to_affine(tt).mask


def table5(n: int) -> np.ndarray:
    """``T[x, y]`` = id index of the positive function taking ``x`` to ``y``."""
    if not 1 <= n <= TABLE5_MAX_N:
        raise SizeCapExceeded(f"table5 supports 1 <= n <= {TABLE5_MAX_N}")
    ids = np.array([reverse_bits(k, n) for k in range(1 << n)])  # involution
    x = np.arange(1 << n)
    return ids[x[:, None] ^ x[None, :]]


def table5_labels(n: int) -> list[list[str]]:
    return [[id_label(int(k)) for k in row] for row in table5(n)]


@dataclass
class Table5Report:
    n: int
    xor_coset: bool
    symmetric: bool
    latin: bool
    diagonal_a: bool

    @property
    def violations(self) -> list[str]:
        return [k for k in ("xor_coset", "symmetric", "latin", "diagonal_a") if not getattr(self, k)]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_table5_structure(n: int, table: np.ndarray | None = None) -> Table5Report:
    t = table5(n) if table is None else np.asarray(table)
    size = 1 << n
    x = np.arange(size)
    # T[x, y] must equal T[0, x ^ y].
    coset = bool(np.array_equal(t, t[0][x[:, None] ^ x[None, :]]))
    full = np.arange(size)
    latin = all(np.array_equal(np.sort(t[i]), full) for i in range(size)) and all(
        np.array_equal(np.sort(t[:, j]), full) for j in range(size)
    )
    return Table5Report(
        n,
        xor_coset=coset,
        symmetric=bool(np.array_equal(t, t.T)),
        latin=latin,
        diagonal_a=bool(np.all(np.diag(t) == 0)),
    )
