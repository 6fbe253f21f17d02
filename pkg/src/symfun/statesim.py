"""Exact integer state-vector engine.

Amplitudes are ``int64`` values with a scale exponent ``s``: the physical
amplitude at index ``k`` is ``amps[k] / sqrt(2**s)``.  Index bits run from
the first qubit (most significant) down to the ancilla (least significant),
so ``|x1, x2, k>`` sits at ``4*x1 + 2*x2 + k``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .boolfn import TruthTable
from .errors import AmplitudeOverflow, NotBasis, SizeMismatch

_INT64_MAX = np.iinfo(np.int64).max
_H2 = np.array([[1, 1], [1, -1]], dtype=np.int64)


@dataclass(frozen=True, eq=False)
class StateVector:
    m: int
    amps: np.ndarray
    s: int = 0

    def __post_init__(self):
        amps = np.array(self.amps, dtype=np.int64)
        if amps.shape != (1 << self.m,):
            raise SizeMismatch(f"expected {1 << self.m} amplitudes, got {amps.shape}")
        if self.s < 0:
            raise ValueError("scale exponent must be non-negative")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.m == other.m and self.s == other.s and np.array_equal(self.amps, other.amps)

    __hash__ = None

    def norm_squared(self) -> int:
        return sum(int(a) * int(a) for a in self.amps) if self.s > 60 else int(np.dot(self.amps, self.amps))

    def is_normalized(self) -> bool:
        return self.norm_squared() == 1 << self.s

    def __neg__(self) -> StateVector:
        return StateVector(self.m, -self.amps, self.s)

    def to_json(self) -> dict:
        return {"m": self.m, "s": self.s, "amps": self.amps.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> StateVector:
        sv = cls(int(data["m"]), data["amps"], int(data.get("s", 0)))
        if not sv.is_normalized():
            raise ValueError("sum of squared amplitudes must equal 2**s")
        return sv

    def __str__(self) -> str:
        body = " ".join(str(a) for a in self.amps.tolist())
        if self.s == 0:
            return f"({body})"
        scale = f"{1 << self.s}" if self.s < 64 else f"2^{self.s}"
        return f"({body})/√{scale}"

    def __repr__(self) -> str:
        return f"StateVector(m={self.m}, s={self.s}, amps={self.amps.tolist()})"


@dataclass(frozen=True)
class BasisKet:
    m: int
    bits: int
    sign: int = 1

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.m):
            raise ValueError(f"bits {self.bits} out of range for m={self.m}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def data(self) -> int:
        """Bits with the trailing ancilla dropped."""
        return self.bits >> 1

    def to_state(self) -> StateVector:
        return basis_state(self.bits, self.sign, self.m)

    def bitstring(self) -> str:
        return format(self.bits, f"0{self.m}b")

    def __str__(self) -> str:
        sign = "+" if self.sign > 0 else "-"
        return f"{sign}|{','.join(self.bitstring())}⟩"


def basis_state(bits: int, sign: int = 1, m: int = 1) -> StateVector:
    if not 0 <= bits < (1 << m):
        raise ValueError(f"bits {bits} out of range for m={m}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    amps = np.zeros(1 << m, dtype=np.int64)
    amps[bits] = sign
    return StateVector(m, amps, 0)


def fwht(amps: np.ndarray, m: int, stages: Iterable[int] | None = None) -> np.ndarray:
    """Unnormalized Walsh-Hadamard butterflies, returning a new array.

    Stage ``h`` pairs indices that differ in bit ``h``, i.e. qubit
    ``m - h`` counting from the most significant.  Passing a subset of
    stages is only meant for fault injection.
    """
    a = np.asarray(amps, dtype=np.int64)
    peak = max(int(a.max(initial=0)), -int(a.min(initial=0)))
    if peak << m > _INT64_MAX:
        raise AmplitudeOverflow(f"amplitudes up to {peak} would overflow after {m} stages")
    for h in range(m) if stages is None else stages:
        # one 2x2 butterfly per stage, broadcast over all index pairs
        a = np.matmul(_H2, a.reshape(-1, 2, 1 << h)).reshape(-1)
    return np.array(a, dtype=np.int64)


def reduce_scale(sv: StateVector) -> StateVector:
    """Divide out common factors of 2 while ``s`` allows it."""
    if sv.s < 2:
        return sv
    # the lowest set bit of the OR is the smallest power of two among amps
    bits = int(np.bitwise_or.reduce(sv.amps))
    if bits == 0:
        return sv
    k = min((bits & -bits).bit_length() - 1, sv.s // 2)
    if k == 0:
        return sv
    return StateVector(sv.m, sv.amps >> k, sv.s - 2 * k)


def hadamard_all(sv: StateVector) -> StateVector:
    """Hadamard on every qubit, then scale reduction."""
    return reduce_scale(StateVector(sv.m, fwht(sv.amps, sv.m), sv.s + sv.m))


def swap_pairs(amps: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Swap ``amps[2x]`` and ``amps[2x + 1]`` wherever ``rows[x]`` is set."""
    pairs = np.asarray(amps, dtype=np.int64).reshape(-1, 2)
    return np.where(np.asarray(rows, dtype=bool)[:, None], pairs[:, ::-1], pairs).reshape(-1)


def apply_oracle(sv: StateVector, tt: TruthTable) -> StateVector:
    """``U_f |x, k> = |x, k ^ f(x)>`` as a pair-swap permutation."""
    if sv.m != tt.n + 1:
        raise SizeMismatch(f"state has {sv.m} qubits, oracle needs {tt.n + 1}")
    return StateVector(sv.m, swap_pairs(sv.amps, tt.to_array()), sv.s)


def input_state(x: int, n: int, sign: int = 1) -> StateVector:
    """``|x, 1>`` on ``n`` data qubits plus the ancilla."""
    return basis_state((x << 1) | 1, sign, n + 1)


def sandwich(tt: TruthTable, x: int | BasisKet = 0, sign: int = 1) -> StateVector:
    """Hadamard layer, oracle, Hadamard layer applied to ``|x, 1>``.

    ``x`` may be a data-bit integer or a :class:`BasisKet` on ``n`` qubits.
    """
    if isinstance(x, BasisKet):
        if x.m != tt.n:
            raise SizeMismatch(f"input has {x.m} qubits, function has n={tt.n}")
        x, sign = x.bits, x.sign * sign
    if not 0 <= x < tt.size:
        raise ValueError(f"input {x} out of range for n={tt.n}")
    m = tt.n + 1
    a = np.zeros(1 << m, dtype=np.int64)
    a[(x << 1) | 1] = sign
    a = fwht(swap_pairs(fwht(a, m), tt.to_array()), m)
    return reduce_scale(StateVector(m, a, 2 * m))


def read_basis(sv: StateVector) -> BasisKet:
    nz = np.flatnonzero(sv.amps)
    if len(nz) != 1:
        raise NotBasis(f"{len(nz)} nonzero amplitudes")
    k = int(nz[0])
    a = int(sv.amps[k])
    if sv.s % 2 or abs(a) != 1 << (sv.s // 2):
        raise NotBasis(f"amplitude {a} at scale 2^{sv.s} is not unit")
    return BasisKet(sv.m, k, 1 if a > 0 else -1)


def measure(sv: StateVector, seed=None) -> int:
    """Sample an index with probability ``amps[k]**2 / 2**s`` (Born rule)."""
    weights = sv.amps.astype(object) ** 2 if sv.s > 60 else sv.amps * sv.amps
    cum = np.cumsum(weights)
    total = 1 << sv.s
    if int(cum[-1]) != total:
        raise ValueError("state is not normalized")
    rng = np.random.default_rng(seed)
    r = int(rng.integers(total)) if total <= _INT64_MAX else int(rng.random() * total)
    return int(np.searchsorted(cum, r, side="right"))
