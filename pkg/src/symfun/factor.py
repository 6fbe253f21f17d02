"""Decompose a Hadamard-product state into qubit values by recursive halving."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotFactorable
from .statesim import StateVector


@dataclass(frozen=True)
class FactorResult:
    n: int
    y: int
    global_sign: int

    def bitstring(self) -> str:
        return format(self.y, f"0{self.n}b")

    def to_json(self) -> dict:
        return {"y": self.bitstring(), "sign": "+1" if self.global_sign > 0 else "-1"}


def hadamard_product(y: int, n: int, sign: int = 1) -> StateVector:
    """``sign * H|y1> (x) ... (x) H|yn>`` with ``s = n``, built by Kronecker products."""
    amps = np.array([sign], dtype=np.int64)
    for i in range(n):
        bit = y >> (n - 1 - i) & 1
        amps = np.kron(amps, np.array([1, -1 if bit else 1], dtype=np.int64))
    return StateVector(n, amps, n)


def factor_state(sv: StateVector) -> FactorResult:
    """Split the state in halves, outermost split first.

    Equal halves give a 0 for that qubit, negated halves give a 1.  The
    outermost split is the most significant qubit.  Raises
    :class:`NotFactorable` for anything that is not ``+-`` a tensor product of
    Hadamard columns.
    """
    if sv.s != sv.m:
        raise ValueError(f"factor_state needs s == m, got s={sv.s}, m={sv.m}")
    a = sv.amps
    if not np.all(np.abs(a) == 1):
        raise NotFactorable("amplitudes are not all +-1")
    y = 0
    while len(a) > 1:
        half = len(a) >> 1
        first, second = a[:half], a[half:]
        if np.array_equal(second, first):
            bit = 0
        elif np.array_equal(second, -first):
            bit = 1
        else:
            raise NotFactorable(f"halves of length {half} are neither equal nor opposite")
        y = (y << 1) | bit
        a = first
    return FactorResult(sv.m, y, int(a[0]))
