"""Identifying a hidden family member, quantum and classical.

Two oracle models are kept apart on purpose.  :class:`HiddenOracle` maps a
whole state vector through ``U_f`` and counts superposition queries;
:class:`BitOracle` evaluates ``f`` on one classical input and counts those.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .boolfn import AffineForm, TruthTable, classify, Classification, parity, to_affine
from .errors import NotBasis, NotInFamily, PromiseViolated, SizeMismatch
from .statesim import StateVector, apply_oracle, hadamard_all, input_state, measure, read_basis


class HiddenOracle:
    """A ``U_f`` black box on ``n + 1`` qubits whose truth table is not exposed."""

    def __init__(self, n: int, transform: Callable[[StateVector], StateVector]):
        self.n = n
        self._transform = transform
        self.queries = 0

    @classmethod
    def hiding(cls, tt: TruthTable) -> HiddenOracle:
        return cls(tt.n, lambda sv: apply_oracle(sv, tt))

    def __call__(self, sv: StateVector) -> StateVector:
        if sv.m != self.n + 1:
            raise SizeMismatch(f"oracle acts on {self.n + 1} qubits, got {sv.m}")
        self.queries += 1
        return self._transform(sv)

    def __repr__(self) -> str:
        return f"HiddenOracle(n={self.n}, queries={self.queries})"


class BitOracle:
    """Classical ``x -> f(x)`` evaluator with a query counter."""

    def __init__(self, n: int, f: Callable[[int], int]):
        self.n = n
        self._f = f
        self.queries = 0

    @classmethod
    def hiding(cls, tt: TruthTable) -> BitOracle:
        return cls(tt.n, tt.__getitem__)

    def __call__(self, x: int) -> int:
        self.queries += 1
        return self._f(x) & 1


@dataclass(frozen=True)
class IdResult:
    n: int
    mask: int
    constant: int | None  # None: sign not observable
    query_count: int

    def affine(self) -> AffineForm:
        if self.constant is None:
            raise ValueError("constant is unknown")
        return AffineForm(self.n, self.mask, self.constant)

    def to_json(self) -> dict:
        return {
            "mask": format(self.mask, f"0{self.n}b"),
            "constant": "unknown" if self.constant is None else self.constant,
            "queries": self.query_count,
        }


def _run_pipeline(oracle: HiddenOracle) -> StateVector:
    sv = hadamard_all(input_state(0, oracle.n))
    return hadamard_all(oracle(sv))


def identify_amplitude(oracle: HiddenOracle) -> IdResult:
    """One query from ``|0...0, 1>``; the output ket is ``(-1)^c |mask, 1>``."""
    before = oracle.queries
    out = _run_pipeline(oracle)
    try:
        ket = read_basis(out)
    except NotBasis as exc:
        raise PromiseViolated(f"oracle output is not a basis state: {exc}") from exc
    if not ket.bits & 1:
        raise PromiseViolated("ancilla did not return to |1>")
    return IdResult(oracle.n, ket.data, 0 if ket.sign > 0 else 1, oracle.queries - before)


def identify_measured(oracle: HiddenOracle, seed=None) -> IdResult:
    """Same pipeline ending in a measurement, so the sign is lost."""
    before = oracle.queries
    k = measure(_run_pipeline(oracle), seed)
    return IdResult(oracle.n, k >> 1, None, oracle.queries - before)


def classical_identify_naive(bit_oracle: BitOracle, n: int) -> tuple[TruthTable, int]:
    before = bit_oracle.queries
    tt = TruthTable.from_function(n, bit_oracle)
    return tt, bit_oracle.queries - before


def classical_identify_affine(bit_oracle: BitOracle, n: int) -> tuple[AffineForm, int]:
    """``n + 1`` queries: ``f(0)`` for the constant, then each unit input."""
    before = bit_oracle.queries
    c = bit_oracle(0)
    mask = 0
    for i in range(n):
        mask = (mask << 1) | (bit_oracle(1 << (n - 1 - i)) ^ c)
    return AffineForm(n, mask, c), bit_oracle.queries - before


def xi(x: int | str, y: int | str, n: int | None = None) -> int:
    """Bitwise ``x ^ y``; bit strings must have equal width."""
    if isinstance(x, str) or isinstance(y, str):
        if not (isinstance(x, str) and isinstance(y, str)) or len(x) != len(y):
            raise SizeMismatch(f"widths differ: {x!r}, {y!r}")
        return int(x, 2) ^ int(y, 2)
    if n is not None and (x >> n or y >> n):
        raise SizeMismatch(f"values do not fit in {n} bits")
    return x ^ y


def shift_table(tt: TruthTable, shift: int) -> TruthTable:
    """``x -> f(x ^ shift)``."""
    return TruthTable.from_function(tt.n, lambda x: tt[x ^ shift])


def check_simon_invariance(tt: TruthTable, shift: int) -> bool:
    """True iff ``f(x ^ shift) == f(x)`` for every ``x``.

    Computed both by direct table comparison and as ``parity(mask & shift)
    == 0``; the two must agree.
    """
    if classify(tt) is Classification.NEITHER:
        raise NotInFamily("invariance check needs a family member")
    if not 0 <= shift < tt.size:
        raise SizeMismatch(f"shift {shift} does not fit in {tt.n} bits")
    direct = shift_table(tt, shift) == tt
    algebraic = parity(to_affine(tt).mask & shift) == 0
    if direct != algebraic:  # pragma: no cover - would mean a broken family
        raise AssertionError("table and affine invariance checks disagree")
    return direct


def query_counts(n: int) -> dict[str, int]:
    return {"quantum": 1, "classical-affine": n + 1, "classical-naive": 1 << n}
