"""Exercise the full pipeline against flip-network predictions.

Every family member sandwiched on every basis input must give the predicted
signed basis state.  A fault can be injected into the simulated hardware to
show that the check catches it:

``drop-stage:K``  skip butterfly stage ``K`` in both Hadamard layers
``skip-swap:X``   the oracle never swaps the pair for truth-table row ``X``
``flip-sign:K``   negate amplitude ``K`` right after the oracle
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .boolfn import Family, TruthTable, check_size
from .errors import NotBasis
from .statesim import StateVector, fwht, input_state, read_basis, reduce_scale, swap_pairs
from .synth import synthesize

FAULT_KINDS = ("drop-stage", "skip-swap", "flip-sign")
DEFAULT_MAX_CASES = 1 << 16


@dataclass(frozen=True)
class Fault:
    kind: str
    where: int

    @classmethod
    def parse(cls, text: str) -> Fault:
        kind, _, arg = text.partition(":")
        if kind not in FAULT_KINDS or not arg.isdigit():
            raise ValueError(f"bad fault {text!r}; expected one of {', '.join(k + ':N' for k in FAULT_KINDS)}")
        return cls(kind, int(arg))

    def validate(self, n: int) -> None:
        limit = {"drop-stage": n + 1, "skip-swap": 1 << n, "flip-sign": 1 << (n + 1)}[self.kind]
        if self.where >= limit:
            raise ValueError(f"{self} out of range for n={n} (limit {limit})")

    def __str__(self) -> str:
        return f"{self.kind}:{self.where}"


@dataclass(frozen=True)
class Failure:
    function: str
    x: int
    reason: str


@dataclass
class SelfTestReport:
    n: int
    fault: Fault | None
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.cases - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        tag = f" with fault {self.fault}" if self.fault else ""
        status = "PASS" if self.ok else "FAIL"
        return f"selftest n={self.n}{tag}: {self.passed}/{self.cases} cases passed [{status}]"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "fault": str(self.fault) if self.fault else None,
            "cases": self.cases,
            "passed": self.passed,
            "failures": [f.__dict__ for f in self.failures[:20]],
        }


def run_case(tt: TruthTable, x: int, fault: Fault | None = None):
    """Simulate one sandwich, with the fault applied, and read it out."""
    m = tt.n + 1
    stages = list(range(m))
    if fault and fault.kind == "drop-stage":
        stages.remove(fault.where)
    a = fwht(input_state(x, tt.n).amps, m, stages)
    rows = tt.to_array().copy()
    if fault and fault.kind == "skip-swap":
        rows[fault.where] = 0
    a = swap_pairs(a, rows)
    if fault and fault.kind == "flip-sign":
        a[fault.where] = -a[fault.where]
    a = fwht(a, m, stages)
    return read_basis(reduce_scale(StateVector(m, a, 2 * m)))


def selftest(
    n: int,
    fault: Fault | str | None = None,
    *,
    max_cases: int = DEFAULT_MAX_CASES,
    seed: int = 0,
    max_n: int | None = None,
) -> SelfTestReport:
    check_size(n, max_n)
    if isinstance(fault, str):
        fault = Fault.parse(fault)
    if fault:
        fault.validate(n)
    family = Family(n)
    nfun, nin = len(family), 1 << n
    if nfun * nin <= max_cases:
        pairs = ((f, x) for f in range(nfun) for x in range(nin))
    else:
        rng = np.random.default_rng(seed)
        picks = sorted(zip(rng.integers(nfun, size=max_cases).tolist(), rng.integers(nin, size=max_cases).tolist()))
        pairs = iter(picks)

    report = SelfTestReport(n, fault)
    for f, x in pairs:
        af = family.affine(f)
        tt = family[f]
        expected = synthesize(af).apply(x)
        report.cases += 1
        label = tt.hex() if n >= 2 else tt.bin()
        try:
            got = run_case(tt, x, fault)
        except NotBasis as exc:
            report.failures.append(Failure(label, x, f"not a basis state: {exc}"))
            continue
        if got != expected:
            report.failures.append(Failure(label, x, f"expected {expected}, got {got}"))
    return report
