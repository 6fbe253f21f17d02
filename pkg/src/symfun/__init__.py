"""Symmetric and anti-symmetric quantum functions: construction, exact
simulation, factoring, single-query identification and flip networks."""

from .boolfn import (
    AffineForm,
    Classification,
    Family,
    TruthTable,
    capacity,
    classify,
    complement,
    construct_family,
    format_table,
    from_affine,
    generation_order,
    mirror,
    to_affine,
    xor,
)
from .errors import (
    AmplitudeOverflow,
    NotBasis,
    NotFactorable,
    NotInFamily,
    PromiseViolated,
    SizeCapExceeded,
    SizeMismatch,
    SymfunError,
)
from .factor import FactorResult, factor_state, hadamard_product
from .identify import (
    BitOracle,
    HiddenOracle,
    IdResult,
    check_simon_invariance,
    classical_identify_affine,
    classical_identify_naive,
    identify_amplitude,
    identify_measured,
    xi,
)
from .selftest import Fault, selftest
from .statesim import (
    BasisKet,
    StateVector,
    apply_oracle,
    basis_state,
    hadamard_all,
    measure,
    read_basis,
    sandwich,
)
from .synth import (
    FlipNetwork,
    FunctionId,
    check_table5_structure,
    solve_function,
    solve_output,
    synthesize,
    table5,
)

__version__ = "0.1.0"
