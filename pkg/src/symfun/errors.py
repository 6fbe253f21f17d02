"""Exception hierarchy shared by every module."""


class SymfunError(Exception):
    """Base class for all library errors."""


class SizeMismatch(SymfunError, ValueError):
    """Operands disagree on qubit count or width."""


class SizeCapExceeded(SymfunError, ValueError):
    """Requested n is above the configured size cap."""


class NotInFamily(SymfunError, ValueError):
    """Truth table is neither symmetric nor anti-symmetric."""


class NotBasis(SymfunError):
    """State vector is not a signed basis state."""


class NotFactorable(SymfunError):
    """State vector is not a tensor product of Hadamard columns."""


class PromiseViolated(SymfunError):
    """Hidden oracle is not a member of the function family."""


class AmplitudeOverflow(SymfunError, OverflowError):
    """An integer amplitude would leave the signed 64-bit range."""
