"""Exception types shared across the package.

Names follow the error vocabulary of the public contracts; the CLI maps
them onto exit codes (1 input, 2 cross-check, 3 numeric).
"""


class CommdegError(Exception):
    """Base class for all package errors."""


class NotLatin(CommdegError):
    """A multiplication table row or column is not a permutation."""


class NonAssociative(CommdegError):
    """Associativity failed on some triple of a candidate table."""


class OrderCapExceeded(CommdegError):
    """A closure or quadratic counting pass would exceed the order cap."""


class InvalidAction(CommdegError):
    """An action table is not by automorphisms / not a homomorphism."""


class NotNormal(CommdegError):
    """Quotient requested by a subgroup that is not normal."""


class NotPrime(CommdegError):
    """A parameter required to be prime is not."""


class AntitoneViolation(CommdegError):
    """A tower degree sequence increased; signals a construction bug."""


class IncompatibleSelector(CommdegError):
    """A per-level subgroup selector is not compatible with the bonds."""


class IncompatiblePath(CommdegError):
    """An element path does not follow the tower bonds."""


class UnknownPreset(CommdegError):
    """No preset registered under the requested name."""


class PresetMismatch(CommdegError):
    """Two sampled elements come from different presets."""


class NonConvergence(CommdegError):
    """The eigenvalue solver failed to converge."""


class ModulusViolation(CommdegError):
    """An adjoint spectrum is not on the unit circle; corrupt certificate."""


class CrossCheckMismatch(CommdegError):
    """Two supposedly equal exact routes disagreed."""
