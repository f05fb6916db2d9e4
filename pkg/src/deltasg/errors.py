"""Exception hierarchy for deltasg.

``InputError`` subclasses signal bad user input (CLI exit code 2).
``UnsupportedInput`` signals a structurally valid semigroup that a given
operation cannot handle (CLI exit code 3).
"""


class DeltaSGError(Exception):
    """Base class for all deltasg errors."""


class InputError(DeltaSGError):
    """Invalid argument; maps to CLI exit code 2."""


class NotThreeAtoms(InputError):
    """The input is not three distinct positive integers."""


class GcdNotOne(InputError):
    """gcd of the three generators is not 1."""


class NotMinimal(InputError):
    """One generator is representable by the other two."""


class ElementNotInSemigroup(InputError):
    """The element has no factorization in the semigroup."""


class OutOfRange(InputError):
    """A value lies outside the range an operation is defined on."""


class NotMultipleOfGcd(InputError):
    """The value is not a multiple of gcd(delta1, delta2)."""


class PreconditionViolated(InputError):
    """An operation precondition does not hold for the given arguments."""


class UnsupportedInput(DeltaSGError):
    """Valid semigroup, but the requested method does not apply to it."""


class NonSymmetric(UnsupportedInput):
    """The semigroup is not symmetric (three Betti elements)."""


class NotNonSymmetric(UnsupportedInput):
    """The semigroup is symmetric; the non-symmetric path does not apply."""


class GapInEuclid(DeltaSGError):
    """The length gap is a legitimate distance; no intermediate length is
    guaranteed to exist."""


class InEuclidSet(DeltaSGError):
    """The value already belongs to the Euclid set; it has no basement."""


class ZeroLength(DeltaSGError):
    """The kernel vector has length zero and is a multiple of the
    zero-length generator of the kernel lattice."""


class NoMixedSignDecomposition(DeltaSGError):
    """Neither canonical decomposition of the distance has coefficients of
    mixed sign."""


class StructureMismatch(DeltaSGError):
    """Internal inconsistency between the Betti count and the recovered
    structural parameters; indicates a bug or invalid input."""


class MoreThanTwoDistinctValues(DeltaSGError):
    """Betti elements of a non-symmetric semigroup produced more than two
    distinct distances, contradicting the expected structure."""


class BudgetExceeded(DeltaSGError):
    """The brute-force enumeration would exceed the configured work budget."""


class InternalInvariantError(DeltaSGError):
    """A runtime self-check failed; indicates a bug."""
