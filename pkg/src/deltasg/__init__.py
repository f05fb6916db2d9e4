"""Delta sets of embedding-dimension-3 numerical semigroups.

The fast path reads the full distance set off a gcd-style remainder chain
seeded by two kernel-lattice distances; the oracle recomputes it by
exhaustive enumeration.  Every claimed distance has a constructive witness.
"""

from .betti import (
    BettiData,
    OneBettiForm,
    StructuralForm,
    ThreeBettiForm,
    TwoBettiForm,
    betti_elements,
    classify,
    nabla_graph_connected,
)
from .errors import (
    BudgetExceeded,
    DeltaSGError,
    ElementNotInSemigroup,
    GapInEuclid,
    GcdNotOne,
    InEuclidSet,
    InputError,
    InternalInvariantError,
    MoreThanTwoDistinctValues,
    NoMixedSignDecomposition,
    NonSymmetric,
    NotMinimal,
    NotMultipleOfGcd,
    NotNonSymmetric,
    NotThreeAtoms,
    OutOfRange,
    PreconditionViolated,
    StructureMismatch,
    UnsupportedInput,
    ZeroLength,
)
from .euclid import (
    BasisPair,
    Decomposition,
    EuclidSet,
    Witness,
    basement,
    basis_and_deltas,
    decompose,
    delta_set_fast,
    delta_set_nonsymmetric,
    euclid_set,
    intermediate_factorization,
    normalize_kernel_vector,
    witness,
)
from .oracle import (
    DEFAULT_BUDGET,
    OracleReport,
    default_bound,
    delta_set_bruteforce,
    estimated_cells,
    verify,
)
from .semigroup import (
    DeltaSet,
    Factorization,
    Generators,
    KernelVector,
    contains,
    delta_of_element,
    factorizations,
    frobenius_number,
    gaps,
    is_symmetric,
    length_set,
    validate_generators,
)

__version__ = "0.1.0"

__all__ = [
    "BasisPair",
    "BettiData",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "Decomposition",
    "DeltaSGError",
    "DeltaSet",
    "ElementNotInSemigroup",
    "EuclidSet",
    "Factorization",
    "GapInEuclid",
    "GcdNotOne",
    "Generators",
    "InEuclidSet",
    "InputError",
    "InternalInvariantError",
    "KernelVector",
    "MoreThanTwoDistinctValues",
    "NoMixedSignDecomposition",
    "NonSymmetric",
    "NotMinimal",
    "NotMultipleOfGcd",
    "NotNonSymmetric",
    "NotThreeAtoms",
    "OneBettiForm",
    "OracleReport",
    "OutOfRange",
    "PreconditionViolated",
    "StructuralForm",
    "StructureMismatch",
    "ThreeBettiForm",
    "TwoBettiForm",
    "UnsupportedInput",
    "Witness",
    "ZeroLength",
    "basement",
    "basis_and_deltas",
    "betti_elements",
    "classify",
    "contains",
    "decompose",
    "default_bound",
    "delta_of_element",
    "delta_set_bruteforce",
    "delta_set_fast",
    "delta_set_nonsymmetric",
    "estimated_cells",
    "euclid_set",
    "factorizations",
    "frobenius_number",
    "gaps",
    "intermediate_factorization",
    "is_symmetric",
    "length_set",
    "nabla_graph_connected",
    "normalize_kernel_vector",
    "validate_generators",
    "verify",
    "witness",
]
