"""Schur multipliers of finite abelian groups and exhaustive checks of
structure results for abelian p-groups."""

from .abelian import (
    GroupInvariants,
    InvariantFactorGroup,
    PPartition,
    frattini_partition,
    instantiate,
    invariants_of,
    normalize_to_invariant_factors,
    p_group_partition,
    validate_partition,
)
from .classifier import (
    ClassificationParams,
    StructureTemplate,
    classify,
    corollary25_match,
    corollary25_templates,
    exponent_bounds,
    theorem23_predict,
    theorem24_params,
    theorem24_predict,
)
from .errors import (
    DegenerateCaseError,
    HypothesisViolation,
    InconsistencyError,
    InvariantFactorError,
    LemmaPreconditionError,
    OutOfTabulatedRange,
    PartitionError,
    SchurMultError,
)
from .multiplier import (
    MultiplierResult,
    exterior_square_oracle,
    iterated_multiplier,
    schur_multiplier,
    schur_multiplier_general,
    t_invariant,
)
from .verifier import CLAIMS, VerificationReport, census, enumerate_partitions, verify_claim

__version__ = "0.1.0"
