"""quadcert: exact finite-field constructions and rank certificates on the
power-sum quadric, with a reproducible JSON certificate CLI."""

from .errors import (
    QuadcertError,
    EvenCharacteristicError,
    NotPrimeError,
    DimensionMismatchError,
    SizeMismatchError,
    InvalidProfileError,
    NotOnQuadricError,
    OnDiscriminantError,
    NoPointFoundError,
)
from .gf import FieldCtx, FieldElement, field_make
from .linalg import Matrix, kernel_basis, matvec, rank, restricted_rank, rref
from .profile import BinaryProfile, HypothesisDecision, binary_profile, check_hypotheses
from .trace_system import (
    BlockSolution,
    evaluate_system,
    lift_block_solution,
    solve_block_system,
    weights_mod_p,
)
from .quadric import (
    AmbientPoint,
    complete_quadric_pair,
    in_discriminant,
    in_small_diagonal,
    on_quadric,
    power_sums,
    sample_quadric_point,
    smoothness_matrix,
    smoothness_rank,
    tangent_basis,
)
from .actions import (
    AffineMap,
    InvarianceReport,
    Permutation,
    StabilizerResult,
    affine_act,
    affine_compose,
    affine_stabilizer,
    compose,
    invariance_report,
    permute,
    random_affine,
    random_permutation,
)
from .compression import (
    CompressionImage,
    RankCertificate,
    affine_invariance_check,
    compress,
    compression_jacobian,
    faithfulness_witness,
    ordered_triples,
    permute_image,
    rank_certificate,
)
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "QuadcertError",
    "EvenCharacteristicError",
    "NotPrimeError",
    "DimensionMismatchError",
    "SizeMismatchError",
    "InvalidProfileError",
    "NotOnQuadricError",
    "OnDiscriminantError",
    "NoPointFoundError",
    "FieldCtx",
    "FieldElement",
    "field_make",
    "Matrix",
    "kernel_basis",
    "matvec",
    "rank",
    "restricted_rank",
    "rref",
    "BinaryProfile",
    "HypothesisDecision",
    "binary_profile",
    "check_hypotheses",
    "BlockSolution",
    "evaluate_system",
    "lift_block_solution",
    "solve_block_system",
    "weights_mod_p",
    "AmbientPoint",
    "complete_quadric_pair",
    "in_discriminant",
    "in_small_diagonal",
    "on_quadric",
    "power_sums",
    "sample_quadric_point",
    "smoothness_matrix",
    "smoothness_rank",
    "tangent_basis",
    "AffineMap",
    "InvarianceReport",
    "Permutation",
    "StabilizerResult",
    "affine_act",
    "affine_compose",
    "affine_stabilizer",
    "compose",
    "invariance_report",
    "permute",
    "random_affine",
    "random_permutation",
    "CompressionImage",
    "RankCertificate",
    "affine_invariance_check",
    "compress",
    "compression_jacobian",
    "faithfulness_witness",
    "ordered_triples",
    "permute_image",
    "rank_certificate",
    "SplitMix64",
    "__version__",
]
