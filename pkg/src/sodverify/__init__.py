"""Exact verification of semiorthogonal decompositions of twisted grassmannians and flag varieties."""

from .bbw import (
    CohomologyResult,
    HomogeneousBundleWeight,
    PushforwardReport,
    bbw,
    line_bundle_oracle,
    pushforward_hom,
)
from .decomposition import (
    Block,
    SemiorthReport,
    blocks,
    diagonal_resolution_summary,
    k_rank_audit,
    verify_semiorthogonality,
)
from .flags import FlagBlock, flag_blocks, flag_rank_audit, relative_semiorth_check, verify_flag
from .koszul import KoszulTerm, cauchy_dimension_check, koszul_terms, twist_class
from .lr import WeightMultiset, hom_decompose, lr_coefficient, tensor_decompose
from .partitions import Partition, conjugate, enumerate_box, lex_compare, weight
from .weights import GLWeight, det_shift, dim, dual

__version__ = "0.1.0"
