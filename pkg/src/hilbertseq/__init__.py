"""Exact checks on Hilbert-function-like integer sequences: Macaulay bounds,
SI and Gorenstein sequences, level sequences and log-concavity.
"""

from .macaulay import (
    MacaulayExpansion,
    binom,
    bound,
    defect,
    expand,
    first_o_failure,
    is_max_growth,
    is_o_sequence,
    min_b,
    poly_dim,
)
from .seqcore import (
    HilbertSeq,
    LogConcavityReport,
    canonical,
    f_vector,
    first_difference,
    is_log_concave,
    is_symmetric,
    is_unimodal,
    log_concavity_report,
    parse_sequence,
    seq_length,
    sum_function,
)
from .gorenstein import (
    EnumerationAbandoned,
    VerificationReport,
    enumerate_si_sequences,
    is_cod2_artin_hf,
    is_cod3_gorenstein,
    is_si_sequence,
    si_failure,
    verify_logconcavity_class,
)
from .family import (
    FamilyParams,
    build,
    build_extended,
    lengthen_with_tail,
    max_extension,
    predicted_defect,
    scan_params,
    validate_params,
)
from .level import (
    LevelProfile,
    compressed_level,
    is_admissible_decreasing_type,
    is_cod2_level,
    level_profile,
)

__version__ = "0.1.0"
