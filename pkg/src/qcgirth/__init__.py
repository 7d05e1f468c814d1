"""Quasi-cyclic LDPC codes built from weight-1 and weight-2 circulants,
with girth conditions, exact and randomized parameter search, and a
sum-product FER harness."""

from .blockmatrix import BlockMatrix, DecompositionMinor, assemble, expand_block
from .catalog import (CycleConfiguration, QcConfiguration, enumerate_configurations, feasible_for_type,
                      qc_specialize, weights_vectors)
from .circulant import (CirculantSpec, circulant_girth, expand, gcd_fullrank_check, separation,
                        shift_equivalent)
from .conditions import (ConditionReport, Violation, certify_girth_at_least, check_4cycles, check_6cycles,
                         check_8cycles, fan_condition)
from .decode import (BPDecoder, DecoderConfig, FerPoint, SimulationConfig, awgn_channel, bp_decode,
                     fer_error_bars, simulate_fer)
from .families import (FAMILIES, BresnanParams, DeltaConditionError, Rate23Params, Reg24Params, Reg36Params,
                       bresnan_check, build_bresnan, build_rate23, build_reg24, build_reg36, rate23_check,
                       reg24_check, reg36_check, valid_deltas)
from .io import (AlistConsistencyError, AlistDocument, AlistError, AlistParseError, AlistWeightError,
                 export_alist, import_alist)
from .oracle import (TannerGraph, count_cycles_upto, enumerate_cycles, girth_bfs, girth_upper_bound,
                     is_2s_cycle, is_linked)
from .search import SearchExhausted, bresnan_search, random_search
from .sparse import SparseBinaryMatrix, gf2_rank, row_col_weight_profile

__version__ = "0.1.0"
