"""Integer partitions, divisor traces and jump networks."""

from .counting import CountTable, p, script_p
from .divisors import (
    DistinctPartition,
    SignedTraceTerm,
    build_divisor_network,
    enumerate_descending_jump_set,
    enumerate_distinct_partitions,
    invariant_jump,
    trace,
)
from .enumeration import build_partition_network, enumerate_partitions
from .evector import (
    EVector,
    ShiftMatrixSpec,
    apply_shift_matrix,
    divisors_from_evector,
    e_vector,
    e_vector_closed_form,
    triangular,
)
from .exceptions import (
    DimensionMismatch,
    InvalidInvariantJump,
    InvalidJump,
    LimitExceeded,
    PartnetError,
)
from .jumps import Partition, is_valid_jump, jump, jump_set_order1_size, predecessor
from .network import Edge, PartitionNetwork
from .sigma import SigmaTerm, build_sigma_network, inner_sum, sigma1, sigma_terms

__version__ = "0.1.0"
