"""Order-preserving pattern matching on integer sequences and matrices."""

from .core import (
    Counter,
    PrevNext,
    is_order_isomorphic_bruteforce,
    order_isomorphic,
    prev_next,
    verify_step,
    z_array,
    z_array_against,
)
from .match1d import (
    NO_WITNESS,
    Pattern1D,
    duel,
    dueling_stage,
    kmp_match_1d,
    match_1d,
    naive_match_1d,
    order_border_table,
    sweeping_stage,
    witness_table,
)
from .match2d import (
    Matrix,
    Pattern2D,
    WitnessTable2D,
    dueling_stage_2d,
    match_2d,
    match_2d_reduction,
    naive_match_2d,
    serialize,
    strip_z,
    sweeping_stage_2d,
    witness_at,
    witness_table_2d,
)

__version__ = "0.1.0"
