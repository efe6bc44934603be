"""Finite-window workbench for shift-invariant colourings and adjacent sums."""

from irl.bits import (
    MAX_VALUE,
    WORD_BITS,
    bit_support,
    block,
    highest_bit,
    is_apart,
    is_separated,
    lowest_bit,
)
from irl.colouring import (
    Colouring,
    DifferenceColouring,
    colouring_from_json,
    colouring_to_json,
    enumerate_colourings,
    from_differences,
    invariance_witness,
    is_shift_invariant,
    sample_colourings,
    sets_domain,
    to_differences,
    vectors_domain,
)
from irl.errors import (
    BudgetExceededError,
    FormatError,
    IrlError,
    NotInvariantError,
    OverflowLimitError,
    PreconditionError,
    WindowExhaustedError,
)
from irl.oracle import (
    EnumerationOracle,
    approx,
    decode,
    decode_colour,
    encode_colour,
    lower_bound_colouring,
    oracle_from_json,
    oracle_to_json,
    pair_colour,
    synthesize_solution,
)
from irl.reduce import (
    KINDS,
    ReductionReport,
    backward_transform,
    bit_window,
    forward_transform,
    verify_reduction,
)
from irl.search import (
    PRINCIPLES,
    FiniteNumberQuery,
    FiniteNumberResult,
    find_afs_mono,
    find_mono_subset,
    finite_number,
    sweep_finite_numbers,
)
from irl.sums import (
    adjacent_sums,
    adjacent_tuples,
    differences,
    gap_increasing,
    normalize,
    partial_sums,
)

__version__ = "0.1.0"
