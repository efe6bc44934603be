"""Stage-monotone enumeration oracles and the membership-coding pair colouring.

An oracle is a finite list of (element, stage) events; the approximation
at stage s contains every element enumerated at a stage <= s, so it grows
monotonically and settles for good once the last event has fired.  These
finite objects stand in for a c.e. set given by its enumeration; nothing
here decides anything non-computable.

The pair colouring built from an oracle assigns an ordered pair (x, y) of
positive values two bits: i = 1 iff the lowest 1-bit position of x sits
strictly below that of y, and j = 1 iff the approximations restricted
below lowest_bit(x), taken at stages highest_bit(x) and highest_bit(y),
agree.  A sequence whose adjacent pair sums are all coloured (1, 1)
carries settled approximations below its lowest bits; ``decode`` performs
that membership readout, and ``synthesize_solution`` builds such a
sequence directly from the settle stage.
"""

from dataclasses import dataclass

from irl.bits import WORD_BITS, highest_bit, lowest_bit
from irl.colouring import Colouring
from irl.errors import (
    FormatError,
    OverflowLimitError,
    PreconditionError,
    WindowExhaustedError,
)


def encode_colour(i: int, j: int) -> int:
    """Fixed encoding of the 2x2 colour (i, j) into the 4-colour palette."""
    return 2 * i + j


def decode_colour(colour: int) -> tuple:
    return (colour >> 1) & 1, colour & 1


@dataclass(frozen=True)
class EnumerationOracle:
    """A finite, stage-monotone enumeration of a set of naturals."""

    events: tuple

    def __post_init__(self):
        seen = set()
        for event in self.events:
            if not isinstance(event, tuple) or len(event) != 2:
                raise FormatError(f"events must be (element, stage) pairs, got {event!r}")
            element, stage = event
            for value in (element, stage):
                if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                    raise FormatError(f"elements and stages must be naturals, got {event!r}")
            if element in seen:
                raise FormatError(f"element {element} enumerated twice")
            seen.add(element)

    @property
    def settle_stage(self) -> int:
        """The stage after which the approximation never changes again."""
        return max((stage for _, stage in self.events), default=0)

    @property
    def final_set(self) -> frozenset:
        return frozenset(element for element, _ in self.events)


def approx(oracle: EnumerationOracle, bound: int, stage: int) -> frozenset:
    """Elements below ``bound`` enumerated at stages <= ``stage``."""
    return frozenset(
        element for element, s in oracle.events if element < bound and s <= stage
    )


def pair_colour(oracle: EnumerationOracle, x: int, y: int) -> int:
    """Colour of the ordered pair (x, y) under the membership-coding colouring."""
    lx = lowest_bit(x)
    i = 1 if lx < lowest_bit(y) else 0
    j = 1 if approx(oracle, lx, highest_bit(x)) == approx(oracle, lx, highest_bit(y)) else 0
    return encode_colour(i, j)


def lower_bound_colouring(oracle: EnumerationOracle, window: int) -> Colouring:
    """The membership-coding colouring materialized on ordered pairs over [1, window]."""
    if not isinstance(window, int) or isinstance(window, bool) or window < 1:
        raise PreconditionError(f"window must be an integer >= 1, got {window!r}")
    low = [0] * (window + 1)
    high = [0] * (window + 1)
    for v in range(1, window + 1):
        low[v] = lowest_bit(v)
        high[v] = highest_bit(v)
    approx_cache = {}

    def cached(bound, stage):
        key = (bound, stage)
        if key not in approx_cache:
            approx_cache[key] = approx(oracle, bound, stage)
        return approx_cache[key]

    table = {}
    for x in range(1, window + 1):
        base = cached(low[x], high[x])
        for y in range(1, window + 1):
            i = 1 if low[x] < low[y] else 0
            j = 1 if base == cached(low[x], high[y]) else 0
            table[(x, y)] = encode_colour(i, j)
    return Colouring(dim=2, window=window, palette=4, mode="vectors", table=table)


def synthesize_solution(oracle: EnumerationOracle, m: int) -> tuple:
    """A length-m sequence of two-bit blocks starting above the settle stage.

    Entry n is 2^(S+2n) + 2^(S+2n+1) with S the settle stage.  The output
    is apart, its lowest bits strictly increase, and every adjacent pair
    sum is coloured (1, 1): all the highest bits involved are at least S,
    so the compared approximations are already settled.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise PreconditionError(f"length must be an integer >= 1, got {m!r}")
    start = oracle.settle_stage
    if start + 2 * m - 1 >= WORD_BITS:
        raise OverflowLimitError(
            f"synthesized entry would need bit {start + 2 * m - 1}, above the {WORD_BITS}-bit limit"
        )
    return tuple(3 << (start + 2 * n) for n in range(m))


def decode(seq, oracle: EnumerationOracle, m: int) -> bool:
    """Membership readout for ``m`` from the first entry whose lowest bit exceeds it.

    Correct whenever the consulted entry's highest bit is at least the
    settle stage, as it is for synthesized sequences and for any sequence
    whose adjacent pair sums are monochromatic in (1, 1) with settled
    stage values.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise PreconditionError(f"query must be a natural, got {m!r}")
    entries = tuple(seq)
    if not entries:
        raise PreconditionError("decode requires a nonempty sequence")
    for x in entries:
        if lowest_bit(x) > m:
            return m in approx(oracle, lowest_bit(x), highest_bit(x))
    raise WindowExhaustedError(
        f"window exhausted: no entry has its lowest bit above {m}"
    )


def oracle_to_json(oracle: EnumerationOracle) -> dict:
    return {"events": [[element, stage] for element, stage in oracle.events]}


def oracle_from_json(data) -> EnumerationOracle:
    if not isinstance(data, dict) or "events" not in data:
        raise FormatError("oracle payload must be an object with an 'events' list")
    events = data["events"]
    if not isinstance(events, list):
        raise FormatError("'events' must be a list of [element, stage] pairs")
    parsed = []
    for item in events:
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError(f"malformed event: {item!r}")
        parsed.append((item[0], item[1]))
    return EnumerationOracle(events=tuple(parsed))
