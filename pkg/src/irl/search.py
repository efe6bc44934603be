"""Brute-force monochromatic witness search and finite analogue numbers.

Both searches extend increasing prefixes depth-first, always trying
smaller next elements first, so the first completed candidate is the
lexicographically least witness.  Pruning only removes prefixes that
cannot complete (colour clash, missing tuple, window overrun, or a failed
apartness/separation constraint), which never changes the answer.

``finite_number`` scans window sizes upward and reports the least number
of points N such that every admissible colouring of an N-point window
admits the required witness.  Sets-mode principles use the points
{0, ..., N-1}; vectors-mode principles use {1, ..., N}.
"""

import csv
import json
from dataclasses import dataclass
from itertools import combinations

from irl.bits import highest_bit, lowest_bit
from irl.colouring import Colouring, colouring_to_json, enumerate_colourings
from irl.errors import PreconditionError

PRINCIPLES = ("RT", "ZRT", "SEPZRT", "AHT", "APAHT")
_SETS_PRINCIPLES = ("RT", "ZRT", "SEPZRT")


def find_mono_subset(c: Colouring, m: int, separated: bool = False):
    """Lexicographically least m-subset of the window whose dim-tuples share a colour.

    Returns the subset as an increasing tuple, or None when the window
    holds no witness.  With ``separated=True`` the subset's successive
    differences must additionally be apart.
    """
    if c.mode != "sets":
        raise PreconditionError("find_mono_subset applies to sets-mode colourings")
    if not isinstance(m, int) or isinstance(m, bool) or m < c.dim:
        raise PreconditionError(f"subset size must be an integer >= dim {c.dim}, got {m!r}")
    dim = c.dim
    table = c.table
    prefix = []

    def extend(colour, start):
        if len(prefix) == m:
            return tuple(prefix)
        need = m - len(prefix)
        for x in range(start, c.window + 2 - need):
            if separated and len(prefix) >= 2:
                gap_prev = prefix[-1] - prefix[-2]
                if not highest_bit(gap_prev) < lowest_bit(x - prefix[-1]):
                    continue
            got_colour = colour
            ok = True
            if len(prefix) + 1 >= dim:
                for rest in combinations(prefix, dim - 1):
                    got = table.get(rest + (x,))
                    if got is None or (got_colour is not None and got != got_colour):
                        ok = False
                        break
                    if got_colour is None:
                        got_colour = got
            if ok:
                prefix.append(x)
                found = extend(got_colour, x + 1)
                if found is not None:
                    return found
                prefix.pop()
        return None

    return extend(None, 0)


def find_afs_mono(c: Colouring, m: int, window=None, apart: bool = False, colour=None):
    """Lexicographically least increasing length-m sequence with monochromatic adjacent tuples.

    Candidates are increasing sequences over [1, window] all of whose
    adjacent sums stay within the window (equivalently, total <= window).
    ``apart=True`` restricts to apartness-satisfying sequences; a fixed
    ``colour`` restricts the monochromatic colour sought.  Returns None
    when no candidate survives.
    """
    if c.mode != "vectors":
        raise PreconditionError("find_afs_mono applies to vectors-mode colourings")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise PreconditionError(f"sequence length must be an integer >= 1, got {m!r}")
    limit = c.window if window is None else window
    if not isinstance(limit, int) or isinstance(limit, bool) or limit < 1:
        raise PreconditionError(f"window must be an integer >= 1, got {limit!r}")
    d = c.dim
    table = c.table
    prefix = []
    psums = [0]

    def extend(fixed, start):
        if len(prefix) == m:
            return tuple(prefix)
        after = m - len(prefix) - 1
        for x in range(start, limit + 1):
            # cheapest possible completion is x, x+1, ..., x+after
            if psums[-1] + (after + 1) * x + after * (after + 1) // 2 > limit:
                break
            if apart and prefix and not highest_bit(prefix[-1]) < lowest_bit(x):
                continue
            t = len(prefix)
            prefix.append(x)
            psums.append(psums[-1] + x)
            got_colour = fixed
            ok = True
            if t + 1 >= d:
                # adjacent tuples whose last run ends at the new element
                for bounds in combinations(range(t + 1), d):
                    edges = bounds + (t + 1,)
                    key = tuple(psums[edges[i + 1]] - psums[edges[i]] for i in range(d))
                    got = table.get(key)
                    if got is None or (got_colour is not None and got != got_colour):
                        ok = False
                        break
                    if got_colour is None:
                        got_colour = got
            if ok:
                found = extend(got_colour, x + 1)
                if found is not None:
                    return found
            prefix.pop()
            psums.pop()
        return None

    return extend(colour, 1)


@dataclass(frozen=True)
class FiniteNumberQuery:
    """Parameters of a finite analogue number computation."""

    principle: str
    dim: int
    palette: int
    size: int
    cap: int

    def __post_init__(self):
        if self.principle not in PRINCIPLES:
            raise PreconditionError(f"principle must be one of {PRINCIPLES}, got {self.principle!r}")
        for name in ("dim", "palette", "size", "cap"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise PreconditionError(f"{name} must be an integer >= 1, got {value!r}")


@dataclass(frozen=True)
class FiniteNumberResult:
    """Outcome of a finite number scan.

    ``value`` is the least sufficient window size, or None when the cap was
    exhausted; in that case ``counterexample`` holds a witness-free
    colouring at the cap size.  ``witness`` is the witness found for the
    first colouring in enumeration order at the answer size.
    """

    query: FiniteNumberQuery
    value: int | None
    counterexample: Colouring | None
    witness: tuple | None

    def exceeded_cap(self) -> bool:
        return self.value is None


def _search_witness(principle, colouring, m, window):
    if principle == "RT" or principle == "ZRT":
        return find_mono_subset(colouring, m)
    if principle == "SEPZRT":
        return find_mono_subset(colouring, m, separated=True)
    if principle == "AHT":
        return find_afs_mono(colouring, m, window=window)
    return find_afs_mono(colouring, m, window=window, apart=True)


def finite_number(query: FiniteNumberQuery, budget=None) -> FiniteNumberResult:
    """Least window size at which every admissible colouring has a witness.

    Admissible colourings are shift-invariant (enumerated through
    difference tables) for ZRT/SEPZRT and arbitrary otherwise.  Exhaustive
    only; refuses when a size's enumeration exceeds the budget.
    """
    principle = query.principle
    sets_mode = principle in _SETS_PRINCIPLES
    invariant = principle in ("ZRT", "SEPZRT")
    if sets_mode and query.size < query.dim:
        raise PreconditionError(f"witness size {query.size} below tuple arity {query.dim}")
    last_counterexample = None
    for size in range(1, query.cap + 1):
        window = size - 1 if sets_mode else size
        mode = "sets" if sets_mode else "vectors"
        counterexample = None
        first_witness = None
        first = True
        for instance in enumerate_colourings(query.dim, window, query.palette,
                                             mode=mode, invariant=invariant, budget=budget):
            witness = _search_witness(principle, instance, query.size, window)
            if first:
                first_witness = witness
                first = False
            if witness is None:
                counterexample = instance
                break
        if counterexample is None:
            return FiniteNumberResult(query, size, None, first_witness)
        last_counterexample = counterexample
    return FiniteNumberResult(query, None, last_counterexample, None)


def sweep_finite_numbers(queries, out, budget=None):
    """Write one CSV row per query: principle, dim, k, m, N, witness_or_counterexample."""
    writer = csv.writer(out)
    writer.writerow(["principle", "dim", "k", "m", "N", "witness_or_counterexample"])
    for query in queries:
        result = finite_number(query, budget=budget)
        if result.value is not None:
            cell = json.dumps(list(result.witness))
            answer = result.value
        else:
            cell = json.dumps(colouring_to_json(result.counterexample))
            answer = "exceeds cap"
        writer.writerow([query.principle, query.dim, query.palette, query.size, answer, cell])
