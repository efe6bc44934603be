"""Candidate-count budget shared by the exhaustive enumerators."""

import os

from irl.errors import FormatError

DEFAULT_BUDGET = 1_000_000
ENV_VAR = "IRL_BUDGET"


def candidate_budget() -> int:
    """Budget from the IRL_BUDGET environment variable, or the default."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise FormatError(f"{ENV_VAR} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise FormatError(f"{ENV_VAR} must be a positive integer, got {raw!r}")
    return value
