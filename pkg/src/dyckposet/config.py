"""Enumeration limits shared by every module that builds combinatorial objects."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_ORDER = "DYCKPOSET_MAX_N"


class LimitExceededError(Exception):
    """Raised when an enumeration would exceed the configured budget."""


@dataclass(frozen=True)
class Limits:
    """Caps guarding combinatorial blowup.

    max_order bounds path/poset enumeration (C_8 = 1430 elements keeps exact
    integer matrices tractable).  ideal_budget bounds downset enumeration,
    which has no closed-form size.  chromatic_order gates deletion-contraction:
    the 42-vertex Hasse graph of D_5 is far slower than D_4 and must be
    requested explicitly.
    """

    max_order: int = 8
    ideal_budget: int = 1_000_000
    chromatic_order: int = 4

    @staticmethod
    def from_env() -> "Limits":
        raw = os.environ.get(ENV_MAX_ORDER)
        if raw is None:
            return Limits()
        return Limits(max_order=int(raw))


DEFAULT_LIMITS = Limits()


def check_order(n: int, limits: Limits | None = None) -> None:
    cap = (limits or Limits.from_env()).max_order
    if n > cap:
        raise LimitExceededError(f"order {n} exceeds configured maximum {cap}")
