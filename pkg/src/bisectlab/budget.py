"""Wall-clock budgets for exhaustive searches."""

from __future__ import annotations

import time


class BudgetExceeded(Exception):
    """A search ran out of time; its answer is inconclusive, not negative."""


class Deadline:
    """Cheap periodic deadline check for tight search loops."""

    __slots__ = ("limit", "_count", "_every")

    def __init__(self, seconds: float | None, every: int = 2048):
        self.limit = None if seconds is None else time.monotonic() + seconds
        self._count = 0
        self._every = every

    def tick(self) -> None:
        if self.limit is None:
            return
        self._count += 1
        if self._count >= self._every:
            self._count = 0
            if time.monotonic() > self.limit:
                raise BudgetExceeded()


NO_DEADLINE = Deadline(None)


def as_deadline(budget: "Deadline | float | None") -> Deadline:
    if isinstance(budget, Deadline):
        return budget
    return Deadline(budget)
