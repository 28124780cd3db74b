import time
from dataclasses import dataclass, field
from typing import Optional

from core.errors import BudgetExceededError

CLOCK_EVERY = 1 << 12


@dataclass
class SearchLimits:
    """
    Node and wall-clock caps shared by the search kernels.

    Args:
        node_cap: Maximum number of search nodes, None for unlimited
        time_cap: Maximum number of seconds, None for unlimited
    """

    node_cap: int | None = None
    time_cap: float | None = None
    nodes: int = 0
    _started: float = field(default_factory=time.monotonic, repr=False)

    def __post_init__(self) -> None:
        if self.node_cap is not None and self.node_cap <= 0:
            raise ValueError("node_cap must be positive")
        if self.time_cap is not None and self.time_cap <= 0:
            raise ValueError("time_cap must be positive")

    @property
    def deadline(self) -> Optional[float]:
        """Monotonic instant at which the time cap runs out."""
        if self.time_cap is None:
            return None
        return self._started + self.time_cap

    def check_clock(self) -> None:
        """Raise when the time cap has run out."""
        if self.time_cap is not None and time.monotonic() > self.deadline:
            raise BudgetExceededError(self.nodes, self.node_cap, reason="time cap")

    def tick(self, count: int = 1) -> None:
        """Account for ``count`` nodes and raise once a cap is crossed."""
        before = self.nodes
        self.nodes += count
        if self.node_cap is not None and self.nodes > self.node_cap:
            raise BudgetExceededError(self.nodes, self.node_cap)
        # single ticks read the clock every 4096 nodes, bulk charges always
        if count > 1 or before // CLOCK_EVERY != self.nodes // CLOCK_EVERY:
            self.check_clock()

    def fresh(self) -> "SearchLimits":
        """Same caps, zero nodes, new clock."""
        return SearchLimits(node_cap=self.node_cap, time_cap=self.time_cap)


def unlimited() -> SearchLimits:
    return SearchLimits()


def past_deadline(deadline: Optional[float]) -> bool:
    """True once ``deadline`` (a monotonic instant) has passed."""
    return deadline is not None and time.monotonic() > deadline
