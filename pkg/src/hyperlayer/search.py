"""Budget bookkeeping shared by the exhaustive searches."""

from __future__ import annotations


class BudgetExhausted(RuntimeError):
    """A search hit its node budget before reaching a verdict.

    This is never a "no" answer.  ``partial`` carries whatever the caller
    could certify before stopping (bounds, best solution so far).
    """

    def __init__(self, nodes: int, partial=None):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes
        self.partial = partial


class Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExhausted(self.nodes)
