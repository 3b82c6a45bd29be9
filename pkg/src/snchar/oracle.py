"""Character oracles: exact answers, query counting, transcripts."""

from __future__ import annotations

from typing import Protocol

from .mn_eval import chi
from .partitions import format_parts, validate_partition


class OracleHandle(Protocol):
    """Anything that answers composition queries for one fixed character."""

    n: int

    def answer(self, comp: tuple[int, ...]) -> int: ...


class QueryTranscript:
    """Ordered record of (query, answer) pairs."""

    def __init__(self) -> None:
        self.entries: list[tuple[tuple[int, ...], int]] = []

    @property
    def count(self) -> int:
        return len(self.entries)

    def record(self, query: tuple[int, ...], answer: int) -> None:
        self.entries.append((query, answer))

    def lines(self) -> list[str]:
        """Line-oriented dump: ``query=<comma-list> answer=<signed decimal>``."""
        return [f"query={format_parts(q)} answer={a}" for q, a in self.entries]

    def records(self) -> list[dict]:
        """Structured dump, one object per entry."""
        return [{"query": list(q), "answer": a} for q, a in self.entries]


class ExactOracle:
    """Answers every query with the character of one hidden partition."""

    def __init__(self, hidden: tuple[int, ...]):
        validate_partition(hidden)
        if not hidden:
            raise ValueError("hidden partition must be nonempty")
        self.__hidden = tuple(hidden)
        self.n = sum(hidden)

    def answer(self, comp: tuple[int, ...]) -> int:
        return chi(self.__hidden, comp)


def exact_oracle(hidden: tuple[int, ...]) -> ExactOracle:
    return ExactOracle(hidden)


class CountingOracle:
    """Forwards queries to an inner handle, recording a transcript.

    Queries whose parts do not sum to n are rejected before forwarding and
    leave the count unchanged.  Answers are forwarded bit-exactly.
    """

    def __init__(self, inner: OracleHandle):
        self._inner = inner
        self.n = inner.n
        self.transcript = QueryTranscript()

    @property
    def count(self) -> int:
        return self.transcript.count

    def answer(self, comp: tuple[int, ...]) -> int:
        comp = tuple(comp)
        if sum(comp) != self.n:
            raise ValueError(
                f"query sums to {sum(comp)}, oracle expects compositions of {self.n}"
            )
        value = self._inner.answer(comp)
        self.transcript.record(comp, value)
        return value


def counting_oracle(inner: OracleHandle) -> CountingOracle:
    return CountingOracle(inner)
