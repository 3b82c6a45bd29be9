"""Construct a cycle type on which two given characters provably differ."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LemmaContradiction
from .identify import identify
from .mn_eval import chi
from .partitions import validate_partition


@dataclass(frozen=True)
class Separator:
    """A witness cycle type with the two differing character values."""

    witness: tuple[int, ...]
    value_lambda: int
    value_mu: int
    permutation: str


def cycle_notation(comp: tuple[int, ...]) -> str:
    """Canonical permutation with the given cycle type, cycles over 1..n."""
    pieces = []
    start = 1
    for part in comp:
        pieces.append("(" + " ".join(str(v) for v in range(start, start + part)) + ")")
        start += part
    return "".join(pieces)


class _WitnessFound(Exception):
    def __init__(self, query: tuple[int, ...], value_lambda: int, value_mu: int):
        super().__init__(query)
        self.query = query
        self.value_lambda = value_lambda
        self.value_mu = value_mu


class _ProbeOracle:
    """Answers as chi_lambda while watching for a value that rules out mu."""

    def __init__(self, lam: tuple[int, ...], mu: tuple[int, ...]):
        self._lam = lam
        self._mu = mu
        self.n = sum(lam)

    def answer(self, comp: tuple[int, ...]) -> int:
        value_lambda = chi(self._lam, comp)
        value_mu = chi(self._mu, comp)
        if value_lambda != value_mu:
            raise _WitnessFound(tuple(comp), value_lambda, value_mu)
        return value_lambda


def distinguish(lam: tuple[int, ...], mu: tuple[int, ...]) -> Separator:
    """First identification query on which the two characters differ.

    Simulates the identification loop against chi_lambda, checking every
    answer against chi_mu on the side.  Termination with a witness is
    guaranteed: were every answer shared, identification would output the
    same partition for both characters, contradicting its exactness.
    """
    validate_partition(lam)
    validate_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    if tuple(lam) == tuple(mu):
        raise ValueError("partitions must be distinct")
    try:
        identify(_ProbeOracle(tuple(lam), tuple(mu)), sum(lam))
    except _WitnessFound as found:
        return Separator(
            witness=found.query,
            value_lambda=found.value_lambda,
            value_mu=found.value_mu,
            permutation=cycle_notation(found.query),
        )
    raise LemmaContradiction(
        "identification finished without a separating query"
    )
