"""Failure modes of the identification machinery."""


class PromiseViolation(RuntimeError):
    """The oracle's answers are inconsistent with every irreducible character."""


class LemmaContradiction(RuntimeError):
    """An internal consistency assertion failed; indicates a bug, not bad input."""
