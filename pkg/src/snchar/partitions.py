"""Integer partitions and Young-diagram combinatorics.

Partitions and compositions are plain tuples of positive ints.  A partition
is weakly decreasing; the empty tuple is the partition of 0 (it shows up as
the residual of stripping every principal hook, never as a primary input).

The slightly nonstandard view used throughout the package is the *principal
hook* decomposition: hook i consists of the boxes (i, j>=i) and (j>=i, i).
Each hook carries an arm overhang and a leg overhang -- the boxes by which
its arm/leg sticks out past the next hook -- and we record the smaller and
larger overhang cardinalities as ``a`` and ``b``.
"""

from __future__ import annotations

import math
from typing import Iterator, NamedTuple, Sequence

#: Distinguished "no imbalance" value returned by :func:`second_imbalance`.
INFINITY = math.inf


class Hook(NamedTuple):
    """One principal hook: its length and overhang data.

    ``h`` counts all boxes of the hook, ``arm_over``/``leg_over`` count the
    overhang boxes past the next hook, and ``a``/``b`` are the min/max of
    those two counts.
    """

    h: int
    arm_over: int
    leg_over: int
    a: int
    b: int


def validate_partition(parts: Sequence[int]) -> None:
    """Raise ValueError unless ``parts`` is a weakly decreasing tuple of positive ints."""
    for i, p in enumerate(parts):
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"partition part {p!r} is not a positive integer")
        if i > 0 and parts[i - 1] < p:
            raise ValueError(f"partition parts not weakly decreasing: {tuple(parts)}")


def validate_composition(parts: Sequence[int]) -> None:
    """Raise ValueError unless every part is a positive int."""
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"composition part {p!r} is not a positive integer")


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse a comma-separated partition such as ``"7,7,5,4,1"``."""
    parts = _parse_parts(text)
    validate_partition(parts)
    return parts


def parse_composition(text: str) -> tuple[int, ...]:
    """Parse a comma-separated composition; order is significant."""
    parts = _parse_parts(text)
    validate_composition(parts)
    return parts


def _parse_parts(text: str) -> tuple[int, ...]:
    tokens = [tok.strip() for tok in text.split(",")]
    parts = []
    for tok in tokens:
        if not tok:
            raise ValueError(f"empty token in {text!r}")
        try:
            parts.append(int(tok))
        except ValueError:
            raise ValueError(f"malformed part {tok!r} in {text!r}") from None
    return tuple(parts)


def format_parts(parts: Sequence[int]) -> str:
    """Inverse of the parsers: ``(7, 7, 5)`` -> ``"7,7,5"``."""
    return ",".join(str(p) for p in parts)


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Column lengths of the Young diagram (diagram transpose)."""
    if not parts:
        return ()
    cols = [0] * parts[0]
    for p in parts:
        for j in range(p):
            cols[j] += 1
    return tuple(cols)


def is_self_conjugate(parts: tuple[int, ...]) -> bool:
    return parts == conjugate(parts)


def hook_count(parts: tuple[int, ...]) -> int:
    """Number of nonempty principal hooks (boxes on the main diagonal)."""
    return sum(1 for i, p in enumerate(parts, start=1) if p >= i)


def hook_profile(parts: tuple[int, ...]) -> tuple[Hook, ...]:
    """Per-hook lengths and overhang data, outermost hook first.

    The i-th arm overhang counts boxes (i, j) of hook i with no box of
    hook i+1 directly below; for the last hook that is the whole arm.
    Raises ValueError on the empty partition.
    """
    if not parts:
        raise ValueError("hook_profile of the empty partition")
    cols = conjugate(parts)
    k = hook_count(parts)
    hooks = []
    for i in range(1, k + 1):
        arm = parts[i - 1] - i
        leg = cols[i - 1] - i
        if i < k:
            arm_over = parts[i - 1] - parts[i]
            leg_over = cols[i - 1] - cols[i]
        else:
            arm_over = arm
            leg_over = leg
        a, b = min(arm_over, leg_over), max(arm_over, leg_over)
        hooks.append(Hook(arm + leg + 1, arm_over, leg_over, a, b))
    return tuple(hooks)


def hook_lengths(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Just the principal hook lengths h_1 >= h_2 + 2 >= ..."""
    return tuple(h.h for h in hook_profile(parts)) if parts else ()


def hook_arms_legs(parts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """(arm length, leg length) per principal hook, excluding the corner box."""
    if not parts:
        return ()
    cols = conjugate(parts)
    return tuple(
        (parts[i - 1] - i, cols[i - 1] - i) for i in range(1, hook_count(parts) + 1)
    )


def from_hooks(hooks: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    """Assemble a partition from per-hook (arm, leg) lengths.

    Arm/leg lengths exclude the corner box, so hook i has arm_i + leg_i + 1
    boxes.  Hooks must nest: arm_i >= arm_{i+1} + 1 and leg_i >= leg_{i+1} + 1.
    Round-trips with :func:`hook_arms_legs`.
    """
    k = len(hooks)
    for i, (arm, leg) in enumerate(hooks):
        if arm < 0 or leg < 0:
            raise ValueError(f"hook {i + 1} has negative arm/leg: {(arm, leg)}")
        if i + 1 < k:
            narm, nleg = hooks[i + 1]
            if arm < narm + 1 or leg < nleg + 1:
                raise ValueError(
                    f"hooks {i + 1} and {i + 2} do not nest: {(arm, leg)} vs {(narm, nleg)}"
                )
    if k == 0:
        return ()
    rows = [hooks[i][0] + i + 1 for i in range(k)]
    col_heights = [hooks[i][1] + i + 1 for i in range(k)]
    j = k + 1
    while True:
        width = sum(1 for h in col_heights if h >= j)
        if width == 0:
            break
        rows.append(width)
        j += 1
    return tuple(rows)


def doppelganger(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Swap the cardinalities of the first arm and leg overhangs.

    The result has the same h_i, a_i, b_i for every hook, and the map is an
    involution.  Partitions whose first overhangs already agree are fixed.
    """
    if not parts:
        return parts
    prof = hook_profile(parts)
    delta = prof[0].arm_over - prof[0].leg_over
    if delta == 0:
        return parts
    arms_legs = list(hook_arms_legs(parts))
    arm1, leg1 = arms_legs[0]
    arms_legs[0] = (arm1 - delta, leg1 + delta)
    return from_hooks(arms_legs)


def second_imbalance(parts: tuple[int, ...]) -> float | int:
    """Smallest index i >= 2 with a_i != b_i, else :data:`INFINITY`."""
    if not parts:
        raise ValueError("second_imbalance of the empty partition")
    prof = hook_profile(parts)
    for i in range(2, len(prof) + 1):
        if prof[i - 1].a != prof[i - 1].b:
            return i
    return INFINITY


def strip_hooks(parts: tuple[int, ...], j: int) -> tuple[int, ...]:
    """Remove the first ``j`` principal hooks (first j rows and j columns)."""
    k = hook_count(parts)
    if not 0 <= j <= k:
        raise ValueError(f"cannot strip {j} hooks from a partition with {k}")
    return tuple(p - j for p in parts[j:] if p - j > 0)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def compositions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All 2^(n-1) compositions of n, ordered by first part."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest
