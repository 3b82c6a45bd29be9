"""Exact character evaluation and border-strip tableau machinery.

``chi`` evaluates characters by recursive rim-strip removal (hot kernel,
compiled when available); ``enumerate_bsts`` produces every tiling with
box-level strip assignments and is the independent cross-check for ``chi``
as well as the test bed for the greedy/non-greedy tiling counts.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from typing import Iterable

from .partitions import (
    Hook,
    conjugate,
    hook_profile,
    second_imbalance,
    validate_composition,
    validate_partition,
)

if os.environ.get("SNCHAR_PURE", "") not in ("", "0"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

#: Which kernel is active: "cython" or "pure".
ENGINE: str = _impl.ENGINE

Box = tuple[int, int]


class Classification(enum.Enum):
    GREEDY = "greedy"
    NONGREEDY = "nongreedy"
    OTHER = "other"


@dataclass(frozen=True)
class BorderStripTiling:
    """A complete border-strip tiling: box -> strip index, plus heights/sign."""

    shape: tuple[int, ...]
    strip_of_box: dict[Box, int]
    heights: tuple[int, ...]
    sign: int

    def boxes_of(self, index: int) -> frozenset[Box]:
        """Boxes of the strip with the given 1-based index."""
        return frozenset(b for b, i in self.strip_of_box.items() if i == index)

    def strip_boxes(self) -> tuple[frozenset[Box], ...]:
        """All strips' box sets in index order."""
        groups: list[set[Box]] = [set() for _ in self.heights]
        for box, i in self.strip_of_box.items():
            groups[i - 1].add(box)
        return tuple(frozenset(g) for g in groups)


@dataclass(frozen=True)
class PartialTiling:
    """The first m strips of a tiling, as explicit box sets."""

    shape: tuple[int, ...]
    strips: tuple[frozenset[Box], ...]

    @property
    def m(self) -> int:
        return len(self.strips)

    def covered(self) -> frozenset[Box]:
        out: set[Box] = set()
        for s in self.strips:
            out |= s
        return frozenset(out)


def _check_sizes(parts: tuple[int, ...], comp: tuple[int, ...]) -> None:
    validate_partition(parts)
    validate_composition(comp)
    if sum(parts) != sum(comp):
        raise ValueError(
            f"size mismatch: shape has {sum(parts)} boxes, type has {sum(comp)}"
        )


def chi(parts: tuple[int, ...], comp: tuple[int, ...]) -> int:
    """Exact character value of the shape ``parts`` at cycle type ``comp``."""
    _check_sizes(parts, comp)
    return _impl.chi(tuple(parts), tuple(comp))


def removable_strips(
    parts: tuple[int, ...], size: int
) -> list[tuple[tuple[int, ...], int]]:
    """All (residual, height) pairs from removing one rim strip of ``size``."""
    validate_partition(parts)
    if size < 1:
        raise ValueError("strip size must be positive")
    return _impl.removable_strips(tuple(parts), size)


def _removals_with_boxes(parts, size):
    # Same scan as the kernel's removable_strips, but also reports the
    # removed boxes (1-based coordinates); used only by the enumerator.
    out = []
    length = len(parts)
    for r in range(length):
        base = parts[r] + 1 - size
        for rp in range(r, length):
            c = base + (rp - r)
            if c < 1:
                continue
            if c > parts[rp]:
                break
            lower = parts[rp + 1] if rp + 1 < length else 0
            if c <= lower:
                continue
            mu = list(parts)
            boxes = []
            for i in range(r, rp):
                mu[i] = parts[i + 1] - 1
                boxes.extend((i + 1, col) for col in range(parts[i + 1], parts[i] + 1))
            mu[rp] = c - 1
            boxes.extend((rp + 1, col) for col in range(c, parts[rp] + 1))
            while mu and mu[-1] == 0:
                mu.pop()
            out.append((tuple(mu), rp - r, boxes))
    return out


def enumerate_bsts(
    parts: tuple[int, ...], comp: tuple[int, ...]
) -> list[BorderStripTiling]:
    """Every border-strip tiling of the given shape and type.

    Works by peeling the last part's strip from the rim and recursing, so
    each tiling carries its full box-level assignment.  The signed count
    over the result equals ``chi(parts, comp)``; intended for desk-scale n.
    """
    _check_sizes(parts, comp)
    results: list[BorderStripTiling] = []
    acc: list[tuple[int, list[Box], int]] = []

    def rec(shape: tuple[int, ...], idx: int) -> None:
        if idx < 0:
            if shape:
                return
            strip_of_box: dict[Box, int] = {}
            heights = [0] * len(comp)
            sign = 1
            for i, boxes, height in acc:
                heights[i] = height
                if height & 1:
                    sign = -sign
                for box in boxes:
                    strip_of_box[box] = i + 1
            results.append(
                BorderStripTiling(tuple(parts), strip_of_box, tuple(heights), sign)
            )
            return
        for residual, height, boxes in _removals_with_boxes(shape, comp[idx]):
            acc.append((idx, boxes, height))
            rec(residual, idx - 1)
            acc.pop()

    rec(tuple(parts), len(comp) - 1)
    return results


def composition_sign(comp: tuple[int, ...]) -> int:
    """Sign of any permutation with this cycle type: (-1)^(n - #parts)."""
    validate_composition(comp)
    return -1 if (sum(comp) - len(comp)) % 2 else 1


def dimension_hook_length(parts: tuple[int, ...]) -> int:
    """n! divided by the product of all box hook lengths, exact."""
    validate_partition(parts)
    if not parts:
        raise ValueError("dimension of the empty partition")
    cols = conjugate(parts)
    n = sum(parts)
    denom = 1
    for i, row in enumerate(parts):
        for j in range(row):
            denom *= (row - j) + (cols[j] - i) - 1
    return math.factorial(n) // denom


def greedy_strip_areas(profile: tuple[Hook, ...], m: int) -> list[int]:
    """Areas of the first m greedy strips: h_1 - a_1 - 1, then h_i - a_i + a_{i-1}."""
    areas = [profile[0].h - profile[0].a - 1]
    for i in range(2, m + 1):
        areas.append(profile[i - 1].h - profile[i - 1].a + profile[i - 2].a)
    return areas


def _hook_path(parts: tuple[int, ...], cols: tuple[int, ...], i: int) -> list[Box]:
    # Boxes of principal hook i walked from arm tip to leg tip; every
    # contiguous segment of this path is a valid border strip.
    row = [(i, j) for j in range(parts[i - 1], i - 1, -1)]
    col = [(j, i) for j in range(i + 1, cols[i - 1] + 1)]
    return row + col


def greedy_arrangement(parts: tuple[int, ...], long_is_arm: bool) -> PartialTiling:
    """The canonical long-overhang-first placement of the first m strips.

    Strip 1 covers hook 1 except the short overhang and its neighbor x_1;
    strip i covers that leftover and spills into hook i, leaving the
    opposite-end overhang plus x_i uncovered.  ``long_is_arm`` selects
    which overhang counts as long; when a_1 != b_1 it must agree with the
    actual diagram, and when a_1 == b_1 it picks one of the two mirror
    arrangements.
    """
    validate_partition(parts)
    prof = hook_profile(parts)
    k_hooks = len(prof)
    if k_hooks < 2:
        raise ValueError("greedy arrangement needs at least two principal hooks")
    first = prof[0]
    if first.arm_over != first.leg_over and long_is_arm != (
        first.arm_over > first.leg_over
    ):
        raise ValueError(
            "long_is_arm does not match the diagram's first long overhang"
        )
    m = int(min(second_imbalance(parts), k_hooks)) - 1
    cols = conjugate(parts)
    strips: list[frozenset[Box]] = []
    carry: list[Box] = []
    # uncovered end of the current hook: leg side when the long overhang
    # being covered sits on the arm, then alternating
    side = "leg" if long_is_arm else "arm"
    for i in range(1, m + 1):
        path = _hook_path(parts, cols, i)
        gap = prof[i - 1].a + 1
        if side == "leg":
            covered, leftover = path[:-gap], path[-gap:]
        else:
            covered, leftover = path[gap:], path[:gap]
        strips.append(frozenset(carry + covered))
        carry = leftover
        side = "arm" if side == "leg" else "leg"
    return PartialTiling(tuple(parts), tuple(strips))


def classify_tiling(
    tiling: BorderStripTiling, parts: tuple[int, ...]
) -> Classification:
    """GREEDY / NONGREEDY / OTHER relative to the shape's greedy arrangement.

    GREEDY: the first m strips match a greedy arrangement's box sets exactly.
    NONGREEDY: the first m areas match the greedy areas but placement differs.
    OTHER: the areas already differ.
    """
    prof = hook_profile(parts)
    if len(prof) < 2:
        raise ValueError("classification needs at least two principal hooks")
    m = int(min(second_imbalance(parts), len(prof))) - 1
    areas = greedy_strip_areas(prof, m)
    strips = tiling.strip_boxes()
    if len(strips) < m or any(len(strips[i]) != areas[i] for i in range(m)):
        return Classification.OTHER
    head = tuple(strips[:m])
    first = prof[0]
    if first.arm_over != first.leg_over:
        options: Iterable[bool] = (first.arm_over > first.leg_over,)
    else:
        options = (True, False)
    for long_is_arm in options:
        if head == greedy_arrangement(parts, long_is_arm).strips:
            return Classification.GREEDY
    return Classification.NONGREEDY
