"""Shared test helpers: independent, definition-level validators.

These deliberately re-derive everything from raw box sets so that they
share no arithmetic with the library code they check.
"""

from __future__ import annotations


def diagram_boxes(parts):
    """All (row, col) boxes of the Young diagram, 1-based."""
    return {(i, j) for i, row in enumerate(parts, 1) for j in range(1, row + 1)}


def is_border_strip(boxes):
    """Literal definition: contiguous rows; below the top row, the rightmost
    box of each row sits directly underneath the leftmost box of the row above."""
    rows: dict[int, list[int]] = {}
    for r, c in boxes:
        rows.setdefault(r, []).append(c)
    order = sorted(rows)
    if order != list(range(order[0], order[-1] + 1)):
        return False
    for r in order:
        cs = sorted(rows[r])
        if cs != list(range(cs[0], cs[-1] + 1)):
            return False
    for r in order[1:]:
        if max(rows[r]) != min(rows[r - 1]):
            return False
    return True


def check_tiling(tiling, parts, comp):
    """Assert every defining property of a border-strip tiling."""
    boxes = diagram_boxes(parts)
    assert set(tiling.strip_of_box) == boxes
    strips = tiling.strip_boxes()
    assert len(strips) == len(comp)
    labels = tiling.strip_of_box
    for i, strip in enumerate(strips):
        assert len(strip) == comp[i]
        assert is_border_strip(strip)
        occupied_rows = {r for r, _ in strip}
        assert tiling.heights[i] == len(occupied_rows) - 1
    for r, c in boxes:
        if (r, c + 1) in boxes:
            assert labels[(r, c)] <= labels[(r, c + 1)]
        if (r + 1, c) in boxes:
            assert labels[(r, c)] <= labels[(r + 1, c)]
    sign = 1
    for h in tiling.heights:
        if h % 2:
            sign = -sign
    assert sign == tiling.sign


def hooks_by_boxes(parts):
    """(h, arm_overhang, leg_overhang) per principal hook, from raw box sets."""
    boxes = diagram_boxes(parts)
    k = 0
    while (k + 1, k + 1) in boxes:
        k += 1
    hooks = []
    for i in range(1, k + 1):
        hook = {(i, j) for (r, j) in boxes if r == i and j >= i} | {
            (j, i) for (j, c) in boxes if c == i and j >= i
        }
        nxt = set()
        if i + 1 <= k:
            nxt = {(i + 1, j) for (r, j) in boxes if r == i + 1 and j >= i + 1} | {
                (j, i + 1) for (j, c) in boxes if c == i + 1 and j >= i + 1
            }
        arm_over = {(i, j) for (r, j) in hook if r == i and j > i and (i + 1, j) not in nxt}
        leg_over = {(j, i) for (j, c) in hook if c == i and j > i and (j, i + 1) not in nxt}
        hooks.append((len(hook), len(arm_over), len(leg_over)))
    return hooks
