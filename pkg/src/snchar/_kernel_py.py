"""Pure-Python evaluation kernel.

Same API as the compiled ``_kernel`` extension; selected at import time by
``snchar.mn_eval`` when the extension is unavailable or disabled.
"""

from __future__ import annotations

ENGINE = "pure"


def removable_strips(parts, size):
    """All single border-strip removals of ``size`` boxes from the rim.

    Returns [(residual partition, strip height), ...].  A removable strip
    with top row r and bottom row r' occupies columns parts[i+1]..parts[i]
    in each intermediate row i and ends at column c in row r', where c is
    pinned by the total size; the removal is valid iff the leftover rows
    still weakly decrease.
    """
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
            for i in range(r, rp):
                mu[i] = parts[i + 1] - 1
            mu[rp] = c - 1
            while mu and mu[-1] == 0:
                mu.pop()
            out.append((tuple(mu), rp - r))
    return out


def chi(parts, comp):
    """Signed count of border-strip tilings: the exact character value.

    Strips are peeled from the rim one composition part at a time, left to
    right, memoized on (residual shape, part index).  The memo lives only
    for this call.
    """
    memo = {}
    nparts = len(comp)

    def rec(shape, idx):
        if idx == nparts:
            return 1 if not shape else 0
        key = (shape, idx)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for residual, height in removable_strips(shape, comp[idx]):
            sub = rec(residual, idx + 1)
            if height & 1:
                total -= sub
            else:
                total += sub
        memo[key] = total
        return total

    return rec(tuple(parts), 0)
