# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled evaluation kernel: rim strip removal and the signed tiling sum.

Mirror of ``_kernel_py``; character values stay Python ints (exact).
"""

ENGINE = "cython"


def removable_strips(parts, size):
    """All single border-strip removals of ``size`` boxes from the rim."""
    cdef Py_ssize_t length = len(parts)
    cdef Py_ssize_t r, rp, i, c, base, lower, here
    cdef list out = []
    cdef list mu
    for r in range(length):
        base = <Py_ssize_t> parts[r] + 1 - size
        for rp in range(r, length):
            c = base + (rp - r)
            if c < 1:
                continue
            here = <Py_ssize_t> parts[rp]
            if c > here:
                break
            lower = <Py_ssize_t> parts[rp + 1] if rp + 1 < length else 0
            if c <= lower:
                continue
            mu = list(parts)
            for i in range(r, rp):
                mu[i] = parts[i + 1] - 1
            mu[rp] = c - 1
            while mu and mu[len(mu) - 1] == 0:
                mu.pop()
            out.append((tuple(mu), rp - r))
    return out


cdef object _rec(tuple shape, Py_ssize_t idx, tuple comp, Py_ssize_t nparts, dict memo):
    if idx == nparts:
        return 1 if len(shape) == 0 else 0
    key = (shape, idx)
    hit = memo.get(key)
    if hit is not None:
        return hit
    cdef object total = 0
    cdef Py_ssize_t height
    for residual, h in removable_strips(shape, comp[idx]):
        height = <Py_ssize_t> h
        sub = _rec(<tuple> residual, idx + 1, comp, nparts, memo)
        if height & 1:
            total -= sub
        else:
            total += sub
    memo[key] = total
    return total


def chi(parts, comp):
    """Signed count of border-strip tilings: the exact character value."""
    cdef dict memo = {}
    return _rec(tuple(parts), 0, tuple(comp), len(comp), memo)
