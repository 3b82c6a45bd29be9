"""Recover a hidden irreducible character from oracle answers alone.

The query strategy runs in two passes.  The forward pass pins down the
principal hook lengths one at a time by probing with the largest strip that
could still fit.  The backward pass then recovers the actual hook shapes
from the innermost hook outward: a binomial-valued base case for the last
hook, then for each outer hook an overhang scan followed by a single
designed query that separates the two overhang-swapped candidates.

Queries for a residual shape are issued with the outer hook lengths
prepended, which forces the leading strips to cover those hooks exactly.
The forced strips contribute a fixed but unknown sign (their heights depend
on hook shapes recovered only later), so every decision below is made
through sign-insensitive evidence: first-nonzero position, magnitude, or
parity.  The one case that genuinely needs the answer's sign (separating a
shape from its conjugate) first measures the unknown sign with an all-ones
query, whose true value is the same positive dimension for both candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import LemmaContradiction, PromiseViolation
from .mn_eval import (
    chi,
    composition_sign,
    dimension_hook_length,
    greedy_strip_areas,
)
from .oracle import CountingOracle, OracleHandle, QueryTranscript, counting_oracle
from .partitions import (
    INFINITY,
    doppelganger,
    from_hooks,
    hook_lengths,
    hook_profile,
    second_imbalance,
)


@dataclass
class IdentifyResult:
    partition: tuple[int, ...]
    transcript: QueryTranscript
    forward_queries: int
    base_queries: int
    overhang_queries: int
    doppelganger_queries: int

    @property
    def total_queries(self) -> int:
        return self.transcript.count


class _PhasedOracle:
    """Thin pass-through that tags queries with the current phase/prefix."""

    def __init__(self, counter: CountingOracle, trace: list | None):
        self._counter = counter
        self._trace = trace
        self.n = counter.n
        self.phase = "forward"
        self.prefix: tuple[int, ...] = ()

    def answer(self, comp: tuple[int, ...]) -> int:
        value = self._counter.answer(comp)
        if self._trace is not None:
            self._trace.append((self.phase, self.prefix, tuple(comp)))
        return value


def forward_pass(oracle: OracleHandle, n: int) -> tuple[int, ...]:
    """Principal hook lengths of the hidden shape, outermost first.

    The first hook length is the largest s with chi nonzero at (s, 1^(n-s)).
    Each later length is found by fixing the known hooks as leading parts
    and guessing the next strip size downward from the largest feasible
    value, padding with fixed points; the first nonzero answer is exact.
    """
    h1 = None
    for i in range(n):
        if oracle.answer((n - i,) + (1,) * i) != 0:
            h1 = n - i
            break
    if h1 is None:
        raise PromiseViolation("no nonzero answer in the first-hook scan")
    hooks = [h1]
    while True:
        remaining = n - sum(hooks)
        if remaining == 0:
            return tuple(hooks)
        ceiling = min(hooks[-1] - 2, remaining)
        if ceiling < 1:
            raise PromiseViolation(
                f"impossible residual: {remaining} boxes after hooks {hooks}"
            )
        found = None
        for guess in range(ceiling, 0, -1):
            query = tuple(hooks) + (guess,) + (1,) * (remaining - guess)
            if oracle.answer(query) != 0:
                found = guess
                break
        if found is None:
            raise PromiseViolation(f"no feasible hook length after {hooks}")
        hooks.append(found)


def _comb(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def recover_base_hook(
    oracle: OracleHandle, prefix: tuple[int, ...], h: int
) -> tuple[int, int]:
    """(arm, leg) of a residual known to be a single hook of length ``h``.

    The all-ones query answers +-C(h-1, arm); the magnitude narrows the arm
    to two complementary values and the sign measures the forced prefix
    strips' sign.  If needed, one more query with a single 2-cycle decides
    between the two values, which predict opposite nonzero answers.
    """
    z1 = oracle.answer(prefix + (1,) * h)
    magnitude = abs(z1)
    r = next((r for r in range(h) if math.comb(h - 1, r) == magnitude), None)
    if magnitude == 0 or r is None:
        raise PromiseViolation(
            f"all-ones answer {z1} matches no binomial C({h - 1}, r)"
        )
    anchor = 1 if z1 > 0 else -1
    if not prefix and anchor != 1:
        raise PromiseViolation("character of the identity must be positive")
    first_row_a, first_row_b = r + 1, h - r
    if first_row_a == first_row_b:
        return first_row_a - 1, h - first_row_a
    z2 = oracle.answer(prefix + (2,) + (1,) * (h - 2))
    for first_row in (first_row_a, first_row_b):
        predicted = anchor * (
            _comb(h - 2, first_row - 2) - _comb(h - 2, first_row - 1)
        )
        if z2 == predicted:
            return first_row - 1, h - first_row
    raise PromiseViolation(f"sign query answer {z2} matches neither hook candidate")


def recover_overhangs(
    oracle: OracleHandle,
    prefix: tuple[int, ...],
    inner: tuple[int, ...],
    h1: int,
) -> tuple[int, int]:
    """Overhang lengths (a_1, b_1) of a residual whose inner hooks are known.

    Probes (h_1 - i, h_2 + i, h_3, ...) for i = 1, 2, ...; the answer is
    zero while the first strip is too long to avoid both overhang-adjacent
    boxes, so the first nonzero position reveals a_1, and b_1 follows from
    h_1 = h_2 + a_1 + b_1 + 2.  The first nonzero magnitude is 1 when
    a_1 < b_1 and 2 when a_1 = b_1.
    """
    inner_hooks = hook_lengths(inner)
    h2 = inner_hooks[0]
    rest = inner_hooks[1:]
    cap = (h1 - h2 - 2) // 2 + 1
    for i in range(1, cap + 1):
        z = oracle.answer(prefix + (h1 - i, h2 + i) + rest)
        if z != 0:
            a1 = i - 1
            b1 = h1 - h2 - a1 - 2
            expected = 2 if a1 == b1 else 1
            if abs(z) != expected:
                raise LemmaContradiction(
                    f"overhang probe answered {z}, expected magnitude {expected}"
                )
            return a1, b1
    raise PromiseViolation(f"no nonzero overhang probe through i={cap}")


def build_doppel_queries(cand: tuple[int, ...]) -> list[tuple[int, ...]]:
    """The designed composition that separates ``cand`` from its overhang swap.

    All cases share the greedy-area prefix (h_1 - a_1 - 1, then
    h_i - a_i + a_{i-1}).  With I the second imbalance and k+1 the hook
    count:

    * I <= k: continue with h_I - a_I + a_{I-1}, then h_{I+1} + a_I + 1,
      then the remaining hook lengths verbatim.  Exactly one of the two
      candidates admits a greedy tiling, so the values differ mod 2.
    * I = k+1: append h_{k+1} - a_{k+1} + a_k and a_{k+1} + 1; the greedy
      tiling counts have opposite parity.
    * I infinite: the candidates are conjugate, so any odd cycle type with
      a nonzero value separates them by sign.  The one-part tail
      h_{k+1} + a_k + 1 admits exactly one tiling; if that composition is
      odd, use it, otherwise split the tail in two (odd by the extra part)
      so that the tiling count is odd: the split is chosen from a_k and
      a_{k+1}, with three small exceptional pairs taking the tail
      (h_{k+1}, a_k + 1).
    """
    prof = hook_profile(cand)
    if len(prof) < 2:
        raise ValueError("doppelganger separation needs at least two hooks")
    k = len(prof) - 1
    h = [hook.h for hook in prof]
    a = [hook.a for hook in prof]
    imbalance = second_imbalance(cand)
    if imbalance != INFINITY and imbalance <= k:
        big_i = int(imbalance)
        query = greedy_strip_areas(prof, big_i - 1)
        query.append(h[big_i - 1] - a[big_i - 1] + a[big_i - 2])
        query.append(h[big_i] + a[big_i - 1] + 1)
        query.extend(h[big_i + 1 :])
    elif imbalance != INFINITY:
        query = greedy_strip_areas(prof, k)
        query.append(h[k] - a[k] + a[k - 1])
        query.append(a[k] + 1)
    else:
        query = greedy_strip_areas(prof, k)
        tail_total = h[k] + a[k - 1] + 1
        if composition_sign(tuple(query) + (tail_total,)) == -1:
            query.append(tail_total)
        else:
            ak, ak1 = a[k - 1], a[k]
            if (ak1 == 0 and ak <= 1) or (ak == ak1 == 1):
                query.extend((h[k], ak + 1))
            else:
                if ak1 == 0:
                    last = 2
                elif ak != ak1:
                    last = ak1 + 1
                else:
                    last = ak1 + 2
                query.extend((tail_total - last, last))
    return [tuple(query)]


def resolve_doppelganger(
    oracle: OracleHandle, prefix: tuple[int, ...], cand: tuple[int, ...]
) -> tuple[int, ...]:
    """Decide between ``cand`` and its overhang swap by querying the oracle.

    Both candidates' exact values on the designed query are computed locally
    and the oracle's answer is matched against them.  In the finite-imbalance
    cases the two predictions differ mod 2, so parity decides regardless of
    the forced prefix strips' unknown sign.  In the infinite case the
    predictions differ only in sign, so with a nonempty prefix the unknown
    sign is first read off an all-ones query (both candidates share the
    same positive dimension).
    """
    dopp = doppelganger(cand)
    if dopp == cand:
        return cand
    (query,) = build_doppel_queries(cand)
    predicted_cand = chi(cand, query)
    predicted_dopp = chi(dopp, query)
    if second_imbalance(cand) == INFINITY:
        if predicted_cand == 0 or predicted_cand != -predicted_dopp:
            raise LemmaContradiction(
                f"conjugate candidates predict {predicted_cand} and "
                f"{predicted_dopp} on an odd class"
            )
        sign = 1
        if prefix:
            dim = dimension_hook_length(cand)
            z_dim = oracle.answer(prefix + (1,) * sum(cand))
            if abs(z_dim) != dim:
                raise PromiseViolation(
                    f"dimension probe answered {z_dim}, expected magnitude {dim}"
                )
            sign = 1 if z_dim > 0 else -1
        z = oracle.answer(prefix + query)
        if z == sign * predicted_cand:
            return cand
        if z == sign * predicted_dopp:
            return dopp
        raise PromiseViolation(f"answer {z} matches neither candidate prediction")
    if (predicted_cand - predicted_dopp) % 2 == 0:
        raise LemmaContradiction(
            f"candidate predictions {predicted_cand} and {predicted_dopp} "
            f"agree mod 2"
        )
    z = oracle.answer(prefix + query)
    if z % 2 == predicted_cand % 2:
        picked, predicted = cand, predicted_cand
    else:
        picked, predicted = dopp, predicted_dopp
    if abs(z) != abs(predicted):
        raise PromiseViolation(
            f"answer {z} has the parity of {predicted} but not its magnitude"
        )
    return picked


def _attach(inner: tuple[int, ...], arm_over: int, leg_over: int) -> tuple[int, ...]:
    # Wrap a new first hook with the given overhangs around a known residual.
    new_arm = arm_over + 1 + (inner[0] - 1)
    new_leg = leg_over + 1 + (len(inner) - 1)
    return (new_arm + 1,) + tuple(r + 1 for r in inner) + (1,) * (new_leg - len(inner))


def identify(
    handle: OracleHandle, n: int, trace: list | None = None
) -> IdentifyResult:
    """Determine the hidden partition behind a character oracle.

    Runs the forward pass, then recovers hook shapes innermost-first:
    the base case for the last hook, then per outer hook an overhang scan
    and (when the overhangs differ) one candidate-separating query.  The
    optional ``trace`` list receives (phase, prefix, query) triples.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if handle.n != n:
        raise ValueError(f"oracle answers S_{handle.n}, not S_{n}")
    counter = counting_oracle(handle)
    phased = _PhasedOracle(counter, trace)

    hooks = forward_pass(phased, n)
    forward_count = counter.count
    k_hooks = len(hooks)

    phased.phase = "base"
    phased.prefix = hooks[:-1]
    arm, leg = recover_base_hook(phased, hooks[:-1], hooks[-1])
    base_count = counter.count - forward_count

    recovered = [(arm, leg)]
    inner = from_hooks(recovered)
    overhang_count = 0
    doppel_count = 0
    for j in range(k_hooks - 1, 0, -1):
        prefix = hooks[: j - 1]
        phased.prefix = prefix
        phased.phase = "overhang"
        before = counter.count
        a1, b1 = recover_overhangs(phased, prefix, inner, hooks[j - 1])
        overhang_count += counter.count - before

        phased.phase = "doppelganger"
        before = counter.count
        if a1 == b1:
            inner = _attach(inner, a1, a1)
        else:
            inner = resolve_doppelganger(
                phased, prefix, _attach(inner, arm_over=b1, leg_over=a1)
            )
        doppel_count += counter.count - before
        recovered.insert(0, (inner[0] - 1, len(inner) - 1))

    if hook_lengths(inner) != hooks or from_hooks(recovered) != inner:
        raise LemmaContradiction(
            "assembled partition contradicts the recovered hook lengths"
        )
    return IdentifyResult(
        partition=inner,
        transcript=counter.transcript,
        forward_queries=forward_count,
        base_queries=base_count,
        overhang_queries=overhang_count,
        doppelganger_queries=doppel_count,
    )
