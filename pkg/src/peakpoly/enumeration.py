"""Generators and exact counters for descent classes and peak classes.

The generators use descent- or peak-pruned backtracking: a partial
one-line prefix is abandoned as soon as a decided position contradicts
the requested pattern. Placing the value at position j decides the
descent at position j-1 and the peak status of position j-1 (the latter
needs the value at j-2 as well), so every yielded permutation is built
without ever scanning the full factorial search space.

Counts are plain Python ints, hence exact at any size.
"""
from __future__ import annotations

import dataclasses
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator

from .core import (
    CapExceeded,
    Perm,
    Positions,
    is_admissible,
    position_set,
    positions_to_mask,
    resolve_cap,
)


@dataclasses.dataclass(frozen=True)
class DescentClassQuery:
    """All permutations of n whose descent set is exactly ``descents``."""

    descents: Positions
    n: int

    def __post_init__(self):
        object.__setattr__(self, "descents", position_set(self.descents))
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.descents and self.descents[-1] >= self.n:
            raise ValueError(
                f"descent position {self.descents[-1]} needs n > {self.descents[-1]}, got n={self.n}"
            )


@dataclasses.dataclass(frozen=True)
class PeakClassQuery:
    """All permutations of n whose peak set is exactly ``peaks``."""

    peaks: Positions
    n: int

    def __post_init__(self):
        object.__setattr__(self, "peaks", position_set(self.peaks))
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.peaks and self.peaks[-1] >= self.n:
            raise ValueError(
                f"peak position {self.peaks[-1]} needs n > {self.peaks[-1]}, got n={self.n}"
            )


# ---------------------------------------------------------------------------
# Backtracking kernels
# ---------------------------------------------------------------------------
# All kernels walk the remaining values in increasing order, so complete
# outputs appear in lexicographic one-line order.

def _descent_arrangements(smask: int, prefix: Perm,
                          remaining: tuple[int, ...]) -> Iterator[Perm]:
    """Orderings of prefix+remaining whose realized descent pattern matches smask."""
    if not remaining:
        yield prefix
        return
    pos = len(prefix)
    for idx, v in enumerate(remaining):
        if pos and (prefix[-1] > v) != bool((smask >> pos) & 1):
            continue
        yield from _descent_arrangements(
            smask, prefix + (v,), remaining[:idx] + remaining[idx + 1:])


def _count_descent_completions(smask: int, prefix: Perm,
                               remaining: tuple[int, ...]) -> int:
    if not remaining:
        return 1
    pos = len(prefix)
    total = 0
    for idx, v in enumerate(remaining):
        if pos and (prefix[-1] > v) != bool((smask >> pos) & 1):
            continue
        total += _count_descent_completions(
            smask, prefix + (v,), remaining[:idx] + remaining[idx + 1:])
    return total


def _peak_arrangements(imask: int, prefix: Perm,
                       remaining: tuple[int, ...]) -> Iterator[Perm]:
    """Orderings of prefix+remaining whose realized peak pattern matches imask."""
    if not remaining:
        yield prefix
        return
    j = len(prefix) + 1
    for idx, v in enumerate(remaining):
        if j >= 3:
            peak_here = prefix[-2] < prefix[-1] > v
            if peak_here != bool((imask >> (j - 1)) & 1):
                continue
        yield from _peak_arrangements(
            imask, prefix + (v,), remaining[:idx] + remaining[idx + 1:])


def _count_peak_completions(imask: int, prefix: Perm,
                            remaining: tuple[int, ...]) -> int:
    if not remaining:
        return 1
    j = len(prefix) + 1
    total = 0
    for idx, v in enumerate(remaining):
        if j >= 3:
            peak_here = prefix[-2] < prefix[-1] > v
            if peak_here != bool((imask >> (j - 1)) & 1):
                continue
        total += _count_peak_completions(
            imask, prefix + (v,), remaining[:idx] + remaining[idx + 1:])
    return total


# ---------------------------------------------------------------------------
# Streams
# ---------------------------------------------------------------------------

def enumerate_descent_class(q: DescentClassQuery, *, cap: int | None = None) -> Iterator[Perm]:
    """Yield the permutations with descent set exactly ``q.descents``, in lex order."""
    if q.n > resolve_cap(cap):
        raise CapExceeded(f"n={q.n} exceeds the enumeration cap {resolve_cap(cap)}")
    smask = positions_to_mask(q.descents)
    return _descent_arrangements(smask, (), tuple(range(1, q.n + 1)))


def enumerate_peak_class(q: PeakClassQuery, *, cap: int | None = None) -> Iterator[Perm]:
    """Yield the permutations with peak set exactly ``q.peaks``, in lex order.

    A non-admissible peak set (position 1 or consecutive positions)
    yields nothing: no permutation realizes it.
    """
    if q.n > resolve_cap(cap):
        raise CapExceeded(f"n={q.n} exceeds the enumeration cap {resolve_cap(cap)}")
    if not is_admissible(q.peaks):
        return iter(())
    imask = positions_to_mask(q.peaks)
    return _peak_arrangements(imask, (), tuple(range(1, q.n + 1)))


# ---------------------------------------------------------------------------
# Exact counts
# ---------------------------------------------------------------------------

def _multinomial(n: int, parts: Iterable[int]) -> int:
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def count_descent_class(s: Iterable[int], n: int) -> int:
    """|D(S,n)| by signed subset sums of multinomials; exact for any n.

    Permutations with descent set contained in T = {t_1 < ... < t_k} are
    counted by the multinomial over the composition (t_1, t_2 - t_1, ...,
    n - t_k); alternating the sum over subsets T of S isolates the
    permutations whose descent set is exactly S.
    """
    s = position_set(s)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if s and s[-1] >= n:
        raise ValueError(f"descent position {s[-1]} needs n > {s[-1]}, got n={n}")
    total = 0
    for r in range(len(s) + 1):
        sign = -1 if (len(s) - r) % 2 else 1
        for t in itertools.combinations(s, r):
            cuts = (0,) + t + (n,)
            total += sign * _multinomial(n, (b - a for a, b in zip(cuts, cuts[1:])))
    return total


def peak_poly_value(i: Iterable[int], n: int, *, cap: int | None = None) -> int:
    """p(I,n): the peak class size scaled down by 2^(n-|I|-1), exactly.

    Counts P(I,n) by pruned enumeration, so n is subject to the cap.
    Non-admissible I gives 0. A scaled count that is not an integer
    signals a bug, not bad input, hence ArithmeticError.
    """
    i = position_set(i)
    if i and i[-1] >= n:
        raise ValueError(f"peak position {i[-1]} needs n > {i[-1]}, got n={n}")
    if not is_admissible(i):
        return 0
    size = sum(1 for _ in enumerate_peak_class(PeakClassQuery(i, n), cap=cap))
    divisor = 1 << (n - len(i) - 1)
    value, rem = divmod(size, divisor)
    if rem:
        raise ArithmeticError(
            f"|P({list(i)},{n})| = {size} is not divisible by 2^{n - len(i) - 1}"
        )
    return value


# ---------------------------------------------------------------------------
# Prefix-partitioned counting
# ---------------------------------------------------------------------------

Query = DescentClassQuery | PeakClassQuery


def _query_parts(query: Query) -> tuple[int, int, bool]:
    """(n, pattern mask, is_peak_query) for either query flavor."""
    if isinstance(query, DescentClassQuery):
        return query.n, positions_to_mask(query.descents), False
    if isinstance(query, PeakClassQuery):
        return query.n, positions_to_mask(query.peaks), True
    raise TypeError(f"unsupported query type: {type(query).__name__}")


def _count_tail(query: Query, prefix: Perm) -> int:
    """Count the completions of one committed prefix for ``query``."""
    n, mask, is_peak = _query_parts(query)
    remaining = tuple(v for v in range(1, n + 1) if v not in prefix)
    if is_peak:
        return _count_peak_completions(mask, prefix, remaining)
    return _count_descent_completions(mask, prefix, remaining)


def _prefixes(query: Query, depth: int) -> list[Perm]:
    """All pattern-consistent prefixes of the given length, in lex order."""
    n, mask, is_peak = _query_parts(query)
    out: list[Perm] = []

    def extend(prefix: Perm, remaining: tuple[int, ...]) -> None:
        if len(prefix) == depth:
            out.append(prefix)
            return
        for idx, v in enumerate(remaining):
            if is_peak:
                j = len(prefix) + 1
                if j >= 3:
                    peak_here = prefix[-2] < prefix[-1] > v
                    if peak_here != bool((mask >> (j - 1)) & 1):
                        continue
            else:
                pos = len(prefix)
                if pos and (prefix[-1] > v) != bool((mask >> pos) & 1):
                    continue
            extend(prefix + (v,), remaining[:idx] + remaining[idx + 1:])

    extend((), tuple(range(1, n + 1)))
    return out


def parallel_count(query: Query, partition_depth: int = 0, *,
                   workers: int | None = None, cap: int | None = None) -> int:
    """Exact class size via per-prefix counts that merge by addition.

    The search space is split by committing the first ``partition_depth``
    one-line entries; each committed prefix is counted independently.
    The result does not depend on the depth. With ``workers`` > 1 the
    prefixes are farmed out to a process pool.
    """
    n, _, is_peak = _query_parts(query)
    if not 0 <= partition_depth <= n:
        raise ValueError(f"partition depth must be in 0..{n}, got {partition_depth}")
    if n > resolve_cap(cap):
        raise CapExceeded(f"n={n} exceeds the enumeration cap {resolve_cap(cap)}")
    if is_peak and not is_admissible(query.peaks):
        return 0
    prefixes = _prefixes(query, partition_depth)
    if workers is not None and workers > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(prefixes) // (workers * 4))
            return sum(pool.map(_count_tail, itertools.repeat(query),
                                prefixes, chunksize=chunk))
    return sum(_count_tail(query, prefix) for prefix in prefixes)
