"""Permutations, signed permutations, and their descent/peak/valley statistics.

Conventions used throughout the package:

- A permutation of n is a tuple of the values 1..n in one-line notation.
- A signed permutation is a tuple of nonzero integers whose absolute
  values form a permutation of 1..n.
- Positions are 1-based: position i compares the values at i and i+1,
  so descent positions live in 1..n-1.
- Position sets are handled as sorted tuples of ints externally; the
  enumeration kernels use integer bitmasks (bit i <-> position i).
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
SignedPerm = tuple[int, ...]
Positions = tuple[int, ...]

#: Largest n the exhaustive generators touch unless a caller overrides it.
DEFAULT_CAP = 12

#: Hard ceiling for position bitmasks (and hence for any configured cap).
MAX_CAP = 63


class CapExceeded(ValueError):
    """An enumeration would exceed the configured size cap."""


def resolve_cap(cap: int | None) -> int:
    """Normalize a per-call cap override, enforcing the hard ceiling."""
    if cap is None:
        return DEFAULT_CAP
    if not 1 <= cap <= MAX_CAP:
        raise ValueError(f"cap must be in 1..{MAX_CAP}, got {cap}")
    return cap


# ---------------------------------------------------------------------------
# Validation and construction
# ---------------------------------------------------------------------------

def is_permutation(values: Sequence[int]) -> bool:
    """Check that ``values`` lists each of 1..n exactly once.

    >>> is_permutation((2, 4, 3, 1)), is_permutation((1, 1, 2)), is_permutation((0, 1))
    (True, False, False)
    """
    return sorted(values) == list(range(1, len(values) + 1))


def is_signed_permutation(values: Sequence[int]) -> bool:
    """Check that the absolute values of ``values`` form a permutation of 1..n.

    >>> is_signed_permutation((3, -1, 2)), is_signed_permutation((1, -1))
    (True, False)
    """
    return sorted(abs(v) for v in values) == list(range(1, len(values) + 1))


def as_permutation(values: Iterable[int]) -> Perm:
    """Validate and return ``values`` as a permutation tuple."""
    p = tuple(values)
    if not p:
        raise ValueError("a permutation must have length at least 1")
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def as_signed_permutation(values: Iterable[int]) -> SignedPerm:
    """Validate and return ``values`` as a signed permutation tuple."""
    p = tuple(values)
    if not p:
        raise ValueError("a signed permutation must have length at least 1")
    if not is_signed_permutation(p):
        raise ValueError(f"absolute values are not a permutation of 1..{len(p)}: {p}")
    return p


def position_set(positions: Iterable[int], n: int | None = None) -> Positions:
    """Normalize a collection of positions to a strictly increasing tuple.

    With ``n`` given, additionally require every position to lie in 1..n-1.
    """
    s = tuple(sorted(set(positions)))
    if s and s[0] < 1:
        raise ValueError(f"positions must be positive, got {s[0]}")
    if n is not None and s and s[-1] >= n:
        raise ValueError(f"position {s[-1]} out of range 1..{n - 1}")
    return s


def positions_to_mask(positions: Iterable[int]) -> int:
    """Pack positions into a bitmask (bit i set iff position i is a member)."""
    mask = 0
    for i in positions:
        if not 1 <= i <= MAX_CAP - 1:
            raise ValueError(f"position {i} outside the bitmask range 1..{MAX_CAP - 1}")
        mask |= 1 << i
    return mask


def mask_to_positions(mask: int) -> Positions:
    """Unpack a position bitmask into a sorted tuple."""
    if mask < 0:
        raise ValueError("mask must be nonnegative")
    out = []
    pos = 1
    m = mask >> 1
    while m:
        if m & 1:
            out.append(pos)
        m >>= 1
        pos += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# Permutation-level statistics
# ---------------------------------------------------------------------------

def descent_set(p: Sequence[int]) -> Positions:
    """Positions i with p_i > p_{i+1}; signed values compare as integers.

    >>> descent_set((2, 4, 3, 1, 5, 6, 7, 8))
    (2, 3)
    >>> descent_set((3, -1, 2))
    (1,)
    """
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def peak_set(p: Sequence[int]) -> Positions:
    """Interior positions strictly higher than both neighbors.

    >>> peak_set((3, 4, 2, 1, 5, 6, 7, 8))
    (2,)
    """
    return tuple(
        i for i in range(2, len(p)) if p[i - 2] < p[i - 1] > p[i]
    )


def valley_set(p: Sequence[int]) -> Positions:
    """Interior positions strictly lower than both neighbors.

    >>> valley_set((3, 4, 2, 1, 5, 6, 7, 8))
    (4,)
    """
    return tuple(
        i for i in range(2, len(p)) if p[i - 2] > p[i - 1] < p[i]
    )


def spike_set(p: Sequence[int]) -> Positions:
    """All interior local extrema: the union of peaks and valleys."""
    return tuple(
        i for i in range(2, len(p))
        if (p[i - 2] < p[i - 1]) != (p[i - 1] < p[i])
    )


def initial_set(p: Sequence[int], i: int) -> frozenset[int]:
    """The set of the first ``i`` values of ``p``.

    >>> sorted(initial_set((2, 4, 3, 1, 5, 6, 7, 8), 4))
    [1, 2, 3, 4]
    """
    if not 1 <= i <= len(p):
        raise ValueError(f"prefix length {i} out of range 1..{len(p)}")
    return frozenset(p[:i])


def initial_overlap_k(p: Sequence[int], m: int) -> int | None:
    """The k for which the first m values meet [m+1, 2m] in exactly [m+1, m+k].

    Returns None when the overlap is not such a leading interval.
    """
    overlap = initial_set(p, m) & frozenset(range(m + 1, 2 * m + 1))
    k = len(overlap)
    if overlap == frozenset(range(m + 1, m + k + 1)):
        return k
    return None


# ---------------------------------------------------------------------------
# Set-level statistics
# ---------------------------------------------------------------------------

def peaks_of(s: Iterable[int], n: int) -> Positions:
    """Peaks of a descent set: members of s in 2..n-1 not preceded by a member."""
    members = set(position_set(s, n))
    return tuple(sorted(i for i in members if i > 1 and i - 1 not in members))


def valleys_of(s: Iterable[int], n: int) -> Positions:
    """Valleys of a descent set: non-members in 2..n-1 preceded by a member."""
    members = set(position_set(s, n))
    return tuple(sorted(
        i for i in range(2, n) if i not in members and i - 1 in members
    ))


def spikes_of(s: Iterable[int], n: int) -> Positions:
    """Union of peaks and valleys of a descent set, sorted."""
    return tuple(sorted(peaks_of(s, n) + valleys_of(s, n)))


def is_admissible(s: Iterable[int]) -> bool:
    """True iff ``s`` could be a peak set: no position 1, no two consecutive.

    >>> is_admissible((2, 4)), is_admissible((2, 3)), is_admissible((1, 3))
    (True, False, False)
    """
    members = position_set(s)
    if members and members[0] < 2:
        return False
    return all(b - a > 1 for a, b in zip(members, members[1:]))


# ---------------------------------------------------------------------------
# Signed permutations
# ---------------------------------------------------------------------------

def markings(p: Sequence[int], cap: int | None = None) -> Iterator[SignedPerm]:
    """Yield all 2^n sign patterns applied to the values of ``p``.

    The all-positive pattern comes first, so ``p`` itself is the first
    item yielded. Raises CapExceeded for n above the enumeration cap.
    """
    n = len(p)
    if n > resolve_cap(cap):
        raise CapExceeded(
            f"marking a permutation of {n} would enumerate 2^{n} items; "
            f"cap is {resolve_cap(cap)}"
        )
    values = tuple(p)
    for signs in itertools.product((1, -1), repeat=n):
        yield tuple(s * v for s, v in zip(signs, values))
