"""Prefix-flip involutions, spike-removal maps, and canonical descent sets.

The flip at i reverses the relative order of the first i values inside
their own value set and leaves everything past i untouched. A spike at
i can sometimes be straightened out by flipping at i or at i-1; the
spike-removal map ``psi`` picks whichever of the two works.
"""
from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence

from .core import (
    Perm,
    Positions,
    is_admissible,
    position_set,
    spike_set,
    spikes_of,
)


def fl(p: Sequence[int], i: int) -> Perm:
    """Reverse the relative order of the first i values of ``p``.

    The value ranked k among the first i becomes the value ranked
    i-k+1; positions past i are untouched. Applying fl twice at the
    same i restores ``p``.

    >>> fl((2, 4, 3, 1, 5, 6, 7, 8), 2)
    (4, 2, 3, 1, 5, 6, 7, 8)
    >>> fl((2, 4, 3, 1, 5, 6, 7, 8), 4)
    (3, 1, 2, 4, 5, 6, 7, 8)
    """
    n = len(p)
    if not 1 <= i <= n:
        raise ValueError(f"flip index {i} out of range 1..{n}")
    prefix = tuple(p[:i])
    ranked = sorted(prefix)
    rank = {v: r for r, v in enumerate(ranked)}
    return tuple(ranked[i - 1 - rank[v]] for v in prefix) + tuple(p[i:])


@dataclasses.dataclass(frozen=True)
class FlipAdmission:
    """Whether a spike can be removed by flipping at i (plus) or i-1 (minus)."""

    plus: bool
    minus: bool

    @property
    def admits(self) -> bool:
        return self.plus or self.minus


def admits_flip(p: Sequence[int], i: int) -> FlipAdmission:
    """Admission record for the spike of ``p`` at position i.

    The plus flip is admitted when flipping at i leaves every spike
    except i in place; the minus flip likewise for flipping at i-1.
    Requires i to be a spike of ``p``.
    """
    spikes = spike_set(p)
    if i not in spikes:
        raise ValueError(f"position {i} is not a spike of {p}")
    target = tuple(s for s in spikes if s != i)
    plus = spike_set(fl(p, i)) == target
    minus = spike_set(fl(p, i - 1)) == target
    return FlipAdmission(plus, minus)


def flip_profile(p: Sequence[int]) -> dict[int, FlipAdmission]:
    """Admission records for every spike of ``p``, keyed by position."""
    return {i: admits_flip(p, i) for i in spike_set(p)}


def psi(p: Sequence[int], i: int) -> Perm:
    """Remove the spike at i by the admitted flip (at i, else at i-1).

    The result has spike set equal to that of ``p`` minus {i}. Raises
    if neither flip is admitted.
    """
    adm = admits_flip(p, i)
    if adm.plus:
        return fl(p, i)
    if adm.minus:
        return fl(p, i - 1)
    raise ValueError(f"{tuple(p)} admits no {i}-flip")


def psi_set(p: Sequence[int], positions: Iterable[int]) -> Perm:
    """Remove all spikes in ``positions``, one ``psi`` per position.

    The positions must be spikes of ``p``, pairwise more than 1 apart,
    and every one of them must admit a flip. Flips are applied from the
    rightmost position down; with assertions enabled the left-to-right
    order is recomputed and must agree.
    """
    js = position_set(positions)
    if any(b - a <= 1 for a, b in zip(js, js[1:])):
        raise ValueError(f"flip positions must be more than 1 apart: {js}")
    spikes = set(spike_set(p))
    if not set(js) <= spikes:
        raise ValueError(f"{sorted(set(js) - spikes)} are not spikes of {tuple(p)}")
    result = tuple(p)
    for j in reversed(js):
        result = psi(result, j)
    if __debug__ and len(js) > 1:
        check = tuple(p)
        for j in js:
            check = psi(check, j)
        assert check == result, "flip application order changed the result"
    return result


def canonical_descent_set(i_set: Iterable[int]) -> Positions:
    """The unique descent set whose spike set is ``i_set``, rightmost spike a valley.

    Listing I = {i_1 < ... < i_k}, the member i_j is a peak exactly when
    k-j is odd. The descent set is then the union of the ramp [1, i_1-1]
    when i_1 is a valley and, for each peak i_j, the run [i_j, i_{j+1}-1]
    down to the following valley.

    >>> canonical_descent_set((2, 4))
    (2, 3)
    >>> canonical_descent_set((2,)), canonical_descent_set((4,))
    ((1,), (1, 2, 3))
    """
    spikes = position_set(i_set)
    if not is_admissible(spikes):
        raise ValueError(f"not an admissible peak set: {spikes}")
    if not spikes:
        return ()
    k = len(spikes)
    members: list[int] = []
    if (k - 1) % 2 == 0:  # leftmost spike is a valley: descend into it from position 1
        members.extend(range(1, spikes[0]))
    for j, pos in enumerate(spikes, start=1):
        if (k - j) % 2 == 1:  # peak: descend until the next spike, a valley
            members.extend(range(pos, spikes[j]))
    out = tuple(members)
    assert spikes_of(out, spikes[-1] + 1) == spikes, "construction lost its spike set"
    return out
