"""Binomial-basis polynomials for descent and peak class counting.

A polynomial with center m is stored as exact integer coefficients
c_0..c_m against the basis C(n-m, 0), ..., C(n-m, m). Coefficients are
extracted as cardinalities of explicit permutation sets, so everything
downstream is exact integer arithmetic; no floating point appears
anywhere in this module.
"""
from __future__ import annotations

import dataclasses
import itertools
import warnings
from typing import Iterable, Iterator

from .core import (
    CapExceeded,
    Perm,
    Positions,
    is_admissible,
    position_set,
    positions_to_mask,
    resolve_cap,
    spikes_of,
)
from .enumeration import (
    _descent_arrangements,
    count_descent_class,
    peak_poly_value,
)
from .flips import admits_flip, canonical_descent_set


def binomial(a: int, k: int) -> int:
    """C(a, k) for any integer a and k >= 0, via the negative-top identity.

    >>> binomial(4, 2), binomial(-1, 3), binomial(2, 5)
    (6, -1, 0)
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if a < 0:
        sign = -1 if k % 2 else 1
        a = k - a - 1
    else:
        sign = 1
    if k > a:
        return 0
    out = 1
    for t in range(1, k + 1):
        out = out * (a - t + 1) // t
    return sign * out


@dataclasses.dataclass(frozen=True)
class BinomialPolynomial:
    """Exact integer coefficients against the basis C(n-center, k)."""

    center: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.center < 0:
            raise ValueError("center must be nonnegative")
        if len(self.coeffs) != self.center + 1:
            raise ValueError(
                f"center {self.center} needs {self.center + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient (0 for the zero polynomial)."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return 0

    def evaluate(self, n: int) -> int:
        """Sum of c_k * C(n-center, k); exact for any integer n.

        Evaluating below the center is extrapolation and warns.
        """
        if n < self.center:
            warnings.warn(
                f"evaluating at n={n} below the basis center {self.center} "
                "extrapolates the polynomial",
                stacklevel=2,
            )
        x = n - self.center
        return sum(c * binomial(x, k) for k, c in enumerate(self.coeffs))

    __call__ = evaluate

    def recenter(self, new_center: int) -> BinomialPolynomial:
        """The same polynomial re-expressed against the basis at ``new_center``.

        Needs new_center at least the polynomial's degree, else the
        target basis cannot carry it.
        """
        if new_center < 0:
            raise ValueError("center must be nonnegative")
        if new_center < self.degree:
            raise ValueError(
                f"cannot recenter a degree-{self.degree} polynomial at {new_center}"
            )
        shift = new_center - self.center
        size = max(new_center, len(self.coeffs) - 1) + 1
        moved = [
            sum(self.coeffs[k] * binomial(shift, k - j)
                for k in range(j, len(self.coeffs)))
            for j in range(size)
        ]
        if any(moved[new_center + 1:]):
            raise ValueError(
                f"cannot recenter at {new_center}: higher basis terms survive"
            )
        return BinomialPolynomial(new_center, tuple(moved[: new_center + 1]))

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "basis": "binomial",
            "center": self.center,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> BinomialPolynomial:
        if data.get("basis") != "binomial":
            raise ValueError(f"unsupported basis: {data.get('basis')!r}")
        return cls(int(data["center"]), tuple(int(c) for c in data["coeffs"]))

    def csv_rows(self) -> list[tuple[int, int]]:
        return [(k, c) for k, c in enumerate(self.coeffs)]

    def pretty(self, variable: str = "n") -> str:
        x = f"{variable}-{self.center}" if self.center else variable
        return " + ".join(f"{c} C({x},{k})" for k, c in enumerate(self.coeffs))

    def latex(self, variable: str = "n") -> str:
        x = f"{variable}-{self.center}" if self.center else variable
        return "+".join(
            f"{c}{{{x} \\choose {k}}}" for k, c in enumerate(self.coeffs)
        )


# ---------------------------------------------------------------------------
# Coefficient extraction
# ---------------------------------------------------------------------------

def prefix_interval_class(s: Iterable[int], m: int, k: int) -> Iterator[Perm]:
    """Members of D(S,2m) whose first m values meet [m+1,2m] in exactly [m+1,m+k].

    Generates only candidates that satisfy the initial-set condition:
    the high half of the prefix is forced to [m+1, m+k], the low half is
    chosen from [m], and the tail must be increasing because no descent
    position past m is allowed. Yields in lexicographic order.
    """
    s = position_set(s)
    if s and s[-1] > m:
        raise ValueError(f"descent set reaches {s[-1]}, above the center {m}")
    if not 0 <= k <= m:
        raise ValueError(f"k must be in 0..{m}, got {k}")
    smask = positions_to_mask(s)
    boundary_descent = m in s
    found: list[Perm] = []
    high = tuple(range(m + 1, m + k + 1))
    for low in itertools.combinations(range(1, m + 1), m - k):
        values = tuple(sorted(low + high))
        tail = tuple(v for v in range(1, 2 * m + 1) if v not in values)
        for head in _descent_arrangements(smask, (), values):
            if (head[-1] > tail[0]) == boundary_descent:
                found.append(head + tail)
    found.sort()
    return iter(found)


def descent_coeffs(s: Iterable[int], m: int, *, cap: int | None = None) -> BinomialPolynomial:
    """Coefficients of the descent polynomial d(S,n) at center m.

    c_k counts the members of D(S,2m) whose first m values meet
    [m+1,2m] in exactly [m+1,m+k]. Requires m >= max(S).
    """
    s = position_set(s)
    if s and m < s[-1]:
        raise ValueError(f"center {m} is below max(S) = {s[-1]}")
    if 2 * m > resolve_cap(cap):
        raise CapExceeded(f"2m={2 * m} exceeds the enumeration cap {resolve_cap(cap)}")
    if m == 0:
        return BinomialPolynomial(0, (1,))
    counts = tuple(
        sum(1 for _ in prefix_interval_class(s, m, k)) for k in range(m + 1)
    )
    return BinomialPolynomial(m, counts)


def peak_coeffs(i_set: Iterable[int], m: int, *, cap: int | None = None) -> BinomialPolynomial:
    """Coefficients of the peak polynomial p(I,n) at center m.

    c_k counts the members of D(S_I,2m) that meet the initial-set
    condition for k and admit no flip at any spike. Every coefficient
    is a cardinality, hence nonnegative. Requires admissible I and
    m >= max(I).
    """
    i_set = position_set(i_set)
    if not is_admissible(i_set):
        raise ValueError(f"not an admissible peak set: {i_set}")
    if i_set and m < i_set[-1]:
        raise ValueError(f"center {m} is below max(I) = {i_set[-1]}")
    if 2 * m > resolve_cap(cap):
        raise CapExceeded(f"2m={2 * m} exceeds the enumeration cap {resolve_cap(cap)}")
    if m == 0:
        return BinomialPolynomial(0, (1,))
    s = canonical_descent_set(i_set)
    counts = []
    for k in range(m + 1):
        counts.append(sum(
            1 for sigma in prefix_interval_class(s, m, k)
            if not any(admits_flip(sigma, i).admits for i in i_set)
        ))
    return BinomialPolynomial(m, tuple(counts))


# ---------------------------------------------------------------------------
# Expansion and inversion
# ---------------------------------------------------------------------------

def descent_poly_via_peaks(s: Iterable[int], n: int, *, cap: int | None = None) -> int:
    """d(S,n) as the sum of p(I,n) over subsets I of the spikes of S.

    Non-admissible subsets contribute 0. Uses the enumerative peak
    counts, so n is subject to the cap.
    """
    s = position_set(s, n)
    spikes = spikes_of(s, n)
    total = 0
    for r in range(len(spikes) + 1):
        for subset in itertools.combinations(spikes, r):
            total += peak_poly_value(subset, n, cap=cap)
    return total


def peak_poly_via_moebius(i_set: Iterable[int], n: int) -> int:
    """p(I,n) as the alternating sum of d(S_J,n) over subsets J of I.

    Rides on the closed-form descent count, so it works far beyond the
    enumeration cap. Requires admissible I and n > max(I).
    """
    i_set = position_set(i_set)
    if not is_admissible(i_set):
        raise ValueError(f"not an admissible peak set: {i_set}")
    if i_set and i_set[-1] >= n:
        raise ValueError(f"peak position {i_set[-1]} needs n > {i_set[-1]}, got n={n}")
    total = 0
    for r in range(len(i_set) + 1):
        sign = -1 if (len(i_set) - r) % 2 else 1
        for subset in itertools.combinations(i_set, r):
            total += sign * count_descent_class(canonical_descent_set(subset), n)
    return total
