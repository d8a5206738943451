"""Brute-force cross-checks of the package's combinatorial identities.

Every check here recomputes its ground truth with naive scans that
deliberately share no code with the operations under test: descents and
spikes are re-derived from raw value comparisons, set-level spikes from
direction changes of the up-down word, and class sizes from exhaustive
(numpy-tallied) sweeps of the full symmetric or signed symmetric group.
A failing check reports the first counterexample in full.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Any, Iterable, Sequence

import numpy as np

from . import enumeration, flips, polynomials
from .core import Perm, Positions


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """Outcome of one claim check over one parameter choice."""

    claim: str
    params: dict[str, Any]
    passed: bool
    counterexample: dict[str, Any] | None = None
    checked: int = 0

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "params": self.params,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "checked": self.checked,
        }


# ---------------------------------------------------------------------------
# Local naive statistics (the oracle side; no shared code with core)
# ---------------------------------------------------------------------------

def _naive_descents(seq: Sequence[int]) -> Positions:
    out = []
    for i in range(len(seq) - 1):
        if seq[i] > seq[i + 1]:
            out.append(i + 1)
    return tuple(out)


def _naive_spikes(seq: Sequence[int]) -> Positions:
    out = []
    for i in range(1, len(seq) - 1):
        if seq[i - 1] < seq[i] > seq[i + 1] or seq[i - 1] > seq[i] < seq[i + 1]:
            out.append(i + 1)
    return tuple(out)


def _naive_peaks(seq: Sequence[int]) -> Positions:
    return tuple(
        i + 1 for i in range(1, len(seq) - 1)
        if seq[i - 1] < seq[i] > seq[i + 1]
    )


def _naive_set_spikes(s: Iterable[int], n: int) -> Positions:
    # Walk the up-down word: position i steps down iff i is a member.
    # Spikes are exactly the interior direction changes.
    members = set(s)
    out = []
    for i in range(2, n):
        if (i - 1 in members) != (i in members):
            out.append(i)
    return tuple(out)


def _naive_admissible(s: Iterable[int]) -> bool:
    s = sorted(s)
    return all(x >= 2 for x in s) and all(b - a >= 2 for a, b in zip(s, s[1:]))


def _naive_canonical_set(i_set: Sequence[int], n: int) -> Positions:
    """S_I by exhaustive search over subsets of [1, max(I)-1]; must be unique."""
    if not i_set:
        return ()
    top = max(i_set)
    hits = [
        cand
        for r in range(top)
        for cand in itertools.combinations(range(1, top), r)
        if _naive_set_spikes(cand, n) == tuple(i_set)
    ]
    if len(hits) != 1:
        raise AssertionError(f"expected a unique descent set for spikes {i_set}, found {hits}")
    return hits[0]


def _mask(positions: Iterable[int]) -> int:
    out = 0
    for i in positions:
        out |= 1 << i
    return out


@functools.lru_cache(maxsize=8)
def _perm_array(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int16)


@functools.lru_cache(maxsize=8)
def _signed_descent_histogram(n: int) -> np.ndarray:
    """Counts of signed permutations of n per descent-set bitmask."""
    perms = _perm_array(n)
    weights = (1 << np.arange(1, n)).astype(np.int64)
    counts = np.zeros(1 << n, dtype=np.int64)
    for signs in itertools.product((1, -1), repeat=n):
        signed = perms * np.array(signs, dtype=np.int16)
        bits = (signed[:, :-1] > signed[:, 1:]).astype(np.int64) @ weights
        counts += np.bincount(bits, minlength=1 << n)
    return counts


@functools.lru_cache(maxsize=8)
def _peak_class_histogram(n: int) -> np.ndarray:
    """Counts of plain permutations of n per peak-set bitmask."""
    perms = _perm_array(n)
    mid = perms[:, 1:-1]
    is_peak = (mid > perms[:, :-2]) & (mid > perms[:, 2:])
    weights = (1 << np.arange(2, n)).astype(np.int64)
    bits = is_peak.astype(np.int64) @ weights
    return np.bincount(bits, minlength=1 << n)


# ---------------------------------------------------------------------------
# Claim checks
# ---------------------------------------------------------------------------

def check_marked_lemma(n: int) -> VerificationReport:
    """All sign patterns of any permutation keep its peaks among their spikes,
    and each qualifying descent set is hit by exactly 2^(|I|+1) patterns.

    Exhausts the 2^n * n! signed permutations of n, so n is capped at 7.
    """
    if not 1 <= n <= 7:
        raise ValueError(f"n must be in 1..7, got {n}")
    params = {"n": n}
    checked = 0
    all_sets = [
        frozenset(c)
        for r in range(n)
        for c in itertools.combinations(range(1, n), r)
    ]
    for sigma in itertools.permutations(range(1, n + 1)):
        peaks = set(_naive_peaks(sigma))
        tallies: dict[Positions, int] = {}
        for signs in itertools.product((1, -1), repeat=n):
            rho = tuple(s * v for s, v in zip(signs, sigma))
            if not peaks <= set(_naive_spikes(rho)):
                return VerificationReport(
                    "marked-lemma", params, False,
                    {"sigma": sigma, "rho": rho, "peaks": sorted(peaks),
                     "rho_spikes": _naive_spikes(rho)})
            des = _naive_descents(rho)
            tallies[des] = tallies.get(des, 0) + 1
        expected = 1 << (len(peaks) + 1)
        for s in all_sets:
            qualifies = peaks <= set(_naive_set_spikes(s, n))
            got = tallies.get(tuple(sorted(s)), 0)
            want = expected if qualifies else 0
            if got != want:
                return VerificationReport(
                    "marked-lemma", params, False,
                    {"sigma": sigma, "descent_set": sorted(s),
                     "count": got, "expected": want})
            checked += 1
    return VerificationReport("marked-lemma", params, True, checked=checked)


def check_spike_sum(s: Iterable[int], n_range: Iterable[int]) -> VerificationReport:
    """Signed permutations with descent set S number 2^n * d(S,n), and d(S,n)
    equals the sum of exhaustively tallied peak-class counts, each scaled
    by its power of 2, over the admissible spike subsets of S.
    """
    s = tuple(sorted(set(s)))
    ns = sorted(n_range)
    params = {"s": list(s), "n_range": ns}
    checked = 0
    for n in ns:
        if not (s[-1] if s else 0) < n <= 8:
            raise ValueError(f"need max(S) < n <= 8, got S={list(s)}, n={n}")
        d = enumeration.count_descent_class(s, n)
        signed_count = int(_signed_descent_histogram(n)[_mask(s)])
        if signed_count != (1 << n) * d:
            return VerificationReport(
                "spike-sum", params, False,
                {"n": n, "signed_with_descent_set": signed_count,
                 "scaled_descent_count": (1 << n) * d})
        peak_hist = _peak_class_histogram(n)
        spikes = _naive_set_spikes(s, n)
        total = 0
        for r in range(len(spikes) + 1):
            for subset in itertools.combinations(spikes, r):
                if not _naive_admissible(subset):
                    continue
                size = int(peak_hist[_mask(subset)])
                divisor = 1 << (n - len(subset) - 1)
                if size % divisor:
                    return VerificationReport(
                        "spike-sum", params, False,
                        {"n": n, "subset": list(subset), "class_size": size,
                         "divisor": divisor})
                total += size // divisor
        if total != d:
            return VerificationReport(
                "spike-sum", params, False,
                {"n": n, "peak_expansion": total, "descent_count": d})
        checked += 1
    return VerificationReport("spike-sum", params, True, checked=checked)


def check_flip_bijection(i_set: Iterable[int], j_sub: Iterable[int],
                         n: int) -> VerificationReport:
    """Removing the spikes in J maps the J-flippable part of D(S_I,n)
    bijectively onto D(S_{I-J},n), preserving the initial-set condition.
    """
    i_set = tuple(sorted(set(i_set)))
    j_sub = tuple(sorted(set(j_sub)))
    if not _naive_admissible(i_set):
        raise ValueError(f"not an admissible peak set: {i_set}")
    if not set(j_sub) <= set(i_set):
        raise ValueError(f"{list(j_sub)} is not a subset of {list(i_set)}")
    if not (i_set[-1] if i_set else 0) < n <= 9:
        raise ValueError(f"need max(I) < n <= 9, got I={list(i_set)}, n={n}")
    params = {"i": list(i_set), "j": list(j_sub), "n": n}
    s_source = _naive_canonical_set(i_set, n)
    s_target = _naive_canonical_set(tuple(x for x in i_set if x not in j_sub), n)
    if s_source != flips.canonical_descent_set(i_set):
        return VerificationReport(
            "flip-bijection", params, False,
            {"naive_descent_set": s_source,
             "library_descent_set": flips.canonical_descent_set(i_set)})

    m = max(i_set) if i_set else 0

    def overlap_k(p: Perm) -> int | None:
        hit = set(p[:m]) & set(range(m + 1, 2 * m + 1))
        return len(hit) if hit == set(range(m + 1, m + 1 + len(hit))) else None

    domain = []
    target_size = 0
    for sigma in itertools.permutations(range(1, n + 1)):
        des = _naive_descents(sigma)
        if des == s_target:
            target_size += 1
        if des == s_source and all(flips.admits_flip(sigma, j).admits for j in j_sub):
            domain.append(sigma)

    images = set()
    for sigma in domain:
        image = flips.psi_set(sigma, j_sub)
        if _naive_descents(image) != s_target:
            return VerificationReport(
                "flip-bijection", params, False,
                {"sigma": sigma, "image": image,
                 "image_descents": _naive_descents(image),
                 "expected_descents": s_target})
        if image in images:
            return VerificationReport(
                "flip-bijection", params, False,
                {"duplicate_image": image, "sigma": sigma})
        images.add(image)
        if m and 2 * m <= n and overlap_k(sigma) != overlap_k(image):
            return VerificationReport(
                "flip-bijection", params, False,
                {"sigma": sigma, "image": image,
                 "sigma_k": overlap_k(sigma), "image_k": overlap_k(image)})
    if len(domain) != target_size:
        return VerificationReport(
            "flip-bijection", params, False,
            {"domain_size": len(domain), "target_class_size": target_size})
    return VerificationReport("flip-bijection", params, True, checked=len(domain))


# ---------------------------------------------------------------------------
# Flip-admission tables
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class FlipTableRow:
    permutation: Perm
    admits: tuple[bool, ...]  # aligned with the sorted spike set


@dataclasses.dataclass(frozen=True)
class FlipTable:
    spikes: Positions
    center: int
    blocks: tuple[tuple[FlipTableRow, ...], ...]  # indexed by k = 0..center

    def no_flip_counts(self) -> tuple[int, ...]:
        return tuple(
            sum(1 for row in block if not any(row.admits)) for block in self.blocks
        )

    def pattern_counts(self, admitted: Iterable[int]) -> tuple[int, ...]:
        """Per-k counts of rows admitting flips at exactly ``admitted``."""
        want = tuple(i in set(admitted) for i in self.spikes)
        return tuple(
            sum(1 for row in block if row.admits == want) for block in self.blocks
        )

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "spike_set": list(self.spikes),
            "center": self.center,
            "blocks": [
                {
                    "k": k,
                    "rows": [
                        {
                            "permutation": list(row.permutation),
                            "admits": {
                                str(i): flag
                                for i, flag in zip(self.spikes, row.admits)
                            },
                        }
                        for row in block
                    ],
                }
                for k, block in enumerate(self.blocks)
            ],
        }


def flip_admission_table(i_set: Iterable[int], m: int, *,
                         cap: int | None = None) -> FlipTable:
    """For each k, the members of D(S_I,2m) meeting the initial-set condition,
    each row carrying its per-spike flip admissions.

    The class is rebuilt here by naive full scan of the 2m-permutations;
    only the admission flags come from the flips module, since those are
    the quantity the table exists to exhibit.
    """
    i_set = tuple(sorted(set(i_set)))
    if not _naive_admissible(i_set):
        raise ValueError(f"not an admissible peak set: {i_set}")
    if m < (i_set[-1] if i_set else 0):
        raise ValueError(f"center {m} is below max(I)")
    from .core import resolve_cap

    if 2 * m > resolve_cap(cap):
        raise enumeration.CapExceeded(
            f"2m={2 * m} exceeds the enumeration cap {resolve_cap(cap)}")
    s_target = _naive_canonical_set(i_set, 2 * m) if i_set else ()
    blocks: list[list[FlipTableRow]] = [[] for _ in range(m + 1)]
    high = set(range(m + 1, 2 * m + 1))
    for sigma in itertools.permutations(range(1, 2 * m + 1)):
        if _naive_descents(sigma) != s_target:
            continue
        hit = set(sigma[:m]) & high
        k = len(hit)
        if hit != set(range(m + 1, m + 1 + k)):
            continue
        admits = tuple(flips.admits_flip(sigma, i).admits for i in i_set)
        blocks[k].append(FlipTableRow(sigma, admits))
    return FlipTable(i_set, m, tuple(tuple(sorted(b, key=lambda r: r.permutation))
                                     for b in blocks))


def check_flip_table_partition(i_set: Iterable[int], m: int) -> VerificationReport:
    """The admission patterns of the table partition each k-block so that
    rows admitting exactly the flips in I-J number the k-th coefficient
    of p(J,n), and whole blocks number the k-th coefficient of d(S_I,n).
    """
    i_set = tuple(sorted(set(i_set)))
    params = {"i": list(i_set), "m": m}
    table = flip_admission_table(i_set, m)
    a = polynomials.descent_coeffs(flips.canonical_descent_set(i_set), m)
    sizes = tuple(len(block) for block in table.blocks)
    if sizes != a.coeffs:
        return VerificationReport(
            "flip-table", params, False,
            {"block_sizes": sizes, "descent_coeffs": a.coeffs})
    checked = len(table.blocks)
    for r in range(len(i_set) + 1):
        for j_sub in itertools.combinations(i_set, r):
            b = polynomials.peak_coeffs(j_sub, m)
            admitted = tuple(x for x in i_set if x not in j_sub)
            pattern = table.pattern_counts(admitted)
            if pattern != b.coeffs:
                return VerificationReport(
                    "flip-table", params, False,
                    {"j": list(j_sub), "pattern_counts": pattern,
                     "peak_coeffs": b.coeffs})
            checked += len(table.blocks)
    return VerificationReport("flip-table", params, True, checked=checked)
