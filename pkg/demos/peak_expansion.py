"""Relate descent-class counts to peak-class counts.

The class of permutations with peak set exactly I has size divisible
by a power of two; the quotient p(I, n) is again a polynomial in n.
Summing p over the admissible subsets of the spike positions of S
recovers the descent count d(S, n), and inverting that relation over
the subset lattice expresses each p(I, n) through descent counts
alone, which keeps working at any n.
"""
import itertools

from peakpoly import (
    count_descent_class,
    descent_coeffs,
    descent_poly_via_peaks,
    is_admissible,
    peak_coeffs,
    peak_poly_value,
    peak_poly_via_moebius,
    spikes_of,
)

S = (2, 3)
N = 8


def main():
    spikes = spikes_of(S, N)
    print(f"descent set {set(S)} at n={N}: spikes {sorted(spikes)}")

    # d(S, n) splits into one scaled peak count per admissible subset
    # of the spikes.
    total = 0
    for r in range(len(spikes) + 1):
        for i_set in itertools.combinations(sorted(spikes), r):
            if not is_admissible(i_set):
                continue
            value = peak_poly_value(i_set, N)
            total += value
            print(f"  p({set(i_set) if i_set else '{}'}, {N}) = {value}")
    d = count_descent_class(S, N)
    print(f"  sum {total} = d({set(S)}, {N}) = {d}")
    assert total == d == descent_poly_via_peaks(S, N)

    # The same split at the level of coefficients: the four peak
    # polynomials sum to the descent polynomial.
    coeff_sum = [0] * 5
    for i_set in ((2, 4), (2,), (4,), ()):
        coeffs = peak_coeffs(i_set, 4).coeffs
        print(f"  peak coefficients for {set(i_set) if i_set else '{}'}:"
              f" {list(coeffs)}")
        coeff_sum = [a + b for a, b in zip(coeff_sum, coeffs)]
    print(f"  coefficient sum {coeff_sum}")
    assert tuple(coeff_sum) == descent_coeffs(S, 4).coeffs

    # Subset inversion reaches n far beyond anything enumerable.
    for n in (9, 20, 137):
        direct = peak_poly_via_moebius((2, 4), n)
        print(f"p({{2, 4}}, {n}) = {direct}")
        if n <= 9:
            assert direct == peak_poly_value((2, 4), n)


if __name__ == "__main__":
    main()
