"""Walk through the basic statistics on a few concrete permutations.

Positions are 1-based throughout: a descent of p is a position i with
p(i) > p(i+1), and a peak (valley) is an interior position that is
larger (smaller) than both neighbours. Spikes collect peaks and
valleys together.
"""
from peakpoly import (
    descent_set,
    is_admissible,
    markings,
    peak_set,
    peaks_of,
    spike_set,
    spikes_of,
    valley_set,
)


def show(p):
    print(f"p = {p}")
    print(f"  descents  {sorted(descent_set(p))}")
    print(f"  peaks     {sorted(peak_set(p))}")
    print(f"  valleys   {sorted(valley_set(p))}")
    print(f"  spikes    {sorted(spike_set(p))}")


def main():
    show((2, 4, 3, 1, 5, 6, 7, 8))
    show((3, 4, 2, 1, 5, 6, 7, 8))

    # The same statistics make sense for signed entries; only relative
    # order matters, so (3, -1, 2) behaves like (3, 1, 2) shifted down.
    show((3, -1, 2))

    # A descent set determines peak and valley positions without looking
    # at any particular permutation: peaks start runs of descents,
    # valleys end them.
    s = (2, 3)
    print(f"descent set {set(s)} at n=8:"
          f" peaks {sorted(peaks_of(s, 8))},"
          f" spikes {sorted(spikes_of(s, 8))}")

    # Peak sets are constrained: position 1 can never be a peak and two
    # adjacent positions cannot both be peaks.
    for candidate in ((2, 4), (1, 3), (2, 3)):
        verdict = "admissible" if is_admissible(candidate) else "not admissible"
        print(f"candidate peak set {set(candidate)}: {verdict}")

    # Marking a permutation means choosing a sign for every value. All
    # four markings of (1, 2), with the unmarked one first:
    print(f"markings of (1, 2): {list(markings((1, 2)))}")


if __name__ == "__main__":
    main()
