"""Demonstrate the order-reversing flips and spike removal.

The flip fl_i reverses the relative order of the first i entries of a
permutation and leaves the rest alone. Flips are involutions and
commute with each other. Applied at (or just below) a spike they can
remove exactly that spike while leaving the others in place; when such
a flip exists the spike is said to admit it.
"""
from peakpoly import (
    canonical_descent_set,
    descent_set,
    fl,
    flip_profile,
    psi,
    psi_set,
    spike_set,
)

P = (2, 4, 3, 1, 5, 6, 7, 8)


def main():
    print(f"p = {P}, spikes {sorted(spike_set(P))}")

    # Flips at a few positions. Each is its own inverse.
    for i in (2, 4):
        q = fl(P, i)
        print(f"fl_{i}(p) = {q}, descents {sorted(descent_set(q))}")
        assert fl(q, i) == P

    # Which spikes admit a removing flip, and what the removal gives.
    for i, admission in sorted(flip_profile(P).items()):
        if admission.admits:
            image = psi(P, i)
            which = "plus" if admission.plus else "minus"
            print(f"spike {i}: admits the {which} flip, psi -> {image},"
                  f" spikes {sorted(spike_set(image))}")
        else:
            print(f"spike {i}: admits no flip")

    # Removing a well-separated set of spikes gives the same result in
    # any order.
    q = (5, 6, 3, 1, 2, 4, 8, 7, 9)
    removable = tuple(
        i for i, a in sorted(flip_profile(q).items()) if a.admits
    )
    print(f"q = {q}, removable spikes {removable}")
    gaps = tuple(i for i in removable if all(
        abs(i - j) > 1 for j in removable if j != i))
    if len(gaps) >= 2:
        print(f"psi over {gaps}: {psi_set(q, gaps)}")

    # Every admissible spike set I has one canonical descent set whose
    # classes carry spikes exactly at I.
    for i_set in ((2, 4), (2,), (4,), (3, 5)):
        s = canonical_descent_set(i_set)
        print(f"canonical descent set for spikes {set(i_set)}: {set(s)}")


if __name__ == "__main__":
    main()
