"""Run the built-in consistency checks and print a small report.

Every check compares library output against an independent brute-force
reconstruction, so a PASS here means two unrelated computations agree
on every case in range.
"""
import itertools

from peakpoly import (
    check_flip_bijection,
    check_flip_table_partition,
    check_marked_lemma,
    check_spike_sum,
    flip_admission_table,
)


def show(report):
    mark = "ok " if report.passed else "FAIL"
    print(f"  [{mark}] {report.claim} {report.params}"
          f" ({report.checked} cases)")
    if not report.passed:
        print(f"        counterexample: {report.counterexample}")


def main():
    print("marked permutations: signed descent classes have size 2^n d(S, n)")
    for n in range(1, 6):
        show(check_marked_lemma(n))

    print("spike sums: d(S, n) equals its scaled peak-count expansion")
    for s in ((), (1,), (2, 3), (1, 3)):
        show(check_spike_sum(s, range((max(s) if s else 0) + 1, 8)))

    print("flip bijections: removing spikes maps descent classes onto each other")
    for j_sub in ((), (2,), (4,), (2, 4)):
        show(check_flip_bijection((2, 4), j_sub, 7))

    print("flip table partition: admission patterns refine the class counts")
    for i_set in ((2,), (4,), (2, 4)):
        show(check_flip_table_partition(i_set, max(i_set)))

    # The table behind the partition check, printed in full for the
    # smallest interesting case.
    table = flip_admission_table((2, 4), 4)
    print("flip admission table for spikes {2, 4} around center 4:")
    for k, block in enumerate(table.blocks):
        print(f"  k={k}: {len(block)} rows")
        for row in block:
            flags = ", ".join(
                f"{pos}:{'yes' if a else 'no'}"
                for pos, a in zip(table.spikes, row.admits))
            word = "".join(str(v) for v in row.permutation)
            print(f"    {word}  admits {flags}")


if __name__ == "__main__":
    main()
