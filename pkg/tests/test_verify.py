import itertools

import pytest

import peakpoly as pp


def test_report_requires_counterexample_on_failure():
    with pytest.raises(ValueError):
        pp.VerificationReport("claim", {}, passed=False)
    report = pp.VerificationReport("claim", {"n": 3}, passed=True, checked=6)
    data = report.to_json_dict()
    assert data["claim"] == "claim"
    assert data["passed"] is True
    assert data["checked"] == 6
    assert data["counterexample"] is None


def test_marked_lemma_small():
    for n in range(1, 6):
        report = pp.check_marked_lemma(n)
        assert report.passed, report.counterexample
        assert report.checked > 0
    with pytest.raises(ValueError):
        pp.check_marked_lemma(8)


def test_spike_sum():
    report = pp.check_spike_sum((2, 3), range(4, 9))
    assert report.passed, report.counterexample
    assert report.checked == 5
    report = pp.check_spike_sum((), range(1, 7))
    assert report.passed
    with pytest.raises(ValueError):
        pp.check_spike_sum((2,), [9])


def test_spike_sum_all_small_sets():
    for r in range(4):
        for s in itertools.combinations(range(1, 4), r):
            low = (max(s) if s else 0) + 1
            report = pp.check_spike_sum(s, range(low, 7))
            assert report.passed, report.counterexample


def test_flip_bijection():
    for j_sub in ((), (4,), (2,), (2, 4)):
        report = pp.check_flip_bijection((2, 4), j_sub, 7)
        assert report.passed, report.counterexample
    with pytest.raises(ValueError):
        pp.check_flip_bijection((2, 3), (), 7)
    with pytest.raises(ValueError):
        pp.check_flip_bijection((2, 4), (3,), 7)
    with pytest.raises(ValueError):
        pp.check_flip_bijection((2, 4), (), 12)


def test_flip_bijection_image_class_sizes():
    # The J={2,4} case maps onto the descent-free class, a single element.
    report = pp.check_flip_bijection((2, 4), (2, 4), 8)
    assert report.passed
    assert report.checked == 1


def test_flip_admission_table_structure():
    table = pp.flip_admission_table((2, 4), 4)
    assert table.spikes == (2, 4)
    assert table.center == 4
    assert tuple(len(b) for b in table.blocks) == (3, 8, 7, 2, 0)
    assert table.no_flip_counts() == (0, 4, 4, 1, 0)
    assert table.pattern_counts((4,)) == (2, 1, 0, 0, 0)
    assert table.pattern_counts((2,)) == (0, 3, 3, 1, 0)
    assert table.pattern_counts((2, 4)) == (1, 0, 0, 0, 0)
    data = table.to_json_dict()
    assert data["spike_set"] == [2, 4]
    assert data["blocks"][0]["rows"][0]["permutation"] == [1, 4, 3, 2, 5, 6, 7, 8]
    assert data["blocks"][0]["rows"][0]["admits"] == {"2": False, "4": True}


def test_flip_admission_table_validation():
    with pytest.raises(ValueError):
        pp.flip_admission_table((2, 3), 4)
    with pytest.raises(ValueError):
        pp.flip_admission_table((2, 4), 3)
    with pytest.raises(pp.CapExceeded):
        pp.flip_admission_table((2, 4), 7)


def test_flip_table_partition():
    for i_set in ((2,), (3,), (4,), (2, 4)):
        report = pp.check_flip_table_partition(i_set, max(i_set))
        assert report.passed, report.counterexample
