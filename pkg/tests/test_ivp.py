import pytest

from morphic.complexity import FactorScanner
from morphic.ivp import (
    PREDICTED_OFFSETS,
    check_ivp,
    predicted_coded_ds_set,
    predicted_parikh_set,
    sigma3_stream,
    verify_coding_grid,
    verify_parikh_prediction,
)
from morphic.words import Coding, WordDomainError


class TestOffsetFamily:
    def test_cardinalities(self):
        assert [len(PREDICTED_OFFSETS[r]) for r in (0, 1, 2)] == [7, 6, 6]

    def test_offsets_sum_to_residue(self):
        for r, offsets in PREDICTED_OFFSETS.items():
            assert all(sum(o) == r for o in offsets)
            assert len(set(offsets)) == len(offsets)

    def test_prediction_object(self):
        p = predicted_parikh_set(10)
        assert (p.m, p.r, p.n) == (3, 1, 10)
        assert (4, 2, 4) in p.vectors()

    def test_needs_length_3(self):
        with pytest.raises(WordDomainError):
            predicted_parikh_set(2)

    def test_prediction_matches_scan(self, s3_scan):
        for n in (3, 4, 5, 17, 60):
            assert s3_scan.parikh_set(n) == predicted_parikh_set(n).vectors()

    def test_verify_parikh_prediction(self, s3_scan):
        rep = verify_parikh_prediction(3, 90, s3_scan)
        assert rep.passed and rep.tuples_checked == 88


class TestCodedSums:
    def test_identity_coding_has_no_gaps(self, s3):
        rep = check_ivp(s3, (0, 1, 2), 3, 60)
        assert rep.holds
        assert rep.failures == []

    def test_spread_coding_gap_structure(self, s3):
        rep = check_ivp(s3, (0, 1, 3), 3, 61)
        assert not rep.holds
        for n in range(3, 62):
            m, r = divmod(n, 3)
            if r == 0:
                assert n not in rep.gaps
            elif r == 1:
                assert rep.gaps[n] == [4 * m - 1]
            else:
                assert rep.gaps[n] == [4 * m + 5]

    def test_predicted_coded_sums_match_scan(self, s3):
        sc = FactorScanner(s3, Coding(s3.alphabet, (0, 1, 3)))
        for n in (3, 4, 5, 10, 33):
            assert sc.digit_sum_set(n) == predicted_coded_ds_set((0, 1, 3), n)

    def test_report_dict_shape(self, s3):
        d = check_ivp(s3, (0, 1, 3), 3, 7).to_dict()
        assert d["check"] == "ivp"
        assert d["coding"] == [0, 1, 3]
        assert d["gaps"] and d["failures"]

    def test_scanner_coding_mismatch_rejected(self, s3_scan):
        with pytest.raises(WordDomainError):
            check_ivp(s3_scan, (0, 1, 3), 3, 5)

    def test_range_validation(self, s3):
        with pytest.raises(WordDomainError):
            check_ivp(s3, (0, 1, 2), 5, 4)


class TestCodingGrid:
    def test_small_grid(self):
        rep = verify_coding_grid(45, 4)
        assert rep.passed
        assert rep.tuples_checked == 10 * 43
