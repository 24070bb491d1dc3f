import json

import pytest

from fencetiles.identities import (
    Mode,
    verify,
    verify_all,
    verify_identity_1,
    verify_identity_2,
    verify_identity_3,
    verify_identity_4,
    verify_identity_5,
    verify_identity_6,
    verify_identity_7,
)
from fencetiles.sequences import count_S, count_T, fib


def row_for(report, n):
    return next(r for r in report.rows if r.n == n)


class TestNumericIdentity1:
    def test_small_cases(self):
        report = verify_identity_1(3)
        assert row_for(report, 2).lhs == 1
        assert row_for(report, 2).rhs == 1
        assert row_for(report, 3).lhs == 4
        assert row_for(report, 3).rhs == 1 + 3 + 0

    def test_all_pass_to_50(self):
        assert verify_identity_1(50).all_pass

    def test_rejects_small_range(self):
        with pytest.raises(ValueError):
            verify_identity_1(1)


class TestNumericIdentity2:
    def test_n0(self):
        row = row_for(verify_identity_2(0), 0)
        assert row.lhs == fib(3) ** 2 - 1 == 3
        assert row.rhs == 3

    def test_all_pass_to_40(self):
        assert verify_identity_2(40).all_pass


class TestNumericIdentity3:
    def test_n0(self):
        row = row_for(verify_identity_3(0), 0)
        assert row.lhs == 1 and row.rhs == 1

    def test_n1(self):
        row = row_for(verify_identity_3(1), 1)
        assert row.lhs == 9
        assert row.rhs == 1 + 4 + 2 * (1 + 1)

    def test_all_pass_to_25(self):
        assert verify_identity_3(25).all_pass


class TestNumericIdentity4:
    def test_n1(self):
        row = row_for(verify_identity_4(1), 1)
        assert row.lhs == 1 and row.rhs == count_S(1) == 1

    def test_n2(self):
        row = row_for(verify_identity_4(2), 2)
        assert row.lhs == 4 and row.rhs == 3 + 1

    def test_all_pass_to_50(self):
        assert verify_identity_4(50).all_pass


class TestNumericIdentity5:
    def test_n2(self):
        row = row_for(verify_identity_5(2), 2)
        assert row.lhs == 4 and row.rhs == 3 + 1

    def test_n3(self):
        row = row_for(verify_identity_5(3), 3)
        assert row.lhs == 9 and row.rhs == 6 + 2 + 1

    def test_all_pass_to_50(self):
        assert verify_identity_5(50).all_pass


class TestNumericIdentity6:
    def test_n2(self):
        row = row_for(verify_identity_6(2), 2)
        assert row.lhs == 4 and row.rhs == count_T(2) + 3 * 1 * 1

    def test_n3(self):
        row = row_for(verify_identity_6(3), 3)
        assert row.lhs == 9 and row.rhs == 3 + 3 + 3

    def test_all_pass_to_40(self):
        assert verify_identity_6(40).all_pass


class TestNumericIdentity7:
    def test_n2(self):
        row = row_for(verify_identity_7(2), 2)
        assert row.lhs == 4 and row.rhs == 3 * 1 - 1 + 2

    def test_n3(self):
        row = row_for(verify_identity_7(3), 3)
        assert row.lhs == 9 and row.rhs == 3 * 4 - 1 - 2

    def test_all_pass_to_50_with_enumeration_accounting(self):
        report = verify_identity_7(50)
        assert report.all_pass
        assert all(r.bins_ok for r in report.rows)


class TestCombinatorialModes:
    def test_identity_2_bins_at_n0(self):
        report = verify_identity_2(0, combinatorial=True)
        assert report.mode is Mode.COMBINATORIAL
        # the 2-board has 3 fence-containing tilings, all in bin k=0
        assert row_for(report, 0).lhs == 3
        assert report.all_pass

    def test_identity_3_bins_small(self):
        assert verify_identity_3(3, combinatorial=True).all_pass

    def test_identity_4_n2_single_free_bifence_tiling(self):
        report = verify_identity_4(2, combinatorial=True)
        assert row_for(report, 2).lhs == 1  # only LLRR
        assert report.all_pass

    @pytest.mark.parametrize("ident", [2, 3, 4, 5, 6])
    def test_all_pass_within_oracle_range(self, ident):
        report = verify(ident, 10, combinatorial=True)
        assert report.mode is Mode.COMBINATORIAL
        assert report.all_pass

    def test_identity_3_is_capped_by_board_length(self):
        report = verify_identity_3(12, combinatorial=True)
        assert report.n_max == 6  # a 13-cell board is the longest scanned


class TestReportShape:
    def test_json_round_trip(self):
        report = verify_identity_1(5)
        data = json.loads(report.to_json())
        assert data["identity_id"] == 1
        assert data["mode"] == "numeric"
        assert data["all_pass"] is True
        assert data["rows"][0] == {"n": 2, "lhs": "1", "rhs": "1", "pass": True}
        # big integers survive as decimal text
        big = json.loads(verify_identity_1(120).to_json())
        assert big["rows"][-1]["lhs"] == str(fib(120) ** 2)

    def test_table_mentions_every_row(self):
        text = verify_identity_1(4).table()
        assert "identity 1" in text
        assert "n=2" in text and "n=4" in text
        assert text.endswith("all pass")

    def test_verify_all_runs_everything(self):
        reports = verify_all(8, combinatorial=True)
        assert len(reports) == 12  # 7 numeric + 5 combinatorial
        assert all(r.all_pass for r in reports)
