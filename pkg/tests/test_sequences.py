import threading

import pytest

from fencetiles.core import (
    count_tilings,
    decompose,
    enumerate_tilings,
    has_bifence,
    has_even_metatile,
    has_free_bifence,
)
from fencetiles.sequences import (
    SequenceTable,
    a_via_sum_form,
    count_A,
    count_C,
    count_S,
    count_T,
    count_halfsquare_square,
    fib,
    metatile_census,
    s_via_sum_form,
    sequence_csv,
    sequence_jsonl,
    t_via_sum_form,
)


class TestFib:
    def test_base_cases(self):
        assert fib(0) == 0
        assert fib(1) == 1
        assert fib(2) == 1

    def test_fib_10(self):
        assert fib(10) == 55

    def test_negative_is_zero(self):
        assert fib(-3) == 0

    def test_unbounded_precision(self):
        assert fib(300) == fib(299) + fib(298)
        assert fib(300) > 10**60


class TestCountA:
    def test_initial_values(self):
        assert [count_A(n) for n in range(3)] == [1, 1, 4]

    def test_recurrence_step(self):
        assert count_A(3) == 2 * 4 + 2 * 1 - 1 == 9

    def test_a5(self):
        assert count_A(5) == 64

    @pytest.mark.parametrize("n", range(0, 201, 25))
    def test_equals_fib_squared(self, n):
        assert count_A(n) == fib(n + 1) ** 2

    def test_matches_sum_form_up_to_200(self):
        assert all(count_A(n) == a_via_sum_form(n) for n in range(201))


class TestCountS:
    def test_listed_prefix(self):
        assert [count_S(n) for n in range(10)] == [1, 1, 3, 7, 17, 41, 99, 239, 577, 1393]

    def test_s2(self):
        assert count_S(2) == 2 * 1 + 1

    def test_negative_index(self):
        assert count_S(-1) == 0

    def test_matches_sum_form_up_to_200(self):
        assert all(count_S(n) == s_via_sum_form(n) for n in range(201))


class TestCountC:
    def test_listed_prefix(self):
        assert [count_C(n) for n in range(10)] == [1, 1, 3, 6, 13, 28, 60, 129, 277, 595]

    def test_c3(self):
        assert count_C(3) == 3 + 2 * 1 + 1 == 6

    def test_negative_index(self):
        assert count_C(-2) == 0


class TestCountT:
    def test_listed_prefix(self):
        assert [count_T(n) for n in range(10)] == [1, 1, 1, 3, 5, 9, 17, 31, 57, 105]

    def test_t3(self):
        assert count_T(3) == 3

    def test_t6(self):
        assert count_T(6) == 17

    def test_matches_sum_form_up_to_200(self):
        assert all(count_T(n) == t_via_sum_form(n) for n in range(201))


class TestFilteredEnumerationOracle:
    """The recurrences must reproduce the exhaustive filtered counts."""

    @pytest.mark.parametrize("n", range(0, 13))
    def test_unrestricted_is_A(self, n):
        assert count_tilings(n) == count_A(n)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_no_free_bifence_is_S(self, n):
        assert count_tilings(n, lambda t: not has_free_bifence(t)) == count_S(n)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_no_bifence_is_C(self, n):
        assert count_tilings(n, lambda t: not has_bifence(t)) == count_C(n)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_no_bifence_means_only_four_metatiles(self, n):
        allowed = {"hh", "LhRh", "hLhR", "LhRLhR"}
        for t in enumerate_tilings(n, lambda t: not has_bifence(t)):
            assert {o.encoding for o in decompose(t)} <= allowed

    @pytest.mark.parametrize("n", range(0, 11))
    def test_odd_metatiles_only_is_T(self, n):
        assert count_tilings(n, lambda t: not has_even_metatile(t)) == count_T(n)


class TestMetatileCensus:
    def test_census_values(self):
        assert metatile_census(1) == 1
        assert metatile_census(2) == 3
        assert metatile_census(7) == 2

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            metatile_census(0)

    @pytest.mark.parametrize("l", range(1, 13))
    def test_census_matches_brute_force(self, l):
        boundary_free = sum(
            1 for t in enumerate_tilings(l) if len(decompose(t)) == 1
        )
        assert boundary_free == metatile_census(l)


class TestHalfSquareSquare:
    def test_small_boards(self):
        assert count_halfsquare_square(0) == 1
        assert count_halfsquare_square(1) == 2
        assert count_halfsquare_square(4) == 34

    @pytest.mark.parametrize("n", range(0, 9))
    def test_equals_odd_indexed_fibonacci(self, n):
        assert count_halfsquare_square(n) == fib(2 * n + 1)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            count_halfsquare_square(-1)


class TestExports:
    def test_csv(self):
        assert sequence_csv("A", 3) == "n,value\n0,1\n1,1\n2,4\n3,9\n"

    def test_jsonl_values_are_decimal_text(self):
        import json

        lines = sequence_jsonl("fib", 2).splitlines()
        records = [json.loads(line) for line in lines]
        assert records == [
            {"name": "fib", "n": 0, "value": "0"},
            {"name": "fib", "n": 1, "value": "1"},
            {"name": "fib", "n": 2, "value": "1"},
        ]


class TestSequenceTable:
    def test_values_prefix(self):
        table = SequenceTable("fib2", (0, 1), (1, 1))
        assert table.values(6) == [0, 1, 1, 2, 3, 5, 8]

    def test_concurrent_extension_is_consistent(self):
        table = SequenceTable("demo", (1, 1), (1, 1))
        results = []

        def worker():
            results.append(table.value(400))

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for th in threads:
            th.start()
        for th in threads:
            th.join()
        assert len(set(results)) == 1
        assert results[0] == table.value(399) + table.value(398)
