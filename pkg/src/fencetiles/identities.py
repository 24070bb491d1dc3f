"""Machine checks of the Fibonacci-squared identities.

Each identity has a numeric mode (exact integer evaluation of both sides)
and, where the proof is a conditioning argument over tilings, a
combinatorial mode that enumerates the boards, bins the tilings by the
conditioned feature (last fence, last half-square, last free bifence, ...)
and checks every bin against its predicted count, not just the totals.

Combinatorial mode is exhaustive, so it only runs where the enumerated
board is short enough (MAX_ORACLE_BOARD cells).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .core import decompose, enumerate_tilings, last_positions, metatile_encodings
from .sequences import count_A, count_C, count_S, count_T, fib

#: Longest board the combinatorial (exhaustive enumeration) mode will scan.
MAX_ORACLE_BOARD = 14

#: Default cap on n for combinatorial verification.
DEFAULT_ORACLE_N = 12


class Mode(Enum):
    NUMERIC = "numeric"
    COMBINATORIAL = "combinatorial"


@dataclass(frozen=True)
class IdentityRow:
    n: int
    lhs: int
    rhs: int
    bins_ok: bool = True

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and self.bins_ok


@dataclass(frozen=True)
class IdentityReport:
    identity_id: int
    n_min: int
    n_max: int
    mode: Mode
    rows: tuple[IdentityRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_json(self) -> str:
        return json.dumps(
            {
                "identity_id": self.identity_id,
                "n_min": self.n_min,
                "n_max": self.n_max,
                "mode": self.mode.value,
                "all_pass": self.all_pass,
                "rows": [
                    {
                        "n": r.n,
                        "lhs": str(r.lhs),
                        "rhs": str(r.rhs),
                        "pass": r.passed,
                    }
                    for r in self.rows
                ],
            }
        )

    def table(self) -> str:
        lines = [
            f"identity {self.identity_id} ({self.mode.value}), "
            f"n = {self.n_min}..{self.n_max}"
        ]
        for r in self.rows:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"  n={r.n:<3d} lhs={r.lhs} rhs={r.rhs} {status}")
        lines.append("  all pass" if self.all_pass else "  FAILED")
        return "\n".join(lines)


def _report(identity_id, n_values, mode, rows) -> IdentityReport:
    n_values = list(n_values)
    return IdentityReport(
        identity_id,
        min(n_values) if n_values else 0,
        max(n_values) if n_values else 0,
        mode,
        tuple(rows),
    )


def _partition_ok(bins: dict, encodings: dict, relevant: int) -> bool:
    """Bins must be pairwise disjoint and jointly cover the relevant set."""
    union = set().union(*encodings.values()) if encodings else set()
    return (
        sum(bins.values()) == relevant
        and sum(len(s) for s in encodings.values()) == relevant
        and len(union) == relevant
    )


def verify_identity_1(n_max: int) -> IdentityReport:
    """F_n^2 = F_{n-1}^2 + 3 F_{n-2}^2 + 2 sum_{i=3..n} F_{n-i}^2."""
    if n_max < 2:
        raise ValueError("identity 1 needs n_max >= 2")
    rows = []
    for n in range(2, n_max + 1):
        lhs = fib(n) ** 2
        rhs = (
            fib(n - 1) ** 2
            + 3 * fib(n - 2) ** 2
            + 2 * sum(fib(n - i) ** 2 for i in range(3, n + 1))
        )
        rows.append(IdentityRow(n, lhs, rhs))
    return _report(1, range(2, n_max + 1), Mode.NUMERIC, rows)


def _identity_2_combinatorial_row(n: int) -> IdentityRow:
    # Enumerate the (n+2)-board and bin everything but the all-h tiling by
    # the location of the last fence (its posts sit on cells k+1 and k+2).
    board = n + 2
    bins: dict[int, int] = {}
    encodings: dict[int, set[str]] = {}
    relevant = 0
    structure_ok = True
    for t in enumerate_tilings(board):
        lp = last_positions(t)
        if lp.last_fence_cell is None:
            continue  # the unique all-h tiling
        k = lp.last_fence_cell - 2
        q = t.encoding.rfind("R")
        if (q - 2) // 2 + 1 != k + 1:  # left post in the previous cell
            structure_ok = False
        if not 0 <= k <= n:
            structure_ok = False
        bins[k] = bins.get(k, 0) + 1
        encodings.setdefault(k, set()).add(t.encoding)
        relevant += 1
    expected = {
        k: 3 * count_A(k) + 2 * sum(count_A(i) for i in range(k))
        for k in range(n + 1)
    }
    bins_ok = (
        structure_ok
        and all(bins.get(k, 0) == expected[k] for k in expected)
        and set(bins) <= set(expected)
        and _partition_ok(bins, encodings, relevant)
        and relevant == count_A(board) - 1
    )
    return IdentityRow(n, relevant, sum(expected.values()), bins_ok)


def verify_identity_2(
    n_max: int, combinatorial: bool = False, oracle_n: int = DEFAULT_ORACLE_N
) -> IdentityReport:
    """F_{n+3}^2 - 1 = sum_{k=0..n} { 3 F_{k+1}^2 + 2 sum_{i=1..k} F_i^2 }."""
    if n_max < 0:
        raise ValueError("identity 2 needs n_max >= 0")
    if combinatorial:
        n_values = [
            n
            for n in range(min(n_max, oracle_n) + 1)
            if n + 2 <= MAX_ORACLE_BOARD
        ]
        rows = [_identity_2_combinatorial_row(n) for n in n_values]
        return _report(2, n_values, Mode.COMBINATORIAL, rows)
    rows = []
    for n in range(n_max + 1):
        lhs = fib(n + 3) ** 2 - 1
        rhs = sum(
            3 * fib(k + 1) ** 2 + 2 * sum(fib(i) ** 2 for i in range(1, k + 1))
            for k in range(n + 1)
        )
        rows.append(IdentityRow(n, lhs, rhs))
    return _report(2, range(n_max + 1), Mode.NUMERIC, rows)


def _identity_3_combinatorial_row(n: int) -> IdentityRow:
    # Bin the (2n+1)-board tilings by the odd cell 2k+1 holding the last h.
    board = 2 * n + 1
    bins: dict[int, int] = {}
    encodings: dict[int, set[str]] = {}
    relevant = 0
    structure_ok = True
    for t in enumerate_tilings(board):
        p = last_positions(t).last_h_halfcell
        if p is None:
            structure_ok = False  # an odd board must contain an h
            continue
        cell = p // 2 + 1
        if cell % 2 == 0:
            structure_ok = False
        k = (cell - 1) // 2
        if not 0 <= k <= n:
            structure_ok = False
        bins[k] = bins.get(k, 0) + 1
        encodings.setdefault(k, set()).add(t.encoding)
        relevant += 1
    expected = {0: count_A(0)}
    for k in range(1, n + 1):
        expected[k] = count_A(2 * k) + 2 * sum(count_A(i) for i in range(2 * k))
    bins_ok = (
        structure_ok
        and all(bins.get(k, 0) == expected[k] for k in expected)
        and set(bins) <= set(expected)
        and _partition_ok(bins, encodings, relevant)
        and relevant == count_A(board)
    )
    return IdentityRow(n, relevant, sum(expected.values()), bins_ok)


def verify_identity_3(
    n_max: int, combinatorial: bool = False, oracle_n: int = DEFAULT_ORACLE_N
) -> IdentityReport:
    """F_{2n+2}^2 = F_1^2 + sum_{k=1..n} { F_{2k+1}^2 + 2 sum_{i=1..2k} F_i^2 }."""
    if n_max < 0:
        raise ValueError("identity 3 needs n_max >= 0")
    if combinatorial:
        n_values = [
            n
            for n in range(min(n_max, oracle_n) + 1)
            if 2 * n + 1 <= MAX_ORACLE_BOARD
        ]
        rows = [_identity_3_combinatorial_row(n) for n in n_values]
        return _report(3, n_values, Mode.COMBINATORIAL, rows)
    rows = []
    for n in range(n_max + 1):
        lhs = fib(2 * n + 2) ** 2
        rhs = fib(1) ** 2 + sum(
            fib(2 * k + 1) ** 2 + 2 * sum(fib(i) ** 2 for i in range(1, 2 * k + 1))
            for k in range(1, n + 1)
        )
        rows.append(IdentityRow(n, lhs, rhs))
    return _report(3, range(n_max + 1), Mode.NUMERIC, rows)


def _identity_4_combinatorial_row(n: int) -> IdentityRow:
    # Bin tilings containing a free bifence by the end cell of the last one.
    bins: dict[int, int] = {}
    encodings: dict[int, set[str]] = {}
    relevant = 0
    for t in enumerate_tilings(n):
        free = [o for o in decompose(t) if o.metatile.encoding == "LLRR"]
        if not free:
            continue
        k = free[-1].end_cell
        bins[k] = bins.get(k, 0) + 1
        encodings.setdefault(k, set()).add(t.encoding)
        relevant += 1
    expected = {k: count_A(k - 2) * count_S(n - k) for k in range(2, n + 1)}
    bins_ok = (
        all(bins.get(k, 0) == expected[k] for k in expected)
        and set(bins) <= set(expected)
        and _partition_ok(bins, encodings, relevant)
        and relevant == count_A(n) - count_S(n)
    )
    return IdentityRow(n, relevant, sum(expected.values()), bins_ok)


def verify_identity_4(
    n_max: int, combinatorial: bool = False, oracle_n: int = DEFAULT_ORACLE_N
) -> IdentityReport:
    """F_{n+1}^2 = S_n + sum_{k=2..n} F_{k-1}^2 S_{n-k}."""
    if n_max < 0:
        raise ValueError("identity 4 needs n_max >= 0")
    if combinatorial:
        n_values = [
            n for n in range(min(n_max, oracle_n) + 1) if n <= MAX_ORACLE_BOARD
        ]
        rows = [_identity_4_combinatorial_row(n) for n in n_values]
        return _report(4, n_values, Mode.COMBINATORIAL, rows)
    rows = []
    for n in range(n_max + 1):
        lhs = fib(n + 1) ** 2
        rhs = count_S(n) + sum(
            fib(k - 1) ** 2 * count_S(n - k) for k in range(2, n + 1)
        )
        rows.append(IdentityRow(n, lhs, rhs))
    return _report(4, range(n_max + 1), Mode.NUMERIC, rows)


def _identity_5_combinatorial_row(n: int) -> IdentityRow:
    # Bin tilings containing a bifence by the end cell k and length l of the
    # last metatile containing one; check the metatile multiplicities too.
    bins: dict[tuple[int, int], int] = {}
    encodings: dict[tuple[int, int], set[str]] = {}
    seen_metatiles: dict[tuple[int, int], dict[str, int]] = {}
    relevant = 0
    for t in enumerate_tilings(n):
        with_bifence = [o for o in decompose(t) if o.metatile.contains_bifence]
        if not with_bifence:
            continue
        last = with_bifence[-1]
        key = (last.end_cell, last.metatile.length_cells)
        bins[key] = bins.get(key, 0) + 1
        encodings.setdefault(key, set()).add(t.encoding)
        per = seen_metatiles.setdefault(key, {})
        per[last.encoding] = per.get(last.encoding, 0) + 1
        relevant += 1
    expected: dict[tuple[int, int], int] = {}
    for k in range(2, n + 1):
        expected[(k, 2)] = count_A(k - 2) * count_C(n - k)
    for k in range(3, n + 1):
        for l in range(3, k + 1):
            expected[(k, l)] = (2 - (l == 3)) * count_A(k - l) * count_C(n - k)
    multiplicity_ok = True
    for (k, l), per in seen_metatiles.items():
        grammar = {e for e in metatile_encodings(l) if "LL" in e}
        if set(per) != grammar:
            multiplicity_ok = False
        share = count_A(k - l) * count_C(n - k)
        if any(count != share for count in per.values()):
            multiplicity_ok = False
    bins_ok = (
        multiplicity_ok
        and all(bins.get(key, 0) == expected[key] for key in expected)
        and set(bins) <= set(expected)
        and _partition_ok(bins, encodings, relevant)
        and relevant == count_A(n) - count_C(n)
    )
    return IdentityRow(n, relevant, sum(expected.values()), bins_ok)


def verify_identity_5(
    n_max: int, combinatorial: bool = False, oracle_n: int = DEFAULT_ORACLE_N
) -> IdentityReport:
    """F_{n+1}^2 = C_n + sum_k F_{k-1}^2 C_{n-k}
    + sum_k sum_{l=3..k} (2 - [l=3]) F_{k-l+1}^2 C_{n-k}."""
    if n_max < 0:
        raise ValueError("identity 5 needs n_max >= 0")
    if combinatorial:
        n_values = [
            n for n in range(min(n_max, oracle_n) + 1) if n <= MAX_ORACLE_BOARD
        ]
        rows = [_identity_5_combinatorial_row(n) for n in n_values]
        return _report(5, n_values, Mode.COMBINATORIAL, rows)
    rows = []
    for n in range(n_max + 1):
        lhs = fib(n + 1) ** 2
        rhs = count_C(n) + sum(
            fib(k - 1) ** 2 * count_C(n - k) for k in range(2, n + 1)
        )
        rhs += sum(
            (2 - (l == 3)) * fib(k - l + 1) ** 2 * count_C(n - k)
            for k in range(3, n + 1)
            for l in range(3, k + 1)
        )
        rows.append(IdentityRow(n, lhs, rhs))
    return _report(5, range(n_max + 1), Mode.NUMERIC, rows)


def _identity_6_combinatorial_row(n: int) -> IdentityRow:
    # Bin tilings containing an even-length metatile by the end cell k and
    # half-length j of the last one.
    bins: dict[tuple[int, int], int] = {}
    encodings: dict[tuple[int, int], set[str]] = {}
    seen_metatiles: dict[tuple[int, int], dict[str, int]] = {}
    relevant = 0
    for t in enumerate_tilings(n):
        even = [o for o in decompose(t) if o.metatile.length_cells % 2 == 0]
        if not even:
            continue
        last = even[-1]
        key = (last.end_cell, last.metatile.length_cells // 2)
        bins[key] = bins.get(key, 0) + 1
        encodings.setdefault(key, set()).add(t.encoding)
        per = seen_metatiles.setdefault(key, {})
        per[last.encoding] = per.get(last.encoding, 0) + 1
        relevant += 1
    expected: dict[tuple[int, int], int] = {}
    for k in range(2, n + 1):
        for j in range(1, k // 2 + 1):
            expected[(k, j)] = (
                (2 + (j == 1)) * count_A(k - 2 * j) * count_T(n - k)
            )
    multiplicity_ok = True
    for (k, j), per in seen_metatiles.items():
        if set(per) != set(metatile_encodings(2 * j)):
            multiplicity_ok = False
        share = count_A(k - 2 * j) * count_T(n - k)
        if any(count != share for count in per.values()):
            multiplicity_ok = False
    bins_ok = (
        multiplicity_ok
        and all(bins.get(key, 0) == expected[key] for key in expected)
        and set(bins) <= set(expected)
        and _partition_ok(bins, encodings, relevant)
        and relevant == count_A(n) - count_T(n)
    )
    return IdentityRow(n, relevant, sum(expected.values()), bins_ok)


def verify_identity_6(
    n_max: int, combinatorial: bool = False, oracle_n: int = DEFAULT_ORACLE_N
) -> IdentityReport:
    """F_{n+1}^2 = T_n + sum_k sum_j (2 + [j=1]) F_{k-2j+1}^2 T_{n-k}."""
    if n_max < 0:
        raise ValueError("identity 6 needs n_max >= 0")
    if combinatorial:
        n_values = [
            n for n in range(min(n_max, oracle_n) + 1) if n <= MAX_ORACLE_BOARD
        ]
        rows = [_identity_6_combinatorial_row(n) for n in n_values]
        return _report(6, n_values, Mode.COMBINATORIAL, rows)
    rows = []
    for n in range(n_max + 1):
        lhs = fib(n + 1) ** 2
        rhs = count_T(n) + sum(
            (2 + (j == 1)) * fib(k - 2 * j + 1) ** 2 * count_T(n - k)
            for k in range(2, n + 1)
            for j in range(1, k // 2 + 1)
        )
        rows.append(IdentityRow(n, lhs, rhs))
    return _report(6, range(n_max + 1), Mode.NUMERIC, rows)


def verify_identity_7(n_max: int, oracle_n: int = DEFAULT_ORACLE_N) -> IdentityReport:
    """F_{n+1}^2 = 3 F_n^2 - F_{n-1}^2 + 2 (-1)^n.

    For small n the accounting form A_n + A_{n-2} = 3 A_{n-1} + 2 (-1)^n is
    additionally checked against exhaustive enumeration counts.
    """
    if n_max < 1:
        raise ValueError("identity 7 needs n_max >= 1")
    enum_counts = {
        m: sum(1 for _ in enumerate_tilings(m))
        for m in range(min(n_max, oracle_n) + 1)
    }
    rows = []
    for n in range(1, n_max + 1):
        lhs = fib(n + 1) ** 2
        rhs = 3 * fib(n) ** 2 - fib(n - 1) ** 2 + 2 * (-1) ** n
        bins_ok = True
        if 2 <= n <= oracle_n:
            bins_ok = (
                enum_counts[n] + enum_counts[n - 2]
                == 3 * enum_counts[n - 1] + 2 * (-1) ** n
            )
        rows.append(IdentityRow(n, lhs, rhs, bins_ok))
    return _report(7, range(1, n_max + 1), Mode.NUMERIC, rows)


_VERIFIERS = {
    1: verify_identity_1,
    2: verify_identity_2,
    3: verify_identity_3,
    4: verify_identity_4,
    5: verify_identity_5,
    6: verify_identity_6,
    7: verify_identity_7,
}


def verify(
    identity_id: int, n_max: int, combinatorial: bool = False
) -> IdentityReport:
    """Run one identity verifier; combinatorial mode applies to 2..6."""
    fn = _VERIFIERS[identity_id]
    if identity_id in (2, 3, 4, 5, 6) and combinatorial:
        return fn(n_max, combinatorial=True)
    return fn(n_max)


def verify_all(n_max: int, combinatorial: bool = False) -> list[IdentityReport]:
    reports = [verify(i, n_max) for i in range(1, 8)]
    if combinatorial:
        reports.extend(verify(i, n_max, combinatorial=True) for i in range(2, 7))
    return reports
