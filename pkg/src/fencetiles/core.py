"""Boards, tiles, tilings and metatiles on the half-cell grid.

An n-board is a 1 x n row of unit square cells, modelled here as 2n
half-cells indexed 0..2n-1.  Two tile types exist:

* the half-square, covering a single half-cell, and
* the fence, two half-width posts covering half-cells p and p+2 with an
  uncovered gap at p+1 (the gap is filled by some other tile).

A tiling is an exact cover of the half-cells.  Its canonical encoding is a
string of length 2n over {h, L, R}: ``h`` for a half-square, ``L``/``R`` for
a fence's left and right post.  The half-width gap makes pairing
deterministic: an ``L`` at p always pairs with the ``R`` at p+2.

A metatile is a minimal run of tiles covering a whole number of adjacent
cells; every tiling splits uniquely into metatiles at the integer cell
boundaries no fence spans.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable, Iterator, Optional

ALPHABET = frozenset("hLR")


class InvalidTilingError(ValueError):
    """Raised when an encoding or a placement set is not a valid tiling."""


class TileKind(Enum):
    HALF_SQUARE = "h"
    FENCE = "f"


class HalfSquareStatus(Enum):
    """A half-square is captured when it sits in the gap of a single fence."""

    CAPTURED = "captured"
    FREE = "free"


@dataclass(frozen=True)
class Board:
    """A 1 x n row of unit cells."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"board length must be non-negative, got {self.n}")

    @property
    def half_cells(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class TilePlacement:
    """One tile anchored at the half-cell index of its leftmost covered half-cell."""

    pos: int
    kind: TileKind

    def covered(self) -> tuple[int, ...]:
        if self.kind is TileKind.HALF_SQUARE:
            return (self.pos,)
        return (self.pos, self.pos + 2)


@dataclass(frozen=True)
class Tiling:
    """An exact cover of a board's half-cells, placements sorted by position."""

    board: Board
    placements: tuple[TilePlacement, ...]

    @cached_property
    def encoding(self) -> str:
        out = [""] * self.board.half_cells
        for p in self.placements:
            if p.kind is TileKind.HALF_SQUARE:
                out[p.pos] = "h"
            else:
                out[p.pos] = "L"
                out[p.pos + 2] = "R"
        return "".join(out)

    def __str__(self) -> str:
        return self.encoding

    @classmethod
    def from_encoding(cls, encoding: str) -> "Tiling":
        return validate(encoding)

    @classmethod
    def from_placements(cls, n: int, placements) -> "Tiling":
        """Build a tiling from placements, checking the exact-cover invariant."""
        board = Board(n)
        ordered = tuple(sorted(placements, key=lambda p: p.pos))
        seen: set[int] = set()
        for p in ordered:
            for c in p.covered():
                if not 0 <= c < board.half_cells:
                    raise InvalidTilingError(
                        f"half-cell {c} lies outside the {n}-board"
                    )
                if c in seen:
                    raise InvalidTilingError(f"half-cell {c} is covered twice")
                seen.add(c)
        if len(seen) != board.half_cells:
            missing = min(set(range(board.half_cells)) - seen)
            raise InvalidTilingError(f"half-cell {missing} is uncovered")
        return cls(board, ordered)


def validate(encoding: str) -> Tiling:
    """Parse a canonical encoding into a Tiling, rejecting anything invalid.

    The parse is deterministic: an L at p always pairs with the R at p+2.
    """
    if len(encoding) % 2:
        raise InvalidTilingError(f"encoding length {len(encoding)} is odd")
    unknown = set(encoding) - ALPHABET
    if unknown:
        raise InvalidTilingError(f"unknown symbols {sorted(unknown)!r}")
    n = len(encoding) // 2
    placements = []
    for p, c in enumerate(encoding):
        if c == "h":
            placements.append(TilePlacement(p, TileKind.HALF_SQUARE))
        elif c == "L":
            if p + 2 >= len(encoding):
                raise InvalidTilingError(f"fence at {p} overhangs the board end")
            if encoding[p + 2] != "R":
                raise InvalidTilingError(f"L at {p} has no matching R at {p + 2}")
            placements.append(TilePlacement(p, TileKind.FENCE))
        else:  # R
            if p < 2 or encoding[p - 2] != "L":
                raise InvalidTilingError(f"R at {p} has no matching L at {p - 2}")
    return Tiling(Board(n), tuple(placements))


def enumerate_tilings(
    n: int, tile_filter: Optional[Callable[[Tiling], bool]] = None
) -> Iterator[Tiling]:
    """Yield every tiling of an n-board once, in lexicographic encoding order.

    Depth-first placement at the lowest uncovered half-cell, branching on a
    fence with its left post there and then a half-square there ('L' < 'h',
    so the fence branch comes first).  Streaming: nothing is materialized.
    """
    board = Board(n)
    half = 2 * n
    slots = [False] * half
    placements: list[TilePlacement] = []

    def walk(p: int) -> Iterator[Tiling]:
        while p < half and slots[p]:
            p += 1
        if p == half:
            t = Tiling(board, tuple(placements))
            if tile_filter is None or tile_filter(t):
                yield t
            return
        if p + 2 < half and not slots[p + 2]:
            slots[p] = slots[p + 2] = True
            placements.append(TilePlacement(p, TileKind.FENCE))
            yield from walk(p + 1)
            placements.pop()
            slots[p] = slots[p + 2] = False
        slots[p] = True
        placements.append(TilePlacement(p, TileKind.HALF_SQUARE))
        yield from walk(p + 1)
        placements.pop()
        slots[p] = False

    yield from walk(0)


def count_tilings(
    n: int, tile_filter: Optional[Callable[[Tiling], bool]] = None
) -> int:
    return sum(1 for _ in enumerate_tilings(n, tile_filter))


@dataclass(frozen=True)
class Metatile:
    """A boundary-free tiling segment covering a whole number of cells."""

    encoding: str

    @property
    def length_cells(self) -> int:
        return len(self.encoding) // 2

    @property
    def contains_bifence(self) -> bool:
        # two interlocking fences show up exactly as adjacent left posts
        return "LL" in self.encoding


@dataclass(frozen=True)
class MetatileOccurrence:
    """A metatile at a position; identity is (start cell, encoding)."""

    start_cell: int  # 0-based cell index of the first covered cell
    metatile: Metatile

    @property
    def encoding(self) -> str:
        return self.metatile.encoding

    @property
    def end_cell(self) -> int:
        """1-based index of the last cell the metatile covers."""
        return self.start_cell + self.metatile.length_cells


def metatile_encodings(length_cells: int) -> tuple[str, ...]:
    """All metatile encodings of the given length in cells.

    One metatile of length 1 (hh), three of length 2 (the bifence LLRR and
    the mixed hLhR, LhRh), and exactly two of every length >= 3: a chain of
    interlocking bifences closed on each side by either a half-square or a
    filled fence, the two ends fixing the parity of the length.
    """
    if length_cells < 1:
        raise ValueError("metatile length must be positive")
    if length_cells == 1:
        return ("hh",)
    if length_cells == 2:
        return ("LLRR", "hLhR", "LhRh")
    if length_cells % 2:
        j = (length_cells - 1) // 2
        return ("h" + "LLRR" * j + "h", "LhR" + "LLRR" * (j - 1) + "LhR")
    j = (length_cells - 2) // 2
    return ("h" + "LLRR" * j + "LhR", "LhR" + "LLRR" * j + "h")


def is_metatile(encoding: str) -> bool:
    if len(encoding) < 2 or len(encoding) % 2:
        return False
    return encoding in metatile_encodings(len(encoding) // 2)


def decompose(t: Tiling) -> list[MetatileOccurrence]:
    """Split a tiling into its metatiles.

    A cut happens at every integer boundary 2k no fence spans; a fence spans
    the boundary exactly when its left post sits at 2k-2 or 2k-1.
    Concatenating the segment encodings recreates the tiling's encoding.
    """
    n = t.board.n
    if n == 0:
        return []
    enc = t.encoding
    cuts = [0]
    for k in range(1, n):
        if enc[2 * k - 2] != "L" and enc[2 * k - 1] != "L":
            cuts.append(2 * k)
    cuts.append(2 * n)
    return [
        MetatileOccurrence(a // 2, Metatile(enc[a:b]))
        for a, b in zip(cuts, cuts[1:])
    ]


def classify_h(t: Tiling, p: int) -> HalfSquareStatus:
    """Classify the half-square at half-cell p as captured or free."""
    enc = t.encoding
    if not 0 <= p < len(enc) or enc[p] != "h":
        raise ValueError(f"no half-square at half-cell {p}")
    if p >= 1 and enc[p - 1] == "L":
        # that L's right post is at p+1, so p is the fence's gap
        return HalfSquareStatus.CAPTURED
    return HalfSquareStatus.FREE


def is_free_bifence(occurrence: MetatileOccurrence) -> bool:
    """True when the segment is a bifence that is itself a metatile."""
    return occurrence.metatile.encoding == "LLRR"


@dataclass(frozen=True)
class LastPositions:
    """Rightmost landmarks of a tiling.

    last_fence_cell is the 1-based cell containing the right post of the
    last fence; last_h_halfcell is the half-cell index of the rightmost
    half-square.  Either is None when no such tile exists.
    """

    last_fence_cell: Optional[int]
    last_h_halfcell: Optional[int]


def last_positions(t: Tiling) -> LastPositions:
    enc = t.encoding
    q = enc.rfind("R")
    p = enc.rfind("h")
    return LastPositions(
        last_fence_cell=q // 2 + 1 if q >= 0 else None,
        last_h_halfcell=p if p >= 0 else None,
    )


def has_free_bifence(t: Tiling) -> bool:
    return any(is_free_bifence(o) for o in decompose(t))


def has_bifence(t: Tiling) -> bool:
    return "LL" in t.encoding


def has_even_metatile(t: Tiling) -> bool:
    return any(o.metatile.length_cells % 2 == 0 for o in decompose(t))
