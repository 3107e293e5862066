"""Braid words and their closures."""

from __future__ import annotations

from dataclasses import dataclass

from knotpuzzle.diagram.pd import PDCode
from knotpuzzle.diagram.planar import Diagram
from knotpuzzle.errors import ParseError, ValidationError

__all__ = ["BraidWord", "parse_braid", "braid_to_pd", "braid_permutation"]


@dataclass(frozen=True)
class BraidWord:
    """Generators ``(i, sign)`` with ``1 <= i < strand_count``; positive ``sigma_i`` is a
    right-handed crossing when strands run upward."""

    strand_count: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.strand_count < 1:
            raise ValidationError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple((int(i), int(e)) for i, e in self.letters))
        for i, e in self.letters:
            if not 1 <= i < self.strand_count:
                raise ValidationError(f"generator index {i} out of range for {self.strand_count} strands")
            if e not in (1, -1):
                raise ValidationError(f"generator sign must be +1 or -1, got {e}")

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Read ``"1 1 -2"`` style words (``i`` for sigma_i, ``-i`` for its inverse)."""
    letters = []
    for tok in text.replace(",", " ").split():
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"bad braid letter {tok!r}") from None
        if v == 0:
            raise ParseError("braid letter 0 is not a generator")
        letters.append((abs(v), 1 if v > 0 else -1))
    n = strands if strands is not None else max((i for i, _ in letters), default=0) + 1
    return BraidWord(n, tuple(letters))


def braid_permutation(b: BraidWord) -> list[int]:
    perm = list(range(b.strand_count))
    for i, _ in b.letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return perm


def braid_to_pd(b: BraidWord) -> PDCode:
    """PD code of the closure; untouched strands become free loops."""
    d = Diagram()
    first_in: list[tuple[int, int] | None] = [None] * b.strand_count
    last_out: list[tuple[int, int] | None] = [None] * b.strand_count
    for k, (i, e) in enumerate(b.letters):
        d.nbr[k] = [(-1, -1)] * 4
        # slots counterclockwise from the incoming under-strand
        if e > 0:
            se, ne, nw, sw = 0, 1, 2, 3
        else:
            sw, se, ne, nw = 0, 1, 2, 3
        left, right = i - 1, i
        for pos, slot in ((left, sw), (right, se)):
            if last_out[pos] is None:
                first_in[pos] = (k, slot)
            else:
                d._link(last_out[pos], (k, slot))
        last_out[left] = (k, nw)
        last_out[right] = (k, ne)
    d.next_id = len(b.letters)
    # close up each strand position top-to-bottom
    pending = {pos: (first_in[pos], last_out[pos]) for pos in range(b.strand_count)}
    for pos, (fin, lout) in pending.items():
        if lout is None:
            d.free_loops += 1
        else:
            d._link(lout, fin)
    return d.to_pd()
