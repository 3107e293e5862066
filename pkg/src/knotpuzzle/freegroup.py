"""Words in the free group on two generators ``x`` and ``y``.

A puzzle arc running from the x-loop to the y-loop reads off a word in
``F(x, y)``.  Spiralling the arc around either loop at its endpoints changes
the word by ``u -> x**m * u * y**n``, so the homotopy class of the arc is the
class of the word under that relation.  The class has a canonical
representative, the *core*: strip the leading ``x`` syllable and the trailing
``y`` syllable of the reduced word.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from knotpuzzle.errors import ParseError

__all__ = [
    "Generator",
    "FreeWord",
    "X",
    "Y",
    "IDENTITY",
    "parse_word",
    "render_word",
    "reduce",
    "core",
    "equivalent",
    "is_homotopically_trivial",
]


class Generator(enum.Enum):
    X = "x"
    Y = "y"

    def __repr__(self) -> str:
        return self.name


X = Generator.X
Y = Generator.Y

Syllable = tuple[Generator, int]


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word stored as alternating ``(generator, exponent)`` syllables.

    Construct through :func:`reduce` or :func:`parse_word`; the constructor
    checks the reduced form but never rewrites it.
    """

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for gen, exp in self.syllables:
            if not isinstance(gen, Generator):
                raise TypeError(f"not a generator: {gen!r}")
            if exp == 0:
                raise ValueError("syllable with exponent 0")
            if gen is prev:
                raise ValueError("adjacent syllables share a generator; use reduce()")
            prev = gen

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return reduce(self.syllables + other.syllables)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def letters(self) -> list[Syllable]:
        """Expand to single-letter syllables, e.g. ``x^2 Y -> [(X,1),(X,1),(Y,-1)]``."""
        out: list[Syllable] = []
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            out.extend([(g, step)] * abs(e))
        return out

    def count(self, gen: Generator) -> int:
        return sum(abs(e) for g, e in self.syllables if g is gen)

    def __str__(self) -> str:
        return render_word(self)


IDENTITY = FreeWord()


def reduce(syllables: Iterable[Syllable]) -> FreeWord:
    """Free reduction of an arbitrary syllable list (zero exponents allowed)."""
    stack: list[list] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if stack and stack[-1][0] is gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return FreeWord(tuple((g, e) for g, e in stack))


def core(w: FreeWord) -> FreeWord:
    """Strip the maximal leading power of ``x`` and trailing power of ``y``."""
    s = w.syllables
    if s and s[0][0] is X:
        s = s[1:]
    if s and s[-1][0] is Y:
        s = s[:-1]
    return FreeWord(s)


def equivalent(u: FreeWord, v: FreeWord) -> bool:
    """Whether ``u = x**m * v * y**n`` for some integers ``m``, ``n``."""
    return core(u) == core(v)


def is_homotopically_trivial(w: FreeWord) -> bool:
    return core(w).is_identity()


_TOKEN_RE = re.compile(r"([xyXY])(?:\^([+-]?\d+))?")


def parse_word(text: str) -> FreeWord:
    """Read a word such as ``"y x^2 X"``; uppercase letters are inverses.

    Whitespace is ignored and ``"1"`` (or empty text) is the identity.
    """
    s = "".join(text.split())
    if s in ("", "1"):
        return IDENTITY
    raw: list[Syllable] = []
    pos = 0
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if not m:
            bad = s[pos]
            if bad == "^":
                raise ParseError(f"exponent without a generator at position {pos}")
            raise ParseError(f"unexpected character {bad!r} at position {pos}")
        letter, exp_text = m.groups()
        end = m.end()
        if end < len(s) and s[end] == "^":
            raise ParseError(f"malformed exponent after {m.group(0)!r}")
        exp = int(exp_text) if exp_text is not None else 1
        gen = Generator(letter.lower())
        raw.append((gen, -exp if letter.isupper() else exp))
        pos = end
    return reduce(raw)


def render_word(w: FreeWord) -> str:
    """Inverse of :func:`parse_word`; ``^k`` appears only for ``|k| > 1``."""
    if w.is_identity():
        return "1"
    parts = []
    for gen, exp in w.syllables:
        letter = gen.value if exp > 0 else gen.value.upper()
        parts.append(letter if abs(exp) == 1 else f"{letter}^{abs(exp)}")
    return "".join(parts)


def word(syllables: Sequence[Syllable]) -> FreeWord:
    """Shorthand used by tests and fixtures: reduce a literal syllable list."""
    return reduce(syllables)
