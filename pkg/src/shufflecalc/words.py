"""Words, bar-words and the subset/connected-component combinatorics.

A word is a nonempty sequence of letters (interned names of random
variables).  A bar-word is a possibly empty sequence of words, written
``w1|w2|...|wk``; the empty bar-word is the unit of the bar-concatenation
product.  Index sets are 1-based positions into a word; positions, not
letter values, drive all extraction operations, so repeated letters are
handled correctly.

All values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainError


class Word:
    """A nonempty word over an alphabet of letter names (strings)."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise DomainError("a Word must contain at least one letter")
        for name in letters:
            if not isinstance(name, str) or not name or "." in name:
                raise DomainError(f"invalid letter name: {name!r}")
        self.letters = letters
        self._hash = hash(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Word") -> bool:
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __repr__(self) -> str:
        return f"Word({'.'.join(self.letters)})"

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def to_json(self) -> list:
        return list(self.letters)

    @classmethod
    def from_json(cls, obj: Sequence[str]) -> "Word":
        return cls(obj)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the dot-joined form used as JSON table keys, e.g. ``"a.b.a"``."""
        return cls(text.split("."))

    def dotted(self) -> str:
        return ".".join(self.letters)


class BarWord:
    """A bar-word ``w1|...|wk``; the empty sequence of factors is the unit."""

    __slots__ = ("factors", "_hash")

    def __init__(self, factors: Iterable[Word] = ()):
        factors = tuple(factors)
        for f in factors:
            if not isinstance(f, Word):
                raise DomainError("BarWord factors must be nonempty Words")
        self.factors = factors
        self._hash = hash(factors)

    @property
    def degree(self) -> int:
        return sum(len(f) for f in self.factors)

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def __eq__(self, other) -> bool:
        return isinstance(other, BarWord) and self.factors == other.factors

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "BarWord") -> bool:
        return self._key() < other._key()

    def _key(self):
        return (self.degree, len(self.factors), tuple(f.letters for f in self.factors))

    def __repr__(self) -> str:
        if not self.factors:
            return "BarWord(1)"
        return "BarWord(%s)" % "|".join(f.dotted() for f in self.factors)

    def concat(self, other: "BarWord") -> "BarWord":
        """Bar-concatenation; the identification ``w|1|w' = w|w'`` is automatic
        because unit factors cannot be constructed."""
        return BarWord(self.factors + other.factors)

    def to_json(self) -> list:
        return [f.to_json() for f in self.factors]

    @classmethod
    def from_json(cls, obj) -> "BarWord":
        return cls(Word.from_json(f) for f in obj)

    @classmethod
    def of(cls, word: Word) -> "BarWord":
        return cls((word,))


UNIT = BarWord()


def subword(w: Word, positions: Iterable[int]):
    """Extract the letters of ``w`` at the given 1-based positions.

    Positions must be strictly increasing and within bounds.  Returns a
    ``Word``; the empty position set returns the unit bar-word.
    """
    positions = tuple(positions)
    _check_positions(w, positions)
    if not positions:
        return UNIT
    return Word(w.letters[p - 1] for p in positions)


def complement_components(w: Word, S: Iterable[int], U: Iterable[int] | None = None) -> BarWord:
    """Split ``U - S`` into its connected components relative to ``U`` and
    render each component as a subword of ``w``.

    A component is a maximal run of elements of ``U - S`` with no element of
    ``U`` strictly between consecutive members.  ``U`` defaults to all
    positions of ``w``.  Returns the unit when ``U == S``.
    """
    S = tuple(S)
    U = tuple(range(1, len(w) + 1)) if U is None else tuple(U)
    _check_positions(w, U)
    _check_positions(w, S)
    uset = set(U)
    if not set(S) <= uset:
        raise DomainError(f"S={S} is not a subset of U={U}")
    sset = set(S)
    components: list[Word] = []
    run: list[str] = []
    for u in U:
        if u in sset:
            if run:
                components.append(Word(run))
                run = []
        else:
            run.append(w.letters[u - 1])
    if run:
        components.append(Word(run))
    return BarWord(components)


def _check_positions(w: Word, positions: Sequence[int]) -> None:
    prev = 0
    for p in positions:
        if not isinstance(p, int) or p < 1 or p > len(w):
            raise DomainError(f"position {p} out of range for word of length {len(w)}")
        if p <= prev:
            raise DomainError(f"positions must be strictly increasing, got {positions}")
        prev = p
