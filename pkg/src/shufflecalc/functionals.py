"""Linear forms on the word Hopf algebra with exact rational values.

A ``Functional`` is a node in an immutable expression tree (unit, character,
infinitesimal character, sums, convolution, half-shuffles, pre-Lie product,
convolution inverse).  Evaluation on a bar-word is exact and memoized per
node; the same table reused under different operations lives in different
nodes and therefore different caches.

Unit rules for the half-shuffles follow the convention that both
half-products vanish on the unit bar-word, so the splitting
``f*g = f<g + f>g`` is asserted on nonunit bar-words only.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator

from . import coalgebra
from .errors import DomainError, TruncationError
from .words import UNIT, BarWord, Word

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_scalar(obj) -> Fraction:
    """Accept ``"p/q"`` strings, plain integer strings, and ints."""
    if isinstance(obj, bool):
        raise DomainError(f"not a scalar: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"malformed scalar {obj!r}") from exc
    raise DomainError(f"not a scalar: {obj!r}")


def format_scalar(q: Fraction) -> str:
    return str(q)


def words_over(alphabet: Iterable[str], length: int) -> Iterator[Word]:
    for combo in itertools.product(sorted(alphabet), repeat=length):
        yield Word(combo)


def words_up_to(alphabet: Iterable[str], max_len: int) -> Iterator[Word]:
    alphabet = sorted(alphabet)
    for n in range(1, max_len + 1):
        yield from words_over(alphabet, n)


def barwords_up_to(alphabet: Iterable[str], max_degree: int) -> Iterator[BarWord]:
    """All bar-words of degree 1..max_degree, unit excluded."""
    alphabet = sorted(alphabet)
    for n in range(1, max_degree + 1):
        for comp in _compositions(n):
            factor_choices = [list(words_over(alphabet, k)) for k in comp]
            for factors in itertools.product(*factor_choices):
                yield BarWord(factors)


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


class ValueTable:
    """A total mapping Word -> Scalar for all words of length <= max_len.

    JSON form: ``{"alphabet": ["a","b"], "max_len": N,
    "values": {"a": "1/2", "a.b": "-2/3", ...}}``
    with words as dot-joined letter names and scalars as ``"p/q"`` strings
    (plain integers are also accepted on input).
    """

    def __init__(self, alphabet: Iterable[str], max_len: int, values: dict[Word, Fraction]):
        self.alphabet = tuple(sorted(set(alphabet)))
        if not self.alphabet:
            raise DomainError("alphabet must be nonempty")
        if max_len < 1:
            raise DomainError("max_len must be >= 1")
        self.max_len = max_len
        self.values = dict(values)
        for w in words_up_to(self.alphabet, max_len):
            if w not in self.values:
                raise DomainError(f"table is missing a value for {w.dotted()!r}")
        size = sum(len(self.alphabet) ** n for n in range(1, max_len + 1))
        if len(self.values) != size:
            extra = set(self.values) - set(words_up_to(self.alphabet, max_len))
            raise DomainError(f"table has out-of-domain entries: {sorted(extra)[:3]}")

    def lookup(self, w: Word) -> Fraction:
        try:
            return self.values[w]
        except KeyError:
            raise TruncationError(
                f"word {w.dotted()!r} exceeds the table domain "
                f"(alphabet {self.alphabet}, max_len {self.max_len})"
            ) from None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ValueTable)
            and self.alphabet == other.alphabet
            and self.max_len == other.max_len
            and self.values == other.values
        )

    def __add__(self, other: "ValueTable"):
        self._check_compatible(other)
        values = {w: v + other.values[w] for w, v in self.values.items()}
        return type(self)(self.alphabet, self.max_len, values)

    def __neg__(self):
        return type(self)(self.alphabet, self.max_len, {w: -v for w, v in self.values.items()})

    def _check_compatible(self, other: "ValueTable") -> None:
        if self.alphabet != other.alphabet or self.max_len != other.max_len:
            raise DomainError(
                f"incompatible tables: alphabet/max_len "
                f"({self.alphabet}, {self.max_len}) vs ({other.alphabet}, {other.max_len})"
            )

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "max_len": self.max_len,
            "values": {w.dotted(): format_scalar(v) for w, v in sorted(self.values.items())},
        }

    @classmethod
    def from_json(cls, obj) -> "ValueTable":
        try:
            alphabet = obj["alphabet"]
            max_len = obj["max_len"]
            raw = obj["values"]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed table JSON: {exc}") from exc
        values = {Word.parse(k): parse_scalar(v) for k, v in raw.items()}
        return cls(alphabet, max_len, values)

    @classmethod
    def zeros(cls, alphabet: Iterable[str], max_len: int) -> "ValueTable":
        return cls(alphabet, max_len, {w: ZERO for w in words_up_to(alphabet, max_len)})

    @classmethod
    def random(cls, alphabet: Iterable[str], max_len: int, rng) -> "ValueTable":
        """Seeded random rational values: numerators in [-9, 9], denominators
        in [1, 9]."""
        values = {
            w: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            for w in words_up_to(alphabet, max_len)
        }
        return cls(alphabet, max_len, values)


class MomentTable(ValueTable):
    """Word values of a state; extends multiplicatively to a character."""


class CumulantTable(ValueTable):
    """Word values of an infinitesimal character (a cumulant functional)."""


class Functional:
    """Base class: a lazily evaluated linear form on bar-words."""

    def __init__(self):
        self._memo: dict[BarWord, Fraction] = {}

    def __call__(self, b: BarWord) -> Fraction:
        memo = self._memo
        try:
            return memo[b]
        except KeyError:
            value = self._compute(b)
            memo[b] = value
            return value

    def _compute(self, b: BarWord) -> Fraction:
        raise NotImplementedError

    # Linear structure.  `*` between functionals is convolution; with a
    # scalar it rescales.
    def __add__(self, other: "Functional") -> "Functional":
        return _Sum(((ONE, self), (ONE, other)))

    def __sub__(self, other: "Functional") -> "Functional":
        return _Sum(((ONE, self), (-ONE, other)))

    def __neg__(self) -> "Functional":
        return _Sum(((-ONE, self),))

    def __mul__(self, other):
        if isinstance(other, Functional):
            return conv(self, other)
        return _Sum(((Fraction(other), self),))

    def __rmul__(self, other):
        return _Sum(((Fraction(other), self),))


class _Unit(Functional):
    """The counit e: 1 on the unit bar-word, 0 elsewhere."""

    def _compute(self, b: BarWord) -> Fraction:
        return ONE if b.is_unit else ZERO


class _Zero(Functional):
    def _compute(self, b: BarWord) -> Fraction:
        return ZERO


class CharacterFunctional(Functional):
    """Multiplicative extension of a moment table: the product of the table
    values of the factors; 1 on the unit."""

    def __init__(self, table: MomentTable):
        super().__init__()
        self.table = table

    def _compute(self, b: BarWord) -> Fraction:
        value = ONE
        for factor in b.factors:
            value *= self.table.lookup(factor)
        return value


class InfinitesimalFunctional(Functional):
    """Extension of a cumulant table: vanishes on the unit and on bar-words
    of two or more factors."""

    def __init__(self, table: CumulantTable):
        super().__init__()
        self.table = table

    def _compute(self, b: BarWord) -> Fraction:
        if len(b.factors) != 1:
            return ZERO
        return self.table.lookup(b.factors[0])


class _Sum(Functional):
    def __init__(self, parts: Iterable[tuple[Fraction, Functional]]):
        super().__init__()
        flat: list[tuple[Fraction, Functional]] = []
        for coeff, f in parts:
            if isinstance(f, _Sum):
                flat.extend((coeff * c, g) for c, g in f.parts)
            else:
                flat.append((coeff, f))
        self.parts = tuple(flat)

    def _compute(self, b: BarWord) -> Fraction:
        return sum((c * f(b) for c, f in self.parts), ZERO)


class _Convolution(Functional):
    def __init__(self, f: Functional, g: Functional):
        super().__init__()
        self.f = f
        self.g = g

    def _compute(self, b: BarWord) -> Fraction:
        f, g = self.f, self.g
        total = ZERO
        for left, right, coeff in coalgebra.coproduct(b).items():
            total += coeff * f(left) * g(right)
        return total


class _HalfProduct(Functional):
    def __init__(self, f: Functional, g: Functional, left: bool):
        super().__init__()
        self.f = f
        self.g = g
        self.left = left

    def _compute(self, b: BarWord) -> Fraction:
        if b.is_unit:
            return ZERO
        split = coalgebra.half_coproduct_left if self.left else coalgebra.half_coproduct_right
        f, g = self.f, self.g
        total = ZERO
        for l, r, coeff in split(b).items():
            total += coeff * f(l) * g(r)
        return total


class _Inverse(Functional):
    """Convolution inverse via the truncated geometric (Neumann) series
    ``sum_n (-1)^n (f - e)^{*n}``; evaluation on a bar-word of degree d only
    needs the powers up to d."""

    def __init__(self, f: Functional):
        super().__init__()
        if f(UNIT) != ONE:
            raise DomainError("only functionals with value 1 on the unit are invertible")
        self.f = f
        self._augmented = f - unit()
        self._powers: list[Functional] = [unit()]

    def _compute(self, b: BarWord) -> Fraction:
        n = b.degree
        powers = self._powers
        while len(powers) <= n:
            powers.append(_Convolution(powers[-1], self._augmented))
        total = ZERO
        sign = 1
        for j in range(n + 1):
            total += sign * powers[j](b)
            sign = -sign
        return total


_UNIT_FUNCTIONAL = _Unit()
_ZERO_FUNCTIONAL = _Zero()


def unit() -> Functional:
    return _UNIT_FUNCTIONAL


def zero() -> Functional:
    return _ZERO_FUNCTIONAL


def character(table: MomentTable) -> Functional:
    return CharacterFunctional(table)


def infinitesimal(table: CumulantTable) -> Functional:
    return InfinitesimalFunctional(table)


def conv(f: Functional, g: Functional) -> Functional:
    """Convolution: pair the coproduct legs with f and g."""
    return _Convolution(f, g)


def half_left(f: Functional, g: Functional) -> Functional:
    """Left half-shuffle ``f < g``; vanishes on the unit bar-word."""
    return _HalfProduct(f, g, left=True)


def half_right(f: Functional, g: Functional) -> Functional:
    """Right half-shuffle ``f > g``; vanishes on the unit bar-word."""
    return _HalfProduct(f, g, left=False)


def prelie(f: Functional, g: Functional) -> Functional:
    """Left pre-Lie product ``f |> g = f > g - g < f``."""
    return half_right(f, g) - half_left(g, f)


def inverse(f: Functional) -> Functional:
    """Convolution inverse of a functional normalized to 1 on the unit."""
    return _Inverse(f)


def is_character(f: Functional, alphabet: Iterable[str], max_degree: int) -> bool:
    """Exhaustively check unitality and multiplicativity on all bar-words of
    degree <= max_degree over the alphabet."""
    if f(UNIT) != ONE:
        return False
    for b in barwords_up_to(alphabet, max_degree):
        product = ONE
        for factor in b.factors:
            product *= f(BarWord.of(factor))
        if f(b) != product:
            return False
    return True


def is_infinitesimal(f: Functional, alphabet: Iterable[str], max_degree: int) -> bool:
    """Exhaustively check vanishing on the unit and on proper bar-products,
    on all bar-words of degree <= max_degree over the alphabet."""
    if f(UNIT) != ZERO:
        return False
    for b in barwords_up_to(alphabet, max_degree):
        if len(b.factors) >= 2 and f(b) != ZERO:
            return False
    return True


def materialize(f: Functional, alphabet: Iterable[str], max_len: int, cls=ValueTable):
    """Evaluate f on all single-factor bar-words up to max_len and freeze the
    values into a table."""
    values = {w: f(BarWord.of(w)) for w in words_up_to(alphabet, max_len)}
    return cls(alphabet, max_len, values)


def functionals_agree(
    f: Functional,
    g: Functional,
    alphabet: Iterable[str],
    max_degree: int,
    include_unit: bool = True,
    words_only: bool = False,
):
    """Return None if f and g agree on the checked domain, else the first
    counterexample as (bar-word, f-value, g-value)."""
    if include_unit and f(UNIT) != g(UNIT):
        return (UNIT, f(UNIT), g(UNIT))
    if words_only:
        domain = (BarWord.of(w) for w in words_up_to(alphabet, max_degree))
    else:
        domain = barwords_up_to(alphabet, max_degree)
    for b in domain:
        fv, gv = f(b), g(b)
        if fv != gv:
            return (b, fv, gv)
    return None
