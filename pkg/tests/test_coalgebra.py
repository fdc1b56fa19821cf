from collections import Counter

import pytest

from shufflecalc import (
    BarWord,
    DomainError,
    TensorSum,
    UNIT,
    Word,
    coproduct,
    coproduct_word,
    half_coproduct_left,
    half_coproduct_right,
    reduced_coproduct,
    reduced_half_left,
    reduced_half_right,
)


def W(text):
    return Word(text)


def B(*texts):
    return BarWord([Word(t) for t in texts])


def terms(tensor_sum):
    return Counter({(l, r): c for l, r, c in tensor_sum.items()})


class TestWordCoproduct:
    def test_single_letter(self):
        assert terms(coproduct_word(W("a"))) == Counter(
            {(B("a"), UNIT): 1, (UNIT, B("a")): 1}
        )

    def test_two_letters(self):
        assert terms(coproduct_word(W("ab"))) == Counter({
            (B("ab"), UNIT): 1,
            (UNIT, B("ab")): 1,
            (B("a"), B("b")): 1,
            (B("b"), B("a")): 1,
        })

    def test_three_letters(self):
        # the complement of the middle letter splits into two components
        assert terms(coproduct_word(W("abc"))) == Counter({
            (B("abc"), UNIT): 1,
            (UNIT, B("abc")): 1,
            (B("a"), B("bc")): 1,
            (B("b"), B("a", "c")): 1,
            (B("c"), B("ab")): 1,
            (B("ab"), B("c")): 1,
            (B("ac"), B("b")): 1,
            (B("bc"), B("a")): 1,
        })

    def test_six_letters_spot_terms(self):
        got = terms(coproduct_word(W("abcdef")))
        assert got[(B("ace"), B("b", "d", "f"))] == 1
        assert got[(B("cde"), B("ab", "f"))] == 1
        assert got[(B("cf"), B("ab", "de"))] == 1
        assert got[(B("def"), B("abc"))] == 1
        assert sum(got.values()) == 64


class TestHalfCoproducts:
    def test_left_three_letters(self):
        b = B("abc")
        assert terms(half_coproduct_left(b)) == Counter({
            (B("abc"), UNIT): 1,
            (B("a"), B("bc")): 1,
            (B("ab"), B("c")): 1,
            (B("ac"), B("b")): 1,
        })

    def test_right_three_letters(self):
        b = B("abc")
        assert terms(half_coproduct_right(b)) == Counter({
            (UNIT, B("abc")): 1,
            (B("b"), B("a", "c")): 1,
            (B("c"), B("ab")): 1,
            (B("bc"), B("a")): 1,
        })

    def test_halves_sum_to_full(self):
        for b in (B("abc"), B("ab", "c"), B("a", "b", "a")):
            assert half_coproduct_left(b) + half_coproduct_right(b) == coproduct(b)

    def test_undefined_on_unit(self):
        with pytest.raises(DomainError):
            half_coproduct_left(UNIT)
        with pytest.raises(DomainError):
            half_coproduct_right(UNIT)


class TestBarWordCoproduct:
    def test_unit(self):
        assert terms(coproduct(UNIT)) == Counter({(UNIT, UNIT): 1})

    def test_multiplicative_on_bar_products(self):
        b1, b2 = B("ab"), B("c", "a")
        assert coproduct(b1.concat(b2)) == coproduct(b1).product(coproduct(b2))

    def test_grading(self):
        b = B("ab", "ca")
        for l, r, _ in coproduct(b).items():
            assert l.degree + r.degree == b.degree

    def test_counit(self):
        b = B("ab", "c")
        left_unit = [(r, c) for l, r, c in coproduct(b).items() if l.is_unit]
        right_unit = [(l, c) for l, r, c in coproduct(b).items() if r.is_unit]
        assert left_unit == [(b, 1)]
        assert right_unit == [(b, 1)]


def triple_left(b):
    out = Counter()
    for l, r, c in coproduct(b).items():
        for l2, r2, c2 in coproduct(l).items():
            out[(l2, r2, r)] += c * c2
    return out


def triple_right(b):
    out = Counter()
    for l, r, c in coproduct(b).items():
        for l2, r2, c2 in coproduct(r).items():
            out[(l, l2, r2)] += c * c2
    return out


def test_coassociativity_samples():
    for b in (B("a"), B("abab"), B("ab", "c"), B("a", "b", "c"), B("abc", "ab")):
        assert triple_left(b) == triple_right(b)


class TestReducedVariants:
    def test_reduced_coproduct_drops_primitive_part(self):
        b = B("ab")
        assert terms(reduced_coproduct(b)) == Counter({
            (B("a"), B("b")): 1,
            (B("b"), B("a")): 1,
        })

    def test_reduced_halves(self):
        b = B("ab")
        assert terms(reduced_half_left(b)) == Counter({(B("a"), B("b")): 1})
        assert terms(reduced_half_right(b)) == Counter({(B("b"), B("a")): 1})

    def test_reduced_undefined_on_unit(self):
        with pytest.raises(DomainError):
            reduced_coproduct(UNIT)


class TestTensorSum:
    def test_normalization_merges_and_drops_zeros(self):
        s = TensorSum([(UNIT, B("a"), 1), (UNIT, B("a"), -1), (B("a"), UNIT, 2)])
        assert terms(s) == Counter({(B("a"), UNIT): 2})

    def test_arithmetic(self):
        s = TensorSum([(B("a"), UNIT, 1)])
        t = TensorSum([(UNIT, B("a"), 1)])
        assert terms(s + t) == Counter({(B("a"), UNIT): 1, (UNIT, B("a")): 1})
        assert terms(s - s) == Counter()
        assert terms(3 * s) == Counter({(B("a"), UNIT): 3})

    def test_product_concatenates_componentwise(self):
        s = TensorSum([(B("a"), B("b"), 1)])
        t = TensorSum([(B("c"), UNIT, 1)])
        assert terms(s.product(t)) == Counter({(B("a", "c"), B("b")): 1})

    def test_terms_are_canonically_ordered(self):
        s = coproduct_word(W("ab"))
        listed = s.terms()
        assert listed == sorted(listed, key=lambda t: (t[0]._key(), t[1]._key()))
