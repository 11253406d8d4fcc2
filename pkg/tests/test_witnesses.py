import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morphic.witnesses import (
    balanced_letter,
    decomposition_haystack,
    is_factor,
    letter_pair_haystacks,
    sigma_power,
    sigma_power_bytes,
    surplus_letter,
    ternary_stream,
    witness,
    witness_digit_sum,
    witness_occurrence,
    witness_word,
)
from morphic.words import Word, WordDomainError, parikh, ternary_alphabet

TERN = ternary_alphabet()


class TestLetterFamilies:
    def test_surplus_sequence(self):
        assert [surplus_letter(k) for k in range(-1, 9)] == [2, 2, 1, 1, 0, 0, 2, 2, 1, 1]

    def test_balanced_sequence(self):
        assert [balanced_letter(l) for l in range(1, 9)] == [2, 0, 1, 2, 0, 1, 2, 0]

    def test_domain(self):
        with pytest.raises(WordDomainError):
            surplus_letter(-2)
        with pytest.raises(WordDomainError):
            balanced_letter(-1)

    def test_defining_property(self):
        # the surplus letter's power carries one extra 2, the balanced letter's none
        for l in range(0, 14):
            b = sigma_power_bytes(surplus_letter(l), l)
            assert b.count(2) - b.count(0) == 1
            b = sigma_power_bytes(balanced_letter(l), l)
            assert b.count(2) - b.count(0) == 0


class TestSigmaPowers:
    def test_lengths(self):
        for e in range(0, 10):
            assert len(sigma_power_bytes(1, e)) == 1 << e

    def test_power_of_seed_is_prefix(self):
        assert str(sigma_power(0, 3)) == "01121220"

    def test_rejects_bad_args(self):
        with pytest.raises(WordDomainError):
            sigma_power_bytes(3, 1)
        with pytest.raises(WordDomainError):
            sigma_power_bytes(0, -1)


class TestWitness:
    def test_small_words(self):
        assert str(witness_word(1)) == "2"
        assert str(witness_word(2)) == "22"
        assert str(witness_word(3)) == "122"
        assert str(witness_word(4)) == "2122"
        assert str(witness_word(8)) == "21220122"

    def test_split_at_anchor(self):
        w = witness(8)
        assert (str(w.left), str(w.right)) == ("21220", "122")
        w1 = witness(1)
        assert (len(w1.left), str(w1.right)) == (0, "2")

    def test_bits_recover_length(self):
        w = witness(22)
        assert w.n == (1 << w.k) + sum(b << i for i, b in enumerate(w.bits))

    def test_digit_sum_and_imbalance(self):
        for n in range(1, 513):
            w = witness(n)
            assert witness_digit_sum(n) == n + w.k + 1
            pv = parikh(w.whole)
            assert pv[2] - pv[0] == w.k + 1

    def test_occurrence_in_context(self):
        for n in range(1, 513):
            assert witness_occurrence(n) >= 0

    def test_witness_found_in_stream_prefix(self):
        hay = bytes(ternary_stream().array(64))
        assert hay.find(witness_word(2).symbols) == 5
        assert hay.find(witness_word(8).symbols) == 3

    def test_rejects_nonpositive(self):
        with pytest.raises(WordDomainError):
            witness(0)

    @settings(deadline=None, max_examples=40)
    @given(st.integers(1, 4096))
    def test_construction_properties(self, n):
        w = witness(n)
        assert len(w.whole) == n
        assert w.whole.digit_sum() == w.target_digit_sum
        assert is_factor(w.whole)


class TestMembership:
    def test_positives_from_stream(self, tml):
        data = bytes(tml.array(2048))
        for n in (1, 2, 3, 7, 16, 65):
            for i in range(0, 512, 37):
                assert is_factor(data[i : i + n])

    def test_negatives(self):
        for text in ("000", "222", "110", "2121", "21212"):
            assert not is_factor(Word.from_text(TERN, text))

    def test_letters_outside_alphabet(self):
        assert not is_factor(b"\x03")

    def test_empty_word(self):
        assert is_factor(b"")

    def test_pair_haystacks(self):
        hays = letter_pair_haystacks(4)
        assert len(hays) == 9
        assert all(len(h) == 32 for h in hays)

    def test_decomposition_haystack_needs_height(self):
        with pytest.raises(WordDomainError):
            decomposition_haystack(0)
        assert len(decomposition_haystack(3)) == 32
