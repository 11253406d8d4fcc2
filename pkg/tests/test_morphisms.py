import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digit3_letter, popcount_letter
from morphic.morphisms import (
    FixedPointStream,
    Morphism,
    MorphismParseError,
    automatic_letter,
    automatic_prefix,
    parse_morphism_spec,
    preset,
)
from morphic.witnesses import sigma_power_bytes
from morphic.words import Alphabet, ResourceLimitError, Word, WordDomainError, ternary_alphabet

TERN = ternary_alphabet()
PREFIX_32 = "01121220122020011220200120010112"


def word(text: str) -> Word:
    return Word.from_text(TERN, text)


class TestMorphism:
    def test_preset_images(self):
        m, seed = preset("tml")
        assert seed == 0
        assert [str(im) for im in m.images] == ["01", "12", "20"]
        assert m.uniform_width == 2

    def test_apply(self):
        m, _ = preset("tml")
        assert str(m.apply(word("012"))) == "011220"

    def test_iterate(self):
        m, _ = preset("tml")
        assert str(m.iterate(word("0"), 3)) == "01121220"
        assert m.iterate(word("012"), 0) == word("012")

    def test_iterate_cap(self):
        m, _ = preset("tml")
        with pytest.raises(ResourceLimitError):
            m.iterate(word("0"), 40, cap=10**6)

    def test_image_count_must_match(self):
        with pytest.raises(WordDomainError):
            Morphism(TERN, (word("01"),))

    def test_erasing_rejected(self):
        with pytest.raises(WordDomainError):
            Morphism(TERN, (word("01"), word(""), word("20")))

    def test_apply_wrong_alphabet(self):
        m, _ = preset("tml")
        other = Alphabet((0, 1))
        with pytest.raises(WordDomainError):
            m.apply(Word(other, b"\x00"))

    def test_uniform_width_none_when_ragged(self):
        m = Morphism(TERN, (word("001"), word("0"), word("2")))
        assert m.uniform_width is None


class TestFixedPointStream:
    def test_prefix_32(self, tml):
        assert str(tml.prefix(32)) == PREFIX_32

    def test_sigma3_prefix(self, s3):
        assert str(s3.prefix(9)) == "abcbcacab"

    def test_letter(self, tml):
        assert [tml.letter(i) for i in range(8)] == [0, 1, 1, 2, 1, 2, 2, 0]

    def test_snapshot_read_only_and_stable(self, tml):
        snap = tml.array(16)
        with pytest.raises(ValueError):
            snap[0] = 1
        before = snap.copy()
        tml.ensure(1 << 15)
        assert (snap == before).all()

    def test_requires_prolongable_seed(self):
        m = Morphism(TERN, (word("10"), word("12"), word("20")))
        with pytest.raises(WordDomainError):
            FixedPointStream(m, 0)
        FixedPointStream(m, 1)

    def test_seed_by_name(self):
        m, _ = preset("sigma3")
        s = FixedPointStream(m, "b")
        assert str(s.prefix(3)) == "bca"

    def test_cap(self):
        m, seed = preset("tml")
        s = FixedPointStream(m, seed, cap=1024)
        with pytest.raises(ResourceLimitError):
            s.ensure(4096)

    def test_self_similarity(self, tml):
        # each substitution step maps the length-n prefix onto the length-2n prefix
        m = tml.morphism
        for n in (1, 5, 37, 256):
            assert m.apply(tml.prefix(n)) == tml.prefix(2 * n)

    def test_block_invariance_order_six(self, tml):
        # the word equals its own letter-by-letter expansion through six steps
        data = bytes(tml.array(16 * 64))
        expected = b"".join(sigma_power_bytes(s, 6) for s in tml.array(16).tolist())
        assert data == expected

    def test_non_uniform_fallback_matches_iterate(self):
        m = Morphism(TERN, (word("001"), word("0"), word("2")))
        s = FixedPointStream(m, 0)
        w = m.iterate(word("0"), 7)
        assert bytes(s.array(len(w))) == w.symbols


class TestArithmeticRoutes:
    def test_tml_against_binary_digit_sums(self, tml):
        assert [popcount_letter(i) for i in range(64)] == tml.array(64).tolist()

    def test_sigma3_against_ternary_digit_sums(self, s3):
        assert [digit3_letter(i) for i in range(81)] == s3.array(81).tolist()

    @settings(deadline=None)
    @given(st.integers(0, 1 << 30))
    def test_automatic_letter_matches_oracle(self, i):
        m, seed = preset("tml")
        assert automatic_letter(m, seed, i) == popcount_letter(i)

    @pytest.mark.parametrize("name,oracle", [("tml", popcount_letter), ("sigma3", digit3_letter)])
    def test_automatic_prefix(self, name, oracle):
        m, seed = preset(name)
        got = automatic_prefix(m, seed, 4096)
        assert got.tolist() == [oracle(i) for i in range(4096)]

    def test_automatic_requires_uniform(self):
        m = Morphism(TERN, (word("001"), word("0"), word("2")))
        with pytest.raises(WordDomainError):
            automatic_letter(m, 0, 5)


class TestSpecParsing:
    def test_numeric_names_sorted_by_value(self):
        spec = parse_morphism_spec("1 -> 12\n0 -> 01\n2 -> 20\n")
        assert spec.morphism.alphabet.letters == (0, 1, 2)
        assert [str(im) for im in spec.morphism.images] == ["01", "12", "20"]
        assert spec.seed == 1

    def test_letter_names_in_appearance_order(self):
        spec = parse_morphism_spec("a -> abc\nb -> bca\nc -> cab\n")
        assert spec.morphism.alphabet.names == ("a", "b", "c")
        assert spec.seed == 0

    def test_comments_and_blanks(self):
        spec = parse_morphism_spec("# doubling\n\n0 -> 01  # zero\n1 -> 12\n2 -> 20\n")
        assert str(spec.morphism.images[0]) == "01"

    def test_coding_lines(self):
        spec = parse_morphism_spec("a -> abc\nb -> bca\nc -> cab\na = 0\nb = 1\nc = 3\n")
        assert spec.coding is not None
        assert spec.coding.values == (0, 1, 3)

    def test_comma_images_for_multichar_names(self):
        spec = parse_morphism_spec("x0 -> x0,x1\nx1 -> x1,x0\n")
        assert spec.morphism.alphabet.names == ("x0", "x1")
        assert len(spec.morphism.images[0]) == 2

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "0 -> 01\n0 -> 10\n1 -> 12\n2 -> 20\n",
            "0 -> \n1 -> 12\n2 -> 20\n",
            "0 -> 01\njunk line\n",
            "a -> ab\nb -> ba\na = 1\n",
            "a -> ab\nb -> ba\na = 1\nb = 2\nq = 3\n",
            "a -> ab\nb -> ba\na = x\nb = 2\n",
            "0 -> 05\n1 -> 10\n",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(MorphismParseError):
            parse_morphism_spec(text)

    def test_parse_error_carries_line_number(self):
        with pytest.raises(MorphismParseError, match="line 2"):
            parse_morphism_spec("0 -> 01\nwhat\n")
