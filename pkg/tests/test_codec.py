import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from halidon import (
    ALPHABET,
    HalidonRing,
    UnitAssignment,
    apply_table,
    codes_to_text,
    gen_unit_table,
    pad_and_block,
    read_table,
    text_to_codes,
    unapply_table,
    write_table,
)
from halidon.codec import render_table
from halidon.errors import (
    AlphabetTooLarge,
    CodeOutOfRange,
    MalformedFile,
    NotAUnit,
    UnknownUnit,
    UnsupportedSymbol,
)

import kat_vectors as kat


@pytest.fixture(scope="module")
def session_table():
    return UnitAssignment(
        modulus=kat.SESSION_N, values=kat.UNIT_TABLE_VALUES
    )


class TestTextToCodes:
    def test_message_head(self):
        assert text_to_codes("MY B") == (22, 34, 36, 11)

    def test_empty(self):
        assert text_to_codes("") == ()

    def test_digit_run(self):
        assert text_to_codes("4125678") == (4, 1, 2, 5, 6, 7, 8)

    def test_specials(self):
        assert text_to_codes(" :.-") == (36, 37, 38, 39)

    def test_lowercase_folds(self):
        assert text_to_codes("abz") == text_to_codes("ABZ")

    def test_unsupported_symbol_reported(self):
        with pytest.raises(UnsupportedSymbol) as info:
            text_to_codes("AB#C")
        assert info.value.char == "#"
        assert info.value.position == 2


class TestCodesToText:
    def test_inverse_of_encode(self):
        for text in ("MY B", "", "4125678", "A Z:.-09"):
            assert codes_to_text(text_to_codes(text)) == text

    def test_period_and_hyphen(self):
        assert codes_to_text([38]) == "."
        assert codes_to_text([39]) == "-"

    def test_out_of_range(self):
        with pytest.raises(CodeOutOfRange):
            codes_to_text([0, 40])
        with pytest.raises(CodeOutOfRange):
            codes_to_text([-1])

    @given(st.text(alphabet=ALPHABET, max_size=80))
    def test_round_trip_property(self, text):
        assert codes_to_text(text_to_codes(text)) == text


class TestPadAndBlock:
    def test_session_length_dft(self):
        blocks = pad_and_block(text_to_codes(kat.DFT_MESSAGE), 202)
        assert len(blocks) == 1
        assert len(blocks[0]) == 202
        assert blocks[0][101:] == (36,) * 101

    def test_session_length_hgr(self):
        blocks = pad_and_block(text_to_codes(kat.HGR_MESSAGE), 202)
        assert blocks[0][97:] == (36,) * 105

    def test_exact_fit_unpadded(self):
        blocks = pad_and_block(range(5), 5)
        assert blocks == [(0, 1, 2, 3, 4)]

    def test_empty_message_gets_blank_block(self):
        assert pad_and_block((), 4) == [(36, 36, 36, 36)]

    def test_splits_into_blocks(self):
        blocks = pad_and_block(range(7), 3)
        assert blocks == [(0, 1, 2), (3, 4, 5), (6, 36, 36)]


class TestGenUnitTable:
    def test_deterministic_per_seed(self, z49):
        ring = HalidonRing.create(491063, 202, 239823)
        first = gen_unit_table(ring, seed=42)
        second = gen_unit_table(ring, seed=42)
        assert first == second
        assert first != gen_unit_table(ring, seed=43)

    def test_injective_all_units(self):
        table = gen_unit_table(491063, seed=7)
        assert table.is_injective
        assert all(math.gcd(v, 491063) == 1 for v in table.values)

    def test_alphabet_too_large(self):
        ring = HalidonRing.create(37, 2, 36)  # phi(37) = 36 < 40
        with pytest.raises(AlphabetTooLarge):
            gen_unit_table(ring, seed=1)
        with pytest.raises(AlphabetTooLarge):
            gen_unit_table(25, seed=1)  # phi(25) = 20


class TestUnitAssignment:
    def test_session_table_loads_and_validates(self, session_table):
        assert session_table.value_for("A") == 162483
        assert session_table.value_for("B") == 2255
        assert all(
            math.gcd(v, kat.SESSION_N) == 1 for v in session_table.values
        )

    def test_session_table_defect_flagged(self, session_table):
        # K/M and L/N collide, so the published table is not injective
        assert not session_table.is_injective
        assert session_table.value_for("K") == session_table.value_for("M")
        assert session_table.value_for("L") == session_table.value_for("N")

    def test_non_unit_value_rejected(self):
        values = list(kat.UNIT_TABLE_VALUES)
        values[0] = 607  # shares a factor with n
        with pytest.raises(NotAUnit):
            UnitAssignment(modulus=kat.SESSION_N, values=tuple(values))


class TestApplyTable:
    def test_session_head(self, session_table):
        lam = apply_table("AN ", session_table)
        assert lam.values == (162483, 52853, 348362)

    def test_empty(self, session_table):
        assert apply_table("", session_table).values == ()

    def test_full_session_message(self, session_table):
        padded = pad_and_block(text_to_codes(kat.HGR_MESSAGE), 202)[0]
        lam = apply_table(padded, session_table)
        assert lam.values == kat.HGR_LAMBDAS

    def test_round_trip_with_generated_table(self):
        table = gen_unit_table(491063, seed=3)
        text = "THE QUICK BROWN FOX: 0123456789-."
        assert unapply_table(apply_table(text, table), table) == text

    @given(st.text(alphabet=ALPHABET, max_size=60))
    def test_round_trip_property(self, text):
        table = gen_unit_table(491063, seed=5)
        assert unapply_table(apply_table(text, table), table) == text


class TestUnapplyTable:
    def test_ambiguous_values_take_first_symbol(self, session_table):
        assert unapply_table([80303], session_table) == "K"
        assert unapply_table([52853], session_table) == "L"

    def test_unknown_unit_reported(self, session_table):
        with pytest.raises(UnknownUnit) as info:
            unapply_table([162483, 12345], session_table)
        assert info.value.value == 12345
        assert info.value.position == 1


class TestTableFiles:
    def test_exact_bytes(self, session_table, tmp_path):
        path = tmp_path / "table.txt"
        write_table(session_table, path)
        text = path.read_text()
        lines = text.splitlines()
        assert lines[0] == "HGR-TABLE v1"
        assert lines[1] == "n=491063"
        assert lines[2] == "0=221373"
        assert lines[12] == "A=162483"
        assert lines[38] == "SPACE=348362"
        assert lines[39] == "COLON=90605"
        assert lines[40] == "PERIOD=5932"
        assert lines[41] == "HYPHEN=275062"
        assert len(lines) == 42
        assert text.endswith("\n")

    def test_round_trip(self, session_table, tmp_path):
        path = tmp_path / "table.txt"
        write_table(session_table, path)
        assert read_table(path) == session_table

    def test_generated_round_trip(self, tmp_path):
        table = gen_unit_table(491063, seed=9)
        path = tmp_path / "table.txt"
        write_table(table, path)
        assert read_table(path) == table

    def test_bad_header(self, tmp_path):
        path = tmp_path / "t.txt"
        path.write_text("NOPE\nn=5\n")
        with pytest.raises(MalformedFile) as info:
            read_table(path)
        assert info.value.line == 1

    def test_wrong_key_order(self, session_table, tmp_path):
        path = tmp_path / "t.txt"
        text = render_table(session_table).splitlines()
        text[2], text[3] = text[3], text[2]  # swap keys 0 and 1
        path.write_text("\n".join(text) + "\n")
        with pytest.raises(MalformedFile) as info:
            read_table(path)
        assert info.value.line == 3

    def test_non_unit_value(self, session_table, tmp_path):
        path = tmp_path / "t.txt"
        lines = render_table(session_table).splitlines()
        lines[2] = "0=607"
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(MalformedFile) as info:
            read_table(path)
        assert info.value.line == 3

    def test_truncated_file(self, session_table, tmp_path):
        path = tmp_path / "t.txt"
        lines = render_table(session_table).splitlines()[:20]
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(MalformedFile):
            read_table(path)
