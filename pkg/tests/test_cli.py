import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from redwords.cli import main
from redwords.textio import (
    parse_perm_text,
    parse_tableau_text,
    parse_word_text,
    perm_text,
    tableau_text,
    word_text,
)
from redwords.errors import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestTextForms:
    def test_word_round_trip(self):
        assert parse_word_text("4 2 1 2 3 2 4") == (4, 2, 1, 2, 3, 2, 4)
        assert parse_word_text("") == ()

    def test_word_rejects_zero(self):
        with pytest.raises(ParseError) as err:
            parse_word_text("1 0 2")
        assert err.value.column == 3

    def test_word_rejects_garbage(self):
        with pytest.raises(ParseError):
            parse_word_text("1 x")

    def test_word_rejects_unicode_digit_lookalikes(self):
        with pytest.raises(ParseError):
            parse_word_text("1 ²")  # superscript two passes isdigit()

    def test_perm_round_trip(self):
        assert parse_perm_text("3 5 2 4 1") == (3, 5, 2, 4, 1)

    def test_perm_rejects_non_bijection(self):
        with pytest.raises(ParseError):
            parse_perm_text("1 1 2")

    @given(st.lists(st.integers(1, 9), max_size=10).map(tuple))
    def test_parse_inverts_format(self, w):
        assert parse_word_text(word_text(w)) == w

    @given(st.permutations(list(range(1, 7))).map(tuple))
    def test_perm_parse_inverts_format(self, p):
        assert parse_perm_text(perm_text(p)) == p

    def test_tableau_round_trip(self):
        t = ((1, 3, 7), (2, 6), (4,), (5,))
        assert parse_tableau_text(tableau_text(t)) == t
        assert parse_tableau_text("") == ()

    def test_tableau_rejects_ragged_rows(self):
        with pytest.raises(Exception):
            parse_tableau_text("1\n2 3")


class TestVerbs:
    def test_eg(self, capsys):
        code, out, _ = run(capsys, "eg", "4 2 1 2 3 2 4")
        assert code == 0
        body = json.loads(out)
        assert body["q"] == {"rows": [[1, 3, 7], [2, 6], [4], [5]]}

    def test_enum(self, capsys):
        code, out, _ = run(capsys, "enum", "3 2 1")
        assert json.loads(out)["words"] == [[1, 2, 1], [2, 1, 2]]

    def test_little(self, capsys):
        code, out, _ = run(capsys, "little", "1 2 1")
        body = json.loads(out)
        assert body["tableau"] == {"rows": [[1, 2], [3]]}

    def test_bump_by_start(self, capsys):
        code, out, _ = run(capsys, "bump", "1 2 1", "--start", "1")
        assert json.loads(out)["result"] == {"letters": [1, 3, 2]}

    def test_bump_by_values(self, capsys):
        code, out, _ = run(capsys, "bump", "1 2 1", "--values", "1,2")
        assert json.loads(out)["result"] == {"letters": [1, 3, 2]}

    def test_inverse_bump(self, capsys):
        code, out, _ = run(capsys, "inverse-bump", "1 3 2", "--start", "1")
        assert json.loads(out)["result"] == {"letters": [1, 2, 1]}

    def test_ck_list_and_apply(self, capsys):
        code, out, _ = run(capsys, "ck", "1 2 1")
        assert json.loads(out)["moves"] == [
            {"pos": 1, "kind": "type3", "direction": "forward"}
        ]
        code, out, _ = run(capsys, "ck", "1 2 1", "--apply", "1")
        assert json.loads(out)["result"] == {"letters": [2, 1, 2]}

    def test_tab(self, capsys):
        code, out, _ = run(capsys, "tab", "1 3 2")
        assert json.loads(out)["tableau"] == {"rows": [[1, 2], [3]]}

    def test_normalize(self, capsys):
        code, out, _ = run(capsys, "normalize", "3 2")
        assert json.loads(out)["result"] == {"letters": [2, 1]}

    def test_render_ascii(self, capsys):
        code, out, _ = run(capsys, "render", "1")
        assert out == "1 --- 2\n   X\n2 --- 1\n"

    def test_render_svg_highlight(self, capsys):
        code, out, _ = run(capsys, "render", "1 2 1", "--format", "svg", "--highlight", "3")
        assert 'id="crossing-3" class="crossing highlight"' in out

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "eg", "1 0 2")
        assert code == 2
        assert "parse error" in err

    def test_domain_error_exit_code(self, capsys):
        code, _, err = run(capsys, "tab", "1 2 1")
        assert code == 2
        assert "error" in err


class TestVerifyVerb:
    def test_small_run_exits_zero(self, capsys):
        code, out, err = run(capsys, "verify", "--n", "3")
        assert code == 0
        lines = [json.loads(l) for l in out.strip().splitlines()]
        assert len(lines) == 10
        assert all(l["failures"] == [] for l in lines)
        assert "all checks passed" in err

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "verify", "--n", "2", "--seed", "5")
        _, out2, _ = run(capsys, "verify", "--n", "2", "--seed", "5")

        def strip(ms):
            return [
                {k: v for k, v in json.loads(l).items() if k != "elapsed_ms"}
                for l in ms.strip().splitlines()
            ]

        assert strip(out1) == strip(out2)
