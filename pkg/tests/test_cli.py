"""
Unit tests for the command-line front end and the b-file script.
"""

import re
from fractions import Fraction

import pytest
import yaml
from pathlib import Path
import sys

# Add package and scripts to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src" / "packages" / "polite-seating"))
sys.path.insert(0, str(Path(__file__).parent.parent / "scripts"))

from polite_seating.cli import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    bounds_frame,
    format_ratio,
    main,
    sequence_lines,
)
from polite_seating.formulas.bounds import comparison_table

CSV_LINE = re.compile(r'^[0-9]+;[0-9]+$')
BFILE_LINE = re.compile(r'^[0-9]+ [0-9]+$')


@pytest.fixture
def small_config(tmp_path):
    path = tmp_path / "seating.yaml"
    path.write_text(yaml.safe_dump({
        'oracle': {'naive_cap': 6, 'census_invariance_cap': 6},
        'verify': {'b1_pmax': 500, 'nmax_plain_oracle': 10},
    }))
    return str(path)


class TestTable:
    """Test 'table'."""

    def test_b_small(self, capsys):
        assert main(['table', 'b', '--k', '1', '--pmax', '3']) == EXIT_OK
        assert capsys.readouterr().out == "1;0\n2;1\n3;1\n"

    def test_d_last_line(self, capsys):
        main(['table', 'd', '--k', '2', '--pmax', '5'])
        assert capsys.readouterr().out.splitlines()[-1] == "5;0"

    def test_b_k_plus_one(self, capsys):
        main(['table', 'b', '--k', '2', '--pmax', '3'])
        assert capsys.readouterr().out.splitlines()[-1] == "3;1"

    def test_csv_format(self, capsys):
        main(['table', 'd', '--k', '1', '--pmax', '200'])
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 200
        assert all(CSV_LINE.match(line) for line in lines)

    def test_rejects_nonpositive_k(self, capsys):
        assert main(['table', 'b', '--k', '0', '--pmax', '3']) == EXIT_USAGE

    def test_rejects_unknown_kind(self, capsys):
        assert main(['table', 'x', '--k', '1', '--pmax', '3']) == EXIT_USAGE


class TestSequence:
    """Test 'sequence'."""

    def test_an(self, capsys):
        assert main(['sequence', 'an', '--nmax', '3']) == EXIT_OK
        assert capsys.readouterr().out == "1 1\n2 2\n3 4\n"

    def test_a_ext_fourth_term(self, capsys):
        main(['sequence', 'a_ext', '--nmax', '4'])
        assert "4 6" in capsys.readouterr().out.splitlines()

    def test_a095240_starts_at_two(self, capsys):
        main(['sequence', 'a095240', '--nmax', '2'])
        assert capsys.readouterr().out == "2 2\n"

    @pytest.mark.parametrize("name", ['an', 'a166079', 'a095236', 'a095240', 'a095912', 'a_ext'])
    def test_bfile_format(self, name):
        lines = list(sequence_lines(name, 40))
        assert all(BFILE_LINE.match(line) for line in lines)

    def test_rejects_unknown_name(self, capsys):
        assert main(['sequence', 'a000045', '--nmax', '3']) == EXIT_USAGE

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "b_an.txt"
        assert main(['sequence', 'an', '--nmax', '5', '--out', str(target)]) == EXIT_OK
        assert target.read_text().splitlines()[-1] == "5 20"
        assert capsys.readouterr().out == ""

    def test_global_out_file(self, tmp_path):
        target = tmp_path / "b_an.txt"
        assert main(['--out', str(target), 'sequence', 'an', '--nmax', '2']) == EXIT_OK
        assert target.read_text() == "1 1\n2 2\n"


class TestBounds:
    """Test 'bounds' and ratio rendering."""

    @pytest.mark.parametrize("ratio,precision,expected", [
        (Fraction(1, 2), 4, "0.5"),
        (Fraction(6), 4, "6"),
        (Fraction(18, 5), 4, "3.6"),
        (Fraction(28, 216), 4, "≈0.1296"),
        (Fraction(1392, 216), 2, "≈6.44"),
        (Fraction(38880, 1392), 2, "≈27.93"),
        (Fraction(44640, 21611520), 4, "≈0.0021"),
        (Fraction(6531840000, 21611520), 2, "≈302.24"),
        (Fraction(2, 3), 0, "≈1"),
    ])
    def test_format_ratio(self, ratio, precision, expected):
        assert format_ratio(ratio, precision) == expected

    def test_published_rows(self):
        frame = bounds_frame(comparison_table(10, extra=[15]), precision=4)
        rows = {row['n']: row for row in frame.to_dict('records')}
        assert list(rows) == list(range(1, 11)) + [15]
        assert (rows[6]['U'], rows[6]['a_n'], rows[6]['O'], rows[6]['O/a_n']) == (12, 48, 288, '6')
        assert rows[1]['U'] == '/'
        assert rows[1]['U/a_n'] == '/'
        assert rows[9]['a_n'] == 1392
        assert rows[15]['U'] == 44640
        assert rows[15]['n!'] == 1307674368000

    def test_command(self, capsys):
        assert main(['bounds', '--nmax', '10', '--extra', '15', '--precision', '2']) == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[0].split() == ['n', 'U/a_n', 'U', 'a_n', 'O', 'O/a_n', 'n!']
        assert '21611520' in out
        assert '6531840000' in out
        assert '≈302.24' in out


class TestSchemaAndCensus:
    """Test 'schema' and 'census'."""

    def test_schema(self, capsys):
        assert main(['schema', '--level', '3']) == EXIT_OK
        assert capsys.readouterr().out == "1;5;3;7;2;6;4;8\n"

    def test_schema_level_above_cap(self, capsys):
        assert main(['schema', '--level', '21']) == EXIT_USAGE
        assert "❌" in capsys.readouterr().err

    def test_census(self, capsys):
        assert main(['census', '--p', '5']) == EXIT_OK
        assert capsys.readouterr().out == "1;2;0\n2;1;0\n3;0;0\n4;1;0\n"


class TestVerify:
    """Test 'verify' and process-level behaviour."""

    def test_verify_passes(self, small_config, capsys):
        code = main(['--config', small_config, 'verify', '--nmax-formula', '10', '--nmax-oracle', '5'])
        out = capsys.readouterr().out
        assert code == EXIT_OK, out
        assert "checks passed" in out

    def test_verify_mismatch_exit_code(self, small_config, capsys, monkeypatch):
        import polite_seating.verification as verification

        original = verification.plan_checks

        def corrupted(nmax_formula, nmax_oracle, config, b_override=None):
            return original(nmax_formula, nmax_oracle, config, {(6, 2): 4})

        monkeypatch.setattr(verification, 'plan_checks', corrupted)
        code = main(['--config', small_config, 'verify', '--nmax-formula', '8', '--nmax-oracle', '4'])
        captured = capsys.readouterr()
        assert code == EXIT_MISMATCH
        assert "(p=6, k=2)" in captured.err

    def test_verify_limit_above_cap(self, small_config, capsys):
        code = main(['--config', small_config, 'verify', '--nmax-oracle', '11'])
        assert code == EXIT_USAGE

    def test_missing_config(self, tmp_path, capsys):
        assert main(['--config', str(tmp_path / "none.yaml"), 'schema', '--level', '1']) == EXIT_USAGE

    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_bad_log_level(self, capsys):
        assert main(['--log-level', 'CHATTY', 'schema', '--level', '1']) == EXIT_USAGE

    def test_logs_stay_off_stdout(self, capsys):
        main(['--log-level', 'DEBUG', 'sequence', 'an', '--nmax', '3'])
        captured = capsys.readouterr()
        assert captured.out == "1 1\n2 2\n3 4\n"


class TestGenerateBfiles:
    """Test scripts/generate_bfiles.py."""

    def test_writes_every_sequence(self, tmp_path, capsys):
        from generate_bfiles import generate_bfiles

        assert generate_bfiles(6, str(tmp_path)) == 6
        assert (tmp_path / "b_an.txt").read_text() == "1 1\n2 2\n3 4\n4 8\n5 20\n6 48\n"
        assert (tmp_path / "b_a095240.txt").read_text().splitlines()[0].startswith("2 ")

    def test_single_sequence(self, tmp_path, capsys):
        from generate_bfiles import generate_bfiles

        assert generate_bfiles(3, str(tmp_path / "out"), ['a166079']) == 1
        assert (tmp_path / "out" / "b_a166079.txt").read_text() == "1 1\n2 1\n3 2\n"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
