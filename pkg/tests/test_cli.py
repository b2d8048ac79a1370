import json
from pathlib import Path

import pytest

from sturmian.cli import EXIT_BUDGET, EXIT_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, build_run_config, main
from sturmian.exceptions import ConfigurationError

GOLDEN = Path(__file__).parent / "golden"


def _golden(name):
    return (GOLDEN / name).read_text()


@pytest.mark.parametrize("argv, golden", [
    (["table", "km", "--alpha", "fib", "--m", "1..21"], "km.tsv"),
    (["table", "kmn", "--m", "3,10", "--n", "0..20"], "kmn.tsv"),
    (["table", "kmi", "--m", "10", "--i", "0..9"], "kmi.tsv"),
    (["table", "norms", "--m", "1..18", "--digits", "2"], "norms.tsv"),
    (["table", "lp", "--j", "2..11"], "lp.tsv"),
    (["table", "fibperiods", "--j", "3..16"], "fibperiods.tsv"),
    (["table", "sqrt5dev", "--j", "2..11", "--digits", "3"], "sqrt5dev.tsv"),
])
def test_table_golden_output(capsys, argv, golden):
    """Test table output against the stored reference files"""
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == _golden(golden)


def test_table_default_ranges(capsys):
    """Test that a bare table id uses its reference range"""
    assert main(["table", "km"]) == EXIT_OK
    assert capsys.readouterr().out == _golden("km.tsv")


def test_table_json(capsys):
    """Test the JSON document of the norms table"""
    assert main(["table", "norms", "--m", "1,2", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["table"] == "norms"
    assert document["alpha"] == "[0;|1]"
    assert document["rows"][0] == {
        "key": {"m": 1},
        "value": {"a": 3, "b": -1, "c": 2, "d": 5, "approx": "0.381966"},
    }
    assert document["rows"][1]["key"] == {"m": 2}


def test_table_json_integer_values(capsys):
    """Test that integer exponents stay integers in JSON"""
    assert main(["table", "kmn", "--m", "3", "--n", "0..2", "--format", "json"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert [row["value"] for row in rows] == [4, 1, 5]
    assert rows[2]["key"] == {"m": 3, "n": 2}


def test_sqrt5dev_table(capsys):
    """Test the deviation table columns"""
    assert main(["table", "sqrt5dev", "--j", "2,4", "--digits", "1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "j\tF_j\tlp\tdeviation_x100"
    assert lines[1] == "2\t2\t8\t23.6"
    assert lines[2] == "4\t5\t58\t8.4"


def test_word_command(capsys):
    """Test the default 34-letter prefix of f"""
    assert main(["word"]) == EXIT_OK
    assert capsys.readouterr().out == "abaababaabaababaababaabaababaabaab\n"


def test_word_command_with_start_and_convention(capsys):
    """Test an offset factor and the zero-in-a convention"""
    assert main(["word", "--start", "3", "--len", "5"]) == EXIT_OK
    assert capsys.readouterr().out == "ababa\n"
    assert main(["word", "--rho", "0", "--convention", "zero-in-a", "--len", "5"]) == EXIT_OK
    assert capsys.readouterr().out == "aabaa\n"


def test_lagrange_command(capsys):
    """Test the Lagrange report of the golden angle"""
    assert main(["lagrange", "--alpha", "fib"]) == EXIT_OK
    fields = dict(line.split("\t") for line in capsys.readouterr().out.splitlines())
    assert fields["cf"] == "[0;|1]"
    assert fields["lagrange"] == "sqrt(5)"
    assert fields["approx"] == "2.236068"
    assert fields["witness_residue"] == "0"
    assert fields["numeric_lower_bound"] == "2.236068"


def test_lagrange_command_sqrt3(capsys):
    """Test the Lagrange report of (sqrt(3) - 1)/2"""
    assert main(["lagrange", "--alpha", "[0;|2,1]", "--digits", "3"]) == EXIT_OK
    fields = dict(line.split("\t") for line in capsys.readouterr().out.splitlines())
    assert fields["alpha"] == "(-1+sqrt(3))/2"
    assert fields["lagrange"] == "2*sqrt(3)"
    assert fields["approx"] == "3.464"


def test_unknown_table_is_usage_error(capsys):
    """Test argparse rejection of an unknown table id"""
    assert main(["table", "nope"]) == EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_rational_alpha_is_usage_error(capsys):
    """Test that a rational angle is a configuration error"""
    assert main(["table", "km", "--alpha", "(1,0,2,1)"]) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "irrational" in captured.err


def test_fibonacci_table_needs_golden_angle(capsys):
    """Test that Fibonacci tables refuse other angles"""
    assert main(["table", "lp", "--alpha", "[0;|2]"]) == EXIT_USAGE
    assert "--alpha fib" in capsys.readouterr().err


def test_bad_range_is_usage_error():
    """Test malformed range literals"""
    assert main(["table", "km", "--m", "5..1"]) == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    """Test that --help is not an error"""
    assert main(["--help"]) == EXIT_OK
    assert "lagrange" in capsys.readouterr().out


def test_verify_kmn(capsys):
    """Test a passing verification sweep"""
    assert main(["verify", "kmn"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "m\tn\tformula\toracle\tstatus"
    assert len(lines) == 43
    assert all(line.endswith("\tok") for line in lines[1:])


def test_verify_budget_exceeded(capsys):
    """Test the budget exit code and the partial listing"""
    assert main(["verify", "km", "--max-letters", "100"]) == EXIT_BUDGET
    captured = capsys.readouterr()
    assert captured.out == "m\tformula\toracle\tstatus\n"
    assert "letters" in captured.err


def test_library_error_exit_code(capsys):
    """Test that a failing precondition maps to exit 1"""
    assert main(["svg", "partition", "--m", "0"]) == EXIT_FAILURE
    assert capsys.readouterr().out == ""


def test_svg_command(capsys):
    """Test that svg output is a complete document"""
    assert main(["svg", "partition", "--m", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("<?xml")
    assert out.endswith("</svg>\n")
    assert main(["svg", "rotation", "--steps", "4"]) == EXIT_OK
    assert capsys.readouterr().out.count("<circle") == 7


@pytest.mark.parametrize("argv, golden", [
    (["svg", "partition", "--m", "2"], "partition-2.svg"),
    (["svg", "rotation", "--rho", "0", "--steps", "2"], "rotation.svg"),
])
def test_svg_golden_output(capsys, argv, golden):
    """Test diagrams against the stored reference files"""
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == _golden(golden)


def test_build_run_config():
    """Test resolution of parsed arguments"""
    args = build_parser().parse_args(["verify", "factors", "--len", "5", "--jobs", "2"])
    config = build_run_config(args)
    assert config.target == "factors"
    assert config.ranges == {"length": [1, 2, 3, 4, 5]}
    assert config.jobs == 2


def test_build_run_config_rejects_bad_rho():
    """Test rho literal validation"""
    args = build_parser().parse_args(["word", "--rho", "1/0"])
    with pytest.raises(ConfigurationError, match=r"invalid rho"):
        build_run_config(args)
