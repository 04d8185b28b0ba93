import json
import math
import os
import subprocess
from fractions import Fraction

import pytest

import floorlat


def test_sequence_and_counts():
    assert floorlat.sequence_terms(10) == [10, 5, 3, 2, 2, 1, 1, 1, 1, 1]
    assert floorlat.sequence_terms(7, "1/2", Fraction(1, 2)) == [7, 3, 2, 2, 1, 1, 1]
    assert floorlat.count(7, 1, 2, alpha="1/2", nu="1/2") == 5
    assert floorlat.count(30, 1, 3, method="floor_sums") == 18
    assert floorlat.count(7015, 2, 2, alpha="0.68237922734", method="floor_sums") == 3503
    assert floorlat.count_rational_alpha(8, 1, 4, nu="3/4", m=2) == 6
    assert floorlat.canonical("0.25") == "1/4"


def test_named_sequences():
    assert [floorlat.f_seq(n) for n in range(1, 11)] == [1, 1, 3, 2, 4, 4, 6, 4, 7, 7]
    assert floorlat.f_seq(17) == 12
    assert floorlat.c_seq(20) == 6
    assert floorlat.r_seq(18) == 10


def test_lattice_counts():
    assert floorlat.circle_count(36) == 113
    assert floorlat.eisenstein_count(30) == 109
    assert floorlat.z_sqrt_minus2_count(29) == 65
    assert floorlat.enumerate_form_count(1, 0, 2, 29) == 65
    assert floorlat.r2(25) == 12
    assert floorlat.divisor_summatory(10) == 27


def test_densities():
    table = floorlat.slope_table("1/2", 4)
    assert len(table) == 10
    assert table[1][:2] == (1, 2)
    assert table[1][2] == pytest.approx(math.pi / 2 - 1, abs=1e-12)
    assert floorlat.slope(0.0, 1, 2) == pytest.approx(math.log(2), abs=1e-12)
    assert floorlat.slope("1/3", 2, 3, method="series") == pytest.approx(
        floorlat.slope("1/3", 2, 3), abs=1e-8
    )
    assert 0.682379227335 <= floorlat.find_alpha0(1e-11) <= 0.682379227345
    assert floorlat.parity_f(1.0) == pytest.approx(math.log(2), abs=1e-14)


def test_errors():
    with pytest.raises(ValueError):
        floorlat.sequence_terms(0)
    with pytest.raises(floorlat.PreconditionError):
        floorlat.count(1, 1, 2, alpha="1/4", nu="1/2", method="floor_sums")
    with pytest.raises(TypeError):
        floorlat.count(10, 1, 2, alpha=0.5)
    with pytest.raises(ValueError):
        floorlat.canonical("1/0")


def test_run_cli_in_process():
    code, out, err = floorlat.run_cli(["lattice", "--form", "circle", "--n", "36", "--format", "json"])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["rows"] == [[36, 113]]
    assert floorlat.run_cli(["seq", "--n", "-3"])[0] == 2


@pytest.mark.skipif("FLOORLAT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary_matches_module():
    out = subprocess.run(
        [os.environ["FLOORLAT_CLI"], "fcr", "--n-max", "20", "--format", "json"],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    rows = json.loads(out)["rows"]
    assert [r[1] for r in rows] == [floorlat.f_seq(n) for n in range(1, 21)]
