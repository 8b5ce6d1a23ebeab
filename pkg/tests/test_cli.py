# Copyright Justin R. Goheen.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
from math import prod

import pytest

from order2phi import config
from order2phi.cli import main


def run(capsys, *argv):
    with pytest.raises(SystemExit) as exit_info:
        main(list(argv))
    captured = capsys.readouterr()
    return exit_info.value.code, captured.out.splitlines()


def test_gen_small_modulus(capsys):
    code, lines = run(capsys, "gen", "--bits", "4", "--seed", "7")
    assert code == config.EXIT_OK
    record = json.loads(lines[0])
    assert record["n"] == "143"
    assert (record["p"], record["q"]) == ("11", "13")
    assert record["lambda"] == "60"


def test_gen_count_and_out(capsys, tmp_path):
    target = tmp_path / "moduli.jsonl"
    code, lines = run(capsys, "gen", "--bits", "12", "--count", "5", "--seed", "1", "--out", str(target))
    assert code == config.EXIT_OK
    assert lines == []
    records = [json.loads(line) for line in target.read_text().splitlines()]
    assert len(records) == 5
    assert all(int(record["p"]) * int(record["q"]) == int(record["n"]) for record in records)


def test_gen_constructed_factors_multiply_back(capsys):
    code, lines = run(capsys, "gen", "--bits", "512", "--mode", "construct", "--seed", "1")
    assert code == config.EXIT_OK
    record = json.loads(lines[0])
    for prime, factors in (("p", "p1_factors"), ("q", "q1_factors")):
        value = prod(int(base) ** int(exponent) for base, exponent in record[factors].items())
        assert value == int(record[prime]) - 1
        assert int(record[prime]).bit_length() == 512
    assert int(record["p"]) * int(record["q"]) == int(record["n"])


def test_gen_unbalanced(capsys):
    code, lines = run(capsys, "gen", "--bits", "30", "--mode", "unbalanced", "--seed", "1")
    assert code == config.EXIT_OK
    record = json.loads(lines[0])
    p, q = int(record["p"]), int(record["q"])
    assert record["mode"] == "unbalanced"
    assert (p.bit_length(), q.bit_length()) == (15, 30)
    assert p**4 > int(record["n"])


def test_gen_rejects_tiny_bits(capsys):
    code, _ = run(capsys, "gen", "--bits", "1")
    assert code == config.EXIT_USAGE


def test_seed_from_environment(capsys, monkeypatch):
    _, explicit = run(capsys, "gen", "--bits", "16", "--seed", "31")
    monkeypatch.setenv(config.SEED_ENV, "31")
    _, from_env = run(capsys, "gen", "--bits", "16")
    assert explicit == from_env


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("--n", "143", "--x", "60"), config.EXIT_OK),
        (("--n", "143", "--x", "15"), config.EXIT_VERIFIED_FAILURE),
        (("--method", "divisor", "--n", "143", "--divisor", "40"), config.EXIT_OK),
        (("--method", "gcd", "--n", "481", "--divisor", "12"), config.EXIT_OK),
        (("--method", "ed", "--n", "143", "--e", "7", "--d", "103"), config.EXIT_OK),
        (("--method", "boost", "--n", "143", "--divisor", "60"), config.EXIT_OK),
    ],
)
def test_recover_exit_codes(capsys, argv, expected):
    code, lines = run(capsys, "recover", *argv)
    assert code == expected
    outcome = json.loads(lines[0])
    assert outcome["n"] == argv[argv.index("--n") + 1]
    if expected == config.EXIT_OK:
        assert (outcome["p"], outcome["q"], outcome["phi"]) == tuple(
            {"143": ("11", "13", "120"), "481": ("13", "37", "432")}[outcome["n"]]
        )
    else:
        assert outcome["status"] == "verified_failure"
        assert outcome["reason"]


def test_recover_missing_order(capsys):
    code, _ = run(capsys, "recover", "--n", "143")
    assert code == config.EXIT_USAGE


def test_recover_even_modulus(capsys):
    code, _ = run(capsys, "recover", "--n", "144", "--x", "2")
    assert code == config.EXIT_USAGE


def test_montecarlo_rejects_zero_trials(capsys):
    code, _ = run(capsys, "montecarlo", "--bits", "8", "--trials", "0")
    assert code == config.EXIT_USAGE


def test_montecarlo_is_byte_identical(capsys):
    argv = ("montecarlo", "--bits", "8", "--trials", "50", "--seed", "17")
    code, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert code == config.EXIT_OK
    assert first == second
    assert len(first) == 51
    summary = json.loads(first[-1])
    assert summary["record"] == "summary"
    assert summary["trials"] == 50
    assert all(json.loads(line)["record"] == "trial" for line in first[:-1])


def test_montecarlo_out_file(capsys, tmp_path):
    target = tmp_path / "runs" / "mc.jsonl"
    argv = ("montecarlo", "--bits", "4", "--fixed", "--trials", "30", "--seed", "3", "--out", str(target))
    code, lines = run(capsys, *argv)
    assert code == config.EXIT_OK
    assert len(target.read_text().splitlines()) == 30
    summary = json.loads(lines[-1])
    assert summary["exact_probability"] == "3/5"


def test_census_check_passes(capsys):
    code, lines = run(capsys, "census", "--p", "11", "--q", "13", "--check")
    assert code == config.EXIT_OK
    document = json.loads(lines[0])
    assert document["check"] == "pass"
    assert document["census"]["entries"]["60"] == "32"
    assert document["profile"]["probability"] == "3/5"
    assert document["brute_force"]["entries"] == document["census"]["entries"]


def test_census_by_primes(capsys):
    code, lines = run(capsys, "census", "--p", "7", "--q", "11")
    assert code == config.EXIT_OK
    document = json.loads(lines[0])
    assert document["census"]["entries"]["30"] == "24"
    assert "brute_force" not in document


def test_census_by_modulus(capsys):
    code, lines = run(capsys, "census", "--n", "77", "--brute")
    assert code == config.EXIT_OK
    assert json.loads(lines[0])["brute_force"]["phi"] == "60"


def test_census_rejects_non_semiprime(capsys):
    code, _ = run(capsys, "census", "--n", "4")
    assert code == config.EXIT_USAGE


def test_census_needs_a_modulus(capsys):
    code, _ = run(capsys, "census")
    assert code == config.EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("frobnicate",),
        ("gen",),
        ("census",),
        ("montecarlo", "--bits", "8", "--trials", "0"),
        ("recover", "--method", "guess", "--n", "143"),
        ("recover", "--n", "not-a-number", "--x", "60"),
    ],
)
def test_usage_errors_become_exit_codes(capsys, argv):
    try:
        main(list(argv))
    except SystemExit as exc:
        code = exc.code
    else:
        pytest.fail("main returned without exiting")
    assert code == config.EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "Traceback" not in captured.err


def test_no_command(capsys):
    code, _ = run(capsys)
    assert code == config.EXIT_USAGE


def test_bench_small(capsys):
    code, lines = run(capsys, "bench", "--bits", "64", "--calls", "5", "--seed", "2")
    assert code == config.EXIT_OK
    report = json.loads(lines[0])
    assert report["record"] == "benchmark"
    assert report["succeeded"]
    assert report["calls"] == 5
