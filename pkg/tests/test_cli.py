import json
import subprocess
import sys
from fractions import Fraction
from importlib import resources

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvex import cli
from curvex.binform import BinaryForm
from curvex.cli import FormSyntaxError, main, parse_form, parse_params


@pytest.fixture(scope="module")
def schema():
    text = resources.files("curvex").joinpath("cli_schema.json").read_text()
    return json.loads(text)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, schema, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    return doc["result"]


def test_golden_discriminant(capsys):
    assert run(capsys, "discriminant", "z^5 + w^5")[:2] == (0, "1\n")


def test_golden_family_equiv(capsys):
    code, out, _ = run(capsys, "family-equiv", "--family", "st", "--p1", "5,10",
                       "--p2", "15*5^(-4/5),10*5^(-3/5)", "--digits", "60")
    assert code == 0 and out.splitlines()[0] == "equivalent"


def test_golden_conjecture_json(capsys, schema):
    res = run_json(capsys, schema, "conjecture", "--suite", "quartic")
    assert res["reports"][0]["status"] == "verified"


def test_json_outputs_validate(capsys, schema):
    inv = run_json(capsys, schema, "invariants", "z^5 + s*z^4*w + t*z^3*w^2 + w^5",
                   "--param", "s=0", "--param", "t=1")
    assert inv["degree"] == 5 and inv["I12"] == "399973/10000000000"
    assert run_json(capsys, schema, "resultant", "z^2 - w^2", "z - 2*w")["resultant"] == "3"
    tv = run_json(capsys, schema, "transvect", "z^2 + w^2", "z^2 + w^2", "--order", "2")
    assert tv == {"degree": 0, "form": ["8"]}
    h = run_json(capsys, schema, "hessian", "z^3 + w^3")
    assert h["form"] == ["0", "36", "0"]
    m = run_json(capsys, schema, "milnor", "z^4 + z^2*w^2 + w^4")
    assert m["hilbert"] == [1, 2, 3, 2, 1] and m["gorenstein"]
    af = run_json(capsys, schema, "associated-form", "z^4 + 3*z^2*w^2 + w^4", "--normalize")
    assert [Fraction(x) for x in af["form"]] == [1, 0, -4, 0, 1]
    eq = run_json(capsys, schema, "equivalent", "z^4 + w^4", "z^4 + 4*w^4")
    assert eq["equivalent"] and eq["mode"] == "exact"
    fe = run_json(capsys, schema, "family-equiv", "--family", "t", "--n", "5",
                  "--p1", "2^(1/2)", "--p2", "2^(1/2)", "--digits", "30")
    assert fe["mode"] == "numeric" and fe["precision"] == 30


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "discriminant", "z^5 + w^4")[0] == 1
    assert run(capsys, "discriminant", "z^5 + s*w^5")[0] == 1
    assert run(capsys, "discriminant", "z^5 + + w^5")[0] == 1
    assert run(capsys, "discriminant", "z^2", "--param", "s")[0] == 1
    assert run(capsys, "no-such-command")[0] == 1


def test_domain_errors_exit_2(capsys):
    code, _, err = run(capsys, "milnor", "z^4 + 2*z^2*w^2 + w^4")
    assert code == 2 and "domain error" in err
    assert run(capsys, "transvect", "z^2", "w^2", "--order", "3")[0] == 2
    # t^5 = -5^5/4^4 makes f_t singular
    assert run(capsys, "family-equiv", "--family", "t", "--n", "5", "--p1=-(3125/256)^(1/5)",
               "--p2", "1", "--digits", "30")[0] == 2


def test_internal_errors_exit_3(capsys, monkeypatch):
    def boom(q):
        raise RuntimeError("broken")
    monkeypatch.setattr(cli, "discriminant", boom)
    code, _, err = run(capsys, "discriminant", "z^2 + w^2")
    assert code == 3 and "internal error" in err


def test_inhomogeneous_error_names_the_degrees():
    with pytest.raises(FormSyntaxError, match=r"\[4, 5\]"):
        parse_form("z^5 + w^4")


def test_parse_with_params_and_repeated_factors():
    q = parse_form("z^4 + t*z^2*w^2 + w^4", parse_params(["t=-3/2"])).form
    assert q == BinaryForm([1, 0, Fraction(-3, 2), 0, 1])
    assert parse_form("2*z*z*w - w^3").form == BinaryForm([-1, 0, 2, 0])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "curvex", "discriminant", "z^3 + w^3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"


coeff = st.fractions(min_value=-50, max_value=50, max_denominator=9)


@settings(max_examples=60, deadline=None)
@given(st.lists(coeff, min_size=2, max_size=8).filter(lambda c: any(c)))
def test_print_parse_round_trip(coeffs):
    q = BinaryForm(coeffs)
    assert parse_form(str(q)).form == q
