import json

import pytest

from ringel_ladders.errata import errata_report, render_report


@pytest.fixture(scope="module")
def entries():
    return {e.key: e for e in errata_report(60)}


@pytest.mark.parametrize(
    "key,witness",
    [
        ("L-coefficient-third-term-sign", {"n": 2, "m": 2, "printed": "8", "correct": "4"}),
        ("L-closed-form-constant", {"n": 2, "printed": "1+3z+8z^2", "correct": "1+3z+4z^2"}),
        ("R-expansion-third-sign", {"n": 2, "printed": "2z+38z^2", "correct": "1+3z+4z^2"}),
        ("scaled-U-missing-a2-factor", {"k": 2, "a2": "16z^2", "printed": "2+8z+16z^2", "correct": "1+8z+32z^2"}),
        ("ringel-variable-dimensions", {"n": 2, "printed": "16", "correct": "64"}),
        ("P-proof-O-recurrence", {"n": 3, "printed": "1+2z+5z^2+2z^3", "correct": "1+3z^2"}),
        ("R-proof-B-sign", {"n": 2, "printed": "2+14z+34z^2+8z^3", "correct": "1+3z+4z^2"}),
    ],
)
def test_witnesses(entries, key, witness):
    e = entries[key]
    assert e.witness == witness
    assert e.corrected_holds


def test_scaled_u_witness_is_literal_expansion(entries):
    # (1+4z)^2 + C(1,1) vs (1+4z)^2 + 16z^2
    assert entries["scaled-U-missing-a2-factor"].witness["printed"] == "2+8z+16z^2"


def test_range_witness(entries):
    w = entries["O-coefficient-range"].witness
    assert (w["n"], w["m"]) == (4, 2)


def test_p_argument_gives_non_integral_value(entries):
    assert entries["P-proof-chebyshev-argument"].witness["printed"] == "7/2+(1/2)z^2"


def test_r_coefficient_formula_has_no_witness(entries):
    e = entries["R-coefficient-formula"]
    assert e.witness is None
    assert e.summary == "no witness <= 60"


def test_outputs(entries):
    text = render_report(list(entries.values()))
    assert "witness n=2, m=2: printed 8, correct 4" in text
    assert "no witness <= 60" in text
    blob = json.dumps([e.to_dict() for e in entries.values()])
    back = json.loads(blob)
    assert {b["key"] for b in back} == set(entries)


def test_limit_is_respected():
    small = {e.key: e for e in errata_report(3)}
    assert small["O-coefficient-range"].witness is None
    assert small["O-coefficient-range"].summary == "no witness <= 3"
