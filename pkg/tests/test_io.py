from fractions import Fraction

import pytest

from qpcat import jsonio
from qpcat.constructions import five_vertex_qp, q2222_qp, tubular_algebra
from qpcat.jsonio import (ParseError, parse_potential, parse_scalar, potential_from_json,
                          potential_to_json, potential_to_text, presentation_from_json,
                          presentation_to_json, qp_from_json, qp_to_json,
                          quiver_from_json, quiver_to_json, scalar_to_str,
                          word_from_json, word_to_json)
from qpcat.quiver import Quiver
from qpcat.scalars import RF_LAM, RF_ONE, rf


def test_scalar_parse_basics():
    assert parse_scalar("2/3") == rf(Fraction(2, 3))
    assert parse_scalar("-1") == rf(-1)
    assert parse_scalar("L") == RF_LAM
    assert parse_scalar("(L+1)/(L-2)") == (RF_LAM + RF_ONE) / (RF_LAM - rf(2))
    assert parse_scalar("L^2 - 2*L + 1") == (RF_LAM - RF_ONE) * (RF_LAM - RF_ONE)
    assert parse_scalar("1/(1-L)") == RF_ONE / (RF_ONE - RF_LAM)
    with pytest.raises(ParseError):
        parse_scalar("2 +")
    with pytest.raises(ParseError):
        parse_scalar("x")


def test_scalar_format_round_trip():
    samples = [rf(Fraction(-5, 3)), RF_LAM, (RF_LAM + rf(2)) / (RF_LAM ** 3 - RF_ONE),
               rf(0), -RF_LAM / (RF_LAM - RF_ONE), rf(7)]
    for s in samples:
        assert parse_scalar(scalar_to_str(s)) == s


def test_quiver_json_round_trip():
    q = five_vertex_qp().quiver
    again = quiver_from_json(quiver_to_json(q))
    assert again == q
    with pytest.raises(ParseError):
        quiver_from_json({"vertices": ["1"]})


def test_potential_json_round_trip():
    qp = q2222_qp()
    data = potential_to_json(qp.potential)
    assert all(isinstance(c["coef"], str) for c in data["cycles"])
    again = potential_from_json(data, qp.quiver)
    assert again == qp.potential


def test_qp_json_round_trip():
    qp = q2222_qp(rf(2))
    again = qp_from_json(qp_to_json(qp))
    assert again.quiver == qp.quiver and again.potential == qp.potential


def test_potential_text_grammar():
    qp = q2222_qp()
    q = qp.quiver
    pot = parse_potential("L*a*b*c - d*g*c + d*k*i - a*f*i + j*g*h - e*b*h + e*f*l - j*k*l", q)
    assert pot == qp.potential
    round_trip = parse_potential(potential_to_text(pot), q)
    assert round_trip == pot
    assert parse_potential("0", q).is_zero()
    assert potential_to_text(parse_potential("0", q)) == "0"
    with pytest.raises(ParseError, match="two arrows"):
        parse_potential("2*a", q)
    with pytest.raises(ParseError, match="after arrows"):
        parse_potential("a*2*b", q)


def test_potential_text_with_rational_function_coefficient():
    q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    pot = parse_potential("(L/(L-1))*a*b", q)
    assert pot.terms[("a", "b")] == RF_LAM / (RF_LAM - RF_ONE)
    assert parse_potential(potential_to_text(pot), q) == pot


def test_presentation_json_round_trip():
    pres = tubular_algebra()
    data = presentation_to_json(pres)
    again = presentation_from_json(data)
    assert again.quiver == pres.quiver
    assert [n for n, _ in again.relations] == [n for n, _ in pres.relations]
    for (_, r1), (_, r2) in zip(again.relations, pres.relations):
        assert r1 == r2


def test_word_json():
    w = ("o", "b1", "c1")
    assert word_from_json(word_to_json(w)) == w
    with pytest.raises(ParseError):
        word_from_json({})
