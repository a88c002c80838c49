import json
import os

import pytest
from sympy import Rational

from utils.validation import (
    DatumParseError, DatumValidationError, parse_character, parse_complex, parse_datum, parse_reals,
    parse_spin_weights, parse_split_datum, parse_weight, parse_weights, resolve_datum_path, serialize_datum,
    validate_coordinate,
)


SL2 = {
    "name": "sl2R",
    "rank": 1,
    "positive_roots": [{"coords": ["2"], "class": "noncompact"}],
    "gram": [["1/2"]],
}


def with_changes(**changes):
    raw = dict(SL2)
    raw.update(changes)
    return json.dumps(raw)


class TestCoordinates:
    @pytest.mark.parametrize("value", [1, "1/2", "-3/2", " 4 ", "2/4"])
    def test_valid(self, value):
        assert validate_coordinate(value) == (True, "")

    @pytest.mark.parametrize("value", ["1/3", "x", 0.5, True, "1/0", None])
    def test_invalid(self, value):
        ok, msg = validate_coordinate(value)
        assert not ok
        assert msg


class TestParseDatum:
    @pytest.mark.parametrize("name,order,rank", [
        ("sl2R.json", 1, 1), ("su2.json", 2, 1), ("su3.json", 6, 2), ("sp4R.json", 2, 2),
    ])
    def test_bundled(self, datum_text, name, order, rank):
        d = parse_datum(datum_text(name))
        assert d.weyl_order == order
        assert d.rank == rank

    def test_gram_is_quartered(self, sl2r):
        assert sl2r.gram == ((Rational(1, 8),),)
        assert sl2r.positive_roots == ((4,),)

    def test_truncated_file(self, datum_text):
        text = datum_text("su3.json")
        with pytest.raises(DatumParseError) as info:
            parse_datum(text[: len(text) // 2])
        assert info.value.line > 0

    def test_not_an_object(self):
        with pytest.raises(DatumValidationError):
            parse_datum("[1, 2]")

    def test_missing_field(self):
        raw = dict(SL2)
        del raw["gram"]
        with pytest.raises(DatumValidationError, match="gram"):
            parse_datum(json.dumps(raw))

    def test_third_denominator(self):
        text = with_changes(positive_roots=[{"coords": ["2/3"], "class": "noncompact"}])
        with pytest.raises(DatumValidationError):
            parse_datum(text)

    def test_bad_rank(self):
        with pytest.raises(DatumValidationError):
            parse_datum(with_changes(rank=0))

    def test_library_errors_become_validation_errors(self):
        with pytest.raises(DatumValidationError, match="BadClassification"):
            parse_datum(with_changes(positive_roots=[{"coords": ["2"], "class": "diagonal"}]))

    def test_extra_generators_must_be_integral(self):
        with pytest.raises(DatumValidationError):
            parse_datum(with_changes(extra_weyl_generators=[[["1/2"]]]))

    def test_extra_generator_enlarges_weyl_group(self):
        d = parse_datum(with_changes(extra_weyl_generators=[[[-1]]]))
        assert d.weyl_order == 2

    @pytest.mark.parametrize("name", ["sl2R.json", "su2.json", "su3.json", "sp4R.json"])
    def test_round_trip(self, datum_text, name):
        d = parse_datum(datum_text(name))
        text = serialize_datum(d)
        again = parse_datum(text)
        assert serialize_datum(again) == text
        assert again.positive_roots == d.positive_roots
        assert again.gram == d.gram


class TestSplitDatum:
    def test_bundled(self, sl2r_split):
        assert sl2r_split.real_rank == 1
        assert sl2r_split.root_values_on_a == ((Rational(2),),)

    def test_wrong_length(self):
        text = json.dumps({"real_rank": 1, "roots": [{"on_a": ["1", "2"], "on_t": []}]})
        with pytest.raises(DatumValidationError):
            parse_split_datum(text)

    def test_with_imaginary_part(self):
        text = json.dumps({
            "real_rank": 1,
            "roots": [{"on_a": ["1"], "on_t": ["1"]}],
            "imaginary": SL2,
        })
        sd = parse_split_datum(text)
        assert sd.t_rank == 1
        assert sd.root_values_on_t == ((2,),)
        assert sd.rho_p == (Rational(1, 2),)


class TestArguments:
    def test_weight(self):
        assert parse_weight("1,1/2", 2) == (2, 1)
        with pytest.raises(DatumValidationError):
            parse_weight("1", 2)
        with pytest.raises(DatumValidationError):
            parse_weight("1/3", 1)

    def test_weights(self):
        assert parse_weights("1;1/2", 1) == [(2,), (1,)]
        assert parse_weights("", 1) == []

    def test_spin_weights_are_integral(self):
        assert parse_spin_weights("1;-2", 1) == [(2,), (-4,)]
        with pytest.raises(DatumValidationError, match="integral lattice"):
            parse_spin_weights("1/2", 1)
        with pytest.raises(DatumValidationError, match="integral lattice"):
            parse_spin_weights("1,0;0,3/2", 2)

    def test_character(self):
        assert dict(parse_character("1:2;-1", 1).terms) == {(2,): 2, (-2,): 1}
        assert dict(parse_character("1;1", 1).terms) == {(2,): 2}
        assert parse_character("", 1).is_empty()
        with pytest.raises(DatumValidationError):
            parse_character("1:x", 1)

    def test_reals_and_complex(self):
        assert parse_reals("0.5, 1", 2) == (0.5, 1.0)
        with pytest.raises(DatumValidationError):
            parse_reals("0.5", 2)
        with pytest.raises(DatumValidationError):
            parse_reals("a,b")
        assert parse_complex("1,2") == 1 + 2j
        assert parse_complex("1+2j") == 1 + 2j
        with pytest.raises(DatumValidationError):
            parse_complex("one")

    def test_resolve_bundled_name(self):
        assert os.path.basename(resolve_datum_path("sl2R")) == "sl2R.json"
        with pytest.raises(DatumValidationError):
            resolve_datum_path("no_such_datum.json")
