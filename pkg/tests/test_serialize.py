"""Wire-format round trips and schema diagnostics."""

from fractions import Fraction

import pytest

from exactcat import serialize
from exactcat.instances import (
    SamplerConfig,
    finvectq,
    latticez,
    monopairsq,
    sample_exact_pair,
    sample_morphism,
    sample_object,
)
from exactcat.integral import IntMatrix
from exactcat.rational import RatMatrix
from exactcat.serialize import SchemaError, canonical_json

FV = finvectq()
LZ = latticez()
MP = monopairsq()
CFG = SamplerConfig(seed=31, max_dim=3, max_entry=5)


class TestScalars:
    def test_integers_stay_numbers(self):
        assert serialize.scalar_to_json(Fraction(4, 2)) == 2
        assert serialize.scalar_to_json(7) == 7

    def test_fractions_become_strings(self):
        assert serialize.scalar_to_json(Fraction(1, 2)) == "1/2"
        assert serialize.scalar_to_json(Fraction(-3, 4)) == "-3/4"


class TestMatrixRoundTrip:
    def test_rational(self):
        m = RatMatrix.from_rows([[Fraction(1, 2), 3], [0, Fraction(-7, 5)]])
        doc = serialize.matrix_to_json(m)
        assert serialize.parse_matrix(doc, "Q") == m

    def test_integer(self):
        m = IntMatrix.from_rows([[10**30, -2], [0, 5]])
        doc = serialize.matrix_to_json(m)
        assert serialize.parse_matrix(doc, "Z") == m

    def test_zero_dimensional(self):
        for m in (RatMatrix.zero(0, 3), RatMatrix.zero(2, 0), RatMatrix.zero(0, 0)):
            assert serialize.parse_matrix(serialize.matrix_to_json(m), "Q") == m

    def test_accepts_string_entries(self):
        doc = {"rows": 1, "cols": 2, "data": [["1/2", "3"]]}
        m = serialize.parse_matrix(doc, "Q")
        assert m == RatMatrix.from_rows([[Fraction(1, 2), 3]])


class TestMorphismRoundTrip:
    @pytest.mark.parametrize("inst", (FV, LZ, MP), ids=lambda i: i.name)
    def test_sampled_morphisms(self, inst):
        for i in range(15):
            x = sample_object(inst, CFG, ("ser-x", i))
            y = sample_object(inst, CFG, ("ser-y", i))
            f = sample_morphism(inst, x, y, CFG, ("ser-f", i))
            doc = serialize.mor_to_json(f)
            assert serialize.parse_mor(doc) == f
            # render/parse/render is byte-stable
            assert canonical_json(serialize.mor_to_json(serialize.parse_mor(doc))) == canonical_json(doc)

    def test_pairs(self):
        for inst in (FV, LZ, MP):
            pair = sample_exact_pair(inst, CFG, "ser-pair")
            doc = serialize.pair_to_json(pair)
            back = serialize.parse_pair(doc)
            assert back.f == pair.f and back.g == pair.g


class TestSchemaErrors:
    def test_missing_matrix_field(self):
        with pytest.raises(SchemaError) as err:
            serialize.parse_mor({"category": "FinVectQ", "dom": {"dim": 1}, "cod": {"dim": 1}})
        assert err.value.field == "matrix"

    def test_wrong_row_count_names_matrix(self):
        doc = {
            "category": "FinVectQ",
            "dom": {"dim": 2},
            "cod": {"dim": 1},
            "matrix": [[1], [1]],
        }
        with pytest.raises(SchemaError) as err:
            serialize.parse_mor(doc)
        assert "matrix" in err.value.field

    def test_unknown_category(self):
        doc = {"category": "Nope", "dom": {"dim": 1}, "cod": {"dim": 1}, "matrix": [[1]]}
        with pytest.raises(SchemaError) as err:
            serialize.parse_mor(doc)
        assert "category" in err.value.field

    def test_subspace_violation_names_matrix(self):
        doc = {
            "category": "MonoPairsQ",
            "dom": {"dim": 1, "sub": [[1]]},
            "cod": {"dim": 1, "sub": []},
            "matrix": [[1]],
        }
        with pytest.raises(SchemaError) as err:
            serialize.parse_mor(doc)
        assert "matrix" in err.value.field

    def test_lattice_requires_rank(self):
        with pytest.raises(SchemaError) as err:
            serialize.parse_obj("LatticeZ", {"dim": 2}, "dom")
        assert err.value.field == "dom.rank"

    def test_bad_pair_composite(self):
        f = {"category": "FinVectQ", "dom": {"dim": 1}, "cod": {"dim": 1}, "matrix": [[1]]}
        with pytest.raises(SchemaError):
            serialize.parse_pair({"f": f, "g": f})


class TestCanonicalJson:
    def test_sorted_and_compact(self):
        assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'

    def test_key_order_irrelevant(self):
        assert canonical_json({"x": 1, "y": 2}) == canonical_json({"y": 2, "x": 1})
