"""Tests for divisor spec parsing, normalization and storage."""

import json
from fractions import Fraction

import pytest
import yaml

from canring.errors import (
    NonHomogeneousError,
    ParseError,
    ProportionalComponentsError,
    UnknownVariableError,
)
from canring.storage.specs import (
    SpecStorage,
    dump_divisor_spec,
    parse_divisor_spec,
    serialize_divisor,
    spec_digest,
)

CONIC_YAML = """
variety:
  type: projective
  dim: 2
components:
  - coeff: 1/2
    poly: x0^2 + x1*x2
"""


class TestParse:
    def test_samples(self, divisors_dir):
        storage = SpecStorage()
        hyperplane = storage.load(divisors_dir / "example-hyperplane.json")
        assert hyperplane.variety.is_projective
        assert hyperplane.alphas == (Fraction(1, 2), Fraction(-1, 3))
        f0 = storage.load(divisors_dir / "f0-example.yaml")
        assert not f0.variety.is_projective
        assert f0.n == 4
        conic = storage.load(divisors_dir / "effective-conic.yaml")
        assert conic.components[0].degree == 2

    def test_yaml_and_json_agree(self):
        data = yaml.safe_load(CONIC_YAML)
        from_yaml = parse_divisor_spec(CONIC_YAML)
        from_json = parse_divisor_spec(json.dumps(data))
        assert spec_digest(from_yaml) == spec_digest(from_json)

    def test_integer_coefficient(self):
        divisor = parse_divisor_spec(
            "variety: {type: projective, dim: 1}\ncomponents:\n  - {coeff: 2, poly: x0}\n"
        )
        assert divisor.alphas == (Fraction(2),)

    def test_empty_components(self):
        divisor = parse_divisor_spec("variety: {type: hirzebruch, m: 1}\n")
        assert divisor.n == 0

    def test_non_homogeneous_names_term(self):
        text = CONIC_YAML.replace("x0^2 + x1*x2", "x0^2 + x1")
        with pytest.raises(NonHomogeneousError) as excinfo:
            parse_divisor_spec(text)
        assert excinfo.value.term == "x1"
        assert "x1" in str(excinfo.value)

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError) as excinfo:
            parse_divisor_spec(CONIC_YAML.replace("x1*x2", "x1*y"))
        assert excinfo.value.name == "y"

    def test_proportional_components(self):
        text = (
            "variety: {type: projective, dim: 1}\n"
            "components:\n"
            "  - {coeff: 1/2, poly: x0}\n"
            "  - {coeff: 1/3, poly: 2*x0}\n"
        )
        with pytest.raises(ProportionalComponentsError):
            parse_divisor_spec(text)

    @pytest.mark.parametrize(
        "variety",
        [
            "{type: projective}",
            "{type: projective, dim: 0}",
            "{type: projective, dim: 2, m: 1}",
            "{type: hirzebruch}",
            "{type: hirzebruch, m: -1}",
            "{type: grassmannian, dim: 2}",
        ],
    )
    def test_invalid_variety(self, variety):
        with pytest.raises(ParseError):
            parse_divisor_spec(f"variety: {variety}\n")

    @pytest.mark.parametrize("text", ["variety: [unclosed", "- 1\n- 2\n", ""])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_divisor_spec(text)

    def test_bad_coefficient(self):
        with pytest.raises(ParseError):
            parse_divisor_spec(CONIC_YAML.replace("1/2", "1/0"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            SpecStorage().load(tmp_path / "absent.yaml")


class TestNormalize:
    def test_serialize(self):
        divisor = parse_divisor_spec(CONIC_YAML.replace("1/2", "2/4"))
        spec = serialize_divisor(divisor)
        assert spec.variety.type == "projective"
        assert spec.variety.dim == 2
        assert spec.variety.m is None
        assert spec.components[0].coeff == "1/2"
        assert spec.components[0].poly == "x0^2 + x1*x2"

    def test_dump_formats(self, hyperplane_divisor):
        data = json.loads(dump_divisor_spec(hyperplane_divisor, "json"))
        assert data == {
            "variety": {"type": "projective", "dim": 2},
            "components": [
                {"coeff": "1/2", "poly": "x0"},
                {"coeff": "-1/3", "poly": "x1"},
            ],
        }
        assert yaml.safe_load(dump_divisor_spec(hyperplane_divisor)) == data
        with pytest.raises(ValueError):
            dump_divisor_spec(hyperplane_divisor, "toml")

    def test_digest(self, hyperplane_divisor, f0_divisor):
        digest = spec_digest(hyperplane_divisor)
        assert len(digest) == 64
        assert digest == spec_digest(parse_divisor_spec(dump_divisor_spec(hyperplane_divisor)))
        assert digest != spec_digest(f0_divisor)


class TestStorage:
    @pytest.mark.parametrize("name", ["saved.yaml", "nested/saved.json"])
    def test_save_and_load(self, tmp_path, f0_divisor, name):
        storage = SpecStorage()
        path = storage.save(f0_divisor, tmp_path / name)
        assert path.exists()
        loaded = storage.load(path)
        assert loaded.alphas == f0_divisor.alphas
        assert spec_digest(loaded) == spec_digest(f0_divisor)

    def test_json_suffix_writes_json(self, tmp_path, hyperplane_divisor):
        path = SpecStorage().save(hyperplane_divisor, tmp_path / "out.json")
        assert json.loads(path.read_text())["variety"]["dim"] == 2

    def test_json_suffix_reads_strict_json(self, tmp_path):
        flow = "variety: {type: projective, dim: 1}\ncomponents:\n  - {coeff: 1/2, poly: x0}\n"
        (tmp_path / "flow.yaml").write_text(flow)
        (tmp_path / "flow.json").write_text(flow)
        storage = SpecStorage()
        assert storage.load(tmp_path / "flow.yaml").alphas == (Fraction(1, 2),)
        with pytest.raises(ParseError, match="not valid JSON"):
            storage.load(tmp_path / "flow.json")

    def test_malformed_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"variety": {"type": "projective", "dim": 2}')
        with pytest.raises(ParseError, match="not valid JSON"):
            SpecStorage().load(path)

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            parse_divisor_spec(CONIC_YAML, "toml")
