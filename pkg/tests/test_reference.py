import json

import pytest

from g2spec.algebraic import QuadraticSurd
from g2spec.reference import ReferenceError, load_reference
from g2spec.reps import RepLabelG2

ADJ, STD10 = RepLabelG2(0, 1), RepLabelG2(1, 0)


def test_packaged_blocks(ref):
    assert set(ref) == {RepLabelG2(0, 0), STD10, ADJ}
    assert ref[STD10].dirac.shape == (10, 10)
    assert ref[ADJ].dirac.shape == (12, 12)
    assert sum(m for _, m in ref[ADJ].eigenvalues) == 12


def test_illegible_coefficient_is_null(ref):
    p2 = next(r for r in ref[ADJ].relations if r.name == "p2")
    assert p2.coefficients["q7"] is None


def test_printed_eigenvalues_are_symmetric(ref):
    for block in ref.values():
        spec = dict(block.eigenvalues)
        assert all(spec.get(-v) == m for v, m in spec.items())
        assert all(isinstance(v, QuadraticSurd) for v in spec)


def test_missing_block(tmp_path, ref):
    from importlib import resources

    raw = json.loads(resources.files("g2spec").joinpath("data/reference.json").read_text())
    del raw["(0,1)"]
    p = tmp_path / "ref.json"
    p.write_text(json.dumps(raw))
    with pytest.raises(ReferenceError, match=r"\(0,1\)"):
        load_reference(p)


def test_bad_json(tmp_path):
    p = tmp_path / "ref.json"
    p.write_text("{not json")
    with pytest.raises(ReferenceError):
        load_reference(p)


def test_non_square_matrix(tmp_path):
    from importlib import resources

    raw = json.loads(resources.files("g2spec").joinpath("data/reference.json").read_text())
    raw["(1,0)"]["dirac"][0] = raw["(1,0)"]["dirac"][0][:-1]
    p = tmp_path / "ref.json"
    p.write_text(json.dumps(raw))
    with pytest.raises(ReferenceError, match="square"):
        load_reference(p)
