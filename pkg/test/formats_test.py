import json

import pytest

from jordkit.algebra import (
    GradedSubspace,
    make_dt,
    make_k3,
    make_k10_broken,
    make_k10_tensor,
    standard_k10,
)
from jordkit.conversions import (
    algebra_from_dict,
    algebra_to_dict,
    dump_algebra,
    dump_map,
    dump_subspace,
    load_algebra,
    load_map,
    load_matrix,
    load_subspace,
    map_from_dict,
    matrix_from_dict,
    write_json,
)
from jordkit.errors import TableError
from jordkit.fixtures import fixture_path
from jordkit.linalg import Matrix
from jordkit.subalgebras import KINDS, maximal_subalgebra


def same_table(a, b):
    return a.labels == b.labels and a.entries() == b.entries()


# Test algebra files
def test_algebra_round_trip(tmp_path):
    d = make_dt("-3/2")
    path = tmp_path / "dt.json"
    dump_algebra(d, path)
    loaded = load_algebra(path)
    assert loaded.name == d.name
    assert (loaded.dim_even, loaded.dim_odd) == (2, 2)
    assert same_table(loaded, d)
    data = json.loads(path.read_text())
    assert all(isinstance(entry["c"], str) for entry in data["table"])
    assert data["implicit_zero_rows"] is True


def test_algebra_errors_name_the_path(tmp_path):
    data = algebra_to_dict(make_k3())
    del data["basis"]
    path = tmp_path / "no-basis.json"
    write_json(data, path)
    with pytest.raises(ValueError, match="no-basis.json") as info:
        load_algebra(path)
    assert "'basis'" in str(info.value)


def test_algebra_scalars_must_be_strings():
    data = algebra_to_dict(make_k3())
    data["table"][0]["c"] = 1
    with pytest.raises(ValueError, match="Scalars must be strings"):
        algebra_from_dict(data)


def test_algebra_table_errors():
    data = algebra_to_dict(make_k3())
    data["table"][0]["k"] = 7
    with pytest.raises(TableError):
        algebra_from_dict(data)
    with pytest.raises(ValueError, match="JSON object"):
        algebra_from_dict([1, 2])


def test_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ValueError, match="invalid JSON"):
        load_algebra(path)
    with pytest.raises(OSError):
        load_algebra(tmp_path / "missing.json")


# Test subspace, map and matrix files
def test_subspace_round_trip(tmp_path, k10):
    s = GradedSubspace.from_labels(k10, ["e", "a+b", "p2+q2"])
    path = tmp_path / "s.json"
    dump_subspace(s, path)
    assert load_subspace(k10, path) == s


def test_subspace_basis_must_match(tmp_path, k10, tensor):
    path = tmp_path / "s.json"
    dump_subspace(GradedSubspace.from_labels(tensor, ["1"]), path)
    with pytest.raises(ValueError, match="does not match"):
        load_subspace(k10, path)


def test_map_round_trip(tmp_path, k10, tensor, iso):
    path = tmp_path / "iso.json"
    dump_map(iso, path)
    assert load_map(k10, tensor, path) == iso


def test_map_expression_images(k10, tensor, iso):
    m = map_from_dict(k10, tensor, json.loads(fixture_path("k10-iso.json").read_text()))
    assert m == iso
    with pytest.raises(ValueError, match="images"):
        map_from_dict(k10, tensor, {"images": ["1"]})


def test_matrix_files(tmp_path):
    path = tmp_path / "m.json"
    write_json({"rows": [["1", "-1/2"], ["0", "3"]]}, path)
    assert load_matrix(path) == Matrix.from_rows([[1, "-1/2"], [0, 3]])
    with pytest.raises(ValueError, match="rows"):
        matrix_from_dict({"cols": []})


# Test the shipped fixtures
@pytest.mark.parametrize(
    "name, build",
    [
        ("k3.json", make_k3),
        ("dt-minus3.json", lambda: make_dt(-3)),
        ("k10-tensor.json", make_k10_tensor),
        ("broken.json", make_k10_broken),
        ("k10.json", standard_k10),
    ],
)
def test_fixture_algebras(name, build):
    assert same_table(load_algebra(fixture_path(name)), build())


@pytest.mark.parametrize("kind", KINDS)
def test_fixture_subalgebras(k10, kind):
    path = fixture_path(f"maximal-{kind}.json")
    assert load_subspace(k10, path) == maximal_subalgebra(kind, k10)


def test_missing_fixture(tmp_path):
    with pytest.raises(FileNotFoundError, match="nothing.json"):
        fixture_path("nothing.json", tmp_path)
