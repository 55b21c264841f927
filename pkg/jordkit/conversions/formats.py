"""
formats.py

JSON codecs for the files jordkit reads and writes. Scalars are always the
strings "p/q" (or "p"), never JSON numbers.

    algebra:  {"name", "dim_even", "dim_odd", "basis": [str],
               "table": [{"i", "j", "k", "c"}], "implicit_zero_rows": bool}
    subspace: {"basis": [str], "rows": [[str]]}
    map:      {"images": [[str]]}, one image per source basis vector
    matrix:   {"rows": [[str]]}
"""
from __future__ import annotations

import json
import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Any, Union

from jordkit.algebra import GradedSubspace, SuperAlgebra
from jordkit.linalg import Matrix
from jordkit.morphisms import Morphism
from jordkit.utils import format_scalar, parse_scalar

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _field(data: Mapping[str, Any], key: str, kind: str) -> Any:
    if not isinstance(data, Mapping):
        found = type(data).__name__
        raise ValueError(f"{kind} file must hold a JSON object, got {found}")
    if key not in data:
        raise ValueError(f"{kind} file is missing the field {key!r}")
    return data[key]


def _scalar(value: Any) -> Any:
    if not isinstance(value, str):
        raise ValueError(f"Scalars must be strings like \"-3/2\", got {value!r}")
    return parse_scalar(value)


def read_json(path: PathLike) -> Any:
    """
    Raises:
        OSError: If the file cannot be read.
        ValueError: If it is not valid JSON.
    """
    path = Path(path)
    with path.open(encoding="utf-8") as handle:
        try:
            return json.load(handle)
        except json.JSONDecodeError as error:
            raise ValueError(f"invalid JSON ({error})") from error


def write_json(data: Any, path: PathLike):
    with Path(path).open("w", encoding="utf-8") as handle:
        json.dump(data, handle, indent=2)
        handle.write("\n")


# Algebras


def algebra_to_dict(a: SuperAlgebra) -> dict[str, Any]:
    return {
        "name": a.name,
        "dim_even": a.dim_even,
        "dim_odd": a.dim_odd,
        "basis": list(a.labels),
        "table": [
            {"i": i, "j": j, "k": k, "c": format_scalar(c)}
            for i, j, k, c in a.entries()
        ],
        "implicit_zero_rows": True,
    }


def algebra_from_dict(data: Mapping[str, Any]) -> SuperAlgebra:
    """
    Raises:
        ValueError: For a missing field or a malformed table (TableError).
    """
    entries = []
    for entry in _field(data, "table", "algebra"):
        entries.append(
            tuple(_field(entry, key, "table entry") for key in ("i", "j", "k"))
            + (_scalar(_field(entry, "c", "table entry")),)
        )
    return SuperAlgebra(
        _field(data, "name", "algebra"),
        _field(data, "dim_even", "algebra"),
        _field(data, "dim_odd", "algebra"),
        _field(data, "basis", "algebra"),
        entries,
        implicit_zero_rows=bool(data.get("implicit_zero_rows", False)),
    )


def load_algebra(path: PathLike) -> SuperAlgebra:
    try:
        algebra = algebra_from_dict(read_json(path))
    except ValueError as error:
        raise ValueError(f"{path}: {error}") from error
    logger.debug("loaded %s of dimension %d from %s", algebra.name, algebra.dim, path)
    return algebra


def dump_algebra(a: SuperAlgebra, path: PathLike):
    write_json(algebra_to_dict(a), path)


# Subspaces


def subspace_to_dict(s: GradedSubspace) -> dict[str, Any]:
    return {"basis": list(s.algebra.labels), "rows": s.rows()}


def subspace_from_dict(
    algebra: SuperAlgebra, data: Mapping[str, Any]
) -> GradedSubspace:
    """
    Raises:
        ValueError: If the basis labels differ from the algebra's or a row has
            the wrong length.
    """
    basis = tuple(_field(data, "basis", "subspace"))
    if basis != algebra.labels:
        raise ValueError(f"subspace basis {basis} does not match {algebra.labels}")
    elements = []
    for row in _field(data, "rows", "subspace"):
        if len(row) != algebra.dim:
            raise ValueError(
                f"subspace row {row} has length {len(row)}, not {algebra.dim}"
            )
        elements.append(algebra.element([_scalar(c) for c in row]))
    return GradedSubspace.from_elements(algebra, elements)


def load_subspace(algebra: SuperAlgebra, path: PathLike) -> GradedSubspace:
    try:
        return subspace_from_dict(algebra, read_json(path))
    except ValueError as error:
        raise ValueError(f"{path}: {error}") from error


def dump_subspace(s: GradedSubspace, path: PathLike):
    write_json(subspace_to_dict(s), path)


# Maps and matrices


def map_to_dict(m: Morphism) -> dict[str, Any]:
    return {"images": [m.image(j).to_strings() for j in range(m.source.dim)]}


def map_from_dict(
    source: SuperAlgebra, target: SuperAlgebra, data: Mapping[str, Any]
) -> Morphism:
    """
    Each image is a list of coefficient strings over the target basis, or a
    single expression such as ``"3/2*1 - 2*ee"``.
    """
    images = _field(data, "images", "map")
    if len(images) != source.dim:
        raise ValueError(
            f"map has {len(images)} images for {source.dim} basis vectors"
        )
    elements = []
    for image in images:
        if isinstance(image, str):
            elements.append(target.parse_element(image))
        else:
            elements.append(target.element([_scalar(c) for c in image]))
    return Morphism.from_images(source, target, elements)


def load_map(source: SuperAlgebra, target: SuperAlgebra, path: PathLike) -> Morphism:
    try:
        return map_from_dict(source, target, read_json(path))
    except ValueError as error:
        raise ValueError(f"{path}: {error}") from error


def dump_map(m: Morphism, path: PathLike):
    write_json(map_to_dict(m), path)


def matrix_to_dict(m: Matrix) -> dict[str, Any]:
    return {"rows": m.to_strings()}


def matrix_from_dict(data: Mapping[str, Any]) -> Matrix:
    rows = _field(data, "rows", "matrix")
    return Matrix.from_rows([[_scalar(c) for c in row] for row in rows])


def load_matrix(path: PathLike) -> Matrix:
    try:
        return matrix_from_dict(read_json(path))
    except ValueError as error:
        raise ValueError(f"{path}: {error}") from error
