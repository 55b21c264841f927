from jordkit.conversions.formats import (
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
    map_to_dict,
    matrix_from_dict,
    matrix_to_dict,
    read_json,
    subspace_from_dict,
    subspace_to_dict,
    write_json,
)

__all__ = [
    "algebra_from_dict",
    "algebra_to_dict",
    "dump_algebra",
    "dump_map",
    "dump_subspace",
    "load_algebra",
    "load_map",
    "load_matrix",
    "load_subspace",
    "map_from_dict",
    "map_to_dict",
    "matrix_from_dict",
    "matrix_to_dict",
    "read_json",
    "subspace_from_dict",
    "subspace_to_dict",
    "write_json",
]
