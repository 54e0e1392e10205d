"""Parsing of JSON matroid spec files.

    {
      "matroid": {"type": "rank_table", "n": 2, "rank": [0, 1, 1, 1]},
      "multiplicity": {"type": "table", "values": ["1", "2", "3", "1"]}
    }

Matroid types: rank_table {n, rank}, uniform {r, n}, graphic {vertices, edges},
bond {vertices, edges}, integer_matrix {matrix, method?}. Multiplicity types:
trivial, table {values}, from_matrix (integer_matrix only, and its default).
Tables are indexed by bitmask: element e contributes bit 2**e.
"""

import json
import logging

from src.matroid.constructors import (
    IntegerMatrixSpec, MultigraphSpec, bond, from_integer_matrix, from_rank_table, graphic, uniform,
)
from src.matroid.multiplicity import MultiplicityMatroid, trivial_multiplicity
from src.utils.errors import SpecFileError
from src.utils.guards import check_size

logger = logging.getLogger(__name__)

MATROID_FIELDS = {
    "rank_table": ({"n", "rank"}, set()),
    "uniform": ({"r", "n"}, set()),
    "graphic": ({"vertices", "edges"}, set()),
    "bond": ({"vertices", "edges"}, set()),
    "integer_matrix": ({"matrix"}, {"method"}),
}

MULTIPLICITY_FIELDS = {
    "trivial": (set(), set()),
    "table": ({"values"}, set()),
    "from_matrix": (set(), set()),
}


def _check_fields(section, name, allowed):
    if not isinstance(section, dict):
        raise SpecFileError(f"'{name}' must be an object")
    kind = section.get("type")
    if kind not in allowed:
        raise SpecFileError(f"unknown {name} type {kind!r}; expected one of {sorted(allowed)}")
    required, optional = allowed[kind]
    present = set(section) - {"type"}
    missing = required - present
    unknown = present - required - optional
    if missing:
        raise SpecFileError(f"{name} of type {kind!r} is missing {sorted(missing)}")
    if unknown:
        raise SpecFileError(f"{name} of type {kind!r} has unknown fields {sorted(unknown)}")
    return kind


def parse_integer(value, where):
    """Accepts JSON integers or decimal strings; rejects booleans and floats."""
    if isinstance(value, bool):
        raise SpecFileError(f"{where}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        if text.lstrip("+-").isdigit():
            return int(text)
    raise SpecFileError(f"{where}: expected an integer or decimal string, got {value!r}")


def _integer_list(values, where):
    if not isinstance(values, list):
        raise SpecFileError(f"{where} must be an array")
    return [parse_integer(v, f"{where}[{k}]") for k, v in enumerate(values)]


def _build_matroid(section):
    kind = _check_fields(section, "matroid", MATROID_FIELDS)
    if kind == "rank_table":
        n = parse_integer(section["n"], "matroid.n")
        if n < 0:
            raise SpecFileError(f"matroid.n must be non-negative, got {n}")
        check_size(n, 'max_n', 'rank_table')
        rank = _integer_list(section["rank"], "matroid.rank")
        if len(rank) != 1 << n:
            raise SpecFileError(f"matroid.rank has {len(rank)} entries, expected {1 << n}")
        return kind, from_rank_table(n, rank), None
    if kind == "uniform":
        return kind, uniform(parse_integer(section["r"], "matroid.r"), parse_integer(section["n"], "matroid.n")), None
    if kind in ("graphic", "bond"):
        edges = section["edges"]
        if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
            raise SpecFileError("matroid.edges must be an array of [u, v] pairs")
        spec = MultigraphSpec(parse_integer(section["vertices"], "matroid.vertices"),
                              tuple(tuple(_integer_list(e, "matroid.edges")) for e in edges))
        return kind, (graphic(spec) if kind == "graphic" else bond(spec)), None
    rows = section["matrix"]
    if not isinstance(rows, list):
        raise SpecFileError("matroid.matrix must be an array of rows")
    spec = IntegerMatrixSpec(tuple(tuple(_integer_list(row, f"matroid.matrix[{k}]")) for k, row in enumerate(rows)))
    built = from_integer_matrix(spec, section.get("method", "snf"))
    return kind, built.matroid, built


def build_from_spec(data):
    """Turns a parsed spec document into a MultiplicityMatroid."""
    if not isinstance(data, dict):
        raise SpecFileError("spec file must hold a JSON object")
    unknown = set(data) - {"matroid", "multiplicity"}
    if unknown:
        raise SpecFileError(f"unknown top-level fields {sorted(unknown)}")
    if "matroid" not in data:
        raise SpecFileError("spec file has no 'matroid' section")
    kind, matroid, from_matrix = _build_matroid(data["matroid"])
    default = "from_matrix" if from_matrix is not None else "trivial"
    section = data.get("multiplicity", {"type": default})
    mult_kind = _check_fields(section, "multiplicity", MULTIPLICITY_FIELDS)
    if mult_kind == "from_matrix":
        if from_matrix is None:
            raise SpecFileError("multiplicity 'from_matrix' needs an integer_matrix description")
        return from_matrix
    if mult_kind == "trivial":
        return trivial_multiplicity(matroid)
    values = _integer_list(section["values"], "multiplicity.values")
    logger.debug("explicit multiplicity table on a %s matroid", kind)
    return MultiplicityMatroid(matroid, values)


def load_spec(path):
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path} is not valid JSON: {exc}") from exc
    return build_from_spec(data)
