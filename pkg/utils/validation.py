"""
Validation utilities for spinlat input files and command-line arguments

DatumFile JSON (all coordinates TRUE, numbers or strings like "1/2"):

    {
      "name": "sl2R",
      "rank": 1,
      "positive_roots": [{"coords": ["2"], "class": "noncompact"}],
      "gram": [["1/2"]],
      "extra_weyl_generators": []
    }

The Gram matrix is B on true coordinates; it is divided by 4 on load since
CartanDatum works on the doubled lattice.

Split datum JSON:

    {
      "name": "sl2R_split",
      "real_rank": 1,
      "roots": [{"on_a": ["2"], "on_t": []}],
      "imaginary": null
    }
"""

import json
import os
import re
from typing import Any, Dict, List, Sequence, Tuple

from sympy import Rational

try:
    from ..config import get_data_dir
    from .charlat import (
        CartanDatum, HalfLatticeError, LatticeError, VirtualCharacter, Weight, doubled, true_coords,
    )
    from .epcore import EpError, SplitCartanDatum, build_cartan_datum
except (ImportError, ValueError):
    from config import get_data_dir
    from utils.charlat import (
        CartanDatum, HalfLatticeError, LatticeError, VirtualCharacter, Weight, doubled, true_coords,
    )
    from utils.epcore import EpError, SplitCartanDatum, build_cartan_datum


DATUM_SCHEMA_HELP = """DatumFile schema (JSON, true coordinates, denominators 1 or 2):
  name                   string
  rank                   positive integer
  positive_roots         list of {"coords": [r_1..r_rank], "class": compact|noncompact|real|complex}
  gram                   rank x rank symmetric rational matrix of B on true coordinates
  extra_weyl_generators  optional list of rank x rank integer matrices
Split datum files carry real_rank, roots [{"on_a": [...], "on_t": [...]}] and an optional
"imaginary" DatumFile object for the T factor."""

_COORD = re.compile(r"^\s*[+-]?\d+(\s*/\s*0*[1-9]\d*)?\s*$")


class DatumParseError(Exception):
    """Datum text is not well-formed JSON"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})" if line else message)
        self.line = line
        self.column = column


class DatumValidationError(Exception):
    """Datum text is JSON but does not describe a valid Cartan datum"""
    pass


def validate_coordinate(value: Any) -> Tuple[bool, str]:
    """
    Validate one true coordinate.

    Args:
        value: int or string "p" / "p/q"

    Returns:
        Tuple of (is_valid, error_message). If valid, error_message is empty string.

    Example:
        >>> validate_coordinate("1/2")
        (True, "")
        >>> validate_coordinate("1/3")
        (False, "Coordinate 1/3 has denominator larger than 2")
    """
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        return False, f"Coordinate {value!r} must be an integer or a string like \"1/2\""
    if isinstance(value, str) and not _COORD.match(value):
        return False, f"Coordinate {value!r} is not a rational number"
    q = Rational(str(value).replace(" ", ""))
    if q.q > 2:
        return False, f"Coordinate {value} has denominator larger than 2"
    return True, ""


def _coords(values: Any, rank: int, what: str) -> Weight:
    if not isinstance(values, list) or len(values) != rank:
        raise DatumValidationError(f"{what} must be a list of {rank} coordinates")
    for v in values:
        ok, msg = validate_coordinate(v)
        if not ok:
            raise DatumValidationError(f"{what}: {msg}")
    return doubled([str(v).replace(" ", "") for v in values])


def _rational_matrix(rows: Any, size: int, what: str) -> List[List[Rational]]:
    if not isinstance(rows, list) or len(rows) != size or any(not isinstance(r, list) or len(r) != size for r in rows):
        raise DatumValidationError(f"{what} must be a {size}x{size} matrix")
    try:
        return [[Rational(str(x).replace(" ", "")) for x in row] for row in rows]
    except (TypeError, ValueError, SyntaxError) as e:
        raise DatumValidationError(f"{what} has a non-rational entry: {e}")


def _load_json(text: str) -> Dict[str, Any]:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DatumParseError(e.msg, e.lineno, e.colno)
    if not isinstance(raw, dict):
        raise DatumValidationError("Datum file must hold a JSON object")
    return raw


def datum_from_dict(raw: Dict[str, Any]) -> CartanDatum:
    """
    Build a CartanDatum from an already decoded DatumFile object.

    Raises:
        DatumValidationError: On schema violations or rejected root data
    """
    missing = [k for k in ("name", "rank", "positive_roots", "gram") if k not in raw]
    if missing:
        raise DatumValidationError(f"Missing field(s): {', '.join(missing)}")
    rank = raw["rank"]
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise DatumValidationError(f"rank must be a positive integer, got {rank!r}")
    if not isinstance(raw["positive_roots"], list):
        raise DatumValidationError("positive_roots must be a list")

    roots, classes = [], []
    for i, entry in enumerate(raw["positive_roots"]):
        if not isinstance(entry, dict) or "coords" not in entry or "class" not in entry:
            raise DatumValidationError(f"positive_roots[{i}] needs 'coords' and 'class'")
        roots.append(_coords(entry["coords"], rank, f"positive_roots[{i}]"))
        classes.append(entry["class"])

    gram = [[x / 4 for x in row] for row in _rational_matrix(raw["gram"], rank, "gram")]

    extras = []
    for i, m in enumerate(raw.get("extra_weyl_generators") or []):
        matrix = _rational_matrix(m, rank, f"extra_weyl_generators[{i}]")
        if any(not x.is_integer for row in matrix for x in row):
            raise DatumValidationError(f"extra_weyl_generators[{i}] must be an integer matrix")
        extras.append([[int(x) for x in row] for row in matrix])

    try:
        return build_cartan_datum(str(raw["name"]), rank, roots, classes, gram, extras,
                                  compact_cartan=raw.get("compact_cartan", True))
    except (EpError, LatticeError) as e:
        raise DatumValidationError(f"{type(e).__name__}: {e}")


def parse_datum(text: str) -> CartanDatum:
    """
    Parse DatumFile JSON text into a validated CartanDatum.

    Raises:
        DatumParseError: If the text is not JSON (carries line and column)
        DatumValidationError: If the JSON does not describe a valid datum
    """
    return datum_from_dict(_load_json(text))


def datum_to_dict(d: CartanDatum) -> Dict[str, Any]:
    def coord(x: Rational) -> str:
        return str(x)

    result = {
        "name": d.name,
        "rank": d.rank,
        "positive_roots": [
            {"coords": [coord(x) for x in true_coords(r)], "class": c}
            for r, c in zip(d.positive_roots, d.root_class)
        ],
        "gram": [[coord(x * 4) for x in row] for row in d.gram],
    }
    if d.extra_generators:
        result["extra_weyl_generators"] = [[list(row) for row in m] for m in d.extra_generators]
    if not d.is_all_imaginary():
        result["compact_cartan"] = False
    return result


def serialize_datum(d: CartanDatum) -> str:
    """Inverse of parse_datum: DatumFile JSON with fixed key order."""
    return json.dumps(datum_to_dict(d), indent=2) + "\n"


def parse_split_datum(text: str) -> SplitCartanDatum:
    """
    Parse split datum JSON text.

    Raises:
        DatumParseError: If the text is not JSON
        DatumValidationError: On schema violations
    """
    raw = _load_json(text)
    real_rank = raw.get("real_rank")
    if isinstance(real_rank, bool) or not isinstance(real_rank, int) or real_rank < 0:
        raise DatumValidationError(f"real_rank must be a nonnegative integer, got {real_rank!r}")
    imaginary = datum_from_dict(raw["imaginary"]) if raw.get("imaginary") else None
    t_rank = imaginary.rank if imaginary is not None else 0

    on_a, on_t = [], []
    for i, entry in enumerate(raw.get("roots") or []):
        if not isinstance(entry, dict) or "on_a" not in entry:
            raise DatumValidationError(f"roots[{i}] needs 'on_a'")
        values = entry["on_a"]
        if not isinstance(values, list) or len(values) != real_rank:
            raise DatumValidationError(f"roots[{i}].on_a must have {real_rank} entries")
        try:
            on_a.append([Rational(str(x).replace(" ", "")) for x in values])
        except (TypeError, ValueError, SyntaxError) as e:
            raise DatumValidationError(f"roots[{i}].on_a has a non-rational entry: {e}")
        on_t.append(_coords(entry.get("on_t") or [], t_rank, f"roots[{i}].on_t"))
    try:
        return SplitCartanDatum.derive(real_rank, on_a, on_t, imaginary, str(raw.get("name", "split")))
    except EpError as e:
        raise DatumValidationError(f"{type(e).__name__}: {e}")


def resolve_datum_path(path: str) -> str:
    """
    Resolve a datum path; bare names fall back to the bundled data directory.

    Example:
        >>> os.path.basename(resolve_datum_path("sl2R.json"))
        'sl2R.json'
    """
    if os.path.exists(path):
        return path
    bundled = os.path.join(get_data_dir(), path)
    if os.path.exists(bundled):
        return bundled
    if not path.endswith(".json") and os.path.exists(bundled + ".json"):
        return bundled + ".json"
    raise DatumValidationError(f"Datum file not found: {path}")


def read_text(path: str) -> str:
    with open(resolve_datum_path(path), "r", encoding="utf-8") as f:
        return f.read()


# ============================================================================
# Argument syntax
# ============================================================================

def parse_weight(text: str, rank: int) -> Weight:
    """
    Parse a true-coordinate weight "1,1/2" into doubled coordinates.

    Example:
        >>> parse_weight("1,1/2", 2)
        (2, 1)
    """
    parts = [p.strip() for p in str(text).split(",") if p.strip()]
    if len(parts) != rank:
        raise DatumValidationError(f"Weight {text!r} must have {rank} coordinates")
    for p in parts:
        ok, msg = validate_coordinate(p)
        if not ok:
            raise DatumValidationError(msg)
    try:
        return doubled(parts)
    except HalfLatticeError as e:
        raise DatumValidationError(str(e))


def parse_weights(text: str, rank: int) -> List[Weight]:
    """Semicolon separated weights; an empty string is the empty list."""
    return [parse_weight(chunk, rank) for chunk in str(text).split(";") if chunk.strip()]


def parse_spin_weights(text: str, rank: int) -> List[Weight]:
    """
    Weights of V+ for the spin commands. Half spin weights are halves of
    signed sums, so each mu must be integral in true coordinates.

    Example:
        >>> parse_spin_weights("1;2", 1)
        [(2,), (4,)]
    """
    weights = parse_weights(text, rank)
    for w in weights:
        if any(x % 2 for x in w):
            raise DatumValidationError(
                f"Spin weights must lie in the integral lattice, got {list(true_coords(w))}"
            )
    return weights


def parse_character(text: str, rank: int) -> VirtualCharacter:
    """
    Parse "coords[:mult];coords[:mult];..." into a VirtualCharacter.

    "0" is the trivial character of rank 1, "" is the empty character.

    Example:
        >>> dict(parse_character("1:2;-1", 1).terms)
        {(2,): 2, (-2,): 1}
    """
    terms: Dict[Weight, int] = {}
    for chunk in str(text).split(";"):
        if not chunk.strip():
            continue
        coords, _, mult = chunk.partition(":")
        try:
            m = int(mult) if mult.strip() else 1
        except ValueError:
            raise DatumValidationError(f"Multiplicity {mult!r} is not an integer")
        w = parse_weight(coords, rank)
        terms[w] = terms.get(w, 0) + m
    return VirtualCharacter(rank, terms)


def parse_reals(text: str, length: int = -1) -> Tuple[float, ...]:
    """Comma separated floats; length -1 accepts any count."""
    try:
        values = tuple(float(p) for p in str(text).split(",") if p.strip())
    except ValueError:
        raise DatumValidationError(f"{text!r} is not a comma separated list of numbers")
    if length >= 0 and len(values) != length:
        raise DatumValidationError(f"Expected {length} numbers, got {len(values)}")
    return values


def parse_complex(text: str) -> complex:
    """Accepts "re,im" or a Python complex literal such as "1+2j"."""
    parts = [p.strip() for p in str(text).split(",")]
    try:
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
        return complex(str(text).replace(" ", ""))
    except ValueError:
        raise DatumValidationError(f"{text!r} is not a complex number")
