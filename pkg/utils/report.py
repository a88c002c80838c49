"""
Report type and JSON/TSV emitters for spinlat commands

Exact values leave as strings (integers "12", rationals "1/2"), characters as
lists of [[true coords], "mult"] sorted by descending doubled coordinates,
floating values rounded to the configured number of significant digits and
complex numbers as [re, im].
"""

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Tuple

from sympy import Rational

try:
    from ..config import get_float_digits
    from .charlat import VirtualCharacter, true_coords
except (ImportError, ValueError):
    from config import get_float_digits
    from utils.charlat import VirtualCharacter, true_coords


REPORT_FORMATS = ("json", "tsv")


@dataclass(frozen=True)
class WeightValue:
    """Marks a doubled-lattice weight so it is reported in true coordinates."""

    coords: Tuple[int, ...]


@dataclass
class Report:
    """
    Outcome of one command.

    Attributes:
        command: Subcommand name
        inputs: Echo of the arguments as given (strings)
        digest: sha256 over the command, its inputs and any attached file text
        results: Named values in the order the command produced them
        checks: Named assertions and whether they held
        format: Output format chosen on the command line
    """

    command: str
    inputs: Dict[str, str]
    digest: str
    results: List[Tuple[str, Any]] = field(default_factory=list)
    checks: List[Tuple[str, bool]] = field(default_factory=list)
    format: str = "json"

    @classmethod
    def create(cls, command: str, inputs: Mapping[str, Any], attachments: Iterable[str] = ()) -> "Report":
        echo = {k: str(v) for k, v in inputs.items() if v is not None}
        h = hashlib.sha256()
        h.update(json.dumps({"command": command, "inputs": echo}, sort_keys=True).encode("utf-8"))
        for text in attachments:
            h.update(b"\0")
            h.update(text.encode("utf-8"))
        return cls(command=command, inputs=echo, digest=h.hexdigest())

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def _float(x: float) -> float:
    return float(f"{x:.{get_float_digits()}g}")


def _weight(coords: Iterable[int]) -> List[str]:
    return [str(x) for x in true_coords(tuple(coords))]


def _weighted_terms(items: Iterable[Tuple[Tuple[int, ...], int]]) -> List[Any]:
    return [[_weight(w), str(m)] for w, m in sorted(items, reverse=True)]


def encode_value(value: Any) -> Any:
    """
    Convert a result value into its JSON form.

    Example:
        >>> encode_value(Rational(1, 2))
        '1/2'
        >>> encode_value(VirtualCharacter(1, {(2,): 1, (-2,): -1}))
        [[['1'], '1'], [['-1'], '-1']]
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Rational):
        return str(value)
    if isinstance(value, float):
        return _float(value)
    if isinstance(value, complex):
        return [_float(value.real), _float(value.imag)]
    if isinstance(value, WeightValue):
        return _weight(value.coords)
    if isinstance(value, VirtualCharacter):
        return _weighted_terms(value.items())
    if isinstance(value, Mapping):
        # weight -> integer maps (expansion coefficients)
        return _weighted_terms(value.items())
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    return str(value)


def report_to_dict(r: Report) -> Dict[str, Any]:
    return {
        "command": r.command,
        "inputs": r.inputs,
        "digest": r.digest,
        "results": [{"name": name, "value": encode_value(v)} for name, v in r.results],
        "checks": [{"name": name, "passed": bool(ok)} for name, ok in r.checks],
        "passed": r.passed,
    }


def emit_report(r: Report, fmt: str = "json") -> str:
    """
    Render a report as one JSON object or as TSV rows.

    TSV has one "name<TAB>value" row per result, values JSON-encoded unless
    they are plain strings, then one "check:name<TAB>pass|fail" row per check.

    Raises:
        ValueError: If fmt is not json or tsv
    """
    if fmt not in REPORT_FORMATS:
        raise ValueError(f"Unknown report format {fmt!r} (expected json or tsv)")
    if fmt == "json":
        return json.dumps(report_to_dict(r), separators=(",", ":")) + "\n"

    lines = ["name\tvalue"]
    for name, v in r.results:
        encoded = encode_value(v)
        lines.append(f"{name}\t{encoded if isinstance(encoded, str) else json.dumps(encoded, separators=(',', ':'))}")
    for name, ok in r.checks:
        lines.append(f"check:{name}\t{'pass' if ok else 'fail'}")
    return "\n".join(lines) + "\n"
