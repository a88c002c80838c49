"""
spinlat command line

Builds one argparse subcommand per registered node, coerces the string
arguments into library values according to each node's INPUT_TYPES slots,
runs the node and prints its report.

Exit codes: 0 when every check passed, 1 when a check failed, 2 on usage,
parse or library errors.
"""

import argparse
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

try:
    from .nodes import NODE_CLASS_MAPPINGS, NODE_DISPLAY_NAME_MAPPINGS
    from .nodes.base import SpinlatException, SpinlatValidationError
    from .utils.charlat import LatticeError, TorusPoint
    from .utils.clifford import CliffordError
    from .utils.epcore import EpError
    from .utils.report import REPORT_FORMATS, Report, emit_report
    from .utils.validation import (
        DATUM_SCHEMA_HELP, DatumParseError, DatumValidationError, parse_character, parse_complex,
        parse_datum, parse_reals, parse_spin_weights, parse_split_datum, parse_weight, read_text,
    )
except (ImportError, ValueError):
    from nodes import NODE_CLASS_MAPPINGS, NODE_DISPLAY_NAME_MAPPINGS
    from nodes.base import SpinlatException, SpinlatValidationError
    from utils.charlat import LatticeError, TorusPoint
    from utils.clifford import CliffordError
    from utils.epcore import EpError
    from utils.report import REPORT_FORMATS, Report, emit_report
    from utils.validation import (
        DATUM_SCHEMA_HELP, DatumParseError, DatumValidationError, parse_character, parse_complex,
        parse_datum, parse_reals, parse_spin_weights, parse_split_datum, parse_weight, read_text,
    )


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

_FILE_SLOTS = ("DATUM", "SPLIT_DATUM")
_LATTICE_SLOTS = ("WEIGHT", "SPIN_WEIGHTS", "CHARACTER")


def _log(message: str) -> None:
    print(f"[Spinlat] {message}", file=sys.stderr)


def _usage_error(message: str) -> Tuple[None, int]:
    _log(message)
    print(DATUM_SCHEMA_HELP, file=sys.stderr)
    return None, EXIT_USAGE


def _flag(name: str) -> str:
    return "--" + name.replace("_", "-")


def _slots(node_class) -> List[Tuple[str, Any, Dict[str, Any], bool]]:
    input_types = node_class.INPUT_TYPES()
    out = []
    for group, required in (("required", True), ("optional", False)):
        for name, (slot, options) in input_types.get(group, {}).items():
            out.append((name, slot, options or {}, required))
    return out


def _add_argument(sub: argparse.ArgumentParser, name: str, slot: Any, options: Dict[str, Any],
                  required: bool) -> None:
    kwargs: Dict[str, Any] = {"dest": name, "help": options.get("help")}
    if isinstance(slot, list):
        kwargs.update(choices=slot, default=options.get("default"))
    elif slot == "BOOLEAN":
        kwargs.update(action="store_true")
        sub.add_argument(_flag(name), **kwargs)
        return
    elif slot == "INT":
        kwargs.update(type=int)
    elif slot == "FLOAT":
        kwargs.update(type=float)
    # defaults stay with the node so an omitted option is distinguishable
    kwargs["required"] = required
    sub.add_argument(_flag(name), **kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinlat",
        description="Exact Euler-Poincare, spin module and orbital integral checks",
        epilog=DATUM_SCHEMA_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--format", choices=REPORT_FORMATS, default="json", help="report format")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    for command, node_class in NODE_CLASS_MAPPINGS.items():
        sub = subparsers.add_parser(
            command,
            help=NODE_DISPLAY_NAME_MAPPINGS.get(command, command),
            description=(node_class.__doc__ or "").strip() or None,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        for name, slot, options, required in _slots(node_class):
            _add_argument(sub, name, slot, options, required)
    return parser


def _infer_rank(raw: Dict[str, Any], values: Dict[str, Any]) -> Optional[int]:
    for value in values.values():
        rank = getattr(value, "rank", None)
        if isinstance(rank, int) and hasattr(value, "positive_roots"):
            return rank
    if raw.get("rank") is not None:
        return raw["rank"]
    return None


def _coords_count(text: str) -> int:
    for chunk in str(text).split(";"):
        coords = chunk.partition(":")[0]
        if coords.strip():
            return len([p for p in coords.split(",") if p.strip()])
    return 1


def _check_range(name: str, value: Any, options: Dict[str, Any]) -> None:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        return
    low, high = options.get("min"), options.get("max")
    if low is not None and value < low:
        raise SpinlatValidationError(f"{_flag(name)} must be at least {low}, got {value}")
    if high is not None and value > high:
        raise SpinlatValidationError(f"{_flag(name)} must be at most {high}, got {value}")


def coerce_inputs(node_class, raw: Dict[str, Any]) -> Tuple[Dict[str, Any], List[str]]:
    """
    Turn parsed argparse values into node arguments.

    Returns:
        Tuple of (kwargs for the node function, attached file texts for the digest)

    Raises:
        DatumParseError, DatumValidationError: On unparseable arguments
        SpinlatValidationError: On numeric options outside their range
    """
    slots = _slots(node_class)
    options_of = {name: options for name, _, options, _ in slots}
    values: Dict[str, Any] = {}
    attachments: List[str] = []

    for name, slot, _, _ in slots:
        if slot in _FILE_SLOTS and raw.get(name) is not None:
            text = read_text(raw[name])
            attachments.append(text)
            values[name] = parse_datum(text) if slot == "DATUM" else parse_split_datum(text)

    rank = _infer_rank(raw, values)
    for name, slot, _, _ in slots:
        text = raw.get(name)
        if text is None or name in values:
            continue
        if slot in _LATTICE_SLOTS:
            r = rank if rank is not None else _coords_count(text)
            if slot == "WEIGHT":
                values[name] = parse_weight(text, r)
            elif slot == "SPIN_WEIGHTS":
                values[name] = parse_spin_weights(text, r)
            else:
                values[name] = parse_character(text, r)
        elif slot == "ANGLES":
            values[name] = TorusPoint(parse_reals(text))
        elif slot == "REALS":
            values[name] = parse_reals(text)
        elif slot == "COMPLEX":
            values[name] = parse_complex(text)
        elif slot == "BOOLEAN":
            if text:
                values[name] = True
        else:
            _check_range(name, text, options_of[name])
            values[name] = text

    # weights without a datum and without --rank take their rank from the text
    if "rank" in raw and raw.get("rank") is None and rank is None:
        for name, slot, _, _ in slots:
            if slot == "SPIN_WEIGHTS" and raw.get(name) is not None:
                values["rank"] = _coords_count(raw[name])
    return values, attachments


def run_command(argv: Sequence[str]) -> Tuple[Optional[Report], int]:
    """
    Parse argv, run the subcommand and return its report with the exit code.

    Usage and parse errors return (None, 2) after printing the message and
    the DatumFile schema help to standard error. Library errors raised by the
    computation also return (None, 2) but print only the message.

    Example:
        >>> report, code = run_command(["ep-index", "--datum", "sl2R.json", "--tau", "0", "--sigma", "0"])
        >>> report.results[0]
        ('ep_index', 2)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        if e.code == 0:
            return None, EXIT_OK
        return _usage_error("usage error, see spinlat --help")

    raw = vars(args)
    command = raw.pop("command")
    fmt = raw.pop("format")
    node_class = NODE_CLASS_MAPPINGS[command]

    try:
        kwargs, attachments = coerce_inputs(node_class, raw)
    except (DatumParseError, DatumValidationError, SpinlatException) as e:
        return _usage_error(f"{command}: {e}")
    except LatticeError as e:
        return _usage_error(f"{command}: {type(e).__name__}: {e}")

    report = Report.create(command, raw, attachments)
    node = node_class()
    try:
        results, checks = getattr(node, node_class.FUNCTION)(**kwargs)
    except SpinlatException as e:
        return _usage_error(f"{command}: {e}")
    except (LatticeError, CliffordError, EpError) as e:
        _log(f"{command} failed: {type(e).__name__}: {e}")
        return None, EXIT_USAGE

    report.results.extend(results)
    report.checks.extend(checks)
    report.format = fmt
    if not report.passed:
        failed = [name for name, ok in report.checks if not ok]
        _log(f"{command}: {len(failed)} check(s) failed: {', '.join(failed)}")
        return report, EXIT_CHECK_FAILED
    return report, EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    report, code = run_command(sys.argv[1:] if argv is None else argv)
    if report is not None:
        sys.stdout.write(emit_report(report, report.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
