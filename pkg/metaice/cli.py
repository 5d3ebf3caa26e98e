"""
Command line interface

Every command builds a report, prints it to standard output as JSON (or
text with ``--format text``) and exits with 0 when every verdict passes, 1
when a check fails and 2 on a usage error. Diagnostics go to standard error.

Settings come from, in increasing precedence, the :obj:`RunConfig`
defaults, a JSON file given with ``--config`` and the command line flags.
"""

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from metaice import __version__
from metaice.algebra import CoeffElem
from metaice.boltzmann import tilted_catalogue, vertex_catalogue
from metaice.core._common import RowType, spins_to_text
from metaice.engine import (
    iter_states_with_weights,
    partition_function,
    partition_via_transfer,
)
from metaice.lattice import (
    ColumnSet,
    Partition,
    SystemSpec,
    build_standard_system,
    build_two_row,
    columns_from_partition,
)
from metaice.verify import (
    ROOT_SIGNS,
    VerificationReport,
    tokuyama_crosscheck,
    train_trace,
    verify_duality,
    verify_two_row,
    verify_ybe,
)
from metaice.ybsystem import verify_yb_system

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

# settings that change how a run is carried out but not its result
_NOT_ECHOED = ("format", "workers", "timing")


@dataclass
class RunConfig(object):
    """
    Settings of one run

    Partitions and column sets are kept as comma separated text, e.g.
    ``'3,2,0'``, and parsed when the command runs.
    """

    command: str = ""
    n: int = 1
    r: Optional[int] = None
    lam: Optional[str] = None
    mu: Optional[str] = None
    top: Optional[str] = None
    bottom: Optional[str] = None
    M: Optional[int] = None
    row_type: str = "gamma"
    x: str = "gamma"
    y: str = "gamma"
    order: str = "gamma-delta"
    method: str = "enumerate"
    tilted: bool = False
    seed: int = 0
    num_points: int = 20
    root_sign: str = "negative"
    format: str = "json"
    workers: Optional[int] = None
    timing: bool = False

    def echo(self) -> Dict[str, Any]:
        """the settings that determine the result"""
        out = asdict(self)
        for key in _NOT_ECHOED:
            out.pop(key)
        return out


_FIELDS = {f.name for f in fields(RunConfig)}
_TEXT_FIELDS = ("lam", "mu", "top", "bottom")
_ALIASES = {"lambda": "lam", "rows": "r", "type": "row_type"}


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Read settings from a JSON object

    Lists are accepted for partitions and column sets. The keys ``lambda``,
    ``rows`` and ``type`` are accepted for ``lam``, ``r`` and ``row_type``.

    Raises:
        ValueError: if the file is not a JSON object or has unknown keys
    """
    with open(path, "r", encoding="utf-8") as f:
        try:
            raw = json.load(f)
        except json.JSONDecodeError as err:
            raise ValueError(f"{path} is not valid JSON: {err}") from None
    if not isinstance(raw, dict):
        raise ValueError(f"{path} must hold a JSON object")
    out = {}
    for key, value in raw.items():
        key = _ALIASES.get(key, key.replace("-", "_"))
        if key not in _FIELDS:
            raise ValueError(f"unknown setting {key!r} in {path}")
        if key in _TEXT_FIELDS and isinstance(value, list):
            value = ",".join(str(v) for v in value)
        out[key] = value
    return out


def make_config(options: Dict[str, Any]) -> RunConfig:
    """merge a config file (if named) and explicit options over the defaults"""
    options = dict(options)
    path = options.pop("config", None)
    options.pop("verbose", None)
    settings: Dict[str, Any] = {}
    if path is not None:
        settings.update(load_config_file(path))
    settings.update(options)
    return replace(RunConfig(), **settings)


# ----------------------------------------------------------------------------
# system construction from settings
# ----------------------------------------------------------------------------
def _partition(config: RunConfig) -> Partition:
    if config.lam is None:
        raise ValueError("--lambda is required")
    lam = Partition.parse(config.lam)
    r = config.r if config.r is not None else len(lam)
    return lam.padded(r)


def _two_row_boundary(config: RunConfig) -> Tuple[ColumnSet, ColumnSet]:
    if config.top is not None:
        return ColumnSet.parse(config.top), ColumnSet.parse(config.bottom or "")
    if config.lam is not None:
        lam = Partition.parse(config.lam)
        mu = Partition.parse(config.mu or "")
        return (
            columns_from_partition(lam, len(lam)),
            columns_from_partition(mu, len(mu)),
        )
    raise ValueError("give --top and --bottom, or --lambda and --mu")


def _system(config: RunConfig) -> SystemSpec:
    if config.top is not None or config.mu is not None:
        top, bottom = _two_row_boundary(config)
        return build_two_row(top, bottom, config.order, config.n, config.M)
    lam = _partition(config)
    return build_standard_system(
        lam, len(lam), RowType.from_name(config.row_type), config.n
    )


# ----------------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------------
Result = Tuple[Dict[str, Any], bool]


def _from_report(report: VerificationReport, config: RunConfig) -> Result:
    return report.to_dict(config.timing), report.passed


def _weights(config: RunConfig) -> Result:
    if config.tilted:
        X, Y = RowType.from_name(config.x), RowType.from_name(config.y)
        entries = []
        for p, w in tilted_catalogue(X, Y, config.n):
            spins, charges = p.table_order()
            entries.append(
                {"spins": spins, "charges": list(charges), "weight": str(w)}
            )
        return {"table": f"{X.value}-{Y.value}", "legs": "sw nw ne se",
                "weights": entries, "count": len(entries)}, True
    row_type = RowType.from_name(config.row_type)
    entries = [
        {
            "label": label,
            "spins": spins_to_text((p.left, p.top, p.right, p.bottom)),
            "charges": [p.left_charge, p.right_charge],
            "weight": str(w),
        }
        for p, label, w in vertex_catalogue(row_type, config.n)
    ]
    return {"table": row_type.value, "legs": "left top right bottom",
            "weights": entries, "count": len(entries)}, True


def _states(config: RunConfig) -> Result:
    spec = _system(config)
    states = []
    total = CoeffElem.zero(spec.n, spec.nvars)
    for state, weight in iter_states_with_weights(spec):
        total = total + weight
        states.append(
            {
                "horizontals": [spins_to_text(h) for h in state.horizontals],
                "verticals": [spins_to_text(v) for v in state.verticals],
                "charges": [list(c) for c in state.charges],
                "weight": str(weight),
            }
        )
    return {"spec": spec.to_dict(), "states": states,
            "state_count": len(states), "value": str(total)}, True


def _partition_cmd(config: RunConfig) -> Result:
    spec = _system(config)
    if config.method == "enumerate":
        result = partition_function(spec, config.workers)
    elif config.method == "transfer":
        result = partition_via_transfer(spec)
    else:
        raise ValueError(f"unknown method {config.method!r}")
    return {
        "spec": spec.to_dict(),
        "method": result.method,
        "value": str(result.value),
        "state_count": result.state_count,
    }, True


def _verify_ybe(config: RunConfig) -> Result:
    X, Y = RowType.from_name(config.x), RowType.from_name(config.y)
    return _from_report(verify_ybe(X, Y, config.n, config.workers), config)


def _verify_two_row(config: RunConfig) -> Result:
    top, bottom = _two_row_boundary(config)
    report = verify_two_row(top, bottom, config.n, config.M, config.workers)
    return _from_report(report, config)


def _verify_duality(config: RunConfig) -> Result:
    lam = _partition(config)
    return _from_report(
        verify_duality(lam, len(lam), config.n, config.workers), config
    )


def _train_trace(config: RunConfig) -> Result:
    top, bottom = _two_row_boundary(config)
    return _from_report(train_trace(top, bottom, config.n, config.M), config)


def _tokuyama(config: RunConfig) -> Result:
    if config.n != 1:
        raise ValueError("the tokuyama check needs --n 1")
    if config.root_sign not in ROOT_SIGNS:
        raise ValueError(f"--root-sign must be one of {ROOT_SIGNS}")
    lam = _partition(config)
    return _from_report(
        tokuyama_crosscheck(lam, len(lam), config.root_sign), config
    )


def _ybsystem(config: RunConfig) -> Result:
    report = verify_yb_system(
        config.n, config.num_points, config.seed, config.workers
    )
    return _from_report(report, config)


COMMANDS: Dict[str, Callable[[RunConfig], Result]] = {
    "weights": _weights,
    "states": _states,
    "partition": _partition_cmd,
    "verify-ybe": _verify_ybe,
    "verify-two-row": _verify_two_row,
    "verify-duality": _verify_duality,
    "train-trace": _train_trace,
    "tokuyama": _tokuyama,
    "ybsystem": _ybsystem,
}


def run(config: RunConfig) -> Tuple[Dict[str, Any], int]:
    """
    Carry out one command

    Returns:
        :obj:`tuple`: (report, exit code), the code being 0 when every
        verdict passed and 1 otherwise

    Raises:
        ValueError: on an unknown command or settings that do not describe a
            valid system
    """
    if config.command not in COMMANDS:
        raise ValueError(f"unknown command {config.command!r}")
    if config.n < 1:
        raise ValueError("--n must be positive")
    start = time.perf_counter()
    body, passed = COMMANDS[config.command](config)
    report: Dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": config.command,
        "config": config.echo(),
    }
    report.update(body)
    report["passed"] = passed
    if config.timing and "elapsed" not in report:
        report["elapsed"] = round(time.perf_counter() - start, 3)
    return report, 0 if passed else 1


# ----------------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------------
def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(
        add_help=False, argument_default=argparse.SUPPRESS
    )
    common.add_argument("--config", help="JSON file with settings")
    common.add_argument("--format", choices=("json", "text"))
    common.add_argument(
        "--workers", type=int, help="worker processes (default $METAICE_WORKERS or 1)"
    )
    common.add_argument("--timing", action="store_true", help="report elapsed time")
    common.add_argument("-v", "--verbose", action="count", help="-v info, -vv debug")
    common.add_argument("--n", type=int, help="charge modulus")
    return common


def _add_system_args(p: argparse.ArgumentParser, two_row_only: bool = False) -> None:
    p.add_argument("--lambda", dest="lam", help="partition, e.g. 3,2,0")
    if not two_row_only:
        p.add_argument("--rows", dest="r", type=int, help="number of rows")
        p.add_argument("--type", dest="row_type", help="gamma or delta")
    p.add_argument("--mu", help="partition giving the bottom boundary")
    p.add_argument("--top", help="Minus top columns, e.g. 4,2,1")
    p.add_argument("--bottom", help="Minus bottom columns, e.g. 4")
    p.add_argument("--M", type=int, help="number of columns")
    if not two_row_only:
        p.add_argument("--order", choices=("gamma-delta", "delta-gamma"))


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="metaice", description="charged six-vertex lattice models"
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(
            name,
            parents=[common],
            help=help,
            argument_default=argparse.SUPPRESS,
        )

    p = command("weights", "list vertex weights")
    p.add_argument("--type", dest="row_type")
    p.add_argument("--tilted", action="store_true")
    p.add_argument("--x")
    p.add_argument("--y")

    p = command("states", "list admissible states")
    _add_system_args(p)

    p = command("partition", "partition function")
    _add_system_args(p)
    p.add_argument("--method", choices=("enumerate", "transfer"))

    p = command("verify-ybe", "Yang-Baxter equation")
    p.add_argument("--x")
    p.add_argument("--y")

    p = command("verify-two-row", "row exchange")
    _add_system_args(p, two_row_only=True)

    p = command("verify-duality", "Gamma/Delta duality")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--rows", dest="r", type=int)

    p = command("train-trace", "train argument steps")
    _add_system_args(p, two_row_only=True)

    p = command("tokuyama", "n = 1 factorization")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--rows", dest="r", type=int)
    p.add_argument("--root-sign", dest="root_sign", choices=ROOT_SIGNS)

    p = command("ybsystem", "Yang-Baxter system")
    p.add_argument("--num-points", dest="num_points", type=int)
    p.add_argument("--seed", type=int)
    return parser


def render_text(report: Dict[str, Any]) -> str:
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    options = vars(namespace)
    _configure_logging(options.get("verbose", 0) or 0)
    try:
        config = make_config(options)
        report, code = run(config)
    except (ValueError, TypeError, OSError) as err:
        print(f"metaice: error: {err}", file=sys.stderr)
        return 2
    if config.format == "text":
        print(render_text(report))
    else:
        print(json.dumps(report, sort_keys=True, indent=2))
    return code
