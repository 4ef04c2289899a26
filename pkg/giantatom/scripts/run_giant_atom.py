# Standard Library
import argparse
import sys
from pathlib import Path
from typing import List, Optional

# GiantAtom
from giantatom.cli.commands import COMMANDS, error_record, run
from giantatom.cli.run_config import parse_config
from giantatom.errors import ConfigError, ValidationError
from giantatom.utils.logging import get_logger, set_logging_level

logger = get_logger(__name__)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="giant-atom")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("name", nargs="?", default=None, help="scenario or preset name")
    parser.add_argument("--config", type=str, default=None)
    parser.add_argument("--output", type=str, default=None)
    parser.add_argument("--format", type=str, choices=["csv", "json"], default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--grid-min", type=float, default=None)
    parser.add_argument("--grid-max", type=float, default=None)
    parser.add_argument("--grid-points", type=int, default=None)
    parser.add_argument("--progress", action="store_true", help="show progress bars on stderr")
    parser.add_argument("--debug", action="store_true")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    set_logging_level("debug" if args.debug else "info")

    overrides = {
        "output": args.output,
        "format": args.format,
        "seed": args.seed,
        "grid.min": args.grid_min,
        "grid.max": args.grid_max,
        "grid.points": args.grid_points,
        "progress": True if args.progress else None,
    }
    try:
        text = Path(args.config).read_text() if args.config is not None else ""
        cfg = parse_config(text, overrides)
    except ValidationError as e:
        sys.stderr.write(error_record(e) + "\n")
        return 2
    except (OSError, ValueError) as e:
        sys.stderr.write(error_record(ConfigError(str(e), "config")) + "\n")
        return 2
    logger.debug(f"Running {args.command} {args.name or ''}")
    return run(args.command, cfg, args.name)


if __name__ == "__main__":
    sys.exit(main())
