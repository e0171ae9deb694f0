import argparse

import yaml

from oddhole.formats import GRAPH_FORMATS
from oddhole.generators import FAMILIES
from oddhole.pyramid_locator import LOCATOR_MODES

DETECTOR_NAMES = ["five_hole", "jewel", "great_pyramid", "no_great_pyramid", "test_clean", "test_cleanable",
                  "no_heavy_clean"]
RUN_MODES = ["pipeline", "oracle"] + [f"detector:{name}" for name in DETECTOR_NAMES]


def _run_mode(value):
    if value not in RUN_MODES:
        raise argparse.ArgumentTypeError(f"invalid mode {value!r}; choose from {', '.join(RUN_MODES)}")
    return value


def _positive_int(value):
    ivalue = int(value)
    if ivalue <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return ivalue


def _pattern(value):
    try:
        return tuple(int(x) for x in value.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"pattern must be comma-separated hole positions, got {value!r}") from None


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--config-yaml",
        type=str,
        default=None,
        help="Path to a yaml file whose keys override the defaults of these options",
    )
    parser.add_argument(
        "--dump-config",
        type=str,
        default=None,
        help="Write the resolved options to this yaml file",
    )
    parser.add_argument(
        "--log-file",
        type=str,
        default=None,
        help="Also write logs to this file",
    )
    parser.add_argument(
        "--debug",
        default=False,
        action="store_true",
        help="Detailed logs for debugging."
    )
    parser.add_argument(
        "--output",
        choices=["text", "json"],
        default="text",
        help="Report format written to stdout",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="Seed for instance generation",
    )
    parser.add_argument(
        "--great-pyramid-max-n",
        type=_positive_int,
        default=None,
        help="Largest graph for full great-pyramid enumeration (default: $ODDHOLE_GREAT_PYRAMID_MAX_N or 10)",
    )
    parser.add_argument(
        "--oracle-max-n",
        type=_positive_int,
        default=None,
        help="Largest graph the brute-force oracle accepts (default: $ODDHOLE_ORACLE_MAX_N or 16)",
    )
    parser.add_argument(
        "--workers",
        type=_positive_int,
        default=1,
        help="Number of ray workers for the cleaning and great-pyramid searches; 1 runs in-process",
    )
    parser.add_argument(
        "--progress",
        default=False,
        action="store_true",
        help="Show tqdm progress bars for long enumerations",
    )
    parser.add_argument(
        "--save-results-to-csv",
        type=str,
        default="",
        help="Append one row per run to this csv file",
    )
    return parser


def _add_graph_input(parser):
    parser.add_argument(
        "input",
        type=str,
        help="Path to the input graph",
    )
    parser.add_argument(
        "--format",
        choices=list(GRAPH_FORMATS),
        default="edgelist",
        help="Input graph format",
    )


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(description="Shortest odd hole detection")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common], help="Find the shortest odd hole of a graph")
    _add_graph_input(run)
    run.add_argument(
        "--mode",
        type=_run_mode,
        default="pipeline",
        help=f"What to run: {', '.join(RUN_MODES)}",
    )
    run.add_argument(
        "--locator-mode",
        choices=list(LOCATOR_MODES),
        default="full",
        help="Great-pyramid tuple source: full enumeration or a hint file",
    )
    run.add_argument(
        "--hints",
        type=str,
        default=None,
        help="JSON-lines file of 12-tuples for --locator-mode hinted",
    )
    run.add_argument(
        "--no-short-circuit",
        default=False,
        action="store_true",
        help="Run every detector even after a 5-hole is found",
    )

    oracle = sub.add_parser("oracle", parents=[common], help="Brute-force shortest odd hole")
    _add_graph_input(oracle)
    oracle.add_argument(
        "--force",
        default=False,
        action="store_true",
        help="Ignore the oracle size guard",
    )

    gen = sub.add_parser("gen", parents=[common], help="Generate a test instance")
    gen.add_argument(
        "family",
        choices=list(FAMILIES),
        help="Instance family",
    )
    gen.add_argument(
        "params",
        nargs="*",
        type=float,
        default=[],
        help="Family parameters, e.g. '3 3 2' for planted_pyramid or '10 0.3' for random",
    )
    gen.add_argument(
        "--ambient",
        type=int,
        default=0,
        help="Number of ambient vertices added around the planted structure",
    )
    gen.add_argument(
        "--pattern",
        type=_pattern,
        action="append",
        default=[],
        help="Hole positions of one extra vertex for planted_major, e.g. 0,1,4,5 (repeatable)",
    )
    gen.add_argument(
        "--out",
        type=str,
        default=None,
        help="Edge list destination (default: stdout)",
    )
    gen.add_argument(
        "--sidecar",
        type=str,
        default=None,
        help="Planted-structure JSON destination (default: <out>.json when --out is given)",
    )

    check = sub.add_parser("check-witness", parents=[common], help="Validate a pyramid, jewel or hole witness")
    _add_graph_input(check)
    check.add_argument(
        "witness",
        type=str,
        help="Path to the witness JSON",
    )
    check.add_argument(
        "--shortest",
        type=int,
        default=None,
        help="Shortest odd hole length for great_pyramid witnesses (default: computed by the oracle)",
    )

    hinted = sub.add_parser("hinted-tuples", parents=[common], help="Run the great-pyramid locator on given tuples")
    _add_graph_input(hinted)
    hinted.add_argument(
        "hints",
        type=str,
        help="JSON-lines file of 12-tuples",
    )
    hinted.add_argument(
        "--trace",
        default=False,
        action="store_true",
        help="Log the per-tuple path lengths and rejection step",
    )
    return parser, sub


def _load_yaml_defaults(path):
    with open(path, "r") as stream:
        cfg = yaml.safe_load(stream) or {}
    if not isinstance(cfg, dict):
        raise ValueError(f"{path}: expected a yaml mapping of option names to values")
    return {str(k).lstrip("-").replace("-", "_"): v for k, v in cfg.items()}


def parse_args(args=None):
    parser, sub = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config-yaml", type=str, default=None)
    known, _ = pre.parse_known_args(args)
    if known.config_yaml:
        defaults = _load_yaml_defaults(known.config_yaml)
        for subparser in sub.choices.values():
            subparser.set_defaults(**defaults)
    return parser.parse_args(args)
