import json
import logging
import sys
import time

import yaml

from oddhole.cleaning import no_great_pyramid_solver, no_heavy_clean, test_clean, test_cleanable
from oddhole.constants import EXIT_GUARD_REFUSAL, EXIT_INVALID_WITNESS, EXIT_OK, EXIT_PARSE_ERROR
from oddhole.detect_basic import find_5hole, find_jewelled
from oddhole.detection import DetectorTag
from oddhole.errors import ConfigError, GraphFormatError, InstanceParameterError, InvalidVertexError, \
    SizeGuardError, WitnessSchemaError
from oddhole.formats import format_edgelist, load_witness, read_graph, read_hints, save_json, witness_to_dict, \
    write_edgelist
from oddhole.generators import InstanceSpec, plant
from oddhole.graph import Hole
from oddhole.oracle import brute_shortest_odd_hole
from oddhole.pipeline import PipelineConfig, PipelineResult, shortest_odd_hole
from oddhole.pyramid_locator import MODE_HINTED, find_great_pyramid, trace_tuple
from oddhole.structure import GreatPyramidWitness, JewelWitness, verify_great_pyramid, verify_jewel, \
    verify_odd_hole, verify_pyramid
from search.logger import setup_logging
from search.params import parse_args
from search.report import render, results_row, save_results_to_csv


def _plain(value):
    # yaml.safe_dump only takes plain containers
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


def dump_config(args, path):
    with open(path, "w") as outfile:
        yaml.safe_dump(_plain(vars(args)), outfile, default_flow_style=False)
    logging.debug(f"Wrote resolved options to {path}")


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, (time.perf_counter() - start) * 1000.0


def _finish(args, result):
    print(render(result, args.output))
    if args.save_results_to_csv != "":
        save_results_to_csv(args.save_results_to_csv, results_row(args, result))
    return EXIT_GUARD_REFUSAL if result.skipped else EXIT_OK


def _hints(args):
    if args.locator_mode != MODE_HINTED:
        return None
    if not args.hints:
        raise WitnessSchemaError("--locator-mode hinted needs --hints")
    hints = read_hints(args.hints)
    logging.info(f"Loaded {len(hints)} hint tuples from {args.hints}")
    return hints


def _detector(args, G, name):
    progress, workers = args.progress, args.workers
    if name == "five_hole":
        return find_5hole(G)
    if name == "jewel":
        return find_jewelled(G, progress=progress)
    if name == "great_pyramid":
        return find_great_pyramid(G, mode=args.locator_mode, tuples=_hints(args),
                                  max_vertices=args.great_pyramid_max_n, workers=workers, progress=progress)
    if name == "no_great_pyramid":
        return no_great_pyramid_solver(G, workers, progress)
    if name == "test_clean":
        return test_clean(G)
    if name == "test_cleanable":
        return test_cleanable(G, workers, progress)
    assert name == "no_heavy_clean", f"unknown detector {name}"
    return no_heavy_clean(G, workers, progress)


def cmd_run(args):
    G = read_graph(args.input, args.format)
    logging.info(f"Loaded {G!r} from {args.input}")
    if args.mode == "pipeline":
        config = PipelineConfig(
            great_pyramid_max_n=args.great_pyramid_max_n,
            locator_mode=args.locator_mode,
            hint_tuples=_hints(args),
            workers=args.workers,
            short_circuit=not args.no_short_circuit,
            progress=args.progress,
        )
        result = shortest_odd_hole(G, config)
    elif args.mode == "oracle":
        det, ms = _timed(lambda: brute_shortest_odd_hole(G, max_vertices=args.oracle_max_n))
        result = PipelineResult.from_detection(G, det, {DetectorTag.ORACLE.value: ms})
    else:
        name = args.mode.split(":", 1)[1]
        det, ms = _timed(lambda: _detector(args, G, name))
        result = PipelineResult.from_detection(G, det, {name: ms})
    return _finish(args, result)


def cmd_oracle(args):
    G = read_graph(args.input, args.format)
    det, ms = _timed(lambda: brute_shortest_odd_hole(G, force=args.force, max_vertices=args.oracle_max_n))
    return _finish(args, PipelineResult.from_detection(G, det, {DetectorTag.ORACLE.value: ms}))


def cmd_gen(args):
    spec = InstanceSpec(args.family, tuple(args.params), args.ambient, args.seed, tuple(args.pattern))
    inst = plant(spec)
    logging.info(f"Generated {inst.graph!r} for {args.family} {list(args.params)}")
    if args.out:
        write_edgelist(inst.graph, args.out)
        logging.info(f"Wrote edge list to {args.out}")
    else:
        sys.stdout.write(format_edgelist(inst.graph))
    sidecar = args.sidecar or (args.out + ".json" if args.out else None)
    if sidecar:
        doc = witness_to_dict(inst.witness) if inst.witness is not None else {}
        doc.update({
            "spec": spec.to_dict(),
            "n": inst.graph.n,
            "m": inst.graph.m,
            "expected_min": inst.expected_min,
        })
        if inst.hint is not None:
            doc["hint"] = list(inst.hint)
        save_json(doc, sidecar)
        logging.info(f"Wrote planted structure to {sidecar}")
    return EXIT_OK


def cmd_check_witness(args):
    G = read_graph(args.input, args.format)
    w, doc = load_witness(args.witness)
    if isinstance(w, Hole):
        verdict = verify_odd_hole(G, w.vertices)
    elif isinstance(w, JewelWitness):
        verdict = verify_jewel(G, w)
    elif isinstance(w, GreatPyramidWitness):
        shortest = args.shortest
        if shortest is None:
            det = brute_shortest_odd_hole(G, max_vertices=args.oracle_max_n)
            shortest = det.length if det.found else 0
        verdict = verify_great_pyramid(G, w, shortest)
    else:
        verdict = verify_pyramid(G, w)
    kind = doc.get("type")
    if args.output == "json":
        print(json.dumps({"type": kind, "valid": verdict.ok, "reason": verdict.reason}, sort_keys=True))
    else:
        print("valid" if verdict else f"invalid: {verdict.reason}")
    logging.info(f"{kind} witness from {args.witness}: {'valid' if verdict else verdict.reason}")
    return EXIT_OK if verdict else EXIT_INVALID_WITNESS


def cmd_hinted_tuples(args):
    G = read_graph(args.input, args.format)
    hints = read_hints(args.hints)
    if args.trace:
        for t in hints:
            trace = trace_tuple(G, t)
            logging.info(f"tuple {tuple(t)}: lengths {trace.lengths()} "
                         f"{'hole ' + str(trace.hole.length) if trace.accepted else 'rejected at ' + str(trace.rejected_at)}")
    det, ms = _timed(lambda: find_great_pyramid(G, mode=MODE_HINTED, tuples=hints, progress=args.progress))
    return _finish(args, PipelineResult.from_detection(G, det, {DetectorTag.GREAT_PYRAMID.value: ms}))


COMMANDS = {
    "run": cmd_run,
    "oracle": cmd_oracle,
    "gen": cmd_gen,
    "check-witness": cmd_check_witness,
    "hinted-tuples": cmd_hinted_tuples,
}


def run_main(args=None):
    if args is None or isinstance(args, (list, tuple)):
        try:
            args = parse_args(args)
        except (OSError, ValueError, yaml.YAMLError) as e:
            logging.error(f"Could not load options: {e}")
            return EXIT_PARSE_ERROR

    args.log_level = logging.DEBUG if args.debug else logging.INFO
    setup_logging(args.log_file, args.log_level)
    if args.dump_config:
        dump_config(args, args.dump_config)

    try:
        return COMMANDS[args.command](args)
    except SizeGuardError as e:
        logging.error(f"{e}; raise the guard or use a smaller graph")
        return EXIT_GUARD_REFUSAL
    except (GraphFormatError, WitnessSchemaError, InstanceParameterError, InvalidVertexError, ConfigError) as e:
        logging.error(str(e))
        return EXIT_PARSE_ERROR
    except OSError as e:
        logging.error(f"I/O error: {e}")
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(run_main())
