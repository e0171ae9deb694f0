from .constants import MIN_ODD_HOLE, great_pyramid_max_n, oracle_max_n
from .errors import OddHoleError, ConfigError, GraphFormatError, InvalidVertexError, SizeGuardError, \
    InstanceParameterError, WitnessSchemaError
from .graph import Graph, Hole, ShortestPathTree, shortest_path_avoiding, is_path, is_hole, is_odd_hole, hole_distance
from .structure import MajorClass, Verdict, PyramidWitness, GreatPyramidWitness, JewelWitness, classify_major, \
    is_shortcut, find_shortcut, verify_pyramid, verify_jewel, is_jewelled, verify_great_pyramid, pyramid_major_type, \
    verify_odd_hole
from .detection import Detection, DetectorTag, HoleRecorder, best_of
from .detect_basic import find_5hole, find_jewelled
from .cleaning import CleaningSet, test_clean, test_cleanable, cleaning_list, no_heavy_clean, no_great_pyramid_solver
from .pyramid_locator import Tuple12, TupleTrace, trace_tuple, locate_from_tuple, admissible_tuple, iter_tuples, \
    witness_tuple, find_great_pyramid
from .pipeline import PipelineConfig, PipelineResult, shortest_odd_hole
from .oracle import brute_shortest_odd_hole, brute_subset_odd_hole, brute_shortest_odd_holes, brute_find_pyramids, \
    brute_great_pyramids, optimal_great_pyramids, jewelled_shortest_hole_exists
from .generators import InstanceSpec, PlantedInstance, generate, plant
from .formats import read_graph, parse_graph, write_edgelist, format_edgelist, load_witness, witness_to_dict, \
    read_hints
