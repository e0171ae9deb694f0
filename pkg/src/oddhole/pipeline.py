import logging
import time
from dataclasses import dataclass, field
from typing import *

from .cleaning import no_great_pyramid_solver
from .constants import great_pyramid_max_n
from .detect_basic import find_5hole, find_jewelled
from .detection import Detection, DetectorTag, best_of
from .graph import Graph, Hole
from .pyramid_locator import MODE_FULL, find_great_pyramid

# cheapest first
PIPELINE_ORDER = (
    DetectorTag.FIVE_HOLE,
    DetectorTag.JEWEL,
    DetectorTag.NO_GREAT_PYRAMID,
    DetectorTag.GREAT_PYRAMID,
)


@dataclass
class PipelineConfig:
    great_pyramid_max_n: Optional[int] = None
    locator_mode: str = MODE_FULL
    hint_tuples: Optional[Sequence[Sequence[int]]] = None
    workers: int = 1
    short_circuit: bool = True
    progress: bool = False

    def guard(self) -> int:
        return great_pyramid_max_n() if self.great_pyramid_max_n is None else self.great_pyramid_max_n


@dataclass
class PipelineResult:
    has_odd_hole: bool
    min_length: Optional[int]
    hole: Optional[Hole]
    detector: Optional[DetectorTag]
    timings: Dict[str, Optional[float]]
    n: int
    m: int
    skipped: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        assert self.has_odd_hole == (self.min_length is not None) == (self.hole is not None), \
            "has_odd_hole, min_length and hole must agree"

    @property
    def certified(self) -> bool:
        return not self.skipped

    @classmethod
    def from_detection(cls, G: Graph, det: Detection, timings: Optional[Dict[str, Optional[float]]] = None,
                       skipped: Optional[List[str]] = None) -> "PipelineResult":
        return cls(
            has_odd_hole=det.found,
            min_length=det.length,
            hole=det.hole,
            detector=det.detector if det.found else None,
            timings=dict(timings or {}),
            n=G.n,
            m=G.m,
            skipped=list(skipped or []),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "has_odd_hole": self.has_odd_hole,
            "min_length": self.min_length,
            "hole": None if self.hole is None else list(self.hole.canonical().vertices),
            "detector": None if self.detector is None else self.detector.value,
            "timings": dict(self.timings),
            "graph": {"n": self.n, "m": self.m},
        }


def _timed(fn: Callable[[], Detection]) -> Tuple[Detection, float]:
    start = time.perf_counter()
    det = fn()
    return det, (time.perf_counter() - start) * 1000.0


def shortest_odd_hole(G: Graph, config: Optional[PipelineConfig] = None) -> PipelineResult:
    """
    Run the four detectors and return the shortest recorded hole, or report
    that G has no odd hole.

    A 5-hole ends the run early when `short_circuit` is set. Full-mode
    great-pyramid enumeration above the guard is skipped and listed in
    `skipped`; the answer is then not certified.
    """
    config = config or PipelineConfig()
    timings: Dict[str, Optional[float]] = {tag.value: None for tag in PIPELINE_ORDER}
    skipped: List[str] = []
    detections: List[Detection] = []

    def best_length() -> Optional[int]:
        return best_of(detections).length if detections else None

    stages = {
        DetectorTag.FIVE_HOLE: lambda: find_5hole(G),
        DetectorTag.JEWEL: lambda: find_jewelled(G, progress=config.progress),
        DetectorTag.NO_GREAT_PYRAMID: lambda: no_great_pyramid_solver(G, config.workers, config.progress),
        DetectorTag.GREAT_PYRAMID: lambda: find_great_pyramid(
            G, mode=config.locator_mode, tuples=config.hint_tuples, bound=best_length(),
            max_vertices=config.guard(), workers=config.workers, progress=config.progress),
    }
    n_live = len(G.vertices())
    for tag in PIPELINE_ORDER:
        if tag == DetectorTag.GREAT_PYRAMID and config.locator_mode == MODE_FULL and n_live > config.guard():
            logging.warning(f"skipping {tag.value}: {n_live} vertices exceeds the full enumeration guard "
                            f"of {config.guard()}; the reported minimum is not certified")
            skipped.append(tag.value)
            continue
        det, elapsed = _timed(stages[tag])
        timings[tag.value] = elapsed
        detections.append(det)
        logging.debug(f"{tag.value}: {'length ' + str(det.length) if det.found else 'failure'} in {elapsed:.1f} ms")
        if tag == DetectorTag.FIVE_HOLE and det.found and config.short_circuit:
            break

    best = best_of(detections)
    result = PipelineResult.from_detection(G, best, timings, skipped)
    if result.has_odd_hole:
        logging.info(f"shortest odd hole has length {result.min_length} (detector {result.detector.value})")
    else:
        logging.info("graph has no odd hole")
    return result
