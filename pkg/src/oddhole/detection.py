import enum
import logging
from dataclasses import dataclass
from typing import *

from .constants import MIN_ODD_HOLE
from .graph import Graph, Hole, is_hole


class DetectorTag(str, enum.Enum):
    FIVE_HOLE = "five_hole"
    JEWEL = "jewel"
    GREAT_PYRAMID = "great_pyramid"
    NO_GREAT_PYRAMID = "no_great_pyramid"
    ORACLE = "oracle"


@dataclass(frozen=True)
class Detection:
    """Outcome of one detector: a recorded odd hole with its provenance, or failure."""

    hole: Optional[Hole]
    detector: DetectorTag

    @classmethod
    def failure(cls, detector: DetectorTag) -> "Detection":
        return cls(None, detector)

    @property
    def found(self) -> bool:
        return self.hole is not None

    @property
    def length(self) -> Optional[int]:
        return None if self.hole is None else self.hole.length

    def sort_key(self):
        # failures sort after every found hole
        if self.hole is None:
            return (1, 0, ())
        return (0,) + self.hole.sort_key()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "found": self.found,
            "detector": self.detector.value,
            "length": self.length,
            "hole": None if self.hole is None else list(self.hole.canonical().vertices),
        }


def best_of(detections: Iterable[Detection], detector: Optional[DetectorTag] = None) -> Detection:
    """The shortest found hole, ties broken by canonical vertex sequence."""
    best = None
    for det in detections:
        if best is None or det.sort_key() < best.sort_key():
            best = det
    if best is None:
        assert detector is not None, "best_of needs a detector tag when given no detections"
        return Detection.failure(detector)
    if not best.found:
        return Detection.failure(detector if detector is not None else best.detector)
    if detector is not None and best.detector != detector:
        best = Detection(best.hole, detector)
    return best


class HoleRecorder:
    """
    Keeps the best odd hole recorded by a detector.

    Every candidate is validated as an induced odd cycle of length >= 5 in the
    graph given at construction (the original input, even when the candidate
    was produced inside G minus X); candidates that fail are dropped.
    """

    def __init__(self, G: Graph, detector: DetectorTag) -> None:
        self.graph = G
        self.detector = detector
        self.best: Optional[Hole] = None
        self._best_key = None
        self.recorded = 0
        self.rejected = 0

    @property
    def best_length(self) -> Optional[int]:
        return None if self.best is None else self.best.length

    def offer(self, seq: Sequence[int]) -> bool:
        if len(seq) < MIN_ODD_HOLE or len(seq) % 2 == 0 or not is_hole(self.graph, seq):
            self.rejected += 1
            return False
        hole = Hole(seq).canonical()
        key = hole.sort_key()
        self.recorded += 1
        if self._best_key is None or key < self._best_key:
            self.best = hole
            self._best_key = key
        return True

    def result(self) -> Detection:
        if self.best is None:
            logging.debug(f"{self.detector.value}: no odd hole recorded ({self.rejected} candidates rejected)")
            return Detection.failure(self.detector)
        logging.debug(f"{self.detector.value}: best of {self.recorded} recorded holes has length {self.best.length}")
        return Detection(self.best, self.detector)
