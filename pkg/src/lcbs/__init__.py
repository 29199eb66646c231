"""Longest common bitonic subsequence engines.

A bitonic chain over two sequences picks matching positions, strictly
increasing on both sides, whose values rise strictly to a single peak and
fall strictly after it. Three engines share one outcome type: dense
(quadratic tables, full witnesses), rolling (same time, linear space),
and sparse (output-sensitive in the number of matches).
"""

from .core import (EMPTY_WITNESS, LcbsOutcome, MatchPoint, RunStats,
                   SequencePair, ValidationReport, Witness, count_matches,
                   validate_witness)
from .dense import dense_lcbs
from .dominance import DominanceIndex, EdgeProbeCounter, RankedPoint
from .engines import ENGINE_IDS, choose_engine, solve_pair
from .instances import gen_pair, read_sequence, write_sequence
from .oracle import OracleSizeError, brute_lbs, brute_lcbs
from .rolling import rolling_lcbs
from .sparse import (enumerate_matches, export_vertices_dot,
                     export_vertices_jsonl, sparse_lcbs)

__version__ = "0.1.0"

__all__ = [
    "EMPTY_WITNESS", "LcbsOutcome", "MatchPoint", "RunStats", "SequencePair",
    "ValidationReport", "Witness", "count_matches", "validate_witness",
    "dense_lcbs", "rolling_lcbs", "sparse_lcbs", "solve_pair",
    "choose_engine", "ENGINE_IDS", "DominanceIndex", "EdgeProbeCounter",
    "RankedPoint", "OracleSizeError", "brute_lbs", "brute_lcbs",
    "enumerate_matches", "export_vertices_dot", "export_vertices_jsonl",
    "gen_pair", "read_sequence", "write_sequence", "__version__",
]
