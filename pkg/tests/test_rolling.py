import random

import numpy as np
import pytest

from lcbs.core import MatchPoint, SequencePair, validate_witness
from lcbs.lcis import lcis_tables
from lcbs.oracle import brute_lcbs
from lcbs.rolling import (TwoPhaseRowState, rolling_lcbs, twophase_row_update)
from lcbs import _kernels

A = (2, 1, 3, 4, 6, 5, 4)
B = (1, 2, 3, 5, 6, 4)
PAIR = SequencePair(A, B)


def _run_python(a, b):
    state = TwoPhaseRowState.fresh(len(b))
    for i, s in enumerate(a):
        twophase_row_update(s, b, state, i)
    return state


def test_row_state_snapshot_on_worked_pair():
    state = _run_python(A, B)
    assert state.up == [1, 1, 2, 3, 3, 3]
    assert state.down2 == [0, 0, 0, 0, 0, 4]
    assert state.down2_row[5] == 6
    assert max(max(state.up), max(state.down2)) == 4


def test_kernel_equals_python_rows():
    rng = random.Random(99)
    for _ in range(120):
        n = rng.randint(0, 10)
        m = rng.randint(0, 10)
        a = tuple(rng.randint(1, 5) for _ in range(n))
        b = tuple(rng.randint(1, 5) for _ in range(m))
        state = _run_python(a, b)
        up = np.zeros(m, np.int64)
        down2 = np.zeros(m, np.int64)
        up_row = np.zeros(m, np.int64)
        down2_row = np.zeros(m, np.int64)
        _kernels.twophase_kernel(np.array(a, np.int64), np.array(b, np.int64),
                                 up, down2, up_row, down2_row, n)
        assert up.tolist() == state.up
        assert down2.tolist() == state.down2
        assert up_row.tolist() == state.up_row
        assert down2_row.tolist() == state.down2_row


def test_row_update_width_mismatch():
    with pytest.raises(ValueError):
        twophase_row_update(1, (1, 2, 3), TwoPhaseRowState.fresh(2), 0)


def test_worked_pair_witness():
    out = rolling_lcbs(PAIR, want_witness=True)
    assert out.length == 4
    assert [(p.i, p.j) for p in out.witness.points] == [(1, 0), (2, 2), (5, 3), (6, 5)]
    assert out.witness.values == (1, 3, 5, 4)
    assert out.witness.peak_pos == 2
    assert out.peak == MatchPoint(5, 3, 5)
    assert validate_witness(PAIR, out.witness).ok
    assert out.stats.engine == "rolling"
    assert out.stats.aux_elements == 4 * 6
    assert out.stats.match_count == 7


def test_length_only_has_no_peak():
    out = rolling_lcbs(PAIR)
    assert out.length == 4
    assert out.witness is None and out.peak is None


def test_swapped_orientation():
    # m > n swaps the DP sides; coordinates must map back
    swapped = SequencePair(B, A)
    out = rolling_lcbs(swapped, want_witness=True)
    assert out.length == 4
    assert validate_witness(swapped, out.witness).ok
    assert out.stats.aux_elements == 4 * 6  # still the shorter side


def test_edges():
    assert rolling_lcbs(SequencePair((), ())).length == 0
    assert rolling_lcbs(SequencePair((1,), ())).length == 0
    out = rolling_lcbs(SequencePair((1, 2), (3, 4)), want_witness=True)
    assert out.length == 0 and len(out.witness) == 0
    out = rolling_lcbs(SequencePair((7,), (7,)), want_witness=True)
    assert out.length == 1 and out.witness.peak_pos == 0


def test_matches_oracle_with_witnesses():
    rng = random.Random(3002)
    for _ in range(250):
        n = rng.randint(0, 10)
        m = rng.randint(0, 10)
        sigma = rng.choice([2, 4, 7])
        pair = SequencePair(tuple(rng.randint(1, sigma) for _ in range(n)),
                            tuple(rng.randint(1, sigma) for _ in range(m)))
        want, _ = brute_lcbs(pair)
        out = rolling_lcbs(pair, want_witness=True)
        assert out.length == want
        assert len(out.witness) == want
        assert validate_witness(pair, out.witness).ok


def test_witness_on_long_thin_instance():
    # forces several backtrack reruns over a non-trivial row count
    rng = random.Random(5)
    a = tuple(rng.randint(1, 9) for _ in range(400))
    b = tuple(rng.randint(1, 9) for _ in range(23))
    pair = SequencePair(a, b)
    out = rolling_lcbs(pair, want_witness=True)
    assert validate_witness(pair, out.witness).ok
    assert len(out.witness) == out.length
    assert out.stats.aux_elements == 4 * 23


def test_up_row_matches_lcis_length():
    # after the last row, up[j] holds the longest rising chain ending in
    # column j; its maximum is the LCIS length of the pair
    rng = random.Random(644)
    for _ in range(60):
        n = rng.randint(0, 12)
        m = rng.randint(0, 12)
        a = tuple(rng.randint(1, 6) for _ in range(n))
        b = tuple(rng.randint(1, 6) for _ in range(m))
        state = _run_python(a, b)
        inc = lcis_tables(a, b).inc
        want = max(inc.values(), default=0)
        assert max(state.up, default=0) == want


def test_appending_a_symbol_never_shrinks_the_answer():
    rng = random.Random(645)
    for _ in range(80):
        n = rng.randint(0, 9)
        m = rng.randint(1, 9)
        a = tuple(rng.randint(1, 4) for _ in range(n))
        b = tuple(rng.randint(1, 4) for _ in range(m))
        base = rolling_lcbs(SequencePair(a, b)).length
        grown_a = SequencePair(a + (rng.randint(1, 4),), b)
        grown_b = SequencePair(a, b + (rng.randint(1, 4),))
        assert rolling_lcbs(grown_a).length >= base
        assert rolling_lcbs(grown_b).length >= base
