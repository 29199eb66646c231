import random

import pytest

from lcbs.core import SequencePair
from lcbs.engines import ENGINE_IDS, choose_engine, solve_pair
from lcbs.oracle import OracleSizeError


def test_engine_ids():
    assert set(ENGINE_IDS) == {"dense", "rolling", "sparse", "auto", "oracle"}


def test_choose_engine_prefers_sparse_on_few_matches():
    n = 4096
    perm = SequencePair(tuple(range(n)), tuple(range(n, 0, -1)))
    assert choose_engine(perm) == "sparse"
    # disjoint alphabets: no matches at all
    assert choose_engine(SequencePair((1, 2, 3), (7, 8, 9))) == "sparse"


def test_choose_engine_prefers_rolling_on_match_floods():
    flood = SequencePair((5,) * 300, (5,) * 300)
    assert choose_engine(flood) == "rolling"
    assert choose_engine(SequencePair((), (1, 2))) == "rolling"
    # small instances never clear the log-factor bar
    assert choose_engine(SequencePair((1, 2, 3), (1, 2, 3))) == "rolling"


def test_auto_resolves_and_reports_the_engine_used():
    pair = SequencePair(tuple(range(64)), tuple(range(64)))
    out = solve_pair(pair, "auto")
    assert out.stats.engine == choose_engine(pair)
    assert out.length == 64


def test_all_engines_share_outcome_shape():
    pair = SequencePair((2, 1, 3, 4, 6, 5, 4), (1, 2, 3, 5, 6, 4))
    for engine in ("dense", "rolling", "sparse", "oracle"):
        out = solve_pair(pair, engine, want_witness=True)
        assert out.length == 4
        assert len(out.witness) == 4
        assert out.stats.match_count == 7


def test_unknown_engine_and_bad_input():
    pair = SequencePair((1,), (1,))
    with pytest.raises(ValueError):
        solve_pair(pair, "quantum")
    with pytest.raises(TypeError):
        solve_pair(((1,), (1,)), "dense")


def test_oracle_refusal_propagates():
    big = SequencePair((3,) * 40, (3,) * 40)
    with pytest.raises(OracleSizeError):
        solve_pair(big, "oracle")


def test_index_backend_passthrough():
    pair = SequencePair((2, 1, 3, 4, 6, 5, 4), (1, 2, 3, 5, 6, 4))
    for backend in ("dense", "csr", "mapped"):
        out = solve_pair(pair, "sparse", want_witness=True,
                         index_backend=backend)
        assert out.length == 4


def test_engines_agree_on_random_instances():
    rng = random.Random(990)
    for _ in range(60):
        n = rng.randint(0, 40)
        m = rng.randint(0, 40)
        sigma = rng.choice([2, 5, 30])
        pair = SequencePair(tuple(rng.randint(1, sigma) for _ in range(n)),
                            tuple(rng.randint(1, sigma) for _ in range(m)))
        lengths = {solve_pair(pair, e).length
                   for e in ("dense", "rolling", "sparse", "auto")}
        assert len(lengths) == 1


def test_auto_picks_sparse_on_large_permutations():
    rng = random.Random(17)
    pa = list(range(1, 100_001))
    pb = list(range(1, 100_001))
    rng.shuffle(pa)
    rng.shuffle(pb)
    pair = SequencePair(tuple(pa), tuple(pb))
    assert choose_engine(pair) == "sparse"
