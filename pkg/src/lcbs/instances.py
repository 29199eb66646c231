"""Random instance generation and sequence file I/O.

File format: whitespace-separated signed integers, 64-bit range. Anything
else is a ParseError, which the CLI maps to its I/O exit code.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence, Union

from .core import SequencePair

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

Seed = Union[int, str]


class ParseError(ValueError):
    pass


def gen_pair(n: int, m: int, sigma: int, seed: Seed) -> SequencePair:
    """Uniform symbols from [1, sigma], one seeded stream, a drawn before b.

    Same (n, m, sigma, seed) always yields the same pair, across runs and
    platforms; that is what bench and the test corpus lean on.
    """
    if n < 0 or m < 0:
        raise ValueError("lengths must be non-negative")
    if sigma < 1:
        raise ValueError("sigma must be at least 1")
    rng = random.Random(seed)
    a = tuple(rng.randint(1, sigma) for _ in range(n))
    b = tuple(rng.randint(1, sigma) for _ in range(m))
    return SequencePair(a, b)


def parse_sequence(text: str, source: str = "<string>") -> tuple[int, ...]:
    out = []
    for tok in text.split():
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"{source}: not an integer: {tok!r}") from None
        if not INT64_MIN <= v <= INT64_MAX:
            raise ParseError(f"{source}: outside signed 64-bit range: {tok}")
        out.append(v)
    return tuple(out)


def read_sequence(path: str) -> tuple[int, ...]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_sequence(fh.read(), source=path)


def format_sequence(seq: Iterable[int]) -> str:
    return " ".join(str(int(x)) for x in seq) + "\n"


def write_sequence(path: str, seq: Sequence[int]) -> None:
    for x in seq:
        if not INT64_MIN <= int(x) <= INT64_MAX:
            raise ValueError(f"symbol outside signed 64-bit range: {x}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_sequence(seq))
