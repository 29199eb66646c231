"""Command-line front end.

Subcommands: solve (run an engine on two sequence files), gen (write a
seeded random instance), verify (check a witness file against a pair),
bench (timing sweep to CSV with a cross-engine consistency check).

Exit codes: 0 success, 1 a check failed (invalid witness, engines
disagree), 2 file or parse trouble (argparse usage errors also exit 2),
3 the oracle refused an oversized instance.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from .core import MatchPoint, SequencePair, Witness, validate_witness
from .engines import ENGINE_IDS, solve_pair
from .instances import ParseError, gen_pair, read_sequence, write_sequence
from .oracle import OracleSizeError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_IO = 2
EXIT_REFUSED = 3

BENCH_COLUMNS = ("engine", "n", "m", "sigma", "M", "length",
                 "elapsed_ms", "aux_elements", "probes")
BENCH_ENGINES = ("dense", "rolling", "sparse")


# ------------------------------------------------------------ witness files


def format_witness_file(witness: Witness) -> str:
    """One 'i j' line per point, then 'peak <index>'; empty chain = empty."""
    lines = [f"{p.i} {p.j}" for p in witness.points]
    if witness.points:
        lines.append(f"peak {witness.peak_pos}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_witness_file(text: str, source: str = "<witness>"):
    pairs: list[tuple[int, int]] = []
    peak: Optional[int] = None
    seen_peak = False
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "peak":
            if seen_peak:
                raise ParseError(f"{source}:{ln}: duplicate peak line")
            if len(toks) != 2:
                raise ParseError(f"{source}:{ln}: peak line needs one index")
            try:
                peak = int(toks[1])
            except ValueError:
                raise ParseError(f"{source}:{ln}: peak index is not an integer") from None
            seen_peak = True
        else:
            if seen_peak:
                raise ParseError(f"{source}:{ln}: pair line after the peak line")
            if len(toks) != 2:
                raise ParseError(f"{source}:{ln}: expected 'i j'")
            try:
                pairs.append((int(toks[0]), int(toks[1])))
            except ValueError:
                raise ParseError(f"{source}:{ln}: expected integers") from None
    if pairs and not seen_peak:
        raise ParseError(f"{source}: missing peak line")
    if not pairs and seen_peak:
        raise ParseError(f"{source}: peak line without pair lines")
    if pairs and not 0 <= peak < len(pairs):
        raise ParseError(f"{source}: peak index out of range")
    return pairs, peak


def _witness_from_pairs(seqpair: SequencePair, pairs, peak) -> Witness:
    # fill values from whichever side is indexable; mismatches and range
    # errors are validate_witness's to report, not parse failures
    pts = []
    for i, j in pairs:
        if 0 <= i < seqpair.n:
            value = seqpair.a[i]
        elif 0 <= j < seqpair.m:
            value = seqpair.b[j]
        else:
            value = 0
        pts.append(MatchPoint(i, j, value))
    return Witness(tuple(pts), peak if pts else None)


# ------------------------------------------------------------------- solve


def _solve_doc(pair: SequencePair, out) -> dict:
    doc = {"engine": out.stats.engine, "n": pair.n, "m": pair.m,
           "matches": out.stats.match_count, "length": out.length}
    if out.witness is not None:
        doc["witness"] = {"values": list(out.witness.values),
                          "pairs": [[p.i, p.j] for p in out.witness.points],
                          "peak_pos": out.witness.peak_pos}
    if out.peak is not None:
        doc["peak"] = {"i": out.peak.i, "j": out.peak.j,
                       "value": out.peak.value}
    doc["elapsed_ms"] = out.stats.elapsed_ms
    doc["aux_elements"] = out.stats.aux_elements
    if out.stats.probes is not None:
        doc["probes"] = out.stats.probes
    return doc


def _cmd_solve(args) -> int:
    try:
        a = read_sequence(args.a)
        b = read_sequence(args.b)
    except (ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    pair = SequencePair(a, b)
    want = args.witness or args.witness_out is not None
    try:
        out = solve_pair(pair, args.engine, want_witness=want)
    except OracleSizeError as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    if args.witness_out is not None:
        try:
            with open(args.witness_out, "w", encoding="utf-8") as fh:
                fh.write(format_witness_file(out.witness))
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_IO
    if args.as_json:
        print(json.dumps(_solve_doc(pair, out)))
        return EXIT_OK
    lines = [f"length {out.length}", f"engine {out.stats.engine}",
             f"n {pair.n}", f"m {pair.m}",
             f"matches {out.stats.match_count}"]
    if out.witness is not None:
        lines.append("witness " + " ".join(str(v) for v in out.witness.values))
        for p in out.witness.points:
            lines.append(f"pair {p.i} {p.j}")
        if out.witness.points:
            lines.append(f"peak_pos {out.witness.peak_pos}")
    if out.peak is not None:
        lines.append(f"peak {out.peak.i} {out.peak.j} {out.peak.value}")
    lines.append(f"elapsed_ms {out.stats.elapsed_ms:.3f}")
    lines.append(f"aux_elements {out.stats.aux_elements}")
    if out.stats.probes is not None:
        lines.append(f"probes {out.stats.probes}")
    print("\n".join(lines))
    return EXIT_OK


# --------------------------------------------------------------------- gen


def _cmd_gen(args) -> int:
    try:
        pair = gen_pair(args.n, args.m, args.sigma, args.seed)
        write_sequence(args.out_a, pair.a)
        write_sequence(args.out_b, pair.b)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# ------------------------------------------------------------------ verify


def _cmd_verify(args) -> int:
    try:
        a = read_sequence(args.a)
        b = read_sequence(args.b)
        with open(args.witness_file, "r", encoding="utf-8") as fh:
            text = fh.read()
        pairs, peak = parse_witness_file(text, args.witness_file)
    except (ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    seqpair = SequencePair(a, b)
    witness = _witness_from_pairs(seqpair, pairs, peak)
    report = validate_witness(seqpair, witness)
    if report.ok:
        print(f"witness ok: length {len(witness)}")
        return EXIT_OK
    for v in report.violations:
        print(v)
    return EXIT_FAIL


# ------------------------------------------------------------------- bench


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"{what}: expected comma-separated integers") from None
    if not vals:
        raise ParseError(f"{what}: empty list")
    return vals


def _cmd_bench(args) -> int:
    try:
        sizes = _parse_int_list(args.sizes, "--sizes")
        sigmas = _parse_int_list(args.sigmas, "--sigmas")
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    bad = [e for e in engines if e not in BENCH_ENGINES]
    if bad or not engines:
        print(f"error: --engines must be a subset of {','.join(BENCH_ENGINES)}",
              file=sys.stderr)
        return EXIT_IO
    if args.reps < 0:
        print("error: --reps must be non-negative", file=sys.stderr)
        return EXIT_IO
    rows = []
    failures = []
    for size in sizes:
        for sigma in sigmas:
            for rep in range(args.reps):
                pr = gen_pair(size, size, sigma,
                              f"{args.seed}:{size}:{sigma}:{rep}")
                lengths = {}
                for eng in engines:
                    out = solve_pair(pr, eng)
                    lengths[eng] = out.length
                    probes = out.stats.probes
                    rows.append({
                        "engine": eng, "n": size, "m": size, "sigma": sigma,
                        "M": out.stats.match_count, "length": out.length,
                        "elapsed_ms": f"{out.stats.elapsed_ms:.3f}",
                        "aux_elements": out.stats.aux_elements,
                        "probes": probes if probes is not None else "",
                    })
                if len(set(lengths.values())) > 1:
                    failures.append((size, sigma, rep, lengths, pr))
    try:
        target = open(args.csv, "w", encoding="utf-8", newline="") \
            if args.csv else sys.stdout
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    try:
        writer = csv.DictWriter(target, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if target is not sys.stdout:
            target.close()
    if failures:
        for size, sigma, rep, lengths, pr in failures:
            stem = f"bench_fail_{size}_{sigma}_{rep}"
            write_sequence(f"{stem}_a.txt", pr.a)
            write_sequence(f"{stem}_b.txt", pr.b)
            print(f"engines disagree on size={size} sigma={sigma} rep={rep}: "
                  f"{lengths} (instance dumped to {stem}_a.txt/{stem}_b.txt)",
                  file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lcbs",
        description="Longest common bitonic subsequence engines")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("solve", help="solve an instance from two sequence files")
    s.add_argument("a", help="path to the first sequence")
    s.add_argument("b", help="path to the second sequence")
    s.add_argument("--engine", choices=ENGINE_IDS, default="auto")
    s.add_argument("--witness", action="store_true",
                   help="also reconstruct one optimal chain")
    s.add_argument("--json", dest="as_json", action="store_true",
                   help="emit one JSON object instead of key-value lines")
    s.add_argument("--witness-out", metavar="PATH",
                   help="write the chain in witness file format (implies --witness)")
    s.set_defaults(func=_cmd_solve)

    g = sub.add_parser("gen", help="write a seeded random instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--sigma", type=int, required=True,
                   help="symbols are drawn uniformly from [1, sigma]")
    g.add_argument("--seed", default="0")
    g.add_argument("--out-a", required=True, metavar="PATH")
    g.add_argument("--out-b", required=True, metavar="PATH")
    g.set_defaults(func=_cmd_gen)

    v = sub.add_parser("verify", help="validate a witness file against a pair")
    v.add_argument("a")
    v.add_argument("b")
    v.add_argument("witness_file")
    v.set_defaults(func=_cmd_verify)

    bn = sub.add_parser("bench", help="timing sweep across engines, CSV out")
    bn.add_argument("--sizes", required=True, help="comma-separated n=m values")
    bn.add_argument("--sigmas", required=True, help="comma-separated alphabet sizes")
    bn.add_argument("--engines", default=",".join(BENCH_ENGINES))
    bn.add_argument("--reps", type=int, default=3)
    bn.add_argument("--seed", default="0")
    bn.add_argument("--csv", metavar="PATH", help="default: stdout")
    bn.set_defaults(func=_cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def run() -> None:
    raise SystemExit(main())
