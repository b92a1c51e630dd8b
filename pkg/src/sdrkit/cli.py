"""Command-line interface.

    sdrkit encode   --config cfg.json [--input in.csv] [--output out.txt]
                    [--format dense|sparse|sparse-n]
    sdrkit evaluate --config cfg.json --input in.csv [--quadruples N] [--seed S]
    sdrkit selftest-hash

`encode` streams CSV rows (header required, fields bound by name) to one
output line per row; memory use is independent of row count.  Validation
warnings go to stderr so stdout stays machine-parseable.  `evaluate` checks
the configured distance's axioms and the encoder's overlap-vs-distance
consistency on the input column.  `selftest-hash` prints the deterministic
hash golden vectors for cross-platform verification.

Exit codes: 0 ok, 2 config error, 3 data error, 4 distance-axiom violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from contextlib import nullcontext

from .config import OUTPUT_FORMATS, parse_pipeline_config, serialize_pipeline
from .errors import ConfigError, SdrError
from .hashing import coordinate_hash, mix64
from .quality import evaluate_encoder
from .sdr import SDR, to_dense_string, to_sparse_string

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_AXIOM = 4

# Inputs for the printed hash vectors; arbitrary but frozen, spanning the
# signed 32-bit corners and both hash output streams.
SELFTEST_MIX64_INPUTS = (
    0, 1, 2, 3, 42, 0xDEADBEEF, 0x123456789ABCDEF0, (1 << 64) - 1,
)
SELFTEST_COORD_CASES = (
    (5, 10, 0, 100),
    (0, 0, 0, 100),
    (-1, -1, 0, 100),
    (3, 8, 42, 1000),
    (7, 12, 42, 1000),
    (-2147483648, 2147483647, 0, 2048),
    (2147483647, -2147483648, 987654321, 2048),
    (1000, -1000, 0xDEADBEEF, 542),
    (123, 456, 1, 100),
    (-5, 10, 0, 100),
    (5, -10, 0, 100),
    (0, 1, 0, 2),
)


def _load_config(path: str):
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = json.load(f)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path!r} is not valid JSON: {exc}") from exc
    return parse_pipeline_config(raw)


def _emit_warnings(cfg, stderr) -> None:
    for finding in cfg.warnings:
        print(f"warning: {finding.message}", file=stderr)


def _format_line(sdr: SDR, fmt: str) -> str:
    if fmt == "dense":
        return to_dense_string(sdr)
    if fmt == "sparse":
        return to_sparse_string(sdr)
    return to_sparse_string(sdr, self_describing=True)


def _open_input(path):
    if path in (None, "-"):
        return nullcontext(sys.stdin)
    return open(path, "r", encoding="utf-8", newline="")


def _open_output(path):
    if path in (None, "-"):
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def _header_indices(header, cfg) -> None:
    missing = [c for c in cfg.referenced_columns if c not in header]
    if missing:
        raise ConfigError(
            f"field(s) {missing} not present in the CSV header {header}"
        )


def cmd_encode(args, stderr=None) -> int:
    stderr = stderr or sys.stderr
    try:
        cfg = _load_config(args.config)
        fmt = args.format or cfg.output_format
        if fmt not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {fmt!r}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=stderr)
        return EXIT_CONFIG
    _emit_warnings(cfg, stderr)

    with _open_input(args.input) as fin, _open_output(args.output) as fout:
        reader = csv.reader(fin, delimiter=cfg.delimiter)
        try:
            header = next(reader)
        except StopIteration:
            print("data error: input is empty; a header row is required", file=stderr)
            return EXIT_DATA
        try:
            _header_indices(header, cfg)
        except ConfigError as exc:
            print(f"config error: {exc}", file=stderr)
            return EXIT_CONFIG

        for row_number, row in enumerate(reader, start=1):
            row_map = dict(zip(header, row))
            try:
                if len(row) != len(header):
                    raise SdrError(
                        f"expected {len(header)} fields per the header, got {len(row)}"
                    )
                sdr = cfg.encode_row(row_map)
            except SdrError as exc:
                fout.flush()  # keep everything encoded so far
                print(f"data error: row {row_number}: {exc}", file=stderr)
                return EXIT_DATA
            fout.write(_format_line(sdr, fmt))
            fout.write("\n")
        fout.flush()
    return EXIT_OK


def cmd_evaluate(args, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg = _load_config(args.config)
        if cfg.encoder_spec.get("type") == "multi":
            raise ConfigError("evaluate requires a config with exactly one encoder")
        if cfg.distance is None:
            raise ConfigError("evaluate requires a 'distance' in the config")
    except ConfigError as exc:
        print(f"config error: {exc}", file=stderr)
        return EXIT_CONFIG
    _emit_warnings(cfg, stderr)

    binding = cfg.bound[0]
    samples = []
    started = time.perf_counter()
    with _open_input(args.input) as fin:
        reader = csv.reader(fin, delimiter=cfg.delimiter)
        try:
            header = next(reader)
        except StopIteration:
            print("data error: input is empty; a header row is required", file=stderr)
            return EXIT_DATA
        try:
            _header_indices(header, cfg)
        except ConfigError as exc:
            print(f"config error: {exc}", file=stderr)
            return EXIT_CONFIG
        for row_number, row in enumerate(reader, start=1):
            try:
                samples.append(binding.value_from_row(dict(zip(header, row))))
            except SdrError as exc:
                print(f"data error: row {row_number}: {exc}", file=stderr)
                return EXIT_DATA

    try:
        report = evaluate_encoder(
            binding.encoder.encode, cfg.distance, samples,
            quadruple_count=args.quadruples, seed=args.seed,
        )
    except SdrError as exc:
        print(f"data error: {exc}", file=stderr)
        return EXIT_DATA
    elapsed = time.perf_counter() - started

    print("# encoder evaluation", file=stdout)
    print(f"config: {json.dumps(serialize_pipeline(cfg), sort_keys=True)}", file=stdout)
    print(f"quadruple_seed: {args.seed}", file=stdout)
    print(report.to_text(), file=stdout)
    # timing is run-dependent; keep it out of the reproducible report stream
    print(f"elapsed_seconds: {elapsed:.3f}", file=stderr)

    if report.total_axiom_violations > 0:
        return EXIT_AXIOM
    return EXIT_OK


def cmd_selftest_hash(args, stdout=None) -> int:
    stdout = stdout or sys.stdout
    print("# mix64 input,output", file=stdout)
    for k in SELFTEST_MIX64_INPUTS:
        print(f"{k},{mix64(k)}", file=stdout)
    print("# coordinate_hash x,y,seed,n,bit_index,order_key", file=stdout)
    for x, y, seed, n in SELFTEST_COORD_CASES:
        bit_index, order_key = coordinate_hash((x, y), seed, n)
        print(f"{x},{y},{seed},{n},{bit_index},{order_key}", file=stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdrkit",
        description="Encode CSV data into sparse distributed representations "
                    "and evaluate encoder quality.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enc = sub.add_parser("encode", help="stream CSV rows to SDR output lines")
    p_enc.add_argument("--config", required=True, help="pipeline config (JSON)")
    p_enc.add_argument("--input", default="-", help="input CSV path or '-' for stdin")
    p_enc.add_argument("--output", default="-", help="output path or '-' for stdout")
    p_enc.add_argument("--format", choices=OUTPUT_FORMATS, default=None,
                       help="override the config's output format")

    p_eval = sub.add_parser("evaluate", help="score an encoder against a distance")
    p_eval.add_argument("--config", required=True, help="pipeline config (JSON)")
    p_eval.add_argument("--input", required=True, help="input CSV of sample values")
    p_eval.add_argument("--quadruples", type=int, default=10_000,
                        help="sampled quadruples for the consistency check")
    p_eval.add_argument("--seed", type=int, default=0, help="quadruple sampling seed")

    sub.add_parser("selftest-hash", help="print deterministic hash golden vectors")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "encode":
        return cmd_encode(args)
    if args.command == "evaluate":
        return cmd_evaluate(args)
    return cmd_selftest_hash(args)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
