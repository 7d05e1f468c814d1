"""Command-line entry point.

Exit codes: 0 success, 1 check or verification failed, 2 usage error,
3 I/O or format error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .blockmatrix import BlockMatrix, expand_block
from .catalog import catalog_json
from .conditions import certify_girth_at_least
from .decode import DecoderConfig, SimulationConfig, parse_snr_grid, simulate_fer
from .families import FAMILIES, DeltaConditionError
from .io import (AlistError, CodeFormatError, blocks_from_matrix, dumps_code, export_alist,
                 import_alist, loads_code)
from .oracle import girth_bfs
from .search import SearchExhausted, bresnan_count, default_jobs, random_search

OK, FAILED, USAGE, IO_ERROR = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _shape_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", type=int, help="reg24 diagonal offset (default alpha-2)")
    p.add_argument("--delta2", type=int, help="reg36 offset delta2")
    p.add_argument("--delta3", type=int, help="reg36 offset delta3")


def _shape(args: argparse.Namespace) -> dict[str, int]:
    keys = FAMILIES[args.family].shape_keys
    given = {k: getattr(args, k) for k in ("delta", "delta2", "delta3") if getattr(args, k) is not None}
    extra = set(given) - set(keys)
    if extra:
        raise UsageError(f"{args.family} takes no {', '.join('--' + k for k in sorted(extra))}")
    if args.family == "reg24" and "delta" not in given:
        given["delta"] = args.alpha - 2
    missing = [k for k in keys if k not in given]
    if missing:
        raise UsageError(f"{args.family} needs {', '.join('--' + k for k in missing)}")
    return given


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qcgirth", description="Quasi-cyclic LDPC codes with girth guarantees.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="search a family and write a JSON code description")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    _shape_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("search", help="count Bresnan solutions or search any family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    _shape_args(p)
    p.add_argument("--count-only", action="store_true", help="print only the solution count")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10**7)

    p = sub.add_parser("verify", help="certify a girth lower bound")
    p.add_argument("file", type=Path)
    p.add_argument("--target-girth", type=int, default=None)
    p.add_argument("--m", type=int, help="circulant size for alist input")

    p = sub.add_parser("girth", help="Tanner-graph girth by BFS")
    p.add_argument("file", type=Path)

    p = sub.add_parser("catalog", help="dump the cycle configurations of length 2s")
    p.add_argument("--s", type=int, required=True, choices=(2, 3, 4))

    p = sub.add_parser("simulate", help="FER over an SNR grid, CSV on stdout")
    p.add_argument("file", type=Path)
    p.add_argument("--snr", required=True, help="a:b:step in dB, or a comma list")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-errors", type=int, default=10)
    p.add_argument("--max-trials", type=int, default=10**7)
    p.add_argument("--max-iter", type=int, default=20)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("export", help="JSON code description to alist")
    p.add_argument("file", type=Path)
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("import", help="alist to JSON (with --m) or a summary")
    p.add_argument("file", type=Path)
    p.add_argument("--m", type=int, help="recover m x m circulant blocks")
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("-o", "--output", type=Path)
    return ap


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


def _load(path: Path, m: int | None = None):
    """(block matrix or None, sparse matrix, family, params) from JSON or alist."""
    text = path.read_text()
    if text.lstrip().startswith("{"):
        bm, family, params = loads_code(text)
        return bm, expand_block(bm), family, params
    mat = import_alist(text)
    bm = None
    if m is not None:
        try:
            bm = blocks_from_matrix(mat, m)
        except ValueError as exc:
            raise CodeFormatError(str(exc)) from None
    return bm, mat, None, None


def _construct(args) -> int:
    shape = _shape(args)
    spec = FAMILIES[args.family]
    params = random_search(args.family, args.m, args.alpha, seed=args.seed, budget=args.budget, **shape)
    _emit(dumps_code(spec.build(params), args.family, params), args.output)
    return OK


def _search(args) -> int:
    shape = _shape(args)
    t0 = time.perf_counter()
    if args.family == "bresnan":
        def progress(done: int, total: int, found: int) -> None:
            if not args.count_only:
                print(f"first-row states {done}/{total}, solutions {found}", file=sys.stderr, flush=True)

        count = bresnan_count(args.m, args.alpha, jobs=args.jobs or default_jobs(), progress=progress)
        params = None
    else:
        if args.count_only:
            raise UsageError("--count-only is only available for bresnan")
        try:
            params = random_search(args.family, args.m, args.alpha, seed=args.seed, budget=args.budget, **shape)
            count = 1
        except SearchExhausted as exc:
            print(str(exc), file=sys.stderr)
            params, count = None, 0
    if args.count_only:
        print(count)
        return OK
    summary = {"m": args.m, "alpha": args.alpha, "family": args.family, "count": count,
               "elapsed": round(time.perf_counter() - t0, 3)}
    if params is not None:
        summary["states"] = [list(s) for s in params.states()]
    print(json.dumps(summary))
    return OK


def _verify(args) -> int:
    bm, mat, family, params = _load(args.file, args.m)
    target = args.target_girth or (FAMILIES[family].target_girth if family in FAMILIES else 6)
    report: dict = {"file": str(args.file), "target_girth": target}
    ok = True
    if bm is not None and target in (6, 8, 10):
        cert, cr = certify_girth_at_least(bm, target)
        report["method"] = "conditions"
        report["conditions"] = cr.as_dict()
        ok = cert
    else:
        g = girth_bfs(mat)
        report["method"] = "bfs"
        report["girth"] = g
        ok = g is None or g >= target
    if params is not None:
        report["family"] = family
        report["family_check"] = FAMILIES[family].check(params)
        ok = ok and report["family_check"]
    report["ok"] = ok
    print(json.dumps(report, indent=2))
    return OK if ok else FAILED


def _girth(args) -> int:
    _, mat, _, _ = _load(args.file)
    g = girth_bfs(mat)
    print("inf" if g is None else g)
    return OK


def _simulate(args) -> int:
    bm, mat, _, _ = _load(args.file)
    try:
        grid = parse_snr_grid(args.snr)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cfg = SimulationConfig(min_block_errors=args.min_errors, max_trials=args.max_trials, seed=args.seed,
                           jobs=args.jobs or default_jobs(), decoder=DecoderConfig(args.max_iter))
    points = simulate_fer(bm if bm is not None else mat, grid, config=cfg)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["snr_db", "trials", "block_errors", "fer", "fer_plus", "fer_minus"])
        for p in points:
            w.writerow(p.as_row())
    finally:
        if args.output:
            out.close()
    for p in points:
        if p.censored:
            print(f"warning: {p.snr_db} dB censored at {p.trials} trials", file=sys.stderr)
    return OK


def _export(args) -> int:
    _, mat, _, _ = _load(args.file)
    _emit(export_alist(mat), args.output)
    return OK


def _import(args) -> int:
    mat = import_alist(args.file.read_text())
    if args.m is None:
        rw = [len(r) for r in mat.rows]
        cw = [len(c) for c in mat.cols]
        _emit(json.dumps({"n_rows": mat.n_rows, "n_cols": mat.n_cols, "nnz": mat.nnz,
                          "row_weights": sorted(set(rw)), "col_weights": sorted(set(cw))}) + "\n", args.output)
        return OK
    try:
        bm = blocks_from_matrix(mat, args.m, args.alpha)
    except ValueError as exc:
        raise CodeFormatError(str(exc)) from None
    _emit(dumps_code(bm), args.output)
    return OK


_COMMANDS = {"construct": _construct, "search": _search, "verify": _verify, "girth": _girth,
             "catalog": lambda a: (print(catalog_json(a.s)), OK)[1], "simulate": _simulate,
             "export": _export, "import": _import}


def cli_dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else USAGE
    except (OSError, AlistError, CodeFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    except SearchExhausted as exc:
        print(json.dumps({"ok": False, "error": str(exc)}))
        return FAILED
    except (DeltaConditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(cli_dispatch())
