"""Command line harness: generate test cases, run checks, emit reports.

Two subcommands.  ``gen`` writes random Hermitian matrix files; ``check``
runs one suite (or all of them) over generated cases or over input files
and prints a JSON report.  Reports are deterministic for a fixed seed
and flags, except for the timing block, which is the only place a
wall-clock number appears.

Exit codes: 0 all checks passed, 1 at least one property violation,
2 malformed input or I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .errors import (
    DegreeMismatchError,
    InputFormatError,
    InterlaceKitError,
    InternalInconsistencyError,
)
from .hermitian import (
    HermitianMatrix,
    bordered_identity,
    cauchy_check,
    random_hermitian,
)
from .interlace import (
    default_alphas,
    hko_crosscheck,
    interlaces_exact,
)
from .polynomials import Polynomial, poly_from_strings, poly_to_strings
from .rationals import format_rational, parse_rational
from .rng import trial_rng

MODES = ("definition", "pencil", "identity", "cauchy", "all")
MATRIX_MODES = ("identity", "cauchy")
PAIR_MODES = ("definition", "pencil")


@dataclass(frozen=True)
class RunConfig:
    mode: str
    seed: int
    trials: int
    size_min: int
    size_max: int
    bound: int
    alphas: int
    width: Fraction
    out: str | None
    inputs: tuple[str, ...] = ()

    def validate_common(self) -> None:
        if self.trials < 1:
            raise InputFormatError(f"trials must be >= 1, got {self.trials}")
        if self.size_min < 1 or self.size_max < self.size_min:
            raise InputFormatError(
                f"need 1 <= size-min <= size-max,"
                f" got {self.size_min}..{self.size_max}"
            )
        if self.bound < 1:
            raise InputFormatError(f"bound must be >= 1, got {self.bound}")
        if self.alphas < 0:
            raise InputFormatError(f"alphas must be >= 0, got {self.alphas}")
        if self.width <= 0:
            raise InputFormatError(f"width must be positive, got {self.width}")

    def validate_check(self) -> None:
        self.validate_common()
        if self.mode not in MODES:
            raise InputFormatError(f"unknown mode {self.mode!r}")
        if self.inputs and self.mode == "all":
            raise InputFormatError(
                "input files require a single mode, not 'all'"
            )
        if self.mode in ("identity", "cauchy", "all") and self.size_min < 2:
            raise InputFormatError(
                f"mode {self.mode!r} needs size-min >= 2, got {self.size_min}"
            )


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: invalid JSON: {exc}") from None


def _load_matrix(path: str) -> HermitianMatrix:
    try:
        return HermitianMatrix.from_json_obj(_load_json(path))
    except InputFormatError as exc:
        raise InputFormatError(f"{path}: {exc}") from None


def _load_pair(path: str) -> tuple[Polynomial, Polynomial]:
    obj = _load_json(path)
    try:
        if not isinstance(obj, dict) or set(obj) != {"f", "g"}:
            raise InputFormatError("pair document needs exactly the keys f and g")
        f = poly_from_strings(obj["f"])
        g = poly_from_strings(obj["g"])
    except InputFormatError as exc:
        raise InputFormatError(f"{path}: {exc}") from None
    if f.is_zero or g.is_zero:
        raise InputFormatError(f"{path}: polynomials must be nonzero")
    return f, g


def _alpha_grid(config: RunConfig) -> list[Fraction]:
    return default_alphas(random_count=config.alphas)


def _degree_for_trial(config: RunConfig, rng) -> int:
    return rng.int_between(config.size_min, config.size_max)


def _random_interlacing_pair(rng, degree: int, bound: int):
    """Monic pair built from an explicit weak chain of rational roots."""
    values = sorted(
        rng.rational(10 * bound, 4) for _ in range(2 * degree - 1)
    )
    roots_f = values[0::2]
    roots_g = values[1::2]
    return Polynomial.from_roots(roots_f), Polynomial.from_roots(roots_g)


def _definition_generated(config: RunConfig) -> list[dict]:
    records = []
    for trial in range(config.trials):
        rng = trial_rng(config.seed, trial)
        degree = _degree_for_trial(config, rng)
        f, g = _random_interlacing_pair(rng, degree, config.bound)
        report = interlaces_exact(f, g)
        records.append(
            {
                "trial": trial,
                "degree": degree,
                "f": poly_to_strings(f),
                "g": poly_to_strings(g),
                "report": report.as_dict(),
                "pass": report.verdict.value == "Interlaces",
            }
        )
    return records


def _definition_files(config: RunConfig) -> list[dict]:
    records = []
    for path in config.inputs:
        f, g = _load_pair(path)
        report = interlaces_exact(f, g)
        records.append(
            {
                "path": path,
                "f": poly_to_strings(f),
                "g": poly_to_strings(g),
                "report": report.as_dict(),
                "pass": report.verdict.value
                in ("Interlaces", "DoesNotInterlace"),
            }
        )
    return records


def _pencil_generated(config: RunConfig) -> list[dict]:
    grid = _alpha_grid(config)
    records = []
    for trial in range(config.trials):
        rng = trial_rng(config.seed, trial)
        degree = _degree_for_trial(config, rng)
        f, g = _random_interlacing_pair(rng, degree, config.bound)
        report = hko_crosscheck(f, g, alphas=grid)
        records.append(
            {
                "trial": trial,
                "degree": degree,
                "f": poly_to_strings(f),
                "g": poly_to_strings(g),
                "report": report.as_dict(),
                "pass": report.consistent,
            }
        )
    return records


def _pencil_files(config: RunConfig) -> list[dict]:
    grid = _alpha_grid(config)
    records = []
    for path in config.inputs:
        f, g = _load_pair(path)
        try:
            report = hko_crosscheck(f, g, alphas=grid)
        except DegreeMismatchError as exc:
            raise InputFormatError(f"{path}: {exc}") from None
        records.append(
            {
                "path": path,
                "f": poly_to_strings(f),
                "g": poly_to_strings(g),
                "report": report.as_dict(),
                "pass": report.consistent,
            }
        )
    return records


def _identity_trial(matrix: HermitianMatrix, alpha: Fraction) -> dict:
    report = bordered_identity(matrix, alpha)
    return {"report": report.as_dict(), "pass": report.exact_match}


def _identity_generated(config: RunConfig) -> list[dict]:
    records = []
    for trial in range(config.trials):
        rng = trial_rng(config.seed, trial)
        n = rng.int_between(max(config.size_min, 2), config.size_max)
        matrix = random_hermitian(rng, n, config.bound)
        alpha = rng.rational(100, 100)
        entry = _identity_trial(matrix, alpha)
        entry.update({"trial": trial, "n": n, "matrix": matrix.to_json_obj()})
        records.append(entry)
    return records


def _identity_files(config: RunConfig) -> list[dict]:
    records = []
    for index, path in enumerate(config.inputs):
        matrix = _load_matrix(path)
        if matrix.n < 2:
            raise InputFormatError(f"{path}: identity mode needs n >= 2")
        alpha = trial_rng(config.seed, index).rational(100, 100)
        entry = _identity_trial(matrix, alpha)
        entry.update({"path": path, "n": matrix.n, "matrix": matrix.to_json_obj()})
        records.append(entry)
    return records


def _cauchy_one(matrix: HermitianMatrix, width: Fraction) -> tuple[list[dict], bool]:
    deletions = []
    ok = True
    for k in range(matrix.n):
        try:
            report = cauchy_check(matrix, k, width)
            deletions.append({"k": k, "verdict": report.verdict.value})
        except InternalInconsistencyError as exc:
            ok = False
            deletions.append({"k": k, "verdict": "Inconsistent", "detail": str(exc)})
    return deletions, ok


def _cauchy_generated(config: RunConfig) -> list[dict]:
    records = []
    for trial in range(config.trials):
        rng = trial_rng(config.seed, trial)
        n = rng.int_between(max(config.size_min, 2), config.size_max)
        matrix = random_hermitian(rng, n, config.bound)
        deletions, ok = _cauchy_one(matrix, config.width)
        records.append(
            {
                "trial": trial,
                "n": n,
                "matrix": matrix.to_json_obj(),
                "deletions": deletions,
                "pass": ok,
            }
        )
    return records


def _cauchy_files(config: RunConfig) -> list[dict]:
    records = []
    for path in config.inputs:
        matrix = _load_matrix(path)
        if matrix.n < 2:
            raise InputFormatError(f"{path}: cauchy mode needs n >= 2")
        deletions, ok = _cauchy_one(matrix, config.width)
        records.append(
            {
                "path": path,
                "n": matrix.n,
                "matrix": matrix.to_json_obj(),
                "deletions": deletions,
                "pass": ok,
            }
        )
    return records


_SUITES = {
    "definition": (_definition_generated, _definition_files),
    "pencil": (_pencil_generated, _pencil_files),
    "identity": (_identity_generated, _identity_files),
    "cauchy": (_cauchy_generated, _cauchy_files),
}


def _config_dict(config: RunConfig) -> dict:
    return {
        "mode": config.mode,
        "seed": config.seed,
        "trials": config.trials,
        "size_min": config.size_min,
        "size_max": config.size_max,
        "bound": config.bound,
        "alphas": config.alphas,
        "width": format_rational(config.width),
        "inputs": list(config.inputs),
    }


def cmd_check(config: RunConfig) -> int:
    config.validate_check()
    started = time.monotonic()
    suites = {}
    failures = 0
    names = [config.mode] if config.mode != "all" else list(_SUITES)
    for name in names:
        generated, from_files = _SUITES[name]
        records = from_files(config) if config.inputs else generated(config)
        failed = sum(1 for r in records if not r["pass"])
        failures += failed
        suites[name] = {
            "trials": records,
            "passes": len(records) - failed,
            "failures": failed,
        }
    report = {
        "tool": {"name": "interlacekit", "version": __version__},
        "config": _config_dict(config),
        "suites": suites,
        "failures": failures,
        "timing": {"elapsed_seconds": time.monotonic() - started},
    }
    text = _dump(report)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if failures == 0 else 1


def _gen_path(template: str | None, index: int, total: int) -> str:
    if template is None:
        template = "matrix_{i:03d}.json"
    if "{i" in template:
        return template.format(i=index)
    if total == 1:
        return template
    stem, dot, ext = template.rpartition(".")
    if not dot:
        return f"{template}_{index:03d}"
    return f"{stem}_{index:03d}.{ext}"


def cmd_gen(config: RunConfig) -> int:
    config.validate_common()
    for trial in range(config.trials):
        rng = trial_rng(config.seed, trial)
        n = rng.int_between(config.size_min, config.size_max)
        matrix = random_hermitian(rng, n, config.bound)
        path = _gen_path(config.out, trial, config.trials)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_dump(matrix.to_json_obj()))
        sys.stdout.write(path + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interlacekit",
        description="exact interlacing and Hermitian spectrum checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--trials", type=int, default=10)
        p.add_argument("--size-min", type=int, default=2, dest="size_min")
        p.add_argument("--size-max", type=int, default=6, dest="size_max")
        p.add_argument("--bound", type=int, default=10)
        p.add_argument(
            "--alphas",
            type=int,
            default=64,
            help="random alphas appended to the fixed pencil grid",
        )
        p.add_argument(
            "--width",
            type=str,
            default="1/1048576",
            help="interval refinement width as a rational string",
        )
        p.add_argument("--mode", choices=MODES, default="all")
        p.add_argument("--out", type=str, default=None)

    gen = sub.add_parser("gen", help="write random Hermitian matrix files")
    add_common(gen)

    check = sub.add_parser("check", help="run checks and print a JSON report")
    add_common(check)
    check.add_argument("inputs", nargs="*", help="matrix or pair files")
    return parser


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        mode=args.mode,
        seed=args.seed,
        trials=args.trials,
        size_min=args.size_min,
        size_max=args.size_max,
        bound=args.bound,
        alphas=args.alphas,
        width=parse_rational(args.width),
        out=args.out,
        inputs=tuple(getattr(args, "inputs", ()) or ()),
    )


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.command == "gen":
            return cmd_gen(config)
        return cmd_check(config)
    except (InputFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InterlaceKitError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
