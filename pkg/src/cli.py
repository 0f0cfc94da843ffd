"""
Command-line surface: classify pairs, list subalgebras, enumerate minimal
strongly connected digraphs and reproduce the published count tables.

Exit codes: 0 success, 1 unexpected failure, 2 bad input, 3 spectrum
hypothesis violated, 4 verification or golden mismatch, 5 size cap exceeded.
"""

import argparse
import asyncio
import sys
from pathlib import Path
from typing import Any, Awaitable, Callable, Optional, Sequence

from pydantic import ValidationError

from config.settings import get_settings
from src.models import golden
from src.models.matrix import MatrixPair
from src.models.pattern import Pattern
from src.models.reports import CountTable
from src.repositories.json_repository import JsonArtifactRepository
from src.services.criteria import classify, invariant_coordinate_subspaces
from src.services.enumeration import EnumerationService
from src.services.pattern_semiring import (
    covering_exponent,
    is_generating,
    is_pattern_subalgebra,
    pattern_closure,
    power_sequence,
)
from src.services.subalgebra_lattice import (
    enumerate_maximal_subalgebras,
    lift_derivation,
    lift_subalgebras,
    proper_subsets,
    subalgebra_classes,
)
from src.services.verification_service import VerificationService
from src.utils.exceptions import (
    CapExceededError,
    MatAlgBaseException,
    SubsetError,
    VerificationMismatchError,
)
from src.utils.logging_utils import setup_logger

logger = setup_logger(__name__)

Handler = Callable[[argparse.Namespace], Awaitable[int]]


def _output(args: argparse.Namespace) -> JsonArtifactRepository:
    return JsonArtifactRepository(args.output)


async def _read_pair(args: argparse.Namespace) -> MatrixPair:
    payload = await JsonArtifactRepository(args.input).read_document()
    tolerance = (
        args.tolerance if args.tolerance is not None else get_settings().SUPPORT_TOLERANCE
    )
    return MatrixPair.from_json(payload, tolerance)


# Commands


async def run_classify(args: argparse.Namespace) -> int:
    """Write the classification report; with --verify also run the oracle."""
    pair = await _read_pair(args)
    report = classify(pair.spectrum, pair.matrix)
    await _output(args).write_document(report.to_json())
    if args.verify:
        outcome = VerificationService().verify_instance(pair.spectrum, pair.matrix)
        if not outcome.agrees:
            raise VerificationMismatchError(
                f"Oracle disagrees with the classification: {outcome.to_json()}"
            )
        logger.info("Oracle agrees with the classification")
    return 0


async def run_subspaces(args: argparse.Namespace) -> int:
    pair = await _read_pair(args)
    subsets = invariant_coordinate_subspaces(pair.spectrum, pair.matrix)
    await _output(args).write_document(
        {
            "n": pair.matrix.n,
            "invariant_subsets": [s.to_json() for s in subsets],
            "invariant_dimensions": sorted({len(s.members) for s in subsets}),
        }
    )
    return 0


async def run_closure(args: argparse.Namespace) -> int:
    payload = await JsonArtifactRepository(args.input).read_document()
    pattern = Pattern.from_json(payload)
    closure = pattern_closure(pattern, with_diagonal=args.with_diagonal)
    document: dict[str, Any] = {
        "closure": closure.to_json(),
        "generating": is_generating(pattern),
        "covering_exponent": covering_exponent(pattern),
        "is_subalgebra": is_pattern_subalgebra(pattern),
    }
    if args.powers:
        document["powers"] = [p.to_json() for p in power_sequence(pattern, args.powers)]
    await _output(args).write_document(document)
    return 0


async def run_subalgebras(args: argparse.Namespace) -> int:
    """All 2^n - 2 maximal subalgebras, optionally with the lift from n - 1."""
    n = args.n
    cap = get_settings().SUBALGEBRA_MAX_N
    if not 2 <= n <= cap:
        raise CapExceededError("n", n, cap)
    if args.recursion and n < 3:
        raise SubsetError(f"--recursion lifts from n-1 >= 2, got n={n}")

    lines: list[Any] = [s.to_json() for s in enumerate_maximal_subalgebras(n)]
    if args.classes:
        for index, members in enumerate(subalgebra_classes(n)):
            lines.append(
                {
                    "class": index + 1,
                    "size": len(members),
                    "subsets": [m.subset.to_json() for m in members],
                }
            )

    mismatch = None
    if args.recursion:
        previous = proper_subsets(n - 1)
        lines.extend(step.to_json() for step in lift_derivation(previous))
        lifted = lift_subalgebras(previous)
        if lifted != proper_subsets(n):
            mismatch = f"Lift from n={n - 1} disagrees with direct enumeration"

    await _output(args).write_lines(lines)
    if mismatch:
        raise VerificationMismatchError(mismatch)
    return 0


async def run_enumerate(args: argparse.Namespace) -> int:
    labeled = not args.unlabeled
    result = await EnumerationService().enumerate(args.n, labeled, stream=args.stream)
    if args.stream:
        await _output(args).write_lines(p.to_json() for p in result.patterns)
    else:
        await _output(args).write_document(result.to_json())
    return 0


async def run_oracle_verify(args: argparse.Namespace) -> int:
    service = VerificationService(seed=args.seed)
    if args.sweep is not None:
        if args.instances is None:
            summary = await service.sweep_exhaustive(args.sweep)
        else:
            summary = await service.sweep_random(args.sweep, args.instances)
        await _output(args).write_document(summary.to_json())
        if not summary.passed:
            raise VerificationMismatchError(
                f"{len(summary.disagreements)} disagreements at n={args.sweep}"
            )
        return 0
    if args.input is None:
        raise argparse.ArgumentError(None, "oracle-verify needs INPUT or --sweep")
    pair = await _read_pair(args)
    outcome = service.verify_instance(pair.spectrum, pair.matrix)
    await _output(args).write_document(outcome.to_json())
    if not outcome.agrees:
        raise VerificationMismatchError("Oracle disagrees with the classification")
    return 0


def golden_mismatches(table: CountTable) -> list[str]:
    """Rows whose counts differ from the published values."""
    problems = []
    for row in table.rows:
        if row.labeled is not None and row.labeled != golden.LABELED_COUNTS.get(row.n):
            problems.append(
                f"n={row.n}: labeled {row.labeled} != {golden.LABELED_COUNTS.get(row.n)}"
            )
        if row.unlabeled is not None and row.unlabeled != golden.UNLABELED_COUNTS.get(
            row.n
        ):
            problems.append(
                f"n={row.n}: unlabeled {row.unlabeled} != "
                f"{golden.UNLABELED_COUNTS.get(row.n)}"
            )
    return problems


async def run_tables(args: argparse.Namespace) -> int:
    """Count table rows for n = 1..max_n; --golden compares with published values."""
    labeled = args.labeled or not args.unlabeled
    unlabeled = args.unlabeled or not args.labeled
    table = await EnumerationService().count_table(args.max_n, labeled, unlabeled)
    await _output(args).write_lines(table.to_json())
    if args.golden:
        problems = golden_mismatches(table)
        if problems:
            raise VerificationMismatchError("; ".join(problems))
        logger.info("Count table matches the published values")
    return 0


# Parser


def _pair_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "input",
        type=Path,
        nargs=None if required else "?",
        help='Matrix-pair JSON {"lambda": [...], "A": {...}}; "-" for stdin',
    )
    parser.add_argument(
        "--tolerance",
        type=float,
        default=None,
        help="Support tolerance for float entries (default: MATALG_SUPPORT_TOLERANCE)",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="matalg",
        description="Irreducibility of (Λ, A) pairs via support digraphs",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-o", "--output", type=Path, default=None, help="Output file (default: stdout)"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    classify_cmd = commands.add_parser("classify", parents=[common], help="Classify a pair")
    _pair_arguments(classify_cmd)
    classify_cmd.add_argument(
        "--verify", action="store_true", help="Cross-check with the exact oracle"
    )
    classify_cmd.set_defaults(handler=run_classify)

    subspaces_cmd = commands.add_parser(
        "subspaces", parents=[common], help="List invariant coordinate subspaces"
    )
    _pair_arguments(subspaces_cmd)
    subspaces_cmd.set_defaults(handler=run_subspaces)

    closure_cmd = commands.add_parser(
        "closure", parents=[common], help="Pattern closure and covering"
    )
    closure_cmd.add_argument("input", type=Path, help="Pattern JSON")
    closure_cmd.add_argument("--with-diagonal", action="store_true")
    closure_cmd.add_argument(
        "--powers", type=int, default=0, help="Also emit G^1..G^K"
    )
    closure_cmd.set_defaults(handler=run_closure)

    subalgebras_cmd = commands.add_parser(
        "subalgebras", parents=[common], help="Maximal pattern subalgebras of Mat(n)"
    )
    subalgebras_cmd.add_argument("n", type=int)
    subalgebras_cmd.add_argument(
        "--recursion", action="store_true", help="Emit and check the lift from n-1"
    )
    subalgebras_cmd.add_argument(
        "--classes", action="store_true", help="Group by index permutation"
    )
    subalgebras_cmd.set_defaults(handler=run_subalgebras)

    enumerate_cmd = commands.add_parser(
        "enumerate", parents=[common], help="Minimal strongly connected digraphs"
    )
    enumerate_cmd.add_argument("n", type=int)
    enumerate_cmd.add_argument("--unlabeled", action="store_true")
    enumerate_cmd.add_argument(
        "--stream", action="store_true", help="Emit the patterns as JSON lines"
    )
    enumerate_cmd.set_defaults(handler=run_enumerate)

    oracle_cmd = commands.add_parser(
        "oracle-verify", parents=[common], help="Criteria versus brute force"
    )
    _pair_arguments(oracle_cmd, required=False)
    oracle_cmd.add_argument(
        "--sweep", type=int, default=None, metavar="N", help="Sweep instances of size N"
    )
    oracle_cmd.add_argument(
        "--instances", type=int, default=None, help="Random instances (else exhaustive)"
    )
    oracle_cmd.add_argument("--seed", type=int, default=0)
    oracle_cmd.set_defaults(handler=run_oracle_verify)

    tables_cmd = commands.add_parser(
        "tables", parents=[common], help="Count tables for n = 1..MAX_N"
    )
    tables_cmd.add_argument("max_n", type=int)
    tables_cmd.add_argument("--labeled", action="store_true")
    tables_cmd.add_argument("--unlabeled", action="store_true")
    tables_cmd.add_argument(
        "--golden", action="store_true", help="Compare with the published counts"
    )
    tables_cmd.set_defaults(handler=run_tables)

    return parser


async def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and map failures to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    handler: Handler = args.handler
    try:
        return await handler(args)
    except MatAlgBaseException as e:
        logger.debug(f"{type(e).__name__}: {str(e)}")
        print(f"error: {str(e)}", file=sys.stderr)
        return e.exit_code
    except (ValidationError, argparse.ArgumentError) as e:
        print(f"error: {str(e)}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.error(f"Unexpected failure: {str(e)}", exc_info=True)
        print(f"error: {str(e)}", file=sys.stderr)
        return 1


def run() -> None:
    """Console entry point."""
    sys.exit(asyncio.run(main()))


if __name__ == "__main__":
    run()
