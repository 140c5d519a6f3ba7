#!/usr/bin/env python3
"""
compmat: column competent matrices and linear complementarity problems.

Main entry point for command-line execution.
"""

import argparse
import logging
import sys
from typing import List, Optional

from .config import load_settings
from .constants import (
    ADEQUACY_MODE_DIRECT,
    ADEQUACY_MODE_THEOREM,
    EXIT_CAP_EXCEEDED,
    EXIT_FAILURE,
    EXIT_INCONSISTENT,
    EXIT_PARSE_ERROR,
    EXIT_PRECONDITION,
    METHOD_AUTO,
    SOLVE_METHODS,
)
from .errors import (
    CapExceeded,
    DegenerateQ,
    DimensionMismatch,
    DocumentParseError,
    IndexSetParseError,
    InconsistentReport,
    InvalidSolution,
    MissingVector,
    ModeDisagreement,
    SingularPivot,
)
from .formatters import render_json, render_text, write_workbook
from .pipeline import cmd_classify, cmd_degree, cmd_ppt, cmd_solve, cmd_verify, cmd_wcheck

EXIT_CODES = (
    ((DocumentParseError, IndexSetParseError, FileNotFoundError), EXIT_PARSE_ERROR),
    ((ModeDisagreement, InconsistentReport), EXIT_INCONSISTENT),
    ((SingularPivot, DegenerateQ, InvalidSolution, MissingVector, DimensionMismatch), EXIT_PRECONDITION),
    ((CapExceeded,), EXIT_CAP_EXCEEDED),
)


def exit_code_for(error: Exception) -> int:
    for exceptions, code in EXIT_CODES:
        if isinstance(error, exceptions):
            return code
    return EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='compmat',
        description='Classify matrices, solve LCPs and check the column competence theory in exact arithmetic',
    )
    parser.add_argument('--json', action='store_true', help='Print the report as JSON')
    parser.add_argument('--xlsx', help='Also write the report tables to this Excel workbook')
    parser.add_argument('-c', '--config', help='Path to a JSON config file')
    parser.add_argument('--log-level', default='INFO', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='Logging level (default INFO)')
    commands = parser.add_subparsers(dest='command', required=True)

    classify = commands.add_parser('classify', help='Decide every matrix class for A')
    classify.add_argument('file', help='Matrix document (JSON or whitespace text)')
    classify.add_argument('--adequacy-mode', default=ADEQUACY_MODE_THEOREM,
                          choices=[ADEQUACY_MODE_THEOREM, ADEQUACY_MODE_DIRECT])

    solve = commands.add_parser('solve', help='Solve LCP(q, A)')
    solve.add_argument('file')
    solve.add_argument('--method', default=METHOD_AUTO, choices=list(SOLVE_METHODS))

    degree = commands.add_parser('degree', help='Local degree of f_A at q')
    degree.add_argument('file')
    degree.add_argument('--beta', help='Also compare with the degree after pivoting on this 1-based set, e.g. "1,2"')

    ppt = commands.add_parser('ppt', help='Principal pivot transform')
    ppt.add_argument('file')
    ppt.add_argument('--alpha', default='', help='1-based pivot set, e.g. "1,3"; empty for the identity pivot')

    wcheck = commands.add_parser('wcheck', help='Local w-uniqueness certificate at a solution')
    wcheck.add_argument('file')
    wcheck.add_argument('--z', required=True, help='The solution z as comma-separated rationals, e.g. "4,1"')

    verify = commands.add_parser('verify', help='Run the randomized invariant suite')
    verify.add_argument('--seed', type=int, help='RNG seed (default from config)')
    verify.add_argument('--trials', type=int, help='Number of random matrices (default from config)')
    verify.add_argument('--n-max', type=int, help='Largest matrix order (default from config)')
    verify.add_argument('--fixtures', action='store_true', help='Also replay the worked-example fixtures')
    return parser


def run_command(args: argparse.Namespace):
    if args.command == 'classify':
        return cmd_classify(args.file, args.adequacy_mode)
    if args.command == 'solve':
        return cmd_solve(args.file, args.method)
    if args.command == 'degree':
        return cmd_degree(args.file, args.beta)
    if args.command == 'ppt':
        return cmd_ppt(args.file, args.alpha)
    if args.command == 'wcheck':
        return cmd_wcheck(args.file, args.z)
    return cmd_verify(args.seed, args.trials, args.n_max, args.fixtures)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for compmat.

    Returns:
        int: 0 on success, 1 on failed verification or an unexpected error,
        2 parse error, 3 internal inconsistency, 4 unmet precondition,
        5 enumeration cap exceeded.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format='%(asctime)s - %(levelname)s - %(message)s',
    )

    try:
        settings = load_settings(args.config)
        report = run_command(args)
        print(render_json(report) if args.json else render_text(report))
        if args.xlsx:
            write_workbook(report, args.xlsx, settings.excel_formatting)
    except Exception as e:
        code = exit_code_for(e)
        print(f"Error: {e}", file=sys.stderr)
        return code

    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
