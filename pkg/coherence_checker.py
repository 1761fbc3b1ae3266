#!/usr/bin/env python3
"""
Coherence Checker
Compose, tensor and dualize serialized 1-cells of the finite bicategories,
generate random instances, and run the seeded coherence law suites.

Exit codes: 0 success, 1 law failures, 2 parse error or bad selector,
3 boundary mismatch, 4 unsupported law, 5 write failure.
"""

import argparse
import logging
import sys
from functools import reduce
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from ccbicat import codec
from ccbicat.errors import CoherenceError, CompositionError, ParseError, ShapeError
from ccbicat.harness import GenConfig, generate, run_all, run_law_suite
from ccbicat.laws import Bicategory, Law
from ccbicat.matrices import mat_compose, mat_dual, mat_tensor
from ccbicat.profunctors import dual_profunctor, external_product, prof_compose
from ccbicat.relations import rel_compose, rel_converse, rel_tensor
from ccbicat.reports import export_summary_csv
from ccbicat.resnet import cospan_compose, cospan_tensor, dual_cospan
from ccbicat.spans import compose_spans, dual_span, tensor_spans
from ccbicat.utils import setup_logging

logger = logging.getLogger("ccbicat.cli")

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_PARSE = 2
EXIT_BOUNDARY = 3
EXIT_UNSUPPORTED = 4
EXIT_WRITE = 5

BICATEGORIES = [b.value for b in Bicategory]
LAWS = [law.value for law in Law]

# second after first
COMPOSE: Dict[str, Callable[[Any, Any], Any]] = {
    'span': lambda first, second: compose_spans(second, first),
    'rel': lambda first, second: rel_compose(second, first),
    'mat': lambda first, second: mat_compose(second, first),
    'prof': lambda first, second: prof_compose(second, first),
    'net': lambda first, second: cospan_compose(second, first),
}

TENSOR: Dict[str, Callable[[Any, Any], Any]] = {
    'span': tensor_spans,
    'rel': rel_tensor,
    'mat': mat_tensor,
    'prof': external_product,
    'net': cospan_tensor,
}

DUAL: Dict[str, Callable[[Any], Any]] = {
    'span': dual_span,
    'rel': rel_converse,
    'mat': mat_dual,
    'prof': dual_profunctor,
    'net': dual_cospan,
}


class CommandFailed(Exception):
    """Carries the exit code of a command that cannot finish"""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def boundary_summary(value: Any) -> str:
    """One line describing the source and target of a 1-cell"""
    describe = getattr(value, 'describe', None)
    if describe is not None:
        return describe()
    if hasattr(value, 'span'):
        return value.span.describe()
    if hasattr(value, 'src_dim'):
        return f"matrix {value.src_dim} -> {value.tgt_dim}"
    if hasattr(value, 'src_cat'):
        return (f"profunctor {value.src_cat.objects.size} objects -|-> "
                f"{value.tgt_cat.objects.size} objects")
    return type(value).__name__


class CoherenceChecker:
    def __init__(self, out: Optional[str] = None):
        self.out = Path(out) if out else None

    def load(self, bicat: str, path: str) -> Any:
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise CommandFailed(EXIT_PARSE, f"Could not read {path}: {e}") from e
        try:
            return codec.decode_one_cell(bicat, text)
        except ParseError as e:
            raise CommandFailed(EXIT_PARSE, f"Error parsing {path}: {e}") from e

    def emit(self, value: Any) -> None:
        """Write to --out and print the boundary summary, or print the JSON"""
        text = codec.to_json(value)
        if self.out is None:
            print(text)
            return
        try:
            self.out.write_text(text, encoding='utf-8')
        except OSError as e:
            raise CommandFailed(EXIT_WRITE, f"Could not write {self.out}: {e}") from e
        print(boundary_summary(value))
        logger.info("Result saved to %s", self.out)

    def run_operation(self, operation: Callable[..., Any], *values: Any) -> Any:
        try:
            return operation(*values)
        except CompositionError as e:
            raise CommandFailed(EXIT_BOUNDARY, f"Boundary mismatch: {e}") from e
        except ShapeError as e:
            raise CommandFailed(EXIT_PARSE, f"Malformed input: {e}") from e
        except CoherenceError as e:
            raise CommandFailed(EXIT_FAILURES, f"Construction failed: {e}") from e

    def cmd_compose(self, bicat: str, first: str, second: str) -> int:
        a, b = self.load(bicat, first), self.load(bicat, second)
        self.emit(self.run_operation(COMPOSE[bicat], a, b))
        return EXIT_OK

    def cmd_tensor(self, bicat: str, files: List[str]) -> int:
        values = [self.load(bicat, path) for path in files]
        self.emit(self.run_operation(lambda *vs: reduce(TENSOR[bicat], vs), *values))
        return EXIT_OK

    def cmd_dual(self, bicat: str, path: str) -> int:
        self.emit(self.run_operation(DUAL[bicat], self.load(bicat, path)))
        return EXIT_OK

    def cmd_gen(self, bicat: str, cfg: GenConfig) -> int:
        value = next(generate(bicat, GenConfig(cfg.seed, cfg.max_set_size, cfg.max_dim, cfg.max_edges, 1)))
        self.emit(value)
        return EXIT_OK

    def cmd_check(self, law: Optional[str], bicat: Optional[str], cfg: GenConfig,
                  run_everything: bool, csv_file: Optional[str]) -> int:
        if run_everything:
            reports = run_all(cfg)
            print(codec.dumps([r.to_dict() for r in reports]))
            if csv_file:
                try:
                    export_summary_csv(reports, csv_file)
                except OSError as e:
                    raise CommandFailed(EXIT_WRITE, f"Could not write {csv_file}: {e}") from e
            return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURES

        if law is None or bicat is None:
            raise CommandFailed(EXIT_PARSE, "check needs --law and --bicat, or --all")
        report = run_law_suite(law, bicat, cfg)
        print(report.to_json())
        if not report.supported:
            return EXIT_UNSUPPORTED
        return EXIT_OK if report.passed else EXIT_FAILURES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Finite compact closed bicategory toolkit')
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable debug logging on stderr')
    sub = parser.add_subparsers(dest='command', required=True)

    compose = sub.add_parser('compose', help='Compose two 1-cells, the second after the first')
    compose.add_argument('bicat', choices=BICATEGORIES)
    compose.add_argument('first')
    compose.add_argument('second')
    compose.add_argument('--out', '-o', help='Write the result here instead of printing it')

    tensor = sub.add_parser('tensor', help='Tensor one or more 1-cells, left to right')
    tensor.add_argument('bicat', choices=BICATEGORIES)
    tensor.add_argument('files', nargs='+')
    tensor.add_argument('--out', '-o')

    dual = sub.add_parser('dual', help='Dualize a 1-cell')
    dual.add_argument('bicat', choices=BICATEGORIES)
    dual.add_argument('file')
    dual.add_argument('--out', '-o')

    def add_config_flags(p: argparse.ArgumentParser, cases: bool) -> None:
        p.add_argument('--seed', type=int, default=0)
        p.add_argument('--max-size', type=int, default=4, help='Bound on set and entry sizes (default: 4)')
        p.add_argument('--max-dim', type=int, default=3, help='Bound on matrix dimensions (default: 3)')
        p.add_argument('--max-edges', type=int, default=3, help='Bound on network edges (default: 3)')
        if cases:
            p.add_argument('--cases', type=int, default=100)
            p.add_argument('--workers', type=int, default=1)

    check = sub.add_parser('check', help='Run a seeded law suite')
    check.add_argument('--law', choices=LAWS)
    check.add_argument('--bicat', choices=BICATEGORIES)
    check.add_argument('--all', action='store_true', help='Run every supported suite')
    check.add_argument('--csv', help='With --all, also export a summary CSV')
    add_config_flags(check, cases=True)

    gen = sub.add_parser('gen', help='Generate a random 1-cell')
    gen.add_argument('bicat', choices=BICATEGORIES)
    gen.add_argument('--out', '-o')
    add_config_flags(gen, cases=False)
    return parser


def config_from_args(args: argparse.Namespace) -> GenConfig:
    try:
        return GenConfig(seed=args.seed, max_set_size=args.max_size, max_dim=args.max_dim,
                         max_edges=args.max_edges, cases=getattr(args, 'cases', 1),
                         workers=getattr(args, 'workers', 1))
    except ShapeError as e:
        raise CommandFailed(EXIT_PARSE, f"Invalid configuration: {e}") from e


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging('DEBUG' if args.verbose else 'INFO')
    checker = CoherenceChecker(getattr(args, 'out', None))

    try:
        if args.command == 'compose':
            return checker.cmd_compose(args.bicat, args.first, args.second)
        if args.command == 'tensor':
            return checker.cmd_tensor(args.bicat, args.files)
        if args.command == 'dual':
            return checker.cmd_dual(args.bicat, args.file)
        if args.command == 'gen':
            return checker.cmd_gen(args.bicat, config_from_args(args))
        return checker.cmd_check(args.law, args.bicat, config_from_args(args), args.all, args.csv)
    except CommandFailed as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.code
    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return EXIT_FAILURES
    except Exception as e:
        print(f"Unexpected error: {e}", file=sys.stderr)
        return EXIT_FAILURES


if __name__ == "__main__":
    sys.exit(main())
