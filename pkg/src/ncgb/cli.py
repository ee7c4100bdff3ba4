"""Batch front end: problem files in, bases and a statistics row out.

A problem file is line oriented: ``vars a b`` declares the variables,
``order llex a b`` optionally permutes their precedence, ``gen <poly>``
lines list the generators, and ``name``, ``mode``, ``trunc``,
``maxbasis``, ``maxdegree`` tune the run.  ``#`` starts a comment.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .engine import (
    ALL_CRITERIA,
    BasisState,
    EngineConfig,
    buchberger,
    interreduce,
    verify_groebner,
)
from .polynomial import PolynomialSyntaxError, format_polynomial, parse_polynomial
from .words import Alphabet, LLexOrdering

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_ERROR = 2
EXIT_CAPPED = 3

STATS_COLUMNS = ("label", "gb", "rgb", "tot", "sel", "m", "f", "tail", "bk", "rho")


class ProblemError(ValueError):
    def __init__(self, path, line, message):
        super().__init__(f"{path}:{line}: {message}" if line else f"{path}: {message}")
        self.path = path
        self.line = line


@dataclass
class Problem:
    name: str
    alphabet: Alphabet
    ordering: LLexOrdering
    generators: list = field(default_factory=list)
    mode: str | None = None
    truncation: int | None = None
    max_basis: int | None = None
    max_degree: int | None = None


def parse_problem(path, base_alphabet=None) -> Problem:
    """Read a problem file; ``base_alphabet`` backs files without a vars line."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ProblemError(path, 0, str(exc)) from None
    name = path.stem
    alphabet = None
    precedence = None
    mode = truncation = max_basis = max_degree = None
    raw_gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        directive, _, rest = line.partition(" ")
        rest = rest.strip()
        if directive == "vars":
            if alphabet is not None:
                raise ProblemError(path, lineno, "duplicate vars line")
            try:
                alphabet = Alphabet(rest.split())
            except ValueError as exc:
                raise ProblemError(path, lineno, str(exc)) from None
        elif directive == "order":
            parts = rest.split()
            if not parts or parts[0] != "llex":
                raise ProblemError(path, lineno, "only 'order llex <vars...>' is supported")
            precedence = parts[1:] or None
        elif directive == "name":
            if not rest:
                raise ProblemError(path, lineno, "empty name")
            name = rest
        elif directive == "mode":
            if rest not in ("improved", "basic"):
                raise ProblemError(path, lineno, f"unknown mode {rest!r}")
            mode = rest
        elif directive in ("trunc", "maxbasis", "maxdegree"):
            try:
                value = int(rest)
            except ValueError:
                raise ProblemError(path, lineno, f"{directive} needs an integer") from None
            if value < 1:
                raise ProblemError(path, lineno, f"{directive} must be positive")
            if directive == "trunc":
                truncation = value
            elif directive == "maxbasis":
                max_basis = value
            else:
                max_degree = value
        elif directive == "gen":
            if alphabet is None and base_alphabet is None:
                raise ProblemError(path, lineno, "vars must be declared before gen")
            raw_gens.append((lineno, rest))
        else:
            raise ProblemError(path, lineno, f"unknown directive {directive!r}")
    if alphabet is None:
        if base_alphabet is None:
            raise ProblemError(path, 0, "missing vars line")
        alphabet = base_alphabet
    try:
        ordering = LLexOrdering(alphabet, precedence) if precedence else alphabet.llex
    except ValueError as exc:
        raise ProblemError(path, 0, str(exc)) from None
    generators = []
    for lineno, body in raw_gens:
        try:
            generators.append(parse_polynomial(body, alphabet, line=lineno))
        except PolynomialSyntaxError as exc:
            raise ProblemError(path, lineno, exc.args[0]) from None
    if not generators:
        raise ProblemError(path, 0, "no generators")
    return Problem(name, alphabet, ordering, generators, mode,
                   truncation, max_basis, max_degree)


def render_obstruction(o, alphabet) -> str:
    w = alphabet.word_to_text
    return f"o[{o.i},{o.j}]({w(o.wi)},{w(o.wi2)};{w(o.wj)},{w(o.wj2)})"


def stats_values(problem, stats):
    return (problem.name, stats.gb_size, stats.rgb_size, stats.tot, stats.sel,
            stats.m, stats.f, stats.tail, stats.bk, f"{float(stats.rho):.4f}")


def _parse_criteria(text):
    chosen = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if part not in ALL_CRITERIA:
            raise ValueError(f"unknown criterion {part!r} (expected m, f, tail, bk)")
        chosen.add(part)
    return frozenset(chosen)


def cmd_run(args, out) -> int:
    problem = parse_problem(args.problem)
    mode = "basic" if args.no_criteria else (args.mode or problem.mode or "improved")
    criteria = ALL_CRITERIA
    if args.criteria is not None:
        criteria = _parse_criteria(args.criteria)
    cfg = EngineConfig(
        ordering=problem.ordering,
        mode=mode,
        truncation_degree=args.trunc if args.trunc is not None else problem.truncation,
        max_basis=args.max_basis if args.max_basis is not None else problem.max_basis,
        max_degree=args.max_degree if args.max_degree is not None else problem.max_degree,
        exact_tiebreak=args.exact_tiebreak,
        criteria=criteria,
    )
    basis, stats = buchberger(problem.generators, cfg)
    reduced = interreduce(basis, problem.ordering)
    stats.rgb_size = len(reduced)

    print(f"# gb {len(basis)}", file=out)
    for f in basis:
        print(f"gen {format_polynomial(f, problem.alphabet, problem.ordering)}", file=out)
    print(f"# rgb {len(reduced)}", file=out)
    for f in reduced:
        print(f"gen {format_polynomial(f, problem.alphabet, problem.ordering)}", file=out)
    if stats.capped:
        print(f"# capped {stats.cap_reason}", file=out)
    row = stats_values(problem, stats)
    print("\t".join(STATS_COLUMNS), file=out)
    print("\t".join(str(v) for v in row), file=out)
    if args.stats_csv:
        with open(args.stats_csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(STATS_COLUMNS)
            writer.writerow(row)
    return EXIT_CAPPED if stats.capped else EXIT_OK


def cmd_verify(args, out) -> int:
    problem = parse_problem(args.problem)
    basis_file = parse_problem(args.basis, base_alphabet=problem.alphabet)
    if basis_file.alphabet != problem.alphabet:
        raise ProblemError(args.basis, 0, "basis and problem declare different variables")
    G = BasisState.from_polynomials(basis_file.generators, problem.ordering)
    truncation = args.trunc if args.trunc is not None else problem.truncation
    ok, failures = verify_groebner(G, problem.ordering, truncation)
    if ok:
        print("ok", file=out)
        return EXIT_OK
    print(f"not a Groebner basis; unresolved obstruction "
          f"{render_obstruction(failures[0], problem.alphabet)}", file=out)
    return EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ncgb",
        description="Two-sided Groebner bases in free associative algebras over Q.")
    sub = parser.add_subparsers(dest="command", required=True)

    prun = sub.add_parser("run", help="compute a (possibly truncated) Groebner basis")
    prun.add_argument("problem", help="problem file")
    prun.add_argument("--mode", choices=["improved", "basic"])
    prun.add_argument("--trunc", type=int, metavar="D",
                      help="truncation degree (homogeneous input only)")
    prun.add_argument("--max-basis", type=int, metavar="N")
    prun.add_argument("--max-degree", type=int, metavar="D")
    prun.add_argument("--stats-csv", metavar="PATH")
    prun.add_argument("--exact-tiebreak", action="store_true",
                      help="break selection ties on the actual S-polynomial leading word")
    prun.add_argument("--no-criteria", action="store_true",
                      help="shorthand for --mode basic")
    prun.add_argument("--criteria", metavar="LIST",
                      help="comma separated subset of m,f,tail,bk")

    pver = sub.add_parser("verify", help="check that a basis file passes the "
                                         "obstruction criterion for its problem")
    pver.add_argument("basis", help="file with gen lines for the basis")
    pver.add_argument("problem", help="problem file supplying variables and ordering")
    pver.add_argument("--trunc", type=int, metavar="D",
                      help="only check obstructions up to this degree")

    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(args, sys.stdout)
        return cmd_verify(args, sys.stdout)
    except (ProblemError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
