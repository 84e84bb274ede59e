"""Command-line front end.

    perminvariants --n 4 --gens "(1 2 3 4)" --chars 0,2,3 --format json

Exit status: 0 success, 2 bad input, 3 size cap exceeded, 4 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import limits
from .cohomology import FieldChar
from .decisions import DEFAULT_CHARS, InvariantReport, build_report
from .errors import CapExceededError, ConsistencyError, PermParseError
from .perms import group_from_cycles

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4


@dataclass
class CliConfig:
    n: int
    generators: list[str] = field(default_factory=list)
    characteristics: list[int] = field(default_factory=lambda: list(DEFAULT_CHARS))
    depth: int = 10
    format: str = "text"
    max_order: int = limits.Limits.max_order
    max_monomials: int = limits.Limits.max_monomials

    def validate(self) -> None:
        if self.n < 1:
            raise ValueError("--n must be at least 1")
        if self.depth < 0:
            raise ValueError("--depth must be non-negative")
        if not self.characteristics:
            raise ValueError("--chars must name at least one characteristic")
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        for p in self.characteristics:
            FieldChar(p)


def _yes(b: bool | None) -> str:
    return {True: "yes", False: "no", None: "n/a"}[b]


def format_text(report: InvariantReport) -> str:
    g = report.group
    gens = "".join(f"<{s}>" for s in g.generators) or "<>"
    blocks = "".join("{" + ",".join(map(str, b)) + "}" for b in g.partition)
    lines = [
        f"group       n={g.n}  order={g.order}  generators {gens}",
        f"transpositions c={g.c}  partition {blocks}  |G/N|={g.index_g_n}",
        f"Hilb(S^G)       = {report.hilb_invariants}   degree {report.hilb_degree}",
        f"Hilb(S^G_sign)  = {report.hilb_sign_semiinvariants}",
        f"generated by transpositions: {_yes(report.generated_by_transpositions)}   "
        f"splits in every characteristic: {_yes(report.uniformly_split)}",
    ]
    for p, cr in sorted(report.per_char.items()):
        w = cr.cohomology_of_invariants
        v = cr.invariants_of_cohomology
        base = "S^G" if cr.canonical.base.value == "invariant-ring" else "S^G_sign"
        lines += [
            "",
            f"characteristic {p}",
            "  (1) H_m^n(S)^G ~ H_n^n(S^G)" + (f"({-cr.transvections})" if cr.transvections else ""),
            f"      H_m^n(S)^G  degrees {v.lo}..{v.hi}: {v.as_list()}",
            f"      H_n^n(S^G)  degrees {w.lo}..{w.hi}: {w.as_list()}",
            f"  (2) canonical module {base}({cr.canonical.shift})",
            f"  (3) a-invariant {cr.a_invariant}",
            f"  (4) quasi-Gorenstein {_yes(cr.quasi_gorenstein)}"
            + (f"   Gorenstein {_yes(cr.gorenstein)}" if p == 0 else ""),
            f"  (5) S^G -> S splits {_yes(cr.splits)}",
        ]
    return "\n".join(lines) + "\n"


def render(config: CliConfig) -> str:
    config.validate()
    with limits.limits(max_order=config.max_order, max_monomials=config.max_monomials):
        group = group_from_cycles(config.generators, config.n)
        report = build_report(group, config.characteristics, config.depth)
    if config.format == "json":
        return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"
    return format_text(report)


def run(config: CliConfig) -> tuple[str, int]:
    """Render the report for ``config``; returns ``(output, exit status)``."""
    try:
        return render(config), EXIT_OK
    except ConsistencyError as exc:
        return f"internal consistency failure: {exc}\n", EXIT_INTERNAL
    except CapExceededError as exc:
        return f"cap exceeded: {exc}\n", EXIT_CAP
    except (PermParseError, ValueError) as exc:
        return f"invalid input: {exc}\n", EXIT_PARSE


def _parse_chars(text: str) -> list[int]:
    out: list[int] = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            p = int(tok)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad characteristic {tok!r}") from None
        if p not in out:
            out.append(p)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perminvariants",
        description="Homological invariants of rings of invariants of permutation groups.",
    )
    parser.add_argument("--n", type=int, required=True, help="number of variables")
    parser.add_argument(
        "--gens",
        default="",
        help='generators separated by ";", each in cycle notation, e.g. "(1 2 3 4);(1 3)"',
    )
    parser.add_argument(
        "--chars", type=_parse_chars, default=list(DEFAULT_CHARS),
        help="comma-separated characteristics, 0 or primes (default 0,2,3)",
    )
    parser.add_argument("--depth", type=int, default=10, help="cohomology window depth")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--max-order", type=int, default=limits.Limits.max_order)
    parser.add_argument("--max-monomials", type=int, default=limits.Limits.max_monomials)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = CliConfig(
        n=args.n,
        generators=[s for s in args.gens.split(";") if s.strip()],
        characteristics=args.chars,
        depth=args.depth,
        format=args.format,
        max_order=args.max_order,
        max_monomials=args.max_monomials,
    )
    output, status = run(config)
    (sys.stdout if status == EXIT_OK else sys.stderr).write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
