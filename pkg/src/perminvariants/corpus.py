"""Named generator sets used as fixtures by the tests and the acceptance run."""

from __future__ import annotations

from .perms import PermGroup, group_from_cycles

# name -> (n, generators in cycle notation)
CORPUS: dict[str, tuple[int, tuple[str, ...]]] = {
    "trivial": (3, ()),
    "<(12)> in S3": (3, ("(1 2)",)),
    "S2": (2, ("(1 2)",)),
    "A3": (3, ("(1 2 3)",)),
    "S3": (3, ("(1 2)", "(1 2 3)")),
    "C4=<(1234)>": (4, ("(1 2 3 4)",)),
    "<(12)(34)>": (4, ("(1 2)(3 4)",)),
    "<(12),(34)>": (4, ("(1 2)", "(3 4)")),
    "A4": (4, ("(1 2 3)", "(2 3 4)")),
    "S4": (4, ("(1 2)", "(1 2 3 4)")),
    "D4": (4, ("(1 2 3 4)", "(1 3)")),
    "<(12)(34)(56)>": (6, ("(1 2)(3 4)(5 6)",)),
    "S5": (5, ("(1 2)", "(1 2 3 4 5)")),
    "A5": (5, ("(1 2 3)", "(1 2 3 4 5)")),
    "S2xS3": (5, ("(1 2)", "(3 4)", "(3 4 5)")),
}


def corpus_group(name: str) -> PermGroup:
    n, gens = CORPUS[name]
    return group_from_cycles(gens, n)


def corpus_groups() -> dict[str, PermGroup]:
    return {name: corpus_group(name) for name in CORPUS}
