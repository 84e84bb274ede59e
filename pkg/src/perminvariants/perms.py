"""Permutations, group closure, and the structure cut out by transpositions.

Conventions used throughout the package:

* Points are ``1..n`` at every interface.  ``Permutation.images[i - 1]`` is the
  image of ``i``.
* Composition is right-to-left: ``compose(a, b)(i) == a(b(i))``.  In cycle
  notation ``"(1 2)(2 3)"`` the rightmost cycle is applied first.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from itertools import permutations as _iter_permutations
from itertools import product
from typing import Iterable, Sequence

from . import limits
from .errors import CapExceededError, ConsistencyError, PermParseError

CycleType = tuple[int, ...]
"""Cycle lengths (fixed points included as 1s), sorted in decreasing order."""


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> Permutation:
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(tuple(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles including fixed points, each starting at its least point."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if (self.n - len(self.cycles())) % 2 else 1

    def is_transposition(self) -> bool:
        return self.n >= 2 and self.cycle_type() == (2,) + (1,) * (self.n - 2)

    def moved_pair(self) -> tuple[int, int]:
        """The pair ``(i, j)``, ``i < j``, swapped by a transposition."""
        moved = [i for i in range(1, self.n + 1) if self(i) != i]
        if len(moved) != 2:
            raise ValueError(f"{self} is not a transposition")
        return moved[0], moved[1]

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse a product of cycles such as ``"(1 2)(3 4)"`` into a permutation.

    Entries inside a cycle are separated by whitespace and/or commas.  The empty
    string is the identity.  Cycles need not be disjoint; the product is taken
    with the rightmost cycle acting first.
    """
    stripped = text.strip()
    result = Permutation.identity(n)
    if not stripped:
        return result
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise PermParseError(f"unexpected text {stripped[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        if not body:
            raise PermParseError(f"empty cycle in {text!r}")
        try:
            pts = [int(tok) for tok in body]
        except ValueError:
            raise PermParseError(f"non-integer entry in cycle {m.group(0)!r}") from None
        for p in pts:
            if not 1 <= p <= n:
                raise PermParseError(f"index {p} out of range 1..{n} in {text!r}")
        if len(set(pts)) != len(pts):
            raise PermParseError(f"repeated index in cycle {m.group(0)!r}")
        cycles.append(pts)
    if stripped[pos:].strip():
        raise PermParseError(f"unexpected text {stripped[pos:]!r} in {text!r}")

    for pts in cycles:
        imgs = list(range(1, n + 1))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            imgs[a - 1] = b
        result = compose(result, Permutation(tuple(imgs)))
    return result


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``(a∘b)(i) = a(b(i))``."""
    if a.n != b.n:
        raise ValueError(f"arity mismatch: {a.n} vs {b.n}")
    ai = a.images
    return Permutation(tuple(ai[v - 1] for v in b.images))


def sign_of(p: Permutation) -> int:
    return p.sign()


def cycle_type(p: Permutation) -> CycleType:
    return p.cycle_type()


class PermGroup:
    """A finite permutation group together with its transposition structure.

    Built by :func:`generate_group`; treat instances as immutable.

    Attributes:
        n: arity.
        generators: the generators the group was built from.
        elements: all elements, sorted by image tuple (identity first).
        order: ``len(elements)``.
        transpositions: the transpositions in the group (its set ``T``).
        n_subgroup: the subgroup generated by ``transpositions``.
        partition: blocks of ``1..n`` such that ``n_subgroup`` is the product
            of the symmetric groups on the blocks.
        index_g_n: ``order // len(n_subgroup)``.
    """

    def __init__(
        self,
        n: int,
        generators: Sequence[Permutation],
        elements: Sequence[Permutation],
        transpositions: Sequence[Permutation],
        n_subgroup: frozenset[Permutation],
        partition: tuple[tuple[int, ...], ...],
    ):
        self.n = n
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.element_set = frozenset(elements)
        self.order = len(self.elements)
        self.transpositions = tuple(transpositions)
        self.n_subgroup = n_subgroup
        self.partition = partition
        self.index_g_n = self.order // len(n_subgroup)

    @property
    def c(self) -> int:
        """Number of transpositions in the group."""
        return len(self.transpositions)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.n == other.n and self.element_set == other.element_set

    def __hash__(self):
        return hash((self.n, self.element_set))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(n={self.n}, order={self.order}, gens=<{gens}>)"

    def is_generated_by_transpositions(self) -> bool:
        return self.index_g_n == 1

    def is_in_alternating_group(self) -> bool:
        return all(g.sign() == 1 for g in self.elements)

    def is_p_group(self, p: int) -> bool:
        m = self.order
        while m % p == 0:
            m //= p
        return m == 1

    def transposition_pairs(self) -> list[tuple[int, int]]:
        return [t.moved_pair() for t in self.transpositions]


def _closure(gens: Sequence[Permutation], n: int, max_order: int) -> list[Permutation]:
    ident = Permutation.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > max_order:
                    raise CapExceededError(
                        f"group order exceeds cap {max_order} (at least {len(seen)})",
                        lower_bound=len(seen),
                    )
                queue.append(y)
    return sorted(seen)


def _components(n: int, pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    adj: dict[int, set[int]] = {i: set() for i in range(1, n + 1)}
    for i, j in pairs:
        adj[i].add(j)
        adj[j].add(i)
    blocks = []
    seen: set[int] = set()
    for start in range(1, n + 1):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        block = []
        while stack:
            v = stack.pop()
            block.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        blocks.append(tuple(sorted(block)))
    return tuple(blocks)


def young_subgroup(blocks: Sequence[Sequence[int]], n: int) -> set[Permutation]:
    """Every permutation of ``1..n`` that permutes each block among itself."""
    per_block = [list(_iter_permutations(b)) for b in blocks]
    out = set()
    for choice in product(*per_block):
        imgs = list(range(1, n + 1))
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                imgs[src - 1] = dst
        out.add(Permutation(tuple(imgs)))
    return out


def _transposition_structure(n, elements, transpositions, max_order):
    n_sub = frozenset(_closure(transpositions, n, max_order))
    blocks = _components(n, (t.moved_pair() for t in transpositions))
    # N ⊆ Young(blocks) plus equal orders gives equality.
    young_order = math.prod(math.factorial(len(b)) for b in blocks)
    block_of = {i: k for k, b in enumerate(blocks) for i in b}
    preserves = all(block_of[s(i)] == block_of[i] for s in n_sub for i in range(1, n + 1))
    if young_order != len(n_sub) or not preserves:
        raise ConsistencyError(
            f"transposition subgroup (order {len(n_sub)}) is not the Young subgroup on {blocks}"
        )
    if len(elements) % len(n_sub):
        raise ConsistencyError("|N| does not divide |G|")
    return n_sub, blocks


def generate_group(gens: Sequence[Permutation], n: int) -> PermGroup:
    """Close ``gens`` under composition and compute the derived structure."""
    cap = limits.current()
    if n < 1:
        raise ValueError("arity must be at least 1")
    if n > cap.max_n:
        raise CapExceededError(f"arity {n} exceeds cap {cap.max_n}")
    for g in gens:
        if g.n != n:
            raise ValueError(f"generator {g} has arity {g.n}, expected {n}")
    elements = _closure(gens, n, cap.max_order)
    transpositions = [g for g in elements if g.is_transposition()]
    n_sub, blocks = _transposition_structure(n, elements, transpositions, cap.max_order)
    return PermGroup(n, gens, elements, transpositions, n_sub, blocks)


def group_from_cycles(cycle_strings: Iterable[str], n: int) -> PermGroup:
    """Convenience: ``group_from_cycles(["(1 2 3 4)", "(1 3)"], 4)``."""
    return generate_group([parse_cycles(s, n) for s in cycle_strings], n)


def transposition_closure(g: PermGroup):
    """Recompute ``(n_subgroup, partition, index_g_n)`` for ``g`` from scratch."""
    n_sub, blocks = _transposition_structure(
        g.n, g.elements, g.transpositions, limits.current().max_order
    )
    return n_sub, blocks, g.order // len(n_sub)
