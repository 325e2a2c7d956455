"""Directed relations on the alphabet and ordered bipartitions.

A relation U on {1, ..., n} is any set of ordered pairs, loops allowed.  The
bipartitional relations are those induced by an ordered set partition
(B_1, ..., B_k) of the alphabet with a 0/1 flag per block: (x, y) is in U
exactly when x's block comes strictly before y's, or when both letters share
a flagged ("underlined") block.  Flagged blocks therefore contribute all of
their internal pairs including loops; unflagged blocks contribute none.

Two independent characterizations are implemented and tested against each
other: the reconstruction algorithm of to_ordered_bipartition, and the
closure property that both U and its complement are transitive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    AlphabetMismatch,
    InvalidArguments,
    InvalidBipartition,
    SearchSpaceTooLarge,
)
from .words import MultiplicityVector

Pair = tuple[int, int]


@dataclass(frozen=True)
class Relation:
    """A set of directed edges over the alphabet 1..n (loops allowed)."""

    n: int
    edges: frozenset[Pair]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArguments("alphabet size must be >= 1")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        for pair in self.edges:
            if (
                not isinstance(pair, tuple)
                or len(pair) != 2
                or not all(isinstance(v, int) and 1 <= v <= self.n for v in pair)
            ):
                raise InvalidArguments(f"edge {pair!r} outside 1..{self.n} x 1..{self.n}")

    def __contains__(self, pair: Pair) -> bool:
        return pair in self.edges

    def sorted_edges(self) -> list[Pair]:
        return sorted(self.edges)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Iterable[int]]) -> "Relation":
        return cls(n, frozenset((int(x), int(y)) for x, y in pairs))


def natural_order(n: int) -> Relation:
    """The strict integer order: (x, y) present exactly when x > y."""
    return Relation(n, frozenset((x, y) for x in range(1, n + 1) for y in range(1, x)))


def full_relation(n: int) -> Relation:
    return Relation(
        n, frozenset(itertools.product(range(1, n + 1), range(1, n + 1)))
    )


def complement(relation: Relation) -> Relation:
    all_pairs = itertools.product(range(1, relation.n + 1), repeat=2)
    return Relation(
        relation.n, frozenset(p for p in all_pairs if p not in relation.edges)
    )


def is_transitive(relation: Relation) -> bool:
    edges = relation.edges
    for x, y in edges:
        for z in range(1, relation.n + 1):
            if (y, z) in edges and (x, z) not in edges:
                return False
    return True


def is_bipartitional(relation: Relation) -> bool:
    """Closure characterization: U and its complement are both transitive."""
    return is_transitive(relation) and is_transitive(complement(relation))


@dataclass(frozen=True)
class OrderedBipartition:
    """An ordered set partition of 1..n with a 0/1 underline flag per block."""

    blocks: tuple[frozenset[int], ...]
    flags: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        object.__setattr__(self, "flags", tuple(self.flags))
        if len(self.blocks) != len(self.flags):
            raise InvalidBipartition("one flag per block required")
        if any(flag not in (0, 1) for flag in self.flags):
            raise InvalidBipartition("flags must be 0 or 1")
        if any(len(block) == 0 for block in self.blocks):
            raise InvalidBipartition("blocks must be nonempty")

    @property
    def letters(self) -> frozenset[int]:
        return frozenset().union(*self.blocks) if self.blocks else frozenset()

    def render(self) -> str:
        """Text form, letters descending within a block, e.g. "{5,4} > {3} > _{2,1}_"."""
        parts = []
        for block, flag in zip(self.blocks, self.flags):
            body = "{" + ",".join(str(x) for x in sorted(block, reverse=True)) + "}"
            parts.append(f"_{body}_" if flag else body)
        return " > ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "blocks": [sorted(block, reverse=True) for block in self.blocks],
            "flags": list(self.flags),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "OrderedBipartition":
        try:
            blocks = tuple(frozenset(int(x) for x in block) for block in data["blocks"])
            flags = tuple(int(f) for f in data["flags"])
        except (KeyError, TypeError, ValueError):
            raise InvalidBipartition(f"malformed bipartition object: {data!r}")
        return cls(blocks, flags)


def from_ordered_bipartition(bp: OrderedBipartition) -> Relation:
    """Build the relation a bipartition induces.

    The blocks must partition 1..n exactly, where n is the largest letter
    mentioned.
    """
    letters = sorted(x for block in bp.blocks for x in block)
    if not letters:
        raise InvalidBipartition("empty bipartition")
    n = letters[-1]
    if letters != list(range(1, n + 1)):
        raise InvalidBipartition(
            f"blocks must partition 1..{n} exactly, got letters {letters}"
        )
    edges = set()
    for i, (block, flag) in enumerate(zip(bp.blocks, bp.flags)):
        for later in bp.blocks[i + 1 :]:
            edges.update(itertools.product(block, later))
        if flag:
            edges.update(itertools.product(block, block))
    return Relation(n, frozenset(edges))


def to_ordered_bipartition(relation: Relation) -> OrderedBipartition | None:
    """Recover the inducing bipartition, or None when there is none.

    Letters are grouped when their pair statuses agree in both directions
    (both edges present, or neither); candidate blocks are ordered by the
    cross edges and flagged by their internal pairs.  The candidate is then
    validated by exact reconstruction, which rejects every non-bipartitional
    relation.
    """
    n = relation.n
    edges = relation.edges

    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            if ((x, y) in edges) == ((y, x) in edges):
                parent[find(x)] = find(y)

    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    blocks = [frozenset(group) for group in groups.values()]

    # Order blocks by cross edges, checking one representative pair each;
    # inconsistencies are caught by the reconstruction below.
    wins = {block: 0 for block in blocks}
    for one, other in itertools.combinations(blocks, 2):
        x, y = min(one), min(other)
        if (x, y) in edges and (y, x) not in edges:
            wins[one] += 1
        elif (y, x) in edges and (x, y) not in edges:
            wins[other] += 1
        else:
            return None
    ordered = sorted(blocks, key=lambda block: -wins[block])
    if sorted(wins.values(), reverse=True) != list(range(len(blocks) - 1, -1, -1)):
        return None

    flags = tuple(
        1 if (min(block), min(block)) in edges else 0 for block in ordered
    )
    candidate = OrderedBipartition(tuple(ordered), flags)
    if from_ordered_bipartition(candidate).edges != edges:
        return None
    return candidate


def decompose(relation: Relation) -> tuple[Relation, Relation, frozenset[int]]:
    """Split U into its symmetric part, asymmetric part, and the symmetric
    part's support letters."""
    symmetric = frozenset(
        (x, y) for (x, y) in relation.edges if (y, x) in relation.edges
    )
    asymmetric = relation.edges - symmetric
    support = frozenset(x for (x, y) in symmetric)
    return (
        Relation(relation.n, symmetric),
        Relation(relation.n, asymmetric),
        support,
    )


@dataclass(frozen=True)
class EssentialWitness:
    """A loop adjustment making a relation bipartitional.

    removed_loops / added_loops name letters (all of multiplicity 1) whose
    loop was deleted from / inserted into the relation; bipartition is the
    ordered bipartition of the adjusted relation.
    """

    removed_loops: frozenset[int]
    added_loops: frozenset[int]
    bipartition: OrderedBipartition


def is_essentially_bipartitional(
    relation: Relation, alpha: MultiplicityVector, max_free: int = 20
) -> EssentialWitness | None:
    """Search loop adjustments on multiplicity-1 letters for a bipartitional
    variant of the relation.

    Every assignment of loop-present/loop-absent to the free letters
    F = {x : alpha_x = 1} is tried (letters outside F keep their loops as
    given).  Assignments are scanned in binary-counter order with bit b of
    the counter giving the status of the b-th smallest letter of F, bit set
    meaning loop present, so the all-loops-absent variant is tried first.
    The first bipartitional variant found is returned as a witness.
    """
    if alpha.n != relation.n:
        raise AlphabetMismatch(
            f"relation is on 1..{relation.n} but alpha has n={alpha.n}"
        )
    free = [x for x in range(1, relation.n + 1) if alpha.count_of(x) == 1]
    if len(free) > max_free:
        raise SearchSpaceTooLarge(
            f"{len(free)} free letters exceed the cap of {max_free}"
        )
    base = relation.edges - {(x, x) for x in free}
    for counter in range(1 << len(free)):
        present = {free[b] for b in range(len(free)) if counter >> b & 1}
        variant = Relation(relation.n, base | {(x, x) for x in present})
        bp = to_ordered_bipartition(variant)
        if bp is not None:
            removed = frozenset(
                x for x in free if (x, x) in relation.edges and x not in present
            )
            added = frozenset(
                x for x in present if (x, x) not in relation.edges
            )
            return EssentialWitness(removed, added, bp)
    return None


def effective_core(relation: Relation, alpha: MultiplicityVector) -> Relation:
    """Drop loops on letters occurring at most once in the class.

    Such a loop can never pair two copies of its letter, so no statistic on
    the class can see it; predicates about statistics should look at the
    core, not the raw edge set.
    """
    if alpha.n != relation.n:
        raise AlphabetMismatch(
            f"relation is on 1..{relation.n} but alpha has n={alpha.n}"
        )
    ineffective = {
        (x, x)
        for x in range(1, relation.n + 1)
        if alpha.count_of(x) <= 1 and (x, x) in relation.edges
    }
    return Relation(relation.n, relation.edges - ineffective)


def satisfies_sorting_conditions(
    relation: Relation, alpha: MultiplicityVector
) -> tuple[bool, list[str]]:
    """Decide the block conditions under which the sorting index joins the
    inversion/major-index equidistribution.

    Loops on letters of multiplicity <= 1 are discarded first (see
    effective_core).  The remaining relation must then (1) be bipartitional
    with no underlined block, (2) contain only descending pairs x > y,
    (3) have every block before the last of size at most 2, and (4) give the
    larger letter of any two-letter block before the last multiplicity
    exactly 1.

    Returns (ok, reasons) with one message per violated condition.
    """
    core = effective_core(relation, alpha)

    reasons = []
    bp = to_ordered_bipartition(core)
    if bp is None:
        reasons.append("condition 1: not bipartitional (ignoring loops on letters of multiplicity <= 1)")
    elif any(bp.flags):
        reasons.append("condition 1: has an underlined block")
    bad_edges = sorted((x, y) for (x, y) in core.edges if x <= y)
    if bad_edges:
        reasons.append(
            f"condition 2: non-descending pairs {bad_edges} (x > y required)"
        )
    if bp is not None and not any(bp.flags):
        for i, block in enumerate(bp.blocks[:-1]):
            if len(block) > 2:
                reasons.append(
                    f"condition 3: block {i + 1} has {len(block)} letters (at most 2 allowed before the last)"
                )
            elif len(block) == 2 and alpha.count_of(max(block)) != 1:
                reasons.append(
                    f"condition 4: letter {max(block)} of two-letter block {i + 1} "
                    f"has multiplicity {alpha.count_of(max(block))} (must be 1)"
                )
    return (not reasons, reasons)


def relation_to_json_dict(relation: Relation) -> dict:
    return {"n": relation.n, "edges": [list(p) for p in relation.sorted_edges()]}


def relation_from_json_dict(data: dict) -> Relation:
    try:
        n = int(data["n"])
        pairs = [(int(x), int(y)) for x, y in data["edges"]]
    except (KeyError, TypeError, ValueError):
        raise InvalidArguments(f"malformed relation object: {data!r}")
    return Relation(n, frozenset(pairs))


def relation_to_text(relation: Relation) -> str:
    """One "x y" pair per line."""
    return "\n".join(f"{x} {y}" for x, y in relation.sorted_edges())


def relation_from_text(text: str, n: int | None = None) -> Relation:
    """Parse "x y" lines; n defaults to the largest letter mentioned."""
    pairs = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            x, y = (int(part) for part in line.split())
        except ValueError:
            raise InvalidArguments(f"cannot parse relation line {line!r}")
        pairs.append((x, y))
    if n is None:
        if not pairs:
            raise InvalidArguments("empty relation text needs an explicit alphabet size")
        n = max(max(x, y) for x, y in pairs)
    return Relation(n, frozenset(pairs))
