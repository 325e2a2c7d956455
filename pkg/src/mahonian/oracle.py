"""Brute-force distributions and exhaustive equidistribution sweeps.

Everything here enumerates: distributions walk a whole rearrangement class,
the verifiers walk every relation on the alphabet (all 2^(n*n) bitmasks).
That is the point - these are the ground-truth checks the structural
predicates in relations.py are tested against.

verify_theorem1 sweeps the equivalence "inv and maj variants are
equidistributed over the class iff the relation is essentially
bipartitional"; verify_theorem2 adds the sorting index on one side and the
sorting conditions on the other.  Both return a VerificationReport listing
any relation where predicate and enumeration disagree.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    AlphabetMismatch,
    ClassTooLarge,
    InvalidArguments,
    UniverseTooLarge,
)
from .qseries import QPolynomial
from .relations import (
    Relation,
    is_essentially_bipartitional,
    natural_order,
    relation_to_json_dict,
    satisfies_sorting_conditions,
)
from .statistics import (
    DEFAULT_TIE_RULE,
    graphical_inversions,
    graphical_major_index,
    graphical_sorting_index,
)
from .words import (
    DEFAULT_MAX_CLASS,
    MultiplicityVector,
    class_size,
    rearrangement_class,
    rearrangement_class_range,
)

STAT_IDS = ("inv", "maj", "sor", "inv-graphical", "maj-graphical", "sor-graphical")

DEFAULT_MAX_ALPHABET = 3

CHECK_INV_MAJ = "inv-maj vs essentially-bipartitional"
CHECK_INV_MAJ_SOR = "inv-maj-sor vs sorting-conditions"


def _evaluator(stat: str, alpha: MultiplicityVector, relation, tie_rule: str):
    """Map a statistic id to a letters -> value function.

    Classical ids always use the strict natural order on the class's own
    alphabet; the graphical ids require an explicit relation.
    """
    if stat not in STAT_IDS:
        raise InvalidArguments(
            f"unknown statistic {stat!r}, expected one of {STAT_IDS}"
        )
    if stat.endswith("-graphical"):
        if relation is None:
            raise InvalidArguments(f"statistic {stat} needs a relation")
        if relation.n != alpha.n:
            raise AlphabetMismatch(
                f"relation is on 1..{relation.n} but alpha has n={alpha.n}"
            )
        base = stat[: -len("-graphical")]
    else:
        base = stat
        relation = natural_order(alpha.n)
    if base == "inv":
        return lambda letters: graphical_inversions(relation, letters)
    if base == "maj":
        return lambda letters: graphical_major_index(relation, letters)
    return lambda letters: graphical_sorting_index(relation, letters, tie_rule)


def _histogram_to_polynomial(histogram: dict[int, int]) -> QPolynomial:
    if not histogram:
        return QPolynomial.zero()
    coeffs = [0] * (max(histogram) + 1)
    for value, count in histogram.items():
        coeffs[value] = count
    return QPolynomial(coeffs)


def _histogram_worker(job) -> dict[int, int]:
    stat, counts, relation_spec, tie_rule, start, stop = job
    alpha = MultiplicityVector(counts)
    relation = (
        Relation(relation_spec[0], frozenset(relation_spec[1]))
        if relation_spec is not None
        else None
    )
    evaluate = _evaluator(stat, alpha, relation, tie_rule)
    histogram: dict[int, int] = {}
    for word in rearrangement_class_range(alpha, start, stop):
        value = evaluate(word.letters)
        histogram[value] = histogram.get(value, 0) + 1
    return histogram


def distribution(
    stat: str,
    alpha: MultiplicityVector,
    relation: Relation | None = None,
    *,
    tie_rule: str = DEFAULT_TIE_RULE,
    max_class: int = DEFAULT_MAX_CLASS,
    jobs: int = 1,
) -> QPolynomial:
    """Distribution polynomial of the statistic over the class: the
    coefficient of q^k counts the words with value k."""
    size = class_size(alpha)
    if size > max_class:
        raise ClassTooLarge(f"class has {size} words, cap is {max_class}")
    if jobs > 1 and size > 1:
        # validate before forking so argument errors surface in the caller
        _evaluator(stat, alpha, relation, tie_rule)
        spec = (
            (relation.n, tuple(relation.sorted_edges()))
            if relation is not None
            else None
        )
        bounds = [size * t // jobs for t in range(jobs + 1)]
        batches = [
            (stat, alpha.counts, spec, tie_rule, bounds[t], bounds[t + 1])
            for t in range(jobs)
            if bounds[t] < bounds[t + 1]
        ]
        histogram: dict[int, int] = {}
        with ProcessPoolExecutor(max_workers=len(batches)) as pool:
            for part in pool.map(_histogram_worker, batches):
                for value, count in part.items():
                    histogram[value] = histogram.get(value, 0) + count
    else:
        evaluate = _evaluator(stat, alpha, relation, tie_rule)
        histogram = {}
        for word in rearrangement_class(alpha, max_class):
            value = evaluate(word.letters)
            histogram[value] = histogram.get(value, 0) + 1
    return _histogram_to_polynomial(histogram)


def equidistributed(
    stats: Sequence[str],
    alpha: MultiplicityVector,
    relation: Relation | None = None,
    *,
    tie_rule: str = DEFAULT_TIE_RULE,
    max_class: int = DEFAULT_MAX_CLASS,
    jobs: int = 1,
) -> bool:
    """True iff all named statistics have the same distribution over the class."""
    if not stats:
        raise InvalidArguments("need at least one statistic")
    polynomials = [
        distribution(
            stat, alpha, relation, tie_rule=tie_rule, max_class=max_class, jobs=jobs
        )
        for stat in stats
    ]
    return all(p == polynomials[0] for p in polynomials[1:])


def relation_from_mask(n: int, mask: int) -> Relation:
    """Relation for a bitmask over the n*n ordered pairs, row-major: bit
    (x-1)*n + (y-1) holds the pair (x, y)."""
    edges = frozenset(
        (x, y)
        for x in range(1, n + 1)
        for y in range(1, n + 1)
        if mask >> ((x - 1) * n + (y - 1)) & 1
    )
    return Relation(n, edges)


def relation_to_mask(relation: Relation) -> int:
    mask = 0
    for x, y in relation.edges:
        mask |= 1 << ((x - 1) * relation.n + (y - 1))
    return mask


def relation_universe(
    n: int, max_alphabet: int = DEFAULT_MAX_ALPHABET
) -> Iterator[Relation]:
    """All 2^(n*n) relations on 1..n in mask order."""
    if n > max_alphabet:
        raise UniverseTooLarge(
            f"alphabet {n} sweeps 2^{n * n} relations; "
            f"raise max_alphabet (currently {max_alphabet}) to allow this"
        )
    for mask in range(1 << (n * n)):
        yield relation_from_mask(n, mask)


@dataclass(frozen=True)
class Disagreement:
    relation: Relation
    predicate_holds: bool
    equidistributed_holds: bool


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive relation sweep."""

    check: str
    n: int
    alpha: MultiplicityVector
    tie_rule: str | None
    relation_count: int
    disagreements: tuple[Disagreement, ...]
    elapsed_seconds: float

    @property
    def agreement_count(self) -> int:
        return self.relation_count - len(self.disagreements)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def render(self) -> str:
        lines = [
            f"sweep: {self.check}",
            f"alphabet: n={self.n}, class: alpha=({self.alpha.render()})"
            f" with {class_size(self.alpha)} words",
        ]
        if self.tie_rule is not None:
            lines.append(f"tie rule: {self.tie_rule}")
        lines.append(
            f"relations: {self.relation_count}, agreements: {self.agreement_count},"
            f" disagreements: {len(self.disagreements)}"
        )
        for d in self.disagreements:
            edges = ";".join(f"{x} {y}" for x, y in d.relation.sorted_edges())
            lines.append(
                f"  disagree: edges=[{edges}]"
                f" predicate={'yes' if d.predicate_holds else 'no'}"
                f" equidistributed={'yes' if d.equidistributed_holds else 'no'}"
            )
        lines.append(f"elapsed: {self.elapsed_seconds:.3f}s")
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "alpha": list(self.alpha.counts),
            "tie_rule": self.tie_rule,
            "relation_count": self.relation_count,
            "agreements": self.agreement_count,
            "disagreements": [
                {
                    "relation": relation_to_json_dict(d.relation),
                    "predicate": d.predicate_holds,
                    "equidistributed": d.equidistributed_holds,
                }
                for d in self.disagreements
            ],
            "elapsed_seconds": self.elapsed_seconds,
            "ok": self.ok,
        }


def _sweep_worker(job) -> list[tuple[int, bool, bool]]:
    check, n, counts, tie_rule, max_class, start, stop = job
    alpha = MultiplicityVector(counts)
    words = [w.letters for w in rearrangement_class(alpha, max_class)]
    bases = ("inv", "maj") if check == CHECK_INV_MAJ else ("inv", "maj", "sor")
    found = []
    for mask in range(start, stop):
        relation = relation_from_mask(n, mask)
        histograms = []
        for base in bases:
            histogram: dict[int, int] = {}
            for letters in words:
                if base == "inv":
                    value = graphical_inversions(relation, letters)
                elif base == "maj":
                    value = graphical_major_index(relation, letters)
                else:
                    value = graphical_sorting_index(relation, letters, tie_rule)
                histogram[value] = histogram.get(value, 0) + 1
            histograms.append(histogram)
        equal = all(h == histograms[0] for h in histograms[1:])
        if check == CHECK_INV_MAJ:
            predicate = is_essentially_bipartitional(relation, alpha) is not None
        else:
            predicate = satisfies_sorting_conditions(relation, alpha)[0]
        if predicate != equal:
            found.append((mask, predicate, equal))
    return found


def _verify(
    check: str,
    n: int,
    alpha: MultiplicityVector,
    tie_rule: str | None,
    max_alphabet: int,
    max_class: int,
    jobs: int,
) -> VerificationReport:
    if alpha.n != n:
        raise AlphabetMismatch(f"alpha has n={alpha.n}, sweep asked for n={n}")
    if n > max_alphabet:
        raise UniverseTooLarge(
            f"alphabet {n} sweeps 2^{n * n} relations; "
            f"raise max_alphabet (currently {max_alphabet}) to allow this"
        )
    size = class_size(alpha)
    if size > max_class:
        raise ClassTooLarge(f"class has {size} words, cap is {max_class}")
    count = 1 << (n * n)
    started = time.perf_counter()
    worker_rule = tie_rule if tie_rule is not None else DEFAULT_TIE_RULE
    if jobs > 1:
        bounds = [count * t // jobs for t in range(jobs + 1)]
        batches = [
            (check, n, alpha.counts, worker_rule, max_class, bounds[t], bounds[t + 1])
            for t in range(jobs)
            if bounds[t] < bounds[t + 1]
        ]
        found: list[tuple[int, bool, bool]] = []
        with ProcessPoolExecutor(max_workers=len(batches)) as pool:
            for part in pool.map(_sweep_worker, batches):
                found.extend(part)
        found.sort()
    else:
        found = _sweep_worker((check, n, alpha.counts, worker_rule, max_class, 0, count))
    elapsed = time.perf_counter() - started
    disagreements = tuple(
        Disagreement(relation_from_mask(n, mask), predicate, equal)
        for mask, predicate, equal in found
    )
    return VerificationReport(
        check, n, alpha, tie_rule, count, disagreements, elapsed
    )


def verify_theorem1(
    n: int,
    alpha: MultiplicityVector,
    *,
    max_alphabet: int = DEFAULT_MAX_ALPHABET,
    max_class: int = DEFAULT_MAX_CLASS,
    jobs: int = 1,
) -> VerificationReport:
    """Check, over every relation on 1..n, that the inversion and major-index
    variants are equidistributed over the class exactly when the relation is
    essentially bipartitional relative to it."""
    return _verify(CHECK_INV_MAJ, n, alpha, None, max_alphabet, max_class, jobs)


def verify_theorem2(
    n: int,
    alpha: MultiplicityVector,
    *,
    tie_rule: str = DEFAULT_TIE_RULE,
    max_alphabet: int = DEFAULT_MAX_ALPHABET,
    max_class: int = DEFAULT_MAX_CLASS,
    jobs: int = 1,
) -> VerificationReport:
    """Check, over every relation on 1..n, that inversion, major-index and
    sorting-index variants are all equidistributed over the class exactly
    when the relation satisfies the sorting conditions."""
    return _verify(CHECK_INV_MAJ_SOR, n, alpha, tie_rule, max_alphabet, max_class, jobs)
