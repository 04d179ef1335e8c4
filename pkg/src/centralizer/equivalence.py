"""Deciding the M / D / AD / SM relations between two divisor profiles.

Each relation asks for a bijection between maximal divisors (reducible ones
only, for SM) that pairs isomorphic local algebras and satisfies a condition
on the power-index sets.  The bijection is found as a perfect matching.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .fields import Field, FieldMismatchError
from .isoclass import prime_power_iso
from .parsing import parse_divisor
from .profile import DivisorProfile, ElementaryDivisor, MaximalBlock, h_multiset, j_set


class Relation(str, Enum):
    M = "M"
    D = "D"
    AD = "AD"
    SM = "SM"


MODE_SAME = "P=P"
MODE_REFLECTED = "P=J(P)"
MODE_H = "H=H"

THEOREM_GLOSS = {
    Relation.M: "centralizer algebras are Morita equivalent iff the matrices are M-equivalent",
    Relation.D: "centralizer algebras are derived equivalent iff the matrices are D-equivalent",
    Relation.AD: "centralizer algebras are almost nu-stable derived equivalent iff the matrices are AD-equivalent",
    Relation.SM: "centralizer algebras are stably equivalent of Morita type iff the matrices are SM-equivalent",
}

SM_HYPOTHESIS = (
    "either the ground field is perfect, or both matrices are invertible of finite order"
)
PERFECT_NOTE = "ground field is Q or a finite field, hence perfect"
PERMUTATION_NOTE = "for permutation matrices Morita equivalence and derived equivalence coincide"


def hypotheses_for(rel: Relation) -> tuple[str, ...]:
    if rel is Relation.SM:
        return (SM_HYPOTHESIS, PERFECT_NOTE)
    return ()


@dataclass(frozen=True)
class WitnessPair:
    left: ElementaryDivisor
    right: ElementaryDivisor
    mode: str

    def to_dict(self) -> dict:
        return {"left": str(self.left), "right": str(self.right), "mode": self.mode}


@dataclass(frozen=True)
class EquivalenceVerdict:
    relation: Relation
    equivalent: bool
    witness: tuple[WitnessPair, ...] = ()
    reason: dict | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def theorem_gloss(self) -> str:
        return THEOREM_GLOSS[self.relation]

    @property
    def hypotheses(self) -> tuple[str, ...]:
        return hypotheses_for(self.relation)

    def to_dict(self) -> dict:
        d = {
            "relation": self.relation.value,
            "equivalent": self.equivalent,
            "witness": [w.to_dict() for w in self.witness] if self.equivalent else None,
            "reason": self.reason,
            "theorem": self.theorem_gloss,
            "hypotheses": list(self.hypotheses),
        }
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    @classmethod
    def from_dict(cls, d: dict, field: Field) -> "EquivalenceVerdict":
        witness = []
        for w in d.get("witness") or ():
            lb, le = parse_divisor(w["left"], field)
            rb, re_ = parse_divisor(w["right"], field)
            witness.append(WitnessPair(ElementaryDivisor(lb, le), ElementaryDivisor(rb, re_), w["mode"]))
        return cls(
            relation=Relation(d["relation"]),
            equivalent=bool(d["equivalent"]),
            witness=tuple(witness),
            reason=d.get("reason"),
            notes=tuple(d.get("notes", ())),
        )


def pair_admissible(rel: Relation, left: MaximalBlock, right: MaximalBlock) -> tuple[bool, str | None]:
    """Whether ``left`` may be matched to ``right`` under ``rel``, and by which clause."""
    rel = Relation(rel)
    if left.base.field != right.base.field:
        raise FieldMismatchError("blocks over different fields")
    if not prime_power_iso(left.divisor, right.divisor):
        return False, None
    same = left.pset == right.pset
    if rel is Relation.M:
        return (True, MODE_SAME) if same else (False, None)
    if rel is Relation.D:
        if same:
            return True, MODE_SAME
        if left.pset == j_set(right.pset):
            return True, MODE_REFLECTED
        if h_multiset(left.pset) == h_multiset(right.pset):
            return True, MODE_H
        return False, None
    # AD and SM: the disjunction is evaluated per pair
    if same:
        return True, MODE_SAME
    if left.pset == j_set(right.pset):
        return True, MODE_REFLECTED
    return False, None


def max_matching(adjacency: Sequence[Sequence[int]], n_right: int) -> list[int | None]:
    """Maximum bipartite matching by augmenting paths.

    ``adjacency[i]`` lists right vertices admissible for left vertex ``i`` (in
    preference order).  Returns ``match[i]`` = matched right vertex or None.
    """
    owner: list[int | None] = [None] * n_right

    def augment(i: int, seen: list[bool]) -> bool:
        for j in adjacency[i]:
            if seen[j]:
                continue
            seen[j] = True
            if owner[j] is None or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    for i in range(len(adjacency)):
        augment(i, [False] * n_right)
    match: list[int | None] = [None] * len(adjacency)
    for j, i in enumerate(owner):
        if i is not None:
            match[i] = j
    return match


def _domain(rel: Relation, p: DivisorProfile) -> tuple[MaximalBlock, ...]:
    return p.reducible_blocks() if rel is Relation.SM else p.blocks


def decide(rel: Relation, a: DivisorProfile, b: DivisorProfile) -> EquivalenceVerdict:
    rel = Relation(rel)
    if a.field != b.field:
        raise FieldMismatchError(f"cannot compare profiles over {a.field} and {b.field}")
    left, right = _domain(rel, a), _domain(rel, b)
    if len(left) != len(right):
        return EquivalenceVerdict(
            rel, False, reason={"kind": "size_mismatch", "left": len(left), "right": len(right)}
        )
    modes: dict[tuple[int, int], str] = {}
    adjacency = []
    for i, lb in enumerate(left):
        row = []
        for j, rb in enumerate(right):
            ok, mode = pair_admissible(rel, lb, rb)
            if ok:
                modes[i, j] = mode
                row.append(j)
        adjacency.append(row)
    match = max_matching(adjacency, len(right))
    unmatched = [str(left[i]) for i, j in enumerate(match) if j is None]
    if unmatched:
        return EquivalenceVerdict(
            rel, False, reason={"kind": "no_perfect_matching", "unmatched_left": unmatched}
        )
    witness = tuple(
        WitnessPair(left[i].divisor, right[j].divisor, modes[i, j]) for i, j in enumerate(match)
    )
    return EquivalenceVerdict(rel, True, witness)


def decide_all(a: DivisorProfile, b: DivisorProfile, permutations: bool = False) -> list[EquivalenceVerdict]:
    """All four verdicts, checked against the implications M => AD => D, AD => SM."""
    verdicts = {rel: decide(rel, a, b) for rel in Relation}
    eq = {rel: v.equivalent for rel, v in verdicts.items()}
    if (eq[Relation.M] and not eq[Relation.AD]) or (eq[Relation.AD] and not eq[Relation.D]) \
            or (eq[Relation.AD] and not eq[Relation.SM]):
        raise AssertionError(f"inconsistent verdicts {eq}")
    if permutations:
        for rel in (Relation.M, Relation.D):
            v = verdicts[rel]
            verdicts[rel] = EquivalenceVerdict(v.relation, v.equivalent, v.witness, v.reason, (PERMUTATION_NOTE,))
    return [verdicts[rel] for rel in Relation]
