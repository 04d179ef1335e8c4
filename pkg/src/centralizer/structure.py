"""Block-wise structural invariants of the centralizer algebra of a matrix."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .parsing import parse_poly
from .poly import Poly, format_poly
from .profile import DivisorProfile, MaximalBlock, _check_series, centralizer_dim, is_principal_cyclic

INFINITE = "inf"


def cartan_matrix(P: Sequence[int]) -> list[list[int]]:
    """Min-matrix of a strictly decreasing P: entry (k, l) = min(P[k], P[l]).

    This is the Cartan matrix of the block after base change to a splitting
    field of its irreducible base.
    """
    P = _check_series(P)
    return [[min(a, b) for b in P] for a in P]


def dominant_dimension(p: DivisorProfile) -> int | str:
    """2, or ``"inf"`` when every power-index set is a singleton."""
    return INFINITE if all(len(b.pset) == 1 for b in p.blocks) else 2


def block_representation_finite(P: Sequence[int]) -> bool:
    bound = max(3, max(P))
    return set(P) <= {1, bound - 1, bound}


def representation_finite(p: DivisorProfile) -> bool:
    return all(block_representation_finite(b.pset) for b in p.blocks)


@dataclass(frozen=True)
class BlockReport:
    base: Poly
    loewy_length: int
    simple_count: int
    cartan: tuple[tuple[int, ...], ...]
    semisimple: bool
    symmetric_nakayama: bool

    @classmethod
    def of(cls, block: MaximalBlock) -> "BlockReport":
        return cls(
            base=block.base,
            loewy_length=block.exponent,
            simple_count=len(block.pset),
            cartan=tuple(tuple(r) for r in cartan_matrix(block.pset)),
            semisimple=block.exponent == 1,
            symmetric_nakayama=len(block.pset) == 1,
        )

    def to_dict(self) -> dict:
        return {
            "base": format_poly(self.base),
            "loewy_length": self.loewy_length,
            "simple_count": self.simple_count,
            "cartan": [list(r) for r in self.cartan],
            "semisimple": self.semisimple,
            "symmetric_nakayama": self.symmetric_nakayama,
        }

    @classmethod
    def from_dict(cls, d: dict, field) -> "BlockReport":
        return cls(
            base=parse_poly(d["base"], field),
            loewy_length=d["loewy_length"],
            simple_count=d["simple_count"],
            cartan=tuple(tuple(r) for r in d["cartan"]),
            semisimple=d["semisimple"],
            symmetric_nakayama=d["symmetric_nakayama"],
        )


@dataclass(frozen=True)
class StructureReport:
    blocks: tuple[BlockReport, ...]
    algebra_dim: int
    dominant_dimension: int | str
    representation_finite: bool
    principal_cyclic: bool

    def to_dict(self) -> dict:
        return {
            "blocks": [b.to_dict() for b in self.blocks],
            "algebra_dim": self.algebra_dim,
            "dominant_dimension": self.dominant_dimension,
            "representation_finite": self.representation_finite,
            "principal_cyclic": self.principal_cyclic,
        }

    @classmethod
    def from_dict(cls, d: dict, field) -> "StructureReport":
        return cls(
            blocks=tuple(BlockReport.from_dict(b, field) for b in d["blocks"]),
            algebra_dim=d["algebra_dim"],
            dominant_dimension=d["dominant_dimension"],
            representation_finite=d["representation_finite"],
            principal_cyclic=d["principal_cyclic"],
        )


def structure_report(p: DivisorProfile) -> StructureReport:
    blocks = tuple(BlockReport.of(b) for b in p.blocks)
    report = StructureReport(
        blocks=blocks,
        algebra_dim=centralizer_dim(p),
        dominant_dimension=dominant_dimension(p),
        representation_finite=representation_finite(p),
        principal_cyclic=is_principal_cyclic(p),
    )
    assert (report.dominant_dimension == INFINITE) == all(b.symmetric_nakayama for b in blocks)
    return report
