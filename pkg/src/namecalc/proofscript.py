"""Shared data types for the three derivation formats.

Kept separate from the checking kernels so the parser, the Hilbert checker
and the sequent checkers can all use them without import cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import Atom, Formula

Subst = Optional[tuple[tuple[str, str], ...]]


# Hilbert-style justifications.

@dataclass(frozen=True)
class AxiomInstance:
    schema: str
    subst: Subst = None  # None means: infer by matching


@dataclass(frozen=True)
class DefInstance:
    schema: str
    subst: Subst = None


@dataclass(frozen=True)
class CplTautology:
    pass


@dataclass(frozen=True)
class Detach:
    antecedent: int
    implication: int


@dataclass(frozen=True)
class Substitute:
    source: int
    subst: Subst = ()


ProofJustification = Union[AxiomInstance, DefInstance, CplTautology, Detach, Substitute]


@dataclass(frozen=True)
class ProofLine:
    index: int
    formula: Formula
    justification: ProofJustification


@dataclass(frozen=True)
class ProofScript:
    lines: tuple[ProofLine, ...]

    @property
    def conclusion(self) -> Formula:
        return self.lines[-1].formula


# Sequents.

@dataclass(frozen=True)
class Sequent:
    """Premise set plus conclusion; order and repetition of premises are ignored."""

    premises: frozenset[Formula]
    conclusion: Formula


@dataclass(frozen=True)
class LukAxiomSequent:
    schema: str
    subst: Subst = None


@dataclass(frozen=True)
class CplConsequenceAxiom:
    pass


@dataclass(frozen=True)
class Cut:
    left: int   # line proving A ==> x
    right: int  # line proving B, x ==> w


@dataclass(frozen=True)
class Deduction:
    source: int


@dataclass(frozen=True)
class DerivedRule:
    rule: str
    cites: tuple[int, ...]


SequentJustification = Union[LukAxiomSequent, CplConsequenceAxiom, Cut, Deduction, DerivedRule]


@dataclass(frozen=True)
class SequentLine:
    index: int
    sequent: Sequent
    justification: SequentJustification


@dataclass(frozen=True)
class SequentScript:
    lines: tuple[SequentLine, ...]


# Smiley-style deductions over categorical atoms.

@dataclass(frozen=True)
class DeductionClaim:
    """A deducibility claim: nonempty premise set of categorical atoms and an
    atomic conclusion."""

    premises: frozenset[Atom]
    conclusion: Atom


@dataclass(frozen=True)
class Trivial:
    pass


@dataclass(frozen=True)
class CutWithRule:
    first: int
    second: Optional[int]  # None for the unary rules r3 and r4
    rule_id: int


@dataclass(frozen=True)
class Reductio:
    source: int   # line proving P1, contradictory(w) |- x
    refuter: int  # line proving P2 |- contradictory(x)


DeductionJustification = Union[Trivial, CutWithRule, Reductio]


@dataclass(frozen=True)
class DeductionLine:
    index: int
    claim: DeductionClaim
    justification: DeductionJustification


@dataclass(frozen=True)
class DeductionScript:
    lines: tuple[DeductionLine, ...]
