"""Formula language for the calculus of names.

Sentences are Boolean combinations of atomic name-formulas.  An atom applies
one of fourteen functors to name letters: the four categorical functors
(a, i, e, o), the strong/existential family (ka, ke, kke, ot, ex), extension
equality (ceq, deq) and the singular-copula family (eps, neps, ideq).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping, Optional, Union


class Functor(Enum):
    """Atomic functor tags; value is the concrete-syntax name."""

    A = "a"          # every/all ... is ...          (weak universal affirmative)
    I = "i"          # some ... is ...
    E = "e"          # no ... is ...
    O = "o"          # some ... is not ...
    KA = "ka"        # strong universal affirmative (nonempty subject)
    KE = "ke"        # strong exclusion (nonempty subject)
    KKE = "kke"      # super-strong exclusion (both nonempty)
    CEQ = "ceq"      # same extension
    DEQ = "deq"      # same nonempty extension
    OT = "ot"        # not-every (negation of ka)
    EPS = "eps"      # singular copula: singleton subject inside predicate
    NEPS = "neps"    # singular denial: singleton subject outside predicate
    IDEQ = "ideq"    # singular identity: equal singletons
    EX = "ex"        # the subject exists (unary)

    @property
    def arity(self) -> int:
        return 1 if self is Functor.EX else 2


FUNCTOR_BY_NAME = {f.value: f for f in Functor}

_LETTER_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")


def is_letter(name: str) -> bool:
    """Name letters are uppercase-initial identifiers, compared by string equality."""
    return bool(_LETTER_RE.match(name))


@dataclass(frozen=True, slots=True)
class Atom:
    functor: Functor
    subject: str
    predicate: Optional[str] = None

    def __post_init__(self) -> None:
        if not is_letter(self.subject):
            raise ValueError(f"bad name letter: {self.subject!r}")
        if self.functor.arity == 1:
            if self.predicate is not None:
                raise ValueError(f"{self.functor.value} takes one letter")
        else:
            if self.predicate is None or not is_letter(self.predicate):
                raise ValueError(f"bad name letter: {self.predicate!r}")


@dataclass(frozen=True, slots=True)
class Neg:
    operand: "Formula"


@dataclass(frozen=True, slots=True)
class Bin:
    op: str  # one of "&", "|", "->", "<->"
    left: "Formula"
    right: "Formula"

    def __post_init__(self) -> None:
        if self.op not in ("&", "|", "->", "<->"):
            raise ValueError(f"bad connective: {self.op!r}")


Formula = Union[Atom, Neg, Bin]

# Reserved schema letters used by axiom patterns.
SCHEMA_LETTERS = ("S", "P", "M", "Q")

# A substitution maps name letters to name letters (never compound terms).
Substitution = Mapping[str, str]


def letters(formula: Formula) -> frozenset[str]:
    """The set of name letters occurring in a formula."""
    found: set[str] = set()
    for atom in atoms(formula):
        found.add(atom.subject)
        if atom.predicate is not None:
            found.add(atom.predicate)
    return frozenset(found)


def atoms(formula: Formula) -> Iterator[Atom]:
    """All atom occurrences, left to right."""
    if isinstance(formula, Atom):
        yield formula
    elif isinstance(formula, Neg):
        yield from atoms(formula.operand)
    else:
        yield from atoms(formula.left)
        yield from atoms(formula.right)


def distinct_atoms(formula: Formula) -> list[Atom]:
    """Distinct atoms in order of first occurrence."""
    seen: dict[Atom, None] = {}
    for atom in atoms(formula):
        seen.setdefault(atom)
    return list(seen)


def substitute(formula: Formula, subst: Substitution) -> Formula:
    """Replace every letter occurrence L by subst.get(L, L); tree shape unchanged."""
    if isinstance(formula, Atom):
        subject = subst.get(formula.subject, formula.subject)
        if formula.predicate is None:
            return Atom(formula.functor, subject)
        return Atom(formula.functor, subject, subst.get(formula.predicate, formula.predicate))
    if isinstance(formula, Neg):
        return Neg(substitute(formula.operand, subst))
    return Bin(formula.op, substitute(formula.left, subst), substitute(formula.right, subst))


def compose(outer: Substitution, inner: Substitution) -> dict[str, str]:
    """The substitution acting as inner followed by outer."""
    result = {letter: outer.get(target, target) for letter, target in inner.items()}
    for letter, target in outer.items():
        result.setdefault(letter, target)
    return result


def match_schema(pattern: Formula, candidate: Formula) -> Optional[dict[str, str]]:
    """Find the letter substitution sending pattern to candidate, if any.

    The substitution is unique when it exists because patterns bind every one
    of their letters at some atom position.
    """
    subst: dict[str, str] = {}

    def walk(p: Formula, c: Formula) -> bool:
        if isinstance(p, Atom):
            if not isinstance(c, Atom) or p.functor is not c.functor:
                return False
            if not bind(p.subject, c.subject):
                return False
            if p.predicate is None:
                return c.predicate is None
            return c.predicate is not None and bind(p.predicate, c.predicate)
        if isinstance(p, Neg):
            return isinstance(c, Neg) and walk(p.operand, c.operand)
        return (
            isinstance(c, Bin)
            and p.op == c.op
            and walk(p.left, c.left)
            and walk(p.right, c.right)
        )

    def bind(letter: str, target: str) -> bool:
        bound = subst.setdefault(letter, target)
        return bound == target

    return subst if walk(pattern, candidate) else None


def match_atoms(pairs: list[tuple[Atom, Atom]]) -> Optional[dict[str, str]]:
    """Jointly match several (pattern, candidate) atom pairs with one substitution."""
    subst: dict[str, str] = {}
    for pattern, candidate in pairs:
        found = match_schema(pattern, candidate)
        if found is None:
            return None
        for letter, target in found.items():
            if subst.setdefault(letter, target) != target:
                return None
    return subst


# Convenience constructors, used heavily by the system registry and tests.

def neg(operand: Formula) -> Formula:
    return Neg(operand)


def conj(*parts: Formula) -> Formula:
    out = parts[0]
    for part in parts[1:]:
        out = Bin("&", out, part)
    return out


def disj(*parts: Formula) -> Formula:
    out = parts[0]
    for part in parts[1:]:
        out = Bin("|", out, part)
    return out


def imp(antecedent: Formula, consequent: Formula) -> Formula:
    return Bin("->", antecedent, consequent)


def iff(left: Formula, right: Formula) -> Formula:
    return Bin("<->", left, right)
