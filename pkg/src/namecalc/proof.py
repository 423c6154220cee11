"""Hilbert-style proof checking, CPL tautology recognition, and the
definitional rewriter between functor bases.

The kernel has two rules, detachment and uniform letter substitution, plus
axiom/definition instances and a single `cpl` tag that admits any
substitution instance of a propositional tautology (checked by truth table
over the distinct atoms).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import (
    Atom,
    Bin,
    Formula,
    Functor,
    Neg,
    conj,
    disj,
    distinct_atoms,
    match_schema,
    neg,
    substitute,
)
from .proofscript import (
    AxiomInstance,
    CplTautology,
    DefInstance,
    Detach,
    ProofScript,
    Substitute,
)
from .systems import AxiomSchema, SystemSpec

CPL_ATOM_LIMIT = 20


class GuardExceeded(ValueError):
    pass


def is_cpl_tautology(formula: Formula) -> bool:
    """True when the formula holds under every Boolean assignment to its
    distinct atoms (each atomic name-formula counts as one propositional letter)."""
    atoms = distinct_atoms(formula)
    if len(atoms) > CPL_ATOM_LIMIT:
        raise GuardExceeded(f"{len(atoms)} distinct atoms exceed the truth-table guard")
    position = {atom: k for k, atom in enumerate(atoms)}

    def value(node: Formula, bits: int) -> bool:
        if isinstance(node, Atom):
            return bool(bits >> position[node] & 1)
        if isinstance(node, Neg):
            return not value(node.operand, bits)
        left = value(node.left, bits)
        right = value(node.right, bits)
        if node.op == "&":
            return left and right
        if node.op == "|":
            return left or right
        if node.op == "->":
            return (not left) or right
        return left == right

    return all(value(formula, bits) for bits in range(1 << len(atoms)))


@dataclass(frozen=True)
class CheckReport:
    accepted: bool
    failure_line: Optional[int] = None
    reason: Optional[str] = None

    @staticmethod
    def failure(line: int, reason: str) -> "CheckReport":
        return CheckReport(False, line, reason)


OK = CheckReport(True)


def _instance_ok(schema: AxiomSchema, subst, formula: Formula) -> Optional[str]:
    if subst is None:
        if match_schema(schema.pattern, formula) is None:
            return f"not an instance of {schema.name}"
        return None
    if substitute(schema.pattern, dict(subst)) != formula:
        return f"substitution does not send {schema.name} to the stated formula"
    return None


def check_proof(system: SystemSpec, script: ProofScript) -> CheckReport:
    """Check a script line by line; the report carries the first failure."""
    proved: dict[int, Formula] = {}
    previous = 0
    for line in script.lines:
        if line.index <= previous:
            return CheckReport.failure(line.index, "line numbers must increase")
        previous = line.index
        j = line.justification
        if isinstance(j, (AxiomInstance, DefInstance)):
            pool = (
                system.definitions + system.extension_definitions
                if isinstance(j, DefInstance)
                else system.axioms + system.definitions + system.extension_definitions
            )
            schema = next((s for s in pool if s.name == j.schema), None)
            if schema is None:
                return CheckReport.failure(line.index, f"{j.schema} is not available in {system.id}")
            problem = _instance_ok(schema, j.subst, line.formula)
            if problem:
                return CheckReport.failure(line.index, problem)
        elif isinstance(j, CplTautology):
            try:
                if not is_cpl_tautology(line.formula):
                    return CheckReport.failure(line.index, "not a propositional tautology")
            except GuardExceeded as err:
                return CheckReport.failure(line.index, str(err))
        elif isinstance(j, Detach):
            if j.antecedent not in proved or j.implication not in proved:
                return CheckReport.failure(line.index, "detachment cites a missing line")
            expected = Bin("->", proved[j.antecedent], line.formula)
            if proved[j.implication] != expected:
                return CheckReport.failure(
                    line.index, "cited line is not the matching implication"
                )
        elif isinstance(j, Substitute):
            if not system.substitution_rule_enabled:
                return CheckReport.failure(
                    line.index, f"{system.id} (instance version) has no substitution rule"
                )
            if j.source not in proved:
                return CheckReport.failure(line.index, "substitution cites a missing line")
            if substitute(proved[j.source], dict(j.subst or ())) != line.formula:
                return CheckReport.failure(line.index, "substitution result differs")
        else:  # pragma: no cover
            return CheckReport.failure(line.index, f"unknown justification {j!r}")
        proved[line.index] = line.formula
    return OK


class Basis(Enum):
    AI = "ai"          # target atoms: a, i (eps family untouched)
    KAI = "kai"        # target atoms: ka, i (eps family untouched)
    AIEO_FULL = "full" # target atoms: a, i, e, o (eps family untouched)


def _a(s, p):
    return Atom(Functor.A, s, p)


def _i(s, p):
    return Atom(Functor.I, s, p)


def _ka(s, p):
    return Atom(Functor.KA, s, p)


def _eps(s, p):
    return Atom(Functor.EPS, s, p)


def _expand_atom_ai(atom: Atom) -> Formula:
    s, p = atom.subject, atom.predicate
    f = atom.functor
    if f in (Functor.A, Functor.I, Functor.EPS):
        return atom
    if f is Functor.E:
        return neg(_i(s, p))
    if f is Functor.O:
        return neg(_a(s, p))
    if f is Functor.EX:
        return _i(s, s)
    if f is Functor.KA:
        return conj(_i(s, s), _a(s, p))
    if f is Functor.OT:
        return neg(conj(_i(s, s), _a(s, p)))
    if f is Functor.KE:
        return conj(_i(s, s), neg(_i(s, p)))
    if f is Functor.KKE:
        return conj(_i(s, s), _i(p, p), neg(_i(s, p)))
    if f is Functor.CEQ:
        return conj(_a(s, p), _a(p, s))
    if f is Functor.DEQ:
        return conj(conj(_i(s, s), _a(s, p)), conj(_i(p, p), _a(p, s)))
    if f is Functor.NEPS:
        return conj(_eps(s, s), neg(_eps(s, p)))
    if f is Functor.IDEQ:
        return conj(_eps(s, p), _eps(p, s))
    raise AssertionError(f)


def _weak_a(s, p):
    # a through the strong functor
    return disj(neg(_ka(s, s)), _ka(s, p))


def _expand_atom_kai(atom: Atom) -> Formula:
    s, p = atom.subject, atom.predicate
    f = atom.functor
    if f in (Functor.KA, Functor.I, Functor.EPS):
        return atom
    if f is Functor.A:
        return _weak_a(s, p)
    if f is Functor.E:
        return neg(_i(s, p))
    if f is Functor.O:
        return neg(_weak_a(s, p))
    if f is Functor.EX:
        return _i(s, s)
    if f is Functor.OT:
        return neg(_ka(s, p))
    if f is Functor.KE:
        return conj(_i(s, s), neg(_i(s, p)))
    if f is Functor.KKE:
        return conj(_i(s, s), _i(p, p), neg(_i(s, p)))
    if f is Functor.CEQ:
        return conj(_weak_a(s, p), _weak_a(p, s))
    if f is Functor.DEQ:
        return conj(_ka(s, p), _ka(p, s))
    if f is Functor.NEPS:
        return conj(_eps(s, s), neg(_eps(s, p)))
    if f is Functor.IDEQ:
        return conj(_eps(s, p), _eps(p, s))
    raise AssertionError(f)


def _expand_atom_full(atom: Atom) -> Formula:
    if atom.functor in (Functor.A, Functor.I, Functor.E, Functor.O, Functor.EPS):
        return atom
    s, p = atom.subject, atom.predicate
    f = atom.functor
    if f is Functor.EX:
        return _i(s, s)
    if f is Functor.KA:
        return conj(_i(s, s), _a(s, p))
    if f is Functor.OT:
        return neg(conj(_i(s, s), _a(s, p)))
    if f is Functor.KE:
        return conj(_i(s, s), Atom(Functor.E, s, p))
    if f is Functor.KKE:
        return conj(_i(s, s), _i(p, p), Atom(Functor.E, s, p))
    return _expand_atom_ai(atom)


_EXPANDERS = {
    Basis.AI: _expand_atom_ai,
    Basis.KAI: _expand_atom_kai,
    Basis.AIEO_FULL: _expand_atom_full,
}


def expand_definitions(formula: Formula, basis: Basis) -> Formula:
    """Rewrite every atom outside the target basis through its definition.
    Idempotent on formulas already in the basis; eps atoms survive untouched."""
    expander = _EXPANDERS[basis]
    if isinstance(formula, Atom):
        return expander(formula)
    if isinstance(formula, Neg):
        return Neg(expand_definitions(formula.operand, basis))
    return Bin(
        formula.op,
        expand_definitions(formula.left, basis),
        expand_definitions(formula.right, basis),
    )


def axioms_of(system: SystemSpec) -> list[AxiomSchema]:
    """The tabulated schema set of a system: proper axioms plus its counted
    definitions (definitional-extension equivalences are not part of it)."""
    return list(system.axioms + system.definitions)
