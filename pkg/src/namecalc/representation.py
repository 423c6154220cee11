"""Finite relational structures, their set-representation maps, and canonical
models built from a finite model's atomic diagram.

The B-style structures carry inclusion-like and overlap-like relations; the
C-style structures add a singular-copula relation.  ``represent`` sends each
carrier element to a family of points so that the three relations turn into
inclusion, intersection and singleton-inclusion of point sets.  The
canonical-model constructions rebuild a model from nothing but the atomic
facts it satisfies, over a fixed finite vocabulary, and preserve atomic truth.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Atom, Functor
from .semantics import Model, ModelClass, evaluate, in_class


@dataclass(frozen=True)
class RelationalStructure:
    carrier: tuple[str, ...]
    A: frozenset[tuple[str, str]]
    I: frozenset[tuple[str, str]]
    eps: Optional[frozenset[tuple[str, str]]] = None

    def __post_init__(self) -> None:
        if not self.carrier:
            raise ValueError("carrier must be nonempty")
        if len(set(self.carrier)) != len(self.carrier):
            raise ValueError("carrier elements must be distinct")
        allowed = set(self.carrier)
        for relation in (self.A, self.I, self.eps or frozenset()):
            for x, y in relation:
                if x not in allowed or y not in allowed:
                    raise ValueError(f"relation pair ({x},{y}) is outside the carrier")

    def a(self, x: str, y: str) -> bool:
        return (x, y) in self.A

    def i(self, x: str, y: str) -> bool:
        return (x, y) in self.I

    def e(self, x: str, y: str) -> bool:
        return (x, y) in (self.eps or frozenset())


Violation = tuple[str, tuple[str, ...]]


def verify_structure(structure: RelationalStructure, kind: str) -> list[Violation]:
    """All condition violations, as (condition name, witness tuple) pairs.

    kind "B1": reflexive-A, transitive-A, the Datisi-shaped mixing law,
    I-seriality and the empty-or-reflexive dichotomy.  kind "B3" replaces the
    last two with plain I-reflexivity.  kind "C" extends B1 with the four
    singular-copula conditions (a missing eps relation reads as empty).
    """
    if kind not in ("B1", "B3", "C"):
        raise ValueError(f"unknown structure kind {kind!r}")
    s = structure
    out: list[Violation] = []
    for x in s.carrier:
        if not s.a(x, x):
            out.append(("B1", (x,)))
    for x, y, z in itertools.product(s.carrier, repeat=3):
        if s.a(x, y) and s.a(y, z) and not s.a(x, z):
            out.append(("B2", (x, y, z)))
        if s.a(x, y) and s.i(x, z) and not s.i(z, y):
            out.append(("B3", (x, y, z)))
    if kind == "B3":
        for x in s.carrier:
            if not s.i(x, x):
                out.append(("B4'", (x,)))
    else:
        for x, y in itertools.product(s.carrier, repeat=2):
            if s.i(x, y) and not s.i(x, x):
                out.append(("B4", (x, y)))
            if not s.i(x, x) and not s.a(x, y):
                out.append(("B5", (x, y)))
    if kind == "C":
        for x, y in itertools.product(s.carrier, repeat=2):
            if s.e(x, y) and not s.e(x, x):
                out.append(("C0", (x, y)))
            if s.e(x, y) and not s.a(x, y):
                out.append(("C1", (x, y)))
        for x in s.carrier:
            if s.e(x, x) and not s.i(x, x):
                out.append(("C2", (x,)))
        for x, y, z in itertools.product(s.carrier, repeat=3):
            if s.a(x, z) and s.e(z, z) and s.i(x, y) and not s.e(x, y):
                out.append(("C4", (x, y, z)))
    return out


def i_sets(structure: RelationalStructure) -> list[frozenset[str]]:
    """All nonempty subsets closed upward under A and pairwise related by I,
    in a fixed order (size, then sorted elements)."""
    out = []
    carrier = structure.carrier
    for bits in range(1, 1 << len(carrier)):
        subset = frozenset(c for j, c in enumerate(carrier) if bits >> j & 1)
        if _is_i_set(structure, subset):
            out.append(subset)
    return sorted(out, key=lambda f: (len(f), tuple(sorted(f))))


def _is_i_set(structure: RelationalStructure, subset: frozenset[str]) -> bool:
    if not subset:
        return False
    for x in subset:
        for y in structure.carrier:
            if structure.a(x, y) and y not in subset:
                return False
        for y in subset:
            if not structure.i(x, y):
                return False
    return True


def bracket(structure: RelationalStructure, x: str, y: str) -> Optional[frozenset[str]]:
    """The I-set {z : Axz or Ayz}, defined exactly when Ixy holds."""
    if not structure.i(x, y):
        return None
    return frozenset(z for z in structure.carrier if structure.a(x, z) or structure.a(y, z))


Point = tuple[str, object]  # ("iset", frozenset) or ("el", carrier element)


@dataclass(frozen=True)
class RepresentReport:
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def represent(structure: RelationalStructure, kind: str) -> tuple[dict[str, frozenset[Point]], RepresentReport]:
    """The point-set map e and the report of its exchange properties:
    Axy iff e(x) is a subset of e(y); Ixy iff e(x) meets e(y); for kind C,
    eps xy iff e(x) is a singleton inside e(y); for kind B3, no e(x) is empty.
    """
    violations = verify_structure(structure, kind)
    if violations:
        raise ValueError(f"structure violates {violations[0][0]} at {violations[0][1]}")
    family = i_sets(structure)
    e_map: dict[str, frozenset[Point]] = {}
    for x in structure.carrier:
        points: set[Point] = {("iset", f) for f in family if x in f}
        if kind == "C" and not structure.e(x, x):
            points |= {("el", c) for c in structure.carrier if structure.i(c, c) and structure.a(c, x)}
        e_map[x] = frozenset(points)
    failures = []
    for x, y in itertools.product(structure.carrier, repeat=2):
        if structure.a(x, y) != (e_map[x] <= e_map[y]):
            failures.append(f"A({x},{y}) vs point inclusion")
        if structure.i(x, y) != bool(e_map[x] & e_map[y]):
            failures.append(f"I({x},{y}) vs point intersection")
        if kind == "C":
            image_single = len(e_map[x]) == 1 and e_map[x] <= e_map[y]
            if structure.e(x, y) != image_single:
                failures.append(f"eps({x},{y}) vs singleton inclusion")
    if kind == "B3":
        for x in structure.carrier:
            if not e_map[x]:
                failures.append(f"e({x}) is empty")
    return e_map, RepresentReport(tuple(failures))


def structure_from_model(model: Model, vocab: Iterable[str], with_eps: bool = True) -> RelationalStructure:
    """Harvest the letter-to-letter relations of a model as a structure."""
    carrier = tuple(sorted(set(vocab)))
    a_rel, i_rel, eps_rel = set(), set(), set()
    for x, y in itertools.product(carrier, repeat=2):
        if evaluate(model, Atom(Functor.A, x, y)):
            a_rel.add((x, y))
        if evaluate(model, Atom(Functor.I, x, y)):
            i_rel.add((x, y))
        if with_eps and evaluate(model, Atom(Functor.EPS, x, y)):
            eps_rel.add((x, y))
    return RelationalStructure(
        carrier, frozenset(a_rel), frozenset(i_rel), frozenset(eps_rel) if with_eps else None
    )


def parse_structure(text: str) -> RelationalStructure:
    payload = json.loads(text)
    eps = payload.get("eps")
    return RelationalStructure(
        tuple(payload["carrier"]),
        frozenset((x, y) for x, y in payload["A"]),
        frozenset((x, y) for x, y in payload["I"]),
        frozenset((x, y) for x, y in eps) if eps is not None else None,
    )


def format_structure(structure: RelationalStructure) -> str:
    payload = {
        "carrier": list(structure.carrier),
        "A": sorted([x, y] for x, y in structure.A),
        "I": sorted([x, y] for x, y in structure.I),
    }
    if structure.eps is not None:
        payload["eps"] = sorted([x, y] for x, y in structure.eps)
    return json.dumps(payload, separators=(",", ":"))


# Canonical models from a finite model's atomic diagram.

class Diagram:
    """The atomic facts of a backing model over a fixed vocabulary; the
    closure of this set under a sound system's theses is automatic."""

    def __init__(self, model: Model, vocab: Iterable[str]):
        self.model = model
        self.vocab = tuple(sorted(set(vocab)))

    def a(self, x: str, y: str) -> bool:
        return evaluate(self.model, Atom(Functor.A, x, y))

    def i(self, x: str, y: str) -> bool:
        return evaluate(self.model, Atom(Functor.I, x, y))

    def eps(self, x: str, y: str) -> bool:
        return evaluate(self.model, Atom(Functor.EPS, x, y))


def filters_of(diagram: Diagram) -> list[frozenset[str]]:
    """Nonempty letter sets closed under the a-facts and pairwise i-related."""
    vocab = diagram.vocab
    out = []
    for bits in range(1, 1 << len(vocab)):
        subset = frozenset(v for j, v in enumerate(vocab) if bits >> j & 1)
        if all(
            all(other in subset for other in vocab if diagram.a(member, other))
            and all(diagram.i(member, other) for other in subset)
            for member in subset
        ):
            out.append(subset)
    return sorted(out, key=lambda f: (len(f), tuple(sorted(f))))


def congruence_classes(diagram: Diagram) -> dict[str, frozenset[str]]:
    """Blocks of the mutual-a relation over the vocabulary."""
    blocks: dict[str, frozenset[str]] = {}
    for letter in diagram.vocab:
        blocks[letter] = frozenset(
            other
            for other in diagram.vocab
            if diagram.a(letter, other) and diagram.a(other, letter)
        )
    return blocks


def _filter_name(subset: frozenset[str]) -> str:
    return "flt:" + ",".join(sorted(subset))


def _pair_name(pair: frozenset[str]) -> str:
    return "pr:" + ",".join(sorted(pair))


def _block_name(block: frozenset[str]) -> str:
    return "blk:" + ",".join(sorted(block))


def _letter_name(letter: str) -> str:
    return "lt:" + letter


CANONICAL_SYSTEMS = ("SH", "LUK", "SHIS")
CANONICAL_METHODS = ("filters", "pairs")


def canonical_model(
    model: Model,
    system: str,
    method: str,
    vocab: Optional[Iterable[str]] = None,
    force_nonmono: bool = False,
) -> Model:
    """Rebuild a model from the atomic diagram of ``model`` over ``vocab``.

    For systems SH and LUK the universe consists of filters (method
    "filters") or of overlap-witness pairs (method "pairs"); for SHIS both
    methods extend the universe so that singleton denotations are recreated
    exactly for the letters with a true reflexive copula fact.  Atomic truth
    over the vocabulary is preserved; for LUK the backing model must be
    traditional on the vocabulary.

    force_nonmono applies the SHIS-style alternative denotation to SH or LUK,
    producing a model with no singleton denotation.
    """
    if system not in CANONICAL_SYSTEMS:
        raise ValueError(f"unknown system {system!r} for canonical models")
    if method not in CANONICAL_METHODS:
        raise ValueError(f"unknown method {method!r}")
    if force_nonmono and system == "SHIS":
        raise ValueError("the non-singleton variant applies to SH and LUK only")
    diagram = Diagram(model, vocab if vocab is not None else model.denotation.keys())
    if system == "LUK" and not in_class(model, ModelClass.TRADITIONAL, diagram.vocab):
        raise ValueError("LUK canonical models need a traditional backing model")
    if method == "filters":
        return _canonical_filters(diagram, system, force_nonmono)
    return _canonical_pairs(diagram, system, force_nonmono)


def _canonical_filters(diagram: Diagram, system: str, force_nonmono: bool) -> Model:
    filters = filters_of(diagram)
    filter_elements = {f: _filter_name(f) for f in filters}
    shis_like = system == "SHIS" or force_nonmono
    letter_elements = (
        {v: _letter_name(v) for v in diagram.vocab if diagram.i(v, v)} if shis_like else {}
    )
    universe = set(filter_elements.values()) | set(letter_elements.values())
    denotation = {}
    for letter in diagram.vocab:
        extent = {name for f, name in filter_elements.items() if letter in f}
        if shis_like and not (system == "SHIS" and diagram.eps(letter, letter)):
            extent |= {
                name
                for member, name in letter_elements.items()
                if diagram.a(member, letter)
            }
        denotation[letter] = frozenset(extent)
    return Model(frozenset(universe), denotation)


def _canonical_pairs(diagram: Diagram, system: str, force_nonmono: bool) -> Model:
    vocab = diagram.vocab
    pairs = {
        frozenset((m, q))
        for m, q in itertools.product(vocab, repeat=2)
        if diagram.i(m, q)
    }
    pair_elements = {p: _pair_name(p) for p in pairs}
    shis_like = system == "SHIS" or force_nonmono
    letter_elements = (
        {v: _letter_name(v) for v in vocab if diagram.i(v, v)} if shis_like else {}
    )
    block_elements = {}
    if system == "SHIS":
        blocks = congruence_classes(diagram)
        block_elements = {
            v: _block_name(blocks[v]) for v in vocab if diagram.i(v, v)
        }
    universe = (
        set(pair_elements.values())
        | set(letter_elements.values())
        | set(block_elements.values())
    )
    denotation = {}
    for letter in vocab:
        if system == "SHIS" and diagram.eps(letter, letter):
            extent = {
                name
                for member, name in block_elements.items()
                if diagram.a(member, letter)
            }
        else:
            extent = {
                name
                for pair, name in pair_elements.items()
                if any(diagram.a(member, letter) for member in pair)
            }
            extent |= {
                name
                for member, name in block_elements.items()
                if diagram.a(member, letter)
            }
            extent |= {
                name
                for member, name in letter_elements.items()
                if diagram.a(member, letter)
            }
        denotation[letter] = frozenset(extent)
    return Model(frozenset(universe), denotation)


def atomic_agreement(model: Model, canonical: Model, vocab: Iterable[str], with_eps: bool) -> list[Atom]:
    """Atomic formulas over the vocabulary on which the two models disagree."""
    functors = [Functor.A, Functor.I, Functor.E, Functor.O]
    if with_eps:
        functors.append(Functor.EPS)
    vocab = sorted(set(vocab))
    mismatches = []
    for f in functors:
        for x, y in itertools.product(vocab, repeat=2):
            atom = Atom(f, x, y)
            if evaluate(model, atom) != evaluate(canonical, atom):
                mismatches.append(atom)
    return mismatches
