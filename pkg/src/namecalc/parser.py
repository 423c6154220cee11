"""Concrete text syntax: formulas, sequents, models, and the three script formats.

Grammar for formulas (whitespace insensitive, ASCII only):

    formula := iff
    iff     := imp ("<->" imp)*          left associative
    imp     := or ("->" imp)?            right associative
    or      := and ("|" and)*
    and     := neg ("&" neg)*
    neg     := "~" neg | atom | "(" formula ")"
    atom    := FUNC "(" LETTER ["," LETTER] ")"
    FUNC    := a|i|e|o|ka|ke|kke|ceq|deq|ot|eps|neps|ideq|ex
    LETTER  := [A-Z][A-Za-z0-9_]*

Sequents are written ``p1, p2 ==> c`` (premises form a set: order and
duplicates are discarded at parse time).  Deduction claims are written
``p1, p2 |- c``.  Script files are line oriented, ``N: BODY ; JUSTIFICATION``,
with ``#`` comments and blank lines ignored.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional

from .core import Atom, Bin, Formula, Functor, FUNCTOR_BY_NAME, Neg, is_letter
from .semantics import Model
from .proofscript import (
    AxiomInstance,
    CplConsequenceAxiom,
    CplTautology,
    Cut,
    CutWithRule,
    Deduction,
    DeductionClaim,
    DeductionLine,
    DeductionScript,
    DefInstance,
    DerivedRule,
    Detach,
    LukAxiomSequent,
    ProofLine,
    ProofScript,
    Reductio,
    Sequent,
    SequentLine,
    SequentScript,
    Substitute,
    Trivial,
)


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ValueError("span start after end")


class ParseError(Exception):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{message} at {span.start}..{span.end}")
        self.message = message
        self.span = span


@dataclass
class _Token:
    kind: str  # "name", "sym", "int", "end"
    text: str
    span: SourceSpan


_SYMBOLS = ("<->", "==>", ":=", "->", "|-", "(", ")", ",", "~", "&", "|", ":", ";", "[", "]", "-")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    size = len(text)
    while pos < size:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        matched = False
        for sym in _SYMBOLS:
            if text.startswith(sym, pos):
                tokens.append(_Token("sym", sym, SourceSpan(pos, pos + len(sym))))
                pos += len(sym)
                matched = True
                break
        if matched:
            continue
        m = re.match(r"[A-Za-z_][A-Za-z0-9_]*", text[pos:])
        if m:
            tokens.append(_Token("name", m.group(), SourceSpan(pos, pos + m.end())))
            pos += m.end()
            continue
        m = re.match(r"[0-9]+", text[pos:])
        if m:
            tokens.append(_Token("int", m.group(), SourceSpan(pos, pos + m.end())))
            pos += m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", SourceSpan(pos, pos + 1))
    tokens.append(_Token("end", "", SourceSpan(size, size)))
    return tokens


class _Parser:
    def __init__(self, text: str, offset: int = 0):
        self.offset = offset
        try:
            self.tokens = _tokenize(text)
        except ParseError as err:
            raise ParseError(err.message, self._shift(err.span)) from None
        self.pos = 0

    def _shift(self, span: SourceSpan) -> SourceSpan:
        return SourceSpan(span.start + self.offset, span.end + self.offset)

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        token = self.tokens[self.pos]
        if token.kind != "end":
            self.pos += 1
        return token

    def fail(self, message: str, token: Optional[_Token] = None) -> ParseError:
        token = token or self.peek()
        return ParseError(message, self._shift(token.span))

    def expect_sym(self, sym: str) -> _Token:
        token = self.peek()
        if token.kind != "sym" or token.text != sym:
            raise self.fail(f"expected {sym!r}")
        return self.next()

    def at_sym(self, sym: str) -> bool:
        token = self.peek()
        return token.kind == "sym" and token.text == sym

    def eat_sym(self, sym: str) -> bool:
        if self.at_sym(sym):
            self.next()
            return True
        return False

    def expect_end(self) -> None:
        if self.peek().kind != "end":
            raise self.fail("trailing input")

    # Formula grammar.

    def formula(self) -> Formula:
        node = self.implication()
        while self.eat_sym("<->"):
            node = Bin("<->", node, self.implication())
        return node

    def implication(self) -> Formula:
        node = self.disjunction()
        if self.eat_sym("->"):
            return Bin("->", node, self.implication())
        return node

    def disjunction(self) -> Formula:
        node = self.conjunction()
        while self.eat_sym("|"):
            node = Bin("|", node, self.conjunction())
        return node

    def conjunction(self) -> Formula:
        node = self.negation()
        while self.eat_sym("&"):
            node = Bin("&", node, self.negation())
        return node

    def negation(self) -> Formula:
        if self.eat_sym("~"):
            return Neg(self.negation())
        if self.eat_sym("("):
            node = self.formula()
            self.expect_sym(")")
            return node
        return self.atom()

    def atom(self) -> Atom:
        token = self.peek()
        if token.kind != "name":
            raise self.fail("expected a functor")
        functor = FUNCTOR_BY_NAME.get(token.text)
        if functor is None:
            raise self.fail(f"unknown functor {token.text!r}", token)
        self.next()
        self.expect_sym("(")
        subject = self.letter()
        if functor.arity == 2:
            if not self.eat_sym(","):
                raise self.fail(f"functor {functor.value!r} takes two letters")
            predicate = self.letter()
            self.expect_sym(")")
            return Atom(functor, subject, predicate)
        if self.at_sym(","):
            raise self.fail(f"functor {functor.value!r} takes one letter")
        self.expect_sym(")")
        return Atom(functor, subject)

    def letter(self) -> str:
        token = self.peek()
        if token.kind != "name" or not is_letter(token.text):
            raise self.fail("expected a name letter")
        self.next()
        return token.text

    # Sequents and deduction claims.

    def sequent(self) -> Sequent:
        premises, conclusion = self._premises_then("==>")
        return Sequent(frozenset(premises), conclusion)

    def deduction_claim(self) -> DeductionClaim:
        premises, conclusion = self._premises_then("|-")
        for part in premises + [conclusion]:
            if not isinstance(part, Atom) or part.functor not in _CATEGORICAL:
                raise self.fail("deduction claims use a/i/e/o atoms only")
        if not premises:
            raise self.fail("deduction claims need at least one premise")
        return DeductionClaim(frozenset(premises), conclusion)

    def _premises_then(self, arrow: str) -> tuple[list[Formula], Formula]:
        premises: list[Formula] = []
        if not self.eat_sym(arrow):
            premises.append(self.formula())
            while self.eat_sym(","):
                premises.append(self.formula())
            self.expect_sym(arrow)
        return premises, self.formula()

    # Shared justification pieces.

    def substitution(self) -> dict[str, str]:
        subst: dict[str, str] = {}
        self.expect_sym("[")
        if not self.eat_sym("]"):
            while True:
                source = self.letter()
                self.expect_sym(":=")
                target = self.letter()
                if source in subst:
                    raise self.fail(f"letter {source} mapped twice")
                subst[source] = target
                if self.eat_sym("]"):
                    break
                self.expect_sym(",")
        return subst

    def optional_substitution(self) -> Optional[dict[str, str]]:
        if self.at_sym("["):
            return self.substitution()
        return None

    def line_number(self) -> int:
        token = self.peek()
        if token.kind != "int":
            raise self.fail("expected a line number")
        self.next()
        return int(token.text)

    def name(self) -> str:
        token = self.peek()
        if token.kind != "name":
            raise self.fail("expected a name")
        self.next()
        return token.text


_CATEGORICAL = (Functor.A, Functor.I, Functor.E, Functor.O)


def parse_formula(text: str) -> Formula:
    parser = _Parser(text)
    node = parser.formula()
    parser.expect_end()
    return node


def parse_sequent(text: str) -> Sequent:
    parser = _Parser(text)
    node = parser.sequent()
    parser.expect_end()
    return node


def parse_deduction_claim(text: str) -> DeductionClaim:
    parser = _Parser(text)
    node = parser.deduction_claim()
    parser.expect_end()
    return node


# Formatting with minimal parentheses.  Level: higher binds tighter.

_LEVEL_IFF, _LEVEL_IMP, _LEVEL_OR, _LEVEL_AND, _LEVEL_NEG = 1, 2, 3, 4, 5


def _fmt(formula: Formula, minimum: int) -> str:
    if isinstance(formula, Atom):
        if formula.predicate is None:
            return f"{formula.functor.value}({formula.subject})"
        return f"{formula.functor.value}({formula.subject},{formula.predicate})"
    if isinstance(formula, Neg):
        return f"~{_fmt(formula.operand, _LEVEL_NEG)}"
    if formula.op == "<->":
        level = _LEVEL_IFF
        text = f"{_fmt(formula.left, level)} <-> {_fmt(formula.right, level + 1)}"
    elif formula.op == "->":
        level = _LEVEL_IMP
        text = f"{_fmt(formula.left, level + 1)} -> {_fmt(formula.right, level)}"
    elif formula.op == "|":
        level = _LEVEL_OR
        text = f"{_fmt(formula.left, level)} | {_fmt(formula.right, level + 1)}"
    else:
        level = _LEVEL_AND
        text = f"{_fmt(formula.left, level)} & {_fmt(formula.right, level + 1)}"
    if level < minimum:
        return f"({text})"
    return text


def format_formula(formula: Formula) -> str:
    return _fmt(formula, _LEVEL_IFF)


def format_sequent(sequent: Sequent) -> str:
    premises = ", ".join(sorted(format_formula(p) for p in sequent.premises))
    arrow = "==> " if not premises else f"{premises} ==> "
    return arrow + format_formula(sequent.conclusion)


def format_deduction_claim(claim: DeductionClaim) -> str:
    premises = ", ".join(sorted(format_formula(p) for p in claim.premises))
    return f"{premises} |- {format_formula(claim.conclusion)}"


# Models: JSON object {"universe": [...], "denotation": {letter: [...]}}.

def parse_model(text: str) -> Model:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"bad JSON: {err.msg}", SourceSpan(err.pos, err.pos + 1)) from None
    span = SourceSpan(0, len(text))
    if not isinstance(payload, dict) or set(payload) != {"universe", "denotation"}:
        raise ParseError("model needs exactly the keys universe and denotation", span)
    universe = payload["universe"]
    denotation = payload["denotation"]
    if not isinstance(universe, list) or not all(isinstance(u, str) for u in universe):
        raise ParseError("universe must be a list of strings", span)
    if len(set(universe)) != len(universe):
        raise ParseError("duplicate universe element", span)
    if not isinstance(denotation, dict):
        raise ParseError("denotation must be an object", span)
    mapping: dict[str, frozenset[str]] = {}
    for letter, extension in denotation.items():
        if not is_letter(letter):
            raise ParseError(f"bad name letter {letter!r}", span)
        if not isinstance(extension, list) or not all(isinstance(u, str) for u in extension):
            raise ParseError(f"denotation of {letter} must be a list of strings", span)
        unknown = set(extension) - set(universe)
        if unknown:
            raise ParseError(
                f"denotation of {letter} mentions {sorted(unknown)[0]!r} outside the universe",
                span,
            )
        mapping[letter] = frozenset(extension)
    return Model(frozenset(universe), mapping)


def format_model(model: Model) -> str:
    payload = {
        "universe": sorted(model.universe),
        "denotation": {k: sorted(v) for k, v in sorted(model.denotation.items())},
    }
    return json.dumps(payload, separators=(",", ":"), sort_keys=False)


# Script files.  Lines look like  "3: a(S,P) -> i(S,P) ; mp 1 2".

def _script_lines(text: str) -> list[tuple[int, str]]:
    """Yield (byte_offset, content) for lines that are not blank or comments."""
    out = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        stripped = raw.split("#", 1)[0].rstrip("\n").rstrip()
        if stripped.strip():
            out.append((offset, stripped))
        offset += len(raw)
    return out


def _split_line(offset: int, content: str) -> tuple[_Parser, _Parser]:
    if ";" not in content:
        raise ParseError("missing ';' before the justification", SourceSpan(offset, offset + len(content)))
    body, just = content.rsplit(";", 1)
    return _Parser(body, offset), _Parser(just, offset + len(body) + 1)


def _line_header(parser: _Parser, previous: int) -> int:
    number = parser.line_number()
    parser.expect_sym(":")
    if number <= previous or (previous == 0 and number != 1):
        raise parser.fail(f"bad line number {number} after {previous}", parser.tokens[0])
    return number


def parse_proof_script(text: str) -> ProofScript:
    lines: list[ProofLine] = []
    previous = 0
    for offset, content in _script_lines(text):
        body, just = _split_line(offset, content)
        number = _line_header(body, previous)
        previous = number
        formula = body.formula()
        body.expect_end()
        tag = just.name()
        if tag == "ax":
            justification = AxiomInstance(just.name(), _freeze(just.optional_substitution()))
        elif tag == "def":
            justification = DefInstance(just.name(), _freeze(just.optional_substitution()))
        elif tag == "cpl":
            justification = CplTautology()
        elif tag == "mp":
            justification = Detach(just.line_number(), just.line_number())
        elif tag == "sub":
            source = just.line_number()
            subst = just.optional_substitution() or {}
            justification = Substitute(source, _freeze(subst))
        else:
            raise just.fail(f"unknown justification tag {tag!r}", just.tokens[0])
        just.expect_end()
        lines.append(ProofLine(number, formula, justification))
    return ProofScript(tuple(lines))


def parse_sequent_script(text: str) -> SequentScript:
    lines: list[SequentLine] = []
    previous = 0
    for offset, content in _script_lines(text):
        body, just = _split_line(offset, content)
        number = _line_header(body, previous)
        previous = number
        sequent = body.sequent()
        body.expect_end()
        tag = just.name()
        if tag == "luk":
            justification = LukAxiomSequent(just.name(), _freeze(just.optional_substitution()))
        elif tag == "cpl":
            justification = CplConsequenceAxiom()
        elif tag == "cut":
            justification = Cut(just.line_number(), just.line_number())
        elif tag == "ded":
            justification = Deduction(just.line_number())
        elif tag == "rule":
            name = _rule_name(just)
            cites = []
            while just.peek().kind == "int":
                cites.append(just.line_number())
            justification = DerivedRule(name, tuple(cites))
        else:
            raise just.fail(f"unknown justification tag {tag!r}", just.tokens[0])
        just.expect_end()
        lines.append(SequentLine(number, sequent, justification))
    return SequentScript(tuple(lines))


def _rule_name(parser: _Parser) -> str:
    # Derived-rule names contain hyphens: biconditional-split, contraposition-1, ...
    pieces = [parser.name()]
    while parser.eat_sym("-"):
        token = parser.peek()
        if token.kind not in ("name", "int"):
            raise parser.fail("expected a rule-name piece")
        parser.next()
        pieces.append(token.text)
    return "-".join(pieces)


def parse_deduction_script(text: str) -> DeductionScript:
    lines: list[DeductionLine] = []
    previous = 0
    for offset, content in _script_lines(text):
        body, just = _split_line(offset, content)
        number = _line_header(body, previous)
        previous = number
        claim = body.deduction_claim()
        body.expect_end()
        tag = just.name()
        if tag == "triv":
            justification = Trivial()
        elif tag == "cut":
            cites = [just.line_number()]
            if just.peek().kind == "int":
                cites.append(just.line_number())
            rule = just.name()
            if rule not in ("r1", "r2", "r3", "r4"):
                raise just.fail(f"unknown rule {rule!r}")
            rule_id = int(rule[1])
            if rule_id in (1, 2) and len(cites) != 2:
                raise just.fail("binary rules cite two lines")
            if rule_id in (3, 4) and len(cites) != 1:
                raise just.fail("unary rules cite one line")
            second = cites[1] if len(cites) == 2 else None
            justification = CutWithRule(cites[0], second, rule_id)
        elif tag == "red":
            justification = Reductio(just.line_number(), just.line_number())
        else:
            raise just.fail(f"unknown justification tag {tag!r}", just.tokens[0])
        just.expect_end()
        lines.append(DeductionLine(number, claim, justification))
    return DeductionScript(tuple(lines))


def _freeze(subst: Optional[dict[str, str]]) -> Optional[tuple[tuple[str, str], ...]]:
    if subst is None:
        return None
    return tuple(sorted(subst.items()))


def _format_subst(subst: Optional[tuple[tuple[str, str], ...]]) -> str:
    if subst is None:
        return ""
    inner = ",".join(f"{a}:={b}" for a, b in subst)
    return f" [{inner}]"


def format_proof_script(script: ProofScript) -> str:
    out = []
    for line in script.lines:
        j = line.justification
        if isinstance(j, AxiomInstance):
            just = f"ax {j.schema}{_format_subst(j.subst)}"
        elif isinstance(j, DefInstance):
            just = f"def {j.schema}{_format_subst(j.subst)}"
        elif isinstance(j, CplTautology):
            just = "cpl"
        elif isinstance(j, Detach):
            just = f"mp {j.antecedent} {j.implication}"
        else:
            just = f"sub {j.source}{_format_subst(j.subst) or ' []'}"
        out.append(f"{line.index}: {format_formula(line.formula)} ; {just}")
    return "\n".join(out) + "\n"


def format_sequent_script(script: SequentScript) -> str:
    out = []
    for line in script.lines:
        j = line.justification
        if isinstance(j, LukAxiomSequent):
            just = f"luk {j.schema}{_format_subst(j.subst)}"
        elif isinstance(j, CplConsequenceAxiom):
            just = "cpl"
        elif isinstance(j, Cut):
            just = f"cut {j.left} {j.right}"
        elif isinstance(j, Deduction):
            just = f"ded {j.source}"
        else:
            cites = " ".join(str(c) for c in j.cites)
            just = f"rule {j.rule} {cites}".rstrip()
        out.append(f"{line.index}: {format_sequent(line.sequent)} ; {just}")
    return "\n".join(out) + "\n"


def format_deduction_script(script: DeductionScript) -> str:
    out = []
    for line in script.lines:
        j = line.justification
        if isinstance(j, Trivial):
            just = "triv"
        elif isinstance(j, CutWithRule):
            cites = str(j.first) if j.second is None else f"{j.first} {j.second}"
            just = f"cut {cites} r{j.rule_id}"
        else:
            just = f"red {j.source} {j.refuter}"
        out.append(f"{line.index}: {format_deduction_claim(line.claim)} ; {just}")
    return "\n".join(out) + "\n"
