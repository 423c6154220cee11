#!/usr/bin/env python3
"""Survey the 24 syllogistic moods across the four model classes.

Prints one row per mood with its verdict in each class.  The premise
strengthening flags demonstrate how the stronger readings of the universal
forms rescue the existential moods once empty names are admitted:

  --strong       read a-premises as ka and e-premises as ke; everything but
                 calemos comes back over unrestricted models
  --superstrong  additionally read e-premises as kke (both names nonempty),
                 which rescues calemos as well
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from namecalc.core import Atom, Bin, Formula, Functor, Neg
from namecalc.corpus import corpus_entries
from namecalc.decide import Valid, decide
from namecalc.parser import format_model, parse_formula
from namecalc.semantics import ModelClass

CLASSES = [
    (ModelClass.ALL, "all"),
    (ModelClass.TRADITIONAL, "trad"),
    (ModelClass.POLYREFERENTIAL, "poly"),
    (ModelClass.NON_MONOREFERENTIAL, "nonmono"),
]

STRENGTHEN = {"strong": {Functor.A: Functor.KA, Functor.E: Functor.KE},
              "superstrong": {Functor.A: Functor.KA, Functor.E: Functor.KKE}}


def strengthen_premises(formula: Formula, table: dict) -> Formula:
    if isinstance(formula, Bin) and formula.op == "->":
        return Bin("->", _strengthen(formula.left, table), formula.right)
    return formula


def _strengthen(formula: Formula, table: dict) -> Formula:
    if isinstance(formula, Atom):
        replacement = table.get(formula.functor)
        if replacement:
            return Atom(replacement, formula.subject, formula.predicate)
        return formula
    if isinstance(formula, Neg):
        return Neg(_strengthen(formula.operand, table))
    return Bin(formula.op, _strengthen(formula.left, table), _strengthen(formula.right, table))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--strong", action="store_true")
    parser.add_argument("--superstrong", action="store_true")
    parser.add_argument("--countermodels", action="store_true",
                        help="print the first countermodel for each failure")
    args = parser.parse_args()
    table = {}
    if args.superstrong:
        table = STRENGTHEN["superstrong"]
    elif args.strong:
        table = STRENGTHEN["strong"]

    moods = [e for e in corpus_entries() if e.group == "moods"]
    width = max(len(e.name) for e in moods)
    print(f"{'mood':<{width}}  " + "  ".join(f"{label:>7}" for _, label in CLASSES))
    for entry in sorted(moods, key=lambda e: ("existential" in e.flags, e.name)):
        formula = strengthen_premises(parse_formula(entry.formula), table)
        row = []
        notes = []
        for cls, _ in CLASSES:
            verdict = decide(formula, cls)
            if isinstance(verdict, Valid):
                row.append("valid")
            else:
                row.append("-")
                if args.countermodels:
                    notes.append(f"    {cls.value}: {format_model(verdict.model)}")
        print(f"{entry.name:<{width}}  " + "  ".join(f"{v:>7}" for v in row))
        for note in notes:
            print(note)


if __name__ == "__main__":
    main()
