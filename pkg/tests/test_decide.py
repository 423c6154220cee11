import itertools
import random

import pytest

from namecalc.core import letters
from namecalc.corpus import corpus_entries
from namecalc.decide import (
    Card,
    CapExceeded,
    Countermodel,
    RegionLabeling,
    Valid,
    decide,
    needs_three_labels,
    oracle_decide,
    realize,
)
from namecalc.parser import format_model, parse_formula
from namecalc.semantics import ModelClass, evaluate, in_class


def is_valid(verdict):
    return isinstance(verdict, Valid)


def test_identity_particular_splits_the_classes():
    f = parse_formula("i(S,S)")
    assert is_valid(decide(f, ModelClass.TRADITIONAL))
    verdict = decide(f, ModelClass.ALL)
    assert isinstance(verdict, Countermodel)
    assert verdict.model.of("S") == frozenset()


def test_subordination_splits_the_classes():
    f = parse_formula("a(S,P) -> i(S,P)")
    assert isinstance(decide(f, ModelClass.ALL), Countermodel)
    assert is_valid(decide(f, ModelClass.TRADITIONAL))


def test_strong_reflexive_from_any_particular():
    assert is_valid(decide(parse_formula("i(S,P) -> ka(S,S)"), ModelClass.ALL))


def test_singular_boundary_formula():
    f = parse_formula("eps(S,S) -> eps(M,M)")
    assert is_valid(decide(f, ModelClass.NON_MONOREFERENTIAL))
    assert isinstance(decide(f, ModelClass.ALL), Countermodel)


def test_realize_singleton_region():
    labeling = RegionLabeling(("S",), (Card.ZERO, Card.ONE))
    model = realize(labeling, ModelClass.ALL)
    assert len(model.of("S")) == 1
    assert realize(labeling, ModelClass.POLYREFERENTIAL) is None


def test_realize_empty_region():
    labeling = RegionLabeling(("S",), (Card.ZERO, Card.ZERO))
    assert realize(labeling, ModelClass.TRADITIONAL) is None
    model = realize(labeling, ModelClass.NON_MONOREFERENTIAL)
    assert model is not None
    assert model.of("S") == frozenset()
    assert len(model.universe) >= 2  # padded to the class minimum


def test_realize_all_many_everywhere():
    labeling = RegionLabeling(("S", "P"), (Card.MANY,) * 4)
    for cls in ModelClass:
        model = realize(labeling, cls)
        assert model is not None
        assert in_class(model, cls, ["S", "P"])


def _random_labeling(rng, vocab):
    return RegionLabeling(
        vocab, tuple(rng.choice(list(Card)) for _ in range(1 << len(vocab)))
    )


def _random_formula(rng, pool, depth):
    from namecalc.core import Atom, Bin, Functor, Neg

    if depth == 0 or rng.random() < 0.35:
        functor = rng.choice(list(Functor))
        if functor.arity == 1:
            return Atom(functor, rng.choice(pool))
        return Atom(functor, rng.choice(pool), rng.choice(pool))
    shape = rng.choice(["~", "&", "|", "->", "<->"])
    if shape == "~":
        return Neg(_random_formula(rng, pool, depth - 1))
    return Bin(shape, _random_formula(rng, pool, depth - 1), _random_formula(rng, pool, depth - 1))


def test_abstraction_soundness_many_inflation():
    # Truth over a realization depends only on the labeling: inflating Many
    # regions from two to three elements never changes evaluation.
    rng = random.Random(20260811)
    checked = 0
    while checked < 500:
        vocab = tuple(sorted(rng.sample(["S", "P", "M"], rng.randint(1, 3))))
        labeling = _random_labeling(rng, vocab)
        formula = _random_formula(rng, vocab, rng.randint(1, 3))
        cls = rng.choice(list(ModelClass))
        small = realize(labeling, cls, many_size=2)
        big = realize(labeling, cls, many_size=3)
        if small is None:
            assert big is None
            continue
        assert evaluate(small, formula) == evaluate(big, formula)
        checked += 1


def test_small_model_property_exhaustive_two_letters():
    # decide agrees with the oracle at universe size 2 * 2^k for k <= 2
    functors = ["a", "i", "e", "o", "ka", "eps"]
    shapes = []
    for f, g in itertools.product(functors, repeat=2):
        shapes.append(f"{f}(S,P) -> {g}(P,S)")
        shapes.append(f"{f}(S,S) & {g}(S,P) -> {f}(S,P)")
    for text in shapes:
        formula = parse_formula(text)
        bound = 2 * (1 << len(letters(formula)))
        for cls in ModelClass:
            assert is_valid(decide(formula, cls)) == is_valid(
                oracle_decide(formula, cls, bound)
            ), (text, cls)


def test_small_model_property_sampled_three_letters():
    # Three-letter sample at the largest oracle-feasible universe.
    rng = random.Random(7)
    pool = ("S", "P", "M")
    for _ in range(40):
        formula = _random_formula(rng, pool, 2)
        if len(letters(formula)) != 3:
            continue
        for cls in ModelClass:
            assert is_valid(decide(formula, cls)) == is_valid(oracle_decide(formula, cls, 6))


def test_paired_class_verdicts_coincide_without_the_singular_family():
    # Completeness corollary: over the singular-free fragment the traditional
    # and polyreferential tautologies coincide, as do the unrestricted and
    # non-monoreferential ones.  The singular copula is exactly what breaks
    # this (see the eps-class-boundary entry).
    for entry in corpus_entries():
        formula = parse_formula(entry.formula)
        if needs_three_labels(formula):
            continue
        assert is_valid(decide(formula, ModelClass.TRADITIONAL)) == is_valid(
            decide(formula, ModelClass.POLYREFERENTIAL)
        ), entry.name
        assert is_valid(decide(formula, ModelClass.ALL)) == is_valid(
            decide(formula, ModelClass.NON_MONOREFERENTIAL)
        ), entry.name


def test_class_monotonicity_on_the_corpus():
    order = [
        (ModelClass.ALL, ModelClass.TRADITIONAL),
        (ModelClass.TRADITIONAL, ModelClass.POLYREFERENTIAL),
        (ModelClass.ALL, ModelClass.NON_MONOREFERENTIAL),
        (ModelClass.NON_MONOREFERENTIAL, ModelClass.POLYREFERENTIAL),
    ]
    for entry in corpus_entries():
        formula = parse_formula(entry.formula)
        verdicts = {cls: is_valid(decide(formula, cls)) for cls in ModelClass}
        for stronger, weaker in order:
            if verdicts[stronger]:
                assert verdicts[weaker], (entry.name, stronger, weaker)


def test_countermodels_recheck():
    cases = [
        ("i(S,S)", ModelClass.ALL),
        ("a(S,P) -> i(S,P)", ModelClass.NON_MONOREFERENTIAL),
        ("eps(S,S) -> eps(M,M)", ModelClass.TRADITIONAL),
        ("ka(S,P) -> ka(P,S)", ModelClass.POLYREFERENTIAL),
    ]
    for text, cls in cases:
        formula = parse_formula(text)
        verdict = decide(formula, cls)
        assert isinstance(verdict, Countermodel)
        assert not evaluate(verdict.model, formula)
        assert in_class(verdict.model, cls, letters(formula))


def test_decide_is_deterministic():
    f = parse_formula("ka(S,P) -> ka(P,S)")
    first = decide(f, ModelClass.ALL)
    second = decide(f, ModelClass.ALL)
    assert format_model(first.model) == format_model(second.model)


def test_two_label_mode_is_used_only_without_the_singular_family():
    assert not needs_three_labels(parse_formula("a(S,P) & kke(S,P)"))
    assert needs_three_labels(parse_formula("a(S,P) & neps(S,P)"))


def test_letter_cap():
    wide = parse_formula("a(A,B) & a(C,D) & a(E,F) -> a(A,F)")
    with pytest.raises(CapExceeded):
        decide(wide, ModelClass.ALL)
    with pytest.raises(CapExceeded):
        decide(parse_formula("eps(A,B) & eps(C,D) -> eps(E,E)"), ModelClass.ALL)


def test_oracle_examples_and_guards():
    assert is_valid(oracle_decide(parse_formula("a(S,S)"), ModelClass.ALL, 2))
    verdict = oracle_decide(parse_formula("ex(S)"), ModelClass.ALL, 2)
    assert isinstance(verdict, Countermodel)
    assert verdict.model.of("S") == frozenset()
    with pytest.raises(CapExceeded):
        oracle_decide(parse_formula("a(A,B) & a(B,C) -> a(C,D)"), ModelClass.ALL, 4)
    with pytest.raises(CapExceeded):
        oracle_decide(parse_formula("a(S,P)"), ModelClass.ALL, 9)
