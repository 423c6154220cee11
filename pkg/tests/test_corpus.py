import shutil

from namecalc.corpus import DATA_DIR, GROUPS, corpus_entries, run_corpus
from namecalc.decide import Countermodel, decide
from namecalc.parser import format_formula, parse_formula
from namecalc.semantics import ModelClass


def test_full_run_has_zero_mismatches():
    report = run_corpus()
    assert report.ok, report.mismatches
    assert report.entries_run == len(corpus_entries())
    assert report.script_checks >= 30


def test_mood_counts():
    moods = [e for e in corpus_entries() if e.group == "moods"]
    assert len(moods) == 24
    assert sum(1 for e in moods if e.verdicts["all"] == "valid") == 15
    assert all(e.verdicts["traditional"] == "valid" for e in moods)
    assert all(e.verdicts["polyreferential"] == "valid" for e in moods)
    existential = [e for e in moods if "existential" in e.flags]
    assert len(existential) == 9


def test_existential_moods_fail_through_an_empty_name():
    for entry in corpus_entries():
        if entry.group != "moods" or "existential" not in entry.flags:
            continue
        verdict = decide(parse_formula(entry.formula), ModelClass.ALL)
        assert isinstance(verdict, Countermodel)
        assert any(not v for v in verdict.model.denotation.values()), entry.name


def test_script_conclusions_match_entry_formulas_byte_for_byte():
    from namecalc.parser import (
        parse_deduction_script,
        parse_proof_script,
        parse_sequent_script,
    )
    from namecalc.sequent import claim_implication, sequent_implication

    for entry in corpus_entries():
        assert format_formula(parse_formula(entry.formula)) == entry.formula
        for script in entry.scripts:
            text = (DATA_DIR / script.path).read_text()
            if script.path.endswith(".proof"):
                conclusion = parse_proof_script(text).conclusion
            elif script.path.endswith(".seq"):
                conclusion = sequent_implication(parse_sequent_script(text).lines[-1].sequent)
            else:
                conclusion = claim_implication(parse_deduction_script(text).lines[-1].claim)
            assert format_formula(conclusion) == entry.formula, (entry.name, script.path)


def test_group_selection_sizes_match_the_manifest():
    entries = corpus_entries()
    for group in GROUPS:
        expected = sum(1 for e in entries if e.group == group)
        report = run_corpus(group)
        assert report.entries_run == expected
        assert report.ok


def test_corrupted_script_yields_exactly_one_mismatch(tmp_path):
    clone = tmp_path / "data"
    shutil.copytree(DATA_DIR, clone)
    # ferio.proof is referenced by exactly one entry
    target = clone / "scripts/ferio.proof"
    original = target.read_text()
    corrupted = original.replace("ax Datisi", "ax Barbara", 1)
    assert corrupted != original
    target.write_text(corrupted)
    report = run_corpus(data_dir=clone)
    assert len(report.mismatches) == 1
    assert "ferio" in report.mismatches[0]


def test_slupecki_gap_entries_are_pinned_valid_but_flagged():
    entries = {e.name: e for e in corpus_entries()}
    for name in (
        "slu-gap-subj-ex",
        "slu-gap-i-kaself",
        "slu-gap-ka-kaself",
        "slu-gap-ka-kapred",
        "dagger-slu-a",
    ):
        entry = entries[name]
        assert entry.verdicts["all"] == "valid"
        assert "slu-underivable-documented" in entry.flags
        assert not any(s.system == "SLU" for s in entry.scripts)


def test_boundary_entry_is_not_claimed_as_a_shis_thesis():
    entries = {e.name: e for e in corpus_entries()}
    boundary = entries["eps-class-boundary"]
    assert boundary.verdicts["nonmonoreferential"] == "valid"
    assert boundary.verdicts["all"] == "invalid"
    assert not boundary.scripts
    assert "not-a-shis-thesis" in boundary.flags
    # and no other entry pins that formula as a derivable thesis anywhere
    for entry in corpus_entries():
        if entry.name != "eps-class-boundary":
            assert entry.formula != boundary.formula


def test_mood_conclusion_discrepancy_is_annotated():
    entries = {e.name: e for e in corpus_entries()}
    for name in ("camestros", "calemos"):
        assert "printed-i-conclusion-read-as-o" in entries[name].flags
        assert entries[name].notes
