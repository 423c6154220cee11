"""namecalc: a workbench for the calculi of names.

Formula language and axiom-system registry, finite set-theoretic semantics
over four model classes, a validity decision procedure with countermodel
extraction, Hilbert/sequent/deduction proof kernels, executable finite
representation and canonical-model constructions, and a pinned catalogue of
named theses with machine-checked derivations.

All values are immutable after construction and every operation is pure, so
concurrent use is unrestricted; decision outputs are deterministic (fixed
enumeration orders) regardless of how calls are scheduled.
"""

from .core import Atom, Bin, Formula, Functor, Neg, letters, match_schema, substitute
from .decide import Countermodel, Valid, Verdict, decide, oracle_decide, realize
from .parser import (
    ParseError,
    format_formula,
    format_model,
    format_sequent,
    parse_formula,
    parse_model,
    parse_proof_script,
    parse_sequent,
    parse_sequent_script,
    parse_deduction_script,
)
from .proof import Basis, axioms_of, check_proof, expand_definitions, is_cpl_tautology
from .semantics import Model, ModelClass, evaluate, in_class, random_model
from .sequent import (
    check_sequent_proof,
    check_smiley_deduction,
    contradictory,
    cpl_consequence,
)
from .representation import canonical_model, i_sets, represent, verify_structure
from .systems import SCHEMAS, SYSTEM_IDS, SYSTEMS, SystemSpec, system
from .corpus import corpus_entries, run_corpus

__version__ = "0.1.0"
