"""Proof search and unit elimination for the Lambek calculus with brackets."""

from .calculus import Calculus, Derivation, Rule, backward_steps, check_derivation, cut_compose
from .grammar import BracketBudget, Grammar, enumerate_bracketings, s_accepts, t_accepts, translate_grammar
from .prover import Prover, SearchConfig, derivable, prove
from .syntax import (
    UNIT, BracketInv, Context, Diamond, Group, Over, Prod, Sequent, Under, Unit, Var,
    modality_depth, occurrences, plug, size, yield_of,
)
from .textio import format_formula, format_sequent, parse_formula, parse_sequent, parse_structure
from .translate import fresh_q, substitute_unit_for_var, tau_minus, tau_minus_structure, tau_plus, translate_sequent

__all__ = [
    "UNIT", "BracketBudget", "BracketInv", "Calculus", "Context", "Derivation", "Diamond",
    "Grammar", "Group", "Over", "Prod", "Prover", "Rule", "SearchConfig", "Sequent", "Under",
    "Unit", "Var", "backward_steps", "check_derivation", "cut_compose", "derivable",
    "enumerate_bracketings", "format_formula", "format_sequent", "fresh_q", "modality_depth",
    "occurrences", "parse_formula", "parse_sequent", "parse_structure", "plug", "prove",
    "s_accepts", "size", "substitute_unit_for_var", "t_accepts", "tau_minus",
    "tau_minus_structure", "tau_plus", "translate_grammar", "translate_sequent", "yield_of",
]
