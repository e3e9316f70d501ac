"""Convert between short tree-like Res(l) refutations and narrow Resolution refutations."""

from .checker import CheckReport, check_res, check_tree_dnf
from .core import (
    Clause, Cnf, Term, negate_clause, negate_term, resolve,
    restrict_clause, restrict_cnf, restrict_term,
)
from .expand import eliminate_weakening, expand
from .formats import (
    ProofStats, ResProof, TreeDnfProof,
    parse_dimacs, parse_dnf_proof, parse_res_proof,
    serialize_dimacs, serialize_dnf_proof, serialize_res_proof, stats,
)
from .gen import NoRefutationWithinWidth, gen_chain, gen_php, gen_randk, prove_bounded
from .narrow import lift_refutation, narrow, narrow_bound, restrict_tree_proof, substitute_axiom

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "check_res",
    "check_tree_dnf",
    "Clause",
    "Cnf",
    "Term",
    "negate_clause",
    "negate_term",
    "resolve",
    "restrict_clause",
    "restrict_cnf",
    "restrict_term",
    "eliminate_weakening",
    "expand",
    "ProofStats",
    "ResProof",
    "TreeDnfProof",
    "parse_dimacs",
    "parse_dnf_proof",
    "parse_res_proof",
    "serialize_dimacs",
    "serialize_dnf_proof",
    "serialize_res_proof",
    "stats",
    "NoRefutationWithinWidth",
    "gen_chain",
    "gen_php",
    "gen_randk",
    "prove_bounded",
    "lift_refutation",
    "narrow",
    "narrow_bound",
    "restrict_tree_proof",
    "substitute_axiom",
]
