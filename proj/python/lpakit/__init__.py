"""Exact Bowen-Franks invariants and path-algebra arithmetic for finite
directed graphs.

The heavy lifting happens in the C++ extension; this package re-exports its
surface.  Groups come back as dicts with ``rank``, ``factors`` (the
invariant factor chain, as ints) and a human-readable ``description``.
Certificates and the larger reports mirror the CLI's ``--json`` output,
where exact integers travel as decimal strings.
"""

from lpakit._core import (
    DomainError,
    Graph,
    ParseError,
    bf,
    bf_dual,
    bf_twisted,
    bf_twisted_dual,
    bfolbf_criterion,
    canonical_form,
    classify_pair,
    cokernel,
    det_sigma,
    graded_hom_obstruction,
    hnf,
    invariant_report,
    jh_vanishes,
    kernel_basis,
    kh_ends,
    kk_iso_exists,
    kk_iso_exists_twisted,
    normal_form,
    run_cli,
    snf,
    solve,
    uct_ends,
    verify_minus_one_identity,
)

__all__ = [
    "DomainError",
    "Graph",
    "ParseError",
    "bf",
    "bf_dual",
    "bf_twisted",
    "bf_twisted_dual",
    "bfolbf_criterion",
    "canonical_form",
    "classify_pair",
    "cokernel",
    "det_sigma",
    "graded_hom_obstruction",
    "hnf",
    "invariant_report",
    "jh_vanishes",
    "kernel_basis",
    "kh_ends",
    "kk_iso_exists",
    "kk_iso_exists_twisted",
    "normal_form",
    "run_cli",
    "snf",
    "solve",
    "uct_ends",
    "verify_minus_one_identity",
]

__version__ = "0.1.0"
