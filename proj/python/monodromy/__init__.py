"""Braid monodromy factorizations: braid words, Hurwitz moves and equivalence searches."""

from ._monodromy import (
    BraidWord,
    Error,
    Factorization,
    ParseError,
    PreconditionError,
    alpha,
    apply_certificate,
    cancel_pair,
    check_certificate,
    concat,
    delta_squared,
    delta_tilde_squared,
    factorizations_equal,
    format_letters,
    garside_delta,
    gen_instances,
    hurwitz_L,
    hurwitz_R,
    hurwitz_search,
    insert_pair,
    invariants,
    normal_form,
    normal_form_word,
    parse_word,
    permutation,
    power,
    read_factorization,
    rewrite_main,
    simultaneous_conjugate,
    verify,
    weak_equiv,
    words_equal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
