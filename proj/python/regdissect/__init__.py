"""Dissection certificates for languages by regular sets."""

import json

from ._core import (
    Dfa,
    Error,
    Language,
    LinearSet,
    SemiLinearSet,
    UltimatelyPeriodicSet,
    builtin_names,
    corpus_names,
    dfa_complement,
    dfa_difference,
    dfa_intersection,
    dfa_is_empty,
    dfa_union,
    difference_bound,
    length_modulus_dfa,
    normalize,
    parikh_of,
    prefix_dfa,
    symbol_count_modulus_dfa,
    tilde_psi_decompositions,
    upset_length_dfa,
)
from . import _core


def dissect(language, **config):
    """Certificate from the first strategy that verifies, as a dict."""
    return json.loads(_core.dissect(language, **config))


def verify(language, witness, **config):
    return json.loads(_core.verify(language, witness, **config))


def separate(cover, inner, **config):
    """Separator report for inner ⊆ cover, as a dict."""
    return json.loads(_core.separate(cover, inner, **config))


def factorial_decision(triples):
    return json.loads(_core.factorial_decision(triples))


def level_bound(expression):
    return json.loads(_core.level_bound(expression))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
