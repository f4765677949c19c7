"""Linkages, augmenting trails and hindrance certificates in webs."""

from ._hindrance import (
    HindranceError,
    Web,
    brute_find_hindrance,
    brute_max_linkage,
    brute_min_separator,
    deficiency,
    find_augmenting_trail,
    gen_random_web,
    hinder_from_wasteful,
    hindered_set,
    is_separator,
    max_linkage,
    parse_input,
    run_cli,
    run_elimination,
    validate_hindrance,
)

__all__ = [
    "HindranceError",
    "Web",
    "brute_find_hindrance",
    "brute_max_linkage",
    "brute_min_separator",
    "deficiency",
    "find_augmenting_trail",
    "gen_random_web",
    "hinder_from_wasteful",
    "hindered_set",
    "is_separator",
    "max_linkage",
    "parse_input",
    "run_cli",
    "run_elimination",
    "validate_hindrance",
]
