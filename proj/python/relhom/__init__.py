"""Relative homological invariants of finitely generated modules over Z/n and Z."""

from ._relhom import (
    Module,
    Morphism,
    PrecoverClass,
    RelhomError,
    Ring,
    build_cover,
    build_precover,
    build_resolution,
    check_E,
    check_R,
    check_S,
    enumerate_modules,
    example_ids,
    has_epi_precover,
    hom,
    is_almost_epi,
    is_precover,
    kernel,
    parse_class,
    parse_module,
    parse_ring,
    relative_ext,
    reproduce,
    run_config,
    run_suite,
    schanuel_step,
    suite_ids,
    verify_precover,
)

__all__ = [
    "Module",
    "Morphism",
    "PrecoverClass",
    "RelhomError",
    "Ring",
    "build_cover",
    "build_precover",
    "build_resolution",
    "check_E",
    "check_R",
    "check_S",
    "enumerate_modules",
    "example_ids",
    "has_epi_precover",
    "hom",
    "is_almost_epi",
    "is_precover",
    "kernel",
    "parse_class",
    "parse_module",
    "parse_ring",
    "relative_ext",
    "reproduce",
    "run_config",
    "run_suite",
    "schanuel_step",
    "suite_ids",
    "verify_precover",
]
