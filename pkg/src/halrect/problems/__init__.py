from .catalog import (
    CATALOG,
    ProblemSpec,
    eval_raw,
    format_manifest,
    instances,
    lookup,
    parse_manifest,
    perturb,
    verify_optimum,
)

__all__ = [
    "CATALOG",
    "ProblemSpec",
    "eval_raw",
    "format_manifest",
    "instances",
    "lookup",
    "parse_manifest",
    "perturb",
    "verify_optimum",
]
