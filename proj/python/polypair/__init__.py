from ._polypair import (
    Polytope,
    PolypairError,
    check,
    check_high,
    cyclic_facet_count,
    cyclic_polytope,
    delta_star,
    execute,
    generalized_stack,
    parse,
    plan,
    seed,
    seed_names,
    stack,
    truncate,
    witness,
)

__all__ = [
    "Polytope",
    "PolypairError",
    "check",
    "check_high",
    "cyclic_facet_count",
    "cyclic_polytope",
    "delta_star",
    "execute",
    "generalized_stack",
    "parse",
    "plan",
    "seed",
    "seed_names",
    "stack",
    "truncate",
    "witness",
]
