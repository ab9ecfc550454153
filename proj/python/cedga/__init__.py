"""Free dg-algebras over idempotents: parsing, checks, homology and obstructions."""

from ._cedga import (
    Bundle,
    CedgaError,
    ParseError,
    Presentation,
    check_d_squared,
    check_degree,
    check_parity_flip,
    example,
    example_names,
    exactness_search,
    h0,
    is_trivial,
    parse,
    run_cli,
)

__all__ = [
    "Bundle",
    "CedgaError",
    "ParseError",
    "Presentation",
    "check_d_squared",
    "check_degree",
    "check_parity_flip",
    "example",
    "example_names",
    "exactness_search",
    "h0",
    "is_trivial",
    "parse",
    "run_cli",
]


def load(path):
    """Parses a .cedga file."""
    with open(path, encoding="utf-8") as f:
        return parse(f.read())
