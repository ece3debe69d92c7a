"""Parity and Emerson-Lei game solving with DAG-accelerated fixpoints."""

from ._core import (
    BudgetError,
    EmersonLeiGame,
    ParityGame,
    ParseError,
    ValidationError,
    build_product,
    detect_dag,
    el_oracle,
    generate,
    parse_el,
    parse_parity,
    solve,
    solve_el,
    write_el,
    write_parity,
)

EXISTS = 0
FORALL = 1

__all__ = [
    "BudgetError",
    "EmersonLeiGame",
    "ParityGame",
    "ParseError",
    "ValidationError",
    "EXISTS",
    "FORALL",
    "build_product",
    "detect_dag",
    "el_oracle",
    "generate",
    "parse_el",
    "parse_parity",
    "solve",
    "solve_el",
    "write_el",
    "write_parity",
]
