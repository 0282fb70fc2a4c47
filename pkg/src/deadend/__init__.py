"""Left dead ends in misère play: order, invariants, factorisation and census."""

from .core import (
    ZERO,
    EndStore,
    add,
    default_store,
    format_end,
    integer,
    make_end,
    multiple,
    parse,
    reset_default_store,
    waiting,
)
from .errors import InvalidOption, NotALeftEnd, NotAnAtom, NotationError, Overflow, ZeroGame
from .factor import (
    divides,
    factor_report,
    factorisations,
    factors,
    is_atom,
    longest_bound,
    longest_len,
)
from .measures import TerminalSet, birthday, flex, flexibility, is_integer, race, terminal_set
from .order import canonical, canonical_sum, compare, eq, ge, good_options

__version__ = "0.1.0"

__all__ = [
    "ZERO",
    "EndStore",
    "add",
    "default_store",
    "format_end",
    "integer",
    "make_end",
    "multiple",
    "parse",
    "reset_default_store",
    "waiting",
    "InvalidOption",
    "NotALeftEnd",
    "NotAnAtom",
    "NotationError",
    "Overflow",
    "ZeroGame",
    "divides",
    "factor_report",
    "factorisations",
    "factors",
    "is_atom",
    "longest_bound",
    "longest_len",
    "TerminalSet",
    "birthday",
    "flex",
    "flexibility",
    "is_integer",
    "race",
    "terminal_set",
    "canonical",
    "canonical_sum",
    "compare",
    "eq",
    "ge",
    "good_options",
]
