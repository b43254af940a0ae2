"""Boolean formulas as candidate names.

Grammar (canonical, no whitespace)::

    formula ::= "x" <decimal >= 1> | "!" formula
              | "(" formula "&" formula ")" | "(" formula "|" formula ")"

Every rendered formula starts with ``(``, ``!`` or ``x``, so it can never
collide with the reserved candidate name ``RoundOne``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union


class FormulaSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Not, And, Or]


def render_formula(f: Formula) -> str:
    if isinstance(f, Var):
        return f"x{f.index}"
    if isinstance(f, Not):
        return "!" + render_formula(f.arg)
    if isinstance(f, And):
        return f"({render_formula(f.left)}&{render_formula(f.right)})"
    if isinstance(f, Or):
        return f"({render_formula(f.left)}|{render_formula(f.right)})"
    raise TypeError(f"not a formula: {f!r}")


def parse_formula(text: str) -> Formula:
    f, pos = _parse(text, 0)
    if pos != len(text):
        raise FormulaSyntaxError(f"trailing input at offset {pos} in {text!r}")
    return f


def _parse(s: str, pos: int) -> tuple[Formula, int]:
    if pos >= len(s):
        raise FormulaSyntaxError(f"unexpected end of input in {s!r}")
    ch = s[pos]
    if ch == "x":
        end = pos + 1
        while end < len(s) and s[end] in "0123456789":
            end += 1
        digits = s[pos + 1:end]
        # leading zeros would give two spellings of one variable
        if not digits or digits[0] == "0":
            raise FormulaSyntaxError(f"bad variable index at offset {pos} in {s!r}")
        return Var(int(digits)), end
    if ch == "!":
        arg, end = _parse(s, pos + 1)
        return Not(arg), end
    if ch == "(":
        left, p = _parse(s, pos + 1)
        if p >= len(s) or s[p] not in "&|":
            raise FormulaSyntaxError(f"expected '&' or '|' at offset {p} in {s!r}")
        op = s[p]
        right, p = _parse(s, p + 1)
        if p >= len(s) or s[p] != ")":
            raise FormulaSyntaxError(f"expected ')' at offset {p} in {s!r}")
        node = And(left, right) if op == "&" else Or(left, right)
        return node, p + 1
    raise FormulaSyntaxError(f"unexpected {ch!r} at offset {pos} in {s!r}")


def try_parse(text: str) -> Formula | None:
    try:
        return parse_formula(text)
    except FormulaSyntaxError:
        return None


def variables(f: Formula) -> frozenset[int]:
    if isinstance(f, Var):
        return frozenset([f.index])
    if isinstance(f, Not):
        return variables(f.arg)
    return variables(f.left) | variables(f.right)


def max_var(f: Formula) -> int:
    return max(variables(f))


def eval_formula(f: Formula, bits: Sequence[bool]) -> bool:
    """Evaluate ``f`` with ``x_i`` bound to ``bits[i - 1]``."""
    top = max_var(f)
    if top > len(bits):
        raise ValueError(f"assignment of length {len(bits)} does not cover x{top}")
    return _eval(f, bits)


def _eval(f: Formula, bits: Sequence[bool]) -> bool:
    if isinstance(f, Var):
        return bool(bits[f.index - 1])
    if isinstance(f, Not):
        return not _eval(f.arg, bits)
    if isinstance(f, And):
        return _eval(f.left, bits) and _eval(f.right, bits)
    return _eval(f.left, bits) or _eval(f.right, bits)


def assignments(n: int) -> Iterator[tuple[bool, ...]]:
    return itertools.product((False, True), repeat=n)
